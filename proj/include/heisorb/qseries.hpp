#pragma once

#include "heisorb/scalar.hpp"
#include "heisorb/symmetry.hpp"

#include <map>
#include <string>
#include <vector>

namespace heisorb {

// Truncated series sum_k c_k q^(offset + k/D), k >= 0, known up to the absolute
// exponent top(). Terms above top() are dropped.
class FracSeries {
public:
    FracSeries() = default;
    FracSeries(long D, Rational offset, Rational top);

    static FracSeries one(Rational top);
    // c q^e, truncated at top
    static FracSeries monomial(const Rational& e, const Rational& c, const Rational& top);

    long lattice() const { return D_; }
    const Rational& offset() const { return offset_; }
    const Rational& top() const { return top_; }
    const std::map<long, Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    // coefficient of q^e; zero off the lattice
    Rational at(const Rational& e) const;
    // coefficients of q^(offset + n), n = 0..N
    std::vector<Rational> integer_steps(int N) const;
    // lowest exponent with a nonzero coefficient
    Rational valuation() const;

    FracSeries& operator+=(const FracSeries& o);
    FracSeries& operator-=(const FracSeries& o);
    FracSeries& operator*=(const Rational& c);
    friend FracSeries operator+(FracSeries a, const FracSeries& b) { return a += b; }
    friend FracSeries operator-(FracSeries a, const FracSeries& b) { return a -= b; }
    friend FracSeries operator*(FracSeries a, const Rational& c) { return a *= c; }
    friend FracSeries operator*(const FracSeries& a, const FracSeries& b);
    FracSeries shifted(const Rational& e) const;  // times q^e
    FracSeries truncated(const Rational& top) const;
    // Newton iteration; needs a nonzero lowest coefficient
    FracSeries inverse() const;

    std::string str(std::size_t max_terms = 16) const;

private:
    void set(long k, const Rational& v);
    FracSeries relattice(long D) const;
    FracSeries rebase(const Rational& offset) const;  // offset must be lower and on the lattice
    void normalize();

    long D_ = 72;
    Rational offset_ = 0;
    Rational top_ = 0;
    std::map<long, Rational> c_;
};

// prod_{m >= 0} (1 - q^(start + m*step)), start, step > 0, up to exponent N
FracSeries qpochhammer(const Rational& start, const Rational& step, const Rational& N);
// prod_{n >= 1} (1 - q^(step*n))^-1
FracSeries pochhammer_inv(const Rational& step, const Rational& N);

// tr g q^(L(0) - n/24) on H(n) for g of the given cycle type
FracSeries burnside_trace(const std::vector<int>& cycle_type, const Rational& N);
FracSeries orbifold_character(Group g, const Rational& N);

struct ModuleId {
    enum class Kind { heisenberg, orbifold_s3, orbifold_z3, sgn, st, fock, theta, sigma } kind = Kind::orbifold_s3;
    std::vector<Rational> w;
    // "s3", "z3", "h3", "sgn", "st", "fock:1/2,1/4,1/8", "theta:0,0", "sigma:0"
    static ModuleId parse(const std::string& text);
    std::string str() const;
};
FracSeries module_character(const ModuleId& id, const Rational& N);

Rational twist_weight(int p, const std::vector<Rational>& r);

// prod_{w in weights} prod_{m >= w} (1 - q^m)^-1
FracSeries w_algebra_free_character(const std::vector<int>& weights, const Rational& N);

// Direct trace of sigma on the alpha-basis Fock space, weights 0..N
// (number of monomials fixed by sigma).
std::vector<Rational> fock_trace(const Permutation& sigma, int N);

}  // namespace heisorb
