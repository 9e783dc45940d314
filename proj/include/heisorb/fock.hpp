#pragma once

#include "heisorb/scalar.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace heisorb {

// alpha: the original free bosons, identity pairing.
// beta: the rank-3 cube-root-of-unity basis, pairing 1<->1 and 2<->3.
enum class Basis { alpha, beta };

char basis_letter(Basis b);

// index of the field whose mode pairs nontrivially with `field`
int partner(Basis b, int field);

// Creation operator x_field(-level).
struct Mode {
    int field = 1;
    int level = 1;
    bool operator==(const Mode&) const = default;
};

// Canonical order: level descending, then field ascending.
inline bool mode_before(const Mode& x, const Mode& y) {
    return x.level != y.level ? x.level > y.level : x.field < y.field;
}

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Mode> modes);

    const std::vector<Mode>& modes() const { return modes_; }
    std::size_t degree() const { return modes_.size(); }
    int weight() const { return weight_; }
    bool is_vacuum() const { return modes_.empty(); }

    Monomial with(const Mode& m) const;
    Monomial without(std::size_t index) const;

    // weight first, then lexicographic on (level desc, field asc)
    std::strong_ordering operator<=>(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return modes_ == o.modes_; }

    std::string str(Basis b) const;

private:
    std::vector<Mode> modes_;
    int weight_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

struct Grading {
    enum class Kind { zero, homogeneous, mixed };
    Kind kind = Kind::zero;
    int weight = 0;
    bool homogeneous() const { return kind == Kind::homogeneous; }
};

class FockState {
public:
    using Terms = std::map<Monomial, Scalar>;

    explicit FockState(int rank = 3, Basis basis = Basis::alpha) : rank_(rank), basis_(basis) {}

    static FockState vacuum(int rank = 3, Basis basis = Basis::alpha);
    static FockState monomial(int rank, Basis basis, std::vector<Mode> modes, const Scalar& c = Scalar(1));

    int rank() const { return rank_; }
    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;

    Scalar coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const Scalar& c);

    FockState& operator+=(const FockState& o);
    FockState& operator-=(const FockState& o);
    FockState& operator*=(const Scalar& c);
    friend FockState operator+(FockState x, const FockState& y) { return x += y; }
    friend FockState operator-(FockState x, const FockState& y) { return x -= y; }
    friend FockState operator*(FockState x, const Scalar& c) { return x *= c; }
    friend FockState operator*(const Scalar& c, FockState x) { return x *= c; }
    FockState operator-() const { return *this * Scalar(-1); }

    bool operator==(const FockState& o) const {
        return rank_ == o.rank_ && basis_ == o.basis_ && terms_ == o.terms_;
    }

    std::string str() const;

private:
    void check_compatible(const FockState& o) const;

    int rank_;
    Basis basis_;
    Terms terms_;
};

// Parses e.g. "(3/2)*a1(-2)a1(-1) + (1+z)*b2(-1)b3(-1) - 1" ; "1" alone is the vacuum.
FockState parse_state(std::string_view text, int rank = 3);

FockState apply_creation(int field, int level, const FockState& v);
FockState apply_annihilation(int field, int level, const FockState& v);

Grading weight_of(const FockState& v);

// All rank-colored partition monomials of the given weight.
std::vector<Monomial> enumerate_basis(int rank, int weight);
std::size_t colored_partition_count(int rank, int weight);

// Rank-3 change between alpha and beta. The 1/sqrt(3) per mode is absorbed:
// a degree-d monomial picks up 3^(-floor(d/2)) going beta->alpha and
// 3^(-ceil(d/2)) going alpha->beta, so round trips are exact and even-degree
// states map to their true images.
FockState change_basis(const FockState& v, Basis target);

namespace detail {
// same substitution without the single-parity check
FockState change_basis_any_parity(const FockState& v, Basis target);
}  // namespace detail

}  // namespace heisorb
