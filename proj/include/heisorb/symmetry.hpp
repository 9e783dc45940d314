#pragma once

#include "heisorb/fock.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace heisorb {

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);  // images[i-1] = sigma(i)
    static Permutation identity(int n);
    // cycle notation such as "(12)", "(123)", "(1 2)(3)", or "e" for the identity
    static Permutation parse(std::string_view text, int n);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    int sign() const;
    std::vector<int> cycle_type() const;  // sorted descending
    std::string str() const;

    // (s * t)(i) = s(t(i))
    friend Permutation operator*(const Permutation& s, const Permutation& t);
    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

// sigma acting on field labels. Beta states go through the alpha basis, so the
// action stays linear: (23)b2 = b3, (123)b2 = z b2, (12)b2 = z^2 b3.
FockState act(const Permutation& sigma, const FockState& v);

enum class Group { S3, Z3, S2 };
std::string group_name(Group g);
Group parse_group(std::string_view s);
std::vector<Permutation> group_elements(Group g);

FockState reynolds(Group g, const FockState& v);
bool is_invariant(Group g, const FockState& v);

struct GeneratorId {
    enum class Family {
        omega1,
        omega2,
        omega3,
        omega1_0,
        omega2_0,
        omega3_0,
        omega23_0,
        omega222_0,
        omega333_0,
        q_k,
        q_k_0
    };
    Family family = Family::omega1;
    std::vector<int> indices;

    static GeneratorId parse(std::string_view text);
    std::string str() const;
    int weight() const;
    Basis basis() const;
    bool operator==(const GeneratorId&) const = default;
};

// The named state; omega_k families live in the alpha basis, the rest in the beta basis.
FockState build_generator(const GeneratorId& id, int rank = 3);

// Sugar used all over the relation catalog.
FockState omega1(int a, int rank = 3);
FockState omega2(int a, int b, int rank = 3);
FockState omega3(int a, int b, int c, int rank = 3);
FockState w1_0(int a);
FockState w2_0(int a, int b);
FockState w3_0(int a, int b, int c);
FockState w23_0(int a, int b);
FockState w222_0(int a, int b, int c);
FockState w333_0(int a, int b, int c);

// Compares the original invariants with their expressions through the beta generators.
struct TranslationReport {
    FockState residual1;  // omega1(a) against the converted omega1_0(a)
    FockState residual2;  // omega2(a,b) against omega2_0 + omega1_0 omega1_0
    // omega3 fitted as x*omega3_0 + y*(linear-quadratic and linear^3 terms), both in the
    // rescaled beta convention of change_basis
    bool fit_ok = false;
    Rational x, y;
    FockState residual3;  // residual of the fitted omega3 expression
    bool pass() const { return residual1.is_zero() && residual2.is_zero() && fit_ok && residual3.is_zero(); }
};
TranslationReport verify_generator_translation(int a, int b, int c);

}  // namespace heisorb
