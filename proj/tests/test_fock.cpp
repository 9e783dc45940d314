#include "doctest.h"
#include "heisorb/fock.hpp"
#include "heisorb/qseries.hpp"
#include "heisorb/symmetry.hpp"

#include <random>

using namespace heisorb;

namespace {
FockState st(const char* s) { return parse_state(s); }
}  // namespace

TEST_CASE("creation operators") {
    FockState vac = FockState::vacuum();
    CHECK(apply_creation(1, 1, vac) == st("a1(-1)"));
    CHECK(apply_creation(1, 2, st("a1(-1)")) == st("a1(-2)a1(-1)"));
    CHECK(apply_creation(2, 1, st("a1(-1) + 2*a3(-2)")) == st("a2(-1)a1(-1) + 2*a3(-2)a2(-1)"));
    CHECK_THROWS(apply_creation(1, 0, vac));
    CHECK_THROWS(apply_creation(4, 1, vac));
}

TEST_CASE("annihilation operators") {
    CHECK(apply_annihilation(1, 1, st("a1(-1)")) == FockState::vacuum());
    CHECK(apply_annihilation(1, 2, st("a1(-2)")) == st("2"));
    CHECK(apply_annihilation(2, 1, st("a1(-1)")).is_zero());
    CHECK(apply_annihilation(1, 1, st("a1(-1)a1(-1)")) == st("2*a1(-1)"));
}

TEST_CASE("beta modes pair 2 with 3") {
    FockState b = parse_state("b2(-1)");
    CHECK(apply_annihilation(3, 1, b) == FockState::vacuum(3, Basis::beta));
    CHECK(apply_annihilation(2, 1, b).is_zero());
}

TEST_CASE("commutator on random states") {
    std::mt19937_64 rng(0x3353);
    std::uniform_int_distribution<int> field(1, 3), level(1, 3), wt(0, 5);
    for (int k = 0; k < 200; ++k) {
        auto mons = enumerate_basis(3, wt(rng));
        FockState v(3, Basis::alpha);
        for (std::size_t j = 0; j < mons.size() && j < 3; ++j) v.add_term(mons[(j * 7 + k) % mons.size()], Scalar(1 + static_cast<long>(j)));
        int i = field(rng), m = level(rng), i2 = field(rng), m2 = level(rng);
        FockState lhs = apply_annihilation(i, m, apply_creation(i2, m2, v)) -
                        apply_creation(i2, m2, apply_annihilation(i, m, v));
        FockState rhs = (i == i2 && m == m2) ? v * Scalar(m) : FockState(3, Basis::alpha);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("weights") {
    CHECK(weight_of(FockState::vacuum()).weight == 0);
    CHECK(weight_of(st("a1(-2)a1(-1)")).weight == 3);
    CHECK(weight_of(w3_0(0, 1, 2)).weight == 6);
    CHECK(weight_of(st("a1(-2) + a1(-1)")).kind == Grading::Kind::mixed);
}

TEST_CASE("basis enumeration matches colored partitions") {
    CHECK(enumerate_basis(3, 0).size() == 1);
    CHECK(enumerate_basis(3, 2).size() == 9);
    CHECK(enumerate_basis(3, 4).size() == 51);
    auto A = pochhammer_inv(Rational(1), Rational(8));
    auto cube = (A * A * A).integer_steps(8);
    for (int n = 0; n <= 8; ++n) {
        CHECK(Rational(static_cast<long>(enumerate_basis(3, n).size())) == cube[static_cast<std::size_t>(n)]);
        CHECK(colored_partition_count(3, n) == enumerate_basis(3, n).size());
    }
}

TEST_CASE("change of basis") {
    FockState b1 = parse_state("b1(-1)");
    CHECK(change_basis(b1, Basis::alpha) == st("a1(-1) + a2(-1) + a3(-1)"));
    FockState b23 = parse_state("b2(-1)b3(-1)");
    FockState a = change_basis(b23, Basis::alpha);
    CHECK(a.is_rational());
    CHECK(change_basis(a, Basis::beta) == b23);
    FockState odd = parse_state("b2(-2)b2(-1)b3(-1)");
    CHECK(change_basis(change_basis(odd, Basis::alpha), Basis::beta) == odd);
    CHECK(weight_of(change_basis(odd, Basis::alpha)).weight == 4);
    CHECK_THROWS(change_basis(FockState::vacuum(2), Basis::beta));
}

TEST_CASE("state text round trip") {
    FockState s = parse_state("(3/2)*b2(-2)b2(-1) + (1+z)*b2(-1)b3(-1)");
    CHECK(parse_state(s.str()) == s);
    CHECK(FockState::vacuum().str() == "1");
}
