#include "doctest.h"
#include "heisorb/symmetry.hpp"
#include "heisorb/vertex.hpp"

using namespace heisorb;

namespace {
FockState st(const char* s) { return parse_state(s); }
}  // namespace

TEST_CASE("translation") {
    CHECK(translate(FockState::vacuum()).is_zero());
    CHECK(translate(st("a1(-1)")) == st("a1(-2)"));
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            CHECK(translate(w2_0(a, b)) == w2_0(a + 1, b) * Scalar(a + 1) + w2_0(a, b + 1) * Scalar(b + 1));
    FockState v = st("a1(-2)a2(-1) + 3*a3(-3)");
    CHECK(translate(v) == on_vacuum(v, -2));
}

TEST_CASE("mode products on small states") {
    FockState vac = FockState::vacuum();
    FockState v = st("a1(-2)a2(-1) - a3(-1)");
    CHECK(nth_product(vac, -1, v) == v);
    CHECK(nth_product(vac, 0, v).is_zero());
    CHECK(nth_product(st("a1(-1)"), 1, st("a1(-1)")) == vac);
    CHECK(nth_product(st("a1(-1)"), -1, st("a1(-1)")) == st("a1(-1)a1(-1)"));
    CHECK(nth_product(st("a1(-1)"), 0, st("a1(-1)")).is_zero());
}

TEST_CASE("quadratic generator splits into free part plus a product") {
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            FockState beta = w2_0(a, b) + nop(w1_0(a), w1_0(b));
            CHECK(change_basis(beta, Basis::alpha) == omega2(a, b));
        }
}

TEST_CASE("Virasoro modes") {
    FockState om = conformal_vector(3, Basis::alpha);
    CHECK(om == omega2(0, 0) * Scalar(make_rational(1, 2)));
    CHECK(nth_product(om, 3, om) == FockState::vacuum() * Scalar(make_rational(3, 2)));
    FockState v = st("a1(-3)a2(-1) + 2*a1(-2)a3(-2)");
    CHECK(virasoro_mode(0, v) == v * Scalar(4));
    CHECK(virasoro_mode(-1, v) == translate(v));
    FockState ob = conformal_vector(3, Basis::beta);
    CHECK(change_basis(ob, Basis::alpha) == om);
}

TEST_CASE("primality") {
    CHECK(is_primary(st("a1(-1)")));
    CHECK(is_primary(w1_0(0)));
    CHECK_FALSE(is_primary(st("a1(-2)")));
    CHECK_THROWS(is_primary(st("a1(-2) + a1(-1)")));
}

TEST_CASE("skew symmetry and Borcherds on hand-picked states") {
    FockState u = st("a1(-2)a2(-1)"), v = st("a1(-1)a2(-1) + a3(-3)"), w = st("a2(-2)");
    for (int n = -3; n <= 4; ++n) CHECK(check_skew_symmetry(u, v, n).is_zero());
    for (int p = -1; p <= 1; ++p)
        for (int q = -1; q <= 1; ++q)
            for (int r = -1; r <= 1; ++r) CHECK(check_borcherds(u, v, w, p, q, r).is_zero());
}

TEST_CASE("seeded random axiom suite") {
    AxiomSuiteReport r = random_axiom_suite(0x3353, 60, 4);
    CHECK(r.instances == 60);
    CHECK(r.pass());
}

TEST_CASE("weight cap") {
    int old = weight_cap();
    set_weight_cap(5);
    CHECK_THROWS_AS(nth_product(st("a1(-3)"), -3, st("a1(-2)")), std::length_error);
    set_weight_cap(old);
}

TEST_CASE("generalized binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(-1, 3) == -1);
    CHECK(binomial(-3, 2) == 6);
    CHECK(binomial(4, -1) == 0);
}
