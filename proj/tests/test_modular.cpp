#include "doctest.h"
#include "heisorb/modular.hpp"

#include <cmath>

using namespace heisorb;

TEST_CASE("eta values") {
    CHECK(std::abs(eta(Complex(0, 1)) - 0.768225422326057) < 1e-12);
    CHECK_THROWS(eta(Complex(0.3, -1)));
    for (int k = 1; k <= 10; ++k) {
        Complex tau(0, 0.25 * k);
        Complex lhs = eta(-1.0 / tau), rhs = std::sqrt(-Complex(0, 1) * tau) * eta(tau);
        CHECK(std::abs(lhs - rhs) / std::abs(lhs) < 1e-9);
    }
    for (double t : {0.05, 0.02}) {
        double v = eta(Complex(0, t)).real() * std::sqrt(t) * std::exp(std::numbers::pi / (12 * t));
        CHECK(std::abs(v - 1) < 1e-9);
    }
}

TEST_CASE("Gauss identities") {
    for (int line = 1; line <= 3; ++line)
        for (double t : {0.5, 1.0, 2.0}) {
            auto r = check_gauss_identity(line, Complex(0, t), 1e-9, true);
            CAPTURE(line);
            CAPTURE(t);
            CHECK(r.pass);
            CHECK(r.rel_err < 1e-9);
        }
    CHECK_THROWS(check_gauss_identity(1, Complex(0.1, 1)));
    CHECK_THROWS(check_gauss_identity(4, Complex(0, 1)));
}

TEST_CASE("character values") {
    double h3 = character_value(ModuleId::parse("h3"), 0.1);
    CHECK(std::isfinite(h3));
    double orb = character_value(ModuleId::parse("s3"), 0.5);
    auto series = module_character(ModuleId::parse("s3"), Rational(30));
    double sum = 0;
    for (const auto& [k, c] : series.coeffs())
        sum += c.get_d() * std::exp(-2 * std::numbers::pi * 0.5 * Rational(series.offset() + make_rational(k, series.lattice())).get_d());
    CHECK(std::abs(sum - orb) < 1e-6);
    for (double t : {0.03, 0.3})
        CHECK(std::abs(log_character(ModuleId::parse("fock:0,0,0"), t) - log_character(ModuleId::parse("h3"), t)) < 1e-12);
}

TEST_CASE("quantum dimension trends") {
    std::vector<double> ts;
    for (int i = 0; i <= 10; ++i) ts.push_back(0.1 * std::pow(10.0, -i / 10.0));
    auto sgn = qdim_estimate(ModuleId::parse("sgn"), ts);
    CHECK(std::abs(sgn.limit - 1) < 0.01);
    CHECK_FALSE(sgn.divergent);
    auto st = qdim_estimate(ModuleId::parse("st"), ts);
    CHECK(std::abs(st.limit - 2) < 0.02);
    auto fock = qdim_estimate(ModuleId::parse("fock:1/2,1/4,1/8"), ts);
    CHECK_FALSE(fock.divergent);
    for (std::size_t i = 1; i < fock.ratio.size(); ++i) CHECK(fock.ratio[i] > fock.ratio[i - 1]);
    CHECK(fock.ratio.back() < 6);
    auto th = qdim_estimate(ModuleId::parse("theta:0,0"), ts);
    CHECK(th.divergent);
    auto sg = qdim_estimate(ModuleId::parse("sigma:0"), ts);
    CHECK(sg.divergent);
    CHECK(sg.slope < th.slope);
    CHECK_THROWS(qdim_estimate(ModuleId::parse("sgn"), {0.1, 0.2}));
}
