#include "heisorb/modular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace heisorb {

namespace {

constexpr double pi = std::numbers::pi;
const Complex I(0, 1);

double to_double(const Rational& r) { return r.get_d(); }

// sum_{n>=1} log(1 - q^(step n)) for q = exp(-2 pi t)
double log_poch(double step, double t) {
    double lq = -2 * pi * t * step;
    double s = 0;
    for (int n = 1;; ++n) {
        double x = std::exp(lq * n);
        if (x < 1e-30) break;
        s += std::log1p(-x);
    }
    return s;
}

// log of |sum c_i exp(l_i)|; throws if the sum is not positive
double log_sum(const std::vector<std::pair<double, double>>& terms) {
    double m = -INFINITY;
    for (auto [c, l] : terms)
        if (c != 0) m = std::max(m, l);
    double s = 0;
    for (auto [c, l] : terms) s += c * std::exp(l - m);
    if (!(s > 0)) throw std::domain_error("character value not positive");
    return m + std::log(s);
}

double half_norm(const std::vector<Rational>& w) {
    double s = 0;
    for (const auto& x : w) s += to_double(x) * to_double(x);
    return s / 2;
}

// log of tr g q^(L(0)-1/8) for the three S3 cycle types
struct Traces {
    double A, B, C;
};
Traces traces(double t) {
    double lq = -2 * pi * t;
    double base = -lq / 8;
    return {base - 3 * log_poch(1, t), base - log_poch(2, t) - log_poch(1, t), base - log_poch(3, t)};
}

double simpson_gaussian(double t, double half_width, int panels) {
    // integral of exp(-pi t w^2) over [-L, L]
    double h = 2 * half_width / panels, s = 0;
    for (int i = 0; i <= panels; ++i) {
        double w = -half_width + i * h;
        double f = std::exp(-pi * t * w * w);
        s += f * (i == 0 || i == panels ? 1 : (i % 2 ? 4 : 2));
    }
    return s * h / 3;
}

}  // namespace

Complex eta(Complex tau, double cutoff) {
    if (!(tau.imag() > 0)) throw std::domain_error("eta needs Im tau > 0");
    Complex q = std::exp(2 * pi * I * tau);
    double aq = std::abs(q);
    Complex prod = 1, qn = q;
    double an = aq;
    while (an >= cutoff) {
        prod *= 1.0 - qn;
        qn *= q;
        an *= aq;
    }
    return std::exp(2 * pi * I * tau / 24.0) * prod;
}

GaussReport check_gauss_identity(int line, Complex tau, double tol, bool quadrature) {
    if (std::abs(tau.real()) > 0 || !(tau.imag() > 0))
        throw std::invalid_argument("Gauss identities are checked on the positive imaginary axis");
    GaussReport r;
    r.line = line;
    r.tau = tau;
    const Complex m = -I * tau;  // = t
    const double t = tau.imag();
    int dim = 0;
    switch (line) {
        case 1:
            r.identity = "1/eta(-1/tau)^3 = (-i tau)^(-3/2) / eta(tau)^3";
            r.lhs = 1.0 / std::pow(eta(-1.0 / tau), 3);
            r.rhs = std::pow(m, -1.5) / std::pow(eta(tau), 3);
            dim = 3;
            break;
        case 2:
            r.identity = "1/(eta(-1/tau) eta(-2/tau)) = sqrt(2) (-i tau)^(-1) / (eta(tau) eta(tau/2))";
            r.lhs = 1.0 / (eta(-1.0 / tau) * eta(-2.0 / tau));
            r.rhs = std::sqrt(2.0) / (m * eta(tau) * eta(tau / 2.0));
            dim = 2;
            break;
        case 3:
            r.identity = "1/eta(-3/tau) = sqrt(3) (-i tau)^(-1/2) / eta(tau/3)";
            r.lhs = 1.0 / eta(-3.0 / tau);
            r.rhs = std::sqrt(3.0) / (std::sqrt(m) * eta(tau / 3.0));
            dim = 1;
            break;
        default: throw std::invalid_argument("Gauss identity line must be 1, 2 or 3");
    }
    r.rel_err = std::abs(r.lhs - r.rhs) / std::abs(r.lhs);
    r.pass = r.rel_err <= tol;
    if (quadrature) {
        double one = simpson_gaussian(t, 8 / std::sqrt(t), 4000);
        double quad = std::pow(one, dim), closed = std::pow(t, -dim / 2.0);
        r.quadrature_rel_err = std::abs(quad - closed) / closed;
        r.pass = r.pass && *r.quadrature_rel_err <= tol;
    }
    return r;
}

double log_character(const ModuleId& id, double t) {
    if (!(t > 0)) throw std::domain_error("t must be positive");
    using K = ModuleId::Kind;
    const double lq = -2 * pi * t;
    Traces tr = traces(t);
    switch (id.kind) {
        case K::heisenberg: return tr.A;
        case K::orbifold_s3: return log_sum({{1, tr.A}, {3, tr.B}, {2, tr.C}}) - std::log(6.0);
        case K::orbifold_z3: return log_sum({{1, tr.A}, {2, tr.C}}) - std::log(3.0);
        case K::sgn: return log_sum({{1, tr.A}, {-3, tr.B}, {2, tr.C}}) - std::log(6.0);
        case K::st: return log_sum({{2, tr.A}, {-2, tr.C}}) - std::log(6.0);
        case K::fock: return tr.A + lq * half_norm(id.w);
        case K::theta: {
            double e = to_double(twist_weight(2, {Rational(1)})) - 1.0 / 8 + half_norm(id.w);
            return lq * e - log_poch(0.5, t) - log_poch(1, t);
        }
        case K::sigma: {
            double e = to_double(twist_weight(3, {Rational(1), Rational(1)})) - 1.0 / 8 + half_norm(id.w);
            return lq * e - log_poch(1.0 / 3, t);
        }
    }
    throw std::logic_error("unhandled module");
}

double character_value(const ModuleId& id, double t) {
    double l = log_character(id, t);
    if (l > 700) throw std::overflow_error("character value exceeds double range");
    return std::exp(l);
}

QdimReport qdim_estimate(const ModuleId& id, const std::vector<double>& t_list) {
    if (t_list.size() < 2) throw std::invalid_argument("need at least two sample points");
    for (std::size_t i = 0; i < t_list.size(); ++i) {
        if (!(t_list[i] > 0)) throw std::invalid_argument("sample points must be positive");
        if (i && !(t_list[i] < t_list[i - 1])) throw std::invalid_argument("sample points must decrease");
    }
    QdimReport r;
    r.id = id;
    ModuleId orb;
    orb.kind = ModuleId::Kind::orbifold_s3;
    std::vector<double> x, y;
    for (double t : t_list) {
        double lr = log_character(id, t) - log_character(orb, t);
        r.t.push_back(t);
        r.ratio.push_back(std::exp(lr));
        x.push_back(std::log(t));
        y.push_back(lr);
    }
    auto fit = [&](std::size_t from) {
        double n = static_cast<double>(x.size() - from), sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = from; i < x.size(); ++i) {
            sx += x[i];
            sy += y[i];
            sxx += x[i] * x[i];
            sxy += x[i] * y[i];
        }
        return (n * sxy - sx * sy) / (n * sxx - sx * sx);
    };
    r.slope = fit(0);
    // large t is dominated by the vacuum ratio, so classify on the small-t half
    r.tail_slope = fit(x.size() / 2 > x.size() - 2 ? x.size() - 2 : x.size() / 2);
    r.divergent = r.tail_slope < -0.25;
    r.tenfold_rule = r.ratio.back() > 10 * r.ratio.front();
    r.limit = r.ratio.back();
    return r;
}

}  // namespace heisorb
