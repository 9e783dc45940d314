#include "heisorb/modular.hpp"
#include "heisorb/orbifold.hpp"
#include "heisorb/qseries.hpp"
#include "heisorb/suites.hpp"
#include "heisorb/symmetry.hpp"
#include "heisorb/vertex.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <iomanip>
#include <iostream>
#include <stdexcept>

using namespace heisorb;
using nlohmann::json;

namespace {

constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<int> int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

json rationals(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

// "i", "2i", "0.5i", "i/2"
Complex parse_tau(std::string s) {
    if (s.empty() || s.find('i') == std::string::npos) throw UsageError("tau must be written like 2i or i/2");
    double im;
    if (s == "i") im = 1;
    else if (s.rfind("i/", 0) == 0) im = 1.0 / parse_rational(s.substr(2)).get_d();
    else if (s.back() == 'i') im = parse_rational(s.substr(0, s.size() - 1)).get_d();
    else throw UsageError("cannot read tau: " + s);
    return {0, im};
}

std::string tau_str(Complex t) {
    std::ostringstream os;
    os << t.imag() << "i";
    return os.str();
}

FockState read_state(const std::string& s) {
    if (s.rfind("omega", 0) == 0) return build_generator(GeneratorId::parse(s));
    return parse_state(s);
}

json series_json(const FracSeries& s) {
    json c = json::object();
    for (const auto& [k, v] : s.coeffs()) c[std::to_string(k)] = v.get_str();
    return {{"offset", s.offset().get_str()}, {"D", s.lattice()}, {"top", s.top().get_str()}, {"coeffs", c}};
}

// character of the S3 representation carried by the module, by cycle type
int class_character(const ModuleId& id, const std::vector<int>& ct) {
    int kind = ct.size() == 3 ? 0 : (ct.size() == 2 ? 1 : 2);
    switch (id.kind) {
        case ModuleId::Kind::heisenberg: return 6 * (kind == 0);  // regular sum gives the plain trace back
        case ModuleId::Kind::orbifold_s3: return 1;
        case ModuleId::Kind::sgn: return kind == 1 ? -1 : 1;
        case ModuleId::Kind::st: return kind == 0 ? 2 : (kind == 1 ? 0 : -1);
        default: throw UsageError("burnside check is available for h3, s3, z3, sgn, st");
    }
}

int run_verify(const std::string& suite, const std::string& format, std::uint64_t seed) {
    std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    json all = json::array();
    bool ok = true;
    for (const auto& n : names) {
        SuiteReport r = run_suite(n, seed);
        ok = ok && r.pass();
        if (format == "json") all.push_back(to_json(r));
        else std::cout << to_text(r);
    }
    if (format == "json") std::cout << json{{"schema", 1}, {"pass", ok}, {"suites", all}}.dump(2) << "\n";
    return ok ? 0 : 1;
}

int run_span(const std::string& group, int max_weight, const std::vector<std::string>& drops, const std::string& format) {
    Group g = parse_group(group);
    std::vector<GeneratorId> drop;
    for (const auto& d : drops) drop.push_back(GeneratorId::parse(d));
    SpanReport r = span_report(g, max_weight, drop);
    if (format == "json") {
        std::cout << json{{"schema", 1},
                          {"group", group},
                          {"generators", r.generators},
                          {"max_weight", max_weight},
                          {"spanned", r.spanned},
                          {"target", r.target},
                          {"matched", r.matched()},
                          {"first_deficit", r.first_deficit()}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "generators:";
        for (const auto& s : r.generators) std::cout << " " << s;
        std::cout << "\nweight  spanned  target\n";
        for (std::size_t w = 0; w < r.spanned.size(); ++w)
            std::cout << std::left << std::setw(8) << w << std::setw(9) << r.spanned[w] << r.target[w]
                      << (r.spanned[w] == r.target[w] ? "" : "  deficit") << "\n";
        if (r.matched()) std::cout << "matched through weight " << max_weight << "\n";
        else std::cout << "first deficit at weight " << r.first_deficit() << "\n";
    }
    return drop.empty() ? (r.matched() ? 0 : 1) : 0;
}

int run_dims(const std::string& group, int max_weight, const std::string& format) {
    Group g = parse_group(group);
    auto reyn = reynolds_dims(g, max_weight);
    auto ch = orbifold_character(g, Rational(max_weight)).integer_steps(max_weight);
    bool ok = true;
    std::vector<std::size_t> chd;
    for (std::size_t i = 0; i < ch.size(); ++i) {
        chd.push_back(ch[i].get_num().get_ui());
        ok = ok && ch[i] == Rational(static_cast<long>(reyn[i]));
    }
    if (format == "json")
        std::cout << json{{"schema", 1}, {"group", group}, {"reynolds", reyn}, {"character", chd}, {"match", ok}}.dump(2)
                  << "\n";
    else
        std::cout << "reynolds  " << join(reyn) << "\ncharacter " << join(chd) << "\n" << (ok ? "match" : "MISMATCH")
                  << "\n";
    return ok ? 0 : 1;
}

int run_char(const std::string& which, int order, const std::string& weights, const std::string& numerator,
             bool burnside, const std::string& format) {
    const Rational N(order);
    json out{{"schema", 1}, {"which", which}, {"order", order}};
    bool ok = true;
    FracSeries s;
    if (which == "w-free") {
        if (weights.empty()) throw UsageError("w-free needs --weights");
        s = w_algebra_free_character(int_list(weights), N);
        for (int k : numerator.empty() ? std::vector<int>{} : int_list(numerator))
            s = s * (FracSeries::one(N) - FracSeries::monomial(Rational(k), Rational(1), N));
        FracSeries orb = orbifold_character(Group::S3, N).shifted(make_rational(1, 8));
        auto a = s.integer_steps(order), b = orb.integer_steps(order);
        int first = -1;
        for (int n = 0; n <= order; ++n)
            if (a[static_cast<std::size_t>(n)] != b[static_cast<std::size_t>(n)]) {
                first = n;
                break;
            }
        out["first_mismatch_vs_s3"] = first;
        if (format != "json")
            std::cout << s.str(static_cast<std::size_t>(order) + 1) << "\nfirst mismatch with the S3 orbifold: "
                      << (first < 0 ? std::string("none") : "q^" + std::to_string(first)) << "\n";
    } else {
        std::string text = which;
        if (which == "fock" || which == "theta" || which == "sigma") {
            if (weights.empty()) throw UsageError(which + " needs --weights");
            text += ":" + weights;
        }
        ModuleId id = ModuleId::parse(text);
        s = module_character(id, N);
        if (format != "json") std::cout << s.str(static_cast<std::size_t>(order) * 6 + 1) << "\n";
        if (burnside) {
            int M = std::min(order, 6);
            std::vector<Group> groups = {Group::S3};
            if (id.kind == ModuleId::Kind::orbifold_z3) groups = {Group::Z3};
            auto els = group_elements(groups.front());
            std::vector<Rational> avg(static_cast<std::size_t>(M) + 1, Rational(0));
            for (const auto& p : els) {
                int chi = id.kind == ModuleId::Kind::orbifold_z3 ? 1 : class_character(id, p.cycle_type());
                auto tr = fock_trace(p, M);
                for (int n = 0; n <= M; ++n) avg[static_cast<std::size_t>(n)] += Rational(chi) * tr[static_cast<std::size_t>(n)];
            }
            for (auto& x : avg) x /= static_cast<long>(els.size());
            auto series = s.integer_steps(M);
            ok = avg == series;
            out["burnside"] = {{"fock_traces", rationals(avg)}, {"series", rationals(series)}, {"match", ok}};
            if (format != "json") std::cout << "burnside check through q^" << M << ": " << (ok ? "match" : "MISMATCH") << "\n";
        }
    }
    out["series"] = series_json(s);
    if (format == "json") std::cout << out.dump(2) << "\n";
    return ok ? 0 : 1;
}

int run_qdim(const std::string& module, std::vector<double> ts, const std::string& format) {
    if (ts.empty())
        for (int i = 0; i <= 10; ++i) ts.push_back(0.1 * std::pow(10.0, -i / 10.0));
    QdimReport r = qdim_estimate(ModuleId::parse(module), ts);
    if (format == "json") {
        std::cout << json{{"schema", 1},
                          {"module", r.id.str()},
                          {"t", r.t},
                          {"ratio", r.ratio},
                          {"slope", r.slope},
                          {"tail_slope", r.tail_slope},
                          {"classification", r.divergent ? "divergent" : "finite"},
                          {"tenfold_rule", r.tenfold_rule},
                          {"value_at_smallest_t", r.limit}}
                         .dump(2)
                  << "\n";
    } else {
        for (std::size_t i = 0; i < r.t.size(); ++i) std::cout << "t=" << r.t[i] << "  ratio=" << r.ratio[i] << "\n";
        std::cout << "log-log slope " << r.slope << ", small-t half " << r.tail_slope << "; "
                  << (r.divergent ? "divergent" : "finite, value at smallest t " + std::to_string(r.limit)) << "\n";
        std::cout << "note: these are trends on a finite window, not limits\n";
    }
    return 0;
}

int run_modular(const std::vector<std::string>& taus, int line, double tol, bool quad, const std::string& format) {
    json rows = json::array();
    bool ok = true;
    for (const auto& ts : taus) {
        Complex tau = parse_tau(ts);
        for (int l = 1; l <= 3; ++l) {
            if (line && l != line) continue;
            GaussReport r = check_gauss_identity(l, tau, tol, quad);
            ok = ok && r.pass;
            json row{{"identity", r.identity}, {"line", l},     {"tau", tau_str(tau)}, {"lhs", r.lhs.real()},
                     {"rhs", r.rhs.real()},    {"rel_err", r.rel_err}, {"pass", r.pass}};
            if (r.quadrature_rel_err) row["quadrature_rel_err"] = *r.quadrature_rel_err;
            rows.push_back(row);
            if (format != "json")
                std::cout << (r.pass ? "  ok   " : "  FAIL ") << "line " << l << " tau=" << tau_str(tau)
                          << " rel_err=" << r.rel_err << "  " << r.identity << "\n";
        }
    }
    if (format == "json") std::cout << json{{"schema", 1}, {"pass", ok}, {"checks", rows}}.dump(2) << "\n";
    return ok ? 0 : 1;
}

int run_product(const std::string& u, int n, const std::string& v, const std::string& format) {
    FockState a = read_state(u), b = read_state(v);
    FockState r = nth_product(a, n, b);
    Grading g = weight_of(r);
    std::string w = g.kind == Grading::Kind::homogeneous ? std::to_string(g.weight)
                                                           : (g.kind == Grading::Kind::zero ? "zero" : "mixed");
    if (format == "json") std::cout << json{{"schema", 1}, {"result", r.str()}, {"weight", w}}.dump(2) << "\n";
    else std::cout << r.str() << "\nweight " << w << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in permutation orbifolds of the rank-3 Heisenberg vertex algebra"};
    app.require_subcommand(1);
    app.fallthrough();
    int cap = 40;
    app.add_option("--weight-cap", cap, "largest weight a product may reach")->capture_default_str();

    std::string format = "text";
    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    };

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    std::uint64_t seed = default_seed;
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"s3-relations", "z3-relations", "classical", "axioms", "primaries", "all"}))
        ->capture_default_str();
    verify->add_option("--seed", seed, "seed for the random suites")->capture_default_str();
    add_format(verify);

    auto* span = app.add_subcommand("span", "graded dimensions of the strong span of the standard generators");
    std::string group = "s3";
    int max_weight = 6;
    std::vector<std::string> drops;
    span->add_option("--group", group)->check(CLI::IsMember({"s3", "z3"}))->capture_default_str();
    span->add_option("--max-weight", max_weight)->check(CLI::Range(0, 12))->capture_default_str();
    span->add_option("--drop", drops, "generator to leave out, e.g. omega3(0,1,2)");
    add_format(span);

    auto* dims = app.add_subcommand("dims", "invariant dimensions by Reynolds rank and by character");
    dims->add_option("--group", group)->check(CLI::IsMember({"s3", "z3"}))->capture_default_str();
    dims->add_option("--max-weight", max_weight)->check(CLI::Range(0, 10))->capture_default_str();
    add_format(dims);

    auto* chr = app.add_subcommand("char", "characters as truncated q-series");
    std::string which = "s3", weights, numerator;
    int order = 12;
    bool burnside = false;
    chr->add_option("--which", which)
        ->check(CLI::IsMember({"s3", "z3", "h3", "sgn", "st", "fock", "theta", "sigma", "w-free"}))
        ->capture_default_str();
    chr->add_option("--order", order)->check(CLI::Range(0, 60))->capture_default_str();
    chr->add_option("--weights", weights, "module weights (fock, theta, sigma) or generator weights (w-free)");
    chr->add_option("--numerator", numerator, "w-free only: multiply by (1-q^k) for each listed k");
    chr->add_flag("--check-burnside", burnside, "compare with direct Fock-space traces up to weight 6");
    add_format(chr);

    auto* qdim = app.add_subcommand("qdim", "ratios ch[M](it)/ch[orbifold](it) for decreasing t");
    std::string module = "fock:1/2,1/4,1/8";
    std::vector<double> ts;
    qdim->add_option("--module", module)->capture_default_str();
    qdim->add_option("--t", ts, "sample points, decreasing")->delimiter(',');
    add_format(qdim);

    auto* modular = app.add_subcommand("modular", "eta transformation identities on the imaginary axis");
    std::vector<std::string> taus = {"i/2", "i", "2i"};
    int line = 0;
    double tol = 1e-9;
    bool quad = false;
    modular->add_option("--tau", taus)->capture_default_str();
    modular->add_option("--line", line, "1, 2, 3 or 0 for all")->check(CLI::Range(0, 3))->capture_default_str();
    modular->add_option("--tol", tol)->capture_default_str();
    modular->add_flag("--quadrature", quad, "also integrate the Gaussian numerically");
    add_format(modular);

    auto* product = app.add_subcommand("product", "u_n v for two states");
    std::string u, v;
    int n = -1;
    product->add_option("--u", u, "state or generator name")->required();
    product->add_option("--n", n)->capture_default_str();
    product->add_option("--v", v, "state or generator name")->required();
    add_format(product);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        set_weight_cap(cap);
        if (*verify) return run_verify(suite, format, seed);
        if (*span) return run_span(group, max_weight, drops, format);
        if (*dims) return run_dims(group, max_weight, format);
        if (*chr) return run_char(which, order, weights, numerator, burnside, format);
        if (*qdim) return run_qdim(module, ts, format);
        if (*modular) return run_modular(taus, line, tol, quad, format);
        if (*product) return run_product(u, n, v, format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kUsage;
}
