#include "heisorb/orbifold.hpp"

#include "heisorb/vertex.hpp"

#include <algorithm>
#include <stdexcept>

namespace heisorb {

std::string dkind_name(DKind k) {
    switch (k) {
        case DKind::D6_1: return "D6_1";
        case DKind::D6_2: return "D6_2";
        case DKind::D5: return "D5";
    }
    return "?";
}

DKind parse_dkind(std::string_view s) {
    if (s == "D6_1" || s == "d6_1") return DKind::D6_1;
    if (s == "D6_2" || s == "d6_2") return DKind::D6_2;
    if (s == "D5" || s == "d5") return DKind::D5;
    throw std::invalid_argument("unknown D family: " + std::string(s));
}

namespace {

Scalar frac(long p, long q) { return Scalar(make_rational(p, q)); }

int total(const std::vector<int>& a) {
    int s = 0;
    for (int x : a) s += x;
    return s;
}

}  // namespace

FockState build_D(DKind kind, const std::vector<int>& a, bool corrected) {
    std::size_t need = kind == DKind::D5 ? 5 : 6;
    if (a.size() != need) throw std::invalid_argument("arity mismatch for " + dkind_name(kind));
    for (int x : a)
        if (x < 0) throw std::invalid_argument("negative multi-index entry");
    auto A = [&](int i) { return a[static_cast<std::size_t>(i - 1)]; };
    auto W = [&](int i, int j) { return w2_0(A(i), A(j)); };
    auto V = [&](int i, int j, int k) { return w3_0(A(i), A(j), A(k)); };
    auto WWW = [&](int i, int j, int k, int l, int m, int n) { return nop(W(i, j), nop(W(k, l), W(m, n))); };
    switch (kind) {
        case DKind::D6_1:
            return WWW(1, 2, 3, 4, 5, 6) - WWW(1, 2, 3, 6, 4, 5) + WWW(1, 4, 2, 6, 3, 5) - WWW(1, 4, 2, 3, 5, 6) +
                   WWW(1, 5, 2, 4, 3, 6) - WWW(1, 5, 2, 6, 3, 4) + WWW(1, 6, 2, 3, 4, 5) - WWW(1, 6, 2, 4, 3, 5);
        case DKind::D6_2: {
            FockState fourth = corrected ? WWW(1, 4, 2, 6, 3, 5) : WWW(1, 4, 2, 5, 3, 6);
            FockState halves = WWW(1, 3, 2, 6, 4, 5) - fourth + WWW(1, 5, 2, 3, 4, 6) - WWW(1, 5, 2, 4, 3, 6);
            return nop(V(1, 2, 3), V(4, 5, 6)) - nop(V(1, 2, 4), V(3, 5, 6)) + halves * frac(1, 2);
        }
        case DKind::D5: {
            auto P = [&](int i, int j, int k, int l, int m) { return nop(W(i, j), V(k, l, m)); };
            return P(1, 2, 3, 4, 5) - P(1, 5, 2, 3, 4) - P(2, 5, 1, 3, 4) - P(3, 4, 1, 2, 5) + P(3, 5, 1, 2, 4) +
                   P(4, 5, 1, 2, 3);
        }
    }
    throw std::logic_error("unhandled D family");
}

DecompositionReport check_decomposition(DKind kind, const std::vector<int>& a, bool corrected) {
    DecompositionReport rep;
    rep.kind = kind;
    rep.a = a;
    FockState D = build_D(kind, a, corrected);
    int s = total(a);
    rep.weight = s + (kind == DKind::D5 ? 5 : 6);
    std::vector<FockState> cands;
    std::vector<std::string> names;
    auto pair_name = [](int x, int y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; };
    if (kind == DKind::D5) {
        int m = s + 2;
        for (int x = 0; x <= m; ++x)
            for (int y = x; x + y <= m; ++y) {
                int z = m - x - y;
                if (z < y) continue;
                cands.push_back(w3_0(x, y, z));
                names.push_back("omega3_0(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")");
            }
    } else {
        int m = s + 2;
        std::vector<std::pair<int, int>> pairs;
        for (int ab = 0; ab <= m; ++ab)
            for (int x = 0; 2 * x <= ab; ++x) pairs.emplace_back(x, ab - x);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            for (std::size_t j = i; j < pairs.size(); ++j) {
                auto [p, q] = pairs[i];
                auto [r, t] = pairs[j];
                if (p + q + r + t != m) continue;
                cands.push_back(nop(w2_0(p, q), w2_0(r, t)));
                names.push_back("omega2_0" + pair_name(p, q) + "_{-1}omega2_0" + pair_name(r, t));
            }
        for (int x = 0; 2 * x <= s + 4; ++x) {
            cands.push_back(w2_0(x, s + 4 - x));
            names.push_back("omega2_0" + pair_name(x, s + 4 - x));
        }
    }
    rep.candidates = cands.size();
    Solution sol = express(D, cands);
    rep.feasible = sol.feasible;
    rep.unique = sol.unique;
    if (sol.feasible)
        for (std::size_t i = 0; i < cands.size(); ++i)
            if (sgn(sol.x[i]) != 0) rep.mu.emplace_back(names[i], sol.x[i]);
    return rep;
}

Matrix detA_matrix(int a) {
    if (a < 5) throw std::invalid_argument("detA needs a >= 5");
    const std::vector<std::vector<int>> exprs = {{0, 0, 0, 1, a - 3}, {0, 0, 0, 2, a - 4}, {0, 0, 1, 1, a - 4},
                                                 {0, 0, 0, 3, a - 5}, {0, 0, 1, 2, a - 5}, {0, 1, 1, 1, a - 5}};
    Matrix m(6, std::vector<Rational>(6, Rational(0)));
    for (std::size_t j = 0; j < 6; ++j) {
        FockState D = build_D(DKind::D5, exprs[j]);
        for (int k = 0; k < 6; ++k) {
            Monomial mono({{2, 1}, {2, k + 1}, {2, a - k + 1}});
            m[static_cast<std::size_t>(k)][j] = D.coefficient(mono).a();
        }
    }
    return m;
}

Rational detA(int a) { return determinant(detA_matrix(a)); }

Rational detA_closed_form(int a) {
    mpz_class x(a);
    mpz_class poly = 5331 * x * x * x * x * x * x - 70325 * x * x * x * x * x + 314669 * x * x * x * x -
                     613567 * x * x * x + 97384 * x * x + 1614156 * x - 1835568;
    mpz_class v = (x - 4) * (x - 4) * (x - 3) * (x - 1) * (x + 2) * poly;
    Rational r(v, mpz_class(6));
    r.canonicalize();
    return r;
}

int SpanReport::first_deficit() const {
    for (std::size_t w = 0; w < spanned.size() && w < target.size(); ++w)
        if (spanned[w] < target[w]) return static_cast<int>(w);
    return -1;
}

std::vector<std::size_t> span_dims(const std::vector<FockState>& gens, int max_weight) {
    if (gens.empty()) return std::vector<std::size_t>(static_cast<std::size_t>(max_weight) + 1, 0);
    std::vector<int> gw;
    for (const auto& g : gens) {
        Grading gr = weight_of(g);
        if (!gr.homogeneous()) throw std::invalid_argument("generators must be homogeneous and nonzero");
        gw.push_back(gr.weight);
    }
    const int rank = gens.front().rank();
    const Basis basis = gens.front().basis();
    std::vector<std::vector<FockState>> pieces(static_cast<std::size_t>(max_weight) + 1);
    pieces[0].push_back(FockState::vacuum(rank, basis));
    for (int N = 1; N <= max_weight; ++N) {
        EchelonSet ech;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            for (int Np = 0; Np + gw[g] <= N; ++Np) {
                int n = gw[g] + Np - N - 1;
                for (const auto& w : pieces[static_cast<std::size_t>(Np)]) {
                    FockState p = nth_product(gens[g], n, w);
                    if (ech.insert(p)) pieces[static_cast<std::size_t>(N)].push_back(std::move(p));
                }
            }
        }
    }
    std::vector<std::size_t> dims;
    for (const auto& p : pieces) dims.push_back(p.size());
    return dims;
}

std::vector<std::size_t> reynolds_dims(Group g, int max_weight) {
    std::vector<std::size_t> dims;
    for (int N = 0; N <= max_weight; ++N) {
        EchelonSet ech;
        for (const auto& m : enumerate_basis(3, N)) {
            FockState v(3, Basis::alpha);
            v.add_term(m, Scalar(1));
            ech.insert(reynolds(g, v));
        }
        dims.push_back(ech.size());
    }
    return dims;
}

std::vector<GeneratorId> standard_generators(Group g) {
    std::vector<std::string> names;
    switch (g) {
        case Group::S3:
            names = {"omega1(0)", "omega2(0,0)", "omega2(0,2)", "omega2(0,4)", "omega3(0,0,0)", "omega3(0,0,2)",
                     "omega3(0,1,2)"};
            break;
        case Group::Z3:
            names = {"omega1_0(0)",       "omega23_0(0,0)",    "omega23_0(0,1)",
                     "omega23_0(0,2)",    "omega23_0(0,3)",    "omega222_0(0,0,0)",
                     "omega222_0(0,0,2)", "omega333_0(0,0,0)", "omega333_0(0,0,2)"};
            break;
        case Group::S2: throw std::invalid_argument("no standard generating set for s2");
    }
    std::vector<GeneratorId> out;
    for (const auto& n : names) out.push_back(GeneratorId::parse(n));
    return out;
}

SpanReport span_report(Group g, int max_weight, const std::vector<GeneratorId>& drop) {
    SpanReport rep;
    rep.max_weight = max_weight;
    std::vector<FockState> gens;
    for (const auto& id : standard_generators(g)) {
        if (std::find(drop.begin(), drop.end(), id) != drop.end()) continue;
        FockState v = build_generator(id);
        if (!is_invariant(g, v)) throw std::invalid_argument("generator not invariant: " + id.str());
        rep.generators.push_back(id.str());
        gens.push_back(std::move(v));
    }
    rep.spanned = span_dims(gens, max_weight);
    rep.target = reynolds_dims(g, max_weight);
    return rep;
}

PrimarySet parse_primary_set(std::string_view s) {
    if (s == "s3" || s == "S3") return PrimarySet::S3;
    if (s == "z3" || s == "Z3") return PrimarySet::Z3;
    if (s == "h2" || s == "H2") return PrimarySet::H2;
    throw std::invalid_argument("unknown primary set: " + std::string(s));
}

namespace {

// applies x1_{n1} x2_{n2} ... to the vacuum, rightmost first
FockState chain(const std::vector<std::pair<FockState, int>>& ops) {
    FockState v = FockState::vacuum(ops.front().first.rank(), ops.front().first.basis());
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) v = nth_product(it->first, it->second, v);
    return v;
}

bool invariant_under(const std::vector<Permutation>& g, const FockState& v) {
    for (const auto& s : g)
        if (!(act(s, v) == v)) return false;
    return true;
}

PrimaryCheck check_vector(const std::string& name, const FockState& v, int weight,
                          const std::vector<Permutation>& g, bool erratum = false, std::string note = {}) {
    PrimaryCheck c;
    c.name = name;
    c.erratum = erratum;
    c.note = std::move(note);
    c.expected_weight = weight;
    Grading gr = weight_of(v);
    c.weight_ok = gr.homogeneous() && gr.weight == weight;
    c.invariant = invariant_under(g, v);
    c.primary = gr.homogeneous() && is_primary(v);
    return c;
}

PrimaryCheck check_virasoro(const std::string& name, const FockState& om, const std::vector<Permutation>& g) {
    PrimaryCheck c;
    c.name = name;
    c.expected_weight = 2;
    Grading gr = weight_of(om);
    c.weight_ok = gr.homogeneous() && gr.weight == 2;
    c.invariant = invariant_under(g, om);
    const int rank = om.rank();
    FockState vac = FockState::vacuum(rank, om.basis());
    bool l0 = nth_product(om, 1, om) == om * Scalar(2);
    bool l1 = nth_product(om, 2, om).is_zero();
    bool l2 = nth_product(om, 3, om) == vac * Scalar(make_rational(rank, 2));
    bool tr = nth_product(om, 0, om) == translate(om);
    c.primary = l0 && l1 && l2 && tr;
    c.note = "Virasoro axioms, c = " + std::to_string(rank);
    return c;
}

std::vector<PrimaryCheck> s3_primaries() {
    auto g = group_elements(Group::S3);
    FockState h = omega1(0);
    FockState om = omega2(0, 0) * frac(1, 2);
    FockState w2_02 = omega2(0, 2), w2_04 = omega2(0, 4);
    FockState c000 = omega3(0, 0, 0), c002 = omega3(0, 0, 2), c012 = omega3(0, 1, 2);
    FockState hh = nop(h, h);

    FockState J1 = w2_02 * Scalar(2) - nop(om, om) * frac(24, 37) - on_vacuum(om, -3) * frac(30, 37);
    FockState J2 = w2_04 * Scalar(24) - on_vacuum(w2_02, -3) * frac(460, 81) - nop(om, w2_02) * frac(80, 27) +
                   nop(om, nop(om, om)) * frac(256, 801) - chain({{om, -2}, {om, -2}}) * frac(364, 2403) +
                   nth_product(om, -3, om) * frac(3472, 2403) + on_vacuum(om, -5) * frac(40744, 2403);
    FockState C1 = c000 - nop(h, hh) * frac(1, 3);
    FockState C2 = c002 * Scalar(2) - on_vacuum(c000, -3) * frac(2, 15) - nth_product(h, -3, hh) * frac(8, 45) +
                   chain({{h, -2}, {h, -2}, {h, -1}}) * frac(2, 15) - nop(om, c000) * frac(16, 45) +
                   chain({{h, -1}, {h, -1}, {h, -1}, {om, -1}}) * frac(16, 135);
    auto C3 = [&](bool fixed) {
        FockState tail = fixed ? chain({{h, -2}, {h, -2}, {h, -2}}) : chain({{om, -2}, {om, -2}, {om, -2}});
        return c012 * Scalar(2) + on_vacuum(c002, -2) * (fixed ? frac(1, 5) : frac(1, 10)) -
               on_vacuum(c000, -4) * frac(6, 25) - nop(om, on_vacuum(c000, -2)) * frac(2, 25) +
               nth_product(om, -2, c000) * frac(3, 25) - chain({{h, -1}, {h, -1}, {h, -1}, {om, -2}}) * frac(1, 25) +
               chain({{h, -2}, {h, -1}, {h, -1}, {om, -1}}) * frac(2, 25) + tail * frac(2, 25) -
               chain({{h, -3}, {h, -2}, {h, -1}}) * frac(4, 25) + chain({{h, -4}, {h, -1}, {h, -1}}) * frac(6, 75);
    };
    std::vector<PrimaryCheck> out;
    out.push_back(check_vector("h", h, 1, g));
    out.push_back(check_virasoro("omega", om, g));
    out.push_back(check_vector("J1", J1, 4, g));
    out.push_back(check_vector("J2", J2, 6, g));
    out.push_back(check_vector("C1", C1, 3, g));
    out.push_back(check_vector("C2", C2, 5, g));
    out.push_back(check_vector("C3", C3(false), 6, g));
    out.push_back(check_vector("C3", C3(true), 6, g, true,
                               "coefficient of omega3(0,0,2)_{-2}1 is 1/5 and omega_{-2}omega_{-2}omega_{-2}1 reads "
                               "h_{-2}h_{-2}h_{-2}1"));
    return out;
}

std::vector<PrimaryCheck> z3_primaries() {
    auto g = group_elements(Group::Z3);
    FockState h = w1_0(0);
    FockState om = w23_0(0, 0) + nop(h, h) * frac(1, 2);
    FockState J1 = w23_0(0, 1) - on_vacuum(om, -2) * frac(1, 2) + nth_product(h, -2, h) * frac(1, 2);
    FockState J2 = w23_0(0, 2) * Scalar(2) - on_vacuum(w23_0(0, 1), -2) + nop(om, om) * frac(2, 3) -
                   chain({{h, -1}, {h, -1}, {om, -1}}) * frac(22, 3) + nth_product(h, -3, h) * frac(77, 9) -
                   chain({{h, -2}, {h, -2}}) * frac(83, 12);
    FockState h5 = chain({{h, -1}, {h, -1}, {h, -1}, {h, -1}, {h, -1}});
    FockState J3 = w23_0(0, 3) * Scalar(6) - on_vacuum(w23_0(0, 2), -2) * frac(8, 3) +
                   chain({{h, -2}, {h, -1}, {om, -1}}) * Scalar(4) + chain({{h, -1}, {h, -1}, {om, -2}}) * Scalar(8) -
                   chain({{h, -3}, {om, -1}}) * Scalar(16) + chain({{h, -1}, {om, -3}}) * Scalar(8) +
                   h5 * Scalar(4) - chain({{h, -2}, {h, -2}, {h, -1}}) * frac(34, 3) -
                   chain({{h, -3}, {h, -1}, {h, -1}}) * frac(40, 3) + h5 * Scalar(4) +
                   chain({{h, -3}, {h, -2}}) * frac(58, 3) - chain({{h, -4}, {h, -1}}) * Scalar(23) +
                   chain({{h, -5}}) * frac(88, 5);
    auto C2 = [&](bool three, bool fixed) {
        FockState c0 = three ? w333_0(0, 0, 0) : w222_0(0, 0, 0);
        FockState c2 = three ? w333_0(0, 0, 2) : w222_0(0, 0, 2);
        return c2 - on_vacuum(c0, -3) * frac(1, 15) - nop(om, c0) * (fixed ? frac(8, 45) : frac(8, 15));
    };
    std::vector<PrimaryCheck> out;
    out.push_back(check_vector("h", h, 1, g));
    out.push_back(check_virasoro("omega", om, g));
    out.push_back(check_vector("J1", J1, 3, g));
    out.push_back(check_vector("J2", J2, 4, g));
    out.push_back(check_vector("J3", J3, 5, g, false, "no coefficient choice over these terms is primary"));
    out.push_back(check_vector("C1(2)", w222_0(0, 0, 0), 3, g));
    out.push_back(check_vector("C2(2)", C2(false, false), 5, g));
    out.push_back(check_vector("C2(2)", C2(false, true), 5, g, true, "omega_{-1} coefficient -8/45"));
    out.push_back(check_vector("C1(3)", w333_0(0, 0, 0), 3, g));
    out.push_back(check_vector("C2(3)", C2(true, false), 5, g));
    out.push_back(check_vector("C2(3)", C2(true, true), 5, g, true, "omega_{-1} coefficient -8/45"));
    return out;
}

std::vector<PrimaryCheck> h2_primaries() {
    std::vector<Permutation> g = {Permutation::identity(2), Permutation::parse("(12)", 2)};
    FockState H = parse_state(
        "(1/2)*a1(-1)a1(-1)a1(-1)a1(-1) + (1/2)*a2(-1)a2(-1)a2(-1)a2(-1) - 2*a1(-1)a1(-1)a1(-1)a2(-1)"
        " - 2*a1(-1)a2(-1)a2(-1)a2(-1) + 3*a1(-1)a1(-1)a2(-1)a2(-1) + (3/2)*a1(-2)a1(-2) + (3/2)*a2(-2)a2(-2)"
        " - 3*a1(-2)a2(-2) + a1(-1)a2(-3) + a1(-3)a2(-1) - a1(-3)a1(-1) - a2(-3)a2(-1)",
        2);
    FockState fix = parse_state("a1(-1)a2(-3) + a1(-3)a2(-1) - a1(-3)a1(-1) - a2(-3)a2(-1)", 2);
    std::vector<PrimaryCheck> out;
    out.push_back(check_vector("H", H, 4, g));
    out.push_back(check_vector("H", H + fix, 4, g, true, "the four a(-3)a(-1) terms carry 4 inside the 1/2, not 2"));
    return out;
}

}  // namespace

std::vector<PrimaryCheck> verify_primaries(PrimarySet which) {
    switch (which) {
        case PrimarySet::S3: return s3_primaries();
        case PrimarySet::Z3: return z3_primaries();
        case PrimarySet::H2: return h2_primaries();
    }
    return {};
}

}  // namespace heisorb
