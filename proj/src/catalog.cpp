#include "heisorb/catalog.hpp"

#include "heisorb/linalg.hpp"
#include "heisorb/symmetry.hpp"
#include "heisorb/vertex.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace heisorb {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::erratum: return "erratum";
        case Verdict::fail: return "fail";
        case Verdict::vacuous: return "vacuous";
    }
    return "?";
}

namespace {

struct G {
    FockState s;
    std::string name;
};

std::string tuple_str(std::initializer_list<int> xs) {
    std::string out = "(";
    bool first = true;
    for (int x : xs) {
        if (!first) out += ",";
        out += std::to_string(x);
        first = false;
    }
    return out + ")";
}

G W(int a, int b) { return {w2_0(a, b), "omega2_0" + tuple_str({a, b})}; }
G V(int a, int b, int c) { return {w3_0(a, b, c), "omega3_0" + tuple_str({a, b, c})}; }
G X(int a, int b) { return {w23_0(a, b), "omega23_0" + tuple_str({a, b})}; }
G P(int a, int b, int c) { return {w222_0(a, b, c), "omega222_0" + tuple_str({a, b, c})}; }

G vd(const G& g, int n) {
    if (n == -1) return g;
    return {on_vacuum(g.s, n), g.name + "_{" + std::to_string(n) + "}1"};
}
G m1(const G& a, const G& b) { return {nop(a.s, b.s), a.name + "_{-1}" + b.name}; }

Rational fr(long p, long q = 1) { return make_rational(p, q); }
Term T(const Rational& c, const G& g) { return {c, g.s, g.name}; }

std::vector<Term> with_coefs(std::vector<Term> ts, const std::vector<Rational>& cs) {
    if (cs.size() != ts.size()) throw std::logic_error("coefficient count mismatch");
    for (std::size_t i = 0; i < ts.size(); ++i) ts[i].coef = cs[i];
    return ts;
}

long sign(long e) { return e % 2 == 0 ? 1 : -1; }
Rational C(long n, long k) { return binomial(n, k); }

RelationDef ident(std::string id, std::string suite, std::string about, const G& lhs, std::vector<Term> terms) {
    RelationDef d;
    d.id = std::move(id);
    d.suite = std::move(suite);
    d.about = std::move(about);
    d.lhs = lhs.s;
    d.terms = std::move(terms);
    return d;
}

// ---- rank-3 S3 chain ----

RelationDef setup_deriv(int k) {
    switch (k) {
        case 1:
            return ident("setup_deriv_1", "s3", "omega3_0(0,0,1) is a derivative", V(0, 0, 1),
                         {T(fr(1, 3), vd(V(0, 0, 0), -2))});
        case 2: {
            auto d = ident("setup_deriv_2", "s3", "omega3_0(0,1,1) via omega3_0(0,0,2)", V(0, 1, 1),
                           {T(fr(-1), V(0, 0, 2)), T(fr(2, 3), vd(V(0, 0, 0), -3))});
            d.corrected = with_coefs(d.terms, {fr(-1), fr(1, 3)});
            d.correction = "derivative coefficient 2/3 -> 1/3";
            return d;
        }
        case 3:
            return ident("setup_deriv_3", "s3", "omega3_0(0,0,3) via omega3_0(0,1,2)", V(0, 0, 3),
                         {T(fr(-2, 3), V(0, 1, 2)), T(fr(1, 3), vd(V(0, 0, 2), -2))});
    }
    throw std::invalid_argument("setup_deriv index out of range");
}

RelationDef big_deriv(int k) {
    std::string id = "big_deriv_" + std::to_string(k);
    switch (k) {
        case 1: {
            auto d = ident(id, "s3", "omega3_0(0,1,3) in weight 7", V(0, 1, 3),
                           {T(fr(-1, 12), V(0, 0, 4)), T(fr(-1, 72), vd(V(0, 1, 2), -2)),
                            T(fr(1, 72), vd(V(0, 0, 2), -3))});
            d.corrected = with_coefs(d.terms, {fr(-2), fr(-1, 3), fr(1, 3)});
            d.correction = "printed coefficients are 1/24 of the true ones";
            return d;
        }
        case 2:
            return ident(id, "s3", "omega3_0(0,2,2) in weight 7", V(0, 2, 2),
                         {T(fr(3), V(0, 0, 4)), T(fr(4, 3), vd(V(0, 1, 2), -2)), T(fr(-1, 3), vd(V(0, 0, 2), -3)),
                          T(fr(-1, 3), vd(V(0, 0, 0), -5))});
        case 3: {
            auto d = ident(id, "s3", "omega3_0(0,2,3) in weight 8", V(0, 2, 3),
                           {T(fr(-1, 30), V(0, 1, 4)), T(fr(1, 60), vd(V(0, 0, 4), -2)),
                            T(fr(1, 35), vd(V(0, 1, 2), -3)), T(fr(-1, 36), vd(V(0, 0, 0), -6))});
            d.corrected = with_coefs(d.terms, {fr(-2, 5), fr(1, 5), fr(1, 3), fr(-1, 3)});
            d.correction = "printed coefficients are 1/12 of the true ones, with 1/35 a misprint of 1/36";
            return d;
        }
        case 4: {
            auto d = ident(id, "s3", "omega3_0(0,3,3) in weight 9", V(0, 3, 3),
                           {T(fr(5, 4), V(0, 0, 6)), T(fr(-1, 2), V(0, 2, 4)), T(fr(1, 5), vd(V(0, 1, 4), -2)),
                            T(fr(1, 20), vd(V(0, 0, 4), -3)), T(fr(1, 6), vd(V(0, 1, 2), -4)),
                            T(fr(-1, 12), vd(V(0, 0, 2), -5)), T(fr(-1, 4), vd(V(0, 0, 0), -7))});
            d.corrected = with_coefs(d.terms, {fr(5), fr(-2), fr(4, 5), fr(1, 5), fr(2, 3), fr(-1, 3), fr(-1)});
            d.correction = "printed coefficients are 1/4 of the true ones";
            return d;
        }
        case 5:
            return ident(id, "s3", "omega3_0(0,3,4) in weight 10", V(0, 3, 4),
                         {T(fr(5, 7), V(0, 1, 6)), T(fr(15, 7), vd(V(0, 0, 6), -2)), T(fr(-1, 3), vd(V(0, 2, 4), -2)),
                          T(fr(2, 3), vd(V(0, 1, 4), -3)), T(fr(5, 9), vd(V(0, 1, 2), -5)),
                          T(fr(-5, 9), vd(V(0, 0, 2), -6)), T(fr(-10, 9), vd(V(0, 0, 0), -8))});
        case 6:
            return ident(id, "s3", "omega3_0(0,4,4) in weight 11", V(0, 4, 4),
                         {T(fr(-21), V(0, 0, 8)), T(fr(4), V(0, 2, 6)), T(fr(-8, 7), vd(V(0, 1, 6), -2)),
                          T(fr(29, 7), vd(V(0, 0, 6), -3)), T(fr(-2, 3), vd(V(0, 2, 4), -3)),
                          T(fr(8, 5), vd(V(0, 1, 4), -4)), T(fr(-1, 5), vd(V(0, 0, 4), -5)),
                          T(fr(16, 9), vd(V(0, 1, 2), -6)), T(fr(-7, 3), vd(V(0, 0, 2), -7)),
                          T(fr(-47, 9), vd(V(0, 0, 0), -9))});
    }
    throw std::invalid_argument("big_deriv index out of range");
}

RelationDef quaddec_06() {
    std::vector<Term> t = {
        T(fr(143, 742), vd(W(0, 4), -3)),          T(fr(-81, 371), vd(W(0, 2), -5)),
        T(fr(743, 1113), vd(W(0, 0), -7)),         T(fr(1, 1484), m1(W(0, 0), W(0, 4))),
        T(fr(-13, 2968), m1(W(0, 0), W(1, 3))),    T(fr(-1, 4452), m1(W(0, 0), W(2, 2))),
        T(fr(2, 1113), m1(W(0, 1), W(0, 3))),      T(fr(-1, 1113), m1(W(0, 1), W(1, 2))),
        T(fr(1, 2226), m1(W(0, 2), W(0, 2))),      T(fr(-3, 1484), m1(W(0, 2), W(1, 1))),
        T(fr(-1, 2968), m1(W(1, 1), W(1, 1))),     T(fr(1, 4452), m1(W(0, 0), m1(W(0, 0), W(0, 1)))),
        T(fr(-1, 8904), m1(W(0, 0), m1(W(0, 1), W(0, 1)))), T(fr(1, 4452), m1(V(0, 0, 0), V(0, 1, 1))),
        T(fr(-1, 4452), m1(V(0, 0, 1), V(0, 0, 1)))};
    auto d = ident("quaddec_06", "s3", "decoupling of omega2_0(0,6)", W(0, 6), t);
    auto c = t;
    c[11] = T(fr(1, 8904), m1(W(0, 0), m1(W(0, 0), W(1, 1))));
    d.corrected = c;
    d.correction = "the weight-7 cubic term reads (1/8904) omega2_0(0,0)_{-1}omega2_0(0,0)_{-1}omega2_0(1,1)";
    return d;
}

RelationDef step1_004() {
    auto d = ident("step1_004", "s3", "omega3_0(0,0,4) via derivatives and quadratic-cubic products", V(0, 0, 4),
                   {T(fr(-16, 15), vd(V(0, 1, 2), -2)), T(fr(4, 15), vd(V(0, 0, 2), -3)),
                    T(fr(24, 45), vd(V(0, 0, 0), -5)), T(fr(-2, 5), m1(W(0, 0), V(0, 1, 1))),
                    T(fr(4, 5), m1(W(0, 1), V(0, 0, 1))), T(fr(-2, 5), m1(W(1, 1), V(0, 0, 0)))});
    d.corrected =
        with_coefs(d.terms, {fr(-2, 45), fr(1, 90), fr(1, 45), fr(-1, 60), fr(1, 30), fr(-1, 60)});
    d.correction = "printed coefficients are 24 times the true ones";
    return d;
}

RelationDef step2_024() {
    auto build = [](bool fixed) {
        std::vector<Term> t = {
            T(fr(1, 18), m1(W(0, 0), fixed ? V(1, 1, 2) : V(1, 2, 2))),
            T(fr(1, 64), m1(W(0, 0), V(0, 1, 3))),
            T(fr(-1, 18), m1(W(0, 1), V(0, 1, 2))),
            T(fr(-1, 64), m1(W(0, 1), V(0, 0, 3))),
            T(fr(-1, 18), m1(W(0, 2), V(0, 1, 1))),
            T(fr(1, 18), m1(W(1, 2), V(0, 0, 1))),
            T(fr(-1, 64), m1(W(0, 3), fixed ? V(0, 0, 1) : V(0, 1, 1))),
            T(fr(1, 64), m1(W(1, 3), fixed ? V(0, 0, 0) : V(0, 0, 1))),
            T(fr(-7, 18), vd(V(0, 0, 0), -7)),
            T(fr(-59, 144), vd(V(0, 0, 2), -5)),
            T(fr(187, 240), vd(V(0, 0, 4), -3)),
            T(fr(115, 288), vd(V(0, 1, 2), -4)),
            T(fr(37, 60), vd(V(0, 1, 4), -2))};
        return t;
    };
    auto d = ident("step2_024", "s3", "omega3_0(0,2,4) via derivatives and quadratic-cubic products", V(0, 2, 4),
                   build(false));
    d.corrected = build(true);
    d.correction =
        "index misprints: omega3_0(1,2,2) -> (1,1,2); the omega2_0(0,3) and omega2_0(1,3) partners lower to "
        "omega3_0(0,0,1) and omega3_0(0,0,0)";
    return d;
}

// V(0,a+1,b) - c1 V(0,a-1,b+2) - c2 V(0,0,a+b+1) must be a combination of derivatives
// and quadratic-cubic products.
RelationDef step4(int a, int b) {
    if (a < 2 || b <= a) throw std::invalid_argument("step4 needs 2 <= a < b");
    const int s = a + b + 1;
    Rational c1 = fr(2, static_cast<long>(a) * (a + 1) * (b + 1)) * Rational(sign(b) - sign(a));
    Rational c2 = C(a + b + 1, b) * (fr(1 + 3 * sign(a), a + 1) + fr(1 - 3 * sign(b), b + 2) +
                                     fr(sign(b) - sign(a), a + b + 1));
    auto target = [&](const Rational& k2) {
        return V(0, a + 1, b).s - V(0, a - 1, b + 2).s * Scalar(c1) - V(0, 0, s).s * Scalar(k2);
    };
    RelationDef d;
    d.id = "step4" + tuple_str({a, b});
    d.suite = "s3";
    d.about = "omega3_0(0," + std::to_string(a + 1) + "," + std::to_string(b) + ") induction step";
    d.kind = RelationKind::membership;
    d.lhs = target(c2);
    d.control = target(c2 + 1);
    for (int n = 1; n <= s; ++n)
        for (int p = 0; 2 * p <= s - n; ++p) d.terms.push_back(T(fr(0), vd(V(0, p, s - n - p), -1 - n)));
    const int tot = a + b - 1;
    for (int r1 = 0; r1 <= tot; ++r1)
        for (int r2 = r1; r1 + r2 <= tot; ++r2) {
            int rest = tot - r1 - r2;
            for (int s1 = 0; 2 * s1 <= rest; ++s1) d.terms.push_back(T(fr(0), m1(W(r1, r2), V(0, s1, rest - s1))));
        }
    return d;
}

// ---- Z3 ----

G D2(int a) {
    return {nop(X(0, a).s, X(1, 1).s) - nop(X(1, a).s, X(0, 1).s), "D2(" + std::to_string(a) + ")"};
}

std::vector<Term> D3_terms(const Rational& c, int a, int b) {
    return {T(c, m1(X(0, a), P(0, 0, b))), T(-c, m1(X(b, a), P(0, 0, 0)))};
}

RelationDef z3_D2_expand(int a) {
    return ident("z3_quad_D2_expand" + tuple_str({a}), "z3", "expansion of D2(a)", D2(a),
                 {T(C(a + 2, 2) * C(a + 4, 2), X(0, a + 4)), T(2 * C(a + 3, 3), X(1, a + 3)),
                  T(fr(-sign(a) * (a + 1)), X(a + 3, 1))});
}

RelationDef z3_shift(int a) {
    return ident("z3_quad_shift" + tuple_str({a}), "z3", "omega23_0(1,a+3) as a derivative", X(1, a + 3),
                 {T(fr(-(a + 4)), X(0, a + 4)), T(fr(1), vd(X(0, a + 3), -2))});
}

RelationDef z3_reverse(int a) {
    std::vector<Term> t;
    for (int j = 0; j <= a + 3; ++j) t.push_back(T(fr(sign(a + j + 1) * (a - j + 4)), vd(X(0, a - j + 4), -1 - j)));
    return ident("z3_quad_reverse" + tuple_str({a}), "z3", "omega23_0(a+3,1) through derivatives", X(a + 3, 1), t);
}

RelationDef z3_D2_combined(int a) {
    std::vector<Term> t = {T(-fr((a + 6) * (a + 4) * (a + 1) * (a - 1), 12), X(0, a + 4)),
                           T(2 * C(a + 3, 3), vd(X(0, a + 3), -2))};
    for (int j = 1; j <= a + 3; ++j) t.push_back(T(fr(sign(j) * (a + 1) * (a - j + 4)), vd(X(0, a - j + 4), -1 - j)));
    return ident("z3_quad_D2_combined" + tuple_str({a}), "z3", "D2(a) reduced to omega23_0(0,a+4) and derivatives",
                 D2(a), t);
}

RelationDef z3_quad_05() {
    return ident("z3_quad_05", "z3", "decoupling of omega23_0(0,5)", X(0, 5),
                 {T(fr(1, 7), m1(X(0, 0), X(1, 2))), T(fr(-1, 7), m1(X(1, 0), X(0, 2))),
                  T(fr(3, 7), vd(X(0, 4), -2)), T(fr(-3, 7), vd(X(0, 3), -3)), T(fr(1, 7), vd(X(0, 2), -4))});
}

RelationDef z3_cubic_001() {
    return ident("z3_cubic_001", "z3", "omega222_0(0,0,1) is a derivative", P(0, 0, 1),
                 {T(fr(1, 3), vd(P(0, 0, 0), -2))});
}

RelationDef z3_cubic_011() {
    auto d = ident("z3_cubic_011", "z3", "omega222_0(0,1,1) via omega222_0(0,0,2)", P(0, 1, 1),
                   {T(fr(-1), P(0, 0, 2)), T(fr(2, 3), vd(P(0, 0, 0), -3))});
    d.corrected = with_coefs(d.terms, {fr(-1), fr(1, 3)});
    d.correction = "derivative coefficient 2/3 -> 1/3";
    return d;
}

RelationDef z3_cubic_0a(int a) {
    if (a < 3) throw std::invalid_argument("z3_cubic_0a needs a >= 3");
    std::vector<Term> t = {T(fr(1, 3 * a + 1), vd(P(0, 0, a - 1), -2))};
    for (auto& x : D3_terms(fr(sign(a), static_cast<long>(a - 2) * (3 * a + 1)), a - 3, 1)) t.push_back(x);
    return ident("z3_cubic_0a" + tuple_str({a}), "z3", "omega222_0(0,0,a) via D3(a-3,1)", P(0, 0, a), t);
}

RelationDef z3_cubic_ab(int a, int b) {
    if (a < 2 || b < a) throw std::invalid_argument("z3_cubic_ab needs 2 <= a <= b");
    std::vector<Term> t = {T(fr(2 * a + 3 * b, 2 * (a + b)) * C(a + b, a), P(0, 0, a + b))};
    for (auto& x : D3_terms(fr(sign(a), 2L * (a - 1)), a - 2, b)) t.push_back(x);
    return ident("z3_cubic_ab" + tuple_str({a, b}), "z3", "omega222_0(0,a,b) via D3(a-2,b)", P(0, a, b), t);
}

RelationDef z3_cubic_01a(int a) {
    return ident("z3_cubic_01a" + tuple_str({a}), "z3", "omega222_0(0,1,a) via a derivative", P(0, 1, a),
                 {T(fr(1, 2), vd(P(0, 0, a), -2)), T(fr(-(a + 1), 2), P(0, 0, a + 1))});
}

struct Parsed {
    std::string base;
    std::vector<int> args;
};

Parsed parse_id(const std::string& id) {
    Parsed p;
    auto open = id.find('(');
    p.base = id.substr(0, open);
    if (open == std::string::npos) return p;
    if (id.back() != ')') throw std::invalid_argument("malformed relation id: " + id);
    std::string inner = id.substr(open + 1, id.size() - open - 2);
    std::size_t pos = 0;
    while (pos <= inner.size()) {
        auto comma = inner.find(',', pos);
        if (comma == std::string::npos) comma = inner.size();
        p.args.push_back(std::stoi(inner.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return p;
}

}  // namespace

std::vector<std::string> relation_ids(const std::string& suite) {
    std::vector<std::string> out;
    bool s3 = suite == "s3" || suite == "all";
    bool z3 = suite == "z3" || suite == "all";
    if (!s3 && !z3) throw std::invalid_argument("unknown relation suite: " + suite);
    if (s3) {
        for (int k = 1; k <= 3; ++k) out.push_back("setup_deriv_" + std::to_string(k));
        for (int k = 1; k <= 6; ++k) out.push_back("big_deriv_" + std::to_string(k));
        out.push_back("quaddec_06");
        out.push_back("step1_004");
        out.push_back("step2_024");
        for (auto [a, b] : {std::pair{5, 6}, {5, 7}, {6, 7}}) out.push_back("step4" + tuple_str({a, b}));
    }
    if (z3) {
        for (int a = 0; a <= 5; ++a) {
            out.push_back("z3_quad_D2_expand" + tuple_str({a}));
            out.push_back("z3_quad_shift" + tuple_str({a}));
            out.push_back("z3_quad_reverse" + tuple_str({a}));
            out.push_back("z3_quad_D2_combined" + tuple_str({a}));
        }
        out.push_back("z3_quad_05");
        out.push_back("z3_cubic_001");
        out.push_back("z3_cubic_011");
        for (int a = 3; a <= 7; ++a) out.push_back("z3_cubic_0a" + tuple_str({a}));
        for (int a = 2; a <= 6; ++a)
            for (int b = a; b <= 6; ++b) out.push_back("z3_cubic_ab" + tuple_str({a, b}));
        for (int a = 0; a <= 5; ++a) out.push_back("z3_cubic_01a" + tuple_str({a}));
    }
    return out;
}

RelationDef relation(const std::string& id) {
    Parsed p = parse_id(id);
    auto want = [&](std::size_t n) {
        if (p.args.size() != n) throw std::invalid_argument("wrong parameter count for " + p.base);
    };
    auto numbered = [&](const std::string& prefix) -> int {
        return std::stoi(p.base.substr(prefix.size()));
    };
    if (p.base.rfind("setup_deriv_", 0) == 0) return setup_deriv(numbered("setup_deriv_"));
    if (p.base.rfind("big_deriv_", 0) == 0) return big_deriv(numbered("big_deriv_"));
    if (p.base == "quaddec_06") return quaddec_06();
    if (p.base == "step1_004") return step1_004();
    if (p.base == "step2_024") return step2_024();
    if (p.base == "step4") return want(2), step4(p.args[0], p.args[1]);
    if (p.base == "z3_quad_D2_expand") return want(1), z3_D2_expand(p.args[0]);
    if (p.base == "z3_quad_shift") return want(1), z3_shift(p.args[0]);
    if (p.base == "z3_quad_reverse") return want(1), z3_reverse(p.args[0]);
    if (p.base == "z3_quad_D2_combined") return want(1), z3_D2_combined(p.args[0]);
    if (p.base == "z3_quad_05") return z3_quad_05();
    if (p.base == "z3_cubic_001") return z3_cubic_001();
    if (p.base == "z3_cubic_011") return z3_cubic_011();
    if (p.base == "z3_cubic_0a") return want(1), z3_cubic_0a(p.args[0]);
    if (p.base == "z3_cubic_ab") return want(2), z3_cubic_ab(p.args[0], p.args[1]);
    if (p.base == "z3_cubic_01a") return want(1), z3_cubic_01a(p.args[0]);
    throw std::invalid_argument("unknown relation: " + id);
}

namespace {

FockState combine(const std::vector<Term>& ts, const FockState& like) {
    FockState out(like.rank(), like.basis());
    for (const auto& t : ts) out += t.state * Scalar(t.coef);
    return out;
}

FitDiagnostics fit(const RelationDef& d) {
    FitDiagnostics f;
    f.ran = true;
    std::vector<FockState> states;
    for (const auto& t : d.terms) states.push_back(t.state);
    Solution s = express(d.lhs, states);
    f.feasible = s.feasible;
    f.unique = s.unique;
    if (!s.feasible) return f;
    f.coefs = s.x;
    if (!s.unique) return f;
    std::optional<Rational> ratio;
    bool uniform = true;
    for (std::size_t i = 0; i < d.terms.size(); ++i) {
        const Rational& printed = d.terms[i].coef;
        const Rational& got = s.x[i];
        if (printed != got) f.mismatched.push_back(d.terms[i].label);
        if (sgn(got) == 0) {
            if (sgn(printed) != 0) uniform = false;
            continue;
        }
        Rational r = printed / got;
        if (!ratio) ratio = r;
        else if (*ratio != r) uniform = false;
    }
    if (uniform && ratio && *ratio != 1) f.global_factor = ratio;
    return f;
}

}  // namespace

RelationResult verify_relation(const RelationDef& d) {
    RelationResult r;
    r.id = d.id;
    r.suite = d.suite;
    r.about = d.about;
    r.correction = d.correction;
    if (d.kind == RelationKind::membership) {
        std::vector<FockState> states;
        for (const auto& t : d.terms) states.push_back(t.state);
        r.literal_ok = express(d.lhs, states).feasible;
        if (d.control) r.control_in_span = express(*d.control, states).feasible;
        if (!r.literal_ok) r.verdict = Verdict::fail;
        else r.verdict = r.control_in_span.value_or(false) ? Verdict::vacuous : Verdict::pass;
        return r;
    }
    FockState res = d.lhs - combine(d.terms, d.lhs);
    r.residual_terms = res.size();
    r.literal_ok = res.is_zero();
    if (r.literal_ok) {
        r.verdict = Verdict::pass;
        return r;
    }
    r.fit = fit(d);
    if (d.corrected) {
        r.corrected_ok = (d.lhs - combine(*d.corrected, d.lhs)).is_zero();
        r.verdict = *r.corrected_ok ? Verdict::erratum : Verdict::fail;
    } else {
        r.verdict = Verdict::fail;
    }
    return r;
}

RelationResult verify_relation(const std::string& id) { return verify_relation(relation(id)); }

}  // namespace heisorb
