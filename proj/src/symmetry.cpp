#include "heisorb/symmetry.hpp"

#include "heisorb/linalg.hpp"
#include "heisorb/vertex.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace heisorb {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<int> seen(images_.size() + 1, 0);
    for (int x : images_) {
        if (x < 1 || x > static_cast<int>(images_.size()) || seen[x]++) throw std::invalid_argument("not a permutation");
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::parse(std::string_view text, int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty() || t == "e" || t == "()") return Permutation(im);
    std::size_t i = 0;
    while (i < t.size()) {
        if (t[i] != '(') throw std::invalid_argument("bad cycle notation: " + std::string(text));
        auto close = t.find(')', i);
        if (close == std::string::npos) throw std::invalid_argument("bad cycle notation: " + std::string(text));
        std::vector<int> cyc;
        for (std::size_t j = i + 1; j < close; ++j) {
            if (!std::isdigit(static_cast<unsigned char>(t[j]))) throw std::invalid_argument("bad cycle entry");
            cyc.push_back(t[j] - '0');
        }
        for (int x : cyc)
            if (x < 1 || x > n) throw std::invalid_argument("cycle entry out of range");
        // cycles are applied right to left, so each new one composes on the right
        std::vector<int> c(static_cast<std::size_t>(n));
        std::iota(c.begin(), c.end(), 1);
        for (std::size_t k = 0; k < cyc.size(); ++k) c[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
        std::vector<int> next(im.size());
        for (std::size_t x = 0; x < im.size(); ++x) next[x] = im[c[x] - 1];
        im = std::move(next);
        i = close + 1;
    }
    return Permutation(im);
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = images_[j] - 1) {
            seen[j] = true;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

int Permutation::sign() const {
    int s = 1;
    for (int len : cycle_type())
        if (len % 2 == 0) s = -s;
    return s;
}

std::string Permutation::str() const {
    std::string s;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == static_cast<int>(i) + 1) continue;
        s += "(";
        for (std::size_t j = i; !seen[j]; j = images_[j] - 1) {
            seen[j] = true;
            s += std::to_string(j + 1);
        }
        s += ")";
    }
    return s.empty() ? "e" : s;
}

Permutation operator*(const Permutation& s, const Permutation& t) {
    if (s.degree() != t.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<int> im(t.images_.size());
    for (std::size_t i = 0; i < im.size(); ++i) im[i] = s(t.images_[i]);
    return Permutation(std::move(im));
}

namespace {

FockState relabel(const Permutation& sigma, const FockState& v) {
    FockState out(v.rank(), v.basis());
    for (const auto& [m, c] : v.terms()) {
        std::vector<Mode> modes = m.modes();
        for (auto& x : modes) x.field = sigma(x.field);
        out.add_term(Monomial(std::move(modes)), c);
    }
    return out;
}

}  // namespace

FockState act(const Permutation& sigma, const FockState& v) {
    if (sigma.degree() != v.rank()) throw std::invalid_argument("rank mismatch");
    if (v.basis() == Basis::alpha) return relabel(sigma, v);
    FockState a = detail::change_basis_any_parity(v, Basis::alpha);
    return detail::change_basis_any_parity(relabel(sigma, a), Basis::beta);
}

std::string group_name(Group g) {
    switch (g) {
        case Group::S3: return "s3";
        case Group::Z3: return "z3";
        case Group::S2: return "s2";
    }
    return "?";
}

Group parse_group(std::string_view s) {
    std::string t(s);
    for (auto& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == "s3") return Group::S3;
    if (t == "z3") return Group::Z3;
    if (t == "s2") return Group::S2;
    throw std::invalid_argument("unknown group: " + std::string(s));
}

std::vector<Permutation> group_elements(Group g) {
    std::vector<std::string> names;
    switch (g) {
        case Group::S3: names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"}; break;
        case Group::Z3: names = {"e", "(123)", "(132)"}; break;
        case Group::S2: names = {"e", "(12)"}; break;
    }
    std::vector<Permutation> out;
    for (const auto& n : names) out.push_back(Permutation::parse(n, 3));
    return out;
}

FockState reynolds(Group g, const FockState& v) {
    auto els = group_elements(g);
    FockState out(v.rank(), v.basis());
    for (const auto& s : els) out += act(s, v);
    return out * Scalar(make_rational(1, static_cast<long>(els.size())));
}

bool is_invariant(Group g, const FockState& v) {
    for (const auto& s : group_elements(g))
        if (!(act(s, v) == v)) return false;
    return true;
}

namespace {

struct FamilyInfo {
    GeneratorId::Family f;
    const char* name;
    int arity;  // 0 means any positive arity
};

constexpr FamilyInfo kFamilies[] = {
    {GeneratorId::Family::omega1, "omega1", 1},       {GeneratorId::Family::omega2, "omega2", 2},
    {GeneratorId::Family::omega3, "omega3", 3},       {GeneratorId::Family::omega1_0, "omega1_0", 1},
    {GeneratorId::Family::omega2_0, "omega2_0", 2},   {GeneratorId::Family::omega3_0, "omega3_0", 3},
    {GeneratorId::Family::omega23_0, "omega23_0", 2}, {GeneratorId::Family::omega222_0, "omega222_0", 3},
    {GeneratorId::Family::omega333_0, "omega333_0", 3}, {GeneratorId::Family::q_k, "q", 0},
    {GeneratorId::Family::q_k_0, "q_0", 0},
};

const FamilyInfo& info(GeneratorId::Family f) {
    for (const auto& x : kFamilies)
        if (x.f == f) return x;
    throw std::logic_error("unknown family");
}

FockState single_field_power(Basis b, int field, const std::vector<int>& idx) {
    std::vector<Mode> modes;
    for (int a : idx) modes.push_back({field, a + 1});
    return FockState::monomial(3, b, modes);
}

}  // namespace

GeneratorId GeneratorId::parse(std::string_view text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    auto open = t.find('(');
    if (open == std::string::npos || t.back() != ')') throw std::invalid_argument("bad generator: " + t);
    std::string name = t.substr(0, open);
    GeneratorId id;
    bool found = false;
    for (const auto& x : kFamilies)
        if (name == x.name) {
            id.family = x.f;
            found = true;
        }
    if (!found) throw std::invalid_argument("unknown generator family: " + name);
    std::string args = t.substr(open + 1, t.size() - open - 2);
    std::size_t i = 0;
    while (i < args.size()) {
        auto comma = args.find(',', i);
        if (comma == std::string::npos) comma = args.size();
        std::string tok = args.substr(i, comma - i);
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw std::invalid_argument("bad generator index in " + t);
        id.indices.push_back(std::stoi(tok));
        i = comma + 1;
    }
    int arity = info(id.family).arity;
    if (arity ? static_cast<int>(id.indices.size()) != arity : id.indices.empty())
        throw std::invalid_argument("wrong number of indices in " + t);
    return id;
}

std::string GeneratorId::str() const {
    std::string s = info(family).name;
    s += "(";
    for (std::size_t i = 0; i < indices.size(); ++i) s += (i ? "," : "") + std::to_string(indices[i]);
    return s + ")";
}

int GeneratorId::weight() const {
    int w = 0;
    for (int a : indices) w += a + 1;
    return w;
}

Basis GeneratorId::basis() const {
    switch (family) {
        case Family::omega1:
        case Family::omega2:
        case Family::omega3:
        case Family::q_k: return Basis::alpha;
        default: return Basis::beta;
    }
}

FockState build_generator(const GeneratorId& id, int rank) {
    int arity = info(id.family).arity;
    if (arity && static_cast<int>(id.indices.size()) != arity) throw std::invalid_argument("invalid arity");
    for (int a : id.indices)
        if (a < 0) throw std::invalid_argument("negative generator index");
    const auto& ix = id.indices;
    switch (id.family) {
        case GeneratorId::Family::omega1:
        case GeneratorId::Family::omega2:
        case GeneratorId::Family::omega3: {
            FockState out(rank, Basis::alpha);
            for (int i = 1; i <= rank; ++i) {
                std::vector<Mode> modes;
                for (int a : ix) modes.push_back({i, a + 1});
                out += FockState::monomial(rank, Basis::alpha, modes);
            }
            return out;
        }
        case GeneratorId::Family::omega1_0: return single_field_power(Basis::beta, 1, ix);
        case GeneratorId::Family::omega2_0:
            return FockState::monomial(3, Basis::beta, {{2, ix[0] + 1}, {3, ix[1] + 1}}) +
                   FockState::monomial(3, Basis::beta, {{3, ix[0] + 1}, {2, ix[1] + 1}});
        case GeneratorId::Family::omega3_0:
            return single_field_power(Basis::beta, 2, ix) + single_field_power(Basis::beta, 3, ix);
        case GeneratorId::Family::omega23_0:
            return FockState::monomial(3, Basis::beta, {{2, ix[0] + 1}, {3, ix[1] + 1}});
        case GeneratorId::Family::omega222_0: return single_field_power(Basis::beta, 2, ix);
        case GeneratorId::Family::omega333_0: return single_field_power(Basis::beta, 3, ix);
        case GeneratorId::Family::q_k:
        case GeneratorId::Family::q_k_0:
            throw std::invalid_argument("q families are commutative polynomials, not states");
    }
    throw std::logic_error("unhandled family");
}

FockState omega1(int a, int rank) { return build_generator({GeneratorId::Family::omega1, {a}}, rank); }
FockState omega2(int a, int b, int rank) { return build_generator({GeneratorId::Family::omega2, {a, b}}, rank); }
FockState omega3(int a, int b, int c, int rank) {
    return build_generator({GeneratorId::Family::omega3, {a, b, c}}, rank);
}
FockState w1_0(int a) { return build_generator({GeneratorId::Family::omega1_0, {a}}); }
FockState w2_0(int a, int b) { return build_generator({GeneratorId::Family::omega2_0, {a, b}}); }
FockState w3_0(int a, int b, int c) { return build_generator({GeneratorId::Family::omega3_0, {a, b, c}}); }
FockState w23_0(int a, int b) { return build_generator({GeneratorId::Family::omega23_0, {a, b}}); }
FockState w222_0(int a, int b, int c) { return build_generator({GeneratorId::Family::omega222_0, {a, b, c}}); }
FockState w333_0(int a, int b, int c) { return build_generator({GeneratorId::Family::omega333_0, {a, b, c}}); }

TranslationReport verify_generator_translation(int a, int b, int c) {
    TranslationReport r;
    r.residual1 = omega1(a) - change_basis(w1_0(a), Basis::alpha);
    FockState two = w2_0(a, b) + nth_product(w1_0(a), -1, w1_0(b));
    r.residual2 = omega2(a, b) - change_basis(two, Basis::alpha);

    FockState lhs = change_basis(omega3(a, b, c), Basis::beta);
    FockState rest = nth_product(w1_0(a), -1, w2_0(b, c)) + nth_product(w1_0(b), -1, w2_0(a, c)) +
                     nth_product(w1_0(c), -1, w2_0(a, b)) +
                     nth_product(w1_0(a), -1, nth_product(w1_0(b), -1, w1_0(c)));
    FockState cubic = w3_0(a, b, c);
    Solution s = express(lhs, {cubic, rest});
    r.fit_ok = s.feasible && s.unique;
    if (r.fit_ok) {
        r.x = s.x[0];
        r.y = s.x[1];
        r.residual3 = lhs - cubic * Scalar(r.x) - rest * Scalar(r.y);
    } else {
        r.residual3 = lhs;
    }
    return r;
}

}  // namespace heisorb
