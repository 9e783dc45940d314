#include "heisorb/fock.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <stdexcept>

namespace heisorb {

char basis_letter(Basis b) { return b == Basis::alpha ? 'a' : 'b'; }

int partner(Basis b, int field) {
    if (b == Basis::alpha || field == 1) return field;
    if (field == 2) return 3;
    if (field == 3) return 2;
    throw std::out_of_range("beta basis has fields 1..3");
}

Monomial::Monomial(std::vector<Mode> modes) : modes_(std::move(modes)) {
    std::sort(modes_.begin(), modes_.end(), mode_before);
    for (const auto& m : modes_) {
        if (m.level < 1) throw std::invalid_argument("creation mode level must be >= 1");
        weight_ += m.level;
    }
}

Monomial Monomial::with(const Mode& m) const {
    if (m.level < 1) throw std::invalid_argument("creation mode level must be >= 1");
    Monomial out;
    out.modes_.reserve(modes_.size() + 1);
    auto pos = std::upper_bound(modes_.begin(), modes_.end(), m, mode_before);
    out.modes_.insert(out.modes_.end(), modes_.begin(), pos);
    out.modes_.push_back(m);
    out.modes_.insert(out.modes_.end(), pos, modes_.end());
    out.weight_ = weight_ + m.level;
    return out;
}

Monomial Monomial::without(std::size_t index) const {
    Monomial out;
    out.modes_ = modes_;
    out.weight_ = weight_ - modes_.at(index).level;
    out.modes_.erase(out.modes_.begin() + static_cast<std::ptrdiff_t>(index));
    return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    if (auto c = weight_ <=> o.weight_; c != 0) return c;
    std::size_t n = std::min(modes_.size(), o.modes_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Mode& x = modes_[i];
        const Mode& y = o.modes_[i];
        if (x.level != y.level) return y.level <=> x.level;
        if (x.field != y.field) return x.field <=> y.field;
    }
    return modes_.size() <=> o.modes_.size();
}

std::string Monomial::str(Basis b) const {
    if (modes_.empty()) return "1";
    std::string s;
    for (const auto& m : modes_) {
        s += basis_letter(b);
        s += std::to_string(m.field) + "(-" + std::to_string(m.level) + ")";
    }
    return s;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (const auto& x : m.modes()) {
        h ^= static_cast<std::size_t>(x.level * 16 + x.field);
        h *= 1099511628211ull;
    }
    return h;
}

FockState FockState::vacuum(int rank, Basis basis) {
    FockState v(rank, basis);
    v.terms_.emplace(Monomial{}, Scalar(1));
    return v;
}

FockState FockState::monomial(int rank, Basis basis, std::vector<Mode> modes, const Scalar& c) {
    for (const auto& m : modes)
        if (m.field < 1 || m.field > rank) throw std::out_of_range("field index outside rank");
    FockState v(rank, basis);
    v.add_term(Monomial(std::move(modes)), c);
    return v;
}

bool FockState::is_rational() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_rational(); });
}

Scalar FockState::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

void FockState::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void FockState::check_compatible(const FockState& o) const {
    if (rank_ != o.rank_) throw std::invalid_argument("rank mismatch");
    if (basis_ != o.basis_) throw std::invalid_argument("basis mismatch");
}

FockState& FockState::operator+=(const FockState& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

FockState& FockState::operator-=(const FockState& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

FockState& FockState::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

std::string FockState::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Scalar coef = c;
        bool neg = coef.is_rational() && sgn(coef.a()) < 0;
        if (neg) coef = -coef;
        if (!first) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        first = false;
        std::string mono = m.str(basis_);
        if (coef == Scalar(1)) {
            s += mono;
            continue;
        }
        std::string cs = coef.str();
        bool plain = cs.find_first_of(" /-") == std::string::npos;
        s += plain ? cs : "(" + cs + ")";
        if (!m.is_vacuum()) s += "*" + mono;
    }
    return s;
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("state parse error at " + std::to_string(i) + ": " + what);
    }
};

int read_int(Cursor& c) {
    c.skip();
    std::size_t start = c.i;
    if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) ++c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (start == c.i) c.fail("expected integer");
    return std::stoi(std::string(c.s.substr(start, c.i - start)));
}

}  // namespace

FockState parse_state(std::string_view text, int rank) {
    Cursor c{text};
    std::vector<std::pair<Scalar, std::vector<Mode>>> terms;
    std::optional<Basis> basis;
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            if (ch == '-') sign = -1;
            ++c.i;
        } else if (!first) {
            c.fail("expected + or -");
        }
        first = false;
        Scalar coef(1);
        bool have_coef = false;
        ch = c.peek();
        if (ch == '(') {
            std::size_t depth = 0, start = c.i;
            do {
                if (c.s[c.i] == '(') ++depth;
                if (c.s[c.i] == ')') --depth;
                ++c.i;
            } while (c.i < c.s.size() && depth > 0);
            coef = Scalar::parse(c.s.substr(start, c.i - start));
            have_coef = true;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = c.i;
            while (c.i < c.s.size() && (std::isdigit(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '/')) ++c.i;
            coef = Scalar(parse_rational(c.s.substr(start, c.i - start)));
            have_coef = true;
        } else if (ch == 'z') {
            ++c.i;
            coef = Scalar::zeta();
            have_coef = true;
        }
        if (c.peek() == '*') ++c.i;
        std::vector<Mode> modes;
        while (c.peek() == 'a' || c.peek() == 'b') {
            Basis b = c.peek() == 'a' ? Basis::alpha : Basis::beta;
            if (basis && *basis != b) c.fail("mixed alpha/beta modes");
            basis = b;
            ++c.i;
            int field = read_int(c);
            if (c.peek() != '(') c.fail("expected (");
            ++c.i;
            int lvl = read_int(c);
            if (c.peek() != ')') c.fail("expected )");
            ++c.i;
            if (lvl >= 0) c.fail("only creation modes (negative index) are allowed");
            if (field < 1 || field > rank) c.fail("field index outside rank");
            modes.push_back({field, -lvl});
        }
        if (modes.empty() && !have_coef) c.fail("empty term");
        if (sign < 0) coef = -coef;
        terms.emplace_back(coef, std::move(modes));
    }
    FockState out(rank, basis.value_or(Basis::alpha));
    for (auto& [coef, modes] : terms) out.add_term(Monomial(std::move(modes)), coef);
    return out;
}

FockState apply_creation(int field, int level, const FockState& v) {
    if (field < 1 || field > v.rank()) throw std::out_of_range("field index outside rank");
    FockState out(v.rank(), v.basis());
    for (const auto& [m, c] : v.terms()) out.add_term(m.with({field, level}), c);
    return out;
}

FockState apply_annihilation(int field, int level, const FockState& v) {
    if (field < 1 || field > v.rank()) throw std::out_of_range("field index outside rank");
    if (level < 1) throw std::invalid_argument("annihilation level must be >= 1");
    int p = partner(v.basis(), field);
    FockState out(v.rank(), v.basis());
    for (const auto& [m, c] : v.terms()) {
        const auto& ms = m.modes();
        for (std::size_t k = 0; k < ms.size(); ++k)
            if (ms[k].level == level && ms[k].field == p) out.add_term(m.without(k), c * Scalar(level));
    }
    return out;
}

Grading weight_of(const FockState& v) {
    Grading g;
    for (const auto& [m, c] : v.terms()) {
        if (g.kind == Grading::Kind::zero) {
            g.kind = Grading::Kind::homogeneous;
            g.weight = m.weight();
        } else if (g.weight != m.weight()) {
            g.kind = Grading::Kind::mixed;
            return g;
        }
    }
    return g;
}

namespace {

void partitions_into(int rank, int remaining, int max_level, int min_field, std::vector<Mode>& cur,
                     std::vector<Monomial>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int lvl = std::min(max_level, remaining); lvl >= 1; --lvl) {
        int f0 = lvl == max_level ? min_field : 1;
        for (int f = f0; f <= rank; ++f) {
            cur.push_back({f, lvl});
            partitions_into(rank, remaining - lvl, lvl, f, cur, out);
            cur.pop_back();
        }
    }
}

}  // namespace

std::vector<Monomial> enumerate_basis(int rank, int weight) {
    std::vector<Monomial> out;
    if (weight < 0) return out;
    std::vector<Mode> cur;
    partitions_into(rank, weight, weight, 1, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t colored_partition_count(int rank, int weight) {
    // coefficient of q^weight in prod (1-q^k)^(-rank)
    std::vector<mpz_class> c(static_cast<std::size_t>(weight) + 1, 0);
    c[0] = 1;
    for (int r = 0; r < rank; ++r)
        for (int k = 1; k <= weight; ++k)
            for (int n = k; n <= weight; ++n) c[n] += c[n - k];
    return c[weight].get_ui();
}

namespace {

// beta_b = sum_a M[b][a] alpha_a (up to 1/sqrt3), alpha_a = sum_b conj(M[b][a]) beta_b
Scalar beta_in_alpha(int b, int a) {
    static const Scalar z = Scalar::zeta();
    static const Scalar z2 = z * z;
    static const std::array<std::array<Scalar, 3>, 3> m{{{Scalar(1), Scalar(1), Scalar(1)},
                                                          {Scalar(1), z2, z},
                                                          {Scalar(1), z, z2}}};
    return m[b - 1][a - 1];
}

Rational inverse_power_of_three(std::size_t e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 3, e);
    return Rational(mpz_class(1), p);
}

}  // namespace

namespace detail {

FockState change_basis_any_parity(const FockState& v, Basis target) {
    if (v.rank() != 3) throw std::invalid_argument("change_basis requires rank 3");
    if (v.basis() == target) return v;
    bool to_alpha = target == Basis::alpha;
    FockState out(3, target);
    for (const auto& [m, c] : v.terms()) {
        std::map<Monomial, Scalar> acc{{Monomial{}, c}};
        for (const auto& mode : m.modes()) {
            std::map<Monomial, Scalar> next;
            for (const auto& [pm, pc] : acc)
                for (int f = 1; f <= 3; ++f) {
                    Scalar coef = to_alpha ? beta_in_alpha(mode.field, f) : beta_in_alpha(f, mode.field).conj();
                    Scalar val = pc * coef;
                    auto key = pm.with({f, mode.level});
                    auto [it, ins] = next.try_emplace(key, val);
                    if (!ins) it->second += val;
                }
            acc = std::move(next);
        }
        std::size_t d = m.degree();
        Scalar scale(inverse_power_of_three(to_alpha ? d / 2 : (d + 1) / 2));
        for (const auto& [pm, pc] : acc) out.add_term(pm, pc * scale);
    }
    return out;
}

}  // namespace detail

FockState change_basis(const FockState& v, Basis target) {
    if (v.rank() != 3) throw std::invalid_argument("change_basis requires rank 3");
    int parity = -1;
    for (const auto& [m, c] : v.terms()) {
        int p = static_cast<int>(m.degree() % 2);
        if (parity >= 0 && p != parity) throw std::invalid_argument("change_basis: mixed-parity state");
        parity = p;
    }
    return detail::change_basis_any_parity(v, target);
}

}  // namespace heisorb
