#include "heisorb/vertex.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace heisorb {

namespace {

std::atomic<int> g_weight_cap{40};

using Terms = std::vector<std::pair<Monomial, Rational>>;
using TermsPtr = std::shared_ptr<const Terms>;

struct Key {
    Basis basis;
    Monomial u;
    int n;
    Monomial v;
    bool operator==(const Key&) const = default;
};

struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
        MonomialHash h;
        std::size_t x = h(k.u) * 31 + h(k.v);
        x ^= static_cast<std::size_t>(k.n + 1000) * 0x9e3779b97f4a7c15ull;
        return x + static_cast<std::size_t>(k.basis);
    }
};

std::shared_mutex g_cache_mutex;
std::unordered_map<Key, TermsPtr, KeyHash> g_cache;

void accumulate(std::map<Monomial, Rational>& acc, const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = acc.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) acc.erase(it);
    }
}

TermsPtr monomial_product(Basis basis, const Monomial& u, int n, const Monomial& v);

TermsPtr compute(Basis basis, const Monomial& u, int n, const Monomial& v) {
    std::map<Monomial, Rational> out;
    if (u.is_vacuum()) {
        if (n == -1) out.emplace(v, Rational(1));
    } else {
        const Mode head = u.modes().front();
        const int m = head.level;
        const int i = head.field;
        Monomial rest = u.without(0);
        const int wr = rest.weight();
        const int wv = v.weight();
        if (rest.is_vacuum()) {
            int k = n - m + 1;
            if (k <= -m) accumulate(out, v.with({i, -k}), binomial(-k - 1, m - 1));
        } else {
            int klo = n - m - wr - wv + 1;
            for (int k = -m; k >= klo; --k) {
                Rational c = binomial(-k - 1, m - 1);
                if (sgn(c) == 0) continue;
                auto inner = monomial_product(basis, rest, n - k - m, v);
                for (const auto& [mono, cc] : *inner) accumulate(out, mono.with({i, -k}), c * cc);
            }
        }
        // annihilation part: a_i(k) for k >= 1 acting on v
        int p = partner(basis, i);
        const auto& vm = v.modes();
        for (std::size_t idx = 0; idx < vm.size(); ++idx) {
            if (vm[idx].field != p) continue;
            if (idx > 0 && vm[idx - 1] == vm[idx]) continue;  // handled with multiplicity below
            int k = vm[idx].level;
            std::size_t mult = 1;
            while (idx + mult < vm.size() && vm[idx + mult] == vm[idx]) ++mult;
            Rational c = binomial(-k - 1, m - 1) * Rational(static_cast<long>(k * static_cast<int>(mult)));
            auto inner = monomial_product(basis, rest, n - k - m, v.without(idx));
            for (const auto& [mono, cc] : *inner) accumulate(out, mono, c * cc);
        }
    }
    auto res = std::make_shared<Terms>();
    res->reserve(out.size());
    for (auto& [mono, c] : out) res->emplace_back(mono, std::move(c));
    return res;
}

TermsPtr monomial_product(Basis basis, const Monomial& u, int n, const Monomial& v) {
    static const TermsPtr empty = std::make_shared<Terms>();
    int target = u.weight() + v.weight() - n - 1;
    if (target < 0) return empty;
    if (target > g_weight_cap.load()) throw std::length_error("product exceeds weight cap");
    Key key{basis, u, n, v};
    {
        std::shared_lock lock(g_cache_mutex);
        auto it = g_cache.find(key);
        if (it != g_cache.end()) return it->second;
    }
    TermsPtr res = compute(basis, u, n, v);
    std::unique_lock lock(g_cache_mutex);
    g_cache.insert_or_assign(key, res);
    return res;
}

int max_weight(const FockState& v) {
    int w = 0;
    for (const auto& [m, c] : v.terms()) w = std::max(w, m.weight());
    return w;
}

void require_same_space(const FockState& a, const FockState& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
    if (a.basis() != b.basis()) throw std::invalid_argument("basis mismatch");
}

Rational factorial(int j) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(j));
    return Rational(f);
}

}  // namespace

void set_weight_cap(int cap) { g_weight_cap = cap; }
int weight_cap() { return g_weight_cap; }

Rational binomial(long n, long k) {
    if (k < 0) return Rational(0);
    mpz_class r;
    mpz_class nn(n);
    mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(r);
}

std::size_t product_cache_size() {
    std::shared_lock lock(g_cache_mutex);
    return g_cache.size();
}

void clear_product_cache() {
    std::unique_lock lock(g_cache_mutex);
    g_cache.clear();
}

FockState nth_product(const FockState& u, int n, const FockState& v) {
    require_same_space(u, v);
    FockState out(u.rank(), u.basis());
    for (const auto& [um, uc] : u.terms())
        for (const auto& [vm, vc] : v.terms()) {
            auto terms = monomial_product(u.basis(), um, n, vm);
            if (terms->empty()) continue;
            Scalar c = uc * vc;
            for (const auto& [mono, r] : *terms) out.add_term(mono, c * Scalar(r));
        }
    return out;
}

FockState on_vacuum(const FockState& s, int n) { return nth_product(s, n, FockState::vacuum(s.rank(), s.basis())); }

FockState nop(const FockState& u, const FockState& v) { return nth_product(u, -1, v); }

FockState translate(const FockState& v) {
    FockState out(v.rank(), v.basis());
    for (const auto& [m, c] : v.terms()) {
        const auto& ms = m.modes();
        for (std::size_t k = 0; k < ms.size(); ++k) {
            Mode up{ms[k].field, ms[k].level + 1};
            out.add_term(m.without(k).with(up), c * Scalar(ms[k].level));
        }
    }
    return out;
}

FockState conformal_vector(int rank, Basis basis) {
    FockState om(rank, basis);
    Scalar half(make_rational(1, 2));
    if (basis == Basis::alpha) {
        for (int i = 1; i <= rank; ++i) om += FockState::monomial(rank, basis, {{i, 1}, {i, 1}}, half);
    } else {
        if (rank != 3) throw std::invalid_argument("beta basis is rank 3 only");
        om += FockState::monomial(3, basis, {{1, 1}, {1, 1}}, half);
        om += FockState::monomial(3, basis, {{2, 1}, {3, 1}});
    }
    return om;
}

FockState virasoro_mode(int k, const FockState& v) {
    return nth_product(conformal_vector(v.rank(), v.basis()), k + 1, v);
}

bool is_primary(const FockState& v) {
    if (!weight_of(v).homogeneous()) throw std::invalid_argument("is_primary needs a homogeneous state");
    return virasoro_mode(1, v).is_zero() && virasoro_mode(2, v).is_zero();
}

FockState check_skew_symmetry(const FockState& u, const FockState& v, int n) {
    require_same_space(u, v);
    FockState res = nth_product(u, n, v);
    int jmax = max_weight(u) + max_weight(v) - n;
    for (int j = 0; j <= jmax; ++j) {
        FockState t = nth_product(v, n + j, u);
        for (int s = 0; s < j; ++s) t = translate(t);
        Rational c = Rational(((n + j + 1) % 2 == 0) ? 1 : -1) / factorial(j);
        res -= t * Scalar(c);
    }
    return res;
}

FockState check_borcherds(const FockState& u, const FockState& v, const FockState& w, int p, int q, int r) {
    require_same_space(u, v);
    require_same_space(v, w);
    int wu = max_weight(u), wv = max_weight(v), ww = max_weight(w);
    FockState lhs(u.rank(), u.basis());
    for (int i = 0; r + i <= wu + wv - 1; ++i) {
        Rational c = binomial(p, i);
        if (sgn(c) == 0) continue;
        lhs += nth_product(nth_product(u, r + i, v), p + q - i, w) * Scalar(c);
    }
    FockState rhs(u.rank(), u.basis());
    int sign_r = (r % 2 == 0) ? 1 : -1;
    for (int i = 0; q + i <= wv + ww - 1 || p + i <= wu + ww - 1; ++i) {
        Rational c = binomial(r, i);
        if (sgn(c) == 0) continue;
        if (i % 2) c = -c;
        FockState t(u.rank(), u.basis());
        if (q + i <= wv + ww - 1) t += nth_product(u, p + r - i, nth_product(v, q + i, w));
        if (p + i <= wu + ww - 1) t -= nth_product(v, q + r - i, nth_product(u, p + i, w)) * Scalar(sign_r);
        rhs += t * Scalar(c);
    }
    return lhs - rhs;
}

namespace {

FockState random_state(std::mt19937_64& rng, Basis basis, int cap) {
    std::uniform_int_distribution<int> wd(1, cap), cd(-3, 3), nd(1, 2);
    int w = wd(rng);
    auto mons = enumerate_basis(3, w);
    std::uniform_int_distribution<std::size_t> md(0, mons.size() - 1);
    FockState v(3, basis);
    for (int t = nd(rng); t > 0; --t) {
        int c = cd(rng);
        v.add_term(mons[md(rng)], Scalar(Rational(c == 0 ? 1 : c)));
    }
    if (v.is_zero()) v.add_term(mons.front(), Scalar(1));
    return v;
}

}  // namespace

AxiomSuiteReport random_axiom_suite(std::uint64_t seed, int instances, int cap) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(-2, 2), coin(0, 1);
    AxiomSuiteReport rep;
    for (int k = 0; k < instances; ++k) {
        Basis b = coin(rng) ? Basis::beta : Basis::alpha;
        FockState u = random_state(rng, b, cap), v = random_state(rng, b, cap), w = random_state(rng, b, cap);
        std::uniform_int_distribution<int> nd(-2, max_weight(u) + max_weight(v));
        int n = nd(rng), p = small(rng), q = small(rng), r = small(rng);
        ++rep.instances;
        if (!check_skew_symmetry(u, v, n).is_zero()) {
            ++rep.skew_failures;
            rep.failures.push_back("skew n=" + std::to_string(n) + " u=" + u.str() + " v=" + v.str());
        }
        if (!check_borcherds(u, v, w, p, q, r).is_zero()) {
            ++rep.borcherds_failures;
            rep.failures.push_back("borcherds p,q,r=" + std::to_string(p) + "," + std::to_string(q) + "," +
                                   std::to_string(r) + " u=" + u.str() + " v=" + v.str() + " w=" + w.str());
        }
    }
    return rep;
}

}  // namespace heisorb
