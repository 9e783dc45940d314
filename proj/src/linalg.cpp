#include "heisorb/linalg.hpp"

#include <stdexcept>

namespace heisorb {

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Scales each row to integers; returns the product of the scale factors.
Rational integerize(const Matrix& m, IntMatrix& out) {
    Rational scale(1);
    out.assign(m.size(), {});
    for (std::size_t i = 0; i < m.size(); ++i) {
        mpz_class l = 1;
        for (const auto& x : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        out[i].reserve(m[i].size());
        for (const auto& x : m[i]) out[i].push_back(x.get_num() * (l / x.get_den()));
        scale *= Rational(l);
    }
    return scale;
}

// In-place Bareiss; returns rank and the determinant sign from row swaps.
std::size_t bareiss(IntMatrix& a, int& sign) {
    sign = 1;
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            std::swap(a[piv], a[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[i][j] * a[r][c] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

}  // namespace

std::size_t rank(const Matrix& m) {
    if (m.empty()) return 0;
    IntMatrix a;
    integerize(m, a);
    int sign = 1;
    return bareiss(a, sign);
}

Rational determinant(const Matrix& m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return Rational(1);
    IntMatrix a;
    Rational scale = integerize(m, a);
    int sign = 1;
    if (bareiss(a, sign) < n) return Rational(0);
    // with full rank and no skipped columns the last pivot is the determinant
    Rational d(a[n - 1][n - 1]);
    d *= sign;
    d /= scale;
    return d;
}

Solution solve(const Matrix& m, const std::vector<Rational>& b) {
    std::size_t rows = m.size();
    if (b.size() != rows) throw std::invalid_argument("right-hand side length mismatch");
    std::size_t cols = rows ? m[0].size() : 0;
    Matrix a = m;
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        Rational inv = 1 / a[r][c];
        for (std::size_t j = c; j <= cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(a[i][c]) == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j <= cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    Solution s;
    for (std::size_t i = r; i < rows; ++i)
        if (sgn(a[i][cols]) != 0) return s;
    s.feasible = true;
    s.unique = r == cols;
    s.x.assign(cols, Rational(0));
    for (std::size_t i = 0; i < r; ++i) s.x[pivot_cols[i]] = a[i][cols];
    return s;
}

StateMatrix columns_of(const std::vector<FockState>& states, const FockState* extra) {
    std::map<Monomial, std::size_t> index;
    auto collect = [&](const FockState& v) {
        for (const auto& [mono, c] : v.terms()) {
            if (!c.is_rational()) throw std::invalid_argument("rational coefficients required");
            index.try_emplace(mono, 0);
        }
    };
    for (const auto& v : states) collect(v);
    if (extra) collect(*extra);
    StateMatrix out;
    std::size_t k = 0;
    for (auto& [mono, i] : index) {
        i = k++;
        out.rows.push_back(mono);
    }
    out.m.assign(out.rows.size(), std::vector<Rational>(states.size(), Rational(0)));
    for (std::size_t j = 0; j < states.size(); ++j)
        for (const auto& [mono, c] : states[j].terms()) out.m[index[mono]][j] = c.a();
    return out;
}

Solution express(const FockState& target, const std::vector<FockState>& states) {
    StateMatrix sm = columns_of(states, &target);
    std::vector<Rational> b;
    b.reserve(sm.rows.size());
    for (const auto& mono : sm.rows) b.push_back(target.coefficient(mono).a());
    if (states.empty()) {
        Solution s;
        s.feasible = target.is_zero();
        s.unique = true;
        return s;
    }
    return solve(sm.m, b);
}

void EchelonSet::reduce(Sparse& v) const {
    // eliminate pivots from the largest monomial downwards; rows are fully reduced
    for (auto it = v.rbegin(); it != v.rend();) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) {
            ++it;
            continue;
        }
        Rational f = it->second;
        Monomial key = it->first;
        for (const auto& [mono, c] : row->second) {
            auto [pos, inserted] = v.try_emplace(mono, -f * c);
            if (!inserted) {
                pos->second -= f * c;
                if (sgn(pos->second) == 0) v.erase(pos);
            }
        }
        it = std::make_reverse_iterator(v.lower_bound(key));
    }
}

bool EchelonSet::insert(const FockState& state) {
    Sparse v;
    for (const auto& [mono, c] : state.terms()) {
        if (!c.is_rational()) throw std::invalid_argument("rational coefficients required");
        v.emplace(mono, c.a());
    }
    reduce(v);
    if (v.empty()) return false;
    Monomial pivot = v.rbegin()->first;
    Rational inv = 1 / v.rbegin()->second;
    for (auto& [mono, c] : v) c *= inv;
    // keep existing rows free of the new pivot
    for (auto& [p, row] : rows_) {
        auto hit = row.find(pivot);
        if (hit == row.end()) continue;
        Rational f = hit->second;
        for (const auto& [mono, c] : v) {
            auto [pos, inserted] = row.try_emplace(mono, -f * c);
            if (!inserted) {
                pos->second -= f * c;
                if (sgn(pos->second) == 0) row.erase(pos);
            }
        }
    }
    rows_.emplace(pivot, std::move(v));
    return true;
}

}  // namespace heisorb
