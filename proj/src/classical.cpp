#include "heisorb/classical.hpp"

#include <algorithm>
#include <stdexcept>

namespace heisorb {

CPoly CPoly::constant(const Scalar& c) {
    CPoly p;
    p.add({}, c);
    return p;
}

CPoly CPoly::variable(Var v) {
    CPoly p;
    p.add({v}, Scalar(1));
    return p;
}

void CPoly::add(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CPoly& CPoly::operator+=(const CPoly& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
    CPoly out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            CPoly::Key k;
            k.reserve(ka.size() + kb.size());
            std::merge(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(k));
            out.add(k, ca * cb);
        }
    return out;
}

CPoly operator*(CPoly a, const Scalar& c) {
    if (c.is_zero()) return CPoly();
    for (auto& [k, x] : a.terms_) x *= c;
    return a;
}

std::string CPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        s += "(" + c.str() + ")";
        for (const auto& v : k) s += "*" + std::string(1, v.letter) + std::to_string(v.field) + "(" + std::to_string(v.index) + ")";
    }
    return s;
}

CPoly polarization(int n, const std::vector<int>& m) {
    if (m.empty()) throw std::invalid_argument("polarization needs at least one index");
    CPoly out;
    for (int i = 1; i <= n; ++i) {
        CPoly term = CPoly::constant(Scalar(1));
        for (int a : m) term = term * CPoly::variable({'x', i, a});
        out += term;
    }
    return out;
}

namespace {
CPoly y(int f, int a) { return CPoly::variable({'y', f, a}); }
}  // namespace

CPoly q1_0(int a) { return y(1, a); }
CPoly q2_0(int a, int b) { return y(2, a) * y(3, b) + y(3, a) * y(2, b); }
CPoly q3_0(int a, int b, int c) { return y(2, a) * y(2, b) * y(2, c) + y(3, a) * y(3, b) * y(3, c); }

std::string relation_name(ClassicalRelation r) {
    switch (r) {
        case ClassicalRelation::D6C1: return "D6C1";
        case ClassicalRelation::D6C2: return "D6C2";
        case ClassicalRelation::D5C: return "D5C";
    }
    return "?";
}

CPoly classical_relation(ClassicalRelation r, const std::vector<int>& a, bool corrected) {
    std::size_t need = r == ClassicalRelation::D5C ? 5 : 6;
    if (a.size() != need) throw std::invalid_argument("arity mismatch for " + relation_name(r));
    for (int x : a)
        if (x < 0) throw std::invalid_argument("negative multi-index entry");
    auto A = [&](int i) { return a[static_cast<std::size_t>(i - 1)]; };
    auto Q2 = [&](int i, int j) { return q2_0(A(i), A(j)); };
    auto Q3 = [&](int i, int j, int k) { return q3_0(A(i), A(j), A(k)); };
    Scalar half(make_rational(1, 2));
    switch (r) {
        case ClassicalRelation::D6C1:
            return Q2(1, 2) * Q2(3, 4) * Q2(5, 6) - Q2(1, 2) * Q2(3, 6) * Q2(4, 5) + Q2(1, 4) * Q2(2, 6) * Q2(3, 5) -
                   Q2(1, 4) * Q2(2, 3) * Q2(5, 6) + Q2(1, 5) * Q2(2, 4) * Q2(3, 6) - Q2(1, 5) * Q2(2, 6) * Q2(3, 4) +
                   Q2(1, 6) * Q2(2, 3) * Q2(4, 5) - Q2(1, 6) * Q2(2, 4) * Q2(3, 5);
        case ClassicalRelation::D6C2: {
            CPoly fourth = corrected ? Q2(1, 4) * Q2(2, 6) * Q2(3, 5) : Q2(1, 4) * Q2(2, 5) * Q2(3, 6);
            return Q3(1, 2, 3) * Q3(4, 5, 6) - Q3(1, 2, 4) * Q3(3, 5, 6) + Q2(1, 3) * Q2(2, 6) * Q2(4, 5) * half -
                   fourth * half + Q2(1, 5) * Q2(2, 3) * Q2(4, 6) * half - Q2(1, 5) * Q2(2, 4) * Q2(3, 6) * half;
        }
        case ClassicalRelation::D5C:
            return Q2(1, 2) * Q3(3, 4, 5) - Q2(1, 5) * Q3(2, 3, 4) - Q2(2, 5) * Q3(1, 3, 4) - Q2(3, 4) * Q3(1, 2, 5) +
                   Q2(3, 5) * Q3(1, 2, 4) + Q2(4, 5) * Q3(1, 2, 3);
    }
    throw std::logic_error("unhandled relation");
}

}  // namespace heisorb
