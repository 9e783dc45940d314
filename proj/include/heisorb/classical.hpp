#pragma once

#include "heisorb/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace heisorb {

// Commuting variable x_field(index) or y_field(index).
struct Var {
    char letter = 'x';
    int field = 1;
    int index = 0;
    auto operator<=>(const Var&) const = default;
};

class CPoly {
public:
    using Key = std::vector<Var>;  // sorted multiset

    CPoly() = default;
    static CPoly constant(const Scalar& c);
    static CPoly variable(Var v);

    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    CPoly& operator+=(const CPoly& o);
    CPoly& operator-=(const CPoly& o);
    friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
    friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
    friend CPoly operator*(const CPoly& a, const CPoly& b);
    friend CPoly operator*(CPoly a, const Scalar& c);
    bool operator==(const CPoly&) const = default;

    std::string str() const;

private:
    void add(const Key& k, const Scalar& c);
    std::map<Key, Scalar> terms_;
};

// q_k(m_1..m_k) = sum_i x_i(m_1)...x_i(m_k) over n fields
CPoly polarization(int n, const std::vector<int>& m);

CPoly q1_0(int a);
CPoly q2_0(int a, int b);
CPoly q3_0(int a, int b, int c);

enum class ClassicalRelation { D6C1, D6C2, D5C };
std::string relation_name(ClassicalRelation r);

// literal: the displayed sign/index pattern. corrected=true swaps a5,a6 in the
// fourth product of the D6C2 display; the other two families have no alternative.
CPoly classical_relation(ClassicalRelation r, const std::vector<int>& a, bool corrected = false);

}  // namespace heisorb
