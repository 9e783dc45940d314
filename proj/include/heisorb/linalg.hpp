#pragma once

#include "heisorb/fock.hpp"

#include <map>
#include <optional>
#include <vector>

namespace heisorb {

using Matrix = std::vector<std::vector<Rational>>;

// Fraction-free (Bareiss) elimination on the integer-scaled rows.
std::size_t rank(const Matrix& m);
Rational determinant(const Matrix& m);

struct Solution {
    bool feasible = false;
    bool unique = false;
    std::vector<Rational> x;  // one particular solution (free variables set to 0)
};

// Solves m x = b exactly.
Solution solve(const Matrix& m, const std::vector<Rational>& b);

// Rows indexed by the union of monomials occurring in the states, one column per state.
// All coefficients must be rational.
struct StateMatrix {
    std::vector<Monomial> rows;
    Matrix m;
};
StateMatrix columns_of(const std::vector<FockState>& states, const FockState* extra = nullptr);

// Writes target as a combination of the given states, if possible.
Solution express(const FockState& target, const std::vector<FockState>& states);

// Keeps a reduced echelon set of rational states; insert() reports whether the state was new.
class EchelonSet {
public:
    bool insert(const FockState& v);
    std::size_t size() const { return rows_.size(); }

private:
    using Sparse = std::map<Monomial, Rational>;
    void reduce(Sparse& v) const;
    std::map<Monomial, Sparse> rows_;  // pivot monomial -> row with pivot coefficient 1
};

}  // namespace heisorb
