#pragma once

#include "heisorb/linalg.hpp"
#include "heisorb/symmetry.hpp"

#include <string>
#include <vector>

namespace heisorb {

enum class DKind { D6_1, D6_2, D5 };
std::string dkind_name(DKind k);
DKind parse_dkind(std::string_view s);

// The vertex-algebra versions of the classical relations, as (-1)-products of the
// beta generators. corrected=true uses the a5<->a6 fix in the fourth D6_2 product.
FockState build_D(DKind kind, const std::vector<int>& a, bool corrected = false);

struct DecompositionReport {
    DKind kind;
    std::vector<int> a;
    int weight = 0;
    std::size_t candidates = 0;
    bool feasible = false;  // D lies in the span of the lower-degree candidates
    bool unique = false;
    std::vector<std::pair<std::string, Rational>> mu;  // nonzero coefficients of one solution
};

// D6: candidates omega2_0(a,b)_{-1}omega2_0(c,d) with a+b+c+d = |a|+2 and omega2_0(a,b)
// with a+b = |a|+4. D5: omega3_0(a,b,c) with a+b+c = |a|+2.
DecompositionReport check_decomposition(DKind kind, const std::vector<int>& a, bool corrected = false);

// 6x6 matrix of raw monomial coefficients: entry (k, j) is the coefficient of
// b2(-1)b2(-1-k)b2(-1-a+k) in the j-th D5 expression.
Matrix detA_matrix(int a);
Rational detA(int a);
Rational detA_closed_form(int a);

struct SpanReport {
    std::vector<std::string> generators;
    int max_weight = 0;
    std::vector<std::size_t> spanned;
    std::vector<std::size_t> target;
    bool matched() const { return spanned == target; }
    // first weight with spanned < target, or -1
    int first_deficit() const;
};

// Graded dimensions of the strong span of gens: starting from the vacuum, close
// under u_n w with u a generator and n <= -1, weight by weight.
std::vector<std::size_t> span_dims(const std::vector<FockState>& gens, int max_weight);

// Rank of the Reynolds projector on each graded piece of the rank-3 Fock space.
std::vector<std::size_t> reynolds_dims(Group g, int max_weight);

std::vector<GeneratorId> standard_generators(Group g);

// Runs span_dims for the standard set (minus anything listed in drop) and compares
// against the Reynolds dimensions.
SpanReport span_report(Group g, int max_weight, const std::vector<GeneratorId>& drop = {});

struct PrimaryCheck {
    std::string name;
    bool erratum = false;  // true when this row is a corrected reading
    std::string note;
    int expected_weight = 0;
    bool weight_ok = false;
    bool invariant = false;
    bool primary = false;  // for omega: Virasoro axioms instead
    bool pass() const { return weight_ok && invariant && primary; }
};

enum class PrimarySet { S3, Z3, H2 };
PrimarySet parse_primary_set(std::string_view s);
std::vector<PrimaryCheck> verify_primaries(PrimarySet which);

}  // namespace heisorb
