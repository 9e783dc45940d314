#pragma once

#include "heisorb/fock.hpp"

#include <optional>
#include <string>
#include <vector>

namespace heisorb {

struct Term {
    Rational coef;
    FockState state;
    std::string label;
};

enum class RelationKind {
    identity,    // lhs == sum coef * state
    membership,  // lhs lies in the span of the states; coefs unused
};

struct RelationDef {
    std::string id;     // e.g. "big_deriv_3" or "z3_cubic_ab(2,4)"
    std::string suite;  // "s3" or "z3"
    std::string about;  // one-line description
    RelationKind kind = RelationKind::identity;
    FockState lhs;
    std::vector<Term> terms;                     // as printed
    std::optional<std::vector<Term>> corrected;  // our reading when the printed one fails
    std::string correction;                      // what changed
    std::optional<FockState> control;            // membership only: a target that should NOT lie in the span
};

enum class Verdict { pass, erratum, fail, vacuous };
std::string verdict_name(Verdict v);

struct FitDiagnostics {
    bool ran = false;
    bool feasible = false;
    bool unique = false;
    std::vector<Rational> coefs;            // fitted coefficients over the printed terms
    std::optional<Rational> global_factor;  // printed = factor * fitted, when uniform
    std::vector<std::string> mismatched;    // labels whose printed coefficient differs
};

struct RelationResult {
    std::string id;
    std::string suite;
    std::string about;
    Verdict verdict = Verdict::fail;
    bool literal_ok = false;
    std::size_t residual_terms = 0;
    std::optional<bool> corrected_ok;
    std::string correction;
    std::optional<bool> control_in_span;
    FitDiagnostics fit;
};

// All relations of one suite ("s3", "z3") or both ("all").
std::vector<std::string> relation_ids(const std::string& suite = "all");
RelationDef relation(const std::string& id);
RelationResult verify_relation(const RelationDef& def);
RelationResult verify_relation(const std::string& id);

}  // namespace heisorb
