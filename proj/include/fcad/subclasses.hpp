#pragma once

#include <string>

#include "fcad/concepts.hpp"

namespace fcad {

struct ConditionResult {
    bool pass = true;
    std::string counterexample;
};

// Syntactic conditions on a validated context. Quantifiers over selection
// members collapse to quantifiers over their brackets wherever the
// hypothesis and conclusion only mention brackets; that keeps the checks
// polynomial in the number of concepts instead of members to the fourth.

// Algebraicity: every member F2 inside a bracket has a witness F with
// F2 <= bracket(F), F <= bracket(F) and F inside the outer bracket.
ConditionResult check_ad(const AcfContext& acf);

// Some member sits inside every bracket.
ConditionResult check_pointed(const AcfContext& acf);

// The union of all brackets is itself a concept.
ConditionResult check_topped(const AcfContext& acf);

// Every nonempty subset of a bracket is a member.
ConditionResult check_bc(const AcfContext& acf);

// The two multiplicativity conditions; ss1 quantifies finite subsets of
// bracket intersections (the empty subset included), ss2 interpolates
// between bracket intersections.
struct SsResult {
    ConditionResult ss1;
    ConditionResult ss2;
    bool pass() const { return ss1.pass && ss2.pass; }
};
SsResult check_ss(const AcfContext& acf, int max_bits = 16);

// All syntactic checks next to the order-theoretic classification of the
// concept poset.
struct SubclassReport {
    ConditionResult ad, pointed, topped, bc;
    SsResult ss;
    DomainClassification semantic;
    std::string to_string() const;
};

SubclassReport classify_acf(const AcfContext& acf);

}  // namespace fcad
