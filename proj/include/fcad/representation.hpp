#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fcad/concepts.hpp"
#include "fcad/kernel.hpp"
#include "fcad/poset.hpp"

namespace fcad {

// The canonical context of a finite poset d: objects and attributes are the
// elements of d (every element is a basis element on a finite poset, since
// all are compact), incidence is attribute-below-object, the kernel sends a
// closed set to the basis elements way below one of its members, and the
// selection keeps exactly the finite sets containing their own join.
struct RepContext {
    FinitePoset domain;
    std::vector<int> basis;                    // always 0..n-1
    std::vector<IndexSet> domain_waybelow;     // literal way-below matrix of the domain
    std::shared_ptr<const AcfContext> acf;
};

// Builds and validates the representation context. |d| <= 16 (SizeLimit);
// d nonempty (InvalidInput). A validation failure here would contradict the
// construction and raises Validation.
RepContext rep(const FinitePoset& d);

// Same, with an explicit basis; anything short of the full element list is
// rejected, because finite posets have no smaller basis.
RepContext rep(const FinitePoset& d, const std::vector<int>& basis);

// Characterization of concepts inside the representation context: q is
// down-closed under way-below within the basis, and every finite subset of
// q has a member of q way above all of it.
bool check_r1_r2(const RepContext& rc, const AttrSet& q);

// x  |->  basis elements way below x (an attribute set).
AttrSet iso_forward(const RepContext& rc, int x);

// concept |-> its join in the domain; InvalidInput for non-concepts.
int iso_backward(const RepContext& rc, const AttrSet& q);

struct RoundtripReport {
    bool ok = true;
    std::string detail;
};

// Checks that iso_forward and iso_backward are mutually inverse and order
// preserving, and that an order isomorphism between the domain and the
// concept poset exists.
RoundtripReport verify_roundtrip(const RepContext& rc);

// Every selection member's cached bracket equals the closed form: basis
// elements way below the member's own join.
RoundtripReport verify_rep_brackets(const RepContext& rc);

}  // namespace fcad
