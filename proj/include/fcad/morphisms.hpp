#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fcad/concepts.hpp"
#include "fcad/representation.hpp"
#include "fcad/subclasses.hpp"

namespace fcad {

// A morphism between two contexts: one image set of target attributes per
// source selection member. Stored as a total map; validity is a separate
// check so that deliberately broken relations can be inspected.
class FMorphism {
public:
    FMorphism(std::shared_ptr<const AcfContext> source,
              std::shared_ptr<const AcfContext> target,
              std::vector<AttrSet> images);

    const AcfContext& source() const { return *src_; }
    const AcfContext& target() const { return *dst_; }
    std::shared_ptr<const AcfContext> source_ptr() const { return src_; }
    std::shared_ptr<const AcfContext> target_ptr() const { return dst_; }

    const AttrSet& image(int member) const { return img_[static_cast<std::size_t>(member)]; }
    const std::vector<AttrSet>& images() const { return img_; }

    // Expanded (member index, target attribute) pairs, sorted.
    std::vector<std::pair<int, int>> pairs() const;

    // Same contexts and same pair set; with total image maps that is image
    // equality member by member.
    bool operator==(const FMorphism& o) const {
        return *src_ == *o.src_ && *dst_ == *o.dst_ && img_ == o.img_;
    }

private:
    std::shared_ptr<const AcfContext> src_;
    std::shared_ptr<const AcfContext> dst_;
    std::vector<AttrSet> img_;
};

struct MorphismReport {
    // ar1: a target member inside an image pulls its whole bracket in.
    // ar2: images are monotone along source bracket containment.
    // ar3: every finite subset of an image sits inside a target member that
    //      is itself inside the image.
    // ar4: pointwise interpolation through a refining source member.
    // ar5: the combined interpolation form; with ar1 and ar2 in force it
    //      must agree with ar3 and ar4 together, and `consistent` records
    //      that agreement.
    ConditionResult ar1, ar2, ar3, ar4, ar5;
    ConditionResult consistent;
    bool sampled = false;  // some image exceeded the exhaustive subset bound

    bool pass() const { return ar1.pass && ar2.pass && ar3.pass && ar4.pass; }
    std::string to_string() const;
};

// Subset quantifiers run exhaustively for images of at most max_bits
// attributes and fall back to fixed-seed sampling above that.
MorphismReport validate(const FMorphism& h, int max_bits = 12, int samples = 512);

// Union of the images of all members contained in x.
AttrSet apply(const FMorphism& h, const AttrSet& x);

// A function between two concept posets, stored by concept index.
struct ConceptFunction {
    std::shared_ptr<const ConceptPoset> source;
    std::shared_ptr<const ConceptPoset> target;
    std::vector<int> map;  // source concept index -> target concept index

    int operator()(int i) const { return map[static_cast<std::size_t>(i)]; }
    bool operator==(const ConceptFunction& o) const;
};

bool is_monotone(const ConceptFunction& f);

// The function a morphism induces on concepts; Validation if some concept's
// image fails to be a concept of the target (cannot happen for valid h).
ConceptFunction to_function(const FMorphism& h);

// The morphism a monotone concept function induces: each member maps to the
// image of its bracket. Non-monotone input is rejected (Validation).
FMorphism from_function(const ConceptFunction& f);

// Relational composite: member F maps to apply(h2, image of F under h1).
// InvalidInput when h1's target and h2's source differ.
FMorphism compose(const FMorphism& h2, const FMorphism& h1);

// Each member maps to its own bracket.
FMorphism identity_morphism(std::shared_ptr<const AcfContext> acf);

// A monotone map f between the underlying posets induces a morphism between
// the representation contexts: member F maps to the basis elements way
// below f(join F). InvalidInput if f does not connect the two domains,
// Validation if it is not monotone.
FMorphism from_scott(const RepContext& rc_d, const RepContext& rc_e, const MonotoneMap& f);

// The reverse direction: x maps to the join of apply(g, approximants of x).
// InvalidInput if g does not connect the two contexts; Validation if some
// image family has no least upper bound (valid g always has one).
MonotoneMap to_scott(const RepContext& rc_d, const RepContext& rc_e, const FMorphism& g);

// Two facts about valid morphisms, exposed for the property tests:
// refinement: a finite set is under an image iff it is under the image of
// some member refining the bracket; monotone_in_member: images grow along
// plain member inclusion.
struct MorphismProps {
    ConditionResult refinement;
    ConditionResult monotone_in_member;
    bool pass() const { return refinement.pass && monotone_in_member.pass; }
};

MorphismProps check_morphism_props(const FMorphism& h, int max_bits = 12, int samples = 256);

// Pointwise identity for representation contexts: the approximants of f(x)
// are exactly the approximants of images of approximants of x.
ConditionResult check_image_approximants(const RepContext& rc_d, const RepContext& rc_e,
                                         const MonotoneMap& f);

struct FunctorReport {
    ConditionResult identity_law;     // identity morphisms induce identity functions
    ConditionResult composition_law;  // to_function distributes over compose; associativity
    ConditionResult homset_bijection; // from_function/to_function are mutually inverse
    bool pass() const { return identity_law.pass && composition_law.pass && homset_bijection.pass; }
    std::string to_string() const;
};

// Instance-level category laws over a sample of contexts. Hom-sets are
// enumerated through monotone concept maps (never raw relations);
// composition and associativity are checked on evenly spaced samples of at
// most max_maps_per_hom maps per hom-set.
FunctorReport functor_check(const std::vector<std::shared_ptr<const AcfContext>>& objects,
                            long long hom_bound = 1000000, int max_maps_per_hom = 6);

}  // namespace fcad
