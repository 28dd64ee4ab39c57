#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fcad/kernel.hpp"
#include "fcad/poset.hpp"

namespace fcad {

struct ContinuousConcept {
    AttrSet attrs;
    std::vector<int> witnesses;  // selection members whose bracket equals attrs

    bool operator==(const ContinuousConcept& o) const { return attrs == o.attrs; }
};

// All distinct member brackets in canonical order, with the inclusion order
// and the selection-witnessed way-below relation precomputed.
class ConceptPoset {
public:
    ConceptPoset(std::shared_ptr<const AcfContext> acf, int max_concepts);

    const AcfContext& acf() const { return *acf_; }
    std::shared_ptr<const AcfContext> acf_ptr() const { return acf_; }

    int size() const { return static_cast<int>(concepts_.size()); }
    const ContinuousConcept& concept_at(int i) const { return concepts_[static_cast<std::size_t>(i)]; }
    std::optional<int> index_of(const AttrSet& q) const;

    bool leq(int i, int j) const { return leq_[static_cast<std::size_t>(i)].test(j); }
    bool waybelow(int i, int j) const { return wb_[static_cast<std::size_t>(i)].test(j); }
    const std::vector<IndexSet>& waybelow_rows() const { return wb_; }

    std::shared_ptr<const FinitePoset> order() const { return order_; }

    // Graphviz export: nodes in canonical order, solid edges for covers of
    // inclusion, dashed edges for way-below pairs that are not covers.
    std::string to_dot() const;

private:
    std::shared_ptr<const AcfContext> acf_;
    std::vector<ContinuousConcept> concepts_;
    std::vector<IndexSet> leq_;  // leq_[i] = { j : C_i <= C_j }
    std::vector<IndexSet> wb_;   // wb_[i]  = { j : C_i << C_j } via witnesses
    std::shared_ptr<const FinitePoset> order_;
};

ConceptPoset enumerate_concepts(std::shared_ptr<const AcfContext> acf, int max_concepts = 4096);
inline ConceptPoset enumerate_concepts(const AcfContext& acf, int max_concepts = 4096) {
    return enumerate_concepts(std::make_shared<AcfContext>(acf), max_concepts);
}

// Membership in the bracket image; on finite contexts this is the whole
// story, and the literal every-finite-subset quantifier below is pinned
// against it in the tests.
bool is_continuous_concept(const AcfContext& acf, const AttrSet& q);
bool is_continuous_concept_oracle(const AcfContext& acf, const AttrSet& q, int max_bits = 12);

// q1 << q2 when some member F fits between them: q1 <= bracket(F), F <= q2.
// Both arguments must be concepts (InvalidInput otherwise).
bool way_below(const AcfContext& acf, const AttrSet& q1, const AttrSet& q2);

// A concept is compact when some member G has bracket(G) = q and G <= bracket(G).
bool is_compact(const AcfContext& acf, const AttrSet& q);

// All brackets of members inside q, deduplicated, canonical order. For a
// concept q this family is directed with union q (checked).
std::vector<AttrSet> decompose(const AcfContext& acf, const AttrSet& q);

// Union of a directed family of concepts; InvalidInput when the family is
// not directed (pairwise upper bounds inside the family) or has foreign sets.
AttrSet directed_sup(const AcfContext& acf, const std::vector<AttrSet>& family);

}  // namespace fcad
