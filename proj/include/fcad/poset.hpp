#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fcad/error.hpp"
#include "fcad/index_set.hpp"

namespace fcad {

// Finite partial order over labelled elements. The full <= relation is kept
// as up-set and down-set rows; construction validates reflexivity,
// antisymmetry and transitivity.
class FinitePoset {
public:
    FinitePoset() = default;

    static FinitePoset from_leq(std::vector<std::string> elements,
                                const std::vector<std::vector<bool>>& leq);
    static FinitePoset from_leq_pairs(std::vector<std::string> elements,
                                      const std::vector<std::pair<int, int>>& leq_pairs);
    // Covers (or any subrelation): reflexive-transitive closure is taken
    // first, then the result is validated as a partial order.
    static FinitePoset from_covers(std::vector<std::string> elements,
                                   const std::vector<std::pair<int, int>>& covers);

    static FinitePoset chain(int n);      // 0 < 1 < ... < n-1
    static FinitePoset antichain(int n);
    static FinitePoset diamond();         // bot < a,b < top

    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& label(int i) const { return elements_[static_cast<std::size_t>(i)]; }

    bool leq(int a, int b) const { return up_[static_cast<std::size_t>(a)].test(b); }
    const IndexSet& up_set(int i) const { return up_[static_cast<std::size_t>(i)]; }
    const IndexSet& down_set(int i) const { return down_[static_cast<std::size_t>(i)]; }

    IndexSet down_closure(const IndexSet& s) const;
    IndexSet upper_bounds(const IndexSet& s) const;  // of all members; full set for s = {}
    IndexSet lower_bounds(const IndexSet& s) const;

    // Least upper / greatest lower bound, when they exist.
    std::optional<int> sup_of(const IndexSet& s) const;
    std::optional<int> inf_of(const IndexSet& s) const;

    // Greatest element of s itself, if s has one.
    std::optional<int> max_of(const IndexSet& s) const;

    // Nonempty and every pair has an upper bound inside s.
    bool is_directed(const IndexSet& s) const;

    std::optional<int> least_element() const;
    std::optional<int> greatest_element() const;

    std::vector<std::pair<int, int>> cover_pairs() const;
    std::vector<std::pair<int, int>> leq_pairs() const;  // all pairs, reflexive included

    bool operator==(const FinitePoset& o) const {
        return elements_ == o.elements_ && up_ == o.up_;
    }

private:
    std::vector<std::string> elements_;
    std::vector<IndexSet> up_;    // up_[i] = { j : i <= j }
    std::vector<IndexSet> down_;  // down_[i] = { j : j <= i }

    static FinitePoset build_checked(std::vector<std::string> elements, std::vector<IndexSet> up);
};

// x way-below y by the literal definition: every directed subset with a
// least upper bound above y contains an element above x. Enumerates all
// directed subsets; SizeLimit above max_size unless allow_shortcut is set,
// in which case <= is used (they agree on finite posets, which the
// enumeration itself confirms in the tests).
bool way_below_bruteforce(const FinitePoset& p, int x, int y,
                          int max_size = 12, bool allow_shortcut = false);

// Whole relation at once; rows[x].test(y) means x way-below y.
std::vector<IndexSet> waybelow_matrix_bruteforce(const FinitePoset& p,
                                                 int max_size = 12, bool allow_shortcut = false);

// Is b a basis: for every x, b intersected with the way-below down-arrow of
// x must be directed with least upper bound x.
bool is_basis(const FinitePoset& p, const IndexSet& b, const std::vector<IndexSet>& waybelow);

enum class EmptySetBoundConvention {
    BoundedIncludesEmpty,  // empty set counts as bounded above, so bounded
                           // completeness forces a least element
    BoundedExcludesEmpty,
};

struct DomainClassification {
    bool is_dcpo = false;
    bool is_continuous = false;
    bool is_algebraic = false;
    bool is_pointed = false;
    bool has_top = false;
    bool is_bounded_complete = false;
    bool is_semilattice = false;
    bool waybelow_multiplicative = false;
    bool is_lattice = false;
    bool is_complete_lattice = false;
    EmptySetBoundConvention convention = EmptySetBoundConvention::BoundedIncludesEmpty;
    std::string to_string() const;
};

// Literal checks over all subsets; |p| <= 16 enforced.
DomainClassification domain_classify(
    const FinitePoset& p,
    EmptySetBoundConvention conv = EmptySetBoundConvention::BoundedIncludesEmpty);

// Standalone lattice tests without the classification size bound.
bool is_lattice(const FinitePoset& p);
bool is_complete_lattice(const FinitePoset& p);

// For every finite m and y with m << y pointwise there is z with
// m << z << y. Uses the brute-force way-below relation.
bool interpolation_check(const FinitePoset& p, int max_size = 12);

struct MonotoneMap {
    std::shared_ptr<const FinitePoset> source;
    std::shared_ptr<const FinitePoset> target;
    std::vector<int> map;  // element index -> element index

    int operator()(int i) const { return map[static_cast<std::size_t>(i)]; }
    bool operator==(const MonotoneMap& o) const { return map == o.map; }
};

bool is_monotone(const FinitePoset& p, const FinitePoset& q, const std::vector<int>& f);
// f preserves least upper bounds of directed subsets (checked literally).
bool preserves_directed_sups(const FinitePoset& p, const FinitePoset& q, const std::vector<int>& f);

// All monotone maps p -> q, in lexicographic order of the value vector.
// Refuses when |q|^|p| exceeds candidate_bound. When verify_scott is set
// (and |p| <= 12), every emitted map is re-checked to preserve directed sups.
std::vector<MonotoneMap> enumerate_monotone_maps(const std::shared_ptr<const FinitePoset>& p,
                                                 const std::shared_ptr<const FinitePoset>& q,
                                                 long long candidate_bound = 1000000,
                                                 bool verify_scott = true);

// Backtracking search for an order isomorphism.
std::optional<MonotoneMap> find_isomorphism(const std::shared_ptr<const FinitePoset>& p,
                                            const std::shared_ptr<const FinitePoset>& q);

// All posets with 1..max_n elements, one representative per isomorphism
// class, generated from triangular relations and deduplicated by canonical
// form. max_n <= 7 enforced (counts grow fast).
std::vector<FinitePoset> poset_catalog(int max_n);

}  // namespace fcad
