#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fcad/error.hpp"
#include "fcad/index_set.hpp"

namespace fcad {

// Attribute sets live over context attributes, object sets over objects.
// Both are plain index sets; the function signatures keep the roles apart.
using AttrSet = IndexSet;
using ObjSet = IndexSet;

// Finite formal context: labelled objects and attributes plus an incidence
// relation, stored in both row (object -> attributes) and column
// (attribute -> objects) form.
class FormalContext {
public:
    FormalContext() = default;

    // Pairs are (object index, attribute index). Duplicate pairs are fine,
    // out-of-range indices or duplicate labels are not.
    static FormalContext make(std::vector<std::string> objects,
                              std::vector<std::string> attributes,
                              const std::vector<std::pair<int, int>>& incidence);
    static FormalContext from_rows(std::vector<std::string> objects,
                                   std::vector<std::string> attributes,
                                   std::vector<IndexSet> rows);

    int object_count() const { return static_cast<int>(objects_.size()); }
    int attribute_count() const { return static_cast<int>(attributes_.size()); }
    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<std::string>& attributes() const { return attributes_; }

    bool incident(int obj, int attr) const { return rows_[static_cast<std::size_t>(obj)].test(attr); }
    const AttrSet& row(int obj) const { return rows_[static_cast<std::size_t>(obj)]; }
    const ObjSet& col(int attr) const { return cols_[static_cast<std::size_t>(attr)]; }

    ObjSet all_objects() const { return IndexSet::full(object_count()); }
    AttrSet all_attrs() const { return IndexSet::full(attribute_count()); }

    std::vector<std::pair<int, int>> incidence_pairs() const;

    bool operator==(const FormalContext& o) const {
        return objects_ == o.objects_ && attributes_ == o.attributes_ && rows_ == o.rows_;
    }

private:
    std::vector<std::string> objects_;
    std::vector<std::string> attributes_;
    std::vector<AttrSet> rows_;
    std::vector<ObjSet> cols_;
};

// Throw InvalidInput when a set mentions indices outside the context.
void check_attr_set(const FormalContext& ctx, const AttrSet& b, const char* what = "attribute set");
void check_obj_set(const FormalContext& ctx, const ObjSet& a, const char* what = "object set");

// Objects carrying every attribute of b. extent({}) is all objects.
ObjSet extent(const FormalContext& ctx, const AttrSet& b);

// Attributes shared by every object of a. intent({}) is all attributes.
AttrSet intent(const FormalContext& ctx, const ObjSet& a);

// intent(extent(b)): the closure operator on attribute sets.
AttrSet attr_closure(const FormalContext& ctx, const AttrSet& b);

bool is_formal_concept(const FormalContext& ctx, const AttrSet& b);

// All closure fixed points in canonical order, found by running the closure
// over every attribute subset. Guarded by max_attrs (default 20); use
// closed_attr_sets for wider contexts.
std::vector<AttrSet> enumerate_formal_concepts(const FormalContext& ctx, int max_attrs = 20);

// Same result, computed as all intersections of object rows (plus the full
// set). No attribute-count bound; cost scales with the number of closed sets.
std::vector<AttrSet> closed_attr_sets(const FormalContext& ctx);

// On finite contexts approximable = closed; this checks the closure fixpoint.
bool is_approximable_concept(const FormalContext& ctx, const AttrSet& q);

// Literal definition: every finite m <= q keeps its closure inside q.
// Exhaustive over subsets of q; guarded by max_bits.
bool is_approximable_concept_oracle(const FormalContext& ctx, const AttrSet& q, int max_bits = 20);

}  // namespace fcad
