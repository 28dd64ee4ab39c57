#include "fcad/context.hpp"

#include <algorithm>
#include <unordered_set>

namespace fcad {

namespace {

void check_labels(const std::vector<std::string>& labels, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) fail_input(std::string(what) + " label repeated: " + l);
    }
}

}  // namespace

FormalContext FormalContext::make(std::vector<std::string> objects,
                                  std::vector<std::string> attributes,
                                  const std::vector<std::pair<int, int>>& incidence) {
    std::vector<IndexSet> rows(objects.size());
    int no = static_cast<int>(objects.size());
    int na = static_cast<int>(attributes.size());
    for (auto [o, a] : incidence) {
        if (o < 0 || o >= no) fail_input("incidence object index out of range: " + std::to_string(o));
        if (a < 0 || a >= na) fail_input("incidence attribute index out of range: " + std::to_string(a));
        rows[static_cast<std::size_t>(o)].set(a);
    }
    return from_rows(std::move(objects), std::move(attributes), std::move(rows));
}

FormalContext FormalContext::from_rows(std::vector<std::string> objects,
                                       std::vector<std::string> attributes,
                                       std::vector<IndexSet> rows) {
    if (rows.size() != objects.size()) fail_input("row count does not match object count");
    check_labels(objects, "object");
    check_labels(attributes, "attribute");
    int na = static_cast<int>(attributes.size());
    for (const auto& r : rows) {
        if (r.max_index() >= na) fail_input("incidence row mentions attribute index out of range");
    }
    FormalContext ctx;
    ctx.objects_ = std::move(objects);
    ctx.attributes_ = std::move(attributes);
    ctx.rows_ = std::move(rows);
    ctx.cols_.assign(ctx.attributes_.size(), IndexSet());
    for (int o = 0; o < ctx.object_count(); ++o) {
        ctx.rows_[static_cast<std::size_t>(o)].for_each([&](int a) {
            ctx.cols_[static_cast<std::size_t>(a)].set(o);
        });
    }
    return ctx;
}

std::vector<std::pair<int, int>> FormalContext::incidence_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int o = 0; o < object_count(); ++o) {
        rows_[static_cast<std::size_t>(o)].for_each([&](int a) { out.emplace_back(o, a); });
    }
    return out;
}

void check_attr_set(const FormalContext& ctx, const AttrSet& b, const char* what) {
    if (b.max_index() >= ctx.attribute_count())
        fail_input(std::string(what) + " mentions attribute index " +
                   std::to_string(b.max_index()) + " outside the context");
}

void check_obj_set(const FormalContext& ctx, const ObjSet& a, const char* what) {
    if (a.max_index() >= ctx.object_count())
        fail_input(std::string(what) + " mentions object index " +
                   std::to_string(a.max_index()) + " outside the context");
}

ObjSet extent(const FormalContext& ctx, const AttrSet& b) {
    check_attr_set(ctx, b);
    ObjSet out = ctx.all_objects();
    b.for_each([&](int attr) { out &= ctx.col(attr); });
    return out;
}

AttrSet intent(const FormalContext& ctx, const ObjSet& a) {
    check_obj_set(ctx, a);
    AttrSet out = ctx.all_attrs();
    a.for_each([&](int obj) { out &= ctx.row(obj); });
    return out;
}

AttrSet attr_closure(const FormalContext& ctx, const AttrSet& b) {
    return intent(ctx, extent(ctx, b));
}

bool is_formal_concept(const FormalContext& ctx, const AttrSet& b) {
    return attr_closure(ctx, b) == b;
}

std::vector<AttrSet> enumerate_formal_concepts(const FormalContext& ctx, int max_attrs) {
    int n = ctx.attribute_count();
    if (n > max_attrs)
        fail_limit("formal concept enumeration over subsets needs <= " + std::to_string(max_attrs) +
                   " attributes, got " + std::to_string(n) + " (closed_attr_sets has no such bound)");
    std::vector<AttrSet> out;
    for (std::uint64_t m = 0;; ++m) {
        AttrSet b = IndexSet::from_mask(m);
        if (is_formal_concept(ctx, b)) out.push_back(b);
        if (m + 1 == (std::uint64_t{1} << n)) break;
    }
    // mask order is already the canonical order
    return out;
}

std::vector<AttrSet> closed_attr_sets(const FormalContext& ctx) {
    // Closed sets are exactly the intersections of object rows, with the
    // empty intersection giving the full attribute set.
    std::unordered_set<IndexSet, IndexSetHash> seen;
    std::vector<AttrSet> out;
    AttrSet top = ctx.all_attrs();
    seen.insert(top);
    out.push_back(top);
    for (int o = 0; o < ctx.object_count(); ++o) {
        std::vector<AttrSet> fresh;
        for (const auto& s : out) {
            AttrSet t = s & ctx.row(o);
            if (seen.insert(t).second) fresh.push_back(t);
        }
        out.insert(out.end(), fresh.begin(), fresh.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_approximable_concept(const FormalContext& ctx, const AttrSet& q) {
    check_attr_set(ctx, q);
    return attr_closure(ctx, q) == q;
}

bool is_approximable_concept_oracle(const FormalContext& ctx, const AttrSet& q, int max_bits) {
    check_attr_set(ctx, q);
    int k = q.count();
    if (k > max_bits)
        fail_limit("approximable-concept oracle enumerates subsets of the candidate; |q| = " +
                   std::to_string(k) + " exceeds " + std::to_string(max_bits));
    std::vector<int> idx = q.indices();
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
        AttrSet m;
        for (int i = 0; i < k; ++i)
            if ((pick >> i) & 1u) m.set(idx[static_cast<std::size_t>(i)]);
        if (!attr_closure(ctx, m).subset_of(q)) return false;
    }
    return true;
}

}  // namespace fcad
