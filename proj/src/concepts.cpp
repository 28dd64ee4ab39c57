#include "fcad/concepts.hpp"

#include <algorithm>
#include <unordered_map>

namespace fcad {

ConceptPoset::ConceptPoset(std::shared_ptr<const AcfContext> acf, int max_concepts) : acf_(std::move(acf)) {
    const Selection& sel = acf_->selection();
    std::unordered_map<IndexSet, std::vector<int>, IndexSetHash> groups;
    for (int i = 0; i < sel.size(); ++i) groups[acf_->member_bracket(i)].push_back(i);
    if (static_cast<int>(groups.size()) > max_concepts)
        fail_limit("concept poset would have " + std::to_string(groups.size()) +
                   " concepts (limit " + std::to_string(max_concepts) + ")");

    concepts_.reserve(groups.size());
    for (auto& [attrs, wit] : groups) concepts_.push_back(ContinuousConcept{attrs, std::move(wit)});
    std::sort(concepts_.begin(), concepts_.end(),
              [](const ContinuousConcept& a, const ContinuousConcept& b) { return a.attrs < b.attrs; });

    int n = size();
    std::unordered_map<IndexSet, int, IndexSetHash> pos;
    for (int i = 0; i < n; ++i) pos[concepts_[static_cast<std::size_t>(i)].attrs] = i;

    leq_.assign(static_cast<std::size_t>(n), IndexSet());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (concepts_[static_cast<std::size_t>(i)].attrs.subset_of(concepts_[static_cast<std::size_t>(j)].attrs))
                leq_[static_cast<std::size_t>(i)].set(j);

    // Way-below by its defining witness search, grouped by bracket: member F
    // counts toward target j when F <= C_j, and then every C_i inside
    // bracket(F) is way below C_j.
    std::vector<IndexSet> reachable(static_cast<std::size_t>(n));  // j -> set of bracket-concepts
    for (int f = 0; f < sel.size(); ++f) {
        int bidx = pos.at(acf_->member_bracket(f));
        for (int j = 0; j < n; ++j)
            if (sel.member(f).subset_of(concepts_[static_cast<std::size_t>(j)].attrs))
                reachable[static_cast<std::size_t>(j)].set(bidx);
    }
    wb_.assign(static_cast<std::size_t>(n), IndexSet());
    for (int j = 0; j < n; ++j) {
        IndexSet row_targets;  // set of i with C_i << C_j
        reachable[static_cast<std::size_t>(j)].for_each([&](int k) {
            for (int i = 0; i < n; ++i)
                if (leq_[static_cast<std::size_t>(i)].test(k)) row_targets.set(i);
        });
        row_targets.for_each([&](int i) { wb_[static_cast<std::size_t>(i)].set(j); });
    }

    // sanity: way-below implies inclusion
    for (int i = 0; i < n; ++i)
        if (!wb_[static_cast<std::size_t>(i)].subset_of(leq_[static_cast<std::size_t>(i)]))
            fail_validation("way-below exceeded inclusion; the context is not consistent");

    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (const auto& c : concepts_) labels.push_back(c.attrs.to_string(acf_->context().attributes()));
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        leq_[static_cast<std::size_t>(i)].for_each([&](int j) { pairs.emplace_back(i, j); });
    order_ = std::make_shared<FinitePoset>(FinitePoset::from_leq_pairs(std::move(labels), pairs));
}

std::optional<int> ConceptPoset::index_of(const AttrSet& q) const {
    auto it = std::lower_bound(concepts_.begin(), concepts_.end(), q,
                               [](const ContinuousConcept& c, const AttrSet& v) { return c.attrs < v; });
    if (it == concepts_.end() || !(it->attrs == q)) return std::nullopt;
    return static_cast<int>(it - concepts_.begin());
}

std::string ConceptPoset::to_dot() const {
    std::string out = "digraph concepts {\n  rankdir=BT;\n";
    for (int i = 0; i < size(); ++i) {
        out += "  n" + std::to_string(i) + " [label=\"" +
               concepts_[static_cast<std::size_t>(i)].attrs.to_string(acf_->context().attributes()) + "\"];\n";
    }
    std::vector<std::pair<int, int>> covers = order_->cover_pairs();
    for (auto [a, b] : covers)
        out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
    auto is_cover = [&](int a, int b) {
        return std::find(covers.begin(), covers.end(), std::pair<int, int>(a, b)) != covers.end();
    };
    for (int i = 0; i < size(); ++i)
        wb_[static_cast<std::size_t>(i)].for_each([&](int j) {
            if (!is_cover(i, j))
                out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + " [style=dashed];\n";
        });
    out += "}\n";
    return out;
}

ConceptPoset enumerate_concepts(std::shared_ptr<const AcfContext> acf, int max_concepts) {
    return ConceptPoset(std::move(acf), max_concepts);
}

bool is_continuous_concept(const AcfContext& acf, const AttrSet& q) {
    check_attr_set(acf.context(), q);
    for (int i = 0; i < acf.selection().size(); ++i)
        if (acf.member_bracket(i) == q) return true;
    return false;
}

bool is_continuous_concept_oracle(const AcfContext& acf, const AttrSet& q, int max_bits) {
    check_attr_set(acf.context(), q);
    if (q.empty()) return false;  // concepts are nonempty: m = {} needs a bracket inside q
    int k = q.count();
    if (k > max_bits) fail_limit("concept oracle enumerates subsets of the candidate; too large");
    std::vector<int> idx = q.indices();
    const Selection& sel = acf.selection();
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
        AttrSet m;
        for (int b = 0; b < k; ++b)
            if ((pick >> b) & 1u) m.set(idx[static_cast<std::size_t>(b)]);
        bool found = false;
        for (int f = 0; f < sel.size() && !found; ++f) {
            const AttrSet& bf = acf.member_bracket(f);
            if (m.subset_of(bf) && bf.subset_of(q)) found = true;
        }
        if (!found) return false;
    }
    return true;
}

bool way_below(const AcfContext& acf, const AttrSet& q1, const AttrSet& q2) {
    if (!is_continuous_concept(acf, q1))
        fail_input("way-below argument " + q1.to_string() + " is not a concept of this context");
    if (!is_continuous_concept(acf, q2))
        fail_input("way-below argument " + q2.to_string() + " is not a concept of this context");
    const Selection& sel = acf.selection();
    for (int f = 0; f < sel.size(); ++f)
        if (q1.subset_of(acf.member_bracket(f)) && sel.member(f).subset_of(q2)) return true;
    return false;
}

bool is_compact(const AcfContext& acf, const AttrSet& q) {
    if (!is_continuous_concept(acf, q))
        fail_input("compactness asked of " + q.to_string() + " which is not a concept");
    const Selection& sel = acf.selection();
    for (int g = 0; g < sel.size(); ++g)
        if (acf.member_bracket(g) == q && sel.member(g).subset_of(acf.member_bracket(g))) return true;
    return false;
}

std::vector<AttrSet> decompose(const AcfContext& acf, const AttrSet& q) {
    if (!is_continuous_concept(acf, q))
        fail_input("decompose asked of " + q.to_string() + " which is not a concept");
    const Selection& sel = acf.selection();
    std::vector<AttrSet> out;
    std::unordered_map<IndexSet, bool, IndexSetHash> seen;
    for (int f = 0; f < sel.size(); ++f) {
        if (!sel.member(f).subset_of(q)) continue;
        const AttrSet& b = acf.member_bracket(f);
        if (!seen.emplace(b, true).second) continue;
        out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

AttrSet directed_sup(const AcfContext& acf, const std::vector<AttrSet>& family) {
    if (family.empty()) fail_input("directed union of an empty family");
    for (const auto& q : family)
        if (!is_continuous_concept(acf, q))
            fail_input("directed union over non-concept " + q.to_string());
    for (const auto& a : family)
        for (const auto& b : family) {
            bool bounded = false;
            for (const auto& c : family)
                if (a.subset_of(c) && b.subset_of(c)) {
                    bounded = true;
                    break;
                }
            if (!bounded)
                fail_input("family is not directed: " + a.to_string() + " and " + b.to_string() +
                           " have no upper bound in it");
        }
    AttrSet u;
    for (const auto& q : family) u |= q;
    return u;
}

}  // namespace fcad
