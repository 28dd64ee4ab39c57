#include "fcad/generators.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "fcad/context.hpp"

namespace fcad {

FormalContext random_context(std::uint64_t seed, int objects, int attrs, double density) {
    if (objects < 1 || attrs < 1) fail_input("context needs at least one object and attribute");
    if (density < 0.0 || density > 1.0) fail_input("density must lie in [0,1]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::string> objs, ats;
    for (int g = 0; g < objects; ++g) objs.push_back("g" + std::to_string(g));
    for (int m = 0; m < attrs; ++m) ats.push_back("m" + std::to_string(m));
    std::vector<IndexSet> rows(static_cast<std::size_t>(objects));
    for (int g = 0; g < objects; ++g)
        for (int m = 0; m < attrs; ++m)
            if (coin(rng) < density) rows[static_cast<std::size_t>(g)].set(m);
    return FormalContext::from_rows(std::move(objs), std::move(ats), std::move(rows));
}

FinitePoset random_poset(std::uint64_t seed, int n, double edge_density) {
    if (n < 1) fail_input("poset needs at least one element");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < edge_density) edges.emplace_back(i, j);
    return FinitePoset::from_covers(std::move(labels), edges);
}

namespace {

AttrSet random_nonempty_subset(std::mt19937_64& rng, int attrs) {
    AttrSet s;
    while (s.empty())
        for (int m = 0; m < attrs; ++m)
            if (rng() & 1u) s.set(m);
    return s;
}

// Interior operator from a few closed sets as basic opens, tabulated on the
// closed sets. Contractive and monotone by shape; idempotence is what the
// rejection loop tests.
KernelOperator random_interior_kernel(std::mt19937_64& rng, const std::vector<AttrSet>& closed) {
    int k = 1 + static_cast<int>(rng() % 3);
    std::vector<AttrSet> basics;
    for (int t = 0; t < k; ++t)
        basics.push_back(closed[static_cast<std::size_t>(rng() % closed.size())]);
    std::unordered_map<IndexSet, IndexSet, IndexSetHash> table;
    for (const AttrSet& c : closed) {
        AttrSet image;
        for (const AttrSet& b : basics)
            if (b.subset_of(c)) image |= b;
        table[c] = image;
    }
    return KernelOperator::from_table(std::move(table));
}

// Make a candidate member list satisfy the selection condition: members
// with empty brackets go, and every bracket value becomes a member of its
// own (its bracket is itself, so it is its own witness).
std::vector<AttrSet> repair_selection(const FormalContext& ctx, const KernelOperator& tau,
                                      std::vector<AttrSet> members) {
    std::unordered_set<IndexSet, IndexSetHash> present(members.begin(), members.end());
    std::vector<AttrSet> out;
    std::vector<AttrSet> to_add;
    for (const AttrSet& f : members) {
        AttrSet br = bracket(ctx, tau, f);
        if (br.empty()) continue;
        out.push_back(f);
        if (!present.count(br)) {
            present.insert(br);
            to_add.push_back(br);
        }
    }
    for (const AttrSet& b : to_add) out.push_back(b);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

AcfGenResult random_valid_acf(std::uint64_t seed, int max_attrs, int max_objects,
                              int max_attempts) {
    if (max_attrs < 1 || max_attrs > 6) fail_input("attribute bound must lie in 1..6");
    if (max_objects < 1 || max_objects > 8) fail_input("object bound must lie in 1..8");
    std::mt19937_64 rng(seed);
    int rejections = 0;

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        int attrs = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_attrs));
        int objects = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_objects));
        FormalContext ctx = random_context(rng(), objects, attrs, 0.3 + 0.2 * (attempt % 3));
        std::vector<AttrSet> closed = closed_attr_sets(ctx);

        KernelOperator tau =
            rng() % 3 == 0 ? KernelOperator::identity() : random_interior_kernel(rng, closed);
        if (!check_kernel_axioms(ctx, tau).pass()) {
            ++rejections;
            continue;
        }

        int want = 1 + static_cast<int>(rng() % 6u);
        std::vector<AttrSet> members;
        for (int t = 0; t < want; ++t) members.push_back(random_nonempty_subset(rng, attrs));
        members = repair_selection(ctx, tau, members);
        if (members.empty()) {
            ++rejections;
            continue;
        }

        AcfBuildResult r = build_acf(ctx, tau, Selection::make(std::move(members)));
        if (!r.ok()) {
            ++rejections;
            continue;
        }
        return {r.value(), rejections, false};
    }

    // the induced context of a fresh random context always validates
    std::uint64_t sub_seed = rng();
    int attrs = 1 + static_cast<int>(rng() % 4u);
    int objects = 1 + static_cast<int>(rng() % 4u);
    FormalContext ctx = random_context(sub_seed, objects, attrs, 0.5);
    return {induced_acf(ctx), rejections, true};
}

}  // namespace fcad
