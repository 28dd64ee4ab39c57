#include "fcad/representation.hpp"

namespace fcad {

namespace {

AttrSet waybelow_down(const std::vector<IndexSet>& wb, const IndexSet& xs, int n) {
    // basis elements way below some member of xs
    AttrSet out;
    for (int b = 0; b < n; ++b) {
        bool below = false;
        xs.for_each([&](int x) {
            if (wb[static_cast<std::size_t>(b)].test(x)) below = true;
        });
        if (below) out.set(b);
    }
    return out;
}

}  // namespace

RepContext rep(const FinitePoset& d) {
    int n = d.size();
    if (n == 0) fail_input("representation context needs a nonempty poset");
    if (n > 16) fail_limit("representation context limited to 16 elements");

    RepContext rc;
    rc.domain = d;
    for (int i = 0; i < n; ++i) rc.basis.push_back(i);
    rc.domain_waybelow = waybelow_matrix_bruteforce(d, 16);

    // incidence: object x carries attribute b exactly when b <= x
    std::vector<IndexSet> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) rows.push_back(d.down_set(x));
    std::vector<std::string> obj_labels = d.elements();
    std::vector<std::string> attr_labels = d.elements();
    FormalContext ctx = FormalContext::from_rows(std::move(obj_labels), std::move(attr_labels), std::move(rows));

    // kernel: closed set -> basis elements way below one of its members
    std::unordered_map<IndexSet, IndexSet, IndexSetHash> table;
    for (const auto& c : closed_attr_sets(ctx)) table[c] = waybelow_down(rc.domain_waybelow, c, n);
    KernelOperator tau = KernelOperator::from_table(std::move(table));

    // selection: nonempty finite sets whose join lies inside them, which on
    // a finite poset means the set contains its own greatest element
    std::vector<AttrSet> members;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        IndexSet f = IndexSet::from_mask(m);
        if (d.max_of(f)) members.push_back(f);
    }
    Selection sel = Selection::make(std::move(members));

    AcfBuildResult res = build_acf(ctx, tau, sel);
    if (!res.ok())
        fail_validation("representation context failed validation: " + res.failure_summary());
    rc.acf = std::make_shared<AcfContext>(std::move(*res.acf));
    return rc;
}

RepContext rep(const FinitePoset& d, const std::vector<int>& basis) {
    std::vector<bool> seen(static_cast<std::size_t>(d.size()), false);
    for (int b : basis) {
        if (b < 0 || b >= d.size()) fail_input("basis element out of range");
        seen[static_cast<std::size_t>(b)] = true;
    }
    for (bool s : seen)
        if (!s)
            fail_input("every element of a finite poset is compact, so the basis must be all of it");
    return rep(d);
}

bool check_r1_r2(const RepContext& rc, const AttrSet& q) {
    int n = rc.domain.size();
    if (q.max_index() >= n) fail_input("candidate mentions elements outside the basis");
    const auto& wb = rc.domain_waybelow;
    // R1: down-closed under way-below
    for (int u = 0; u < n; ++u) {
        bool below_member = false;
        q.for_each([&](int v) {
            if (wb[static_cast<std::size_t>(u)].test(v)) below_member = true;
        });
        if (below_member && !q.test(u)) return false;
    }
    // R2: every finite subset has a member way above all of it
    std::vector<int> idx = q.indices();
    int k = static_cast<int>(idx.size());
    if (k > 16) fail_limit("characterization check enumerates subsets of the candidate; too large");
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
        bool found = false;
        q.for_each([&](int u) {
            if (found) return;
            bool above_all = true;
            for (int b = 0; b < k; ++b)
                if ((pick >> b) & 1u) {
                    int m = idx[static_cast<std::size_t>(b)];
                    if (!wb[static_cast<std::size_t>(m)].test(u)) above_all = false;
                }
            if (above_all) found = true;
        });
        if (!found) return false;
    }
    return true;
}

AttrSet iso_forward(const RepContext& rc, int x) {
    if (x < 0 || x >= rc.domain.size()) fail_input("element out of range");
    return waybelow_down(rc.domain_waybelow, IndexSet::single(x), rc.domain.size());
}

int iso_backward(const RepContext& rc, const AttrSet& q) {
    if (!is_continuous_concept(*rc.acf, q))
        fail_input(q.to_string() + " is not a concept of this representation context");
    auto s = rc.domain.sup_of(q);
    if (!s) fail_validation("concept has no join in the domain; the construction is broken");
    return *s;
}

RoundtripReport verify_roundtrip(const RepContext& rc) {
    RoundtripReport r;
    ConceptPoset cp = enumerate_concepts(rc.acf);
    int n = rc.domain.size();

    if (cp.size() != n) {
        r.ok = false;
        r.detail = "domain has " + std::to_string(n) + " elements but the concept poset has " +
                   std::to_string(cp.size());
        return r;
    }
    for (int x = 0; x < n; ++x) {
        AttrSet fx = iso_forward(rc, x);
        auto idx = cp.index_of(fx);
        if (!idx) {
            r.ok = false;
            r.detail = "image of " + rc.domain.label(x) + " is not a concept";
            return r;
        }
        int back = iso_backward(rc, fx);
        if (back != x) {
            r.ok = false;
            r.detail = "round trip moved " + rc.domain.label(x) + " to " + rc.domain.label(back);
            return r;
        }
    }
    for (int i = 0; i < cp.size(); ++i) {
        const AttrSet& q = cp.concept_at(i).attrs;
        int x = iso_backward(rc, q);
        if (!(iso_forward(rc, x) == q)) {
            r.ok = false;
            r.detail = "round trip changed concept " + q.to_string(rc.acf->context().attributes());
            return r;
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            bool ord = rc.domain.leq(x, y);
            bool img = iso_forward(rc, x).subset_of(iso_forward(rc, y));
            if (ord != img) {
                r.ok = false;
                r.detail = "order mismatch between " + rc.domain.label(x) + " and " + rc.domain.label(y);
                return r;
            }
        }
    auto dom = std::make_shared<FinitePoset>(rc.domain);
    if (!find_isomorphism(dom, cp.order())) {
        r.ok = false;
        r.detail = "no order isomorphism between the domain and the concept poset";
        return r;
    }
    return r;
}

RoundtripReport verify_rep_brackets(const RepContext& rc) {
    RoundtripReport r;
    const AcfContext& acf = *rc.acf;
    for (int f = 0; f < acf.selection().size(); ++f) {
        const AttrSet& member = acf.selection().member(f);
        auto join = rc.domain.max_of(member);
        if (!join) {
            r.ok = false;
            r.detail = "selection member without its own join: " + member.to_string();
            return r;
        }
        AttrSet expect = waybelow_down(rc.domain_waybelow, IndexSet::single(*join), rc.domain.size());
        if (!(acf.member_bracket(f) == expect)) {
            r.ok = false;
            r.detail = "bracket of " + member.to_string(acf.context().attributes()) + " is " +
                       acf.member_bracket(f).to_string(acf.context().attributes()) + ", expected " +
                       expect.to_string(acf.context().attributes());
            return r;
        }
    }
    return r;
}

}  // namespace fcad
