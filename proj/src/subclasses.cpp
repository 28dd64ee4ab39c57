#include "fcad/subclasses.hpp"

#include <unordered_map>
#include <unordered_set>

namespace fcad {

namespace {

struct BracketIndex {
    std::vector<AttrSet> concepts;                                  // distinct brackets, canonical order
    std::vector<int> member_bracket;                                // member -> concept index
    std::vector<std::vector<int>> members_of;                       // concept -> member indices
    std::unordered_map<IndexSet, int, IndexSetHash> pos;

    explicit BracketIndex(const AcfContext& acf) {
        const Selection& sel = acf.selection();
        for (int f = 0; f < sel.size(); ++f) {
            const AttrSet& b = acf.member_bracket(f);
            auto it = pos.find(b);
            int idx;
            if (it == pos.end()) {
                idx = static_cast<int>(concepts.size());
                pos[b] = idx;
                concepts.push_back(b);
                members_of.emplace_back();
            } else {
                idx = it->second;
            }
            member_bracket.push_back(idx);
            members_of[static_cast<std::size_t>(idx)].push_back(f);
        }
    }
};

std::string nm(const AcfContext& acf, const AttrSet& s) {
    return s.to_string(acf.context().attributes());
}

}  // namespace

ConditionResult check_ad(const AcfContext& acf) {
    const Selection& sel = acf.selection();
    BracketIndex bi(acf);
    // members F with F <= bracket(F), grouped by bracket: the usable witnesses
    std::vector<std::vector<int>> self_contained(bi.concepts.size());
    for (int f = 0; f < sel.size(); ++f)
        if (sel.member(f).subset_of(acf.member_bracket(f)))
            self_contained[static_cast<std::size_t>(bi.member_bracket[static_cast<std::size_t>(f)])].push_back(f);

    for (int f2 = 0; f2 < sel.size(); ++f2) {
        for (const auto& c1 : bi.concepts) {
            if (!sel.member(f2).subset_of(c1)) continue;
            bool found = false;
            for (std::size_t k = 0; k < bi.concepts.size() && !found; ++k) {
                if (!sel.member(f2).subset_of(bi.concepts[k])) continue;
                for (int w : self_contained[k])
                    if (sel.member(w).subset_of(c1)) {
                        found = true;
                        break;
                    }
            }
            if (!found)
                return {false, "member " + nm(acf, sel.member(f2)) + " inside bracket " + nm(acf, c1) +
                                   " has no compact witness"};
        }
    }
    return {};
}

ConditionResult check_pointed(const AcfContext& acf) {
    const Selection& sel = acf.selection();
    AttrSet common = acf.member_bracket(0);
    for (int f = 1; f < sel.size(); ++f) common &= acf.member_bracket(f);
    for (int g = 0; g < sel.size(); ++g)
        if (sel.member(g).subset_of(common)) return {};
    return {false, "no member inside the intersection of all brackets " + nm(acf, common)};
}

ConditionResult check_topped(const AcfContext& acf) {
    AttrSet u;
    for (int f = 0; f < acf.selection().size(); ++f) u |= acf.member_bracket(f);
    if (is_continuous_concept(acf, u)) return {};
    return {false, "union of all brackets " + nm(acf, u) + " is not a concept"};
}

ConditionResult check_bc(const AcfContext& acf) {
    BracketIndex bi(acf);
    const Selection& sel = acf.selection();
    std::unordered_set<IndexSet, IndexSetHash> members(sel.members().begin(), sel.members().end());
    for (const auto& c : bi.concepts) {
        int k = c.count();
        if (k > 20) fail_limit("bounded-completeness check enumerates bracket subsets; too large");
        std::vector<int> idx = c.indices();
        for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << k); ++pick) {
            AttrSet x;
            for (int b = 0; b < k; ++b)
                if ((pick >> b) & 1u) x.set(idx[static_cast<std::size_t>(b)]);
            if (!members.count(x))
                return {false, "subset " + nm(acf, x) + " of bracket " + nm(acf, c) + " is not a member"};
        }
    }
    return {};
}

SsResult check_ss(const AcfContext& acf, int max_bits) {
    SsResult r;
    BracketIndex bi(acf);
    const Selection& sel = acf.selection();
    int nc = static_cast<int>(bi.concepts.size());

    // For each concept (as a bracket value), the set of bracket-concepts of
    // members lying inside it.
    std::vector<IndexSet> inner(static_cast<std::size_t>(nc));
    for (int f = 0; f < sel.size(); ++f)
        for (int c = 0; c < nc; ++c)
            if (sel.member(f).subset_of(bi.concepts[static_cast<std::size_t>(c)]))
                inner[static_cast<std::size_t>(c)].set(bi.member_bracket[static_cast<std::size_t>(f)]);

    // ss1: for every pair of brackets and finite m inside the intersection,
    // some member F fits inside the intersection with m <= bracket(F).
    for (int c1 = 0; c1 < nc && r.ss1.pass; ++c1)
        for (int c2 = 0; c2 < nc && r.ss1.pass; ++c2) {
            AttrSet inter = bi.concepts[static_cast<std::size_t>(c1)] & bi.concepts[static_cast<std::size_t>(c2)];
            int k = inter.count();
            if (k > max_bits) fail_limit("multiplicativity check enumerates intersection subsets; too large");
            std::vector<int> idx = inter.indices();
            // candidate witnesses: members inside the intersection
            std::vector<int> cands;
            for (int f = 0; f < sel.size(); ++f)
                if (sel.member(f).subset_of(inter)) cands.push_back(f);
            for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
                AttrSet m;
                for (int b = 0; b < k; ++b)
                    if ((pick >> b) & 1u) m.set(idx[static_cast<std::size_t>(b)]);
                bool found = false;
                for (int f : cands)
                    if (m.subset_of(acf.member_bracket(f))) {
                        found = true;
                        break;
                    }
                if (!found) {
                    r.ss1 = {false, "no member inside " + nm(acf, inter) + " whose bracket holds " + nm(acf, m)};
                    break;
                }
            }
        }

    // ss2, reduced to bracket values: for brackets c1, c2 and inner-bracket
    // values d1 of c1, d2 of c2, some concept e inside the intersection must
    // have a member G <= e with d1 & d2 <= bracket(G).
    for (int c1 = 0; c1 < nc && r.ss2.pass; ++c1)
        for (int c2 = 0; c2 < nc && r.ss2.pass; ++c2) {
            AttrSet inter = bi.concepts[static_cast<std::size_t>(c1)] & bi.concepts[static_cast<std::size_t>(c2)];
            std::vector<int> inner_concepts;  // e candidates: concepts inside the intersection
            for (int e = 0; e < nc; ++e)
                if (bi.concepts[static_cast<std::size_t>(e)].subset_of(inter)) inner_concepts.push_back(e);
            bool stop = false;
            inner[static_cast<std::size_t>(c1)].for_each([&](int d1) {
                if (stop) return;
                inner[static_cast<std::size_t>(c2)].for_each([&](int d2) {
                    if (stop) return;
                    AttrSet need = bi.concepts[static_cast<std::size_t>(d1)] & bi.concepts[static_cast<std::size_t>(d2)];
                    bool found = false;
                    for (int e : inner_concepts) {
                        // members G inside concept e with need <= bracket(G)
                        IndexSet reach = inner[static_cast<std::size_t>(e)];
                        reach.for_each([&](int gb) {
                            if (need.subset_of(bi.concepts[static_cast<std::size_t>(gb)])) found = true;
                        });
                        if (found) break;
                    }
                    if (!found) {
                        r.ss2 = {false, "brackets " + nm(acf, bi.concepts[static_cast<std::size_t>(c1)]) + ", " +
                                            nm(acf, bi.concepts[static_cast<std::size_t>(c2)]) +
                                            " admit no interpolating member above " + nm(acf, need)};
                        stop = true;
                    }
                });
            });
        }

    return r;
}

std::string SubclassReport::to_string() const {
    auto line = [](const char* n, const ConditionResult& c) {
        std::string s = std::string(n) + (c.pass ? "pass" : "FAIL");
        if (!c.pass) s += "  [" + c.counterexample + "]";
        return s + "\n";
    };
    std::string s;
    s += line("algebraic condition:     ", ad);
    s += line("pointed condition:       ", pointed);
    s += line("topped condition:        ", topped);
    s += line("bounded-complete cond.:  ", bc);
    s += line("multiplicative cond. 1:  ", ss.ss1);
    s += line("multiplicative cond. 2:  ", ss.ss2);
    s += "concept poset classification:\n" + semantic.to_string();
    return s;
}

SubclassReport classify_acf(const AcfContext& acf) {
    SubclassReport r;
    r.ad = check_ad(acf);
    r.pointed = check_pointed(acf);
    r.topped = check_topped(acf);
    r.bc = check_bc(acf);
    r.ss = check_ss(acf);
    ConceptPoset cp = enumerate_concepts(acf);
    if (cp.order()->size() > 16)
        fail_limit("semantic classification limited to 16 concepts");
    r.semantic = domain_classify(*cp.order());
    return r;
}

}  // namespace fcad
