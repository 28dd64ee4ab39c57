#include "fcad/kernel.hpp"

#include <algorithm>

namespace fcad {

KernelOperator KernelOperator::from_table(std::unordered_map<IndexSet, IndexSet, IndexSetHash> table) {
    KernelOperator k;
    k.kind_ = Kind::Table;
    k.table_ = std::move(table);
    return k;
}

AttrSet KernelOperator::apply_closed(const AttrSet& closed) const {
    if (kind_ == Kind::Identity) return closed;
    auto it = table_.find(closed);
    if (it == table_.end())
        fail_input("kernel table has no entry for closed set " + closed.to_string());
    return it->second;
}

AttrSet bracket(const FormalContext& ctx, const KernelOperator& tau, const AttrSet& b) {
    return tau.apply_closed(attr_closure(ctx, b));
}

KernelReport check_kernel_axioms(const FormalContext& ctx, const KernelOperator& tau) {
    KernelReport r;
    std::vector<AttrSet> closed = closed_attr_sets(ctx);

    if (tau.kind() == KernelOperator::Kind::Table) {
        for (const auto& c : closed) {
            if (!tau.covers(c)) {
                r.covered = false;
                r.missing_key = c.to_string(ctx.attributes());
                return r;
            }
        }
    }

    auto name = [&](const AttrSet& s) { return s.to_string(ctx.attributes()); };

    for (const auto& c : closed) {
        AttrSet t = tau.apply_closed(c);
        if (r.contractive.pass && !t.subset_of(c)) {
            r.contractive.pass = false;
            r.contractive.counterexample = "tau(" + name(c) + ") = " + name(t) + " is not inside it";
        }
        AttrSet back = attr_closure(ctx, t);
        AttrSet again = tau.apply_closed(back);
        if (r.idempotent.pass && again != t) {
            r.idempotent.pass = false;
            r.idempotent.counterexample =
                "tau(closure(tau(" + name(c) + "))) = " + name(again) + ", expected " + name(t);
        }
        // Raw reading, evaluable only when tau(c) is itself closed.
        if (back == t) {
            ++r.raw_idempotent_evaluable;
            AttrSet raw = tau.apply_closed(t);
            if (raw != t) {
                ++r.raw_idempotent_divergent;
                if (r.raw_divergence.empty())
                    r.raw_divergence = "tau(tau(" + name(c) + ")) = " + name(raw) + ", expected " + name(t);
            }
        }
    }

    for (const auto& c1 : closed) {
        if (!r.monotone.pass) break;
        for (const auto& c2 : closed) {
            if (!c1.subset_of(c2)) continue;
            if (!tau.apply_closed(c1).subset_of(tau.apply_closed(c2))) {
                r.monotone.pass = false;
                r.monotone.counterexample =
                    name(c1) + " <= " + name(c2) + " but the kernel images are not ordered";
                break;
            }
        }
    }
    return r;
}

std::string KernelReport::to_string() const {
    if (!covered) return "kernel table misses closed set " + missing_key;
    auto line = [](const char* n, const AxiomResult& a) {
        std::string s = std::string(n) + ": " + (a.pass ? "pass" : "FAIL");
        if (!a.pass) s += " (" + a.counterexample + ")";
        return s + "\n";
    };
    std::string s;
    s += line("contractive ", contractive);
    s += line("idempotent  ", idempotent);
    s += line("monotone    ", monotone);
    s += "raw idempotence evaluable on " + std::to_string(raw_idempotent_evaluable) +
         " closed sets, divergent on " + std::to_string(raw_idempotent_divergent);
    if (!raw_divergence.empty()) s += " (" + raw_divergence + ")";
    s += "\n";
    return s;
}

Selection Selection::make(std::vector<AttrSet> members) {
    if (members.empty()) fail_input("selection must have at least one member");
    Selection s;
    for (const auto& m : members) {
        if (m.empty()) fail_input("selection members must be nonempty");
        if (s.index_.count(m)) fail_input("selection member repeated: " + m.to_string());
        s.index_[m] = static_cast<int>(s.members_.size());
        s.members_.push_back(m);
    }
    return s;
}

Selection Selection::all_nonempty_subsets(int attr_count, int max_attrs) {
    if (attr_count < 1) fail_input("need at least one attribute for a nonempty selection");
    if (attr_count > max_attrs)
        fail_limit("full subset selection limited to " + std::to_string(max_attrs) + " attributes");
    std::vector<AttrSet> members;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << attr_count); ++m)
        members.push_back(IndexSet::from_mask(m));
    return make(std::move(members));
}

std::string Ca1Report::to_string() const {
    if (pass) return "selection consistency: pass\n";
    return "selection consistency: FAIL at member " + std::to_string(offending_member) +
           (detail.empty() ? "" : " (" + detail + ")") + "\n";
}

Ca1Report check_ca1(const FormalContext& ctx, const KernelOperator& tau, const Selection& sel) {
    Ca1Report r;
    // Index members by bracket value so witness lookup is a bucket scan.
    std::vector<AttrSet> br(static_cast<std::size_t>(sel.size()));
    std::unordered_map<IndexSet, std::vector<int>, IndexSetHash> by_bracket;
    for (int i = 0; i < sel.size(); ++i) {
        br[static_cast<std::size_t>(i)] = bracket(ctx, tau, sel.member(i));
        by_bracket[br[static_cast<std::size_t>(i)]].push_back(i);
    }
    for (int i = 0; i < sel.size(); ++i) {
        const AttrSet& bf = br[static_cast<std::size_t>(i)];
        bool found = false;
        auto it = by_bracket.find(bf);
        if (it != by_bracket.end()) {
            for (int g : it->second)
                if (sel.member(g).subset_of(bf)) {
                    found = true;
                    break;
                }
        }
        if (!found) {
            r.pass = false;
            r.offending_member = i;
            r.offending_m = bf;
            r.detail = "no member G inside bracket " + bf.to_string(ctx.attributes()) +
                       " with the same bracket";
            return r;
        }
    }
    return r;
}

Ca1Report check_ca1_oracle(const FormalContext& ctx, const KernelOperator& tau, const Selection& sel,
                           int max_bits) {
    Ca1Report r;
    std::vector<AttrSet> br(static_cast<std::size_t>(sel.size()));
    for (int i = 0; i < sel.size(); ++i)
        br[static_cast<std::size_t>(i)] = bracket(ctx, tau, sel.member(i));
    for (int i = 0; i < sel.size(); ++i) {
        const AttrSet& bf = br[static_cast<std::size_t>(i)];
        int k = bf.count();
        if (k > max_bits)
            fail_limit("consistency oracle enumerates subsets of a bracket with " + std::to_string(k) +
                       " attributes (limit " + std::to_string(max_bits) + ")");
        std::vector<int> idx = bf.indices();
        for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
            AttrSet m;
            for (int b = 0; b < k; ++b)
                if ((pick >> b) & 1u) m.set(idx[static_cast<std::size_t>(b)]);
            bool found = false;
            for (int g = 0; g < sel.size() && !found; ++g)
                if (sel.member(g).subset_of(bf) && m.subset_of(br[static_cast<std::size_t>(g)])) found = true;
            if (!found) {
                r.pass = false;
                r.offending_member = i;
                r.offending_m = m;
                r.detail = "finite subset " + m.to_string(ctx.attributes()) + " of bracket " +
                           bf.to_string(ctx.attributes()) + " has no witness member";
                return r;
            }
        }
    }
    return r;
}

bool check_fc(const FormalContext& ctx, const Selection& sel, int max_bits) {
    for (int i = 0; i < sel.size(); ++i) {
        AttrSet c = attr_closure(ctx, sel.member(i));
        int k = c.count();
        if (k > max_bits) fail_limit("conditional-context check enumerates closure subsets; too large");
        std::vector<int> idx = c.indices();
        for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
            AttrSet m;
            for (int b = 0; b < k; ++b)
                if ((pick >> b) & 1u) m.set(idx[static_cast<std::size_t>(b)]);
            bool found = false;
            for (int g = 0; g < sel.size() && !found; ++g)
                if (m.subset_of(sel.member(g)) && sel.member(g).subset_of(c)) found = true;
            if (!found) return false;
        }
    }
    return true;
}

bool is_f_approximable(const FormalContext& ctx, const Selection& sel, const AttrSet& q, int max_bits) {
    check_attr_set(ctx, q);
    int k = q.count();
    if (k > max_bits) fail_limit("f-approximability enumerates subsets of the candidate; too large");
    std::vector<int> idx = q.indices();
    // every finite subset of q sits inside a member below q
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
        AttrSet m;
        for (int b = 0; b < k; ++b)
            if ((pick >> b) & 1u) m.set(idx[static_cast<std::size_t>(b)]);
        bool found = false;
        for (int g = 0; g < sel.size() && !found; ++g)
            if (m.subset_of(sel.member(g)) && sel.member(g).subset_of(q)) found = true;
        if (!found) return false;
    }
    // members below q keep their closures below q
    for (int g = 0; g < sel.size(); ++g)
        if (sel.member(g).subset_of(q) && !attr_closure(ctx, sel.member(g)).subset_of(q)) return false;
    return true;
}

AttrSet AcfContext::bracket_of(const AttrSet& b) const {
    AttrSet closed = attr_closure(ctx_, b);
    switch (mut_) {
        case BracketMutation::SkipKernel:
            return closed;
        case BracketMutation::ShrinkKernel: {
            AttrSet t = kernel_.apply_closed(closed);
            if (!t.empty()) t.reset(t.max_index());
            return t;
        }
        case BracketMutation::None:
            break;
    }
    return kernel_.apply_closed(closed);
}

AcfContext AcfContext::with_mutation(BracketMutation m) const {
    AcfContext out = *this;
    out.mut_ = m;
    for (int i = 0; i < out.sel_.size(); ++i)
        out.brackets_[static_cast<std::size_t>(i)] = out.bracket_of(out.sel_.member(i));
    return out;
}

const AcfContext& AcfBuildResult::value() const {
    if (!acf) fail_validation("attribute continuous context failed validation: " + failure_summary());
    return *acf;
}

std::string AcfBuildResult::failure_summary() const {
    if (!error.empty()) return error;
    if (!kernel_report.pass()) return "kernel axioms: " + kernel_report.to_string();
    if (!ca1_report.pass) return ca1_report.to_string();
    return "";
}

AcfBuildResult build_acf(const FormalContext& ctx, const KernelOperator& tau, const Selection& sel) {
    AcfBuildResult res;
    if (ctx.attribute_count() == 0) {
        res.error = "context has no attributes, so no nonempty selection can exist";
        return res;
    }
    for (const auto& m : sel.members())
        if (m.max_index() >= ctx.attribute_count()) {
            res.error = "selection member " + m.to_string() + " mentions attributes outside the context";
            return res;
        }
    res.kernel_report = check_kernel_axioms(ctx, tau);
    if (!res.kernel_report.pass()) return res;
    res.ca1_report = check_ca1(ctx, tau, sel);
    if (!res.ca1_report.pass) return res;

    AcfContext acf;
    acf.ctx_ = ctx;
    acf.kernel_ = tau;
    acf.sel_ = sel;
    acf.brackets_.reserve(static_cast<std::size_t>(sel.size()));
    for (int i = 0; i < sel.size(); ++i) acf.brackets_.push_back(bracket(ctx, tau, sel.member(i)));
    res.acf = std::move(acf);
    return res;
}

AcfContext induced_acf(const FormalContext& ctx, int max_attrs) {
    if (ctx.attribute_count() == 0) fail_input("induced context needs at least one attribute");
    Selection sel = Selection::all_nonempty_subsets(ctx.attribute_count(), max_attrs);
    AcfBuildResult res = build_acf(ctx, KernelOperator::identity(), sel);
    return res.value();
}

}  // namespace fcad
