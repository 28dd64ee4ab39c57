#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fcad/context.hpp"

namespace fcad {

// Kernel attribute operator. Values are only ever observed on closed
// attribute sets (the bracket applies it to a closure), so the table form
// is keyed on closed sets alone and anything else is out of its domain.
class KernelOperator {
public:
    enum class Kind { Identity, Table };

    static KernelOperator identity() { return KernelOperator(); }
    static KernelOperator from_table(std::unordered_map<IndexSet, IndexSet, IndexSetHash> table);

    Kind kind() const { return kind_; }
    const std::unordered_map<IndexSet, IndexSet, IndexSetHash>& table() const { return table_; }

    bool covers(const AttrSet& closed) const {
        return kind_ == Kind::Identity || table_.count(closed) > 0;
    }
    // InvalidInput when a table kernel lacks the key.
    AttrSet apply_closed(const AttrSet& closed) const;

    bool operator==(const KernelOperator& o) const {
        return kind_ == o.kind_ && table_ == o.table_;
    }

private:
    Kind kind_ = Kind::Identity;
    std::unordered_map<IndexSet, IndexSet, IndexSetHash> table_;
};

// tau(closure(b)): the closure step first, then the kernel.
AttrSet bracket(const FormalContext& ctx, const KernelOperator& tau, const AttrSet& b);

struct AxiomResult {
    bool pass = true;
    std::string counterexample;  // empty when pass
};

struct KernelReport {
    bool covered = true;            // table keys reach every closed set
    std::string missing_key;
    AxiomResult contractive;        // tau(c) <= c
    AxiomResult idempotent;         // tau(closure(tau(c))) = tau(c)
    AxiomResult monotone;           // c1 <= c2 implies tau(c1) <= tau(c2) on closed sets
    // The raw "tau(tau(c)) = tau(c)" reading is only evaluable when tau(c)
    // is itself closed; those instances are counted and any divergence from
    // the closure-mediated reading is reported.
    int raw_idempotent_evaluable = 0;
    int raw_idempotent_divergent = 0;
    std::string raw_divergence;

    bool pass() const { return covered && contractive.pass && idempotent.pass && monotone.pass; }
    std::string to_string() const;
};

// Checks the three kernel axioms over every closed set of the context
// (pairs for monotonicity). Table coverage failures short-circuit.
KernelReport check_kernel_axioms(const FormalContext& ctx, const KernelOperator& tau);

// Nonempty list of distinct nonempty finite attribute sets.
class Selection {
public:
    static Selection make(std::vector<AttrSet> members);
    static Selection all_nonempty_subsets(int attr_count, int max_attrs = 15);

    int size() const { return static_cast<int>(members_.size()); }
    const AttrSet& member(int i) const { return members_[static_cast<std::size_t>(i)]; }
    const std::vector<AttrSet>& members() const { return members_; }
    bool contains(const AttrSet& f) const { return index_.count(f) > 0; }
    std::optional<int> index_of(const AttrSet& f) const {
        auto it = index_.find(f);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool operator==(const Selection& o) const { return members_ == o.members_; }

private:
    std::vector<AttrSet> members_;
    std::unordered_map<IndexSet, int, IndexSetHash> index_;
};

struct Ca1Report {
    bool pass = true;
    int offending_member = -1;   // index into the selection
    AttrSet offending_m;         // finite subset with no witness
    std::string detail;
    std::string to_string() const;
};

// Consistency of the selection against the bracket. Finite-context check:
// every member F needs some member G inside bracket(F) with the same
// bracket. Equivalent to the literal subset quantifier on finite contexts;
// check_ca1_oracle is that literal quantifier and the tests pin the two
// against each other on large random batches.
Ca1Report check_ca1(const FormalContext& ctx, const KernelOperator& tau, const Selection& sel);
Ca1Report check_ca1_oracle(const FormalContext& ctx, const KernelOperator& tau, const Selection& sel,
                           int max_bits = 12);

// Conditional-context condition: for every member F and finite
// m <= closure(F) some member G has m <= G <= closure(F).
bool check_fc(const FormalContext& ctx, const Selection& sel, int max_bits = 20);

// The two conditions on a candidate concept of a conditional context:
// every finite m <= q sits inside a member below q, and every member below
// q keeps its closure below q.
bool is_f_approximable(const FormalContext& ctx, const Selection& sel, const AttrSet& q,
                       int max_bits = 20);

class AcfContext;
struct AcfBuildResult;
AcfBuildResult build_acf(const FormalContext& ctx, const KernelOperator& tau, const Selection& sel);

// Validated bundle of context, kernel and selection, with member brackets
// cached. Instances only exist after build_acf ran both validators.
class AcfContext {
public:
    // Diagnostic corruption of the bracket layer for mutation testing.
    // SkipKernel drops the kernel step (bracket = closure); ShrinkKernel
    // drops the highest-index attribute from each kernel image.
    enum class BracketMutation { None, SkipKernel, ShrinkKernel };

    const FormalContext& context() const { return ctx_; }
    const KernelOperator& kernel() const { return kernel_; }
    const Selection& selection() const { return sel_; }
    const AttrSet& member_bracket(int i) const { return brackets_[static_cast<std::size_t>(i)]; }

    // Bracket of an arbitrary attribute set, honouring the active mutation.
    AttrSet bracket_of(const AttrSet& b) const;

    AcfContext with_mutation(BracketMutation m) const;
    BracketMutation mutation() const { return mut_; }

    bool operator==(const AcfContext& o) const {
        return ctx_ == o.ctx_ && kernel_ == o.kernel_ && sel_ == o.sel_ && mut_ == o.mut_;
    }

private:
    FormalContext ctx_;
    KernelOperator kernel_;
    Selection sel_;
    std::vector<AttrSet> brackets_;
    BracketMutation mut_ = BracketMutation::None;

    friend struct AcfBuildResult;
    friend AcfBuildResult build_acf(const FormalContext&, const KernelOperator&, const Selection&);
    AcfContext() = default;
};

using BracketMutation = AcfContext::BracketMutation;

struct AcfBuildResult {
    std::optional<AcfContext> acf;
    KernelReport kernel_report;
    Ca1Report ca1_report;
    std::string error;  // non-validation problems (e.g. no attributes)

    bool ok() const { return acf.has_value(); }
    // The validated context; Validation error if the build failed.
    const AcfContext& value() const;
    std::string failure_summary() const;
};

AcfBuildResult build_acf(const FormalContext& ctx, const KernelOperator& tau, const Selection& sel);

// Identity kernel plus all nonempty attribute subsets as the selection.
// Always validates; attribute count limited by the selection blow-up.
AcfContext induced_acf(const FormalContext& ctx, int max_attrs = 15);

}  // namespace fcad
