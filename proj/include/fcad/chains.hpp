#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fcad/context.hpp"
#include "fcad/poset.hpp"

namespace fcad {

// Two infinite test posets built from an ascending chain a_1 < a_2 < ...
// L1: the chain's join is the top element; a side element b sits strictly
//     between bottom and top, incomparable to the chain.
// L2: the chain's join is an intermediate element top1 below top; b sits
//     strictly between bottom and top, incomparable to chain and top1.
// Everything here is closed-form; finite truncations exist for oracles.
enum class ChainFamily { L1, L2 };

std::string family_name(ChainFamily f);

struct ChainElement {
    enum class Tag { Bot, A, B, Top1, Top };

    ChainFamily family = ChainFamily::L1;
    Tag tag = Tag::Bot;
    int index = 0;  // chain position, A only, >= 1

    static ChainElement bot(ChainFamily f) { return {f, Tag::Bot, 0}; }
    static ChainElement a(ChainFamily f, int i);
    static ChainElement b(ChainFamily f) { return {f, Tag::B, 0}; }
    static ChainElement top1();  // L2 only
    static ChainElement top(ChainFamily f) { return {f, Tag::Top, 0}; }

    std::string to_string() const;  // bot, a3, b, top1, top
    bool operator==(const ChainElement& o) const = default;
};

// Closed-form order; both elements must belong to f (InvalidInput).
bool chain_leq(ChainFamily f, const ChainElement& x, const ChainElement& y);

// Closed-form way-below. In L1 exactly bottom and the chain elements are
// compact; b and top approximate nothing. In L2 everything is compact
// except top1, which still approximates top. Validated against the
// truncation oracle below.
bool chain_waybelow(ChainFamily f, const ChainElement& x, const ChainElement& y);

// A depth bound for the otherwise infinite structure.
struct SymbolicContext {
    ChainFamily family = ChainFamily::L1;
    int depth = 1;  // >= 1

    static SymbolicContext make(ChainFamily f, int depth);
};

// Intensionally named attribute sets.
struct SetSpec {
    enum class Kind { AChainWithBot, PrincipalDown, Full };

    Kind kind = Kind::Full;
    std::optional<ChainElement> anchor;  // PrincipalDown only

    static SetSpec a_chain_with_bot() { return {Kind::AChainWithBot, std::nullopt}; }
    static SetSpec principal_down(ChainElement x) { return {Kind::PrincipalDown, x}; }
    static SetSpec full() { return {Kind::Full, std::nullopt}; }
};

// Closed-form membership; InvalidInput for foreign elements or a
// PrincipalDown spec without an anchor.
bool chain_membership(const SymbolicContext& ctx, const SetSpec& q, const ChainElement& x);

// bot, a_1..a_depth, b, (top1 for L2), top, in that index order.
std::vector<ChainElement> chain_universe(const SymbolicContext& ctx);

// The depth-bounded poset under the closed-form order (validated on build).
FinitePoset chain_truncation(const SymbolicContext& ctx);

// Way-below on the truncation by the literal directed-subset definition,
// enriched with the one family the truncation cannot see: the unbounded
// chain, whose declared join is top (L1) or top1 (L2). rows[x].test(y)
// means x way below y. depth <= 10 (SizeLimit).
std::vector<IndexSet> chain_waybelow_oracle(ChainFamily f, int depth);

// Depth-bounded evidence that the chain-with-bottom set is a continuous
// concept of the induced context but stops being closed once the chain's
// unbounded upper bounds enter: finite truncations alone keep it closed.
struct ChainGapReport {
    ChainFamily family = ChainFamily::L1;
    int depth = 0;
    bool witnesses_ok = false;      // every finite subset sits under a bracket inside the set
    bool truncation_closed = false; // the pure depth-bounded derivation keeps the set closed
    bool closure_exceeds = false;   // with unbounded upper bounds the closure grows strictly
    bool sampled = false;           // subset quantifier sampled (large depth)
    std::string closure_names;      // the grown closure, printed as a set
    std::string detail;             // soundness caveat

    bool pass() const { return witnesses_ok && truncation_closed && closure_exceeds; }
    std::string to_string() const;
};

ChainGapReport verify_chain_gap(ChainFamily f, int depth);  // depth >= 3

// Certificate that L1 is not continuous: only bottom approximates b, and
// the join of that set is bottom, not b. Also classifies compactness in
// both families and pins the closed-form way-below table against the
// truncation oracle.
struct DiscontinuityReport {
    bool waydown_b_is_bot = false;
    bool join_of_waydown_b_misses_b = false;
    bool l1_chain_compact = false;          // bot and every probed a_i
    bool l1_b_top_not_compact = false;
    bool l2_all_compact_but_top1 = false;
    bool l2_top1_approximates_top = false;
    bool closed_form_matches_oracle = false;  // both families, oracle depth
    int probe_depth = 8;
    int oracle_depth = 6;
    std::string detail;

    bool pass() const {
        return waydown_b_is_bot && join_of_waydown_b_misses_b && l1_chain_compact &&
               l1_b_top_not_compact && l2_all_compact_but_top1 && l2_top1_approximates_top &&
               closed_form_matches_oracle;
    }
    std::string to_string() const;
};

DiscontinuityReport l1_discontinuity_witness();

}  // namespace fcad
