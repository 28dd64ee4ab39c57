#include "doctest.h"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "fcad/generators.hpp"
#include "fcad/kernel.hpp"
#include "test_util.hpp"

using namespace fcad;

namespace {

using Table = std::unordered_map<IndexSet, IndexSet, IndexSetHash>;

// Table kernel defined on every closed set of ctx by intersecting with a
// fixed attribute set. Contractive and monotone by construction; the
// mediated idempotence axiom depends on the context and is checked by the
// caller where it matters.
KernelOperator intersect_kernel(const FormalContext& ctx, const AttrSet& r) {
    Table t;
    for (const auto& c : closed_attr_sets(ctx)) {
        AttrSet v = c;
        v &= r;
        t[c] = v;
    }
    return KernelOperator::from_table(std::move(t));
}

KernelOperator const_empty_kernel(const FormalContext& ctx) {
    return intersect_kernel(ctx, AttrSet{});
}

}  // namespace

TEST_CASE("kernel axioms on the identity kernel") {
    auto ctx = make_c0();
    auto rep = check_kernel_axioms(ctx, KernelOperator::identity());
    CHECK(rep.pass());
    CHECK(rep.covered);
    CHECK(rep.contractive.pass);
    CHECK(rep.idempotent.pass);
    CHECK(rep.monotone.pass);
    // the identity image is always closed, so the raw reading is evaluable
    // at every closed set and never diverges from the mediated one
    CHECK(rep.raw_idempotent_evaluable == 6);
    CHECK(rep.raw_idempotent_divergent == 0);
}

TEST_CASE("constant-empty table kernel is a valid kernel on C0") {
    // closure of the empty attribute set is empty here, so mediated
    // idempotence holds: tau(closure(empty)) = tau(empty) = empty
    auto ctx = make_c0();
    CHECK(attr_closure(ctx, AttrSet{}) == AttrSet{});
    auto rep = check_kernel_axioms(ctx, const_empty_kernel(ctx));
    CHECK(rep.pass());
}

TEST_CASE("kernel axiom violations are reported with counterexamples") {
    auto ctx = make_c0();

    SUBCASE("non-contractive value") {
        Table t;
        for (const auto& c : closed_attr_sets(ctx)) t[c] = c;
        t[ids({0, 1})] = ids({2});  // {m3} is not below {m1,m2}
        auto rep = check_kernel_axioms(ctx, KernelOperator::from_table(std::move(t)));
        CHECK_FALSE(rep.pass());
        CHECK_FALSE(rep.contractive.pass);
        CHECK_FALSE(rep.contractive.counterexample.empty());
    }

    SUBCASE("missing table key short-circuits") {
        Table t;
        for (const auto& c : closed_attr_sets(ctx)) t[c] = c;
        t.erase(ids({0, 1, 2}));
        auto rep = check_kernel_axioms(ctx, KernelOperator::from_table(std::move(t)));
        CHECK_FALSE(rep.pass());
        CHECK_FALSE(rep.covered);
        CHECK(rep.missing_key == ids({0, 1, 2}).to_string(ctx.attributes()));
    }

    SUBCASE("raw idempotence divergence is counted when images are closed") {
        // tau({m1,m2,m3}) = {m1,m2} but tau({m1,m2}) = {m1}: the raw
        // reading diverges at a closed image, which also sinks the
        // mediated axiom (the two readings agree on closed images)
        Table t;
        for (const auto& c : closed_attr_sets(ctx)) t[c] = c;
        t[ids({0, 1, 2})] = ids({0, 1});
        t[ids({0, 1})] = ids({0});
        auto rep = check_kernel_axioms(ctx, KernelOperator::from_table(std::move(t)));
        CHECK_FALSE(rep.idempotent.pass);
        CHECK(rep.raw_idempotent_divergent >= 1);
        CHECK_FALSE(rep.raw_divergence.empty());
    }

    SUBCASE("non-closed images leave the raw reading unevaluable there") {
        // intersecting with {m3} sends {m2,m3} and {m1,m2,m3} to {m3},
        // which is not closed; the other four closed sets map to the
        // empty set, so only those four count as raw-evaluable
        auto rep = check_kernel_axioms(ctx, intersect_kernel(ctx, ids({2})));
        CHECK(rep.pass());
        CHECK(rep.raw_idempotent_evaluable == 4);
        CHECK(rep.raw_idempotent_divergent == 0);
    }
}

TEST_CASE("apply_closed rejects uncovered keys") {
    auto ctx = make_c0();
    Table t;
    t[AttrSet{}] = AttrSet{};
    auto tau = KernelOperator::from_table(std::move(t));
    CHECK(tau.apply_closed(AttrSet{}) == AttrSet{});
    CHECK_THROWS_AS(tau.apply_closed(ids({0})), Error);
    CHECK(KernelOperator::identity().covers(ids({0, 2})));
    CHECK_FALSE(tau.covers(ids({0})));
    (void)ctx;
}

TEST_CASE("bracket composes closure then kernel") {
    auto ctx = make_c0();

    SUBCASE("identity kernel reduces to closure") {
        auto tau = KernelOperator::identity();
        CHECK(bracket(ctx, tau, ids({2})) == ids({1, 2}));
        CHECK(bracket(ctx, tau, ids({0})) == ids({0}));
        CHECK(bracket(ctx, tau, AttrSet{}) == AttrSet{});
    }

    SUBCASE("constant-empty kernel collapses every bracket") {
        auto tau = const_empty_kernel(ctx);
        CHECK(bracket(ctx, tau, ids({0})) == AttrSet{});
        CHECK(bracket(ctx, tau, ids({0, 1, 2})) == AttrSet{});
    }

    SUBCASE("intersection kernel keeps only the retained attributes") {
        auto tau = intersect_kernel(ctx, ids({1}));
        CHECK(check_kernel_axioms(ctx, tau).pass());
        CHECK(bracket(ctx, tau, ids({2})) == ids({1}));   // closure {m2,m3}, then cut to {m2}
        CHECK(bracket(ctx, tau, ids({0})) == AttrSet{});  // closure {m1} misses m2
    }

    SUBCASE("bracket is idempotent and monotone on random inputs") {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            auto rctx = random_context(seed, 4, 5, 0.4);
            auto tau = KernelOperator::identity();
            for (std::uint32_t a = 0; a < 32; ++a) {
                auto fa = AttrSet::from_mask(a);
                auto ba = bracket(rctx, tau, fa);
                CHECK(bracket(rctx, tau, ba) == ba);
                for (std::uint32_t b = a; b < 32; ++b) {
                    auto fb = AttrSet::from_mask(b);
                    if (fa.subset_of(fb)) CHECK(ba.subset_of(bracket(rctx, tau, fb)));
                }
            }
        }
    }
}

TEST_CASE("selection construction rules") {
    CHECK_THROWS_AS(Selection::make({}), Error);
    CHECK_THROWS_AS(Selection::make({AttrSet{}}), Error);
    CHECK_THROWS_AS(Selection::make({ids({0}), ids({0})}), Error);

    auto sel = Selection::make({ids({1}), ids({0, 2})});
    CHECK(sel.size() == 2);
    CHECK(sel.contains(ids({0, 2})));
    CHECK_FALSE(sel.contains(ids({2})));
    CHECK(sel.index_of(ids({1})) == 0);
    CHECK_FALSE(sel.index_of(ids({2})).has_value());
}

TEST_CASE("all_nonempty_subsets enumerates in canonical order") {
    auto sel = Selection::all_nonempty_subsets(3);
    CHECK(sel.size() == 7);
    for (std::uint32_t m = 1; m < 8; ++m)
        CHECK(sel.member(static_cast<int>(m) - 1) == AttrSet::from_mask(m));
    CHECK_THROWS_AS(Selection::all_nonempty_subsets(16), Error);
}

TEST_CASE("selection consistency worked examples") {
    auto ctx = make_c0();

    SUBCASE("identity kernel is consistent with any selection") {
        // each member witnesses itself: it sits inside its own closure
        // and shares the bracket by idempotence
        auto rep = check_ca1(ctx, KernelOperator::identity(),
                             Selection::make({ids({0}), ids({0, 1, 2})}));
        CHECK(rep.pass);
        CHECK(rep.offending_member == -1);
    }

    SUBCASE("empty bracket has no witness") {
        auto rep = check_ca1(ctx, const_empty_kernel(ctx), Selection::make({ids({0})}));
        CHECK_FALSE(rep.pass);
        CHECK(rep.offending_member == 0);
        CHECK_FALSE(rep.detail.empty());
    }

    SUBCASE("witness may be a different member") {
        // bracket({m3}) = {m2} under the {m2}-intersection kernel, and the
        // member {m2} inside it has the same bracket
        auto tau = intersect_kernel(ctx, ids({1}));
        CHECK(check_ca1(ctx, tau, Selection::make({ids({1}), ids({2})})).pass);
        // without {m2} in the selection the witness disappears
        CHECK_FALSE(check_ca1(ctx, tau, Selection::make({ids({2})})).pass);
    }
}

TEST_CASE("fast consistency check agrees with the exhaustive oracle") {
    // the fast check quantifies over selection members only; the oracle
    // quantifies over every finite attribute subset. Pin the two against
    // each other on a large batch of random instances, both valid and
    // broken ones.
    int checked = 0, failing = 0, passing = 0;

    auto compare = [&](const FormalContext& ctx, const KernelOperator& tau, const Selection& sel) {
        auto fast = check_ca1(ctx, tau, sel);
        auto slow = check_ca1_oracle(ctx, tau, sel, 10);
        CHECK(fast.pass == slow.pass);
        if (fast.pass != slow.pass) return;  // one report is enough
        if (!fast.pass) CHECK(fast.offending_member == slow.offending_member);
        ++checked;
        ++(fast.pass ? passing : failing);
    };

    auto random_selection = [](std::uint64_t seed, int attrs) {
        std::mt19937_64 rng(seed);
        std::vector<AttrSet> members;
        std::uint32_t limit = 1u << attrs;
        int want = 1 + static_cast<int>(rng() % 4);
        want = std::min(want, static_cast<int>(limit) - 1);
        while (static_cast<int>(members.size()) < want) {
            auto f = AttrSet::from_mask(1 + rng() % (limit - 1));
            if (std::find(members.begin(), members.end(), f) == members.end())
                members.push_back(f);
        }
        return Selection::make(std::move(members));
    };

    // arbitrary kernels over arbitrary contexts, falling back to the
    // identity when the sampled intersection kernel flunks the axioms
    for (std::uint64_t seed = 0; seed < 600; ++seed) {
        int attrs = 2 + static_cast<int>(seed % 3);
        auto ctx = random_context(seed, 2 + static_cast<int>((seed / 3) % 3), attrs,
                                  0.25 + 0.1 * static_cast<double>(seed % 6));
        auto tau = intersect_kernel(ctx, AttrSet::from_mask(seed % (1u << attrs)));
        if (!check_kernel_axioms(ctx, tau).pass()) tau = KernelOperator::identity();
        compare(ctx, tau, random_selection(seed * 65537 + 11, attrs));
    }

    // validated kernels with their selections swapped out for raw random
    // ones, so non-identity kernels appear on both sides of the verdict
    for (std::uint64_t seed = 0; seed < 600; ++seed) {
        auto gen = random_valid_acf(seed, 4, 5);
        const auto& ctx = gen.acf.context();
        compare(ctx, gen.acf.kernel(), random_selection(seed * 31 + 7, ctx.attribute_count()));
    }

    CHECK(checked >= 1000);
    CHECK(failing > 0);
    CHECK(passing > 0);
}

TEST_CASE("conditional-context condition") {
    auto ctx = make_c0();
    CHECK(check_fc(ctx, Selection::all_nonempty_subsets(3)));
    // m = {m2} lies inside closure({m3}) = {m2,m3} but fits inside no member
    CHECK_FALSE(check_fc(ctx, Selection::make({ids({2})})));
    CHECK(check_fc(ctx, Selection::make({ids({1, 2})})));
}

TEST_CASE("approximable-concept conditions for a conditional context") {
    auto ctx = make_c0();
    auto sel = Selection::all_nonempty_subsets(3);
    // no nonempty member fits inside the empty set
    CHECK_FALSE(is_f_approximable(ctx, sel, AttrSet{}));
    CHECK(is_f_approximable(ctx, sel, ids({1, 2})));
    // member {m3} sits inside {m1,m3} but its closure {m2,m3} does not
    CHECK_FALSE(is_f_approximable(ctx, sel, ids({0, 2})));

    SUBCASE("agrees with closure fixpoints when the condition holds") {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            auto rctx = random_context(seed, 4, 4, 0.45);
            auto rsel = Selection::all_nonempty_subsets(4);
            REQUIRE(check_fc(rctx, rsel));
            for (std::uint32_t m = 0; m < 16; ++m) {
                auto q = AttrSet::from_mask(m);
                bool fixpoint = !q.empty() && attr_closure(rctx, q) == q;
                CHECK(is_f_approximable(rctx, rsel, q) == fixpoint);
            }
        }
    }
}

TEST_CASE("validated context bundles") {
    auto ctx = make_c0();

    SUBCASE("induced bundle uses the identity kernel and every subset") {
        auto acf = induced_acf(ctx);
        CHECK(acf.kernel().kind() == KernelOperator::Kind::Identity);
        CHECK(acf.selection().size() == 7);
        auto built = build_acf(ctx, KernelOperator::identity(), Selection::all_nonempty_subsets(3));
        REQUIRE(built.ok());
        CHECK(built.value() == acf);
    }

    SUBCASE("member brackets are cached at build time") {
        auto res = build_acf(ctx, KernelOperator::identity(), Selection::make({ids({0}), ids({2})}));
        REQUIRE(res.ok());
        CHECK(res.value().member_bracket(0) == ids({0}));
        CHECK(res.value().member_bracket(1) == ids({1, 2}));
        CHECK(res.value().bracket_of(ids({2})) == ids({1, 2}));
    }

    SUBCASE("non-identity kernel bundle") {
        auto tau = intersect_kernel(ctx, ids({1}));
        auto res = build_acf(ctx, tau, Selection::make({ids({1}), ids({2})}));
        REQUIRE(res.ok());
        CHECK(res.value().member_bracket(0) == ids({1}));
        CHECK(res.value().member_bracket(1) == ids({1}));
    }

    SUBCASE("consistency failure blocks the build") {
        auto res = build_acf(ctx, const_empty_kernel(ctx), Selection::make({ids({0})}));
        CHECK_FALSE(res.ok());
        CHECK(res.kernel_report.pass());
        CHECK_FALSE(res.ca1_report.pass);
        CHECK_FALSE(res.failure_summary().empty());
        CHECK_THROWS_AS(res.value(), Error);
    }

    SUBCASE("kernel failure blocks the build before the consistency check") {
        Table t;
        for (const auto& c : closed_attr_sets(ctx)) t[c] = c;
        t[ids({0, 1})] = ids({2});
        auto res = build_acf(ctx, KernelOperator::from_table(std::move(t)),
                             Selection::make({ids({0})}));
        CHECK_FALSE(res.ok());
        CHECK_FALSE(res.kernel_report.pass());
    }

    SUBCASE("degenerate inputs are reported as build errors") {
        auto empty_attrs = FormalContext::make({"o1"}, {}, {});
        auto res = build_acf(empty_attrs, KernelOperator::identity(),
                             Selection::make({ids({0})}));
        CHECK_FALSE(res.ok());
        CHECK_FALSE(res.error.empty());

        auto out_of_range = build_acf(ctx, KernelOperator::identity(),
                                      Selection::make({ids({5})}));
        CHECK_FALSE(out_of_range.ok());
        CHECK_FALSE(out_of_range.error.empty());
    }

    SUBCASE("induced build refuses oversized attribute sets") {
        std::vector<std::string> objs{"o"}, attrs;
        std::vector<std::pair<int, int>> inc;
        for (int i = 0; i < 16; ++i) attrs.push_back("m" + std::to_string(i));
        CHECK_THROWS_AS(induced_acf(FormalContext::make(objs, attrs, inc)), Error);
    }
}

TEST_CASE("bracket mutations corrupt the bracket layer only") {
    auto ctx = make_c0();
    auto tau = intersect_kernel(ctx, ids({1}));
    auto res = build_acf(ctx, tau, Selection::make({ids({1}), ids({2})}));
    REQUIRE(res.ok());
    const auto& acf = res.value();

    auto skip = acf.with_mutation(BracketMutation::SkipKernel);
    CHECK(skip.mutation() == BracketMutation::SkipKernel);
    CHECK(skip.bracket_of(ids({2})) == ids({1, 2}));  // closure, kernel dropped
    CHECK(skip.member_bracket(1) == ids({1, 2}));

    auto shrink = acf.with_mutation(BracketMutation::ShrinkKernel);
    CHECK(shrink.bracket_of(ids({2})) == AttrSet{});  // {m2} loses its top attribute

    // the pristine bundle is untouched
    CHECK(acf.bracket_of(ids({2})) == ids({1}));
    CHECK(acf.mutation() == BracketMutation::None);
    CHECK_FALSE(acf == skip);
}
