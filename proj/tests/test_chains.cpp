#include "doctest.h"

#include "fcad/chains.hpp"
#include "test_util.hpp"

using namespace fcad;

namespace {

ChainElement bot(ChainFamily f) { return ChainElement::bot(f); }
ChainElement a(ChainFamily f, int i) { return ChainElement::a(f, i); }
ChainElement side(ChainFamily f) { return ChainElement::b(f); }
ChainElement top(ChainFamily f) { return ChainElement::top(f); }

}  // namespace

TEST_CASE("closed-form order on the two chain families") {
    for (ChainFamily f : {ChainFamily::L1, ChainFamily::L2}) {
        CAPTURE(family_name(f));
        CHECK(chain_leq(f, bot(f), side(f)));
        CHECK(chain_leq(f, bot(f), a(f, 5)));
        CHECK(chain_leq(f, a(f, 1), a(f, 4)));
        CHECK_FALSE(chain_leq(f, a(f, 4), a(f, 1)));
        CHECK(chain_leq(f, a(f, 3), top(f)));
        CHECK(chain_leq(f, side(f), top(f)));
        CHECK_FALSE(chain_leq(f, a(f, 1), side(f)));
        CHECK_FALSE(chain_leq(f, side(f), a(f, 9)));
        CHECK(chain_leq(f, top(f), top(f)));
        CHECK_FALSE(chain_leq(f, top(f), bot(f)));
    }

    SUBCASE("the intermediate join exists only in the second family") {
        auto t1 = ChainElement::top1();
        CHECK(chain_leq(ChainFamily::L2, a(ChainFamily::L2, 7), t1));
        CHECK(chain_leq(ChainFamily::L2, t1, top(ChainFamily::L2)));
        CHECK_FALSE(chain_leq(ChainFamily::L2, side(ChainFamily::L2), t1));
        CHECK_FALSE(chain_leq(ChainFamily::L2, t1, side(ChainFamily::L2)));
        CHECK_THROWS_AS(chain_leq(ChainFamily::L1, t1, top(ChainFamily::L1)), Error);
    }

    SUBCASE("family mismatch and bad indices are rejected") {
        CHECK_THROWS_AS(chain_leq(ChainFamily::L1, bot(ChainFamily::L2), top(ChainFamily::L1)),
                        Error);
        CHECK_THROWS_AS(ChainElement::a(ChainFamily::L1, 0), Error);
    }
}

TEST_CASE("closed-form way-below") {
    SUBCASE("first family: chain compact, b and top approximate nothing") {
        auto f = ChainFamily::L1;
        CHECK(chain_waybelow(f, bot(f), side(f)));
        CHECK(chain_waybelow(f, a(f, 2), a(f, 2)));
        CHECK(chain_waybelow(f, a(f, 2), top(f)));
        CHECK_FALSE(chain_waybelow(f, side(f), side(f)));
        CHECK_FALSE(chain_waybelow(f, side(f), top(f)));
        CHECK_FALSE(chain_waybelow(f, top(f), top(f)));
    }

    SUBCASE("second family: only the intermediate join is non-compact") {
        auto f = ChainFamily::L2;
        auto t1 = ChainElement::top1();
        CHECK(chain_waybelow(f, side(f), side(f)));
        CHECK(chain_waybelow(f, top(f), top(f)));
        CHECK_FALSE(chain_waybelow(f, t1, t1));
        CHECK(chain_waybelow(f, t1, top(f)));
        CHECK(chain_waybelow(f, a(f, 3), t1));
    }

    SUBCASE("way-below implies order") {
        for (ChainFamily f : {ChainFamily::L1, ChainFamily::L2}) {
            SymbolicContext ctx = SymbolicContext::make(f, 5);
            for (const auto& x : chain_universe(ctx))
                for (const auto& y : chain_universe(ctx))
                    if (chain_waybelow(f, x, y)) CHECK(chain_leq(f, x, y));
        }
    }
}

TEST_CASE("membership in the named attribute sets") {
    SymbolicContext ctx = SymbolicContext::make(ChainFamily::L1, 10);
    auto chain_set = SetSpec::a_chain_with_bot();
    CHECK(chain_membership(ctx, chain_set, bot(ChainFamily::L1)));
    CHECK(chain_membership(ctx, chain_set, a(ChainFamily::L1, 7)));
    CHECK_FALSE(chain_membership(ctx, chain_set, side(ChainFamily::L1)));
    CHECK_FALSE(chain_membership(ctx, chain_set, top(ChainFamily::L1)));

    auto below_top = SetSpec::principal_down(top(ChainFamily::L1));
    for (const auto& x : chain_universe(ctx)) {
        CHECK(chain_membership(ctx, below_top, x));
        CHECK(chain_membership(ctx, SetSpec::full(), x));
    }
    auto below_b = SetSpec::principal_down(side(ChainFamily::L1));
    CHECK(chain_membership(ctx, below_b, bot(ChainFamily::L1)));
    CHECK_FALSE(chain_membership(ctx, below_b, a(ChainFamily::L1, 1)));

    SUBCASE("foreign elements are rejected") {
        CHECK_THROWS_AS(chain_membership(ctx, chain_set, bot(ChainFamily::L2)), Error);
        CHECK_THROWS_AS(chain_membership(ctx, SetSpec::principal_down(ChainElement::top1()),
                                         bot(ChainFamily::L1)),
                        Error);
    }
}

TEST_CASE("truncations are valid posets matching the closed form") {
    for (ChainFamily f : {ChainFamily::L1, ChainFamily::L2}) {
        for (int depth : {1, 4, 9}) {
            SymbolicContext ctx = SymbolicContext::make(f, depth);
            auto universe = chain_universe(ctx);
            auto p = chain_truncation(ctx);
            REQUIRE(p.size() == static_cast<int>(universe.size()));
            for (int i = 0; i < p.size(); ++i)
                for (int j = 0; j < p.size(); ++j)
                    CHECK(p.leq(i, j) == chain_leq(f, universe[static_cast<std::size_t>(i)],
                                                   universe[static_cast<std::size_t>(j)]));
        }
    }
    CHECK(chain_universe(SymbolicContext::make(ChainFamily::L1, 3)).size() == 6);
    CHECK(chain_universe(SymbolicContext::make(ChainFamily::L2, 3)).size() == 7);
    CHECK_THROWS_AS(SymbolicContext::make(ChainFamily::L1, 0), Error);
}

TEST_CASE("closed-form way-below matches the truncation oracle") {
    // the oracle sees the finite truncation plus the declared join of the
    // unbounded chain; the closed form must agree at every depth
    for (ChainFamily f : {ChainFamily::L1, ChainFamily::L2}) {
        for (int depth : {3, 6}) {
            SymbolicContext ctx = SymbolicContext::make(f, depth);
            auto universe = chain_universe(ctx);
            auto rows = chain_waybelow_oracle(f, depth);
            REQUIRE(rows.size() == universe.size());
            for (std::size_t i = 0; i < universe.size(); ++i)
                for (std::size_t j = 0; j < universe.size(); ++j)
                    CHECK(rows[i].test(static_cast<int>(j)) ==
                          chain_waybelow(f, universe[i], universe[j]));
        }
    }
    CHECK_THROWS_AS(chain_waybelow_oracle(ChainFamily::L1, 11), Error);
}

TEST_CASE("depth-bounded closure gap evidence") {
    for (ChainFamily f : {ChainFamily::L1, ChainFamily::L2}) {
        for (int depth : {3, 10, 32}) {
            auto r = verify_chain_gap(f, depth);
            CAPTURE(family_name(f));
            CAPTURE(depth);
            CHECK(r.witnesses_ok);
            CHECK(r.truncation_closed);
            CHECK(r.closure_exceeds);
            CHECK(r.pass());
            CHECK_FALSE(r.closure_names.empty());
            CHECK_FALSE(r.to_string().empty());
        }
    }

    SUBCASE("the grown closure is the down-set of the ambient join") {
        // the whole chain joins to top in the first family and to top1 in
        // the second, so the closure of a truncation jumps to that
        // element's down-set
        CHECK(verify_chain_gap(ChainFamily::L1, 3).closure_names == "{bot,a1,a2,a3,b,top}");
        CHECK(verify_chain_gap(ChainFamily::L2, 3).closure_names == "{bot,a1,a2,a3,top1}");
    }

    SUBCASE("bad depths") {
        CHECK_THROWS_AS(verify_chain_gap(ChainFamily::L1, 2), Error);
    }
}

TEST_CASE("discontinuity certificate for the first family") {
    auto r = l1_discontinuity_witness();
    CHECK(r.waydown_b_is_bot);
    CHECK(r.join_of_waydown_b_misses_b);
    CHECK(r.l1_chain_compact);
    CHECK(r.l1_b_top_not_compact);
    CHECK(r.l2_all_compact_but_top1);
    CHECK(r.l2_top1_approximates_top);
    CHECK(r.closed_form_matches_oracle);
    CHECK(r.pass());
    CHECK(r.to_string().find("bot") != std::string::npos);
}
