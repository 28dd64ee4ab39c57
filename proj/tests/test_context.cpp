#include <doctest.h>

#include "fcad/context.hpp"
#include "fcad/cxt_io.hpp"
#include "fcad/generators.hpp"
#include "test_util.hpp"

using namespace fcad;

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(FormalContext::make({"a", "a"}, {"m"}, {}), Error);
    CHECK_THROWS_AS(FormalContext::make({"a"}, {"m", "m"}, {}), Error);
    CHECK_THROWS_AS(FormalContext::make({"a"}, {"m"}, {{1, 0}}), Error);
    CHECK_THROWS_AS(FormalContext::make({"a"}, {"m"}, {{0, -1}}), Error);
    // duplicate incidence pairs are tolerated
    FormalContext c = FormalContext::make({"a"}, {"m"}, {{0, 0}, {0, 0}});
    CHECK(c.incident(0, 0));
}

TEST_CASE("derivation on the worked example") {
    FormalContext c0 = make_c0();

    CHECK(extent(c0, ids({1})) == ids({1, 2}));
    CHECK(extent(c0, AttrSet()) == c0.all_objects());
    CHECK(extent(c0, ids({0, 2})).empty());

    CHECK(intent(c0, ids({1})) == ids({0, 1}));
    CHECK(intent(c0, ObjSet()) == c0.all_attrs());
    CHECK(intent(c0, c0.all_objects()).empty());

    CHECK(attr_closure(c0, ids({2})) == ids({1, 2}));
    CHECK(attr_closure(c0, ids({0, 1})) == ids({0, 1}));

    CHECK_THROWS_AS(extent(c0, ids({3})), Error);
    CHECK_THROWS_AS(intent(c0, ids({5})), Error);
}

TEST_CASE("galois property and closure laws, exhaustive") {
    FormalContext c0 = make_c0();
    for (std::uint64_t am = 0; am < 8; ++am)
        for (std::uint64_t bm = 0; bm < 8; ++bm) {
            ObjSet a = IndexSet::from_mask(am);
            AttrSet b = IndexSet::from_mask(bm);
            CHECK(a.subset_of(extent(c0, b)) == b.subset_of(intent(c0, a)));
        }
    for (std::uint64_t bm = 0; bm < 8; ++bm) {
        AttrSet b = IndexSet::from_mask(bm);
        AttrSet c = attr_closure(c0, b);
        CHECK(b.subset_of(c));
        CHECK(attr_closure(c0, c) == c);
        for (std::uint64_t bm2 = 0; bm2 < 8; ++bm2) {
            AttrSet b2 = IndexSet::from_mask(bm | bm2);
            CHECK(c.subset_of(attr_closure(c0, b2)));
        }
    }
}

TEST_CASE("formal concepts of the worked example") {
    FormalContext c0 = make_c0();
    CHECK(is_formal_concept(c0, ids({1, 2})));
    CHECK_FALSE(is_formal_concept(c0, ids({2})));
    CHECK(is_formal_concept(c0, c0.all_attrs()));

    std::vector<AttrSet> expect = {AttrSet(),   ids({0}),    ids({1}),
                                   ids({0, 1}), ids({1, 2}), ids({0, 1, 2})};
    CHECK(enumerate_formal_concepts(c0) == expect);
    CHECK(closed_attr_sets(c0) == expect);
}

TEST_CASE("concept enumeration edge cases") {
    // single incident pair: the empty set closes up to {m1}
    FormalContext one = FormalContext::make({"g"}, {"m"}, {{0, 0}});
    CHECK(enumerate_formal_concepts(one) == std::vector<AttrSet>{ids({0})});

    // empty incidence: closure of anything nonempty is everything
    FormalContext empty_inc = FormalContext::make({"g1", "g2"}, {"m1", "m2"}, {});
    CHECK(enumerate_formal_concepts(empty_inc) ==
          std::vector<AttrSet>{AttrSet(), ids({0, 1})});

    // degenerate contexts stay total
    FormalContext no_attrs = FormalContext::make({"g"}, {}, {});
    CHECK(enumerate_formal_concepts(no_attrs) == std::vector<AttrSet>{AttrSet()});
    FormalContext no_objs = FormalContext::make({}, {"m"}, {});
    CHECK(attr_closure(no_objs, AttrSet()) == ids({0}));
    FormalContext nothing = FormalContext::make({}, {}, {});
    CHECK(enumerate_formal_concepts(nothing) == std::vector<AttrSet>{AttrSet()});

    // the exhaustive enumerator refuses oversized contexts
    std::vector<std::string> many;
    for (int i = 0; i < 21; ++i) many.push_back("m" + std::to_string(i));
    FormalContext wide = FormalContext::make({"g"}, many, {});
    CHECK_THROWS_AS(enumerate_formal_concepts(wide), Error);
    CHECK(closed_attr_sets(wide).size() == 2);
}

TEST_CASE("approximable equals closed on finite contexts") {
    FormalContext c0 = make_c0();
    CHECK(is_approximable_concept(c0, ids({0, 1})));
    CHECK_FALSE(is_approximable_concept(c0, ids({2})));
    CHECK(is_approximable_concept(c0, AttrSet()));

    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        FormalContext ctx = random_context(seed, 4, 5, 0.4);
        for (std::uint64_t m = 0; m < 32; ++m) {
            AttrSet q = IndexSet::from_mask(m);
            bool fast = is_approximable_concept(ctx, q);
            CHECK(fast == is_approximable_concept_oracle(ctx, q));
            CHECK(fast == is_formal_concept(ctx, q));
        }
    }
}

TEST_CASE("concepts are closed under intersection") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        FormalContext ctx = random_context(seed, 5, 5);
        std::vector<AttrSet> cs = enumerate_formal_concepts(ctx);
        for (const AttrSet& x : cs)
            for (const AttrSet& y : cs) {
                AttrSet meet = x;
                meet &= y;
                CHECK(is_formal_concept(ctx, meet));
            }
    }
}

TEST_CASE("cxt writer produces the canonical form") {
    std::string expect =
        "B\n"
        "\n"
        "3\n"
        "3\n"
        "\n"
        "o1\n"
        "o2\n"
        "o3\n"
        "m1\n"
        "m2\n"
        "m3\n"
        "X..\n"
        "XX.\n"
        ".XX\n";
    CHECK(write_cxt(make_c0()) == expect);
    CHECK(read_cxt(expect) == make_c0());
}

TEST_CASE("cxt reader accepts common layout variants") {
    // no name line, no separating blank line
    FormalContext c = read_cxt("B\n2\n1\ng1\ng2\nm\nX\n.\n");
    CHECK(c.object_count() == 2);
    CHECK(c.incident(0, 0));
    CHECK_FALSE(c.incident(1, 0));

    // name line and CRLF endings
    FormalContext c2 = read_cxt("B\r\nmy context\r\n2\r\n1\r\n\r\ng1\r\ng2\r\nm\r\nX\r\n.\r\n");
    CHECK(c2 == c);
}

TEST_CASE("cxt reader rejects malformed input") {
    CHECK_THROWS_AS(read_cxt(""), Error);
    CHECK_THROWS_AS(read_cxt("Q\n1\n1\ng\nm\nX\n"), Error);
    CHECK_THROWS_AS(read_cxt("B\n1\n1\ng\nm\n"), Error);        // missing row
    CHECK_THROWS_AS(read_cxt("B\n1\n1\ng\nm\nXX\n"), Error);    // row too long
    CHECK_THROWS_AS(read_cxt("B\n1\n1\ng\nm\nY\n"), Error);     // bad cell
    CHECK_THROWS_AS(read_cxt("B\nname\nnope\n1\ng\nm\nX\n"), Error);
}

TEST_CASE("cxt round trip on random contexts") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        FormalContext ctx = random_context(seed, 1 + seed % 6, 1 + seed % 5);
        CHECK(read_cxt(write_cxt(ctx)) == ctx);
    }
}
