#include "doctest.h"

#include <memory>

#include "fcad/generators.hpp"
#include "fcad/morphisms.hpp"
#include "test_util.hpp"

using namespace fcad;

namespace {

std::shared_ptr<const AcfContext> shared_induced_c0() {
    return std::make_shared<const AcfContext>(induced_acf(make_c0()));
}

std::shared_ptr<const ConceptPoset> shared_concepts(std::shared_ptr<const AcfContext> acf) {
    return std::make_shared<const ConceptPoset>(enumerate_concepts(std::move(acf)));
}

// every monotone concept function between two bundles, via the underlying
// order posets (indices line up by construction)
std::vector<ConceptFunction> all_concept_functions(const std::shared_ptr<const ConceptPoset>& a,
                                                   const std::shared_ptr<const ConceptPoset>& b) {
    std::vector<ConceptFunction> out;
    for (const auto& m : enumerate_monotone_maps(a->order(), b->order()))
        out.push_back(ConceptFunction{a, b, m.map});
    return out;
}

}  // namespace

TEST_CASE("identity morphism") {
    auto acf = shared_induced_c0();
    auto id = identity_morphism(acf);

    CHECK(validate(id).pass());
    for (int f = 0; f < acf->selection().size(); ++f)
        CHECK(id.image(f) == acf->member_bracket(f));

    SUBCASE("applies as the identity on concepts") {
        auto cp = enumerate_concepts(acf);
        for (int i = 0; i < cp.size(); ++i)
            CHECK(apply(id, cp.concept_at(i).attrs) == cp.concept_at(i).attrs);
        CHECK(apply(id, AttrSet{}) == AttrSet{});
        // non-concepts fill up to the union of contained brackets
        CHECK(apply(id, ids({0, 2})) == ids({0, 1, 2}));
    }

    SUBCASE("induces the identity concept function") {
        auto f = to_function(id);
        for (int i = 0; i < static_cast<int>(f.map.size()); ++i) CHECK(f(i) == i);
        CHECK(from_function(f) == id);
    }
}

TEST_CASE("morphism validation catches broken image maps") {
    auto acf = shared_induced_c0();
    auto id = identity_morphism(acf);

    SUBCASE("image map must be total and in range") {
        auto img = id.images();
        img.pop_back();
        CHECK_THROWS_AS(FMorphism(acf, acf, img), Error);
        img = id.images();
        img[0] = ids({4});
        CHECK_THROWS_AS(FMorphism(acf, acf, img), Error);
    }

    SUBCASE("shrinking the top image breaks monotonicity in the bracket") {
        auto img = id.images();
        img[6] = ids({0, 1});  // {m1,m2,m3} pretends to map lower
        auto broken = FMorphism(acf, acf, img);
        auto rep_out = validate(broken);
        CHECK_FALSE(rep_out.pass());
        CHECK_FALSE(rep_out.ar2.pass);
        CHECK_FALSE(rep_out.ar2.counterexample.empty());
    }

    SUBCASE("an empty image cannot host the empty subset witness") {
        auto img = id.images();
        img[1] = AttrSet{};  // member {m2}
        auto broken = FMorphism(acf, acf, img);
        auto rep_out = validate(broken);
        CHECK_FALSE(rep_out.pass());
        CHECK_FALSE(rep_out.ar3.pass);
    }
}

TEST_CASE("morphisms and monotone concept functions are two views of one thing") {
    auto a = shared_concepts(shared_induced_c0());
    auto b = shared_concepts(rep(FinitePoset::diamond()).acf);

    SUBCASE("every monotone function lifts to a valid morphism and back") {
        int count = 0;
        for (const auto& f : all_concept_functions(a, b)) {
            auto h = from_function(f);
            auto rep_out = validate(h);
            CHECK_MESSAGE(rep_out.pass(), rep_out.to_string());
            CHECK(rep_out.consistent.pass);
            CHECK(to_function(h) == f);
            ++count;
        }
        CHECK(count == static_cast<int>(enumerate_monotone_maps(a->order(), b->order()).size()));
    }

    SUBCASE("the reverse composite is the identity on morphisms") {
        for (const auto& f : all_concept_functions(b, a)) {
            auto h = from_function(f);
            CHECK(from_function(to_function(h)) == h);
        }
    }

    SUBCASE("non-monotone functions are rejected") {
        auto chain = shared_concepts(rep(FinitePoset::chain(2)).acf);
        ConceptFunction down{chain, chain, {1, 0}};
        REQUIRE_FALSE(is_monotone(down));
        CHECK_THROWS_AS(from_function(down), Error);
    }
}

TEST_CASE("composition") {
    auto a = shared_induced_c0();
    auto b = std::make_shared<const AcfContext>(*rep(FinitePoset::diamond()).acf);
    auto c = std::make_shared<const AcfContext>(*rep(FinitePoset::chain(2)).acf);
    auto cpa = shared_concepts(a);
    auto cpb = shared_concepts(b);
    auto cpc = shared_concepts(c);

    auto h1 = from_function(all_concept_functions(cpa, cpb).back());
    auto h2 = from_function(all_concept_functions(cpb, cpc).back());

    SUBCASE("identities are neutral") {
        CHECK(compose(h1, identity_morphism(a)) == h1);
        CHECK(compose(identity_morphism(b), h1) == h1);
    }

    SUBCASE("to_function distributes over composition") {
        auto g = compose(h2, h1);
        auto gf = to_function(g);
        auto f1 = to_function(h1);
        auto f2 = to_function(h2);
        for (int i = 0; i < cpa->size(); ++i) CHECK(gf(i) == f2(f1(i)));
    }

    SUBCASE("associativity") {
        auto h3 = from_function(all_concept_functions(cpc, cpa).front());
        CHECK(compose(h3, compose(h2, h1)) == compose(compose(h3, h2), h1));
    }

    SUBCASE("context mismatch is rejected") {
        CHECK_THROWS_AS(compose(h1, h2), Error);
    }
}

TEST_CASE("structural facts about valid morphisms") {
    auto a = shared_induced_c0();
    auto props = check_morphism_props(identity_morphism(a));
    CHECK(props.refinement.pass);
    CHECK(props.monotone_in_member.pass);

    auto cpa = shared_concepts(a);
    auto cpb = shared_concepts(rep(FinitePoset::diamond()).acf);
    for (const auto& f : all_concept_functions(cpa, cpb))
        CHECK(check_morphism_props(from_function(f)).pass());
}

TEST_CASE("correspondence with monotone maps between represented domains") {
    auto rc_d = rep(FinitePoset::chain(2));
    auto rc_e = rep(FinitePoset::diamond());
    auto pd = std::make_shared<const FinitePoset>(rc_d.domain);
    auto pe = std::make_shared<const FinitePoset>(rc_e.domain);

    SUBCASE("identity map becomes the identity morphism") {
        auto id_map = MonotoneMap{pd, pd, {0, 1}};
        auto rc_d2 = rep(FinitePoset::chain(2));
        CHECK(from_scott(rc_d, rc_d2, id_map) == identity_morphism(rc_d.acf));
    }

    SUBCASE("constant-bottom map collapses every image") {
        auto cmap = MonotoneMap{pd, pe, {0, 0}};
        auto h = from_scott(rc_d, rc_e, cmap);
        for (const auto& img : h.images()) CHECK(img == ids({0}));
    }

    SUBCASE("round trips both ways on every monotone map") {
        for (const auto& f : enumerate_monotone_maps(pd, pe)) {
            auto h = from_scott(rc_d, rc_e, f);
            CHECK(validate(h).pass());
            CHECK(to_scott(rc_d, rc_e, h) == f);
            CHECK(from_scott(rc_d, rc_e, to_scott(rc_d, rc_e, h)) == h);
            CHECK(check_image_approximants(rc_d, rc_e, f).pass);
        }
    }

    SUBCASE("rejections") {
        // wrong domains
        auto foreign = MonotoneMap{pe, pe, {0, 1, 2, 3}};
        CHECK_THROWS_AS(from_scott(rc_d, rc_e, foreign), Error);
        CHECK_THROWS_AS(to_scott(rc_d, rc_e, identity_morphism(shared_induced_c0())), Error);
        // order-reversing map
        auto down = MonotoneMap{pd, pd, {1, 0}};
        CHECK_THROWS_AS(from_scott(rc_d, rc_d, down), Error);
    }
}

TEST_CASE("category laws over a small object sample") {
    std::vector<std::shared_ptr<const AcfContext>> objects{
        shared_induced_c0(),
        rep(FinitePoset::chain(2)).acf,
        rep(FinitePoset::antichain(2)).acf,
    };
    auto r = functor_check(objects);
    CHECK_MESSAGE(r.identity_law.pass, r.identity_law.counterexample);
    CHECK_MESSAGE(r.composition_law.pass, r.composition_law.counterexample);
    CHECK_MESSAGE(r.homset_bijection.pass, r.homset_bijection.counterexample);
    CHECK_FALSE(r.to_string().empty());

    CHECK_THROWS_AS(functor_check({}), Error);
    CHECK_THROWS_AS(functor_check(objects, 2), Error);
}
