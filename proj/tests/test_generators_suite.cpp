#include "doctest.h"

#include "fcad/generators.hpp"
#include "fcad/suite.hpp"
#include "test_util.hpp"

using namespace fcad;

TEST_CASE("random context generator") {
    CHECK(random_context(7, 4, 5) == random_context(7, 4, 5));
    CHECK_FALSE(random_context(7, 4, 5) == random_context(8, 4, 5));

    auto empty = random_context(3, 3, 3, 0.0);
    CHECK(empty == FormalContext::make(empty.objects(), empty.attributes(), {}));
    auto full = random_context(3, 3, 3, 1.0);
    for (int o = 0; o < 3; ++o)
        for (int a = 0; a < 3; ++a) CHECK(full.incident(o, a));
}

TEST_CASE("random poset generator") {
    auto p = random_poset(11, 6);
    CHECK(p == random_poset(11, 6));
    CHECK(p.size() == 6);
    // construction validates; a rebuild from the same order must agree
    std::vector<std::vector<bool>> m(6, std::vector<bool>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = p.leq(i, j);
    CHECK(FinitePoset::from_leq(p.elements(), m) == p);
}

TEST_CASE("random valid bundle generator") {
    int fallbacks = 0, table_kernels = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = random_valid_acf(seed, 5, 6);
        // postcondition: the bundle revalidates from scratch
        auto res = build_acf(g.acf.context(), g.acf.kernel(), g.acf.selection());
        REQUIRE(res.ok());
        CHECK(res.value() == g.acf);
        CHECK(g.rejections >= 0);
        fallbacks += g.fallback ? 1 : 0;
        table_kernels += g.acf.kernel().kind() == KernelOperator::Kind::Table ? 1 : 0;
    }
    // the sampler must exercise non-identity kernels, not only the fallback
    CHECK(table_kernels > 0);
    CHECK(fallbacks < 40);

    CHECK(random_valid_acf(5, 4, 5).acf == random_valid_acf(5, 4, 5).acf);
    CHECK_THROWS_AS(random_valid_acf(1, 7, 5), Error);
    CHECK_THROWS_AS(random_valid_acf(1, 4, 9), Error);
}

TEST_CASE("property-check suite") {
    SuiteConfig cfg;
    cfg.count = 8;
    cfg.max_attrs = 4;
    cfg.max_objects = 4;
    cfg.max_poset = 3;
    cfg.depth = 8;

    SUBCASE("default configuration runs every registered check and passes") {
        auto names = suite_check_names();
        CHECK(cfg.checks == names);
        auto report = run_suite(cfg);
        REQUIRE(report.results.size() == names.size());
        for (std::size_t i = 0; i < names.size(); ++i) {
            CHECK(report.results[i].name == names[i]);
            CHECK_MESSAGE(report.results[i].pass, report.results[i].counterexample);
            CHECK(report.results[i].instances > 0);
        }
        CHECK(report.ok());
        CHECK(report.to_text().find("pass") != std::string::npos);
    }

    SUBCASE("an explicitly empty check list is an empty success") {
        cfg.checks.clear();
        auto report = run_suite(cfg);
        CHECK(report.results.empty());
        CHECK(report.ok());
    }

    SUBCASE("a named subset runs exactly those checks") {
        cfg.checks = {"closure-laws", "serialization"};
        auto report = run_suite(cfg);
        REQUIRE(report.results.size() == 2);
        CHECK(report.results[0].name == "closure-laws");
        CHECK(report.results[1].name == "serialization");
        CHECK(report.ok());
    }

    SUBCASE("unknown names and bad bounds are rejected") {
        cfg.checks = {"not-a-check"};
        CHECK_THROWS_AS(run_suite(cfg), Error);
        cfg = SuiteConfig{};
        cfg.count = 0;
        CHECK_THROWS_AS(run_suite(cfg), Error);
    }

    SUBCASE("report serialization is byte-stable") {
        cfg.checks = {"closure-laws", "chain-evidence"};
        auto a = dump_json(run_suite(cfg).to_json());
        auto b = dump_json(run_suite(cfg).to_json());
        CHECK(a == b);
        CHECK(a.find("\"seed\"") != std::string::npos);
    }

    SUBCASE("shrinking the kernel is detected") {
        cfg.checks = {"waybelow-agreement", "bracket-laws", "rep-roundtrip"};
        cfg.max_attrs = 5;
        cfg.max_objects = 5;
        cfg.mutate = BracketMutation::ShrinkKernel;
        auto report = run_suite(cfg);
        CHECK_FALSE(report.ok());
        int failed = 0;
        for (const auto& r : report.results) {
            if (r.pass) continue;
            ++failed;
            CHECK_FALSE(r.counterexample.empty());
        }
        CHECK(failed == 3);
    }

    SUBCASE("skipping the kernel is extensionally invisible") {
        // dropping the kernel step turns the bracket into the closure,
        // itself a lawful bracket, and on representation or induced
        // contexts the kernel is the identity on closed sets anyway; every
        // internal-consistency law therefore still holds
        cfg.checks = {"waybelow-agreement", "bracket-laws", "rep-roundtrip"};
        cfg.max_attrs = 5;
        cfg.max_objects = 5;
        cfg.mutate = BracketMutation::SkipKernel;
        auto report = run_suite(cfg);
        CHECK(report.ok());
    }
}
