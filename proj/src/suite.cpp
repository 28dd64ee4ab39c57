#include "fcad/suite.hpp"

#include <future>
#include <random>

#include "fcad/chains.hpp"
#include "fcad/concepts.hpp"
#include "fcad/context.hpp"
#include "fcad/cxt_io.hpp"
#include "fcad/generators.hpp"
#include "fcad/morphisms.hpp"
#include "fcad/representation.hpp"
#include "fcad/subclasses.hpp"

namespace fcad {

namespace {

void fail_case(CheckResult& r, std::string msg) {
    if (r.pass) {
        r.pass = false;
        r.counterexample = std::move(msg);
    }
}

AcfContext under_test(const AcfContext& a, BracketMutation m) {
    return m == BracketMutation::None ? a : a.with_mutation(m);
}

RepContext under_test(RepContext rc, BracketMutation m) {
    if (m != BracketMutation::None) rc.acf = std::make_shared<AcfContext>(rc.acf->with_mutation(m));
    return rc;
}

AttrSet random_subset(std::mt19937_64& rng, int attrs) {
    AttrSet s;
    for (int m = 0; m < attrs; ++m)
        if (rng() & 1u) s.set(m);
    return s;
}

void check_closure_laws(const SuiteConfig& cfg, CheckResult& r) {
    std::mt19937_64 rng(cfg.seed);
    for (int i = 0; i < cfg.count && r.pass; ++i) {
        int objects = 1 + static_cast<int>(rng() % static_cast<unsigned>(cfg.max_objects));
        int attrs = 1 + static_cast<int>(rng() % static_cast<unsigned>(cfg.max_attrs));
        FormalContext ctx = random_context(rng(), objects, attrs);
        for (int t = 0; t < 8; ++t) {
            AttrSet b1 = random_subset(rng, attrs);
            AttrSet b2 = b1;
            b2 |= random_subset(rng, attrs);
            AttrSet c1 = attr_closure(ctx, b1);
            if (!b1.subset_of(c1)) fail_case(r, "closure not extensive at " + b1.to_string());
            if (!(attr_closure(ctx, c1) == c1))
                fail_case(r, "closure not idempotent at " + b1.to_string());
            if (!c1.subset_of(attr_closure(ctx, b2)))
                fail_case(r, "closure not monotone at " + b1.to_string() + " vs " + b2.to_string());
            ObjSet a = extent(ctx, random_subset(rng, attrs));
            AttrSet b = random_subset(rng, attrs);
            if (b.subset_of(intent(ctx, a)) != a.subset_of(extent(ctx, b)))
                fail_case(r, "derivation pair not adjoint at " + b.to_string());
        }
        ++r.instances;
    }
}

void check_concept_lattice(const SuiteConfig& cfg, CheckResult& r) {
    std::mt19937_64 rng(cfg.seed ^ 0xa11ce);
    for (int i = 0; i < cfg.count && r.pass; ++i) {
        int objects = 1 + static_cast<int>(rng() % static_cast<unsigned>(cfg.max_objects));
        int attrs = 1 + static_cast<int>(rng() % static_cast<unsigned>(cfg.max_attrs));
        FormalContext ctx = random_context(rng(), objects, attrs);
        std::vector<AttrSet> cs = enumerate_formal_concepts(ctx);
        if (!(cs == closed_attr_sets(ctx))) {
            fail_case(r, "the two concept enumerations disagree");
            break;
        }
        std::vector<std::string> labels;
        std::vector<std::vector<bool>> leq(cs.size(), std::vector<bool>(cs.size()));
        for (std::size_t x = 0; x < cs.size(); ++x) {
            labels.push_back(cs[x].to_string());
            for (std::size_t y = 0; y < cs.size(); ++y) leq[x][y] = cs[x].subset_of(cs[y]);
        }
        FinitePoset order = FinitePoset::from_leq(labels, leq);
        if (!is_complete_lattice(order)) {
            fail_case(r, "concept order is not a complete lattice on instance " + std::to_string(i));
            break;
        }
        for (int t = 0; t < 8; ++t) {
            AttrSet q = random_subset(rng, attrs);
            if (is_approximable_concept(ctx, q) != is_approximable_concept_oracle(ctx, q))
                fail_case(r, "approximable-concept readings disagree at " + q.to_string());
            if (is_approximable_concept(ctx, q) != is_formal_concept(ctx, q))
                fail_case(r, "approximable differs from closed at " + q.to_string());
        }
        ++r.instances;
    }
}

void check_induced_concepts(const SuiteConfig& cfg, CheckResult& r) {
    std::mt19937_64 rng(cfg.seed ^ 0x1d0ced);
    for (int i = 0; i < cfg.count && r.pass; ++i) {
        int objects = 1 + static_cast<int>(rng() % static_cast<unsigned>(cfg.max_objects));
        int attrs = 1 + static_cast<int>(rng() % static_cast<unsigned>(cfg.max_attrs));
        FormalContext ctx = random_context(rng(), objects, attrs);
        try {
            AcfContext acf = under_test(induced_acf(ctx), cfg.mutate);
            for (const AttrSet& q : closed_attr_sets(ctx)) {
                bool expect = !q.empty();
                if (is_continuous_concept(acf, q) != expect) {
                    fail_case(r, "induced-context concepts differ from closed sets at " +
                                     q.to_string());
                    break;
                }
            }
            if (check_fc(ctx, acf.selection()))
                for (int t = 0; t < 8; ++t) {
                    AttrSet q = random_subset(rng, attrs);
                    if (q.empty()) continue;
                    if (is_f_approximable(ctx, acf.selection(), q) != is_continuous_concept(acf, q))
                        fail_case(r, "conditional approximability disagrees at " + q.to_string());
                }
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::SizeLimit) continue;
            fail_case(r, e.what());
        }
        ++r.instances;
    }
}

void check_selection_consistency(const SuiteConfig& cfg, CheckResult& r) {
    std::mt19937_64 rng(cfg.seed ^ 0x5e1ec7);
    for (int i = 0; i < cfg.count && r.pass; ++i) {
        AcfGenResult g = random_valid_acf(rng(), std::min(cfg.max_attrs, 6),
                                          std::min(cfg.max_objects, 8));
        const AcfContext& acf = g.acf;
        Ca1Report fast = check_ca1(acf.context(), acf.kernel(), acf.selection());
        Ca1Report slow = check_ca1_oracle(acf.context(), acf.kernel(), acf.selection(), 10);
        if (fast.pass != slow.pass)
            fail_case(r, "the two selection-consistency readings disagree on instance " +
                             std::to_string(i));
        ++r.instances;
    }
}

void check_bracket_laws(const SuiteConfig& cfg, CheckResult& r) {
    std::mt19937_64 rng(cfg.seed ^ 0xb7ac3e7);
    for (int i = 0; i < cfg.count && r.pass; ++i) {
        AcfGenResult g = random_valid_acf(rng(), std::min(cfg.max_attrs, 6),
                                          std::min(cfg.max_objects, 8));
        AcfContext acf = under_test(g.acf, cfg.mutate);
        int attrs = acf.context().attribute_count();
        for (int t = 0; t < 8 && r.pass; ++t) {
            AttrSet b1 = random_subset(rng, attrs);
            AttrSet b2 = b1;
            b2 |= random_subset(rng, attrs);
            AttrSet br = acf.bracket_of(b1);
            if (!(acf.bracket_of(br) == br))
                fail_case(r, "bracket not idempotent at " + b1.to_string());
            if (!br.subset_of(acf.bracket_of(b2)))
                fail_case(r, "bracket not monotone at " + b1.to_string() + " vs " + b2.to_string());
        }
        ++r.instances;
    }
}

void check_waybelow_agreement(const SuiteConfig& cfg, CheckResult& r) {
    std::mt19937_64 rng(cfg.seed ^ 0x3b);
    for (int i = 0; i < cfg.count && r.pass; ++i) {
        AcfGenResult g = random_valid_acf(rng(), std::min(cfg.max_attrs, 6),
                                          std::min(cfg.max_objects, 8));
        try {
            AcfContext acf = under_test(g.acf, cfg.mutate);
            ConceptPoset cp = enumerate_concepts(acf);
            if (cp.size() > 12) continue;
            std::vector<IndexSet> bf = waybelow_matrix_bruteforce(*cp.order(), 12);
            if (!(bf == cp.waybelow_rows())) {
                fail_case(r, "witnessed way-below differs from the directed-set relation on instance " +
                                 std::to_string(i));
                break;
            }
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::SizeLimit) continue;
            fail_case(r, e.what());
        }
        ++r.instances;
    }
}

void check_rep_roundtrip(const SuiteConfig& cfg, CheckResult& r) {
    std::vector<FinitePoset> posets = poset_catalog(std::min(cfg.max_poset, 4));
    std::mt19937_64 rng(cfg.seed ^ 0x4e9);
    for (int i = 0; i < std::min(cfg.count, 24); ++i)
        posets.push_back(random_poset(rng(), 1 + static_cast<int>(rng() % 6u)));
    for (const FinitePoset& p : posets) {
        if (!r.pass) break;
        try {
            RepContext rc = under_test(rep(p), cfg.mutate);
            RoundtripReport rt = verify_roundtrip(rc);
            if (!rt.ok) {
                fail_case(r, rt.detail);
                break;
            }
            RoundtripReport br = verify_rep_brackets(rc);
            if (!br.ok) {
                fail_case(r, br.detail);
                break;
            }
            if (p.size() <= 6) {
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.size()); ++mask) {
                    AttrSet q = AttrSet::from_mask(mask);
                    if (check_r1_r2(rc, q) != is_continuous_concept(*rc.acf, q)) {
                        fail_case(r, "down-closure characterization disagrees with membership at " +
                                         q.to_string(p.elements()));
                        break;
                    }
                }
            }
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::SizeLimit) continue;
            fail_case(r, e.what());
        }
        ++r.instances;
    }
}

void check_subclass_implications(const SuiteConfig& cfg, CheckResult& r) {
    std::mt19937_64 rng(cfg.seed ^ 0x5ab);
    for (int i = 0; i < cfg.count && r.pass; ++i) {
        AcfGenResult g = random_valid_acf(rng(), std::min(cfg.max_attrs, 5),
                                          std::min(cfg.max_objects, 6));
        try {
            SubclassReport sr = classify_acf(g.acf);
            auto imp = [&](bool syn, bool sem, const char* what) {
                if (syn && !sem)
                    fail_case(r, std::string(what) + " holds syntactically but not semantically on " +
                                     std::to_string(i));
            };
            if (sr.pointed.pass != sr.semantic.is_pointed)
                fail_case(r, "pointedness readings disagree on instance " + std::to_string(i));
            if (sr.topped.pass != sr.semantic.has_top)
                fail_case(r, "top readings disagree on instance " + std::to_string(i));
            imp(sr.ad.pass, sr.semantic.is_algebraic, "algebraicity condition");
            // The consistency condition yields sups of pairwise-bounded
            // concepts but no least one, so its semantic counterpart is
            // bounded completeness without the empty set.
            if (sr.bc.pass) {
                ConceptPoset cp = enumerate_concepts(g.acf);
                auto ne = domain_classify(*cp.order(), EmptySetBoundConvention::BoundedExcludesEmpty);
                imp(true, ne.is_bounded_complete, "bounded completeness condition");
            }
            imp(sr.ss.pass(), sr.semantic.is_semilattice && sr.semantic.waybelow_multiplicative,
                "multiplicativity condition");
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::SizeLimit) continue;
            fail_case(r, e.what());
        }
        ++r.instances;
    }
}

void check_morphism_roundtrip(const SuiteConfig& cfg, CheckResult& r) {
    std::mt19937_64 rng(cfg.seed ^ 0x309a15);
    int rounds = std::max(1, cfg.count / 10);
    for (int i = 0; i < rounds && r.pass; ++i) {
        try {
            auto a = std::make_shared<const AcfContext>(
                under_test(random_valid_acf(rng(), 4, 5).acf, cfg.mutate));
            auto b = std::make_shared<const AcfContext>(
                under_test(random_valid_acf(rng(), 4, 5).acf, cfg.mutate));
            auto cpa = std::make_shared<ConceptPoset>(enumerate_concepts(a));
            auto cpb = std::make_shared<ConceptPoset>(enumerate_concepts(b));
            if (cpa->size() > 6 || cpb->size() > 5) continue;
            auto maps = enumerate_monotone_maps(cpa->order(), cpb->order());
            std::size_t step = std::max<std::size_t>(1, maps.size() / 12);
            for (std::size_t k = 0; k < maps.size() && r.pass; k += step) {
                ConceptFunction cf{cpa, cpb, maps[k].map};
                FMorphism h = from_function(cf);
                if (!validate(h).pass()) {
                    fail_case(r, "constructed morphism invalid on instance " + std::to_string(i));
                    break;
                }
                if (!(to_function(h) == cf) || !(from_function(to_function(h)) == h)) {
                    fail_case(r, "morphism round trip broken on instance " + std::to_string(i));
                    break;
                }
                FMorphism id1 = identity_morphism(a);
                FMorphism id2 = identity_morphism(b);
                if (!(compose(h, id1) == h) || !(compose(id2, h) == h)) {
                    fail_case(r, "identity not neutral on instance " + std::to_string(i));
                    break;
                }
            }
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::SizeLimit) continue;
            fail_case(r, e.what());
        }
        ++r.instances;
    }
}

void check_scott_correspondence(const SuiteConfig& cfg, CheckResult& r) {
    std::vector<FinitePoset> posets = poset_catalog(std::min(cfg.max_poset, 3));
    std::vector<RepContext> reps;
    for (const FinitePoset& p : posets) reps.push_back(under_test(rep(p), cfg.mutate));
    for (std::size_t x = 0; x < reps.size() && r.pass; ++x)
        for (std::size_t y = 0; y < reps.size() && r.pass; ++y) {
            auto ps = std::make_shared<const FinitePoset>(posets[x]);
            auto pt = std::make_shared<const FinitePoset>(posets[y]);
            try {
                for (const MonotoneMap& f : enumerate_monotone_maps(ps, pt)) {
                    FMorphism h = from_scott(reps[x], reps[y], f);
                    if (!validate(h).pass()) {
                        fail_case(r, "induced morphism invalid between catalog posets");
                        break;
                    }
                    if (!(to_scott(reps[x], reps[y], h).map == f.map)) {
                        fail_case(r, "map round trip broken between catalog posets");
                        break;
                    }
                    if (!(from_scott(reps[x], reps[y], to_scott(reps[x], reps[y], h)) == h)) {
                        fail_case(r, "morphism round trip broken between catalog posets");
                        break;
                    }
                    ConditionResult t = check_image_approximants(reps[x], reps[y], f);
                    if (!t.pass) {
                        fail_case(r, t.counterexample);
                        break;
                    }
                    ++r.instances;
                }
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::SizeLimit) continue;
                fail_case(r, e.what());
            }
        }
}

void check_chain_evidence(const SuiteConfig& cfg, CheckResult& r) {
    for (ChainFamily f : {ChainFamily::L1, ChainFamily::L2})
        for (int depth : {3, 10, std::max(3, cfg.depth)}) {
            ChainGapReport g = verify_chain_gap(f, depth);
            if (!g.pass())
                fail_case(r, family_name(f) + " gap evidence failed at depth " +
                                 std::to_string(depth));
            ++r.instances;
        }
    if (!l1_discontinuity_witness().pass()) fail_case(r, "discontinuity witness failed");
    ++r.instances;
}

void check_serialization(const SuiteConfig& cfg, CheckResult& r) {
    std::mt19937_64 rng(cfg.seed ^ 0x5e71a);
    for (int i = 0; i < cfg.count && r.pass; ++i) {
        int objects = 1 + static_cast<int>(rng() % static_cast<unsigned>(cfg.max_objects));
        int attrs = 1 + static_cast<int>(rng() % static_cast<unsigned>(cfg.max_attrs));
        FormalContext ctx = random_context(rng(), objects, attrs);
        if (!(context_from_json(context_to_json(ctx)) == ctx))
            fail_case(r, "context JSON round trip broken on instance " + std::to_string(i));
        if (!(read_cxt(write_cxt(ctx)) == ctx))
            fail_case(r, "cxt round trip broken on instance " + std::to_string(i));

        AcfGenResult g = random_valid_acf(rng(), std::min(cfg.max_attrs, 5),
                                          std::min(cfg.max_objects, 6));
        AcfDocument doc = acf_document_from_json(acf_to_json(g.acf));
        if (!(doc.context == g.acf.context()) || !(doc.kernel == g.acf.kernel()) ||
            !(doc.selection == g.acf.selection()))
            fail_case(r, "context document round trip broken on instance " + std::to_string(i));

        FinitePoset p = random_poset(rng(), 1 + static_cast<int>(rng() % 6u));
        if (!(poset_from_json(poset_to_json(p)) == p))
            fail_case(r, "poset JSON round trip broken on instance " + std::to_string(i));

        auto acf = std::make_shared<const AcfContext>(g.acf);
        FMorphism id = identity_morphism(acf);
        if (!(morphism_from_json(morphism_to_json(id)) == id))
            fail_case(r, "morphism JSON round trip broken on instance " + std::to_string(i));
        ++r.instances;
    }
}

struct CheckDef {
    const char* name;
    void (*fn)(const SuiteConfig&, CheckResult&);
};

constexpr CheckDef kChecks[] = {
    {"closure-laws", check_closure_laws},
    {"concept-lattice", check_concept_lattice},
    {"induced-concepts", check_induced_concepts},
    {"selection-consistency", check_selection_consistency},
    {"bracket-laws", check_bracket_laws},
    {"waybelow-agreement", check_waybelow_agreement},
    {"rep-roundtrip", check_rep_roundtrip},
    {"subclass-implications", check_subclass_implications},
    {"morphism-roundtrip", check_morphism_roundtrip},
    {"scott-correspondence", check_scott_correspondence},
    {"chain-evidence", check_chain_evidence},
    {"serialization", check_serialization},
};

}  // namespace

bool SuiteReport::ok() const {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

std::string SuiteReport::to_text() const {
    std::string s;
    for (const auto& r : results) {
        s += (r.pass ? "pass" : "FAIL");
        s += "  " + r.name + "  (" + std::to_string(r.instances) + " cases)";
        if (!r.pass) s += "\n      " + r.counterexample;
        s += "\n";
    }
    s += ok() ? "suite: all checks passed\n" : "suite: FAILURES\n";
    return s;
}

json SuiteReport::to_json() const {
    json j;
    j["seed"] = config.seed;
    j["count"] = config.count;
    json checks = json::array();
    for (const auto& r : results) {
        json c;
        c["name"] = r.name;
        c["pass"] = r.pass;
        c["cases"] = r.instances;
        if (!r.pass) c["counterexample"] = r.counterexample;
        checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    j["ok"] = ok();
    return j;
}

std::vector<std::string> suite_check_names() {
    std::vector<std::string> out;
    for (const auto& c : kChecks) out.emplace_back(c.name);
    return out;
}

SuiteReport run_suite(const SuiteConfig& cfg) {
    if (cfg.count < 1 || cfg.max_attrs < 1 || cfg.max_objects < 1 || cfg.max_poset < 1)
        fail_input("suite bounds and count must be positive");
    std::vector<const CheckDef*> selected;
    for (const std::string& name : cfg.checks) {
        const CheckDef* found = nullptr;
        for (const auto& c : kChecks)
            if (name == c.name) found = &c;
        if (!found) fail_input("unknown check '" + name + "'");
        selected.push_back(found);
    }

    SuiteReport report;
    report.config = cfg;
    std::vector<std::future<CheckResult>> tasks;
    for (const CheckDef* c : selected)
        tasks.push_back(std::async(std::launch::async, [c, &cfg] {
            CheckResult r;
            r.name = c->name;
            try {
                c->fn(cfg, r);
            } catch (const std::exception& e) {
                fail_case(r, std::string("unexpected error: ") + e.what());
            }
            return r;
        }));
    for (auto& t : tasks) report.results.push_back(t.get());
    return report;
}

}  // namespace fcad
