#include "fcad/morphisms.hpp"

#include <random>
#include <set>
#include <unordered_set>

#include "fcad/context.hpp"

namespace fcad {

namespace {

// All subsets of s (including the empty one) when s is small enough,
// otherwise a fixed-seed sample that always contains {} and s itself.
std::vector<AttrSet> finite_subsets(const AttrSet& s, int max_bits, int samples, bool& sampled) {
    std::vector<int> idx = s.indices();
    int k = static_cast<int>(idx.size());
    std::vector<AttrSet> out;
    if (k <= max_bits) {
        out.reserve(std::size_t{1} << k);
        for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
            AttrSet m;
            for (int b = 0; b < k; ++b)
                if ((pick >> b) & 1u) m.set(idx[static_cast<std::size_t>(b)]);
            out.push_back(m);
        }
        return out;
    }
    sampled = true;
    std::mt19937_64 rng(s.hash() ^ 0x5eedULL);
    out.push_back(AttrSet{});
    out.push_back(s);
    for (int t = 0; t < samples; ++t) {
        AttrSet m;
        for (int b : idx)
            if (rng() & 1u) m.set(b);
        out.push_back(m);
    }
    return out;
}

}  // namespace

FMorphism::FMorphism(std::shared_ptr<const AcfContext> source,
                     std::shared_ptr<const AcfContext> target,
                     std::vector<AttrSet> images)
    : src_(std::move(source)), dst_(std::move(target)), img_(std::move(images)) {
    if (!src_ || !dst_) fail_input("morphism needs both contexts");
    if (static_cast<int>(img_.size()) != src_->selection().size())
        fail_input("morphism needs one image per source selection member");
    for (const auto& s : img_) check_attr_set(dst_->context(), s, "morphism image");
}

std::vector<std::pair<int, int>> FMorphism::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int f = 0; f < static_cast<int>(img_.size()); ++f)
        img_[static_cast<std::size_t>(f)].for_each([&](int x) { out.emplace_back(f, x); });
    return out;
}

std::string MorphismReport::to_string() const {
    auto line = [](const char* n, const ConditionResult& c) {
        std::string s = std::string(n) + ": " + (c.pass ? "pass" : "FAIL");
        if (!c.pass) s += " (" + c.counterexample + ")";
        return s + "\n";
    };
    std::string s;
    s += line("image bracket closure   ", ar1);
    s += line("image monotonicity      ", ar2);
    s += line("finite subset witnesses ", ar3);
    s += line("pointwise interpolation ", ar4);
    s += line("combined interpolation  ", ar5);
    s += line("form agreement          ", consistent);
    if (sampled) s += "(subset quantifiers sampled on oversized images)\n";
    return s;
}

MorphismReport validate(const FMorphism& h, int max_bits, int samples) {
    MorphismReport r;
    const AcfContext& src = h.source();
    const AcfContext& dst = h.target();
    const Selection& fs = src.selection();
    const Selection& fs2 = dst.selection();
    auto sname = [&](const AttrSet& s) { return s.to_string(src.context().attributes()); };
    auto dname = [&](const AttrSet& s) { return s.to_string(dst.context().attributes()); };

    // members refining F: those contained in F's bracket
    std::vector<std::vector<int>> refiners(static_cast<std::size_t>(fs.size()));
    for (int f = 0; f < fs.size(); ++f)
        for (int g = 0; g < fs.size(); ++g)
            if (fs.member(g).subset_of(src.member_bracket(f)))
                refiners[static_cast<std::size_t>(f)].push_back(g);

    // target brackets reachable from each member: brackets of target members
    // inside its image
    std::vector<std::vector<AttrSet>> reach(static_cast<std::size_t>(fs.size()));
    for (int f = 0; f < fs.size(); ++f) {
        std::unordered_set<IndexSet, IndexSetHash> seen;
        for (int g2 = 0; g2 < fs2.size(); ++g2)
            if (fs2.member(g2).subset_of(h.image(f))) {
                const AttrSet& b = dst.member_bracket(g2);
                if (seen.insert(b).second) reach[static_cast<std::size_t>(f)].push_back(b);
            }
    }

    for (int f = 0; f < fs.size() && r.ar1.pass; ++f)
        for (int f2 = 0; f2 < fs2.size(); ++f2)
            if (fs2.member(f2).subset_of(h.image(f)) &&
                !dst.member_bracket(f2).subset_of(h.image(f))) {
                r.ar1 = {false, "target member " + dname(fs2.member(f2)) + " lies in the image of " +
                                    sname(fs.member(f)) + " but its bracket escapes it"};
                break;
            }

    for (int f = 0; f < fs.size() && r.ar2.pass; ++f)
        for (int g : refiners[static_cast<std::size_t>(f)])
            if (!h.image(g).subset_of(h.image(f))) {
                r.ar2 = {false, "member " + sname(fs.member(g)) + " refines " + sname(fs.member(f)) +
                                    " but its image is not contained"};
                break;
            }

    for (int f = 0; f < fs.size(); ++f) {
        std::vector<AttrSet> msets = finite_subsets(h.image(f), max_bits, samples, r.sampled);
        for (const AttrSet& m : msets) {
            if (r.ar3.pass) {
                bool found = false;
                for (int f2 = 0; f2 < fs2.size() && !found; ++f2)
                    found = m.subset_of(fs2.member(f2)) && fs2.member(f2).subset_of(h.image(f));
                if (!found)
                    r.ar3 = {false, "no target member between " + dname(m) + " and the image of " +
                                        sname(fs.member(f))};
            }
            if (r.ar5.pass) {
                bool found = false;
                for (int g : refiners[static_cast<std::size_t>(f)]) {
                    for (const AttrSet& b : reach[static_cast<std::size_t>(g)])
                        if (m.subset_of(b)) {
                            found = true;
                            break;
                        }
                    if (found) break;
                }
                if (!found)
                    r.ar5 = {false, "no refining member of " + sname(fs.member(f)) +
                                        " reaches a bracket holding " + dname(m)};
            }
        }
        if (r.ar4.pass) {
            bool bad = false;
            h.image(f).for_each([&](int x) {
                if (bad) return;
                bool found = false;
                for (int g : refiners[static_cast<std::size_t>(f)]) {
                    for (const AttrSet& b : reach[static_cast<std::size_t>(g)])
                        if (b.test(x)) {
                            found = true;
                            break;
                        }
                    if (found) break;
                }
                if (!found) {
                    r.ar4 = {false, "attribute " + dst.context().attributes()[static_cast<std::size_t>(x)] +
                                        " in the image of " + sname(fs.member(f)) +
                                        " has no interpolating member pair"};
                    bad = true;
                }
            });
        }
    }

    if (r.ar1.pass && r.ar2.pass && (r.ar3.pass && r.ar4.pass) != r.ar5.pass)
        r.consistent = {false, "the two interpolation forms disagree under the first two axioms"};
    return r;
}

AttrSet apply(const FMorphism& h, const AttrSet& x) {
    check_attr_set(h.source().context(), x, "morphism argument");
    AttrSet out;
    const Selection& fs = h.source().selection();
    for (int f = 0; f < fs.size(); ++f)
        if (fs.member(f).subset_of(x)) out |= h.image(f);
    return out;
}

bool ConceptFunction::operator==(const ConceptFunction& o) const {
    if (map != o.map) return false;
    if (source->size() != o.source->size() || target->size() != o.target->size()) return false;
    for (int i = 0; i < source->size(); ++i)
        if (!(source->concept_at(i).attrs == o.source->concept_at(i).attrs)) return false;
    for (int i = 0; i < target->size(); ++i)
        if (!(target->concept_at(i).attrs == o.target->concept_at(i).attrs)) return false;
    return true;
}

bool is_monotone(const ConceptFunction& f) {
    if (static_cast<int>(f.map.size()) != f.source->size()) return false;
    return is_monotone(*f.source->order(), *f.target->order(), f.map);
}

ConceptFunction to_function(const FMorphism& h) {
    ConceptFunction cf;
    cf.source = std::make_shared<ConceptPoset>(enumerate_concepts(h.source_ptr()));
    cf.target = std::make_shared<ConceptPoset>(enumerate_concepts(h.target_ptr()));
    cf.map.reserve(static_cast<std::size_t>(cf.source->size()));
    for (int i = 0; i < cf.source->size(); ++i) {
        AttrSet y = apply(h, cf.source->concept_at(i).attrs);
        auto j = cf.target->index_of(y);
        if (!j)
            fail_validation("image " + y.to_string(h.target().context().attributes()) +
                            " of concept " +
                            cf.source->concept_at(i).attrs.to_string(h.source().context().attributes()) +
                            " is not a concept of the target");
        cf.map.push_back(*j);
    }
    return cf;
}

FMorphism from_function(const ConceptFunction& f) {
    if (static_cast<int>(f.map.size()) != f.source->size())
        fail_input("concept function needs one value per source concept");
    for (int v : f.map)
        if (v < 0 || v >= f.target->size()) fail_input("concept function value out of range");
    if (!is_monotone(*f.source->order(), *f.target->order(), f.map))
        fail_validation("concept function is not monotone");
    std::shared_ptr<const AcfContext> src = f.source->acf_ptr();
    std::shared_ptr<const AcfContext> dst = f.target->acf_ptr();
    std::vector<AttrSet> img;
    img.reserve(static_cast<std::size_t>(src->selection().size()));
    for (int m = 0; m < src->selection().size(); ++m) {
        auto i = f.source->index_of(src->member_bracket(m));
        if (!i) fail_input("source concept poset does not match the source context");
        img.push_back(f.target->concept_at(f(*i)).attrs);
    }
    return FMorphism(src, dst, std::move(img));
}

FMorphism compose(const FMorphism& h2, const FMorphism& h1) {
    if (!(h1.target() == h2.source()))
        fail_input("composition needs the first morphism's target to equal the second's source");
    std::vector<AttrSet> img;
    img.reserve(h1.images().size());
    for (const AttrSet& y : h1.images()) img.push_back(apply(h2, y));
    return FMorphism(h1.source_ptr(), h2.target_ptr(), std::move(img));
}

FMorphism identity_morphism(std::shared_ptr<const AcfContext> acf) {
    if (!acf) fail_input("identity morphism needs a context");
    std::vector<AttrSet> img;
    img.reserve(static_cast<std::size_t>(acf->selection().size()));
    for (int m = 0; m < acf->selection().size(); ++m) img.push_back(acf->member_bracket(m));
    std::shared_ptr<const AcfContext> dst = acf;
    return FMorphism(std::move(acf), std::move(dst), std::move(img));
}

FMorphism from_scott(const RepContext& rc_d, const RepContext& rc_e, const MonotoneMap& f) {
    if (!f.source || !f.target || !(*f.source == rc_d.domain) || !(*f.target == rc_e.domain))
        fail_input("map does not connect the two domains");
    if (!is_monotone(rc_d.domain, rc_e.domain, f.map)) fail_validation("map is not monotone");
    const Selection& fs = rc_d.acf->selection();
    int ne = rc_e.domain.size();
    std::vector<AttrSet> img;
    img.reserve(static_cast<std::size_t>(fs.size()));
    for (int m = 0; m < fs.size(); ++m) {
        auto join = rc_d.domain.sup_of(fs.member(m));
        if (!join) fail_validation("selection member without a join");
        int v = f(*join);
        AttrSet s;
        for (int x = 0; x < ne; ++x)
            if (rc_e.domain_waybelow[static_cast<std::size_t>(x)].test(v)) s.set(x);
        img.push_back(s);
    }
    return FMorphism(rc_d.acf, rc_e.acf, std::move(img));
}

MonotoneMap to_scott(const RepContext& rc_d, const RepContext& rc_e, const FMorphism& g) {
    if (!(g.source() == *rc_d.acf) || !(g.target() == *rc_e.acf))
        fail_input("morphism does not connect the two contexts");
    MonotoneMap f;
    f.source = std::make_shared<const FinitePoset>(rc_d.domain);
    f.target = std::make_shared<const FinitePoset>(rc_e.domain);
    f.map.reserve(static_cast<std::size_t>(rc_d.domain.size()));
    for (int x = 0; x < rc_d.domain.size(); ++x) {
        AttrSet approx(rc_d.domain.down_set(x));
        auto v = rc_e.domain.sup_of(apply(g, approx));
        if (!v) fail_validation("image of " + rc_d.domain.label(x) + " has no least upper bound");
        f.map.push_back(*v);
    }
    if (!is_monotone(rc_d.domain, rc_e.domain, f.map))
        fail_validation("induced map is not monotone");
    return f;
}

MorphismProps check_morphism_props(const FMorphism& h, int max_bits, int samples) {
    MorphismProps r;
    const AcfContext& src = h.source();
    const Selection& fs = src.selection();
    auto sname = [&](const AttrSet& s) { return s.to_string(src.context().attributes()); };
    bool sampled = false;

    for (int f = 0; f < fs.size() && r.refinement.pass; ++f) {
        std::vector<int> ref;
        for (int g = 0; g < fs.size(); ++g)
            if (fs.member(g).subset_of(src.member_bracket(f))) ref.push_back(g);
        for (int g : ref)
            if (!h.image(g).subset_of(h.image(f))) {
                r.refinement = {false, "refining member " + sname(fs.member(g)) +
                                           " reaches outside the image of " + sname(fs.member(f))};
                break;
            }
        if (!r.refinement.pass) break;
        for (const AttrSet& m : finite_subsets(h.image(f), max_bits, samples, sampled)) {
            bool found = false;
            for (int g : ref)
                if (m.subset_of(h.image(g))) {
                    found = true;
                    break;
                }
            if (!found) {
                r.refinement = {false, "subset " + m.to_string(h.target().context().attributes()) +
                                           " of the image of " + sname(fs.member(f)) +
                                           " is under no refining member's image"};
                break;
            }
        }
    }

    for (int f1 = 0; f1 < fs.size() && r.monotone_in_member.pass; ++f1)
        for (int f2 = 0; f2 < fs.size(); ++f2)
            if (fs.member(f1).subset_of(fs.member(f2)) && !h.image(f1).subset_of(h.image(f2))) {
                r.monotone_in_member = {false, "member " + sname(fs.member(f1)) + " sits inside " +
                                                   sname(fs.member(f2)) +
                                                   " but its image does not"};
                break;
            }
    return r;
}

ConditionResult check_image_approximants(const RepContext& rc_d, const RepContext& rc_e,
                                         const MonotoneMap& f) {
    if (!f.source || !f.target || !(*f.source == rc_d.domain) || !(*f.target == rc_e.domain))
        fail_input("map does not connect the two domains");
    int nd = rc_d.domain.size();
    int ne = rc_e.domain.size();
    for (int x = 0; x < nd; ++x) {
        AttrSet lhs;
        for (int b = 0; b < ne; ++b)
            if (rc_e.domain_waybelow[static_cast<std::size_t>(b)].test(f(x))) lhs.set(b);
        AttrSet rhs;
        for (int y = 0; y < nd; ++y)
            if (rc_d.domain_waybelow[static_cast<std::size_t>(y)].test(x))
                for (int b = 0; b < ne; ++b)
                    if (rc_e.domain_waybelow[static_cast<std::size_t>(b)].test(f(y))) rhs.set(b);
        if (!(lhs == rhs))
            return {false, "at " + rc_d.domain.label(x) + ": approximants of the image are " +
                               lhs.to_string(rc_e.domain.elements()) + ", transported ones are " +
                               rhs.to_string(rc_e.domain.elements())};
    }
    return {};
}

std::string FunctorReport::to_string() const {
    auto line = [](const char* n, const ConditionResult& c) {
        std::string s = std::string(n) + ": " + (c.pass ? "pass" : "FAIL");
        if (!c.pass) s += " (" + c.counterexample + ")";
        return s + "\n";
    };
    return line("identity law     ", identity_law) + line("composition law  ", composition_law) +
           line("hom-set bijection", homset_bijection);
}

FunctorReport functor_check(const std::vector<std::shared_ptr<const AcfContext>>& objects,
                            long long hom_bound, int max_maps_per_hom) {
    FunctorReport r;
    if (objects.empty()) fail_input("functor check needs at least one context");
    int n = static_cast<int>(objects.size());

    std::vector<std::shared_ptr<const ConceptPoset>> cps;
    cps.reserve(static_cast<std::size_t>(n));
    for (const auto& a : objects) cps.push_back(std::make_shared<ConceptPoset>(enumerate_concepts(a)));

    for (int a = 0; a < n && r.identity_law.pass; ++a) {
        FMorphism id = identity_morphism(objects[static_cast<std::size_t>(a)]);
        if (!validate(id).pass()) {
            r.identity_law = {false, "identity morphism of object " + std::to_string(a) + " is invalid"};
            break;
        }
        ConceptFunction cf = to_function(id);
        for (int i = 0; i < static_cast<int>(cf.map.size()); ++i)
            if (cf(i) != i) {
                r.identity_law = {false, "identity morphism of object " + std::to_string(a) +
                                             " moves concept " + std::to_string(i)};
                break;
            }
    }

    // hom-sets via monotone concept maps, with both round trips
    std::vector<std::vector<std::vector<MonotoneMap>>> homs(
        static_cast<std::size_t>(n), std::vector<std::vector<MonotoneMap>>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const auto& cpa = cps[static_cast<std::size_t>(a)];
            const auto& cpb = cps[static_cast<std::size_t>(b)];
            auto maps = enumerate_monotone_maps(cpa->order(), cpb->order(), hom_bound);
            std::set<std::vector<AttrSet>> images_seen;
            for (const auto& mm : maps) {
                ConceptFunction cf{cpa, cpb, mm.map};
                FMorphism h = from_function(cf);
                if (r.homset_bijection.pass && !validate(h).pass())
                    r.homset_bijection = {false, "constructed morphism fails validation for a monotone map " +
                                                     std::to_string(a) + " -> " + std::to_string(b)};
                if (r.homset_bijection.pass && !(to_function(h) == cf))
                    r.homset_bijection = {false, "function round trip broken on a map " + std::to_string(a) +
                                                     " -> " + std::to_string(b)};
                if (r.homset_bijection.pass && !(from_function(to_function(h)) == h))
                    r.homset_bijection = {false, "morphism round trip broken on a map " + std::to_string(a) +
                                                     " -> " + std::to_string(b)};
                images_seen.insert(h.images());
            }
            if (r.homset_bijection.pass && images_seen.size() != maps.size())
                r.homset_bijection = {false, "distinct monotone maps " + std::to_string(a) + " -> " +
                                                 std::to_string(b) + " gave equal morphisms"};
            homs[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::move(maps);
        }

    auto sample = [&](const std::vector<MonotoneMap>& v) {
        std::vector<const MonotoneMap*> out;
        if (v.empty()) return out;
        std::size_t step = std::max<std::size_t>(1, v.size() / static_cast<std::size_t>(max_maps_per_hom));
        for (std::size_t i = 0; i < v.size() && out.size() < static_cast<std::size_t>(max_maps_per_hom);
             i += step)
            out.push_back(&v[i]);
        return out;
    };

    for (int a = 0; a < n && r.composition_law.pass; ++a)
        for (int b = 0; b < n && r.composition_law.pass; ++b) {
            for (const MonotoneMap* m1 : sample(homs[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])) {
                FMorphism h1 = from_function({cps[static_cast<std::size_t>(a)], cps[static_cast<std::size_t>(b)], m1->map});
                FMorphism ida = identity_morphism(objects[static_cast<std::size_t>(a)]);
                FMorphism idb = identity_morphism(objects[static_cast<std::size_t>(b)]);
                if (!(compose(idb, h1) == h1) || !(compose(h1, ida) == h1)) {
                    r.composition_law = {false, "identity is not neutral for a morphism " +
                                                    std::to_string(a) + " -> " + std::to_string(b)};
                    break;
                }
                for (int c = 0; c < n && r.composition_law.pass; ++c)
                    for (const MonotoneMap* m2 :
                         sample(homs[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)])) {
                        FMorphism h2 = from_function(
                            {cps[static_cast<std::size_t>(b)], cps[static_cast<std::size_t>(c)], m2->map});
                        FMorphism hc = compose(h2, h1);
                        std::vector<int> expect;
                        expect.reserve(m1->map.size());
                        for (int v : m1->map) expect.push_back(m2->map[static_cast<std::size_t>(v)]);
                        if (to_function(hc).map != expect) {
                            r.composition_law = {false, "composite function mismatch on " + std::to_string(a) +
                                                            " -> " + std::to_string(b) + " -> " +
                                                            std::to_string(c)};
                            break;
                        }
                        for (const MonotoneMap* m3 :
                             sample(homs[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)])) {
                            FMorphism h3 = from_function(
                                {cps[static_cast<std::size_t>(c)], cps[static_cast<std::size_t>(a)], m3->map});
                            if (!(compose(compose(h3, h2), h1) == compose(h3, compose(h2, h1)))) {
                                r.composition_law = {false, "associativity broken on a triple through " +
                                                                std::to_string(a) + ", " + std::to_string(b) +
                                                                ", " + std::to_string(c)};
                                break;
                            }
                        }
                        if (!r.composition_law.pass) break;
                    }
                if (!r.composition_law.pass) break;
            }
        }

    return r;
}

}  // namespace fcad
