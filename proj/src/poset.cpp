#include "fcad/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace fcad {

FinitePoset FinitePoset::build_checked(std::vector<std::string> elements, std::vector<IndexSet> up) {
    int n = static_cast<int>(elements.size());
    {
        std::unordered_set<std::string> seen;
        for (const auto& l : elements)
            if (!seen.insert(l).second) fail_input("poset element label repeated: " + l);
    }
    for (int a = 0; a < n; ++a) {
        if (!up[static_cast<std::size_t>(a)].test(a))
            fail_input("order not reflexive at " + elements[static_cast<std::size_t>(a)]);
        if (up[static_cast<std::size_t>(a)].max_index() >= n) fail_input("order mentions element out of range");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            bool ab = up[static_cast<std::size_t>(a)].test(b);
            bool ba = up[static_cast<std::size_t>(b)].test(a);
            if (ab && ba && a != b)
                fail_input("order not antisymmetric between " + elements[static_cast<std::size_t>(a)] +
                           " and " + elements[static_cast<std::size_t>(b)]);
            if (ab && !up[static_cast<std::size_t>(b)].subset_of(up[static_cast<std::size_t>(a)]))
                fail_input("order not transitive at " + elements[static_cast<std::size_t>(a)] +
                           " <= " + elements[static_cast<std::size_t>(b)]);
        }
    FinitePoset p;
    p.elements_ = std::move(elements);
    p.up_ = std::move(up);
    p.down_.assign(static_cast<std::size_t>(n), IndexSet());
    for (int a = 0; a < n; ++a)
        p.up_[static_cast<std::size_t>(a)].for_each([&](int b) { p.down_[static_cast<std::size_t>(b)].set(a); });
    return p;
}

FinitePoset FinitePoset::from_leq(std::vector<std::string> elements,
                                  const std::vector<std::vector<bool>>& leq) {
    int n = static_cast<int>(elements.size());
    if (static_cast<int>(leq.size()) != n) fail_input("leq matrix size does not match element count");
    std::vector<IndexSet> up(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(leq[static_cast<std::size_t>(a)].size()) != n)
            fail_input("leq matrix is not square");
        for (int b = 0; b < n; ++b)
            if (leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) up[static_cast<std::size_t>(a)].set(b);
    }
    return build_checked(std::move(elements), std::move(up));
}

FinitePoset FinitePoset::from_leq_pairs(std::vector<std::string> elements,
                                        const std::vector<std::pair<int, int>>& leq_pairs) {
    int n = static_cast<int>(elements.size());
    std::vector<IndexSet> up(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) up[static_cast<std::size_t>(i)].set(i);
    for (auto [a, b] : leq_pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n) fail_input("leq pair index out of range");
        up[static_cast<std::size_t>(a)].set(b);
    }
    return build_checked(std::move(elements), std::move(up));
}

FinitePoset FinitePoset::from_covers(std::vector<std::string> elements,
                                     const std::vector<std::pair<int, int>>& covers) {
    int n = static_cast<int>(elements.size());
    std::vector<IndexSet> up(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) up[static_cast<std::size_t>(i)].set(i);
    for (auto [a, b] : covers) {
        if (a < 0 || a >= n || b < 0 || b >= n) fail_input("cover pair index out of range");
        up[static_cast<std::size_t>(a)].set(b);
    }
    // Warshall-style transitive closure on the up rows.
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a)
            if (up[static_cast<std::size_t>(a)].test(k)) up[static_cast<std::size_t>(a)] |= up[static_cast<std::size_t>(k)];
    return build_checked(std::move(elements), std::move(up));
}

FinitePoset FinitePoset::chain(int n) {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < n; ++i) {
        labels.push_back("c" + std::to_string(i));
        if (i + 1 < n) covers.emplace_back(i, i + 1);
    }
    return from_covers(std::move(labels), covers);
}

FinitePoset FinitePoset::antichain(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    return from_covers(std::move(labels), {});
}

FinitePoset FinitePoset::diamond() {
    return from_covers({"bot", "a", "b", "top"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

IndexSet FinitePoset::down_closure(const IndexSet& s) const {
    IndexSet out;
    s.for_each([&](int i) { out |= down_set(i); });
    return out;
}

IndexSet FinitePoset::upper_bounds(const IndexSet& s) const {
    IndexSet out = IndexSet::full(size());
    s.for_each([&](int i) { out &= up_set(i); });
    return out;
}

IndexSet FinitePoset::lower_bounds(const IndexSet& s) const {
    IndexSet out = IndexSet::full(size());
    s.for_each([&](int i) { out &= down_set(i); });
    return out;
}

std::optional<int> FinitePoset::sup_of(const IndexSet& s) const {
    IndexSet ub = upper_bounds(s);
    std::optional<int> least;
    ub.for_each([&](int u) {
        if (ub.subset_of(up_set(u))) least = least ? std::min(*least, u) : u;
    });
    return least;
}

std::optional<int> FinitePoset::inf_of(const IndexSet& s) const {
    IndexSet lb = lower_bounds(s);
    std::optional<int> greatest;
    lb.for_each([&](int u) {
        if (lb.subset_of(down_set(u))) greatest = greatest ? std::min(*greatest, u) : u;
    });
    return greatest;
}

std::optional<int> FinitePoset::max_of(const IndexSet& s) const {
    std::optional<int> out;
    s.for_each([&](int m) {
        if (s.subset_of(down_set(m))) out = m;
    });
    return out;
}

bool FinitePoset::is_directed(const IndexSet& s) const {
    if (s.empty()) return false;
    bool ok = true;
    s.for_each([&](int a) {
        if (!ok) return;
        s.for_each([&](int b) {
            if (!ok) return;
            IndexSet ub = up_set(a) & up_set(b) & s;
            if (ub.empty()) ok = false;
        });
    });
    return ok;
}

std::optional<int> FinitePoset::least_element() const {
    for (int i = 0; i < size(); ++i)
        if (up_set(i).count() == size()) return i;
    return std::nullopt;
}

std::optional<int> FinitePoset::greatest_element() const {
    for (int i = 0; i < size(); ++i)
        if (down_set(i).count() == size()) return i;
    return std::nullopt;
}

std::vector<std::pair<int, int>> FinitePoset::cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b) {
            if (a == b || !leq(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < size() && cover; ++c)
                if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
            if (cover) out.emplace_back(a, b);
        }
    return out;
}

std::vector<std::pair<int, int>> FinitePoset::leq_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
        up_set(a).for_each([&](int b) { out.emplace_back(a, b); });
    return out;
}

namespace {

// Shared core: run a visitor over every directed subset (with its sup).
template <typename F>
void for_each_directed_with_sup(const FinitePoset& p, F f) {
    int n = p.size();
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        IndexSet s = IndexSet::from_mask(m);
        if (!p.is_directed(s)) continue;
        f(s, p.sup_of(s));
    }
}

}  // namespace

bool way_below_bruteforce(const FinitePoset& p, int x, int y, int max_size, bool allow_shortcut) {
    if (x < 0 || x >= p.size() || y < 0 || y >= p.size()) fail_input("way-below element out of range");
    if (p.size() > max_size) {
        if (allow_shortcut) return p.leq(x, y);
        fail_limit("way-below enumeration limited to " + std::to_string(max_size) +
                   " elements; pass allow_shortcut to use <= instead");
    }
    bool holds = true;
    for_each_directed_with_sup(p, [&](const IndexSet& d, std::optional<int> sup) {
        if (!holds || !sup || !p.leq(y, *sup)) return;
        bool member_above = false;
        d.for_each([&](int e) {
            if (p.leq(x, e)) member_above = true;
        });
        if (!member_above) holds = false;
    });
    return holds;
}

std::vector<IndexSet> waybelow_matrix_bruteforce(const FinitePoset& p, int max_size, bool allow_shortcut) {
    int n = p.size();
    std::vector<IndexSet> rows(static_cast<std::size_t>(n));
    if (n > max_size) {
        if (!allow_shortcut)
            fail_limit("way-below enumeration limited to " + std::to_string(max_size) + " elements");
        for (int x = 0; x < n; ++x) rows[static_cast<std::size_t>(x)] = p.up_set(x);
        return rows;
    }
    for (int x = 0; x < n; ++x) rows[static_cast<std::size_t>(x)] = IndexSet::full(n);
    for_each_directed_with_sup(p, [&](const IndexSet& d, std::optional<int> sup) {
        if (!sup) return;
        IndexSet below_some;  // x with x <= some member of d
        d.for_each([&](int e) { below_some |= p.down_set(e); });
        // constraint applies to every y <= sup d
        p.down_set(*sup).for_each([&](int y) {
            for (int x = 0; x < n; ++x)
                if (rows[static_cast<std::size_t>(x)].test(y) && !below_some.test(x))
                    rows[static_cast<std::size_t>(x)].reset(y);
        });
    });
    return rows;
}

bool is_basis(const FinitePoset& p, const IndexSet& b, const std::vector<IndexSet>& waybelow) {
    for (int x = 0; x < p.size(); ++x) {
        IndexSet approx;  // b intersect { y : y << x }
        b.for_each([&](int y) {
            if (waybelow[static_cast<std::size_t>(y)].test(x)) approx.set(y);
        });
        if (!p.is_directed(approx)) return false;
        auto s = p.sup_of(approx);
        if (!s || *s != x) return false;
    }
    return true;
}

DomainClassification domain_classify(const FinitePoset& p, EmptySetBoundConvention conv) {
    if (p.size() > 16) fail_limit("domain_classify enumerates subsets; limited to 16 elements");
    if (p.size() == 0) fail_input("domain_classify needs a nonempty poset");
    int n = p.size();
    DomainClassification r;
    r.convention = conv;

    r.is_dcpo = true;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        IndexSet s = IndexSet::from_mask(m);
        if (p.is_directed(s) && !p.sup_of(s)) {
            r.is_dcpo = false;
            break;
        }
    }

    std::vector<IndexSet> wb = waybelow_matrix_bruteforce(p, 16);
    IndexSet compacts;
    for (int x = 0; x < n; ++x)
        if (wb[static_cast<std::size_t>(x)].test(x)) compacts.set(x);

    r.is_continuous = r.is_dcpo && is_basis(p, IndexSet::full(n), wb);
    r.is_algebraic = r.is_dcpo && is_basis(p, compacts, wb);

    r.is_pointed = p.least_element().has_value();
    r.has_top = p.greatest_element().has_value();

    r.is_bounded_complete = true;
    std::uint64_t start = (conv == EmptySetBoundConvention::BoundedIncludesEmpty) ? 0 : 1;
    for (std::uint64_t m = start; m < (std::uint64_t{1} << n); ++m) {
        IndexSet s = IndexSet::from_mask(m);
        if (!p.upper_bounds(s).empty() && !p.sup_of(s)) {
            r.is_bounded_complete = false;
            break;
        }
    }

    r.is_semilattice = true;
    r.is_lattice = true;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            IndexSet pair = IndexSet::single(a) | IndexSet::single(b);
            if (!p.inf_of(pair)) r.is_semilattice = r.is_lattice = false;
            if (!p.sup_of(pair)) r.is_lattice = false;
        }
    r.is_complete_lattice = r.is_lattice && r.is_pointed && r.has_top;

    r.waybelow_multiplicative = true;
    for (int x = 0; x < n && r.waybelow_multiplicative; ++x)
        for (int y = 0; y < n && r.waybelow_multiplicative; ++y)
            for (int z = 0; z < n; ++z) {
                if (!wb[static_cast<std::size_t>(x)].test(y) || !wb[static_cast<std::size_t>(x)].test(z)) continue;
                auto meet = p.inf_of(IndexSet::single(y) | IndexSet::single(z));
                if (meet && !wb[static_cast<std::size_t>(x)].test(*meet)) {
                    r.waybelow_multiplicative = false;
                    break;
                }
            }
    return r;
}

std::string DomainClassification::to_string() const {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::string s;
    s += std::string("dcpo:                ") + yn(is_dcpo) + "\n";
    s += std::string("continuous:          ") + yn(is_continuous) + "\n";
    s += std::string("algebraic:           ") + yn(is_algebraic) + "\n";
    s += std::string("pointed:             ") + yn(is_pointed) + "\n";
    s += std::string("top:                 ") + yn(has_top) + "\n";
    s += std::string("bounded complete:    ") + yn(is_bounded_complete) +
         (convention == EmptySetBoundConvention::BoundedIncludesEmpty ? " (empty set counts as bounded)"
                                                                      : " (empty set ignored)") + "\n";
    s += std::string("semilattice:         ") + yn(is_semilattice) + "\n";
    s += std::string("waybelow multiplic.: ") + yn(waybelow_multiplicative) + "\n";
    s += std::string("lattice:             ") + yn(is_lattice) + "\n";
    s += std::string("complete lattice:    ") + yn(is_complete_lattice) + "\n";
    return s;
}

bool is_lattice(const FinitePoset& p) {
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b) {
            IndexSet pair = IndexSet::single(a) | IndexSet::single(b);
            if (!p.inf_of(pair) || !p.sup_of(pair)) return false;
        }
    return true;
}

bool is_complete_lattice(const FinitePoset& p) {
    return p.size() > 0 && is_lattice(p) && p.least_element() && p.greatest_element();
}

bool interpolation_check(const FinitePoset& p, int max_size) {
    if (p.size() > max_size) fail_limit("interpolation check enumerates subsets; poset too large");
    int n = p.size();
    std::vector<IndexSet> wb = waybelow_matrix_bruteforce(p, max_size);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        IndexSet s = IndexSet::from_mask(m);
        for (int y = 0; y < n; ++y) {
            bool all_wb = true;
            s.for_each([&](int e) {
                if (!wb[static_cast<std::size_t>(e)].test(y)) all_wb = false;
            });
            if (!all_wb) continue;
            bool found = false;
            for (int z = 0; z < n && !found; ++z) {
                if (!wb[static_cast<std::size_t>(z)].test(y)) continue;
                bool ok = true;
                s.for_each([&](int e) {
                    if (!wb[static_cast<std::size_t>(e)].test(z)) ok = false;
                });
                found = ok;
            }
            if (!found) return false;
        }
    }
    return true;
}

bool is_monotone(const FinitePoset& p, const FinitePoset& q, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != p.size()) fail_input("map size does not match poset");
    for (int v : f)
        if (v < 0 || v >= q.size()) fail_input("map value out of range");
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (p.leq(a, b) && !q.leq(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)])) return false;
    return true;
}

bool preserves_directed_sups(const FinitePoset& p, const FinitePoset& q, const std::vector<int>& f) {
    bool ok = true;
    for_each_directed_with_sup(p, [&](const IndexSet& d, std::optional<int> sup) {
        if (!ok || !sup) return;
        IndexSet image;
        d.for_each([&](int e) { image.set(f[static_cast<std::size_t>(e)]); });
        auto qsup = q.sup_of(image);
        if (!qsup || *qsup != f[static_cast<std::size_t>(*sup)]) ok = false;
    });
    return ok;
}

std::vector<MonotoneMap> enumerate_monotone_maps(const std::shared_ptr<const FinitePoset>& p,
                                                 const std::shared_ptr<const FinitePoset>& q,
                                                 long long candidate_bound, bool verify_scott) {
    int n = p->size(), k = q->size();
    if (n == 0) return {MonotoneMap{p, q, {}}};
    if (k == 0) fail_input("no maps into an empty poset");
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        total *= k;
        if (total > candidate_bound)
            fail_limit("monotone map enumeration: |target|^|source| exceeds " +
                       std::to_string(candidate_bound));
    }
    std::vector<MonotoneMap> out;
    std::vector<int> f(static_cast<std::size_t>(n), -1);
    bool do_scott = verify_scott && n <= 12;
    // Odometer over value vectors with incremental monotonicity pruning.
    auto consistent = [&](int i) {
        for (int j = 0; j < i; ++j) {
            if (p->leq(j, i) && !q->leq(f[static_cast<std::size_t>(j)], f[static_cast<std::size_t>(i)])) return false;
            if (p->leq(i, j) && !q->leq(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)])) return false;
        }
        return true;
    };
    int i = 0;
    while (i >= 0) {
        if (i == n) {
            if (do_scott && !preserves_directed_sups(*p, *q, f))
                fail_validation("monotone map failed the directed-sup re-check (finite posets should never)");
            out.push_back(MonotoneMap{p, q, f});
            --i;
            continue;
        }
        bool advanced = false;
        int start = (f[static_cast<std::size_t>(i)] == -1) ? 0 : f[static_cast<std::size_t>(i)] + 1;
        for (int v = start; v < k; ++v) {
            f[static_cast<std::size_t>(i)] = v;
            if (consistent(i)) {
                advanced = true;
                break;
            }
        }
        if (advanced) {
            ++i;
            if (i < n) f[static_cast<std::size_t>(i)] = -1;
        } else {
            f[static_cast<std::size_t>(i)] = -1;
            --i;
            // backtrack: the previous position resumes from its current value + 1
        }
    }
    return out;
}

std::optional<MonotoneMap> find_isomorphism(const std::shared_ptr<const FinitePoset>& p,
                                            const std::shared_ptr<const FinitePoset>& q) {
    int n = p->size();
    if (n != q->size()) return std::nullopt;
    if (n == 0) return MonotoneMap{p, q, {}};

    // Degree signature pruning: (|down|, |up|) must match.
    auto sig = [](const FinitePoset& r, int i) {
        return std::pair<int, int>(r.down_set(i).count(), r.up_set(i).count());
    };
    {
        std::map<std::pair<int, int>, int> a, b;
        for (int i = 0; i < n; ++i) {
            a[sig(*p, i)]++;
            b[sig(*q, i)]++;
        }
        if (a != b) return std::nullopt;
    }

    std::vector<int> f(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto ok = [&](int i, int v) {
        if (sig(*p, i) != sig(*q, v)) return false;
        for (int j = 0; j < i; ++j) {
            if (p->leq(i, j) != q->leq(v, f[static_cast<std::size_t>(j)])) return false;
            if (p->leq(j, i) != q->leq(f[static_cast<std::size_t>(j)], v)) return false;
        }
        return true;
    };
    // plain depth-first search over assignments
    std::vector<int> choice(static_cast<std::size_t>(n), -1);
    int i = 0;
    while (i >= 0 && i < n) {
        int v = choice[static_cast<std::size_t>(i)] + 1;
        for (; v < n; ++v)
            if (!used[static_cast<std::size_t>(v)] && ok(i, v)) break;
        if (v == n) {
            choice[static_cast<std::size_t>(i)] = -1;
            --i;
            if (i >= 0) {
                used[static_cast<std::size_t>(f[static_cast<std::size_t>(i)])] = false;
                f[static_cast<std::size_t>(i)] = -1;
            }
            continue;
        }
        choice[static_cast<std::size_t>(i)] = v;
        f[static_cast<std::size_t>(i)] = v;
        used[static_cast<std::size_t>(v)] = true;
        ++i;
    }
    if (i < 0) return std::nullopt;
    return MonotoneMap{p, q, f};
}

namespace {

// Canonical form of a labelled poset: the lexicographically smallest
// relation bit string over all relabellings.
std::vector<std::uint64_t> canonical_bits(int n, const std::vector<IndexSet>& up) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint64_t> best;
    do {
        std::vector<std::uint64_t> bits((static_cast<std::size_t>(n) * n + 63) / 64, 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (up[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])]
                        .test(perm[static_cast<std::size_t>(b)])) {
                    std::size_t bit = static_cast<std::size_t>(a) * n + b;
                    bits[bit / 64] |= std::uint64_t{1} << (bit % 64);
                }
        if (best.empty() || bits < best) best = bits;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<FinitePoset> catalog_for(int n) {
    // Every finite poset admits a linear extension, so triangular relations
    // (a < b only for a < b as integers) reach every isomorphism class.
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
    std::vector<FinitePoset> out;
    std::set<std::vector<std::uint64_t>> seen;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << slots.size()); ++m) {
        std::vector<IndexSet> up(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) up[static_cast<std::size_t>(i)].set(i);
        for (std::size_t s = 0; s < slots.size(); ++s)
            if ((m >> s) & 1u) up[static_cast<std::size_t>(slots[s].first)].set(slots[s].second);
        // transitive?
        bool trans = true;
        for (int a = 0; a < n && trans; ++a)
            for (int b = a + 1; b < n && trans; ++b)
                if (up[static_cast<std::size_t>(a)].test(b) &&
                    !up[static_cast<std::size_t>(b)].subset_of(up[static_cast<std::size_t>(a)]))
                    trans = false;
        if (!trans) continue;
        if (!seen.insert(canonical_bits(n, up)).second) continue;
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < n; ++a)
            up[static_cast<std::size_t>(a)].for_each([&](int b) { pairs.emplace_back(a, b); });
        out.push_back(FinitePoset::from_leq_pairs(std::move(labels), pairs));
    }
    return out;
}

}  // namespace

std::vector<FinitePoset> poset_catalog(int max_n) {
    if (max_n < 1) fail_input("poset catalog needs max_n >= 1");
    if (max_n > 7) fail_limit("poset catalog limited to 7 elements");
    std::vector<FinitePoset> out;
    for (int n = 1; n <= max_n; ++n) {
        auto part = catalog_for(n);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace fcad
