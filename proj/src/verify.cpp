#include "rotdist/verify.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>

#include "rotdist/bounds.hpp"
#include "rotdist/collapse.hpp"
#include "rotdist/covering.hpp"
#include "rotdist/families.hpp"
#include "rotdist/rotation.hpp"
#include "rotdist/search.hpp"
#include "rotdist/thompson.hpp"
#include "rotdist/triangulation.hpp"
#include "rotdist/tree.hpp"

namespace rotdist {

namespace {

// ------------------------------------------------------------ small helpers

int cap(int dflt, int max_size) { return max_size > 0 ? std::min(dflt, max_size) : dflt; }

std::string show_pair(const Tree& a, const Tree& b) {
    return format(a) + " -> " + format(b);
}

const DenseGraph& dense(int n) {
    static std::map<int, std::unique_ptr<DenseGraph>> cache;
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<DenseGraph>(n, /*force=*/true);
    return *slot;
}

const std::vector<std::vector<int>>& all_pairs(int n) {
    static std::map<int, std::vector<std::vector<int>>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    const DenseGraph& g = dense(n);
    std::vector<std::vector<int>> table(g.vertex_count());
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) table[v] = bfs_all(g, v);
    return cache.emplace(n, std::move(table)).first->second;
}

// names of all directed edges, aligned with the adjacency rows
const std::vector<PairName>& edge_names(int n) {
    static std::map<int, std::vector<PairName>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    const DenseGraph& g = dense(n);
    std::vector<PairName> names(static_cast<size_t>(g.vertex_count()) *
                                static_cast<size_t>(g.degree()));
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        Tree t = tree_unrank(n, v);
        auto nb = neighbors(t);
        for (size_t k = 0; k < nb.size(); ++k)
            names[static_cast<size_t>(v) * static_cast<size_t>(g.degree()) + k] =
                name_of_edge(t, nb[k].first);
    }
    return cache.emplace(n, std::move(names)).first->second;
}

// every rotation sequence between the trees crosses an edge matching the
// obligation: with matching edges removed the target must be unreachable
bool crossing_unavoidable(int n, std::uint32_t from, std::uint32_t to, const Obligation& ob) {
    const DenseGraph& g = dense(n);
    const auto& names = edge_names(n);
    std::vector<std::uint32_t> skip(g.vertex_count(), 0);
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
        for (int k = 0; k < g.degree(); ++k)
            if (obligation_matches(ob, names[static_cast<size_t>(v) * g.degree() + k]))
                skip[v] |= 1u << k;
    auto dist = bfs_all(g, from, &skip);
    return dist[to] < 0;
}

struct Suite {
    SuiteResult result;
    explicit Suite(std::string name) { result.suite = std::move(name); }

    // run records the first counterexample the body reports
    template <typename Body>
    void check(const std::string& name, Body&& body) {
        CheckResult c;
        c.name = name;
        std::optional<std::string> bad = body();
        if (bad) {
            c.pass = false;
            c.detail = *bad;
        }
        result.checks.push_back(std::move(c));
    }
    void record(const std::string& name, bool pass, const std::string& detail) {
        result.checks.push_back({name, pass, pass ? "" : detail});
    }
};

using Maybe = std::optional<std::string>;

// ------------------------------------------------------------ suite bodies

SuiteResult suite_covering_lemmas(int max_size) {
    Suite s("covering-lemmas");
    int big = cap(8, max_size), mid = cap(7, max_size);

    s.check("address test matches the subtree definition", [&]() -> Maybe {
        for (int n = 1; n <= mid; ++n)
            for (const auto& t : all_trees(n))
                for (Label i = 1; i <= n + 1; ++i)
                    for (Label j = i + 1; j <= n + 1; ++j) {
                        if (covers(t, i, j) != covers_by_definition(t, i, j))
                            return "covers mismatch at " + format(t) + " (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")";
                        if (cocovers(t, i, j) != cocovers_by_definition(t, i, j))
                            return "cocovers mismatch at " + format(t) + " (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")";
                    }
        return std::nullopt;
    });

    s.check("covered sets are intervals ending one below", [&]() -> Maybe {
        for (int n = 1; n <= big; ++n)
            for (const auto& t : all_trees(n))
                for (Label j = 2; j <= n + 1; ++j) {
                    bool seen = false;
                    for (Label i = j - 1; i >= 1; --i) {
                        bool c = covers(t, i, j);
                        if (c) seen = true;
                        if (!c && seen)
                            return "gap below " + std::to_string(j) + " in " + format(t);
                    }
                }
        return std::nullopt;
    });

    s.check("covering is transitive", [&]() -> Maybe {
        for (int n = 1; n <= big; ++n)
            for (const auto& t : all_trees(n))
                for (Label i = 1; i <= n + 1; ++i)
                    for (Label j = i + 1; j <= n + 1; ++j) {
                        if (!covers(t, i, j)) continue;
                        for (Label k = j + 1; k <= n + 1; ++k)
                            if (covers(t, j, k) && !covers(t, i, k))
                                return "broken transitivity in " + format(t) + " at (" +
                                       std::to_string(i) + "," + std::to_string(j) + "," +
                                       std::to_string(k) + ")";
                    }
        return std::nullopt;
    });

    s.check("covering and co-covering exclude each other across a split", [&]() -> Maybe {
        for (int n = 1; n <= mid; ++n)
            for (const auto& t : all_trees(n))
                for (Label i = 1; i <= n + 1; ++i)
                    for (Label j = i + 1; j <= n + 1; ++j) {
                        if (!covers(t, i, j)) continue;
                        for (Label k = i + 1; k <= j; ++k)
                            for (Label l = j + 1; l <= n + 1; ++l)
                                if (cocovers(t, k, l))
                                    return format(t) + ": " + std::to_string(i) + "<" +
                                           std::to_string(k) + "<=" + std::to_string(j) + "<" +
                                           std::to_string(l);
                    }
        return std::nullopt;
    });

    s.check("minimal-cover equivalences", [&]() -> Maybe {
        // for a covered by b: address shape, successor co-covering, and
        // absence of intermediate covers are one condition
        for (int n = 1; n <= mid; ++n)
            for (const auto& t : all_trees(n))
                for (Label a = 1; a <= n + 1; ++a)
                    for (Label b = a + 1; b <= n + 1; ++b) {
                        if (!covers(t, a, b)) continue;
                        Address ga = leaf_address(t, a);
                        Address g = ga.common_prefix(leaf_address(t, b));
                        // (i): ad(a) = g 0 1^p
                        bool shape_ok = false;
                        if (g.length() < ga.length() && ga.bit(g.length()) == '0') {
                            shape_ok = true;
                            for (int x = g.length() + 1; x < ga.length(); ++x)
                                if (ga.bit(x) != '1') shape_ok = false;
                        }
                        bool succ = cocovers_or_equal(t, a + 1, b) && t.label_index(a + 1);
                        bool no_mid = true;
                        for (Label i = a + 1; i <= b - 1; ++i)
                            if (covers(t, a, i)) no_mid = false;
                        if (shape_ok != succ || succ != no_mid)
                            return format(t) + " at (" + std::to_string(a) + "," +
                                   std::to_string(b) + ")";
                    }
        return std::nullopt;
    });

    s.check("base-pair names pin the covering skeleton", [&]() -> Maybe {
        // name clauses: a co-covers everything in [a,d] up to equality, all
        // of [a,d] is covered by d, and likewise within the three blocks
        for (int n = 1; n <= mid; ++n)
            for (const auto& t : all_trees(n))
                for (const auto& [edge, t2] : neighbors(t)) {
                    PairName nm = name_of_edge(t, edge);
                    auto bad = [&](Label i) {
                        return format(t) + " " + to_string(nm) + " i=" + std::to_string(i);
                    };
                    for (Label i = nm.a; i <= nm.d; ++i) {
                        if (!cocovers_or_equal(t, nm.a, i)) return bad(i);
                        if (!covers_or_equal(t, i, nm.d)) return bad(i);
                    }
                    for (Label i = nm.a; i <= nm.b - 1; ++i)
                        if (!covers_or_equal(t, i, nm.b - 1)) return bad(i);
                    for (Label i = nm.b; i <= nm.c; ++i) {
                        if (!cocovers_or_equal(t, nm.b, i)) return bad(i);
                        if (!covers_or_equal(t, i, nm.c)) return bad(i);
                    }
                    for (Label i = nm.c + 1; i <= nm.d; ++i)
                        if (!cocovers_or_equal(t, nm.c + 1, i)) return bad(i);
                }
        return std::nullopt;
    });

    s.check("trees are reconstructible from their covering relation", [&]() -> Maybe {
        for (int n = 0; n <= mid; ++n)
            for (const auto& t : all_trees(n))
                if (!(reconstruct(covering_of(t), t.labels()) == t))
                    return "round trip failed for " + format(t);
        return std::nullopt;
    });

    return s.result;
}

SuiteResult suite_covchange(int max_size) {
    Suite s("covchange");
    int lim = cap(7, max_size);
    s.check("covering change formula matches brute force", [&]() -> Maybe {
        for (int n = 1; n <= lim; ++n)
            for (const auto& t : all_trees(n))
                for (const auto& [edge, t2] : neighbors(t)) {
                    if (edge.sign != Sign::plus) continue;
                    auto ch = covering_change(t, t2);
                    std::vector<std::pair<Label, Label>> add, removed;
                    for (Label i = 1; i <= n + 1; ++i)
                        for (Label j = i + 1; j <= n + 1; ++j) {
                            if (covers(t2, i, j) && !covers(t, i, j)) add.emplace_back(i, j);
                            if (covers(t, i, j) && !covers(t2, i, j))
                                return "covering lost across " + show_pair(t, t2);
                            if (cocovers(t, i, j) && !cocovers(t2, i, j))
                                removed.emplace_back(i, j);
                            if (cocovers(t2, i, j) && !cocovers(t, i, j))
                                return "co-covering gained across " + show_pair(t, t2);
                        }
                    if (add != ch.added_coverings || removed != ch.removed_cocoverings)
                        return "formula mismatch across " + show_pair(t, t2);
                }
        return std::nullopt;
    });
    return s.result;
}

SuiteResult suite_keylemma(int max_size) {
    Suite s("keylemma");
    int lim = cap(5, max_size);
    using CC = CoordConstraint;
    auto pat = [](Sign sg, CC a, CC b, CC c, CC d) {
        NamePattern p;
        p.sign = sg;
        p.coord = {std::move(a), std::move(b), std::move(c), std::move(d)};
        return p;
    };

    s.check("created covering forces a crossing", [&]() -> Maybe {
        for (int n = 2; n <= lim; ++n) {
            auto trees = all_trees(n);
            for (std::uint32_t u = 0; u < trees.size(); ++u)
                for (std::uint32_t v = 0; v < trees.size(); ++v) {
                    if (u == v) continue;
                    for (Label i = 1; i <= n + 1; ++i)
                        for (Label j = i + 1; j <= n + 1; ++j) {
                            if (covers(trees[u], i, j) || !covers(trees[v], i, j)) continue;
                            Obligation ob{pat(Sign::plus, CC::le(i), CC::gt(i), CC::eq(j),
                                              CC::any())};
                            if (!crossing_unavoidable(n, u, v, ob))
                                return show_pair(trees[u], trees[v]) + " (" + std::to_string(i) +
                                       "," + std::to_string(j) + ")";
                        }
                }
        }
        return std::nullopt;
    });

    s.check("destroyed co-covering forces a crossing", [&]() -> Maybe {
        for (int n = 2; n <= lim; ++n) {
            auto trees = all_trees(n);
            for (std::uint32_t u = 0; u < trees.size(); ++u)
                for (std::uint32_t v = 0; v < trees.size(); ++v) {
                    if (u == v) continue;
                    for (Label i = 1; i <= n + 1; ++i)
                        for (Label j = i + 1; j <= n + 1; ++j) {
                            bool hyp_direct = cocovers(trees[u], i, j) && !cocovers(trees[v], i, j);
                            bool hyp_shift = cocovers(trees[u], i, j) && i >= 2 && j >= i + 2 &&
                                             covers(trees[v], i - 1, j - 1);
                            if (!hyp_direct && !hyp_shift) continue;
                            Obligation ob{pat(Sign::plus, CC::any(), CC::eq(i), CC::lt(j),
                                              CC::ge(j))};
                            if (!crossing_unavoidable(n, u, v, ob))
                                return show_pair(trees[u], trees[v]) + " (" + std::to_string(i) +
                                       "," + std::to_string(j) + ")";
                        }
                }
        }
        return std::nullopt;
    });

    s.check("pinned-coordinate refinement", [&]() -> Maybe {
        for (int n = 2; n <= lim; ++n) {
            auto trees = all_trees(n);
            for (std::uint32_t u = 0; u < trees.size(); ++u)
                for (std::uint32_t v = 0; v < trees.size(); ++v) {
                    if (u == v) continue;
                    for (Label i = 1; i <= n + 1; ++i)
                        for (Label j = i + 1; j <= n + 1; ++j) {
                            if (covers(trees[u], i, j) || !covers(trees[v], i, j)) continue;
                            if (!cocovers_or_equal(trees[v], i + 1, j)) continue;
                            Obligation ob{pat(Sign::plus, CC::any(), CC::eq(i + 1), CC::eq(j),
                                              CC::any()),
                                          pat(Sign::minus, CC::any(), CC::eq(i + 1), CC::any(),
                                              CC::eq(j))};
                            if (!crossing_unavoidable(n, u, v, ob))
                                return show_pair(trees[u], trees[v]) + " (" + std::to_string(i) +
                                       "," + std::to_string(j) + ")";
                        }
                }
        }
        return std::nullopt;
    });

    s.check("three-coordinate refinement", [&]() -> Maybe {
        int lim3 = std::min(lim, 5);
        for (int n = 2; n <= lim3; ++n) {
            auto trees = all_trees(n);
            for (std::uint32_t u = 0; u < trees.size(); ++u)
                for (std::uint32_t v = 0; v < trees.size(); ++v) {
                    if (u == v) continue;
                    for (Label i = 1; i <= n + 1; ++i)
                        for (Label j = i + 2; j <= n + 1; ++j) {
                            if (covers(trees[u], i, j) || !covers(trees[v], i, j)) continue;
                            if (!cocovers_or_equal(trees[v], i + 1, j)) continue;
                            for (Label k = i + 1; k <= j - 1; ++k) {
                                Obligation ob{pat(Sign::plus, CC::le(i), CC::between(i + 1, k),
                                                  CC::eq(j), CC::any()),
                                              pat(Sign::minus, CC::le(i), CC::between(i + 1, k),
                                                  CC::ge(k), CC::eq(j))};
                                if (!crossing_unavoidable(n, u, v, ob))
                                    return show_pair(trees[u], trees[v]) + " (" +
                                           std::to_string(i) + "," + std::to_string(k) + "," +
                                           std::to_string(j) + ")";
                            }
                        }
                }
        }
        return std::nullopt;
    });

    s.check("mirrored refinement as stated", [&]() -> Maybe {
        for (int n = 2; n <= lim; ++n) {
            auto trees = all_trees(n);
            for (std::uint32_t u = 0; u < trees.size(); ++u)
                for (std::uint32_t v = 0; v < trees.size(); ++v) {
                    if (u == v) continue;
                    for (Label i = 1; i <= n + 1; ++i)
                        for (Label j = i + 1; j <= n + 1; ++j) {
                            if (!cocovers(trees[u], i, j) || cocovers(trees[v], i, j)) continue;
                            if (!covers_or_equal(trees[u], i, j - 1)) continue;
                            Obligation ob{pat(Sign::plus, CC::any(), CC::eq(i), CC::eq(j - 1),
                                              CC::any()),
                                          pat(Sign::minus, CC::eq(i), CC::any(), CC::eq(j - 1),
                                              CC::any())};
                            if (!crossing_unavoidable(n, u, v, ob))
                                return show_pair(trees[u], trees[v]) + " (" + std::to_string(i) +
                                       "," + std::to_string(j) + ")";
                        }
                }
        }
        return std::nullopt;
    });

    return s.result;
}

SuiteResult suite_collpair(int max_size) {
    Suite s("collpair");
    int lim = cap(6, max_size);
    int label_top = lim + 1;

    auto subsets = [&]() {
        std::vector<LabelSet> out;
        for (int mask = 0; mask < (1 << label_top); ++mask) {
            LabelSet ls;
            for (int b = 0; b < label_top; ++b)
                if (mask & (1 << b)) ls.add(b + 1);
            out.push_back(std::move(ls));
        }
        return out;
    }();

    s.check("collapse criterion matches collapsed equality", [&]() -> Maybe {
        for (int n = 1; n <= lim; ++n)
            for (const auto& t : all_trees(n))
                for (const auto& [edge, t2] : neighbors(t)) {
                    PairName nm = name_of_edge(t, edge);
                    for (const auto& I : subsets) {
                        auto ca = collapse(t, I), cb = collapse(t2, I);
                        bool equal = (!ca && !cb) || (ca && cb && *ca == *cb);
                        if (equal != is_collapsing_pair(nm, t.labels(), I))
                            return show_pair(t, t2) + " I=" + I.str();
                    }
                }
        return std::nullopt;
    });

    s.check("collapsed pairs keep the predicted name", [&]() -> Maybe {
        for (int n = 1; n <= lim; ++n)
            for (const auto& t : all_trees(n))
                for (const auto& [edge, t2] : neighbors(t)) {
                    PairName nm = name_of_edge(t, edge);
                    for (const auto& I : subsets) {
                        auto predicted = collapsed_name(nm, I, t.labels());
                        auto ca = collapse(t, I), cb = collapse(t2, I);
                        if (!predicted) continue; // handled by the criterion check
                        if (!ca || !cb) return show_pair(t, t2) + " I=" + I.str();
                        auto actual = pair_name(*ca, *cb);
                        if (!actual || !(*actual == *predicted))
                            return show_pair(t, t2) + " I=" + I.str() + " expected " +
                                   to_string(*predicted);
                    }
                }
        return std::nullopt;
    });

    s.check("covering pairs outside the set survive collapsing", [&]() -> Maybe {
        for (int n = 1; n <= lim; ++n)
            for (const auto& t : all_trees(n))
                for (const auto& I : subsets) {
                    auto ct = collapse(t, I);
                    if (!ct || ct->size() == 0) continue;
                    for (Label i = 1; i <= n + 1; ++i)
                        for (Label j = i + 1; j <= n + 1; ++j) {
                            if (I.contains(i) || I.contains(j)) continue;
                            if (covers(t, i, j) && !covers(*ct, i, j))
                                return format(t) + " I=" + I.str() + " covering (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")";
                            if (cocovers(t, i, j) && !cocovers(*ct, i, j))
                                return format(t) + " I=" + I.str() + " co-covering (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")";
                        }
                }
        return std::nullopt;
    });

    s.check("collapsing composes as union", [&]() -> Maybe {
        for (int n = 1; n <= lim; ++n)
            for (const auto& t : all_trees(n))
                for (const auto& I : subsets)
                    for (const auto& J : subsets) {
                        auto via = collapse(collapse(t, J), I);
                        auto direct = collapse(t, I.unioned(J));
                        bool equal = (!via && !direct) || (via && direct && *via == *direct);
                        if (!equal)
                            return format(t) + " I=" + I.str() + " J=" + J.str();
                    }
        return std::nullopt;
    });

    return s.result;
}

SuiteResult suite_distcoll(int max_size) {
    Suite s("distcoll");
    int lim = cap(6, max_size);

    s.check("collapse splits the distance", [&]() -> Maybe {
        for (int n = 2; n <= lim; ++n) {
            auto trees = all_trees(n);
            const auto& table = all_pairs(n);
            for (std::uint32_t u = 0; u < trees.size(); ++u)
                for (std::uint32_t v = 0; v < trees.size(); ++v) {
                    if (u == v) continue;
                    for (Label lo = 1; lo <= n + 1; ++lo)
                        for (Label hi = lo; hi <= n + 1; ++hi) {
                            LabelSet I = LabelSet::interval(lo, hi);
                            auto ca = collapse(trees[u], I), cb = collapse(trees[v], I);
                            long long collapsed_dist = 0;
                            if (ca && cb && !(*ca == *cb))
                                collapsed_dist = distance(*ca, *cb).value;
                            long long steps = dist_collapsing(trees[u], trees[v], I).value;
                            if (table[u][v] < collapsed_dist + steps)
                                return show_pair(trees[u], trees[v]) + " I=" + I.str() + ": " +
                                       std::to_string(table[u][v]) + " < " +
                                       std::to_string(collapsed_dist) + "+" +
                                       std::to_string(steps);
                        }
                }
        }
        return std::nullopt;
    });

    s.check("no collapsing steps for the empty set", [&]() -> Maybe {
        for (int n = 2; n <= std::min(lim, 5); ++n) {
            auto trees = all_trees(n);
            for (size_t u = 0; u < trees.size(); u += 3)
                for (size_t v = 0; v < trees.size(); v += 5)
                    if (dist_collapsing(trees[u], trees[v], LabelSet{}).value != 0)
                        return show_pair(trees[u], trees[v]);
        }
        return std::nullopt;
    });

    s.check("strongly disjoint double collapse bound", [&]() -> Maybe {
        int n = std::min(lim, 6);
        auto trees = all_trees(n);
        const auto& table = all_pairs(n);
        std::vector<std::pair<LabelSet, LabelSet>> set_pairs;
        for (Label alo = 1; alo <= n + 1; ++alo)
            for (Label ahi = alo; ahi <= n + 1; ++ahi)
                for (Label blo = 1; blo <= n + 1; ++blo)
                    for (Label bhi = blo; bhi <= n + 1; ++bhi) {
                        LabelSet I = LabelSet::interval(alo, ahi);
                        LabelSet J = LabelSet::interval(blo, bhi);
                        if (strongly_disjoint(I, J)) set_pairs.emplace_back(I, J);
                    }
        // sampled sweep: step through tree pairs
        for (size_t u = 0; u < trees.size(); u += 7)
            for (size_t v = 1; v < trees.size(); v += 11) {
                if (u == v) continue;
                for (const auto& [I, J] : set_pairs) {
                    auto ia = collapse(trees[u], I), ib = collapse(trees[v], I);
                    long long head = 0;
                    if (ia && ib && !(*ia == *ib)) head = distance(*ia, *ib).value;
                    auto ja = collapse(trees[u], J), jb = collapse(trees[v], J);
                    long long tail = 0;
                    if (ja && jb && !(*ja == *jb) && ja->size() > 0)
                        tail = dist_collapsing(*ja, *jb, I).value;
                    if (table[u][v] < head + tail)
                        return show_pair(trees[u], trees[v]) + " I=" + I.str() + " J=" + J.str();
                }
            }
        return std::nullopt;
    });

    return s.result;
}

SuiteResult suite_thompson(int max_size) {
    Suite s("thompson-relations");
    int addr_len = cap(3, max_size);

    auto rel = relation_suite(addr_len);
    s.record("defining relations hold under the action (" + std::to_string(rel.instances) +
                 " instances)",
             rel.failures == 0, rel.failed.empty() ? "" : rel.failed.front());

    s.check("free reduction preserves equivalence and the invariant", [&]() -> Maybe {
        FWord w = parse_word("A[1]+ A[]+ A[10]- A[]+");
        for (size_t cut = 0; cut <= w.size(); ++cut) {
            for (const auto& at : {Address{}, Address{"0"}, Address{"11"}}) {
                FWord padded(w.begin(), w.begin() + static_cast<long>(cut));
                padded.push_back({at, +1});
                padded.push_back({at, -1});
                padded.insert(padded.end(), w.begin() + static_cast<long>(cut), w.end());
                if (!words_equivalent(w, padded)) return "insertion at " + std::to_string(cut);
                if (right_arm_exponent_sum(w) != right_arm_exponent_sum(padded) &&
                    at.all_ones())
                    return "invariant broke at " + std::to_string(cut);
            }
        }
        return std::nullopt;
    });

    s.check("comb words are geodesic witnesses", [&]() -> Maybe {
        int lim = cap(7, max_size);
        for (int n = 0; n <= lim; ++n)
            for (const auto& t : all_trees(n)) {
                FWord w = chi(t);
                if (static_cast<int>(w.size()) != n - right_height(t))
                    return "length mismatch for " + format(t);
                std::string comb(static_cast<size_t>(n), '1');
                auto reached = apply(spine_tree(comb), w);
                if (!reached || !(*reached == t)) return "action mismatch for " + format(t);
                if (right_arm_exponent_sum(w) != static_cast<int>(w.size()))
                    return "non-positive letters in " + to_string(w);
            }
        return std::nullopt;
    });

    s.check("two-sided comb words connect any two trees", [&]() -> Maybe {
        int lim = cap(6, max_size);
        for (int n = 1; n <= lim; ++n) {
            auto trees = all_trees(n);
            for (const auto& a : trees)
                for (const auto& b : trees) {
                    FWord w = inverse(chi(a));
                    FWord tail = chi(b);
                    w.insert(w.end(), tail.begin(), tail.end());
                    if (static_cast<int>(w.size()) > 2 * n - 2 && !(a == b))
                        return "overlong word for " + show_pair(a, b);
                    auto reached = apply(a, w);
                    if (!reached || !(*reached == b)) return "action failed " + show_pair(a, b);
                }
        }
        return std::nullopt;
    });

    s.check("positive powers against their short equivalents", [&]() -> Maybe {
        // A_a^(p) stacks the letters along the right arm below a
        auto tower = [](const Address& a, int p) {
            FWord w;
            for (int i = p - 1; i >= 0; --i) {
                Address at = a;
                for (int k = 0; k < i; ++k) at = at.then('1');
                w.push_back({at, +1});
            }
            return w;
        };
        for (int p = 1; p <= 4; ++p) {
            FWord lhs;
            for (int k = 0; k <= p - 1; ++k) {
                Address base;
                for (int x = 0; x < k; ++x) base = base.then('0').then('1');
                auto part = tower(base, p - k);
                lhs.insert(lhs.end(), part.begin(), part.end());
            }
            FWord rhs = tower(Address{}, p - 1);
            rhs.push_back({Address{}, +1});
            Address zig;
            for (int k = 0; k <= p - 2; ++k) {
                rhs.push_back({zig.then('0'), -1});
                rhs.push_back({zig.then('0').then('1'), +1});
                zig = zig.then('0').then('1');
            }
            if (static_cast<int>(lhs.size()) != p * (p + 1) / 2)
                return "long word length off at p=" + std::to_string(p);
            if (static_cast<int>(rhs.size()) != 3 * p - 2)
                return "short word length off at p=" + std::to_string(p);
            if (!words_equivalent(lhs, rhs)) return "not equivalent at p=" + std::to_string(p);
            if (right_arm_exponent_sum(lhs) != right_arm_exponent_sum(rhs))
                return "invariant differs at p=" + std::to_string(p);
        }
        return std::nullopt;
    });

    s.check("the action is free on samples", [&]() -> Maybe {
        const Tree base = spine_tree("110100");
        std::vector<FWord> words = {
            parse_word("A[]+"), parse_word("A[1]+ A[]+"), parse_word("A[]+ A[0]+"),
            parse_word("A[1]+ A[]+ A[0]-"), parse_word("A[10]+ A[]-"),
            parse_word("A[]- A[1]+"), parse_word("A[0]+ A[00]+")};
        for (const auto& w1 : words)
            for (const auto& w2 : words) {
                auto r1 = apply(base, w1), r2 = apply(base, w2);
                if (r1 && r2 && *r1 == *r2 && !words_equivalent(w1, w2))
                    return to_string(w1) + " vs " + to_string(w2);
            }
        return std::nullopt;
    });

    return s.result;
}

SuiteResult suite_catalan_degree(int max_size) {
    Suite s("catalan-degree");
    int lim = cap(10, max_size);
    s.check("vertex counts follow the Catalan numbers", [&]() -> Maybe {
        for (int n = 1; n <= lim; ++n) {
            auto st = graph_stats(n, /*force=*/true);
            if (st.vertices != catalan(n))
                return "size " + std::to_string(n) + ": " + std::to_string(st.vertices);
        }
        return std::nullopt;
    });
    s.check("every vertex has degree one below the size", [&]() -> Maybe {
        for (int n = 2; n <= lim; ++n) {
            auto st = graph_stats(n, /*force=*/true);
            if (st.degree_histogram.size() != 1 ||
                st.degree_histogram.begin()->first != n - 1)
                return "size " + std::to_string(n);
        }
        return std::nullopt;
    });
    s.check("neighbor enumeration matches the degree", [&]() -> Maybe {
        for (int n = 1; n <= lim; ++n) {
            auto trees = all_trees(n);
            for (size_t i = 0; i < trees.size(); i += 17)
                if (static_cast<int>(neighbors(trees[i]).size()) != n - 1)
                    return format(trees[i]);
        }
        return std::nullopt;
    });
    return s.result;
}

SuiteResult suite_codec(int max_size) {
    Suite s("codec");
    int lim = cap(8, max_size);

    s.check("bit and bracket round trips", [&]() -> Maybe {
        for (int n = 0; n <= lim; ++n)
            for (const auto& t : all_trees(n)) {
                if (!decode(encode(t)).same_shape(t)) return format(t);
                if (!(parse_bracket(format(t)) == t)) return format(t);
            }
        return std::nullopt;
    });

    s.check("encoding separates all shapes of size 10", [&]() -> Maybe {
        int n = std::min(10, std::max(lim, 8));
        std::vector<std::string> codes;
        for (const auto& t : all_trees(n)) codes.push_back(encode(t));
        std::sort(codes.begin(), codes.end());
        if (std::adjacent_find(codes.begin(), codes.end()) != codes.end())
            return "duplicate code at size " + std::to_string(n);
        if (codes.size() != catalan(n)) return "wrong count";
        return std::nullopt;
    });

    s.check("triangulation codec round trips", [&]() -> Maybe {
        for (int n = 1; n <= cap(7, max_size); ++n)
            for (const auto& t : all_trees(n))
                if (!(from_triangulation(to_triangulation(t)) == t.relabeled_default()))
                    return format(t);
        return std::nullopt;
    });

    s.check("rotations and flips commute through the codec", [&]() -> Maybe {
        for (int n = 1; n <= cap(6, max_size); ++n)
            for (const auto& t : all_trees(n))
                for (const auto& [edge, t2] : neighbors(t)) {
                    auto moved = flip(to_triangulation(t), diagonal_of_rotation(t, edge));
                    if (!(moved == to_triangulation(t2)))
                        return show_pair(t, t2) + " at " + to_string(edge);
                }
        return std::nullopt;
    });

    s.check("flip availability matches the degree", [&]() -> Maybe {
        for (int n = 2; n <= cap(6, max_size); ++n)
            for (const auto& t : all_trees(n)) {
                auto tri = to_triangulation(t);
                int flips = 0;
                for (auto d : tri.diagonals()) {
                    flip(tri, d);
                    ++flips;
                }
                if (flips != n - 1) return format(t);
            }
        return std::nullopt;
    });

    return s.result;
}

SuiteResult suite_bicomb(int max_size) {
    Suite s("bicomb");
    int lim = cap(12, max_size);

    s.check("two-comb distances match the closed form", [&]() -> Maybe {
        for (int p = 1; p <= lim - 1; ++p)
            for (int q = 1; p + q <= lim; ++q) {
                auto fam = bicomb(p, q);
                long long d = distance(fam.source, fam.target).value;
                if (d != fam.bound)
                    return fam.tag + ": " + std::to_string(d) + " != " +
                           std::to_string(fam.bound);
            }
        return std::nullopt;
    });

    s.check("colour obligations are unavoidable on the square case", [&]() -> Maybe {
        auto fam = bicomb(2, 2);
        auto from = static_cast<std::uint32_t>(tree_rank(fam.source));
        auto to = static_cast<std::uint32_t>(tree_rank(fam.target));
        for (const auto& ob : bicomb_obligations(2, 2))
            if (!crossing_unavoidable(4, from, to, ob)) return "escapable obligation";
        return std::nullopt;
    });

    s.check("geodesics between the square combs are all-special", [&]() -> Maybe {
        auto fam = bicomb(2, 2);
        auto types = bicomb_special_types(2, 2);
        auto geos = enumerate_geodesics(fam.source, fam.target, 10000);
        if (geos.empty()) return "no geodesics found";
        for (const auto& path : geos) {
            int special = 0;
            for (size_t i = 0; i + 1 < path.size(); ++i) {
                auto nm = pair_name(path[i], path[i + 1]);
                for (const auto& ty : types)
                    if (obligation_matches(ty.patterns, *nm)) {
                        ++special;
                        break;
                    }
            }
            if (special < 4) return "a geodesic with " + std::to_string(special) + " special edges";
        }
        return std::nullopt;
    });

    return s.result;
}

SuiteResult suite_tricomb(int max_size) {
    Suite s("tricomb");
    int plim = std::max(1, cap(12, max_size) / 3);

    s.check("three-comb distances match the closed form", [&]() -> Maybe {
        for (int p = 1; p <= plim; ++p) {
            auto fam = tricomb(p);
            long long d = distance(fam.source, fam.target).value;
            if (d != fam.bound)
                return fam.tag + ": " + std::to_string(d) + " != " + std::to_string(fam.bound);
        }
        return std::nullopt;
    });

    s.check("collapsing projections land on the smaller families", [&]() -> Maybe {
        for (int p = 1; p <= std::max(plim, 4); ++p) {
            auto fam = tricomb(p);
            auto small = bicomb(p, p);
            auto cs = collapse(fam.source, *fam.collapse_i);
            auto ct = collapse(fam.target, *fam.collapse_i);
            if (!cs || !ct || !cs->same_shape(small.source) || !ct->same_shape(small.target))
                return fam.tag + " inner projection";
            auto link = tricomb_link(p);
            auto js = collapse(fam.source, *fam.collapse_j);
            auto jt = collapse(fam.target, *fam.collapse_j);
            if (!js || !jt || !js->same_shape(link.source) || !jt->same_shape(link.target))
                return fam.tag + " link projection";
        }
        return std::nullopt;
    });

    s.check("forced collapsing steps across the link pair", [&]() -> Maybe {
        for (int p = 2; p <= std::min(plim + 1, 4); ++p) {
            auto link = tricomb_link(p);
            long long d = dist_collapsing(link.source, link.target, link.counted).value;
            if (d != link.bound)
                return "p=" + std::to_string(p) + ": " + std::to_string(d) + " != " +
                       std::to_string(link.bound);
        }
        return std::nullopt;
    });

    s.check("link special types are collapsing and unambiguous", [&]() -> Maybe {
        for (int p = 2; p <= 3; ++p) {
            int n = 2 * p + 1;
            auto types = tricomb_link_types(p);
            LabelSet I = tricomb_link(p).counted;
            std::vector<Label> labels(static_cast<size_t>(n) + 1);
            for (int i = 0; i <= n; ++i) labels[static_cast<size_t>(i)] = i + 1;
            for (Sign sg : {Sign::plus, Sign::minus})
                for (Label a = 1; a <= n; ++a)
                    for (Label b = a + 1; b <= n + 1; ++b)
                        for (Label c = b; c <= n; ++c)
                            for (Label d = c + 1; d <= n + 1; ++d) {
                                PairName nm{a, b, c, d, sg};
                                int hits = 0;
                                for (const auto& ty : types)
                                    if (obligation_matches(ty.patterns, nm)) ++hits;
                                if (hits == 0) continue;
                                if (hits > 1)
                                    return "ambiguous type for " + to_string(nm) + " at p=" +
                                           std::to_string(p);
                                if (!is_collapsing_pair(nm, labels, I))
                                    return "non-collapsing special " + to_string(nm) + " at p=" +
                                           std::to_string(p);
                            }
        }
        return std::nullopt;
    });

    return s.result;
}

SuiteResult suite_multicomb(int max_size) {
    Suite s("multicomb");
    int size_lim = cap(12, max_size);

    s.check("stacked-comb distances meet the bound", [&]() -> Maybe {
        for (auto [m, p] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
            if (2 * m * p > size_lim) continue;
            auto fam = multicomb(m, p);
            long long d = distance(fam.source, fam.target).value;
            if (d < fam.bound)
                return fam.tag + ": " + std::to_string(d) + " < " + std::to_string(fam.bound);
            if (d != fam.bound)
                return fam.tag + ": expected equality, got " + std::to_string(d);
        }
        return std::nullopt;
    });

    s.check("collapsing projections step down the family", [&]() -> Maybe {
        for (int m = 2; m <= 4; ++m)
            for (int p = 1; p <= 3; ++p) {
                auto fam = multicomb(m, p);
                auto prev = multicomb(m - 1, p);
                auto cs = collapse(fam.source, *fam.collapse_i);
                auto ct = collapse(fam.target, *fam.collapse_i);
                if (!cs || !ct || !cs->same_shape(prev.source) || !ct->same_shape(prev.target))
                    return fam.tag + " inner projection";
                auto link = multicomb_link(p);
                auto js = collapse(fam.source, *fam.collapse_j);
                auto jt = collapse(fam.target, *fam.collapse_j);
                if (!js || !jt || !js->same_shape(link.source) || !jt->same_shape(link.target))
                    return fam.tag + " link projection";
            }
        return std::nullopt;
    });

    s.check("forced collapsing steps across the link pair", [&]() -> Maybe {
        for (int p = 1; p <= 2; ++p) {
            auto link = multicomb_link(p);
            long long d = dist_collapsing(link.source, link.target, link.counted).value;
            if (d < link.bound)
                return "p=" + std::to_string(p) + ": " + std::to_string(d) + " < " +
                       std::to_string(link.bound);
        }
        return std::nullopt;
    });

    s.check("eleven special types are collapsing with known overlaps", [&]() -> Maybe {
        for (int p = 2; p <= 3; ++p) {
            int n = 3 * p + 1, q = 2 * p + 1;
            auto types = multicomb_link_types(p);
            LabelSet I = multicomb_link(p).counted;
            std::vector<Label> labels(static_cast<size_t>(n) + 1);
            for (int i = 0; i <= n; ++i) labels[static_cast<size_t>(i)] = i + 1;
            for (Sign sg : {Sign::plus, Sign::minus})
                for (Label a = 1; a <= n; ++a)
                    for (Label b = a + 1; b <= n + 1; ++b)
                        for (Label c = b; c <= n; ++c)
                            for (Label d = c + 1; d <= n + 1; ++d) {
                                PairName nm{a, b, c, d, sg};
                                std::vector<std::string> fams;
                                for (const auto& ty : types)
                                    if (obligation_matches(ty.patterns, nm))
                                        fams.push_back(ty.label.substr(0, ty.label.find('_')));
                                if (fams.empty()) continue;
                                if (!is_collapsing_pair(nm, labels, I))
                                    return "non-collapsing special " + to_string(nm) + " at p=" +
                                           std::to_string(p);
                                if (fams.size() == 1) continue;
                                bool allowed =
                                    fams.size() == 2 &&
                                    ((fams[0] == "IV+" && fams[1] == "VI+") ||
                                     (fams[0] == "VI+" && fams[1] == "IV+") ||
                                     (fams[0] == "II-" && fams[1] == "VI-") ||
                                     (fams[0] == "VI-" && fams[1] == "II-"));
                                // the two sanctioned overlaps pin the last
                                // coordinate to the top label
                                if (allowed && nm.d != n + 1) allowed = false;
                                if (!allowed)
                                    return "unexpected overlap for " + to_string(nm) + " at p=" +
                                           std::to_string(p);
                            }
        }
        return std::nullopt;
    });

    s.check("forced crossings for the link pair", [&]() -> Maybe {
        using CC = CoordConstraint;
        auto pat = [](Sign sg, CC a, CC b, CC c, CC d) {
            NamePattern x;
            x.sign = sg;
            x.coord = {std::move(a), std::move(b), std::move(c), std::move(d)};
            return x;
        };
        for (int p = 1; p <= 2; ++p) {
            int n = 3 * p + 1, q = 2 * p + 1;
            auto link = multicomb_link(p);
            auto from = static_cast<std::uint32_t>(tree_rank(link.source));
            auto to = static_cast<std::uint32_t>(tree_rank(link.target));
            // one crossing with the hinge label pinned, per lower parameter
            for (Label a = p + 2; a <= q; ++a) {
                Obligation ob{pat(Sign::plus, CC::any(), CC::eq(a), CC::eq(q), CC::any()),
                              pat(Sign::minus, CC::any(), CC::eq(a), CC::any(), CC::eq(q))};
                if (!crossing_unavoidable(n, from, to, ob))
                    return "low family escabable at a=" + std::to_string(a) + ", p=" +
                           std::to_string(p);
            }
            // and per upper parameter
            for (Label a = q + 1; a <= n - 1; ++a) {
                Obligation ob{pat(Sign::plus, CC::any(), CC::eq(q), CC::eq(a), CC::any()),
                              pat(Sign::minus, CC::eq(q), CC::any(), CC::eq(a), CC::any())};
                if (!crossing_unavoidable(n, from, to, ob))
                    return "high family escapable at a=" + std::to_string(a) + ", p=" +
                           std::to_string(p);
            }
        }
        return std::nullopt;
    });

    return s.result;
}

SuiteResult suite_zigzag(int max_size) {
    Suite s("zigzag");
    int mlim = std::max(0, (cap(12, max_size) - 2) / 2);

    s.check("zigzag distances match the closed form", [&]() -> Maybe {
        for (int m = 0; m <= mlim; ++m) {
            auto fam = zigzag(m);
            long long d = distance(fam.source, fam.target).value;
            if (d != fam.bound)
                return fam.tag + ": " + std::to_string(d) + " != " + std::to_string(fam.bound);
        }
        return std::nullopt;
    });

    s.check("base case forces six collapsing steps", [&]() -> Maybe {
        auto fam = zigzag(2);
        long long d = dist_collapsing(fam.source, fam.target, *fam.collapse_i).value;
        if (d != 6) return "got " + std::to_string(d);
        return std::nullopt;
    });

    s.check("collapsing projections step the family down by two", [&]() -> Maybe {
        for (int m = 2; m <= std::max(mlim, 5); ++m) {
            auto fam = zigzag(m);
            auto prev = zigzag(m - 2);
            auto cs = collapse(fam.source, *fam.collapse_i);
            auto ct = collapse(fam.target, *fam.collapse_i);
            if (!cs || !ct || !cs->same_shape(prev.source) || !ct->same_shape(prev.target))
                return fam.tag + " inner projection";
            auto base = zigzag(2);
            auto js = collapse(fam.source, *fam.collapse_j);
            auto jt = collapse(fam.target, *fam.collapse_j);
            if (!js || !jt || !js->same_shape(base.source) || !jt->same_shape(base.target))
                return fam.tag + " base projection";
        }
        return std::nullopt;
    });

    s.check("widened variant forces ten collapsing steps", [&]() -> Maybe {
        if (max_size > 0 && max_size < 10) return std::nullopt; // needs size-10 search
        Tree src = spine_tree("1110101000");
        Tree dst = spine_tree("0001010111");
        LabelSet I = LabelSet::interval(3, 9);
        LabelSet cut = LabelSet::of({6});
        LabelSet keep;
        for (Label l : I.elements())
            if (!cut.contains(l)) keep.add(l);
        long long d = dist_collapsing(src, dst, keep).value;
        if (d != 10) return "got " + std::to_string(d);
        return std::nullopt;
    });

    return s.result;
}

SuiteResult suite_conjecture(int max_size) {
    Suite s("conjecture");
    int top = max_size > 0 ? std::min(13, max_size) : 13;
    s.check("symmetric zigzag pairs reach twice the size minus six", [&]() -> Maybe {
        for (int n = 11; n <= top; ++n) {
            auto fam = conjecture_pair(n);
            long long d = distance(fam.source, fam.target).value;
            if (d != fam.bound)
                return fam.tag + ": " + std::to_string(d) + " != " + std::to_string(fam.bound);
        }
        return std::nullopt;
    });
    return s.result;
}

} // namespace

std::vector<std::string> verification_suites() {
    return {"covering-lemmas", "covchange",  "keylemma",  "collpair",
            "distcoll",        "thompson-relations", "catalan-degree", "codec",
            "bicomb",          "tricomb",    "multicomb", "zigzag",
            "conjecture"};
}

SuiteResult run_verification(const std::string& suite, int max_size) {
    if (suite == "covering-lemmas") return suite_covering_lemmas(max_size);
    if (suite == "covchange") return suite_covchange(max_size);
    if (suite == "keylemma") return suite_keylemma(max_size);
    if (suite == "collpair") return suite_collpair(max_size);
    if (suite == "distcoll") return suite_distcoll(max_size);
    if (suite == "thompson-relations") return suite_thompson(max_size);
    if (suite == "catalan-degree") return suite_catalan_degree(max_size);
    if (suite == "codec") return suite_codec(max_size);
    if (suite == "bicomb") return suite_bicomb(max_size);
    if (suite == "tricomb") return suite_tricomb(max_size);
    if (suite == "multicomb") return suite_multicomb(max_size);
    if (suite == "zigzag") return suite_zigzag(max_size);
    if (suite == "conjecture") return suite_conjecture(max_size);
    throw std::invalid_argument("unknown suite: " + suite);
}

} // namespace rotdist
