#include "rotdist/search.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rotdist {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

} // namespace

std::uint64_t catalan(int n) {
    static const std::vector<std::uint64_t> table = [] {
        std::vector<std::uint64_t> c{1};
        for (int i = 1; i <= 33; ++i) {
            std::uint64_t v = 0;
            for (int k = 0; k < i; ++k)
                v += c[static_cast<size_t>(k)] * c[static_cast<size_t>(i - 1 - k)];
            c.push_back(v);
        }
        return c;
    }();
    if (n < 0 || n > 33) throw std::invalid_argument("catalan table covers 0..33");
    return table[static_cast<size_t>(n)];
}

namespace {

std::uint64_t rank_shape(const detail::NodePtr& t) {
    if (!t->left) return 0;
    int n = t->size;
    int k = t->left->size;
    std::uint64_t r = 0;
    for (int j = 0; j < k; ++j) r += catalan(j) * catalan(n - 1 - j);
    r += rank_shape(t->left) * catalan(n - 1 - k) + rank_shape(t->right);
    return r;
}

detail::NodePtr unrank_shape(int n, std::uint64_t r) {
    if (n == 0) return detail::make_leaf();
    int k = 0;
    while (true) {
        std::uint64_t block = catalan(k) * catalan(n - 1 - k);
        if (r < block) break;
        r -= block;
        ++k;
    }
    std::uint64_t right_count = catalan(n - 1 - k);
    return detail::make_node(unrank_shape(k, r / right_count),
                             unrank_shape(n - 1 - k, r % right_count));
}

void check_dense_budget(int n, bool force) {
    if (n < 1) throw std::invalid_argument("size must be at least 1");
    if (n > kDenseSizeGuard && !force)
        throw BudgetError("size " + std::to_string(n) + " exceeds the dense-engine guard (" +
                          std::to_string(kDenseSizeGuard) + "); pass force to override");
    if (n > 16) throw BudgetError("dense engine refuses size > 16");
}

// rotated shapes only, in the same order as neighbors()
void neighbor_shapes(const detail::NodePtr& n, std::vector<detail::NodePtr>& out) {
    struct Walk {
        std::vector<detail::NodePtr>& out;
        // rebuild stack: splice `sub` back along the path recorded in `spine`
        detail::NodePtr splice(const std::vector<std::pair<detail::NodePtr, char>>& spine,
                               detail::NodePtr sub) {
            for (auto it = spine.rbegin(); it != spine.rend(); ++it)
                sub = it->second == '0' ? detail::make_node(std::move(sub), it->first->right)
                                        : detail::make_node(it->first->left, std::move(sub));
            return sub;
        }
        void visit(const detail::NodePtr& cur,
                   std::vector<std::pair<detail::NodePtr, char>>& spine) {
            if (!cur->left) return;
            if (cur->right->left) // positive rotation applies here
                out.push_back(splice(spine, detail::make_node(
                                                detail::make_node(cur->left, cur->right->left),
                                                cur->right->right)));
            if (cur->left->left) // negative rotation applies here
                out.push_back(splice(spine, detail::make_node(
                                                cur->left->left,
                                                detail::make_node(cur->left->right, cur->right))));
            spine.emplace_back(cur, '0');
            visit(cur->left, spine);
            spine.back().second = '1';
            visit(cur->right, spine);
            spine.pop_back();
        }
    } walk{out};
    std::vector<std::pair<detail::NodePtr, char>> spine;
    walk.visit(n, spine);
}

} // namespace

std::uint64_t tree_rank(const Tree& t) { return rank_shape(t.shape()); }

Tree tree_unrank(int n, std::uint64_t rank) {
    if (rank >= catalan(n)) throw std::invalid_argument("rank out of range");
    return Tree::from_shape(unrank_shape(n, rank));
}

// -------------------------------------------------------------- DenseGraph

DenseGraph::DenseGraph(int n, bool force) : n_(n) {
    check_dense_budget(n, force);
    count_ = static_cast<std::uint32_t>(catalan(n));
    adjacency_.resize(static_cast<size_t>(count_) * static_cast<size_t>(degree()));
    mirror_.resize(count_);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 256)
#endif
    for (long long v = 0; v < static_cast<long long>(count_); ++v) {
        auto shape = unrank_shape(n_, static_cast<std::uint64_t>(v));
        std::vector<detail::NodePtr> nb;
        neighbor_shapes(shape, nb);
        auto* row = adjacency_.data() + static_cast<size_t>(v) * static_cast<size_t>(degree());
        for (size_t k = 0; k < nb.size(); ++k)
            row[k] = static_cast<std::uint32_t>(rank_shape(nb[k]));
        mirror_[static_cast<size_t>(v)] = static_cast<std::uint32_t>(rank_shape(mirror_shape(shape)));
    }
}

std::vector<std::uint32_t> DenseGraph::collapsing_masks(const LabelSet& s,
                                                        const std::vector<Label>& labels) const {
    if (static_cast<int>(labels.size()) != n_ + 1)
        throw std::invalid_argument("label count must match the graph size");
    std::vector<std::uint32_t> masks(count_, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 256)
#endif
    for (long long v = 0; v < static_cast<long long>(count_); ++v) {
        Tree t = tree_unrank(n_, static_cast<std::uint64_t>(v));
        auto nb = neighbors(t);
        std::uint32_t mask = 0;
        for (size_t k = 0; k < nb.size(); ++k) {
            PairName name = name_of_edge(t, nb[k].first);
            // name entries are positions here; read them through the labels
            PairName named{labels[static_cast<size_t>(name.a) - 1],
                           labels[static_cast<size_t>(name.b) - 1],
                           labels[static_cast<size_t>(name.c) - 1],
                           labels[static_cast<size_t>(name.d) - 1], name.sign};
            if (is_collapsing_pair(named, labels, s)) mask |= 1u << k;
        }
        masks[static_cast<size_t>(v)] = mask;
    }
    return masks;
}

std::vector<int> bfs_all(const DenseGraph& g, std::uint32_t source,
                         const std::vector<std::uint32_t>* skip_masks) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<std::uint32_t> frontier{source}, next;
    dist[source] = 0;
    int d = 0;
    while (!frontier.empty()) {
        ++d;
        next.clear();
        for (std::uint32_t u : frontier) {
            const std::uint32_t* row = g.neighbors(u);
            std::uint32_t skip = skip_masks ? (*skip_masks)[u] : 0;
            for (int k = 0; k < g.degree(); ++k) {
                if (skip & (1u << k)) continue;
                std::uint32_t v = row[k];
                if (dist[v] < 0) {
                    dist[v] = d;
                    next.push_back(v);
                }
            }
        }
        frontier.swap(next);
    }
    return dist;
}

// --------------------------------------------------- bidirectional search

namespace {

struct Side {
    std::unordered_map<std::uint64_t, int> dist;
    std::unordered_map<std::uint64_t, std::uint64_t> parent;
    std::vector<std::uint64_t> level;
    int depth = 0;
};

// expands one full level; reports the best meeting total found, if any
void expand_level(Side& self, const Side& other, bool want_witness, long long& best,
                  std::uint64_t& meet, std::uint64_t& visited) {
    std::vector<std::uint64_t> next;
    std::vector<detail::NodePtr> nb;
    for (std::uint64_t code : self.level) {
        auto shape = shape_from_code(code);
        nb.clear();
        neighbor_shapes(shape, nb);
        ++visited;
        for (const auto& s : nb) {
            std::uint64_t c = shape_code(s);
            if (self.dist.emplace(c, self.depth + 1).second) {
                if (want_witness) self.parent.emplace(c, code);
                next.push_back(c);
                auto hit = other.dist.find(c);
                if (hit != other.dist.end()) {
                    long long total = self.depth + 1 + hit->second;
                    if (best < 0 || total < best) {
                        best = total;
                        meet = c;
                    }
                }
            }
        }
    }
    self.level = std::move(next);
    ++self.depth;
}

std::vector<Tree> rebuild_path(const Side& fa, const Side& fb, std::uint64_t meet,
                               const Tree& labels_from) {
    std::vector<std::uint64_t> codes;
    for (std::uint64_t c = meet;; c = fa.parent.at(c)) {
        codes.push_back(c);
        if (fa.dist.at(c) == 0) break;
    }
    std::reverse(codes.begin(), codes.end());
    for (std::uint64_t c = meet; fb.dist.at(c) != 0;) {
        c = fb.parent.at(c);
        codes.push_back(c);
    }
    std::vector<Tree> path;
    path.reserve(codes.size());
    for (std::uint64_t c : codes)
        path.push_back(labels_from.with_same_labels(shape_from_code(c)));
    return path;
}

} // namespace

SearchReport distance(const Tree& t, const Tree& t2, bool want_witness) {
    if (t.size() != t2.size() || t.labels() != t2.labels())
        throw std::invalid_argument("distance requires equal sizes and labels");
    auto start = Clock::now();
    SearchReport rep;
    if (t.same_shape(t2)) {
        if (want_witness) rep.witness = {t};
        rep.millis = elapsed_ms(start);
        return rep;
    }
    Side fa, fb;
    std::uint64_t ca = shape_code(t), cb = shape_code(t2);
    fa.dist[ca] = 0;
    fa.level = {ca};
    fb.dist[cb] = 0;
    fb.level = {cb};
    long long best = -1;
    std::uint64_t meet = 0;
    std::uint64_t visited = 0;
    while (!fa.level.empty() && !fb.level.empty()) {
        if (best >= 0 && best <= fa.depth + fb.depth + 1) break; // no shorter meet possible
        Side& grow = fa.level.size() <= fb.level.size() ? fa : fb;
        Side& keep = (&grow == &fa) ? fb : fa;
        expand_level(grow, keep, want_witness, best, meet, visited);
    }
    if (best < 0) throw std::logic_error("equal-size trees must be connected");
    rep.value = best;
    rep.visited = visited;
    if (want_witness) rep.witness = rebuild_path(fa, fb, meet, t);
    rep.millis = elapsed_ms(start);
    return rep;
}

// ----------------------------------------------------------------- sweeps

namespace {

// farthest distance (and one target) from one source; scratch reused
std::pair<int, std::uint32_t> eccentricity(const DenseGraph& g, std::uint32_t source,
                                           std::vector<int>& dist,
                                           std::vector<std::uint32_t>& frontier,
                                           std::vector<std::uint32_t>& next) {
    std::fill(dist.begin(), dist.end(), -1);
    frontier.clear();
    frontier.push_back(source);
    dist[source] = 0;
    int d = 0;
    std::uint32_t far = source;
    while (!frontier.empty()) {
        ++d;
        next.clear();
        for (std::uint32_t u : frontier) {
            const std::uint32_t* row = g.neighbors(u);
            for (int k = 0; k < g.degree(); ++k) {
                std::uint32_t v = row[k];
                if (dist[v] < 0) {
                    dist[v] = d;
                    next.push_back(v);
                    far = v;
                }
            }
        }
        frontier.swap(next);
    }
    return {d - 1, far};
}

} // namespace

SearchReport diameter(int n, const DiameterOptions& opts) {
    auto start = Clock::now();
    SearchReport rep;
    if (n == 1) {
        rep.value = 0;
        rep.witness = {tree_unrank(1, 0), tree_unrank(1, 0)};
        rep.millis = elapsed_ms(start);
        return rep;
    }
    DenseGraph g(n, opts.force);
    const std::uint32_t count = g.vertex_count();

    // distances are invariant under the mirror automorphism, so one source
    // per mirror orbit suffices
    std::vector<std::uint32_t> sources;
    sources.reserve(count / 2 + 1);
    for (std::uint32_t v = 0; v < count; ++v)
        if (g.mirror_of(v) >= v) sources.push_back(v);

    int best = -1;
    std::uint32_t best_src = 0, best_far = 0;
    std::uint64_t visited = 0;

#ifdef _OPENMP
    if (opts.parallel) {
        if (opts.threads > 0) omp_set_num_threads(opts.threads);
#pragma omp parallel
        {
            std::vector<int> dist(count);
            std::vector<std::uint32_t> frontier, next;
            int my_best = -1;
            std::uint32_t my_src = 0, my_far = 0;
            std::uint64_t my_visited = 0;
#pragma omp for schedule(dynamic, 16) nowait
            for (long long i = 0; i < static_cast<long long>(sources.size()); ++i) {
                auto [ecc, far] = eccentricity(g, sources[static_cast<size_t>(i)], dist,
                                               frontier, next);
                my_visited += count;
                if (ecc > my_best) {
                    my_best = ecc;
                    my_src = sources[static_cast<size_t>(i)];
                    my_far = far;
                }
            }
#pragma omp critical
            {
                visited += my_visited;
                if (my_best > best) {
                    best = my_best;
                    best_src = my_src;
                    best_far = my_far;
                }
            }
        }
    } else
#endif
    {
        std::vector<int> dist(count);
        std::vector<std::uint32_t> frontier, next;
        for (std::uint32_t s : sources) {
            auto [ecc, far] = eccentricity(g, s, dist, frontier, next);
            visited += count;
            if (ecc > best) {
                best = ecc;
                best_src = s;
                best_far = far;
            }
        }
    }

    rep.value = best;
    rep.visited = visited;
    rep.witness = {tree_unrank(n, best_src), tree_unrank(n, best_far)};
    rep.millis = elapsed_ms(start);
    return rep;
}

SearchReport dist_collapsing(const Tree& t, const Tree& t2, const LabelSet& s, bool force) {
    if (t.size() != t2.size() || t.labels() != t2.labels())
        throw std::invalid_argument("collapsing distance requires equal sizes and labels");
    auto start = Clock::now();
    SearchReport rep;
    if (t.size() == 0 || t.same_shape(t2)) {
        rep.millis = elapsed_ms(start);
        return rep;
    }
    DenseGraph g(t.size(), force);
    auto masks = g.collapsing_masks(s, t.labels());

    const std::uint32_t source = static_cast<std::uint32_t>(tree_rank(t));
    const std::uint32_t target = static_cast<std::uint32_t>(tree_rank(t2));
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<std::uint32_t> queue{source};
    dist[source] = 0;
    std::uint64_t visited = 0;
    while (!queue.empty()) {
        std::uint32_t u = queue.front();
        queue.pop_front();
        ++visited;
        const std::uint32_t* row = g.neighbors(u);
        for (int k = 0; k < g.degree(); ++k) {
            std::uint32_t v = row[k];
            int w = (masks[u] >> k) & 1u;
            if (dist[v] < 0 || dist[u] + w < dist[v]) {
                dist[v] = dist[u] + w;
                if (w)
                    queue.push_back(v);
                else
                    queue.push_front(v);
            }
        }
    }
    rep.value = dist[target];
    rep.visited = visited;
    rep.millis = elapsed_ms(start);
    return rep;
}

std::vector<std::vector<Tree>> enumerate_geodesics(const Tree& t, const Tree& t2,
                                                   std::size_t limit, bool force) {
    if (t.size() != t2.size() || t.labels() != t2.labels())
        throw std::invalid_argument("geodesics require equal sizes and labels");
    if (t.same_shape(t2)) return {{t}};
    DenseGraph g(t.size(), force);
    auto to_target = bfs_all(g, static_cast<std::uint32_t>(tree_rank(t2)));

    std::vector<std::vector<Tree>> out;
    struct Dfs {
        const DenseGraph& g;
        const std::vector<int>& to_target;
        const Tree& labels_from;
        std::size_t limit;
        std::vector<std::vector<Tree>>& out;
        std::vector<std::uint32_t> path;
        void run(std::uint32_t u) {
            if (out.size() >= limit) return;
            path.push_back(u);
            if (to_target[u] == 0) {
                std::vector<Tree> trees;
                trees.reserve(path.size());
                for (std::uint32_t v : path)
                    trees.push_back(labels_from.with_same_labels(
                        tree_unrank(g.size(), v).shape()));
                out.push_back(std::move(trees));
            } else {
                const std::uint32_t* row = g.neighbors(u);
                for (int k = 0; k < g.degree(); ++k)
                    if (to_target[row[k]] == to_target[u] - 1) run(row[k]);
            }
            path.pop_back();
        }
    } dfs{g, to_target, t, limit, out, {}};
    dfs.run(static_cast<std::uint32_t>(tree_rank(t)));
    return out;
}

GraphStats graph_stats(int n, bool force) {
    GraphStats st;
    if (n == 0) {
        st.vertices = 1;
        return st;
    }
    DenseGraph g(n, force);
    st.vertices = g.vertex_count();
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        int deg = 0;
        for (int k = 0; k < g.degree(); ++k) deg += g.neighbors(v)[k] != v;
        ++st.degree_histogram[deg];
    }
    return st;
}

} // namespace rotdist
