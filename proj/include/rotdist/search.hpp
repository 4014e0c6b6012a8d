#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rotdist/collapse.hpp"
#include "rotdist/rotation.hpp"
#include "rotdist/tree.hpp"

namespace rotdist {

// Raised when a query would exceed the configured memory budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t catalan(int n); // n <= 33

// Contiguous index of a shape among all shapes of its size, by
// left-subtree-size blocks; inverse of tree_unrank.
std::uint64_t tree_rank(const Tree& t);
Tree tree_unrank(int n, std::uint64_t rank);

// Default guard for the engines that materialize all shapes of one size.
inline constexpr int kDenseSizeGuard = 12;

// All shapes of one size with precomputed adjacency. Vertices are ranks.
// Immutable after construction; shared freely between threads.
class DenseGraph {
public:
    // force lifts the size guard; the builder parallelizes when OpenMP is on
    explicit DenseGraph(int n, bool force = false);

    int size() const { return n_; }
    std::uint32_t vertex_count() const { return count_; }
    int degree() const { return n_ - 1; }
    const std::uint32_t* neighbors(std::uint32_t v) const {
        return adjacency_.data() + static_cast<size_t>(v) * static_cast<size_t>(degree());
    }
    std::uint32_t mirror_of(std::uint32_t v) const { return mirror_[v]; }

    // bit k set = the k-th outgoing edge of v is a collapsing step for the
    // given label set (labels read positionally through `labels`)
    std::vector<std::uint32_t> collapsing_masks(const LabelSet& s,
                                                const std::vector<Label>& labels) const;

private:
    int n_;
    std::uint32_t count_;
    std::vector<std::uint32_t> adjacency_;
    std::vector<std::uint32_t> mirror_;
};

struct SearchReport {
    long long value = 0;        // distance or diameter
    std::vector<Tree> witness;  // geodesic path, or an extremal pair
    std::uint64_t visited = 0;  // nodes expanded
    double millis = 0.0;
};

// Exact rotation distance by bidirectional breadth-first search over the
// implicit graph; sizes and label multisets must agree.
SearchReport distance(const Tree& t, const Tree& t2, bool want_witness = false);

struct DiameterOptions {
    bool force = false;    // lift the size guard
    bool parallel = true;  // OpenMP sweep over sources; serial otherwise
    int threads = 0;       // 0 = library default
};

// Largest pairwise distance at one size: one BFS per mirror-orbit
// representative over the shared adjacency, reduced by max. The witness
// holds one extremal pair.
SearchReport diameter(int n, const DiameterOptions& opts = {});

// Minimal number of collapsing steps among all rotation sequences between
// the trees (0/1 weights over the full graph of that size; minimizers need
// not be geodesics).
SearchReport dist_collapsing(const Tree& t, const Tree& t2, const LabelSet& s,
                             bool force = false);

// All (or the first `limit`) geodesics, by layered BFS from the target.
std::vector<std::vector<Tree>> enumerate_geodesics(const Tree& t, const Tree& t2,
                                                   std::size_t limit, bool force = false);

struct GraphStats {
    std::uint64_t vertices = 0;
    std::map<int, std::uint64_t> degree_histogram;
};
GraphStats graph_stats(int n, bool force = false);

// Single-source distances over a dense graph; -1 marks unreachable. The
// skip mask drops edges (used for unavoidable-crossing checks).
std::vector<int> bfs_all(const DenseGraph& g, std::uint32_t source,
                         const std::vector<std::uint32_t>* skip_masks = nullptr);

// Single-source 0/1-weighted distances; bit k of weight_masks[v] is the
// weight of the k-th outgoing edge of v.
std::vector<int> zero_one_bfs(const DenseGraph& g,
                              const std::vector<std::uint32_t>& weight_masks,
                              std::uint32_t source);

} // namespace rotdist
