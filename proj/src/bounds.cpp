#include "rotdist/bounds.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace rotdist {

int address_delta(const Address& g, const Address& g2) {
    return std::abs(g2.count_zeros() - g.count_zeros()) +
           std::abs(g2.count_ones() - g.count_ones()) + std::abs(g2.count_10() - g.count_10());
}

int delta_bound(const Tree& t, const Tree& t2) {
    if (t.size() != t2.size() || t.labels() != t2.labels())
        throw std::invalid_argument("delta_bound requires equal labels");
    int best = 0;
    for (Label l : t.labels())
        best = std::max(best, address_delta(leaf_address(t, l), leaf_address(t2, l)));
    return best;
}

LatticePath::LatticePath(const Address& g) {
    ones_ = static_cast<size_t>(g.count_ones());
    zeros_ = static_cast<size_t>(g.count_zeros());
    row_height_.reserve(zeros_);
    int y = static_cast<int>(ones_);
    for (int i = 0; i < g.length(); ++i) {
        if (g.bit(i) == '1')
            --y;
        else
            row_height_.push_back(y);
    }
}

int LatticePath::axis_squares() const {
    if (row_height_.empty()) return 0;
    int left_column = row_height_.front();
    int bottom_row = static_cast<int>(std::count_if(row_height_.begin(), row_height_.end(),
                                                    [](int h) { return h >= 1; }));
    int overlap = row_height_.front() >= 1 ? 1 : 0;
    return left_column + bottom_row - overlap;
}

int LatticePath::corner_distance() const {
    // lowest y the path reaches over x, then 0 to the right of the path
    int best = INT32_MAX;
    auto visit = [&](int x, int y_lo) {
        int dy = 1 >= y_lo ? 0 : y_lo - 1; // climb to the region if below it
        best = std::min(best, std::abs(x - 1) + dy);
    };
    for (size_t x = 0; x < row_height_.size(); ++x) visit(static_cast<int>(x), row_height_[x]);
    visit(std::max(static_cast<int>(row_height_.size()), 1), 0); // at and past the path's end
    return best;
}

int lattice_f(int p, int q, const Address& g) {
    if (g.count_ones() > p || g.count_zeros() > q)
        throw std::invalid_argument("lattice_f requires #1 <= p and #0 <= q");
    LatticePath path(g);
    return (p - path.ones()) + (q - path.zeros()) + path.axis_squares() + path.corner_distance();
}

namespace {

// splits bits of the form 1^p 0^q into (p, q)
std::optional<std::pair<int, int>> comb_shape(const Address& a) {
    int p = 0;
    int i = 0;
    while (i < a.length() && a.bit(i) == '1') ++p, ++i;
    int q = 0;
    while (i < a.length() && a.bit(i) == '0') ++q, ++i;
    if (i != a.length()) return std::nullopt;
    return std::make_pair(p, q);
}

} // namespace

int f_bound(const Tree& t, const Tree& t2) {
    if (t.size() != t2.size() || t.labels() != t2.labels())
        throw std::invalid_argument("f_bound requires equal labels");
    int best = 0;
    for (Label l : t.labels()) {
        auto pq = comb_shape(leaf_address(t, l));
        if (!pq) continue;
        Address g = leaf_address(t2, l);
        if (g.count_ones() > pq->first || g.count_zeros() > pq->second) continue;
        best = std::max(best, lattice_f(pq->first, pq->second, g));
    }
    return best;
}

int comb_distance(const Tree& t) { return t.size() - right_height(t); }

} // namespace rotdist
