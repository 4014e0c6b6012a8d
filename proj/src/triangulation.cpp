#include "rotdist/triangulation.hpp"

#include <algorithm>
#include <stdexcept>

namespace rotdist {

namespace {

bool diagonals_cross(std::pair<int, int> a, std::pair<int, int> b) {
    return (a.first < b.first && b.first < a.second && a.second < b.second) ||
           (b.first < a.first && a.first < b.second && b.second < a.second);
}

} // namespace

Triangulation::Triangulation(int polygon_size, std::vector<std::pair<int, int>> diagonals)
    : m_(polygon_size), diags_(std::move(diagonals)) {
    if (m_ < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    for (auto& [u, v] : diags_) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= m_) throw std::invalid_argument("diagonal endpoint out of range");
        if (v - u < 2 || (u == 0 && v == m_ - 1))
            throw std::invalid_argument("diagonal must connect non-adjacent vertices");
    }
    std::sort(diags_.begin(), diags_.end());
    if (std::adjacent_find(diags_.begin(), diags_.end()) != diags_.end())
        throw std::invalid_argument("duplicate diagonal");
    if (static_cast<int>(diags_.size()) != m_ - 3)
        throw std::invalid_argument("a triangulation of an m-gon has m-3 diagonals");
    for (size_t i = 0; i < diags_.size(); ++i)
        for (size_t j = i + 1; j < diags_.size(); ++j)
            if (diagonals_cross(diags_[i], diags_[j]))
                throw std::invalid_argument("diagonals cross");
}

bool Triangulation::has_diagonal(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(diags_.begin(), diags_.end(), std::make_pair(u, v));
}

namespace {

// apex of the triangle sitting on the edge (lo, hi) inside that region
int find_apex(const Triangulation& tri, int lo, int hi) {
    for (int k = lo + 1; k < hi; ++k) {
        bool left_edge = (k - lo == 1) || tri.has_diagonal(lo, k);
        bool right_edge = (hi - k == 1) || tri.has_diagonal(k, hi);
        if (left_edge && right_edge) return k;
    }
    throw std::invalid_argument("diagonal set does not triangulate the polygon");
}

void triangles_rec(const Triangulation& tri, int lo, int hi,
                   std::vector<std::array<int, 3>>& out) {
    if (hi - lo < 2) return;
    int k = find_apex(tri, lo, hi);
    out.push_back({lo, k, hi});
    triangles_rec(tri, lo, k, out);
    triangles_rec(tri, k, hi, out);
}

} // namespace

std::vector<std::array<int, 3>> Triangulation::triangles() const {
    std::vector<std::array<int, 3>> out;
    triangles_rec(*this, 0, m_ - 1, out);
    return out;
}

namespace {

void collect_diagonals(const detail::NodePtr& n, int lo, int hi,
                       std::vector<std::pair<int, int>>& out) {
    if (!n->left) return;
    int k = lo + n->left->size + 1; // sides in the left region = leaves there
    if (k - lo >= 2) out.emplace_back(lo, k);
    if (hi - k >= 2) out.emplace_back(k, hi);
    collect_diagonals(n->left, lo, k, out);
    collect_diagonals(n->right, k, hi, out);
}

detail::NodePtr tree_rec(const Triangulation& tri, int lo, int hi) {
    if (hi - lo == 1) return detail::make_leaf();
    int k = find_apex(tri, lo, hi);
    return detail::make_node(tree_rec(tri, lo, k), tree_rec(tri, k, hi));
}

} // namespace

Triangulation to_triangulation(const Tree& t) {
    std::vector<std::pair<int, int>> diags;
    int m = t.leaf_count() + 1;
    collect_diagonals(t.shape(), 0, m - 1, diags);
    return Triangulation(m, std::move(diags));
}

Tree from_triangulation(const Triangulation& tri) {
    return Tree::from_shape(tree_rec(tri, 0, tri.polygon_size() - 1));
}

Triangulation flip(const Triangulation& tri, std::pair<int, int> diagonal) {
    if (diagonal.first > diagonal.second) std::swap(diagonal.first, diagonal.second);
    if (!tri.has_diagonal(diagonal.first, diagonal.second))
        throw std::invalid_argument("no such diagonal");
    std::vector<int> opposite;
    for (const auto& t : tri.triangles()) {
        int hits = 0;
        int other = -1;
        for (int v : t) {
            if (v == diagonal.first || v == diagonal.second)
                ++hits;
            else
                other = v;
        }
        if (hits == 2) opposite.push_back(other);
    }
    if (opposite.size() != 2) throw std::logic_error("diagonal is not shared by two triangles");
    std::vector<std::pair<int, int>> diags = tri.diagonals();
    diags.erase(std::find(diags.begin(), diags.end(), diagonal));
    diags.emplace_back(std::min(opposite[0], opposite[1]), std::max(opposite[0], opposite[1]));
    return Triangulation(tri.polygon_size(), std::move(diags));
}

std::pair<int, int> diagonal_of_rotation(const Tree& t, const RotationEdge& e) {
    // the destroyed inner edge is the child caret absorbed by the rotation
    Address inner = e.at.then(e.sign == Sign::plus ? '1' : '0');
    detail::NodePtr cur = t.shape();
    int lo = 0;
    for (int i = 0; i < inner.length(); ++i) {
        if (!cur->left) throw std::invalid_argument("no rotation at this address");
        if (inner.bit(i) == '0') {
            cur = cur->left;
        } else {
            lo += cur->left->size + 1;
            cur = cur->right;
        }
    }
    if (!cur->left) throw std::invalid_argument("no rotation at this address");
    return {lo, lo + cur->size + 1};
}

std::string to_string(const Triangulation& tri) {
    std::string out = "m=" + std::to_string(tri.polygon_size()) + "; diag=";
    const auto& ds = tri.diagonals();
    for (size_t i = 0; i < ds.size(); ++i) {
        if (i) out += ',';
        out += "(" + std::to_string(ds[i].first) + "," + std::to_string(ds[i].second) + ")";
    }
    return out;
}

Triangulation parse_triangulation(std::string_view text) {
    size_t pos = 0;
    auto fail = [&](const std::string& what) -> void {
        throw std::invalid_argument("triangulation: " + what + " at position " +
                                    std::to_string(pos));
    };
    auto skip_ws = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    auto expect = [&](std::string_view tok) {
        skip_ws();
        if (text.substr(pos, tok.size()) != tok) fail("expected '" + std::string(tok) + "'");
        pos += tok.size();
    };
    auto number = [&]() {
        skip_ws();
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') fail("expected a number");
        int v = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
            v = v * 10 + (text[pos++] - '0');
        return v;
    };
    expect("m");
    expect("=");
    int m = number();
    std::vector<std::pair<int, int>> diags;
    skip_ws();
    if (pos < text.size()) {
        expect(";");
        expect("diag");
        expect("=");
        while (true) {
            expect("(");
            int u = number();
            expect(",");
            int v = number();
            expect(")");
            diags.emplace_back(u, v);
            skip_ws();
            if (pos == text.size()) break;
            expect(",");
        }
    }
    return Triangulation(m, std::move(diags));
}

} // namespace rotdist
