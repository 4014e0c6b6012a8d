#pragma once

#include <array>
#include <string>
#include <vector>

#include "rotdist/rotation.hpp"
#include "rotdist/tree.hpp"

namespace rotdist {

// Triangulation of a convex m-gon with vertices 0..m-1 and the marked edge
// fixed as the side (0, m-1). Diagonals are stored as sorted vertex pairs.
class Triangulation {
public:
    Triangulation(int polygon_size, std::vector<std::pair<int, int>> diagonals);

    int polygon_size() const { return m_; }
    const std::vector<std::pair<int, int>>& diagonals() const { return diags_; }
    bool has_diagonal(int u, int v) const;

    // the m-2 triangles of the decomposition, each as sorted vertex triples
    std::vector<std::array<int, 3>> triangles() const;

    friend bool operator==(const Triangulation&, const Triangulation&) = default;

private:
    int m_ = 3;
    std::vector<std::pair<int, int>> diags_;
};

// Dual-graph bijection: the tree hangs under the marked edge; the k-th
// polygon side (k-1, k) carries the k-th leaf.
Triangulation to_triangulation(const Tree& t);
Tree from_triangulation(const Triangulation& tri);

// Replaces the diagonal by the opposite one in the quadrilateral formed by
// its two adjacent triangles. Throws when the diagonal is not present.
Triangulation flip(const Triangulation& tri, std::pair<int, int> diagonal);

// The diagonal whose flip realizes the rotation at this edge of t.
std::pair<int, int> diagonal_of_rotation(const Tree& t, const RotationEdge& e);

std::string to_string(const Triangulation& tri); // "m=6; diag=(0,2),(0,4),(2,4)"
Triangulation parse_triangulation(std::string_view text);

} // namespace rotdist
