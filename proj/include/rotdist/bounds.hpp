#pragma once

#include <vector>

#include "rotdist/tree.hpp"

namespace rotdist {

// Separation of two leaf addresses: one rotation changes it by at most one,
// so the maximum over shared labels lower-bounds the rotation distance.
// Value: |Δ#0| + |Δ#1| + |Δ#"10"|.
int address_delta(const Address& g, const Address& g2);

// max over labels of address_delta between the two trees; requires equal
// label sequences.
int delta_bound(const Tree& t, const Tree& t2);

// Monotone staircase read off an address: each 1 is a downward step, each 0
// a step to the right, starting at (0, #1) and ending at (#0, 0).
class LatticePath {
public:
    explicit LatticePath(const Address& g);
    int steps() const { return static_cast<int>(ones_ + zeros_); }
    int ones() const { return static_cast<int>(ones_); }
    int zeros() const { return static_cast<int>(zeros_); }
    // squares below the path touching a coordinate axis
    int axis_squares() const;
    // grid distance from (1,1) to the closed region on or above the path
    int corner_distance() const;

private:
    size_t ones_ = 0, zeros_ = 0;
    std::vector<int> row_height_; // path height over each unit column
};

// Rotations needed to move a leaf from address 1^p 0^q to address g, at
// least: (p - #1) + (q - #0) + axis squares + corner distance.
// Requires #1(g) <= p and #0(g) <= q.
int lattice_f(int p, int q, const Address& g);

// max applicable lattice_f over labels whose address in t is of the shape
// 1^p 0^q; 0 when no label applies.
int f_bound(const Tree& t, const Tree& t2);

// Exact distance between t and the right comb of the same size.
int comb_distance(const Tree& t);

} // namespace rotdist
