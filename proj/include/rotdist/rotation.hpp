#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rotdist/tree.hpp"

namespace rotdist {

enum class Sign : int { plus = +1, minus = -1 };

inline Sign flipped(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

// A rotation site: address of the rotated subtree plus the direction.
// Sign + turns the pattern T1∨(T2∨T3) at the address into (T1∨T2)∨T3;
// sign - is the inverse.
struct RotationEdge {
    Address at;
    Sign sign = Sign::plus;
    friend bool operator==(const RotationEdge&, const RotationEdge&) = default;
};

// The four leaf labels identifying a base pair: a and d are the extremal
// leaves of the rotated subtree, b and c the extremal leaves of the moved
// middle subtree. Always a < b <= c < d; b == c exactly when the middle
// subtree is a single leaf.
struct PairName {
    Label a = 0, b = 0, c = 0, d = 0;
    Sign sign = Sign::plus;
    friend bool operator==(const PairName&, const PairName&) = default;
    PairName with_sign(Sign s) const { return {a, b, c, d, s}; }
};

std::string to_string(const RotationEdge& e); // e.g. "10+", "ε-"
std::string to_string(const PairName& n);     // e.g. "(2,3,5,6)+"

// Applies the rotation; absent when the pattern does not match at the
// address. Labels ride along unchanged.
std::optional<Tree> rotate(const Tree& t, const RotationEdge& e);

// Shape-level rotation kernel; null when undefined.
detail::NodePtr rotate_shape(const detail::NodePtr& n, const Address& at, Sign sign);

// All trees one rotation away, each with its witnessing edge, ordered
// lexicographically by address with + before -.
std::vector<std::pair<RotationEdge, Tree>> neighbors(const Tree& t);

// Name of the base pair reached by applying `e` to `t` (must be defined).
PairName name_of_edge(const Tree& t, const RotationEdge& e);

// Address / name of the base pair (t, t2); absent when the trees are not
// one rotation apart or carry different labels.
std::optional<RotationEdge> pair_address(const Tree& t, const Tree& t2);
std::optional<PairName> pair_name(const Tree& t, const Tree& t2);

} // namespace rotdist
