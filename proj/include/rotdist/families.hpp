#pragma once

#include <optional>
#include <string>

#include "rotdist/collapse.hpp"
#include "rotdist/tree.hpp"

namespace rotdist {

enum class BoundKind { exact, lower, conjectured_exact };

// A named pair of thin trees with its distance formula evaluated at the
// parameters, plus the label sets that drive the collapsing argument.
struct FamilyInstance {
    std::string tag; // e.g. "bicomb(4,6)"
    Tree source, target;
    long long bound = 0;
    BoundKind kind = BoundKind::lower;
    std::optional<LabelSet> collapse_i; // projects to the next smaller instance
    std::optional<LabelSet> collapse_j; // projects to the fixed-size link pair
};

// Sp(1^p 0^q) vs Sp(0^q 1^p); distance p + q + min(p,q) - 2.
FamilyInstance bicomb(int p, int q);

// Sp(1^p 0^p 1^p) vs Sp(0^p (10)^p); distance 5p - 4.
FamilyInstance tricomb(int p);

// Sp((1^p 0^p)^m) vs Sp(0^p (10)^{(m-1)p} 1^p); at least 4mp - 3m - p + 1.
FamilyInstance multicomb(int m, int p);

// Sp(1 (10)^m 0) vs Sp(0 (01)^m 1); distance 3m + 1.
FamilyInstance zigzag(int m);

// Symmetric zigzags with short combs at the ends, conjectured extremal:
// distance 2n - 6 for n >= 11.
FamilyInstance conjecture_pair(int n);

// The collapsed auxiliary pairs behind the tricomb and multicomb counts,
// with the set whose collapsing steps are counted.
struct LinkPair {
    Tree source, target;
    LabelSet counted;
    long long bound = 0; // collapsing steps forced between the two trees
};
LinkPair tricomb_link(int p);   // Sp(1^p 0 1^p) vs Sp((01)^p 0), 2p - 2
LinkPair multicomb_link(int p); // Sp(1^p 0 1^p 0^p) vs Sp(0 (10)^p 1^p), 4p - 3

} // namespace rotdist
