#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rotdist/rotation.hpp"
#include "rotdist/tree.hpp"

namespace rotdist {

// i is covered by j in t: some subtree has i as a non-final and j as its
// final label. Equivalent address test: for some γ, γ0 ⊑ ad(i) and
// ad(j) = γ1^p with p >= 1. Requires i < j, both labels of t.
bool covers(const Tree& t, Label i, Label j);

// Mirror notion: some subtree has i as its initial and j as a non-initial
// label; equivalently ad(i) = γ0^p (p >= 1) and γ1 ⊑ ad(j).
bool cocovers(const Tree& t, Label i, Label j);

inline bool covers_or_equal(const Tree& t, Label i, Label j) { return i == j || covers(t, i, j); }
inline bool cocovers_or_equal(const Tree& t, Label i, Label j) { return i == j || cocovers(t, i, j); }

// Literal readings that enumerate subtrees as witnesses; slower than the
// address tests above but direct from the definitions.
bool covers_by_definition(const Tree& t, Label i, Label j);
bool cocovers_by_definition(const Tree& t, Label i, Label j);

// The full relation as a sorted set of ordered pairs (i, j), i < j.
struct CoveringRelation {
    std::vector<std::pair<Label, Label>> pairs;
    bool contains(Label i, Label j) const;
    friend bool operator==(const CoveringRelation&, const CoveringRelation&) = default;
};

CoveringRelation covering_of(const Tree& t);
CoveringRelation cocovering_of(const Tree& t);

// Rebuilds the unique tree on the given labels whose covering relation is
// rel; the split point is recovered as the largest non-final label covering
// the initial one. Throws when rel is not realizable on these labels.
Tree reconstruct(const CoveringRelation& rel, const std::vector<Label>& labels);

// Exact effect of a positive base pair with name (a,b,c,d)+ on the two
// relations: coverings (i,c) appear for labels a <= i < b, and co-coverings
// (b,j) disappear for labels c < j <= d; nothing else moves.
struct CoveringChange {
    std::vector<std::pair<Label, Label>> added_coverings;
    std::vector<std::pair<Label, Label>> removed_cocoverings;
};
CoveringChange covering_change(const Tree& t, const Tree& t2); // pre: positive base pair

// ----------------------------------------------------------- name patterns

// One coordinate of a name pattern: a conjunction of simple comparisons.
struct CoordConstraint {
    enum class Op { eq, le, lt, ge, gt, ne, between };
    struct Atom {
        Op op;
        Label k1 = 0, k2 = 0;
    };
    std::vector<Atom> atoms; // empty = unconstrained
    bool matches(Label v) const;

    static CoordConstraint any() { return {}; }
    static CoordConstraint eq(Label k) { return {{{Op::eq, k, 0}}}; }
    static CoordConstraint le(Label k) { return {{{Op::le, k, 0}}}; }
    static CoordConstraint lt(Label k) { return {{{Op::lt, k, 0}}}; }
    static CoordConstraint ge(Label k) { return {{{Op::ge, k, 0}}}; }
    static CoordConstraint gt(Label k) { return {{{Op::gt, k, 0}}}; }
    static CoordConstraint ne(Label k) { return {{{Op::ne, k, 0}}}; }
    static CoordConstraint between(Label k1, Label k2) { return {{{Op::between, k1, k2}}}; }
    CoordConstraint also(const CoordConstraint& other) const;
};

// Sign plus four coordinate constraints; matches base-pair names.
struct NamePattern {
    Sign sign = Sign::plus;
    std::array<CoordConstraint, 4> coord;
    bool matches(const PairName& n) const;
};

NamePattern parse_pattern(std::string_view text); // e.g. "+(<=3,>3,=5,_)"
std::string to_string(const NamePattern& p);

// A disjunction of patterns: satisfied by an edge matching any of them.
using Obligation = std::vector<NamePattern>;

bool obligation_matches(const Obligation& ob, const PairName& n);

// Checks a concrete path of trees against a list of obligations: for each
// obligation, whether some edge of the path matches, and the first edge
// index that does. Throws when consecutive entries are not base pairs.
struct WitnessReport {
    struct Entry {
        bool satisfied = false;
        int first_index = -1; // edge index (t[i], t[i+1])
    };
    std::vector<Entry> entries;
    bool all_satisfied = true;
};
WitnessReport lemma_witnesses(const std::vector<Tree>& path,
                              const std::vector<Obligation>& obligations);

// ------------------------------------------------------- pattern catalogues

// A named family of base-pair patterns used in the path-counting arguments.
struct SpecialType {
    std::string label;   // e.g. "I_3", "II+_6"
    Obligation patterns; // a pair of this type matches one of these
};

// Per-path obligations for the two-comb pair Sp(1^p 0^q) -> Sp(0^q 1^p):
// one obligation per guaranteed colour crossing.
std::vector<Obligation> bicomb_obligations(int p, int q);

// The special types counted in the same argument (types I, II, III, IV).
std::vector<SpecialType> bicomb_special_types(int p, int q);

// Special types for the collapsed three-comb pair Sp(1^p 0 1^p) ->
// Sp((01)^p 0); every such pair is [p+2, 2p+1]-collapsing.
std::vector<SpecialType> tricomb_link_types(int p);

// The eleven special types for the pair Sp(1^p 0 1^p 0^p) ->
// Sp(0 (10)^p 1^p); every such pair is [p+2, 3p+1]-collapsing.
std::vector<SpecialType> multicomb_link_types(int p);

} // namespace rotdist
