#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rotdist/rotation.hpp"
#include "rotdist/tree.hpp"

namespace rotdist {

// Finite set of positive labels, kept as sorted disjoint intervals.
class LabelSet {
public:
    LabelSet() = default;
    static LabelSet of(std::initializer_list<Label> labels);
    static LabelSet interval(Label lo, Label hi); // empty when lo > hi
    static LabelSet parse(std::string_view text); // "2,3" and "4..7" syntax

    void add(Label l);
    void add_interval(Label lo, Label hi);

    bool empty() const { return runs_.empty(); }
    bool contains(Label l) const;
    bool contains_interval(Label lo, Label hi) const; // [lo,hi] ⊆ set; true when lo > hi
    long long count() const;
    LabelSet unioned(const LabelSet& other) const;
    std::vector<Label> elements() const;

    std::string str() const;
    friend bool operator==(const LabelSet&, const LabelSet&) = default;

private:
    std::vector<std::pair<Label, Label>> runs_; // closed intervals, sorted, disjoint
    void normalize();
};

// A tree or the distinguished empty tree (size -1).
using ExtendedTree = std::optional<Tree>;

// Removes the leaves whose labels lie in the set, contracting the freed
// edges; remaining labels are unchanged. Collapsing every leaf yields the
// empty tree.
ExtendedTree collapse(const Tree& t, const LabelSet& s);
ExtendedTree collapse(const ExtendedTree& t, const LabelSet& s);

// A base pair collapses to a single tree exactly when all leaves of one of
// its three constituent subtrees vanish: the labels of the pair's trees
// inside [a,b-1], [b,c], or [c+1,d] all lie in the set.
bool is_collapsing_pair(const PairName& name, const std::vector<Label>& labels,
                        const LabelSet& s);
bool is_collapsing_pair(const Tree& t, const Tree& t2, const LabelSet& s);

// Name of the collapsed base pair, with min/max taken over labels actually
// present; absent when the pair collapses to equality.
std::optional<PairName> collapsed_name(const PairName& name, const LabelSet& s,
                                       const std::vector<Label>& labels);

// No interval spanned by one element of each set lies inside their union;
// under this condition the two collapsings count independently.
bool strongly_disjoint(const LabelSet& a, const LabelSet& b);

} // namespace rotdist
