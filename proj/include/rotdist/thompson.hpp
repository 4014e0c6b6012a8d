#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rotdist/tree.hpp"

namespace rotdist {

// One generator letter: a positive letter acts as the positive rotation at
// its address, a negative letter as the inverse.
struct FLetter {
    Address at;
    int exp = +1; // +1 or -1
    friend bool operator==(const FLetter&, const FLetter&) = default;
};

// Word over the letters; the product reads left to right (apply the first
// letter first).
using FWord = std::vector<FLetter>;

FWord inverse(const FWord& w);
FWord parse_word(std::string_view text); // "A[10]+ A[]- A[1]+"
std::string to_string(const FWord& w);

// Group element represented by its unique reduced tree pair (domain,
// target) of equal size. Labels play no role here; shapes only.
class FElement {
public:
    FElement(); // identity: a pair of single leaves
    FElement(Tree dom, Tree tar); // reduces the given pair
    const Tree& dom() const { return dom_; }
    const Tree& tar() const { return tar_; }
    bool is_identity() const { return dom_.size() == 0; }
    friend bool operator==(const FElement& a, const FElement& b);

private:
    Tree dom_, tar_;
};

// The element mapping t to t2 (equal sizes required).
FElement element_of(const Tree& t, const Tree& t2);

// Prunes matched sibling-leaf pairs until none remain.
std::pair<Tree, Tree> reduce_pair(Tree dom, Tree tar);

// Partial action: performs each letter as a rotation at its address; absent
// as soon as one step is undefined.
std::optional<Tree> apply(const Tree& t, const FWord& w);

// Least extension of two shapes (union of their branchings).
Tree join_trees(const Tree& a, const Tree& b);

// Smallest tree on which the whole word acts.
Tree minimal_domain(const FWord& w);

// Extends t minimally so that the word acts, and applies it; returns the
// extended source and the result.
std::pair<Tree, Tree> apply_with_extension(const Tree& t, const FWord& w);

// The element a word represents, via its action on the minimal domain.
FElement element_of_word(const FWord& w);

// Distinguished positive word carrying the right comb of size |t| to t; its
// length is size - right_height, and it is geodesic.
FWord chi(const Tree& t);

// Algebraic sum of the exponents of letters whose address contains no 0;
// invariant under the defining relations, so it lower-bounds word length
// over the whole equivalence class.
int right_arm_exponent_sum(const FWord& w);

// Same element of the group, decided through the action.
bool words_equivalent(const FWord& w1, const FWord& w2);

// Instantiates the defining relations for all addresses up to the given
// length and confirms each through the action, together with invariance of
// the right-arm exponent sum.
struct RelationReport {
    long long instances = 0;
    long long failures = 0;
    std::vector<std::string> failed; // descriptions of failing instances
};
RelationReport relation_suite(int max_addr_len);

} // namespace rotdist
