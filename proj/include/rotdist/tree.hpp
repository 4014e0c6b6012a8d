#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rotdist {

using Label = int;

// Path from the root of a tree: '0' forks left, '1' forks right.
// The empty address is the root.
class Address {
public:
    Address() = default;
    explicit Address(std::string bits);
    static Address parse(std::string_view text); // accepts "", "e", "ε", or 0/1 digits

    bool empty() const { return bits_.empty(); }
    int length() const { return static_cast<int>(bits_.size()); }
    char bit(int i) const { return bits_[static_cast<size_t>(i)]; }
    const std::string& bits() const { return bits_; }

    Address then(char bit) const;           // this followed by one step
    Address then(const Address& tail) const;
    bool is_prefix_of(const Address& other) const;
    Address common_prefix(const Address& other) const;

    int count_zeros() const;
    int count_ones() const;
    int count_10() const; // occurrences of the factor "10"

    // true when the address is 1^k for some k >= 0 (no left fork)
    bool all_ones() const;

    std::string str() const; // "ε" for the empty address

    friend bool operator==(const Address&, const Address&) = default;
    auto operator<=>(const Address&) const = default;

private:
    std::string bits_;
};

namespace detail {
struct Node {
    std::shared_ptr<const Node> left, right; // both null for a leaf
    int size = 0;                            // number of internal nodes
};
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_leaf();
NodePtr make_node(NodePtr l, NodePtr r);
bool shape_equal(const NodePtr& a, const NodePtr& b);
} // namespace detail

// Immutable rooted ordered binary tree with strictly increasing leaf labels.
// The shape is shared structurally; labels are stored separately and are
// 1..size+1 unless explicit labels were supplied.
class Tree {
public:
    Tree(); // single leaf, label 1
    static Tree leaf(Label l);
    static Tree leaf();
    // Caret T0 ∨ T1. Two default-labeled operands yield a default-labeled
    // tree; otherwise the literal label sequences are concatenated and must
    // be strictly increasing.
    static Tree node(const Tree& l, const Tree& r);

    int size() const { return shape_->size; }
    int leaf_count() const { return shape_->size + 1; }
    bool is_leaf() const { return !shape_->left; }
    Tree left() const;
    Tree right() const;

    bool has_default_labels() const { return labels_ == nullptr; }
    Label label_at(int k) const; // k-th leaf, 1-based
    std::vector<Label> labels() const;
    Label first_label() const { return label_at(1); }
    Label last_label() const { return label_at(leaf_count()); }
    // position of a label among the leaves (1-based), if present
    std::optional<int> label_index(Label l) const;

    // same shape and same labels
    friend bool operator==(const Tree& a, const Tree& b);
    bool same_shape(const Tree& other) const;

    // internal shape access (used by the search kernels)
    const detail::NodePtr& shape() const { return shape_; }
    static Tree from_shape(detail::NodePtr shape); // default labels
    static Tree from_shape(detail::NodePtr shape, std::vector<Label> labels);
    Tree with_same_labels(detail::NodePtr shape) const;
    Tree relabeled_default() const;

private:
    detail::NodePtr shape_;
    std::shared_ptr<const std::vector<Label>> labels_; // null = default
};

// Thin tree with the given spine, default labels.
Tree spine_tree(std::string_view spine);

// The subtree rooted at the vertex addressed by `at`, with inherited labels;
// absent when the address leaves the tree.
std::optional<Tree> subtree_at(const Tree& t, const Address& at);

// Address of the leaf carrying label l. Throws if l does not occur.
Address leaf_address(const Tree& t, Label l);

// Canonical shape encoding: one bit per node in preorder ('1' internal,
// '0' leaf) with the forced final leaf bit dropped; length is 2*size.
std::string encode(const Tree& t);
Tree decode(std::string_view bits); // throws on malformed input

// encode() packed into an integer; requires size <= 31.
std::uint64_t shape_code(const Tree& t);
std::uint64_t shape_code(const detail::NodePtr& shape);
detail::NodePtr shape_from_code(std::uint64_t code);

// Number of edges on the rightmost branch.
int right_height(const Tree& t);

// Left-right reflection of the shape; the label sequence is unchanged.
Tree mirror(const Tree& t);
detail::NodePtr mirror_shape(const detail::NodePtr& n);

// Bracket text: '*' for a default-labeled leaf, "(L R)" for a caret,
// labeled leaves print their label.
std::string format(const Tree& t);
Tree parse_bracket(std::string_view text); // throws with position on error

// Accepts bracket text or a spine string (digits 0/1 only).
Tree parse_tree(std::string_view text);

// The spine of a thin tree (the variant ending in 0); absent otherwise.
std::optional<std::string> spine_of(const Tree& t);

// All tree shapes of the given size, default labels, in ranking order.
std::vector<Tree> all_trees(int n);

} // namespace rotdist
