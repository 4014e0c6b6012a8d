#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "rotdist/search.hpp"
#include "rotdist/tree.hpp"

using namespace rotdist;

namespace {

// independent oracle: walk the address through explicit recursion
std::optional<Tree> subtree_oracle(const Tree& t, const std::string& bits) {
    if (bits.empty()) return t;
    if (t.is_leaf()) return std::nullopt;
    if (bits[0] == '0') return subtree_oracle(t.left(), bits.substr(1));
    return subtree_oracle(t.right(), bits.substr(1));
}

} // namespace

TEST_CASE("spine trees") {
    // the thin tree with spine 100 is leaf ∨ ((leaf ∨ leaf) ∨ leaf)
    Tree expected = Tree::node(Tree::leaf(), Tree::node(Tree::node(Tree::leaf(), Tree::leaf()),
                                                        Tree::leaf()));
    CHECK(spine_tree("100").same_shape(expected));
    CHECK(spine_tree("").size() == 0);
    // the two spine variants of a thin tree coincide
    CHECK(spine_tree("101").same_shape(spine_tree("100")));
    CHECK(spine_tree("1101").same_shape(spine_tree("1100")));

    for (const std::string a : {"0", "1", "01", "10", "0110", "11100", "010101"})
        CHECK(spine_tree(a).size() == static_cast<int>(a.size()));
}

TEST_CASE("subtree addressing") {
    Tree t = spine_tree("100");
    auto sub = subtree_at(t, Address{"10"});
    REQUIRE(sub.has_value());
    CHECK(sub->same_shape(spine_tree("0")));
    CHECK(sub->labels() == std::vector<Label>{2, 3});

    CHECK(*subtree_at(t, Address{}) == t);
    CHECK(!subtree_at(t, Address{"000"}).has_value());

    for (const auto& tree : all_trees(5))
        for (const std::string bits : {"", "0", "1", "00", "01", "10", "11", "010", "101"}) {
            auto got = subtree_at(tree, Address{bits});
            auto want = subtree_oracle(tree, bits);
            CHECK(got.has_value() == want.has_value());
            if (got) CHECK(*got == *want);
        }
}

TEST_CASE("leaf addresses") {
    Tree t = spine_tree("100");
    CHECK(leaf_address(t, 1) == Address{"0"});
    CHECK(leaf_address(t, 2) == Address{"100"});
    CHECK(leaf_address(t, 3) == Address{"101"});
    CHECK(leaf_address(t, 4) == Address{"11"});
    CHECK(leaf_address(Tree::leaf(), 1) == Address{});
    CHECK_THROWS_AS(leaf_address(t, 9), std::invalid_argument);

    // pairwise incomparable under the prefix order, in label order
    for (const auto& tree : all_trees(6)) {
        std::vector<Address> addrs;
        for (Label l = 1; l <= tree.leaf_count(); ++l) addrs.push_back(leaf_address(tree, l));
        for (size_t i = 0; i + 1 < addrs.size(); ++i) {
            CHECK(addrs[i].bits() < addrs[i + 1].bits());
            for (size_t j = i + 1; j < addrs.size(); ++j) {
                CHECK(!addrs[i].is_prefix_of(addrs[j]));
                CHECK(!addrs[j].is_prefix_of(addrs[i]));
            }
        }
    }
}

TEST_CASE("codec round trips") {
    CHECK(encode(spine_tree("0")) == "10");
    CHECK(decode("10").same_shape(spine_tree("0")));
    for (int n = 0; n <= 8; ++n)
        for (const auto& t : all_trees(n)) {
            CHECK(decode(encode(t)).same_shape(t));
            CHECK(static_cast<int>(encode(t).size()) == 2 * n);
            CHECK(Tree::from_shape(shape_from_code(shape_code(t))).same_shape(t));
        }
    CHECK_THROWS_AS(decode("11"), std::invalid_argument);
    CHECK_THROWS_AS(decode("001"), std::invalid_argument);
}

TEST_CASE("encoding is injective at size 10") {
    auto trees = all_trees(10);
    CHECK(trees.size() == 16796); // tenth Catalan number
    std::set<std::string> codes;
    for (const auto& t : trees) codes.insert(encode(t));
    CHECK(codes.size() == trees.size());
}

TEST_CASE("right height and mirror") {
    CHECK(right_height(spine_tree("1111")) == 4);
    CHECK(right_height(spine_tree("0000")) == 1);
    CHECK(right_height(Tree::leaf()) == 0);

    for (int n = 0; n <= 8; ++n)
        for (const auto& t : all_trees(n)) CHECK(mirror(mirror(t)) == t);

    // mirror of a thin tree flips its spine
    for (const std::string a : {"0", "10", "110", "0101", "11100", "01100110"}) {
        std::string flipped;
        for (char c : a) flipped.push_back(c == '0' ? '1' : '0');
        CHECK(mirror(spine_tree(a)).same_shape(spine_tree(flipped)));
    }
}

TEST_CASE("bracket format") {
    CHECK(format(spine_tree("0")) == "(* *)");
    CHECK(format(spine_tree("100")) == "(* ((* *) *))");
    Tree labeled = Tree::node(Tree::leaf(2), Tree::node(Tree::leaf(5), Tree::leaf(9)));
    CHECK(format(labeled) == "(2 (5 9))");
    CHECK(parse_bracket("(2 (5 9))") == labeled);
    CHECK(parse_bracket("(* (* *))").same_shape(spine_tree("11")));
    CHECK(parse_bracket("7") == Tree::leaf(7));

    for (int n = 0; n <= 8; ++n)
        for (const auto& t : all_trees(n)) CHECK(parse_bracket(format(t)) == t);

    CHECK_THROWS_AS(parse_bracket("(* 3)"), std::invalid_argument);   // mixed leaves
    CHECK_THROWS_AS(parse_bracket("(5 2)"), std::invalid_argument);   // out of order
    CHECK_THROWS_AS(parse_bracket("(* *"), std::invalid_argument);    // unbalanced
    CHECK_THROWS_AS(parse_bracket("(* *))"), std::invalid_argument);  // trailing text
}

TEST_CASE("tree input auto-detection") {
    CHECK(parse_tree("1100").same_shape(spine_tree("1100")));
    CHECK(parse_tree("(* (* *))").same_shape(spine_tree("11")));
    CHECK(parse_tree("*").size() == 0);
}

TEST_CASE("spine printing emits the 0-variant") {
    CHECK(*spine_of(spine_tree("100")) == "100");
    CHECK(*spine_of(spine_tree("101")) == "100");
    CHECK(*spine_of(spine_tree("1111")) == "1110");
    CHECK(*spine_of(Tree::leaf()) == "");
    CHECK(!spine_of(parse_bracket("((* *) (* *))")).has_value());
}

TEST_CASE("label bookkeeping") {
    Tree t = Tree::node(Tree::leaf(2), Tree::node(Tree::leaf(5), Tree::leaf(9)));
    CHECK(t.labels() == std::vector<Label>{2, 5, 9});
    CHECK(t.label_index(5) == 2);
    CHECK(!t.label_index(4).has_value());
    CHECK(t.relabeled_default().labels() == std::vector<Label>{1, 2, 3});
    CHECK_THROWS_AS(Tree::node(Tree::leaf(5), Tree::leaf(2)), std::invalid_argument);
}
