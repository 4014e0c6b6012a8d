#include "rotdist/rotation.hpp"

#include <stdexcept>

namespace rotdist {

std::string to_string(const RotationEdge& e) { return e.at.str() + sign_char(e.sign); }

std::string to_string(const PairName& n) {
    return "(" + std::to_string(n.a) + "," + std::to_string(n.b) + "," + std::to_string(n.c) +
           "," + std::to_string(n.d) + ")" + sign_char(n.sign);
}

namespace {

using detail::NodePtr;

NodePtr rotate_rec(const NodePtr& n, const Address& at, int i, Sign sign) {
    if (!n->left) return nullptr;
    if (i == at.length()) {
        if (sign == Sign::plus) {
            // T1∨(T2∨T3) -> (T1∨T2)∨T3
            if (!n->right->left) return nullptr;
            return detail::make_node(detail::make_node(n->left, n->right->left),
                                     n->right->right);
        }
        // (T1∨T2)∨T3 -> T1∨(T2∨T3)
        if (!n->left->left) return nullptr;
        return detail::make_node(n->left->left,
                                 detail::make_node(n->left->right, n->right));
    }
    if (at.bit(i) == '0') {
        auto sub = rotate_rec(n->left, at, i + 1, sign);
        if (!sub) return nullptr;
        return detail::make_node(std::move(sub), n->right);
    }
    auto sub = rotate_rec(n->right, at, i + 1, sign);
    if (!sub) return nullptr;
    return detail::make_node(n->left, std::move(sub));
}

// leftmost / rightmost leaf positions (1-based) of the subtree at `at`
struct SubtreeSpan {
    int first = 0, last = 0;      // leaf positions of the whole subtree
    NodePtr node;
};

std::optional<SubtreeSpan> span_at(const NodePtr& root, const Address& at) {
    NodePtr cur = root;
    int offset = 0;
    for (int i = 0; i < at.length(); ++i) {
        if (!cur->left) return std::nullopt;
        if (at.bit(i) == '0') {
            cur = cur->left;
        } else {
            offset += cur->left->size + 1;
            cur = cur->right;
        }
    }
    return SubtreeSpan{offset + 1, offset + cur->size + 1, cur};
}

} // namespace

detail::NodePtr rotate_shape(const detail::NodePtr& n, const Address& at, Sign sign) {
    return rotate_rec(n, at, 0, sign);
}

std::optional<Tree> rotate(const Tree& t, const RotationEdge& e) {
    auto shape = rotate_shape(t.shape(), e.at, e.sign);
    if (!shape) return std::nullopt;
    return t.with_same_labels(std::move(shape));
}

std::vector<std::pair<RotationEdge, Tree>> neighbors(const Tree& t) {
    std::vector<std::pair<RotationEdge, Tree>> out;
    out.reserve(static_cast<size_t>(t.size() > 0 ? t.size() - 1 : 0));
    struct Walk {
        const Tree& t;
        std::vector<std::pair<RotationEdge, Tree>>& out;
        void operator()(const detail::NodePtr& n, Address at) {
            if (!n->left) return;
            for (Sign s : {Sign::plus, Sign::minus}) {
                RotationEdge e{at, s};
                if (auto shape = rotate_shape(n, Address{}, s)) {
                    // splice the rotated subtree back via a full-path rotate
                    auto full = rotate(t, e);
                    out.emplace_back(std::move(e), std::move(*full));
                }
            }
            (*this)(n->left, at.then('0'));
            (*this)(n->right, at.then('1'));
        }
    } walk{t, out};
    walk(t.shape(), Address{});
    return out;
}

PairName name_of_edge(const Tree& t, const RotationEdge& e) {
    auto span = span_at(t.shape(), e.at);
    if (!span || !span->node->left) throw std::invalid_argument("no rotation at this address");
    const NodePtr& n = span->node;
    int first = span->first, last = span->last;
    PairName name;
    name.sign = e.sign;
    name.a = t.label_at(first);
    name.d = t.label_at(last);
    if (e.sign == Sign::plus) {
        // middle subtree is the left child of the right child
        if (!n->right->left) throw std::invalid_argument("no positive rotation at this address");
        int mid_first = first + n->left->size + 1;
        int mid_last = mid_first + n->right->left->size;
        name.b = t.label_at(mid_first);
        name.c = t.label_at(mid_last);
    } else {
        // middle subtree is the right child of the left child
        if (!n->left->left) throw std::invalid_argument("no negative rotation at this address");
        int mid_last = first + n->left->size;
        int mid_first = mid_last - n->left->right->size;
        name.b = t.label_at(mid_first);
        name.c = t.label_at(mid_last);
    }
    return name;
}

std::optional<RotationEdge> pair_address(const Tree& t, const Tree& t2) {
    if (t.size() != t2.size() || t.labels() != t2.labels()) return std::nullopt;
    detail::NodePtr a = t.shape(), b = t2.shape();
    Address at;
    while (true) {
        if (!a->left || !b->left) return std::nullopt;
        if (a->left->size != b->left->size) break; // split point moved: rotation here
        bool dl = !detail::shape_equal(a->left, b->left);
        bool dr = !detail::shape_equal(a->right, b->right);
        if (dl == dr) return std::nullopt; // equal trees, or more than one site
        if (dl) {
            at = at.then('0');
            a = a->left;
            b = b->left;
        } else {
            at = at.then('1');
            a = a->right;
            b = b->right;
        }
    }
    for (Sign s : {Sign::plus, Sign::minus}) {
        auto r = rotate_shape(a, Address{}, s);
        if (r && detail::shape_equal(r, b)) return RotationEdge{at, s};
    }
    return std::nullopt;
}

std::optional<PairName> pair_name(const Tree& t, const Tree& t2) {
    auto e = pair_address(t, t2);
    if (!e) return std::nullopt;
    return name_of_edge(t, *e);
}

} // namespace rotdist
