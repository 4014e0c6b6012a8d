#include "rotdist/thompson.hpp"

#include <stdexcept>

#include "rotdist/rotation.hpp"

namespace rotdist {

FWord inverse(const FWord& w) {
    FWord inv;
    inv.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) inv.push_back({it->at, -it->exp});
    return inv;
}

FWord parse_word(std::string_view text) {
    FWord w;
    size_t pos = 0;
    auto fail = [&](const std::string& what) -> void {
        throw std::invalid_argument("word: " + what + " at position " + std::to_string(pos));
    };
    while (pos < text.size()) {
        if (text[pos] == ' ' || text[pos] == '\t') {
            ++pos;
            continue;
        }
        if (text[pos] != 'A') fail("expected 'A'");
        ++pos;
        if (pos >= text.size() || text[pos] != '[') fail("expected '['");
        ++pos;
        size_t start = pos;
        while (pos < text.size() && (text[pos] == '0' || text[pos] == '1')) ++pos;
        if (pos >= text.size() || text[pos] != ']') fail("expected ']'");
        Address at{std::string(text.substr(start, pos - start))};
        ++pos;
        int exp = +1;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            exp = text[pos] == '+' ? +1 : -1;
            ++pos;
        }
        w.push_back({std::move(at), exp});
    }
    return w;
}

std::string to_string(const FWord& w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += "A[" + w[i].at.bits() + "]";
        out += w[i].exp > 0 ? '+' : '-';
    }
    return out;
}

// --------------------------------------------------------------- elements

namespace {

// leaf k (1-based) has a sibling leaf k+1 in both shapes: prune that caret
bool prune_once(detail::NodePtr& a, detail::NodePtr& b) {
    struct Finder {
        int base = 0;
        // collects leaf positions k such that leaves k,k+1 are siblings
        void collect(const detail::NodePtr& n, int offset, std::vector<int>& out) {
            if (!n->left) return;
            if (!n->left->left && !n->right->left) {
                out.push_back(offset + 1);
                return;
            }
            collect(n->left, offset, out);
            collect(n->right, offset + n->left->size + 1, out);
        }
    };
    std::vector<int> ka, kb;
    Finder{}.collect(a, 0, ka);
    Finder{}.collect(b, 0, kb);
    int match = -1;
    for (int x : ka)
        for (int y : kb)
            if (x == y) match = x;
    if (match < 0) return false;
    struct Pruner {
        int target;
        detail::NodePtr operator()(const detail::NodePtr& n, int offset) {
            if (!n->left->left && !n->right->left && offset + 1 == target)
                return detail::make_leaf();
            int split = n->left->size + 1;
            if (target <= offset + split) {
                if (!n->left->left) throw std::logic_error("prune target not a caret");
                return detail::make_node((*this)(n->left, offset), n->right);
            }
            if (!n->right->left) throw std::logic_error("prune target not a caret");
            return detail::make_node(n->left, (*this)(n->right, offset + split));
        }
    };
    a = Pruner{match}(a, 0);
    b = Pruner{match}(b, 0);
    return true;
}

} // namespace

std::pair<Tree, Tree> reduce_pair(Tree dom, Tree tar) {
    if (dom.size() != tar.size()) throw std::invalid_argument("pair entries must have equal size");
    detail::NodePtr a = dom.shape(), b = tar.shape();
    while (a->size > 0 && prune_once(a, b)) {
    }
    return {Tree::from_shape(a), Tree::from_shape(b)};
}

FElement::FElement() = default;

FElement::FElement(Tree dom, Tree tar) {
    auto [d, t] = reduce_pair(std::move(dom), std::move(tar));
    dom_ = std::move(d);
    tar_ = std::move(t);
}

bool operator==(const FElement& a, const FElement& b) {
    return a.dom_.same_shape(b.dom_) && a.tar_.same_shape(b.tar_);
}

FElement element_of(const Tree& t, const Tree& t2) {
    if (t.size() != t2.size()) throw std::invalid_argument("trees must have equal size");
    return FElement(t, t2);
}

// ----------------------------------------------------------------- action

std::optional<Tree> apply(const Tree& t, const FWord& w) {
    Tree cur = t;
    for (const auto& letter : w) {
        auto next = rotate(cur, {letter.at, letter.exp > 0 ? Sign::plus : Sign::minus});
        if (!next) return std::nullopt;
        cur = std::move(*next);
    }
    return cur;
}

namespace {

detail::NodePtr join_shapes(const detail::NodePtr& a, const detail::NodePtr& b) {
    if (!a->left) return b;
    if (!b->left) return a;
    return detail::make_node(join_shapes(a->left, b->left), join_shapes(a->right, b->right));
}

// smallest tree the letter can produce: a caret at the address plus one
// more on the side the rotation leans to
detail::NodePtr letter_target(const FLetter& l) {
    std::string spine = l.at.bits();
    spine += l.exp > 0 ? "00" : "11";
    return spine_tree(spine).shape();
}

} // namespace

Tree join_trees(const Tree& a, const Tree& b) {
    return Tree::from_shape(join_shapes(a.shape(), b.shape()));
}

Tree minimal_domain(const FWord& w) {
    detail::NodePtr need = detail::make_leaf();
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        // pull the requirement back through this letter
        auto reached = join_shapes(letter_target(*it), need);
        auto back = rotate_shape(reached, it->at, it->exp > 0 ? Sign::minus : Sign::plus);
        if (!back) throw std::logic_error("minimal domain pullback failed");
        need = std::move(back);
    }
    return Tree::from_shape(need);
}

std::pair<Tree, Tree> apply_with_extension(const Tree& t, const FWord& w) {
    Tree source = join_trees(t.relabeled_default(), minimal_domain(w));
    auto result = apply(source, w);
    if (!result) throw std::logic_error("extension does not support the word");
    return {std::move(source), std::move(*result)};
}

FElement element_of_word(const FWord& w) {
    Tree dom = minimal_domain(w);
    auto tar = apply(dom, w);
    if (!tar) throw std::logic_error("word undefined on its minimal domain");
    return FElement(std::move(dom), std::move(*tar));
}

// -------------------------------------------------------------------- chi

namespace {

void shift_into(const FWord& w, FWord& out) {
    for (const auto& l : w) out.push_back({Address{"1" + l.at.bits()}, l.exp});
}

void chi_rec(const detail::NodePtr& n, FWord& out) {
    if (!n->left) return;
    chi_rec(n->left, out);
    int h = 0;
    for (detail::NodePtr cur = n->left; cur->left; cur = cur->right) ++h;
    for (int i = h - 1; i >= 0; --i) out.push_back({Address{std::string(i, '1')}, +1});
    FWord sub;
    chi_rec(n->right, sub);
    shift_into(sub, out);
}

} // namespace

FWord chi(const Tree& t) {
    FWord w;
    chi_rec(t.shape(), w);
    return w;
}

int right_arm_exponent_sum(const FWord& w) {
    int s = 0;
    for (const auto& l : w)
        if (l.at.all_ones()) s += l.exp;
    return s;
}

bool words_equivalent(const FWord& w1, const FWord& w2) {
    return element_of_word(w1) == element_of_word(w2);
}

// -------------------------------------------------------------- relations

namespace {

std::vector<Address> addresses_up_to(int max_len) {
    std::vector<Address> out{Address{}};
    std::vector<std::string> cur{""};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::string> next;
        for (const auto& s : cur)
            for (char c : {'0', '1'}) {
                next.push_back(s + c);
                out.push_back(Address{s + c});
            }
        cur = std::move(next);
    }
    return out;
}

FLetter pos(const Address& a) { return {a, +1}; }

} // namespace

RelationReport relation_suite(int max_addr_len) {
    RelationReport rep;
    auto addrs = addresses_up_to(max_addr_len);
    auto check = [&](const std::string& what, const FWord& lhs, const FWord& rhs) {
        ++rep.instances;
        bool ok = words_equivalent(lhs, rhs) &&
                  right_arm_exponent_sum(lhs) == right_arm_exponent_sum(rhs);
        if (!ok) {
            ++rep.failures;
            if (rep.failed.size() < 20)
                rep.failed.push_back(what + ": " + to_string(lhs) + " vs " + to_string(rhs));
        }
    };
    for (const auto& a : addrs) {
        // pentagon
        check("pentagon(" + a.str() + ")", {pos(a), pos(a)},
              {pos(a.then('1')), pos(a), pos(a.then('0'))});
        for (const auto& b : addrs) {
            check("left-shift(" + a.str() + "," + b.str() + ")",
                  {pos(a.then('0').then(b)), pos(a)}, {pos(a), pos(a.then('0').then('0').then(b))});
            check("middle-shift(" + a.str() + "," + b.str() + ")",
                  {pos(a.then('1').then('0').then(b)), pos(a)},
                  {pos(a), pos(a.then('0').then('1').then(b))});
            check("right-shift(" + a.str() + "," + b.str() + ")",
                  {pos(a.then('1').then('1').then(b)), pos(a)},
                  {pos(a), pos(a.then('1').then(b))});
            if (!a.is_prefix_of(b) && !b.is_prefix_of(a))
                check("commute(" + a.str() + "," + b.str() + ")", {pos(b), pos(a)},
                      {pos(a), pos(b)});
        }
    }
    return rep;
}

} // namespace rotdist
