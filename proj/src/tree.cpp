#include "rotdist/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace rotdist {

// ---------------------------------------------------------------- Address

Address::Address(std::string bits) : bits_(std::move(bits)) {
    for (char c : bits_)
        if (c != '0' && c != '1') throw std::invalid_argument("address bits must be 0 or 1");
}

Address Address::parse(std::string_view text) {
    if (text.empty() || text == "e" || text == "\xce\xb5") return Address{};
    return Address{std::string(text)};
}

Address Address::then(char bit) const {
    Address r = *this;
    r.bits_.push_back(bit);
    return r;
}

Address Address::then(const Address& tail) const {
    Address r = *this;
    r.bits_ += tail.bits_;
    return r;
}

bool Address::is_prefix_of(const Address& other) const {
    return other.bits_.size() >= bits_.size() &&
           other.bits_.compare(0, bits_.size(), bits_) == 0;
}

Address Address::common_prefix(const Address& other) const {
    size_t k = 0;
    while (k < bits_.size() && k < other.bits_.size() && bits_[k] == other.bits_[k]) ++k;
    return Address{bits_.substr(0, k)};
}

int Address::count_zeros() const {
    return static_cast<int>(std::count(bits_.begin(), bits_.end(), '0'));
}

int Address::count_ones() const {
    return static_cast<int>(std::count(bits_.begin(), bits_.end(), '1'));
}

int Address::count_10() const {
    int c = 0;
    for (size_t i = 0; i + 1 < bits_.size(); ++i)
        if (bits_[i] == '1' && bits_[i + 1] == '0') ++c;
    return c;
}

bool Address::all_ones() const {
    return bits_.find('0') == std::string::npos;
}

std::string Address::str() const { return bits_.empty() ? "\xce\xb5" : bits_; }

// ------------------------------------------------------------------ shape

namespace detail {

NodePtr make_leaf() {
    static const NodePtr leaf = std::make_shared<Node>();
    return leaf;
}

NodePtr make_node(NodePtr l, NodePtr r) {
    auto n = std::make_shared<Node>();
    n->size = l->size + r->size + 1;
    n->left = std::move(l);
    n->right = std::move(r);
    return n;
}

bool shape_equal(const NodePtr& a, const NodePtr& b) {
    if (a == b) return true;
    if (a->size != b->size) return false;
    if (!a->left) return !b->left;
    if (!b->left) return false;
    return shape_equal(a->left, b->left) && shape_equal(a->right, b->right);
}

} // namespace detail

// ------------------------------------------------------------------- Tree

Tree::Tree() : shape_(detail::make_leaf()) {}

Tree Tree::leaf() { return Tree{}; }

Tree Tree::leaf(Label l) {
    if (l <= 0) throw std::invalid_argument("leaf labels are positive");
    Tree t;
    if (l != 1) t.labels_ = std::make_shared<std::vector<Label>>(1, l);
    return t;
}

Tree Tree::node(const Tree& l, const Tree& r) {
    Tree t;
    t.shape_ = detail::make_node(l.shape_, r.shape_);
    if (!l.has_default_labels() || !r.has_default_labels()) {
        auto lab = std::make_shared<std::vector<Label>>(l.labels());
        auto rl = r.labels();
        lab->insert(lab->end(), rl.begin(), rl.end());
        for (size_t i = 0; i + 1 < lab->size(); ++i)
            if ((*lab)[i] >= (*lab)[i + 1])
                throw std::invalid_argument("leaf labels must strictly increase left to right");
        t.labels_ = std::move(lab);
    }
    return t;
}

Tree Tree::left() const {
    if (is_leaf()) throw std::logic_error("left() on a leaf");
    if (has_default_labels()) return from_shape(shape_->left);
    int k = shape_->left->size + 1; // leaves in the left subtree
    std::vector<Label> lab(k);
    for (int i = 1; i <= k; ++i) lab[static_cast<size_t>(i) - 1] = label_at(i);
    return from_shape(shape_->left, std::move(lab));
}

Tree Tree::right() const {
    if (is_leaf()) throw std::logic_error("right() on a leaf");
    int skip = shape_->left->size + 1;
    int k = shape_->right->size + 1;
    std::vector<Label> lab(k);
    for (int i = 1; i <= k; ++i) lab[static_cast<size_t>(i) - 1] = label_at(skip + i);
    return from_shape(shape_->right, std::move(lab));
}

Label Tree::label_at(int k) const {
    if (k < 1 || k > leaf_count()) throw std::out_of_range("leaf index");
    return labels_ ? (*labels_)[static_cast<size_t>(k) - 1] : k;
}

std::vector<Label> Tree::labels() const {
    if (labels_) return *labels_;
    std::vector<Label> v(static_cast<size_t>(leaf_count()));
    for (int i = 0; i < leaf_count(); ++i) v[static_cast<size_t>(i)] = i + 1;
    return v;
}

std::optional<int> Tree::label_index(Label l) const {
    if (!labels_) {
        if (l >= 1 && l <= leaf_count()) return l;
        return std::nullopt;
    }
    auto it = std::lower_bound(labels_->begin(), labels_->end(), l);
    if (it == labels_->end() || *it != l) return std::nullopt;
    return static_cast<int>(it - labels_->begin()) + 1;
}

bool operator==(const Tree& a, const Tree& b) {
    if (!detail::shape_equal(a.shape_, b.shape_)) return false;
    if (!a.labels_ && !b.labels_) return true;
    return a.labels() == b.labels();
}

bool Tree::same_shape(const Tree& other) const {
    return detail::shape_equal(shape_, other.shape_);
}

Tree Tree::from_shape(detail::NodePtr shape) {
    Tree t;
    t.shape_ = std::move(shape);
    return t;
}

Tree Tree::from_shape(detail::NodePtr shape, std::vector<Label> labels) {
    Tree t;
    t.shape_ = std::move(shape);
    if (static_cast<int>(labels.size()) != t.leaf_count())
        throw std::invalid_argument("label count must equal leaf count");
    bool dflt = true;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i + 1 < labels.size() && labels[i] >= labels[i + 1])
            throw std::invalid_argument("leaf labels must strictly increase left to right");
        if (labels[i] != static_cast<Label>(i) + 1) dflt = false;
    }
    if (!dflt) t.labels_ = std::make_shared<std::vector<Label>>(std::move(labels));
    return t;
}

Tree Tree::with_same_labels(detail::NodePtr shape) const {
    if (shape->size != shape_->size) throw std::logic_error("shape size changed under relabel");
    Tree t;
    t.shape_ = std::move(shape);
    t.labels_ = labels_;
    return t;
}

Tree Tree::relabeled_default() const { return from_shape(shape_); }

// ------------------------------------------------------------- operations

Tree spine_tree(std::string_view spine) {
    detail::NodePtr t = detail::make_leaf();
    for (auto it = spine.rbegin(); it != spine.rend(); ++it) {
        if (*it == '0')
            t = detail::make_node(t, detail::make_leaf());
        else if (*it == '1')
            t = detail::make_node(detail::make_leaf(), t);
        else
            throw std::invalid_argument("spine characters must be 0 or 1");
    }
    return Tree::from_shape(std::move(t));
}

std::optional<Tree> subtree_at(const Tree& t, const Address& at) {
    detail::NodePtr cur = t.shape();
    int offset = 0; // leaves strictly to the left of cur
    for (int i = 0; i < at.length(); ++i) {
        if (!cur->left) return std::nullopt; // leaf reached before address consumed
        if (at.bit(i) == '0') {
            cur = cur->left;
        } else {
            offset += cur->left->size + 1;
            cur = cur->right;
        }
    }
    int k = cur->size + 1;
    std::vector<Label> lab(static_cast<size_t>(k));
    for (int i = 1; i <= k; ++i) lab[static_cast<size_t>(i) - 1] = t.label_at(offset + i);
    return Tree::from_shape(cur, std::move(lab));
}

Address leaf_address(const Tree& t, Label l) {
    auto idx = t.label_index(l);
    if (!idx) throw std::invalid_argument("label does not occur in the tree");
    std::string bits;
    detail::NodePtr cur = t.shape();
    int k = *idx; // 1-based leaf position within cur
    while (cur->left) {
        int lc = cur->left->size + 1;
        if (k <= lc) {
            bits.push_back('0');
            cur = cur->left;
        } else {
            bits.push_back('1');
            k -= lc;
            cur = cur->right;
        }
    }
    return Address{std::move(bits)};
}

namespace {

void encode_rec(const detail::NodePtr& n, std::string& out) {
    if (!n->left) {
        out.push_back('0');
        return;
    }
    out.push_back('1');
    encode_rec(n->left, out);
    encode_rec(n->right, out);
}

detail::NodePtr decode_rec(std::string_view bits, size_t& pos) {
    // one bit past the end stands for the dropped final leaf
    if (pos > bits.size()) throw std::invalid_argument("truncated tree encoding");
    if (pos == bits.size() || bits[pos] == '0') {
        ++pos;
        return detail::make_leaf();
    }
    if (bits[pos] != '1') throw std::invalid_argument("tree encoding bits must be 0 or 1");
    ++pos;
    auto l = decode_rec(bits, pos);
    auto r = decode_rec(bits, pos);
    return detail::make_node(std::move(l), std::move(r));
}

} // namespace

std::string encode(const Tree& t) {
    std::string out;
    out.reserve(static_cast<size_t>(2 * t.size() + 1));
    encode_rec(t.shape(), out);
    out.pop_back(); // final leaf bit is forced
    return out;
}

Tree decode(std::string_view bits) {
    size_t pos = 0;
    auto shape = decode_rec(bits, pos);
    if (pos != bits.size() + 1) throw std::invalid_argument("trailing characters in tree encoding");
    return Tree::from_shape(std::move(shape));
}

std::uint64_t shape_code(const detail::NodePtr& shape) {
    if (shape->size > 31) throw std::invalid_argument("shape_code requires size <= 31");
    std::uint64_t code = 1; // sentinel high bit keeps leading leaves
    struct Walk {
        std::uint64_t& code;
        void operator()(const detail::Node& n) {
            if (!n.left) {
                code <<= 1;
                return;
            }
            code = (code << 1) | 1u;
            (*this)(*n.left);
            (*this)(*n.right);
        }
    } walk{code};
    walk(*shape);
    return code >> 1; // drop the forced final leaf bit
}

std::uint64_t shape_code(const Tree& t) { return shape_code(t.shape()); }

namespace {

detail::NodePtr shape_from_bits(std::uint64_t code, int& bit) {
    // bit indexes the next payload bit from the top; past the end = leaf
    if (bit < 0 || !((code >> bit) & 1u)) {
        --bit;
        return detail::make_leaf();
    }
    --bit;
    auto l = shape_from_bits(code, bit);
    auto r = shape_from_bits(code, bit);
    return detail::make_node(std::move(l), std::move(r));
}

} // namespace

detail::NodePtr shape_from_code(std::uint64_t code) {
    if (code == 0) throw std::invalid_argument("malformed shape code");
    int width = 0;
    for (std::uint64_t c = code >> 1; c; c >>= 1) ++width; // payload bits under the sentinel
    int bit = width - 1;
    auto shape = shape_from_bits(code, bit);
    // the parse must consume the payload plus exactly the one implied leaf
    if (bit != -2 || width % 2 != 0) throw std::invalid_argument("malformed shape code");
    return shape;
}

int right_height(const Tree& t) {
    int h = 0;
    for (detail::NodePtr cur = t.shape(); cur->left; cur = cur->right) ++h;
    return h;
}

detail::NodePtr mirror_shape(const detail::NodePtr& n) {
    if (!n->left) return n;
    return detail::make_node(mirror_shape(n->right), mirror_shape(n->left));
}

Tree mirror(const Tree& t) { return t.with_same_labels(mirror_shape(t.shape())); }

// ------------------------------------------------------------------- text

namespace {

void format_rec(const Tree& t, const detail::NodePtr& n, int& next, std::string& out, bool dflt) {
    if (!n->left) {
        if (dflt)
            out.push_back('*');
        else
            out += std::to_string(t.label_at(next));
        ++next;
        return;
    }
    out.push_back('(');
    format_rec(t, n->left, next, out, dflt);
    out.push_back(' ');
    format_rec(t, n->right, next, out, dflt);
    out.push_back(')');
}

struct BracketParser {
    std::string_view text;
    size_t pos = 0;
    std::vector<Label> labels;
    bool saw_star = false, saw_label = false;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument(what + " at position " + std::to_string(pos));
    }
    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    detail::NodePtr parse_node() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '*') {
            ++pos;
            saw_star = true;
            labels.push_back(static_cast<Label>(labels.size()) + 1);
            return detail::make_leaf();
        }
        if (c >= '0' && c <= '9') {
            Label v = 0;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                v = v * 10 + (text[pos] - '0');
                ++pos;
            }
            saw_label = true;
            labels.push_back(v);
            return detail::make_leaf();
        }
        if (c == '(') {
            ++pos;
            auto l = parse_node();
            skip_ws();
            auto r = parse_node();
            skip_ws();
            if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
            ++pos;
            return detail::make_node(std::move(l), std::move(r));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

std::string format(const Tree& t) {
    std::string out;
    int next = 1;
    format_rec(t, t.shape(), next, out, t.has_default_labels());
    return out;
}

Tree parse_bracket(std::string_view text) {
    BracketParser p{text};
    auto shape = p.parse_node();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing characters");
    if (p.saw_star && p.saw_label) p.fail("cannot mix '*' and labeled leaves");
    return Tree::from_shape(std::move(shape), std::move(p.labels));
}

Tree parse_tree(std::string_view text) {
    if (!text.empty() && text.find_first_not_of("01") == std::string_view::npos)
        return spine_tree(text);
    return parse_bracket(text);
}

std::optional<std::string> spine_of(const Tree& t) {
    std::string spine;
    detail::NodePtr cur = t.shape();
    while (cur->left) {
        bool l = cur->left->left != nullptr, r = cur->right->left != nullptr;
        if (l && r) return std::nullopt;
        if (l) {
            spine.push_back('0');
            cur = cur->left;
        } else if (r) {
            spine.push_back('1');
            cur = cur->right;
        } else {
            spine.push_back('0'); // final caret; emit the 0-variant
            break;
        }
    }
    return spine;
}

std::vector<Tree> all_trees(int n) {
    if (n < 0) throw std::invalid_argument("size must be nonnegative");
    std::vector<std::vector<detail::NodePtr>> memo(static_cast<size_t>(n) + 1);
    memo[0] = {detail::make_leaf()};
    for (int s = 1; s <= n; ++s) {
        for (int k = 0; k < s; ++k)
            for (const auto& l : memo[static_cast<size_t>(k)])
                for (const auto& r : memo[static_cast<size_t>(s - 1 - k)])
                    memo[static_cast<size_t>(s)].push_back(detail::make_node(l, r));
    }
    std::vector<Tree> out;
    out.reserve(memo[static_cast<size_t>(n)].size());
    for (auto& s : memo[static_cast<size_t>(n)]) out.push_back(Tree::from_shape(std::move(s)));
    return out;
}

} // namespace rotdist
