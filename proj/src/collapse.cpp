#include "rotdist/collapse.hpp"

#include <algorithm>
#include <stdexcept>

namespace rotdist {

// --------------------------------------------------------------- LabelSet

LabelSet LabelSet::of(std::initializer_list<Label> labels) {
    LabelSet s;
    for (Label l : labels) s.add(l);
    return s;
}

LabelSet LabelSet::interval(Label lo, Label hi) {
    LabelSet s;
    s.add_interval(lo, hi);
    return s;
}

void LabelSet::add(Label l) { add_interval(l, l); }

void LabelSet::add_interval(Label lo, Label hi) {
    if (lo > hi) return;
    runs_.emplace_back(lo, hi);
    normalize();
}

void LabelSet::normalize() {
    std::sort(runs_.begin(), runs_.end());
    std::vector<std::pair<Label, Label>> merged;
    for (auto [lo, hi] : runs_) {
        if (!merged.empty() && lo <= merged.back().second + 1)
            merged.back().second = std::max(merged.back().second, hi);
        else
            merged.emplace_back(lo, hi);
    }
    runs_ = std::move(merged);
}

bool LabelSet::contains(Label l) const {
    auto it = std::upper_bound(runs_.begin(), runs_.end(), std::make_pair(l, INT32_MAX));
    if (it == runs_.begin()) return false;
    --it;
    return l >= it->first && l <= it->second;
}

bool LabelSet::contains_interval(Label lo, Label hi) const {
    if (lo > hi) return true;
    auto it = std::upper_bound(runs_.begin(), runs_.end(), std::make_pair(lo, INT32_MAX));
    if (it == runs_.begin()) return false;
    --it;
    return lo >= it->first && hi <= it->second;
}

long long LabelSet::count() const {
    long long c = 0;
    for (auto [lo, hi] : runs_) c += hi - lo + 1;
    return c;
}

LabelSet LabelSet::unioned(const LabelSet& other) const {
    LabelSet s = *this;
    s.runs_.insert(s.runs_.end(), other.runs_.begin(), other.runs_.end());
    s.normalize();
    return s;
}

std::vector<Label> LabelSet::elements() const {
    std::vector<Label> out;
    for (auto [lo, hi] : runs_)
        for (Label l = lo; l <= hi; ++l) out.push_back(l);
    return out;
}

LabelSet LabelSet::parse(std::string_view text) {
    LabelSet s;
    size_t pos = 0;
    auto number = [&]() {
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
            throw std::invalid_argument("label set: expected a number at position " +
                                        std::to_string(pos));
        Label v = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
            v = v * 10 + (text[pos++] - '0');
        return v;
    };
    if (text.empty()) return s;
    while (true) {
        Label lo = number();
        Label hi = lo;
        if (pos + 1 < text.size() && text[pos] == '.' && text[pos + 1] == '.') {
            pos += 2;
            hi = number();
        }
        s.add_interval(lo, hi);
        if (pos == text.size()) break;
        if (text[pos] != ',')
            throw std::invalid_argument("label set: expected ',' at position " +
                                        std::to_string(pos));
        ++pos;
    }
    return s;
}

std::string LabelSet::str() const {
    std::string out;
    for (size_t i = 0; i < runs_.size(); ++i) {
        if (i) out += ',';
        auto [lo, hi] = runs_[i];
        out += std::to_string(lo);
        if (hi != lo) out += ".." + std::to_string(hi);
    }
    return out;
}

// --------------------------------------------------------------- collapse

namespace {

ExtendedTree collapse_rec(const Tree& whole, const detail::NodePtr& n, int offset,
                          const LabelSet& s) {
    if (!n->left) {
        Label l = whole.label_at(offset + 1);
        if (s.contains(l)) return std::nullopt;
        return Tree::leaf(l);
    }
    auto l = collapse_rec(whole, n->left, offset, s);
    auto r = collapse_rec(whole, n->right, offset + n->left->size + 1, s);
    if (!l) return r;
    if (!r) return l;
    return Tree::node(*l, *r);
}

} // namespace

ExtendedTree collapse(const Tree& t, const LabelSet& s) {
    return collapse_rec(t, t.shape(), 0, s);
}

ExtendedTree collapse(const ExtendedTree& t, const LabelSet& s) {
    if (!t) return std::nullopt;
    return collapse(*t, s);
}

namespace {

// all labels of the tree lying in [lo, hi] belong to s
bool range_vanishes(const std::vector<Label>& labels, Label lo, Label hi, const LabelSet& s) {
    auto first = std::lower_bound(labels.begin(), labels.end(), lo);
    for (auto it = first; it != labels.end() && *it <= hi; ++it)
        if (!s.contains(*it)) return false;
    return true;
}

} // namespace

bool is_collapsing_pair(const PairName& name, const std::vector<Label>& labels,
                        const LabelSet& s) {
    return range_vanishes(labels, name.a, name.b - 1, s) ||
           range_vanishes(labels, name.b, name.c, s) ||
           range_vanishes(labels, name.c + 1, name.d, s);
}

bool is_collapsing_pair(const Tree& t, const Tree& t2, const LabelSet& s) {
    auto name = pair_name(t, t2);
    if (!name) throw std::invalid_argument("not a base pair");
    return is_collapsing_pair(*name, t.labels(), s);
}

std::optional<PairName> collapsed_name(const PairName& name, const LabelSet& s,
                                       const std::vector<Label>& labels) {
    auto pick = [&](Label lo, Label hi, bool want_min) -> std::optional<Label> {
        std::optional<Label> best;
        auto first = std::lower_bound(labels.begin(), labels.end(), lo);
        for (auto it = first; it != labels.end() && *it <= hi; ++it) {
            if (s.contains(*it)) continue;
            if (!best || (want_min ? *it < *best : *it > *best)) best = *it;
        }
        return best;
    };
    auto a = pick(name.a, name.b - 1, true);
    auto b = pick(name.b, name.c, true);
    auto c = pick(name.b, name.c, false);
    auto d = pick(name.c + 1, name.d, false);
    if (!a || !b || !c || !d) return std::nullopt; // the pair collapses to equality
    return PairName{*a, *b, *c, *d, name.sign};
}

bool strongly_disjoint(const LabelSet& a, const LabelSet& b) {
    LabelSet both = a.unioned(b);
    for (Label i : a.elements())
        for (Label j : b.elements())
            if (both.contains_interval(std::min(i, j), std::max(i, j))) return false;
    return true;
}

} // namespace rotdist
