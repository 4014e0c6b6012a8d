#include "rotdist/covering.hpp"

#include <algorithm>
#include <stdexcept>

namespace rotdist {

namespace {

void check_label_pair(const Tree& t, Label i, Label j) {
    if (i >= j) throw std::invalid_argument("covering requires i < j");
    if (!t.label_index(i) || !t.label_index(j))
        throw std::invalid_argument("labels must occur in the tree");
}

} // namespace

bool covers(const Tree& t, Label i, Label j) {
    check_label_pair(t, i, j);
    Address ai = leaf_address(t, i), aj = leaf_address(t, j);
    // strip trailing 1s of ad(j); each prefix γ must satisfy γ0 ⊑ ad(i)
    std::string g = aj.bits();
    while (!g.empty() && g.back() == '1') {
        g.pop_back();
        Address probe{g + '0'};
        if (probe.is_prefix_of(ai)) return true;
    }
    return false;
}

bool cocovers(const Tree& t, Label i, Label j) {
    check_label_pair(t, i, j);
    Address ai = leaf_address(t, i), aj = leaf_address(t, j);
    std::string g = ai.bits();
    while (!g.empty() && g.back() == '0') {
        g.pop_back();
        Address probe{g + '1'};
        if (probe.is_prefix_of(aj)) return true;
    }
    return false;
}

namespace {

template <typename Witness>
bool any_subtree(const Tree& t, const detail::NodePtr& n, int offset, Witness&& witness) {
    if (witness(n, offset)) return true;
    if (!n->left) return false;
    return any_subtree(t, n->left, offset, witness) ||
           any_subtree(t, n->right, offset + n->left->size + 1, witness);
}

} // namespace

bool covers_by_definition(const Tree& t, Label i, Label j) {
    check_label_pair(t, i, j);
    return any_subtree(t, t.shape(), 0, [&](const detail::NodePtr& n, int offset) {
        int leaves = n->size + 1;
        if (t.label_at(offset + leaves) != j) return false; // j must be final
        for (int k = 1; k < leaves; ++k)
            if (t.label_at(offset + k) == i) return true; // i non-final
        return false;
    });
}

bool cocovers_by_definition(const Tree& t, Label i, Label j) {
    check_label_pair(t, i, j);
    return any_subtree(t, t.shape(), 0, [&](const detail::NodePtr& n, int offset) {
        int leaves = n->size + 1;
        if (t.label_at(offset + 1) != i) return false; // i must be initial
        for (int k = 2; k <= leaves; ++k)
            if (t.label_at(offset + k) == j) return true; // j non-initial
        return false;
    });
}

bool CoveringRelation::contains(Label i, Label j) const {
    return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(i, j));
}

CoveringRelation covering_of(const Tree& t) {
    CoveringRelation rel;
    auto labels = t.labels();
    for (size_t x = 0; x < labels.size(); ++x)
        for (size_t y = x + 1; y < labels.size(); ++y)
            if (covers(t, labels[x], labels[y])) rel.pairs.emplace_back(labels[x], labels[y]);
    return rel;
}

CoveringRelation cocovering_of(const Tree& t) {
    CoveringRelation rel;
    auto labels = t.labels();
    for (size_t x = 0; x < labels.size(); ++x)
        for (size_t y = x + 1; y < labels.size(); ++y)
            if (cocovers(t, labels[x], labels[y])) rel.pairs.emplace_back(labels[x], labels[y]);
    return rel;
}

namespace {

Tree reconstruct_rec(const CoveringRelation& rel, const std::vector<Label>& labels,
                     size_t lo, size_t hi) {
    if (lo + 1 == hi) return Tree::leaf(labels[lo]);
    // split: largest non-final position covered-by relation from the first label
    size_t split = lo; // left part is labels[lo..split]
    for (size_t m = lo + 1; m + 1 < hi; ++m)
        if (rel.contains(labels[lo], labels[m])) split = m;
    return Tree::node(reconstruct_rec(rel, labels, lo, split + 1),
                      reconstruct_rec(rel, labels, split + 1, hi));
}

} // namespace

Tree reconstruct(const CoveringRelation& rel, const std::vector<Label>& labels) {
    if (labels.empty()) throw std::invalid_argument("need at least one label");
    Tree t = reconstruct_rec(rel, labels, 0, labels.size());
    if (!(covering_of(t) == rel))
        throw std::invalid_argument("relation is not the covering relation of any tree");
    return t;
}

CoveringChange covering_change(const Tree& t, const Tree& t2) {
    auto name = pair_name(t, t2);
    if (!name || name->sign != Sign::plus)
        throw std::invalid_argument("covering_change requires a positive base pair");
    CoveringChange ch;
    auto labels = t.labels();
    for (Label i : labels) {
        if (i >= name->a && i < name->b) ch.added_coverings.emplace_back(i, name->c);
        if (i > name->c && i <= name->d) ch.removed_cocoverings.emplace_back(name->b, i);
    }
    return ch;
}

// ----------------------------------------------------------- name patterns

bool CoordConstraint::matches(Label v) const {
    for (const auto& a : atoms) {
        switch (a.op) {
        case Op::eq: if (v != a.k1) return false; break;
        case Op::le: if (v > a.k1) return false; break;
        case Op::lt: if (v >= a.k1) return false; break;
        case Op::ge: if (v < a.k1) return false; break;
        case Op::gt: if (v <= a.k1) return false; break;
        case Op::ne: if (v == a.k1) return false; break;
        case Op::between: if (v < a.k1 || v > a.k2) return false; break;
        }
    }
    return true;
}

CoordConstraint CoordConstraint::also(const CoordConstraint& other) const {
    CoordConstraint r = *this;
    r.atoms.insert(r.atoms.end(), other.atoms.begin(), other.atoms.end());
    return r;
}

bool NamePattern::matches(const PairName& n) const {
    return sign == n.sign && coord[0].matches(n.a) && coord[1].matches(n.b) &&
           coord[2].matches(n.c) && coord[3].matches(n.d);
}

namespace {

struct PatternParser {
    std::string_view text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument(what + " at position " + std::to_string(pos));
    }
    bool eat(char c) {
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    Label number() {
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') fail("expected a number");
        Label v = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
            v = v * 10 + (text[pos++] - '0');
        return v;
    }
    CoordConstraint::Atom atom() {
        using Op = CoordConstraint::Op;
        if (eat('[')) {
            Label k1 = number();
            if (!eat(',')) fail("expected ','");
            Label k2 = number();
            if (!eat(']')) fail("expected ']'");
            return {Op::between, k1, k2};
        }
        if (eat('<')) return eat('=') ? CoordConstraint::Atom{Op::le, number(), 0}
                                      : CoordConstraint::Atom{Op::lt, number(), 0};
        if (eat('>')) return eat('=') ? CoordConstraint::Atom{Op::ge, number(), 0}
                                      : CoordConstraint::Atom{Op::gt, number(), 0};
        if (eat('!')) {
            if (!eat('=')) fail("expected '='");
            return {Op::ne, number(), 0};
        }
        eat('='); // optional
        return {Op::eq, number(), 0};
    }
    CoordConstraint constraint() {
        CoordConstraint c;
        if (eat('_')) return c;
        c.atoms.push_back(atom());
        while (eat('&')) c.atoms.push_back(atom());
        return c;
    }
};

std::string atom_str(const CoordConstraint::Atom& a) {
    using Op = CoordConstraint::Op;
    switch (a.op) {
    case Op::eq: return "=" + std::to_string(a.k1);
    case Op::le: return "<=" + std::to_string(a.k1);
    case Op::lt: return "<" + std::to_string(a.k1);
    case Op::ge: return ">=" + std::to_string(a.k1);
    case Op::gt: return ">" + std::to_string(a.k1);
    case Op::ne: return "!=" + std::to_string(a.k1);
    case Op::between: return "[" + std::to_string(a.k1) + "," + std::to_string(a.k2) + "]";
    }
    return "?";
}

} // namespace

NamePattern parse_pattern(std::string_view text) {
    PatternParser p{text};
    NamePattern pat;
    if (p.eat('+'))
        pat.sign = Sign::plus;
    else if (p.eat('-'))
        pat.sign = Sign::minus;
    else
        p.fail("pattern must start with '+' or '-'");
    if (!p.eat('(')) p.fail("expected '('");
    for (int k = 0; k < 4; ++k) {
        pat.coord[static_cast<size_t>(k)] = p.constraint();
        if (k < 3 && !p.eat(',')) p.fail("expected ','");
    }
    if (!p.eat(')')) p.fail("expected ')'");
    if (p.pos != text.size()) p.fail("trailing characters");
    return pat;
}

std::string to_string(const NamePattern& p) {
    std::string out(1, sign_char(p.sign));
    out += '(';
    for (int k = 0; k < 4; ++k) {
        const auto& c = p.coord[static_cast<size_t>(k)];
        if (c.atoms.empty()) {
            out += '_';
        } else {
            for (size_t i = 0; i < c.atoms.size(); ++i) {
                if (i) out += '&';
                out += atom_str(c.atoms[i]);
            }
        }
        if (k < 3) out += ',';
    }
    out += ')';
    return out;
}

bool obligation_matches(const Obligation& ob, const PairName& n) {
    for (const auto& p : ob)
        if (p.matches(n)) return true;
    return false;
}

WitnessReport lemma_witnesses(const std::vector<Tree>& path,
                              const std::vector<Obligation>& obligations) {
    std::vector<PairName> names;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        auto n = pair_name(path[i], path[i + 1]);
        if (!n) throw std::invalid_argument("path entries " + std::to_string(i) + "," +
                                            std::to_string(i + 1) + " are not a base pair");
        names.push_back(*n);
    }
    WitnessReport rep;
    for (const auto& ob : obligations) {
        WitnessReport::Entry e;
        for (size_t i = 0; i < names.size(); ++i) {
            if (obligation_matches(ob, names[i])) {
                e.satisfied = true;
                e.first_index = static_cast<int>(i);
                break;
            }
        }
        rep.all_satisfied = rep.all_satisfied && e.satisfied;
        rep.entries.push_back(e);
    }
    return rep;
}

// ------------------------------------------------------- pattern catalogues

namespace {

using CC = CoordConstraint;

NamePattern make(Sign s, CC a, CC b, CC c, CC d) {
    NamePattern p;
    p.sign = s;
    p.coord = {std::move(a), std::move(b), std::move(c), std::move(d)};
    return p;
}

} // namespace

std::vector<Obligation> bicomb_obligations(int p, int q) {
    if (p > q) std::swap(p, q); // the argument assumes p <= q
    int n = p + q;
    std::vector<Obligation> obs;
    // one crossing with second coordinate a and p+1 pinned, per a in [2, p+1]
    for (Label a = 2; a <= p + 1; ++a)
        obs.push_back({make(Sign::plus, CC::any(), CC::eq(a), CC::eq(p + 1), CC::any()),
                       make(Sign::minus, CC::any(), CC::eq(a), CC::any(), CC::eq(p + 1))});
    // one crossing with p+1 and b pinned, per b in [p+2, n]
    for (Label b = p + 2; b <= n; ++b)
        obs.push_back({make(Sign::plus, CC::any(), CC::eq(p + 1), CC::eq(b), CC::any()),
                       make(Sign::minus, CC::eq(p + 1), CC::any(), CC::eq(b), CC::any())});
    // either every third-family crossing or every fourth-family crossing
    // happens; pairwise that gives one obligation per (b, a) combination
    for (Label b = p + 2; b <= n; ++b)
        for (Label a = 2; a <= p; ++a)
            obs.push_back({make(Sign::plus, CC::eq(1), CC::ne(p + 1), CC::eq(b), CC::any()),
                           make(Sign::plus, CC::any(), CC::eq(a), CC::le(p), CC::any())});
    return obs;
}

std::vector<SpecialType> bicomb_special_types(int p, int q) {
    if (p > q) std::swap(p, q);
    int n = p + q;
    std::vector<SpecialType> types;
    for (Label a = 2; a <= p + 1; ++a)
        types.push_back({"I_" + std::to_string(a),
                         {make(Sign::plus, CC::any(), CC::eq(a), CC::eq(p + 1), CC::any()),
                          make(Sign::minus, CC::any(), CC::eq(a), CC::any(), CC::eq(p + 1))}});
    for (Label a = p + 2; a <= n; ++a)
        types.push_back({"II_" + std::to_string(a),
                         {make(Sign::plus, CC::any(), CC::eq(p + 1), CC::eq(a), CC::any()),
                          make(Sign::minus, CC::eq(p + 1), CC::any(), CC::eq(a), CC::any())}});
    for (Label a = p + 2; a <= n; ++a)
        types.push_back({"III_" + std::to_string(a),
                         {make(Sign::plus, CC::eq(1), CC::ne(p + 1), CC::eq(a), CC::any())}});
    for (Label a = 2; a <= p; ++a)
        types.push_back({"IV_" + std::to_string(a),
                         {make(Sign::plus, CC::any(), CC::eq(a), CC::le(p), CC::any())}});
    return types;
}

std::vector<SpecialType> tricomb_link_types(int p) {
    int nb = 2 * p + 1; // size of the linked pair
    std::vector<SpecialType> types;
    for (Label a = p + 2; a <= 2 * p; ++a) {
        types.push_back({"I_" + std::to_string(a),
                         {make(Sign::plus, CC::any(), CC::eq(a), CC::eq(a), CC::any())}});
        types.push_back({"II+_" + std::to_string(a),
                         {make(Sign::plus, CC::any(), CC::le(p + 1), CC::eq(a), CC::le(nb))}});
        types.push_back({"II-_" + std::to_string(a),
                         {make(Sign::minus, CC::le(p), CC::any(), CC::ge(p + 1), CC::eq(a))}});
        types.push_back({"III_" + std::to_string(a),
                         {make(Sign::minus, CC::any(), CC::eq(a + 1), CC::any(), CC::eq(nb + 1))}});
    }
    return types;
}

std::vector<SpecialType> multicomb_link_types(int p) {
    int n = 3 * p + 1, q = 2 * p + 1;
    std::vector<SpecialType> types;
    auto add = [&](const char* fam, Label a, NamePattern pat) {
        types.push_back({std::string(fam) + "_" + std::to_string(a), {std::move(pat)}});
    };
    for (Label a = p + 2; a <= q; ++a)
        add("I+", a, make(Sign::plus, CC::any(), CC::eq(a), CC::eq(q), CC::any()));
    for (Label a = p + 2; a <= q - 1; ++a)
        add("I-", a, make(Sign::minus, CC::any(), CC::eq(a), CC::any(), CC::eq(q)));
    for (Label a = q + 1; a <= n - 1; ++a)
        add("II+", a, make(Sign::plus, CC::any(), CC::eq(q), CC::eq(a), CC::any()));
    for (Label a = q + 1; a <= n - 1; ++a)
        add("II-", a, make(Sign::minus, CC::eq(q), CC::any(), CC::eq(a), CC::any()));
    for (Label a = p + 2; a <= q - 1; ++a)
        add("III+", a, make(Sign::plus, CC::any(), CC::eq(a), CC::lt(q), CC::any()));
    for (Label a = p + 2; a <= q; ++a)
        add("III-", a, make(Sign::minus, CC::any(), CC::eq(a), CC::any(), CC::eq(n + 1)));
    for (Label a = q + 2; a <= n; ++a)
        add("IV+", a, make(Sign::plus, CC::any(), CC::ge(p + 2).also(CC::ne(q)), CC::eq(a), CC::any()));
    for (Label a = q + 1; a <= n - 1; ++a)
        add("V+", a, make(Sign::plus, CC::any(), CC::le(p + 1), CC::eq(a), CC::le(n)));
    for (Label a = q + 1; a <= n - 1; ++a)
        add("V-", a, make(Sign::minus, CC::any(), CC::le(p + 1), CC::gt(p), CC::eq(a)));
    for (Label a = q + 1; a <= n - 1; ++a)
        add("VI+", a, make(Sign::plus, CC::any(), CC::eq(a + 1), CC::any(), CC::eq(n + 1)));
    for (Label a = q + 1; a <= n - 1; ++a)
        add("VI-", a, make(Sign::minus, CC::any(), CC::eq(a + 1), CC::any(), CC::eq(n + 1)));
    return types;
}

} // namespace rotdist
