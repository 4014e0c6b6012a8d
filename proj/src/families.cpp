#include "rotdist/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace rotdist {

namespace {

std::string repeat(std::string_view s, int k) {
    std::string out;
    out.reserve(s.size() * static_cast<size_t>(std::max(k, 0)));
    for (int i = 0; i < k; ++i) out += s;
    return out;
}

} // namespace

FamilyInstance bicomb(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("bicomb requires p, q >= 1");
    FamilyInstance f;
    f.tag = "bicomb(" + std::to_string(p) + "," + std::to_string(q) + ")";
    f.source = spine_tree(repeat("1", p) + repeat("0", q));
    f.target = spine_tree(repeat("0", q) + repeat("1", p));
    f.bound = p + q + std::min(p, q) - 2;
    f.kind = BoundKind::exact;
    return f;
}

FamilyInstance tricomb(int p) {
    if (p < 1) throw std::invalid_argument("tricomb requires p >= 1");
    FamilyInstance f;
    f.tag = "tricomb(" + std::to_string(p) + ")";
    f.source = spine_tree(repeat("1", p) + repeat("0", p) + repeat("1", p));
    f.target = spine_tree(repeat("0", p) + repeat("10", p));
    f.bound = 5LL * p - 4;
    f.kind = BoundKind::exact; // the counting argument is sharp here
    f.collapse_i = LabelSet::interval(p + 2, 2 * p + 1);
    f.collapse_j = LabelSet::interval(2 * p + 3, 3 * p + 1);
    return f;
}

FamilyInstance multicomb(int m, int p) {
    if (m < 1 || p < 1) throw std::invalid_argument("multicomb requires m, p >= 1");
    FamilyInstance f;
    f.tag = "multicomb(" + std::to_string(m) + "," + std::to_string(p) + ")";
    f.source = spine_tree(repeat(repeat("1", p) + repeat("0", p), m));
    f.target = spine_tree(repeat("0", p) + repeat("10", (m - 1) * p) + repeat("1", p));
    f.bound = 4LL * m * p - 3LL * m - p + 1;
    f.kind = BoundKind::lower;
    if (m >= 2) {
        f.collapse_i = LabelSet::interval((m - 1) * p + 2, (m + 1) * p + 1);
        LabelSet j = LabelSet::interval(1, (m - 2) * p);
        j.add_interval((m + 1) * p + 3, 2 * m * p + 1);
        f.collapse_j = j;
    }
    return f;
}

FamilyInstance zigzag(int m) {
    if (m < 0) throw std::invalid_argument("zigzag requires m >= 0");
    FamilyInstance f;
    f.tag = "zigzag(" + std::to_string(m) + ")";
    f.source = spine_tree("1" + repeat("10", m) + "0");
    f.target = spine_tree("0" + repeat("01", m) + "1");
    f.bound = 3LL * m + 1;
    f.kind = BoundKind::exact;
    if (m >= 2) {
        f.collapse_i = LabelSet::of({m, m + 1, m + 3, m + 4});
        LabelSet j = LabelSet::interval(1, m - 2);
        j.add_interval(m + 6, 2 * m + 3);
        f.collapse_j = j;
    }
    return f;
}

FamilyInstance conjecture_pair(int n) {
    if (n < 7) throw std::invalid_argument("conjecture pair requires n >= 7");
    FamilyInstance f;
    f.tag = "conjecture(" + std::to_string(n) + ")";
    if (n % 2 == 1) {
        int p = (n + 1) / 2;
        f.source = spine_tree("111" + repeat("01", p - 3) + "00");
        f.target = spine_tree("000" + repeat("10", p - 3) + "11");
    } else {
        int p = n / 2;
        f.source = spine_tree("111" + repeat("01", p - 3) + "000");
        f.target = spine_tree("000" + repeat("10", p - 3) + "111");
    }
    f.bound = 2LL * n - 6;
    f.kind = BoundKind::conjectured_exact;
    return f;
}

LinkPair tricomb_link(int p) {
    if (p < 1) throw std::invalid_argument("tricomb link requires p >= 1");
    LinkPair l;
    l.source = spine_tree(repeat("1", p) + "0" + repeat("1", p));
    l.target = spine_tree(repeat("01", p) + "0");
    l.counted = LabelSet::interval(p + 2, 2 * p + 1);
    l.bound = 2LL * p - 2;
    return l;
}

LinkPair multicomb_link(int p) {
    if (p < 1) throw std::invalid_argument("multicomb link requires p >= 1");
    LinkPair l;
    l.source = spine_tree(repeat("1", p) + "0" + repeat("1", p) + repeat("0", p));
    l.target = spine_tree("0" + repeat("10", p) + repeat("1", p));
    l.counted = LabelSet::interval(p + 2, 3 * p + 1);
    l.bound = 4LL * p - 3;
    return l;
}

} // namespace rotdist
