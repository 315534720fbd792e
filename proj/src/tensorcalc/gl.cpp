#include "bbwtilt/tensorcalc/gl.hpp"

#include "bbwtilt/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace bbwtilt::tensorcalc {

namespace {

using Partition = IntVec4;

struct LRState {
    const Partition& mu;
    GLMultiset& out;
    // n[r][l]: boxes labelled l in row r
    std::int64_t n[4][4] = {};
};

bool lattice_ok(const LRState& s, int l) {
    // Reading right to left, top to bottom: the l+1's of row r are read before
    // its l's, so cum_{l+1}(<= r) <= cum_l(< r) for every row.
    if (l == 0) return true;
    std::int64_t prev = 0, cur = 0;
    for (int r = 0; r < 4; ++r) {
        cur += s.n[r][l];
        if (cur > prev) return false;
        prev += s.n[r][l - 1];
    }
    return true;
}

void place_rows(LRState& s, int l, int r, std::int64_t left, const Partition& before, Partition& after);

void add_label(LRState& s, int l, const Partition& shape) {
    if (l == 4 || s.mu[l] == 0) {
        s.out[GLWeight(shape)] += 1;
        return;
    }
    Partition after = shape;
    place_rows(s, l, 0, s.mu[l], shape, after);
}

// Distributes `left` boxes labelled l over rows r..3 as a horizontal strip on `before`.
void place_rows(LRState& s, int l, int r, std::int64_t left, const Partition& before, Partition& after) {
    if (r == 4) {
        if (left != 0) return;
        if (!lattice_ok(s, l)) return;
        add_label(s, l + 1, after);
        return;
    }
    // A label l box sits in row >= l; strips may not stack two boxes in one column.
    const std::int64_t cap = r == 0 ? left : std::min(left, before[r - 1] - before[r]);
    const std::int64_t hi = r < l ? 0 : cap;
    for (std::int64_t m = 0; m <= hi; ++m) {
        s.n[r][l] = m;
        after[r] = before[r] + m;
        place_rows(s, l, r + 1, left - m, before, after);
    }
    s.n[r][l] = 0;
    after[r] = before[r];
}

GLMultiset lr_partitions(const Partition& lambda, const Partition& mu) {
    GLMultiset out;
    LRState s{mu, out};
    add_label(s, 0, lambda);
    return out;
}

} // namespace

GLWeight::GLWeight(const IntVec4& parts) : p_(parts) {
    if (!(p_[0] >= p_[1] && p_[1] >= p_[2] && p_[2] >= p_[3]))
        throw std::invalid_argument("GL weight must be weakly decreasing: (" + std::to_string(p_[0]) + "," +
                                    std::to_string(p_[1]) + "," + std::to_string(p_[2]) + "," +
                                    std::to_string(p_[3]) + ")");
}

std::string GLWeight::to_string() const {
    return "(" + std::to_string(p_[0]) + "," + std::to_string(p_[1]) + "," + std::to_string(p_[2]) + "," +
           std::to_string(p_[3]) + ")";
}

std::uint64_t gl_dim(const GLWeight& a) {
    __extension__ typedef __int128 i128;
    i128 num = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) num *= a[i] - a[j] + (j - i);
    if (num % 12 != 0) throw InternalError("GL dimension formula not integral for " + a.to_string());
    return static_cast<std::uint64_t>(num / 12);
}

Weight phi(const IntVec4& a) {
    return Weight::from_doubled({a[0] + a[1] + a[2] + a[3], a[0] + a[1] - a[2] - a[3], a[0] - a[1] + a[2] - a[3],
                                 a[0] - a[1] - a[2] + a[3]});
}

GLMultiset lr_decompose(const GLWeight& a, const GLWeight& b) {
    const std::int64_t ca = std::max<std::int64_t>(0, -a[3]);
    const std::int64_t cb = std::max<std::int64_t>(0, -b[3]);
    const GLWeight pa = a.shifted(ca);
    const GLWeight pb = b.shifted(cb);
    // Fewer boxes in the second factor means fewer strips to place.
    const bool swap = pb.size() > pa.size();
    const GLMultiset raw = swap ? lr_partitions(pb.parts(), pa.parts()) : lr_partitions(pa.parts(), pb.parts());
    GLMultiset out;
    for (const auto& [c, m] : raw) out[c.shifted(-ca - cb)] += m;
    return out;
}

GLMultiset lr_multiply(const GLMultiset& a, const GLWeight& b) {
    GLMultiset out;
    for (const auto& [c, m] : a)
        for (const auto& [d, n] : lr_decompose(c, b)) out[d] += m * n;
    return out;
}

} // namespace bbwtilt::tensorcalc
