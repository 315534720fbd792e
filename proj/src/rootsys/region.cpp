#include "bbwtilt/rootsys/region.hpp"

#include "bbwtilt/errors.hpp"

#include <boost/rational.hpp>

#include <algorithm>
#include <numeric>

namespace bbwtilt::rootsys {

namespace {

using Q = boost::rational<std::int64_t>;

struct Vertex {
    Q k;
    Q j;
};

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t floor_q(const Q& q) { return floor_div(q.numerator(), q.denominator()); }
std::int64_t ceil_q(const Q& q) { return -floor_div(-q.numerator(), q.denominator()); }

bool satisfies(const AffineForm& f, const Vertex& v) { return Q(f.k) * v.k + Q(f.j) * v.j + Q(f.c) >= 0; }

std::vector<Vertex> feasible_vertices(const std::vector<AffineForm>& cons) {
    std::vector<Vertex> out;
    for (std::size_t p = 0; p < cons.size(); ++p)
        for (std::size_t q = p + 1; q < cons.size(); ++q) {
            const auto& a = cons[p];
            const auto& b = cons[q];
            const std::int64_t det = a.k * b.j - b.k * a.j;
            if (det == 0) continue;
            Vertex v{Q(-a.c * b.j + b.c * a.j, det), Q(-a.k * b.c + b.k * a.c, det)};
            if (std::all_of(cons.begin(), cons.end(), [&](const AffineForm& f) { return satisfies(f, v); }))
                out.push_back(v);
        }
    return out;
}

AffineForm normalise(AffineForm f) {
    const std::int64_t g = std::gcd(f.k, f.j);
    if (g == 0) return f;
    return {f.k / g, f.j / g, floor_div(f.c, g)};
}

void append_constraint(std::string& s, const AffineForm& f) {
    AffineForm lhs{f.k, f.j, 0};
    std::int64_t rhs = -f.c;
    // Prefer "k <= 4" over "-k >= -4" for single-variable constraints.
    const char* op = " >= ";
    if ((f.k <= 0 && f.j <= 0) && !(f.k == 0 && f.j == 0)) {
        lhs = -lhs;
        rhs = -rhs;
        op = " <= ";
    }
    if (!s.empty()) s += ", ";
    s += lhs.to_string() + op + std::to_string(rhs);
}

} // namespace

Region::Region(const ParamDomain& domain) : has_j_(domain.has_j) {
    add({1, 0, -domain.kmin});
    if (domain.kmax) add({-1, 0, *domain.kmax});
    if (domain.has_j) {
        add({0, 1, -domain.jmin});
    } else {
        add({0, 1, 0});
        add({0, -1, 0});
    }
}

Region& Region::add(const AffineForm& f) {
    const auto n = normalise(f);
    if (std::find(cons_.begin(), cons_.end(), n) == cons_.end()) cons_.push_back(n);
    return *this;
}

bool Region::contains(std::int64_t kv, std::int64_t jv) const noexcept {
    return std::all_of(cons_.begin(), cons_.end(), [&](const AffineForm& f) { return f.eval(kv, jv) >= 0; });
}

bool Region::rationally_empty() const {
    for (const auto& f : cons_)
        if (f.is_constant() && f.c < 0) return true;
    return feasible_vertices(cons_).empty();
}

bool Region::bounded() const {
    for (const auto& f : cons_) {
        if (f.is_constant()) continue;
        for (int s : {1, -1}) {
            const std::int64_t dk = s * f.j;
            const std::int64_t dj = -s * f.k;
            if (std::all_of(cons_.begin(), cons_.end(), [&](const AffineForm& g) { return g.k * dk + g.j * dj >= 0; }))
                return false;
        }
    }
    return true;
}

bool Region::empty() const {
    if (rationally_empty()) return true;
    // A pointed, unbounded, rationally nonempty region with normalised integer
    // constraints always has integer points: either its recession cone is
    // full-dimensional, or the region is eventually a strip between two
    // parallel primitive constraints whose integer gap is nonempty.
    if (!bounded()) return false;
    return lattice_points().empty();
}

std::vector<std::pair<std::int64_t, std::int64_t>> Region::lattice_points() const {
    if (!bounded()) throw InternalError("lattice_points on an unbounded region: " + to_string());
    std::vector<std::pair<std::int64_t, std::int64_t>> pts;
    for (const auto& f : cons_)
        if (f.is_constant() && f.c < 0) return pts;
    const auto verts = feasible_vertices(cons_);
    if (verts.empty()) return pts;
    std::int64_t k0 = floor_q(verts[0].k), k1 = ceil_q(verts[0].k);
    std::int64_t j0 = floor_q(verts[0].j), j1 = ceil_q(verts[0].j);
    for (const auto& v : verts) {
        k0 = std::min(k0, floor_q(v.k));
        k1 = std::max(k1, ceil_q(v.k));
        j0 = std::min(j0, floor_q(v.j));
        j1 = std::max(j1, ceil_q(v.j));
    }
    for (std::int64_t kv = k0; kv <= k1; ++kv)
        for (std::int64_t jv = j0; jv <= j1; ++jv)
            if (contains(kv, jv)) pts.emplace_back(kv, jv);
    return pts;
}

Region::SignSet Region::signs(const AffineForm& f) const {
    SignSet s;
    s.pos = !with(f - AffineForm{0, 0, 1}).empty();
    s.neg = !with(-f - AffineForm{0, 0, 1}).empty();
    s.zero = !with(f).add(-f).empty();
    return s;
}

Region Region::simplified() const {
    Region out = *this;
    for (std::size_t i = out.cons_.size(); i-- > 0;) {
        Region rest;
        rest.has_j_ = out.has_j_;
        for (std::size_t m = 0; m < out.cons_.size(); ++m)
            if (m != i) rest.cons_.push_back(out.cons_[m]);
        // Without the domain bounds the rest may not be pointed; keep those.
        bool pointed = false;
        for (std::size_t a = 0; a < rest.cons_.size() && !pointed; ++a)
            for (std::size_t b = a + 1; b < rest.cons_.size(); ++b)
                if (rest.cons_[a].k * rest.cons_[b].j != rest.cons_[b].k * rest.cons_[a].j) {
                    pointed = true;
                    break;
                }
        if (!pointed) continue;
        if (rest.with(-out.cons_[i] - AffineForm{0, 0, 1}).empty()) out.cons_ = std::move(rest.cons_);
    }
    return out;
}

std::string Region::to_string() const {
    std::string s;
    for (const auto& f : cons_) {
        if (!has_j_ && f.k == 0) continue;
        append_constraint(s, f);
    }
    return s.empty() ? "all" : s;
}

} // namespace bbwtilt::rootsys
