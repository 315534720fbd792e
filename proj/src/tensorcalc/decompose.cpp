#include "bbwtilt/tensorcalc/decompose.hpp"

#include "bbwtilt/errors.hpp"
#include "bbwtilt/rootsys/bbw.hpp"

#include <algorithm>
#include <stdexcept>

namespace bbwtilt::tensorcalc {

namespace {

using rootsys::AffineForm;

IntVec4 phi_doubled(const IntVec4& a) { return phi(a).doubled(); }

// GL content of the non-symbolic factors times (k,0,0,0), shifted back by k*e1.
std::map<IntVec4, std::int64_t> offsets_at(const BundleExpr& e, std::int64_t k) {
    GLMultiset content = gl_content(e.at(k, 0));
    std::map<IntVec4, std::int64_t> out;
    for (const auto& [c, m] : content) {
        IntVec4 o = c.parts();
        if (e.has_sym_k()) o[0] -= k;
        out[o] += m;
    }
    return out;
}

AffineWeight family(const IntVec4& offset, bool symbolic, const AffineForm& twist, const ParamDomain& dom) {
    const IntVec4 base = phi_doubled(offset);
    std::array<AffineForm, 4> d{};
    for (std::size_t i = 0; i < 4; ++i) d[i] = AffineForm{symbolic ? 1 : 0, 0, base[i]};
    d[0] = d[0] + twist * 2;
    return AffineWeight(d, dom);
}

} // namespace

GLMultiset gl_content(const BundleExpr& e) {
    if (!e.is_concrete()) throw std::invalid_argument("gl_content of a symbolic expression: " + e.to_string());
    GLMultiset acc{{GLWeight{}, 1}};
    for (const auto& a : e.atoms()) acc = lr_multiply(acc, a.gl);
    return acc;
}

Decomposition decompose(const BundleExpr& e) {
    if (!e.is_concrete()) throw std::invalid_argument("decompose needs a concrete expression: " + e.to_string());
    const std::int64_t t = e.total_twist().c;
    Decomposition out;
    std::uint64_t total_rank = 0;
    for (const auto& [c, m] : gl_content(e)) {
        const Weight w = phi(c) + Weight::integral(t, 0, 0, 0);
        if (!rootsys::is_levi_dominant(w)) throw InternalError("phi produced a non-Levi-dominant weight " + w.to_string());
        out[w] += m;
        total_rank += static_cast<std::uint64_t>(m) * rootsys::levi_rank(w);
    }
    if (total_rank != e.rank())
        throw InternalError("rank mismatch decomposing " + e.to_string() + ": " + std::to_string(total_rank) +
                            " != " + std::to_string(e.rank()));
    return out;
}

std::vector<AffineTerm> AffineDecomposition::at_k(std::int64_t k) const {
    if (auto it = low.find(k); it != low.end()) return it->second;
    if (stable.empty()) return {};
    const auto& dom = stable.front().weight.domain();
    if (dom.contains(k, dom.has_j ? dom.jmin : 0)) return stable;
    return {};
}

AffineDecomposition decompose_affine(const BundleExpr& e, ParamDomain domain) {
    using K = AffineDecomposition;
    if (e.uses_j()) domain.has_j = true;
    const AffineForm twist = e.total_twist();
    AffineDecomposition out;
    out.domain = domain;

    if (!e.has_sym_k()) {
        for (const auto& [o, m] : offsets_at(e, 0)) out.stable.push_back({family(o, false, twist, domain), m});
        out.first_stable_k = domain.kmin;
        return out;
    }

    const auto stable = offsets_at(e, K::kK0);
    if (offsets_at(e, K::kK0 + 1) != stable)
        throw StabilityFailure("GL offsets of " + e.to_string() + " differ between k=" + std::to_string(K::kK0) +
                               " and k=" + std::to_string(K::kK0 + 1));

    ParamDomain sdom = domain;
    sdom.kmin = std::max(domain.kmin, K::kK0);
    if (!domain.kmax || *domain.kmax >= sdom.kmin)
        for (const auto& [o, m] : stable) out.stable.push_back({family(o, true, twist, sdom), m});

    out.first_stable_k = K::kK0;
    const std::int64_t lo = std::max<std::int64_t>(domain.kmin, 0);
    for (std::int64_t k = K::kK0 - 1; k >= lo && offsets_at(e, k) == stable; --k) out.first_stable_k = k;

    const std::int64_t hi = domain.kmax ? std::min(*domain.kmax, K::kK0 - 1) : K::kK0 - 1;
    for (std::int64_t k = lo; k <= hi; ++k) {
        ParamDomain pinned = domain;
        pinned.kmin = k;
        pinned.kmax = k;
        const AffineForm tk{0, twist.j, twist.k * k + twist.c};
        auto& terms = out.low[k];
        for (const auto& [c, m] : gl_content(e.at(k, 0))) terms.push_back({family(c.parts(), false, tk, pinned), m});
    }
    return out;
}

} // namespace bbwtilt::tensorcalc
