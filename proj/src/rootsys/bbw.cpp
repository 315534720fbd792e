#include "bbwtilt/rootsys/bbw.hpp"

#include "bbwtilt/errors.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace bbwtilt::rootsys {

namespace {

__extension__ typedef __int128 i128;

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

// prod <w + rho, alpha> / prod <rho, alpha>, exact. All pairings of a
// (Levi-)dominant weight shifted by rho are positive, so no sign handling.
template <std::size_t N>
std::uint64_t dimension_product(const Weight& w, const std::array<IntVec4, N>& roots) {
    const Weight mu = w + rho();
    i128 num = 1;
    i128 den = 1;
    for (const auto& a : roots) {
        const auto p = pairing(mu, a);
        const auto q = pairing(rho(), a);
        if (__builtin_mul_overflow(num, static_cast<i128>(p), &num))
            throw std::overflow_error("dimension product overflow for " + w.to_string());
        den *= q;
    }
    if (num % den != 0) throw InternalError("dimension formula is not integral for " + w.to_string());
    const i128 q = num / den;
    if (q <= 0 || q > static_cast<i128>(UINT64_MAX))
        throw std::overflow_error("dimension out of range for " + w.to_string());
    return static_cast<std::uint64_t>(q);
}

} // namespace

bool is_dominant(const Weight& w) {
    const auto& d = w.doubled();
    return d[0] >= d[1] && d[1] >= d[2] && d[2] >= abs64(d[3]);
}

bool is_levi_dominant(const Weight& w) {
    const auto& d = w.doubled();
    return d[1] >= d[2] && d[2] >= abs64(d[3]);
}

Weight dotted_reflect(int i, const Weight& w) {
    const auto& d = w.doubled();
    switch (i) {
    case 1: return Weight::from_doubled({d[1] - 2, d[0] + 2, d[2], d[3]});
    case 2: return Weight::from_doubled({d[0], d[2] - 2, d[1] + 2, d[3]});
    case 3: return Weight::from_doubled({d[0], d[1], d[3] - 2, d[2] + 2});
    case 4: return Weight::from_doubled({d[0], d[1], -d[3] - 2, -d[2] - 2});
    default: throw std::out_of_range("simple reflection index must be 1..4, got " + std::to_string(i));
    }
}

bool is_singular(const Weight& w) {
    const auto mu = (w + rho()).doubled();
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b)
            if (abs64(mu[a]) == abs64(mu[b])) return true;
    return false;
}

std::uint64_t BBWResult::dim_at(int i) const noexcept {
    if (!regular_ || regular_->degree != i) return 0;
    return regular_->dim;
}

std::string BBWResult::to_string() const {
    if (!regular_) return "singular";
    std::ostringstream os;
    os << "H^" << regular_->degree << " = V" << regular_->dominant.to_string() << " (dim " << regular_->dim << ")";
    return os.str();
}

BBWResult bbw_resolve(const Weight& w) {
    if (!is_levi_dominant(w))
        throw std::invalid_argument("bbw_resolve needs a Levi-dominant weight, got " + w.to_string());
    if (is_singular(w)) return BBWResult::singular();

    Regular r;
    Weight cur = w;
    while (true) {
        const Weight mu = cur + rho();
        int failing = 0;
        for (int i = 1; i <= 4; ++i)
            if (pairing(mu, simple_roots()[i - 1]) < 0) {
                failing = i;
                break;
            }
        if (failing == 0) break;
        if (r.word.size() == 12) throw InternalError("BBW reflection loop exceeded 12 steps at " + w.to_string());
        cur = dotted_reflect(failing, cur);
        r.word.push_back(failing);
    }
    r.degree = static_cast<int>(r.word.size());
    r.dominant = cur;
    r.dim = weyl_dim_d4(cur);
    return BBWResult::regular(std::move(r));
}

std::uint64_t weyl_dim_d4(const Weight& w) {
    if (!is_dominant(w)) throw std::invalid_argument("weyl_dim_d4 needs a dominant weight, got " + w.to_string());
    return dimension_product(w, positive_roots());
}

std::uint64_t levi_rank(const Weight& w) {
    if (!is_levi_dominant(w))
        throw std::invalid_argument("levi_rank needs a Levi-dominant weight, got " + w.to_string());
    return dimension_product(w, levi_positive_roots());
}

Weight serre_dual_weight(const Weight& w) {
    const auto& d = w.doubled();
    return Weight::from_doubled({-d[0] - 12, d[1], d[2], -d[3]});
}

} // namespace bbwtilt::rootsys
