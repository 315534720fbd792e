#include "bbwtilt/sheafcoh/cohomology.hpp"

#include "bbwtilt/errors.hpp"
#include "bbwtilt/rootsys/bbw.hpp"
#include "bbwtilt/tensorcalc/decompose.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bbwtilt {

int max_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace sheafcoh {

namespace {

GradeCohom grade_cohomology(const BundleExpr& e, std::int64_t k) {
    GradeCohom g;
    g.k = k;
    for (const auto& [w, m] : tensorcalc::decompose(e)) {
        const auto r = rootsys::bbw_resolve(w);
        if (r.is_singular()) continue;
        const auto& reg = r.regular();
        // Distinct summands can resolve to the same group; merge them.
        bool merged = false;
        for (auto& grp : g.groups)
            if (grp.i == reg.degree && grp.weight == reg.dominant) {
                grp.mult += m;
                merged = true;
            }
        if (!merged) g.groups.push_back({reg.degree, reg.dominant, reg.dim, m});
    }
    std::sort(g.groups.begin(), g.groups.end(),
              [](const CohomGroup& a, const CohomGroup& b) { return std::tie(a.i, a.weight) < std::tie(b.i, b.weight); });
    return g;
}

} // namespace

std::string to_string(Space s) {
    switch (s) {
    case Space::Q6: return "q6";
    case Space::XPlus: return "xplus";
    case Space::XMinus: return "xminus";
    }
    return "?";
}

Space parse_space(const std::string& s) {
    if (s == "q6") return Space::Q6;
    if (s == "xplus") return Space::XPlus;
    if (s == "xminus") return Space::XMinus;
    throw ParseError("unknown space '" + s + "' (expected q6, xplus or xminus)");
}

std::uint64_t GradeCohom::dim(int i) const noexcept {
    std::uint64_t d = 0;
    for (const auto& g : groups)
        if (g.i == i) d += g.total();
    return d;
}

std::uint64_t CohomTable::dim(int i) const noexcept {
    std::uint64_t d = 0;
    for (const auto& g : grades) d += g.dim(i);
    return d;
}

std::uint64_t CohomTable::dim(std::int64_t k, int i) const noexcept {
    for (const auto& g : grades)
        if (g.k == k) return g.dim(i);
    return 0;
}

CohomTable cohomology_q6(const BundleExpr& e) {
    CohomTable t;
    t.space = Space::Q6;
    t.grades.push_back(grade_cohomology(e, 0));
    return t;
}

BundleExpr grade_expr(const BundleExpr& e, std::int64_t k) {
    return BundleExpr::sym(k) * BundleExpr::O(2 * k) * e;
}

CohomTable cohomology_total(const BundleExpr& e, Space side, std::int64_t kmax, Exec exec) {
    if (!e.is_concrete()) throw std::invalid_argument("cohomology_total needs a concrete expression");
    if (kmax < 0) throw std::invalid_argument("kmax must be non-negative");
    CohomTable t;
    t.space = side;
    t.grades.resize(static_cast<std::size_t>(kmax + 1));
    if (exec == Exec::Serial) {
        for (std::int64_t k = 0; k <= kmax; ++k) t.grades[static_cast<std::size_t>(k)] = grade_cohomology(grade_expr(e, k), k);
        return t;
    }
    // Exceptions may not cross the parallel region; carry the first one out.
    std::string error;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t k = 0; k <= kmax; ++k) {
        try {
            t.grades[static_cast<std::size_t>(k)] = grade_cohomology(grade_expr(e, k), k);
        } catch (const std::exception& ex) {
#pragma omp critical(bbwtilt_cohom_error)
            if (error.empty()) error = ex.what();
        }
    }
    if (!error.empty()) throw InternalError(error);
    return t;
}

std::string to_text(const CohomTable& t) {
    std::ostringstream os;
    os << "space " << to_string(t.space) << '\n';
    for (const auto& g : t.grades) {
        if (t.space != Space::Q6) os << "grade k=" << g.k << ":";
        if (g.groups.empty()) {
            os << (t.space == Space::Q6 ? "all cohomology vanishes" : " 0") << '\n';
            continue;
        }
        if (t.space != Space::Q6) os << '\n';
        for (const auto& grp : g.groups) {
            os << (t.space != Space::Q6 ? "  " : "") << "H^" << grp.i << ": V" << grp.weight.to_string();
            if (grp.mult != 1) os << "^" << grp.mult;
            os << "  dim " << grp.total() << '\n';
        }
    }
    return os.str();
}

} // namespace sheafcoh
} // namespace bbwtilt
