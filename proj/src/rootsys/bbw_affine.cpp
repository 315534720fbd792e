#include "bbwtilt/rootsys/bbw_affine.hpp"

#include "bbwtilt/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace bbwtilt::rootsys {

namespace {

constexpr int kMaxReflections = 12;

struct Leaf {
    Region region;
    AffineOutcome outcome;
};

struct Inconclusive {
    std::string reason;
};

void levi_precheck(const AffineWeight& w, const Region& dom) {
    const auto& d = w.doubled();
    const AffineForm checks[] = {d[1] - d[2], d[2] - d[3], d[2] + d[3]};
    for (const auto& f : checks) {
        if (!dom.with(-f - AffineForm{0, 0, 1}).empty())
            throw std::invalid_argument("affine weight " + w.to_string() + " is not Levi-dominant on its domain");
    }
}

// Stage 1: split off the zero sets of all twelve root pairings.
void split_singular(const AffineWeight& mu, std::vector<Region>& regular, std::vector<Leaf>& leaves,
                    const Region& start) {
    std::vector<Region> work{start};
    for (const auto& root : positive_roots()) {
        const AffineForm p = mu.pairing(root);
        std::vector<Region> next;
        for (const auto& r : work) {
            const auto s = r.signs(p);
            if (s.zero) {
                Region z = r.with(p).add(-p);
                leaves.push_back({std::move(z), AffineOutcome{}});
            }
            if (s.pos) next.push_back(s.neg || s.zero ? r.with(p - AffineForm{0, 0, 1}) : r);
            if (s.neg) next.push_back(s.pos || s.zero ? r.with(-p - AffineForm{0, 0, 1}) : r);
        }
        work = std::move(next);
    }
    regular = std::move(work);
}

// Stage 2: the reflection loop on a region where w is regular.
void reflect_loop(const AffineWeight& w, std::vector<int> word, const Region& r, std::vector<Leaf>& leaves) {
    AffineWeight cur = w;
    while (true) {
        const AffineWeight mu = cur + rho();
        int failing = 0;
        for (int i = 1; i <= 4 && failing == 0; ++i) {
            const AffineForm p = mu.pairing(simple_roots()[i - 1]);
            const auto s = r.signs(p);
            if (s.zero) throw InternalError("zero simple pairing on a regular region " + r.to_string());
            if (s.pos && s.neg) {
                reflect_loop(cur, word, r.with(p - AffineForm{0, 0, 1}), leaves);
                reflect_loop(cur, word, r.with(-p - AffineForm{0, 0, 1}), leaves);
                return;
            }
            if (s.neg) failing = i;
        }
        if (failing == 0) break;
        if (static_cast<int>(word.size()) == kMaxReflections)
            throw Inconclusive{"more than 12 symbolic reflections on region " + r.to_string()};
        cur = dotted_reflect(failing, cur);
        word.push_back(failing);
    }
    AffineOutcome out;
    out.singular = false;
    out.degree = static_cast<int>(word.size());
    out.dominant = cur;
    out.word = std::move(word);
    leaves.push_back({r, std::move(out)});
}

void cross_check(const AffineOutcome& o, const AffineWeight& w, std::int64_t kv, std::int64_t jv,
                 const BBWResult& concrete) {
    bool ok = false;
    if (o.singular) {
        ok = concrete.is_singular();
    } else if (!concrete.is_singular()) {
        const auto& reg = concrete.regular();
        ok = reg.degree == o.degree && reg.dominant == o.dominant.at(kv, jv);
    }
    if (!ok)
        throw InternalError("symbolic BBW disagrees with concrete BBW for " + w.to_string() + " at k=" +
                            std::to_string(kv) + ", j=" + std::to_string(jv));
}

} // namespace

std::string AffineOutcome::to_string() const {
    if (singular) return "singular";
    if (degree == 0) return "dominant, H^0 = V" + dominant.to_string();
    return "H^" + std::to_string(degree) + " = V" + dominant.to_string();
}

AffineResolution bbw_resolve_affine(const AffineWeight& w, std::int64_t kmax_concrete) {
    const Region dom(w.domain());
    AffineResolution res;
    res.threshold_k = w.domain().kmin;
    if (dom.empty()) return res;
    levi_precheck(w, dom);

    std::vector<Leaf> leaves;
    try {
        std::vector<Region> regular;
        split_singular(w + rho(), regular, leaves, dom);
        for (const auto& r : regular) reflect_loop(w, {}, r, leaves);
    } catch (const Inconclusive& e) {
        res.inconclusive = true;
        res.reason = e.reason;
        return res;
    }

    for (auto& leaf : leaves) {
        if (leaf.region.bounded()) {
            for (auto [kv, jv] : leaf.region.lattice_points()) {
                auto concrete = bbw_resolve(w.at(kv, jv));
                cross_check(leaf.outcome, w, kv, jv, concrete);
                res.points.push_back({kv, jv, std::move(concrete)});
            }
            continue;
        }
        Region probe = leaf.region.with({-1, 0, kmax_concrete});
        if (w.domain().has_j) probe.add({0, -1, w.domain().jmin + kmax_concrete});
        for (auto [kv, jv] : probe.lattice_points()) cross_check(leaf.outcome, w, kv, jv, bbw_resolve(w.at(kv, jv)));
        res.regions.push_back({leaf.region.simplified(), std::move(leaf.outcome)});
    }

    std::sort(res.points.begin(), res.points.end(),
              [](const PointOutcome& a, const PointOutcome& b) { return std::pair(a.k, a.j) < std::pair(b.k, b.j); });
    for (std::size_t i = 1; i < res.points.size(); ++i)
        if (res.points[i].k == res.points[i - 1].k && res.points[i].j == res.points[i - 1].j)
            throw InternalError("region split produced overlapping leaves for " + w.to_string());
    for (const auto& p : res.points) res.threshold_k = std::max(res.threshold_k, p.k + 1);
    return res;
}

} // namespace bbwtilt::rootsys
