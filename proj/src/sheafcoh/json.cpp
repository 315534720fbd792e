#include "bbwtilt/sheafcoh/json.hpp"

namespace bbwtilt::sheafcoh {

Json weight_json(const Weight& w) {
    Json a = Json::array();
    for (const auto& s : w.coordinate_strings()) a.push_back(s);
    return a;
}

Json to_json(const CohomTable& t) {
    Json grades = Json::array();
    for (const auto& g : t.grades) {
        Json groups = Json::array();
        for (const auto& grp : g.groups)
            groups.push_back({{"i", grp.i}, {"weight", weight_json(grp.weight)}, {"dim", grp.dim}, {"mult", grp.mult}});
        grades.push_back({{"k", g.k}, {"groups", groups}});
    }
    return {{"space", to_string(t.space)}, {"grades", grades}};
}

Json to_json(const VanishingCertificate& c) {
    Json regions = Json::array();
    for (const auto& r : c.regions)
        regions.push_back({{"family", r.family},
                           {"mult", r.mult},
                           {"region", r.region},
                           {"outcome", r.singular ? "singular" : "regular"},
                           {"degree", r.degree},
                           {"description", r.outcome}});
    Json flagged = Json::array();
    for (const auto& f : c.flagged) {
        Json p{{"k", f.k}};
        if (c.claim.domain.has_j) p["j"] = f.j;
        p["i"] = f.i;
        p["weight"] = weight_json(f.weight);
        p["dim"] = f.dim;
        p["mult"] = f.mult;
        p["expected"] = f.expected;
        flagged.push_back(std::move(p));
    }
    Json domain{{"kmin", c.claim.domain.kmin}};
    if (c.claim.domain.kmax) domain["kmax"] = *c.claim.domain.kmax;
    if (c.claim.domain.has_j) domain["jmin"] = c.claim.domain.jmin;
    return {{"family", c.claim.family.to_string()},
            {"cutoff", c.claim.cutoff},
            {"domain", domain},
            {"verdict", to_string(c.verdict)},
            {"threshold_k", c.threshold_k},
            {"finite_points", c.finite_points},
            {"regions", regions},
            {"flagged", flagged},
            {"failures", c.failures}};
}

} // namespace bbwtilt::sheafcoh
