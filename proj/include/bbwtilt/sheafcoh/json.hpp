#pragma once

#include "bbwtilt/sheafcoh/cohomology.hpp"
#include "bbwtilt/sheafcoh/vanishing.hpp"

#include <json.hpp>

namespace bbwtilt::sheafcoh {

using Json = nlohmann::ordered_json;

/// ["-1/2","1/2","1/2","1/2"]
Json weight_json(const Weight& w);

/// {"space":..,"grades":[{"k":..,"groups":[{"i","weight","dim","mult"}]}]}
Json to_json(const CohomTable& t);

Json to_json(const VanishingCertificate& c);

} // namespace bbwtilt::sheafcoh
