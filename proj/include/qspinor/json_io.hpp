#pragma once

#include "qspinor/duality.hpp"
#include "qspinor/report.hpp"

#include <json.hpp>

namespace qspinor {

nlohmann::json ratq_to_json(const RatQ& a);
RatQ ratq_from_json(const nlohmann::json& j);

nlohmann::json spinor_to_json(const SpinorVector& v);
SpinorVector spinor_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const AlgebraElement& a);

nlohmann::json report_to_json(const Report& rep);

nlohmann::json fischer_to_json(const FischerComponents& fc);

}  // namespace qspinor
