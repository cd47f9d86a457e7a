#pragma once

#include <json.hpp>

#include "permclass/enumeration.hpp"
#include "permclass/series.hpp"
#include "permclass/verify.hpp"

namespace permclass {

/// Array of [numerator, denominator] decimal string pairs.
nlohmann::json to_json(const PowerSeries& s);
PowerSeries series_from_json(const nlohmann::json& j);

/// {"basis": [...], "source": "...", "counts": {"0": "1", ...}}
nlohmann::json to_json(const CountTable& t);

nlohmann::json to_json(const CheckResult& c);

}  // namespace permclass
