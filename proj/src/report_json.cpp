#include <stdexcept>

#include "permclass/json.hpp"

namespace permclass {

nlohmann::json to_json(const PowerSeries& s) {
    nlohmann::json out = nlohmann::json::array();
    for (const Rational& c : s.coefficients()) {
        out.push_back({c.get_num().get_str(), c.get_den().get_str()});
    }
    return out;
}

PowerSeries series_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("series JSON must be a non-empty array");
    std::vector<Rational> coeffs;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2) {
            throw std::invalid_argument("series JSON entries must be [numerator, denominator]");
        }
        Rational q(Integer(pair[0].get<std::string>()), Integer(pair[1].get<std::string>()));
        q.canonicalize();
        coeffs.push_back(q);
    }
    const int order = static_cast<int>(coeffs.size()) - 1;
    return PowerSeries(order, std::move(coeffs));
}

nlohmann::json to_json(const CountTable& t) {
    nlohmann::json basis = nlohmann::json::array();
    for (const Permutation& b : t.basis) basis.push_back(b.to_string());
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [n, c] : t.counts) counts[std::to_string(n)] = c.get_str();
    return {{"basis", basis}, {"source", t.source}, {"counts", counts}};
}

nlohmann::json to_json(const CheckResult& c) {
    nlohmann::json out{{"name", c.name},
                       {"status", c.status()},
                       {"expected", c.expected},
                       {"actual", c.actual},
                       {"scope", c.scope}};
    if (!c.details.empty()) out["details"] = c.details;
    return out;
}

std::string Report::to_json() const {
    nlohmann::json checks_json = nlohmann::json::array();
    for (const CheckResult& c : checks) checks_json.push_back(permclass::to_json(c));
    nlohmann::json out{{"checks", checks_json}, {"passed", all_passed()}};
    if (!notes.empty()) out["notes"] = notes;
    return out.dump(2);
}

}  // namespace permclass
