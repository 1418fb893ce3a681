#pragma once

// JSON encodings of library results (schema "edgemetric/1"). Needs
// nlohmann/json on the include path; the rest of the library does not.

#include "arith.hpp"
#include "hilbert.hpp"
#include "metrics.hpp"
#include "oracle.hpp"
#include "orbits.hpp"

#include <json.hpp>

#include <string>

namespace edgemetric {

using json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "edgemetric/1";

inline json to_json(const metric_value& v, unsigned precision = 6) {
    return json{{"raw", v.raw.str()},
                {"normalized", to_fraction_string(v.normalized)},
                {"decimal", to_decimal_string(v.normalized, precision)},
                {"m", v.m},
                {"n", v.n}};
}

inline json to_json(const orbit_decomposition& d) {
    json orbits = json::array();
    for (const auto& o : d.orbits) {
        orbits.push_back({{"nodes", o.nodes}, {"kind", to_string(o.kind)}, {"length", o.length()}});
    }
    auto histogram = [](const std::map<std::size_t, std::size_t>& h) {
        json out = json::object();
        for (const auto& [m, count] : h) {
            out[std::to_string(m)] = count;
        }
        return out;
    };
    json geq = json::object();
    for (std::size_t k = 2; k <= 6; ++k) {
        geq[std::to_string(k)] = d.stats.lambda_geq(k);
    }
    return json{{"orbits", std::move(orbits)},
                {"lambda", histogram(d.stats.lambda)},
                {"theta", histogram(d.stats.theta)},
                {"lambda_geq", std::move(geq)},
                {"symmetric_difference", d.stats.differing_contacts()}};
}

inline json to_json(const hilbert_table& t) {
    json values = json::array();
    for (const auto& h : t.values) {
        values.push_back(h.str());
    }
    return json{{"n", t.n}, {"values", std::move(values)}};
}

inline json to_json(const oracle_report& r) {
    json checked = json::array();
    for (const auto& e : r.checked) {
        checked.push_back({{"quantity", e.quantity}, {"fast", e.fast}, {"oracle", e.oracle}, {"agree", e.agree}});
    }
    json skipped = json::array();
    for (const auto& s : r.skipped) {
        skipped.push_back({{"quantity", s.quantity}, {"reason", s.reason}});
    }
    return json{{"all_agree", r.all_agree()},
                {"checked", std::move(checked)},
                {"skipped", std::move(skipped)},
                {"budget_used",
                 {{"monomials_enumerated", r.monomials_enumerated},
                  {"path_steps", r.path_steps},
                  {"group_elements", r.group_elements}}}};
}

} // namespace edgemetric
