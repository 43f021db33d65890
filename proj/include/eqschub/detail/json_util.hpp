#pragma once

#include "json.hpp"

#include "eqschub/presentation_ring.hpp"

namespace eqschub::detail {

using ordered_json = nlohmann::ordered_json;

// [{"nu": "2,1", "d": 0, "coeff": "T1 - T2"}, ...] in canonical key order.
inline ordered_json expansion_terms_json(const schubert_expansion& e) {
    ordered_json arr = ordered_json::array();
    for (const auto& [key, c] : e.terms()) {
        ordered_json t;
        t["nu"] = key.nu.str();
        t["d"] = key.d;
        t["coeff"] = c.str();
        arr.push_back(std::move(t));
    }
    return arr;
}

inline schubert_expansion expansion_from_terms(const ordered_json& arr) {
    if (!arr.is_array()) throw usage_error("expected an array of expansion terms");
    schubert_expansion e;
    for (const auto& t : arr) {
        const partition nu = partition::parse(t.at("nu").get<std::string>());
        const int d = t.at("d").get<int>();
        const poly c = poly::parse(t.at("coeff").get<std::string>());
        e.add({nu, d}, c);
    }
    return e;
}

} // namespace eqschub::detail
