// JSON report schemas. Matrices render as compact row strings.
#pragma once

#include <json.hpp>

#include "t0net/characterization.hpp"
#include "t0net/digital_net.hpp"
#include "t0net/text_io.hpp"

namespace t0net {

inline nlohmann::json to_json(const TValueResult& r) {
    nlohmann::json j{{"m", r.m}, {"s", r.s}, {"t", r.t}};
    if (r.witness.empty())
        j["witness"] = nullptr;
    else
        j["witness"] = r.witness;
    return j;
}

inline nlohmann::json matrices_to_json(const std::vector<BitMatrix>& mats) {
    nlohmann::json arr = nlohmann::json::array();
    for (const BitMatrix& a : mats) arr.push_back(format_matrix_compact(a));
    return arr;
}

inline nlohmann::json to_json(const SearchReport& r) {
    return nlohmann::json{{"m", r.m},
                          {"found", matrices_to_json(r.found)},
                          {"orbit", matrices_to_json(r.orbit)},
                          {"equal_sets", r.equal_sets},
                          {"all_cubes_identity", r.all_cubes_identity},
                          {"primitive_members", matrices_to_json(r.primitive_members)},
                          {"candidates_scanned", r.candidates_scanned},
                          {"filter_pass", r.filter_pass},
                          {"elapsed_ms", r.elapsed_ms}};
}

}  // namespace t0net
