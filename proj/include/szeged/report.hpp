// report.hpp - JSON serialization of indices, blocks and verdicts
//
// Exact rationals are always written as strings ("125/4" plus the decimal
// "31.25"), never as JSON numbers.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "szeged/blocks.hpp"
#include "szeged/indices.hpp"
#include "szeged/quarter_rational.hpp"
#include "szeged/theorems.hpp"

namespace szeged {

using Json = nlohmann::ordered_json;

inline Json to_json(QuarterRational r) {
    return Json{{"value", r.to_fraction_string()}, {"decimal", r.to_decimal_string()}};
}

inline Json to_json(const IndexReport& r) {
    Json j;
    j["wiener"] = r.wiener;
    j["szeged"] = r.szeged;
    j["revised_szeged"] = to_json(r.revised_szeged);
    j["szeged_vertex_sum"] = r.szeged_vertex_sum ? Json(*r.szeged_vertex_sum) : Json(nullptr);
    j["revised_szeged_vertex_sum"] =
        r.revised_szeged_vertex_sum ? to_json(*r.revised_szeged_vertex_sum) : Json(nullptr);
    j["difference_edge_form"] = r.difference_edge_form ? to_json(*r.difference_edge_form) : Json(nullptr);
    j["difference_vertex_form"] =
        r.difference_vertex_form ? to_json(*r.difference_vertex_form) : Json(nullptr);
    return j;
}

inline Json to_json(const TheoremVerdict& v) {
    Json j;
    j["claim"] = std::string(to_string(v.claim));
    j["status"] = std::string(to_string(v.status));
    j["lhs"] = to_json(v.lhs);
    j["rhs"] = to_json(v.rhs);
    j["predicted_equality"] = v.predicted_equality;
    j["witness"] = v.witness ? Json(*v.witness) : Json(nullptr);
    return j;
}

/// Blocks as {kind, vertices}; vertices are reported under `labels` when a
/// relabelling is given.
inline Json to_json(const BlockDecomposition& bd, const std::vector<std::uint64_t>* labels = nullptr) {
    Json blocks = Json::array();
    for (const Block& b : bd.blocks()) {
        Json vs = Json::array();
        for (Vertex v : b.vertices) vs.push_back(labels ? (*labels)[v] : std::uint64_t{v});
        blocks.push_back(Json{{"kind", to_string(b.kind)}, {"vertices", std::move(vs)}});
    }
    return blocks;
}

inline Json to_json(const EqualityOutlier& o) {
    return Json{{"id", o.id},
                {"sz_equals_2w", o.sz_equals_2w},
                {"revised_sz_equals_2w", o.revised_sz_equals_2w},
                {"description", o.description}};
}

}  // namespace szeged
