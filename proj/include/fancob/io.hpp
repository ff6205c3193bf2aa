#pragma once

// JSON documents for fans, cobordisms and reports, plus DOT export of circuit graphs.
//
// Fan document:        {"dim": d, "rays": [[...], ...], "max_cones": [[ray indices], ...]}
// Cobordism document:  {"base_dim": d, "rays": [[... d+1 entries], ...], "max_cones": [...],
//                       optional "bottom": fan document, optional "top": fan document}

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fancob/collapse.hpp"
#include "fancob/midray_lab.hpp"

namespace fancob {

using Json = nlohmann::ordered_json;

struct FanDocument {
    Fan fan;
    std::vector<std::string> warnings;
};

struct CobordismDocument {
    Cobordism cobordism;
    std::optional<Fan> bottom;
    std::optional<Fan> top;
    std::vector<std::string> warnings;
};

/// Throws ParseError on malformed input, including geometric construction errors
/// (dependent or repeated rays in a cone, vertical rays).
FanDocument fan_from_json(const Json& doc);
CobordismDocument cobordism_from_json(const Json& doc);

Json to_json(const Fan& f);
Json to_json(const Cobordism& cob, const std::optional<Fan>& bottom = std::nullopt,
             const std::optional<Fan>& top = std::nullopt);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& doc);
FanDocument load_fan(const std::filesystem::path& path);
CobordismDocument load_cobordism(const std::filesystem::path& path);

/// "(1,1,0);(0,1,1)" -> two vectors. Empty or blank text gives no vectors.
std::vector<IntVector> parse_centers(const std::string& text);

Json to_json(const IntVector& v);
Json to_json(const Ray& r);
Json to_json(const std::vector<Ray>& rays);
Json to_json(const SimplicialCone& c);
Json to_json(const ValidationReport& report);
Json to_json(const ConeCensus& row);
Json to_json(const Circuit& c);
Json to_json(const CollapseGraph& graph, const CollapseVerdict& verdict);
Json to_json(const std::vector<FactorStep>& steps);
Json to_json(const KaruReport& report);
Json to_json(const NoncollapsibleReport& report);

struct CircuitRow {
    SimplicialCone cone;
    ConeClass cls;
    std::optional<Circuit> circuit;
    std::vector<Ray> link;
};

/// One row per full-dimensional cone, in canonical cone order.
std::vector<CircuitRow> circuit_table(const Cobordism& cob);
Json to_json(const CircuitRow& row);

/// Plain directed graph; node labels list POS and NEG rays, edges on the witness cycle are red.
std::string to_dot(const CollapseGraph& graph, const CollapseVerdict& verdict);

}  // namespace fancob
