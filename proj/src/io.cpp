#include "fancob/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace fancob {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { fail(ErrorKind::ParseError, msg); }

const Json& member(const Json& doc, const char* key) {
    if (!doc.is_object()) parse_fail("expected a JSON object");
    auto it = doc.find(key);
    if (it == doc.end()) parse_fail(std::string("missing key \"") + key + "\"");
    return *it;
}

std::int64_t as_integer(const Json& j, const std::string& where) {
    if (j.is_number_unsigned()) {
        const auto u = j.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
            parse_fail(where + ": integer out of range");
        return static_cast<std::int64_t>(u);
    }
    if (!j.is_number_integer()) parse_fail(where + ": expected an integer, got " + j.dump());
    return j.get<std::int64_t>();
}

IntVector as_vector(const Json& j, Eigen::Index dim, const std::string& where) {
    if (!j.is_array()) parse_fail(where + ": expected an array");
    if (static_cast<Eigen::Index>(j.size()) != dim)
        parse_fail(where + ": expected " + std::to_string(dim) + " entries, got " + std::to_string(j.size()));
    IntVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = as_integer(j[static_cast<std::size_t>(i)], where);
    return v;
}

/// Reads rays and max_cones; rays are normalized to their primitive generators.
Fan read_cones(const Json& doc, Eigen::Index dim, std::vector<std::string>& warnings) {
    const Json& rays_doc = member(doc, "rays");
    const Json& cones_doc = member(doc, "max_cones");
    if (!rays_doc.is_array()) parse_fail("\"rays\" must be an array");
    if (!cones_doc.is_array()) parse_fail("\"max_cones\" must be an array");

    std::vector<Ray> rays;
    for (std::size_t i = 0; i < rays_doc.size(); ++i) {
        const std::string where = "ray " + std::to_string(i);
        const IntVector v = as_vector(rays_doc[i], dim, where);
        if (v.isZero()) parse_fail(where + " is zero");
        if (!is_primitive(v))
            warnings.push_back(where + " " + format_vector(v) + " normalized to " + format_vector(primitive(v)));
        rays.push_back(Ray::through(v));
    }

    std::vector<SimplicialCone> cones;
    for (std::size_t i = 0; i < cones_doc.size(); ++i) {
        const std::string where = "cone " + std::to_string(i);
        const Json& c = cones_doc[i];
        if (!c.is_array() || c.empty()) parse_fail(where + ": expected a nonempty array of ray indices");
        std::vector<Ray> members;
        for (const auto& idx : c) {
            const auto k = as_integer(idx, where);
            if (k < 0 || k >= static_cast<std::int64_t>(rays.size()))
                parse_fail(where + ": ray index " + std::to_string(k) + " out of range");
            members.push_back(rays[static_cast<std::size_t>(k)]);
        }
        try {
            cones.emplace_back(std::move(members));
        } catch (const Error& e) {
            parse_fail(where + ": " + e.what());
        }
    }
    return Fan(dim, std::move(cones));
}

Eigen::Index read_dim(const Json& doc, const char* key, std::int64_t min) {
    const auto d = as_integer(member(doc, key), std::string("\"") + key + "\"");
    if (d < min) parse_fail(std::string("\"") + key + "\" must be at least " + std::to_string(min));
    return static_cast<Eigen::Index>(d);
}

Json cones_json(const std::vector<SimplicialCone>& cones) {
    Json out = Json::array();
    for (const auto& c : cones) out.push_back(to_json(c));
    return out;
}

Json census_json(const std::vector<ConeCensus>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) out.push_back(to_json(r));
    return out;
}

Json key_json(const CircuitKey& key) { return to_json(key); }

}  // namespace

FanDocument fan_from_json(const Json& doc) {
    FanDocument out{Fan(0), {}};
    const Eigen::Index d = read_dim(doc, "dim", 1);
    out.fan = read_cones(doc, d, out.warnings);
    return out;
}

CobordismDocument cobordism_from_json(const Json& doc) {
    std::vector<std::string> warnings;
    const Eigen::Index d = read_dim(doc, "base_dim", 1);
    Fan lifted = read_cones(doc, d + 1, warnings);
    auto expectation = [&](const char* key) -> std::optional<Fan> {
        auto it = doc.find(key);
        if (it == doc.end()) return std::nullopt;
        FanDocument f = fan_from_json(*it);
        if (f.fan.ambient_dim() != d) parse_fail(std::string("\"") + key + "\" fan has the wrong dimension");
        for (auto& w : f.warnings) warnings.push_back(std::string(key) + ": " + w);
        return f.fan;
    };
    std::optional<Fan> bottom = expectation("bottom");
    std::optional<Fan> top = expectation("top");
    try {
        return {Cobordism(std::move(lifted)), std::move(bottom), std::move(top), std::move(warnings)};
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError) throw;
        parse_fail(e.what());
    }
}

Json to_json(const IntVector& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i).value());
    return out;
}

Json to_json(const Ray& r) { return to_json(r.gen()); }

Json to_json(const std::vector<Ray>& rays) {
    Json out = Json::array();
    for (const auto& r : rays) out.push_back(to_json(r));
    return out;
}

Json to_json(const SimplicialCone& c) { return to_json(c.rays()); }

namespace {

Json cones_document(const Fan& f) {
    const auto rays = f.rays();
    Json rays_doc = Json::array();
    for (const auto& r : rays) rays_doc.push_back(to_json(r));
    Json cones_doc = Json::array();
    for (const auto& c : f.max_cones()) {
        Json idx = Json::array();
        for (const auto& r : c.rays())
            idx.push_back(std::lower_bound(rays.begin(), rays.end(), r) - rays.begin());
        cones_doc.push_back(std::move(idx));
    }
    return Json{{"rays", std::move(rays_doc)}, {"max_cones", std::move(cones_doc)}};
}

}  // namespace

Json to_json(const Fan& f) {
    Json out{{"dim", f.ambient_dim()}};
    out.update(cones_document(f));
    return out;
}

Json to_json(const Cobordism& cob, const std::optional<Fan>& bottom, const std::optional<Fan>& top) {
    Json out{{"base_dim", cob.base_dim()}};
    out.update(cones_document(cob.fan()));
    if (bottom) out["bottom"] = to_json(*bottom);
    if (top) out["top"] = to_json(*top);
    return out;
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) parse_fail("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        parse_fail(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const Json& doc) {
    std::ofstream out(path);
    if (!out) parse_fail("cannot write " + path.string());
    out << doc.dump(2) << '\n';
}

FanDocument load_fan(const std::filesystem::path& path) { return fan_from_json(read_json_file(path)); }

CobordismDocument load_cobordism(const std::filesystem::path& path) { return cobordism_from_json(read_json_file(path)); }

std::vector<IntVector> parse_centers(const std::string& text) {
    std::vector<IntVector> out;
    std::stringstream all(text);
    std::string item;
    while (std::getline(all, item, ';')) {
        const auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        const auto last = item.find_last_not_of(" \t");
        const std::string t = item.substr(first, last - first + 1);
        if (t.size() < 2 || t.front() != '(' || t.back() != ')') parse_fail("center \"" + t + "\" is not a (a,b,...) tuple");
        std::vector<std::int64_t> entries;
        std::stringstream body(t.substr(1, t.size() - 2));
        std::string num;
        while (std::getline(body, num, ',')) {
            std::size_t used = 0;
            long long x = 0;
            try {
                x = std::stoll(num, &used);
            } catch (const std::exception&) {
                parse_fail("center \"" + t + "\": \"" + num + "\" is not an integer");
            }
            if (num.find_first_not_of(" \t", used) != std::string::npos)
                parse_fail("center \"" + t + "\": \"" + num + "\" is not an integer");
            entries.push_back(x);
        }
        if (entries.empty()) parse_fail("center \"" + t + "\" is empty");
        IntVector v(static_cast<Eigen::Index>(entries.size()));
        for (std::size_t i = 0; i < entries.size(); ++i) v(static_cast<Eigen::Index>(i)) = entries[i];
        out.push_back(std::move(v));
    }
    return out;
}

Json to_json(const ValidationReport& report) {
    Json violations = Json::array();
    for (const auto& v : report.violations) violations.push_back({{"check", v.check}, {"detail", v.detail}});
    return {{"ok", report.ok()}, {"violations", std::move(violations)}};
}

Json to_json(const ConeCensus& row) {
    return {{"cone", to_json(row.cone)},
            {"class", std::string(to_string(row.cls))},
            {"positive", to_json(row.positive)},
            {"negative", to_json(row.negative)},
            {"link", to_json(row.link)}};
}

Json to_json(const Circuit& c) {
    return {{"rays", to_json(c.rays)},
            {"relation", to_json(c.relation)},
            {"positive", to_json(c.positive)},
            {"negative", to_json(c.negative)}};
}

std::vector<CircuitRow> circuit_table(const Cobordism& cob) {
    std::vector<CircuitRow> rows;
    for (const auto& sigma : cob.fan().max_cones()) {
        if (sigma.dim() != cob.fan().ambient_dim()) continue;
        CircuitRow row{sigma, ConeClass::Independent, std::nullopt, sigma.rays()};
        if (auto cc = circuit_of(sigma)) {
            row.cls = class_of(cc->circuit);
            row.circuit = std::move(cc->circuit);
            row.link = std::move(cc->link);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const CircuitRow& row) {
    return {{"cone", to_json(row.cone)},
            {"class", std::string(to_string(row.cls))},
            {"circuit", row.circuit ? to_json(*row.circuit) : Json(nullptr)},
            {"link", to_json(row.link)}};
}

Json to_json(const CollapseGraph& graph, const CollapseVerdict& verdict) {
    Json nodes = Json::array();
    for (const auto& n : graph.nodes)
        nodes.push_back({{"circuit", key_json(n.key)},
                         {"class", std::string(to_string(n.cls))},
                         {"positive", to_json(n.circuit.positive)},
                         {"negative", to_json(n.circuit.negative)},
                         {"star", cones_json(n.star)}});
    Json edges = Json::array();
    for (auto [a, b] : graph.edges) edges.push_back({a, b});
    Json witness = Json::array();
    for (auto i : verdict.witness) witness.push_back(key_json(graph.nodes[i].key));
    return {{"collapsible", verdict.collapsible},
            {verdict.collapsible ? "order" : "cycle", std::move(witness)},
            {"nodes", std::move(nodes)},
            {"edges", std::move(edges)}};
}

Json to_json(const std::vector<FactorStep>& steps) {
    Json out = Json::array();
    for (const auto& s : steps)
        out.push_back({{"kind", std::string(to_string(s.kind))},
                       {"center", s.center ? to_json(*s.center) : Json(nullptr)},
                       {"circuit", key_json(s.circuit)},
                       {"fan", to_json(s.result)}});
    return out;
}

Json to_json(const KaruReport& r) {
    Json basis = Json::array();
    for (Eigen::Index j = 0; j < r.basis.cols(); ++j) basis.push_back(to_json(IntVector(r.basis.col(j))));
    Json order = Json::array();
    for (const auto& k : r.collapse_order) order.push_back(key_json(k));
    Json schedule = Json::array();
    for (const auto& e : r.schedule)
        schedule.push_back({{"source", to_json(e.source)},
                            {"positive", to_json(e.positive)},
                            {"link", to_json(e.link)},
                            {"center", to_json(e.center)}});
    return {{"basis", std::move(basis)},
            {"cobordism", to_json(r.cobordism)},
            {"initial_census", census_json(r.initial_census)},
            {"collapsible_before", r.collapsible_before},
            {"collapse_order", std::move(order)},
            {"schedule", std::move(schedule)},
            {"intermediate_cone", to_json(r.intermediate_cone)},
            {"mixed_cone", to_json(r.mixed_cone)},
            {"all_pointing_up_after", r.all_pointing_up_after},
            {"boundary_supports_preserved", r.boundary_supports_preserved},
            {"final_census", census_json(census(r.subdivided))}};
}

Json to_json(const NoncollapsibleReport& r) {
    return {{"cobordism", to_json(r.cobordism, r.cobordism.bottom(), r.cobordism.top())},
            {"validation", to_json(r.validation)},
            {"pi_nonsingular", r.nonsingular.nonsingular},
            {"graph", to_json(r.graph, r.collapse)}};
}

std::string to_dot(const CollapseGraph& graph, const CollapseVerdict& verdict) {
    std::set<std::pair<std::size_t, std::size_t>> cycle;
    if (!verdict.collapsible && !verdict.witness.empty())
        for (std::size_t i = 0; i < verdict.witness.size(); ++i)
            cycle.emplace(verdict.witness[i], verdict.witness[(i + 1) % verdict.witness.size()]);

    auto list = [](const std::vector<Ray>& rays) {
        std::string s;
        for (const auto& r : rays) s += " " + to_string(r);
        return s;
    };
    std::ostringstream os;
    os << "digraph circuits {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < graph.nodes.size(); ++i)
        os << "  n" << i << " [label=\"POS" << list(graph.nodes[i].circuit.positive) << "\\nNEG"
           << list(graph.nodes[i].circuit.negative) << "\"];\n";
    for (auto [a, b] : graph.edges) {
        os << "  n" << a << " -> n" << b;
        if (cycle.count({a, b})) os << " [color=red, penwidth=2]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace fancob
