#include "fancob/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "fancob/io.hpp"

namespace fancob {

namespace {

std::string ray_list(const std::vector<Ray>& rays) {
    if (rays.empty()) return "-";
    std::string s;
    for (const auto& r : rays) s += (s.empty() ? "" : " ") + to_string(r);
    return s;
}

std::string keys(const CollapseGraph& g, const std::vector<std::size_t>& idx, const char* sep) {
    std::string s;
    for (auto i : idx) s += (s.empty() ? "" : sep) + to_string(g.nodes[i].key);
    return s;
}

void print_report(std::ostream& out, const ValidationReport& report) {
    if (report.ok()) {
        out << "ok\n";
        return;
    }
    for (const auto& v : report.violations) out << "FAIL " << v.check << ": " << v.detail << '\n';
}

void print_rows(std::ostream& out, const std::vector<CircuitRow>& rows) {
    out << "rows: " << rows.size() << '\n';
    for (const auto& r : rows) {
        out << to_string(r.cone) << "  " << to_string(r.cls) << '\n';
        if (r.circuit) {
            out << "  circuit " << to_string(r.circuit->rays) << "  relation " << format_vector(r.circuit->relation)
                << '\n';
            out << "  POS " << ray_list(r.circuit->positive) << "  NEG " << ray_list(r.circuit->negative) << '\n';
        }
        out << "  LNK " << ray_list(r.link) << '\n';
    }
}

void print_fan(std::ostream& out, const Fan& f, const char* indent) {
    for (const auto& c : f.max_cones()) out << indent << to_string(c) << '\n';
}

void warn(std::ostream& err, const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) err << "warning: " << w << '\n';
}

struct Options {
    bool json = false;
    std::string path;
    std::string kind = "auto";
    std::string bottom;
    std::string top;
    std::string dot;
    bool elide_identity = false;
    std::string centers;
    std::string output;
    std::string demo;
};

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
    const Json doc = read_json_file(o.path);
    const bool cobordism = o.kind == "cobordism" || (o.kind == "auto" && doc.is_object() && doc.contains("base_dim"));
    ValidationReport report;
    Json extra;
    if (cobordism) {
        CobordismDocument d = cobordism_from_json(doc);
        warn(err, d.warnings);
        if (!o.bottom.empty()) d.bottom = load_fan(o.bottom).fan;
        if (!o.top.empty()) d.top = load_fan(o.top).fan;
        report = validate_cobordism(d.cobordism, d.bottom, d.top);
        extra = {{"kind", "cobordism"}, {"maximal_cones", d.cobordism.fan().max_cones().size()},
                 {"bottom", to_json(d.cobordism.bottom())}, {"top", to_json(d.cobordism.top())}};
        if (!o.json) {
            out << "cobordism: " << d.cobordism.fan().max_cones().size() << " maximal cones over dimension "
                << d.cobordism.base_dim() << '\n';
            out << "bottom:\n";
            print_fan(out, d.cobordism.bottom(), "  ");
            out << "top:\n";
            print_fan(out, d.cobordism.top(), "  ");
        }
    } else {
        const FanDocument d = fan_from_json(doc);
        warn(err, d.warnings);
        report = validate_fan(d.fan);
        extra = {{"kind", "fan"}, {"maximal_cones", d.fan.max_cones().size()}};
        if (!o.json)
            out << "fan: " << d.fan.max_cones().size() << " maximal cones in dimension " << d.fan.ambient_dim() << '\n';
    }
    if (o.json) {
        Json j = to_json(report);
        j.update(extra);
        out << j.dump(2) << '\n';
    } else {
        print_report(out, report);
    }
    return report.ok() ? kOk : kGeometricFailure;
}

int cmd_circuits(const Options& o, std::ostream& out, std::ostream& err) {
    const CobordismDocument d = load_cobordism(o.path);
    warn(err, d.warnings);
    const auto rows = circuit_table(d.cobordism);
    if (o.json) {
        Json j = Json::array();
        for (const auto& r : rows) j.push_back(to_json(r));
        out << Json{{"rows", std::move(j)}}.dump(2) << '\n';
    } else {
        print_rows(out, rows);
    }
    return kOk;
}

int cmd_collapse(const Options& o, std::ostream& out, std::ostream& err) {
    const CobordismDocument d = load_cobordism(o.path);
    warn(err, d.warnings);
    const CollapseGraph graph = circuit_graph(d.cobordism);
    const CollapseVerdict verdict = is_collapsible(graph);
    if (!o.dot.empty()) {
        std::ofstream f(o.dot);
        if (!f) fail(ErrorKind::ParseError, "cannot write " + o.dot);
        f << to_dot(graph, verdict);
    }
    if (o.json) {
        Json j = to_json(graph, verdict);
        if (!o.dot.empty()) j["artifacts"] = {o.dot};
        out << j.dump(2) << '\n';
    } else {
        out << "circuits: " << graph.nodes.size() << "  edges: " << graph.edges.size() << '\n';
        if (verdict.collapsible) {
            out << "collapsible: yes\n";
            for (auto i : verdict.witness) out << "  " << to_string(graph.nodes[i].key) << '\n';
        } else {
            out << "collapsible: no\ncycle: " << keys(graph, verdict.witness, " -> ") << " -> "
                << to_string(graph.nodes[verdict.witness.front()].key) << '\n';
        }
        if (!o.dot.empty()) out << "wrote " << o.dot << '\n';
    }
    return verdict.collapsible ? kOk : kGeometricFailure;
}

int cmd_factorize(const Options& o, std::ostream& out, std::ostream& err) {
    const CobordismDocument d = load_cobordism(o.path);
    warn(err, d.warnings);
    const auto steps = extract_factorization(d.cobordism, {!o.elide_identity});
    if (o.json) {
        out << Json{{"steps", to_json(steps)}}.dump(2) << '\n';
        return kOk;
    }
    out << "steps: " << steps.size() << '\n';
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& s = steps[i];
        out << i + 1 << ". " << to_string(s.kind);
        if (s.center) out << " at " << format_vector(s.center->gen());
        out << "  circuit " << to_string(s.circuit) << '\n';
        print_fan(out, s.result, "     ");
    }
    return kOk;
}

int cmd_build(const Options& o, std::ostream& out, std::ostream& err) {
    const FanDocument base = load_fan(o.path);
    warn(err, base.warnings);
    const auto centers = parse_centers(o.centers);
    for (const auto& c : centers)
        if (c.size() != base.fan.ambient_dim())
            fail(ErrorKind::DimensionMismatch, "center " + format_vector(c) + " does not live in dimension " +
                                                   std::to_string(base.fan.ambient_dim()));
    const Cobordism cob = build_cobordism(base.fan, centers);
    Fan top = base.fan;
    for (const auto& c : centers) top = star_subdivide(top, Ray::through(c));
    const Json doc = to_json(cob, base.fan, top);
    if (!o.output.empty()) write_json_file(o.output, doc);

    const auto rows = circuit_table(cob);
    if (o.json) {
        Json j = Json::array();
        for (const auto& r : rows) j.push_back(to_json(r));
        Json report{{"rows", std::move(j)}};
        if (o.output.empty())
            report["cobordism"] = doc;
        else
            report["artifacts"] = {o.output};
        out << report.dump(2) << '\n';
    } else {
        print_rows(out, rows);
        if (o.output.empty())
            out << doc.dump(2) << '\n';
        else
            out << "wrote " << o.output << '\n';
    }
    return kOk;
}

int cmd_demo(const Options& o, std::ostream& out, std::ostream&) {
    if (o.demo == "karu") {
        const KaruReport r = karu_counterexample();
        if (o.json) {
            out << to_json(r).dump(2) << '\n';
            return kOk;
        }
        out << "initial cones: " << r.initial_census.size() << '\n';
        for (const auto& c : r.initial_census)
            out << "  " << to_string(c.cone) << "  " << to_string(c.cls) << "  POS " << ray_list(c.positive)
                << "  LNK " << ray_list(c.link) << '\n';
        out << "collapsible before: " << (r.collapsible_before ? "yes" : "no") << '\n';
        out << "schedule:\n";
        for (const auto& e : r.schedule)
            out << "  " << to_string(e.center) << " = mid(" << to_string(e.positive) << ", " << to_string(e.link)
                << ")\n";
        out << "after the first two midrays: " << to_string(r.intermediate_cone.cone) << "  "
            << to_string(r.intermediate_cone.cls) << "  POS " << ray_list(r.intermediate_cone.positive) << "  NEG "
            << ray_list(r.intermediate_cone.negative) << '\n';
        out << "mixed cone: " << to_string(r.mixed_cone.cone) << "  " << to_string(r.mixed_cone.cls) << "  POS "
            << ray_list(r.mixed_cone.positive) << "  NEG " << ray_list(r.mixed_cone.negative) << '\n';
        out << "all pointing up after: " << (r.all_pointing_up_after ? "yes" : "no") << '\n';
        out << "boundary supports preserved: " << (r.boundary_supports_preserved ? "yes" : "no") << '\n';
        return kOk;
    }
    const NoncollapsibleReport r = noncollapsible_report();
    if (o.json) {
        out << to_json(r).dump(2) << '\n';
        return kOk;
    }
    out << "maximal cones: " << r.cobordism.fan().max_cones().size() << '\n';
    print_fan(out, r.cobordism.fan(), "  ");
    out << "validation: " << (r.validation.ok() ? "ok" : "failed") << '\n';
    out << "pi-nonsingular: " << (r.nonsingular.nonsingular ? "true" : "false") << '\n';
    out << "collapsible: " << (r.collapse.collapsible ? "true" : "false") << '\n';
    out << "cycle: " << keys(r.graph, r.collapse.witness, " -> ") << " -> "
        << to_string(r.graph.nodes[r.collapse.witness.front()].key) << '\n';
    return kOk;
}

int exit_code_for(ErrorKind k) {
    switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::ZeroVector:
    case ErrorKind::Overflow: return kInputError;
    default: return kGeometricFailure;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact tools for simplicial fans and their cobordisms", "fancob"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Print reports as JSON");

    auto* validate = app.add_subcommand("validate", "Validate a fan or cobordism document");
    validate->add_option("path", o.path, "Input document")->required();
    validate->add_option("--kind", o.kind, "fan, cobordism or auto")
        ->check(CLI::IsMember({"auto", "fan", "cobordism"}));
    validate->add_option("--bottom", o.bottom, "Expected bottom fan document");
    validate->add_option("--top", o.top, "Expected top fan document");

    auto* circuits = app.add_subcommand("circuits", "Circuit table of a cobordism");
    circuits->add_option("path", o.path, "Cobordism document")->required();

    auto* collapse = app.add_subcommand("collapse", "Collapsibility of a cobordism");
    collapse->add_option("path", o.path, "Cobordism document")->required();
    collapse->add_option("--dot", o.dot, "Write the circuit graph as DOT");

    auto* factorize = app.add_subcommand("factorize", "Blowup and blowdown steps of a collapsible cobordism");
    factorize->add_option("path", o.path, "Cobordism document")->required();
    factorize->add_flag("--elide-identity", o.elide_identity, "Drop identity steps");

    auto* build = app.add_subcommand("build", "Cobordism of a sequence of star subdivisions");
    build->add_option("path", o.path, "Fan document")->required();
    build->add_option("--centers", o.centers, "Centers such as \"(1,1,0);(0,1,1)\"")->required();
    build->add_option("-o,--output", o.output, "Write the cobordism document here");

    auto* demo = app.add_subcommand("demo", "Run a worked example");
    demo->add_option("name", o.demo, "karu or noncollapsible")
        ->required()
        ->check(CLI::IsMember({"karu", "noncollapsible"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*validate) return cmd_validate(o, out, err);
        if (*circuits) return cmd_circuits(o, out, err);
        if (*collapse) return cmd_collapse(o, out, err);
        if (*factorize) return cmd_factorize(o, out, err);
        if (*build) return cmd_build(o, out, err);
        return cmd_demo(o, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
}

}  // namespace fancob
