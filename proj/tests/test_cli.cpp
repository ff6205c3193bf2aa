#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "fancob/cli.hpp"
#include "fancob/io.hpp"
#include "random_fans.hpp"
#include "test_support.hpp"

using namespace fancob;
using namespace fancob::testing;

namespace {

const std::filesystem::path kData = FANCOB_DATA_DIR;

std::string fixture(const char* name) { return (kData / name).string(); }

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

int count(const std::string& text, const std::string& needle) {
    int n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::filesystem::path scratch(const char* name) {
    const auto dir = std::filesystem::temp_directory_path() / "fancob_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("parse_centers") {
    const auto c = parse_centers("(1,1,0);(0,1,1); (1, 1, 1)");
    REQUIRE(c.size() == 3);
    CHECK(c[2] == iv({1, 1, 1}));
    CHECK(parse_centers("").empty());
    CHECK(parse_centers("  ").empty());
    CHECK(parse_centers("(-2,3)")[0] == iv({-2, 3}));
    for (const char* bad : {"1,1,0", "(1,,0)", "(1,x)", "()", "(1,1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_centers(bad), Error);
    }
}

TEST_CASE("fan documents") {
    SUBCASE("imprimitive rays are normalized with a warning") {
        const auto d = load_fan(fixture("imprimitive.fan"));
        CHECK(d.fan == p2_fan());
        CHECK(d.warnings.size() == 2);
    }
    SUBCASE("malformed documents") {
        for (const char* text : {R"({"rays": [], "max_cones": []})", R"({"dim": 2, "rays": [[0,0]], "max_cones": []})",
                                 R"({"dim": 2, "rays": [[1,0]], "max_cones": [[3]]})",
                                 R"({"dim": 2, "rays": [[1.5,0]], "max_cones": []})",
                                 R"({"dim": 2, "rays": [[1,0]], "max_cones": [[0,0]]})", R"([1,2])"}) {
            CAPTURE(text);
            try {
                fan_from_json(Json::parse(text));
                FAIL("accepted");
            } catch (const Error& e) {
                CHECK(e.kind() == ErrorKind::ParseError);
            }
        }
    }
    SUBCASE("round trip") {
        std::mt19937 rng(3);
        for (int i = 0; i < 20; ++i) {
            const auto sc = random_subdivision_case(rng);
            Fan f = sc.seed;
            for (const auto& c : sc.centers) f = star_subdivide(f, Ray::through(c));
            const auto doc = to_json(f);
            CHECK(fan_from_json(doc).fan == f);
            CHECK(fan_from_json(Json::parse(doc.dump())).fan == f);

            const Cobordism cob = build_cobordism(sc.seed, sc.centers);
            const auto back = cobordism_from_json(to_json(cob, sc.seed, f));
            CHECK(back.cobordism == cob);
            CHECK(*back.bottom == sc.seed);
            CHECK(*back.top == f);
        }
    }
}

TEST_CASE("cli validate") {
    CHECK(run({"validate", fixture("p2.fan")}).code == 0);
    const Run overlap = run({"validate", fixture("overlap.fan")});
    CHECK(overlap.code == 1);
    CHECK(overlap.out.find("cones 0 <(0,1),(1,0)> and 1 <(1,-1),(1,1)>") != std::string::npos);
    CHECK(run({"validate", fixture("missing.fan")}).code == 2);
    CHECK(run({"validate", fixture("malformed.fan")}).code == 2);
    CHECK(run({"validate", fixture("dependent.fan")}).code == 2);
    CHECK(run({"validate", fixture("wrong_length.fan")}).code == 2);
    const Run imprimitive = run({"validate", fixture("imprimitive.fan")});
    CHECK(imprimitive.code == 0);
    CHECK(count(imprimitive.err, "warning:") == 2);

    CHECK(run({"validate", fixture("karu.cob")}).code == 0);
    CHECK(run({"validate", fixture("cycle.cob")}).code == 0);
    CHECK(run({"validate", fixture("empty.cob")}).code == 0);
    CHECK(run({"validate", "--kind", "cobordism", fixture("cycle.cob"), "--bottom", fixture("p2.fan"), "--top",
               fixture("p2.fan")})
              .code == 0);
    const Run wrong_top = run({"validate", fixture("karu_wrong_top.cob")});
    CHECK(wrong_top.code == 1);
    CHECK(wrong_top.out.find("top.expected") != std::string::npos);
    CHECK(run({"validate", fixture("overlap.cob")}).code == 1);
    CHECK(run({"validate", fixture("vertical.cob")}).code == 2);
    CHECK(run({"validate", "--kind", "fan", fixture("karu.cob")}).code == 2);
    CHECK(run({"validate", "--kind", "polytope", fixture("p2.fan")}).code == 2);

    const auto j = Json::parse(run({"--json", "validate", fixture("overlap.fan")}).out);
    CHECK(j["ok"] == false);
    CHECK(j["violations"][0]["check"] == "overlap");
}

TEST_CASE("cli circuits") {
    const Run karu = run({"circuits", fixture("karu.cob")});
    CHECK(karu.code == 0);
    CHECK(karu.out.rfind("rows: 4\n", 0) == 0);
    CHECK(count(karu.out, "  Up\n") == 4);
    const Run cycle = run({"circuits", fixture("cycle.cob")});
    CHECK(cycle.out.rfind("rows: 6\n", 0) == 0);
    CHECK(count(cycle.out, "  UpDown\n") == 6);
    CHECK(run({"circuits", fixture("empty.cob")}).out == "rows: 0\n");
    const auto j = Json::parse(run({"--json", "circuits", fixture("mixed.cob")}).out);
    CHECK(j["rows"][0]["class"] == "Mixed");
    CHECK(j["rows"][0]["circuit"]["relation"] == Json::parse("[1,-1,-1,1]"));
}

TEST_CASE("cli collapse") {
    const Run cycle = run({"collapse", fixture("cycle.cob")});
    CHECK(cycle.code == 1);
    CHECK(cycle.out.find("cycle: {(-1,-1,0),(-1,-1,1)} -> {(1,0,0),(1,0,1)} -> {(0,1,0),(0,1,1)} -> "
                         "{(-1,-1,0),(-1,-1,1)}") != std::string::npos);
    const auto dot = scratch("g.dot");
    const Run karu = run({"collapse", fixture("karu.cob"), "--dot", dot.string()});
    CHECK(karu.code == 0);
    CHECK(karu.out.find("  {(0,1,0,0),(1,0,0,0),(1,1,0,1)}\n  {(0,0,1,0),(0,1,0,0),(0,1,1,2)}\n"
                        "  {(0,0,1,0),(1,1,0,1),(1,1,1,3)}") != std::string::npos);
    const std::string graph = slurp(dot);
    CHECK(count(graph, "[label=") == 3);
    CHECK(count(graph, " -> ") == 3);
    CHECK(count(graph, "color=red") == 0);

    run({"collapse", fixture("cycle.cob"), "--dot", dot.string()});
    CHECK(count(slurp(dot), "color=red") == 3);
    CHECK(run({"collapse", fixture("empty.cob")}).code == 0);
}

TEST_CASE("cli factorize") {
    const Run karu = run({"factorize", fixture("karu.cob")});
    CHECK(karu.code == 0);
    CHECK(karu.out.find("1. Blowup at (1,1,0)") != std::string::npos);
    CHECK(karu.out.find("2. Blowup at (0,1,1)") != std::string::npos);
    CHECK(karu.out.find("3. Blowup at (1,1,1)") != std::string::npos);
    CHECK(run({"factorize", fixture("cycle.cob")}).code == 1);
    const Run empty = run({"factorize", fixture("empty.cob")});
    CHECK(empty.code == 0);
    CHECK(empty.out == "steps: 0\n");

    const auto j = Json::parse(run({"--json", "factorize", fixture("karu.cob")}).out);
    REQUIRE(j["steps"].size() == 3);
    CHECK(j["steps"][2]["center"] == Json::parse("[1,1,1]"));
    CHECK(fan_from_json(j["steps"][2]["fan"]).fan.max_cones().size() == 5);
}

TEST_CASE("cli build") {
    const auto out = scratch("karu.cob");
    const Run built = run({"build", fixture("cone3.fan"), "--centers", "(1,1,0);(0,1,1);(1,1,1)", "-o", out.string()});
    CHECK(built.code == 0);
    CHECK(slurp(out) == slurp(fixture("karu.cob")));
    const auto reloaded = load_cobordism(out);
    CHECK(reloaded.cobordism.fan().max_cones().size() == 4);
    CHECK(validate_cobordism(reloaded.cobordism, reloaded.bottom, reloaded.top).ok());

    const Run empty = run({"build", fixture("cone3.fan"), "--centers", ""});
    CHECK(empty.code == 0);
    CHECK(empty.out.rfind("rows: 0\n", 0) == 0);
    CHECK(run({"build", fixture("cone3.fan"), "--centers", "(5,5,5,5)"}).code == 2);
    CHECK(run({"build", fixture("cone3.fan"), "--centers", "(-1,0,0)"}).code == 1);
    CHECK(run({"build", fixture("cone3.fan"), "--centers", "(1,0,0)"}).code == 1);
    CHECK(run({"build", fixture("cone3.fan"), "--centers", "(1,x,0)"}).code == 2);
    CHECK(run({"build", fixture("cone3.fan")}).code == 2);
}

TEST_CASE("cli demo") {
    const Run karu = run({"demo", "karu"});
    CHECK(karu.code == 0);
    CHECK(karu.out.find("mixed cone: <(1,1,0,1),(1,1,1,1),(1,2,1,3),(1,2,2,5)>  Mixed") != std::string::npos);
    const Run nc = run({"demo", "noncollapsible"});
    CHECK(nc.code == 0);
    CHECK(nc.out.find("pi-nonsingular: true") != std::string::npos);
    CHECK(nc.out.find("collapsible: false") != std::string::npos);
    CHECK(run({"demo", "unknown"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);

    const auto j = Json::parse(run({"--json", "demo", "karu"}).out);
    CHECK(j["mixed_cone"]["class"] == "Mixed");
    CHECK(j["all_pointing_up_after"] == false);
}

TEST_CASE("cli output is deterministic") {
    for (std::vector<std::string> args : {std::vector<std::string>{"--json", "demo", "karu"},
                                          {"demo", "noncollapsible"},
                                          {"circuits", fixture("karu.cob")},
                                          {"--json", "collapse", fixture("cycle.cob")}}) {
        CHECK(run(args).out == run(args).out);
    }
}
