#include <doctest.h>

#include <random>
#include <set>

#include "fancob/cobordism.hpp"
#include "fancob/midray_lab.hpp"
#include "random_fans.hpp"
#include "test_support.hpp"

using namespace fancob;
using namespace fancob::testing;

namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an exception");
    return ErrorKind::AssertionFailed;
}

const std::vector<IntVector> kTowerCenters{iv({1, 1, 0}), iv({0, 1, 1}), iv({1, 1, 1})};

Cobordism tower(Integer scale = 1) { return build_cobordism(standard_cone_fan(3), kTowerCenters, {scale}); }

std::set<Ray> rays_of(const std::vector<Ray>& v) { return {v.begin(), v.end()}; }

Fan tower_top() {
    Fan f = standard_cone_fan(3);
    for (const auto& c : kTowerCenters) f = star_subdivide(f, Ray(c));
    return f;
}

}  // namespace

TEST_CASE("project") {
    const auto a = project(cone({{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 1}}));
    CHECK_FALSE(a.independent);
    CHECK(a.generators.size() == 3);
    const std::set<std::vector<long long>> got = [&] {
        std::set<std::vector<long long>> s;
        for (auto& g : a.generators) s.insert({g(0).value(), g(1).value(), g(2).value()});
        return s;
    }();
    CHECK(got == std::set<std::vector<long long>>{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});

    const auto b = project(cone({{1, 0, 0}, {0, 1, 0}}));
    CHECK(b.independent);

    const auto c = project(cone({{1, 0, 0}, {1, 0, 1}}));
    CHECK_FALSE(c.independent);
    CHECK(c.generators[0] == iv({1, 0}));
    CHECK(c.generators[1] == iv({1, 0}));
}

TEST_CASE("circuit_of") {
    SUBCASE("first tower cone") {
        const auto cc = circuit_of(cone({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 0, 1}}));
        REQUIRE(cc);
        CHECK(rays_of(cc->circuit.positive) == rays_of({ray({1, 1, 0, 1})}));
        CHECK(rays_of(cc->circuit.negative) == rays_of({ray({1, 0, 0, 0}), ray({0, 1, 0, 0})}));
        CHECK(rays_of(cc->link) == rays_of({ray({0, 0, 1, 0})}));
    }
    SUBCASE("projective plane cone") {
        const auto cc = circuit_of(cone({{1, 0, 0}, {1, 0, 1}, {0, 1, 0}}));
        REQUIRE(cc);
        CHECK(rays_of(cc->circuit.rays) == rays_of({ray({1, 0, 0}), ray({1, 0, 1})}));
        CHECK(rays_of(cc->circuit.positive) == rays_of({ray({1, 0, 1})}));
        CHECK(rays_of(cc->circuit.negative) == rays_of({ray({1, 0, 0})}));
        CHECK(rays_of(cc->link) == rays_of({ray({0, 1, 0})}));
    }
    SUBCASE("independent cone") { CHECK_FALSE(circuit_of(cone({{1, 0, 0}, {0, 1, 5}}))); }
    SUBCASE("relation is signed by the heights") {
        const auto cc = circuit_of(cone({{1, 2, 2, 5}, {1, 1, 0, 1}, {1, 2, 1, 3}, {1, 1, 1, 1}}));
        REQUIRE(cc);
        Integer pairing = 0;
        IntVector sum = IntVector::Zero(3);
        for (std::size_t i = 0; i < cc->circuit.rays.size(); ++i) {
            pairing += cc->circuit.relation(static_cast<Eigen::Index>(i)) * height(cc->circuit.rays[i]);
            sum += cc->circuit.relation(static_cast<Eigen::Index>(i)) * projection(cc->circuit.rays[i]);
        }
        CHECK(pairing == 2);
        CHECK(sum.isZero());
    }
}

TEST_CASE("classify") {
    CHECK(classify(cone({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 0, 1}})) == ConeClass::Up);
    const auto b = cone({{1, 2, 2, 5}, {1, 1, 0, 1}, {1, 2, 1, 3}, {1, 1, 1, 1}});
    CHECK(classify(b) == ConeClass::Mixed);
    const auto cc = *circuit_of(b);
    CHECK(rays_of(cc.circuit.positive) == rays_of({ray({1, 2, 2, 5}), ray({1, 1, 0, 1})}));
    CHECK(rays_of(cc.circuit.negative) == rays_of({ray({1, 2, 1, 3}), ray({1, 1, 1, 1})}));
    CHECK(classify(cone({{1, 0, 0}, {1, 0, 1}, {0, 1, 0}})) == ConeClass::UpDown);
    CHECK(classify(cone({{1, 0, 0}, {0, 1, 0}})) == ConeClass::Independent);
    // one ray far above two others: the single positive ray sits below -> Down
    CHECK(classify(cone({{1, 0, 5}, {0, 1, 5}, {1, 1, 0}})) == ConeClass::Down);
}

TEST_CASE("boundary") {
    const Cobordism p2cob = noncollapsible_example();
    const auto lower = boundary(p2cob.fan(), Side::Lower);
    const auto upper = boundary(p2cob.fan(), Side::Upper);
    CHECK(lower == std::vector<SimplicialCone>{cone({{-1, -1, 0}, {0, 1, 0}}), cone({{-1, -1, 0}, {1, 0, 0}}),
                                               cone({{0, 1, 0}, {1, 0, 0}})});
    CHECK(upper == std::vector<SimplicialCone>{cone({{-1, -1, 1}, {0, 1, 1}}), cone({{-1, -1, 1}, {1, 0, 1}}),
                                               cone({{0, 1, 1}, {1, 0, 1}})});
    CHECK(p2cob.bottom() == p2_fan());
    CHECK(p2cob.top() == p2_fan());

    SUBCASE("flat fan is both boundaries") {
        const Fan flat(3, {cone({{1, 0, 0}, {0, 1, 0}}), cone({{0, 1, 0}, {-1, -1, 0}}), cone({{-1, -1, 0}, {1, 0, 0}})});
        CHECK(boundary(flat, Side::Lower) == flat.max_cones());
        CHECK(boundary(flat, Side::Upper) == flat.max_cones());
    }
    SUBCASE("invalid fan is rejected") {
        const Fan bad(3, {cone({{1, 0, 0}, {0, 1, 0}}), cone({{1, 1, 0}, {1, -1, 0}})});
        CHECK(kind_of([&] { boundary(bad, Side::Lower); }) == ErrorKind::InvalidFan);
    }
    SUBCASE("faces are non-nested and injective") {
        const Cobordism cob = tower();
        for (auto side : {Side::Lower, Side::Upper}) {
            const auto faces = boundary(cob.fan(), side);
            for (const auto& a : faces) {
                CHECK(project(a).independent);
                for (const auto& b : faces) CHECK((a == b || !a.is_face_of(b)));
            }
        }
    }
}

TEST_CASE("validate_cobordism") {
    const Cobordism p2cob = noncollapsible_example();
    CHECK(validate_cobordism(p2cob, p2_fan(), p2_fan()).ok());

    const Cobordism cob = tower();
    CHECK(validate_cobordism(cob, standard_cone_fan(3), tower_top()).ok());
    const auto bad = validate_cobordism(cob, standard_cone_fan(3), standard_cone_fan(3));
    REQUIRE(bad.violations.size() == 1);
    CHECK(bad.violations[0].check == "top.expected");

    SUBCASE("overlapping upstairs cones are reported") {
        const Cobordism broken(Fan(3, {cone({{1, 0, 0}, {0, 1, 0}, {1, 1, 1}}), cone({{1, 0, 0}, {0, 1, 0}, {1, 2, 1}})}));
        const auto report = validate_cobordism(broken);
        CHECK_FALSE(report.ok());
        CHECK(report.violations[0].check == "fan.overlap");
    }
    SUBCASE("vertical rays are rejected") {
        CHECK(kind_of([] { Cobordism(Fan(3, {cone({{0, 0, 1}, {1, 0, 0}})})); }) == ErrorKind::VerticalRay);
    }
}

TEST_CASE("build_cobordism") {
    SUBCASE("the three-step tower") {
        const Cobordism cob = tower();
        const Fan expected(4, {cone({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 0, 1}}),
                               cone({{1, 1, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 1, 1, 2}}),
                               cone({{1, 0, 0, 0}, {1, 1, 0, 1}, {0, 0, 1, 0}, {1, 1, 1, 3}}),
                               cone({{1, 1, 0, 1}, {0, 1, 1, 2}, {0, 0, 1, 0}, {1, 1, 1, 3}})});
        CHECK(cob.fan() == expected);
        for (const auto& c : cob.fan().max_cones()) {
            CHECK(classify(c) == ConeClass::Up);
            CHECK(circuit_of(c)->link.size() == 1);
        }
        CHECK(cob.bottom() == standard_cone_fan(3));
        CHECK(cob.top() == tower_top());
    }
    SUBCASE("no centers") {
        const Cobordism cob = build_cobordism(p2_fan(), {});
        for (const auto& c : cob.fan().max_cones()) CHECK(c.dim() == 2);
        CHECK(cob.bottom() == p2_fan());
        CHECK(cob.top() == p2_fan());
    }
    SUBCASE("one center") {
        const Cobordism cob = build_cobordism(standard_cone_fan(3), {iv({1, 1, 0})});
        CHECK(cob.fan() == Fan(4, {cone({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 0, 1}})}));
        CHECK(classify(cob.fan().max_cones()[0]) == ConeClass::Up);
    }
    SUBCASE("untouched cones stay flat") {
        const Cobordism cob = build_cobordism(p2_fan(), {iv({1, 1})});
        CHECK(cob.bottom() == p2_fan());
        CHECK(cob.top() == star_subdivide(p2_fan(), ray({1, 1})));
        CHECK(validate_cobordism(cob).ok());
    }
    SUBCASE("heights clear the front") {
        // (2,3,0) = (1,1,0) + (1,2,0) sits at front height 1 + 2, so it cannot be placed at 3.
        const Cobordism cob =
            build_cobordism(standard_cone_fan(3), {iv({1, 1, 0}), iv({1, 2, 0}), iv({2, 3, 0})});
        CHECK(cob.fan().has_ray(ray({2, 3, 0, 4})));
        CHECK(validate_cobordism(cob).ok());
        for (const auto& c : cob.fan().max_cones()) CHECK(classify(c) == ConeClass::Up);
    }
    SUBCASE("errors") {
        CHECK(kind_of([] { build_cobordism(standard_cone_fan(3), {iv({-1, 0, 0})}); }) ==
              ErrorKind::CenterNotInSupport);
        CHECK(kind_of([] { build_cobordism(standard_cone_fan(3), {iv({1, 0, 0})}); }) == ErrorKind::CenterAlreadyRay);
        CHECK(kind_of([] { build_cobordism(standard_cone_fan(3), {iv({5, 5, 5, 5})}); }) ==
              ErrorKind::DimensionMismatch);
    }
}

TEST_CASE("circuits are intrinsic to their ray sets") {
    const Cobordism cob = tower();
    const auto& cones = cob.fan().max_cones();
    for (const auto& a : cones)
        for (const auto& b : cones) {
            const auto ca = circuit_of(a), cb = circuit_of(b);
            if (ca->circuit.key() != cb->circuit.key()) continue;
            CHECK(ca->circuit.positive == cb->circuit.positive);
            CHECK(ca->circuit.negative == cb->circuit.negative);
        }
    // The two cones over the last subdivision share the circuit {v12', v3', rho'}.
    const CircuitKey shared{ray({0, 0, 1, 0}), ray({1, 1, 0, 1}), ray({1, 1, 1, 3})};
    int sharing = 0;
    for (const auto& c : cones) sharing += circuit_of(c)->circuit.key() == shared;
    CHECK(sharing == 2);
}

TEST_CASE("property: build round trip and height scaling") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        const auto sc = random_subdivision_case(rng);
        const Cobordism cob = build_cobordism(sc.seed, sc.centers);
        Fan direct = sc.seed;
        for (const auto& c : sc.centers) direct = star_subdivide(direct, Ray(c));
        CHECK(cob.bottom() == sc.seed);
        CHECK(cob.top() == direct);
        CHECK(validate_cobordism(cob, sc.seed, direct).ok());
        for (const auto& c : cob.fan().max_cones()) {
            const auto cc = circuit_of(c);
            if (!cc) continue;
            CHECK_FALSE(cc->circuit.positive.empty());
            CHECK_FALSE(cc->circuit.negative.empty());
        }

        const Cobordism scaled = build_cobordism(sc.seed, sc.centers, {10});
        REQUIRE(scaled.fan().max_cones().size() == cob.fan().max_cones().size());
        for (std::size_t i = 0; i < cob.fan().max_cones().size(); ++i) {
            const auto& a = cob.fan().max_cones()[i];
            const auto& b = scaled.fan().max_cones()[i];
            std::vector<Ray> pa, pb;
            for (const auto& g : project(a).generators) pa.push_back(Ray::through(g));
            for (const auto& g : project(b).generators) pb.push_back(Ray::through(g));
            std::sort(pa.begin(), pa.end());
            std::sort(pb.begin(), pb.end());
            CHECK(pa == pb);
            CHECK(classify(a) == classify(b));
        }
    }
}
