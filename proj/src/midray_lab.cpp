#include "fancob/midray_lab.hpp"

#include <algorithm>
#include <set>

namespace fancob {

namespace {

void expect(bool condition, const std::string& what) {
    if (!condition) fail(ErrorKind::AssertionFailed, what);
}

std::set<Ray> as_set(const std::vector<Ray>& rays) { return {rays.begin(), rays.end()}; }

}  // namespace

Ray midray(const Ray& a, const Ray& b) {
    if (a == b) fail(ErrorKind::EqualRays, "midray of " + to_string(a) + " with itself");
    if (a.dim() != b.dim()) fail(ErrorKind::DimensionMismatch, "midray of rays of different dimension");
    if (rank(std::vector<IntVector>{a.gen(), b.gen()}) < 2)
        fail(ErrorKind::DependentInput, "midray of opposite rays " + to_string(a) + ", " + to_string(b));
    return Ray::through(IntVector(a.gen() + b.gen()));
}

std::vector<ScheduleEntry> positive_link_centers(const Cobordism& cob) {
    for (const auto& sigma : cob.fan().max_cones()) {
        const auto cc = circuit_of(sigma);
        if (!cc || class_of(cc->circuit) != ConeClass::Up || cc->circuit.positive.size() != 1)
            fail(ErrorKind::NotAllPointingUp, "cone " + to_string(sigma) + " is " + std::string(to_string(classify(sigma))));
    }
    const CollapseGraph graph = circuit_graph(cob);
    const CollapseVerdict verdict = is_collapsible(graph);
    if (!verdict.collapsible) fail(ErrorKind::NotCollapsible, "no topmost-first order exists");

    std::vector<ScheduleEntry> out;
    for (auto it = verdict.witness.rbegin(); it != verdict.witness.rend(); ++it) {
        const CircuitNode& node = graph.nodes[*it];
        const Ray& positive = node.circuit.positive.front();
        for (const auto& sigma : node.star) {
            const auto cc = *circuit_of(sigma);
            for (const auto& l : cc.link) {
                const Ray center = midray(positive, l);
                const SimplicialCone edge({positive, l});
                expect(minimal_containing_cone(Fan(sigma.ambient_dim(), {sigma}), center) == edge,
                       "center " + to_string(center) + " is not interior to " + to_string(edge));
                out.push_back({sigma, positive, l, center});
            }
        }
    }
    return out;
}

Fan run_schedule(const Fan& lifted_fan, const std::vector<Ray>& centers) {
    Fan current = lifted_fan;
    for (const auto& c : centers) {
        current = star_subdivide(current, c);
        const auto report = validate_fan(current);
        if (!report.ok())
            fail(ErrorKind::BrokenFan, "after subdividing at " + to_string(c) + ": " + report.violations.front().detail);
    }
    return current;
}

ConeCensus census_of(const SimplicialCone& lifted) {
    ConeCensus out{lifted, ConeClass::Independent, {}, {}, {}};
    if (const auto cc = circuit_of(lifted)) {
        out.cls = class_of(cc->circuit);
        out.positive = cc->circuit.positive;
        out.negative = cc->circuit.negative;
        out.link = cc->link;
    } else {
        out.link = lifted.rays();
    }
    return out;
}

std::vector<ConeCensus> census(const Fan& lifted_fan) {
    std::vector<ConeCensus> out;
    for (const auto& c : lifted_fan.max_cones()) out.push_back(census_of(c));
    return out;
}

KaruReport karu_counterexample(const IntMatrix& basis) {
    if (basis.rows() != 3 || basis.cols() != 3) fail(ErrorKind::DimensionMismatch, "basis must be 3 x 3");
    const Integer det = determinant(basis);
    expect(det == 1 || det == -1, "basis is not unimodular");

    const IntVector v1 = basis.col(0), v2 = basis.col(1), v3 = basis.col(2);
    const Fan base(3, {SimplicialCone({Ray(v1), Ray(v2), Ray(v3)})});
    const std::vector<IntVector> centers{v1 + v2, v2 + v3, v1 + v2 + v3};
    Cobordism cob = build_cobordism(base, centers);

    Fan expected_top = base;
    for (const auto& c : centers) expected_top = star_subdivide(expected_top, Ray(c));
    const auto validation = validate_cobordism(cob, base, expected_top);
    expect(validation.ok(), "tower cobordism fails validation");

    auto initial = census(cob.fan());
    expect(initial.size() == 4, "expected 4 maximal cones, found " + std::to_string(initial.size()));
    for (const auto& c : initial)
        expect(c.cls == ConeClass::Up && c.positive.size() == 1 && c.link.size() == 1,
               "cone " + to_string(c.cone) + " is not pointing up with a one-ray link");

    const CollapseGraph graph = circuit_graph(cob);
    const CollapseVerdict verdict = is_collapsible(graph);
    expect(verdict.collapsible, "tower cobordism is not collapsible");
    std::vector<CircuitKey> order;
    for (auto i : verdict.witness) order.push_back(graph.nodes[i].key);

    // Named lifted rays of the tower.
    const Ray r1 = lift(Ray(v1), 0), r3 = lift(Ray(v3), 0);
    const Ray r12 = lift(Ray(centers[0]), 1), r23 = lift(Ray(centers[1]), 2), r123 = lift(Ray(centers[2]), 3);
    const Ray mu1 = midray(r123, r1), mu2 = midray(r123, r23);
    const Ray zeta1 = midray(r12, r23), zeta2 = midray(r12, r3);

    auto schedule = positive_link_centers(cob);
    expect(schedule.size() == 4, "expected 4 schedule entries");
    expect(as_set({schedule[0].center, schedule[1].center}) == as_set({mu1, mu2}),
           "the topmost cones are not subdivided first");
    expect(schedule[2].center == zeta1 && schedule[3].center == zeta2, "unexpected lower schedule entries");

    const Fan halfway = run_schedule(cob.fan(), {schedule[0].center, schedule[1].center});
    const std::set<Ray> expected_neg_images{Ray::through(centers[0]), Ray::through(centers[1]), Ray(v3)};
    std::optional<ConeCensus> intermediate;
    for (const auto& c : census(halfway)) {
        if (c.cls != ConeClass::Up || c.negative.size() != 3) continue;
        std::set<Ray> images;
        for (const auto& r : c.negative) images.insert(Ray::through(projection(r)));
        if (images == expected_neg_images && c.positive.front() == mu2) intermediate = c;
    }
    expect(intermediate.has_value(), "no pointing-up cone with three negative rays after the first midrays");

    std::vector<Ray> all_centers;
    for (const auto& e : schedule) all_centers.push_back(e.center);
    Fan subdivided = run_schedule(cob.fan(), all_centers);

    const SimplicialCone b({mu2, r12, zeta1, zeta2});
    expect(subdivided.has_cone(b), "subdivision lacks the cone " + to_string(b));
    ConeCensus mixed = census_of(b);
    expect(mixed.cls == ConeClass::Mixed, "cone " + to_string(b) + " is " + std::string(to_string(mixed.cls)));
    expect(as_set(mixed.positive) == as_set({mu2, r12}), "unexpected positive rays of " + to_string(b));
    expect(as_set(mixed.negative) == as_set({zeta1, zeta2}), "unexpected negative rays of " + to_string(b));

    bool all_up = true;
    for (const auto& c : census(subdivided)) all_up = all_up && c.cls == ConeClass::Up;
    expect(!all_up, "the subdivided cobordism is still pointing up everywhere");

    const Cobordism after(subdivided);
    const bool supports = supports_equal(after.bottom(), cob.bottom()) && supports_equal(after.top(), cob.top());
    expect(supports, "subdividing moved the boundary supports");

    return KaruReport{basis,
                      std::move(cob),
                      std::move(initial),
                      verdict.collapsible,
                      std::move(order),
                      std::move(schedule),
                      std::move(*intermediate),
                      std::move(subdivided),
                      std::move(mixed),
                      all_up,
                      supports};
}

Cobordism noncollapsible_example() {
    const IntVector v1 = (IntVector(2) << 1, 0).finished();
    const IntVector v2 = (IntVector(2) << 0, 1).finished();
    const IntVector v3 = (IntVector(2) << -1, -1).finished();
    auto at = [](const IntVector& v, int h) { return lift(Ray(v), h); };
    std::vector<SimplicialCone> cones{
        SimplicialCone({at(v1, 0), at(v1, 1), at(v2, 0)}),  // sigma_11'2
        SimplicialCone({at(v2, 0), at(v2, 1), at(v3, 0)}),  // sigma_22'3
        SimplicialCone({at(v3, 0), at(v3, 1), at(v1, 0)}),  // sigma_33'1
        SimplicialCone({at(v1, 1), at(v2, 0), at(v2, 1)}),  // sigma_1'22'
        SimplicialCone({at(v2, 1), at(v3, 0), at(v3, 1)}),  // sigma_2'33'
        SimplicialCone({at(v3, 1), at(v1, 0), at(v1, 1)}),  // sigma_3'11'
    };
    return Cobordism(Fan(3, std::move(cones)));
}

NoncollapsibleReport noncollapsible_report() {
    Cobordism cob = noncollapsible_example();
    const IntVector v1 = (IntVector(2) << 1, 0).finished();
    const IntVector v2 = (IntVector(2) << 0, 1).finished();
    const IntVector v3 = (IntVector(2) << -1, -1).finished();
    const Fan p2(2, {SimplicialCone({Ray(v1), Ray(v2)}), SimplicialCone({Ray(v2), Ray(v3)}),
                     SimplicialCone({Ray(v3), Ray(v1)})});

    auto validation = validate_cobordism(cob, p2, p2);
    expect(validation.ok(), "the cobordism does not run from the projective plane fan to itself");
    auto nonsingular = is_pi_nonsingular(cob);
    expect(nonsingular.nonsingular, "the cobordism is pi-singular");

    auto graph = circuit_graph(cob);
    expect(graph.nodes.size() == 3 && graph.edges.size() == 3, "circuit graph is not a bare three-cycle");
    auto key = [](const IntVector& v) { return CircuitKey{lift(Ray(v), 0), lift(Ray(v), 1)}; };
    const auto d1 = graph.find(key(v1)), d2 = graph.find(key(v2)), d3 = graph.find(key(v3));
    expect(d1 && d2 && d3, "missing one of the circuits <(v_i,0),(v_i,1)>");
    expect(graph.has_edge(*d1, *d2) && graph.has_edge(*d2, *d3) && graph.has_edge(*d3, *d1),
           "circuit graph edges do not form the expected cycle");
    auto collapse = is_collapsible(graph);
    expect(!collapse.collapsible && collapse.witness.size() == 3, "the cobordism is collapsible");

    return {std::move(cob), std::move(validation), std::move(nonsingular), std::move(graph), std::move(collapse)};
}

}  // namespace fancob
