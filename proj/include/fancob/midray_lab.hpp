#pragma once

// Midray subdivision of pointing-up cobordisms and the two worked counterexamples:
// the three-blowup tower whose midray subdivision produces a cone that is not pointing
// up, and the pi-nonsingular cobordism over the projective plane that is not collapsible.

#include <vector>

#include "fancob/collapse.hpp"

namespace fancob {

/// Primitive generator of a + b.
Ray midray(const Ray& a, const Ray& b);

struct ScheduleEntry {
    SimplicialCone source;
    Ray positive;
    Ray link;
    Ray center;
};

/// One entry per (cone, link ray): the midray of the cone's positive ray and the link ray.
/// Cones are visited topmost first (reverse collapse order of their circuits), then in
/// canonical order; link rays in canonical order. Every maximal cone must point up.
std::vector<ScheduleEntry> positive_link_centers(const Cobordism& cob);

/// Star-subdivides the lifted fan at each center in turn, revalidating after every step.
Fan run_schedule(const Fan& lifted_fan, const std::vector<Ray>& centers);

struct ConeCensus {
    SimplicialCone cone;
    ConeClass cls;
    std::vector<Ray> positive;
    std::vector<Ray> negative;
    std::vector<Ray> link;
};

ConeCensus census_of(const SimplicialCone& lifted);
std::vector<ConeCensus> census(const Fan& lifted_fan);

struct KaruReport {
    /// Columns are v1, v2, v3.
    IntMatrix basis;
    Cobordism cobordism;
    std::vector<ConeCensus> initial_census;
    bool collapsible_before;
    std::vector<CircuitKey> collapse_order;
    std::vector<ScheduleEntry> schedule;
    /// The pointing-up cone with three negative rays after the first two midrays.
    ConeCensus intermediate_cone;
    Fan subdivided;
    /// The cone spanned by rho, rho_12, zeta_1, zeta_2 in the fully subdivided fan.
    ConeCensus mixed_cone;
    bool all_pointing_up_after;
    bool boundary_supports_preserved;
};

/// Builds the tower of star subdivisions of <v1,v2,v3> at v1+v2, v2+v3, v1+v2+v3, runs the
/// positive-link midray schedule and checks every expected combinatorial fact exactly.
/// Throws AssertionFailed on any deviation.
KaruReport karu_counterexample(const IntMatrix& basis = IntMatrix::Identity(3, 3));

/// Six-cone cobordism over the projective plane fan with rays (v_i, 0) and (v_i, 1).
Cobordism noncollapsible_example();

struct NoncollapsibleReport {
    Cobordism cobordism;
    ValidationReport validation;
    NonsingularVerdict nonsingular;
    CollapseGraph graph;
    CollapseVerdict collapse;
};

/// Runs the verification bundle on noncollapsible_example(); throws AssertionFailed unless
/// it validates over the projective plane on both ends, is pi-nonsingular and has exactly
/// the three-cycle as its circuit graph.
NoncollapsibleReport noncollapsible_report();

}  // namespace fancob
