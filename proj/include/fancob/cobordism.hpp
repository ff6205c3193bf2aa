#pragma once

// Fans in N+ = N (+) Z, the projection pi dropping the last (height) coordinate,
// circuits of pi-dependent cones and the cobordisms built from star subdivisions.

#include <optional>
#include <string_view>
#include <vector>

#include "fancob/fan.hpp"

namespace fancob {

/// First d coordinates of a lifted ray; not re-primitivized.
IntVector projection(const Ray& lifted);
Integer height(const Ray& lifted);
/// Lifts a base vector to (v, h).
Ray lift(const Ray& base, Integer h);

struct Projection {
    std::vector<IntVector> generators;
    bool independent;
};

Projection project(const SimplicialCone& lifted);

/// Primitive projections of a pi-independent lifted cone, as a cone downstairs.
SimplicialCone projected_cone(const SimplicialCone& lifted);

/// The minimally dependent ray set of a pi-dependent cone with its relation
/// sum r_i pi(ray_i) = 0, signed so that sum r_i height(ray_i) > 0.
struct Circuit {
    std::vector<Ray> rays;
    IntVector relation;
    std::vector<Ray> positive;
    std::vector<Ray> negative;

    /// Circuits are identified by their (sorted) ray sets.
    const std::vector<Ray>& key() const noexcept { return rays; }
};

struct ConeCircuit {
    Circuit circuit;
    /// Rays of the cone outside the circuit.
    std::vector<Ray> link;
};

std::optional<ConeCircuit> circuit_of(const SimplicialCone& lifted);

enum class ConeClass { Independent, Up, Down, UpDown, Mixed, Degenerate };

std::string_view to_string(ConeClass c);

ConeClass class_of(const Circuit& c);
ConeClass classify(const SimplicialCone& lifted);

enum class Side { Lower, Upper };

/// Maximal pi-independent faces tau of the fan such that sum(tau) -/+ t e_{d+1} leaves the
/// support for small t > 0. Throws InvalidFan when the fan is not valid.
std::vector<SimplicialCone> boundary(const Fan& lifted_fan, Side side);

class Cobordism {
public:
    /// The fan lives in dimension base_dim + 1; vertical rays are rejected.
    explicit Cobordism(Fan fan);

    Eigen::Index base_dim() const noexcept { return fan_.ambient_dim() - 1; }
    const Fan& fan() const noexcept { return fan_; }
    const std::vector<SimplicialCone>& lower_faces() const noexcept { return lower_; }
    const std::vector<SimplicialCone>& upper_faces() const noexcept { return upper_; }
    /// pi of the lower and upper boundary.
    const Fan& bottom() const noexcept { return bottom_; }
    const Fan& top() const noexcept { return top_; }

    friend bool operator==(const Cobordism& a, const Cobordism& b) { return a.fan_ == b.fan_; }

private:
    Fan fan_;
    std::vector<SimplicialCone> lower_;
    std::vector<SimplicialCone> upper_;
    Fan bottom_;
    Fan top_;
};

ValidationReport validate_cobordism(const Cobordism& cob, const std::optional<Fan>& expected_bottom = std::nullopt,
                                    const std::optional<Fan>& expected_top = std::nullopt);

struct BuildOptions {
    /// Every recorded height is multiplied by this positive factor.
    Integer height_scale = 1;
};

/// Stacks one layer of lifted cones per star subdivision of `base` at the given centers.
/// The t-th center sits at height t unless that would not clear the current front, in which
/// case it gets the least integer height that does (and later heights continue from there).
Cobordism build_cobordism(const Fan& base, const std::vector<IntVector>& centers, const BuildOptions& options = {});

}  // namespace fancob
