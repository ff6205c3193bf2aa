#include "fancob/cobordism.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fancob {

IntVector projection(const Ray& lifted) { return lifted.gen().head(lifted.dim() - 1); }

Integer height(const Ray& lifted) { return lifted.gen()(lifted.dim() - 1); }

Ray lift(const Ray& base, Integer h) {
    IntVector g(base.dim() + 1);
    g << base.gen(), h;
    return Ray(std::move(g));
}

Projection project(const SimplicialCone& lifted) {
    Projection out;
    for (const auto& r : lifted.rays()) out.generators.push_back(projection(r));
    out.independent = rank(out.generators) == lifted.dim();
    return out;
}

SimplicialCone projected_cone(const SimplicialCone& lifted) {
    std::vector<Ray> rays;
    for (const auto& r : lifted.rays()) rays.push_back(Ray::through(projection(r)));
    return SimplicialCone(std::move(rays));
}

std::optional<ConeCircuit> circuit_of(const SimplicialCone& lifted) {
    const Projection proj = project(lifted);
    if (proj.independent) return std::nullopt;

    std::optional<IntRelation> relation;
    try {
        relation = kernel_relation(proj.generators);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NullityTooLarge)
            fail(ErrorKind::AssertionFailed, "lifted cone " + to_string(lifted) + " is not simplicial");
        throw;
    }
    IntVector r = relation->coeffs;

    Integer pairing = 0;
    for (Eigen::Index i = 0; i < r.size(); ++i) pairing += r(i) * height(lifted.rays()[i]);
    if (pairing == 0)
        fail(ErrorKind::AssertionFailed, "circuit of " + to_string(lifted) + " has zero height pairing");
    if (pairing < 0) r = -r;

    ConeCircuit out;
    std::vector<Integer> coeffs;
    for (Eigen::Index i = 0; i < r.size(); ++i) {
        const Ray& ray = lifted.rays()[i];
        if (r(i) == 0) {
            out.link.push_back(ray);
            continue;
        }
        out.circuit.rays.push_back(ray);
        coeffs.push_back(r(i));
        (r(i) > 0 ? out.circuit.positive : out.circuit.negative).push_back(ray);
    }
    out.circuit.relation.resize(static_cast<Eigen::Index>(coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) out.circuit.relation(static_cast<Eigen::Index>(i)) = coeffs[i];
    return out;
}

std::string_view to_string(ConeClass c) {
    switch (c) {
    case ConeClass::Independent: return "Independent";
    case ConeClass::Up: return "Up";
    case ConeClass::Down: return "Down";
    case ConeClass::UpDown: return "UpDown";
    case ConeClass::Mixed: return "Mixed";
    case ConeClass::Degenerate: return "Degenerate";
    }
    return "Unknown";
}

ConeClass class_of(const Circuit& c) {
    const auto pos = c.positive.size();
    const auto neg = c.negative.size();
    if (pos == 0 || neg == 0) return ConeClass::Degenerate;
    if (pos == 1 && neg == 1) return ConeClass::UpDown;
    if (pos == 1) return ConeClass::Up;
    if (neg == 1) return ConeClass::Down;
    return ConeClass::Mixed;
}

ConeClass classify(const SimplicialCone& lifted) {
    const auto cc = circuit_of(lifted);
    return cc ? class_of(cc->circuit) : ConeClass::Independent;
}

namespace {

// Is point + t * direction inside the cone for every sufficiently small t > 0?
bool contains_just_after(const SimplicialCone& sigma, const RatVector& point, const RatVector& direction) {
    const IntMatrix gens = sigma.generators();
    const auto at_zero = span_coordinates(gens, point);
    if (!at_zero) return false;
    const auto slope = span_coordinates(gens, direction);
    if (!slope) return false;
    for (Eigen::Index i = 0; i < at_zero->size(); ++i) {
        const int s0 = sign((*at_zero)(i));
        if (s0 < 0) return false;
        if (s0 == 0 && sign((*slope)(i)) < 0) return false;
    }
    return true;
}

std::vector<SimplicialCone> boundary_faces(const Fan& fan, Side side) {
    const Eigen::Index n = fan.ambient_dim();
    RatVector direction = RatVector::Constant(n, Rational(0));
    direction(n - 1) = side == Side::Lower ? -1 : 1;

    std::set<SimplicialCone> seen;
    std::vector<SimplicialCone> found;
    for (const auto& sigma : fan.max_cones()) {
        const unsigned k = static_cast<unsigned>(sigma.dim());
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            SimplicialCone tau = sigma.face(mask);
            if (!seen.insert(tau).second) continue;
            if (!project(tau).independent) continue;
            IntVector sum = IntVector::Zero(n);
            for (const auto& r : tau.rays()) sum += r.gen();
            const RatVector point = to_rational(sum);
            const bool interior = std::any_of(fan.max_cones().begin(), fan.max_cones().end(),
                                              [&](const SimplicialCone& c) { return contains_just_after(c, point, direction); });
            if (!interior) found.push_back(std::move(tau));
        }
    }
    std::vector<SimplicialCone> maximal;
    for (const auto& a : found) {
        const bool covered = std::any_of(found.begin(), found.end(), [&](const SimplicialCone& b) {
            return a.dim() < b.dim() && a.is_face_of(b);
        });
        if (!covered) maximal.push_back(a);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

Fan project_faces(Eigen::Index base_dim, const std::vector<SimplicialCone>& faces) {
    std::vector<SimplicialCone> cones;
    for (const auto& f : faces) cones.push_back(projected_cone(f));
    return Fan(base_dim, std::move(cones));
}

}  // namespace

std::vector<SimplicialCone> boundary(const Fan& lifted_fan, Side side) {
    const auto report = validate_fan(lifted_fan);
    if (!report.ok()) fail(ErrorKind::InvalidFan, report.violations.front().detail);
    return boundary_faces(lifted_fan, side);
}

Cobordism::Cobordism(Fan fan)
    : fan_(std::move(fan)),
      lower_(),
      upper_(),
      bottom_(std::max<Eigen::Index>(fan_.ambient_dim() - 1, 0)),
      top_(std::max<Eigen::Index>(fan_.ambient_dim() - 1, 0)) {
    if (fan_.ambient_dim() < 2) fail(ErrorKind::DimensionMismatch, "a cobordism fan needs dimension at least 2");
    for (const auto& r : fan_.rays())
        if (content(projection(r)) == 0) fail(ErrorKind::VerticalRay, "ray " + to_string(r) + " is vertical");
    lower_ = boundary_faces(fan_, Side::Lower);
    upper_ = boundary_faces(fan_, Side::Upper);
    bottom_ = project_faces(base_dim(), lower_);
    top_ = project_faces(base_dim(), upper_);
}

ValidationReport validate_cobordism(const Cobordism& cob, const std::optional<Fan>& expected_bottom,
                                    const std::optional<Fan>& expected_top) {
    ValidationReport report;
    report.merge(validate_fan(cob.fan()), "fan.");

    auto check_side = [&](const std::vector<SimplicialCone>& faces, const Fan& projected, const char* name) {
        const std::string side = name;
        std::set<SimplicialCone> images;
        for (const auto& f : faces) {
            if (!project(f).independent)
                report.add(side + ".injective", "pi is not injective on " + to_string(f));
            else if (!images.insert(projected_cone(f)).second)
                report.add(side + ".injective", "two " + side + " faces project onto " + to_string(projected_cone(f)));
        }
        report.merge(validate_fan(projected), side + ".");
    };
    check_side(cob.lower_faces(), cob.bottom(), "bottom");
    check_side(cob.upper_faces(), cob.top(), "top");

    if (!supports_equal(cob.bottom(), cob.top()))
        report.add("support", "bottom and top fans have different supports");
    if (expected_bottom && !fans_equal(*expected_bottom, cob.bottom()))
        report.add("bottom.expected", "bottom fan differs from the expected fan");
    if (expected_top && !fans_equal(*expected_top, cob.top()))
        report.add("top.expected", "top fan differs from the expected fan");

    for (const auto& sigma : cob.fan().max_cones())
        if (classify(sigma) == ConeClass::Degenerate)
            report.add("circuit.degenerate", "cone " + to_string(sigma) + " has a one-sided circuit");
    return report;
}

Cobordism build_cobordism(const Fan& base, const std::vector<IntVector>& centers, const BuildOptions& options) {
    if (options.height_scale <= 0) fail(ErrorKind::AssertionFailed, "height scale must be positive");
    const Eigen::Index d = base.ambient_dim();
    std::map<Ray, Integer> heights;
    for (const auto& r : base.rays()) heights.emplace(r, 0);

    auto lift_cone = [&](const std::vector<Ray>& rays) {
        std::vector<Ray> lifted;
        for (const auto& r : rays) lifted.push_back(lift(r, heights.at(r) * options.height_scale));
        return SimplicialCone(std::move(lifted));
    };

    Fan front = base;
    std::vector<SimplicialCone> cones;
    Integer previous = 0;
    for (std::size_t t = 0; t < centers.size(); ++t) {
        const IntVector& w = centers[t];
        if (w.size() != d)
            fail(ErrorKind::DimensionMismatch, "center " + format_vector(w) + " does not live in dimension " +
                                                   std::to_string(d));
        if (content(w) == 0) fail(ErrorKind::ZeroVector, "center " + std::to_string(t) + " is zero");
        const Ray center = Ray::through(w);
        if (front.has_ray(center))
            fail(ErrorKind::CenterAlreadyRay, "center " + format_vector(w) + " is already a ray");

        std::optional<SimplicialCone> tau;
        try {
            tau = minimal_containing_cone(front, center);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotInSupport) throw;
            fail(ErrorKind::CenterNotInSupport, "center " + format_vector(w) + " is outside the running fan");
        }

        // Height of the current front above the center; the new ray must clear it.
        const auto coeffs = *nonneg_combination(tau->generators(), to_rational(center.gen()));
        Rational front_height = 0;
        for (Eigen::Index i = 0; i < coeffs.size(); ++i) front_height += coeffs(i) * Rational(heights.at(tau->rays()[i]));
        // Heights are nonnegative, so integer division is the floor.
        const Integer floor_height = front_height.num() / front_height.den();
        const Integer h = std::max(previous + 1, floor_height + 1);

        for (const auto& sigma : front.max_cones()) {
            if (!tau->is_face_of(sigma)) continue;
            SimplicialCone below = lift_cone(sigma.rays());
            std::vector<Ray> lifted = below.rays();
            lifted.push_back(lift(center, h * options.height_scale));
            cones.emplace_back(std::move(lifted));
        }
        front = star_subdivide(front, center);
        heights.emplace(center, h);
        previous = h;
    }
    for (const auto& sigma : front.max_cones()) cones.push_back(lift_cone(sigma.rays()));
    return Cobordism(Fan(d + 1, std::move(cones)));
}

}  // namespace fancob
