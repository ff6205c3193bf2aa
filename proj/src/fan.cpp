#include "fancob/fan.hpp"

#include <algorithm>
#include <sstream>

namespace fancob {

Ray::Ray(IntVector gen) : gen_(std::move(gen)) {
    const Integer g = content(gen_);
    if (g == 0) fail(ErrorKind::ZeroVector, "ray generator is the zero vector");
    if (g != 1) fail(ErrorKind::NotPrimitive, "ray generator " + format_vector(gen_) + " is not primitive");
}

Ray Ray::through(const IntVector& v) { return Ray(primitive(v)); }

std::string to_string(const Ray& r) { return format_vector(r.gen()); }

SimplicialCone::SimplicialCone(std::vector<Ray> rays) : rays_(std::move(rays)) {
    if (rays_.empty()) fail(ErrorKind::DependentInput, "a cone needs at least one ray");
    const Eigen::Index d = rays_.front().dim();
    for (const auto& r : rays_)
        if (r.dim() != d) fail(ErrorKind::DimensionMismatch, "cone rays of different dimension");
    std::sort(rays_.begin(), rays_.end());
    if (std::adjacent_find(rays_.begin(), rays_.end()) != rays_.end())
        fail(ErrorKind::DuplicateRay, "cone " + to_string(*this) + " repeats a ray");
    if (rank(generators()) < dim())
        fail(ErrorKind::DependentInput, "cone " + to_string(*this) + " is not simplicial");
}

IntMatrix SimplicialCone::generators() const {
    IntMatrix m(ambient_dim(), dim());
    for (Eigen::Index j = 0; j < dim(); ++j) m.col(j) = rays_[j].gen();
    return m;
}

std::vector<IntVector> SimplicialCone::generator_list() const {
    std::vector<IntVector> out;
    out.reserve(rays_.size());
    for (const auto& r : rays_) out.push_back(r.gen());
    return out;
}

bool SimplicialCone::has_ray(const Ray& r) const { return std::binary_search(rays_.begin(), rays_.end(), r); }

bool SimplicialCone::is_face_of(const SimplicialCone& other) const {
    return std::includes(other.rays_.begin(), other.rays_.end(), rays_.begin(), rays_.end());
}

SimplicialCone SimplicialCone::face(unsigned mask) const {
    std::vector<Ray> sub;
    for (std::size_t i = 0; i < rays_.size(); ++i)
        if (mask & (1u << i)) sub.push_back(rays_[i]);
    return SimplicialCone(std::move(sub));
}

std::string to_string(const SimplicialCone& c) {
    std::ostringstream os;
    os << '<';
    for (std::size_t i = 0; i < c.rays().size(); ++i) os << (i ? "," : "") << to_string(c.rays()[i]);
    os << '>';
    return os.str();
}

HomogeneousSystem ConeConstraints::system() const {
    HomogeneousSystem sys(inequalities.cols());
    for (Eigen::Index i = 0; i < equalities.rows(); ++i) sys.add_equality(equalities.row(i).transpose());
    for (Eigen::Index i = 0; i < inequalities.rows(); ++i) sys.add_inequality(inequalities.row(i).transpose());
    return sys;
}

ConeConstraints constraints_of(const SimplicialCone& c) {
    const IntMatrix gens = c.generators();
    const Eigen::Index d = c.ambient_dim();
    const Eigen::Index k = c.dim();
    // Columns of `complement` span the orthogonal complement of the cone's span.
    const IntMatrix complement = nullspace(IntMatrix(gens.transpose()));

    ConeConstraints out{IntMatrix(complement.cols(), d), IntMatrix(k, d)};
    out.equalities = complement.transpose();

    IntMatrix others(d - 1, d);
    for (Eigen::Index i = 0; i < k; ++i) {
        Eigen::Index row = 0;
        for (Eigen::Index j = 0; j < k; ++j)
            if (j != i) others.row(row++) = gens.col(j).transpose();
        for (Eigen::Index j = 0; j < complement.cols(); ++j) others.row(row++) = complement.col(j).transpose();
        IntVector normal = nullspace(others).col(0);
        if (normal.dot(gens.col(i)) < 0) normal = -normal;
        out.inequalities.row(i) = normal.transpose();
    }
    return out;
}

Fan::Fan(Eigen::Index ambient_dim, std::vector<SimplicialCone> cones)
    : ambient_dim_(ambient_dim), cones_(std::move(cones)) {
    for (const auto& c : cones_)
        if (c.ambient_dim() != ambient_dim_)
            fail(ErrorKind::DimensionMismatch, "cone " + to_string(c) + " does not live in dimension " +
                                                   std::to_string(ambient_dim_));
    std::sort(cones_.begin(), cones_.end());
    cones_.erase(std::unique(cones_.begin(), cones_.end()), cones_.end());
    // Faces are implicit: drop any listed cone that is a face of another.
    std::vector<SimplicialCone> maximal;
    for (std::size_t i = 0; i < cones_.size(); ++i) {
        bool is_face = false;
        for (std::size_t j = 0; j < cones_.size() && !is_face; ++j)
            is_face = i != j && cones_[i].dim() < cones_[j].dim() && cones_[i].is_face_of(cones_[j]);
        if (!is_face) maximal.push_back(cones_[i]);
    }
    cones_ = std::move(maximal);
}

std::vector<Ray> Fan::rays() const {
    std::vector<Ray> out;
    for (const auto& c : cones_) out.insert(out.end(), c.rays().begin(), c.rays().end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Fan::has_ray(const Ray& r) const {
    return std::any_of(cones_.begin(), cones_.end(), [&](const SimplicialCone& c) { return c.has_ray(r); });
}

bool Fan::has_cone(const SimplicialCone& c) const { return std::binary_search(cones_.begin(), cones_.end(), c); }

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
    for (const auto& v : other.violations) add(prefix + v.check, v.detail);
}

bool is_smooth(const SimplicialCone& c) { return maximal_minor_gcd(c.generators()) == 1; }

bool cone_contains(const SimplicialCone& c, const RatVector& p) {
    return nonneg_combination(c.generators(), p).has_value();
}

namespace {

bool meet_in_common_face(const SimplicialCone& a, const ConeConstraints& ca, const SimplicialCone& b,
                         const ConeConstraints& cb) {
    if (a.ambient_dim() != b.ambient_dim()) return false;
    HomogeneousSystem both = ca.system();
    both.append(cb.system());
    // A point of a outside the common face has a positive coordinate on some ray of a
    // that b lacks.
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
        if (b.has_ray(a.rays()[i])) continue;
        HomogeneousSystem probe = both;
        probe.add_strict(ca.inequalities.row(i).transpose());
        if (probe.feasible()) return false;
    }
    return true;
}

}  // namespace

bool meet_in_common_face(const SimplicialCone& a, const SimplicialCone& b) {
    return meet_in_common_face(a, constraints_of(a), b, constraints_of(b));
}

ValidationReport validate_fan(const Fan& f) {
    ValidationReport report;
    const auto& cones = f.max_cones();
    std::vector<ConeConstraints> constraints;
    constraints.reserve(cones.size());
    for (const auto& c : cones) constraints.push_back(constraints_of(c));
    for (std::size_t i = 0; i < cones.size(); ++i)
        for (std::size_t j = i + 1; j < cones.size(); ++j)
            if (!meet_in_common_face(cones[i], constraints[i], cones[j], constraints[j]))
                report.add("overlap", "cones " + std::to_string(i) + " " + to_string(cones[i]) + " and " +
                                          std::to_string(j) + " " + to_string(cones[j]) +
                                          " do not meet in a common face");
    return report;
}

SimplicialCone minimal_containing_cone(const Fan& f, const RatVector& p) {
    if (p.size() != f.ambient_dim())
        fail(ErrorKind::DimensionMismatch, "point of dimension " + std::to_string(p.size()) + " in a fan of dimension " +
                                               std::to_string(f.ambient_dim()));
    for (const auto& c : f.max_cones()) {
        const auto coeffs = nonneg_combination(c.generators(), p);
        if (!coeffs) continue;
        std::vector<Ray> support;
        for (Eigen::Index i = 0; i < coeffs->size(); ++i)
            if (sign((*coeffs)(i)) > 0) support.push_back(c.rays()[i]);
        if (support.empty()) fail(ErrorKind::NotInSupport, "the origin lies in no nonzero cone");
        return SimplicialCone(std::move(support));
    }
    std::ostringstream os;
    os << "point (";
    for (Eigen::Index i = 0; i < p.size(); ++i) os << (i ? "," : "") << p(i);
    os << ") is not in the support of the fan";
    fail(ErrorKind::NotInSupport, os.str());
}

SimplicialCone minimal_containing_cone(const Fan& f, const Ray& r) {
    return minimal_containing_cone(f, to_rational(r.gen()));
}

Fan star_subdivide(const Fan& f, const Ray& r) {
    if (f.has_ray(r)) return f;
    const SimplicialCone center_face = minimal_containing_cone(f, r);
    std::vector<SimplicialCone> cones;
    for (const auto& sigma : f.max_cones()) {
        if (!center_face.is_face_of(sigma)) {
            cones.push_back(sigma);
            continue;
        }
        for (const auto& dropped : center_face.rays()) {
            std::vector<Ray> rays{r};
            for (const auto& w : sigma.rays())
                if (w != dropped) rays.push_back(w);
            cones.emplace_back(std::move(rays));
        }
    }
    return Fan(f.ambient_dim(), std::move(cones));
}

bool fans_equal(const Fan& a, const Fan& b) { return a == b; }

bool cone_in_support(const SimplicialCone& c, const Fan& f) {
    if (c.ambient_dim() != f.ambient_dim()) return false;
    // Carve the cone's pieces covered by each cone of f out of the remaining region; the
    // remainder is kept as a list of convex pieces, each cut out by at least one strict
    // inequality once the first split has happened.
    std::vector<HomogeneousSystem> regions{constraints_of(c).system()};
    for (const auto& tau : f.max_cones()) {
        const ConeConstraints tc = constraints_of(tau);
        const HomogeneousSystem tau_system = tc.system();
        std::vector<HomogeneousSystem> next;
        for (const auto& region : regions) {
            if (region.has_strict() && !HomogeneousSystem(region).append(tau_system).feasible()) {
                next.push_back(region);
                continue;
            }
            HomogeneousSystem prefix = region;
            auto keep_if_nonempty = [&](HomogeneousSystem piece) {
                if (piece.feasible()) next.push_back(std::move(piece));
            };
            for (Eigen::Index i = 0; i < tc.inequalities.rows(); ++i) {
                const IntVector row = tc.inequalities.row(i).transpose();
                keep_if_nonempty(HomogeneousSystem(prefix).add_strict(-row));
                prefix.add_inequality(row);
            }
            for (Eigen::Index i = 0; i < tc.equalities.rows(); ++i) {
                const IntVector row = tc.equalities.row(i).transpose();
                keep_if_nonempty(HomogeneousSystem(prefix).add_strict(row));
                keep_if_nonempty(HomogeneousSystem(prefix).add_strict(-row));
                prefix.add_equality(row);
            }
        }
        regions = std::move(next);
        if (regions.empty()) return true;
    }
    return regions.empty();
}

bool supports_equal(const Fan& a, const Fan& b) {
    if (a.ambient_dim() != b.ambient_dim()) return false;
    for (const auto& c : a.max_cones())
        if (!cone_in_support(c, b)) return false;
    for (const auto& c : b.max_cones())
        if (!cone_in_support(c, a)) return false;
    return true;
}

}  // namespace fancob
