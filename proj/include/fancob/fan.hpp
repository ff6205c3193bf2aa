#pragma once

// Simplicial cones and fans in a lattice of rank d.
//
// Cones store their primitive ray generators in lexicographic order; faces are
// implicit (every ray subset of a simplicial cone spans a face). A Fan keeps its
// maximal cones sorted, so equal fans compare equal member-wise.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "fancob/cone_system.hpp"
#include "fancob/exact_linear.hpp"

namespace fancob {

class Ray {
public:
    /// gen must be nonzero and primitive.
    explicit Ray(IntVector gen);

    /// The ray spanned by a nonzero vector, normalized to its primitive generator.
    static Ray through(const IntVector& v);

    const IntVector& gen() const noexcept { return gen_; }
    Eigen::Index dim() const noexcept { return gen_.size(); }

    friend bool operator==(const Ray& a, const Ray& b) { return same_vector(a.gen_, b.gen_); }
    friend std::strong_ordering operator<=>(const Ray& a, const Ray& b) {
        if (lex_less(a.gen_, b.gen_)) return std::strong_ordering::less;
        if (lex_less(b.gen_, a.gen_)) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    IntVector gen_;
};

std::string to_string(const Ray& r);

class SimplicialCone {
public:
    /// Rays are sorted; they must be nonempty, pairwise distinct, of one dimension and
    /// linearly independent.
    explicit SimplicialCone(std::vector<Ray> rays);

    const std::vector<Ray>& rays() const noexcept { return rays_; }
    /// Number of rays, which is the dimension of the cone.
    Eigen::Index dim() const noexcept { return static_cast<Eigen::Index>(rays_.size()); }
    Eigen::Index ambient_dim() const noexcept { return rays_.front().dim(); }

    /// d x k matrix of generators.
    IntMatrix generators() const;
    std::vector<IntVector> generator_list() const;

    bool has_ray(const Ray& r) const;
    /// True iff every ray of this cone is a ray of other (this is a face of other).
    bool is_face_of(const SimplicialCone& other) const;

    /// The face spanned by the rays selected by a bitmask over rays().
    SimplicialCone face(unsigned mask) const;

    friend bool operator==(const SimplicialCone& a, const SimplicialCone& b) = default;
    friend std::strong_ordering operator<=>(const SimplicialCone& a, const SimplicialCone& b) {
        return std::lexicographical_compare_three_way(a.rays_.begin(), a.rays_.end(), b.rays_.begin(),
                                                      b.rays_.end());
    }

private:
    std::vector<Ray> rays_;
};

std::string to_string(const SimplicialCone& c);

/// Halfspace description {x : equalities x = 0, inequalities x >= 0} of a simplicial cone.
/// Inequality row i vanishes on every ray except rays()[i], where it is positive.
struct ConeConstraints {
    IntMatrix equalities;
    IntMatrix inequalities;

    HomogeneousSystem system() const;
};

ConeConstraints constraints_of(const SimplicialCone& c);

class Fan {
public:
    explicit Fan(Eigen::Index ambient_dim, std::vector<SimplicialCone> cones = {});

    Eigen::Index ambient_dim() const noexcept { return ambient_dim_; }
    const std::vector<SimplicialCone>& max_cones() const noexcept { return cones_; }
    bool empty() const noexcept { return cones_.empty(); }

    /// All rays of the fan, sorted.
    std::vector<Ray> rays() const;
    bool has_ray(const Ray& r) const;
    bool has_cone(const SimplicialCone& c) const;

    friend bool operator==(const Fan& a, const Fan& b) = default;

private:
    Eigen::Index ambient_dim_;
    std::vector<SimplicialCone> cones_;
};

struct Violation {
    std::string check;
    std::string detail;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    void add(std::string check, std::string detail) {
        violations.push_back({std::move(check), std::move(detail)});
    }
    void merge(const ValidationReport& other, const std::string& prefix = {});
};

bool is_smooth(const SimplicialCone& c);

bool cone_contains(const SimplicialCone& c, const RatVector& p);

/// True iff the two cones intersect in the face spanned by their common rays.
bool meet_in_common_face(const SimplicialCone& a, const SimplicialCone& b);

/// Checks that every pair of maximal cones meets in a common face.
ValidationReport validate_fan(const Fan& f);

/// The cone of f containing p in its relative interior.
SimplicialCone minimal_containing_cone(const Fan& f, const RatVector& p);
SimplicialCone minimal_containing_cone(const Fan& f, const Ray& r);

/// Star subdivision at r. Subdividing at an existing ray returns f unchanged.
Fan star_subdivide(const Fan& f, const Ray& r);

bool fans_equal(const Fan& a, const Fan& b);

/// True iff the cone lies inside the support of f.
bool cone_in_support(const SimplicialCone& c, const Fan& f);

bool supports_equal(const Fan& a, const Fan& b);

}  // namespace fancob
