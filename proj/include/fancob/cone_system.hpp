#pragma once

#include <vector>

#include "fancob/exact_linear.hpp"

namespace fancob {

/// A system of homogeneous linear constraints a.x = 0, a.x >= 0 and a.x > 0 over the
/// rationals. Feasibility is decided exactly by Fourier-Motzkin elimination.
class HomogeneousSystem {
public:
    explicit HomogeneousSystem(Eigen::Index dim) : dim_(dim) {}

    Eigen::Index dim() const { return dim_; }

    HomogeneousSystem& add_equality(const IntVector& a);
    HomogeneousSystem& add_inequality(const IntVector& a);
    HomogeneousSystem& add_strict(const IntVector& a);
    HomogeneousSystem& append(const HomogeneousSystem& other);

    bool has_strict() const;

    /// True iff some x satisfies every constraint. Without strict constraints x = 0 always does.
    bool feasible() const;

private:
    struct Row {
        IntVector a;
        bool strict;
    };

    void check_dim(const IntVector& a) const;

    Eigen::Index dim_;
    std::vector<IntVector> equalities_;
    std::vector<Row> inequalities_;
};

}  // namespace fancob
