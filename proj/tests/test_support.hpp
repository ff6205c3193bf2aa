#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "fancob/fan.hpp"

namespace fancob::testing {

inline IntVector iv(std::initializer_list<long long> xs) {
    IntVector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (auto x : xs) v(i++) = Integer(static_cast<std::int64_t>(x));
    return v;
}

inline RatVector rv(std::initializer_list<long long> xs) { return to_rational(iv(xs)); }

inline Ray ray(std::initializer_list<long long> xs) { return Ray(iv(xs)); }

inline SimplicialCone cone(std::initializer_list<std::initializer_list<long long>> rays) {
    std::vector<Ray> out;
    for (auto r : rays) out.push_back(ray(r));
    return SimplicialCone(std::move(out));
}

inline IntVector unit(Eigen::Index d, Eigen::Index i) {
    IntVector v = IntVector::Zero(d);
    v(i) = 1;
    return v;
}

/// The projective plane fan spanned by (1,0), (0,1), (-1,-1).
inline Fan p2_fan() {
    return Fan(2, {cone({{1, 0}, {0, 1}}), cone({{0, 1}, {-1, -1}}), cone({{-1, -1}, {1, 0}})});
}

inline Fan standard_cone_fan(Eigen::Index d) {
    std::vector<Ray> rays;
    for (Eigen::Index i = 0; i < d; ++i) rays.emplace_back(unit(d, i));
    return Fan(d, {SimplicialCone(rays)});
}

inline IntMatrix random_unimodular(std::mt19937& rng, Eigen::Index d, int bound = 2) {
    std::uniform_int_distribution<int> entry(-bound, bound);
    while (true) {
        IntMatrix m(d, d);
        for (Eigen::Index i = 0; i < d; ++i)
            for (Eigen::Index j = 0; j < d; ++j) m(i, j) = entry(rng);
        const Integer det = determinant(m);
        if (det == 1 || det == -1) return m;
    }
}

}  // namespace fancob::testing
