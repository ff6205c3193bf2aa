#pragma once

// Exact integer and rational linear algebra over Eigen dense types.
//
// Vector families are passed as the columns of a d x k matrix. All routines
// are templated on the scalar; the library itself instantiates them with the
// overflow-checked Integer, so a coordinate blow-up raises ErrorKind::Overflow
// rather than producing a wrong answer.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "fancob/checked_int.hpp"
#include "fancob/error.hpp"
#include "fancob/rational.hpp"

namespace fancob {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = Vector<Integer>;
using IntMatrix = Matrix<Integer>;
using RatVector = Vector<Rational>;
using RatMatrix = Matrix<Rational>;

/// Integer dependency sum_i coeffs[i] * v_i = 0 among a vector family, scaled to entry gcd 1.
struct IntRelation {
    IntVector coeffs;

    friend bool operator==(const IntRelation& a, const IntRelation& b) {
        return a.coeffs.size() == b.coeffs.size() && a.coeffs == b.coeffs;
    }
};

namespace detail {

template <typename Scalar>
Scalar scalar_gcd(const Scalar& a, const Scalar& b) {
    using std::gcd;
    return gcd(a, b);
}

template <typename Scalar>
Scalar scalar_abs(const Scalar& a) {
    return a < Scalar(0) ? Scalar(-a) : a;
}

template <typename Scalar>
Scalar lcm(const Scalar& a, const Scalar& b) {
    if (a == Scalar(0) || b == Scalar(0)) return Scalar(0);
    return scalar_abs(Scalar(a / scalar_gcd(a, b) * b));
}

/// Calls f(indices) for every strictly increasing k-subset of {0,..,n-1}, in lexicographic order.
template <typename F>
void for_each_subset(Eigen::Index n, Eigen::Index k, F&& f) {
    if (k > n || k < 0) return;
    std::vector<Eigen::Index> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), Eigen::Index{0});
    while (true) {
        f(std::as_const(idx));
        Eigen::Index i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (Eigen::Index j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

/// gcd of the absolute values of all entries (0 for the zero vector).
template <typename Derived>
typename Derived::Scalar content(const Eigen::MatrixBase<Derived>& v) {
    using Scalar = typename Derived::Scalar;
    Scalar g(0);
    for (Eigen::Index i = 0; i < v.size(); ++i) g = detail::scalar_gcd(g, Scalar(v.coeff(i)));
    return g;
}

/// v divided by the gcd of its entries.
template <typename Derived>
Vector<typename Derived::Scalar> primitive(const Eigen::MatrixBase<Derived>& v) {
    using Scalar = typename Derived::Scalar;
    const Scalar g = content(v);
    if (g == Scalar(0)) fail(ErrorKind::ZeroVector, "primitive() of the zero vector");
    Vector<Scalar> out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v.coeff(i) / g;
    return out;
}

template <typename Derived>
bool is_primitive(const Eigen::MatrixBase<Derived>& v) {
    return content(v) == typename Derived::Scalar(1);
}

/// Strict lexicographic order on coordinate vectors (shorter vectors first).
template <typename A, typename B>
bool lex_less(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a.coeff(i) < b.coeff(i)) return true;
        if (b.coeff(i) < a.coeff(i)) return false;
    }
    return false;
}

template <typename A, typename B>
bool same_vector(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
    return a.size() == b.size() && a == b;
}

template <typename Derived>
std::string format_vector(const Eigen::MatrixBase<Derived>& v) {
    std::ostringstream os;
    os << '(';
    for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v.coeff(i);
    os << ')';
    return os.str();
}

/// Places the vectors side by side as the columns of a d x k matrix.
template <typename Scalar>
Matrix<Scalar> stack_columns(std::span<const Vector<Scalar>> vs) {
    if (vs.empty()) return Matrix<Scalar>(0, 0);
    const Eigen::Index d = vs.front().size();
    Matrix<Scalar> m(d, static_cast<Eigen::Index>(vs.size()));
    for (std::size_t j = 0; j < vs.size(); ++j) {
        if (vs[j].size() != d)
            fail(ErrorKind::DimensionMismatch, "vector " + std::to_string(j) + " has dimension " +
                                                   std::to_string(vs[j].size()) + ", expected " +
                                                   std::to_string(d));
        m.col(static_cast<Eigen::Index>(j)) = vs[j];
    }
    return m;
}

inline IntMatrix stack_columns(const std::vector<IntVector>& vs) {
    return stack_columns<Integer>(std::span<const IntVector>(vs));
}

/// Fraction-free reduced row echelon form: every pivot row is primitive with a positive
/// pivot, and pivot columns are zero outside their pivot row.
template <typename Scalar>
struct EchelonForm {
    Matrix<Scalar> reduced;
    std::vector<Eigen::Index> pivot_cols;

    Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_cols.size()); }
};

template <typename Derived>
EchelonForm<typename Derived::Scalar> row_reduce(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    EchelonForm<Scalar> out{input.eval(), {}};
    auto& a = out.reduced;
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();

    auto normalize_row = [&](Eigen::Index i) {
        Scalar g = content(a.row(i));
        if (g > Scalar(1))
            for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = a(i, j) / g;
    };

    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index best = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (a(i, c) == Scalar(0)) continue;
            if (best < 0 || detail::scalar_abs(a(i, c)) < detail::scalar_abs(a(best, c))) best = i;
        }
        if (best < 0) continue;
        if (best != r) a.row(best).swap(a.row(r));
        if (a(r, c) < Scalar(0)) a.row(r) = -a.row(r);
        normalize_row(r);
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == Scalar(0)) continue;
            const Scalar g = detail::scalar_gcd(a(r, c), a(i, c));
            const Scalar keep = a(r, c) / g;
            const Scalar drop = a(i, c) / g;
            for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = keep * a(i, j) - drop * a(r, j);
            normalize_row(i);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    return out;
}

/// Exact rank of the column family.
template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return row_reduce(m).rank();
}

inline Eigen::Index rank(const std::vector<IntVector>& vs) { return rank(stack_columns(vs)); }

/// Integer basis of {x : m x = 0}; each basis column is primitive.
template <typename Derived>
Matrix<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index n = m.cols();
    if (m.rows() == 0) return Matrix<Scalar>::Identity(n, n);
    const auto ech = row_reduce(m);
    Scalar pivot_lcm(1);
    for (Eigen::Index i = 0; i < ech.rank(); ++i)
        pivot_lcm = detail::lcm(pivot_lcm, ech.reduced(i, ech.pivot_cols[i]));

    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (auto c : ech.pivot_cols) is_pivot[c] = true;

    Matrix<Scalar> basis(n, n - ech.rank());
    Eigen::Index out = 0;
    for (Eigen::Index f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector<Scalar> x = Vector<Scalar>::Zero(n);
        x(f) = pivot_lcm;
        for (Eigen::Index i = 0; i < ech.rank(); ++i) {
            const Scalar p = ech.reduced(i, ech.pivot_cols[i]);
            x(ech.pivot_cols[i]) = -(ech.reduced(i, f) * (pivot_lcm / p));
        }
        basis.col(out++) = primitive(x);
    }
    return basis;
}

/// The unique (up to sign) dependency among the columns, or nullopt when they are independent.
template <typename Derived>
std::optional<IntRelation> kernel_relation(const Eigen::MatrixBase<Derived>& m) {
    const auto basis = nullspace(m);
    if (basis.cols() == 0) return std::nullopt;
    if (basis.cols() > 1)
        fail(ErrorKind::NullityTooLarge,
             "vector family has nullity " + std::to_string(basis.cols()) + " (at most 1 allowed)");
    return IntRelation{basis.col(0)};
}

inline std::optional<IntRelation> kernel_relation(const std::vector<IntVector>& vs) {
    if (vs.empty()) return std::nullopt;
    return kernel_relation(stack_columns(vs));
}

/// Determinant by Bareiss fraction-free elimination.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    if (input.rows() != input.cols())
        fail(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    Matrix<Scalar> a = input;
    const Eigen::Index n = a.rows();
    Scalar previous(1);
    bool negate = false;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == Scalar(0)) {
            Eigen::Index swap_row = k + 1;
            while (swap_row < n && a(swap_row, k) == Scalar(0)) ++swap_row;
            if (swap_row == n) return Scalar(0);
            a.row(k).swap(a.row(swap_row));
            negate = !negate;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
        previous = a(k, k);
    }
    if (n == 0) return Scalar(1);
    return negate ? Scalar(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

/// gcd of the absolute values of all k x k minors of the d x k column family.
/// The family must be linearly independent.
template <typename Derived>
typename Derived::Scalar maximal_minor_gcd(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index d = m.rows();
    const Eigen::Index k = m.cols();
    if (k > d || rank(m) < k)
        fail(ErrorKind::DependentInput, "maximal_minor_gcd needs linearly independent vectors");
    Scalar g(0);
    Matrix<Scalar> minor(k, k);
    detail::for_each_subset(d, k, [&](const std::vector<Eigen::Index>& rows) {
        if (g == Scalar(1)) return;
        for (Eigen::Index i = 0; i < k; ++i) minor.row(i) = m.row(rows[i]);
        g = detail::scalar_gcd(g, determinant(minor));
    });
    return g;
}

inline Integer maximal_minor_gcd(const std::vector<IntVector>& vs) {
    if (vs.empty()) return 1;
    return maximal_minor_gcd(stack_columns(vs));
}

/// Writes a rational vector as q / den with q integral and den > 0 minimal.
struct ScaledPoint {
    IntVector numerators;
    Integer denominator;
};

inline ScaledPoint clear_denominators(const RatVector& p) {
    Integer den(1);
    for (Eigen::Index i = 0; i < p.size(); ++i) den = detail::lcm(den, p(i).den());
    IntVector q(p.size());
    for (Eigen::Index i = 0; i < p.size(); ++i) q(i) = p(i).num() * (den / p(i).den());
    return {q, den};
}

inline RatVector to_rational(const IntVector& v) {
    RatVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rational(v(i));
    return out;
}

/// Coordinates of p in the basis formed by the (independent) columns, or nullopt when p is
/// outside their span.
inline std::optional<RatVector> span_coordinates(const IntMatrix& basis, const RatVector& p) {
    if (basis.rows() != p.size())
        fail(ErrorKind::DimensionMismatch, "point dimension " + std::to_string(p.size()) +
                                               " differs from ambient dimension " +
                                               std::to_string(basis.rows()));
    const Eigen::Index k = basis.cols();
    if (rank(basis) < k) fail(ErrorKind::DependentInput, "span_coordinates needs independent rays");

    const auto [q, den] = clear_denominators(p);
    IntMatrix augmented(basis.rows(), k + 1);
    augmented << basis, q;
    const auto relation = kernel_relation(augmented);
    if (!relation) return std::nullopt;
    const Integer last = relation->coeffs(k);
    RatVector out(k);
    for (Eigen::Index i = 0; i < k; ++i) out(i) = Rational(-relation->coeffs(i), last * den);
    return out;
}

/// The unique lambda >= 0 with p = sum_i lambda_i * ray_i, if it exists.
inline std::optional<RatVector> nonneg_combination(const IntMatrix& rays, const RatVector& p) {
    auto coords = span_coordinates(rays, p);
    if (!coords) return std::nullopt;
    for (Eigen::Index i = 0; i < coords->size(); ++i)
        if (sign((*coords)(i)) < 0) return std::nullopt;
    return coords;
}

inline std::optional<RatVector> nonneg_combination(const std::vector<IntVector>& rays,
                                                   const RatVector& p) {
    if (rays.empty()) {
        for (Eigen::Index i = 0; i < p.size(); ++i)
            if (sign(p(i)) != 0) return std::nullopt;
        return RatVector(0);
    }
    return nonneg_combination(stack_columns(rays), p);
}

}  // namespace fancob
