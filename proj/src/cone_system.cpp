#include "fancob/cone_system.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <utility>

namespace fancob {

namespace {

struct RowLess {
    bool operator()(const std::pair<IntVector, bool>& a, const std::pair<IntVector, bool>& b) const {
        if (lex_less(a.first, b.first)) return true;
        if (lex_less(b.first, a.first)) return false;
        return a.second < b.second;
    }
};

using RowSet = std::set<std::pair<IntVector, bool>, RowLess>;

// Returns false when the row reduces to the contradiction 0 > 0.
bool insert_row(RowSet& rows, IntVector a, bool strict) {
    const Integer g = content(a);
    if (g == 0) return !strict;
    if (g > 1) a = primitive(a);
    rows.emplace(std::move(a), strict);
    return true;
}

}  // namespace

void HomogeneousSystem::check_dim(const IntVector& a) const {
    if (a.size() != dim_)
        fail(ErrorKind::DimensionMismatch, "constraint of dimension " + std::to_string(a.size()) +
                                               " in a system of dimension " + std::to_string(dim_));
}

HomogeneousSystem& HomogeneousSystem::add_equality(const IntVector& a) {
    check_dim(a);
    equalities_.push_back(a);
    return *this;
}

HomogeneousSystem& HomogeneousSystem::add_inequality(const IntVector& a) {
    check_dim(a);
    inequalities_.push_back({a, false});
    return *this;
}

HomogeneousSystem& HomogeneousSystem::add_strict(const IntVector& a) {
    check_dim(a);
    inequalities_.push_back({a, true});
    return *this;
}

HomogeneousSystem& HomogeneousSystem::append(const HomogeneousSystem& other) {
    if (other.dim_ != dim_) fail(ErrorKind::DimensionMismatch, "appending systems of different dimension");
    equalities_.insert(equalities_.end(), other.equalities_.begin(), other.equalities_.end());
    inequalities_.insert(inequalities_.end(), other.inequalities_.begin(), other.inequalities_.end());
    return *this;
}

bool HomogeneousSystem::has_strict() const {
    return std::any_of(inequalities_.begin(), inequalities_.end(), [](const Row& r) { return r.strict; });
}

bool HomogeneousSystem::feasible() const {
    if (!has_strict()) return true;

    std::vector<IntVector> eqs = equalities_;
    std::vector<Row> ineqs = inequalities_;

    // Substitute the equalities away one variable at a time.
    for (std::size_t e = 0; e < eqs.size(); ++e) {
        const IntVector pivot_row = eqs[e];
        Eigen::Index var = -1;
        for (Eigen::Index j = 0; j < dim_; ++j)
            if (pivot_row(j) != 0) {
                var = j;
                break;
            }
        if (var < 0) continue;
        const Integer p = pivot_row(var);
        const Integer scale = abs(p);
        const int s = sign(p);
        auto eliminate = [&](IntVector& row) {
            if (row(var) == 0) return;
            const Integer factor = row(var) * s;
            row = scale * row - factor * pivot_row;
            const Integer g = content(row);
            if (g > 1) row = primitive(row);
        };
        for (std::size_t other = e + 1; other < eqs.size(); ++other) eliminate(eqs[other]);
        for (auto& row : ineqs) eliminate(row.a);
    }

    RowSet rows;
    for (auto& r : ineqs)
        if (!insert_row(rows, r.a, r.strict)) return false;

    std::vector<bool> eliminated(static_cast<std::size_t>(dim_), false);
    for (Eigen::Index step = 0; step < dim_; ++step) {
        // Pick the variable with the smallest Fourier-Motzkin fan-out.
        Eigen::Index var = -1;
        long long best_cost = std::numeric_limits<long long>::max();
        for (Eigen::Index j = 0; j < dim_; ++j) {
            if (eliminated[j]) continue;
            long long pos = 0, neg = 0;
            for (const auto& [a, strict] : rows) {
                if (a(j) > 0) ++pos;
                else if (a(j) < 0) ++neg;
            }
            const long long cost = pos * neg - pos - neg;
            if (cost < best_cost) {
                best_cost = cost;
                var = j;
            }
        }
        eliminated[var] = true;

        std::vector<std::pair<IntVector, bool>> pos, neg;
        RowSet next;
        for (const auto& [a, strict] : rows) {
            if (a(var) > 0) pos.emplace_back(a, strict);
            else if (a(var) < 0) neg.emplace_back(a, strict);
            else next.emplace(a, strict);
        }
        for (const auto& [pa, ps] : pos)
            for (const auto& [na, ns] : neg) {
                IntVector combined = (-na(var)) * pa + pa(var) * na;
                if (!insert_row(next, std::move(combined), ps || ns)) return false;
            }
        rows = std::move(next);
        if (rows.empty()) return true;
    }
    // Every surviving row is identically zero; insert_row has already rejected 0 > 0.
    return true;
}

}  // namespace fancob
