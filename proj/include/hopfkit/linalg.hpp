#pragma once

#include "hopfkit/graded_map.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace hopfkit {

// Incremental exact Gaussian elimination over Q.
class LinearSystem {
public:
    explicit LinearSystem(int unknowns) : n_(unknowns), pivot_row_(unknowns, -1) {}

    int unknowns() const { return n_; }
    // Returns false once the system has become inconsistent.
    bool add_equation(SparseVec coeffs, Scalar rhs);
    bool consistent() const { return consistent_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    struct Solution {
        SparseVec particular;
        std::vector<SparseVec> kernel;
    };
    std::optional<Solution> solve() const;

private:
    struct Row {
        SparseVec a;  // leading entry is the pivot, normalized to 1
        Scalar b;
    };
    int n_;
    bool consistent_ = true;
    std::vector<Row> rows_;
    std::vector<int> pivot_row_;
};

// Kernel basis of a matrix given by columns.
std::vector<SparseVec> kernel_basis(int rows, const std::vector<SparseVec>& columns);

// Characteristic polynomial det(xI − A) of a dense square matrix, coefficients from x^0 upward.
std::vector<Scalar> characteristic_polynomial(const std::vector<std::vector<Scalar>>& a);

// Distinct rational roots of a polynomial with rational coefficients (x^0 first).
std::vector<Scalar> rational_roots(std::vector<Scalar> poly);

// An unknown homogeneous map, one variable per degree-admissible entry.
class MapUnknown {
public:
    MapUnknown(Space source, Space target, int degree);
    int size() const { return static_cast<int>(entries_.size()); }
    GradedMap basis(int var) const;
    GradedMap assemble(const SparseVec& values, int offset = 0) const;
    const Space& source() const { return src_; }
    const Space& target() const { return tgt_; }
    int degree() const { return deg_; }

private:
    Space src_, tgt_;
    int deg_;
    std::vector<std::pair<int, int>> entries_;  // (row, col)
};

// op is linear in its arguments; the constraint is op(X) = rhs.
struct MapConstraint {
    std::function<GradedMap(const std::vector<GradedMap>&)> op;
    GradedMap rhs;
};

struct MapSolution {
    std::vector<GradedMap> particular;
    std::vector<std::vector<GradedMap>> kernel;
};

std::optional<MapSolution> solve_for_maps(const std::vector<MapUnknown>& unknowns,
                                          const std::vector<MapConstraint>& constraints);

}  // namespace hopfkit
