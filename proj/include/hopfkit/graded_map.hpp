#pragma once

#include "hopfkit/scalar.hpp"
#include "hopfkit/space.hpp"

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hopfkit {

// Sorted by row index, no explicit zeros.
using SparseVec = std::vector<std::pair<int, Scalar>>;

struct SpaceMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A degree-homogeneous linear map between graded spaces, stored by columns.
class GradedMap {
public:
    GradedMap() = default;
    GradedMap(Space source, Space target, int degree);

    static GradedMap identity(const Space& v);
    static GradedMap zero(const Space& s, const Space& t, int degree) { return GradedMap(s, t, degree); }

    const Space& source() const { return src_; }
    const Space& target() const { return tgt_; }
    int degree() const { return deg_; }

    const SparseVec& column(int j) const { return cols_[j]; }
    Scalar entry(int row, int col) const;

    // Adds c at (row, col). Throws if the entry would break homogeneity.
    void add(int row, int col, const Scalar& c);
    void add(const std::vector<std::string>& row, const std::vector<std::string>& col, const Scalar& c);
    void set_column(int col, SparseVec v);

    bool is_zero() const;
    size_t nonzeros() const;

    GradedMap& operator+=(const GradedMap& o);
    GradedMap& operator-=(const GradedMap& o);
    GradedMap& operator*=(const Scalar& c);
    friend GradedMap operator+(GradedMap a, const GradedMap& b) { return a += b; }
    friend GradedMap operator-(GradedMap a, const GradedMap& b) { return a -= b; }
    friend GradedMap operator*(const Scalar& c, GradedMap a) { return a *= c; }
    friend GradedMap operator*(GradedMap a, const Scalar& c) { return a *= c; }
    GradedMap operator-() const;

    bool operator==(const GradedMap& o) const;
    bool operator!=(const GradedMap& o) const { return !(*this == o); }

    // Value on a source vector.
    SparseVec apply(const SparseVec& v) const;

    // Same entries, relabeled onto spaces with matching labels.
    GradedMap retarget(const Space& s, const Space& t) const;

    std::string describe_column(int j) const;

private:
    Space src_, tgt_;
    int deg_ = 0;
    std::vector<SparseVec> cols_;
};

std::string describe_vector(const Space& s, const SparseVec& v);

// First source basis element on which a and b differ, rendered as text.
std::optional<std::string> difference_witness(const GradedMap& a, const GradedMap& b);

void require_same(const Space& a, const Space& b, const char* what);

// g∘f
GradedMap compose(const GradedMap& g, const GradedMap& f);
GradedMap compose(std::initializer_list<GradedMap> chain);  // left-to-right = outermost first

// (f⊗g)(v⊗w) = (−1)^{|g||v|} f(v)⊗g(w). The only place the Koszul rule is applied.
GradedMap tensor_map(const GradedMap& f, const GradedMap& g);
GradedMap tensor_maps(std::initializer_list<GradedMap> fs);

// τ(x⊗y) = (−1)^{|x||y|} y⊗x
GradedMap koszul_twist(const Space& v, const Space& w);

// ∂f = ∂_W∘f − (−1)^{|f|} f∘∂_V
GradedMap hom_differential(const GradedMap& f, const GradedMap& dv, const GradedMap& dw);

// ∂_{V⊗W} = ∂_V⊗I + I⊗∂_W
GradedMap tensor_differential(const GradedMap& dv, const GradedMap& dw);

// Canonical isomorphisms k⊗V → V and V⊗k → V and their inverses.
GradedMap unit_left(const Space& v);
GradedMap unit_left_inv(const Space& v);
GradedMap unit_right(const Space& v);
GradedMap unit_right_inv(const Space& v);

// Identity on the first `count` factors of a tensor space tensored with f on the rest.
GradedMap id_tensor(const Space& left, const GradedMap& f);
GradedMap tensor_id(const GradedMap& f, const Space& right);

// Element of V as the degree-|x| map k → V.
GradedMap element(const Space& v, const SparseVec& x, int degree);
GradedMap basis_element(const Space& v, int i);
SparseVec value_at_one(const GradedMap& x);

// Scalar of a map into k evaluated at column j.
Scalar scalar_entry(const GradedMap& f, int col);

}  // namespace hopfkit
