#pragma once

#include "hopfkit/structures.hpp"

#include <optional>
#include <vector>

namespace hopfkit {

// The convolution dg-algebra Hom(C, Ω) with α₁⋆α₂ = m_Ω∘(α₁⊗α₂)∘△_C.
class Convolution {
public:
    Convolution(Coalgebra c, Hopf omega);

    const Coalgebra& coalgebra() const { return c_; }
    const Hopf& omega() const { return h_; }

    GradedMap zero(int degree) const { return GradedMap::zero(c_.space(), h_.space(), degree); }
    GradedMap unit() const { return unit_; }  // e = u_Ω∘ε_C
    GradedMap star(const GradedMap& a, const GradedMap& b) const;
    GradedMap power(const GradedMap& a, int n) const;
    GradedMap d(const GradedMap& a) const;  // ∂_{C,Ω}
    GradedMap inverse(const GradedMap& g) const;  // ς_Ω∘g
    GradedMap bracket(const GradedMap& a, const GradedMap& b) const;  // a⋆b − b⋆a

    Report group_element_report(const GradedMap& g) const;
    bool is_group_element(const GradedMap& g) const { return group_element_report(g).ok(); }
    Report tangential_report(const GradedMap& v) const;
    bool is_tangential(const GradedMap& v) const { return tangential_report(v).ok(); }

    // Basis of the tangential morphisms, as the kernel of their defining linear conditions.
    std::vector<GradedMap> tangential_basis() const;

    void require_context(const GradedMap& a, const char* what) const;

private:
    Coalgebra c_;
    Hopf h_;
    GradedMap unit_;
};

// E_Ω(f)(α′) = α′∘f
GradedMap pullback(const GradedMap& f, const GradedMap& x);
// N_ψ(α) = ψ∘α
GradedMap pushforward(const GradedMap& psi, const GradedMap& x);
// ρ_C(g, α) = m_Ω∘((g∘ε_C)⊗α)∘△_C for g: k → Ω
GradedMap action(const Convolution& conv, const GradedMap& g, const GradedMap& alpha);

struct HomogeneousElement {
    int degree = 0;
    SparseVec v;
};

// Group-like elements x (△x = x⊗x, εx = 1, ∂x = 0), found as joint rational eigenvectors of
// the operators (e^i⊗I)∘△ on Ω₀. Throws std::invalid_argument for filtered Ω, where the set is infinite.
std::vector<SparseVec> group_likes(const Hopf& h);

// Basis of the primitive elements, degree by degree; optionally only basis elements of weight ≤ max_weight.
std::vector<HomogeneousElement> primitives(const Hopf& h, std::optional<int> degree = std::nullopt,
                                           std::optional<int> max_weight = std::nullopt);

struct GroupTable {
    std::vector<GradedMap> elements;
    std::vector<std::vector<int>> product;
    int identity = -1;
    std::vector<int> inverse;
};

// Closes a finite set of group elements of P_Ω(C) under ⋆; throws if the set is not closed.
GroupTable group_table(const Convolution& conv, const std::vector<GradedMap>& elements);
bool tables_isomorphic(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b);

}  // namespace hopfkit
