#pragma once

#include "hopfkit/homotopy.hpp"

#include <string>
#include <vector>

namespace hopfkit {

Complex tensor_complex(const Complex& a, const Complex& b);
Complex ground_complex();

// Cofree comodule calculus over C. Maps out of C⊗M; M and N are the plain complexes.
//   p̌(α₁) = (I_C⊗α₁)∘(△_C⊗I_M)             Hom(C⊗M, N) → Hom(C⊗M, C⊗N)
//   q̌(α₂) = ı_N∘(ε_C⊗I_N)∘α₂                Hom(C⊗M, C⊗N) → Hom(C⊗M, N)
//   ř(α₂) = (△_C⊗I_N)∘α₂ − (I_C⊗α₂)∘(△_C⊗I_M)
//   š(α₃) = (I_C⊗ı_N)∘(I_C⊗ε_C⊗I_N)∘α₃
GradedMap p_check(const Coalgebra& c, const Space& m, const GradedMap& a1);
GradedMap q_check(const Coalgebra& c, const Space& n, const GradedMap& a2);
GradedMap r_check(const Coalgebra& c, const Space& m, const Space& n, const GradedMap& a2);
GradedMap s_check(const Coalgebra& c, const Space& n, const GradedMap& a3);

// ∂ on Hom(C⊗M, C⊗N)
GradedMap cofree_d(const Coalgebra& c, const Complex& m, const Complex& n, const GradedMap& phi);

// φ⊗_{△}φ′ = (φ⊗q̌(φ′))∘(I_C⊗τ⊗I_{M′})∘(△_C⊗I_M⊗I_{M′}) for φ: C⊗M → C⊗N, φ′: C⊗M′ → C⊗N′
GradedMap comodule_tensor(const Coalgebra& c, const Space& m, const Space& n, const Space& mp, const Space& np,
                          const GradedMap& phi, const GradedMap& phi_prime);

// Whether φ̃ − φ = ∂λ for some λ ∈ End_{△}(C⊗M), by an exact linear solve.
bool same_homology_class(const Coalgebra& c, const Complex& m, const GradedMap& phi, const GradedMap& phi_tilde);

// E_M(f)(φ′) = p̌(q̌(φ′)∘(f⊗I_M)) for a coalgebra map f: C → C′ and φ′ ∈ End_{△}(C′⊗M).
GradedMap e_m_pullback(const Coalgebra& c, const Coalgebra& cp, const Space& m, const GradedMap& f,
                       const GradedMap& phi_prime);

struct ModuleData {
    std::string name;
    Complex cx;
    GradedMap action;  // γ: Ω⊗M → M
};

class DgModule {
public:
    DgModule() = default;
    static DgModule make(const Hopf& omega, ModuleData data);  // throws StructureError

    const std::string& name() const { return data_.name; }
    const Hopf& omega() const { return omega_; }
    const Complex& complex() const { return data_.cx; }
    const Space& space() const { return data_.cx.space; }
    const GradedMap& d() const { return data_.cx.d; }
    const GradedMap& action() const { return data_.action; }
    const ModuleData& data() const { return data_; }

private:
    Hopf omega_;
    ModuleData data_;
};

// Chain map, unit, associativity, and weight compatibility when Ω is filtered.
Report verify_module(const Hopf& omega, const ModuleData& data);

// ops[i] is the action of the i-th basis element of Ω, a degree-|e_i| map M → M.
DgModule module_from_operators(const Hopf& omega, const std::string& name, const Complex& cx,
                               const std::vector<GradedMap>& ops);

DgModule trivial_module(const Hopf& omega);                // (k, m_k∘(ε⊗I))
DgModule regular_module(const Hopf& omega);                // (Ω, m)
DgModule antipodal_module(const Hopf& omega);              // (Ω*, m∘(I⊗ς)∘τ)
DgModule counit_module(const DgModule& m);                 // (M_*, ı∘(ε⊗I))
DgModule free_module(const DgModule& m);                   // (Ω⊗M, m⊗I)
DgModule free_module(const Hopf& omega, const Complex& m, const std::string& name);
DgModule module_tensor(const DgModule& a, const DgModule& b);  // (γ⊗γ′)∘(I⊗τ⊗I)∘(△⊗I⊗I)

// Morphisms have any degree and need not be chain maps: ψ∘γ_M = γ_{M′}∘(I_Ω⊗ψ), the right side
// carrying the Koszul sign (−1)^{|ψ||x|}.
Report module_morphism_report(const GradedMap& psi, const DgModule& a, const DgModule& b);
bool is_module_morphism(const GradedMap& psi, const DgModule& a, const DgModule& b);

struct ModuleMorphism {
    std::string name;
    std::string anchor;
    GradedMap map;
    DgModule source, target;
};
// △_Ω, ε_Ω, γ_M on the regular side and their counterparts on Ω*.
std::vector<ModuleMorphism> structural_module_morphisms(const DgModule& m);

// A representation stored by its universal component ρ^Ω_M(I_Ω) ∈ Z₀Aut_{△_Ω}(Ω⊗M).
struct Representation {
    Hopf omega;
    Complex cx;
    GradedMap universal;
};

// ρ^C_M(g) = p̌(q̌(ρ^Ω_M(I_Ω))∘(g⊗I_M))
GradedMap rep_component(const Representation& r, const Coalgebra& c, const GradedMap& g);
Representation functor_y(const DgModule& m);
// Throws StructureError if the data is not a representation.
DgModule functor_x(const Representation& r, const std::string& name = "X(ρ)");
Representation rep_tensor(const Representation& a, const Representation& b);
// ř, cycle, unit and multiplicativity at the universal pair (Ω⊗Ω, π₁, π₂).
Report verify_representation(const Representation& r);

}  // namespace hopfkit

namespace hopfkit {

// Module over a tensor Hopf algebra from the action of each generator; the word x₁…x_k acts as A_{x₁}∘…∘A_{x_k}.
DgModule generator_module(const Hopf& omega, const std::string& name, const Complex& cx,
                          const std::vector<std::pair<std::string, GradedMap>>& generators);

}  // namespace hopfkit
