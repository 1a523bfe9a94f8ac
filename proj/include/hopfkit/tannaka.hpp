#pragma once

#include "hopfkit/comodule.hpp"
#include "hopfkit/completion.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopfkit {

// A finite stand-in for "all left dg-modules over Ω": the modules and morphisms the
// reconstruction argument actually passes through.
struct ProbeFamily {
    struct Morphism {
        std::string name;
        std::string anchor;
        int source = -1, target = -1;
        GradedMap map;
    };
    struct Tensor {
        int left = -1, right = -1, product = -1;
    };

    Hopf omega;
    std::vector<DgModule> modules;
    std::vector<Morphism> morphisms;
    std::vector<Tensor> tensors;
    int ground = -1, regular = -1, dual = -1;
    // Free module Ω⊗M₀ on the auxiliary complex M₀ and its index.
    Complex aux;
    int free_aux = -1;

    int find(const std::string& name) const;  // -1 if absent
};

// k, (Ω, m), (Ω*, γ_{Ω*}), Ω⊗M₀, and for each base module M (Ω and every extra): Ω⊗M, Ω*⊗M, M_*,
// with the structural morphisms, the maps f_z: Ω → Ω⊗M₀, and tensors among the extras.
ProbeFamily standard_probe(const Hopf& omega, const std::vector<DgModule>& extra = {});
// Every listed morphism commutes with the actions and every tensor entry is the module tensor.
Report verify_probe(const ProbeFamily& p);

// f_z(a) = (−1)^{|a||z|} a⊗z
GradedMap free_generator_map(const Hopf& omega, const Space& m, int z);

// A natural endomorphism of C⊗ω, tabulated over a probe family (components in module order).
struct NatEndo {
    Coalgebra c;
    int degree = 0;
    std::vector<GradedMap> components;
    std::optional<GradedMap> determined;  // α when built as η̆(α)
};

NatEndo nat_identity(const ProbeFamily& p, const Coalgebra& c);
NatEndo nat_zero(const ProbeFamily& p, const Coalgebra& c, int degree);
NatEndo nat_compose(const NatEndo& a, const NatEndo& b);  // componentwise a∘b
NatEndo nat_add(const NatEndo& a, const NatEndo& b);
NatEndo nat_scale(const Scalar& s, const NatEndo& a);
bool nat_equal(const NatEndo& a, const NatEndo& b);
std::optional<std::string> nat_difference(const ProbeFamily& p, const NatEndo& a, const NatEndo& b);

// (δη)_M = ∂_{C⊗M, C⊗M} η_M
NatEndo delta_differential(const ProbeFamily& p, const NatEndo& eta);

// η̆(α)_M = p̌(γ_M∘(α⊗I_M))
NatEndo eta_breve(const ProbeFamily& p, const Coalgebra& c, const GradedMap& alpha);
// ğ(η) = q̌(η_Ω)∘(I_C⊗u_Ω)∘ȷ⁻¹
GradedMap g_breve(const ProbeFamily& p, const NatEndo& eta);

// (I⊗ψ)∘η_M = (−1)^{|η||ψ|} η_{M′}∘(I⊗ψ) for every listed ψ, and ř(η_M) = 0.
Report naturality_report(const ProbeFamily& p, const NatEndo& eta);
// η_k = I and η_{M⊗M′} = η_M ⊗_{△_C} η_{M′} on the listed tensors.
Report tensor_condition_report(const ProbeFamily& p, const NatEndo& eta);
// Degree 0, δη = 0, natural, tensor.
Report dg_tensor_report(const ProbeFamily& p, const NatEndo& eta);
// η_{Ω⊗M₀} = η_Ω⊗I_{M₀}
Report free_module_report(const ProbeFamily& p, const NatEndo& eta);

// ς(η)_M = (I⊗γ_M)∘(η_{Ω*}⊗I_M)∘(I⊗u_Ω⊗I_M)∘(I⊗ı⁻¹_M). Throws std::invalid_argument unless η is dg-tensor.
NatEndo varsigma_inverse(const ProbeFamily& p, const NatEndo& eta);

// E_ω(f)(η′)_M = p̌(q̌(η′_M)∘(f⊗I_M)) for f: C → C′.
NatEndo e_omega_pullback(const ProbeFamily& p, const Coalgebra& c, const GradedMap& f, const NatEndo& eta_prime);

// (η(t), λ(t)) with coefficient k holding t^k.
struct NatPair {
    std::vector<NatEndo> eta, lambda;
};
// dη/dt = δλ, η(0) dg-tensor, λ_k = 0, λ_{M⊗M′} = λ_M⊗η_{M′} + η_M⊗λ_{M′}, λ natural.
Report verify_nat_pair(const ProbeFamily& p, const NatPair& pair);
NatPair eta_breve_pair(const ProbeFamily& p, const Coalgebra& c, const HomotopyPair& pair);
HomotopyPair g_breve_pair(const ProbeFamily& p, const NatPair& pair);
// (E_ω(f(t))(η(t)), E_ω(f(t))(λ(t)) + E_ω(s(t))(η(t))) for (f, s) on coalgebra maps C → C′.
NatPair pullback_composite_pair(const ProbeFamily& p, const Coalgebra& c, const HomotopyPair& fs, const NatPair& pair);

struct ReconstructOptions {
    uint64_t seed = 0;
    int random_maps = 3;  // arbitrary α for ğ∘η̆ = id
};

// Sample of P_Ω(C): group-likes when C = k^∨ and Ω is unfiltered, otherwise e and exp of tangential elements.
std::vector<GradedMap> sample_group_elements(const Convolution& conv, uint64_t seed);
// Homotopy pairs on Hom(C, Ω): constant pairs, and for filtered Ω the exp-transport of (t∂σ, σ) for
// tangential σ of degree 1 with ∂σ ≠ 0.
std::vector<HomotopyPair> sample_homotopy_pairs(const Convolution& conv);

// Finite reconstruction check on the given C: η̆ and ğ are inverse and respect ⋆, ς and homotopy.
Report reconstruct(const ProbeFamily& p, const Coalgebra& c, const ReconstructOptions& opt = {});

}  // namespace hopfkit
