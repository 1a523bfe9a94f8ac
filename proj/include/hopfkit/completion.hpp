#pragma once

#include "hopfkit/homotopy.hpp"

namespace hopfkit {

// Least weight of a basis element hit by the map; cap + 1 for the zero map.
int filtration_degree(const GradedMap& a);
// Drops the components of weight > w.
GradedMap truncate_weight(const GradedMap& a, int w);

// Require a filtered Ω. exp needs ε∘υ = 0, ln needs ε∘g = ε; both series stop once the
// powers vanish, which happens by weight N + 1.
GradedMap exp_map(const Convolution& conv, const GradedMap& v);
GradedMap ln_map(const Convolution& conv, const GradedMap& g);
Poly exp_poly(const Convolution& conv, const Poly& v);
Poly ln_poly(const Convolution& conv, const Poly& g);

// ln(exp a ⋆ exp b), with components of weight > order dropped. Requires order ≤ N.
GradedMap bch(const Convolution& conv, const GradedMap& a, const GradedMap& b, int order);

// For f: C → C′ a coalgebra map: exp(υ′)∘f = exp(υ′∘f) and ln(g′)∘f = ln(g′∘f).
Report exp_naturality_report(const Convolution& on_c, const Convolution& on_cprime, const GradedMap& f,
                             const GradedMap& v_prime, const GradedMap& g_prime);

// (υ, σ) ↦ (exp υ, Σ_n 1/n! Σ_j υ^{j−1}⋆σ⋆υ^{n−j})
HomotopyPair exp_transport(const Convolution& conv, const HomotopyPair& tangential);
// (g, χ) ↦ (ln g, Σ_n (−1)^{n+1}/n Σ_j ḡ^{j−1}⋆χ⋆ḡ^{n−j}), ḡ = g − e
HomotopyPair ln_transport(const Convolution& conv, const HomotopyPair& pair);

// Hopf pair on Ω: ψ_t(y) = exp(t x₀) y exp(−t x₀), ξ_t(y) = x₁ψ_t(y) − (−1)^{|y|}ψ_t(y)x₁,
// for a primitive degree-0 x₀ and x₁ with ∂x₁ = x₀.
HomotopyPair inner_conjugation_pair(const Hopf& h, const SparseVec& x0, const SparseVec& x1);

}  // namespace hopfkit
