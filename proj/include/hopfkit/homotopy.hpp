#pragma once

#include "hopfkit/convolution.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hopfkit {

// Polynomial in t with map coefficients; index k holds the t^k coefficient.
using Poly = std::vector<GradedMap>;
using MapOp = std::function<GradedMap(const GradedMap&, const GradedMap&)>;

Poly poly_add(const Poly& p, const Poly& q);
Poly poly_scale(const Scalar& c, const Poly& p);
Poly poly_product(const Poly& p, const Poly& q, const MapOp& op);
Poly poly_apply(const Poly& p, const std::function<GradedMap(const GradedMap&)>& op);
Poly poly_derivative(const Poly& p);
GradedMap poly_eval(const Poly& p, const Scalar& t);
// Highest index with a nonzero coefficient, −1 for the zero polynomial.
int poly_degree(const Poly& p);
void poly_trim(Poly& p);

enum class PairKind { CoalgebraMap, HopfMap, Tangential, NatEndo };
std::string kind_name(PairKind k);
PairKind parse_kind(const std::string& s);

struct HomotopyPair {
    PairKind kind = PairKind::CoalgebraMap;
    Poly f;   // degree 0
    Poly xi;  // degree +1

    GradedMap start() const { return poly_eval(f, 0); }
    GradedMap end() const { return poly_eval(f, 1); }
};

HomotopyPair constant_pair(PairKind kind, const GradedMap& f);

// d/dt f(t) = ∂ξ(t) plus the infinitesimal coalgebra-map conditions, for f(t): C → D.
Report verify_coalgebra_pair(const HomotopyPair& p, const Coalgebra& c, const Coalgebra& d);
// Adds the infinitesimal algebra-map conditions, for ψ(t): Ω → Ω′.
Report verify_hopf_pair(const HomotopyPair& p, const Hopf& a, const Hopf& b);
// Tangential pairs (υ(t), σ(t)) on Hom(C, Ω).
Report verify_tangential_pair(const HomotopyPair& p, const Convolution& conv);
// Dispatches on kind for pairs on Hom(C, Ω).
Report verify_homotopy_pair(const HomotopyPair& p, const Convolution& conv);

// (g₁⋆g₂, χ₁⋆g₂ + g₁⋆χ₂)
HomotopyPair star_pairs(const Convolution& conv, const HomotopyPair& p1, const HomotopyPair& p2);
// (ς∘g, ς∘χ)
HomotopyPair antipode_pair(const Convolution& conv, const HomotopyPair& p);
// (g′∘f, g′∘λ + λ′∘f) for (f, λ) on C → C′ and (g′, λ′) on C′ → Ω
HomotopyPair compose_pairs(const HomotopyPair& f, const HomotopyPair& g);
// (ψ∘g, ψ∘χ + ξ∘g) for a Hopf pair (ψ, ξ)
HomotopyPair hopf_pushforward_pair(const HomotopyPair& psi, const HomotopyPair& g);
// ([υ₁,υ₂], [σ₁,υ₂] + [υ₁,σ₂])
HomotopyPair bracket_pairs(const Convolution& conv, const HomotopyPair& p1, const HomotopyPair& p2);
// (υ′∘f, υ′∘λ + σ′∘f)
HomotopyPair tangential_compose(const HomotopyPair& f, const HomotopyPair& v);
// (ψ∘υ, ψ∘σ + ξ∘υ)
HomotopyPair tangential_pushforward(const HomotopyPair& psi, const HomotopyPair& v);

struct SearchResult {
    std::optional<HomotopyPair> pair;
    std::string message;
};

// Looks for a homotopy pair from g to g̃ whose ξ(t) has t-degree ≤ bound. A failure only means
// nothing was found inside the ansatz.
//  - filtered Ω: solve ∂σ = ln g̃ − ln g for a tangential constant σ, then exp-transport the
//    straight line υ(t) = ln g + t(ln g̃ − ln g);
//  - otherwise: solve the linear part (endpoint, ε∘ξ = 0, the t⁰ coproduct condition) and
//    verify the remaining quadratic conditions.
SearchResult homotopy_search(const Convolution& conv, const GradedMap& g, const GradedMap& gt, int bound);

}  // namespace hopfkit
