#include "hopfkit/completion.hpp"
#include "hopfkit/linalg.hpp"

#include <stdexcept>

namespace hopfkit {

namespace {

GradedMap coproduct_defect(const Convolution& conv, const GradedMap& f, const GradedMap& x) {
    const Hopf& h = conv.omega();
    return compose(h.delta(), x) - compose(tensor_map(f, x) + tensor_map(x, f), conv.coalgebra().delta());
}

SearchResult finish(const Convolution& conv, HomotopyPair p, int bound) {
    poly_trim(p.f);
    poly_trim(p.xi);
    Report r = verify_coalgebra_pair(p, conv.coalgebra(), conv.omega().coalgebra());
    if (!r.ok()) {
        const auto* f = r.first_failure();
        return {std::nullopt, "candidate fails " + f->name + " [" + f->anchor + "] " + f->witness};
    }
    const int deg = poly_degree(p.xi);
    if (deg > bound)
        return {std::nullopt, "pair found but ξ(t) has t-degree " + std::to_string(deg) + " > " + std::to_string(bound)};
    return {std::move(p), "found, ξ(t) of t-degree " + std::to_string(deg)};
}

SearchResult search_filtered(const Convolution& conv, const GradedMap& g, const GradedMap& gt, int bound) {
    const GradedMap v0 = ln_map(conv, g), v1 = ln_map(conv, gt);
    const Coalgebra& c = conv.coalgebra();
    const Hopf& h = conv.omega();
    const GradedMap e = conv.unit();
    std::vector<MapConstraint> cons;
    cons.push_back({[&](const std::vector<GradedMap>& x) { return conv.d(x[0]); }, v1 - v0});
    cons.push_back({[&](const std::vector<GradedMap>& x) { return compose(h.eps(), x[0]); },
                    GradedMap::zero(c.space(), Space::ground(), 1)});
    cons.push_back({[&](const std::vector<GradedMap>& x) { return coproduct_defect(conv, e, x[0]); },
                    GradedMap::zero(c.space(), tensor_space(h.space(), h.space()), 1)});
    auto sol = solve_for_maps({MapUnknown(c.space(), h.space(), 1)}, cons);
    if (!sol) return {std::nullopt, "no constant tangential σ with ∂σ = ln g̃ − ln g"};
    HomotopyPair line{PairKind::Tangential, {v0, v1 - v0}, {sol->particular[0]}};
    return finish(conv, exp_transport(conv, line), bound);
}

SearchResult search_linear(const Convolution& conv, const GradedMap& g, const GradedMap& gt, int bound) {
    const Coalgebra& c = conv.coalgebra();
    const Hopf& h = conv.omega();
    std::vector<MapUnknown> xs;
    for (int k = 0; k <= bound; ++k) xs.emplace_back(c.space(), h.space(), 1);
    std::vector<MapConstraint> cons;
    cons.push_back({[&](const std::vector<GradedMap>& x) {
                        GradedMap acc = conv.zero(0);
                        for (size_t k = 0; k < x.size(); ++k) acc += Scalar(1, static_cast<long>(k + 1)) * conv.d(x[k]);
                        return acc;
                    },
                    gt - g});
    for (int k = 0; k <= bound; ++k)
        cons.push_back({[&, k](const std::vector<GradedMap>& x) { return compose(h.eps(), x[k]); },
                        GradedMap::zero(c.space(), Space::ground(), 1)});
    cons.push_back({[&](const std::vector<GradedMap>& x) { return coproduct_defect(conv, g, x[0]); },
                    GradedMap::zero(c.space(), tensor_space(h.space(), h.space()), 1)});
    auto sol = solve_for_maps(xs, cons);
    if (!sol) return {std::nullopt, "linear conditions have no solution with t-degree ≤ " + std::to_string(bound)};
    HomotopyPair p{PairKind::CoalgebraMap, {g}, sol->particular};
    for (int k = 0; k <= bound; ++k) p.f.push_back(Scalar(1, k + 1) * conv.d(sol->particular[k]));
    return finish(conv, std::move(p), bound);
}

}  // namespace

SearchResult homotopy_search(const Convolution& conv, const GradedMap& g, const GradedMap& gt, int bound) {
    if (bound < 0) throw std::invalid_argument("t-degree bound must be non-negative");
    for (const auto* x : {&g, &gt}) {
        Report r = conv.group_element_report(*x);
        if (!r.ok()) throw std::invalid_argument("endpoint is not in P_Ω(C): " + r.first_failure()->anchor);
    }
    if (g == gt) return {constant_pair(PairKind::CoalgebraMap, g), "endpoints agree; constant pair"};
    return conv.omega().filtered() ? search_filtered(conv, g, gt, bound) : search_linear(conv, g, gt, bound);
}

}  // namespace hopfkit
