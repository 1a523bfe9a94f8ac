#include "hopfkit/tannaka.hpp"

#include "hopfkit/builders.hpp"
#include "hopfkit/linalg.hpp"

#include <random>

namespace hopfkit {

namespace {

GradedMap id(const Space& s) { return GradedMap::identity(s); }

const DgModule& mod(const ProbeFamily& p, int i) { return p.modules.at(static_cast<size_t>(i)); }

std::string failure_text(const Report& r) {
    const CheckResult* f = r.first_failure();
    return f ? f->name + " [" + f->anchor + "] " + f->witness : "";
}

void require_family(const ProbeFamily& p, const NatEndo& eta) {
    if (eta.components.size() != p.modules.size())
        throw std::invalid_argument("natural endomorphism is not tabulated on this probe family");
}

int add_module(ProbeFamily& p, const DgModule& m) {
    if (int i = p.find(m.name()); i >= 0) return i;
    p.modules.push_back(m);
    return static_cast<int>(p.modules.size()) - 1;
}

}  // namespace

int ProbeFamily::find(const std::string& name) const {
    for (size_t i = 0; i < modules.size(); ++i)
        if (modules[i].name() == name) return static_cast<int>(i);
    return -1;
}

GradedMap free_generator_map(const Hopf& omega, const Space& m, int z) {
    const Space& os = omega.space();
    const Space om = tensor_space(os, m);
    GradedMap f(os, om, m.degree(z));
    for (int a = 0; a < os.dim(); ++a) {
        std::vector<std::string> label = os.label(a);
        const auto& lz = m.label(z);
        label.insert(label.end(), lz.begin(), lz.end());
        const int row = om.index_of(label);
        if (row >= 0) f.add(row, a, sign_of(os.degree(a) * m.degree(z)));
    }
    return f;
}

ProbeFamily standard_probe(const Hopf& omega, const std::vector<DgModule>& extra) {
    ProbeFamily p;
    p.omega = omega;
    const DgModule k = trivial_module(omega), reg = regular_module(omega), star = antipodal_module(omega);
    p.ground = add_module(p, k);
    p.regular = add_module(p, reg);
    p.dual = add_module(p, star);
    const Space z = Space::atomic("Z", {"z1", "z0"}, {1, 0});
    GradedMap dz(z, z, -1);
    dz.add(1, 0, 1);
    p.aux = {z, dz};
    p.free_aux = add_module(p, free_module(omega, p.aux, "Z"));
    for (int i = 0; i < z.dim(); ++i)
        p.morphisms.push_back({"f_" + z.label(i)[0], "f_z(a) = (−1)^{|a||z|} a⊗z", p.regular, p.free_aux,
                               free_generator_map(omega, z, i)});

    const int rr = add_module(p, module_tensor(reg, reg));
    p.tensors.push_back({p.regular, p.regular, rr});
    p.morphisms.push_back({"delta", "△_Ω: (Ω, m) → (Ω⊗Ω, γ_{Ω⊗Ω})", p.regular, rr, omega.delta()});
    p.morphisms.push_back({"eps", "ε_Ω: (Ω, m) → (k, γ_k)", p.regular, p.ground, omega.eps()});
    const int ss = add_module(p, module_tensor(star, star));
    p.tensors.push_back({p.dual, p.dual, ss});
    p.morphisms.push_back({"delta*", "△_Ω: Ω* → Ω*⊗Ω*", p.dual, ss, omega.delta()});
    p.morphisms.push_back({"eps*", "ε_Ω: Ω* → k", p.dual, p.ground, omega.eps()});
    p.tensors.push_back({p.ground, p.regular, add_module(p, module_tensor(k, reg))});

    std::vector<int> bases{p.regular};
    for (const DgModule& m : extra) {
        require_same(m.omega().space(), omega.space(), "probe module");
        bases.push_back(add_module(p, m));
    }
    for (int b : bases) {
        const DgModule base = mod(p, b);
        const int fb = add_module(p, free_module(base));
        p.morphisms.push_back({"action:" + base.name(), "γ_M: (Ω⊗M, m⊗I) → (M, γ_M)", fb, b, base.action()});
        const int sb = add_module(p, module_tensor(star, base));
        const int cb = add_module(p, counit_module(base));
        p.tensors.push_back({p.dual, b, sb});
        p.morphisms.push_back({"action*:" + base.name(), "γ_M: Ω*⊗M → M_*", sb, cb, base.action()});
    }
    for (size_t i = 1; i < bases.size(); ++i)
        for (size_t j = i; j < bases.size(); ++j) {
            const DgModule a = mod(p, bases[i]), b = mod(p, bases[j]);
            p.tensors.push_back({bases[i], bases[j], add_module(p, module_tensor(a, b))});
        }
    return p;
}

Report verify_probe(const ProbeFamily& p) {
    Report r;
    r.add("required", "k, (Ω, m), (Ω*, γ_{Ω*}) and a free module are present",
          p.ground >= 0 && p.regular >= 0 && p.dual >= 0 && p.free_aux >= 0);
    for (const auto& m : p.morphisms) {
        Report one = module_morphism_report(m.map, mod(p, m.source), mod(p, m.target));
        for (auto& e : one.entries) e.anchor = m.anchor;
        r.merge(one, "morphism[" + m.name + "].");
    }
    for (const auto& t : p.tensors) {
        const DgModule& a = mod(p, t.left);
        const DgModule& b = mod(p, t.right);
        r.expect_equal("tensor[" + mod(p, t.product).name() + "]", "γ_{M⊗M′} = (γ⊗γ′)∘(I⊗τ⊗I)∘(△⊗I⊗I)",
                       mod(p, t.product).action(), module_tensor(a, b).action());
    }
    return r;
}

NatEndo nat_identity(const ProbeFamily& p, const Coalgebra& c) {
    NatEndo n{c, 0, {}, compose(p.omega.unit(), c.eps())};
    for (const auto& m : p.modules) n.components.push_back(id(tensor_space(c.space(), m.space())));
    return n;
}

NatEndo nat_zero(const ProbeFamily& p, const Coalgebra& c, int degree) {
    NatEndo n{c, degree, {}, GradedMap::zero(c.space(), p.omega.space(), degree)};
    for (const auto& m : p.modules) {
        const Space s = tensor_space(c.space(), m.space());
        n.components.push_back(GradedMap::zero(s, s, degree));
    }
    return n;
}

NatEndo nat_compose(const NatEndo& a, const NatEndo& b) {
    if (a.components.size() != b.components.size()) throw std::invalid_argument("nat_compose: different families");
    NatEndo n{a.c, a.degree + b.degree, {}, std::nullopt};
    for (size_t i = 0; i < a.components.size(); ++i) n.components.push_back(compose(a.components[i], b.components[i]));
    return n;
}

NatEndo nat_add(const NatEndo& a, const NatEndo& b) {
    if (a.components.size() != b.components.size()) throw std::invalid_argument("nat_add: different families");
    NatEndo n{a.c, a.degree, {}, std::nullopt};
    for (size_t i = 0; i < a.components.size(); ++i) n.components.push_back(a.components[i] + b.components[i]);
    return n;
}

NatEndo nat_scale(const Scalar& s, const NatEndo& a) {
    NatEndo n{a.c, a.degree, {}, std::nullopt};
    for (const auto& x : a.components) n.components.push_back(s * x);
    return n;
}

bool nat_equal(const NatEndo& a, const NatEndo& b) { return a.components == b.components; }

std::optional<std::string> nat_difference(const ProbeFamily& p, const NatEndo& a, const NatEndo& b) {
    if (a.components.size() != b.components.size()) return "different probe families";
    for (size_t i = 0; i < a.components.size(); ++i)
        if (auto w = difference_witness(a.components[i], b.components[i])) return "at " + p.modules[i].name() + ": " + *w;
    return std::nullopt;
}

NatEndo delta_differential(const ProbeFamily& p, const NatEndo& eta) {
    require_family(p, eta);
    NatEndo n{eta.c, eta.degree - 1, {}, std::nullopt};
    for (size_t i = 0; i < p.modules.size(); ++i)
        n.components.push_back(cofree_d(eta.c, p.modules[i].complex(), p.modules[i].complex(), eta.components[i]));
    return n;
}

NatEndo eta_breve(const ProbeFamily& p, const Coalgebra& c, const GradedMap& alpha) {
    require_same(alpha.source(), c.space(), "η̆ source");
    require_same(alpha.target(), p.omega.space(), "η̆ target");
    NatEndo n{c, alpha.degree(), {}, alpha};
    for (const auto& m : p.modules)
        n.components.push_back(p_check(c, m.space(), compose(m.action(), tensor_map(alpha, id(m.space())))));
    return n;
}

GradedMap g_breve(const ProbeFamily& p, const NatEndo& eta) {
    if (p.regular < 0 || static_cast<size_t>(p.regular) >= eta.components.size())
        throw std::invalid_argument("ğ needs the component at the regular module (Ω, m)");
    const Space& os = p.omega.space();
    const Space& cs = eta.c.space();
    return compose({q_check(eta.c, os, eta.components[static_cast<size_t>(p.regular)]),
                    tensor_map(id(cs), p.omega.unit()), unit_right_inv(cs)});
}

Report naturality_report(const ProbeFamily& p, const NatEndo& eta) {
    require_family(p, eta);
    Report r;
    const Space& cs = eta.c.space();
    for (size_t i = 0; i < p.modules.size(); ++i)
        r.expect_zero("comodule[" + p.modules[i].name() + "]", "ř(η_M) = 0",
                      r_check(eta.c, p.modules[i].space(), p.modules[i].space(), eta.components[i]));
    for (const auto& m : p.morphisms) {
        const GradedMap ipsi = tensor_map(id(cs), m.map);
        r.expect_equal("natural[" + m.name + "]", "(I⊗ψ)∘η_M = (−1)^{|η||ψ|} η_{M′}∘(I⊗ψ)",
                       compose(ipsi, eta.components[static_cast<size_t>(m.source)]),
                       sign_of(eta.degree * m.map.degree()) * compose(eta.components[static_cast<size_t>(m.target)], ipsi));
    }
    return r;
}

Report tensor_condition_report(const ProbeFamily& p, const NatEndo& eta) {
    require_family(p, eta);
    Report r;
    r.expect_equal("unit", "η_k = I_{C⊗k}", eta.components[static_cast<size_t>(p.ground)],
                   id(tensor_space(eta.c.space(), mod(p, p.ground).space())));
    for (const auto& t : p.tensors) {
        const Space& a = mod(p, t.left).space();
        const Space& b = mod(p, t.right).space();
        r.expect_equal("tensor[" + mod(p, t.product).name() + "]", "η_{M⊗M′} = η_M ⊗_{△_C} η_{M′}",
                       eta.components[static_cast<size_t>(t.product)],
                       comodule_tensor(eta.c, a, a, b, b, eta.components[static_cast<size_t>(t.left)],
                                       eta.components[static_cast<size_t>(t.right)]));
    }
    return r;
}

Report dg_tensor_report(const ProbeFamily& p, const NatEndo& eta) {
    Report r;
    r.add("degree", "|η| = 0", eta.degree == 0, eta.degree == 0 ? "" : "degree " + std::to_string(eta.degree));
    const NatEndo d = delta_differential(p, eta);
    for (size_t i = 0; i < p.modules.size(); ++i)
        r.expect_zero("cycle[" + p.modules[i].name() + "]", "δη = 0", d.components[i]);
    r.merge(naturality_report(p, eta));
    r.merge(tensor_condition_report(p, eta));
    return r;
}

Report free_module_report(const ProbeFamily& p, const NatEndo& eta) {
    require_family(p, eta);
    Report r;
    r.expect_equal("free", "η_{Ω⊗M} = η_Ω⊗I_M", eta.components[static_cast<size_t>(p.free_aux)],
                   tensor_map(eta.components[static_cast<size_t>(p.regular)], id(p.aux.space)));
    return r;
}

NatEndo varsigma_inverse(const ProbeFamily& p, const NatEndo& eta) {
    Report pre = dg_tensor_report(p, eta);
    if (!pre.ok()) throw std::invalid_argument("ς(η) needs a dg-tensor η: " + failure_text(pre));
    const Space& cs = eta.c.space();
    const GradedMap& es = eta.components[static_cast<size_t>(p.dual)];
    NatEndo n{eta.c, 0, {}, std::nullopt};
    for (const auto& m : p.modules) {
        const Space& ms = m.space();
        n.components.push_back(compose({tensor_map(id(cs), m.action()), tensor_map(es, id(ms)),
                                        tensor_maps({id(cs), p.omega.unit(), id(ms)}), tensor_map(id(cs), unit_left_inv(ms))}));
    }
    return n;
}

NatEndo e_omega_pullback(const ProbeFamily& p, const Coalgebra& c, const GradedMap& f, const NatEndo& eta_prime) {
    require_family(p, eta_prime);
    NatEndo n{c, eta_prime.degree, {}, std::nullopt};
    for (size_t i = 0; i < p.modules.size(); ++i)
        n.components.push_back(e_m_pullback(c, eta_prime.c, p.modules[i].space(), f, eta_prime.components[i]));
    return n;
}

namespace {

const NatEndo& coeff(const std::vector<NatEndo>& v, size_t k, const NatEndo& zero) { return k < v.size() ? v[k] : zero; }

}  // namespace

Report verify_nat_pair(const ProbeFamily& p, const NatPair& pair) {
    Report r;
    if (pair.eta.empty()) {
        r.add("shape", "η(t) has a constant term", false, "empty η(t)");
        return r;
    }
    const Coalgebra& c = pair.eta[0].c;
    const NatEndo z0 = nat_zero(p, c, 0), z1 = nat_zero(p, c, 1);
    const size_t len = std::max(pair.eta.size(), pair.lambda.size() + 1);
    for (size_t k = 0; k + 1 < len; ++k) {
        const NatEndo lhs = nat_scale(Scalar(static_cast<long>(k + 1)), coeff(pair.eta, k + 1, z0));
        const NatEndo rhs = delta_differential(p, coeff(pair.lambda, k, z1));
        auto w = nat_difference(p, lhs, rhs);
        r.add("flow[t^" + std::to_string(k) + "]", "dη/dt = δλ", !w, w.value_or(""));
    }
    r.merge(dg_tensor_report(p, pair.eta[0]), "start.");
    for (size_t k = 0; k < pair.lambda.size(); ++k) {
        const std::string tk = "[t^" + std::to_string(k) + "]";
        const NatEndo& lam = pair.lambda[k];
        r.expect_zero("ground" + tk, "λ_k = 0", lam.components[static_cast<size_t>(p.ground)]);
        for (const auto& t : p.tensors) {
            const Space& a = mod(p, t.left).space();
            const Space& b = mod(p, t.right).space();
            const auto L = static_cast<size_t>(t.left), R = static_cast<size_t>(t.right);
            GradedMap rhs = GradedMap::zero(lam.components[static_cast<size_t>(t.product)].source(),
                                            lam.components[static_cast<size_t>(t.product)].target(), 1);
            for (size_t i = 0; i <= k; ++i) {
                const NatEndo& li = coeff(pair.lambda, i, z1);
                const NatEndo& ej = coeff(pair.eta, k - i, z0);
                rhs += comodule_tensor(c, a, a, b, b, li.components[L], ej.components[R]);
                rhs += comodule_tensor(c, a, a, b, b, ej.components[L], li.components[R]);
            }
            r.expect_equal("tensor" + tk + "[" + mod(p, t.product).name() + "]",
                           "λ_{M⊗M′} = λ_M⊗_{△_C}η_{M′} + η_M⊗_{△_C}λ_{M′}",
                           lam.components[static_cast<size_t>(t.product)], rhs);
        }
        r.merge(naturality_report(p, lam), "lambda" + tk + ".");
    }
    return r;
}

NatPair eta_breve_pair(const ProbeFamily& p, const Coalgebra& c, const HomotopyPair& pair) {
    NatPair n;
    for (const auto& f : pair.f) n.eta.push_back(eta_breve(p, c, f));
    for (const auto& x : pair.xi) n.lambda.push_back(eta_breve(p, c, x));
    return n;
}

HomotopyPair g_breve_pair(const ProbeFamily& p, const NatPair& pair) {
    HomotopyPair h{PairKind::CoalgebraMap, {}, {}};
    for (const auto& e : pair.eta) h.f.push_back(g_breve(p, e));
    for (const auto& l : pair.lambda) h.xi.push_back(g_breve(p, l));
    poly_trim(h.f);
    poly_trim(h.xi);
    return h;
}

NatPair pullback_composite_pair(const ProbeFamily& p, const Coalgebra& c, const HomotopyPair& fs, const NatPair& pair) {
    if (pair.eta.empty() || fs.f.empty()) throw std::invalid_argument("pullback composite: empty pair");
    NatPair out;
    const size_t nx = fs.f.size() + pair.eta.size() - 1;
    for (size_t k = 0; k < nx; ++k) {
        NatEndo acc = nat_zero(p, c, 0);
        for (size_t i = 0; i < fs.f.size(); ++i)
            if (k >= i && k - i < pair.eta.size()) acc = nat_add(acc, e_omega_pullback(p, c, fs.f[i], pair.eta[k - i]));
        out.eta.push_back(acc);
    }
    const size_t nl = std::max(fs.f.size() + pair.lambda.size(), fs.xi.size() + pair.eta.size());
    for (size_t k = 0; k + 1 < nl; ++k) {
        NatEndo acc = nat_zero(p, c, 1);
        for (size_t i = 0; i < fs.f.size(); ++i)
            if (k >= i && k - i < pair.lambda.size()) acc = nat_add(acc, e_omega_pullback(p, c, fs.f[i], pair.lambda[k - i]));
        for (size_t i = 0; i < fs.xi.size(); ++i)
            if (k >= i && k - i < pair.eta.size()) acc = nat_add(acc, e_omega_pullback(p, c, fs.xi[i], pair.eta[k - i]));
        out.lambda.push_back(acc);
    }
    return out;
}

std::vector<GradedMap> sample_group_elements(const Convolution& conv, uint64_t seed) {
    const Hopf& h = conv.omega();
    const Coalgebra& c = conv.coalgebra();
    std::vector<GradedMap> out{conv.unit()};
    auto push = [&](const GradedMap& g) {
        for (const auto& x : out)
            if (x == g) return;
        out.push_back(g);
    };
    if (!h.filtered()) {
        for (const auto& v : group_likes(h)) push(compose(element(h.space(), v, 0), c.eps()));
        return out;
    }
    const std::vector<GradedMap> basis = conv.tangential_basis();
    for (size_t i = 0; i < basis.size() && i < 3; ++i) push(exp_map(conv, basis[i]));
    if (!basis.empty()) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> num(-2, 2), den(1, 2);
        GradedMap v = conv.zero(0);
        for (const auto& b : basis) v += Scalar(num(rng), den(rng)) * b;
        push(exp_map(conv, v));
    }
    return out;
}

std::vector<HomotopyPair> sample_homotopy_pairs(const Convolution& conv) {
    std::vector<HomotopyPair> out{constant_pair(PairKind::CoalgebraMap, conv.unit())};
    if (!conv.omega().filtered()) return out;
    const Hopf& h = conv.omega();
    const Coalgebra& c = conv.coalgebra();
    const GradedMap e = conv.unit();
    std::vector<MapConstraint> cons;
    cons.push_back({[&](const std::vector<GradedMap>& a) { return compose(h.eps(), a[0]); },
                    GradedMap::zero(c.space(), Space::ground(), 1)});
    cons.push_back({[&](const std::vector<GradedMap>& a) {
                        return compose(h.delta(), a[0]) - compose(tensor_map(e, a[0]) + tensor_map(a[0], e), c.delta());
                    },
                    GradedMap::zero(c.space(), tensor_space(h.space(), h.space()), 1)});
    auto sol = solve_for_maps({MapUnknown(c.space(), h.space(), 1)}, cons);
    if (!sol) return out;
    int taken = 0;
    for (const auto& k : sol->kernel) {
        const GradedMap& sigma = k[0];
        const GradedMap v = conv.d(sigma);
        if (v.is_zero()) continue;
        HomotopyPair line{PairKind::Tangential, {conv.zero(0), v}, {sigma}};
        out.push_back(exp_transport(conv, line));
        if (++taken == 2) break;
    }
    return out;
}

namespace {

GradedMap random_alpha(const Coalgebra& c, const Hopf& h, int degree, std::mt19937_64& rng) {
    GradedMap a(c.space(), h.space(), degree);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    std::bernoulli_distribution keep(0.5);
    for (int j = 0; j < c.space().dim(); ++j)
        for (int r = 0; r < h.space().dim(); ++r)
            if (h.space().degree(r) == c.space().degree(j) + degree && h.space().weight(r) >= c.space().weight(j) &&
                keep(rng)) {
                Scalar s(num(rng), den(rng));
                s.canonicalize();
                if (sgn(s) != 0) a.add(r, j, s);
            }
    return a;
}

}  // namespace

Report reconstruct(const ProbeFamily& p, const Coalgebra& c, const ReconstructOptions& opt) {
    Report r;
    r.merge(verify_probe(p), "probe.");
    const Hopf& h = p.omega;
    const Convolution conv(c, h);
    const std::vector<GradedMap> gs = sample_group_elements(conv, opt.seed);
    std::vector<NatEndo> etas;
    for (const auto& g : gs) etas.push_back(eta_breve(p, c, g));
    const size_t n = gs.size();
    const NatEndo ident = nat_identity(p, c);

    // (i) mutually inverse
    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < opt.random_maps; ++i) {
        const int deg = i % 3 - 1;
        const GradedMap a = random_alpha(c, h, deg, rng);
        const NatEndo ea = eta_breve(p, c, a);
        r.expect_equal("inverse.g_eta[" + std::to_string(i) + "]", "ğ(η̆(α)) = α", g_breve(p, ea), a);
        const NatEndo d = delta_differential(p, ea);
        auto w = nat_difference(p, d, eta_breve(p, c, conv.d(a)));
        r.add("chain[" + std::to_string(i) + "]", "δη̆(α) = η̆(∂α)", !w, w.value_or(""));
        r.merge(free_module_report(p, ea), "inverse.free[" + std::to_string(i) + "].");
        if (deg == 0 && !is_coalgebra_morphism(a, c, h.coalgebra())) {
            Report t = tensor_condition_report(p, ea);
            Report nat = naturality_report(p, ea);
            const CheckResult* f = t.first_failure();
            r.add("control.tensor[" + std::to_string(i) + "]", "a non-comultiplicative α violates η_{M⊗M′} = η_M⊗η_{M′}",
                  f != nullptr && nat.ok(), f ? "" : "tensor condition held");
        }
    }
    {
        auto w = nat_difference(p, eta_breve(p, c, conv.unit()), ident);
        r.add("unit", "η̆(u∘ε) = I^C", !w, w.value_or(""));
    }
    r.expect_equal("unit.g", "ğ(I^C) = u∘ε", g_breve(p, ident), conv.unit());

    for (size_t i = 0; i < n; ++i) {
        const std::string tag = "[" + std::to_string(i) + "]";
        r.merge(dg_tensor_report(p, etas[i]), "eta.dg_tensor" + tag + ".");
        r.expect_equal("inverse.g_eta" + tag, "ğ(η̆(g)) = g", g_breve(p, etas[i]), gs[i]);
        // (iii) ς
        const NatEndo s = varsigma_inverse(p, etas[i]);
        auto w1 = nat_difference(p, nat_compose(s, etas[i]), ident);
        r.add("varsigma.left" + tag, "ς(η)∘η = I^C", !w1, w1.value_or(""));
        auto w2 = nat_difference(p, s, eta_breve(p, c, conv.inverse(gs[i])));
        r.add("varsigma.antipode" + tag, "ς(η̆(g)) = η̆(ς_Ω∘g)", !w2, w2.value_or(""));
        r.merge(dg_tensor_report(p, s), "varsigma.dg_tensor" + tag + ".");
    }
    // (ii) group homomorphisms, with composites tabulated independently of η̆
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const std::string tag = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
            const NatEndo t = nat_compose(etas[i], etas[j]);
            const GradedMap gij = conv.star(gs[i], gs[j]);
            auto w = nat_difference(p, eta_breve(p, c, gij), t);
            r.add("hom.eta" + tag, "η̆(g⋆g′) = η̆(g)∘η̆(g′)", !w, w.value_or(""));
            const GradedMap back = g_breve(p, t);
            r.expect_equal("hom.g" + tag, "ğ(η∘η′) = ğ(η)⋆ğ(η′)", back, conv.star(g_breve(p, etas[i]), g_breve(p, etas[j])));
            r.merge(coalgebra_morphism_report(back, c, h.coalgebra()), "g.coalgebra" + tag + ".");
            auto w2 = nat_difference(p, eta_breve(p, c, back), t);
            r.add("inverse.eta_g" + tag, "η̆(ğ(η)) = η", !w2, w2.value_or(""));
            r.merge(free_module_report(p, t), "free" + tag + ".");
        }
    // finite groups: the composition table matches the convolution table
    try {
        GroupTable gt = group_table(conv, gs);
        std::vector<std::vector<int>> et(n, std::vector<int>(n, -1));
        bool closed = true;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                const NatEndo t = nat_compose(etas[i], etas[j]);
                for (size_t k = 0; k < n; ++k)
                    if (nat_equal(t, etas[k])) et[i][j] = static_cast<int>(k);
                closed &= et[i][j] >= 0;
            }
        r.add("group.table", "P^⊗_ω(C) ≅ P_Ω(C) as groups", closed && tables_isomorphic(et, gt.product) && et == gt.product,
              closed ? "" : "composites leave the sampled set");
    } catch (const std::invalid_argument&) {
        // infinite group; the sample is not closed
    }
    // (iv) homotopy transport both ways
    const auto pairs = sample_homotopy_pairs(conv);
    for (size_t i = 0; i < pairs.size(); ++i) {
        const std::string tag = "[" + std::to_string(i) + "]";
        r.merge(verify_homotopy_pair(pairs[i], conv), "pair" + tag + ".");
        const NatPair np = eta_breve_pair(p, c, pairs[i]);
        r.merge(verify_nat_pair(p, np), "transport.eta" + tag + ".");
        const HomotopyPair back = g_breve_pair(p, np);
        bool same = back.f.size() == pairs[i].f.size() && back.xi.size() == pairs[i].xi.size();
        for (size_t k = 0; same && k < back.f.size(); ++k) same = back.f[k] == pairs[i].f[k];
        for (size_t k = 0; same && k < back.xi.size(); ++k) same = back.xi[k] == pairs[i].xi[k];
        r.add("transport.roundtrip" + tag, "ğ(η̆(g(t)), η̆(χ(t))) = (g(t), χ(t))", same);
        r.merge(verify_homotopy_pair(back, conv), "transport.g" + tag + ".");
    }
    return r;
}

}  // namespace hopfkit
