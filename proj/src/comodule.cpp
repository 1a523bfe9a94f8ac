#include "hopfkit/comodule.hpp"

#include "hopfkit/builders.hpp"
#include "hopfkit/convolution.hpp"
#include "hopfkit/linalg.hpp"

#include <sstream>

namespace hopfkit {

namespace {

GradedMap id(const Space& s) { return GradedMap::identity(s); }

[[noreturn]] void fail_report(const std::string& what, const Report& r) {
    const CheckResult* f = r.first_failure();
    throw StructureError(what + ": " + f->name + " [" + f->anchor + "] " + f->witness);
}

}  // namespace

Complex tensor_complex(const Complex& a, const Complex& b) {
    return {tensor_space(a.space, b.space), tensor_differential(a.d, b.d)};
}

Complex ground_complex() {
    const Space k = Space::ground();
    return {k, GradedMap::zero(k, k, -1)};
}

GradedMap p_check(const Coalgebra& c, const Space& m, const GradedMap& a1) {
    require_same(a1.source(), tensor_space(c.space(), m), "p̌ source");
    return compose(tensor_map(id(c.space()), a1), tensor_map(c.delta(), id(m)));
}

GradedMap q_check(const Coalgebra& c, const Space& n, const GradedMap& a2) {
    require_same(a2.target(), tensor_space(c.space(), n), "q̌ target");
    return compose({unit_left(n), tensor_map(c.eps(), id(n)), a2});
}

GradedMap r_check(const Coalgebra& c, const Space& m, const Space& n, const GradedMap& a2) {
    require_same(a2.source(), tensor_space(c.space(), m), "ř source");
    require_same(a2.target(), tensor_space(c.space(), n), "ř target");
    return compose(tensor_map(c.delta(), id(n)), a2) -
           compose(tensor_map(id(c.space()), a2), tensor_map(c.delta(), id(m)));
}

GradedMap s_check(const Coalgebra& c, const Space& n, const GradedMap& a3) {
    const Space& cs = c.space();
    require_same(a3.target(), tensor_of({cs, cs, n}), "š target");
    return compose({tensor_map(id(cs), unit_left(n)), tensor_maps({id(cs), c.eps(), id(n)}), a3});
}

GradedMap cofree_d(const Coalgebra& c, const Complex& m, const Complex& n, const GradedMap& phi) {
    require_same(phi.target(), tensor_space(c.space(), n.space), "cofree ∂ target");
    return hom_differential(phi, tensor_differential(c.d(), m.d), tensor_differential(c.d(), n.d));
}

GradedMap comodule_tensor(const Coalgebra& c, const Space& m, const Space& n, const Space& mp, const Space& np,
                          const GradedMap& phi, const GradedMap& phi_prime) {
    const Space& cs = c.space();
    require_same(phi.source(), tensor_space(cs, m), "comodule tensor (left)");
    require_same(phi.target(), tensor_space(cs, n), "comodule tensor (left)");
    require_same(phi_prime.source(), tensor_space(cs, mp), "comodule tensor (right)");
    const GradedMap split = tensor_maps({c.delta(), id(m), id(mp)});
    const GradedMap shuffle = tensor_maps({id(cs), koszul_twist(cs, m), id(mp)});
    return compose({tensor_map(phi, q_check(c, np, phi_prime)), shuffle, split});
}

bool same_homology_class(const Coalgebra& c, const Complex& m, const GradedMap& phi, const GradedMap& phi_tilde) {
    const Space cm = tensor_space(c.space(), m.space);
    require_same(phi.source(), cm, "homology class");
    require_same(phi_tilde.source(), cm, "homology class");
    if (phi.degree() != phi_tilde.degree() && !phi.is_zero() && !phi_tilde.is_zero())
        throw std::invalid_argument("homology class: degrees differ");
    const int deg = phi.is_zero() ? phi_tilde.degree() : phi.degree();
    std::vector<MapUnknown> u{MapUnknown(cm, cm, deg + 1)};
    std::vector<MapConstraint> cons;
    cons.push_back({[&](const std::vector<GradedMap>& x) { return cofree_d(c, m, m, x[0]); },
                    phi_tilde.retarget(cm, cm) - phi.retarget(cm, cm)});
    cons.push_back({[&](const std::vector<GradedMap>& x) { return r_check(c, m.space, m.space, x[0]); },
                    GradedMap::zero(cm, tensor_of({c.space(), c.space(), m.space}), deg + 1)});
    return solve_for_maps(u, cons).has_value();
}

GradedMap e_m_pullback(const Coalgebra& c, const Coalgebra& cp, const Space& m, const GradedMap& f,
                       const GradedMap& phi_prime) {
    require_same(f.source(), c.space(), "E_M source");
    require_same(f.target(), cp.space(), "E_M target");
    return p_check(c, m, compose(q_check(cp, m, phi_prime), tensor_map(f, id(m))));
}

Report verify_module(const Hopf& omega, const ModuleData& data) {
    Report r;
    r.merge(verify_axioms(data.cx));
    if (!r.ok()) return r;
    const Space& ms = data.cx.space;
    const Space& os = omega.space();
    const GradedMap& g = data.action;
    std::string why;
    if (g.source() != tensor_space(os, ms)) why = "γ source is not Ω⊗M";
    else if (g.target() != ms) why = "γ target is not M";
    else if (g.degree() != 0 && !g.is_zero()) why = "γ has degree " + std::to_string(g.degree());
    r.add("action.shape", "γ: Ω⊗M → M of degree 0", why.empty(), why);
    if (!why.empty()) return r;
    if (omega.filtered()) {
        auto w = filtration_violation(g);
        r.add("action.filtration", "filtration weight is non-decreasing", !w, w.value_or(""));
    }
    r.expect_equal("action.chain", "γ∘∂_{Ω⊗M} = ∂_M∘γ", compose(g, tensor_differential(omega.d(), data.cx.d)),
                   compose(data.cx.d, g));
    r.expect_equal("action.unit", "γ∘(u⊗I) = ı_M", compose(g, tensor_map(omega.unit(), id(ms))), unit_left(ms));
    r.expect_equal("action.assoc", "γ∘(I⊗γ) = γ∘(m⊗I)", compose(g, tensor_map(id(os), g)),
                   compose(g, tensor_map(omega.mult(), id(ms))));
    return r;
}

DgModule DgModule::make(const Hopf& omega, ModuleData data) {
    Report r = verify_module(omega, data);
    if (!r.ok()) fail_report("module " + data.name, r);
    DgModule m;
    m.omega_ = omega;
    m.data_ = std::move(data);
    return m;
}

DgModule module_from_operators(const Hopf& omega, const std::string& name, const Complex& cx,
                               const std::vector<GradedMap>& ops) {
    const Space& os = omega.space();
    const Space& ms = cx.space;
    if (static_cast<int>(ops.size()) != os.dim())
        throw std::invalid_argument("module " + name + ": need one operator per basis element of Ω");
    const Space om = tensor_space(os, ms);
    GradedMap g(om, ms, 0);
    std::vector<int> tup;
    for (int i = 0; i < os.dim(); ++i) {
        require_same(ops[i].source(), ms, "module operator");
        require_same(ops[i].target(), ms, "module operator");
        for (int j = 0; j < ms.dim(); ++j) {
            tup = os.tuple(i);
            const auto& tj = ms.tuple(j);
            tup.insert(tup.end(), tj.begin(), tj.end());
            const int col = om.find_tuple(tup.data(), static_cast<int>(tup.size()));
            if (col < 0) continue;
            for (const auto& [row, c] : ops[i].column(j)) g.add(row, col, c);
        }
    }
    return DgModule::make(omega, {name, cx, g});
}

DgModule trivial_module(const Hopf& omega) {
    const Complex k = ground_complex();
    return DgModule::make(omega, {"k", k, compose(unit_left(k.space), tensor_map(omega.eps(), id(k.space)))});
}

DgModule regular_module(const Hopf& omega) {
    return DgModule::make(omega, {omega.name(), {omega.space(), omega.d()}, omega.mult()});
}

DgModule antipodal_module(const Hopf& omega) {
    const Space& s = omega.space();
    GradedMap g = compose({omega.mult(), tensor_map(id(s), omega.antipode()), koszul_twist(s, s)});
    return DgModule::make(omega, {omega.name() + "*", {s, omega.d()}, g});
}

DgModule counit_module(const DgModule& m) {
    const Space& ms = m.space();
    GradedMap g = compose(unit_left(ms), tensor_map(m.omega().eps(), id(ms)));
    return DgModule::make(m.omega(), {m.name() + "_*", m.complex(), g});
}

DgModule free_module(const Hopf& omega, const Complex& m, const std::string& name) {
    return DgModule::make(omega, {"F(" + name + ")", tensor_complex({omega.space(), omega.d()}, m),
                                  tensor_map(omega.mult(), id(m.space))});
}

DgModule free_module(const DgModule& m) { return free_module(m.omega(), m.complex(), m.name()); }

DgModule module_tensor(const DgModule& a, const DgModule& b) {
    const Hopf& o = a.omega();
    require_same(o.space(), b.omega().space(), "module tensor");
    const Space& os = o.space();
    GradedMap g = compose({tensor_map(a.action(), b.action()), tensor_maps({id(os), koszul_twist(os, a.space()), id(b.space())}),
                           tensor_maps({o.delta(), id(a.space()), id(b.space())})});
    return DgModule::make(o, {a.name() + "⊗" + b.name(), tensor_complex(a.complex(), b.complex()), g});
}

Report module_morphism_report(const GradedMap& psi, const DgModule& a, const DgModule& b) {
    Report r;
    std::string why;
    if (psi.source() != a.space()) why = "source is not " + a.name();
    else if (psi.target() != b.space()) why = "target is not " + b.name();
    r.add("shape", "ψ: M → M′ homogeneous", why.empty(), why);
    if (!why.empty()) return r;
    r.expect_equal("action", "ψ∘γ_M = γ_{M′}∘(I⊗ψ)", compose(psi, a.action()),
                   compose(b.action(), tensor_map(id(a.omega().space()), psi)));
    return r;
}

bool is_module_morphism(const GradedMap& psi, const DgModule& a, const DgModule& b) {
    return module_morphism_report(psi, a, b).ok();
}

std::vector<ModuleMorphism> structural_module_morphisms(const DgModule& m) {
    const Hopf& o = m.omega();
    const DgModule reg = regular_module(o), star = antipodal_module(o), k = trivial_module(o);
    std::vector<ModuleMorphism> out;
    out.push_back({"delta", "△_Ω: (Ω, m) → (Ω⊗Ω, γ_{Ω⊗Ω})", o.delta(), reg, module_tensor(reg, reg)});
    out.push_back({"eps", "ε_Ω: (Ω, m) → (k, γ_k)", o.eps(), reg, k});
    out.push_back({"action", "γ_M: (Ω⊗M, m⊗I) → (M, γ_M)", m.action(), free_module(m), m});
    out.push_back({"delta*", "△_Ω: Ω* → Ω*⊗Ω*", o.delta(), star, module_tensor(star, star)});
    out.push_back({"eps*", "ε_Ω: Ω* → k", o.eps(), star, k});
    out.push_back({"action*", "γ_M: Ω*⊗M → M_*", m.action(), module_tensor(star, m), counit_module(m)});
    return out;
}

GradedMap rep_component(const Representation& r, const Coalgebra& c, const GradedMap& g) {
    require_same(g.target(), r.omega.space(), "representation component");
    const Space& ms = r.cx.space;
    const GradedMap q = q_check(r.omega.coalgebra(), ms, r.universal);
    return p_check(c, ms, compose(q, tensor_map(g, id(ms))));
}

Representation functor_y(const DgModule& m) {
    return {m.omega(), m.complex(), p_check(m.omega().coalgebra(), m.space(), m.action())};
}

DgModule functor_x(const Representation& r, const std::string& name) {
    const Coalgebra& c = r.omega.coalgebra();
    const Space& ms = r.cx.space;
    require_same(r.universal.source(), tensor_space(c.space(), ms), "representation");
    const GradedMap rr = r_check(c, ms, ms, r.universal);
    if (!rr.is_zero()) {
        std::ostringstream os;
        os << "ρ-data is not a comodule map: ř(ρ(I)) ≠ 0";
        if (auto w = difference_witness(rr, GradedMap::zero(rr.source(), rr.target(), rr.degree()))) os << " " << *w;
        throw StructureError(os.str());
    }
    return DgModule::make(r.omega, {name, r.cx, q_check(c, ms, r.universal)});
}

Representation rep_tensor(const Representation& a, const Representation& b) {
    require_same(a.omega.space(), b.omega.space(), "representation tensor");
    const Space &m = a.cx.space, &mp = b.cx.space;
    return {a.omega, tensor_complex(a.cx, b.cx),
            comodule_tensor(a.omega.coalgebra(), m, m, mp, mp, a.universal, b.universal)};
}

Report verify_representation(const Representation& r) {
    Report rep;
    const Coalgebra& c = r.omega.coalgebra();
    const Space& ms = r.cx.space;
    const Space cm = tensor_space(c.space(), ms);
    if (r.universal.source() != cm || r.universal.target() != cm) {
        rep.add("shape", "ρ(I) ∈ End(Ω⊗M)", false, "wrong source or target");
        return rep;
    }
    rep.add("shape", "ρ(I) ∈ End(Ω⊗M)", r.universal.degree() == 0 || r.universal.is_zero(),
            r.universal.degree() == 0 ? "" : "degree " + std::to_string(r.universal.degree()));
    rep.expect_zero("comodule", "ř(ρ(I)) = 0", r_check(c, ms, ms, r.universal));
    rep.expect_zero("cycle", "∂ρ(I) = 0", cofree_d(c, r.cx, r.cx, r.universal));
    const Convolution conv(c, r.omega);
    rep.expect_equal("unit", "ρ(u∘ε) = I", rep_component(r, c, conv.unit()), id(cm));
    const CoalgebraTensor t = coalgebra_tensor(c, c);
    const Convolution conv2(t.tensor, r.omega);
    rep.expect_equal("mult", "ρ(π₁⋆π₂) = ρ(π₁)∘ρ(π₂)", rep_component(r, t.tensor, conv2.star(t.pi_left, t.pi_right)),
                     compose(rep_component(r, t.tensor, t.pi_left), rep_component(r, t.tensor, t.pi_right)));
    return rep;
}

}  // namespace hopfkit

namespace hopfkit {

DgModule generator_module(const Hopf& omega, const std::string& name, const Complex& cx,
                          const std::vector<std::pair<std::string, GradedMap>>& generators) {
    const Space& os = omega.space();
    std::vector<GradedMap> ops;
    for (int i = 0; i < os.dim(); ++i) {
        const std::string& w = os.label(i)[0];
        GradedMap acc = GradedMap::identity(cx.space);
        if (i != omega.unit_index()) {
            std::istringstream in(w);
            std::string letter;
            std::vector<const GradedMap*> word;
            while (std::getline(in, letter, '*')) {
                const GradedMap* op = nullptr;
                for (const auto& [g, a] : generators)
                    if (g == letter) op = &a;
                if (!op) throw std::invalid_argument("module " + name + ": no action given for generator " + letter);
                word.push_back(op);
            }
            for (auto it = word.rbegin(); it != word.rend(); ++it) acc = compose(**it, acc);
        }
        ops.push_back(acc);
    }
    return module_from_operators(omega, name, cx, ops);
}

}  // namespace hopfkit
