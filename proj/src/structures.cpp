#include "hopfkit/structures.hpp"

#include <sstream>

namespace hopfkit {

namespace {

const Space& k() {
    static const Space g = Space::ground();
    return g;
}

bool check_shape(Report& r, const std::string& name, const GradedMap& f, const Space& s, const Space& t,
                 int degree) {
    std::string why;
    if (f.source() != s) why = "wrong source space";
    else if (f.target() != t) why = "wrong target space";
    else if (f.degree() != degree && !f.is_zero()) why = "degree " + std::to_string(f.degree()) + ", expected " + std::to_string(degree);
    r.add(name + ".shape", "map has the declared source, target and degree", why.empty(), why);
    return why.empty();
}

void check_filtration(Report& r, const std::string& name, const GradedMap& f) {
    auto w = filtration_violation(f);
    r.add(name + ".filtration", "filtration weight is non-decreasing", !w, w.value_or(""));
}

GradedMap twist_middle(const Space& a, const Space& b, const Space& c, const Space& d) {
    return tensor_maps({GradedMap::identity(a), koszul_twist(b, c), GradedMap::identity(d)});
}

void verify_filtered_unit(Report& r, const Space& s, const GradedMap& unit, const GradedMap& eps) {
    const auto& col = unit.column(0);
    bool ok = col.size() == 1 && col[0].second == 1 && s.weight(col[0].first) == 0;
    std::string w;
    if (!ok) {
        w = "u(1) = " + unit.describe_column(0) + " is not a weight-0 basis element";
    } else {
        for (int i = 0; i < s.dim() && ok; ++i) {
            if (i == col[0].first) continue;
            if (s.weight(i) < 1) {
                ok = false;
                w = s.label_text(i) + " has weight 0 but is not u(1)";
            } else if (sgn(eps.entry(0, i)) != 0) {
                ok = false;
                w = "ε(" + s.label_text(i) + ") ≠ 0";
            }
        }
    }
    r.add("filtered.augmentation", "Ω = k·u(1) ⊕ ker ε with ker ε of weight ≥ 1", ok, w);
}

}  // namespace

std::optional<std::string> filtration_violation(const GradedMap& f) {
    for (int j = 0; j < f.source().dim(); ++j)
        for (const auto& [r, c] : f.column(j))
            if (f.target().weight(r) < f.source().weight(j))
                return f.source().label_text(j) + " ↦ " + f.target().label_text(r) + " lowers weight";
    return std::nullopt;
}

Report verify_axioms(const Complex& cx) {
    Report r;
    if (!check_shape(r, "d", cx.d, cx.space, cx.space, -1)) return r;
    r.expect_zero("d.square", "∂∘∂ = 0", compose(cx.d, cx.d));
    if (cx.space.filtered()) check_filtration(r, "d", cx.d);
    return r;
}

Report verify_axioms(const AlgebraData& a) {
    Report r = verify_axioms(a.cx);
    const Space& s = a.cx.space;
    const Space ss = tensor_space(s, s);
    bool shapes = check_shape(r, "unit", a.unit, k(), s, 0);
    shapes = check_shape(r, "mult", a.mult, ss, s, 0) && shapes;
    if (!shapes || !r.ok()) return r;
    const GradedMap& d = a.cx.d;
    const GradedMap I = GradedMap::identity(s);
    r.expect_zero("unit.chain", "∂∘u = 0", compose(d, a.unit));
    r.expect_equal("mult.chain", "m∘∂_{A⊗A} = ∂∘m", compose(a.mult, tensor_differential(d, d)), compose(d, a.mult));
    r.expect_equal("unit.left", "m∘(u⊗I) = ı", compose(a.mult, tensor_map(a.unit, I)), unit_left(s));
    r.expect_equal("unit.right", "m∘(I⊗u) = ȷ", compose(a.mult, tensor_map(I, a.unit)), unit_right(s));
    r.expect_equal("mult.assoc", "m∘(m⊗I) = m∘(I⊗m)", compose(a.mult, tensor_map(a.mult, I)),
                   compose(a.mult, tensor_map(I, a.mult)));
    if (s.filtered()) {
        check_filtration(r, "unit", a.unit);
        check_filtration(r, "mult", a.mult);
    }
    return r;
}

Report verify_axioms(const CoalgebraData& c) {
    Report r = verify_axioms(c.cx);
    const Space& s = c.cx.space;
    const Space ss = tensor_space(s, s);
    bool shapes = check_shape(r, "eps", c.eps, s, k(), 0);
    shapes = check_shape(r, "delta", c.delta, s, ss, 0) && shapes;
    if (!shapes || !r.ok()) return r;
    const GradedMap& d = c.cx.d;
    const GradedMap I = GradedMap::identity(s);
    r.expect_zero("eps.chain", "ε∘∂ = 0", compose(c.eps, d));
    r.expect_equal("delta.chain", "△∘∂ = ∂_{C⊗C}∘△", compose(c.delta, d), compose(tensor_differential(d, d), c.delta));
    r.expect_equal("counit.left", "(ε⊗I)∘△ = ı⁻¹", compose(tensor_map(c.eps, I), c.delta), unit_left_inv(s));
    r.expect_equal("counit.right", "(I⊗ε)∘△ = ȷ⁻¹", compose(tensor_map(I, c.eps), c.delta), unit_right_inv(s));
    r.expect_equal("delta.coassoc", "(△⊗I)∘△ = (I⊗△)∘△", compose(tensor_map(c.delta, I), c.delta),
                   compose(tensor_map(I, c.delta), c.delta));
    r.expect_equal("delta.cocomm", "τ∘△ = △", compose(koszul_twist(s, s), c.delta), c.delta);
    if (s.filtered()) {
        check_filtration(r, "eps", c.eps);
        check_filtration(r, "delta", c.delta);
    }
    return r;
}

Report verify_axioms(const HopfData& h) {
    Report r = verify_axioms(h.algebra());
    Report rc = verify_axioms(h.coalgebra());
    for (auto& e : rc.entries)
        if (e.name.rfind("d.", 0) != 0) r.entries.push_back(e);
    const Space& s = h.cx.space;
    if (!check_shape(r, "antipode", h.antipode, s, s, 0) || !r.ok()) return r;
    const Space ss = tensor_space(s, s);
    const GradedMap I = GradedMap::identity(s);
    const GradedMap& m = h.mult;
    const GradedMap& dl = h.delta;
    const GradedMap& S = h.antipode;
    const GradedMap ue = compose(h.unit, h.eps);

    r.expect_equal("bialg.eps_unit", "ε∘u = 1", compose(h.eps, h.unit), GradedMap::identity(k()));
    r.expect_equal("bialg.delta_unit", "△∘u = u⊗u", compose(dl, h.unit),
                   compose(tensor_map(h.unit, h.unit), unit_left_inv(k())));
    r.expect_equal("bialg.eps_mult", "ε∘m = ε⊗ε", compose(h.eps, m), compose(unit_left(k()), tensor_map(h.eps, h.eps)));
    r.expect_equal("bialg.delta_mult", "△∘m = (m⊗m)∘(I⊗τ⊗I)∘(△⊗△)", compose(dl, m),
                   compose({tensor_map(m, m), twist_middle(s, s, s, s), tensor_map(dl, dl)}));
    r.expect_equal("antipode.left", "m∘(ς⊗I)∘△ = u∘ε", compose({m, tensor_map(S, I), dl}), ue);
    r.expect_equal("antipode.right", "m∘(I⊗ς)∘△ = u∘ε", compose({m, tensor_map(I, S), dl}), ue);
    r.expect_equal("antipode.chain", "ς∘∂ = ∂∘ς", compose(S, h.cx.d), compose(h.cx.d, S));
    r.expect_equal("antipode.unit", "ς∘u = u", compose(S, h.unit), h.unit);
    r.expect_equal("antipode.anti_mult", "ς∘m = m∘(ς⊗ς)∘τ", compose(S, m),
                   compose({m, tensor_map(S, S), koszul_twist(s, s)}));
    r.expect_equal("antipode.counit", "ε∘ς = ε", compose(h.eps, S), h.eps);
    r.expect_equal("antipode.comult", "△∘ς = (ς⊗ς)∘△", compose(dl, S), compose(tensor_map(S, S), dl));
    (void)ss;
    if (s.filtered()) {
        check_filtration(r, "antipode", S);
        verify_filtered_unit(r, s, h.unit, h.eps);
    }
    return r;
}

namespace {

[[noreturn]] void fail(const std::string& what, const Report& r) {
    const CheckResult* f = r.first_failure();
    std::ostringstream os;
    os << what << ": " << f->name << " fails (" << f->anchor << ")";
    if (!f->witness.empty()) os << " at " << f->witness;
    throw StructureError(os.str());
}

}  // namespace

Coalgebra Coalgebra::make(CoalgebraData data) {
    Report r = verify_axioms(data);
    if (!r.ok()) fail("coalgebra '" + data.name + "'", r);
    return Coalgebra(std::make_shared<const CoalgebraData>(std::move(data)));
}

Hopf Hopf::make(HopfData data) {
    Report r = verify_axioms(data);
    if (!r.ok()) fail("Hopf algebra '" + data.name + "'", r);
    Hopf h;
    h.d_ = std::make_shared<const HopfData>(std::move(data));
    h.coalg_ = Coalgebra(std::make_shared<const CoalgebraData>(h.d_->coalgebra()));
    const auto& col = h.d_->unit.column(0);
    if (col.size() == 1 && col[0].second == 1) h.unit_index_ = col[0].first;
    return h;
}

GradedMap iterated_product(const GradedMap& mult, int n) {
    if (n < 1) throw std::invalid_argument("iterated product needs n ≥ 1");
    const Space& a = mult.target();
    GradedMap acc = GradedMap::identity(a);
    for (int i = 1; i < n; ++i) acc = compose(mult, tensor_map(acc, GradedMap::identity(a)));
    return acc;
}

GradedMap iterated_coproduct(const GradedMap& delta, int n) {
    if (n < 1) throw std::invalid_argument("iterated coproduct needs n ≥ 1");
    const Space& c = delta.source();
    GradedMap acc = GradedMap::identity(c);
    for (int i = 1; i < n; ++i) acc = compose(tensor_map(acc, GradedMap::identity(c)), delta);
    return acc;
}

GradedMap tensor_algebra_mult(const GradedMap& ma, const GradedMap& mb) {
    const Space& a = ma.target();
    const Space& b = mb.target();
    return compose(tensor_map(ma, mb), twist_middle(a, b, a, b));
}

Report coalgebra_morphism_report(const GradedMap& f, const Coalgebra& c, const Coalgebra& d) {
    Report r;
    if (!check_shape(r, "f", f, c.space(), d.space(), 0)) return r;
    r.expect_equal("chain", "f∘∂_C = ∂_{C′}∘f", compose(f, c.d()), compose(d.d(), f));
    r.expect_equal("counit", "ε_{C′}∘f = ε_C", compose(d.eps(), f), c.eps());
    r.expect_equal("comult", "△_{C′}∘f = (f⊗f)∘△_C", compose(d.delta(), f), compose(tensor_map(f, f), c.delta()));
    return r;
}

Report algebra_morphism_report(const GradedMap& f, const Hopf& a, const Hopf& b) {
    Report r;
    if (!check_shape(r, "f", f, a.space(), b.space(), 0)) return r;
    r.expect_equal("chain", "ψ∘∂ = ∂′∘ψ", compose(f, a.d()), compose(b.d(), f));
    r.expect_equal("unit", "ψ∘u = u′", compose(f, a.unit()), b.unit());
    r.expect_equal("mult", "ψ∘m = m′∘(ψ⊗ψ)", compose(f, a.mult()), compose(b.mult(), tensor_map(f, f)));
    return r;
}

Report hopf_morphism_report(const GradedMap& f, const Hopf& a, const Hopf& b) {
    Report r = algebra_morphism_report(f, a, b);
    if (!r.ok()) return r;
    Report rc = coalgebra_morphism_report(f, a.coalgebra(), b.coalgebra());
    for (auto& e : rc.entries)
        if (e.name != "chain" && e.name != "f.shape") r.entries.push_back(e);
    if (r.ok())
        r.expect_equal("antipode", "ψ∘ς = ς′∘ψ", compose(f, a.antipode()), compose(b.antipode(), f));
    return r;
}

bool is_coalgebra_morphism(const GradedMap& f, const Coalgebra& c, const Coalgebra& d) {
    return coalgebra_morphism_report(f, c, d).ok();
}

bool is_hopf_morphism(const GradedMap& f, const Hopf& a, const Hopf& b) { return hopf_morphism_report(f, a, b).ok(); }

CoalgebraTensor coalgebra_tensor(const Coalgebra& c, const Coalgebra& d) {
    const Space& x = c.space();
    const Space& y = d.space();
    CoalgebraData t;
    t.name = c.name() + "⊗" + d.name();
    t.cx.space = tensor_space(x, y);
    t.cx.d = tensor_differential(c.d(), d.d());
    t.eps = compose(unit_left(k()), tensor_map(c.eps(), d.eps()));
    t.delta = compose(twist_middle(x, x, y, y), tensor_map(c.delta(), d.delta()));
    CoalgebraTensor out;
    out.tensor = Coalgebra::make(std::move(t));
    out.pi_left = compose(unit_right(x), tensor_map(GradedMap::identity(x), d.eps()));
    out.pi_right = compose(unit_left(y), tensor_map(c.eps(), GradedMap::identity(y)));
    return out;
}

GradedMap pairing(const Coalgebra& t, const GradedMap& f, const GradedMap& g) {
    return compose(tensor_map(f, g), t.delta());
}

GradedMap unit_counit(const Coalgebra& c, const Hopf& h) { return compose(h.unit(), c.eps()); }

}  // namespace hopfkit
