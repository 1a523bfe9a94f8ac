#include "hopfkit/homotopy.hpp"

#include <stdexcept>

namespace hopfkit {

namespace {

GradedMap at(const Poly& p, size_t k, const GradedMap& zero) { return k < p.size() ? p[k] : zero; }

std::string tk(size_t k) { return "[t^" + std::to_string(k) + "]"; }

// Coefficient of t^k in Σ_{i+j=k} op(p_i, q_j).
GradedMap convolve_at(const Poly& p, const Poly& q, size_t k, const MapOp& op, const GradedMap& zero) {
    GradedMap acc = zero;
    for (size_t i = 0; i <= k && i < p.size(); ++i)
        if (k - i < q.size()) acc += op(p[i], q[k - i]);
    return acc;
}

bool same_spaces(const Poly& p, const Space& s, const Space& t, int degree) {
    for (const auto& c : p)
        if (c.source() != s || c.target() != t || (c.degree() != degree && !c.is_zero())) return false;
    return true;
}

// Common shape and d/dt f = ∂ξ checks. Returns false if the shape is unusable.
bool check_flow(Report& r, const HomotopyPair& p, const Space& s, const Space& t,
                const std::function<GradedMap(const GradedMap&)>& d, const char* fname, const char* xname) {
    const bool shape = !p.f.empty() && same_spaces(p.f, s, t, 0) && same_spaces(p.xi, s, t, 1);
    r.add("shape", std::string(fname) + "(t) of degree 0, " + xname + "(t) of degree 1", shape,
          shape ? "" : "coefficients have the wrong spaces or degrees");
    if (!shape) return false;
    const GradedMap z0 = GradedMap::zero(s, t, 0), z1 = GradedMap::zero(s, t, 1);
    const size_t n = std::max(p.f.size() - 1, p.xi.size());
    for (size_t k = 0; k < n; ++k)
        r.expect_equal("flow" + tk(k), std::string("d") + fname + "/dt = ∂" + xname,
                       Scalar(static_cast<long>(k + 1)) * at(p.f, k + 1, z0), d(at(p.xi, k, z1)));
    return true;
}

void check_coalgebra_conditions(Report& r, const HomotopyPair& p, const Coalgebra& c, const Coalgebra& d,
                                const GradedMap* unit_c, const char* fname, const char* xname) {
    const Space& s = c.space();
    const Space& t = d.space();
    const GradedMap zdelta = GradedMap::zero(tensor_space(s, s), tensor_space(t, t), 1);
    const std::string x = xname, f = fname;
    // For tangential pairs the coproduct condition uses the constant unit e in place of f(t).
    const Poly fs = unit_c ? Poly{*unit_c} : p.f;
    for (size_t k = 0; k < p.xi.size(); ++k) {
        r.expect_zero("counit" + tk(k), "ε∘" + x + " = 0", compose(d.eps(), p.xi[k]));
        auto op = [&](const GradedMap& a, const GradedMap& b) { return tensor_map(a, b) + tensor_map(b, a); };
        GradedMap rhs = compose(convolve_at(fs, p.xi, k, op, zdelta), c.delta());
        const std::string fe = unit_c ? "e" : f;
        r.expect_equal("comult" + tk(k), "△∘" + x + " = (" + fe + "⊗" + x + " + " + x + "⊗" + fe + ")∘△",
                       compose(d.delta(), p.xi[k]), rhs);
    }
}

}  // namespace

Poly poly_add(const Poly& p, const Poly& q) {
    Poly out = p.size() >= q.size() ? p : q;
    const Poly& small = p.size() >= q.size() ? q : p;
    for (size_t k = 0; k < small.size(); ++k) out[k] += small[k];
    return out;
}

Poly poly_scale(const Scalar& c, const Poly& p) {
    Poly out = p;
    for (auto& x : out) x *= c;
    return out;
}

Poly poly_product(const Poly& p, const Poly& q, const MapOp& op) {
    if (p.empty() || q.empty()) return {};
    Poly out;
    for (size_t k = 0; k + 2 <= p.size() + q.size(); ++k) {
        GradedMap acc;
        bool first = true;
        for (size_t i = 0; i <= k && i < p.size(); ++i) {
            if (k - i >= q.size()) continue;
            GradedMap term = op(p[i], q[k - i]);
            if (first) acc = std::move(term), first = false;
            else acc += term;
        }
        out.push_back(std::move(acc));
    }
    return out;
}

Poly poly_apply(const Poly& p, const std::function<GradedMap(const GradedMap&)>& op) {
    Poly out;
    for (const auto& x : p) out.push_back(op(x));
    return out;
}

Poly poly_derivative(const Poly& p) {
    Poly out;
    for (size_t k = 1; k < p.size(); ++k) out.push_back(Scalar(static_cast<long>(k)) * p[k]);
    return out;
}

GradedMap poly_eval(const Poly& p, const Scalar& t) {
    if (p.empty()) throw std::invalid_argument("empty polynomial");
    GradedMap acc = p.back();
    for (size_t k = p.size() - 1; k-- > 0;) acc = t * acc + p[k];
    return acc;
}

int poly_degree(const Poly& p) {
    for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k)
        if (!p[k].is_zero()) return k;
    return -1;
}

void poly_trim(Poly& p) {
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

std::string kind_name(PairKind k) {
    switch (k) {
        case PairKind::CoalgebraMap: return "coalgebra";
        case PairKind::HopfMap: return "hopf";
        case PairKind::Tangential: return "tangential";
        case PairKind::NatEndo: return "natural";
    }
    return "?";
}

PairKind parse_kind(const std::string& s) {
    for (PairKind k : {PairKind::CoalgebraMap, PairKind::HopfMap, PairKind::Tangential, PairKind::NatEndo})
        if (kind_name(k) == s) return k;
    throw std::invalid_argument("unknown pair kind '" + s + "'");
}

HomotopyPair constant_pair(PairKind kind, const GradedMap& f) {
    return {kind, {f}, {GradedMap::zero(f.source(), f.target(), 1)}};
}

Report verify_coalgebra_pair(const HomotopyPair& p, const Coalgebra& c, const Coalgebra& d) {
    Report r;
    auto dd = [&](const GradedMap& x) { return hom_differential(x, c.d(), d.d()); };
    if (!check_flow(r, p, c.space(), d.space(), dd, "f", "ξ")) return r;
    r.merge(coalgebra_morphism_report(p.f[0], c, d), "start.");
    check_coalgebra_conditions(r, p, c, d, nullptr, "f", "ξ");
    // Consequences: every coefficient of f(t) satisfies the coalgebra-map identities in t.
    const Space tt = tensor_space(d.space(), d.space());
    const GradedMap z = GradedMap::zero(tensor_space(c.space(), c.space()), tt, 0);
    for (size_t k = 1; k < p.f.size(); ++k) {
        r.expect_zero("derived.counit" + tk(k), "ε∘f(t) = ε", compose(d.eps(), p.f[k]));
        r.expect_equal("derived.comult" + tk(k), "△∘f(t) = (f(t)⊗f(t))∘△", compose(d.delta(), p.f[k]),
                       compose(convolve_at(p.f, p.f, k, [](const GradedMap& a, const GradedMap& b) { return tensor_map(a, b); }, z),
                               c.delta()));
    }
    return r;
}

Report verify_hopf_pair(const HomotopyPair& p, const Hopf& a, const Hopf& b) {
    Report r = verify_coalgebra_pair(p, a.coalgebra(), b.coalgebra());
    if (!r.entries.empty() && !r.entries[0].pass) return r;
    r.merge(hopf_morphism_report(p.f[0], a, b), "start.");
    const Space ss = tensor_space(a.space(), a.space());
    const GradedMap z1 = GradedMap::zero(ss, b.space(), 1), z0 = GradedMap::zero(ss, b.space(), 0);
    for (size_t k = 0; k < p.xi.size(); ++k) {
        r.expect_zero("unit" + tk(k), "ξ∘u = 0", compose(p.xi[k], a.unit()));
        auto op = [&](const GradedMap& f, const GradedMap& x) {
            return compose(b.mult(), tensor_map(f, x) + tensor_map(x, f));
        };
        r.expect_equal("mult" + tk(k), "ξ∘m = m′∘(f⊗ξ + ξ⊗f)", compose(p.xi[k], a.mult()),
                       convolve_at(p.f, p.xi, k, op, z1));
    }
    for (size_t k = 1; k < p.f.size(); ++k) {
        r.expect_zero("derived.unit" + tk(k), "f(t)∘u = u′", compose(p.f[k], a.unit()));
        auto op = [&](const GradedMap& f, const GradedMap& g) { return compose(b.mult(), tensor_map(f, g)); };
        r.expect_equal("derived.mult" + tk(k), "f(t)∘m = m′∘(f(t)⊗f(t))", compose(p.f[k], a.mult()),
                       convolve_at(p.f, p.f, k, op, z0));
    }
    return r;
}

Report verify_tangential_pair(const HomotopyPair& p, const Convolution& conv) {
    Report r;
    const Coalgebra& c = conv.coalgebra();
    const Hopf& h = conv.omega();
    auto dd = [&](const GradedMap& x) { return conv.d(x); };
    if (!check_flow(r, p, c.space(), h.space(), dd, "υ", "σ")) return r;
    r.merge(conv.tangential_report(p.f[0]), "start.");
    const GradedMap e = conv.unit();
    check_coalgebra_conditions(r, p, c, h.coalgebra(), &e, "υ", "σ");
    for (size_t k = 1; k < p.f.size(); ++k) r.merge(conv.tangential_report(p.f[k]), "derived" + tk(k) + ".");
    return r;
}

Report verify_homotopy_pair(const HomotopyPair& p, const Convolution& conv) {
    switch (p.kind) {
        case PairKind::CoalgebraMap: return verify_coalgebra_pair(p, conv.coalgebra(), conv.omega().coalgebra());
        case PairKind::Tangential: return verify_tangential_pair(p, conv);
        default: {
            Report r;
            r.add("kind", "pair kind on Hom(C,Ω)", false, kind_name(p.kind) + " pairs are not maps C → Ω");
            return r;
        }
    }
}

namespace {

HomotopyPair composite(PairKind kind, const HomotopyPair& outer, const HomotopyPair& inner) {
    MapOp comp = [](const GradedMap& a, const GradedMap& b) { return compose(a, b); };
    HomotopyPair out;
    out.kind = kind;
    out.f = poly_product(outer.f, inner.f, comp);
    out.xi = poly_add(poly_product(outer.f, inner.xi, comp), poly_product(outer.xi, inner.f, comp));
    return out;
}

HomotopyPair star_like(const Convolution& conv, PairKind kind, const HomotopyPair& p1, const HomotopyPair& p2,
                       bool bracket) {
    MapOp op = bracket ? MapOp([&](const GradedMap& a, const GradedMap& b) { return conv.bracket(a, b); })
                       : MapOp([&](const GradedMap& a, const GradedMap& b) { return conv.star(a, b); });
    HomotopyPair out;
    out.kind = kind;
    out.f = poly_product(p1.f, p2.f, op);
    out.xi = poly_add(poly_product(p1.xi, p2.f, op), poly_product(p1.f, p2.xi, op));
    return out;
}

}  // namespace

HomotopyPair star_pairs(const Convolution& conv, const HomotopyPair& p1, const HomotopyPair& p2) {
    return star_like(conv, PairKind::CoalgebraMap, p1, p2, false);
}

HomotopyPair antipode_pair(const Convolution& conv, const HomotopyPair& p) {
    auto s = [&](const GradedMap& x) { return conv.inverse(x); };
    return {PairKind::CoalgebraMap, poly_apply(p.f, s), poly_apply(p.xi, s)};
}

HomotopyPair compose_pairs(const HomotopyPair& f, const HomotopyPair& g) { return composite(g.kind, g, f); }

HomotopyPair hopf_pushforward_pair(const HomotopyPair& psi, const HomotopyPair& g) {
    return composite(g.kind, psi, g);
}

HomotopyPair bracket_pairs(const Convolution& conv, const HomotopyPair& p1, const HomotopyPair& p2) {
    return star_like(conv, PairKind::Tangential, p1, p2, true);
}

HomotopyPair tangential_compose(const HomotopyPair& f, const HomotopyPair& v) {
    return composite(PairKind::Tangential, v, f);
}

HomotopyPair tangential_pushforward(const HomotopyPair& psi, const HomotopyPair& v) {
    return composite(PairKind::Tangential, psi, v);
}

}  // namespace hopfkit
