#include "hopfkit/completion.hpp"
#include "hopfkit/builders.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace hopfkit {

namespace {

void require_filtered(const Convolution& conv, const char* what) {
    if (!conv.omega().filtered())
        throw std::invalid_argument(std::string(what) + " needs a filtered (truncated) Hopf algebra");
}

void require_augmented(const Convolution& conv, const GradedMap& v, const char* what) {
    conv.require_context(v, what);
    if (v.degree() != 0 && !v.is_zero()) throw std::invalid_argument(std::string(what) + ": expected a degree-0 map");
    if (!compose(conv.omega().eps(), v).is_zero())
        throw std::invalid_argument(std::string(what) + ": ε∘x ≠ 0, the series does not terminate");
}

bool poly_is_zero(const Poly& p) { return poly_degree(p) < 0; }

Scalar factorial(int n) {
    Scalar f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Scalar log_coeff(int n) { return Scalar(n % 2 ? 1 : -1, n); }

// Powers p^0, …, p^N under ⋆; p^0 is the constant e.
std::vector<Poly> star_powers(const Convolution& conv, const Poly& p, int n) {
    MapOp star = [&](const GradedMap& a, const GradedMap& b) { return conv.star(a, b); };
    std::vector<Poly> out{Poly{conv.unit()}};
    for (int k = 1; k <= n; ++k) out.push_back(poly_product(out.back(), p, star));
    return out;
}

// Σ_n c_n Σ_j P_{j−1}⋆x⋆P_{n−j}
Poly transport_series(const Convolution& conv, const std::vector<Poly>& pw, const Poly& x, Scalar (*coeff)(int)) {
    MapOp star = [&](const GradedMap& a, const GradedMap& b) { return conv.star(a, b); };
    Poly acc{conv.zero(1)};
    const int n_max = static_cast<int>(pw.size()) - 1;
    for (int n = 1; n <= n_max; ++n) {
        Poly inner{conv.zero(1)};
        for (int j = 1; j <= n; ++j) inner = poly_add(inner, poly_product(poly_product(pw[j - 1], x, star), pw[n - j], star));
        acc = poly_add(acc, poly_scale(coeff(n), inner));
    }
    poly_trim(acc);
    return acc;
}

Scalar exp_coeff(int n) { return 1 / factorial(n); }

}  // namespace

int filtration_degree(const GradedMap& a) {
    int best = a.target().cap() == kNoCap ? INT_MAX : a.target().cap() + 1;
    for (int j = 0; j < a.source().dim(); ++j)
        for (const auto& [r, c] : a.column(j)) best = std::min(best, a.target().weight(r));
    return best;
}

GradedMap truncate_weight(const GradedMap& a, int w) {
    GradedMap out(a.source(), a.target(), a.degree());
    for (int j = 0; j < a.source().dim(); ++j) {
        SparseVec col;
        for (const auto& [r, c] : a.column(j))
            if (a.target().weight(r) <= w) col.emplace_back(r, c);
        out.set_column(j, std::move(col));
    }
    return out;
}

GradedMap exp_map(const Convolution& conv, const GradedMap& v) { return exp_poly(conv, {v})[0]; }

GradedMap ln_map(const Convolution& conv, const GradedMap& g) { return ln_poly(conv, {g})[0]; }

Poly exp_poly(const Convolution& conv, const Poly& v) {
    require_filtered(conv, "exp");
    for (const auto& c : v) require_augmented(conv, c, "exp");
    const int n = conv.omega().trunc();
    const auto pw = star_powers(conv, v, n + 1);
    if (!poly_is_zero(pw[n + 1])) throw std::logic_error("exp: power N+1 did not vanish");
    Poly acc;
    for (int k = 0; k <= n; ++k) acc = poly_add(acc, poly_scale(exp_coeff(k), pw[k]));
    poly_trim(acc);
    return acc;
}

Poly ln_poly(const Convolution& conv, const Poly& g) {
    require_filtered(conv, "ln");
    if (g.empty()) throw std::invalid_argument("ln: empty polynomial");
    Poly bar = g;
    bar[0] -= conv.unit();
    for (const auto& c : bar) require_augmented(conv, c, "ln");
    const int n = conv.omega().trunc();
    const auto pw = star_powers(conv, bar, n + 1);
    if (!poly_is_zero(pw[n + 1])) throw std::logic_error("ln: power N+1 did not vanish");
    Poly acc{conv.zero(0)};
    for (int k = 1; k <= n; ++k) acc = poly_add(acc, poly_scale(log_coeff(k), pw[k]));
    poly_trim(acc);
    return acc;
}

GradedMap bch(const Convolution& conv, const GradedMap& a, const GradedMap& b, int order) {
    require_filtered(conv, "bch");
    if (order < 0 || order > conv.omega().trunc()) throw std::invalid_argument("bch: order must lie in [0, N]");
    return truncate_weight(ln_map(conv, conv.star(exp_map(conv, a), exp_map(conv, b))), order);
}

Report exp_naturality_report(const Convolution& on_c, const Convolution& on_cprime, const GradedMap& f,
                             const GradedMap& v_prime, const GradedMap& g_prime) {
    Report r;
    r.merge(coalgebra_morphism_report(f, on_c.coalgebra(), on_cprime.coalgebra()), "f.");
    r.expect_equal("exp", "exp(υ′)∘f = exp(υ′∘f)", pullback(f, exp_map(on_cprime, v_prime)),
                   exp_map(on_c, pullback(f, v_prime)));
    r.expect_equal("ln", "ln(g′)∘f = ln(g′∘f)", pullback(f, ln_map(on_cprime, g_prime)),
                   ln_map(on_c, pullback(f, g_prime)));
    return r;
}

HomotopyPair exp_transport(const Convolution& conv, const HomotopyPair& p) {
    require_filtered(conv, "exp transport");
    for (const auto& s : p.xi)
        if (!compose(conv.omega().eps(), s).is_zero()) throw std::invalid_argument("exp transport: ε∘σ ≠ 0");
    HomotopyPair out;
    out.kind = PairKind::CoalgebraMap;
    out.f = exp_poly(conv, p.f);
    out.xi = transport_series(conv, star_powers(conv, p.f, conv.omega().trunc()), p.xi, exp_coeff);
    return out;
}

HomotopyPair ln_transport(const Convolution& conv, const HomotopyPair& p) {
    require_filtered(conv, "ln transport");
    HomotopyPair out;
    out.kind = PairKind::Tangential;
    out.f = ln_poly(conv, p.f);
    Poly bar = p.f;
    bar[0] -= conv.unit();
    out.xi = transport_series(conv, star_powers(conv, bar, conv.omega().trunc()), p.xi, log_coeff);
    return out;
}

HomotopyPair inner_conjugation_pair(const Hopf& h, const SparseVec& x0, const SparseVec& x1) {
    const Space& s = h.space();
    if (!h.filtered()) throw std::invalid_argument("inner conjugation needs a filtered Hopf algebra");
    Convolution pts(ground_coalgebra(), h);
    const GradedMap a = element(s, x0, 0), b = element(s, x1, 1);
    const GradedMap id = GradedMap::identity(s);
    auto left = [&](const GradedMap& x) { return compose({h.mult(), tensor_map(x, id), unit_left_inv(s)}); };
    // y ↦ (−1)^{|x||y|} y x
    auto right = [&](const GradedMap& x) { return compose({h.mult(), tensor_map(id, x), unit_right_inv(s)}); };
    const int n = h.trunc();
    Poly lp, rp;
    GradedMap pw = pts.unit();
    for (int k = 0; k <= n; ++k) {
        const Scalar c = 1 / factorial(k);
        lp.push_back(left(c * pw));
        rp.push_back(right((k % 2 ? -c : c) * pw));
        pw = pts.star(pw, a);
    }
    MapOp comp = [](const GradedMap& l, const GradedMap& r) { return compose(l, r); };
    HomotopyPair out;
    out.kind = PairKind::HopfMap;
    out.f = poly_product(lp, rp, comp);
    const GradedMap ad = left(b) - right(b);
    out.xi = poly_apply(out.f, [&](const GradedMap& f) { return compose(ad, f); });
    poly_trim(out.f);
    poly_trim(out.xi);
    return out;
}

}  // namespace hopfkit
