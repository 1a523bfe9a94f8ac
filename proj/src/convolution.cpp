#include "hopfkit/convolution.hpp"
#include "hopfkit/builders.hpp"
#include "hopfkit/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hopfkit {

Convolution::Convolution(Coalgebra c, Hopf omega)
    : c_(std::move(c)), h_(std::move(omega)), unit_(compose(h_.unit(), c_.eps())) {}

void Convolution::require_context(const GradedMap& a, const char* what) const {
    require_same(a.source(), c_.space(), what);
    require_same(a.target(), h_.space(), what);
}

GradedMap Convolution::star(const GradedMap& a, const GradedMap& b) const {
    require_context(a, "convolution (left)");
    require_context(b, "convolution (right)");
    return compose(h_.mult(), compose(tensor_map(a, b), c_.delta()));
}

GradedMap Convolution::power(const GradedMap& a, int n) const {
    if (n < 0) throw std::invalid_argument("negative convolution power");
    GradedMap acc = unit_;
    for (int i = 0; i < n; ++i) acc = star(acc, a);
    return acc;
}

GradedMap Convolution::d(const GradedMap& a) const { return hom_differential(a, c_.d(), h_.d()); }

GradedMap Convolution::inverse(const GradedMap& g) const { return compose(h_.antipode(), g); }

GradedMap Convolution::bracket(const GradedMap& a, const GradedMap& b) const { return star(a, b) - star(b, a); }

Report Convolution::group_element_report(const GradedMap& g) const {
    Report r;
    bool shape = g.source() == c_.space() && g.target() == h_.space() && (g.degree() == 0 || g.is_zero());
    r.add("shape", "g ∈ Hom(C,Ω)₀", shape, shape ? "" : "not a degree-0 map C → Ω");
    if (!shape) return r;
    r.expect_zero("chain", "∂_{C,Ω}g = 0", d(g));
    r.expect_equal("counit", "ε_Ω∘g = ε_C", compose(h_.eps(), g), c_.eps());
    r.expect_equal("comult", "△_Ω∘g = (g⊗g)∘△_C", compose(h_.delta(), g), compose(tensor_map(g, g), c_.delta()));
    return r;
}

Report Convolution::tangential_report(const GradedMap& v) const {
    Report r;
    bool shape = v.source() == c_.space() && v.target() == h_.space() && (v.degree() == 0 || v.is_zero());
    r.add("shape", "υ ∈ Hom(C,Ω)₀", shape, shape ? "" : "not a degree-0 map C → Ω");
    if (!shape) return r;
    r.expect_zero("chain", "∂_{C,Ω}υ = 0", d(v));
    r.expect_zero("counit", "ε_Ω∘υ = 0", compose(h_.eps(), v));
    r.expect_equal("comult", "△_Ω∘υ = (e⊗υ + υ⊗e)∘△_C", compose(h_.delta(), v),
                   compose(tensor_map(unit_, v) + tensor_map(v, unit_), c_.delta()));
    return r;
}

std::vector<GradedMap> Convolution::tangential_basis() const {
    MapUnknown x(c_.space(), h_.space(), 0);
    const GradedMap e = unit_;
    std::vector<MapConstraint> cons;
    cons.push_back({[this](const std::vector<GradedMap>& a) { return d(a[0]); }, zero(-1)});
    cons.push_back({[this](const std::vector<GradedMap>& a) { return compose(h_.eps(), a[0]); },
                    GradedMap::zero(c_.space(), Space::ground(), 0)});
    cons.push_back({[this, e](const std::vector<GradedMap>& a) {
                        return compose(h_.delta(), a[0]) -
                               compose(tensor_map(e, a[0]) + tensor_map(a[0], e), c_.delta());
                    },
                    GradedMap::zero(c_.space(), tensor_space(h_.space(), h_.space()), 0)});
    auto sol = solve_for_maps({x}, cons);
    std::vector<GradedMap> out;
    if (sol)
        for (auto& k : sol->kernel) out.push_back(k[0]);
    return out;
}

GradedMap pullback(const GradedMap& f, const GradedMap& x) { return compose(x, f); }

GradedMap pushforward(const GradedMap& psi, const GradedMap& x) { return compose(psi, x); }

GradedMap action(const Convolution& conv, const GradedMap& g, const GradedMap& alpha) {
    return conv.star(compose(g, conv.coalgebra().eps()), alpha);
}

std::vector<SparseVec> group_likes(const Hopf& h) {
    if (h.filtered())
        throw std::invalid_argument("group-likes of a filtered Hopf algebra form an infinite family (exp of primitives)");
    const Space& s = h.space();
    const Space ss = tensor_space(s, s);
    const std::vector<int> b0 = s.basis_of_degree(0);
    const int n = static_cast<int>(b0.size());
    std::vector<int> pos(s.dim(), -1);
    for (int i = 0; i < n; ++i) pos[b0[i]] = i;

    // L_i(x) = (e^i⊗I)(△x) restricted to Ω₀, as dense n×n matrices.
    std::vector<std::vector<std::vector<Scalar>>> ops(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n)));
    for (int j = 0; j < n; ++j)
        for (const auto& [r, c] : h.delta().column(b0[j])) {
            const auto& t = ss.tuple(r);
            if (pos[t[0]] >= 0 && pos[t[1]] >= 0) ops[pos[t[0]]][pos[t[1]]][j] += c;
        }

    struct Piece {
        std::vector<std::vector<Scalar>> basis;  // coordinates on Ω₀
        std::vector<Scalar> mu;
    };
    std::vector<Piece> pieces;
    {
        Piece all;
        for (int i = 0; i < n; ++i) {
            std::vector<Scalar> v(n);
            v[i] = 1;
            all.basis.push_back(std::move(v));
        }
        pieces.push_back(std::move(all));
    }
    for (int i = 0; i < n && !pieces.empty(); ++i) {
        const auto& a = ops[i];
        const std::vector<Scalar> roots = rational_roots(characteristic_polynomial(a));
        std::vector<Piece> next;
        for (const auto& p : pieces) {
            for (const auto& mu : roots) {
                std::vector<SparseVec> cols;
                for (const auto& w : p.basis) {
                    SparseVec col;
                    for (int r = 0; r < n; ++r) {
                        Scalar v = -mu * w[r];
                        for (int c = 0; c < n; ++c)
                            if (sgn(a[r][c]) != 0) v += a[r][c] * w[c];
                        if (sgn(v) != 0) col.emplace_back(r, v);
                    }
                    cols.push_back(std::move(col));
                }
                auto ker = kernel_basis(n, cols);
                if (ker.empty()) continue;
                Piece q;
                q.mu = p.mu;
                q.mu.push_back(mu);
                for (const auto& y : ker) {
                    std::vector<Scalar> v(n);
                    for (const auto& [k, c] : y)
                        for (int r = 0; r < n; ++r) v[r] += c * p.basis[k][r];
                    q.basis.push_back(std::move(v));
                }
                next.push_back(std::move(q));
            }
        }
        pieces = std::move(next);
    }

    std::vector<SparseVec> out;
    for (const auto& p : pieces) {
        SparseVec x;
        for (int i = 0; i < n; ++i)
            if (sgn(p.mu[i]) != 0) x.emplace_back(b0[i], p.mu[i]);
        std::sort(x.begin(), x.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
        GradedMap g = element(s, x, 0);
        Convolution conv(ground_coalgebra(), h);
        if (conv.is_group_element(g)) out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<HomogeneousElement> primitives(const Hopf& h, std::optional<int> degree, std::optional<int> max_weight) {
    const Space& s = h.space();
    const Space ss = tensor_space(s, s);
    const int one = h.unit_index();
    if (one < 0) throw std::invalid_argument("unit is not a basis element");
    std::vector<HomogeneousElement> out;
    for (int deg : s.degrees_present()) {
        if (degree && deg != *degree) continue;
        std::vector<int> idx;
        for (int i : s.basis_of_degree(deg))
            if (!max_weight || s.weight(i) <= *max_weight) idx.push_back(i);
        std::vector<SparseVec> cols;
        for (int i : idx) {
            SparseVec col = h.delta().column(i);
            const int a[2] = {i, one}, b[2] = {one, i};
            GradedMap p(Space::ground(), ss, deg);
            p.set_column(0, col);
            const int ra = ss.find_tuple(a, 2), rb = ss.find_tuple(b, 2);
            p.add(ra, 0, -1);
            p.add(rb, 0, -1);
            cols.push_back(p.column(0));
        }
        for (const auto& k : kernel_basis(ss.dim(), cols)) {
            SparseVec v;
            for (const auto& [j, c] : k) v.emplace_back(idx[j], c);
            std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
            out.push_back({deg, std::move(v)});
        }
    }
    return out;
}

GroupTable group_table(const Convolution& conv, const std::vector<GradedMap>& elements) {
    GroupTable t;
    t.elements = elements;
    const int n = static_cast<int>(elements.size());
    auto find = [&](const GradedMap& x) {
        for (int i = 0; i < n; ++i)
            if (t.elements[i] == x) return i;
        return -1;
    };
    t.product.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int k = find(conv.star(elements[i], elements[j]));
            if (k < 0) throw std::invalid_argument("element set is not closed under convolution");
            t.product[i][j] = k;
        }
    t.identity = find(conv.unit());
    t.inverse.assign(n, -1);
    for (int i = 0; i < n; ++i) t.inverse[i] = find(conv.inverse(elements[i]));
    return t;
}

bool tables_isomorphic(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
    const int n = static_cast<int>(a.size());
    if (static_cast<int>(b.size()) != n) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) ok = perm[a[i][j]] == b[perm[i]][perm[j]];
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace hopfkit
