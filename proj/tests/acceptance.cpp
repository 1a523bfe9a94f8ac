// One line per acceptance criterion: id, verdict, runtime against its budget, check count.
// All comparisons are exact rational equality; there is no floating-point tolerance.

#include "hopfkit/cli.hpp"
#include "hopfkit/corpus.hpp"
#include "hopfkit/tannaka.hpp"
#include "support.hpp"
#include "word_oracle.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>

using namespace hopfkit;
using hopfkit::testing::random_map;
using hopfkit::testing::small_scalar;

namespace {

GradedMap id(const Space& s) { return GradedMap::identity(s); }

GradedMap point(const Hopf& h, const std::string& label) { return basis_element(h.space(), h.space().atom_index(label)); }

GradedMap filtered_part(const GradedMap& f) {
    GradedMap out(f.source(), f.target(), f.degree());
    for (int j = 0; j < f.source().dim(); ++j)
        for (const auto& [r, c] : f.column(j))
            if (f.target().weight(r) >= f.source().weight(j)) out.add(r, j, c);
    return out;
}

GradedMap combination(const std::vector<GradedMap>& basis, std::mt19937_64& rng) {
    GradedMap v = GradedMap::zero(basis.at(0).source(), basis.at(0).target(), basis[0].degree());
    for (const auto& b : basis) v += small_scalar(rng) * b;
    return v;
}

std::string data_path(const std::string& f) { return std::string(HOPFKIT_DATA_DIR) + "/" + f; }

Report axiom_suite() {
    Report r;
    for (const Hopf& h : {ground_hopf(), corpus::z2(), corpus::s3(), corpus::tensor_a(3), corpus::tensor_ab(3),
                          corpus::tensor_x(2), corpus::cobar_example(3)})
        r.merge(verify_axioms(h.data()), h.name());
    HopfData bad = corpus::z2().data();
    const Space& s = bad.cx.space;
    bad.antipode = GradedMap(s, s, 0);
    bad.antipode.add(s.atom_index("e"), s.atom_index("e"), 1);
    bad.antipode.add(s.atom_index("e"), s.atom_index("g"), 1);
    const Report broken = verify_axioms(bad);
    const CheckResult* f = broken.first_failure();
    r.add("corrupted.antipode", "m∘(ς⊗I)∘△ = u∘ε fails with a witness", f && f->name.find("antipode") != std::string::npos &&
                                                                         !f->witness.empty());
    return r;
}

Report convolution_group() {
    Report r;
    const Hopf s3 = corpus::s3();
    const Convolution conv(ground_coalgebra(), s3);
    std::vector<GradedMap> gs;
    for (const auto& v : group_likes(s3)) gs.push_back(element(s3.space(), v, 0));
    const GroupTable t = group_table(conv, gs);
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::vector<int>> ref(6, std::vector<int>(6));
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) {
            std::array<int, 3> c{perms[i][perms[j][0]], perms[i][perms[j][1]], perms[i][perms[j][2]]};
            ref[i][j] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    r.add("order", "|P_Ω(k^∨)| = 6", t.elements.size() == 6);
    r.add("isomorphic", "P_Ω(k^∨) ≅ S₃", tables_isomorphic(t.product, ref));
    const GradedMap e = conv.unit();
    for (size_t i = 0; i < gs.size(); ++i) {
        r.merge(conv.group_element_report(gs[i]), "element[" + std::to_string(i) + "]");
        r.expect_equal("unit[" + std::to_string(i) + "]", "e⋆g = g⋆e = g", conv.star(e, gs[i]), conv.star(gs[i], e));
        r.expect_equal("inverse[" + std::to_string(i) + "]", "(ς∘g)⋆g = e", conv.star(conv.inverse(gs[i]), gs[i]), e);
        r.expect_equal("inverse.r[" + std::to_string(i) + "]", "g⋆(ς∘g) = e", conv.star(gs[i], conv.inverse(gs[i])), e);
        for (const auto& b : gs)
            for (const auto& c : gs)
                r.expect_equal("assoc", "(g₁⋆g₂)⋆g₃ = g₁⋆(g₂⋆g₃)", conv.star(conv.star(gs[i], b), c), conv.star(gs[i], conv.star(b, c)));
    }
    return r;
}

Report primitives_and_brackets() {
    Report r;
    const Hopf h = corpus::tensor_ab(3);
    const Space& s = h.space();
    const auto prims = primitives(h, 0, 2);
    r.add("dimension", "dim P(T(a,b))₀ at weight ≤ 2 is 3", prims.size() == 3, std::to_string(prims.size()));
    const int ia = s.atom_index("a"), ib = s.atom_index("b"), iab = s.atom_index("a*b"), iba = s.atom_index("b*a");
    std::vector<std::array<Scalar, 3>> coords;
    std::vector<GradedMap> xs;
    for (const auto& p : prims) {
        const GradedMap x = element(s, p.v, 0);
        xs.push_back(x);
        const std::array<Scalar, 3> c{x.entry(ia, 0), x.entry(ib, 0), x.entry(iab, 0)};
        GradedMap rebuilt = c[0] * point(h, "a") + c[1] * point(h, "b") + c[2] * (point(h, "a*b") - point(h, "b*a"));
        r.expect_equal("span", "x ∈ span{a, b, ab − ba}", x, rebuilt);
        coords.push_back(c);
        (void)iba;
    }
    if (coords.size() == 3) {
        const auto& m = coords;
        const Scalar det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        r.add("independent", "the primitives span all of span{a, b, ab − ba}", sgn(det) != 0);
    }
    const Convolution conv(ground_coalgebra(), h);
    auto br = [&](const GradedMap& x, const GradedMap& y) { return conv.bracket(x, y); };
    for (const auto& x : xs)
        for (const auto& y : xs)
            for (const auto& z : xs)
                r.expect_zero("jacobi", "[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0", br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y)));
    return r;
}

Report exp_ln() {
    Report r;
    for (const Hopf& h : {corpus::tensor_a(4), build_tensor_hopf("T(a,b)", {{"a", 0}, {"b", 0}}, {}, 4)}) {
        const Convolution conv(ground_coalgebra(), h);
        const auto basis = conv.tangential_basis();
        std::mt19937_64 rng(2024);
        for (int i = 0; i < 20; ++i) {
            const std::string tag = h.name() + "[" + std::to_string(i) + "]";
            const GradedMap v = combination(basis, rng);
            const GradedMap g = exp_map(conv, v);
            r.merge(conv.group_element_report(g), tag + ".exp");
            r.expect_equal(tag + ".ln_exp", "ln(exp υ) = υ", ln_map(conv, g), v);
            const GradedMap g2 = conv.star(g, exp_map(conv, combination(basis, rng)));
            const GradedMap l = ln_map(conv, g2);
            r.merge(conv.tangential_report(l), tag + ".ln");
            r.expect_equal(tag + ".exp_ln", "exp(ln g) = g", exp_map(conv, l), g2);
        }
    }
    return r;
}

Report bch_oracle() {
    Report r;
    const Hopf h = corpus::tensor_ab(3);
    const Convolution conv(ground_coalgebra(), h);
    using oracle::bracket;
    const auto a = oracle::letter(3, 'a'), b = oracle::letter(3, 'b');
    const auto rhs = a + b + bracket(a, b) * Scalar(1, 2) + bracket(a, bracket(a, b)) * Scalar(1, 12) +
                     bracket(b, bracket(b, a)) * Scalar(1, 12);
    const GradedMap z = bch(conv, point(h, "a"), point(h, "b"), 3);
    r.expect_equal("bch", "bch(a,b) = a + b + ½[a,b] + (1/12)[a,[a,b]] + (1/12)[b,[b,a]]", z, oracle::to_element(h.space(), rhs));
    r.merge(conv.tangential_report(z), "lie");
    r.add("oracle.self", "log(exp a exp b) agrees with the closed form", oracle::log(oracle::exp(a) * oracle::exp(b)) == rhs);
    return r;
}

Complex small_complex(const std::string& name, const std::string& p) {
    const Space s = Space::atomic(name, {p + "1", p + "0", p + "0b"}, {1, 0, 0});
    GradedMap d(s, s, -1);
    d.add(1, 0, 1);
    d.add(2, 0, -2);
    return {s, d};
}

Report cofree_identities() {
    Report r;
    const Complex m = small_complex("M", "m"), n = small_complex("N", "n");
    const std::vector<Coalgebra> cs{ground_coalgebra(),         corpus::z2().coalgebra(),        corpus::s3().coalgebra(),
                                    corpus::dual_numbers(0),    corpus::dual_numbers(1),         corpus::pq_coalgebra(),
                                    corpus::divided_square(),   corpus::tensor_a(3).coalgebra(), corpus::tensor_x(2).coalgebra(),
                                    corpus::cobar_example(2).coalgebra()};
    for (const Coalgebra& c : cs) {
        std::mt19937_64 rng(0);
        const Space cm = tensor_space(c.space(), m.space), cn = tensor_space(c.space(), n.space);
        for (int trial = 0; trial < 50; ++trial) {
            const std::string tag = c.name() + "[" + std::to_string(trial) + "]";
            const int deg = static_cast<int>(rng() % 3) - 1;
            const GradedMap a1 = filtered_part(random_map(cm, n.space, deg, rng, 0.4));
            const GradedMap a2 = filtered_part(random_map(cm, cn, deg, rng, 0.3));
            const GradedMap p = p_check(c, m.space, a1);
            r.expect_zero(tag + ".rp", "ř∘p̌ = 0", r_check(c, m.space, n.space, p));
            r.expect_equal(tag + ".qp", "q̌∘p̌ = I", q_check(c, n.space, p), a1);
            r.expect_equal(tag + ".pq_sr", "p̌∘q̌ + š∘ř = I",
                           p_check(c, m.space, q_check(c, n.space, a2)) + s_check(c, n.space, r_check(c, m.space, n.space, a2)), a2);
        }
    }
    return r;
}

Report module_functors() {
    Report r;
    const Hopf z = corpus::z2(), ta = corpus::tensor_a(3);
    const std::vector<DgModule> mods{trivial_module(z),    regular_module(z),  antipodal_module(z),
                                     corpus::z2_sign(),    corpus::z2_twisted(), corpus::z2_cone(),
                                     trivial_module(ta),   regular_module(ta), antipodal_module(ta),
                                     corpus::tensor_a_jordan(3)};
    for (const DgModule& mod : mods) {
        const Representation y = functor_y(mod);
        r.merge(verify_representation(y), "Y(" + mod.name() + ")");
        const DgModule back = functor_x(y, mod.name());
        r.expect_equal("XY[" + mod.name() + "]", "X(Y(M)) = M", back.action(), mod.action());
        r.expect_equal("YX[" + mod.name() + "]", "Y(X(ρ)) = ρ", functor_y(back).universal, y.universal);
    }
    const std::vector<std::pair<DgModule, DgModule>> pairs{{corpus::z2_sign(), corpus::z2_twisted()},
                                                           {corpus::z2_cone(), regular_module(z)},
                                                           {corpus::tensor_a_jordan(3), regular_module(ta)}};
    for (const auto& [a, b] : pairs) {
        const DgModule ab = module_tensor(a, b);
        const Representation rab = rep_tensor(functor_y(a), functor_y(b));
        r.expect_equal("Ytensor[" + ab.name() + "]", "Y(M⊗M′) = Y(M)⊗_△Y(M′)", functor_y(ab).universal, rab.universal);
        r.expect_equal("Xtensor[" + ab.name() + "]", "X(ρ⊗_△ρ′) = X(ρ)⊗X(ρ′)", functor_x(rab).action(), ab.action());
    }
    r.expect_equal("unit", "Y(k) = I", functor_y(trivial_module(z)).universal, id(tensor_space(z.space(), Space::ground())));
    return r;
}

Report tannaka_cli() {
    Report r;
    for (const char* f : {"reconstruct_z2.json", "reconstruct_dual_a.json", "reconstruct_pq_x.json"}) {
        cli::Options o;
        o.command = "reconstruct";
        o.files = {data_path(f)};
        const cli::Outcome out = cli::run(o);
        r.merge(out.report, f);
        r.add(std::string(f) + ".exit", "cmd_reconstruct exits 0", out.exit_code == cli::kPass, out.error);
        for (const char* part : {"inverse.g_eta", "hom.eta", "hom.g", "varsigma.left", "transport.roundtrip"}) {
            bool seen = false;
            for (const auto& e : out.report.entries) seen |= e.name.rfind(part, 0) == 0;
            r.add(std::string(f) + ".covers." + part, "the report certifies this part", seen);
        }
    }
    return r;
}

HomotopyPair exp_line(const Convolution& conv) {
    const Hopf& t = conv.omega();
    Poly e{conv.unit()};
    GradedMap pw = conv.unit();
    Scalar fact = 1;
    for (int k = 1; k <= t.trunc(); ++k) {
        pw = conv.star(pw, point(t, "x0"));
        fact *= k;
        e.push_back(Scalar(1 / fact) * pw);
    }
    HomotopyPair p{PairKind::CoalgebraMap, e, poly_apply(e, [&](const GradedMap& m) { return conv.star(point(t, "x1"), m); })};
    poly_trim(p.f);
    poly_trim(p.xi);
    return p;
}

Report homotopy_calculus() {
    Report r;
    const Hopf t = corpus::tensor_x(3);
    const Convolution conv(ground_coalgebra(), t);
    const HomotopyPair p1 = exp_line(conv);
    const HomotopyPair l1{PairKind::Tangential, {conv.zero(0), point(t, "x0")}, {point(t, "x1")}};
    const HomotopyPair conj = inner_conjugation_pair(t, value_at_one(point(t, "x0")), value_at_one(point(t, "x1")));
    const Coalgebra d = corpus::dual_numbers(0);
    const Convolution on_d(d, t);
    r.merge(verify_homotopy_pair(p1, conv), "exp_line");
    r.merge(verify_hopf_pair(conj, t, t), "conjugation");
    r.merge(verify_homotopy_pair(star_pairs(conv, p1, p1), conv), "star");
    r.merge(verify_homotopy_pair(star_pairs(conv, p1, antipode_pair(conv, p1)), conv), "star_inverse");
    r.merge(verify_homotopy_pair(antipode_pair(conv, p1), conv), "antipode");
    r.merge(verify_coalgebra_pair(compose_pairs(constant_pair(PairKind::CoalgebraMap, d.eps()), p1), d, t.coalgebra()), "compose");
    r.merge(verify_homotopy_pair(hopf_pushforward_pair(conj, p1), conv), "pushforward");
    r.merge(verify_homotopy_pair(bracket_pairs(conv, l1, l1), conv), "bracket");
    r.merge(verify_homotopy_pair(tangential_compose(constant_pair(PairKind::CoalgebraMap, d.eps()), l1), on_d), "tangential_compose");
    r.merge(verify_homotopy_pair(tangential_pushforward(conj, l1), conv), "tangential_pushforward");
    std::mt19937_64 rng(47);
    auto nonzero = [&] {
        Scalar c = 0;
        while (sgn(c) == 0 || c == 1) c = small_scalar(rng);
        return c;
    };
    std::vector<HomotopyPair> bad(5, p1);
    bad[0].f[1] *= nonzero();
    bad[1].xi[1] += nonzero() * point(t, "x1");
    bad[2].f[0] += nonzero() * point(t, "x0");
    bad[3].f[2] += nonzero() * conv.unit();
    bad[4].xi[0] += nonzero() * point(t, "x1*x0*x0");
    for (size_t i = 0; i < bad.size(); ++i)
        r.add("corrupted[" + std::to_string(i) + "]", "a corrupted pair is rejected", !verify_homotopy_pair(bad[i], conv).ok());
    const SearchResult s = homotopy_search(conv, conv.unit(), exp_map(conv, point(t, "x0")), t.trunc());
    r.add("search", "e ∼ exp(x₀) found at D = N", s.pair.has_value(), s.message);
    if (s.pair) r.merge(verify_homotopy_pair(*s.pair, conv), "search.witness");
    return r;
}

Report naturality_squares() {
    Report r;
    {
        const Hopf t = corpus::tensor_a(3);
        const Coalgebra d = corpus::dual_numbers(0);
        const Convolution on_d(d, t), on_k(ground_coalgebra(), t);
        r.merge(exp_naturality_report(on_d, on_k, d.eps(), point(t, "a"), exp_map(on_k, point(t, "a"))), "exp.counit");
        GradedMap coaug(Space::ground(), d.space(), 0);
        coaug.add(d.space().atom_index("1"), 0, 1);
        std::mt19937_64 rng(43);
        const GradedMap v = combination(on_d.tangential_basis(), rng);
        r.merge(exp_naturality_report(on_k, on_d, coaug, v, exp_map(on_d, v)), "exp.coaugmentation");
    }
    {
        const Hopf z = corpus::z2(), s = corpus::s3();
        const Convolution cz(z.coalgebra(), s), cs(s.coalgebra(), s), zz(z.coalgebra(), z);
        GradedMap sign(s.space(), z.space(), 0);
        for (int i = 0; i < s.space().dim(); ++i) {
            const std::string& p = s.space().label(i)[0];
            int inv = 0;
            for (int a = 1; a < 4; ++a)
                for (int b = a + 1; b < 4; ++b) inv += p[a] > p[b];
            sign.add(z.space().atom_index(inv % 2 ? "g" : "e"), i, 1);
        }
        const GradedMap trivial = compose(z.unit(), s.eps());
        std::mt19937_64 rng(23);
        int n = 0;
        for (const GradedMap& f : {sign, trivial}) {
            const std::string tag = "presheaf[" + std::to_string(n++) + "]";
            r.merge(hopf_morphism_report(f, s, z), tag + ".hopf");
            const GradedMap x = random_map(z.space(), s.space(), 0, rng), y = random_map(z.space(), s.space(), 0, rng);
            r.expect_equal(tag + ".pullback", "(x⋆y)∘f = (x∘f)⋆(y∘f)", pullback(f, cz.star(x, y)), cs.star(pullback(f, x), pullback(f, y)));
            r.expect_equal(tag + ".pushforward", "f∘(x⋆y) = (f∘x)⋆(f∘y)", pushforward(f, cz.star(x, y)),
                           zz.star(pushforward(f, x), pushforward(f, y)));
        }
    }
    {
        const Hopf t = corpus::tensor_x(2);
        const Coalgebra cpq = corpus::pq_coalgebra(), d0 = corpus::dual_numbers(0), k = ground_coalgebra();
        const ProbeFamily p = standard_probe(t);
        GradedMap h(d0.space(), cpq.space(), 0);  // t ↦ q
        h.add({"1"}, {"1"}, 1);
        h.add({"q"}, {"t"}, 1);
        GradedMap coaug(Space::ground(), d0.space(), 0);
        coaug.add(d0.space().atom_index("1"), 0, 1);
        r.merge(coalgebra_morphism_report(h, d0, cpq), "h");
        r.merge(coalgebra_morphism_report(coaug, k, d0), "coaug");
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 3; ++trial) {
            const std::string tag = "[" + std::to_string(trial) + "]";
            const GradedMap a = filtered_part(random_map(cpq.space(), t.space(), trial % 2, rng));
            const GradedMap b = filtered_part(random_map(cpq.space(), t.space(), 0, rng));
            const NatEndo ea = eta_breve(p, cpq, a), eb = eta_breve(p, cpq, b);
            const NatEndo via_h = e_omega_pullback(p, d0, h, ea);
            auto diff = [&](const NatEndo& x, const NatEndo& y) { return nat_difference(p, x, y); };
            auto w = diff(e_omega_pullback(p, k, compose(h, coaug), ea), e_omega_pullback(p, k, coaug, via_h));
            r.add("functor.compose" + tag, "E_ω(h∘c) = E_ω(c)∘E_ω(h)", !w, w.value_or(""));
            w = diff(e_omega_pullback(p, cpq, id(cpq.space()), ea), ea);
            r.add("functor.identity" + tag, "E_ω(I) = I", !w, w.value_or(""));
            w = diff(e_omega_pullback(p, d0, h, nat_compose(ea, eb)), nat_compose(via_h, e_omega_pullback(p, d0, h, eb)));
            r.add("functor.product" + tag, "E_ω(h)(η∘η′) = E_ω(h)η∘E_ω(h)η′", !w, w.value_or(""));
            r.expect_equal("g_pullback.h" + tag, "ğ(E_ω(h)η) = ğ(η)∘h", g_breve(p, via_h), compose(g_breve(p, ea), h));
            const NatEndo via_c = e_omega_pullback(p, k, compose(h, coaug), ea);
            r.expect_equal("g_pullback.hc" + tag, "ğ(E_ω(h∘c)η) = ğ(η)∘h∘c", g_breve(p, via_c), compose({g_breve(p, ea), h, coaug}));
        }
    }
    return r;
}

struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<Report()> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "axiom suite on the corpus; corrupted antipode fails", 5, axiom_suite},
        {2, "P_Ω(k^∨) for Ω = Q[S₃] is S₃; group laws exact", 5, convolution_group},
        {3, "primitives of T(a,b) at weight ≤ 2 and Jacobi", 5, primitives_and_brackets},
        {4, "exp/ln round trips on 20 seeded inputs, N = 4", 30, exp_ln},
        {5, "BCH at N = 3 against the word-series oracle", 10, bch_oracle},
        {6, "p̌/q̌/ř/š identities, 50 seeded maps per coalgebra", 10, cofree_identities},
        {7, "X/Y round trips and tensor compatibility", 10, module_functors},
        {8, "reconstruct on the three shipped pairs", 60, tannaka_cli},
        {9, "homotopy pairs, composites, corruptions, search", 15, homotopy_calculus},
        {10, "naturality squares on at least two morphisms each", 10, naturality_squares},
    };
    int failed = 0;
    std::printf("tolerance: exact rational equality (no floating point)\n");
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Report r;
        std::string error;
        try {
            r = c.body();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = error.empty() && r.ok() && !r.entries.empty() && secs < c.budget_s;
        failed += !ok;
        std::printf("criterion %2d %s  %7.3fs / %4.0fs  %5zu checks  %s\n", c.id, ok ? "PASS" : "FAIL", secs, c.budget_s,
                    r.entries.size(), c.title);
        if (!error.empty()) std::printf("    error: %s\n", error.c_str());
        if (const CheckResult* f = r.first_failure())
            std::printf("    first failure: %s [%s] %s\n", f->name.c_str(), f->anchor.c_str(), f->witness.c_str());
    }
    std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
