#include "hopfkit/corpus.hpp"
#include "hopfkit/tannaka.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace hopfkit;
using hopfkit::testing::random_map;

namespace {

std::string failures(const Report& r) {
    std::string s;
    for (const auto& e : r.entries)
        if (!e.pass) s += e.name + " [" + e.anchor + "] " + e.witness + "\n";
    return s;
}

GradedMap id(const Space& s) { return GradedMap::identity(s); }

GradedMap point(const Hopf& h, const std::string& label) { return basis_element(h.space(), h.space().atom_index(label)); }

GradedMap filtered_part(const GradedMap& f) {
    GradedMap out(f.source(), f.target(), f.degree());
    for (int j = 0; j < f.source().dim(); ++j)
        for (const auto& [r, c] : f.column(j))
            if (f.target().weight(r) >= f.source().weight(j)) out.add(r, j, c);
    return out;
}

const GradedMap& component(const ProbeFamily& p, const NatEndo& eta, const std::string& name) {
    const int i = p.find(name);
    if (i < 0) throw std::invalid_argument("no probe module " + name);
    return eta.components[static_cast<size_t>(i)];
}

// exp(t x) as a polynomial on Hom(k, Ω), with x nilpotent in the truncation.
Poly exp_line(const Convolution& conv, const GradedMap& x) {
    Poly e{conv.unit()};
    GradedMap pw = conv.unit();
    Scalar fact = 1;
    for (int k = 1; k <= conv.omega().trunc(); ++k) {
        pw = conv.star(pw, x);
        fact *= k;
        e.push_back(Scalar(1 / fact) * pw);
    }
    poly_trim(e);
    return e;
}

}  // namespace

TEST(Probe, StandardFamiliesVerify) {
    for (const Hopf& h : {corpus::z2(), corpus::tensor_a(3), corpus::tensor_x(2)}) {
        const ProbeFamily p = standard_probe(h);
        Report r = verify_probe(p);
        EXPECT_TRUE(r.ok()) << h.name() << "\n" << failures(r);
        EXPECT_GE(p.find("k"), 0);
        EXPECT_NE(p.find("F(Z)"), -1);
        for (const auto& m : p.modules) EXPECT_TRUE(verify_module(h, m.data()).ok()) << m.name();
    }
}

TEST(Probe, NamesAreUnique) {
    const ProbeFamily p = standard_probe(corpus::z2(), {corpus::z2_sign(), corpus::z2_twisted()});
    for (size_t i = 0; i < p.modules.size(); ++i)
        for (size_t j = i + 1; j < p.modules.size(); ++j) EXPECT_NE(p.modules[i].name(), p.modules[j].name());
}

TEST(Probe, FreeGeneratorMapsAreModuleMorphisms) {
    const Hopf t = corpus::tensor_x(2);
    const ProbeFamily p = standard_probe(t);
    for (int z = 0; z < p.aux.space.dim(); ++z) {
        const GradedMap f = free_generator_map(t, p.aux.space, z);
        EXPECT_EQ(f.degree(), p.aux.space.degree(z));
        EXPECT_TRUE(is_module_morphism(f, p.modules[static_cast<size_t>(p.regular)],
                                       p.modules[static_cast<size_t>(p.free_aux)]));
    }
}

TEST(EtaBreve, Z2ByHand) {
    const Hopf z = corpus::z2();
    const ProbeFamily p = standard_probe(z, {corpus::z2_sign()});
    const Coalgebra k = ground_coalgebra();
    const NatEndo eg = eta_breve(p, k, point(z, "g"));
    // On the sign module g acts by −1.
    const DgModule sign = corpus::z2_sign();
    EXPECT_EQ(component(p, eg, sign.name()), Scalar(-1) * id(tensor_space(k.space(), sign.space())));
    // On the regular module it is left multiplication, swapping e and g.
    const GradedMap& reg = component(p, eg, p.modules[static_cast<size_t>(p.regular)].name());
    const Space kz = tensor_space(k.space(), z.space());
    EXPECT_EQ(reg.entry(kz.index_of({"1", "g"}), kz.index_of({"1", "e"})), Scalar(1));
    EXPECT_EQ(reg.entry(kz.index_of({"1", "e"}), kz.index_of({"1", "g"})), Scalar(1));
    EXPECT_EQ(reg.nonzeros(), 2u);
    EXPECT_EQ(component(p, eg, "k"), id(tensor_space(k.space(), Space::ground())));
}

TEST(EtaBreve, InverseOfGBreveOnRandomMaps) {
    std::mt19937_64 rng(17);
    struct Case {
        Hopf h;
        Coalgebra c;
    };
    for (const Case& cs : {Case{corpus::z2(), ground_coalgebra()}, Case{corpus::z2(), corpus::z2().coalgebra()},
                           Case{corpus::tensor_a(3), corpus::dual_numbers(0)},
                           Case{corpus::tensor_x(2), corpus::pq_coalgebra()}}) {
        const ProbeFamily p = standard_probe(cs.h);
        for (int trial = 0; trial < 10; ++trial) {
            const int deg = trial % 3 - 1;
            const GradedMap a = filtered_part(random_map(cs.c.space(), cs.h.space(), deg, rng));
            const NatEndo ea = eta_breve(p, cs.c, a);
            EXPECT_EQ(g_breve(p, ea), a) << cs.h.name() << " trial " << trial;
            EXPECT_TRUE(naturality_report(p, ea).ok()) << failures(naturality_report(p, ea));
            EXPECT_TRUE(free_module_report(p, ea).ok());
            const Convolution conv(cs.c, cs.h);
            EXPECT_TRUE(nat_equal(delta_differential(p, ea), eta_breve(p, cs.c, conv.d(a))));
        }
    }
}

TEST(EtaBreve, IdentityAndComposition) {
    const Hopf t = corpus::tensor_a(3);
    const Coalgebra c = corpus::dual_numbers(0);
    const ProbeFamily p = standard_probe(t, {corpus::tensor_a_jordan(3)});
    const Convolution conv(c, t);
    EXPECT_TRUE(nat_equal(eta_breve(p, c, conv.unit()), nat_identity(p, c)));
    EXPECT_EQ(g_breve(p, nat_identity(p, c)), conv.unit());
    const auto gs = sample_group_elements(conv, 0);
    ASSERT_GE(gs.size(), 2u);
    for (const auto& g : gs)
        for (const auto& h : gs)
            EXPECT_TRUE(nat_equal(eta_breve(p, c, conv.star(g, h)), nat_compose(eta_breve(p, c, g), eta_breve(p, c, h))));
}

TEST(TensorCondition, GroupElementsAreDgTensor) {
    const Hopf z = corpus::z2();
    const ProbeFamily p = standard_probe(z, {corpus::z2_sign(), corpus::z2_cone()});
    for (const Coalgebra& c : {ground_coalgebra(), z.coalgebra()}) {
        const Convolution conv(c, z);
        for (const auto& g : sample_group_elements(conv, 0)) {
            Report r = dg_tensor_report(p, eta_breve(p, c, g));
            EXPECT_TRUE(r.ok()) << failures(r);
        }
    }
}

TEST(TensorCondition, NonComultiplicativeFailsWithWitness) {
    const Hopf z = corpus::z2();
    const ProbeFamily p = standard_probe(z);
    const Coalgebra k = ground_coalgebra();
    const GradedMap alpha = point(z, "e") + point(z, "g");
    ASSERT_FALSE(is_coalgebra_morphism(alpha, k, z.coalgebra()));
    const NatEndo eta = eta_breve(p, k, alpha);
    EXPECT_TRUE(naturality_report(p, eta).ok());
    Report r = tensor_condition_report(p, eta);
    ASSERT_FALSE(r.ok());
    // ε(e + g) = 2, so η_k = 2I, and the regular tensor square fails too.
    for (const auto& e : r.entries)
        if (e.name == "unit" || e.name.rfind("tensor[", 0) == 0) {
            EXPECT_FALSE(e.pass) << e.name;
            EXPECT_FALSE(e.witness.empty());
        }
}

TEST(TensorCondition, NaturalityFailureIsDetected) {
    const Hopf z = corpus::z2();
    const ProbeFamily p = standard_probe(z);
    NatEndo eta = nat_identity(p, ground_coalgebra());
    // Scaling one component breaks naturality with the morphisms into it.
    eta.components[static_cast<size_t>(p.free_aux)] = Scalar(2) * eta.components[static_cast<size_t>(p.free_aux)];
    EXPECT_FALSE(naturality_report(p, eta).ok());
    EXPECT_FALSE(free_module_report(p, eta).ok());
}

TEST(Varsigma, IdentityAndInverse) {
    const Hopf t = corpus::tensor_a(3);
    const Coalgebra k = ground_coalgebra();
    const ProbeFamily p = standard_probe(t, {corpus::tensor_a_jordan(3)});
    EXPECT_TRUE(nat_equal(varsigma_inverse(p, nat_identity(p, k)), nat_identity(p, k)));
    const Convolution conv(k, t);
    const GradedMap g = exp_map(conv, point(t, "a"));
    const NatEndo eta = eta_breve(p, k, g);
    const NatEndo s = varsigma_inverse(p, eta);
    EXPECT_TRUE(nat_equal(nat_compose(s, eta), nat_identity(p, k)));
    EXPECT_TRUE(nat_equal(nat_compose(eta, s), nat_identity(p, k)));
    EXPECT_TRUE(nat_equal(s, eta_breve(p, k, exp_map(conv, Scalar(-1) * point(t, "a")))));
    EXPECT_THROW(varsigma_inverse(p, eta_breve(p, k, point(t, "a"))), std::invalid_argument);
}

TEST(Pullback, FunctorialAndCompatibleWithGBreve) {
    const Hopf t = corpus::tensor_x(2);
    const Coalgebra cpq = corpus::pq_coalgebra(), d0 = corpus::dual_numbers(0);
    const ProbeFamily p = standard_probe(t);
    GradedMap h(d0.space(), cpq.space(), 0);
    h.add({"1"}, {"1"}, 1);
    h.add({"q"}, {"t"}, 1);
    ASSERT_TRUE(is_coalgebra_morphism(h, d0, cpq));
    const Convolution conv(cpq, t);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        const GradedMap a = filtered_part(random_map(cpq.space(), t.space(), trial % 2, rng));
        const NatEndo ea = eta_breve(p, cpq, a);
        const NatEndo pulled = e_omega_pullback(p, d0, h, ea);
        EXPECT_EQ(g_breve(p, pulled), compose(a, h));
        EXPECT_TRUE(nat_equal(pulled, eta_breve(p, d0, compose(a, h))));
    }
    const NatEndo one = nat_identity(p, cpq);
    EXPECT_TRUE(nat_equal(e_omega_pullback(p, cpq, id(cpq.space()), eta_breve(p, cpq, conv.unit())), one));
    EXPECT_TRUE(nat_equal(e_omega_pullback(p, d0, h, one), nat_identity(p, d0)));
}

TEST(Delta, LeibnizOverTensor) {
    const Hopf t = corpus::tensor_x(2);
    const Coalgebra cpq = corpus::pq_coalgebra();
    const ProbeFamily p = standard_probe(t);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 5; ++trial) {
        const int da = trial % 2, db = (trial + 1) % 2;
        const NatEndo a = eta_breve(p, cpq, filtered_part(random_map(cpq.space(), t.space(), da, rng)));
        const NatEndo b = eta_breve(p, cpq, filtered_part(random_map(cpq.space(), t.space(), db, rng)));
        const NatEndo lhs = delta_differential(p, nat_compose(a, b));
        const NatEndo rhs = nat_add(nat_compose(delta_differential(p, a), b),
                                    nat_scale(sign_of(da), nat_compose(a, delta_differential(p, b))));
        EXPECT_TRUE(nat_equal(lhs, rhs)) << nat_difference(p, lhs, rhs).value_or("");
        for (const auto& tn : p.tensors) {
            const auto L = static_cast<size_t>(tn.left), R = static_cast<size_t>(tn.right);
            const Complex& ml = p.modules[L].complex();
            const Complex& mr = p.modules[R].complex();
            const GradedMap prod = comodule_tensor(cpq, ml.space, ml.space, mr.space, mr.space, a.components[L], b.components[R]);
            const Complex mlr = tensor_complex(ml, mr);
            const GradedMap dl = cofree_d(cpq, mlr, mlr, prod);
            const GradedMap dr = comodule_tensor(cpq, ml.space, ml.space, mr.space, mr.space,
                                                 cofree_d(cpq, ml, ml, a.components[L]), b.components[R]) +
                                 sign_of(da) * comodule_tensor(cpq, ml.space, ml.space, mr.space, mr.space, a.components[L],
                                                               cofree_d(cpq, mr, mr, b.components[R]));
            EXPECT_EQ(dl, dr);
        }
    }
}

TEST(Homotopy, TransportBothWays) {
    const Hopf t = corpus::tensor_x(3);
    const Coalgebra k = ground_coalgebra();
    const Convolution conv(k, t);
    const ProbeFamily p = standard_probe(t, {corpus::tensor_x_module(3)});
    const Poly e = exp_line(conv, point(t, "x0"));
    HomotopyPair hp{PairKind::CoalgebraMap, e, poly_apply(e, [&](const GradedMap& g) { return conv.star(point(t, "x1"), g); })};
    poly_trim(hp.xi);
    ASSERT_TRUE(verify_homotopy_pair(hp, conv).ok());
    const NatPair np = eta_breve_pair(p, k, hp);
    Report r = verify_nat_pair(p, np);
    EXPECT_TRUE(r.ok()) << failures(r);
    const HomotopyPair back = g_breve_pair(p, np);
    EXPECT_EQ(back.f, hp.f);
    EXPECT_EQ(back.xi, hp.xi);
    NatPair bad = np;
    bad.lambda[0].components[static_cast<size_t>(p.regular)] = Scalar(2) * bad.lambda[0].components[static_cast<size_t>(p.regular)];
    EXPECT_FALSE(verify_nat_pair(p, bad).ok());
}

TEST(Homotopy, SampledPairsAndCompositeWithCoalgebraPair) {
    const Hopf t = corpus::tensor_x(2);
    const Coalgebra cpq = corpus::pq_coalgebra();
    const Convolution conv(cpq, t);
    const ProbeFamily p = standard_probe(t);
    const auto pairs = sample_homotopy_pairs(conv);
    ASSERT_GE(pairs.size(), 2u);
    for (const auto& hp : pairs) {
        ASSERT_TRUE(verify_homotopy_pair(hp, conv).ok());
        Report r = verify_nat_pair(p, eta_breve_pair(p, cpq, hp));
        EXPECT_TRUE(r.ok()) << failures(r);
    }
    // Precompose with the constant coalgebra pair on h: D₀ → Cpq, and with the identity.
    const Coalgebra d0 = corpus::dual_numbers(0);
    GradedMap h(d0.space(), cpq.space(), 0);
    h.add({"1"}, {"1"}, 1);
    h.add({"q"}, {"t"}, 1);
    const NatPair np = eta_breve_pair(p, cpq, pairs[1]);
    const NatPair comp = pullback_composite_pair(p, d0, constant_pair(PairKind::CoalgebraMap, h), np);
    Report r = verify_nat_pair(p, comp);
    EXPECT_TRUE(r.ok()) << failures(r);
    const HomotopyPair back = g_breve_pair(p, comp);
    ASSERT_EQ(back.f.size(), pairs[1].f.size());
    for (size_t i = 0; i < back.f.size(); ++i) EXPECT_EQ(back.f[i], compose(pairs[1].f[i], h));
}

TEST(Homotopy, CompositeWithNontrivialSourcePair) {
    // (f(t), s(t)) on Hom(k, Ω) viewed as coalgebra maps k → C′ = Ω, pulled back along η̆ of a pair over C′.
    const Hopf t = corpus::tensor_x(2);
    const Coalgebra k = ground_coalgebra();
    const Convolution conv(k, t);
    const ProbeFamily p = standard_probe(t);
    const Poly e = exp_line(conv, point(t, "x0"));
    HomotopyPair fs{PairKind::CoalgebraMap, e, poly_apply(e, [&](const GradedMap& g) { return conv.star(point(t, "x1"), g); })};
    poly_trim(fs.xi);
    const Convolution on_omega(t.coalgebra(), t);
    const NatPair inner = eta_breve_pair(p, t.coalgebra(), constant_pair(PairKind::CoalgebraMap, id(t.space())));
    const NatPair comp = pullback_composite_pair(p, k, fs, inner);
    Report r = verify_nat_pair(p, comp);
    EXPECT_TRUE(r.ok()) << failures(r);
    const HomotopyPair back = g_breve_pair(p, comp);
    EXPECT_EQ(back.f, fs.f);
    EXPECT_EQ(back.xi, fs.xi);
}

TEST(Reconstruct, ThreePairs) {
    struct Case {
        Hopf h;
        Coalgebra c;
        std::vector<DgModule> extra;
    };
    const std::vector<Case> cases{{corpus::z2(), ground_coalgebra(), {corpus::z2_sign()}},
                                  {corpus::tensor_a(3), corpus::dual_numbers(0), {}},
                                  {corpus::tensor_x(2), corpus::pq_coalgebra(), {}}};
    for (const Case& cs : cases) {
        Report r = reconstruct(standard_probe(cs.h, cs.extra), cs.c);
        EXPECT_TRUE(r.ok()) << cs.h.name() << "\n" << failures(r);
        EXPECT_GE(r.entries.size(), 50u);
    }
}

TEST(Reconstruct, FiniteGroupTable) {
    const Hopf z = corpus::z2();
    Report r = reconstruct(standard_probe(z), ground_coalgebra());
    bool saw = false;
    for (const auto& e : r.entries) saw |= e.name == "group.table" && e.pass;
    EXPECT_TRUE(saw);
}

TEST(Reconstruct, EnlargedFamilyAgrees) {
    const Hopf z = corpus::z2();
    const ProbeFamily small = standard_probe(z);
    const ProbeFamily big = standard_probe(z, {corpus::z2_sign(), corpus::z2_twisted(), corpus::z2_cone()});
    const Coalgebra c = z.coalgebra();
    const Convolution conv(c, z);
    for (const auto& g : sample_group_elements(conv, 0)) {
        EXPECT_EQ(g_breve(small, eta_breve(small, c, g)), g_breve(big, eta_breve(big, c, g)));
        Report r = dg_tensor_report(big, eta_breve(big, c, g));
        EXPECT_TRUE(r.ok()) << failures(r);
    }
    Report r = reconstruct(big, c);
    EXPECT_TRUE(r.ok()) << failures(r);
}

TEST(Homotopy, InnerConjugationOverOmega) {
    const Hopf t = corpus::tensor_x(2);
    const Coalgebra c = t.coalgebra();
    const Space& s = t.space();
    HomotopyPair hp = inner_conjugation_pair(t, {{s.atom_index("x0"), Scalar(1)}}, {{s.atom_index("x1"), Scalar(1)}});
    hp.kind = PairKind::CoalgebraMap;
    const Convolution conv(c, t);
    Report hr = verify_homotopy_pair(hp, conv);
    ASSERT_TRUE(hr.ok()) << failures(hr);
    const ProbeFamily p = standard_probe(t);
    const NatPair np = eta_breve_pair(p, c, hp);
    Report r = verify_nat_pair(p, np);
    EXPECT_TRUE(r.ok()) << failures(r);
    const HomotopyPair back = g_breve_pair(p, np);
    EXPECT_EQ(back.f, hp.f);
    EXPECT_EQ(back.xi, hp.xi);
}
