#include "hopfkit/corpus.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace hopfkit;

namespace {

std::string failures(const Report& r) {
    std::string s;
    for (const auto& e : r.entries)
        if (!e.pass) s += e.name + " [" + e.anchor + "] " + e.witness + "\n";
    return s;
}

GradedMap map_from(const Space& s, const Space& t, const std::vector<std::tuple<std::string, std::string, int>>& e) {
    GradedMap m(s, t, 0);
    for (const auto& [a, b, c] : e) m.add(t.atom_index(b), s.atom_index(a), c);
    return m;
}

// hsqa: △∘m^{(n)} = m^{(n)}_{Ω⊗Ω}∘(△⊗…⊗△)
void expect_hsqa(const Hopf& h, int n) {
    const GradedMap mm = tensor_algebra_mult(h.mult(), h.mult());
    GradedMap deltas = h.delta();
    for (int i = 1; i < n; ++i) deltas = tensor_map(deltas, h.delta());
    EXPECT_EQ(compose(h.delta(), iterated_product(h.mult(), n)), compose(iterated_product(mm, n), deltas))
        << h.name() << " n=" << n;
}

}  // namespace

TEST(Axioms, CorpusPasses) {
    std::vector<Hopf> all{ground_hopf(),        corpus::z2(),          corpus::s3(),
                          corpus::tensor_a(3),  corpus::tensor_ab(3),  corpus::tensor_x(2),
                          corpus::cobar_example(3)};
    for (const auto& h : all) {
        Report r = verify_axioms(h.data());
        EXPECT_TRUE(r.ok()) << h.name() << "\n" << failures(r);
        EXPECT_GE(r.entries.size(), 20u);
    }
    EXPECT_TRUE(verify_axioms(ground_coalgebra().data()).ok());
    EXPECT_TRUE(verify_axioms(corpus::pq_coalgebra().data()).ok());
    EXPECT_TRUE(verify_axioms(corpus::divided_square().data()).ok());
}

TEST(Axioms, Z2AntipodeIsInversion) {
    Hopf z = corpus::z2();
    const Space& s = z.space();
    EXPECT_EQ(z.antipode(), GradedMap::identity(s));
}

TEST(Axioms, CorruptedAntipodeFailsWithWitness) {
    HopfData bad = corpus::z2().data();
    const Space& s = bad.cx.space;
    bad.antipode = map_from(s, s, {{"e", "e", 1}, {"g", "e", 1}});
    Report r = verify_axioms(bad);
    ASSERT_FALSE(r.ok());
    bool saw = false;
    for (const auto& e : r.entries) {
        if (e.name == "antipode.left") {
            EXPECT_FALSE(e.pass);
            EXPECT_NE(e.witness.find("at g"), std::string::npos) << e.witness;
            saw = true;
        }
    }
    EXPECT_TRUE(saw);
    EXPECT_THROW(Hopf::make(bad), StructureError);
}

TEST(Axioms, NonGroupTableRejected) {
    EXPECT_THROW(build_group_algebra("bad", {"e", "g"}, {{"e", "g"}, {"g", "g"}}), std::invalid_argument);
    EXPECT_THROW(build_group_algebra("bad", {"e", "g"}, {{"e", "x"}, {"g", "e"}}), std::invalid_argument);
    Hopf trivial = build_group_algebra("1", {"e"}, {{"e"}});
    EXPECT_EQ(trivial.space().dim(), 1);
    EXPECT_TRUE(verify_axioms(trivial.data()).ok());
}

TEST(IteratedProduct, SmallCases) {
    Hopf z = corpus::z2();
    const Space& s = z.space();
    EXPECT_EQ(iterated_product(z.mult(), 1), GradedMap::identity(s));
    EXPECT_EQ(iterated_product(z.mult(), 2), z.mult());
    EXPECT_EQ(iterated_coproduct(z.delta(), 1), GradedMap::identity(s));
    EXPECT_EQ(iterated_coproduct(z.delta(), 2), z.delta());
    GradedMap m3 = iterated_product(z.mult(), 3);
    const Space s3 = tensor_power(s, 3);
    EXPECT_EQ(m3.entry(s.atom_index("g"), s3.index_of({"g", "g", "g"})), Scalar(1));
    EXPECT_THROW(iterated_product(z.mult(), 0), std::invalid_argument);
}

TEST(IteratedProduct, CoproductCompatibility) {
    for (const auto& h : {corpus::z2(), corpus::tensor_a(3), corpus::tensor_ab(3), corpus::tensor_x(2)})
        for (int n = 1; n <= 4; ++n) expect_hsqa(h, n);
    // (Ω⊗Ω)^{⊗4} for S₃ has 6^8 basis tuples; n ≤ 3 keeps the check at desk scale.
    for (int n = 1; n <= 3; ++n) expect_hsqa(corpus::s3(), n);
}

TEST(Morphisms, CoalgebraMorphismExamples) {
    Hopf z = corpus::z2();
    const Coalgebra& c = z.coalgebra();
    EXPECT_TRUE(is_coalgebra_morphism(c.eps(), c, ground_coalgebra()));
    EXPECT_TRUE(is_coalgebra_morphism(unit_counit(c, z), c, c));
    const Space& s = z.space();
    GradedMap bad = map_from(s, s, {{"e", "e", 1}, {"g", "e", 1}, {"g", "g", 1}});
    Report r = coalgebra_morphism_report(bad, c, c);
    EXPECT_FALSE(r.ok());
}

TEST(Morphisms, HopfMorphismExamples) {
    Hopf z = corpus::z2();
    const Space& s = z.space();
    EXPECT_TRUE(is_hopf_morphism(GradedMap::identity(s), z, z));
    EXPECT_TRUE(is_hopf_morphism(compose(z.unit(), z.eps()), z, z));
    EXPECT_FALSE(is_hopf_morphism(map_from(s, s, {{"e", "e", 1}, {"g", "g", -1}}), z, z));
}

TEST(CoalgebraTensor, GroundFactor) {
    Hopf z = corpus::z2();
    CoalgebraTensor t = coalgebra_tensor(z.coalgebra(), ground_coalgebra());
    EXPECT_EQ(t.pi_left, unit_right(z.space()));
    const Coalgebra& c = z.coalgebra();
    const Space k;
    EXPECT_EQ(pairing(c, c.eps(), c.eps()), compose(unit_left_inv(k), c.eps()));
}

TEST(CoalgebraTensor, ProjectionsSplitCoproduct) {
    Hopf z = corpus::z2();
    CoalgebraTensor t = coalgebra_tensor(z.coalgebra(), z.coalgebra());
    const Space ss = t.tensor.space();
    EXPECT_EQ(compose(tensor_map(t.pi_left, t.pi_right), t.tensor.delta()), GradedMap::identity(ss));
}

TEST(CoalgebraTensor, PairingLaws) {
    std::mt19937_64 rng(5);
    Hopf z = corpus::z2(), s3 = corpus::s3();
    CoalgebraTensor t = coalgebra_tensor(z.coalgebra(), s3.coalgebra());
    const Space& src = s3.space();
    for (int trial = 0; trial < 10; ++trial) {
        // Set maps between group-like bases are coalgebra morphisms.
        GradedMap h(src, t.tensor.space(), 0), f(src, z.space(), 0), g(src, s3.space(), 0);
        for (int j = 0; j < src.dim(); ++j) {
            const int a = static_cast<int>(rng() % 2), b = static_cast<int>(rng() % 6);
            const int tup[2] = {a, b};
            h.add(t.tensor.space().find_tuple(tup, 2), j, 1);
            f.add(a, j, 1);
            g.add(b, j, 1);
        }
        ASSERT_TRUE(is_coalgebra_morphism(h, s3.coalgebra(), t.tensor));
        EXPECT_EQ(pairing(s3.coalgebra(), compose(t.pi_left, h), compose(t.pi_right, h)), h);
        EXPECT_EQ(compose(t.pi_left, pairing(s3.coalgebra(), f, g)), f);
        EXPECT_EQ(compose(t.pi_right, pairing(s3.coalgebra(), f, g)), g);
    }
}

TEST(TensorHopf, OneEvenGenerator) {
    Hopf t = corpus::tensor_a(3);
    const Space& s = t.space();
    ASSERT_EQ(s.dim(), 4);
    EXPECT_EQ(s.label(2)[0], "a*a");
    const Space ss = tensor_space(s, s);
    const int aa = s.atom_index("a*a");
    EXPECT_EQ(t.delta().entry(ss.index_of({"a*a", "1"}), aa), Scalar(1));
    EXPECT_EQ(t.delta().entry(ss.index_of({"a", "a"}), aa), Scalar(2));
    EXPECT_EQ(t.delta().entry(ss.index_of({"1", "a*a"}), aa), Scalar(1));
    EXPECT_EQ(t.delta().column(aa).size(), 3u);
}

TEST(TensorHopf, OddGeneratorCrossTermsCancel) {
    Hopf t = build_tensor_hopf("T(x)", {{"x", 1}}, {}, 2);
    const Space& s = t.space();
    const Space ss = tensor_space(s, s);
    const int xx = s.atom_index("x*x");
    EXPECT_EQ(t.delta().column(xx).size(), 2u);
    EXPECT_EQ(t.delta().entry(ss.index_of({"x*x", "1"}), xx), Scalar(1));
    EXPECT_EQ(t.delta().entry(ss.index_of({"1", "x*x"}), xx), Scalar(1));
}

TEST(TensorHopf, DifferentialIsDerivation) {
    Hopf t = build_tensor_hopf("T", {{"x1", 1}, {"x0", 0}}, {{"x1", {{{"x0"}, Scalar(1)}}}}, 2);
    const Space& s = t.space();
    const int w = s.atom_index("x1*x1");
    EXPECT_EQ(t.d().entry(s.atom_index("x0*x1"), w), Scalar(1));
    EXPECT_EQ(t.d().entry(s.atom_index("x1*x0"), w), Scalar(-1));
    EXPECT_EQ(t.d().column(w).size(), 2u);
}

TEST(TensorHopf, BadDifferentialRejected) {
    EXPECT_THROW(build_tensor_hopf("T", {{"x", 1}, {"y", 1}}, {{"x", {{{"y"}, Scalar(1)}}}}, 2), std::invalid_argument);
}

TEST(Cobar, GroundCoalgebraGivesGround) {
    Hopf h = build_cobar(ground_coalgebra(), "1", 3);
    EXPECT_EQ(h.space().dim(), 1);
}

TEST(Cobar, DualNumbers) {
    Hopf h = build_cobar(corpus::dual_numbers(2), "1", 2);
    const Space& s = h.space();
    ASSERT_EQ(s.dim(), 3);
    EXPECT_EQ(s.degree(s.atom_index("[t]")), 1);
    EXPECT_TRUE(h.d().is_zero());
}

TEST(Cobar, QuadraticDifferential) {
    Hopf h = corpus::cobar_example(3);
    const Space& s = h.space();
    const int gs = s.atom_index("[s]");
    EXPECT_EQ(s.degree(gs), 3);
    ASSERT_EQ(h.d().column(gs).size(), 1u);
    EXPECT_EQ(h.d().column(gs)[0].first, s.atom_index("[t]*[t]"));
    EXPECT_TRUE(compose(h.d(), h.d()).is_zero());
}

TEST(Cobar, MixedDifferential) {
    // The length-2 tensor coalgebra on (w → u) has both linear and quadratic cobar terms.
    Hopf t = build_tensor_hopf("T(w,u)", {{"w", 3}, {"u", 2}}, {{"w", {{{"u"}, Scalar(1)}}}}, 2);
    Coalgebra c = t.coalgebra();
    Hopf h = build_cobar(c, "1", 3);
    const Space& s = h.space();
    const int ww = s.atom_index("[w.u]");
    bool linear = false, quadratic = false;
    for (const auto& [r, x] : h.d().column(ww)) {
        linear |= s.weight(r) == 1;
        quadratic |= s.weight(r) == 2;
    }
    EXPECT_TRUE(linear);
    EXPECT_TRUE(quadratic);
    EXPECT_THROW(build_cobar(c, "w", 2), std::invalid_argument);
}
