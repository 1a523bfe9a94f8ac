#pragma once

#include "hopfkit/graded_map.hpp"
#include "hopfkit/report.hpp"

#include <memory>
#include <stdexcept>
#include <string>

namespace hopfkit {

// Raised when validated construction fails; what() carries the first witness.
struct StructureError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Complex {
    Space space;
    GradedMap d;  // degree −1
};

struct AlgebraData {
    std::string name;
    Complex cx;
    GradedMap unit;  // k → A
    GradedMap mult;  // A⊗A → A
};

struct CoalgebraData {
    std::string name;
    Complex cx;
    GradedMap eps;    // C → k
    GradedMap delta;  // C → C⊗C
};

struct HopfData {
    std::string name;
    Complex cx;
    GradedMap unit, mult, eps, delta, antipode;

    AlgebraData algebra() const { return {name, cx, unit, mult}; }
    CoalgebraData coalgebra() const { return {name, cx, eps, delta}; }
};

// Failures are reported, never thrown.
Report verify_axioms(const Complex& cx);
Report verify_axioms(const AlgebraData& a);
Report verify_axioms(const CoalgebraData& c);
Report verify_axioms(const HopfData& h);

// Every nonzero entry maps a basis element to one of weight at least its own.
std::optional<std::string> filtration_violation(const GradedMap& f);

struct CoalgebraTensor;

class Coalgebra {
public:
    Coalgebra() = default;
    static Coalgebra make(CoalgebraData data);  // throws StructureError

    const std::string& name() const { return d_->name; }
    const Space& space() const { return d_->cx.space; }
    const GradedMap& d() const { return d_->cx.d; }
    const GradedMap& eps() const { return d_->eps; }
    const GradedMap& delta() const { return d_->delta; }
    const CoalgebraData& data() const { return *d_; }
    bool valid() const { return d_ != nullptr; }

private:
    explicit Coalgebra(std::shared_ptr<const CoalgebraData> d) : d_(std::move(d)) {}
    std::shared_ptr<const CoalgebraData> d_;
    friend class Hopf;
    friend struct CoalgebraTensor;
    friend CoalgebraTensor coalgebra_tensor(const Coalgebra&, const Coalgebra&);
};

class Hopf {
public:
    Hopf() = default;
    static Hopf make(HopfData data);  // throws StructureError

    const std::string& name() const { return d_->name; }
    const Space& space() const { return d_->cx.space; }
    const GradedMap& d() const { return d_->cx.d; }
    const GradedMap& unit() const { return d_->unit; }
    const GradedMap& mult() const { return d_->mult; }
    const GradedMap& eps() const { return d_->eps; }
    const GradedMap& delta() const { return d_->delta; }
    const GradedMap& antipode() const { return d_->antipode; }
    const HopfData& data() const { return *d_; }
    bool filtered() const { return space().filtered(); }
    int trunc() const { return space().cap(); }
    const Coalgebra& coalgebra() const { return coalg_; }
    // Index of the basis element u(1).
    int unit_index() const { return unit_index_; }

private:
    std::shared_ptr<const HopfData> d_;
    Coalgebra coalg_;
    int unit_index_ = -1;
};

// m^{(1)} = I, m^{(n+1)} = m∘(m^{(n)}⊗I)
GradedMap iterated_product(const GradedMap& mult, int n);
// △^{(1)} = I, △^{(n+1)} = (△^{(n)}⊗I)∘△
GradedMap iterated_coproduct(const GradedMap& delta, int n);
// Product of the algebra A⊗B: (m_A⊗m_B)∘(I⊗τ⊗I)
GradedMap tensor_algebra_mult(const GradedMap& ma, const GradedMap& mb);

Report coalgebra_morphism_report(const GradedMap& f, const Coalgebra& c, const Coalgebra& d);
Report algebra_morphism_report(const GradedMap& f, const Hopf& a, const Hopf& b);
Report hopf_morphism_report(const GradedMap& f, const Hopf& a, const Hopf& b);
bool is_coalgebra_morphism(const GradedMap& f, const Coalgebra& c, const Coalgebra& d);
bool is_hopf_morphism(const GradedMap& f, const Hopf& a, const Hopf& b);

struct CoalgebraTensor {
    Coalgebra tensor;
    GradedMap pi_left;   // C⊗C′ → C, ȷ∘(I⊗ε′)
    GradedMap pi_right;  // C⊗C′ → C′, ı∘(ε⊗I)
};
CoalgebraTensor coalgebra_tensor(const Coalgebra& c, const Coalgebra& d);
// ⟨f,g⟩ = (f⊗g)∘△_T
GradedMap pairing(const Coalgebra& t, const GradedMap& f, const GradedMap& g);

// u∘ε_C as a map C → Ω.
GradedMap unit_counit(const Coalgebra& c, const Hopf& h);

}  // namespace hopfkit
