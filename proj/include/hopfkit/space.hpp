#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <vector>

namespace hopfkit {

constexpr int kNoCap = std::numeric_limits<int>::max();

struct SpaceData;

// A finite Z-graded vector space with a distinguished basis.
//
// Atomic spaces are declared directly. Tensor spaces are flat: their factor
// list is the concatenation of atomic factors, so (U⊗V)⊗W and U⊗(V⊗W) are the
// same value. Every basis element carries a filtration weight; a tensor space
// keeps only basis tuples whose total weight is at most the smallest cap of
// its factors, which realizes the quotient by the part of weight > cap.
class Space {
public:
    Space();  // the ground field k

    static Space atomic(std::string name, std::vector<std::string> labels,
                        std::vector<int> degrees, std::vector<int> weights = {},
                        int cap = kNoCap);
    static Space ground();

    int dim() const;
    int arity() const;
    int cap() const;
    bool filtered() const { return cap() != kNoCap; }
    const std::string& name() const;

    int degree(int i) const;
    int weight(int i) const;
    const std::vector<std::string>& label(int i) const;
    std::string label_text(int i) const;

    // -1 when the label is not a basis element.
    int index_of(const std::vector<std::string>& label) const;
    int atom_index(const std::string& atomic_label) const;

    // Atomic factor k of a tensor space (the space itself when atomic).
    Space factor(int k) const;
    std::vector<Space> factors() const;
    const std::vector<int>& tuple(int i) const;
    // Looks up a tuple of atomic indices; -1 if it was dropped by the cap.
    int find_tuple(const int* idx, int n) const;

    // Sub-space made of factors [first, first+count).
    Space slice(int first, int count) const;

    std::vector<int> degrees_present() const;
    std::vector<int> basis_of_degree(int d) const;

    bool operator==(const Space& other) const;
    bool operator!=(const Space& other) const { return !(*this == other); }

    const SpaceData* data() const { return d_.get(); }

private:
    explicit Space(std::shared_ptr<const SpaceData> d) : d_(std::move(d)) {}
    std::shared_ptr<const SpaceData> d_;

    friend Space tensor_space(const Space& v, const Space& w);
    friend Space tensor_of(const std::vector<Space>& atoms);
};

Space tensor_space(const Space& v, const Space& w);
Space tensor_power(const Space& v, int n);
Space tensor_of(const std::vector<Space>& atoms);

}  // namespace hopfkit
