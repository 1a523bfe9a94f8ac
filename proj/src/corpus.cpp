#include "hopfkit/corpus.hpp"

#include <algorithm>
#include <array>
#include <tuple>

namespace hopfkit::corpus {

Hopf z2() { return build_group_algebra("Q[Z2]", {"e", "g"}, {{"e", "g"}, {"g", "e"}}); }

Hopf s3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto name = [](const std::array<int, 3>& q) {
        return "p" + std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]);
    };
    std::vector<std::string> elements;
    for (const auto& q : perms) elements.push_back(name(q));
    std::vector<std::vector<std::string>> table;
    for (const auto& a : perms) {
        std::vector<std::string> row;
        for (const auto& b : perms) {
            std::array<int, 3> c{a[b[0]], a[b[1]], a[b[2]]};
            row.push_back(name(c));
        }
        table.push_back(std::move(row));
    }
    return build_group_algebra("Q[S3]", elements, table);
}

Hopf tensor_a(int n) { return build_tensor_hopf("T(a)", {{"a", 0}}, {}, n); }

Hopf tensor_ab(int n) { return build_tensor_hopf("T(a,b)", {{"a", 0}, {"b", 0}}, {}, n); }

Hopf tensor_x(int n) {
    return build_tensor_hopf("T(x0,x1)", {{"x0", 0}, {"x1", 1}}, {{"x1", {{{"x0"}, Scalar(1)}}}}, n);
}

Coalgebra dual_numbers(int degree) {
    return build_primitive_coalgebra(degree == 0 ? "D" : "D" + std::to_string(degree), {{"t", degree}}, {});
}

Coalgebra pq_coalgebra() { return build_primitive_coalgebra("Cpq", {{"p", 1}, {"q", 0}}, {{"p", "q", Scalar(1)}}); }

Coalgebra divided_square() {
    const Space s = Space::atomic("Ct", {"1", "t", "s"}, {0, 2, 4});
    const Space ss = tensor_space(s, s);
    const Space k = Space::ground();
    CoalgebraData c;
    c.name = "Ct";
    c.cx = {s, GradedMap::zero(s, s, -1)};
    c.eps = GradedMap(s, k, 0);
    c.eps.add(0, 0, 1);
    c.delta = GradedMap(s, ss, 0);
    c.delta.add({"1", "1"}, {"1"}, 1);
    for (const char* x : {"t", "s"}) {
        c.delta.add({x, "1"}, {x}, 1);
        c.delta.add({"1", x}, {x}, 1);
    }
    c.delta.add({"t", "t"}, {"s"}, 1);
    return Coalgebra::make(std::move(c));
}

Hopf cobar_example(int n) { return build_cobar(divided_square(), "1", n); }

}  // namespace hopfkit::corpus

namespace hopfkit::corpus {

namespace {

GradedMap matrix(const Space& s, int degree, const std::vector<std::tuple<std::string, std::string, int>>& e) {
    GradedMap m(s, s, degree);
    for (const auto& [from, to, c] : e) m.add(s.atom_index(to), s.atom_index(from), c);
    return m;
}

}  // namespace

DgModule z2_sign() {
    const Space s = Space::atomic("sgn", {"v"}, {0});
    const Hopf z = z2();
    return module_from_operators(z, "sgn", {s, GradedMap::zero(s, s, -1)},
                                 {GradedMap::identity(s), matrix(s, 0, {{"v", "v", -1}})});
}

DgModule z2_twisted() {
    const Space s = Space::atomic("W3", {"w1", "w2", "w3"}, {0, 0, 0});
    const Hopf z = z2();
    // A = [[1,0,0],[1,−1,0],[0,0,1]], A² = I
    return module_from_operators(z, "W3", {s, GradedMap::zero(s, s, -1)},
                                 {GradedMap::identity(s),
                                  matrix(s, 0, {{"w1", "w1", 1}, {"w1", "w2", 1}, {"w2", "w2", -1}, {"w3", "w3", 1}})});
}

DgModule z2_cone() {
    const Space s = Space::atomic("cone", {"m1", "m0"}, {1, 0});
    const Hopf z = z2();
    return module_from_operators(z, "cone", {s, matrix(s, -1, {{"m1", "m0", 1}})},
                                 {GradedMap::identity(s), matrix(s, 0, {{"m1", "m1", -1}, {"m0", "m0", -1}})});
}

DgModule tensor_a_jordan(int n) {
    std::vector<std::string> labels;
    std::vector<int> weights;
    for (int i = 0; i <= n; ++i) {
        labels.push_back("v" + std::to_string(i));
        weights.push_back(i);
    }
    const Space s = Space::atomic("J" + std::to_string(n), labels, std::vector<int>(labels.size(), 0), weights, n);
    GradedMap a(s, s, 0);
    for (int i = 0; i < n; ++i) a.add(i + 1, i, 1);
    return generator_module(tensor_a(n), "J" + std::to_string(n), {s, GradedMap::zero(s, s, -1)}, {{"a", a}});
}

DgModule tensor_x_module(int n) {
    const Space s = Space::atomic("Mx", {"m", "y1", "y0"}, {0, 1, 0}, {0, 1, 1}, n);
    return generator_module(tensor_x(n), "Mx", {s, matrix(s, -1, {{"y1", "y0", 1}})},
                            {{"x0", matrix(s, 0, {{"m", "y0", 1}})}, {"x1", matrix(s, 1, {{"m", "y1", 1}})}});
}

}  // namespace hopfkit::corpus
