#pragma once

#include "hopfkit/graded_map.hpp"

#include <ostream>
#include <random>

namespace hopfkit {

inline void PrintTo(const GradedMap& m, std::ostream* os) {
    *os << "map of degree " << m.degree() << " {";
    for (int j = 0; j < m.source().dim(); ++j)
        if (!m.column(j).empty()) *os << " " << m.source().label_text(j) << " -> " << m.describe_column(j) << ";";
    *os << " }";
}

}  // namespace hopfkit

namespace hopfkit::testing {

inline Scalar small_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    Scalar s(num(rng), den(rng));
    s.canonicalize();
    return s;
}

// Random homogeneous map; each admissible entry is nonzero with probability `density`.
inline GradedMap random_map(const Space& s, const Space& t, int degree, std::mt19937_64& rng,
                            double density = 0.6) {
    GradedMap m(s, t, degree);
    std::bernoulli_distribution keep(density);
    for (int j = 0; j < s.dim(); ++j)
        for (int r = 0; r < t.dim(); ++r)
            if (t.degree(r) == s.degree(j) + degree && keep(rng)) m.add(r, j, small_scalar(rng));
    return m;
}

}  // namespace hopfkit::testing
