#pragma once

#include "hopfkit/structures.hpp"

#include <map>
#include <string>
#include <vector>

namespace hopfkit {

// A linear combination of words, each word a list of generator names.
using WordPoly = std::vector<std::pair<std::vector<std::string>, Scalar>>;

struct Generator {
    std::string name;
    int degree = 0;
};

Hopf ground_hopf();             // k
Coalgebra ground_coalgebra();   // k^∨, the terminal coalgebra

// table[i][j] is the label of elements[i]·elements[j]. Throws std::invalid_argument if not a group.
Hopf build_group_algebra(const std::string& name, const std::vector<std::string>& elements,
                         const std::vector<std::vector<std::string>>& table);

// T(V)/(words of length > N) with primitive generators. `differential` gives ∂ on generators;
// missing generators are cycles. Word labels join generator names with '*'; the empty word is "1".
Hopf build_tensor_hopf(const std::string& name, const std::vector<Generator>& generators,
                       const std::map<std::string, WordPoly>& differential, int trunc);

// Cobar construction on the coaugmentation coideal of C, truncated at word length N.
// The generator for c is labeled "[c]", with any '*' in c written as '.'.
// Generator [c] has degree |c| − 1 and
//   d[c] = −[∂c] + Σ (−1)^{|c′|} [c′][c″]   over the reduced coproduct of c.
Hopf build_cobar(const Coalgebra& c, const std::string& basepoint, int trunc);

// k ⊕ V with every element of V primitive. `differential` lists (source, target, coefficient) on V.
Coalgebra build_primitive_coalgebra(const std::string& name, const std::vector<Generator>& generators,
                                    const std::vector<std::tuple<std::string, std::string, Scalar>>& differential);

std::string word_label(const std::vector<std::string>& letters);

}  // namespace hopfkit
