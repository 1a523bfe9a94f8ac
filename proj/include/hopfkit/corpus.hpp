#pragma once

#include "hopfkit/builders.hpp"
#include "hopfkit/comodule.hpp"

// The standard small examples, built in code. The data/ directory ships the same
// structures as JSON.
namespace hopfkit::corpus {

Hopf z2();                 // Q[Z/2] on {e, g}
Hopf s3();                 // Q[S₃] on permutations of {0,1,2}
Hopf tensor_a(int n);      // T(a)/(length > n), |a| = 0
Hopf tensor_ab(int n);     // T(a,b)/(length > n), |a| = |b| = 0
Hopf tensor_x(int n);      // T(x0,x1)/(length > n), |x1| = 1, ∂x1 = x0
Coalgebra dual_numbers(int degree);  // {1, t}, t primitive
Coalgebra pq_coalgebra();            // k ⊕ ⟨p, q⟩, |p| = 1, ∂p = q
Coalgebra divided_square();          // {1, t, s}, |t| = 2, |s| = 4, △s = s⊗1 + t⊗t + 1⊗s
Hopf cobar_example(int n);           // cobar of divided_square()

DgModule z2_sign();      // g acts by −1 on one vector
DgModule z2_twisted();   // three vectors, g acts by a non-diagonal involution
DgModule z2_cone();      // ∂m1 = m0, g acts by −1
DgModule tensor_a_jordan(int n);  // v0 ↦ v1 ↦ … ↦ v_n under a, weights 0..n
DgModule tensor_x_module(int n);  // x1·m = y1, x0·m = y0, ∂y1 = y0

}  // namespace hopfkit::corpus
