#pragma once

#include "sheafbn/fpmodule.hpp"
#include "sheafbn/matrix.hpp"

namespace sheafbn {

// u * m * v == s with u, v invertible over the ring. Over Z the diagonal of s
// is nonnegative with each entry dividing the next and u, v have determinant
// +-1; over a field the diagonal is 1 repeated rank(m) times.
struct SmithResult {
  Matrix u;
  Matrix s;
  Matrix v;
};

SmithResult smith_normal_form(const Matrix& m);

Index rank(const Matrix& m);
Rat determinant(const Matrix& m);
bool is_invertible(const Matrix& m);
Matrix inverse(const Matrix& m);

// Columns span ker(m). Over Z this is a basis of the full kernel lattice
// (every integer kernel vector has unique integer coordinates in it).
Matrix kernel_basis(const Matrix& m);

// Original columns of m at the pivot positions of its reduced echelon form.
// Fields only.
Matrix column_space_basis(const Matrix& m);

// Solves a * x = b exactly. Returns false when the system is inconsistent.
// When a has full column rank the solution is unique; otherwise free
// variables are set to zero, and over Z the result is false unless that
// canonical solution is integral.
bool solve_exact(const Matrix& a, const Matrix& b, Matrix* x);

// Cokernel of the relations matrix: the module k^rows(m) / im(m) in canonical
// form.
FpModule fp_module(const Matrix& presentation);

// ker(a) / im(b) where a * b = 0; the shared middle space has dimension
// cols(a) == rows(b).
FpModule subquotient(const Matrix& a, const Matrix& b);

}  // namespace sheafbn
