#pragma once

#include <vector>

#include "sheafbn/ring.hpp"
#include "sheafbn/scalars.hpp"

namespace sheafbn {

// Dense exact matrix tagged with its coefficient ring. Entries are stored as
// rationals; over Z they are integral, over Z/p they are residues in [0, p).
// Mixed-ring arithmetic is rejected rather than coerced.
class Matrix {
 public:
  Matrix() : ring_(RingSpec::integers()), data_(0, 0) {}
  Matrix(const RingSpec& ring, Index rows, Index cols);

  static Matrix identity(const RingSpec& ring, Index n);
  static Matrix from_rows(const RingSpec& ring,
                          const std::vector<std::vector<Rat>>& rows);
  static Matrix from_raw(const RingSpec& ring, RatMat data);

  const RingSpec& ring() const { return ring_; }
  Index rows() const { return data_.rows(); }
  Index cols() const { return data_.cols(); }
  const RatMat& raw() const { return data_; }

  const Rat& operator()(Index i, Index j) const { return data_(i, j); }
  void set(Index i, Index j, const Rat& value);

  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator-() const;
  Matrix scaled(const Rat& c) const;
  Matrix transpose() const;

  bool operator==(const Matrix& other) const;
  bool operator!=(const Matrix& other) const { return !(*this == other); }

  Matrix block(Index i, Index j, Index r, Index c) const;
  void add_block(Index i, Index j, const Matrix& m);

  bool is_zero() const;
  bool is_identity() const;
  bool is_square() const { return rows() == cols(); }

 private:
  void normalize();
  void check_same_ring(const Matrix& other) const;

  RingSpec ring_;
  RatMat data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

}  // namespace sheafbn
