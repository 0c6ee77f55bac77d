#include "sheafbn/matrix.hpp"

#include "sheafbn/errors.hpp"

namespace sheafbn {

Matrix::Matrix(const RingSpec& ring, Index rows, Index cols)
    : ring_(ring), data_(RatMat::Zero(rows, cols)) {}

Matrix Matrix::identity(const RingSpec& ring, Index n) {
  Matrix m(ring, n, n);
  for (Index i = 0; i < n; ++i) m.data_(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const RingSpec& ring,
                         const std::vector<std::vector<Rat>>& rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows[0].size());
  RatMat data(r, c);
  for (Index i = 0; i < r; ++i) {
    require(static_cast<Index>(rows[i].size()) == c, "DimensionMismatch",
            "ragged row lengths");
    for (Index j = 0; j < c; ++j) data(i, j) = rows[i][j];
  }
  return from_raw(ring, std::move(data));
}

Matrix Matrix::from_raw(const RingSpec& ring, RatMat data) {
  Matrix m;
  m.ring_ = ring;
  m.data_ = std::move(data);
  m.normalize();
  return m;
}

void Matrix::set(Index i, Index j, const Rat& value) {
  Rat v = value;
  v.canonicalize();
  switch (ring_.kind()) {
    case RingSpec::Kind::integers:
      require(is_integral(v), "NonIntegralEntry",
              "entry " + v.get_str() + " is not an integer");
      break;
    case RingSpec::Kind::rationals:
      break;
    case RingSpec::Kind::prime_field:
      require(is_integral(v), "NonIntegralEntry",
              "entry " + v.get_str() + " is not a residue");
      v = Rat(mod_reduce(v.get_num(), ring_.modulus()));
      break;
  }
  data_(i, j) = v;
}

void Matrix::normalize() {
  for (Index i = 0; i < rows(); ++i)
    for (Index j = 0; j < cols(); ++j) set(i, j, data_(i, j));
}

void Matrix::check_same_ring(const Matrix& other) const {
  require(ring_ == other.ring_, "RingMismatch",
          ring_.name() + " vs " + other.ring_.name());
}

Matrix Matrix::operator+(const Matrix& other) const {
  check_same_ring(other);
  require(rows() == other.rows() && cols() == other.cols(),
          "DimensionMismatch", "matrix addition shape mismatch");
  return from_raw(ring_, data_ + other.data_);
}

Matrix Matrix::operator-(const Matrix& other) const {
  check_same_ring(other);
  require(rows() == other.rows() && cols() == other.cols(),
          "DimensionMismatch", "matrix subtraction shape mismatch");
  return from_raw(ring_, data_ - other.data_);
}

Matrix Matrix::operator*(const Matrix& other) const {
  check_same_ring(other);
  require(cols() == other.rows(), "DimensionMismatch",
          "matrix product shape mismatch");
  // Row-major accumulation skipping zero entries; the block matrices this
  // library builds are mostly zeros and exact scalar products dominate cost.
  RatMat out = RatMat::Zero(rows(), other.cols());
  for (Index i = 0; i < rows(); ++i)
    for (Index k = 0; k < cols(); ++k) {
      const Rat& left = data_(i, k);
      if (left == 0) continue;
      for (Index j = 0; j < other.cols(); ++j) {
        const Rat& right = other.data_(k, j);
        if (right != 0) out(i, j) += left * right;
      }
    }
  return from_raw(ring_, std::move(out));
}

Matrix Matrix::operator-() const { return from_raw(ring_, -data_); }

Matrix Matrix::scaled(const Rat& c) const { return from_raw(ring_, data_ * c); }

Matrix Matrix::transpose() const {
  return from_raw(ring_, data_.transpose());
}

bool Matrix::operator==(const Matrix& other) const {
  return ring_ == other.ring_ && rows() == other.rows() &&
         cols() == other.cols() && data_ == other.data_;
}

Matrix Matrix::block(Index i, Index j, Index r, Index c) const {
  return from_raw(ring_, data_.block(i, j, r, c));
}

void Matrix::add_block(Index i, Index j, const Matrix& m) {
  check_same_ring(m);
  require(i + m.rows() <= rows() && j + m.cols() <= cols(),
          "DimensionMismatch", "block exceeds matrix bounds");
  for (Index a = 0; a < m.rows(); ++a)
    for (Index b = 0; b < m.cols(); ++b)
      set(i + a, j + b, data_(i + a, j + b) + m.data_(a, b));
}

bool Matrix::is_zero() const {
  for (Index i = 0; i < rows(); ++i)
    for (Index j = 0; j < cols(); ++j)
      if (data_(i, j) != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (Index i = 0; i < rows(); ++i)
    for (Index j = 0; j < cols(); ++j)
      if (data_(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require(a.ring() == b.ring(), "RingMismatch", "hstack ring mismatch");
  require(a.rows() == b.rows(), "DimensionMismatch", "hstack row mismatch");
  RatMat data(a.rows(), a.cols() + b.cols());
  data << a.raw(), b.raw();
  return Matrix::from_raw(a.ring(), std::move(data));
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require(a.ring() == b.ring(), "RingMismatch", "vstack ring mismatch");
  require(a.cols() == b.cols(), "DimensionMismatch", "vstack column mismatch");
  RatMat data(a.rows() + b.rows(), a.cols());
  data << a.raw(), b.raw();
  return Matrix::from_raw(a.ring(), std::move(data));
}

}  // namespace sheafbn
