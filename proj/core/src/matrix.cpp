#include "qgrass/matrix.hpp"

#include <sstream>

#include "qgrass/errors.hpp"

namespace qgrass {

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw DimensionMismatch("matrix entry count " + std::to_string(data_.size()) + " != " +
                            std::to_string(rows) + "x" + std::to_string(cols));
  }
  for (const auto& s : data_) require_same_field(field_, s.field(), "Matrix");
}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = Scalar::one(field);
  return m;
}

Matrix Matrix::from_ints(const FieldSpec& field,
                         std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Scalar> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("ragged matrix literal");
    for (long v : row) entries.emplace_back(field, v);
  }
  return Matrix(field, r, c, std::move(entries));
}

Matrix Matrix::from_ints(const FieldSpec& field, std::size_t rows, std::size_t cols,
                         std::span<const long> entries) {
  if (entries.size() != rows * cols) throw DimensionMismatch("matrix entry count");
  std::vector<Scalar> data;
  data.reserve(entries.size());
  for (long v : entries) data.emplace_back(field, v);
  return Matrix(field, rows, cols, std::move(data));
}

Matrix Matrix::column(const Vector& v, const FieldSpec& field) {
  return Matrix(field, v.size(), 1, v);
}

Matrix Matrix::row(const Vector& v, const FieldSpec& field) { return Matrix(field, 1, v.size(), v); }

Matrix Matrix::from_rows(const FieldSpec& field, std::size_t cols, const std::vector<Vector>& rows) {
  std::vector<Scalar> data;
  data.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionMismatch("from_rows: row length mismatch");
    data.insert(data.end(), r.begin(), r.end());
  }
  return Matrix(field, rows.size(), cols, std::move(data));
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
  return data_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, Scalar value) {
  if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
  require_same_field(field_, value.field(), "Matrix::set");
  data_[r * cols_ + c] = std::move(value);
}

Vector Matrix::row_vector(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column_vector(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(data_[r * cols_ + c]);
  return v;
}

bool Matrix::is_zero() const noexcept {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
  Matrix b(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b.data_[r * nc + c] = data_[(r0 + r) * cols_ + c0 + c];
  return b;
}

void Matrix::paste(const Matrix& m, std::size_t r0, std::size_t c0) {
  require_same_field(field_, m.field_, "Matrix::paste");
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw DimensionMismatch("paste out of range");
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) data_[(r0 + r) * cols_ + c0 + c] = m.data_[r * m.cols_ + c];
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_field(field_, o.field_, "Matrix *");
  if (cols_ != o.rows_) {
    throw DimensionMismatch("cannot multiply " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                            " by " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  }
  Matrix p(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = data_[i * cols_ + k];
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.data_[k * o.cols_ + j];
        if (!b.is_zero()) p.data_[i * o.cols_ + j] += a * b;
      }
    }
  }
  return p;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector length mismatch");
  Vector out(rows_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = data_[i * cols_ + k];
      if (!a.is_zero() && !v[k].is_zero()) out[i] += a * v[k];
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_field(field_, o.field_, "Matrix +");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  Matrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += o.data_[i];
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same_field(field_, o.field_, "Matrix -");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  Matrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] -= o.data_[i];
  return s;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m = *this;
  for (auto& e : m.data_) e *= s;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << data_[r * cols_ + c];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  require_same_field(top.field_, bottom.field_, "vstack");
  if (top.cols_ != bottom.cols_) throw DimensionMismatch("vstack column mismatch");
  Matrix m(top.field_, top.rows_ + bottom.rows_, top.cols_);
  m.paste(top, 0, 0);
  m.paste(bottom, top.rows_, 0);
  return m;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  require_same_field(left.field_, right.field_, "hstack");
  if (left.rows_ != right.rows_) throw DimensionMismatch("hstack row mismatch");
  Matrix m(left.field_, left.rows_, left.cols_ + right.cols_);
  m.paste(left, 0, 0);
  m.paste(right, 0, left.cols_);
  return m;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_, "block_diagonal");
  Matrix m(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  m.paste(a, 0, 0);
  m.paste(b, a.rows_, a.cols_);
  return m;
}

}  // namespace qgrass
