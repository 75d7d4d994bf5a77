#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qgrass/scalar.hpp"

namespace qgrass {

using Vector = std::vector<Scalar>;

// Dense row-major matrix whose entries all belong to one field.
class Matrix {
 public:
  Matrix() = default;
  // rows x cols zero matrix.
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);
  // Entries must number rows*cols and share `field`; otherwise throws.
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(const FieldSpec& field, std::size_t n);
  static Matrix from_ints(const FieldSpec& field,
                          std::initializer_list<std::initializer_list<long>> rows);
  static Matrix from_ints(const FieldSpec& field, std::size_t rows, std::size_t cols,
                          std::span<const long> entries);
  static Matrix column(const Vector& v, const FieldSpec& field);
  static Matrix row(const Vector& v, const FieldSpec& field);
  // Rows of the result are the given vectors (all of length `cols`).
  static Matrix from_rows(const FieldSpec& field, std::size_t cols, const std::vector<Vector>& rows);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const;
  // Throws FieldMismatch if `value` is over another field.
  void set(std::size_t r, std::size_t c, Scalar value);

  Vector row_vector(std::size_t r) const;
  Vector column_vector(std::size_t c) const;
  std::span<const Scalar> entries() const noexcept { return data_; }

  bool is_zero() const noexcept;
  Matrix transpose() const;
  // Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  // Copies `m` into this matrix starting at (r0, c0).
  void paste(const Matrix& m, std::size_t r0, std::size_t c0);

  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

  friend Matrix vstack(const Matrix& top, const Matrix& bottom);
  friend Matrix hstack(const Matrix& left, const Matrix& right);
  friend Matrix block_diagonal(const Matrix& a, const Matrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix hstack(const Matrix& left, const Matrix& right);
Matrix block_diagonal(const Matrix& a, const Matrix& b);

}  // namespace qgrass
