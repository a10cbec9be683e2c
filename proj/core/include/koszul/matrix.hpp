#pragma once

#include "koszul/ring.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace koszul {

/// A map of free modules R^cols -> R^rows over a quotient ring, stored as a
/// dense rows x cols array of normal forms. Column j is the image of e_j.
class Matrix {
public:
  Matrix() = default;
  Matrix(RingPtr ring, std::size_t rows, std::size_t cols);

  static Matrix identity(RingPtr ring, std::size_t n);
  /// Builds a matrix whose columns are the given vectors (components < rows).
  static Matrix from_columns(RingPtr ring, std::size_t rows, const std::vector<Vec>& columns);
  /// Parses row-major expression text; entries are reduced modulo relations.
  static Matrix parse(RingPtr ring, const std::vector<std::vector<std::string>>& rows);

  const QuotientRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t source_rank() const noexcept { return cols_; }
  std::size_t target_rank() const noexcept { return rows_; }

  const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  /// Stores the normal form of f modulo the ring relations.
  void set(std::size_t r, std::size_t c, const Polynomial& f);

  bool is_zero() const noexcept;
  /// Column c as a vector with components shifted by `offset`.
  Vec column(std::size_t c, const ModuleOrder& order, std::uint32_t offset = 0) const;
  std::vector<Vec> columns(const ModuleOrder& order, std::uint32_t offset = 0) const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix transpose() const;
  /// this (x) I_n: each entry a becomes the block a * I_n.
  Matrix kron_identity(std::size_t n) const;
  /// Columns of this followed by columns of rhs; row counts must agree.
  Matrix hstack(const Matrix& rhs) const;
  /// Block diagonal sum.
  Matrix block_diag(const Matrix& rhs) const;
  /// `copies` diagonal copies of this.
  Matrix repeat_diag(std::size_t copies) const;
  Matrix select_columns(const std::vector<std::size_t>& cols) const;
  Matrix drop_zero_columns() const;

  std::vector<std::vector<std::string>> to_strings() const;

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_; }

private:
  RingPtr ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> entries_;
};

using FreeModuleMap = Matrix;

/// { v in R^s : D v in image(N) } for D: R^s -> R^t and N: R^r -> R^t,
/// returned as the columns of an s x k matrix. Computed by elimination over
/// the ambient polynomial ring with the relation ideal adjoined, then pruned
/// of generators that are redundant in degree order.
Matrix kernel_modulo(const Matrix& D, const Matrix& N);
/// Kernel of D over the quotient ring.
Matrix syzygies(const Matrix& D);
/// Columns of M with later columns dropped when they already lie in the span
/// of earlier (lower-degree) ones modulo the ring relations.
Matrix minimize_columns(const Matrix& M);

/// Ideal quotient (image(N) : v) for a single vector v, as ideal generators.
std::vector<Polynomial> quotient_ideal(const Matrix& v, const Matrix& N);
/// Generators of I1 ∩ I2.
std::vector<Polynomial> intersect_ideals(const RingPtr& ring, const std::vector<Polynomial>& a,
                                         const std::vector<Polynomial>& b);

}  // namespace koszul
