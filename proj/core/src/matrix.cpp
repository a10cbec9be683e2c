#include "koszul/matrix.hpp"

#include "koszul/error.hpp"
#include "koszul/expression.hpp"

#include <algorithm>
#include <numeric>

namespace koszul {

Matrix::Matrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix Matrix::identity(RingPtr ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = ring->poly().one();
  return m;
}

Matrix Matrix::from_columns(RingPtr ring, std::size_t rows, const std::vector<Vec>& columns) {
  Matrix m(ring, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    std::vector<std::vector<Term>> per_row(rows);
    for (const auto& t : columns[c]) {
      if (t.comp >= rows) throw DomainError("vector component out of range");
      per_row[t.comp].push_back(Term{t.mon, t.coeff});
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (!per_row[r].empty()) m.set(r, c, ring->poly().from_terms(std::move(per_row[r])));
    }
  }
  return m;
}

Matrix Matrix::parse(RingPtr ring, const std::vector<std::vector<std::string>>& rows) {
  std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  Matrix m(ring, rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) throw DomainError("ragged matrix rows");
    for (std::size_t c = 0; c < ncols; ++c) m.set(r, c, canonical_poly(rows[r][c], ring->poly()));
  }
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, const Polynomial& f) {
  if (r >= rows_ || c >= cols_) throw DomainError("matrix index out of range");
  entries_[r * cols_ + c] = ring_->reduce(f);
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Vec Matrix::column(std::size_t c, const ModuleOrder& order, std::uint32_t offset) const {
  Vec raw;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& t : at(r, c).terms()) {
      raw.push_back(VecTerm{t.mon, static_cast<std::uint32_t>(r) + offset, t.coeff});
    }
  }
  return VecArith(ring_->poly(), order).normalize(std::move(raw));
}

std::vector<Vec> Matrix::columns(const ModuleOrder& order, std::uint32_t offset) const {
  std::vector<Vec> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c, order, offset));
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw DomainError("matrix shapes do not compose");
  const auto& P = ring_->poly();
  Matrix out(ring_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
      Polynomial acc;
      for (std::size_t k = 0; k < cols_; ++k) {
        const auto& a = at(i, k);
        const auto& b = rhs.at(k, j);
        if (a.is_zero() || b.is_zero()) continue;
        acc = P.add(acc, P.mul(a, b));
      }
      out.set(i, j, acc);
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.entries_[j * rows_ + i] = at(i, j);
  }
  return out;
}

Matrix Matrix::kron_identity(std::size_t n) const {
  Matrix out(ring_, rows_ * n, cols_ * n);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& a = at(i, j);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) out.entries_[(i * n + k) * out.cols_ + j * n + k] = a;
    }
  }
  return out;
}

Matrix Matrix::hstack(const Matrix& rhs) const {
  if (rows_ != rhs.rows_) throw DomainError("hstack row mismatch");
  Matrix out(ring_ ? ring_ : rhs.ring_, rows_, cols_ + rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.entries_[i * out.cols_ + j] = at(i, j);
    for (std::size_t j = 0; j < rhs.cols_; ++j) out.entries_[i * out.cols_ + cols_ + j] = rhs.at(i, j);
  }
  return out;
}

Matrix Matrix::block_diag(const Matrix& rhs) const {
  Matrix out(ring_ ? ring_ : rhs.ring_, rows_ + rhs.rows_, cols_ + rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.entries_[i * out.cols_ + j] = at(i, j);
  }
  for (std::size_t i = 0; i < rhs.rows_; ++i) {
    for (std::size_t j = 0; j < rhs.cols_; ++j) out.entries_[(rows_ + i) * out.cols_ + cols_ + j] = rhs.at(i, j);
  }
  return out;
}

Matrix Matrix::repeat_diag(std::size_t copies) const {
  Matrix out(ring_, rows_ * copies, cols_ * copies);
  for (std::size_t b = 0; b < copies; ++b) {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        out.entries_[(b * rows_ + i) * out.cols_ + b * cols_ + j] = at(i, j);
      }
    }
  }
  return out;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix out(ring_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out.entries_[i * out.cols_ + j] = at(i, cols[j]);
  }
  return out;
}

Matrix Matrix::drop_zero_columns() const {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!at(i, j).is_zero()) {
        keep.push_back(j);
        break;
      }
    }
  }
  return select_columns(keep);
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = ring_->to_string(at(i, j));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::uint32_t vec_degree(const Vec& v) {
  std::uint32_t d = 0;
  for (const auto& t : v) d = std::max(d, t.mon.degree());
  return d;
}

}  // namespace

Matrix minimize_columns(const Matrix& M) {
  const RingPtr& ring = M.ring_ptr();
  const std::size_t rank = M.rows();
  ModuleOrder order(ring->poly().order());
  std::vector<Vec> cols;
  for (auto& c : M.columns(order)) {
    if (!c.empty()) cols.push_back(std::move(c));
  }
  std::vector<std::size_t> idx(cols.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    std::uint32_t da = vec_degree(cols[a]);
    std::uint32_t db = vec_degree(cols[b]);
    if (da != db) return da < db;
    int c = order.compare(cols[a].front(), cols[b].front());
    if (c != 0) return c < 0;
    return cols[a].size() < cols[b].size();
  });

  GroebnerBuilder builder(ring->poly_ptr(), order, rank, ring->limits());
  VecArith arith(ring->poly(), order);
  for (auto& r : relation_vectors(*ring, rank)) builder.add(arith.normalize(std::move(r)));
  builder.run();
  std::vector<Vec> kept;
  for (auto i : idx) {
    if (builder.add(cols[i])) {
      kept.push_back(cols[i]);
      builder.run();
    }
  }
  return Matrix::from_columns(ring, rank, kept);
}

Matrix kernel_modulo(const Matrix& D, const Matrix& N) {
  if (D.rows() != N.rows()) throw DomainError("kernel_modulo: target ranks differ");
  const RingPtr& ring = D.ring_ptr();
  const std::size_t t = D.rows();
  const std::size_t s = D.cols();
  if (s == 0) return Matrix(ring, 0, 0);
  if (t == 0) return Matrix::identity(ring, s);

  const auto split = static_cast<std::uint32_t>(t);
  ModuleOrder order(ring->poly().order(), split);
  VecArith arith(ring->poly(), order);
  GroebnerBuilder builder(ring->poly_ptr(), order, t + s, ring->limits());
  for (auto& r : relation_vectors(*ring, t)) builder.add(arith.normalize(std::move(r)));
  for (std::size_t c = 0; c < N.cols(); ++c) builder.add(N.column(c, order));
  for (std::size_t j = 0; j < s; ++j) {
    Vec v = D.column(j, order);
    v.push_back(VecTerm{Monomial(ring->nvars()), split + static_cast<std::uint32_t>(j), 1});
    builder.add(arith.normalize(std::move(v)));
  }
  builder.run();
  GroebnerBasis gb = builder.finish(true);

  ModuleOrder plain(ring->poly().order());
  std::vector<Vec> kernel;
  for (const auto& g : gb.elements()) {
    if (g.front().comp < split) continue;
    Vec v = g;
    for (auto& term : v) term.comp -= split;
    v = ring->reduce(VecArith(ring->poly(), plain).normalize(std::move(v)), plain);
    if (!v.empty()) kernel.push_back(std::move(v));
  }
  return minimize_columns(Matrix::from_columns(ring, s, kernel));
}

Matrix syzygies(const Matrix& D) { return kernel_modulo(D, Matrix(D.ring_ptr(), D.rows(), 0)); }

std::vector<Polynomial> quotient_ideal(const Matrix& v, const Matrix& N) {
  if (v.cols() != 1) throw DomainError("quotient_ideal expects a single column");
  Matrix k = kernel_modulo(v, N);
  std::vector<Polynomial> gens;
  for (std::size_t c = 0; c < k.cols(); ++c) gens.push_back(k.at(0, c));
  return gens;
}

std::vector<Polynomial> intersect_ideals(const RingPtr& ring, const std::vector<Polynomial>& a,
                                         const std::vector<Polynomial>& b) {
  // I ∩ J = { r : (r, r) ∈ I e_1 + J e_2 }
  Matrix ones(ring, 2, 1);
  ones.set(0, 0, ring->poly().one());
  ones.set(1, 0, ring->poly().one());
  Matrix gens(ring, 2, a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) gens.set(0, i, a[i]);
  for (std::size_t i = 0; i < b.size(); ++i) gens.set(1, a.size() + i, b[i]);
  return quotient_ideal(ones, gens);
}

}  // namespace koszul
