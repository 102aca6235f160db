#include "orbitlab/matrix.hpp"

#include <string>

namespace orbitlab {

MatrixFq MatrixFq::identity(const FqPtr& field, unsigned n) {
  MatrixFq m(field, n, n);
  for (unsigned i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

MatrixFq MatrixFq::elementary(const FqPtr& field, unsigned rows, unsigned cols, unsigned i,
                              unsigned j, FqElem value) {
  MatrixFq m(field, rows, cols);
  m.set(i, j, value);
  return m;
}

bool MatrixFq::is_zero() const {
  for (FqElem e : a_)
    if (e != 0) return false;
  return true;
}

MatrixFq MatrixFq::operator+(const MatrixFq& o) const {
  require_same_field(*F_, *o.F_);
  check(rows_ == o.rows_ && cols_ == o.cols_, Errc::shape_mismatch, "matrix add shape mismatch");
  MatrixFq r(F_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->add(a_[i], o.a_[i]);
  return r;
}

MatrixFq MatrixFq::operator-(const MatrixFq& o) const {
  require_same_field(*F_, *o.F_);
  check(rows_ == o.rows_ && cols_ == o.cols_, Errc::shape_mismatch, "matrix sub shape mismatch");
  MatrixFq r(F_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->sub(a_[i], o.a_[i]);
  return r;
}

MatrixFq MatrixFq::operator*(const MatrixFq& o) const {
  require_same_field(*F_, *o.F_);
  check(cols_ == o.rows_, Errc::shape_mismatch,
        "matrix mul shape mismatch: " + std::to_string(cols_) + " vs " + std::to_string(o.rows_));
  MatrixFq r(F_, rows_, o.cols_);
  const Fq& F = *F_;
  for (unsigned i = 0; i < rows_; ++i) {
    for (unsigned k = 0; k < cols_; ++k) {
      FqElem aik = at(i, k);
      if (aik == 0) continue;
      for (unsigned j = 0; j < o.cols_; ++j) {
        FqElem t = F.mul(aik, o.at(k, j));
        r.set(i, j, F.add(r.at(i, j), t));
      }
    }
  }
  return r;
}

MatrixFq MatrixFq::scalar_mul(FqElem s) const {
  MatrixFq r(F_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->mul(s, a_[i]);
  return r;
}

MatrixFq MatrixFq::transpose() const {
  MatrixFq r(F_, cols_, rows_);
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

MatrixFq MatrixFq::negate() const {
  MatrixFq r(F_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->neg(a_[i]);
  return r;
}

bool MatrixFq::operator==(const MatrixFq& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && F_->same_field(*o.F_) && a_ == o.a_;
}

FqVec MatrixFq::mat_vec(std::span<const FqElem> v) const {
  check(v.size() == cols_, Errc::shape_mismatch, "mat_vec length mismatch");
  FqVec r(rows_, 0);
  const Fq& F = *F_;
  for (unsigned i = 0; i < rows_; ++i) {
    FqElem s = 0;
    for (unsigned j = 0; j < cols_; ++j) s = F.add(s, F.mul(at(i, j), v[j]));
    r[i] = s;
  }
  return r;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<unsigned> rref_inplace(const Fq& F, std::vector<FqVec>& rows) {
  std::vector<unsigned> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t pr = r;
    while (pr < rows.size() && rows[pr][c] == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[r], rows[pr]);
    FqElem inv = F.inv(rows[r][c]);
    for (std::size_t j = c; j < ncols; ++j) rows[r][j] = F.mul(rows[r][j], inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      FqElem f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
    }
    pivots.push_back(static_cast<unsigned>(c));
    ++r;
  }
  rows.resize(pivots.size());
  return pivots;
}

std::vector<FqVec> matrix_rows(const MatrixFq& a) {
  std::vector<FqVec> rows(a.rows(), FqVec(a.cols()));
  for (unsigned i = 0; i < a.rows(); ++i)
    for (unsigned j = 0; j < a.cols(); ++j) rows[i][j] = a.at(i, j);
  return rows;
}

}  // namespace

RankResult rank_image_kernel(const MatrixFq& a) {
  const Fq& F = *a.field();
  auto rows = matrix_rows(a);
  auto pivots = rref_inplace(F, rows);

  RankResult res{static_cast<unsigned>(pivots.size()), MatrixFq(a.field(), a.rows(), a.cols()),
                 pivots, {}, {}};
  for (unsigned i = 0; i < rows.size(); ++i)
    for (unsigned j = 0; j < a.cols(); ++j) res.rref.set(i, j, rows[i][j]);

  // image: canonical row space of the transpose
  auto trows = matrix_rows(a.transpose());
  rref_inplace(F, trows);
  res.image_basis = std::move(trows);

  // kernel from the RREF: one vector per free column
  std::vector<bool> is_pivot(a.cols(), false);
  for (unsigned c : pivots) is_pivot[c] = true;
  for (unsigned c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    FqVec v(a.cols(), 0);
    v[c] = 1;
    for (unsigned i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(rows[i][c]);
    res.kernel_basis.push_back(std::move(v));
  }
  return res;
}

unsigned rank_of(const MatrixFq& a) {
  const Fq& F = *a.field();
  auto rows = matrix_rows(a);
  return static_cast<unsigned>(rref_inplace(F, rows).size());
}

MatrixFq antisymmetrize(const MatrixFq& b) {
  check(b.is_square(), Errc::shape_mismatch, "antisymmetrize requires a square matrix");
  return b.transpose() - b;
}

unsigned nilpotency_index(const MatrixFq& x) {
  check(x.is_square(), Errc::shape_mismatch, "nilpotency check requires a square matrix");
  if (x.is_zero()) return 1;
  MatrixFq p = x;
  for (unsigned m = 2; m <= x.rows() + 1; ++m) {
    p = p * x;
    if (p.is_zero()) return m;
  }
  fail(Errc::not_nilpotent, "matrix is not nilpotent");
}

MatrixFq exp_nilpotent(const MatrixFq& x) {
  const Fq& F = *x.field();
  unsigned m = nilpotency_index(x);
  check(F.p() >= m, Errc::characteristic_too_small,
        "exp needs characteristic >= nilpotency index " + std::to_string(m));
  MatrixFq r = MatrixFq::identity(x.field(), x.rows());
  MatrixFq term = MatrixFq::identity(x.field(), x.rows());
  FqElem fact = 1;
  for (unsigned i = 1; i < m; ++i) {
    term = term * x;
    fact = F.mul(fact, F.from_int(i));
    r = r + term.scalar_mul(F.inv(fact));
  }
  return r;
}

MatrixFq log_unipotent(const MatrixFq& g) {
  const Fq& F = *g.field();
  MatrixFq x = g - MatrixFq::identity(g.field(), g.rows());
  unsigned m = nilpotency_index(x);
  check(F.p() >= m, Errc::characteristic_too_small,
        "log needs characteristic >= nilpotency index " + std::to_string(m));
  MatrixFq r(g.field(), g.rows(), g.cols());
  MatrixFq term = MatrixFq::identity(g.field(), g.rows());
  for (unsigned i = 1; i < m; ++i) {
    term = term * x;
    FqElem c = F.inv(F.from_int(i));
    if (i % 2 == 0) c = F.neg(c);
    r = r + term.scalar_mul(c);
  }
  return r;
}

MatrixFq invert(const MatrixFq& a) {
  check(a.is_square(), Errc::shape_mismatch, "invert requires a square matrix");
  const Fq& F = *a.field();
  const unsigned n = a.rows();
  std::vector<FqVec> rows(n, FqVec(2 * n, 0));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) rows[i][j] = a.at(i, j);
    rows[i][n + i] = 1;
  }
  auto pivots = rref_inplace(F, rows);
  check(pivots.size() == n && pivots[n - 1] == n - 1, Errc::invariant_violation,
        "matrix is singular");
  MatrixFq r(a.field(), n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) r.set(i, j, rows[i][n + j]);
  return r;
}

SpanSolver::SpanSolver(std::vector<MatrixFq> basis) {
  check(!basis.empty(), Errc::shape_mismatch, "empty basis");
  F_ = basis[0].field();
  rows_ = basis[0].rows();
  cols_ = basis[0].cols();
  n_ = basis.size();
  const Fq& F = *F_;
  const std::size_t width = static_cast<std::size_t>(rows_) * cols_;

  for (std::size_t b = 0; b < n_; ++b) {
    check(basis[b].rows() == rows_ && basis[b].cols() == cols_, Errc::shape_mismatch,
          "basis shape mismatch");
    require_same_field(F, *basis[b].field());
    FqVec row(basis[b].entries());
    FqVec combo(n_, 0);
    combo[b] = 1;
    // eliminate against existing echelon rows
    for (std::size_t r = 0; r < echelon_.size(); ++r) {
      FqElem f = row[pivot_cols_[r]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < width; ++j) row[j] = F.sub(row[j], F.mul(f, echelon_[r][j]));
      for (std::size_t j = 0; j < n_; ++j) combo[j] = F.sub(combo[j], F.mul(f, combo_[r][j]));
    }
    std::size_t piv = width;
    for (std::size_t j = 0; j < width; ++j)
      if (row[j] != 0) {
        piv = j;
        break;
      }
    if (piv == width) continue;  // dependent on earlier rows
    FqElem inv = F.inv(row[piv]);
    for (auto& v : row) v = F.mul(v, inv);
    for (auto& v : combo) v = F.mul(v, inv);
    // keep the rows mutually reduced: clear the new pivot column everywhere
    for (std::size_t r = 0; r < echelon_.size(); ++r) {
      FqElem f = echelon_[r][piv];
      if (f == 0) continue;
      for (std::size_t j = 0; j < width; ++j)
        echelon_[r][j] = F.sub(echelon_[r][j], F.mul(f, row[j]));
      for (std::size_t j = 0; j < n_; ++j)
        combo_[r][j] = F.sub(combo_[r][j], F.mul(f, combo[j]));
    }
    echelon_.push_back(std::move(row));
    combo_.push_back(std::move(combo));
    pivot_cols_.push_back(piv);
  }
}

std::optional<FqVec> SpanSolver::coordinates(const MatrixFq& m) const {
  check(m.rows() == rows_ && m.cols() == cols_, Errc::shape_mismatch,
        "span query shape mismatch");
  require_same_field(*F_, *m.field());
  const Fq& F = *F_;
  const std::size_t width = static_cast<std::size_t>(rows_) * cols_;
  FqVec row(m.entries());
  FqVec coeff(n_, 0);
  for (std::size_t r = 0; r < echelon_.size(); ++r) {
    FqElem f = row[pivot_cols_[r]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < width; ++j) row[j] = F.sub(row[j], F.mul(f, echelon_[r][j]));
    for (std::size_t j = 0; j < n_; ++j) coeff[j] = F.add(coeff[j], F.mul(f, combo_[r][j]));
  }
  for (std::size_t j = 0; j < width; ++j)
    if (row[j] != 0) return std::nullopt;
  return coeff;
}

}  // namespace orbitlab
