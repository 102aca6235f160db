#pragma once

#include <optional>
#include <span>
#include <vector>

#include "orbitlab/fq.hpp"

namespace orbitlab {

using FqVec = std::vector<FqElem>;

/// Dense exact matrix over F_q.  Value semantics throughout; the field
/// context travels with the matrix and is checked on every binary operation.
class MatrixFq {
public:
  MatrixFq(FqPtr field, unsigned rows, unsigned cols)
      : F_(std::move(field)), rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * cols, 0) {}

  static MatrixFq identity(const FqPtr& field, unsigned n);
  /// Elementary matrix with a single entry (default 1) at (i, j); 0-based.
  static MatrixFq elementary(const FqPtr& field, unsigned rows, unsigned cols, unsigned i,
                             unsigned j, FqElem value = 1);

  const FqPtr& field() const { return F_; }
  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }

  FqElem at(unsigned r, unsigned c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(unsigned r, unsigned c, FqElem v) { a_[static_cast<std::size_t>(r) * cols_ + c] = v; }
  const std::vector<FqElem>& entries() const { return a_; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  MatrixFq operator+(const MatrixFq& o) const;
  MatrixFq operator-(const MatrixFq& o) const;
  MatrixFq operator*(const MatrixFq& o) const;
  MatrixFq scalar_mul(FqElem s) const;
  MatrixFq transpose() const;
  MatrixFq negate() const;
  bool operator==(const MatrixFq& o) const;

  FqVec mat_vec(std::span<const FqElem> v) const;

private:
  FqPtr F_;
  unsigned rows_, cols_;
  std::vector<FqElem> a_;
};

struct RankResult {
  unsigned rank = 0;
  /// Reduced row echelon form of the input.
  MatrixFq rref;
  std::vector<unsigned> pivot_cols;
  /// Canonical basis of the column space (RREF of the transpose), one row per vector.
  std::vector<FqVec> image_basis;
  /// Canonical kernel basis, one vector per free column.
  std::vector<FqVec> kernel_basis;
};

RankResult rank_image_kernel(const MatrixFq& a);
unsigned rank_of(const MatrixFq& a);

/// B^T - B; requires a square input and depends only on the antisymmetric part.
MatrixFq antisymmetrize(const MatrixFq& b);

/// Smallest m with x^m = 0, or NotNilpotent.
unsigned nilpotency_index(const MatrixFq& x);

/// exp of a nilpotent matrix as the truncated series sum x^i / i!.
/// Requires p >= nilpotency index so every needed factorial is invertible.
MatrixFq exp_nilpotent(const MatrixFq& x);

/// log of a unipotent matrix (g - I nilpotent), the series sum (-1)^{i+1} (g-I)^i / i.
MatrixFq log_unipotent(const MatrixFq& g);

/// Inverse of an invertible square matrix by Gauss-Jordan elimination.
MatrixFq invert(const MatrixFq& a);

/// Expresses matrices as exact linear combinations of a fixed basis family.
/// Construction performs one elimination pass; queries are back-substitutions.
class SpanSolver {
public:
  explicit SpanSolver(std::vector<MatrixFq> basis);

  unsigned rank() const { return static_cast<unsigned>(pivot_cols_.size()); }
  std::size_t basis_size() const { return n_; }
  bool contains(const MatrixFq& m) const { return coordinates(m).has_value(); }
  /// Coordinates of m in the original basis order; nullopt when m is outside the span.
  /// Unique when the basis is independent (rank() == basis_size()).
  std::optional<FqVec> coordinates(const MatrixFq& m) const;

private:
  FqPtr F_;
  unsigned rows_, cols_;
  std::size_t n_;
  std::vector<FqVec> echelon_;        // echelon rows over the flattened matrices
  std::vector<FqVec> combo_;          // echelon_[r] = sum_j combo_[r][j] * basis[j]
  std::vector<std::size_t> pivot_cols_;
};

}  // namespace orbitlab
