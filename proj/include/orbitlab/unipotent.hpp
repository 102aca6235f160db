#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "orbitlab/cyclotomic.hpp"
#include "orbitlab/heisenberg.hpp"
#include "orbitlab/matrix.hpp"
#include "orbitlab/orbit_bfs.hpp"

namespace orbitlab {

struct CoadjointOrbit {
  FqVec representative;       // lexicographically least dual-coordinate vector
  std::uint64_t rep_index = 0;
  std::uint64_t size = 1;
  unsigned e = 0;             // size = q^{2e}; character degree q^e
};

struct ClassPartition {
  std::vector<std::uint64_t> reps;   // encoded algebra coordinates, lex-least per class
  std::vector<std::uint64_t> sizes;
};

struct VerifyOptions {
  std::uint64_t budget = kDefaultBudget;
  /// Orthonormality is checked exhaustively when |G| and the pairwise work
  /// both fit; assertions (a) and (b) stay exact regardless.
  std::uint64_t orthogonality_order_cap = 1'000'000;
  std::uint64_t orthogonality_orbit_cap = 512;
};

struct VerificationReport {
  std::uint64_t group_order = 0;
  std::uint64_t orbit_count = 0;
  std::uint64_t class_count = 0;
  bool counts_match = false;          // (a)
  bool sum_of_squares_ok = false;     // (b) sum over orbits of q^{2e} = |G|
  bool orthonormality_checked = false;
  bool orthonormal = true;            // (c), meaningful when checked
  std::map<unsigned, std::uint64_t> per_degree;  // (d) e -> orbit count

  bool passed() const {
    return counts_match && sum_of_squares_ok && (!orthonormality_checked || orthonormal);
  }
};

/// A unipotent matrix group presented by a basis of its nilpotent Lie
/// algebra, with the orbit-method machinery: coadjoint census via exact
/// Ad-matrices, Kirillov characters in cyclotomic arithmetic, and the
/// conjugacy-class oracle.
///
/// Group elements are identified with algebra coordinate vectors through
/// exp; conjugation then acts linearly (Ad), so both censuses reduce to
/// orbit enumeration of linear actions on F_q^dim.
class UnipotentGroup {
public:
  /// Validates independence, bracket closure, nilpotency, and p > class.
  static UnipotentGroup create(FqPtr field, std::vector<MatrixFq> basis);

  const FqPtr& field() const { return F_; }
  unsigned dim() const { return static_cast<unsigned>(basis_.size()); }
  std::uint64_t order() const;  // q^dim
  unsigned nilpotency_class() const { return nilpotency_class_; }
  const std::vector<MatrixFq>& basis() const { return basis_; }

  MatrixFq exp_coords(std::span<const FqElem> x) const;
  FqVec log_matrix(const MatrixFq& g) const;
  FqVec multiply(std::span<const FqElem> a, std::span<const FqElem> b) const;
  FqVec inverse(std::span<const FqElem> a) const;
  FqVec conjugate(std::span<const FqElem> g, std::span<const FqElem> x) const;

  /// Dual-basis pairing lambda(x) = sum_i lambda_i x_i.
  FqElem pairing(std::span<const FqElem> lambda, std::span<const FqElem> x) const;

  /// Ad(exp(c e_i)) for c over an F_p-basis of F_q; generate the full group image.
  const std::vector<MatrixFq>& ad_generators() const { return ad_gens_; }
  /// Transpose-inverses of the Ad generators: the coadjoint action on dual coordinates.
  const std::vector<MatrixFq>& coadjoint_generators() const { return coad_gens_; }

  std::vector<CoadjointOrbit> coadjoint_census(std::uint64_t budget = kDefaultBudget) const;
  ClassPartition conjugacy_classes(std::uint64_t budget = kDefaultBudget) const;
  std::uint64_t conjugacy_class_count(std::uint64_t budget = kDefaultBudget) const;

  std::vector<std::uint64_t> orbit_member_indices(const CoadjointOrbit& orbit,
                                                  std::uint64_t budget = kDefaultBudget) const;
  /// chi_Omega(exp x) = q^{-e} sum_{lambda in Omega} theta(lambda(x)).
  Cyclotomic kirillov_character(const CoadjointOrbit& orbit, std::span<const FqElem> x,
                                std::uint64_t budget = kDefaultBudget) const;
  /// <chi_1, chi_2> = |G|^{-1} sum_g chi_1(g) conj(chi_2(g)), an exact rational.
  BigRational character_inner_product(const CoadjointOrbit& o1, const CoadjointOrbit& o2,
                                      std::uint64_t budget = kDefaultBudget) const;

  VerificationReport verify_orbit_method(const VerifyOptions& opts = {}) const;

  OrbitCensus census_rows(std::uint64_t budget = kDefaultBudget) const;

private:
  UnipotentGroup() = default;
  void compute_generators();

  FqPtr F_;
  unsigned ambient_ = 0;
  std::vector<MatrixFq> basis_;
  std::optional<SpanSolver> solver_;
  unsigned nilpotency_class_ = 0;
  std::vector<MatrixFq> ad_gens_, coad_gens_;
};

/// The embedded H_beta as a unipotent group spec (dual coordinates ordered
/// (w_1..w_n, s), matching HeisFunctional).
UnipotentGroup heisenberg_group_spec(const BilinearForm& form);

}  // namespace orbitlab
