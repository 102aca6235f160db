#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitlab/matrix.hpp"

namespace orbitlab {

enum class Family { A, B, C, D };

Family parse_family(const std::string& s);
std::string family_name(Family f);

/// Classical root system of rank parameter n: A realizes A_{n-1} inside
/// sl_n, B realizes B_n inside so_{2n+1}, C realizes C_n inside sp_{2n},
/// D realizes D_n inside so_{2n}.
struct RootSystem {
  Family family;
  unsigned n;

  RootSystem(Family f, unsigned rank);
  unsigned ambient_size() const;
};

enum class RootKind { eps_minus, eps_plus, eps, two_eps };

/// eps_minus: e_i - e_j (i < j); eps_plus: e_i + e_j (i < j); eps: e_i
/// (B only); two_eps: 2 e_i (C only).
struct Root {
  RootKind kind;
  unsigned i = 0;
  unsigned j = 0;  // unused for eps / two_eps

  std::string str() const;  // "e1-e3", "e2+e4", "e3", "2e2"
  bool operator==(const Root& o) const { return kind == o.kind && i == o.i && j == o.j; }
};

/// Complete positive system, duplicate-free, ordered by (col, row).
std::vector<Root> positive_roots(const RootSystem& rs);

unsigned col_of(const Root& r);
/// row(e_i - e_j) = j, row(e_i + e_j) = -j, row(e_i) = 0, row(2 e_i) = -i.
int row_of(const Root& r);

/// Gram matrix of the defining bilinear form on the ambient space (B/C/D).
MatrixFq ambient_gram(const RootSystem& rs, const FqPtr& F);

/// Exact root-vector matrix in the ambient algebra with the +-index row and
/// column labeling.  Short roots use the unscaled upper-triangular vector
/// e_{i,0} - e_{0,-i}; spans and exponentials do not see the normalization.
MatrixFq root_vector(const Root& r, const RootSystem& rs, const FqPtr& F);

enum class SubalgebraName { hei_n, hei_n2, hei2 };

SubalgebraName parse_subalgebra(const std::string& s);

/// Root-vector basis of the named subalgebra.  hei_n / hei_n2 require family
/// A and are the first-row(s)-and-last-column(s) Heisenberg patterns; hei2
/// requires B, C or D and is the span of the first two columns C_1 and C_2.
/// The span is verified to be bracket-closed.
std::vector<std::pair<Root, MatrixFq>> subalgebra_basis(SubalgebraName name,
                                                        const RootSystem& rs, const FqPtr& F);

struct IdealCheckResult {
  bool is_subalgebra = false;
  bool is_abelian = false;
  bool is_ideal = false;
  /// Indices into `sub` of a non-commuting pair, when one exists.
  std::optional<std::pair<std::size_t, std::size_t>> abelian_witness;
};

/// Exact bracket checks of sub inside span(ambient): closure of sub,
/// vanishing of internal brackets, and [ambient, sub] within span(sub).
IdealCheckResult abelian_ideal_check(const std::vector<MatrixFq>& sub,
                                     const std::vector<MatrixFq>& ambient);

}  // namespace orbitlab
