#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbitlab/matrix.hpp"
#include "orbitlab/orbit_bfs.hpp"
#include "orbitlab/prng.hpp"

namespace orbitlab {

/// Bilinear form beta(v, w) = v^T B w on F_q^n, given by its Gram matrix.
struct BilinearForm {
  FqPtr F;
  unsigned n;
  MatrixFq gram;

  BilinearForm(FqPtr field, MatrixFq b);
  FqElem eval(std::span<const FqElem> v, std::span<const FqElem> w) const;
};

/// Group element (v, r) of H_beta = V x F with
/// (v, r) (w, s) = (v + w, r + s + beta(v, w)).
struct HeisElement {
  FqVec v;
  FqElem r = 0;
  bool operator==(const HeisElement& o) const { return v == o.v && r == o.r; }
};

/// Linear functional (w, s) on the Lie algebra of H_beta, in dual-basis coordinates.
struct HeisFunctional {
  FqVec w;
  FqElem s = 0;
  bool operator==(const HeisFunctional& o) const { return w == o.w && s == o.s; }
};

struct CensusRow {
  unsigned e = 0;               // degree exponent; orbit size is q^{2e}
  std::uint64_t orbit_size = 1;
  std::uint64_t count = 0;
  bool operator==(const CensusRow& o) const {
    return e == o.e && orbit_size == o.orbit_size && count == o.count;
  }
};

struct OrbitCensus {
  std::vector<CensusRow> rows;  // sorted by e
  std::uint64_t total_orbits = 0;
  std::uint64_t total_mass = 0;  // sum count * orbit_size; must equal q^{n+1}
  bool operator==(const OrbitCensus& o) const { return rows == o.rows; }
};

HeisElement heis_identity(const BilinearForm& form);
HeisElement heis_multiply(const HeisElement& g, const HeisElement& h, const BilinearForm& form);
/// The group-law-forced inverse (-v, beta(v,v) - r).
HeisElement heis_inverse(const HeisElement& g, const BilinearForm& form);

/// Unitriangular embedding of size (n+2): first row (1, v, r), last column
/// (r, Bv, 1).  With the Bv column the map is a group homomorphism:
/// embed(g) embed(h) = embed(g h).
MatrixFq embed_matrix(const HeisElement& g, const BilinearForm& form);

/// Lie algebra coordinates (v, t) with t = r - (1/2) beta(v, v).
std::pair<FqVec, FqElem> heis_log(const HeisElement& g, const BilinearForm& form);

/// [ (v,.), (w,.) ] = (0, -beta(v,w) + beta(w,v)).
std::pair<FqVec, FqElem> heis_bracket(std::span<const FqElem> x, std::span<const FqElem> y,
                                      const BilinearForm& form);

/// Coadjoint action g.(w, s) = (w + s (B^T - B) v, s); equals the functional
/// x -> lambda(g x g^{-1}) materialized through the matrix model.
HeisFunctional coadjoint_act(const HeisElement& g, const HeisFunctional& lambda,
                             const BilinearForm& form);

/// Breadth-first closure of every functional under the generator actions
/// {(c e_i, 0)} (c over an F_p-basis of F_q) plus the central (0, 1).
OrbitCensus enumerate_orbits_brute(const BilinearForm& form, std::uint64_t budget = kDefaultBudget);

/// Orbit census per the closed-form classification: q^n singletons plus
/// (q-1) q^{n-rk} orbits of size q^{rk}, rk = rank(B^T - B); the two rows
/// merge when rk = 0.
OrbitCensus classify_orbits_closed_form(const BilinearForm& form);

/// Lie-algebra basis matrices of the embedded H_beta (n matrices for V plus
/// the central one), for use as a generic unipotent group spec.
std::vector<MatrixFq> heis_algebra_basis(const BilinearForm& form);

// --- Gram matrix constructions -------------------------------------------

/// Integer Gram matrix; reducible mod any sampled characteristic, so one
/// seeded draw serves every q in a cross-characteristic interpolation.
struct IntGram {
  unsigned n = 0;
  std::vector<std::uint64_t> entries;  // row-major, values in [0, kGramEntryModulus)

  MatrixFq reduce(const FqPtr& F) const;
};

/// Product of the primes {5,7,11,13,17,19,23,29,31}: drawing entries uniform
/// below this bound gives exactly uniform residues modulo each of them.
inline constexpr std::uint64_t kGramEntryModulus = 33426748355ULL;

IntGram random_gram(SplitMix64& rng, unsigned n);
IntGram zero_gram(unsigned n);
IntGram identity_gram(unsigned n);
/// Block-diagonal copies of [[0,1],[-1,0]] (trailing zero line when n is odd).
IntGram symplectic_gram(unsigned n);
/// beta(x, y) = sum_i x_i y_{k+i} on F^{2k} (n = 2k); the standard Heisenberg form.
IntGram standard_heisenberg_gram(unsigned n);
IntGram named_gram(const std::string& name, unsigned n);

}  // namespace orbitlab
