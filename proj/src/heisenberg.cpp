#include "orbitlab/heisenberg.hpp"

#include <algorithm>
#include <map>

namespace orbitlab {

namespace {

std::uint64_t pow_u64_checked(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    check(r <= UINT64_MAX / base, Errc::budget_exceeded, "count overflows 64 bits");
    r *= base;
  }
  return r;
}

// Orbit sizes of a coadjoint census must be q^{2e}; recovers e.
unsigned degree_exponent(std::uint64_t size, unsigned q) {
  unsigned twoe = 0;
  std::uint64_t s = size;
  while (s > 1) {
    check(s % q == 0, Errc::invariant_violation, "orbit size is not a power of q");
    s /= q;
    ++twoe;
  }
  check(twoe % 2 == 0, Errc::invariant_violation, "orbit size is an odd power of q");
  return twoe / 2;
}

OrbitCensus census_from_partition(const OrbitPartition& part, unsigned q,
                                  std::uint64_t expected_mass) {
  std::map<std::uint64_t, std::uint64_t> by_size;
  for (const auto& o : part.orbits) ++by_size[o.size];
  OrbitCensus census;
  for (const auto& [size, count] : by_size) {
    census.rows.push_back({degree_exponent(size, q), size, count});
    census.total_orbits += count;
  }
  std::sort(census.rows.begin(), census.rows.end(),
            [](const CensusRow& a, const CensusRow& b) { return a.e < b.e; });
  census.total_mass = part.total_mass();
  check(census.total_mass == expected_mass, Errc::invariant_violation,
        "orbit sizes do not partition the dual space");
  return census;
}

}  // namespace

BilinearForm::BilinearForm(FqPtr field, MatrixFq b) : F(std::move(field)), n(b.rows()), gram(std::move(b)) {
  check(gram.is_square(), Errc::shape_mismatch, "Gram matrix must be square");
  require_same_field(*F, *gram.field());
}

FqElem BilinearForm::eval(std::span<const FqElem> v, std::span<const FqElem> w) const {
  check(v.size() == n && w.size() == n, Errc::shape_mismatch, "form argument length mismatch");
  const Fq& Fx = *F;
  FqElem s = 0;
  for (unsigned i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    FqElem row = 0;
    for (unsigned j = 0; j < n; ++j) row = Fx.add(row, Fx.mul(gram.at(i, j), w[j]));
    s = Fx.add(s, Fx.mul(v[i], row));
  }
  return s;
}

HeisElement heis_identity(const BilinearForm& form) { return {FqVec(form.n, 0), 0}; }

HeisElement heis_multiply(const HeisElement& g, const HeisElement& h, const BilinearForm& form) {
  check(g.v.size() == form.n && h.v.size() == form.n, Errc::context_mismatch,
        "element does not belong to this form");
  const Fq& F = *form.F;
  HeisElement r{FqVec(form.n), 0};
  for (unsigned i = 0; i < form.n; ++i) r.v[i] = F.add(g.v[i], h.v[i]);
  r.r = F.add(F.add(g.r, h.r), form.eval(g.v, h.v));
  return r;
}

HeisElement heis_inverse(const HeisElement& g, const BilinearForm& form) {
  const Fq& F = *form.F;
  HeisElement r{FqVec(form.n), 0};
  for (unsigned i = 0; i < form.n; ++i) r.v[i] = F.neg(g.v[i]);
  r.r = F.sub(form.eval(g.v, g.v), g.r);
  return r;
}

MatrixFq embed_matrix(const HeisElement& g, const BilinearForm& form) {
  const Fq& F = *form.F;
  const unsigned n = form.n;
  MatrixFq m = MatrixFq::identity(form.F, n + 2);
  for (unsigned i = 0; i < n; ++i) m.set(0, 1 + i, g.v[i]);
  m.set(0, n + 1, g.r);
  // last column carries Bv, which makes the embedding multiplicative
  for (unsigned i = 0; i < n; ++i) {
    FqElem s = 0;
    for (unsigned j = 0; j < n; ++j) s = F.add(s, F.mul(form.gram.at(i, j), g.v[j]));
    m.set(1 + i, n + 1, s);
  }
  return m;
}

std::pair<FqVec, FqElem> heis_log(const HeisElement& g, const BilinearForm& form) {
  const Fq& F = *form.F;
  FqElem t = F.sub(g.r, F.mul(F.half(), form.eval(g.v, g.v)));
  return {g.v, t};
}

std::pair<FqVec, FqElem> heis_bracket(std::span<const FqElem> x, std::span<const FqElem> y,
                                      const BilinearForm& form) {
  const Fq& F = *form.F;
  FqElem c = F.sub(form.eval(y, x), form.eval(x, y));
  return {FqVec(form.n, 0), c};
}

HeisFunctional coadjoint_act(const HeisElement& g, const HeisFunctional& lambda,
                             const BilinearForm& form) {
  check(g.v.size() == form.n && lambda.w.size() == form.n, Errc::context_mismatch,
        "functional does not belong to this form");
  const Fq& F = *form.F;
  MatrixFq t = antisymmetrize(form.gram);
  FqVec tv = t.mat_vec(g.v);
  HeisFunctional r{FqVec(form.n), lambda.s};
  for (unsigned i = 0; i < form.n; ++i) r.w[i] = F.add(lambda.w[i], F.mul(lambda.s, tv[i]));
  return r;
}

OrbitCensus enumerate_orbits_brute(const BilinearForm& form, std::uint64_t budget) {
  const Fq& F = *form.F;
  const unsigned n = form.n, d = n + 1;
  MatrixFq t = antisymmetrize(form.gram);

  // Action of (c e_i, 0) on (w, s): w += s * c * T e_i.  Scaled copies over an
  // F_p-basis of F_q make the generated group all of exp(V); the central
  // generator (0, 1) acts trivially and is kept for completeness.
  std::vector<MatrixFq> gens;
  for (unsigned j = 0; j < F.k(); ++j) {
    std::vector<unsigned> unit(F.k(), 0);
    unit[j] = 1;
    FqElem scale = F.from_coeffs(unit);  // t^j, an F_p-basis element of F_q
    for (unsigned i = 0; i < n; ++i) {
      MatrixFq g = MatrixFq::identity(form.F, d);
      for (unsigned r = 0; r < n; ++r) g.set(r, n, F.mul(scale, t.at(r, i)));
      gens.push_back(std::move(g));
    }
  }
  gens.push_back(MatrixFq::identity(form.F, d));

  auto part = orbit_partition(form.F, d, gens, budget);
  return census_from_partition(part, F.q(), pow_u64_checked(F.q(), d));
}

OrbitCensus classify_orbits_closed_form(const BilinearForm& form) {
  const Fq& F = *form.F;
  check(F.p() > 2, Errc::characteristic_too_small, "classification requires characteristic > 2");
  const unsigned n = form.n;
  const unsigned rk = rank_of(antisymmetrize(form.gram));
  check(rk % 2 == 0, Errc::invariant_violation, "antisymmetric matrix must have even rank");
  const std::uint64_t q = F.q();

  OrbitCensus census;
  if (rk == 0) {
    census.rows.push_back({0, 1, pow_u64_checked(q, n + 1)});
  } else {
    census.rows.push_back({0, 1, pow_u64_checked(q, n)});
    census.rows.push_back({rk / 2, pow_u64_checked(q, rk), (q - 1) * pow_u64_checked(q, n - rk)});
  }
  for (const auto& row : census.rows) {
    census.total_orbits += row.count;
    census.total_mass += row.count * row.orbit_size;
  }
  return census;
}

std::vector<MatrixFq> heis_algebra_basis(const BilinearForm& form) {
  const unsigned n = form.n;
  std::vector<MatrixFq> basis;
  for (unsigned i = 0; i < n; ++i) {
    HeisElement g{FqVec(n, 0), 0};
    g.v[i] = 1;
    MatrixFq x = embed_matrix(g, form) - MatrixFq::identity(form.F, n + 2);
    basis.push_back(std::move(x));
  }
  basis.push_back(MatrixFq::elementary(form.F, n + 2, n + 2, 0, n + 1));
  return basis;
}

MatrixFq IntGram::reduce(const FqPtr& F) const {
  MatrixFq m(F, n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      m.set(i, j, F->from_int(static_cast<long long>(entries[i * n + j] % F->p()) ));
  return m;
}

IntGram random_gram(SplitMix64& rng, unsigned n) {
  IntGram g{n, std::vector<std::uint64_t>(static_cast<std::size_t>(n) * n)};
  for (auto& e : g.entries) e = rng.below(kGramEntryModulus);
  return g;
}

IntGram zero_gram(unsigned n) { return {n, std::vector<std::uint64_t>(static_cast<std::size_t>(n) * n, 0)}; }

IntGram identity_gram(unsigned n) {
  IntGram g = zero_gram(n);
  for (unsigned i = 0; i < n; ++i) g.entries[i * n + i] = 1;
  return g;
}

IntGram symplectic_gram(unsigned n) {
  IntGram g = zero_gram(n);
  for (unsigned i = 0; i + 1 < n; i += 2) {
    g.entries[i * n + (i + 1)] = 1;
    g.entries[(i + 1) * n + i] = kGramEntryModulus - 1;  // -1 mod every sampled prime
  }
  return g;
}

IntGram standard_heisenberg_gram(unsigned n) {
  check(n % 2 == 0, Errc::shape_mismatch, "standard Heisenberg form needs even dimension");
  IntGram g = zero_gram(n);
  const unsigned k = n / 2;
  for (unsigned i = 0; i < k; ++i) g.entries[i * n + (k + i)] = 1;
  return g;
}

IntGram named_gram(const std::string& name, unsigned n) {
  if (name == "zero") return zero_gram(n);
  if (name == "identity") return identity_gram(n);
  if (name == "symplectic") return symplectic_gram(n);
  if (name == "heis") return standard_heisenberg_gram(n);
  fail(Errc::bad_field_spec, "unknown form name '" + name + "'");
}

}  // namespace orbitlab
