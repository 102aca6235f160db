#include "orbitlab/unipotent.hpp"

#include <algorithm>
#include <string>

namespace orbitlab {

namespace {

std::uint64_t pow_u64(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    check(r <= UINT64_MAX / base, Errc::budget_exceeded, "group order overflows 64 bits");
    r *= base;
  }
  return r;
}

unsigned exponent_of(std::uint64_t size, unsigned q, bool even_required) {
  unsigned e = 0;
  while (size > 1) {
    check(size % q == 0, Errc::invariant_violation, "orbit size is not a power of q");
    size /= q;
    ++e;
  }
  if (even_required)
    check(e % 2 == 0, Errc::invariant_violation, "coadjoint orbit size is an odd power of q");
  return e;
}

}  // namespace

UnipotentGroup UnipotentGroup::create(FqPtr field, std::vector<MatrixFq> basis) {
  check(!basis.empty(), Errc::shape_mismatch, "empty algebra basis");
  UnipotentGroup g;
  g.F_ = std::move(field);
  g.ambient_ = basis[0].rows();
  for (const auto& b : basis) {
    require_same_field(*g.F_, *b.field());
    check(b.is_square() && b.rows() == g.ambient_, Errc::shape_mismatch,
          "algebra basis matrices must share a square ambient size");
    nilpotency_index(b);  // throws NotNilpotent otherwise
  }
  g.basis_ = std::move(basis);
  g.solver_.emplace(g.basis_);
  check(g.solver_->rank() == g.basis_.size(), Errc::shape_mismatch,
        "algebra basis is linearly dependent");

  // bracket closure, with the structure constants as a byproduct of the check
  const unsigned d = g.dim();
  for (unsigned i = 0; i < d; ++i) {
    for (unsigned j = i + 1; j < d; ++j) {
      MatrixFq br = g.basis_[i] * g.basis_[j] - g.basis_[j] * g.basis_[i];
      check(g.solver_->contains(br), Errc::not_closed_under_bracket,
            "basis span is not closed under the bracket");
    }
  }

  // lower central series: L_{t+1} = [g, L_t]; class = last nonzero layer
  std::vector<MatrixFq> layer = g.basis_;
  unsigned cls = 1;
  while (true) {
    std::vector<MatrixFq> next;
    for (const auto& x : g.basis_)
      for (const auto& y : layer) {
        MatrixFq br = x * y - y * x;
        if (!br.is_zero()) next.push_back(std::move(br));
      }
    if (next.empty()) break;
    ++cls;
    check(cls <= d + 1, Errc::invariant_violation, "central series fails to terminate");
    layer = std::move(next);
  }
  g.nilpotency_class_ = cls;
  check(g.F_->p() > cls, Errc::characteristic_too_small,
        "characteristic " + std::to_string(g.F_->p()) + " <= nilpotency class " +
            std::to_string(cls));

  g.compute_generators();
  return g;
}

void UnipotentGroup::compute_generators() {
  const Fq& F = *F_;
  const unsigned d = dim();
  for (unsigned j = 0; j < F.k(); ++j) {
    std::vector<unsigned> unit(F.k(), 0);
    unit[j] = 1;
    FqElem scale = F.from_coeffs(unit);
    for (unsigned i = 0; i < d; ++i) {
      MatrixFq u = exp_nilpotent(basis_[i].scalar_mul(scale));
      MatrixFq uinv = invert(u);
      MatrixFq ad(F_, d, d);
      for (unsigned c = 0; c < d; ++c) {
        MatrixFq img = u * basis_[c] * uinv;
        auto coords = solver_->coordinates(img);
        check(coords.has_value(), Errc::not_closed_under_bracket,
              "Ad image leaves the basis span");
        for (unsigned r = 0; r < d; ++r) ad.set(r, c, (*coords)[r]);
      }
      coad_gens_.push_back(invert(ad).transpose());
      ad_gens_.push_back(std::move(ad));
    }
  }
}

std::uint64_t UnipotentGroup::order() const { return pow_u64(F_->q(), dim()); }

MatrixFq UnipotentGroup::exp_coords(std::span<const FqElem> x) const {
  check(x.size() == dim(), Errc::length_mismatch, "coordinate length mismatch");
  MatrixFq m(F_, ambient_, ambient_);
  for (unsigned i = 0; i < dim(); ++i)
    if (x[i] != 0) m = m + basis_[i].scalar_mul(x[i]);
  return exp_nilpotent(m);
}

FqVec UnipotentGroup::log_matrix(const MatrixFq& g) const {
  auto coords = solver_->coordinates(log_unipotent(g));
  check(coords.has_value(), Errc::orbit_spec_mismatch, "log lands outside the algebra span");
  return *coords;
}

FqVec UnipotentGroup::multiply(std::span<const FqElem> a, std::span<const FqElem> b) const {
  return log_matrix(exp_coords(a) * exp_coords(b));
}

FqVec UnipotentGroup::inverse(std::span<const FqElem> a) const {
  return log_matrix(invert(exp_coords(a)));
}

FqVec UnipotentGroup::conjugate(std::span<const FqElem> g, std::span<const FqElem> x) const {
  MatrixFq gm = exp_coords(g);
  return log_matrix(gm * exp_coords(x) * invert(gm));
}

FqElem UnipotentGroup::pairing(std::span<const FqElem> lambda, std::span<const FqElem> x) const {
  check(lambda.size() == dim() && x.size() == dim(), Errc::length_mismatch,
        "pairing length mismatch");
  const Fq& F = *F_;
  FqElem s = 0;
  for (unsigned i = 0; i < dim(); ++i) s = F.add(s, F.mul(lambda[i], x[i]));
  return s;
}

std::vector<CoadjointOrbit> UnipotentGroup::coadjoint_census(std::uint64_t budget) const {
  auto part = orbit_partition(F_, dim(), coad_gens_, budget);
  std::vector<CoadjointOrbit> orbits;
  orbits.reserve(part.orbits.size());
  for (const auto& o : part.orbits) {
    CoadjointOrbit co;
    co.rep_index = o.rep;
    co.representative = decode_state(F_->q(), dim(), o.rep);
    co.size = o.size;
    co.e = exponent_of(o.size, F_->q(), /*even_required=*/true) ;
    orbits.push_back(std::move(co));
  }
  return orbits;
}

ClassPartition UnipotentGroup::conjugacy_classes(std::uint64_t budget) const {
  auto part = orbit_partition(F_, dim(), ad_gens_, budget);
  ClassPartition cp;
  cp.reps.reserve(part.orbits.size());
  for (const auto& o : part.orbits) {
    cp.reps.push_back(o.rep);
    cp.sizes.push_back(o.size);
  }
  return cp;
}

std::uint64_t UnipotentGroup::conjugacy_class_count(std::uint64_t budget) const {
  return orbit_partition(F_, dim(), ad_gens_, budget).orbits.size();
}

std::vector<std::uint64_t> UnipotentGroup::orbit_member_indices(const CoadjointOrbit& orbit,
                                                                std::uint64_t budget) const {
  auto members = orbit_members(F_, dim(), coad_gens_, orbit.rep_index, budget);
  check(members.size() == orbit.size, Errc::orbit_spec_mismatch,
        "orbit does not belong to this group spec");
  return members;
}

Cyclotomic UnipotentGroup::kirillov_character(const CoadjointOrbit& orbit,
                                              std::span<const FqElem> x,
                                              std::uint64_t budget) const {
  const Fq& F = *F_;
  Cyclotomic sum(F.p());
  for (std::uint64_t m : orbit_member_indices(orbit, budget)) {
    FqVec lambda = decode_state(F.q(), dim(), m);
    sum += Cyclotomic::root_power(F.p(), F.trace(pairing(lambda, x)));
  }
  BigRational scale(1, pow_u64(F.q(), orbit.e));
  return sum * scale;
}

BigRational UnipotentGroup::character_inner_product(const CoadjointOrbit& o1,
                                                    const CoadjointOrbit& o2,
                                                    std::uint64_t budget) const {
  const Fq& F = *F_;
  const std::uint64_t n = state_count_checked(F.q(), dim(), budget);
  auto m1 = orbit_member_indices(o1, budget);
  auto m2 = orbit_member_indices(o2, budget);

  // Unnormalized orbit sums over every group element, multiplied pairwise.
  Cyclotomic total(F.p());
  FqVec x(dim()), lambda(dim());
  for (std::uint64_t g = 0; g < n; ++g) {
    x = decode_state(F.q(), dim(), g);
    Cyclotomic s1(F.p()), s2(F.p());
    for (std::uint64_t m : m1) {
      lambda = decode_state(F.q(), dim(), m);
      s1 += Cyclotomic::root_power(F.p(), F.trace(pairing(lambda, x)));
    }
    for (std::uint64_t m : m2) {
      lambda = decode_state(F.q(), dim(), m);
      s2 += Cyclotomic::root_power(F.p(), F.trace(pairing(lambda, x)));
    }
    total += s1 * s2.conj();
  }
  BigRational scale(1, BigInt(n) * pow_u64(F.q(), o1.e) * pow_u64(F.q(), o2.e));
  Cyclotomic result = total * scale;
  check(result.is_rational(), Errc::invariant_violation,
        "character inner product is not rational");
  return result.rational_value();
}

OrbitCensus UnipotentGroup::census_rows(std::uint64_t budget) const {
  auto orbits = coadjoint_census(budget);
  std::map<std::uint64_t, std::uint64_t> by_size;
  for (const auto& o : orbits) ++by_size[o.size];
  OrbitCensus census;
  for (const auto& [size, count] : by_size) {
    census.rows.push_back({exponent_of(size, F_->q(), true), size, count});
    census.total_orbits += count;
    census.total_mass += size * count;
  }
  std::sort(census.rows.begin(), census.rows.end(),
            [](const CensusRow& a, const CensusRow& b) { return a.e < b.e; });
  return census;
}

VerificationReport UnipotentGroup::verify_orbit_method(const VerifyOptions& opts) const {
  const Fq& F = *F_;
  VerificationReport rep;
  rep.group_order = order();

  auto orbits = coadjoint_census(opts.budget);
  auto classes = conjugacy_classes(opts.budget);
  rep.orbit_count = orbits.size();
  rep.class_count = classes.reps.size();
  rep.counts_match = rep.orbit_count == rep.class_count;

  std::uint64_t sum_sq = 0;
  for (const auto& o : orbits) {
    sum_sq += o.size;  // q^{2e} = (q^e)^2
    ++rep.per_degree[o.e];
  }
  rep.sum_of_squares_ok = sum_sq == rep.group_order;

  // (c) pairwise orthonormality on class representatives, exactly.  Character
  // values are summed class-by-class with integer zeta coordinates; the
  // class-function property itself is covered by the property tests.
  if (rep.group_order <= opts.orthogonality_order_cap &&
      orbits.size() <= opts.orthogonality_orbit_cap) {
    rep.orthonormality_checked = true;
    const unsigned p = F.p();
    const std::size_t nc = classes.reps.size(), no = orbits.size();

    // values[o][c] = unnormalized orbit sum at the class representative
    std::vector<std::vector<std::int64_t>> values(no * nc, std::vector<std::int64_t>(p, 0));
    for (std::size_t oi = 0; oi < no; ++oi) {
      auto members = orbit_member_indices(orbits[oi], opts.budget);
      std::vector<FqVec> lambdas;
      lambdas.reserve(members.size());
      for (auto m : members) lambdas.push_back(decode_state(F.q(), dim(), m));
      for (std::size_t ci = 0; ci < nc; ++ci) {
        FqVec x = decode_state(F.q(), dim(), classes.reps[ci]);
        auto& val = values[oi * nc + ci];
        for (const auto& lambda : lambdas) ++val[F.trace(pairing(lambda, x))];
        // canonical form: eliminate the zeta^{p-1} coordinate
        std::int64_t top = val[p - 1];
        if (top) for (auto& v : val) v -= top;
      }
    }
    for (std::size_t i = 0; i < no && rep.orthonormal; ++i) {
      for (std::size_t j = i; j < no && rep.orthonormal; ++j) {
        // sum over classes of |class| * S_i * conj(S_j), in Z[zeta]
        std::vector<std::int64_t> acc(p, 0);
        for (std::size_t ci = 0; ci < nc; ++ci) {
          const auto& a = values[i * nc + ci];
          const auto& b = values[j * nc + ci];
          const std::int64_t w = static_cast<std::int64_t>(classes.sizes[ci]);
          for (unsigned s = 0; s < p; ++s) {
            if (a[s] == 0) continue;
            for (unsigned t = 0; t < p; ++t) {
              if (b[t] == 0) continue;
              acc[(s + p - t) % p] += w * a[s] * b[t];
            }
          }
        }
        std::int64_t top = acc[p - 1];
        if (top) for (auto& v : acc) v -= top;
        // expected: |G| q^{e_i + e_j} delta_{ij}, purely rational
        bool rational = true;
        for (unsigned s = 1; s < p; ++s) rational &= acc[s] == 0;
        BigInt expect = BigInt(rep.group_order) * pow_u64(F.q(), orbits[i].e) *
                        pow_u64(F.q(), orbits[j].e);
        BigInt got = acc[0];
        rep.orthonormal = rational && got == (i == j ? expect : BigInt(0));
      }
    }
  }
  return rep;
}

UnipotentGroup heisenberg_group_spec(const BilinearForm& form) {
  return UnipotentGroup::create(form.F, heis_algebra_basis(form));
}

}  // namespace orbitlab
