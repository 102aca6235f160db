#include "orbitlab/orbit_bfs.hpp"

#include <string>

namespace orbitlab {

std::uint64_t state_count_checked(unsigned q, unsigned d, std::uint64_t budget) {
  std::uint64_t n = 1;
  for (unsigned i = 0; i < d; ++i) {
    if (n > budget / q + 1) fail(Errc::budget_exceeded, "state space exceeds budget");
    n *= q;
  }
  check(n <= budget, Errc::budget_exceeded,
        "state space of size " + std::to_string(n) + " exceeds budget " + std::to_string(budget));
  return n;
}

std::uint64_t encode_state(unsigned q, std::span<const FqElem> coords) {
  std::uint64_t idx = 0;
  for (FqElem c : coords) idx = idx * q + c;
  return idx;
}

FqVec decode_state(unsigned q, unsigned d, std::uint64_t index) {
  FqVec v(d);
  for (unsigned j = d; j-- > 0;) {
    v[j] = static_cast<FqElem>(index % q);
    index /= q;
  }
  return v;
}

namespace {

// Flattened generator table plus the field tables the inner loop needs.
struct Action {
  const Fq* F;
  unsigned q, d;
  std::vector<std::vector<FqElem>> gens;  // row-major d*d

  Action(const FqPtr& field, unsigned dim, const std::vector<MatrixFq>& generators)
      : F(field.get()), q(field->q()), d(dim) {
    gens.reserve(generators.size());
    for (const auto& g : generators) {
      require_same_field(*F, *g.field());
      check(g.rows() == d && g.cols() == d, Errc::shape_mismatch,
            "generator shape does not match the state dimension");
      gens.push_back(g.entries());
    }
  }

  std::uint64_t apply(std::size_t gi, const FqElem* x) const {
    const FqElem* m = gens[gi].data();
    std::uint64_t idx = 0;
    for (unsigned r = 0; r < d; ++r) {
      FqElem s = 0;
      const FqElem* row = m + static_cast<std::size_t>(r) * d;
      for (unsigned c = 0; c < d; ++c) s = F->add(s, F->mul(row[c], x[c]));
      idx = idx * q + s;
    }
    return idx;
  }
};

class Bitmap {
public:
  explicit Bitmap(std::uint64_t n) : bits_((n + 63) / 64, 0) {}
  bool test(std::uint64_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }
  void set(std::uint64_t i) { bits_[i >> 6] |= std::uint64_t(1) << (i & 63); }

private:
  std::vector<std::uint64_t> bits_;
};

}  // namespace

OrbitPartition orbit_partition(const FqPtr& field, unsigned d,
                               const std::vector<MatrixFq>& generators, std::uint64_t budget) {
  const unsigned q = field->q();
  const std::uint64_t n = state_count_checked(q, d, budget);
  Action act(field, d, generators);
  Bitmap visited(n);
  std::vector<std::uint64_t> frontier;
  OrbitPartition part;
  part.states = n;

  FqVec coords(d);
  for (std::uint64_t seed = 0; seed < n; ++seed) {
    if (visited.test(seed)) continue;
    visited.set(seed);
    frontier.clear();
    frontier.push_back(seed);
    std::uint64_t size = 0;
    while (!frontier.empty()) {
      std::uint64_t cur = frontier.back();
      frontier.pop_back();
      ++size;
      std::uint64_t t = cur;
      for (unsigned j = d; j-- > 0;) {
        coords[j] = static_cast<FqElem>(t % q);
        t /= q;
      }
      for (std::size_t gi = 0; gi < act.gens.size(); ++gi) {
        std::uint64_t next = act.apply(gi, coords.data());
        if (!visited.test(next)) {
          visited.set(next);
          frontier.push_back(next);
        }
      }
    }
    part.orbits.push_back({seed, size});
  }
  return part;
}

std::vector<std::uint64_t> orbit_members(const FqPtr& field, unsigned d,
                                         const std::vector<MatrixFq>& generators,
                                         std::uint64_t seed, std::uint64_t budget) {
  const unsigned q = field->q();
  const std::uint64_t n = state_count_checked(q, d, budget);
  check(seed < n, Errc::invariant_violation, "orbit seed outside the state space");
  Action act(field, d, generators);
  Bitmap visited(n);
  std::vector<std::uint64_t> members{seed};
  visited.set(seed);
  FqVec coords(d);
  for (std::size_t head = 0; head < members.size(); ++head) {
    std::uint64_t t = members[head];
    for (unsigned j = d; j-- > 0;) {
      coords[j] = static_cast<FqElem>(t % q);
      t /= q;
    }
    for (std::size_t gi = 0; gi < act.gens.size(); ++gi) {
      std::uint64_t next = act.apply(gi, coords.data());
      if (!visited.test(next)) {
        visited.set(next);
        members.push_back(next);
      }
    }
  }
  return members;
}

}  // namespace orbitlab
