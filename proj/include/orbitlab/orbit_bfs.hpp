#pragma once

#include <cstdint>
#include <vector>

#include "orbitlab/matrix.hpp"

namespace orbitlab {

/// Default enumeration budget (number of states); overridable per call and,
/// in the CLI, through the ORBITLAB_BUDGET environment variable.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// q^d with an overflow guard; throws BudgetExceeded when the state count
/// cannot be represented or exceeds the budget.
std::uint64_t state_count_checked(unsigned q, unsigned d, std::uint64_t budget);

/// States of F_q^d are encoded big-endian: index = x_0 q^{d-1} + ... + x_{d-1},
/// so the numerically smallest index in an orbit is its lexicographically
/// least coordinate vector (field elements ordered by their context index).
std::uint64_t encode_state(unsigned q, std::span<const FqElem> coords);
FqVec decode_state(unsigned q, unsigned d, std::uint64_t index);

struct Orbit {
  std::uint64_t rep;   // encoded lex-least member
  std::uint64_t size;
};

struct OrbitPartition {
  std::vector<Orbit> orbits;
  std::uint64_t states = 0;

  std::uint64_t total_mass() const {
    std::uint64_t m = 0;
    for (const auto& o : orbits) m += o.size;
    return m;
  }
};

/// Orbit partition of F_q^d under the group generated by the given linear
/// maps (d x d matrices over the same context).  Forward closure suffices:
/// every generator has finite order, so the generated semigroup is a group.
/// Each run owns its visited bitmap; distinct runs may proceed concurrently.
OrbitPartition orbit_partition(const FqPtr& field, unsigned d,
                               const std::vector<MatrixFq>& generators, std::uint64_t budget);

/// Members of the single orbit through `seed` (encoded indices, unsorted).
std::vector<std::uint64_t> orbit_members(const FqPtr& field, unsigned d,
                                         const std::vector<MatrixFq>& generators,
                                         std::uint64_t seed, std::uint64_t budget);

}  // namespace orbitlab
