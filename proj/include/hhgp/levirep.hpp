#pragma once

#include <mutex>
#include <unordered_map>
#include <vector>

#include "hhgp/bigint.hpp"
#include "hhgp/parabolic.hpp"

namespace hhgp {

struct ResourceCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceLimits {
  std::size_t max_dp_states = 20'000'000;  // total DP entries for one table
};

// Weights keyed by their simple-root coordinates (sums of roots are always
// in the root lattice, so this is lossless and keeps the numbers small).
struct WeightMultiset {
  std::unordered_map<Vec, Int, VecHash> entries;
  Int total = 0;
  void add(const Vec& key, Int mult);
};

// The weight multiset of the p-th exterior power of the span of `roots`
// (p-subset sums of distinct elements), partitioned by grading level,
// levels descending. Computed with an elementary-symmetric style DP over
// one root at a time; subsets are never enumerated.
std::vector<std::vector<std::pair<Int, WeightMultiset>>> exterior_power_table(
    const ParabolicData& par, int p_max, const std::vector<Root>& roots,
    const ResourceLimits& limits = {});

// Tangent-bundle case (roots = NP+), single p.
std::vector<std::pair<Int, WeightMultiset>> exterior_power_weights(
    const ParabolicData& par, int p, const ResourceLimits& limits = {});

struct LeviIrrep {
  Vec weight;  // ambient fundamental-weight coordinates (crossed coords ride along)
  Vec simple;  // the same weight in simple-root coordinates
  Int rank;    // dimension as a Levi representation
};

struct Decomposition {
  std::vector<std::pair<LeviIrrep, Int>> pieces;  // peeling order, with multiplicities
};

// Weight multiplicities of Levi irreps via Freudenthal's recursion, memoised
// per Levi-restricted highest weight. Thread-safe.
class FreudenthalCache {
 public:
  explicit FreudenthalCache(const ParabolicData& par) : par_(&par) {}
  // Map offset -> multiplicity, offsets in simple-root coordinates supported
  // on the Levi nodes (weight = highest - offset).
  const std::unordered_map<Vec, Int, VecHash>& multiplicities(const Vec& lam_fw);

 private:
  const ParabolicData* par_;
  std::mutex mu_;
  std::unordered_map<Vec, std::unique_ptr<std::unordered_map<Vec, Int, VecHash>>, VecHash>
      cache_;
  std::unordered_map<Vec, Int, VecHash> compute(const Vec& lam_fw) const;
};

// Greedy highest-weight peeling of a W_L-invariant multiset into Levi
// irreps. Throws std::logic_error if the remainder ever goes negative.
Decomposition decompose(const ParabolicData& par, const WeightMultiset& wm,
                        FreudenthalCache& cache);

// Weyl dimension formula over the Levi positive roots; exact.
Int levi_dim(const ParabolicData& par, const Vec& lam_fw);
// Weyl dimension formula over all positive roots of G; exact.
BigNat g_dim(const RootSystem& rs, const Vec& lam_fw);

}  // namespace hhgp
