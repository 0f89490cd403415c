#include "hhgp/levirep.hpp"

#include <algorithm>
#include <numeric>

namespace hhgp {

void WeightMultiset::add(const Vec& key, Int mult) {
  if (mult == 0) return;
  auto it = entries.find(key);
  if (it == entries.end()) {
    entries.emplace(key, mult);
  } else {
    it->second += mult;
    if (it->second == 0) entries.erase(it);
  }
  total += mult;
}

std::vector<std::vector<std::pair<Int, WeightMultiset>>> exterior_power_table(
    const ParabolicData& par, int p_max, const std::vector<Root>& roots,
    const ResourceLimits& limits) {
  if (p_max < 0 || p_max > static_cast<int>(roots.size()))
    throw std::invalid_argument("exterior power: p out of range [0, dim]");
  int n = par.rs->rank();
  using Map = std::unordered_map<Vec, Int, VecHash>;
  std::vector<Map> dp(p_max + 1);
  dp[0].emplace(Vec(n, 0), 1);
  std::size_t states = 1;
  for (const Root& beta : roots) {
    for (int p = std::min<int>(p_max, static_cast<int>(&beta - roots.data()) + 1); p >= 1; --p) {
      for (const auto& [key, mult] : dp[p - 1]) {
        Vec next = key;
        for (int j = 0; j < n; ++j) next[j] += beta.simple[j];
        auto [it, inserted] = dp[p].try_emplace(std::move(next), mult);
        if (!inserted)
          it->second += mult;
        else if (++states > limits.max_dp_states)
          throw ResourceCapError("exterior power DP exceeded state limit");
      }
    }
  }
  std::vector<std::vector<std::pair<Int, WeightMultiset>>> out(p_max + 1);
  for (int p = 0; p <= p_max; ++p) {
    std::unordered_map<Int, WeightMultiset> by_level;
    for (auto& [key, mult] : dp[p]) by_level[par.level_of_simple(key)].add(key, mult);
    std::vector<Int> levels;
    for (auto& [lv, _] : by_level) levels.push_back(lv);
    std::sort(levels.rbegin(), levels.rend());
    for (Int lv : levels) out[p].emplace_back(lv, std::move(by_level[lv]));
  }
  return out;
}

std::vector<std::pair<Int, WeightMultiset>> exterior_power_weights(
    const ParabolicData& par, int p, const ResourceLimits& limits) {
  auto all = exterior_power_table(par, p, par.np_positive, limits);
  return std::move(all[p]);
}

namespace {

// (lam, beta) in the invariant form with short roots of square length 2;
// lam in fundamental-weight coordinates, beta in simple coordinates.
Int form_dot(const RootSystem& rs, const Vec& lam_fw, const Vec& beta_simple) {
  Int s = 0;
  for (int j = 0; j < rs.rank(); ++j) s += beta_simple[j] * rs.symmetrizer(j) * lam_fw[j];
  return s;
}

}  // namespace

std::unordered_map<Vec, Int, VecHash> FreudenthalCache::compute(const Vec& lam_fw) const {
  const ParabolicData& par = *par_;
  const RootSystem& rs = *par.rs;
  int n = rs.rank();
  if (!par.is_levi_dominant(lam_fw))
    throw std::invalid_argument("Freudenthal: weight is not Levi-dominant");

  std::unordered_map<Vec, Int, VecHash> mult;  // offset (simple coords) -> m
  Vec zero(n, 0);
  mult.emplace(zero, 1);
  std::vector<Vec> layer{zero};

  // (Lam + 2rho, Lam) piece of the Casimir, and per-candidate denominators,
  // all in the integer form above. rho of G restricts correctly to the Levi.
  Vec lam2rho(n);
  for (int j = 0; j < n; ++j) lam2rho[j] = lam_fw[j] + 2;

  while (!layer.empty()) {
    // candidates in the next depth layer
    std::unordered_map<Vec, Int, VecHash> cand;
    for (const Vec& off : layer) {
      for (int jn : par.levi_nodes) {
        Vec next = off;
        next[jn - 1] += 1;
        cand.try_emplace(std::move(next), 0);
      }
    }
    std::vector<Vec> next_layer;
    for (auto& [off, slot] : cand) {
      // mu = Lam - off; Freudenthal:
      //   [(Lam+rho,Lam+rho)-(mu+rho,mu+rho)] m(mu)
      //       = 2 sum_{a>0} sum_{j>=1} m(mu+ja) (mu+ja, a)
      Vec off_weight = rs.weight_coords(off);
      Vec mu_fw(n);
      for (int j = 0; j < n; ++j) mu_fw[j] = lam_fw[j] - off_weight[j];
      Int numer = 0;
      for (const Root& alpha : par.levi_positive) {
        Int dot_mu_alpha = form_dot(rs, mu_fw, alpha.simple);
        Vec up = off;
        for (Int j = 1;; ++j) {
          bool ok = true;
          for (int a = 0; a < n; ++a) {
            up[a] -= alpha.simple[a];
            if (up[a] < 0) ok = false;
          }
          if (!ok) break;
          auto it = mult.find(up);
          if (it == mult.end()) break;
          numer += 2 * it->second * (dot_mu_alpha + j * 2 * alpha.half_norm);
        }
      }
      if (numer == 0) continue;
      // denominator: (Lam + mu + 2rho, Lam - mu) with Lam - mu = off
      Vec sum_fw(n);
      for (int j = 0; j < n; ++j) sum_fw[j] = lam2rho[j] + mu_fw[j];
      Int denom = form_dot(rs, sum_fw, off);
      if (denom <= 0 || numer % denom != 0)
        throw std::logic_error("Freudenthal: inconsistent recursion");
      slot = numer / denom;
      mult.emplace(off, slot);
      next_layer.push_back(off);
    }
    layer = std::move(next_layer);
  }
  return mult;
}

const std::unordered_map<Vec, Int, VecHash>& FreudenthalCache::multiplicities(
    const Vec& lam_fw) {
  // cache key: Levi-restricted coordinates (central coords do not matter)
  Vec key;
  for (int j : par_->levi_nodes) key.push_back(lam_fw[j - 1]);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
  }
  auto table = std::make_unique<std::unordered_map<Vec, Int, VecHash>>(compute(lam_fw));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, _] = cache_.try_emplace(std::move(key), std::move(table));
  return *it->second;
}

Decomposition decompose(const ParabolicData& par, const WeightMultiset& wm,
                        FreudenthalCache& cache) {
  const RootSystem& rs = *par.rs;
  int n = rs.rank();
  auto remaining = wm.entries;
  Decomposition dec;
  auto height = [](const Vec& v) { return std::accumulate(v.begin(), v.end(), Int(0)); };
  while (!remaining.empty()) {
    // maximal weight: largest height, ties by lexicographically least key
    const Vec* best = nullptr;
    Int best_h = 0;
    for (const auto& [key, mult] : remaining) {
      Int h = height(key);
      if (!best || h > best_h || (h == best_h && key < *best)) {
        best = &key;
        best_h = h;
      }
    }
    Vec key = *best;
    Int mult = remaining.at(key);
    if (mult < 0) throw std::logic_error("decompose: negative multiplicity encountered");
    Vec lam_fw = rs.weight_coords(key);
    if (!par.is_levi_dominant(lam_fw))
      throw std::logic_error("decompose: maximal weight is not Levi-dominant");

    const auto& table = cache.multiplicities(lam_fw);
    Int rank = 0;
    for (const auto& [off, m] : table) {
      rank += m;
      Vec wkey(n);
      for (int j = 0; j < n; ++j) wkey[j] = key[j] - off[j];
      auto it = remaining.find(wkey);
      if (it == remaining.end() || it->second < mult * m)
        throw std::logic_error("decompose: remainder went negative");
      it->second -= mult * m;
      if (it->second == 0) remaining.erase(it);
    }
    dec.pieces.emplace_back(LeviIrrep{std::move(lam_fw), std::move(key), rank}, mult);
  }
  return dec;
}

namespace {

// Exact product of integer ratios known to multiply to an integer.
BigNat product_of_ratios(std::vector<Int> nums, std::vector<Int> dens) {
  for (Int& d : dens) {
    for (Int& a : nums) {
      if (d == 1) break;
      Int g = std::gcd(a, d);
      a /= g;
      d /= g;
    }
    if (d != 1) throw std::logic_error("dimension product not integral");
  }
  BigNat r(1);
  for (Int a : nums) r.mul_small(static_cast<std::uint64_t>(a));
  return r;
}

}  // namespace

Int levi_dim(const ParabolicData& par, const Vec& lam_fw) {
  const RootSystem& rs = *par.rs;
  if (!par.is_levi_dominant(lam_fw))
    throw std::invalid_argument("levi_dim: weight is not Levi-dominant");
  Vec shifted(lam_fw);
  for (auto& x : shifted) x += 1;
  std::vector<Int> nums, dens;
  for (const Root& alpha : par.levi_positive) {
    nums.push_back(rs.pairing(shifted, alpha));
    dens.push_back(rs.pairing(rs.rho(), alpha));
  }
  BigNat r = product_of_ratios(std::move(nums), std::move(dens));
  if (!r.fits_u64() || r.as_u64() > static_cast<std::uint64_t>(INT64_MAX))
    throw std::overflow_error("levi_dim: rank exceeds 64-bit range");
  return static_cast<Int>(r.as_u64());
}

BigNat g_dim(const RootSystem& rs, const Vec& lam_fw) {
  if (!rs.is_dominant(lam_fw)) throw std::invalid_argument("g_dim: weight is not dominant");
  Vec shifted(lam_fw);
  for (auto& x : shifted) x += 1;
  std::vector<Int> nums, dens;
  for (const Root& alpha : rs.positive_roots()) {
    nums.push_back(rs.pairing(shifted, alpha));
    dens.push_back(rs.pairing(rs.rho(), alpha));
  }
  return product_of_ratios(std::move(nums), std::move(dens));
}

}  // namespace hhgp
