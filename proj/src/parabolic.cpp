#include "hhgp/parabolic.hpp"

#include <algorithm>

namespace hhgp {

Int ParabolicData::level_of_simple(const Vec& simple) const {
  Int s = 0;
  for (int k : crossed) s += simple[k - 1];
  return s;
}

bool ParabolicData::is_levi_dominant(const Vec& w) const {
  for (int j : levi_nodes)
    if (w[j - 1] < 0) return false;
  return true;
}

bool ParabolicData::is_type_a_adjoint() const {
  int n = rs->rank();
  return rs->type().series == Series::A && n >= 2 && crossed == std::set<int>{1, n};
}

Vec ParabolicData::marked_weight() const {
  Vec lam(rs->rank(), 0);
  for (int k : crossed) lam[k - 1] = 1;
  return lam;
}

std::string ParabolicData::name() const {
  std::string s = rs->type().name() + "/";
  bool first = true;
  for (int k : crossed) {
    if (!first) s += ",";
    s += std::to_string(k);
    first = false;
  }
  return s;
}

ParabolicData build_parabolic(std::shared_ptr<const RootSystem> rs, std::set<int> crossed) {
  if (crossed.empty()) throw std::invalid_argument("build_parabolic: empty crossed set");
  int n = rs->rank();
  for (int k : crossed)
    if (k < 1 || k > n)
      throw std::invalid_argument("build_parabolic: node " + std::to_string(k) +
                                  " out of range for " + rs->type().name());
  ParabolicData par;
  par.rs = std::move(rs);
  par.crossed = std::move(crossed);
  for (int j = 1; j <= n; ++j)
    if (!par.crossed.count(j)) par.levi_nodes.push_back(j);

  par.sum_np_simple.assign(n, 0);
  for (const Root& r : par.rs->positive_roots()) {
    if (par.level_of(r) > 0) {
      par.np_positive.push_back(r);
      for (int j = 0; j < n; ++j) par.sum_np_simple[j] += r.simple[j];
    } else {
      par.levi_positive.push_back(r);
    }
  }
  par.dimension = static_cast<int>(par.np_positive.size());
  par.sum_np_weight = par.rs->weight_coords(par.sum_np_simple);

  if (par.crossed.size() == 1) {
    int k = *par.crossed.begin();
    for (int j = 0; j < n; ++j) {
      if (j != k - 1 && par.sum_np_weight[j] != 0)
        throw std::logic_error("anticanonical weight not a multiple of varpi_k");
    }
    par.index = par.sum_np_weight[k - 1];
  } else if (par.is_type_a_adjoint()) {
    for (int j = 1; j + 1 < n; ++j) {
      if (par.sum_np_weight[j] != 0)
        throw std::logic_error("type-A adjoint anticanonical weight not supported on {1,n}");
    }
    par.bidegree = std::make_pair(par.sum_np_weight[0], par.sum_np_weight[n - 1]);
    if (par.bidegree->first == par.bidegree->second) par.index = par.bidegree->first;
  }
  return par;
}

Classification classify(const ParabolicData& par) {
  const RootSystem& rs = *par.rs;
  Classification c;
  Vec lam = par.marked_weight();

  c.minuscule = true;
  c.cominuscule = true;
  for (const Root& alpha : rs.positive_roots()) {
    if (rs.pairing(lam, alpha) > 1) c.minuscule = false;
    if (par.level_of(alpha) > 1) c.cominuscule = false;
  }
  c.adjoint = (lam == rs.highest_root().weight);
  c.coadjoint = (lam == rs.highest_short_root().weight);

  if (par.crossed.size() == 1) {
    int k = *par.crossed.begin();
    Series s = rs.type().series;
    c.exotic_automorphism = (s == Series::B && k == rs.rank()) ||
                            (s == Series::C && k == 1) ||
                            (s == Series::G && k == 1);
  }

  NilradicalStructure ns = nilradical_structure(par);
  c.abelian_nilradical = ns.kind == NilradicalStructure::Kind::Abelian;
  c.heisenberg_nilradical = ns.kind == NilradicalStructure::Kind::Heisenberg;
  return c;
}

NilradicalStructure nilradical_structure(const ParabolicData& par) {
  Int depth = 0;
  int at_two = 0;
  bool theta_at_two = false;
  for (const Root& r : par.np_positive) {
    Int lv = par.level_of(r);
    depth = std::max(depth, lv);
    if (lv == 2) {
      ++at_two;
      if (r.weight == par.rs->highest_root().weight) theta_at_two = true;
    }
  }
  NilradicalStructure ns;
  ns.depth = depth;
  if (depth <= 1) {
    ns.kind = NilradicalStructure::Kind::Abelian;
  } else if (depth == 2 && at_two == 1 && theta_at_two && par.dimension % 2 == 1) {
    ns.kind = NilradicalStructure::Kind::Heisenberg;
    ns.heisenberg_r = (par.dimension - 1) / 2;
  } else {
    ns.kind = NilradicalStructure::Kind::General;
  }
  return ns;
}

}  // namespace hhgp
