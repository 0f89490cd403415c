#pragma once

#include <set>
#include <vector>

#include "hhgp/rootsys.hpp"

namespace hhgp {

// Group element stored as its integer matrix on fundamental-weight
// coordinates together with one reduced word (1-based reflection indices).
// Equality is matrix equality; words are bookkeeping.
struct WeylElement {
  std::vector<Vec> mat;
  std::vector<int> word;
  int length() const { return static_cast<int>(word.size()); }
  bool operator==(const WeylElement& o) const { return mat == o.mat; }
};

WeylElement identity_element(int rank);
WeylElement simple_reflection_element(const RootSystem& rs, int node);  // 1-based
// Matrix of the reflection in an arbitrary root.
std::vector<Vec> reflection_matrix(const RootSystem& rs, const Root& beta);

WeylElement compose(const WeylElement& a, const WeylElement& b);  // a then... (a*b)(x)=a(b(x))
WeylElement inverse(const RootSystem& rs, const WeylElement& w);

Vec apply(const WeylElement& w, const Vec& lam);
// w . lam = w(lam + rho) - rho
Vec dot_action(const WeylElement& w, const Vec& lam, const Vec& rho);
Vec dot_zero(const RootSystem& rs, const WeylElement& w);

// #{alpha > 0 : w(alpha) < 0}; equals l(w).
int length_by_inversions(const RootSystem& rs, const WeylElement& w);

// Minimal length coset representatives W^P for the Levi generated by the
// complement of `crossed` (1-based crossed nodes): the w with
// w^{-1}(alpha_j) > 0 for every Levi node j. Enumerated as the orbit of
// xi = sum of crossed fundamental weights under the weak order.
struct CosetSystem {
  std::set<int> crossed;
  std::vector<WeylElement> reps;             // sorted by (length, discovery)
  std::vector<std::vector<int>> by_length;   // rep indices per length
  int max_length() const { return static_cast<int>(by_length.size()) - 1; }
};
CosetSystem minimal_coset_reps(const RootSystem& rs, const std::set<int>& crossed);

// Covering relations of the Bruhat order restricted to W^P. An edge is
// labelled by i when target = source * s_i; other covering edges keep
// label 0.
struct BruhatEdge {
  int source;
  int target;
  int label;
};
struct BruhatGraph {
  std::vector<int> lengths;
  std::vector<std::vector<int>> words;
  std::vector<BruhatEdge> edges;
};
BruhatGraph bruhat_graph(const RootSystem& rs, const CosetSystem& cs);

// Full group enumeration; only sensible at small rank. Used by brute-force
// cross-checks and kept out of the production paths.
std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs,
                                              std::size_t limit = 2000000);

}  // namespace hhgp
