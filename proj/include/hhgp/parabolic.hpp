#pragma once

#include <memory>
#include <optional>
#include <set>
#include <utility>

#include "hhgp/rootsys.hpp"

namespace hhgp {

// Marked Dynkin diagram: the crossed nodes are the simple roots *not* in P.
struct ParabolicData {
  std::shared_ptr<const RootSystem> rs;
  std::set<int> crossed;          // 1-based
  std::vector<int> levi_nodes;    // 1-based, complement of crossed
  std::vector<Root> np_positive;  // NP+, weights of the tangent bundle
  std::vector<Root> levi_positive;
  int dimension = 0;  // |NP+| = dim G/P
  Vec sum_np_simple;
  Vec sum_np_weight;
  // Fano index (|crossed| = 1, or the type-A {1,n} case where the two
  // entries of `bidegree` coincide).
  std::optional<Int> index;
  std::optional<std::pair<Int, Int>> bidegree;  // type-A {1,n} anticanonical bidegree

  const RootSystem& root_system() const { return *rs; }
  // Pairing of a weight (simple-root coordinates) with the grading coweight
  // sum of varpi_k^vee over crossed k: the total coefficient on crossed nodes.
  Int level_of_simple(const Vec& simple) const;
  Int level_of(const Root& r) const { return level_of_simple(r.simple); }
  bool is_levi_dominant(const Vec& weight_coords) const;
  bool is_type_a_adjoint() const;
  // Sum of crossed fundamental weights (the defining dominant weight).
  Vec marked_weight() const;
  std::string name() const;
};

ParabolicData build_parabolic(std::shared_ptr<const RootSystem> rs, std::set<int> crossed);

struct Classification {
  bool minuscule = false;
  bool cominuscule = false;
  bool adjoint = false;
  bool coadjoint = false;
  bool exotic_automorphism = false;  // (B_n,a_n), (C_n,a_1), (G_2,a_1)
  bool abelian_nilradical = false;
  bool heisenberg_nilradical = false;
};
Classification classify(const ParabolicData& par);

struct NilradicalStructure {
  enum class Kind { Abelian, Heisenberg, General } kind;
  int heisenberg_r = 0;  // dim n = 2r+1 in the Heisenberg case
  Int depth = 1;         // max grading level over NP+
};
NilradicalStructure nilradical_structure(const ParabolicData& par);

}  // namespace hhgp
