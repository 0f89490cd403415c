#pragma once

#include <map>
#include <optional>
#include <string>

#include "hhgp/levirep.hpp"
#include "hhgp/weyl.hpp"

namespace hhgp {

struct BWBResult {
  bool vanishes = true;
  int degree = -1;   // cohomological degree when non-vanishing
  Vec dominant;      // highest weight of the resulting G-representation
  BigNat dimension;  // its dimension
};
// Borel--Weil--Bott for the irreducible bundle with Levi-dominant highest
// weight lam; degree computed from the NP+ pairing count and cross-checked
// against the chamber sort.
BWBResult bwb(const ParabolicData& par, const Vec& lam_fw);

struct GrRow {
  Vec weight;      // bundle highest weight, fundamental-weight coordinates
  Vec sum_roots;   // the same weight in simple-root coordinates
  Int level;       // pairing with the grading coweight
  Int rank;        // Levi dimension
  std::optional<int> degree;
  std::optional<Vec> rep;
  std::optional<BigNat> dim;
};
struct GrTable {
  CartanType type;
  std::set<int> crossed;
  int p = 0;
  std::vector<GrRow> rows;  // level blocks descending, peeling order inside
  Int rank_sum() const;
};

GrTable gr_table(const ParabolicData& par, int p, FreudenthalCache& cache,
                 const ResourceLimits& limits = {});
// All p = 0..p_max with a single weight DP pass. cotangent=true uses the
// negated root multiset (exterior powers of Omega); only the Euler
// characteristic bookkeeping consumes it.
std::vector<GrTable> gr_tables(const ParabolicData& par, int p_max, FreudenthalCache& cache,
                               const ResourceLimits& limits = {}, bool cotangent = false);

// Signed E1 dimension sum for gr of the p-th exterior power of the
// cotangent bundle: sum over rows of (-1)^degree * dimension.
BigInt hodge_euler_sum(const GrTable& cotangent_table);

enum class PieceStatus { Definite, PotentiallyCancelled };
struct HigherPiece {
  int p = 0;
  int q = 0;
  Vec rep;
  Int mult = 0;
  PieceStatus status = PieceStatus::PotentiallyCancelled;
};
struct CertainH0 {
  int i = 0;  // total degree (= p for the q=0 channel)
  Vec rep;
  Int mult = 0;
  BigNat dim_each;
};
enum class Verdict { HochschildAffine, NotAffine, Inconclusive };
std::string verdict_name(Verdict v);

struct HKRReport {
  CartanType type;
  std::set<int> crossed;
  Classification cls;
  int dim_gp = 0;
  int p_computed = 0;
  bool truncated = false;
  std::vector<BigNat> h0_dims;  // per p: total degree-0 dimension on E1
  std::vector<HigherPiece> higher;
  std::vector<CertainH0> certain_h0;
  bool computed_affine = false;
  std::optional<std::string> theorem;      // classification flag unlocking vanishing
  std::optional<std::string> closed_form;  // decomposition channel, when available
  std::map<int, std::vector<std::pair<Vec, BigNat>>> closed_form_decomposition;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<HigherPiece> witness;  // first definite higher piece
};
HKRReport hkr_report(const ParabolicData& par, std::optional<int> p_cap = std::nullopt,
                     const ResourceLimits& limits = {});

// Kostant Lie-algebra cohomology of the nilradical: Levi irreps w.0 over
// coset representatives of length i.
struct KostantClass {
  std::vector<int> word;
  int length = 0;
  Vec weight;  // w . 0
  Int levi_rank = 0;
};
std::vector<KostantClass> kostant_cohomology(const ParabolicData& par, const CosetSystem& cs,
                                             int i);

// Twisted sums: pieces w.0 + (iota + j) * xi over length(w) = dim G/P - i,
// where xi is the marked weight (varpi_k, or varpi_1 + varpi_n in the
// type-A submaximal case). restricted drops the rho-singular pieces.
struct KostantPiece {
  std::vector<int> word;
  int length = 0;
  Vec weight;
  bool regular = false;
};
std::vector<KostantPiece> kostant_sum(const ParabolicData& par, const CosetSystem& cs, int i,
                                      int j, bool restricted);

// Closed-form global-section decompositions; per total degree i a list of
// (dominant weight, dimension), multiplicities by repetition.
using ClosedForm = std::map<int, std::vector<std::pair<Vec, BigNat>>>;
ClosedForm cominuscule_decomposition(const ParabolicData& par);
ClosedForm adjoint_decomposition(const ParabolicData& par);

// Betti numbers of the (2r+1)-dimensional Heisenberg Lie algebra.
Int heisenberg_betti(int r, int i);

struct BottWitness {
  int p = 0;
  int q = 0;
  Vec rep;
};
std::optional<BottWitness> bott_vanishing_witness(const HKRReport& report);
std::optional<BottWitness> bott_vanishing_witness(const ParabolicData& par);

struct ScanResult {
  CartanType type;
  int node = 0;
  int dim = 0;
  Classification cls;
  bool exotic = false;
  HKRReport report;
};
std::vector<ScanResult> scan(int max_rank, int workers, std::optional<int> p_cap = std::nullopt,
                             const ResourceLimits& limits = {});

}  // namespace hhgp
