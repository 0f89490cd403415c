#include "hhgp/hkr.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace hhgp {

BWBResult bwb(const ParabolicData& par, const Vec& lam_fw) {
  const RootSystem& rs = *par.rs;
  if (!par.is_levi_dominant(lam_fw))
    throw std::invalid_argument("bwb: weight is not Levi-dominant");
  auto chamber = rs.regular_dominant_after_rho(lam_fw);
  BWBResult res;
  if (!chamber.regular) return res;

  Vec shifted(lam_fw);
  for (auto& x : shifted) x += 1;
  int neg = 0;
  for (const Root& alpha : par.np_positive)
    if (rs.pairing(shifted, alpha) < 0) ++neg;
  if (neg != chamber.length)
    throw std::logic_error("bwb: degree mismatch between pairing count and chamber sort");

  res.vanishes = false;
  res.degree = neg;
  res.dominant = std::move(chamber.dominant);
  res.dimension = g_dim(rs, res.dominant);
  return res;
}

Int GrTable::rank_sum() const {
  Int s = 0;
  for (const auto& r : rows) s += r.rank;
  return s;
}

namespace {

GrTable assemble_table(const ParabolicData& par, int p,
                       const std::vector<std::pair<Int, WeightMultiset>>& blocks,
                       FreudenthalCache& cache) {
  GrTable t;
  t.type = par.rs->type();
  t.crossed = par.crossed;
  t.p = p;
  for (const auto& [level, wm] : blocks) {
    Decomposition dec = decompose(par, wm, cache);
    for (const auto& [irrep, mult] : dec.pieces) {
      GrRow row;
      row.weight = irrep.weight;
      row.sum_roots = irrep.simple;
      row.level = level;
      row.rank = irrep.rank;
      BWBResult b = bwb(par, irrep.weight);
      if (!b.vanishes) {
        row.degree = b.degree;
        row.rep = b.dominant;
        row.dim = b.dimension;
      }
      for (Int m = 0; m < mult; ++m) t.rows.push_back(row);
    }
  }
  return t;
}

}  // namespace

GrTable gr_table(const ParabolicData& par, int p, FreudenthalCache& cache,
                 const ResourceLimits& limits) {
  auto blocks = exterior_power_weights(par, p, limits);
  return assemble_table(par, p, blocks, cache);
}

std::vector<GrTable> gr_tables(const ParabolicData& par, int p_max, FreudenthalCache& cache,
                               const ResourceLimits& limits, bool cotangent) {
  std::vector<Root> roots = par.np_positive;
  if (cotangent) {
    for (Root& r : roots) {
      for (auto& x : r.simple) x = -x;
      for (auto& x : r.weight) x = -x;
    }
  }
  auto per_p = exterior_power_table(par, p_max, roots, limits);
  std::vector<GrTable> out;
  out.reserve(p_max + 1);
  for (int p = 0; p <= p_max; ++p) out.push_back(assemble_table(par, p, per_p[p], cache));
  return out;
}

BigInt hodge_euler_sum(const GrTable& t) {
  BigInt sum(0);
  for (const auto& row : t.rows) {
    if (!row.degree) continue;
    sum.add(BigInt(*row.dim, *row.degree % 2 != 0));
  }
  return sum;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::HochschildAffine: return "HochschildAffine";
    case Verdict::NotAffine: return "NotAffine";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

HKRReport hkr_report(const ParabolicData& par, std::optional<int> p_cap,
                     const ResourceLimits& limits) {
  HKRReport rep;
  rep.type = par.rs->type();
  rep.crossed = par.crossed;
  rep.cls = classify(par);
  rep.dim_gp = par.dimension;
  rep.p_computed = p_cap ? std::min(*p_cap, par.dimension) : par.dimension;
  rep.truncated = rep.p_computed < par.dimension;

  FreudenthalCache cache(par);
  auto tables = gr_tables(par, rep.p_computed, cache, limits);

  rep.computed_affine = true;
  for (const GrTable& t : tables) {
    BigNat h0(0);
    // isotypic multiplicities per q within this p's spectral sequence
    std::map<Vec, std::map<int, Int>> isotypic;
    for (const auto& row : t.rows) {
      if (!row.degree) continue;
      isotypic[*row.rep][*row.degree] += 1;
      if (*row.degree == 0) h0.add(*row.dim);
    }
    rep.h0_dims.push_back(std::move(h0));
    for (const auto& [w, by_q] : isotypic) {
      auto mult_at = [&](int q) {
        auto it = by_q.find(q);
        return it == by_q.end() ? Int(0) : it->second;
      };
      Int m0 = mult_at(0), m1 = mult_at(1);
      if (m0 - m1 > 0)
        rep.certain_h0.push_back(CertainH0{t.p, w, m0 - m1, g_dim(*par.rs, w)});
      for (const auto& [q, m] : by_q) {
        if (q == 0) continue;
        rep.computed_affine = false;
        HigherPiece piece;
        piece.p = t.p;
        piece.q = q;
        piece.rep = w;
        piece.mult = m;
        piece.status = (m > mult_at(q - 1) + mult_at(q + 1)) ? PieceStatus::Definite
                                                             : PieceStatus::PotentiallyCancelled;
        rep.higher.push_back(std::move(piece));
      }
    }
  }
  if (rep.truncated) rep.computed_affine = false;

  if (rep.cls.cominuscule) rep.theorem = "cominuscule";
  else if (rep.cls.minuscule) rep.theorem = "minuscule";
  else if (rep.cls.adjoint) rep.theorem = "adjoint";
  else if (rep.cls.coadjoint) rep.theorem = "coadjoint";

  for (const auto& piece : rep.higher) {
    if (piece.status == PieceStatus::Definite) {
      rep.witness = piece;
      break;
    }
  }

  if (rep.witness) {
    rep.verdict = Verdict::NotAffine;
  } else if (rep.computed_affine || rep.theorem) {
    rep.verdict = Verdict::HochschildAffine;
  } else {
    rep.verdict = Verdict::Inconclusive;
  }

  if (rep.cls.cominuscule) {
    rep.closed_form = "cominuscule";
    rep.closed_form_decomposition = cominuscule_decomposition(par);
  } else if (rep.cls.adjoint) {
    rep.closed_form = "adjoint";
    rep.closed_form_decomposition = adjoint_decomposition(par);
  }
  return rep;
}

std::vector<KostantClass> kostant_cohomology(const ParabolicData& par, const CosetSystem& cs,
                                             int i) {
  if (i < 0 || i > par.dimension)
    throw std::invalid_argument("kostant_cohomology: degree out of range");
  std::vector<KostantClass> out;
  if (i >= static_cast<int>(cs.by_length.size())) return out;
  for (int idx : cs.by_length[i]) {
    const WeylElement& w = cs.reps[idx];
    KostantClass k;
    k.word = w.word;
    k.length = i;
    k.weight = dot_zero(*par.rs, w);
    k.levi_rank = levi_dim(par, k.weight);
    out.push_back(std::move(k));
  }
  return out;
}

std::vector<KostantPiece> kostant_sum(const ParabolicData& par, const CosetSystem& cs, int i,
                                      int j, bool restricted) {
  if (par.crossed.size() != 1 && !par.is_type_a_adjoint())
    throw std::invalid_argument(
        "kostant_sum: requires a maximal parabolic or the type-A adjoint case");
  if (!par.index)
    throw std::logic_error("kostant_sum: undefined index");
  const RootSystem& rs = *par.rs;
  Vec xi = par.marked_weight();
  Int iota = *par.index;
  int target_len = par.dimension - i;
  std::vector<KostantPiece> out;
  if (target_len < 0 || target_len >= static_cast<int>(cs.by_length.size())) return out;
  for (int idx : cs.by_length[target_len]) {
    const WeylElement& w = cs.reps[idx];
    KostantPiece piece;
    piece.word = w.word;
    piece.length = target_len;
    piece.weight = dot_zero(rs, w);
    for (int a = 0; a < rs.rank(); ++a) piece.weight[a] += (iota + j) * xi[a];
    piece.regular = rs.regular_dominant_after_rho(piece.weight).regular;
    if (restricted && !piece.regular) continue;
    out.push_back(std::move(piece));
  }
  return out;
}

namespace {

void append_regular_pieces(const ParabolicData& par, const CosetSystem& cs, int i, int j,
                           std::vector<std::pair<Vec, BigNat>>& out) {
  for (const KostantPiece& piece : kostant_sum(par, cs, i, j, /*restricted=*/true)) {
    // regular pieces of these sums are already dominant
    if (!par.rs->is_dominant(piece.weight))
      throw std::logic_error("restricted Kostant piece is not dominant");
    out.emplace_back(piece.weight, g_dim(*par.rs, piece.weight));
  }
}

}  // namespace

ClosedForm cominuscule_decomposition(const ParabolicData& par) {
  if (!classify(par).cominuscule)
    throw std::invalid_argument("cominuscule_decomposition: parabolic is not cominuscule");
  CosetSystem cs = minimal_coset_reps(*par.rs, par.crossed);
  ClosedForm out;
  for (int i = 0; i <= par.dimension; ++i) {
    std::vector<std::pair<Vec, BigNat>> pieces;
    append_regular_pieces(par, cs, i, 0, pieces);
    // in the cominuscule case every piece is regular: check we lost nothing
    if (pieces.size() != cs.by_length[par.dimension - i].size())
      throw std::logic_error("cominuscule decomposition: unexpected singular piece");
    out.emplace(i, std::move(pieces));
  }
  return out;
}

ClosedForm adjoint_decomposition(const ParabolicData& par) {
  Classification cls = classify(par);
  if (!cls.adjoint)
    throw std::invalid_argument("adjoint_decomposition: parabolic is not adjoint");
  CosetSystem cs = minimal_coset_reps(*par.rs, par.crossed);
  int dim = par.dimension;
  int r = (dim - 1) / 2;
  ClosedForm out;
  for (int i = 0; i <= dim; ++i) {
    std::vector<std::pair<Vec, BigNat>> pieces;
    if (i <= r) {
      for (int p = 0; p <= i / 2; ++p) append_regular_pieces(par, cs, i - 2 * p, p, pieces);
      for (int p = 0; p <= (i - 1) / 2; ++p)
        append_regular_pieces(par, cs, i - 2 * p - 1, p + 1, pieces);
    } else {
      for (int p = 0; p <= (2 * r - i) / 2; ++p)
        append_regular_pieces(par, cs, i + 1 + 2 * p, -p - 1, pieces);
      for (int p = 0; p <= (2 * r - i + 1) / 2; ++p)
        append_regular_pieces(par, cs, i + 2 * p, -p, pieces);
    }
    out.emplace(i, std::move(pieces));
  }
  return out;
}

Int heisenberg_betti(int r, int i) {
  if (r < 1) throw std::invalid_argument("heisenberg_betti: r must be >= 1");
  if (i < 0 || i > 2 * r + 1)
    throw std::invalid_argument("heisenberg_betti: i out of range [0, 2r+1]");
  auto binom = [](int n, int k) -> Int {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
  };
  if (i <= r) return binom(2 * r, i) - binom(2 * r, i - 2);
  return binom(2 * r, i - 1) - binom(2 * r, i + 1);
}

std::optional<BottWitness> bott_vanishing_witness(const HKRReport& report) {
  if (!report.witness) return std::nullopt;
  return BottWitness{report.witness->p, report.witness->q, report.witness->rep};
}

std::optional<BottWitness> bott_vanishing_witness(const ParabolicData& par) {
  return bott_vanishing_witness(hkr_report(par));
}

std::vector<ScanResult> scan(int max_rank, int workers, std::optional<int> p_cap,
                             const ResourceLimits& limits) {
  if (max_rank < 2) throw std::invalid_argument("scan: max_rank must be >= 2");
  std::vector<std::pair<CartanType, int>> tasks;
  for (int n = 1; n <= max_rank; ++n) {
    for (Series s : {Series::A, Series::B, Series::C, Series::D, Series::E, Series::F, Series::G}) {
      CartanType ct{s, n};
      try {
        ct.validate();
      } catch (const std::invalid_argument&) {
        continue;
      }
      for (int k = 1; k <= n; ++k) tasks.emplace_back(ct, k);
    }
  }
  std::vector<ScanResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::string error_message;
  std::mutex error_mu;
  auto work = [&]() {
    while (true) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= tasks.size() || failed.load()) return;
      const auto& [ct, node] = tasks[idx];
      try {
        auto rs = std::make_shared<const RootSystem>(ct);
        ParabolicData par = build_parabolic(rs, {node});
        ScanResult res;
        res.type = ct;
        res.node = node;
        res.dim = par.dimension;
        res.cls = classify(par);
        res.exotic = res.cls.exotic_automorphism;
        res.report = hkr_report(par, p_cap, limits);
        results[idx] = std::move(res);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mu);
        error_message = e.what();
        failed.store(true);
        return;
      }
    }
  };
  int nthreads = std::max(1, workers);
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (failed.load()) throw std::runtime_error("scan failed: " + error_message);
  return results;
}

}  // namespace hhgp
