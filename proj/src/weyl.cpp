#include "hhgp/weyl.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace hhgp {

namespace {

struct MatHash {
  std::size_t operator()(const std::vector<Vec>& m) const {
    std::size_t h = 14695981039346656037ull;
    VecHash vh;
    for (const auto& row : m) {
      h ^= vh(row);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

WeylElement identity_element(int rank) {
  WeylElement w;
  w.mat.assign(rank, Vec(rank, 0));
  for (int i = 0; i < rank; ++i) w.mat[i][i] = 1;
  return w;
}

WeylElement simple_reflection_element(const RootSystem& rs, int node) {
  int n = rs.rank();
  if (node < 1 || node > n) throw std::invalid_argument("simple reflection: bad node");
  WeylElement w = identity_element(n);
  int i = node - 1;
  for (int a = 0; a < n; ++a) w.mat[a][i] -= rs.cartan(a, i);
  w.word = {node};
  return w;
}

std::vector<Vec> reflection_matrix(const RootSystem& rs, const Root& beta) {
  int n = rs.rank();
  // s_beta(lam) = lam - <lam, beta^vee> beta; column j of the functional is
  // <varpi_j, beta^vee> = d_j c_j / d_beta.
  Vec f(n);
  for (int j = 0; j < n; ++j) {
    Int num = beta.simple[j] * rs.symmetrizer(j);
    if (num % beta.half_norm != 0) throw std::logic_error("reflection_matrix: non-integral");
    f[j] = num / beta.half_norm;
  }
  std::vector<Vec> m(n, Vec(n, 0));
  for (int a = 0; a < n; ++a) {
    m[a][a] = 1;
    for (int b = 0; b < n; ++b) m[a][b] -= beta.weight[a] * f[b];
  }
  return m;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  std::size_t n = a.mat.size();
  WeylElement r;
  r.mat.assign(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Int aik = a.mat[i][k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r.mat[i][j] += aik * b.mat[k][j];
    }
  r.word = a.word;
  r.word.insert(r.word.end(), b.word.begin(), b.word.end());
  return r;
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  WeylElement r = identity_element(rs.rank());
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
    r = compose(r, simple_reflection_element(rs, *it));
  std::reverse(r.word.begin(), r.word.end());
  return r;
}

Vec apply(const WeylElement& w, const Vec& lam) {
  std::size_t n = w.mat.size();
  if (lam.size() != n) throw std::invalid_argument("apply: dimension mismatch");
  Vec r(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i] += w.mat[i][j] * lam[j];
  return r;
}

Vec dot_action(const WeylElement& w, const Vec& lam, const Vec& rho) {
  std::size_t n = lam.size();
  if (rho.size() != n) throw std::invalid_argument("dot_action: dimension mismatch");
  Vec shifted(n);
  for (std::size_t i = 0; i < n; ++i) shifted[i] = lam[i] + rho[i];
  Vec r = apply(w, shifted);
  for (std::size_t i = 0; i < n; ++i) r[i] -= rho[i];
  return r;
}

Vec dot_zero(const RootSystem& rs, const WeylElement& w) {
  return dot_action(w, Vec(rs.rank(), 0), rs.rho());
}

int length_by_inversions(const RootSystem& rs, const WeylElement& w) {
  int count = 0;
  for (const Root& alpha : rs.positive_roots()) {
    Vec simple = rs.simple_coords(apply(w, alpha.weight));
    if (std::all_of(simple.begin(), simple.end(), [](Int x) { return x <= 0; })) ++count;
  }
  return count;
}

CosetSystem minimal_coset_reps(const RootSystem& rs, const std::set<int>& crossed) {
  int n = rs.rank();
  if (crossed.empty()) throw std::invalid_argument("coset reps: empty crossed set");
  for (int k : crossed)
    if (k < 1 || k > n) throw std::invalid_argument("coset reps: bad node index");

  Vec xi(n, 0);
  for (int k : crossed) xi[k - 1] = 1;

  std::vector<WeylElement> simple_refs;
  for (int i = 1; i <= n; ++i) simple_refs.push_back(simple_reflection_element(rs, i));

  CosetSystem cs;
  cs.crossed = crossed;
  std::unordered_map<Vec, int, VecHash> seen;  // orbit point -> rep index
  // frontier of (orbit point nu = w^{-1}(xi), rep index); extend w -> w s_i
  // whenever <nu, alpha_i^vee> > 0.
  cs.reps.push_back(identity_element(n));
  seen.emplace(xi, 0);
  std::deque<std::pair<Vec, int>> frontier{{xi, 0}};
  cs.by_length.push_back({0});
  while (!frontier.empty()) {
    auto [nu, idx] = frontier.front();
    frontier.pop_front();
    for (int i = 0; i < n; ++i) {
      if (nu[i] <= 0) continue;
      Vec nu2 = rs.reflect(i, nu);
      if (seen.count(nu2)) continue;
      WeylElement next = compose(cs.reps[idx], simple_refs[i]);
      int new_idx = static_cast<int>(cs.reps.size());
      seen.emplace(nu2, new_idx);
      int len = next.length();
      cs.reps.push_back(std::move(next));
      if (static_cast<int>(cs.by_length.size()) <= len) cs.by_length.resize(len + 1);
      cs.by_length[len].push_back(new_idx);
      frontier.emplace_back(std::move(nu2), new_idx);
    }
  }
  return cs;
}

BruhatGraph bruhat_graph(const RootSystem& rs, const CosetSystem& cs) {
  BruhatGraph g;
  int n = rs.rank();
  g.lengths.reserve(cs.reps.size());
  for (const auto& w : cs.reps) {
    g.lengths.push_back(w.length());
    g.words.push_back(w.word);
  }
  // Precompute reflection matrices keyed for lookup, remembering which are
  // simple (for labels).
  std::unordered_map<std::vector<Vec>, int, MatHash> refl;  // matrix -> node or 0
  for (const Root& beta : rs.positive_roots()) {
    int node = 0;
    if (beta.height == 1) {
      for (int j = 0; j < n; ++j)
        if (beta.simple[j] == 1) node = j + 1;
    }
    refl.emplace(reflection_matrix(rs, beta), node);
  }
  std::vector<WeylElement> inverses;
  inverses.reserve(cs.reps.size());
  for (const auto& w : cs.reps) inverses.push_back(inverse(rs, w));

  for (std::size_t a = 0; a < cs.reps.size(); ++a) {
    for (std::size_t b = 0; b < cs.reps.size(); ++b) {
      if (g.lengths[b] != g.lengths[a] + 1) continue;
      // covering iff source^{-1} * target is a reflection
      WeylElement t = compose(inverses[a], cs.reps[b]);
      auto it = refl.find(t.mat);
      if (it == refl.end()) continue;
      g.edges.push_back(BruhatEdge{static_cast<int>(a), static_cast<int>(b), it->second});
    }
  }
  return g;
}

std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs, std::size_t limit) {
  int n = rs.rank();
  std::vector<WeylElement> simple_refs;
  for (int i = 1; i <= n; ++i) simple_refs.push_back(simple_reflection_element(rs, i));
  std::vector<WeylElement> out{identity_element(n)};
  std::unordered_map<std::vector<Vec>, int, MatHash> seen{{out[0].mat, 0}};
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    for (int i = 0; i < n; ++i) {
      WeylElement next = compose(out[idx], simple_refs[i]);
      if (seen.count(next.mat)) continue;
      seen.emplace(next.mat, static_cast<int>(out.size()));
      out.push_back(std::move(next));
      if (out.size() > limit) throw std::runtime_error("enumerate_weyl_group: group too large");
    }
  }
  return out;
}

}  // namespace hhgp
