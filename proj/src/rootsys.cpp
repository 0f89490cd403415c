#include "hhgp/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_set>

namespace hhgp {

std::optional<CartanType> CartanType::parse(std::string_view s) {
  if (s.size() < 2) return std::nullopt;
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (c < 'A' || c > 'G') return std::nullopt;
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    rank = rank * 10 + (s[i] - '0');
    if (rank > 64) return std::nullopt;
  }
  if (rank == 0) return std::nullopt;
  return CartanType{static_cast<Series>(c), rank};
}

std::string CartanType::name() const {
  return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

void CartanType::validate() const {
  auto fail = [this](const char* constraint) {
    throw std::invalid_argument("invalid rank for type " + name() + ": requires " + constraint);
  };
  switch (series) {
    case Series::A: if (rank < 1) fail("n >= 1"); break;
    case Series::B: if (rank < 2) fail("n >= 2"); break;
    case Series::C: if (rank < 2) fail("n >= 2"); break;
    case Series::D: if (rank < 3) fail("n >= 3"); break;
    case Series::E: if (rank < 6 || rank > 8) fail("n in {6,7,8}"); break;
    case Series::F: if (rank != 4) fail("n = 4"); break;
    case Series::G: if (rank != 2) fail("n = 2"); break;
  }
}

std::size_t expected_positive_count(const CartanType& ct) {
  std::size_t n = static_cast<std::size_t>(ct.rank);
  switch (ct.series) {
    case Series::A: return n * (n + 1) / 2;
    case Series::B:
    case Series::C: return n * n;
    case Series::D: return n * (n - 1);
    case Series::E: return ct.rank == 6 ? 36 : (ct.rank == 7 ? 63 : 120);
    case Series::F: return 24;
    case Series::G: return 6;
  }
  return 0;
}

RootSystem::RootSystem(CartanType ct) : ct_(ct) {
  ct_.validate();
  build_cartan();
  generate_positive_roots();
  invert_cartan();
  rho_.assign(ct_.rank, 1);
}

void RootSystem::build_cartan() {
  int n = ct_.rank;
  cartan_.assign(n, Vec(n, 0));
  d_.assign(n, 1);
  for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
  auto chain = [&](int i, int j) { cartan_[i][j] = cartan_[j][i] = -1; };
  switch (ct_.series) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case Series::B:
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      cartan_[n - 1][n - 2] = -2;  // <alpha_{n-1}, alpha_n^vee> = -2
      for (int i = 0; i + 1 < n; ++i) d_[i] = 2;
      break;
    case Series::C:
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      cartan_[n - 2][n - 1] = -2;
      d_[n - 1] = 2;
      break;
    case Series::D:
      for (int i = 0; i + 1 < n - 2; ++i) chain(i, i + 1);
      chain(n - 3, n - 2);
      chain(n - 3, n - 1);
      break;
    case Series::E:
      // Bourbaki: node 2 hangs off node 4; chain 1-3-4-5-6(-7)(-8).
      chain(0, 2);
      chain(1, 3);
      chain(2, 3);
      for (int i = 3; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case Series::F:
      chain(0, 1);
      cartan_[1][2] = -1;
      cartan_[2][1] = -2;
      chain(2, 3);
      d_[0] = d_[1] = 2;
      break;
    case Series::G:
      cartan_[0][1] = -3;
      cartan_[1][0] = -1;
      d_[1] = 3;
      break;
  }
}

Vec RootSystem::weight_coords(const Vec& simple_coords) const {
  int n = ct_.rank;
  if (static_cast<int>(simple_coords.size()) != n)
    throw std::invalid_argument("weight_coords: dimension mismatch");
  Vec w(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w[i] += cartan_[i][j] * simple_coords[j];
  return w;
}

void RootSystem::generate_positive_roots() {
  int n = ct_.rank;
  std::unordered_set<Vec, VecHash> seen;
  std::vector<Vec> by_height;  // flat list, processed in height order
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    seen.insert(e);
    by_height.push_back(e);
  }
  for (std::size_t idx = 0; idx < by_height.size(); ++idx) {
    Vec beta = by_height[idx];
    for (int i = 0; i < n; ++i) {
      // alpha_i-string through beta: q = p - <beta, alpha_i^vee>
      Int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += cartan_[i][j] * beta[j];
      Int p = 0;
      Vec down = beta;
      while (true) {
        down[i] -= 1;
        bool zero = std::all_of(down.begin(), down.end(), [](Int x) { return x == 0; });
        bool neg = std::any_of(down.begin(), down.end(), [](Int x) { return x < 0; });
        if (zero || (neg && !zero)) break;
        if (seen.count(down)) ++p;
        else break;
      }
      if (p - pairing > 0) {
        Vec up = beta;
        up[i] += 1;
        if (seen.insert(up).second) by_height.push_back(up);
      }
    }
  }
  if (by_height.size() != expected_positive_count(ct_))
    throw std::logic_error("positive root count mismatch for " + ct_.name());

  auto half_norm = [&](const Vec& c) {
    Int s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += c[i] * c[j] * d_[i] * cartan_[i][j];
    return s / 2;
  };
  pos_.reserve(by_height.size());
  std::sort(by_height.begin(), by_height.end(), [](const Vec& a, const Vec& b) {
    Int ha = std::accumulate(a.begin(), a.end(), Int(0));
    Int hb = std::accumulate(b.begin(), b.end(), Int(0));
    if (ha != hb) return ha < hb;
    return a < b;
  });
  for (const Vec& c : by_height) {
    Root r;
    r.simple = c;
    r.weight = weight_coords(c);
    r.half_norm = half_norm(c);
    r.height = std::accumulate(c.begin(), c.end(), Int(0));
    pos_.push_back(std::move(r));
  }
  theta_long_ = static_cast<int>(pos_.size()) - 1;  // unique max height
  for (std::size_t i = pos_.size(); i-- > 0;) {
    if (pos_[i].half_norm == 1) {
      theta_short_ = static_cast<int>(i);
      break;
    }
  }
}

void RootSystem::invert_cartan() {
  // Fraction-based Gaussian elimination; entries stay tiny at rank <= 8.
  int n = ct_.rank;
  struct Frac {
    Int num, den;
    void reduce() {
      Int g = std::gcd(num < 0 ? -num : num, den < 0 ? -den : den);
      if (g > 1) { num /= g; den /= g; }
      if (den < 0) { num = -num; den = -den; }
    }
  };
  std::vector<std::vector<Frac>> a(n, std::vector<Frac>(2 * n, Frac{0, 1}));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Frac{cartan_[i][j], 1};
    a[i][n + i] = Frac{1, 1};
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (a[piv][col].num == 0) ++piv;
    std::swap(a[piv], a[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].num == 0) continue;
      Frac f{a[r][col].num * a[col][col].den, a[r][col].den * a[col][col].num};
      f.reduce();
      for (int c = col; c < 2 * n; ++c) {
        Frac t{f.num * a[col][c].num, f.den * a[col][c].den};
        t.reduce();
        Frac res{a[r][c].num * t.den - t.num * a[r][c].den, a[r][c].den * t.den};
        res.reduce();
        a[r][c] = res;
      }
    }
  }
  Int det = 1;
  for (int i = 0; i < n; ++i) det = det * a[i][i].num / a[i][i].den;
  cartan_det_ = det < 0 ? -det : det;
  cartan_adjugate_.assign(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // inverse entry = a[i][n+j] / a[i][i]; adjugate = det * inverse
      Int num = a[i][n + j].num * cartan_det_ * a[i][i].den;
      Int den = a[i][n + j].den * a[i][i].num;
      if (num % den != 0) throw std::logic_error("cartan adjugate not integral");
      cartan_adjugate_[i][j] = num / den;
    }
  }
}

Vec RootSystem::simple_coords(const Vec& w) const {
  int n = ct_.rank;
  if (static_cast<int>(w.size()) != n)
    throw std::invalid_argument("simple_coords: dimension mismatch");
  Vec x(n, 0);
  for (int i = 0; i < n; ++i) {
    Int s = 0;
    for (int j = 0; j < n; ++j) s += cartan_adjugate_[i][j] * w[j];
    if (s % cartan_det_ != 0)
      throw std::invalid_argument("simple_coords: weight not in root lattice");
    x[i] = s / cartan_det_;
  }
  return x;
}

Int RootSystem::pairing(const Vec& lam, const Root& alpha) const {
  int n = ct_.rank;
  if (static_cast<int>(lam.size()) != n)
    throw std::invalid_argument("pairing: dimension mismatch");
  Int num = 0;
  for (int j = 0; j < n; ++j) num += alpha.simple[j] * d_[j] * lam[j];
  if (num % alpha.half_norm != 0) throw std::logic_error("pairing: non-integral");
  return num / alpha.half_norm;
}

Vec RootSystem::reflect(int i, Vec lam) const {
  Int c = lam[i];
  for (int a = 0; a < ct_.rank; ++a) lam[a] -= c * cartan_[a][i];
  return lam;
}

bool RootSystem::is_dominant(const Vec& lam) const {
  return std::all_of(lam.begin(), lam.end(), [](Int x) { return x >= 0; });
}

bool RootSystem::is_strictly_dominant(const Vec& lam) const {
  return std::all_of(lam.begin(), lam.end(), [](Int x) { return x > 0; });
}

RootSystem::Chamber RootSystem::regular_dominant_after_rho(const Vec& lam) const {
  int n = ct_.rank;
  if (static_cast<int>(lam.size()) != n)
    throw std::invalid_argument("regular_dominant_after_rho: dimension mismatch");
  Vec mu(n);
  for (int i = 0; i < n; ++i) mu[i] = lam[i] + 1;
  int steps = 0;
  while (true) {
    int i = -1;
    for (int a = 0; a < n; ++a) {
      if (mu[a] < 0) { i = a; break; }
    }
    if (i < 0) break;
    mu = reflect(i, std::move(mu));
    ++steps;
  }
  bool regular = std::all_of(mu.begin(), mu.end(), [](Int x) { return x > 0; });
  Vec dom(n);
  for (int i = 0; i < n; ++i) dom[i] = mu[i] - 1;
  return Chamber{regular, steps, std::move(dom)};
}

}  // namespace hhgp
