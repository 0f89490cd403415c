#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hhgp {

using Int = long long;
using Vec = std::vector<Int>;

struct VecHash {
  std::size_t operator()(const Vec& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  Series series;
  int rank;

  // Accepts "A3", "b4", "E6"; rejects anything else (including product
  // notation like "A1xA1", which callers report separately).
  static std::optional<CartanType> parse(std::string_view s);
  std::string name() const;
  // Throws std::invalid_argument naming the violated rank constraint.
  void validate() const;
};

// A root carried in both coordinate systems used by the tables.
struct Root {
  Vec simple;     // coefficients on the simple roots
  Vec weight;     // coefficients on the fundamental weights
  Int half_norm;  // (alpha,alpha)/2, short roots normalised to 1
  Int height;     // sum of simple coefficients
};

class RootSystem {
public:
  explicit RootSystem(CartanType ct);

  const CartanType& type() const { return ct_; }
  int rank() const { return ct_.rank; }

  // cartan(i,j) = <alpha_j, alpha_i^vee>, 0-based.
  Int cartan(int i, int j) const { return cartan_[i][j]; }
  Int symmetrizer(int i) const { return d_[i]; }

  const std::vector<Root>& positive_roots() const { return pos_; }
  const Root& highest_root() const { return pos_[theta_long_]; }        // Theta
  const Root& highest_short_root() const { return pos_[theta_short_]; }  // theta
  const Vec& rho() const { return rho_; }

  Vec weight_coords(const Vec& simple_coords) const;  // C * x
  // C^{-1} * w; throws if w is not in the root lattice.
  Vec simple_coords(const Vec& weight_coords) const;

  // <lam, alpha^vee> for lam in fundamental-weight coordinates.
  Int pairing(const Vec& lam, const Root& alpha) const;
  // s_i(lam), 0-based node index.
  Vec reflect(int i, Vec lam) const;

  bool is_dominant(const Vec& lam) const;
  bool is_strictly_dominant(const Vec& lam) const;

  struct Chamber {
    bool regular;
    int length;    // l(w) for the sorting element (meaningful when regular)
    Vec dominant;  // w(lam + rho) - rho
  };
  // Applies Weyl reflections to lam + rho until dominant.
  Chamber regular_dominant_after_rho(const Vec& lam) const;

private:
  CartanType ct_;
  std::vector<Vec> cartan_;
  Vec d_;
  std::vector<Root> pos_;
  Vec rho_;
  int theta_long_ = -1;
  int theta_short_ = -1;
  std::vector<Vec> cartan_adjugate_;
  Int cartan_det_ = 1;

  void build_cartan();
  void generate_positive_roots();
  void invert_cartan();
};

// Number of positive roots each type must produce.
std::size_t expected_positive_count(const CartanType& ct);

}  // namespace hhgp
