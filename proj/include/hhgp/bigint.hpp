#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hhgp {

// Arbitrary-precision unsigned integer on base-1e9 limbs. The engine only
// needs exact products of small factors (Weyl dimension formula) and sums,
// so the operation set is deliberately small.
class BigNat {
public:
  BigNat() : limbs_{0} {}
  BigNat(std::uint64_t v);

  static BigNat from_string(const std::string& s);

  BigNat& mul_small(std::uint64_t m);  // m < 2^32
  BigNat& add(const BigNat& other);
  // Subtract other from *this; throws if other > *this.
  BigNat& sub(const BigNat& other);

  static int cmp(const BigNat& a, const BigNat& b);
  bool operator==(const BigNat& o) const { return cmp(*this, o) == 0; }
  bool operator!=(const BigNat& o) const { return !(*this == o); }
  bool operator<(const BigNat& o) const { return cmp(*this, o) < 0; }

  bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }
  bool fits_u64() const;
  std::uint64_t as_u64() const;
  std::string str() const;

private:
  static constexpr std::uint32_t kBase = 1000000000u;
  std::vector<std::uint32_t> limbs_;  // little-endian
  void trim();
};

// Signed wrapper, used for the alternating Euler sums.
struct BigInt {
  bool negative = false;
  BigNat mag;

  BigInt() = default;
  BigInt(long long v);
  explicit BigInt(BigNat m, bool neg = false);

  BigInt& add(const BigInt& other);
  BigInt& sub(const BigInt& other);
  bool operator==(const BigInt& o) const;
  bool is_zero() const { return mag.is_zero(); }
  std::string str() const;
};

}  // namespace hhgp
