#include "hhgp/bigint.hpp"

#include <algorithm>

namespace hhgp {

BigNat::BigNat(std::uint64_t v) {
  do {
    limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
    v /= kBase;
  } while (v != 0);
}

BigNat BigNat::from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("BigNat: empty string");
  BigNat r(0);
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("BigNat: bad digit");
    r.mul_small(10);
    r.add(BigNat(static_cast<std::uint64_t>(c - '0')));
  }
  return r;
}

void BigNat::trim() {
  while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

BigNat& BigNat::mul_small(std::uint64_t m) {
  if (m >= kBase * 4ull) {
    // split to stay within 64-bit intermediates
    std::uint64_t hi = m / kBase, lo = m % kBase;
    BigNat copy = *this;
    mul_small(lo);
    if (hi != 0) {
      copy.mul_small(hi);
      copy.limbs_.insert(copy.limbs_.begin(), 0);  // shift by one limb
      add(copy);
    }
    return *this;
  }
  std::uint64_t carry = 0;
  for (auto& limb : limbs_) {
    std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
    limb = static_cast<std::uint32_t>(cur % kBase);
    carry = cur / kBase;
  }
  while (carry != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
    carry /= kBase;
  }
  trim();
  return *this;
}

BigNat& BigNat::add(const BigNat& other) {
  const auto& o = other.limbs_;
  if (o.size() > limbs_.size()) limbs_.resize(o.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t cur = carry + limbs_[i] + (i < o.size() ? o[i] : 0);
    limbs_[i] = static_cast<std::uint32_t>(cur % kBase);
    carry = cur / kBase;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

BigNat& BigNat::sub(const BigNat& other) {
  if (cmp(*this, other) < 0) throw std::underflow_error("BigNat::sub: negative result");
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t cur = static_cast<std::int64_t>(limbs_[i]) - borrow -
                       (i < other.limbs_.size() ? other.limbs_[i] : 0);
    if (cur < 0) {
      cur += kBase;
      borrow = 1;
    } else {
      borrow = 0;
    }
    limbs_[i] = static_cast<std::uint32_t>(cur);
  }
  trim();
  return *this;
}

int BigNat::cmp(const BigNat& a, const BigNat& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

bool BigNat::fits_u64() const {
  // 3 limbs max ~ 1e27 > 2^64; check against UINT64_MAX explicitly
  if (limbs_.size() > 3) return false;
  __uint128_t v = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
  return v <= static_cast<__uint128_t>(UINT64_MAX);
}

std::uint64_t BigNat::as_u64() const {
  if (!fits_u64()) throw std::overflow_error("BigNat::as_u64");
  std::uint64_t v = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
  return v;
}

std::string BigNat::str() const {
  std::string s = std::to_string(limbs_.back());
  for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
    std::string part = std::to_string(limbs_[i]);
    s += std::string(9 - part.size(), '0') + part;
  }
  return s;
}

BigInt::BigInt(long long v)
    : negative(v < 0),
      mag(static_cast<std::uint64_t>(v < 0 ? -(unsigned long long)v : v)) {}

BigInt::BigInt(BigNat m, bool neg) : negative(neg && !m.is_zero()), mag(std::move(m)) {}

BigInt& BigInt::add(const BigInt& other) {
  if (negative == other.negative) {
    mag.add(other.mag);
  } else if (BigNat::cmp(mag, other.mag) >= 0) {
    mag.sub(other.mag);
  } else {
    BigNat tmp = other.mag;
    tmp.sub(mag);
    mag = std::move(tmp);
    negative = other.negative;
  }
  if (mag.is_zero()) negative = false;
  return *this;
}

BigInt& BigInt::sub(const BigInt& other) {
  BigInt tmp = other;
  tmp.negative = !tmp.negative;
  return add(tmp);
}

bool BigInt::operator==(const BigInt& o) const {
  return negative == o.negative && mag == o.mag;
}

std::string BigInt::str() const { return (negative ? "-" : "") + mag.str(); }

}  // namespace hhgp
