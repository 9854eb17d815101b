#ifndef DETGB_FF_HPP
#define DETGB_FF_HPP

#include <cstdint>
#include <stdexcept>

namespace detgb::ff {

/// Canonical residue in [0, p).
using Fel = std::uint64_t;

bool is_prime(std::uint64_t n);

/// Runtime prime modulus. Capped at 2^62 so sums of two residues never
/// overflow a word and products fit in 128 bits.
struct FieldSpec {
  std::uint64_t p;
};

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;  // 2^31 - 1
inline constexpr std::uint64_t kMaxModulus = (1ULL << 62);

class Field {
public:
  explicit Field(std::uint64_t p);
  explicit Field(const FieldSpec& spec) : Field(spec.p) {}

  std::uint64_t p() const { return p_; }

  Fel add(Fel a, Fel b) const {
    Fel s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Fel sub(Fel a, Fel b) const { return a >= b ? a - b : a + (p_ - b); }
  Fel neg(Fel a) const { return a == 0 ? 0 : p_ - a; }
  Fel mul(Fel a, Fel b) const {
    if (small_) return (a * b) % p_;
    return static_cast<Fel>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Fel inv(Fel a) const;  // throws std::domain_error on a == 0
  Fel pow(Fel a, std::uint64_t e) const;

  /// Signed integer -> canonical residue.
  Fel reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<Fel>(r);
  }

  bool operator==(const Field& o) const { return p_ == o.p_; }

private:
  std::uint64_t p_;
  bool small_;  // p < 2^32: products fit in one word
};

}  // namespace detgb::ff

#endif
