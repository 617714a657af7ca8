#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace qfc {

/// Integer encoding of a field element: the base-p digits of its coefficient
/// vector over F_p, constant term least significant. All "smallest element"
/// choices in the library refer to this order.
using Elem = std::uint32_t;

/// Arithmetic in F_q, q = p^e with p odd. Immutable after construction and
/// safe to share between threads.
class FieldContext {
 public:
  static constexpr std::uint64_t kDefaultMaxOrder = 4096;

  /// Builds F_{p^e} with the lexicographically smallest monic irreducible
  /// modulus and the smallest primitive element. Throws InvalidPrime,
  /// InvalidDegree or SizeLimit.
  static FieldContext make(unsigned p, unsigned e, std::uint64_t max_order = kDefaultMaxOrder);

  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return e_; }
  std::uint32_t order() const noexcept { return q_; }

  /// Monic modulus over F_p, coefficient of x^i at index i (size e + 1).
  std::span<const unsigned> modulus() const noexcept { return modulus_; }
  Elem generator() const noexcept { return exp_[1]; }

  Elem add(Elem a, Elem b) const noexcept {
    if (!dense_add_.empty()) return dense_add_[a * q_ + b];
    return add_slow(a, b);
  }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg_[b]); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (!dense_mul_.empty()) return dense_mul_[a * q_ + b];
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Multiplicative inverse; inv(0) is defined as 0.
  Elem inv(Elem a) const noexcept { return inv_[a]; }
  Elem div(Elem a, Elem b) const noexcept { return mul(a, inv_[b]); }
  Elem pow(Elem a, std::uint64_t k) const noexcept;

  /// g^k for 0 <= k < q - 1.
  Elem exp(std::uint32_t k) const noexcept { return exp_[k % (q_ - 1)]; }
  /// Discrete log base g of a nonzero element.
  std::uint32_t log(Elem a) const noexcept { return log_[a]; }

  /// Quadratic character: +1 on nonzero squares, -1 on nonsquares, 0 at 0.
  int eta(Elem a) const noexcept { return eta_[a]; }

  /// q - 1 at zero and -1 elsewhere; the value of sum_{y != 0} psi(y x) for
  /// the canonical additive character psi.
  long long nonzero_character_sum(Elem a) const noexcept {
    return a == 0 ? static_cast<long long>(q_) - 1 : -1;
  }

  /// Smallest-encoded nonsquare.
  Elem fixed_nonsquare() const noexcept { return nonsquare_; }

  /// Square root with the smaller encoding. Throws NotASquare unless eta(a) = 1.
  Elem sqrt(Elem a) const;

  /// Image of an integer in the prime subfield.
  Elem from_integer(long long n) const noexcept;

  /// Base-p digits of the encoding (length e).
  std::vector<unsigned> digits(Elem a) const;

  bool operator==(const FieldContext& other) const = default;

 private:
  FieldContext() = default;
  Elem add_slow(Elem a, Elem b) const noexcept;

  unsigned p_ = 0;
  unsigned e_ = 0;
  std::uint32_t q_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<Elem> exp_;           // length 2(q-1) so exp_[log a + log b] needs no reduction
  std::vector<std::uint32_t> log_;  // log_[0] unused
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  std::vector<signed char> eta_;
  std::vector<Elem> dense_add_;  // q*q tables, only for small q
  std::vector<Elem> dense_mul_;
  Elem nonsquare_ = 0;
};

using FieldPtr = std::shared_ptr<const FieldContext>;

inline FieldPtr make_field(unsigned p, unsigned e,
                           std::uint64_t max_order = FieldContext::kDefaultMaxOrder) {
  return std::make_shared<const FieldContext>(FieldContext::make(p, e, max_order));
}

/// Splits q = p^e with p an odd prime; throws InvalidPrime otherwise.
std::pair<unsigned, unsigned> split_prime_power(std::uint64_t q);

bool is_prime(std::uint64_t n) noexcept;

}  // namespace qfc
