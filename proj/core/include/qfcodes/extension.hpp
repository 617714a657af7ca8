#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qfcodes/field.hpp"
#include "qfcodes/matrix.hpp"

namespace qfc {

/// Element of F_{q^m}, encoded as the base-q integer of its coordinate vector
/// in the polynomial basis 1, y, ..., y^(m-1).
using ExtElem = std::uint64_t;

/// The tower F_q[y]/(h(y)) with h the lexicographically smallest monic
/// irreducible of degree m over F_q. Immutable after construction.
class ExtContext {
 public:
  static constexpr std::uint64_t kDefaultMaxSize = std::uint64_t{1} << 24;

  /// Throws SizeLimit when q^m exceeds `max_size`.
  static ExtContext make(FieldPtr base, unsigned m, std::uint64_t max_size = kDefaultMaxSize);

  const FieldContext& base() const noexcept { return *base_; }
  const FieldPtr& base_ptr() const noexcept { return base_; }
  unsigned degree() const noexcept { return m_; }
  std::uint64_t size() const noexcept { return size_; }
  /// Monic modulus over F_q, coefficient of y^i at index i.
  std::span<const Elem> modulus() const noexcept { return modulus_; }

  Vec coords(ExtElem x) const;
  ExtElem encode(std::span<const Elem> coords) const;
  ExtElem embed(Elem a) const noexcept { return a; }

  ExtElem add(ExtElem x, ExtElem y) const;
  ExtElem sub(ExtElem x, ExtElem y) const;
  ExtElem mul(ExtElem x, ExtElem y) const;
  ExtElem pow(ExtElem x, std::uint64_t k) const;

  /// x -> x^q, applied as a linear map on coordinates.
  ExtElem frobenius(ExtElem x) const;

  /// Tr(x) = x + x^q + ... + x^(q^(m-1)).
  Elem trace(ExtElem x) const;

  std::vector<ExtElem> polynomial_basis() const;

  /// The basis {a_i} with Tr(a_i b_j) = [i == j]. Throws SingularBasis when
  /// the input is not a basis.
  std::vector<ExtElem> dual_basis(std::span<const ExtElem> basis) const;

  bool operator==(const ExtContext& other) const {
    return *base_ == *other.base_ && m_ == other.m_ && modulus_ == other.modulus_ &&
           frobenius_ == other.frobenius_;
  }

 private:
  ExtContext() = default;
  Vec mul_coords(const Vec& a, const Vec& b) const;

  FieldPtr base_;
  unsigned m_ = 0;
  std::uint64_t size_ = 0;
  Vec modulus_;
  Matrix frobenius_;  // column i holds the coordinates of (y^i)^q
};

}  // namespace qfc
