#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qfcodes/counting.hpp"
#include "qfcodes/extension.hpp"
#include "qfcodes/numeric.hpp"
#include "qfcodes/quadform.hpp"

namespace qfc {

/// weight -> number of b in F_q^m whose codeword has that weight. Codewords
/// are counted with multiplicity in b, so counts always total q^m.
struct WeightDistribution {
  BigInt length;
  std::map<BigInt, BigInt> counts;

  BigInt total() const;
  /// Number of distinct nonzero weights with positive multiplicity.
  std::size_t nonzero_weights() const;
  bool operator==(const WeightDistribution&) const = default;
};

/// Composition (k_0, ..., k_{q-1}) indexed by element encoding -> number of b
/// producing it.
struct CompleteWeightEnumerator {
  std::uint32_t alphabet = 0;
  BigInt length;
  std::map<std::vector<BigInt>, BigInt> terms;

  BigInt total() const;
  /// Marginal on k_0: weight = n - k_0.
  WeightDistribution weight_marginal() const;
  bool operator==(const CompleteWeightEnumerator&) const = default;
};

/// D = {x : Q(x) = a}, in ascending vector encoding.
class DefiningSet {
 public:
  DefiningSet(QuadForm form, Elem a, std::vector<Elem> coords);

  const QuadForm& form() const noexcept { return form_; }
  Elem value() const noexcept { return a_; }
  std::size_t size() const noexcept { return size_; }
  unsigned dimension() const noexcept { return form_.variables(); }
  std::span<const Elem> point(std::size_t i) const {
    return {coords_.data() + i * dimension(), dimension()};
  }
  /// Row-major n x m coordinate table.
  std::span<const Elem> coords() const noexcept { return coords_; }
  /// Set when D is empty (the code has length 0).
  bool empty_warning() const noexcept { return size_ == 0; }

 private:
  QuadForm form_;
  Elem a_;
  std::vector<Elem> coords_;
  std::size_t size_;
};

/// Exhaustive preimage. For a != 0 and rank >= 1 the size is cross-checked
/// against the standard-type count (InternalInconsistency on mismatch).
DefiningSet defining_set(const QuadForm& q, Elem a, const EnumerationLimits& limits = {});

/// c_i = b . d_i.
Vec codeword(std::span<const Elem> b, const DefiningSet& d);

/// Field formulation: c_i = Tr(b d_i) over F_{q^m}.
Vec field_codeword(const ExtContext& ext, ExtElem b, std::span<const ExtElem> d);

/// Rank of the m x n matrix with columns d_i, i.e. log_q of the number of
/// distinct codewords.
unsigned code_dimension(const DefiningSet& d);

struct EnumerationOptions {
  EnumerationLimits limits;
  unsigned workers = 1;
};

/// Complete weight enumerator by evaluating every codeword.
CompleteWeightEnumerator brute_cwe(const DefiningSet& d, const EnumerationOptions& opts = {});
WeightDistribution brute_wd(const DefiningSet& d, const EnumerationOptions& opts = {});

}  // namespace qfc
