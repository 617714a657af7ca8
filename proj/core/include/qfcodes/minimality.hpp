#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qfcodes/code.hpp"

namespace qfc {

/// support(c2) is a proper subset of support(c1). Throws DimError on a
/// length mismatch.
bool covers(std::span<const Elem> c1, std::span<const Elem> c2);

/// Ratio test on the closed-form weight distribution.
struct RatioVerdict {
  BigInt w_min;
  BigInt w_max;
  Rational ratio;
  Rational threshold;  ///< (q - 1) / q
  bool all_minimal = false;  ///< ratio > threshold, strictly
  /// The published parameter condition for this class (r = 4 and q >= 5 or
  /// even r >= 6 for Type I; even r >= 4 for Type III; r >= 5 for odd rank).
  bool parameter_condition = false;
  bool agrees() const { return all_minimal == parameter_condition; }
};

/// Throws Undefined when the code has no nonzero weight (rank 0 or empty D),
/// Unsupported for a = 0.
RatioVerdict minimality_ratio(const FieldContext& f, const FormClass& c, unsigned m, Elem a);

bool minimality_parameter_condition(std::uint32_t q, const FormClass& c);

struct CoverOptions {
  /// Ordered pairs of distinct nonzero codewords to examine; beyond this the
  /// check switches to uniform random pairs.
  std::uint64_t pair_budget = std::uint64_t{1} << 26;
  std::uint64_t seed = 0;
  std::size_t max_listed = 64;
  EnumerationLimits limits;
};

/// A codeword (by the smallest b producing it) covering another one.
struct CoverViolation {
  std::uint64_t coverer;
  std::uint64_t covered;
};

struct CoverCheck {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t distinct_codewords = 0;  ///< nonzero ones
  BigInt pairs_total;
  std::uint64_t pairs_checked = 0;
  /// Distinct codewords found to cover another, with one witness each.
  std::uint64_t covering_codewords = 0;
  std::vector<CoverViolation> violations;  ///< first max_listed of them

  Rational coverage() const;
  bool all_minimal() const { return covering_codewords == 0; }
};

CoverCheck exhaustive_minimality(const DefiningSet& d, const CoverOptions& opts = {});

struct MinimalityReport {
  RatioVerdict ratio;
  std::optional<CoverCheck> cover;
};

}  // namespace qfc
