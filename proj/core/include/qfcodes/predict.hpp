#pragma once

#include <string>
#include <vector>

#include "qfcodes/code.hpp"
#include "qfcodes/quadform.hpp"

namespace qfc {

/// |D| = N_a for a != 0.
BigInt predicted_length(const FieldContext& f, const FormClass& c, unsigned m, Elem a);

/// Weight distribution from the closed-form tables for 1 <= r <= m, a != 0.
/// Rows with equal weight are merged and rows of multiplicity 0 dropped.
/// Throws Unsupported for a = 0 or r = 0.
WeightDistribution predicted_wd(const FieldContext& f, const FormClass& c, unsigned m, Elem a);

/// Specialisation of predicted_wd to full rank r = m, written independently
/// from its own row list.
WeightDistribution full_rank_wd(const FieldContext& f, const FormClass& c, unsigned m, Elem a);

/// Fails with InternalInconsistency on the first bad term (Strict) or records
/// the problem and keeps going (Report).
enum class CheckMode { Strict, Report };

struct PredictedCwe {
  CompleteWeightEnumerator cwe;
  /// One line per composition that is non-integral, negative, or does not
  /// sum to n. Terms that are not integral or negative are left out of cwe.
  std::vector<std::string> inconsistencies;
};

/// Complete weight enumerator from the closed-form term families. For Type I
/// and III classes the result depends on `conv`; Type II ignores it.
PredictedCwe predicted_cwe(const FieldContext& f, const FormClass& c, unsigned m, Elem a,
                           Convention conv, CheckMode mode = CheckMode::Strict);

}  // namespace qfc
