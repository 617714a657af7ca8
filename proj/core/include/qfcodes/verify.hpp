#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qfcodes/code.hpp"
#include "qfcodes/predict.hpp"

namespace qfc {

enum class ConventionPolicy { Paper, Reflected, Adjudicate };

std::string to_string(ConventionPolicy p);

struct ConventionOutcome {
  bool available = false;
  bool match = false;
  std::vector<std::string> inconsistencies;
};

/// Brute-force enumeration of C_{D_Q^a} set against the closed forms.
struct VerificationReport {
  explicit VerificationReport(QuadForm q) : form(std::move(q)) {}

  QuadForm form;
  Elem a = 0;
  FormClass form_class;
  ConventionPolicy policy = ConventionPolicy::Adjudicate;

  BigInt n;
  unsigned dimension_claimed = 0;
  unsigned dimension_actual = 0;
  BigInt distinct_codewords;
  CompleteWeightEnumerator brute_cwe;
  WeightDistribution brute_wd;

  /// Empty when the closed forms do not apply (a = 0 or rank 0).
  std::optional<WeightDistribution> predicted_wd;
  std::string unsupported_reason;
  bool length_match = false;
  bool wd_match = false;
  /// Weight marginal of the adjudicated CWE equals the predicted table.
  bool marginal_match = false;
  bool mass_ok = false;

  ConventionOutcome paper;
  ConventionOutcome reflected;
  std::optional<Convention> adjudicated;

  std::vector<std::string> notes;

  bool predicted_available() const { return predicted_wd.has_value(); }
  /// Every check passes under the convention selected by the policy.
  bool verified() const;
};

VerificationReport verify(const QuadForm& q, Elem a, ConventionPolicy policy = ConventionPolicy::Adjudicate,
                          const EnumerationOptions& opts = {});

}  // namespace qfc
