#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "qfcodes/minimality.hpp"
#include "qfcodes/verify.hpp"

namespace qfc {

using Json = nlohmann::ordered_json;

/// Integers that fit in int64 become JSON numbers, larger ones decimal strings.
Json big_to_json(const BigInt& x);
BigInt big_from_json(const Json& j);

/// {"m", "p", "e", "coeffs": [[i, j, c], ...]} with 1-based i <= j and only
/// nonzero coefficients, in (i, j) order.
Json form_to_json(const QuadForm& q);
/// Inverse of form_to_json. Throws InvalidInput on malformed input.
QuadForm form_from_json(const Json& j);

Json class_to_json(const FormClass& c);

Json wd_to_json(const WeightDistribution& wd);
Json cwe_to_json(const CompleteWeightEnumerator& cwe);

Json classify_to_json(const QuadForm& q, const Standardization& s);
Json report_to_json(const VerificationReport& r);
Json minimality_to_json(const MinimalityReport& r);

/// weight,brute[,predicted] rows over the union of weights, ascending.
std::string wd_to_csv(const WeightDistribution& brute, const std::optional<WeightDistribution>& predicted);

}  // namespace qfc
