#include "qfcodes/verify.hpp"

#include "qfcodes/errors.hpp"

namespace qfc {

std::string to_string(ConventionPolicy p) {
  switch (p) {
    case ConventionPolicy::Paper:
      return "paper";
    case ConventionPolicy::Reflected:
      return "reflected";
    case ConventionPolicy::Adjudicate:
      return "adjudicate";
  }
  return "?";
}

bool VerificationReport::verified() const {
  if (!predicted_available() || !length_match || !wd_match || !marginal_match || !mass_ok) return false;
  switch (policy) {
    case ConventionPolicy::Paper:
      return paper.match;
    case ConventionPolicy::Reflected:
      return reflected.match;
    case ConventionPolicy::Adjudicate:
      return adjudicated.has_value();
  }
  return false;
}

namespace {

bool compositions_sum_to(const CompleteWeightEnumerator& cwe, const BigInt& n) {
  for (const auto& [k, c] : cwe.terms) {
    BigInt s = 0;
    for (const auto& x : k) s += x;
    if (s != n) return false;
  }
  return true;
}

}  // namespace

VerificationReport verify(const QuadForm& q, Elem a, ConventionPolicy policy, const EnumerationOptions& opts) {
  const FieldContext& F = q.field();
  const unsigned m = q.variables();
  const BigInt space = int_pow(F.order(), m);

  VerificationReport rep(q);
  rep.a = a;
  rep.form_class = classify(q);
  rep.policy = policy;
  const DefiningSet d = defining_set(q, a, opts.limits);
  rep.n = d.size();
  rep.dimension_claimed = m;
  rep.dimension_actual = code_dimension(d);
  rep.distinct_codewords = int_pow(F.order(), rep.dimension_actual);
  rep.brute_cwe = brute_cwe(d, opts);
  rep.brute_wd = rep.brute_cwe.weight_marginal();
  rep.mass_ok = rep.brute_cwe.total() == space && compositions_sum_to(rep.brute_cwe, rep.n);

  if (d.empty_warning()) rep.notes.push_back("defining set is empty; the code has length 0");
  if (rep.dimension_actual != m) {
    rep.notes.push_back("actual dimension " + std::to_string(rep.dimension_actual) + " is below the claimed " +
                        std::to_string(m));
  }

  const FormClass& c = rep.form_class;
  if (a == 0 || c.rank == 0) {
    rep.unsupported_reason = a == 0 ? "closed forms require a != 0" : "closed forms require rank >= 1";
    return rep;
  }

  rep.predicted_wd = predicted_wd(F, c, m, a);
  rep.length_match = predicted_length(F, c, m, a) == rep.n;
  rep.wd_match = *rep.predicted_wd == rep.brute_wd;
  rep.mass_ok = rep.mass_ok && rep.predicted_wd->total() == space;

  auto run = [&](Convention conv, ConventionOutcome& out) {
    PredictedCwe p = predicted_cwe(F, c, m, a, conv, CheckMode::Report);
    out.available = true;
    out.inconsistencies = std::move(p.inconsistencies);
    out.match = out.inconsistencies.empty() && p.cwe == rep.brute_cwe;
    return p.cwe;
  };
  const CompleteWeightEnumerator paper_cwe = run(Convention::Paper, rep.paper);
  const CompleteWeightEnumerator reflected_cwe = run(Convention::Reflected, rep.reflected);

  if (rep.reflected.match) {
    rep.adjudicated = Convention::Reflected;
  } else if (rep.paper.match) {
    rep.adjudicated = Convention::Paper;
  }

  const CompleteWeightEnumerator* chosen = nullptr;
  switch (policy) {
    case ConventionPolicy::Paper:
      chosen = &paper_cwe;
      break;
    case ConventionPolicy::Reflected:
      chosen = &reflected_cwe;
      break;
    case ConventionPolicy::Adjudicate:
      chosen = rep.adjudicated == Convention::Paper ? &paper_cwe : &reflected_cwe;
      break;
  }
  rep.marginal_match = chosen->weight_marginal() == *rep.predicted_wd;
  rep.mass_ok = rep.mass_ok && chosen->total() == space;

  if (c.type != FormType::II) {
    rep.notes.push_back("zero-codeword term taken with exponent n");
  }
  return rep;
}

}  // namespace qfc
