#include "qfcodes/json.hpp"

#include <limits>
#include <set>
#include <sstream>

#include "qfcodes/errors.hpp"

namespace qfc {

Json big_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(x);
  }
  return x.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      // fall through
    }
  }
  throw Error(ErrorKind::InvalidInput, "expected an integer");
}

Json form_to_json(const QuadForm& q) {
  const FieldContext& F = q.field();
  Json coeffs = Json::array();
  for (unsigned i = 0; i < q.variables(); ++i) {
    for (unsigned j = i; j < q.variables(); ++j) {
      const Elem c = q.coefficient(i, j);
      if (c != 0) coeffs.push_back({i + 1, j + 1, c});
    }
  }
  return {{"m", q.variables()}, {"p", F.characteristic()}, {"e", F.degree()}, {"coeffs", coeffs}};
}

QuadForm form_from_json(const Json& j) {
  try {
    const auto m = j.at("m").get<unsigned>();
    auto field = make_field(j.at("p").get<unsigned>(), j.at("e").get<unsigned>());
    QuadForm q(field, m);
    for (const auto& t : j.at("coeffs")) {
      if (!t.is_array() || t.size() != 3) throw Error(ErrorKind::InvalidInput, "coefficient must be [i, j, c]");
      const auto i = t[0].get<unsigned>(), k = t[1].get<unsigned>();
      if (i < 1 || k < i || k > m) throw Error(ErrorKind::InvalidInput, "coefficient index out of range");
      q.set_coefficient(i - 1, k - 1, t[2].get<Elem>());
    }
    return q;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed form: ") + e.what());
  }
}

Json class_to_json(const FormClass& c) {
  Json j{{"rank", c.rank}, {"type", to_string(c.type)}};
  j["epsilon"] = c.type == FormType::II ? Json(nullptr) : Json(c.epsilon);
  j["eta_mu"] = c.type == FormType::II ? Json(c.eta_mu) : Json(nullptr);
  return j;
}

Json wd_to_json(const WeightDistribution& wd) {
  Json rows = Json::array();
  for (const auto& [w, c] : wd.counts) rows.push_back({big_to_json(w), big_to_json(c)});
  return rows;
}

Json cwe_to_json(const CompleteWeightEnumerator& cwe) {
  Json rows = Json::array();
  for (const auto& [k, c] : cwe.terms) {
    Json comp = Json::array();
    for (const auto& x : k) comp.push_back(big_to_json(x));
    rows.push_back({comp, big_to_json(c)});
  }
  return rows;
}

namespace {

Json params_json(const QuadForm& q) {
  const FieldContext& F = q.field();
  return {{"p", F.characteristic()}, {"e", F.degree()}, {"m", q.variables()}, {"form", form_to_json(q)}};
}

Json matrix_json(const Matrix& t) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < t.cols(); ++j) row.push_back(t(i, j));
    rows.push_back(row);
  }
  return rows;
}

const char* outcome(const ConventionOutcome& o) {
  if (!o.available) return "unavailable";
  return o.match ? "match" : "mismatch";
}

std::string ratio_string(const BigInt& num, const BigInt& den) { return num.str() + "/" + den.str(); }

}  // namespace

Json classify_to_json(const QuadForm& q, const Standardization& s) {
  return {{"kind", "classify"},
          {"params", params_json(q)},
          {"class", class_to_json(s.form_class)},
          {"transform", matrix_json(s.transform)},
          {"standard", form_to_json(s.standard)}};
}

Json report_to_json(const VerificationReport& r) {
  Json params = params_json(r.form);
  params["a"] = r.a;

  Json convention{{"policy", to_string(r.policy)},
                  {"paper", outcome(r.paper)},
                  {"reflected", outcome(r.reflected)},
                  {"adjudicated", r.adjudicated ? Json(to_string(*r.adjudicated)) : Json(nullptr)}};
  Json inconsistencies{{"paper", r.paper.inconsistencies}, {"reflected", r.reflected.inconsistencies}};
  Json checks{{"length", r.length_match}, {"wd", r.wd_match}, {"marginal", r.marginal_match}, {"mass", r.mass_ok}};

  return {{"kind", "verify"},
          {"params", params},
          {"class", class_to_json(r.form_class)},
          {"n", big_to_json(r.n)},
          {"dimension_claimed", r.dimension_claimed},
          {"dimension_actual", r.dimension_actual},
          {"distinct_codewords", big_to_json(r.distinct_codewords)},
          {"wd", wd_to_json(r.brute_wd)},
          {"cwe", cwe_to_json(r.brute_cwe)},
          {"predicted_wd", r.predicted_wd ? wd_to_json(*r.predicted_wd) : Json(nullptr)},
          {"unsupported", r.unsupported_reason.empty() ? Json(nullptr) : Json(r.unsupported_reason)},
          {"convention", convention},
          {"inconsistencies", inconsistencies},
          {"checks", checks},
          {"verified", r.verified()},
          {"notes", r.notes}};
}

Json minimality_to_json(const MinimalityReport& r) {
  const RatioVerdict& v = r.ratio;
  Json j{{"w_min", big_to_json(v.w_min)},
         {"w_max", big_to_json(v.w_max)},
         {"ratio", ratio_string(v.w_min, v.w_max)},
         {"ratio_reduced", ratio_string(numerator(v.ratio), denominator(v.ratio))},
         {"threshold", ratio_string(numerator(v.threshold), denominator(v.threshold))},
         {"ratio_test", v.all_minimal ? "all-minimal" : "not-satisfied"},
         {"parameter_condition", v.parameter_condition},
         {"agrees", v.agrees()}};
  if (!r.cover) {
    j["cover"] = nullptr;
    return j;
  }
  const CoverCheck& c = *r.cover;
  Json violations = Json::array();
  for (const auto& x : c.violations) violations.push_back({x.coverer, x.covered});
  const Rational cov = c.coverage();
  j["cover"] = {{"mode", c.exhaustive ? "exhaustive" : "sampled"},
                {"seed", c.seed},
                {"distinct_codewords", c.distinct_codewords},
                {"pairs_total", big_to_json(c.pairs_total)},
                {"pairs_checked", c.pairs_checked},
                {"coverage", ratio_string(numerator(cov), denominator(cov))},
                {"covering_codewords", c.covering_codewords},
                {"violations", violations},
                {"all_minimal", c.all_minimal()}};
  return j;
}

std::string wd_to_csv(const WeightDistribution& brute, const std::optional<WeightDistribution>& predicted) {
  std::set<BigInt> weights;
  for (const auto& [w, c] : brute.counts) weights.insert(w);
  if (predicted) {
    for (const auto& [w, c] : predicted->counts) weights.insert(w);
  }
  auto lookup = [](const WeightDistribution& wd, const BigInt& w) {
    const auto it = wd.counts.find(w);
    return it == wd.counts.end() ? BigInt(0) : it->second;
  };
  std::ostringstream out;
  out << "weight,brute" << (predicted ? ",predicted" : "") << "\n";
  for (const auto& w : weights) {
    out << w << "," << lookup(brute, w);
    if (predicted) out << "," << lookup(*predicted, w);
    out << "\n";
  }
  return out.str();
}

}  // namespace qfc
