#include "qfcodes/predict.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "qfcodes/counting.hpp"
#include "qfcodes/errors.hpp"

namespace qfc {

namespace {

void require_supported(const FormClass& c, unsigned m, Elem a) {
  if (a == 0) throw Error(ErrorKind::Unsupported, "closed forms require a != 0");
  if (c.rank == 0) throw Error(ErrorKind::Unsupported, "closed forms require rank >= 1");
  if (c.rank > m) throw Error(ErrorKind::InvalidInput, "rank exceeds number of variables");
}

int sign_of(const FieldContext& f, const FormClass& c, Elem a) {
  return c.type == FormType::II ? c.eta_mu * f.eta(a) : c.epsilon;
}

using Row = std::pair<Rational, Rational>;  // weight, multiplicity

WeightDistribution from_rows(const std::vector<Row>& rows, const BigInt& length) {
  WeightDistribution wd;
  wd.length = length;
  for (const auto& [w, mult] : rows) {
    if (mult == 0) continue;
    const BigInt wi = require_integer(w, "weight");
    const BigInt mi = require_integer(mult, "multiplicity");
    if (wi < 0 || mi < 0) throw Error(ErrorKind::FormulaDomainError, "negative weight or multiplicity");
    wd.counts[wi] += mi;
  }
  return wd;
}

}  // namespace

BigInt predicted_length(const FieldContext& f, const FormClass& c, unsigned m, Elem a) {
  require_supported(c, m, a);
  return count_value(f, c, m, a);
}

WeightDistribution predicted_wd(const FieldContext& f, const FormClass& c, unsigned m, Elem a) {
  require_supported(c, m, a);
  const long long q = f.order();
  const long long mm = m, r = c.rank;
  const int s = sign_of(f, c, a);
  const Rational half(q - 1, 2);
  std::vector<Row> rows{{0, 1}};
  if (c.type != FormType::II) {
    rows.emplace_back((q - 1) * (rational_pow(q, mm - 2) - s * rational_pow(q, mm - r / 2 - 2)),
                      rational_pow(q, mm) - rational_pow(q, r));
    rows.emplace_back(rational_pow(q, mm - 1) - rational_pow(q, mm - 2),
                      Rational(q + 1, 2) * rational_pow(q, r - 1) + s * half * rational_pow(q, (r - 2) / 2) - 1);
    rows.emplace_back(rational_pow(q, mm - 1) - rational_pow(q, mm - 2) - 2 * s * rational_pow(q, mm - r / 2 - 1),
                      half * (rational_pow(q, r - 1) - s * rational_pow(q, (r - 2) / 2)));
  } else {
    rows.emplace_back((q - 1) * (rational_pow(q, mm - 2) + s * rational_pow(q, mm - (r + 3) / 2)),
                      rational_pow(q, mm) - rational_pow(q, r) +
                          half * (rational_pow(q, r - 1) - s * rational_pow(q, (r - 1) / 2)));
    rows.emplace_back(rational_pow(q, mm - 1) - rational_pow(q, mm - 2), rational_pow(q, r - 1) - 1);
    rows.emplace_back(rational_pow(q, mm - 2) * (q - 1) + s * (q + 1) * rational_pow(q, mm - (r + 3) / 2),
                      half * (rational_pow(q, r - 1) + s * rational_pow(q, (r - 1) / 2)));
  }
  return from_rows(rows, count_value(f, c, m, a));
}

WeightDistribution full_rank_wd(const FieldContext& f, const FormClass& c, unsigned m, Elem a) {
  require_supported(c, m, a);
  if (c.rank != m) throw Error(ErrorKind::InvalidInput, "full_rank_wd requires rank = m");
  const long long q = f.order();
  const long long mm = m;
  const int s = sign_of(f, c, a);
  const Rational half(q - 1, 2);
  std::vector<Row> rows{{0, 1}};
  if (c.type != FormType::II) {
    rows.emplace_back(rational_pow(q, mm - 1) - rational_pow(q, mm - 2),
                      Rational(q + 1, 2) * rational_pow(q, mm - 1) + s * half * rational_pow(q, (mm - 2) / 2) - 1);
    rows.emplace_back(rational_pow(q, mm - 1) - rational_pow(q, mm - 2) - 2 * s * rational_pow(q, mm / 2 - 1),
                      half * (rational_pow(q, mm - 1) - s * rational_pow(q, (mm - 2) / 2)));
  } else {
    rows.emplace_back(rational_pow(q, mm - 1) - rational_pow(q, mm - 2), rational_pow(q, mm - 1) - 1);
    rows.emplace_back(rational_pow(q, mm - 2) * (q - 1) + s * (q + 1) * rational_pow(q, (mm - 3) / 2),
                      half * (rational_pow(q, mm - 1) + s * rational_pow(q, (mm - 1) / 2)));
    rows.emplace_back((q - 1) * (rational_pow(q, mm - 2) + s * rational_pow(q, (mm - 3) / 2)),
                      half * (rational_pow(q, mm - 1) - s * rational_pow(q, (mm - 1) / 2)));
  }
  return from_rows(rows, count_value(f, c, m, a));
}

namespace {

class CweBuilder {
 public:
  CweBuilder(std::uint32_t q, BigInt n, CheckMode mode) : mode_(mode) {
    out_.cwe.alphabet = q;
    out_.cwe.length = std::move(n);
  }

  void add(const std::string& label, const Rational& mult, const std::vector<Rational>& comp) {
    if (mult == 0) return;
    if (!is_integral(mult) || mult < 0) {
      fail(label + ": multiplicity is not a nonnegative integer");
      return;
    }
    std::vector<BigInt> key;
    key.reserve(comp.size());
    Rational sum = 0;
    for (const auto& k : comp) {
      if (!is_integral(k) || k < 0) {
        fail(label + ": composition entry is not a nonnegative integer");
        return;
      }
      key.push_back(numerator(k));
      sum += k;
    }
    if (sum != Rational(out_.cwe.length)) {
      fail(label + ": composition sums to " + numerator(sum).str() + ", expected " + out_.cwe.length.str());
    }
    out_.cwe.terms[std::move(key)] += numerator(mult);
  }

  PredictedCwe finish() && { return std::move(out_); }

 private:
  void fail(const std::string& msg) {
    if (mode_ == CheckMode::Strict) throw Error(ErrorKind::InternalInconsistency, msg);
    out_.inconsistencies.push_back(msg);
  }

  CheckMode mode_;
  PredictedCwe out_;
};

}  // namespace

PredictedCwe predicted_cwe(const FieldContext& f, const FormClass& c, unsigned m, Elem a,
                           Convention conv, CheckMode mode) {
  require_supported(c, m, a);
  const long long q = f.order();
  const long long mm = m, r = c.rank;
  const BigInt n = count_value(f, c, m, a);
  const int s = sign_of(f, c, a);
  const Rational base = rational_pow(q, mm - 2);
  const Elem four = f.from_integer(4);
  CweBuilder out(static_cast<std::uint32_t>(q), n, mode);

  std::vector<Rational> comp(q, 0);
  comp[0] = Rational(n);
  out.add("zero codeword", 1, comp);

  if (c.type != FormType::II) {
    const Rational big = rational_pow(q, mm - r / 2 - 1);
    const Rational small = rational_pow(q, mm - r / 2 - 2);
    const int sigma = conv == Convention::Paper ? 1 : -1;

    out.add("b'' != 0", rational_pow(q, mm) - rational_pow(q, r), std::vector<Rational>(q, base - s * small));

    std::fill(comp.begin(), comp.end(), base);
    comp[0] = base - s * big;
    out.add("Qhat(b') = 0", rational_pow(q, r - 1) + s * (q - 1) * rational_pow(q, r / 2 - 1) - 1, comp);

    // a * Qhat(b') = t ranges over squares (odd = 0) and nonsquares (odd = 1)
    for (unsigned odd = 0; odd < 2; ++odd) {
      const Rational mult = rational_pow(q, r - 1) - s * rational_pow(q, r / 2 - 1);
      for (std::uint32_t beta = 1; beta <= static_cast<std::uint32_t>((q - 1) / 2); ++beta) {
        const Elem t = f.exp(2 * beta + odd);
        for (Elem rho = 0; rho < static_cast<Elem>(q); ++rho) {
          Elem arg = f.sub(f.mul(four, t), f.mul(rho, rho));
          if (sigma < 0) arg = f.neg(arg);
          comp[rho] = base + s * f.eta(arg) * big;
        }
        out.add("a Qhat = g^" + std::to_string(2 * beta + odd), mult, comp);
      }
    }
  } else {
    const Rational small = rational_pow(q, mm - (r + 3) / 2);

    out.add("b'' != 0", rational_pow(q, mm) - rational_pow(q, r), std::vector<Rational>(q, base + s * small));

    std::fill(comp.begin(), comp.end(), base);
    comp[0] = base + s * rational_pow(q, mm - (r + 1) / 2);
    out.add("Qhat(b') = 0", rational_pow(q, r - 1) - 1, comp);

    for (std::uint32_t beta = 1; beta <= static_cast<std::uint32_t>((q - 1) / 2); ++beta) {
      const Elem root = f.mul(f.from_integer(2), f.exp(beta));
      std::fill(comp.begin(), comp.end(), base - s * small);
      comp[root] = base + (q - 1) * s * small;
      comp[f.neg(root)] = base + (q - 1) * s * small;
      out.add("a Qhat = g^" + std::to_string(2 * beta), rational_pow(q, r - 1) + s * rational_pow(q, (r - 1) / 2), comp);
    }

    out.add("a Qhat nonsquare", Rational(q - 1, 2) * (rational_pow(q, r - 1) - s * rational_pow(q, (r - 1) / 2)),
            std::vector<Rational>(q, base + s * small));
  }
  return std::move(out).finish();
}

}  // namespace qfc
