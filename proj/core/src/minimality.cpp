#include "qfcodes/minimality.hpp"

#include <map>
#include <random>

#include "qfcodes/errors.hpp"
#include "qfcodes/predict.hpp"

namespace qfc {

bool covers(std::span<const Elem> c1, std::span<const Elem> c2) {
  if (c1.size() != c2.size()) throw Error(ErrorKind::DimError, "codewords differ in length");
  bool proper = false;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    if (c2[i] != 0 && c1[i] == 0) return false;
    if (c1[i] != 0 && c2[i] == 0) proper = true;
  }
  return proper;
}

bool minimality_parameter_condition(std::uint32_t q, const FormClass& c) {
  switch (c.type) {
    case FormType::I:
      return (c.rank == 4 && q >= 5) || (c.rank >= 6 && c.rank % 2 == 0);
    case FormType::III:
      return c.rank >= 4;
    case FormType::II:
      return c.rank >= 5;
  }
  return false;
}

RatioVerdict minimality_ratio(const FieldContext& f, const FormClass& c, unsigned m, Elem a) {
  if (a == 0) throw Error(ErrorKind::Unsupported, "ratio test requires a != 0");
  if (c.rank == 0) throw Error(ErrorKind::Undefined, "empty code has no nonzero weight");
  const WeightDistribution wd = predicted_wd(f, c, m, a);
  RatioVerdict v;
  bool any = false;
  for (const auto& [w, mult] : wd.counts) {
    if (w == 0 || mult == 0) continue;
    if (!any) v.w_min = w;
    v.w_max = w;
    any = true;
  }
  if (!any) throw Error(ErrorKind::Undefined, "all codewords are zero");
  const std::uint32_t q = f.order();
  v.ratio = Rational(v.w_min, v.w_max);
  v.threshold = Rational(q - 1, q);
  v.all_minimal = v.ratio > v.threshold;
  v.parameter_condition = minimality_parameter_condition(q, c);
  return v;
}

Rational CoverCheck::coverage() const {
  if (pairs_total == 0) return 1;
  return Rational(BigInt(pairs_checked), pairs_total);
}

namespace {

struct Support {
  std::vector<std::uint64_t> bits;
  unsigned weight = 0;
};

bool properly_contains(const Support& a, const Support& b) {
  if (a.weight <= b.weight) return false;
  for (std::size_t k = 0; k < a.bits.size(); ++k) {
    if (b.bits[k] & ~a.bits[k]) return false;
  }
  return true;
}

}  // namespace

CoverCheck exhaustive_minimality(const DefiningSet& d, const CoverOptions& opts) {
  const FieldContext& F = d.form().field();
  const std::uint32_t q = F.order();
  const unsigned m = d.dimension();
  const std::uint64_t total = space_size(q, m, opts.limits);
  const std::size_t n = d.size();
  const std::size_t words = (n + 63) / 64;

  // smallest b for each distinct nonzero codeword
  std::map<Vec, std::uint64_t> seen;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    const Vec b = vector_at(idx, q, m);
    Vec c = codeword(b, d);
    bool zero = true;
    for (Elem x : c) zero = zero && x == 0;
    if (!zero) seen.emplace(std::move(c), idx);
  }

  std::vector<Support> supports;
  std::vector<std::uint64_t> owner;
  supports.reserve(seen.size());
  for (const auto& [c, idx] : seen) {
    Support s;
    s.bits.assign(words, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i] != 0) {
        s.bits[i / 64] |= std::uint64_t{1} << (i % 64);
        ++s.weight;
      }
    }
    supports.push_back(std::move(s));
    owner.push_back(idx);
  }

  CoverCheck out;
  out.seed = opts.seed;
  const std::uint64_t count = supports.size();
  out.distinct_codewords = count;
  out.pairs_total = BigInt(count) * (count == 0 ? 0 : count - 1);

  std::vector<bool> flagged(count, false);
  auto record = [&](std::uint64_t i, std::uint64_t j) {
    if (flagged[i]) return;
    flagged[i] = true;
    ++out.covering_codewords;
    if (out.violations.size() < opts.max_listed) out.violations.push_back({owner[i], owner[j]});
  };

  if (out.pairs_total <= opts.pair_budget) {
    out.exhaustive = true;
    for (std::uint64_t i = 0; i < count; ++i) {
      for (std::uint64_t j = 0; j < count; ++j) {
        if (i == j) continue;
        if (properly_contains(supports[i], supports[j])) {
          record(i, j);
          break;
        }
      }
    }
    // a witness settles the rest of its row
    out.pairs_checked = static_cast<std::uint64_t>(out.pairs_total);
  } else {
    out.exhaustive = false;
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, count - 1);
    for (std::uint64_t k = 0; k < opts.pair_budget; ++k) {
      const std::uint64_t i = pick(rng);
      std::uint64_t j = pick(rng);
      while (j == i) j = pick(rng);
      ++out.pairs_checked;
      if (properly_contains(supports[i], supports[j])) record(i, j);
    }
  }
  return out;
}

}  // namespace qfc
