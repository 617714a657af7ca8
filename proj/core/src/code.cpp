#include "qfcodes/code.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "qfcodes/errors.hpp"

namespace qfc {

BigInt WeightDistribution::total() const {
  BigInt t = 0;
  for (const auto& [w, c] : counts) t += c;
  return t;
}

std::size_t WeightDistribution::nonzero_weights() const {
  std::size_t k = 0;
  for (const auto& [w, c] : counts) {
    if (w != 0 && c > 0) ++k;
  }
  return k;
}

BigInt CompleteWeightEnumerator::total() const {
  BigInt t = 0;
  for (const auto& [k, c] : terms) t += c;
  return t;
}

WeightDistribution CompleteWeightEnumerator::weight_marginal() const {
  WeightDistribution wd;
  wd.length = length;
  for (const auto& [k, c] : terms) wd.counts[length - k.at(0)] += c;
  return wd;
}

DefiningSet::DefiningSet(QuadForm form, Elem a, std::vector<Elem> coords)
    : form_(std::move(form)),
      a_(a),
      coords_(std::move(coords)),
      size_(form_.variables() == 0 ? 0 : coords_.size() / form_.variables()) {}

DefiningSet defining_set(const QuadForm& q, Elem a, const EnumerationLimits& limits) {
  const FieldContext& F = q.field();
  const unsigned m = q.variables();
  space_size(F.order(), m, limits);
  std::vector<Elem> coords;
  Vec x(m, 0);
  do {
    if (q.evaluate(x) == a) coords.insert(coords.end(), x.begin(), x.end());
  } while (next_vector(x, F.order()));
  DefiningSet d(q, a, std::move(coords));

  if (a != 0) {
    const FormClass cls = classify(q);
    if (cls.rank >= 1 && BigInt(d.size()) != count_value(F, cls, m, a)) {
      throw Error(ErrorKind::InternalInconsistency,
                  "defining set size " + std::to_string(d.size()) + " disagrees with N_a");
    }
  }
  return d;
}

Vec codeword(std::span<const Elem> b, const DefiningSet& d) {
  if (b.size() != d.dimension()) throw Error(ErrorKind::DimError, "b must have m coordinates");
  const FieldContext& F = d.form().field();
  Vec c(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) c[i] = dot(F, b, d.point(i));
  return c;
}

Vec field_codeword(const ExtContext& ext, ExtElem b, std::span<const ExtElem> d) {
  Vec c(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) c[i] = ext.trace(ext.mul(b, d[i]));
  return c;
}

unsigned code_dimension(const DefiningSet& d) {
  const unsigned m = d.dimension();
  Matrix g(m, d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto p = d.point(i);
    for (unsigned j = 0; j < m; ++j) g(j, i) = p[j];
  }
  return static_cast<unsigned>(rank(d.form().field(), std::move(g)));
}

namespace {

using RawEnumerator = std::map<std::vector<std::uint32_t>, std::uint64_t>;

// Enumerates b whose digits 1..m-1 encode an index in [outer_begin,
// outer_end); digit 0 runs innermost. partial[k] holds sum_{j >= k} b_j d_j
// per coordinate, so changing digit k only rebuilds levels <= k.
RawEnumerator enumerate_range(const DefiningSet& d, std::uint64_t outer_begin, std::uint64_t outer_end) {
  const FieldContext& F = d.form().field();
  const std::uint32_t q = F.order();
  const unsigned m = d.dimension();
  const std::size_t n = d.size();

  // column-major copy: col[j][i] = coordinate j of point i
  std::vector<Vec> col(m, Vec(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto p = d.point(i);
    for (unsigned j = 0; j < m; ++j) col[j][i] = p[j];
  }

  Vec outer = vector_at(outer_begin, q, m > 0 ? m - 1 : 0);  // digits 1..m-1
  std::vector<Vec> partial(m + 1, Vec(n, 0));
  auto rebuild = [&](unsigned top) {
    for (unsigned k = top + 1; k-- > 1;) {
      const Elem bk = outer[k - 1];
      for (std::size_t i = 0; i < n; ++i) partial[k][i] = F.add(partial[k + 1][i], F.mul(bk, col[k][i]));
    }
  };
  if (m > 1) rebuild(m - 1);

  RawEnumerator out;
  std::vector<std::uint32_t> counts(q);
  for (std::uint64_t o = outer_begin; o < outer_end; ++o) {
    const Vec& base = partial[m > 1 ? 1 : m];
    for (Elem t = 0; t < q; ++t) {
      std::fill(counts.begin(), counts.end(), 0);
      if (m == 0) {
        counts[0] = static_cast<std::uint32_t>(n);
      } else {
        for (std::size_t i = 0; i < n; ++i) ++counts[F.add(base[i], F.mul(t, col[0][i]))];
      }
      ++out[counts];
      if (m == 0) break;
    }
    if (o + 1 == outer_end || m <= 1) continue;
    // advance digits 1..m-1 and rebuild the levels that changed
    unsigned k = 0;
    while (k < m - 1) {
      if (++outer[k] < q) break;
      outer[k] = 0;
      ++k;
    }
    rebuild(std::min(k + 1, m - 1));
  }
  return out;
}

}  // namespace

CompleteWeightEnumerator brute_cwe(const DefiningSet& d, const EnumerationOptions& opts) {
  const FieldContext& F = d.form().field();
  const std::uint32_t q = F.order();
  const unsigned m = d.dimension();
  space_size(q, m, opts.limits);
  const std::uint64_t outer_total = m > 0 ? space_size(q, m - 1, opts.limits) : 1;

  const unsigned workers = std::max(1U, std::min<unsigned>(opts.workers, static_cast<unsigned>(outer_total)));
  std::vector<RawEnumerator> parts(workers);
  if (workers == 1) {
    parts[0] = enumerate_range(d, 0, outer_total);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = outer_total * w / workers;
      const std::uint64_t end = outer_total * (w + 1) / workers;
      threads.emplace_back([&parts, &d, w, begin, end] { parts[w] = enumerate_range(d, begin, end); });
    }
    for (auto& t : threads) t.join();
  }

  CompleteWeightEnumerator cwe;
  cwe.alphabet = q;
  cwe.length = d.size();
  for (const auto& part : parts) {
    for (const auto& [k, c] : part) {
      std::vector<BigInt> key(k.begin(), k.end());
      cwe.terms[std::move(key)] += c;
    }
  }
  return cwe;
}

WeightDistribution brute_wd(const DefiningSet& d, const EnumerationOptions& opts) {
  return brute_cwe(d, opts).weight_marginal();
}

}  // namespace qfc
