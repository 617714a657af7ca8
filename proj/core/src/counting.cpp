#include "qfcodes/counting.hpp"

#include <string>

#include "qfcodes/errors.hpp"

namespace qfc {

std::uint64_t space_size(std::uint32_t q, unsigned m, const EnumerationLimits& limits) {
  std::uint64_t size = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (size > limits.max_points / q) {
      throw Error(ErrorKind::SizeLimit, "q^m exceeds enumeration bound " + std::to_string(limits.max_points));
    }
    size *= q;
  }
  return size;
}

std::uint64_t vector_index(std::span<const Elem> x, std::uint32_t q) noexcept {
  std::uint64_t idx = 0;
  for (std::size_t i = x.size(); i-- > 0;) idx = idx * q + x[i];
  return idx;
}

Vec vector_at(std::uint64_t index, std::uint32_t q, unsigned m) {
  Vec x(m);
  for (unsigned i = 0; i < m; ++i) {
    x[i] = static_cast<Elem>(index % q);
    index /= q;
  }
  return x;
}

namespace {

long long eta_mu_a(const FieldContext& f, const FormClass& c, Elem a) {
  return static_cast<long long>(c.eta_mu) * f.eta(a);
}

}  // namespace

BigInt count_value(const FieldContext& f, const FormClass& c, unsigned m, Elem a) {
  if (c.rank > m) throw Error(ErrorKind::InvalidInput, "rank exceeds number of variables");
  const std::uint64_t q = f.order();
  const long long mm = m, r = c.rank;
  Rational n = rational_pow(q, mm - 1);
  if (c.type == FormType::II) {
    n += eta_mu_a(f, c, a) * rational_pow(q, mm - (r + 1) / 2);
  } else {
    n += c.epsilon * f.nonzero_character_sum(a) * rational_pow(q, mm - r / 2 - 1);
  }
  BigInt out = require_integer(n, "N_a");
  if (out < 0) throw Error(ErrorKind::FormulaDomainError, "negative N_a");
  return out;
}

BigInt count_joint(const FieldContext& f, const FormClass& c, unsigned m, Elem a, Elem v,
                   std::span<const Elem> b, Convention conv) {
  if (b.size() != m) throw Error(ErrorKind::DimError, "b must have m coordinates");
  if (c.rank > m) throw Error(ErrorKind::InvalidInput, "rank exceeds number of variables");
  bool nonzero = false, tail_nonzero = false;
  for (unsigned i = 0; i < m; ++i) {
    nonzero = nonzero || b[i] != 0;
    if (i >= c.rank) tail_nonzero = tail_nonzero || b[i] != 0;
  }
  if (!nonzero) throw Error(ErrorKind::ZeroVector, "b = 0 leaves the linear equation degenerate");

  const std::uint64_t q = f.order();
  const long long mm = m, r = c.rank;
  const bool odd = c.type == FormType::II;
  Rational n = rational_pow(q, mm - 2);

  if (tail_nonzero) {
    if (odd) {
      n += eta_mu_a(f, c, a) * rational_pow(q, mm - (r + 3) / 2);
    } else {
      n += c.epsilon * f.nonzero_character_sum(a) * rational_pow(q, mm - 2 - r / 2);
    }
    return require_integer(n, "N(a,v)");
  }

  const Elem hat = evaluate_hat(f, c, b);
  if (hat == 0) {
    if (v == 0) {
      if (odd) {
        n += eta_mu_a(f, c, a) * rational_pow(q, mm - (r + 1) / 2);
      } else {
        n += c.epsilon * f.nonzero_character_sum(a) * rational_pow(q, mm - 1 - r / 2);
      }
    }
    return require_integer(n, "N(a,v)");
  }

  // 4 a Qhat(b) - v^2
  const Elem arg = f.sub(f.mul(f.from_integer(4), f.mul(a, hat)), f.mul(v, v));
  if (odd) {
    const Elem mu = standard_mu(f, c);
    n += f.nonzero_character_sum(arg) * f.eta(f.mul(mu, hat)) * rational_pow(q, mm - (r + 3) / 2);
  } else {
    const Elem signed_arg = conv == Convention::Reflected ? f.neg(arg) : arg;
    n += c.epsilon * f.eta(signed_arg) * rational_pow(q, mm - 1 - r / 2);
  }
  return require_integer(n, "N(a,v)");
}

BigInt count_joint_general(const QuadForm& q, Elem a, Elem v, std::span<const Elem> b,
                           Convention conv) {
  const FieldContext& F = q.field();
  const auto std_form = standardize(q);
  // b.x = b.(T^{-1} y) = (T^{-T} b).y
  auto t_inv = inverse(F, std_form.transform);
  if (!t_inv) throw Error(ErrorKind::InternalInconsistency, "singular standardizing transform");
  const Vec b_std = multiply(F, transpose(*t_inv), b);
  return count_joint(F, std_form.form_class, q.variables(), a, v, b_std, conv);
}

std::vector<std::uint64_t> value_histogram(const QuadForm& q, const EnumerationLimits& limits) {
  const std::uint32_t order = q.field().order();
  space_size(order, q.variables(), limits);
  std::vector<std::uint64_t> counts(order, 0);
  Vec x(q.variables(), 0);
  do {
    ++counts[q.evaluate(x)];
  } while (next_vector(x, order));
  return counts;
}

std::vector<std::uint64_t> joint_histogram(const QuadForm& q, std::span<const Elem> b,
                                           const EnumerationLimits& limits) {
  if (b.size() != q.variables()) throw Error(ErrorKind::DimError, "b must have m coordinates");
  const FieldContext& F = q.field();
  const std::uint32_t order = F.order();
  space_size(order, q.variables(), limits);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(order) * order, 0);
  Vec x(q.variables(), 0);
  do {
    ++counts[static_cast<std::size_t>(q.evaluate(x)) * order + dot(F, b, x)];
  } while (next_vector(x, order));
  return counts;
}

std::uint64_t brute_count_value(const QuadForm& q, Elem a, const EnumerationLimits& limits) {
  return value_histogram(q, limits)[a];
}

std::uint64_t brute_count_joint(const QuadForm& q, Elem a, Elem v, std::span<const Elem> b,
                                const EnumerationLimits& limits) {
  return joint_histogram(q, b, limits)[static_cast<std::size_t>(a) * q.field().order() + v];
}

}  // namespace qfc
