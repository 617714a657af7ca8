#include "qfcodes/extension.hpp"

#include <string>

#include "poly.hpp"
#include "qfcodes/errors.hpp"

namespace qfc {

ExtContext ExtContext::make(FieldPtr base, unsigned m, std::uint64_t max_size) {
  if (m < 1) throw Error(ErrorKind::InvalidDegree, "extension degree must be at least 1");
  const std::uint64_t q = base->order();
  std::uint64_t size = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (size > max_size / q) {
      throw Error(ErrorKind::SizeLimit, "q^m exceeds enumeration bound " + std::to_string(max_size));
    }
    size *= q;
  }

  ExtContext ctx;
  ctx.base_ = std::move(base);
  ctx.m_ = m;
  ctx.size_ = size;
  const FieldContext& F = *ctx.base_;
  if (m == 1) {
    ctx.modulus_ = {0, 1};
  } else {
    auto h = detail::smallest_irreducible(F, m);
    ctx.modulus_.assign(h.begin(), h.end());
  }

  ctx.frobenius_ = Matrix(m, m);
  for (unsigned i = 0; i < m; ++i) {
    Vec yi(m, 0);
    if (m == 1) {
      yi[0] = 1;
    } else {
      yi[i] = 1;
    }
    // (y^i)^q by square-and-multiply on coordinate vectors
    Vec result(m, 0);
    result[0] = 1;
    Vec b = yi;
    std::uint64_t k = q;
    while (k != 0) {
      if (k & 1U) result = ctx.mul_coords(result, b);
      b = ctx.mul_coords(b, b);
      k >>= 1U;
    }
    for (unsigned r = 0; r < m; ++r) ctx.frobenius_(r, i) = result[r];
  }
  return ctx;
}

Vec ExtContext::coords(ExtElem x) const {
  const std::uint64_t q = base_->order();
  Vec out(m_);
  for (unsigned i = 0; i < m_; ++i) {
    out[i] = static_cast<Elem>(x % q);
    x /= q;
  }
  return out;
}

ExtElem ExtContext::encode(std::span<const Elem> c) const {
  const std::uint64_t q = base_->order();
  ExtElem x = 0;
  for (std::size_t i = c.size(); i-- > 0;) x = x * q + c[i];
  return x;
}

Vec ExtContext::mul_coords(const Vec& a, const Vec& b) const {
  const FieldContext& F = *base_;
  detail::Poly pa(a.begin(), a.end()), pb(b.begin(), b.end());
  detail::trim(pa);
  detail::trim(pb);
  detail::Poly h(modulus_.begin(), modulus_.end());
  auto r = detail::poly_mod(F, detail::poly_mul(F, pa, pb), h);
  Vec out(m_, 0);
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = r[i];
  return out;
}

ExtElem ExtContext::add(ExtElem x, ExtElem y) const {
  const FieldContext& F = *base_;
  auto a = coords(x), b = coords(y);
  for (unsigned i = 0; i < m_; ++i) a[i] = F.add(a[i], b[i]);
  return encode(a);
}

ExtElem ExtContext::sub(ExtElem x, ExtElem y) const {
  const FieldContext& F = *base_;
  auto a = coords(x), b = coords(y);
  for (unsigned i = 0; i < m_; ++i) a[i] = F.sub(a[i], b[i]);
  return encode(a);
}

ExtElem ExtContext::mul(ExtElem x, ExtElem y) const {
  return encode(mul_coords(coords(x), coords(y)));
}

ExtElem ExtContext::pow(ExtElem x, std::uint64_t k) const {
  Vec result(m_, 0);
  result[0] = 1;
  Vec b = coords(x);
  while (k != 0) {
    if (k & 1U) result = mul_coords(result, b);
    b = mul_coords(b, b);
    k >>= 1U;
  }
  return encode(result);
}

ExtElem ExtContext::frobenius(ExtElem x) const {
  const auto c = coords(x);
  return encode(multiply(*base_, frobenius_, c));
}

Elem ExtContext::trace(ExtElem x) const {
  const FieldContext& F = *base_;
  Vec acc(m_, 0);
  Vec cur = coords(x);
  for (unsigned i = 0; i < m_; ++i) {
    for (unsigned r = 0; r < m_; ++r) acc[r] = F.add(acc[r], cur[r]);
    cur = multiply(F, frobenius_, cur);
  }
  return acc[0];
}

std::vector<ExtElem> ExtContext::polynomial_basis() const {
  std::vector<ExtElem> basis(m_);
  Vec c(m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    c.assign(m_, 0);
    c[i] = 1;
    basis[i] = encode(c);
  }
  return basis;
}

std::vector<ExtElem> ExtContext::dual_basis(std::span<const ExtElem> basis) const {
  if (basis.size() != m_) {
    throw Error(ErrorKind::SingularBasis, "expected " + std::to_string(m_) + " basis elements");
  }
  // M(j, k) = Tr(b_j y^k); the dual element a_i has coordinate row A(i, .)
  // with A M^T = I.
  const auto poly = polynomial_basis();
  Matrix trace_matrix(m_, m_);
  for (unsigned j = 0; j < m_; ++j) {
    for (unsigned k = 0; k < m_; ++k) trace_matrix(j, k) = trace(mul(basis[j], poly[k]));
  }
  auto inv = inverse(*base_, transpose(trace_matrix));
  if (!inv) throw Error(ErrorKind::SingularBasis, "input elements are linearly dependent");
  std::vector<ExtElem> dual(m_);
  for (unsigned i = 0; i < m_; ++i) dual[i] = encode(inv->row(i));
  return dual;
}

}  // namespace qfc
