#include "qfcodes/field.hpp"

#include <string>

#include "poly.hpp"
#include "qfcodes/errors.hpp"

namespace qfc {

namespace {

constexpr std::uint32_t kDenseTableLimit = 256;

struct PrimeOps {
  unsigned p;
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p);
  }
  Elem inv(Elem a) const {
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a % p;
    unsigned k = p - 2;
    while (k != 0) {
      if (k & 1U) result = result * base % p;
      base = base * base % p;
      k >>= 1U;
    }
    return static_cast<Elem>(result);
  }
  std::uint64_t order() const { return p; }
};

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Slow multiplication used only while the log tables are being built.
struct PolyRepr {
  PrimeOps F;
  unsigned e;
  detail::Poly modulus;
  std::uint32_t q;

  detail::Poly decode(Elem a) const {
    detail::Poly f(e, 0);
    for (unsigned i = 0; i < e; ++i) {
      f[i] = a % F.p;
      a /= F.p;
    }
    detail::trim(f);
    return f;
  }
  Elem encode(const detail::Poly& f) const {
    Elem a = 0;
    for (std::size_t i = f.size(); i-- > 0;) a = a * F.p + f[i];
    return a;
  }
  Elem mul(Elem a, Elem b) const {
    return encode(detail::poly_mod(F, detail::poly_mul(F, decode(a), decode(b)), modulus));
  }
  Elem pow(Elem a, std::uint64_t k) const {
    Elem result = 1;
    while (k != 0) {
      if (k & 1U) result = mul(result, a);
      a = mul(a, a);
      k >>= 1U;
    }
    return result;
  }
};

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<unsigned, unsigned> split_prime_power(std::uint64_t q) {
  if (q < 3) throw Error(ErrorKind::InvalidPrime, "q = " + std::to_string(q) + " is not an odd prime power");
  const auto factors = prime_factors(q);
  if (factors.size() != 1 || factors[0] == 2) {
    throw Error(ErrorKind::InvalidPrime, "q = " + std::to_string(q) + " is not an odd prime power");
  }
  unsigned e = 0;
  while (q > 1) {
    q /= factors[0];
    ++e;
  }
  return {static_cast<unsigned>(factors[0]), e};
}

FieldContext FieldContext::make(unsigned p, unsigned e, std::uint64_t max_order) {
  if (p % 2 == 0 || !is_prime(p)) {
    throw Error(ErrorKind::InvalidPrime, "p = " + std::to_string(p) + " must be an odd prime");
  }
  if (e < 1) throw Error(ErrorKind::InvalidDegree, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > max_order) {
      throw Error(ErrorKind::SizeLimit, "field order exceeds bound " + std::to_string(max_order));
    }
  }

  FieldContext ctx;
  ctx.p_ = p;
  ctx.e_ = e;
  ctx.q_ = static_cast<std::uint32_t>(q);

  PrimeOps prime{p};
  detail::Poly modulus = e == 1 ? detail::Poly{0, 1} : detail::smallest_irreducible(prime, e);
  ctx.modulus_.assign(modulus.begin(), modulus.end());
  PolyRepr repr{prime, e, modulus, ctx.q_};

  const std::uint32_t n = ctx.q_ - 1;
  const auto factors = prime_factors(n);
  Elem g = 0;
  for (Elem cand = 1; cand < ctx.q_; ++cand) {
    bool primitive = true;
    for (auto l : factors) {
      if (repr.pow(cand, n / l) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }

  ctx.exp_.assign(2 * static_cast<std::size_t>(n), 0);
  ctx.log_.assign(ctx.q_, 0);
  Elem x = 1;
  for (std::uint32_t k = 0; k < n; ++k) {
    ctx.exp_[k] = x;
    ctx.exp_[k + n] = x;
    ctx.log_[x] = k;
    x = repr.mul(x, g);
  }

  ctx.neg_.assign(ctx.q_, 0);
  for (Elem a = 0; a < ctx.q_; ++a) {
    Elem r = 0, scale = 1, t = a;
    for (unsigned i = 0; i < e; ++i) {
      const unsigned d = t % p;
      r += ((p - d) % p) * scale;
      scale *= p;
      t /= p;
    }
    ctx.neg_[a] = r;
  }

  ctx.inv_.assign(ctx.q_, 0);
  for (Elem a = 1; a < ctx.q_; ++a) ctx.inv_[a] = ctx.exp_[(n - ctx.log_[a]) % n];

  ctx.eta_.assign(ctx.q_, 0);
  for (Elem a = 1; a < ctx.q_; ++a) {
    ctx.eta_[a] = repr.pow(a, n / 2) == 1 ? 1 : -1;
  }
  for (Elem a = 1; a < ctx.q_; ++a) {
    if (ctx.eta_[a] == -1) {
      ctx.nonsquare_ = a;
      break;
    }
  }

  if (ctx.q_ <= kDenseTableLimit) {
    const std::size_t size = static_cast<std::size_t>(ctx.q_) * ctx.q_;
    std::vector<Elem> add(size), mul(size);
    for (Elem a = 0; a < ctx.q_; ++a) {
      for (Elem b = 0; b < ctx.q_; ++b) {
        add[a * ctx.q_ + b] = ctx.add_slow(a, b);
        mul[a * ctx.q_ + b] = (a == 0 || b == 0) ? 0 : ctx.exp_[ctx.log_[a] + ctx.log_[b]];
      }
    }
    ctx.dense_add_ = std::move(add);
    ctx.dense_mul_ = std::move(mul);
  }
  return ctx;
}

Elem FieldContext::add_slow(Elem a, Elem b) const noexcept {
  if (e_ == 1) return (a + b) % p_;
  Elem r = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

Elem FieldContext::pow(Elem a, std::uint64_t k) const noexcept {
  if (k == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t n = q_ - 1;
  return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (k % n)) % n)];
}

Elem FieldContext::sqrt(Elem a) const {
  if (eta_[a] != 1) throw Error(ErrorKind::NotASquare, std::to_string(a) + " is not a square");
  const Elem root = exp_[log_[a] / 2];
  const Elem other = neg_[root];
  return root < other ? root : other;
}

Elem FieldContext::from_integer(long long n) const noexcept {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::vector<unsigned> FieldContext::digits(Elem a) const {
  std::vector<unsigned> out(e_);
  for (unsigned i = 0; i < e_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

}  // namespace qfc
