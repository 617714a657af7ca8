#include "qfcodes/quadform.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "qfcodes/errors.hpp"

namespace qfc {

QuadForm::QuadForm(FieldPtr field, unsigned m)
    : field_(std::move(field)), m_(m), coeffs_(static_cast<std::size_t>(m) * m, 0) {}

QuadForm QuadForm::from_half_gram(FieldPtr field, const Matrix& s) {
  const auto m = static_cast<unsigned>(s.rows());
  QuadForm q(std::move(field), m);
  const FieldContext& F = *q.field_;
  for (unsigned i = 0; i < m; ++i) {
    q.set_coefficient(i, i, s(i, i));
    for (unsigned j = i + 1; j < m; ++j) q.set_coefficient(i, j, F.add(s(i, j), s(j, i)));
  }
  return q;
}

Elem QuadForm::coefficient(unsigned i, unsigned j) const {
  if (i > j) std::swap(i, j);
  if (j >= m_) throw Error(ErrorKind::DimError, "coefficient index out of range");
  return coeffs_[i * m_ + j];
}

void QuadForm::set_coefficient(unsigned i, unsigned j, Elem c) {
  if (i > j) std::swap(i, j);
  if (j >= m_) throw Error(ErrorKind::DimError, "coefficient index out of range");
  if (c >= field_->order()) throw Error(ErrorKind::InvalidInput, "coefficient is not a field element");
  coeffs_[i * m_ + j] = c;
}

Elem QuadForm::evaluate(std::span<const Elem> x) const {
  if (x.size() != m_) {
    throw Error(ErrorKind::DimError,
                "vector of length " + std::to_string(x.size()) + " for form in " + std::to_string(m_) + " variables");
  }
  const FieldContext& F = *field_;
  Elem acc = 0;
  for (unsigned i = 0; i < m_; ++i) {
    if (x[i] == 0) continue;
    Elem row = 0;
    for (unsigned j = i; j < m_; ++j) row = F.add(row, F.mul(coeffs_[i * m_ + j], x[j]));
    acc = F.add(acc, F.mul(x[i], row));
  }
  return acc;
}

Elem QuadForm::polar(std::span<const Elem> x, std::span<const Elem> y) const {
  const FieldContext& F = *field_;
  Vec s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = F.add(x[i], y[i]);
  return F.sub(F.sub(evaluate(s), evaluate(x)), evaluate(y));
}

Matrix QuadForm::gram() const {
  const FieldContext& F = *field_;
  Matrix g(m_, m_);
  for (unsigned i = 0; i < m_; ++i) {
    g(i, i) = F.add(coeffs_[i * m_ + i], coeffs_[i * m_ + i]);
    for (unsigned j = i + 1; j < m_; ++j) {
      g(i, j) = coeffs_[i * m_ + j];
      g(j, i) = coeffs_[i * m_ + j];
    }
  }
  return g;
}

Matrix QuadForm::half_gram() const {
  const FieldContext& F = *field_;
  const Elem half = F.inv(2);
  Matrix s(m_, m_);
  for (unsigned i = 0; i < m_; ++i) {
    s(i, i) = coeffs_[i * m_ + i];
    for (unsigned j = i + 1; j < m_; ++j) {
      s(i, j) = F.mul(half, coeffs_[i * m_ + j]);
      s(j, i) = s(i, j);
    }
  }
  return s;
}

QuadForm QuadForm::compose(const Matrix& t) const {
  const FieldContext& F = *field_;
  return from_half_gram(field_, multiply(F, multiply(F, transpose(t), half_gram()), t));
}

bool QuadForm::is_zero() const {
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

std::string to_string(FormType t) {
  switch (t) {
    case FormType::I: return "I";
    case FormType::II: return "II";
    case FormType::III: return "III";
  }
  return "?";
}

std::string to_string(const FormClass& c) {
  std::string s = "r=" + std::to_string(c.rank) + ",type=" + to_string(c.type);
  if (c.type == FormType::II) s += c.eta_mu == 1 ? ",mu=1" : ",mu=gamma";
  return s;
}

std::string to_string(Convention c) { return c == Convention::Paper ? "paper" : "reflected"; }

std::vector<FormClass> all_classes(unsigned m) {
  std::vector<FormClass> out{FormClass::hyperbolic(0)};
  for (unsigned r = 1; r <= m; ++r) {
    if (r % 2 == 0) {
      out.push_back(FormClass::hyperbolic(r));
      out.push_back(FormClass::elliptic(r));
    } else {
      out.push_back(FormClass::odd(r, 1));
      out.push_back(FormClass::odd(r, -1));
    }
  }
  return out;
}

namespace {

struct Diagonalization {
  Matrix basis;  // columns p_i with B(p_i, p_j) = 0 for i != j
  Vec values;    // Q(p_i)
};

// Symmetric congruence elimination on S = Gram / 2.
Diagonalization diagonalize(const FieldContext& F, Matrix a) {
  const std::size_t m = a.rows();
  Matrix p = Matrix::identity(m);

  auto add_multiple = [&](std::size_t dst, std::size_t src, Elem t) {
    // basis vector dst <- dst + t * src, applied as a congruence
    for (std::size_t r = 0; r < m; ++r) a(r, dst) = F.add(a(r, dst), F.mul(t, a(r, src)));
    for (std::size_t c = 0; c < m; ++c) a(dst, c) = F.add(a(dst, c), F.mul(t, a(src, c)));
    for (std::size_t r = 0; r < m; ++r) p(r, dst) = F.add(p(r, dst), F.mul(t, p(r, src)));
  };
  auto swap_basis = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m; ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t c = 0; c < m; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < m; ++r) std::swap(p(r, i), p(r, j));
  };

  for (std::size_t k = 0; k < m; ++k) {
    std::size_t pivot = m;
    for (std::size_t i = k; i < m; ++i) {
      if (a(i, i) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == m) {
      // All remaining diagonal entries vanish: x_i <- x_i + x_j makes
      // a(i, i) = 2 a(i, j) nonzero.
      for (std::size_t i = k; i < m && pivot == m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
          if (a(i, j) != 0) {
            add_multiple(i, j, 1);
            pivot = i;
            break;
          }
        }
      }
      if (pivot == m) break;
    }
    swap_basis(k, pivot);
    const Elem inv_pivot = F.inv(a(k, k));
    for (std::size_t j = k + 1; j < m; ++j) {
      if (a(k, j) == 0) continue;
      add_multiple(j, k, F.neg(F.mul(a(k, j), inv_pivot)));
    }
  }
  Vec values(m);
  for (std::size_t i = 0; i < m; ++i) values[i] = a(i, i);
  return {std::move(p), std::move(values)};
}

Vec scaled_sum(const FieldContext& F, std::span<const Vec> vs, std::span<const Elem> coeffs) {
  Vec out(vs[0].size(), 0);
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(out[i], F.mul(coeffs[k], vs[k][i]));
  }
  return out;
}

Vec scale(const FieldContext& F, Vec v, Elem t) {
  for (auto& x : v) x = F.mul(x, t);
  return v;
}

struct Weighted {
  Vec vec;
  Elem value;
};

// Solves d0 x^2 + d1 y^2 = target with (x, y) != 0, smallest x first.
// A nondegenerate binary form represents every nonzero element, so this
// always succeeds for target != 0.
std::pair<Elem, Elem> represent(const FieldContext& F, Elem d0, Elem d1, Elem target) {
  for (Elem x = 0; x < F.order(); ++x) {
    const Elem t = F.div(F.sub(target, F.mul(d0, F.mul(x, x))), d1);
    if (t == 0 && x != 0) return {x, 0};
    if (F.eta(t) == 1) return {x, F.sqrt(t)};
  }
  throw Error(ErrorKind::InternalInconsistency, "binary form fails to represent a value");
}

}  // namespace

std::vector<Vec> radical(const QuadForm& q) { return nullspace(q.field(), q.gram()); }

unsigned form_rank(const QuadForm& q) {
  return static_cast<unsigned>(rank(q.field(), q.gram()));
}

FormClass classify(const QuadForm& q) {
  const FieldContext& F = q.field();
  const auto diag = diagonalize(F, q.half_gram());
  unsigned r = 0;
  Elem disc = 1;
  for (auto d : diag.values) {
    if (d == 0) continue;
    ++r;
    disc = F.mul(disc, d);
  }
  const Elem minus_one = F.neg(1);
  if (r % 2 == 0) {
    if ((r / 2) % 2 == 1) disc = F.mul(disc, minus_one);
    return F.eta(disc) == 1 ? FormClass::hyperbolic(r) : FormClass::elliptic(r);
  }
  if (((r - 1) / 2) % 2 == 1) disc = F.mul(disc, minus_one);
  return FormClass::odd(r, F.eta(disc));
}

Standardization standardize(const QuadForm& q) {
  const FieldContext& F = q.field();
  const unsigned m = q.variables();
  const auto diag = diagonalize(F, q.half_gram());

  std::vector<Weighted> pending;
  std::vector<Vec> radical_part;
  for (unsigned i = 0; i < m; ++i) {
    if (diag.values[i] == 0) {
      radical_part.push_back(diag.basis.column(i));
    } else {
      pending.push_back({diag.basis.column(i), diag.values[i]});
    }
  }
  const unsigned r = static_cast<unsigned>(pending.size());

  // Split off hyperbolic planes until at most an anisotropic remainder of
  // dimension <= 2 is left.
  std::vector<std::pair<Vec, Vec>> planes;
  while (pending.size() >= 2) {
    std::vector<std::size_t> subset;
    std::vector<Elem> c;
    const std::size_t k = pending.size() >= 3 ? 3 : 2;
    for (std::size_t i = 0; i < k && subset.empty(); ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        const Elem di = pending[i].value, dj = pending[j].value;
        if (F.eta(F.neg(F.mul(di, dj))) == 1) {
          subset = {i, j};
          c = {F.sqrt(F.neg(F.div(dj, di))), 1};
          break;
        }
      }
    }
    if (subset.empty()) {
      if (k == 2) break;
      // d0 x^2 + d1 y^2 = -d2 gives the isotropic vector (x, y, 1).
      const auto [x, y] = represent(F, pending[0].value, pending[1].value, F.neg(pending[2].value));
      subset = {0, 1, 2};
      c = {x, y, 1};
    }

    std::vector<Vec> vs;
    Vec ds;
    for (auto idx : subset) {
      vs.push_back(pending[idx].vec);
      ds.push_back(pending[idx].value);
    }
    const Vec u = scaled_sum(F, vs, c);
    std::size_t pick = 0;
    while (c[pick] == 0) ++pick;
    // u' = (w - u / (2 c)) / (2 c d) with w the picked vector: Q(u') = 0 and
    // B(u, u') = 1, so Q(s u + t u') = s t.
    Vec c_partner(subset.size(), 0);
    const Elem two_c = F.add(c[pick], c[pick]);
    for (std::size_t i = 0; i < subset.size(); ++i) c_partner[i] = F.neg(F.div(c[i], two_c));
    c_partner[pick] = F.add(c_partner[pick], 1);
    const Elem norm = F.inv(F.mul(two_c, ds[pick]));
    for (auto& x : c_partner) x = F.mul(x, norm);
    const Vec u_partner = scaled_sum(F, vs, c_partner);

    std::optional<Weighted> complement;
    if (subset.size() == 3) {
      std::array<Elem, 3> a{}, b{};
      for (std::size_t i = 0; i < 3; ++i) {
        a[i] = F.mul(c[i], ds[i]);
        b[i] = F.mul(c_partner[i], ds[i]);
      }
      const Vec z{F.sub(F.mul(a[1], b[2]), F.mul(a[2], b[1])),
                  F.sub(F.mul(a[2], b[0]), F.mul(a[0], b[2])),
                  F.sub(F.mul(a[0], b[1]), F.mul(a[1], b[0]))};
      Elem value = 0;
      for (std::size_t i = 0; i < 3; ++i) value = F.add(value, F.mul(ds[i], F.mul(z[i], z[i])));
      complement = Weighted{scaled_sum(F, vs, z), value};
    }

    planes.emplace_back(u, u_partner);
    std::vector<Weighted> rest;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      bool used = false;
      for (auto idx : subset) used = used || idx == i;
      if (!used) rest.push_back(std::move(pending[i]));
    }
    if (complement) rest.push_back(std::move(*complement));
    pending = std::move(rest);
  }

  const Elem gamma = F.fixed_nonsquare();
  FormClass cls;
  std::vector<Vec> tail;
  if (pending.empty()) {
    cls = FormClass::hyperbolic(r);
  } else if (pending.size() == 1) {
    const int eta_mu = F.eta(pending[0].value);
    const Elem mu = eta_mu == 1 ? 1 : gamma;
    const Elem s = F.sqrt(F.div(pending[0].value, mu));
    tail.push_back(scale(F, pending[0].vec, F.inv(s)));
    cls = FormClass::odd(r, eta_mu);
  } else {
    const Elem d0 = pending[0].value, d1 = pending[1].value;
    const auto [x, y] = represent(F, d0, d1, 1);
    const std::array<Vec, 2> vs{pending[0].vec, pending[1].vec};
    const std::array<Elem, 2> first{x, y};
    const std::array<Elem, 2> second{F.mul(y, d1), F.neg(F.mul(x, d0))};
    const Elem s = F.sqrt(F.div(F.mul(d0, d1), F.neg(gamma)));
    tail.push_back(scaled_sum(F, vs, first));
    tail.push_back(scale(F, scaled_sum(F, vs, second), F.inv(s)));
    cls = FormClass::elliptic(r);
  }

  std::vector<Vec> columns;
  for (auto& [u, w] : planes) {
    columns.push_back(u);
    columns.push_back(w);
  }
  for (auto& v : tail) columns.push_back(v);
  for (auto& v : radical_part) columns.push_back(v);

  Standardization out{cls, Matrix::identity(m), standard_form(q.field_ptr(), cls, m)};
  if (m > 0) {
    auto t = inverse(F, Matrix::from_columns(columns));
    if (!t) throw Error(ErrorKind::InternalInconsistency, "standardizing basis is singular");
    out.transform = std::move(*t);
  }
  return out;
}

Elem standard_mu(const FieldContext& f, const FormClass& c) {
  return c.type == FormType::II && c.eta_mu == -1 ? f.fixed_nonsquare() : 1;
}

namespace {

void add_hyperbolic(QuadForm& q, unsigned pairs) {
  for (unsigned i = 0; i < pairs; ++i) q.set_coefficient(2 * i, 2 * i + 1, 1);
}

void check_class(const FormClass& c, unsigned m) {
  if (c.rank > m) throw Error(ErrorKind::InvalidInput, "rank exceeds number of variables");
  const bool even = c.rank % 2 == 0;
  if (even == (c.type == FormType::II)) throw Error(ErrorKind::InvalidInput, "type does not match rank parity");
  if (c.type == FormType::III && c.rank == 0) throw Error(ErrorKind::InvalidInput, "Type III needs rank >= 2");
}

}  // namespace

QuadForm standard_form(FieldPtr field, const FormClass& c, unsigned m) {
  check_class(c, m);
  QuadForm q(field, m);
  const FieldContext& F = *field;
  const unsigned r = c.rank;
  switch (c.type) {
    case FormType::I:
      add_hyperbolic(q, r / 2);
      break;
    case FormType::II:
      add_hyperbolic(q, (r - 1) / 2);
      q.set_coefficient(r - 1, r - 1, standard_mu(F, c));
      break;
    case FormType::III:
      add_hyperbolic(q, (r - 2) / 2);
      q.set_coefficient(r - 2, r - 2, 1);
      q.set_coefficient(r - 1, r - 1, F.neg(F.fixed_nonsquare()));
      break;
  }
  return q;
}

QuadForm hat_form(FieldPtr field, const FormClass& c, unsigned m) {
  check_class(c, m);
  QuadForm q(field, m);
  const FieldContext& F = *field;
  const unsigned r = c.rank;
  const Elem quarter = F.inv(F.from_integer(4));
  switch (c.type) {
    case FormType::I:
      add_hyperbolic(q, r / 2);
      break;
    case FormType::II:
      add_hyperbolic(q, (r - 1) / 2);
      q.set_coefficient(r - 1, r - 1, F.mul(quarter, F.inv(standard_mu(F, c))));
      break;
    case FormType::III:
      add_hyperbolic(q, (r - 2) / 2);
      q.set_coefficient(r - 2, r - 2, quarter);
      q.set_coefficient(r - 1, r - 1, F.neg(F.mul(quarter, F.inv(F.fixed_nonsquare()))));
      break;
  }
  return q;
}

Elem evaluate_hat(const FieldContext& f, const FormClass& c, std::span<const Elem> b) {
  if (b.size() < c.rank) throw Error(ErrorKind::DimError, "vector shorter than the rank");
  const unsigned r = c.rank;
  const unsigned pairs = c.type == FormType::I ? r / 2 : c.type == FormType::II ? (r - 1) / 2 : (r - 2) / 2;
  Elem acc = 0;
  for (unsigned i = 0; i < pairs; ++i) acc = f.add(acc, f.mul(b[2 * i], b[2 * i + 1]));
  const Elem quarter = f.inv(f.from_integer(4));
  if (c.type == FormType::II) {
    const Elem coeff = f.mul(quarter, f.inv(standard_mu(f, c)));
    acc = f.add(acc, f.mul(coeff, f.mul(b[r - 1], b[r - 1])));
  } else if (c.type == FormType::III) {
    acc = f.add(acc, f.mul(quarter, f.mul(b[r - 2], b[r - 2])));
    const Elem coeff = f.mul(quarter, f.inv(f.fixed_nonsquare()));
    acc = f.sub(acc, f.mul(coeff, f.mul(b[r - 1], b[r - 1])));
  }
  return acc;
}

QuadForm form_from_function(const ExtContext& ext, const std::function<Elem(ExtElem)>& f,
                            std::span<const ExtElem> basis) {
  const unsigned m = ext.degree();
  if (basis.size() != m) throw Error(ErrorKind::DimError, "basis must have m elements");
  const FieldContext& F = ext.base();
  QuadForm q(ext.base_ptr(), m);
  for (unsigned i = 0; i < m; ++i) {
    const Elem fi = f(basis[i]);
    q.set_coefficient(i, i, fi);
    for (unsigned j = i + 1; j < m; ++j) {
      const Elem fij = f(ext.add(basis[i], basis[j]));
      q.set_coefficient(i, j, F.sub(F.sub(fij, fi), f(basis[j])));
    }
  }

  std::vector<Vec> basis_coords;
  for (auto b : basis) basis_coords.push_back(ext.coords(b));
  Vec x(m, 0);
  const std::uint32_t qo = F.order();
  for (std::uint64_t idx = 0; idx < ext.size(); ++idx) {
    const Vec point = scaled_sum(F, basis_coords, x);
    if (q.evaluate(x) != f(ext.encode(point))) {
      throw Error(ErrorKind::NotAQuadraticForm,
                  "polarized form disagrees with the function at element " + std::to_string(ext.encode(point)));
    }
    for (unsigned k = 0; k < m; ++k) {
      if (++x[k] < qo) break;
      x[k] = 0;
    }
  }
  return q;
}

std::function<Elem(ExtElem)> trace_quadratic(const ExtContext& ext, std::vector<ExtElem> coeffs) {
  return [&ext, coeffs = std::move(coeffs)](ExtElem x) {
    ExtElem acc = 0;
    ExtElem frob = x;  // x^(q^i)
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] != 0) acc = ext.add(acc, ext.mul(coeffs[i], ext.mul(frob, x)));
      frob = ext.frobenius(frob);
    }
    return ext.trace(acc);
  };
}

}  // namespace qfc
