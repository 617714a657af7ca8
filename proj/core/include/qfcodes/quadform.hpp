#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qfcodes/extension.hpp"
#include "qfcodes/field.hpp"
#include "qfcodes/matrix.hpp"

namespace qfc {

/// Q(x) = sum_{i <= j} a_ij x_i x_j over F_q. Indices are 0-based here; the
/// CLI's coefficient syntax is 1-based.
class QuadForm {
 public:
  QuadForm(FieldPtr field, unsigned m);

  /// The form x -> x^T S x for a symmetric S.
  static QuadForm from_half_gram(FieldPtr field, const Matrix& s);

  const FieldContext& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  unsigned variables() const noexcept { return m_; }

  Elem coefficient(unsigned i, unsigned j) const;
  void set_coefficient(unsigned i, unsigned j, Elem c);

  /// Throws DimError when |x| != m.
  Elem evaluate(std::span<const Elem> x) const;

  /// B(x, y) = Q(x + y) - Q(x) - Q(y).
  Elem polar(std::span<const Elem> x, std::span<const Elem> y) const;

  /// Matrix of B in the coordinate basis; diagonal entries are 2 a_ii.
  Matrix gram() const;
  /// Gram / 2, so that Q(x) = x^T S x.
  Matrix half_gram() const;

  /// The form x -> Q(T x).
  QuadForm compose(const Matrix& t) const;

  bool is_zero() const;

  bool operator==(const QuadForm& other) const {
    return *field_ == *other.field_ && m_ == other.m_ && coeffs_ == other.coeffs_;
  }

 private:
  FieldPtr field_;
  unsigned m_;
  std::vector<Elem> coeffs_;  // m x m, only i <= j used
};

enum class FormType { I, II, III };

std::string to_string(FormType t);

/// Equivalence class of a quadratic form under nonsingular coordinate change.
struct FormClass {
  unsigned rank = 0;
  FormType type = FormType::I;
  int epsilon = 1;  ///< +1 (Type I) or -1 (Type III); 0 for odd rank
  int eta_mu = 0;   ///< eta(mu) for odd rank; 0 for even rank

  static FormClass hyperbolic(unsigned r) { return {r, FormType::I, 1, 0}; }
  static FormClass elliptic(unsigned r) { return {r, FormType::III, -1, 0}; }
  static FormClass odd(unsigned r, int eta_mu) { return {r, FormType::II, 0, eta_mu}; }

  bool operator==(const FormClass&) const = default;
};

std::string to_string(const FormClass& c);

/// Every class of rank <= m: the degenerate rank-0 form, Types I and III for
/// even rank, Type II with mu = 1 and mu = gamma for odd rank.
std::vector<FormClass> all_classes(unsigned m);

/// Sign convention for the character argument in the joint counts of
/// Type I / III forms: Paper uses eta(4 a Qhat(b) - v^2) as printed,
/// Reflected uses eta(v^2 - 4 a Qhat(b)).
enum class Convention { Paper, Reflected };

std::string to_string(Convention c);

/// Q(x) = standard(transform * x) with `standard` the canonical form of
/// `form_class`; equivalently Gram(Q) = T^T Gram(standard) T.
struct Standardization {
  FormClass form_class;
  Matrix transform;
  QuadForm standard;
};

/// Basis of the radical {y : B(x, y) = 0 for all x}.
std::vector<Vec> radical(const QuadForm& q);

unsigned form_rank(const QuadForm& q);

FormClass classify(const QuadForm& q);

Standardization standardize(const QuadForm& q);

/// mu in {1, gamma} for a Type II class; 1 otherwise.
Elem standard_mu(const FieldContext& f, const FormClass& c);

/// Canonical representative: B_r, B_{r-1} + mu x_r^2, or
/// B_{r-2} + x_{r-1}^2 - gamma x_r^2, padded with inert variables up to m.
QuadForm standard_form(FieldPtr field, const FormClass& c, unsigned m);

/// The form Qhat(b) = Q(G^{-1} b) attached to the canonical representative:
/// B_r, B_{r-1} + x_r^2 / (4 mu), or B_{r-2} + x_{r-1}^2 / 4 - x_r^2 / (4 gamma).
QuadForm hat_form(FieldPtr field, const FormClass& c, unsigned m);

/// Qhat(b) evaluated directly on the first rank coordinates of b.
Elem evaluate_hat(const FieldContext& f, const FormClass& c, std::span<const Elem> b);

/// Recovers the coordinate form of f : F_{q^m} -> F_q in the given basis by
/// polarization and checks it against f on every element. Throws
/// NotAQuadraticForm if they disagree anywhere.
QuadForm form_from_function(const ExtContext& ext, const std::function<Elem(ExtElem)>& f,
                            std::span<const ExtElem> basis);

/// f(x) = Tr(sum_i c_i x^(q^i + 1)).
std::function<Elem(ExtElem)> trace_quadratic(const ExtContext& ext, std::vector<ExtElem> coeffs);

}  // namespace qfc
