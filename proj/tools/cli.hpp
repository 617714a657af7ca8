#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qfcodes/errors.hpp"
#include "qfcodes/quadform.hpp"
#include "qfcodes/verify.hpp"

namespace qfc::cli {

enum Exit : int { kVerified = 0, kMismatch = 1, kInvalid = 2, kBudget = 3 };

struct RunConfig {
  std::string command;
  unsigned p = 0;
  unsigned e = 1;
  unsigned m = 0;
  std::string coeffs;     // "i,j:c;..."
  std::string canonical;  // "r=2,type=I" or "r=3,type=II,mu=gamma"
  std::string trace;      // "c0,c1,..." in F_{q^m} encoding
  std::string a;          // integer or "all-nonzero"
  std::string convention = "adjudicate";
  std::string format = "json";
  std::string cache_dir;
  std::string output;
  std::uint64_t seed = 0;
  std::uint64_t max_points = std::uint64_t{1} << 24;
  std::uint64_t pair_budget = std::uint64_t{1} << 26;
  double time_budget = 0;  // seconds, 0 = unlimited
  unsigned workers = 1;
  std::vector<unsigned> q_list{3, 5};
  unsigned m_max = 3;
};

int exit_code(ErrorKind kind);

/// "i,j:c;..." with 1-based i <= j. Throws InvalidInput.
void apply_coefficients(QuadForm& q, std::string_view spec);

/// "r=<n>,type=<I|II|III>[,mu=<1|gamma|element>]". Throws InvalidInput.
FormClass parse_canonical(const FieldContext& f, std::string_view spec, unsigned m);

/// Builds the form from whichever single source is set.
QuadForm build_form(const RunConfig& cfg);

/// Integer element or "all-nonzero".
std::vector<Elem> parse_values(const FieldContext& f, std::string_view spec);

ConventionPolicy parse_policy(std::string_view s);

std::uint64_t fnv1a(std::string_view data);

int run_classify(const RunConfig& cfg, std::ostream& out);
int run_verify(const RunConfig& cfg, std::ostream& out);
int run_sweep(const RunConfig& cfg, std::ostream& out);
int run_minimal(const RunConfig& cfg, std::ostream& out);

}  // namespace qfc::cli
