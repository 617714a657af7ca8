#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qfcodes/field.hpp"
#include "qfcodes/numeric.hpp"
#include "qfcodes/quadform.hpp"

namespace qfc {

/// Upper bound on the number of vectors an exhaustive loop may visit.
struct EnumerationLimits {
  std::uint64_t max_points = std::uint64_t{1} << 24;
};

/// q^m, or SizeLimit when it exceeds the limit.
std::uint64_t space_size(std::uint32_t q, unsigned m, const EnumerationLimits& limits = {});

/// Advances x to the next vector of F_q^m in encoding order (first
/// coordinate least significant). Returns false after wrapping to zero.
inline bool next_vector(std::span<Elem> x, std::uint32_t q) noexcept {
  for (auto& c : x) {
    if (++c < q) return true;
    c = 0;
  }
  return false;
}

/// Index of x in encoding order.
std::uint64_t vector_index(std::span<const Elem> x, std::uint32_t q) noexcept;
Vec vector_at(std::uint64_t index, std::uint32_t q, unsigned m);

/// #{x in F_q^m : Q(x) = a} for any form of class `c`, from the
/// standard-type table. Evaluated in exact rationals.
BigInt count_value(const FieldContext& f, const FormClass& c, unsigned m, Elem a);

/// #{x : Q(x) = a, b.x = v} for the canonical form of class `c` (b in
/// standard coordinates, b != 0). The case split is on b'' (coordinates past
/// the rank) and on Qhat(b'). Throws ZeroVector for b = 0.
BigInt count_joint(const FieldContext& f, const FormClass& c, unsigned m, Elem a, Elem v,
                   std::span<const Elem> b, Convention conv);

/// count_joint for an arbitrary form: standardizes Q and maps b into
/// standard coordinates.
BigInt count_joint_general(const QuadForm& q, Elem a, Elem v, std::span<const Elem> b,
                           Convention conv);

/// Exhaustive oracles.
std::uint64_t brute_count_value(const QuadForm& q, Elem a, const EnumerationLimits& limits = {});
std::uint64_t brute_count_joint(const QuadForm& q, Elem a, Elem v, std::span<const Elem> b,
                                const EnumerationLimits& limits = {});

/// counts[a] = #{x : Q(x) = a} in one pass.
std::vector<std::uint64_t> value_histogram(const QuadForm& q, const EnumerationLimits& limits = {});

/// counts[a * q + v] = #{x : Q(x) = a, b.x = v} in one pass.
std::vector<std::uint64_t> joint_histogram(const QuadForm& q, std::span<const Elem> b,
                                           const EnumerationLimits& limits = {});

}  // namespace qfc
