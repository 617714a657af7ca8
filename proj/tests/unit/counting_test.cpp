#include <gtest/gtest.h>

#include "gen.hpp"
#include "oracle.hpp"
#include "qfcodes/counting.hpp"
#include "qfcodes/errors.hpp"

using namespace qfc;

namespace {

QuadForm b2_over_f3() {
  QuadForm q(make_field(3, 1), 2);
  q.set_coefficient(0, 1, 1);
  return q;
}

}  // namespace

TEST(Counting, SpaceSize) {
  EXPECT_EQ(space_size(3, 4), 81U);
  EXPECT_THROW(space_size(3, 30), Error);
  EXPECT_EQ(vector_index(Vec{1, 2}, 3), 7U);
  EXPECT_EQ(vector_at(7, 3, 2), (Vec{1, 2}));
}

TEST(Counting, TableCountsExamples) {
  auto F3 = make_field(3, 1);
  EXPECT_EQ(count_value(*F3, FormClass::hyperbolic(2), 2, 1), 2);
  EXPECT_EQ(count_value(*F3, FormClass::hyperbolic(2), 2, 0), 5);
  EXPECT_EQ(count_value(*F3, FormClass::odd(1, 1), 1, 1), 2);
  EXPECT_EQ(count_value(*F3, FormClass::hyperbolic(0), 3, 1), 0);
  EXPECT_EQ(count_value(*F3, FormClass::hyperbolic(0), 3, 0), 27);
  EXPECT_EQ(brute_count_value(b2_over_f3(), 1), 2U);
  EXPECT_EQ(brute_count_value(QuadForm(F3, 2), 1), 0U);
}

TEST(Counting, JointCountExamples) {
  auto F3 = make_field(3, 1);
  const auto c = FormClass::hyperbolic(2);
  const Vec b10{1, 0}, b11{1, 1};
  EXPECT_EQ(count_joint(*F3, c, 2, 1, 1, b10, Convention::Paper), 1);
  EXPECT_EQ(count_joint(*F3, c, 2, 1, 1, b10, Convention::Reflected), 1);
  EXPECT_EQ(brute_count_joint(b2_over_f3(), 1, 1, b10), 1U);

  EXPECT_EQ(count_joint(*F3, c, 2, 2, 0, b11, Convention::Paper), 0);
  EXPECT_EQ(count_joint(*F3, c, 2, 2, 0, b11, Convention::Reflected), 2);
  EXPECT_EQ(brute_count_joint(b2_over_f3(), 2, 0, b11), 2U);

  QuadForm x1sq(F3, 2);
  x1sq.set_coefficient(0, 0, 1);
  for (auto conv : {Convention::Paper, Convention::Reflected}) {
    EXPECT_EQ(count_joint(*F3, FormClass::odd(1, 1), 2, 1, 1, b10, conv), 3);
  }
  EXPECT_EQ(brute_count_joint(x1sq, 1, 1, b10), 3U);

  try {
    count_joint(*F3, c, 2, 1, 0, Vec{0, 0}, Convention::Reflected);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroVector);
  }
}

TEST(Counting, BruteMatchesOracle) {
  for (unsigned p : {3U, 5U}) {
    auto F = make_field(p, 1);
    for (const FormClass& c : all_classes(3)) {
      const int tail = c.type == FormType::I ? 0 : c.type == FormType::II ? 1 : 2;
      const oracle::U mu = c.eta_mu == -1 ? oracle::smallest_nonsquare(p) : 1;
      const oracle::Form o = oracle::standard(p, 3, c.rank, tail, mu);
      const QuadForm q = standard_form(F, c, 3);
      for (Elem a = 0; a < p; ++a) {
        ASSERT_EQ(brute_count_value(q, a), oracle::count_value(o, a));
        oracle::for_each_vector(p, 3, [&](const std::vector<oracle::U>& b) {
          const Vec bv(b.begin(), b.end());
          for (Elem v = 0; v < p; ++v) ASSERT_EQ(brute_count_joint(q, a, v, bv), oracle::count_joint(o, a, v, b));
        });
      }
    }
  }
}

// Table counts, exhaustive over q^m <= 3^8.
TEST(CountingProperty, TableCountsExhaustive) {
  const std::vector<std::pair<std::pair<unsigned, unsigned>, unsigned>> grid = {
      {{3, 1}, 8}, {{5, 1}, 5}, {{7, 1}, 4}, {{3, 2}, 4}};
  for (auto [pe, m_max] : grid) {
    auto F = make_field(pe.first, pe.second);
    for (unsigned m = 1; m <= m_max; ++m) {
      for (const FormClass& c : all_classes(m)) {
        const auto hist = value_histogram(standard_form(F, c, m));
        for (Elem a = 0; a < F->order(); ++a) {
          ASSERT_EQ(BigInt(hist[a]), count_value(*F, c, m, a)) << "q=" << F->order() << " m=" << m << " " << to_string(c);
        }
      }
    }
  }
}

// Joint counts on q in {3, 5, 7}, m <= 3, every b != 0: Reflected always,
// Paper exactly when the class is convention-free or q = 1 mod 4.
TEST(CountingProperty, JointCountsAdjudication) {
  for (unsigned p : {3U, 5U, 7U}) {
    auto F = make_field(p, 1);
    const bool paper_expected_everywhere = p % 4 == 1;
    for (unsigned m = 1; m <= 3; ++m) {
      for (const FormClass& c : all_classes(m)) {
        const QuadForm q = standard_form(F, c, m);
        bool paper_all = true;
        Vec b(m, 0);
        while (next_vector(b, p)) {
          const auto hist = joint_histogram(q, b);
          for (Elem a = 0; a < p; ++a) {
            for (Elem v = 0; v < p; ++v) {
              const BigInt brute = hist[a * p + v];
              ASSERT_EQ(count_joint(*F, c, m, a, v, b, Convention::Reflected), brute)
                  << "q=" << p << " m=" << m << " " << to_string(c) << " a=" << a << " v=" << v;
              paper_all = paper_all && count_joint(*F, c, m, a, v, b, Convention::Paper) == brute;
            }
          }
        }
        const bool convention_free = c.type == FormType::II || c.rank == 0;
        EXPECT_EQ(paper_all, convention_free || paper_expected_everywhere)
            << "q=" << p << " m=" << m << " " << to_string(c);
      }
    }
  }
}

TEST(CountingProperty, FibreSum) {
  for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{{3, 1}, {5, 1}, {3, 2}}) {
    auto F = make_field(p, e);
    for (unsigned m = 1; m <= 3; ++m) {
      for (const FormClass& c : all_classes(m)) {
        Vec b(m, 0);
        while (next_vector(b, F->order())) {
          for (Elem a = 0; a < F->order(); ++a) {
            BigInt sum = 0;
            for (Elem v = 0; v < F->order(); ++v) sum += count_joint(*F, c, m, a, v, b, Convention::Reflected);
            ASSERT_EQ(sum, count_value(*F, c, m, a));
          }
        }
      }
    }
  }
}

TEST(CountingProperty, GeneralFormsThroughStandardization) {
  gen::Rng rng(8);
  for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    auto F = make_field(p, e);
    for (int t = 0; t < 30; ++t) {
      const unsigned m = 1 + static_cast<unsigned>(rng.below(3));
      const QuadForm q = rng.form(F, m);
      const Vec b = rng.nonzero_vec(*F, m);
      const auto hist = joint_histogram(q, b);
      for (Elem a = 0; a < F->order(); ++a) {
        for (Elem v = 0; v < F->order(); ++v) {
          ASSERT_EQ(count_joint_general(q, a, v, b, Convention::Reflected), BigInt(hist[a * F->order() + v]));
        }
      }
    }
  }
}
