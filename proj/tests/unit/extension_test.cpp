#include <gtest/gtest.h>

#include "gen.hpp"
#include "qfcodes/errors.hpp"
#include "qfcodes/extension.hpp"

using namespace qfc;

namespace {

// (q, m) with q^m <= 3^8
const std::vector<std::tuple<unsigned, unsigned, unsigned>> kTowers = {
    {3, 1, 1}, {3, 1, 2}, {3, 1, 3}, {3, 1, 4}, {3, 1, 5}, {3, 1, 6}, {3, 1, 7}, {3, 1, 8}, {5, 1, 2},
    {5, 1, 3}, {5, 1, 4}, {5, 1, 5}, {7, 1, 2}, {7, 1, 3}, {7, 1, 4}, {3, 2, 2}, {3, 2, 3}, {3, 2, 4}};

}  // namespace

TEST(Extension, Sizes) {
  auto F3 = make_field(3, 1);
  EXPECT_EQ(ExtContext::make(F3, 3).size(), 27U);
  EXPECT_THROW(ExtContext::make(F3, 30), Error);
  try {
    ExtContext::make(F3, 30);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeLimit);
  }
}

TEST(Extension, DegreeOneIsBaseField) {
  auto F3 = make_field(3, 1);
  const auto ext = ExtContext::make(F3, 1);
  EXPECT_EQ(ext.size(), 3U);
  for (ExtElem x = 0; x < 3; ++x) EXPECT_EQ(ext.trace(x), x);
}

TEST(Extension, ModulusHasNoRootsForSmallDegrees) {
  for (auto [p, e, m] : kTowers) {
    if (m < 2 || m > 3) continue;
    auto F = make_field(p, e);
    const auto ext = ExtContext::make(F, m);
    const auto h = ext.modulus();
    for (Elem x = 0; x < F->order(); ++x) {
      Elem v = 0;
      for (std::size_t i = h.size(); i-- > 0;) v = F->add(F->mul(v, x), h[i]);
      EXPECT_NE(v, 0U) << "root " << x << " of modulus over F_" << F->order();
    }
  }
}

TEST(Extension, TraceZeroAndFibres) {
  auto F3 = make_field(3, 1);
  const auto ext = ExtContext::make(F3, 3);
  EXPECT_EQ(ext.trace(0), 0U);
  std::vector<int> fibre(3, 0);
  for (ExtElem x = 0; x < 27; ++x) ++fibre[ext.trace(x)];
  EXPECT_EQ(fibre, std::vector<int>({9, 9, 9}));
}

TEST(ExtensionProperty, TraceFibresUniform) {
  for (auto [p, e, m] : kTowers) {
    auto F = make_field(p, e);
    const auto ext = ExtContext::make(F, m);
    std::vector<std::uint64_t> fibre(F->order(), 0);
    for (ExtElem x = 0; x < ext.size(); ++x) ++fibre[ext.trace(x)];
    for (auto c : fibre) EXPECT_EQ(c, ext.size() / F->order()) << "q=" << F->order() << " m=" << m;
  }
}

TEST(ExtensionProperty, TraceLinearAndFrobeniusInvariant) {
  gen::Rng rng(3);
  for (auto [p, e, m] : kTowers) {
    auto F = make_field(p, e);
    const auto ext = ExtContext::make(F, m);
    for (int t = 0; t < 50; ++t) {
      const ExtElem x = rng.below(ext.size()), y = rng.below(ext.size());
      const Elem a = rng.elem(*F), b = rng.elem(*F);
      const ExtElem lhs = ext.add(ext.mul(ext.embed(a), x), ext.mul(ext.embed(b), y));
      ASSERT_EQ(ext.trace(lhs), F->add(F->mul(a, ext.trace(x)), F->mul(b, ext.trace(y))));
      ASSERT_EQ(ext.trace(ext.frobenius(x)), ext.trace(x));
      ASSERT_EQ(ext.frobenius(x), ext.pow(x, F->order()));
    }
  }
}

TEST(ExtensionProperty, FrobeniusHasOrderM) {
  for (auto [p, e, m] : kTowers) {
    auto F = make_field(p, e);
    const auto ext = ExtContext::make(F, m);
    for (ExtElem x = 0; x < std::min<ExtElem>(ext.size(), 200); ++x) {
      ExtElem y = x;
      for (unsigned k = 0; k < m; ++k) y = ext.frobenius(y);
      ASSERT_EQ(y, x);
    }
  }
}

TEST(ExtensionProperty, MultiplicativeGroupOrder) {
  for (auto [p, e, m] : kTowers) {
    auto F = make_field(p, e);
    const auto ext = ExtContext::make(F, m);
    for (ExtElem x = 1; x < std::min<ExtElem>(ext.size(), 100); ++x) ASSERT_EQ(ext.pow(x, ext.size() - 1), 1U);
  }
}

TEST(Extension, DualBasisKronecker) {
  for (auto [p, e, m] : kTowers) {
    auto F = make_field(p, e);
    const auto ext = ExtContext::make(F, m);
    const auto basis = ext.polynomial_basis();
    const auto dual = ext.dual_basis(basis);
    for (unsigned i = 0; i < m; ++i) {
      for (unsigned j = 0; j < m; ++j) ASSERT_EQ(ext.trace(ext.mul(dual[i], basis[j])), i == j ? 1U : 0U);
    }
    EXPECT_EQ(ext.dual_basis(dual), basis);
  }
}

TEST(Extension, DualOfRandomBasis) {
  gen::Rng rng(5);
  auto F = make_field(5, 1);
  const auto ext = ExtContext::make(F, 3);
  for (int t = 0; t < 20; ++t) {
    std::vector<ExtElem> basis;
    Matrix coords;
    do {
      basis.clear();
      std::vector<Vec> cols;
      for (int i = 0; i < 3; ++i) {
        basis.push_back(rng.below(ext.size()));
        cols.push_back(ext.coords(basis.back()));
      }
      coords = Matrix::from_columns(cols);
    } while (rank(*F, coords) < 3);
    const auto dual = ext.dual_basis(basis);
    for (unsigned i = 0; i < 3; ++i) {
      for (unsigned j = 0; j < 3; ++j) ASSERT_EQ(ext.trace(ext.mul(dual[i], basis[j])), i == j ? 1U : 0U);
    }
  }
}

TEST(Extension, SingularBasis) {
  auto F3 = make_field(3, 1);
  const auto ext = ExtContext::make(F3, 3);
  const std::vector<ExtElem> repeated{1, 3, 3};
  try {
    ext.dual_basis(repeated);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularBasis);
  }
}

TEST(Extension, Determinism) {
  for (auto [p, e, m] : kTowers) {
    auto F = make_field(p, e);
    EXPECT_TRUE(ExtContext::make(F, m) == ExtContext::make(F, m));
  }
}
