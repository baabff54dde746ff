#include <gtest/gtest.h>

#include <random>

#include "ekr/fixed_space.hpp"

using namespace ekr;

namespace {

Context make_ctx(std::uint32_t q, std::uint32_t ell) { return Context(EkrConfig::make(q, ell)); }

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kConfigs = {{7, 3},   {11, 5}, {13, 3},
                                                                       {23, 11}, {27, 13}, {31, 5}};

// dim{v : g v = v} through an eigen decomposition of M(g), counting unit eigenvalues.
std::int64_t eta_by_eigenvalues(const Context& ctx, const Mat2& g) {
  const RepMatrix m = rep_matrix(ctx, g, b_transversal(ctx, TransversalKind::T2));
  Eigen::ComplexEigenSolver<RepMatrix> solver(m);
  std::int64_t count = 0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    if (std::abs(solver.eigenvalues()(i) - 1.0) < 1e-6) ++count;
  }
  return count;
}

}  // namespace

TEST(Eta, ExamplesAtQ7) {
  const Context ctx = make_ctx(7, 3);
  EXPECT_EQ(eta_closed(ctx, make_class(7, ClassKind::C3, 3, 0)), 5);
  EXPECT_EQ(eta_closed(ctx, make_class(7, ClassKind::C4, 3)), 1);
  EXPECT_EQ(eta_closed(ctx, make_class(7, ClassKind::C1, 0)), 8);
  EXPECT_EQ(eta_kernel(ctx, identity()), 8);
}

TEST(Eta, TripleAgreementOnAllConfigs) {
  for (auto [q, ell] : kConfigs) {
    const Context ctx = make_ctx(q, ell);
    for (const auto& r : eta_reports(ctx, class_inventory(ctx))) {
      ASSERT_TRUE(r.agree) << "q=" << q << " " << to_string(r.cls) << ": " << r.eta_closed << " " << r.eta_burnside
                           << " " << r.eta_kernel;
    }
  }
}

TEST(Eta, KernelIndependentOfBasisAndMatchesSpectrum) {
  for (auto [q, ell] : {std::pair{7u, 3u}, {13u, 3u}, {27u, 13u}}) {
    const Context ctx = make_ctx(q, ell);
    for (const auto& c : class_inventory(ctx)) {
      const Mat2 g = representative(ctx, c);
      const std::int64_t t1 = eta_kernel(ctx, g, TransversalKind::T1);
      ASSERT_EQ(t1, eta_kernel(ctx, g, TransversalKind::T2)) << to_string(c);
      ASSERT_EQ(t1, eta_by_eigenvalues(ctx, g)) << to_string(c);
    }
  }
}

TEST(Eta, ClassFunctionOnRandomConjugates) {
  std::mt19937_64 rng(17);
  const Context ctx = make_ctx(23, 11);
  const FieldTable& f = ctx.field();
  for (int trial = 0; trial < 200; ++trial) {
    const Mat2 g = random_element(ctx, rng), h = random_element(ctx, rng);
    const Mat2 conj = mat_mul(f, mat_mul(f, h, g), mat_inv(f, h));
    ASSERT_EQ(eta_kernel(ctx, conj), eta_closed(ctx, classify(ctx, g)));
  }
}

TEST(Derangements, ClassificationMatchesZeroEta) {
  for (auto [q, ell] : kConfigs) {
    const Context ctx = make_ctx(q, ell);
    for (const auto& c : class_inventory(ctx)) {
      ASSERT_EQ(is_derangement(ctx, c), eta_closed(ctx, c) == 0) << to_string(c);
    }
  }
}

TEST(Derangements, FamilySizesAtQ7) {
  const Context ctx = make_ctx(7, 3);
  const auto inv = derangement_inventory(ctx, class_inventory(ctx));
  EXPECT_EQ(inv.family_sizes, (std::array<std::uint64_t, 4>{4, 192, 112, 588}));
  EXPECT_EQ(inv.total_size, 896u);
}

TEST(Derangements, FamilySizesByCounting) {
  // Count parameter tuples directly: x with l !| log x; unordered {x, y}; z in K \ F up to conjugation.
  for (auto [q, ell] : kConfigs) {
    const Context ctx = make_ctx(q, ell);
    const std::uint64_t qq = q;
    std::uint64_t c1 = 0, c3 = 0, c4 = 0;
    for (std::uint64_t i = 0; i < qq - 1; ++i) {
      if (i % ell) ++c1;
      for (std::uint64_t j = i + 1; j < qq - 1; ++j)
        if (i % ell == j % ell && i % ell) ++c3;
    }
    for (ExtElem z = 1; z < ctx.ext().order; ++z)
      if (!ctx.ext().in_base(z) && ctx.ext().log(z) % ell) ++c4;
    const std::array<std::uint64_t, 4> want{c1, c1 * (qq * qq - 1), c3 * (qq * qq + qq), c4 / 2 * (qq * qq - qq)};
    EXPECT_EQ(expected_family_sizes(ctx.config()), want) << "q=" << q;
    EXPECT_EQ(derangement_inventory(ctx, class_inventory(ctx)).family_sizes, want);
  }
}

TEST(HSubgroup, OrderAndIntersecting) {
  for (auto [q, ell] : kConfigs) {
    const Context ctx = make_ctx(q, ell);
    const auto classes = class_inventory(ctx);
    const HSubgroup h = h_subgroup(ctx, classes);
    EXPECT_EQ(h.order * ell, ctx.config().group_order());
    EXPECT_TRUE(h_is_intersecting(ctx, classes));
  }
  const Context ctx = make_ctx(7, 3);
  EXPECT_EQ(h_subgroup(ctx, class_inventory(ctx)).order, 672u);
  const HSubgroup h{3, 672};
  EXPECT_TRUE(h.contains(ctx, identity()));
  EXPECT_FALSE(h.contains(ctx, {3, 0, 0, 1}));
}
