#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ekr/spectral.hpp"
#include "ekr/tables.hpp"

using namespace ekr;

namespace {

Context make_ctx(std::uint32_t q, std::uint32_t ell) { return Context(EkrConfig::make(q, ell)); }

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kConfigs = {{7, 3},   {11, 5}, {13, 3},
                                                                       {23, 11}, {27, 13}, {31, 5}};

Rational R(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

std::int64_t closed_or_zero(const EkrConfig& cfg, SigmaKind kind, std::int64_t r, std::int64_t s = 0) {
  return sigma_closed(cfg, kind, r, s).value_or(0);
}

std::int64_t rounded(CharValue v, double tol) {
  EXPECT_LT(std::abs(v.imag()), tol);
  EXPECT_LT(std::abs(v.real() - std::round(v.real())), tol);
  return static_cast<std::int64_t>(std::round(v.real()));
}

// sigma over exponents instead of field elements: C = {i : l !| i} in Z/(q-1),
// E = {k : (q+1) !| k, l !| k} in Z/(q^2-1), with N(omega^k) = eps^k.
CharValue sigma_by_exponents(const EkrConfig& cfg, SigmaKind kind, std::int64_t r, std::int64_t s) {
  const std::int64_t n = cfg.q - 1, big = static_cast<std::int64_t>(cfg.q) * cfg.q - 1, ell = cfg.ell;
  const auto root = [](std::int64_t e, std::int64_t order) {
    return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(((e % order) + order) % order) / order);
  };
  CharValue sum = 0.0;
  switch (kind) {
    case SigmaKind::C:
      for (std::int64_t i = 0; i < n; ++i)
        if (i % ell) sum += root(r * i, n);
      break;
    case SigmaKind::D:
      for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
          if (i != j && i % ell == j % ell && i % ell) sum += root(r * i + s * j, n);
      break;
    case SigmaKind::E1:
    case SigmaKind::E2:
      for (std::int64_t k = 0; k < big; ++k) {
        if (k % (cfg.q + 1) == 0 || k % ell == 0) continue;
        sum += kind == SigmaKind::E1 ? root(r * k, big) : root(r * k, n);
      }
      break;
  }
  return sum;
}

}  // namespace

TEST(Sigma, ExamplesAtQ7) {
  const Context ctx = make_ctx(7, 3);
  const EkrConfig& cfg = ctx.config();
  EXPECT_EQ(rounded(sigma_direct(ctx, SigmaKind::C, 6), 1e-9), 4);
  EXPECT_EQ(rounded(sigma_direct(ctx, SigmaKind::C, 1), 1e-9), 0);
  EXPECT_EQ(rounded(sigma_direct(ctx, SigmaKind::C, 0), 1e-9), 4);
  EXPECT_EQ(sigma_closed(cfg, SigmaKind::C, 2), -2);
  EXPECT_EQ(sigma_closed(cfg, SigmaKind::E2, 3), -4);
  EXPECT_EQ(sigma_closed(cfg, SigmaKind::D, 2, 4), 4);
  EXPECT_EQ(sigma_closed(cfg, SigmaKind::C, 1), std::nullopt);
  EXPECT_THROW(sigma_closed(cfg, SigmaKind::E1, 8), std::invalid_argument);
}

TEST(Sigma, DirectSumsMatchClosedFormsExhaustively) {
  for (auto [q, ell] : {std::pair{7u, 3u}, {13u, 3u}, {11u, 5u}}) {
    const Context ctx = make_ctx(q, ell);
    const EkrConfig& cfg = ctx.config();
    for (SigmaKind kind : {SigmaKind::C, SigmaKind::D, SigmaKind::E1, SigmaKind::E2}) {
      for (const auto& [r, s] : sigma_indices(cfg, kind)) {
        const CharValue direct = sigma_direct(ctx, kind, r, s);
        ASSERT_EQ(rounded(direct, 1e-9 * cfg.m), closed_or_zero(cfg, kind, r, s))
            << "q=" << q << " " << to_string(kind) << "(" << r << "," << s << ")";
        ASSERT_LT(std::abs(direct - sigma_by_exponents(cfg, kind, r, s)), 1e-8);
      }
    }
  }
}

TEST(Sigma, SampledAtLargeQ) {
  std::mt19937_64 rng(200);
  for (auto [q, ell] : {std::pair{23u, 11u}, {27u, 13u}, {31u, 5u}}) {
    const Context ctx = make_ctx(q, ell);
    const EkrConfig& cfg = ctx.config();
    for (SigmaKind kind : {SigmaKind::C, SigmaKind::D, SigmaKind::E1, SigmaKind::E2}) {
      const auto idx = sigma_indices(cfg, kind);
      std::uniform_int_distribution<std::size_t> pick(0, idx.size() - 1);
      for (int trial = 0; trial < 50; ++trial) {
        const auto [r, s] = idx[pick(rng)];
        ASSERT_EQ(rounded(sigma_direct(ctx, kind, r, s), 1e-9 * cfg.m), closed_or_zero(cfg, kind, r, s));
      }
    }
  }
}

TEST(Babai, TrivialIrrepGivesFamilySizes) {
  const Context ctx = make_ctx(7, 3);
  const auto inv = derangement_inventory(ctx, class_inventory(ctx));
  for (int fam = 0; fam < 4; ++fam) {
    EXPECT_EQ(babai_eigenvalue(ctx, inv, trivial_irrep(7), fam),
              R(static_cast<std::int64_t>(inv.family_sizes[static_cast<std::size_t>(fam)])));
  }
}

TEST(Babai, StructuralZeros) {
  const Context ctx = make_ctx(7, 3);
  const auto inv = derangement_inventory(ctx, class_inventory(ctx));
  for (const auto& l : irrep_inventory(ctx)) {
    if (l.family == IrrepFamily::W) EXPECT_EQ(babai_eigenvalue(ctx, inv, l, 2), 0) << to_string(l);
    if (l.family == IrrepFamily::P) EXPECT_EQ(babai_eigenvalue(ctx, inv, l, 3), 0) << to_string(l);
    if (l.family == IrrepFamily::S) EXPECT_EQ(babai_eigenvalue(ctx, inv, l, 1), 0) << to_string(l);
  }
}

TEST(Babai, SymbolicTableMatchesRecomputation) {
  for (auto [q, ell] : {std::pair{7u, 3u}, {11u, 5u}}) {
    const Context ctx = make_ctx(q, ell);
    const auto inv = derangement_inventory(ctx, class_inventory(ctx));
    for (const auto& l : irrep_inventory(ctx)) {
      for (int fam = 0; fam < 4; ++fam) {
        const double want = to_double(babai_eigenvalue(ctx, inv, l, fam));
        ASSERT_LT(std::abs(babai_from_sigma(ctx, l, fam) - want), 1e-7) << to_string(l) << " family " << fam + 1;
      }
    }
  }
}

TEST(EigenTable, RowsAtQ7) {
  const EkrConfig cfg = EkrConfig::make(7, 3);
  const auto row0 = eigen_row_formula(cfg, 0);
  EXPECT_EQ(row0[0], R(2));
  EXPECT_EQ(row0[1], R(96));
  EXPECT_EQ(row0[2], R(56));
  EXPECT_EQ(row0[3], R(294));
  EXPECT_EQ(eigen_row_formula(cfg, 12)[1], R(-16));
}

TEST(EigenTable, OddRowsArePairedWithTheirSuccessor) {
  for (auto [q, ell] : kConfigs) {
    const EkrConfig cfg = EkrConfig::make(q, ell);
    for (int row = 0; row < kEigenRowCount; row += 2) {
      const auto a = eigen_row_formula(cfg, row), b = eigen_row_formula(cfg, row + 1);
      for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(a[i], -R(ell - 1) * b[i]);
    }
  }
}

TEST(EigenTable, MatchesBabaiExhaustively) {
  for (auto [q, ell] : {std::pair{7u, 3u}, {11u, 5u}, {13u, 3u}}) {
    const Context ctx = make_ctx(q, ell);
    const auto irreps = irrep_inventory(ctx);
    const auto babai = babai_table(ctx, derangement_inventory(ctx, class_inventory(ctx)), irreps);
    std::vector<EigenRow> rows;
    ASSERT_NO_THROW(rows = eigen_table(ctx, irreps, babai));
    ASSERT_EQ(rows.size(), 14u);
    EXPECT_EQ(rows[0].multiplicity, 1u);
    EXPECT_EQ(rows[0].irrep_count, 1u);
    // Irreps outside every row vanish on all four families.
    for (std::size_t k = 0; k < irreps.size(); ++k) {
      if (eigen_case(ctx.config(), irreps[k])) continue;
      for (const auto& v : babai[k]) EXPECT_EQ(v, 0);
    }
  }
}

TEST(EigenTable, CorruptedBabaiValueIsDetected) {
  const Context ctx = make_ctx(7, 3);
  const auto irreps = irrep_inventory(ctx);
  auto babai = babai_table(ctx, derangement_inventory(ctx, class_inventory(ctx)), irreps);
  babai[3][2] += 1;
  EXPECT_THROW(eigen_table(ctx, irreps, babai), CheckFailure);
}

TEST(Weights, ValuesAtQ7AndQ13) {
  const WeightVector w = weight_vector(EkrConfig::make(7, 3));
  EXPECT_EQ(w.w(0), R(-2400));
  EXPECT_EQ(w.w(1), R(64));
  EXPECT_EQ(w.w(2), R(96));
  EXPECT_EQ(w.w(3), R(32));
  EXPECT_EQ(w.prefactor, R(1, 8064));
  EXPECT_EQ(weight_vector(EkrConfig::make(13, 3)).w(1), R(256));
}

TEST(Weights, SignPatternForEveryValidConfig) {
  for (const auto& cfg : valid_configs(151)) {
    const WeightVector w = weight_vector(cfg);
    EXPECT_LT(w.w(0), 0) << cfg.q;
    EXPECT_GT(w.w(1), 0);
    EXPECT_GT(w.w(2), 0);
    EXPECT_GT(w.w(3), 0);
  }
}

TEST(LMatrix, ProductAtQ7) {
  const EkrConfig cfg = EkrConfig::make(7, 3);
  const auto got = l_matrix_product(cfg);
  const std::vector<Rational> want{R(1), R(-1, 3), R(-1, 3), R(-1, 3), R(-1, 6), R(-1, 3), R(-1, 3)};
  for (int i = 0; i < 7; ++i) EXPECT_EQ(got(i), want[static_cast<std::size_t>(i)]) << i;
  const auto L = l_matrix(cfg);
  EXPECT_EQ(L(6, 0), R(1));
  EXPECT_EQ(L(6, 1), R(-8));
  EXPECT_EQ(L(6, 2), R(0));
  EXPECT_EQ(L(6, 3), R(7));
}

TEST(LMatrix, IdentityHoldsForEveryValidConfig) {
  for (const auto& cfg : valid_configs(151)) {
    RationalMatrix<7, 1> got;
    ASSERT_NO_THROW(got = l_matrix_product(cfg)) << "q=" << cfg.q << " ell=" << cfg.ell;
    EXPECT_EQ(got(0), R(1));
  }
}

TEST(LMatrix, TamperedWeightsBreakTheIdentity) {
  const EkrConfig cfg = EkrConfig::make(7, 3);
  WeightVector w = weight_vector(cfg);
  w.w(1) += 1;
  EXPECT_FALSE(l_matrix_product(cfg, w) == expected_l_product(cfg));
}

TEST(Spectrum, ShapeAtQ7) {
  const Context ctx = make_ctx(7, 3);
  const EkrConfig& cfg = ctx.config();
  const auto irreps = irrep_inventory(ctx);
  const auto inv = derangement_inventory(ctx, class_inventory(ctx));
  const WeightVector w = weight_vector(cfg);
  const auto spec = weighted_spectrum(cfg, irreps, babai_table(ctx, inv, irreps), w);
  const auto shape = spectrum_shape(cfg, irreps, spec);
  EXPECT_EQ(shape.theta1, R(2));
  EXPECT_EQ(shape.theta1_multiplicity, 1u);
  EXPECT_EQ(shape.theta2, R(-1));
  EXPECT_TRUE(shape.gap_clean);
  std::uint64_t total = 0;
  for (const auto& d : spec.distinct) total += d.second;
  EXPECT_EQ(total, 2016u);
  EXPECT_TRUE(std::is_sorted(spec.distinct.begin(), spec.distinct.end()));

  Rational row_sum = 0;
  for (int i = 0; i < 4; ++i) {
    row_sum += w.family_weight(cfg, i) * R(static_cast<std::int64_t>(inv.family_sizes[static_cast<std::size_t>(i)]));
  }
  EXPECT_EQ(row_sum, R(2));
  EXPECT_EQ(hoffman_bound(cfg, shape.theta1, shape.theta2), R(672));
}

TEST(Spectrum, NoEigenvalueInsideTheGap) {
  for (auto [q, ell] : kConfigs) {
    const Context ctx = make_ctx(q, ell);
    const EkrConfig& cfg = ctx.config();
    const auto irreps = irrep_inventory(ctx);
    const auto spec = weighted_spectrum(cfg, irreps, babai_table(ctx, derangement_inventory(ctx, class_inventory(ctx)), irreps),
                                        weight_vector(cfg));
    for (const auto& [theta, mult] : spec.distinct) {
      const Rational a = abs(theta);
      if (theta == R(ell - 1)) {
        EXPECT_EQ(mult, 1u);
        continue;
      }
      EXPECT_LE(a, R(1)) << "q=" << q << " theta=" << to_string(theta);
    }
  }
}

TEST(Certificate, BoundsAtQ7AndQ11) {
  for (auto [q, ell, bound] : {std::tuple{7u, 3u, 672}, {11u, 5u, 2640}}) {
    const Context ctx = make_ctx(q, ell);
    const Certificate cert = certify_bound(ctx);
    EXPECT_TRUE(cert.verdict);
    EXPECT_EQ(cert.hoffman_bound, R(bound));
    EXPECT_EQ(cert.h_order, static_cast<std::uint64_t>(bound));
    for (const auto& c : cert.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
    EXPECT_EQ(cert.provenance.size(), 5u);
  }
}

TEST(Certificate, TamperedWeightsGiveFalseVerdict) {
  const Context ctx = make_ctx(7, 3);
  WeightVector w = weight_vector(ctx.config());
  w.w(1) += 1;
  Certificate cert;
  ASSERT_NO_THROW(cert = certify_bound(ctx, w));
  EXPECT_FALSE(cert.verdict);
  bool l_failed = false;
  for (const auto& c : cert.checks) {
    if (c.name == "l_identity") l_failed = !c.passed && !c.detail.empty();
  }
  EXPECT_TRUE(l_failed);
}

TEST(Certificate, JsonIsDeterministic) {
  const Context ctx = make_ctx(13, 3);
  const auto a = certificate_json(certify_bound(ctx), false);
  const auto b = certificate_json(certify_bound(ctx), false);
  EXPECT_EQ(a.dump(), b.dump());
  for (const char* key : {"q", "ell", "m", "group_order", "theta1", "theta2", "hoffman_bound", "h_order", "verdict",
                          "checks", "tool_version", "provenance"}) {
    EXPECT_TRUE(a.contains(key)) << key;
  }
  EXPECT_EQ(a["hoffman_bound"]["num"], 8736);
  EXPECT_EQ(a["hoffman_bound"]["den"], 1);
  EXPECT_FALSE(a.contains("timestamp"));
  EXPECT_TRUE(certificate_json(certify_bound(ctx)).contains("timestamp"));
}
