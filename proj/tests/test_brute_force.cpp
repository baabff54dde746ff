#include <gtest/gtest.h>

#include <bit>
#include <filesystem>
#include <random>

#include <unistd.h>
#include <zlib.h>

#include "ekr/brute_force.hpp"

using namespace ekr;

namespace {

struct Lab {
  Context ctx;
  DenseCayley graph;
  std::vector<IrrepLabel> irreps;
  WeightedSpectrum spectrum;
  WeightVector weights;

  Lab(std::uint32_t q, std::uint32_t ell) : ctx(EkrConfig::make(q, ell)), graph(build_cayley(ctx)) {
    irreps = irrep_inventory(ctx);
    weights = weight_vector(ctx.config());
    const auto inv = derangement_inventory(ctx, graph.classes);
    spectrum = weighted_spectrum(ctx.config(), irreps, babai_table(ctx, inv, irreps), weights);
  }
};

const Lab& lab7() {
  static const Lab lab(7, 3);
  return lab;
}

}  // namespace

TEST(Cayley, SizeAndDegreesAtQ7) {
  const Lab& lab = lab7();
  EXPECT_EQ(lab.graph.size(), 2016u);
  const auto v = validate_cayley(lab.ctx, lab.graph);
  EXPECT_TRUE(v.symmetric);
  EXPECT_TRUE(v.zero_diagonal);
  EXPECT_EQ(v.degree, (std::array<std::uint64_t, 4>{4, 192, 112, 588}));
  for (bool r : v.regular) EXPECT_TRUE(r);
}

TEST(Cayley, EdgesAgreeWithDirectClassification) {
  const Lab& lab = lab7();
  const FieldTable& f = lab.ctx.field();
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, lab.graph.size() - 1);
  for (int trial = 0; trial < 5000; ++trial) {
    const std::size_t u = pick(rng), v = pick(rng);
    const Mat2 quotient = mat_mul(f, mat_inv(f, lab.graph.vertices[v]), lab.graph.vertices[u]);
    const auto fam = derangement_family(lab.ctx, classify(lab.ctx, quotient));
    for (int i = 0; i < 4; ++i) ASSERT_EQ(lab.graph.adjacent(i, u, v), fam && *fam == i);
  }
}

TEST(Independence, HAndItsCosets) {
  const Lab& lab = lab7();
  const auto h = h_vertices(lab.ctx, lab.graph);
  EXPECT_EQ(h.size(), 672u);
  EXPECT_TRUE(independence_check(lab.graph, h, h));
  for (std::int64_t t = 0; t < 3; ++t) {
    const auto coset = h_coset_vertices(lab.ctx, lab.graph, t);
    EXPECT_EQ(coset.size(), 672u);
    EXPECT_TRUE(independence_check(lab.graph, coset, coset));
  }
  // Distinct cosets are joined by edges.
  EXPECT_FALSE(independence_check(lab.graph, h, h_coset_vertices(lab.ctx, lab.graph, 1)));
}

TEST(Independence, SmallSets) {
  const Lab& lab = lab7();
  const std::size_t id = lab.graph.vertex(identity());
  const ClassLabel derangement = lab.graph.classes[lab.graph.class_of[lab.graph.vertex({3, 0, 0, 3})]];
  ASSERT_TRUE(is_derangement(lab.ctx, derangement));
  EXPECT_FALSE(independence_check(lab.graph, {id}, {lab.graph.vertex({3, 0, 0, 3})}));
  EXPECT_TRUE(independence_check(lab.graph, {id}, {id}));
}

TEST(Residuals, EveryIrrepIsAnEigenvector) {
  const Lab& lab = lab7();
  const ClassProfile profile = class_profile(lab.ctx, lab.graph, lab.weights);
  const auto res = eigenvector_residuals(lab.ctx, lab.graph, profile, lab.irreps, lab.spectrum.per_irrep);
  ASSERT_EQ(res.size(), 48u);
  for (std::size_t k = 0; k < res.size(); ++k) EXPECT_LT(res[k], 1e-6) << to_string(lab.irreps[k]);
  EXPECT_LT(eigenvector_residual(lab.ctx, lab.graph, profile, trivial_irrep(7), 2.0), 1e-9);
  EXPECT_GE(eigenvector_residual(lab.ctx, lab.graph, profile, trivial_irrep(7), 3.0), 1.0 - 1e-9);
}

TEST(Residuals, ProfileMatchesBitwiseProduct) {
  // Apply A_G straight from the bit rows on a few vertices.
  const Lab& lab = lab7();
  const ClassProfile profile = class_profile(lab.ctx, lab.graph, lab.weights);
  const IrrepLabel irrep = make_irrep(7, IrrepFamily::W, 5);
  std::array<double, 4> fw{};
  for (int i = 0; i < 4; ++i) fw[static_cast<std::size_t>(i)] = to_double(lab.weights.family_weight(lab.ctx.config(), i));
  for (std::size_t u : {0ul, 17ul, 999ul, 2015ul}) {
    CharValue direct = 0.0, via_profile = 0.0;
    for (std::size_t v = 0; v < lab.graph.size(); ++v) {
      for (int i = 0; i < 4; ++i) {
        if (lab.graph.adjacent(i, u, v)) {
          direct += fw[static_cast<std::size_t>(i)] * char_value(lab.ctx, irrep, lab.graph.classes[lab.graph.class_of[v]]);
        }
      }
    }
    for (std::size_t c = 0; c < lab.graph.classes.size(); ++c) {
      via_profile += profile.weights(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(c)) *
                     char_value(lab.ctx, irrep, lab.graph.classes[c]);
    }
    EXPECT_LT(std::abs(direct - via_profile), 1e-9);
  }
}

TEST(EtaSweep, AllElementsAtQ7) {
  const Lab& lab = lab7();
  const auto eta = exhaustive_eta_table(lab.ctx, lab.graph);
  ASSERT_EQ(eta.size(), 2016u);
  EXPECT_EQ(eta[lab.graph.vertex(identity())], 8);
  EXPECT_EQ(std::count(eta.begin(), eta.end(), 0), 896);
}

TEST(Guard, Q13NeedsSlow) {
  const Context ctx(EkrConfig::make(13, 3));
  EXPECT_THROW(build_cayley(ctx), ConfigError);
}

TEST(EdgeList, GzipRoundTrip) {
  const Lab& lab = lab7();
  const auto path = std::filesystem::temp_directory_path() / ("ekr_edges_" + std::to_string(::getpid()) + ".gz");
  write_edge_list(lab.graph, path);
  gzFile in = gzopen(path.string().c_str(), "rb");
  ASSERT_NE(in, nullptr);
  std::uint64_t lines = 0;
  std::array<std::uint64_t, 5> per_family{};
  char buf[128];
  long prev_u = -1, prev_v = -1;
  bool sorted = true;
  while (gzgets(in, buf, sizeof buf)) {
    long u = 0, v = 0;
    int fam = 0;
    ASSERT_EQ(std::sscanf(buf, "%ld %ld %d", &u, &v, &fam), 3);
    ASSERT_LT(u, v);
    ASSERT_GE(fam, 1);
    ASSERT_LE(fam, 4);
    if (u < prev_u || (u == prev_u && v < prev_v)) sorted = false;
    prev_u = u;
    prev_v = v;
    ++per_family[static_cast<std::size_t>(fam)];
    ++lines;
  }
  gzclose(in);
  std::filesystem::remove(path);
  EXPECT_TRUE(sorted);
  EXPECT_EQ(lines, 2016u * 896 / 2);
  EXPECT_EQ(per_family[1], 2016u * 4 / 2);
  EXPECT_EQ(per_family[4], 2016u * 588 / 2);
}

TEST(Cayley, Q11Lab) {
  const Lab lab(11, 5);
  EXPECT_EQ(lab.graph.size(), 13200u);
  const auto v = validate_cayley(lab.ctx, lab.graph);
  EXPECT_TRUE(v.symmetric);
  EXPECT_TRUE(v.zero_diagonal);
  for (bool r : v.regular) EXPECT_TRUE(r);
  const auto h = h_vertices(lab.ctx, lab.graph);
  EXPECT_EQ(h.size(), 2640u);
  EXPECT_TRUE(independence_check(lab.graph, h, h));
  const ClassProfile profile = class_profile(lab.ctx, lab.graph, lab.weights);
  for (double r : eigenvector_residuals(lab.ctx, lab.graph, profile, lab.irreps, lab.spectrum.per_irrep)) {
    EXPECT_LT(r, 1e-6);
  }
}
