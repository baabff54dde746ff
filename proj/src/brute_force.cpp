#include "ekr/brute_force.hpp"

#include <bit>

#include <zlib.h>

#include "ekr/error.hpp"
#include "ekr/parallel.hpp"

namespace ekr {

std::uint32_t DenseCayley::code(const Mat2& g) const {
  const std::uint32_t q = config.q;
  return ((g.a * q + g.b) * q + g.c) * q + g.d;
}

std::size_t DenseCayley::vertex(const Mat2& g) const {
  const std::int32_t i = index_of.at(code(g));
  if (i < 0) throw Error("vertex: singular matrix");
  return static_cast<std::size_t>(i);
}

DenseCayley build_cayley(const Context& ctx, bool slow) {
  const EkrConfig& cfg = ctx.config();
  const std::uint64_t order = cfg.group_order();
  const std::uint64_t limit = slow ? kBruteForceSlowLimit : kBruteForceLimit;
  if (order > limit) {
    throw ConfigError("brute force: |G| = " + std::to_string(order) + " exceeds the limit " + std::to_string(limit) +
                      (slow ? "" : " (pass --slow to allow up to " + std::to_string(kBruteForceSlowLimit) + ")"));
  }
  const FieldTable& f = ctx.field();
  const std::uint32_t q = cfg.q;

  DenseCayley g;
  g.config = cfg;
  g.vertices = all_elements(ctx);
  g.index_of.assign(static_cast<std::size_t>(q) * q * q * q, -1);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) g.index_of[g.code(g.vertices[i])] = static_cast<std::int32_t>(i);

  g.classes = class_inventory(ctx);
  const ClassIndex cindex(g.classes);
  const std::size_t n = g.size();
  g.class_of.resize(n);
  g.family_of.resize(n);
  parallel_blocks(n, ctx.threads(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const ClassLabel cls = classify(ctx, g.vertices[i]);
      g.class_of[i] = static_cast<std::uint32_t>(cindex.at(cls));
      const auto fam = derangement_family(ctx, cls);
      g.family_of[i] = static_cast<std::int8_t>(fam ? *fam : -1);
    }
  });

  // q x q operation tables for the quotient loop.
  std::vector<Elem> mul(static_cast<std::size_t>(q) * q), add(static_cast<std::size_t>(q) * q);
  for (Elem x = 0; x < q; ++x)
    for (Elem y = 0; y < q; ++y) {
      mul[x * q + y] = f.mul(x, y);
      add[x * q + y] = f.add(x, y);
    }
  std::vector<Mat2> inverses(n);
  for (std::size_t i = 0; i < n; ++i) inverses[i] = mat_inv(f, g.vertices[i]);

  g.words = (n + 63) / 64;
  for (auto& a : g.adjacency) a.assign(n * g.words, 0);

  parallel_blocks(n, ctx.threads(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t u = begin; u < end; ++u) {
      const Mat2& x = g.vertices[u];
      for (std::size_t v = 0; v < n; ++v) {
        const Mat2& y = inverses[v];  // y x = v^{-1} u
        const Elem a = add[mul[y.a * q + x.a] * q + mul[y.b * q + x.c]];
        const Elem b = add[mul[y.a * q + x.b] * q + mul[y.b * q + x.d]];
        const Elem c = add[mul[y.c * q + x.a] * q + mul[y.d * q + x.c]];
        const Elem d = add[mul[y.c * q + x.b] * q + mul[y.d * q + x.d]];
        const std::int32_t w = g.index_of[((a * q + b) * q + c) * q + d];
        const std::int8_t fam = g.family_of[static_cast<std::size_t>(w)];
        if (fam >= 0) g.adjacency[static_cast<std::size_t>(fam)][u * g.words + v / 64] |= std::uint64_t{1} << (v % 64);
      }
    }
  });
  return g;
}

CayleyValidation validate_cayley(const Context& ctx, const DenseCayley& graph) {
  CayleyValidation out;
  const std::size_t n = graph.size();
  const auto expected = expected_family_sizes(ctx.config());
  for (int fam = 0; fam < 4; ++fam) {
    const auto& adj = graph.adjacency[static_cast<std::size_t>(fam)];
    bool regular = true;
    bool symmetric = true;
    bool diag = true;
    for (std::size_t u = 0; u < n; ++u) {
      std::uint64_t deg = 0;
      for (std::size_t w = 0; w < graph.words; ++w) deg += static_cast<std::uint64_t>(std::popcount(adj[u * graph.words + w]));
      if (u == 0) out.degree[static_cast<std::size_t>(fam)] = deg;
      if (deg != expected[static_cast<std::size_t>(fam)]) regular = false;
      if (graph.adjacent(fam, u, u)) diag = false;
      for (std::size_t v = u + 1; v < n; ++v) {
        if (graph.adjacent(fam, u, v) != graph.adjacent(fam, v, u)) symmetric = false;
      }
    }
    out.regular[static_cast<std::size_t>(fam)] = regular;
    out.symmetric = out.symmetric && symmetric;
    out.zero_diagonal = out.zero_diagonal && diag;
  }
  return out;
}

bool independence_check(const DenseCayley& graph, const std::vector<std::size_t>& s1,
                        const std::vector<std::size_t>& s2) {
  std::vector<std::uint64_t> mask(graph.words, 0);
  for (std::size_t v : s2) mask[v / 64] |= std::uint64_t{1} << (v % 64);
  for (std::size_t u : s1) {
    for (const auto& adj : graph.adjacency) {
      const std::uint64_t* row = adj.data() + u * graph.words;
      for (std::size_t w = 0; w < graph.words; ++w) {
        if (row[w] & mask[w]) return false;
      }
    }
  }
  return true;
}

std::vector<std::size_t> h_vertices(const Context& ctx, const DenseCayley& graph) {
  return h_coset_vertices(ctx, graph, 0);
}

std::vector<std::size_t> h_coset_vertices(const Context& ctx, const DenseCayley& graph, std::int64_t t) {
  const FieldTable& f = ctx.field();
  const std::int64_t ell = ctx.config().ell;
  const Mat2 shift{f.exp(t), 0, 0, 1};
  std::vector<std::size_t> out;
  for (const Mat2& h : graph.vertices) {
    if (f.log(det(f, h)) % ell == 0) out.push_back(graph.vertex(mat_mul(f, shift, h)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClassProfile class_profile(const Context& ctx, const DenseCayley& graph, const WeightVector& w) {
  const std::size_t n = graph.size();
  std::array<double, 4> fw{};
  for (int i = 0; i < 4; ++i) fw[static_cast<std::size_t>(i)] = to_double(w.family_weight(ctx.config(), i));
  ClassProfile p;
  p.weights = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(graph.classes.size()));
  parallel_blocks(n, ctx.threads(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t u = begin; u < end; ++u) {
      for (std::size_t fam = 0; fam < 4; ++fam) {
        const std::uint64_t* row = graph.adjacency[fam].data() + u * graph.words;
        for (std::size_t wd = 0; wd < graph.words; ++wd) {
          std::uint64_t bits = row[wd];
          while (bits) {
            const std::size_t v = wd * 64 + static_cast<std::size_t>(std::countr_zero(bits));
            bits &= bits - 1;
            p.weights(static_cast<Eigen::Index>(u), graph.class_of[v]) += fw[fam];
          }
        }
      }
    }
  });
  return p;
}

namespace {

Eigen::VectorXcd class_values(const Context& ctx, const DenseCayley& graph, const IrrepLabel& irrep) {
  Eigen::VectorXcd x(static_cast<Eigen::Index>(graph.classes.size()));
  for (std::size_t c = 0; c < graph.classes.size(); ++c) x(static_cast<Eigen::Index>(c)) = char_value(ctx, irrep, graph.classes[c]);
  return x;
}

double residual_from(const DenseCayley& graph, const Eigen::VectorXcd& av, const Eigen::VectorXcd& x, double theta) {
  double worst = 0.0, scale = 0.0;
  for (std::size_t u = 0; u < graph.size(); ++u) {
    const CharValue v = x(graph.class_of[u]);
    worst = std::max(worst, std::abs(av(static_cast<Eigen::Index>(u)) - theta * v));
    scale = std::max(scale, std::abs(v));
  }
  return worst / scale;
}

}  // namespace

double eigenvector_residual(const Context& ctx, const DenseCayley& graph, const ClassProfile& profile,
                            const IrrepLabel& irrep, double theta) {
  const Eigen::VectorXcd x = class_values(ctx, graph, irrep);
  const Eigen::VectorXcd av = profile.weights.cast<CharValue>() * x;
  return residual_from(graph, av, x, theta);
}

std::vector<double> eigenvector_residuals(const Context& ctx, const DenseCayley& graph, const ClassProfile& profile,
                                          const std::vector<IrrepLabel>& irreps, const std::vector<Rational>& thetas) {
  const Eigen::MatrixXcd table = character_table(ctx, irreps, graph.classes);
  const Eigen::MatrixXcd av = profile.weights.cast<CharValue>() * table.transpose();
  std::vector<double> out(irreps.size());
  for (std::size_t k = 0; k < irreps.size(); ++k) {
    const auto col = static_cast<Eigen::Index>(k);
    out[k] = residual_from(graph, av.col(col), table.row(col).transpose(), to_double(thetas.at(k)));
  }
  return out;
}

std::vector<std::int64_t> exhaustive_eta_table(const Context& ctx, const DenseCayley& graph) {
  const std::size_t n = graph.size();
  std::vector<std::int64_t> out(n);
  parallel_blocks(n, ctx.threads(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      out[i] = eta_kernel(ctx, graph.vertices[i]);
      const ClassLabel& cls = graph.classes[graph.class_of[i]];
      const std::int64_t closed = eta_closed(ctx, cls);
      if (out[i] != closed) {
        const Mat2& g = graph.vertices[i];
        throw CheckFailure("eta mismatch at [[" + std::to_string(g.a) + "," + std::to_string(g.b) + "],[" +
                           std::to_string(g.c) + "," + std::to_string(g.d) + "]] in " + to_string(cls) + ": kernel " +
                           std::to_string(out[i]) + ", closed " + std::to_string(closed));
      }
    }
  });
  return out;
}

void write_edge_list(const DenseCayley& graph, const std::filesystem::path& path) {
  gzFile out = gzopen(path.string().c_str(), "wb");
  if (!out) throw Error("cannot open " + path.string());
  std::string buf;
  for (std::size_t u = 0; u < graph.size(); ++u) {
    for (std::size_t v = u + 1; v < graph.size(); ++v) {
      for (int fam = 0; fam < 4; ++fam) {
        if (!graph.adjacent(fam, u, v)) continue;
        buf += std::to_string(u) + ' ' + std::to_string(v) + ' ' + std::to_string(fam + 1) + '\n';
      }
    }
    if (buf.size() > (1u << 20) || u + 1 == graph.size()) {
      if (!buf.empty() && gzwrite(out, buf.data(), static_cast<unsigned>(buf.size())) == 0) {
        gzclose(out);
        throw Error("write failed for " + path.string());
      }
      buf.clear();
    }
  }
  if (gzclose(out) != Z_OK) throw Error("close failed for " + path.string());
}

}  // namespace ekr
