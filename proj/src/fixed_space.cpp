#include "ekr/fixed_space.hpp"

#include <numeric>
#include <string>

#include "ekr/error.hpp"
#include "ekr/linalg.hpp"
#include "ekr/parallel.hpp"

namespace ekr {

namespace {

// mu_m(eps^e) == 1  <=>  (q - 1) | m e.
bool mu_m_trivial(const EkrConfig& cfg, std::int64_t e) {
  return mod_floor(static_cast<std::int64_t>(cfg.m) * mod_floor(e, cfg.q - 1), cfg.q - 1) == 0;
}

std::int64_t indicator(bool b) { return b ? 1 : 0; }

}  // namespace

std::int64_t eta_closed(const Context& ctx, const ClassLabel& cls) {
  const EkrConfig& cfg = ctx.config();
  const std::int64_t q = cfg.q;
  switch (cls.kind) {
    case ClassKind::C1: return (q + 1) * indicator(mu_m_trivial(cfg, cls.p1));
    case ClassKind::C2: return (q / cfg.p + 1) * indicator(mu_m_trivial(cfg, cls.p1));
    case ClassKind::C3: {
      const std::int64_t diff = mod_floor(cls.p1 - cls.p2, q - 1);  // log(x / y)
      const std::int64_t g = std::gcd(diff, q - 1);
      const std::int64_t o1 = (q - 1) / g;
      return indicator(mu_m_trivial(cfg, cls.p1)) + indicator(mu_m_trivial(cfg, cls.p2)) +
             g * indicator(mu_m_trivial(cfg, o1 * cls.p1));
    }
    case ClassKind::C4: {
      const std::int64_t log_z = cls.p1;
      const std::int64_t g = std::gcd(log_z, q + 1);
      const std::int64_t o2 = log_z / g;
      return g * indicator(mu_m_trivial(cfg, o2));
    }
  }
  throw Error("eta_closed: unknown class kind");
}

std::int64_t eta_burnside(const Context& ctx, const ClassLabel& cls) {
  const FieldTable& f = ctx.field();
  const Mat2 g = representative(ctx, cls);
  const std::uint64_t n = element_order(ctx, cls);
  CharValue sum = 0.0;
  Mat2 power = identity();
  for (std::uint64_t k = 0; k < n; ++k) {
    sum += principal_char(ctx, classify(ctx, power));
    power = mat_mul(f, power, g);
  }
  if (power != identity()) throw CheckFailure("eta_burnside: wrong element order for " + to_string(cls));
  return round_checked(sum / static_cast<double>(n), 1e-6, "eta_burnside " + to_string(cls));
}

std::int64_t eta_kernel(const Context& ctx, const Mat2& g, TransversalKind basis) {
  const Transversal t = b_transversal(ctx, basis);
  const RepMatrix m = rep_matrix(ctx, g, t);
  const auto n = m.rows();
  return n - numeric_rank(m - RepMatrix::Identity(n, n), 1e-8);
}

std::vector<EtaReport> eta_reports(const Context& ctx, const std::vector<ClassLabel>& classes) {
  std::vector<EtaReport> out(classes.size());
  parallel_blocks(classes.size(), ctx.threads(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      EtaReport& r = out[i];
      r.cls = classes[i];
      r.eta_closed = eta_closed(ctx, classes[i]);
      r.eta_burnside = eta_burnside(ctx, classes[i]);
      r.eta_kernel = eta_kernel(ctx, representative(ctx, classes[i]));
      r.agree = r.eta_closed == r.eta_burnside && r.eta_closed == r.eta_kernel;
    }
  });
  return out;
}

bool is_derangement(const Context& ctx, const ClassLabel& cls) {
  const std::int64_t ell = ctx.config().ell;
  switch (cls.kind) {
    case ClassKind::C1:
    case ClassKind::C2: return cls.p1 % ell != 0;
    case ClassKind::C3: return cls.p1 % ell == cls.p2 % ell && cls.p1 % ell != 0;
    case ClassKind::C4: return cls.p1 % ell != 0;
  }
  return false;
}

std::optional<int> derangement_family(const Context& ctx, const ClassLabel& cls) {
  if (!is_derangement(ctx, cls)) return std::nullopt;
  return static_cast<int>(cls.kind);
}

std::array<std::uint64_t, 4> expected_family_sizes(const EkrConfig& cfg) {
  const std::uint64_t q = cfg.q, m = cfg.m, l = cfg.ell;
  return {m * (l - 1), m * (l - 1) * (q * q - 1), m * (l - 1) * (m - 1) / 2 * (q * q + q),
          q * m * (l - 1) / 2 * (q * q - q)};
}

DerangementInventory derangement_inventory(const Context& ctx, const std::vector<ClassLabel>& classes) {
  DerangementInventory inv;
  for (const auto& cls : classes) {
    if (const auto fam = derangement_family(ctx, cls)) {
      inv.families[*fam].push_back(cls);
      inv.family_sizes[*fam] += cls.size;
      inv.total_size += cls.size;
    }
  }
  const auto expected = expected_family_sizes(ctx.config());
  for (int i = 0; i < 4; ++i) {
    if (inv.family_sizes[i] != expected[i]) {
      throw CheckFailure("derangement family " + std::to_string(i + 1) + " has " +
                         std::to_string(inv.family_sizes[i]) + " elements, expected " +
                         std::to_string(expected[i]));
    }
  }
  return inv;
}

bool HSubgroup::contains(const Context& ctx, const Mat2& g) const {
  return ctx.field().log(det(ctx.field(), g)) % ell == 0;
}

bool class_in_h(const Context& ctx, const ClassLabel& cls) {
  const FieldTable& f = ctx.field();
  return f.log(det(f, representative(ctx, cls))) % ctx.config().ell == 0;
}

HSubgroup h_subgroup(const Context& ctx, const std::vector<ClassLabel>& classes) {
  HSubgroup h{ctx.config().ell, 0};
  for (const auto& cls : classes) {
    if (class_in_h(ctx, cls)) h.order += cls.size;
  }
  return h;
}

bool h_is_intersecting(const Context& ctx, const std::vector<ClassLabel>& classes) {
  for (const auto& cls : classes) {
    if (class_in_h(ctx, cls) && eta_closed(ctx, cls) < 1) return false;
  }
  return true;
}

}  // namespace ekr
