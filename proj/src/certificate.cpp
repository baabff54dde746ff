#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include <openssl/evp.h>

#include "ekr/error.hpp"
#include "ekr/spectral.hpp"

namespace ekr {

namespace {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

template <typename Seq>
std::string join_numbers(const Seq& seq) {
  std::ostringstream os;
  for (const auto& v : seq) os << v << ',';
  return os.str();
}

std::map<std::string, std::string> provenance(const Context& ctx, const std::vector<ClassLabel>& classes,
                                              const std::vector<IrrepLabel>& irreps, const WeightVector& w) {
  const FieldTable& f = ctx.field();
  const ExtFieldTable& e = ctx.ext();
  std::map<std::string, std::string> out;
  out["field_table"] = sha256_hex(join_numbers(f.modulus) + "|" + join_numbers(f.exp_table));
  out["extension_table"] = sha256_hex(std::to_string(e.eps) + "|" + std::to_string(e.omega) + "|" +
                                      join_numbers(e.exp_table));
  std::string cls_text, irr_text;
  for (const auto& c : classes) cls_text += to_string(c) + ":" + std::to_string(c.size) + ",";
  for (const auto& l : irreps) irr_text += to_string(l) + ":" + std::to_string(l.dim) + ",";
  out["class_inventory"] = sha256_hex(cls_text);
  out["irrep_inventory"] = sha256_hex(irr_text);
  std::string wt;
  for (int i = 0; i < 4; ++i) wt += to_string(w.w(i)) + ",";
  out["weights"] = sha256_hex(wt + to_string(w.prefactor));
  return out;
}

// Residual bound for rounding sigma_direct.
bool sigma_matches(const Context& ctx, SigmaKind kind, std::int64_t r, std::int64_t s, std::string& detail) {
  const EkrConfig& cfg = ctx.config();
  const CharValue direct = sigma_direct(ctx, kind, r, s);
  const std::int64_t rounded = round_checked(direct, 1e-9 * cfg.m, "sigma_" + to_string(kind));
  const auto closed = sigma_closed(cfg, kind, r, s);
  const std::int64_t want = closed.value_or(0);
  if (rounded == want) return true;
  detail = "sigma_" + to_string(kind) + "(" + std::to_string(r) + "," + std::to_string(s) + ") direct " +
           std::to_string(rounded) + " closed " + (closed ? std::to_string(want) : std::string("zero-case"));
  return false;
}

}  // namespace

Certificate certify_bound(const Context& ctx) { return certify_bound(ctx, weight_vector(ctx.config())); }

Certificate certify_bound(const Context& ctx, const WeightVector& weights) {
  const EkrConfig& cfg = ctx.config();
  Certificate cert;
  cert.config = cfg;
  cert.group_order = cfg.group_order();
  cert.weights = weights;

  const auto run = [&](const std::string& name, const std::function<std::string()>& step) {
    Check c{name, false, {}};
    try {
      c.detail = step();
      c.passed = c.detail.empty();
    } catch (const std::exception& ex) {
      c.detail = ex.what();
    }
    cert.checks.push_back(std::move(c));
    return cert.checks.back().passed;
  };

  const std::vector<ClassLabel> classes = class_inventory(ctx);
  const std::vector<IrrepLabel> irreps = irrep_inventory(ctx);
  cert.provenance = provenance(ctx, classes, irreps, weights);

  run("class_sizes_sum", [&]() -> std::string {
    std::uint64_t total = 0;
    for (const auto& c : classes) total += c.size;
    return total == cert.group_order ? "" : "class sizes sum to " + std::to_string(total);
  });
  run("irrep_dims_sum", [&]() -> std::string {
    std::uint64_t total = 0;
    for (const auto& l : irreps) total += l.dim * l.dim;
    return total == cert.group_order ? "" : "sum of dim^2 is " + std::to_string(total);
  });

  DerangementInventory inv;
  const bool have_inv = run("derangement_sizes", [&]() -> std::string {
    inv = derangement_inventory(ctx, classes);
    return "";
  });

  run("eta_triple_agreement", [&]() -> std::string {
    for (const auto& r : eta_reports(ctx, classes)) {
      if (!r.agree) {
        return to_string(r.cls) + ": closed " + std::to_string(r.eta_closed) + " burnside " +
               std::to_string(r.eta_burnside) + " kernel " + std::to_string(r.eta_kernel);
      }
      if ((r.eta_closed == 0) != is_derangement(ctx, r.cls)) return to_string(r.cls) + ": derangement test disagrees";
    }
    return "";
  });

  run("h_intersecting", [&]() -> std::string {
    const HSubgroup h = h_subgroup(ctx, classes);
    cert.h_order = h.order;
    if (h.order * cfg.ell != cert.group_order) return "|H| = " + std::to_string(h.order);
    return h_is_intersecting(ctx, classes) ? "" : "H meets a derangement class";
  });

  run("sigma_closed_forms", [&]() -> std::string {
    std::string detail;
    const bool exhaustive = cfg.q <= 13;
    std::mt19937_64 rng(0x5eedULL + cfg.q * 1000ULL + cfg.ell);
    for (SigmaKind kind : {SigmaKind::C, SigmaKind::D, SigmaKind::E1, SigmaKind::E2}) {
      auto idx = sigma_indices(cfg, kind);
      if (!exhaustive && idx.size() > 200) {
        std::shuffle(idx.begin(), idx.end(), rng);
        idx.resize(200);
      }
      for (const auto& [r, s] : idx) {
        if (!sigma_matches(ctx, kind, r, s, detail)) return detail;
      }
    }
    return "";
  });

  BabaiTable babai;
  bool have_babai = false;
  if (have_inv) {
    have_babai = run("babai_sigma_identity", [&]() -> std::string {
      babai = babai_table(ctx, inv, irreps);
      for (std::size_t k = 0; k < irreps.size(); ++k) {
        for (int fam = 0; fam < 4; ++fam) {
          const CharValue v = babai_from_sigma(ctx, irreps[k], fam);
          const Rational& want = babai[k][static_cast<std::size_t>(fam)];
          if (std::abs(v - CharValue(to_double(want), 0.0)) > 1e-6) {
            return to_string(irreps[k]) + " family " + std::to_string(fam + 1) + ": sigma form " +
                   std::to_string(v.real()) + " vs " + to_string(want);
          }
        }
      }
      return "";
    });
  }

  if (have_babai) {
    run("eigen_table", [&]() -> std::string {
      cert.eigen_rows = eigen_table(ctx, irreps, babai);
      return "";
    });
  }

  run("weight_signs", [&]() -> std::string {
    const auto& w = weights.w;
    if (w(0) < 0 && w(1) > 0 && w(2) > 0 && w(3) > 0) return "";
    return "sign pattern of w is not (-,+,+,+)";
  });

  run("l_identity", [&]() -> std::string {
    const RationalMatrix<7, 1> got = l_matrix_product(cfg, weights);
    const RationalMatrix<7, 1> want = expected_l_product(cfg);
    for (int i = 0; i < 7; ++i) {
      if (got(i) != want(i)) {
        return "L w entry " + std::to_string(i + 1) + " is " + to_string(got(i)) + ", expected " + to_string(want(i));
      }
    }
    return "";
  });

  if (have_babai) {
    SpectrumShape shape;
    const bool have_shape = run("spectrum_multiplicities", [&]() -> std::string {
      cert.spectrum = weighted_spectrum(cfg, irreps, babai, weights);
      shape = spectrum_shape(cfg, irreps, cert.spectrum);
      cert.theta1 = shape.theta1;
      cert.theta2 = shape.theta2;
      std::uint64_t total = 0;
      for (const auto& d : cert.spectrum.distinct) total += d.second;
      return total == cert.group_order ? "" : "multiplicities sum to " + std::to_string(total);
    });
    if (have_shape) {
      run("theta1", [&]() -> std::string {
        if (shape.theta1 != make_rational(cfg.ell - 1)) return "theta1 = " + to_string(shape.theta1);
        if (shape.theta1_multiplicity != 1) return "theta1 multiplicity " + std::to_string(shape.theta1_multiplicity);
        if (!shape.theta1_dominant) return "another eigenvalue reaches |theta1|";
        return "";
      });
      run("theta2", [&]() -> std::string {
        if (shape.theta2 != make_rational(-1)) return "theta2 = " + to_string(shape.theta2);
        if (!shape.gap_clean) return "eigenvalue with absolute value strictly between |theta2| and theta1";
        return "";
      });
      run("hoffman_equals_h", [&]() -> std::string {
        cert.hoffman_bound = hoffman_bound(cfg, shape.theta1, shape.theta2);
        const Rational target = make_rational(static_cast<std::int64_t>(cert.group_order / cfg.ell));
        if (cert.hoffman_bound != target) return "bound " + to_string(cert.hoffman_bound);
        if (make_rational(static_cast<std::int64_t>(cert.h_order)) != target) return "|H| differs from |G|/l";
        return "";
      });
    }
  }

  cert.verdict = !cert.checks.empty();
  for (const auto& c : cert.checks) cert.verdict = cert.verdict && c.passed;
  if (cert.verdict && cert.hoffman_bound != make_rational(static_cast<std::int64_t>(cert.h_order))) cert.verdict = false;
  return cert;
}

}  // namespace ekr
