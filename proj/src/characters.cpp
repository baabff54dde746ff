#include "ekr/characters.hpp"

#include <algorithm>

#include "ekr/error.hpp"

namespace ekr {

CharValue mu(const Context& ctx, std::int64_t r, Elem x) {
  const std::int64_t n = ctx.q() - 1;
  return ctx.zeta_pow(mod_floor(r, n) * ctx.field().log(x));
}

CharValue lambda(const Context& ctx, std::int64_t r, ExtElem z) {
  const std::int64_t n = ctx.ext().unit_order();
  return ctx.xi_pow(mod_floor(r, n) * ctx.ext().log(z));
}

std::string to_string(IrrepFamily family) {
  switch (family) {
    case IrrepFamily::O: return "O";
    case IrrepFamily::S: return "S";
    case IrrepFamily::P: return "P";
    case IrrepFamily::W: return "W";
  }
  return "?";
}

std::string to_string(const IrrepLabel& label) {
  std::string out = to_string(label.family) + "(" + std::to_string(label.r);
  if (label.family == IrrepFamily::P) out += "," + std::to_string(label.s);
  return out + ")";
}

IrrepLabel make_irrep(std::uint32_t q, IrrepFamily family, std::int64_t r, std::int64_t s) {
  IrrepLabel label{family, r, 0, 0};
  switch (family) {
    case IrrepFamily::O: label.dim = 1; break;
    case IrrepFamily::S: label.dim = q; break;
    case IrrepFamily::P:
      label.dim = q + 1;
      label.s = s;
      if (label.r > label.s) std::swap(label.r, label.s);
      break;
    case IrrepFamily::W: {
      label.dim = q - 1;
      const std::int64_t n = static_cast<std::int64_t>(q) * q - 1;
      const std::int64_t a = mod_floor(r, n);
      label.r = std::min(a, mod_floor(a * q, n));
      break;
    }
  }
  return label;
}

IrrepLabel trivial_irrep(std::uint32_t q) { return make_irrep(q, IrrepFamily::O, q - 1); }

std::vector<IrrepLabel> irrep_inventory(const Context& ctx) {
  const std::uint32_t q = ctx.q();
  std::vector<IrrepLabel> out;
  out.reserve(static_cast<std::size_t>(q) * q - 1);
  for (std::int64_t r = 1; r <= q - 1; ++r) out.push_back(make_irrep(q, IrrepFamily::O, r));
  for (std::int64_t r = 1; r <= q - 1; ++r) out.push_back(make_irrep(q, IrrepFamily::S, r));
  for (std::int64_t r = 1; r <= q - 1; ++r) {
    for (std::int64_t s = r + 1; s <= q - 1; ++s) out.push_back(make_irrep(q, IrrepFamily::P, r, s));
  }
  const std::int64_t n = static_cast<std::int64_t>(q) * q - 1;
  for (std::int64_t r = 1; r < n; ++r) {
    if (r % (q + 1) == 0) continue;
    if (std::min(r, mod_floor(r * q, n)) != r) continue;
    out.push_back(make_irrep(q, IrrepFamily::W, r));
  }
  return out;
}

CharValue char_value(const Context& ctx, const IrrepLabel& irrep, const ClassLabel& cls) {
  const std::int64_t q = ctx.q();
  const std::int64_t r = irrep.r;
  const std::int64_t s = irrep.s;
  const std::int64_t i = cls.p1;
  const std::int64_t j = cls.p2;
  // Class parameters: x = eps^i, y = eps^j, z = omega^i (for C4) with N(z) = eps^i.
  // On F_q, lambda_r(eps^i) = xi^{r i (q+1)}.
  const auto lambda_base = [&](std::int64_t log_eps) { return ctx.xi_pow(mod_floor(r, q * q - 1) * log_eps * (q + 1)); };
  switch (irrep.family) {
    case IrrepFamily::O:
      switch (cls.kind) {
        case ClassKind::C1:
        case ClassKind::C2: return ctx.zeta_pow(2 * r * i);
        case ClassKind::C3: return ctx.zeta_pow(r * (i + j));
        case ClassKind::C4: return ctx.zeta_pow(r * i);
      }
      break;
    case IrrepFamily::S:
      switch (cls.kind) {
        case ClassKind::C1: return static_cast<double>(q) * ctx.zeta_pow(2 * r * i);
        case ClassKind::C2: return 0.0;
        case ClassKind::C3: return ctx.zeta_pow(r * (i + j));
        case ClassKind::C4: return -ctx.zeta_pow(r * i);
      }
      break;
    case IrrepFamily::P:
      switch (cls.kind) {
        case ClassKind::C1: return static_cast<double>(q + 1) * ctx.zeta_pow((r + s) * i);
        case ClassKind::C2: return ctx.zeta_pow((r + s) * i);
        case ClassKind::C3: return ctx.zeta_pow(r * i + s * j) + ctx.zeta_pow(r * j + s * i);
        case ClassKind::C4: return 0.0;
      }
      break;
    case IrrepFamily::W:
      switch (cls.kind) {
        case ClassKind::C1: return static_cast<double>(q - 1) * lambda_base(i);
        case ClassKind::C2: return -lambda_base(i);
        case ClassKind::C3: return 0.0;
        case ClassKind::C4: return -ctx.xi_pow(r * i) - ctx.xi_pow(r * mod_floor(i * q, q * q - 1));
      }
      break;
  }
  throw Error("char_value: unknown label");
}

Eigen::MatrixXcd character_table(const Context& ctx, const std::vector<IrrepLabel>& irreps,
                                 const std::vector<ClassLabel>& classes) {
  Eigen::MatrixXcd table(static_cast<Eigen::Index>(irreps.size()), static_cast<Eigen::Index>(classes.size()));
  for (std::size_t a = 0; a < irreps.size(); ++a) {
    for (std::size_t b = 0; b < classes.size(); ++b) {
      table(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = char_value(ctx, irreps[a], classes[b]);
    }
  }
  return table;
}

CharValue principal_char(const Context& ctx, const ClassLabel& cls) {
  const std::int64_t q = ctx.q();
  const std::int64_t m = ctx.config().m;
  switch (cls.kind) {
    case ClassKind::C1: return static_cast<double>(q + 1) * ctx.zeta_pow(m * cls.p1);
    case ClassKind::C2: return ctx.zeta_pow(m * cls.p1);
    case ClassKind::C3: return ctx.zeta_pow(m * cls.p1) + ctx.zeta_pow(m * cls.p2);
    case ClassKind::C4: return 0.0;
  }
  throw Error("principal_char: unknown class kind");
}

RepMatrix rep_matrix(const Context& ctx, const Mat2& g, const Transversal& t) {
  const FieldTable& f = ctx.field();
  const auto n = static_cast<Eigen::Index>(t.elements.size());
  std::vector<Mat2> inverses;
  inverses.reserve(t.elements.size());
  for (const auto& x : t.elements) inverses.push_back(mat_inv(f, x));

  RepMatrix m = RepMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Mat2 h = mat_mul(f, t.elements[static_cast<std::size_t>(i)], g);
    Eigen::Index found = -1;
    for (Eigen::Index j = 0; j < n; ++j) {
      const Mat2 b = mat_mul(f, h, inverses[static_cast<std::size_t>(j)]);
      if (!in_borel(b)) continue;
      if (found >= 0) throw Error("rep_matrix: transversal has two elements in one coset");
      found = j;
      m(i, j) = mu(ctx, ctx.config().m, b.a);
    }
    if (found < 0) throw Error("rep_matrix: coset not represented in transversal");
  }
  return m;
}

}  // namespace ekr
