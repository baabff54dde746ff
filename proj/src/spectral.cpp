#include "ekr/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ekr/error.hpp"
#include "ekr/parallel.hpp"

namespace ekr {

namespace {

bool divides(std::int64_t d, std::int64_t v) { return v % d == 0; }

// Picks the unique matching case; throws if two match at once.
std::optional<std::int64_t> pick(std::initializer_list<std::pair<bool, std::int64_t>> cases, const char* what) {
  std::optional<std::int64_t> out;
  for (const auto& [hit, value] : cases) {
    if (!hit) continue;
    if (out) throw CheckFailure(std::string("sigma_closed: overlapping cases for ") + what);
    out = value;
  }
  return out;
}

Rational rat(std::int64_t v) { return make_rational(v); }

}  // namespace

std::string to_string(SigmaKind kind) {
  switch (kind) {
    case SigmaKind::C: return "C";
    case SigmaKind::D: return "D";
    case SigmaKind::E1: return "E1";
    case SigmaKind::E2: return "E2";
  }
  return "?";
}

CharValue sigma_direct(const Context& ctx, SigmaKind kind, std::int64_t r, std::int64_t s) {
  const FieldTable& f = ctx.field();
  const ExtFieldTable& e = ctx.ext();
  const std::int64_t q = ctx.q();
  const std::int64_t ell = ctx.config().ell;
  CharValue sum = 0.0;
  switch (kind) {
    case SigmaKind::C:
      for (Elem x = 1; x < q; ++x) {
        if (f.log(x) % ell != 0) sum += mu(ctx, r, x);
      }
      break;
    case SigmaKind::D:
      for (Elem x = 1; x < q; ++x) {
        const std::int64_t lx = f.log(x);
        if (lx % ell == 0) continue;
        for (Elem y = 1; y < q; ++y) {
          if (y == x || f.log(y) % ell != lx % ell) continue;
          sum += mu(ctx, r, x) * mu(ctx, s, y);
        }
      }
      break;
    case SigmaKind::E1:
    case SigmaKind::E2:
      for (ExtElem z = 1; z < e.order; ++z) {
        if (e.in_base(z) || e.log(z) % ell == 0) continue;
        sum += kind == SigmaKind::E1 ? lambda(ctx, r, z) : mu(ctx, r, norm(e, z));
      }
      break;
  }
  return sum;
}

std::optional<std::int64_t> sigma_closed(const EkrConfig& cfg, SigmaKind kind, std::int64_t r, std::int64_t s) {
  const std::int64_t q = cfg.q, ell = cfg.ell, m = cfg.m;
  const std::int64_t n = q - 1;
  const std::int64_t L = ell - 1;
  switch (kind) {
    case SigmaKind::C: {
      r = mod_floor(r, n);
      return pick({{divides(n, r), m * L}, {divides(m, r) && !divides(ell, r), -m}}, "C");
    }
    case SigmaKind::D: {
      r = mod_floor(r, n);
      s = mod_floor(s, n);
      const std::int64_t u = mod_floor(r + s, n);
      const bool both = divides(m, r) && divides(m, s);
      const bool neither = !divides(m, r) && !divides(m, s);
      return pick({{both && divides(ell, u), m * L * (m - 1)},
                   {both && !divides(ell, u), -m * (m - 1)},
                   {neither && divides(n, u), -m * L},
                   {neither && divides(m, u) && !divides(ell, u), m}},
                  "D");
    }
    case SigmaKind::E1: {
      r = mod_floor(r, q * q - 1);
      if (divides(q + 1, r)) throw std::invalid_argument("sigma_closed E1: index divisible by q+1");
      return pick({{divides(n, r), -m * L}, {divides(m, r) && !divides(ell, r), m}}, "E1");
    }
    case SigmaKind::E2: {
      r = mod_floor(r, n);
      return pick({{divides(n, r), m * q * L},
                   {divides(m, r) && !divides(ell, r), -m * q},
                   {divides(n / 2, r) && !divides(m, r), -m * L},
                   {divides(m / 2, r) && !divides(m, r) && !divides(ell, r), m}},
                  "E2");
    }
  }
  return std::nullopt;
}

std::vector<std::pair<std::int64_t, std::int64_t>> sigma_indices(const EkrConfig& cfg, SigmaKind kind) {
  const std::int64_t q = cfg.q;
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  switch (kind) {
    case SigmaKind::C:
    case SigmaKind::E2:
      for (std::int64_t r = 0; r < q - 1; ++r) out.emplace_back(r, 0);
      break;
    case SigmaKind::D:
      for (std::int64_t r = 0; r < q - 1; ++r)
        for (std::int64_t s = 0; s < q - 1; ++s) out.emplace_back(r, s);
      break;
    case SigmaKind::E1:
      for (std::int64_t r = 1; r < q * q - 1; ++r)
        if (r % (q + 1) != 0) out.emplace_back(r, 0);
      break;
  }
  return out;
}

Rational babai_eigenvalue(const Context& ctx, const DerangementInventory& inv, const IrrepLabel& irrep,
                          int family) {
  CharValue sum = 0.0;
  for (const ClassLabel& cls : inv.families.at(static_cast<std::size_t>(family))) {
    sum += static_cast<double>(cls.size) * char_value(ctx, irrep, cls);
  }
  const std::int64_t total = round_checked(sum, 1e-6, "babai " + to_string(irrep));
  return make_rational(total, static_cast<std::int64_t>(irrep.dim));
}

CharValue babai_from_sigma(const Context& ctx, const IrrepLabel& irrep, int family) {
  const double q = ctx.q();
  const std::int64_t r = irrep.r, s = irrep.s;
  const auto C = [&](std::int64_t i) { return sigma_direct(ctx, SigmaKind::C, i); };
  switch (irrep.family) {
    case IrrepFamily::O:
      switch (family) {
        case 0: return C(2 * r);
        case 1: return (q * q - 1) * C(2 * r);
        case 2: return q * (q + 1) / 2 * sigma_direct(ctx, SigmaKind::D, r, r);
        case 3: return q * (q - 1) / 2 * sigma_direct(ctx, SigmaKind::E2, r);
      }
      break;
    case IrrepFamily::S:
      switch (family) {
        case 0: return C(2 * r);
        case 1: return 0.0;
        case 2: return (q + 1) / 2 * sigma_direct(ctx, SigmaKind::D, r, r);
        case 3: return -(q - 1) / 2 * sigma_direct(ctx, SigmaKind::E2, r);
      }
      break;
    case IrrepFamily::P:
      switch (family) {
        case 0: return C(r + s);
        case 1: return (q - 1) * C(r + s);
        case 2: return q * sigma_direct(ctx, SigmaKind::D, r, s);
        case 3: return 0.0;
      }
      break;
    case IrrepFamily::W:
      switch (family) {
        case 0: return C(r);
        case 1: return -(q + 1) * C(r);
        case 2: return 0.0;
        case 3: return -q * sigma_direct(ctx, SigmaKind::E1, r);
      }
      break;
  }
  throw std::invalid_argument("babai_from_sigma: family out of range");
}

BabaiTable babai_table(const Context& ctx, const DerangementInventory& inv, const std::vector<IrrepLabel>& irreps) {
  BabaiTable out(irreps.size());
  parallel_blocks(irreps.size(), ctx.threads(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (int fam = 0; fam < 4; ++fam) out[i][static_cast<std::size_t>(fam)] = babai_eigenvalue(ctx, inv, irreps[i], fam);
    }
  });
  return out;
}

// Rows 0-3: O, 4-7: S, 8-11: P, 12-13: W. Within O and S the four conditions are
// q-1 | r; m | r, l !| r; (q-1)/2 | r, m !| r; m/2 | r, m !| r, l !| r.
std::optional<int> eigen_case(const EkrConfig& cfg, const IrrepLabel& irrep) {
  const std::int64_t q = cfg.q, ell = cfg.ell, m = cfg.m;
  const std::int64_t n = q - 1;
  const std::int64_t r = irrep.r;
  std::vector<int> hits;
  const auto add = [&](bool cond, int row) {
    if (cond) hits.push_back(row);
  };
  switch (irrep.family) {
    case IrrepFamily::O:
    case IrrepFamily::S: {
      const int base = irrep.family == IrrepFamily::O ? 0 : 4;
      add(divides(n, r), base);
      add(divides(m, r) && !divides(ell, r), base + 1);
      add(divides(n / 2, r) && !divides(m, r), base + 2);
      add(divides(m / 2, r) && !divides(m, r) && !divides(ell, r), base + 3);
      break;
    }
    case IrrepFamily::P: {
      const std::int64_t s = irrep.s;
      const std::int64_t u = r + s;
      const bool both = divides(m, r) && divides(m, s);
      const bool neither = !divides(m, r) && !divides(m, s);
      add(both && divides(ell, u), 8);
      add(both && !divides(ell, u), 9);
      add(neither && divides(n, u), 10);
      add(neither && divides(m, u) && !divides(ell, u), 11);
      break;
    }
    case IrrepFamily::W:
      add(divides(n, r), 12);
      add(divides(m, r) && !divides(ell, r), 13);
      break;
  }
  if (hits.size() > 1) throw CheckFailure("eigen_case: " + to_string(irrep) + " matches several rows");
  if (hits.empty()) return std::nullopt;
  return hits.front();
}

std::string eigen_case_name(int row) {
  static const char* const names[kEigenRowCount] = {
      "O: q-1 | r",           "O: m | r; l !| r",      "O: (q-1)/2 | r; m !| r", "O: m/2 | r; m,l !| r",
      "S: q-1 | r",           "S: m | r; l !| r",      "S: (q-1)/2 | r; m !| r", "S: m/2 | r; m,l !| r",
      "P: m | r,s; l | u",    "P: m | r,s; l !| u",    "P: m !| r,s; q-1 | u",   "P: m !| r,s; m | u; l !| u",
      "W: q-1 | r",           "W: m | r; l !| r"};
  if (row < 0 || row >= kEigenRowCount) throw std::out_of_range("eigen_case_name");
  return names[row];
}

std::array<Rational, 4> eigen_row_formula(const EkrConfig& cfg, int row) {
  const std::int64_t q = cfg.q, m = cfg.m;
  const std::int64_t L = cfg.ell - 1;
  const Rational half = make_rational(1, 2);
  // Even-indexed rows are -(l-1) times the following one.
  const auto paired = [&](const std::array<Rational, 4>& next) {
    std::array<Rational, 4> out;
    for (std::size_t i = 0; i < 4; ++i) out[i] = -rat(L) * next[i];
    return out;
  };
  switch (row) {
    case 0: return paired(eigen_row_formula(cfg, 1));
    case 1: return {rat(-1), rat(-(q * q - 1)), -rat(q * (q + 1) * (m - 1)) * half, -rat(q * q * (q - 1)) * half};
    case 2: return paired(eigen_row_formula(cfg, 3));
    case 3: return {rat(-1), rat(-(q * q - 1)), rat(q * (q + 1)) * half, rat(q * (q - 1)) * half};
    case 4: return paired(eigen_row_formula(cfg, 5));
    case 5: return {rat(-1), rat(0), -rat((q + 1) * (m - 1)) * half, rat(q * (q - 1)) * half};
    case 6: return paired(eigen_row_formula(cfg, 7));
    case 7: return {rat(-1), rat(0), rat(q + 1) * half, -rat(q - 1) * half};
    case 8: return paired(eigen_row_formula(cfg, 9));
    case 9: return {rat(-1), rat(-(q - 1)), rat(-q * (m - 1)), rat(0)};
    case 10: return paired(eigen_row_formula(cfg, 11));
    case 11: return {rat(-1), rat(-(q - 1)), rat(q), rat(0)};
    case 12: return paired(eigen_row_formula(cfg, 13));
    case 13: return {rat(-1), rat(q + 1), rat(0), rat(-q)};
  }
  throw std::out_of_range("eigen_row_formula");
}

std::vector<EigenRow> eigen_table(const Context& ctx, const std::vector<IrrepLabel>& irreps, const BabaiTable& babai) {
  const EkrConfig& cfg = ctx.config();
  const Rational m = rat(cfg.m);
  std::vector<EigenRow> rows(kEigenRowCount);
  for (int i = 0; i < kEigenRowCount; ++i) {
    rows[static_cast<std::size_t>(i)].row = i;
    rows[static_cast<std::size_t>(i)].label = eigen_case_name(i);
    rows[static_cast<std::size_t>(i)].values = eigen_row_formula(cfg, i);
  }
  for (std::size_t k = 0; k < irreps.size(); ++k) {
    const auto row = eigen_case(cfg, irreps[k]);
    for (std::size_t fam = 0; fam < 4; ++fam) {
      const Rational got = babai.at(k)[fam] / m;
      const Rational want = row ? rows[static_cast<std::size_t>(*row)].values[fam] : rat(0);
      if (got != want) {
        throw CheckFailure("eigen_table: " + to_string(irreps[k]) + " family " + std::to_string(fam + 1) + " gives " +
                           to_string(got) + ", row " + (row ? eigen_case_name(*row) : std::string("zero")) +
                           " expects " + to_string(want));
      }
    }
    if (row) {
      EigenRow& er = rows[static_cast<std::size_t>(*row)];
      ++er.irrep_count;
      er.multiplicity += irreps[k].dim * irreps[k].dim;
    }
  }
  return rows;
}

Rational WeightVector::family_weight(const EkrConfig& cfg, int family) const {
  return w(family) * prefactor / rat(cfg.m);
}

WeightVector weight_vector(const EkrConfig& cfg) {
  const std::int64_t q = cfg.q, m = cfg.m;
  WeightVector out;
  out.w(0) = -rat(q - 1) * (rat(m) * rat(m) * rat(2 * q * q + 2 * q + 1) - rat(2 * m) - rat(q * q) + rat(1));
  out.w(1) = rat(m + q - 1) * rat(m + q - 1);
  out.w(2) = rat(2 * (q - 1)) * rat(m + q - 1);
  out.w(3) = rat(2 * m) * rat(m + q - 1);
  out.prefactor = Rational(1) / (rat(2 * m) * Rational(mpz_class(std::to_string(cfg.group_order()))));
  return out;
}

RationalMatrix<7, 4> l_matrix(const EkrConfig& cfg) {
  RationalMatrix<7, 4> out;
  for (int i = 0; i < 7; ++i) {
    const auto row = eigen_row_formula(cfg, 2 * i + 1);
    for (int j = 0; j < 4; ++j) out(i, j) = -row[static_cast<std::size_t>(j)];
  }
  return out;
}

RationalMatrix<7, 1> expected_l_product(const EkrConfig& cfg) {
  const std::int64_t q = cfg.q, ell = cfg.ell;
  const Rational inv_ell = make_rational(-1, ell);
  RationalMatrix<7, 1> out;
  out << rat(1), inv_ell, inv_ell, inv_ell, make_rational(-(q - ell), (q + 1) * ell), inv_ell, inv_ell;
  return out;
}

RationalMatrix<7, 1> l_matrix_product(const EkrConfig& cfg, const WeightVector& weights) {
  RationalMatrix<7, 1> out = l_matrix(cfg) * weights.w;
  for (int i = 0; i < 7; ++i) out(i) *= weights.prefactor;
  return out;
}

RationalMatrix<7, 1> l_matrix_product(const EkrConfig& cfg) {
  const RationalMatrix<7, 1> got = l_matrix_product(cfg, weight_vector(cfg));
  const RationalMatrix<7, 1> want = expected_l_product(cfg);
  for (int i = 0; i < 7; ++i) {
    if (got(i) != want(i)) {
      throw CheckFailure("L w entry " + std::to_string(i + 1) + " is " + to_string(got(i)) + ", expected " +
                         to_string(want(i)));
    }
  }
  return got;
}

WeightedSpectrum weighted_spectrum(const EkrConfig& cfg, const std::vector<IrrepLabel>& irreps,
                                   const BabaiTable& babai, const WeightVector& weights) {
  std::array<Rational, 4> fw;
  for (int i = 0; i < 4; ++i) fw[static_cast<std::size_t>(i)] = weights.family_weight(cfg, i);

  WeightedSpectrum out;
  out.per_irrep.reserve(irreps.size());
  std::map<Rational, std::uint64_t> mult;
  for (std::size_t k = 0; k < irreps.size(); ++k) {
    Rational theta = 0;
    for (std::size_t i = 0; i < 4; ++i) theta += fw[i] * babai.at(k)[i];
    mult[theta] += irreps[k].dim * irreps[k].dim;
    out.per_irrep.push_back(std::move(theta));
  }
  out.distinct.assign(mult.begin(), mult.end());
  return out;
}

SpectrumShape spectrum_shape(const EkrConfig& cfg, const std::vector<IrrepLabel>& irreps,
                             const WeightedSpectrum& spectrum) {
  SpectrumShape shape;
  const IrrepLabel trivial = trivial_irrep(cfg.q);
  const auto it = std::find(irreps.begin(), irreps.end(), trivial);
  if (it == irreps.end()) throw CheckFailure("spectrum_shape: trivial irrep missing");
  shape.theta1 = spectrum.per_irrep.at(static_cast<std::size_t>(it - irreps.begin()));

  bool have_second = false;
  for (const auto& [theta, mult] : spectrum.distinct) {
    if (theta == shape.theta1) {
      shape.theta1_multiplicity = mult;
      continue;
    }
    const Rational mag = abs(theta);
    if (!have_second || mag > abs(shape.theta2) || (mag == abs(shape.theta2) && theta < shape.theta2)) {
      shape.theta2 = theta;
      have_second = true;
    }
  }
  if (!have_second) throw CheckFailure("spectrum_shape: only one distinct eigenvalue");

  shape.theta1_dominant = true;
  shape.gap_clean = true;
  const Rational t2 = abs(shape.theta2);
  for (const auto& [theta, mult] : spectrum.distinct) {
    if (theta == shape.theta1) continue;
    const Rational mag = abs(theta);
    if (mag >= shape.theta1) shape.theta1_dominant = false;
    if (mag > t2 && mag < shape.theta1) shape.gap_clean = false;
  }
  return shape;
}

Rational hoffman_bound(const EkrConfig& cfg, const Rational& theta1, const Rational& theta2) {
  const Rational t2 = abs(theta2);
  const Rational denom = theta1 + t2;
  if (denom == 0) throw CheckFailure("hoffman_bound: theta1 + |theta2| = 0");
  return Rational(mpz_class(std::to_string(cfg.group_order()))) * t2 / denom;
}

}  // namespace ekr
