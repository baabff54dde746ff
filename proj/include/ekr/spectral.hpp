#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ekr/fixed_space.hpp"
#include "ekr/linalg.hpp"

namespace ekr {

// ---------------------------------------------------------------------------
// Character sums over the derangement parameter sets
//   C = {x in F_q^* : l does not divide log x}
//   D = {(x, y) : x != y, log x = log y != 0 mod l}
//   E = {z in K_q^* \ F_q^* : l does not divide log_omega z}
// sigma_C(r) = sum_C mu_r(x), sigma_D(r, s) = sum_D mu_r(x) mu_s(y),
// sigma_E1(r) = sum_E lambda_r(z), sigma_E2(r) = sum_E mu_r(N z).
// ---------------------------------------------------------------------------

enum class SigmaKind : std::uint8_t { C, D, E1, E2 };

std::string to_string(SigmaKind kind);

/// Literal summation over the defining set.
CharValue sigma_direct(const Context& ctx, SigmaKind kind, std::int64_t r, std::int64_t s = 0);

/// Closed form, or nullopt for an index that matches none of the listed cases
/// (those sums vanish). Values are the full sums, i.e. m times the tabulated
/// m^{-1} sigma. For E1 the index must satisfy (q+1) not dividing r.
/// Throws CheckFailure if two cases match at once.
std::optional<std::int64_t> sigma_closed(const EkrConfig& cfg, SigmaKind kind, std::int64_t r, std::int64_t s = 0);

/// Index range exercised for each kind: r mod q-1 for C and E2; pairs mod q-1
/// for D; r in [1, q^2-1) with (q+1) not dividing r for E1.
std::vector<std::pair<std::int64_t, std::int64_t>> sigma_indices(const EkrConfig& cfg, SigmaKind kind);

// ---------------------------------------------------------------------------
// Cayley graph eigenvalues
// ---------------------------------------------------------------------------

/// Babai eigenvalue of Cay(G, c_family) on the irrep: (1/dim) sum over the
/// family's classes of size * chi(class). family is 0..3 for c_1..c_4.
Rational babai_eigenvalue(const Context& ctx, const DerangementInventory& inv, const IrrepLabel& irrep,
                          int family);

/// The same eigenvalue assembled from character sums (sigma_direct) with the
/// per-family coefficients of each irrep row.
CharValue babai_from_sigma(const Context& ctx, const IrrepLabel& irrep, int family);

/// Babai eigenvalues of all four families, one row per irrep.
using BabaiTable = std::vector<std::array<Rational, 4>>;
BabaiTable babai_table(const Context& ctx, const DerangementInventory& inv, const std::vector<IrrepLabel>& irreps);

/// Number of detailed rows in the weighted eigenvalue table.
inline constexpr int kEigenRowCount = 14;

/// Row (0..13) whose divisibility conditions the irrep satisfies, or nullopt
/// for the rows where every family eigenvalue vanishes.
std::optional<int> eigen_case(const EkrConfig& cfg, const IrrepLabel& irrep);
std::string eigen_case_name(int row);
/// Closed-form eigenvalues of Gamma_i = m^{-1} Cay(G, c_i) for the row.
std::array<Rational, 4> eigen_row_formula(const EkrConfig& cfg, int row);

struct EigenRow {
  int row = 0;
  std::string label;
  std::array<Rational, 4> values;  // Gamma_1..Gamma_4
  std::uint64_t irrep_count = 0;
  std::uint64_t multiplicity = 0;  // sum of dim^2 over the row's irreps
};

/// Classifies every irrep into its row and checks that babai / m matches the
/// row formula exactly, and that the irreps outside all rows have zero
/// eigenvalues everywhere. Throws CheckFailure on any mismatch.
std::vector<EigenRow> eigen_table(const Context& ctx, const std::vector<IrrepLabel>& irreps, const BabaiTable& babai);

// ---------------------------------------------------------------------------
// LP weighting and the Hoffman certificate
// ---------------------------------------------------------------------------

struct WeightVector {
  RationalMatrix<4, 1> w;  // w_1..w_4
  Rational prefactor;      // 1 / (2 m |G|)

  /// Weight on Cay(G, c_i) in A_G = m^{-1} sum_i w_i prefactor Cay(G, c_i).
  Rational family_weight(const EkrConfig& cfg, int family) const;
};

WeightVector weight_vector(const EkrConfig& cfg);

/// The 7x4 matrix formed by the negated even rows of the eigenvalue table.
RationalMatrix<7, 4> l_matrix(const EkrConfig& cfg);
/// (1, -1/l, -1/l, -1/l, -(q-l)/((q+1) l), -1/l, -1/l).
RationalMatrix<7, 1> expected_l_product(const EkrConfig& cfg);
/// L * w * prefactor.
RationalMatrix<7, 1> l_matrix_product(const EkrConfig& cfg, const WeightVector& weights);
/// Canonical weights; throws CheckFailure if the product differs from expected_l_product.
RationalMatrix<7, 1> l_matrix_product(const EkrConfig& cfg);

struct WeightedSpectrum {
  std::vector<Rational> per_irrep;                           // aligned with the irrep list
  std::vector<std::pair<Rational, std::uint64_t>> distinct;  // ascending, with multiplicity
};

/// theta_L = sum_i family_weight_i * babai_i(L).
WeightedSpectrum weighted_spectrum(const EkrConfig& cfg, const std::vector<IrrepLabel>& irreps,
                                   const BabaiTable& babai, const WeightVector& weights);

struct SpectrumShape {
  Rational theta1;  // eigenvalue on the trivial irrep (the constant row sum)
  std::uint64_t theta1_multiplicity = 0;
  Rational theta2;  // largest |theta| among the rest, negative representative on ties
  bool theta1_dominant = false;  // |theta| < theta1 for every other eigenvalue
  bool gap_clean = false;        // no |theta| in (|theta2|, theta1) besides theta2 itself
};

SpectrumShape spectrum_shape(const EkrConfig& cfg, const std::vector<IrrepLabel>& irreps,
                             const WeightedSpectrum& spectrum);

/// |G| |theta2| / (theta1 + |theta2|).
Rational hoffman_bound(const EkrConfig& cfg, const Rational& theta1, const Rational& theta2);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Certificate {
  EkrConfig config;
  std::uint64_t group_order = 0;
  Rational theta1;
  Rational theta2;
  Rational hoffman_bound;
  std::uint64_t h_order = 0;
  bool verdict = false;
  std::vector<Check> checks;
  std::map<std::string, std::string> provenance;  // SHA-256 of the inputs
  WeightVector weights;
  WeightedSpectrum spectrum;
  std::vector<EigenRow> eigen_rows;
};

/// Full pipeline: derangements, eta triple agreement, H, character sums,
/// eigenvalue table, L w identity, spectrum, Hoffman bound. Each failure is
/// recorded as a failed check; the verdict is true only when every check
/// passes and the Hoffman bound equals |H| = |G| / l.
Certificate certify_bound(const Context& ctx, const WeightVector& weights);
Certificate certify_bound(const Context& ctx);

}  // namespace ekr
