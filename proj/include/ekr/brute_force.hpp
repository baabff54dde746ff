#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "ekr/spectral.hpp"

namespace ekr {

inline constexpr std::uint64_t kBruteForceLimit = 15000;      // q <= 11
inline constexpr std::uint64_t kBruteForceSlowLimit = 30000;  // q = 13 with --slow

/// Explicit Cayley graphs Cay(G, c_i) on all of GL_2(q): u ~ v in family i iff
/// v^{-1} u lies in c_i. Adjacency is one dense bit matrix per family.
struct DenseCayley {
  EkrConfig config;
  std::vector<Mat2> vertices;             // all_elements order
  std::vector<std::int32_t> index_of;     // matrix code -> vertex, -1 if singular
  std::vector<ClassLabel> classes;        // class_inventory order
  std::vector<std::uint32_t> class_of;    // vertex -> class position
  std::vector<std::int8_t> family_of;     // vertex -> 0..3, -1 if not a derangement
  std::size_t words = 0;                  // 64-bit words per row
  std::array<std::vector<std::uint64_t>, 4> adjacency;

  std::size_t size() const { return vertices.size(); }
  std::uint32_t code(const Mat2& g) const;
  std::size_t vertex(const Mat2& g) const;
  bool adjacent(int family, std::size_t u, std::size_t v) const {
    return (adjacency[static_cast<std::size_t>(family)][u * words + v / 64] >> (v % 64)) & 1u;
  }
};

/// Throws ConfigError when |G| exceeds the guard (kBruteForceLimit, or
/// kBruteForceSlowLimit with slow = true).
DenseCayley build_cayley(const Context& ctx, bool slow = false);

struct CayleyValidation {
  bool symmetric = true;
  bool zero_diagonal = true;
  std::array<bool, 4> regular{};
  std::array<std::uint64_t, 4> degree{};  // degree of vertex 0
};

CayleyValidation validate_cayley(const Context& ctx, const DenseCayley& graph);

/// True iff no edge of the union graph joins S1 to S2.
bool independence_check(const DenseCayley& graph, const std::vector<std::size_t>& s1,
                        const std::vector<std::size_t>& s2);

/// Vertices of H = {g : l | log det g}.
std::vector<std::size_t> h_vertices(const Context& ctx, const DenseCayley& graph);
/// Vertices of the left coset diag(eps^t, 1) H.
std::vector<std::size_t> h_coset_vertices(const Context& ctx, const DenseCayley& graph, std::int64_t t);

/// R(u, c) = sum_i family_weight_i * #{v in class c : u ~_i v}; A_G v = R X^T for
/// any class function with values X.
struct ClassProfile {
  Eigen::MatrixXd weights;  // |G| x #classes
};

ClassProfile class_profile(const Context& ctx, const DenseCayley& graph, const WeightVector& w);

/// ||A_G v - theta v||_inf / ||v||_inf for v(g) = chi_L(class of g).
double eigenvector_residual(const Context& ctx, const DenseCayley& graph, const ClassProfile& profile,
                            const IrrepLabel& irrep, double theta);

/// Residual for every irrep against its weighted eigenvalue.
std::vector<double> eigenvector_residuals(const Context& ctx, const DenseCayley& graph, const ClassProfile& profile,
                                          const std::vector<IrrepLabel>& irreps, const std::vector<Rational>& thetas);

/// eta_kernel of every group element, checked against eta_closed of its class.
/// Throws CheckFailure naming the first disagreeing element.
std::vector<std::int64_t> exhaustive_eta_table(const Context& ctx, const DenseCayley& graph);

/// gzip text, one "u v family" line per edge with u < v, families numbered 1..4.
void write_edge_list(const DenseCayley& graph, const std::filesystem::path& path);

}  // namespace ekr
