#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ekr/gl2.hpp"

namespace ekr {

using CharValue = std::complex<double>;

/// mu_r(x) = zeta^{r log_eps x}; throws on x = 0.
CharValue mu(const Context& ctx, std::int64_t r, Elem x);
/// lambda_r(z) = xi^{r log_omega z}; throws on z = 0.
CharValue lambda(const Context& ctx, std::int64_t r, ExtElem z);

enum class IrrepFamily : std::uint8_t { O, S, P, W };

/// Irreducible character of GL_2(q):
///   O(r), S(r): 1 <= r <= q-1
///   P(r, s):    1 <= r < s <= q-1
///   W(r):       1 <= r < q^2-1, (q+1) does not divide r, r = min(r, q r mod q^2-1)
struct IrrepLabel {
  IrrepFamily family = IrrepFamily::O;
  std::int64_t r = 0;
  std::int64_t s = 0;
  std::uint64_t dim = 0;

  auto key() const { return std::tuple(family, r, s); }
  bool operator==(const IrrepLabel& o) const { return key() == o.key(); }
  auto operator<=>(const IrrepLabel& o) const { return key() <=> o.key(); }
};

std::string to_string(IrrepFamily family);
std::string to_string(const IrrepLabel& label);
IrrepLabel make_irrep(std::uint32_t q, IrrepFamily family, std::int64_t r, std::int64_t s = 0);

std::vector<IrrepLabel> irrep_inventory(const Context& ctx);
/// The trivial character O(q-1).
IrrepLabel trivial_irrep(std::uint32_t q);

CharValue char_value(const Context& ctx, const IrrepLabel& irrep, const ClassLabel& cls);
/// Character table with rows = irreps, columns = classes.
Eigen::MatrixXcd character_table(const Context& ctx, const std::vector<IrrepLabel>& irreps,
                                 const std::vector<ClassLabel>& classes);

/// Character of V_{m,0} (the principal series induced from mu_m and mu_0).
CharValue principal_char(const Context& ctx, const ClassLabel& cls);

/// Matrix of g acting on V_{m,0} in the basis f -> (f(t_1), ..., f(t_{q+1})):
/// M[i][j] = mu_m(a) where t_i g = [[a, b], [0, d]] t_j, so (g f)(t_i) = f(t_i g)
/// and M(g h) = M(g) M(h).
using RepMatrix = Eigen::MatrixXcd;
RepMatrix rep_matrix(const Context& ctx, const Mat2& g, const Transversal& t);

}  // namespace ekr
