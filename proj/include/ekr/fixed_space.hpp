#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ekr/characters.hpp"

namespace ekr {

/// eta(g) = dim of the fixed space of g on V_{m,0}, from the four-case closed form.
/// Every "mu_m(.) = 1" test is a divisibility test on integer discrete logs.
std::int64_t eta_closed(const Context& ctx, const ClassLabel& cls);

/// Average of the V_{m,0} character over the cyclic group generated by the
/// class representative (dimension of the trivial isotypic component).
std::int64_t eta_burnside(const Context& ctx, const ClassLabel& cls);

/// (q+1) - rank(M(g) - I) with M the representation matrix on the given transversal.
std::int64_t eta_kernel(const Context& ctx, const Mat2& g, TransversalKind basis = TransversalKind::T1);

struct EtaReport {
  ClassLabel cls;
  std::int64_t eta_closed = 0;
  std::int64_t eta_burnside = 0;
  std::int64_t eta_kernel = 0;
  bool agree = false;
};

/// Triple computation on every class, in class-label order.
std::vector<EtaReport> eta_reports(const Context& ctx, const std::vector<ClassLabel>& classes);

/// Congruence test for eta = 0 on the class parameters.
bool is_derangement(const Context& ctx, const ClassLabel& cls);

/// 0..3 for the derangement families c_1..c_4, nullopt when eta > 0.
std::optional<int> derangement_family(const Context& ctx, const ClassLabel& cls);

struct DerangementInventory {
  std::array<std::vector<ClassLabel>, 4> families;
  std::array<std::uint64_t, 4> family_sizes{};  // element counts
  std::uint64_t total_size = 0;
};

/// Family element counts predicted by the congruence conditions:
/// m(l-1), m(l-1)(q^2-1), m(l-1)(m-1)/2 (q^2+q), q m(l-1)/2 (q^2-q).
std::array<std::uint64_t, 4> expected_family_sizes(const EkrConfig& cfg);

/// Counts the families over the class inventory and cross-checks the counts
/// against expected_family_sizes; throws CheckFailure on mismatch.
DerangementInventory derangement_inventory(const Context& ctx, const std::vector<ClassLabel>& classes);

/// H = {g : l | log_eps det g}.
struct HSubgroup {
  std::uint32_t ell = 0;
  std::uint64_t order = 0;
  bool contains(const Context& ctx, const Mat2& g) const;
};

/// Order counted over classes (det is a class function).
HSubgroup h_subgroup(const Context& ctx, const std::vector<ClassLabel>& classes);
bool class_in_h(const Context& ctx, const ClassLabel& cls);
/// True iff every class meeting H has eta >= 1.
bool h_is_intersecting(const Context& ctx, const std::vector<ClassLabel>& classes);

}  // namespace ekr
