#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

namespace ekr {

/// Element of F_q encoded by its coefficient vector in base p:
/// c_0 + c_1 p + ... + c_{k-1} p^{k-1}. For prime fields this is the residue.
using Elem = std::uint32_t;

/// Element x + y*sqrt(eps) of K_q encoded as x + q*y.
using ExtElem = std::uint32_t;

inline constexpr std::size_t kDefaultTableCap = 1'000'000;

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Non-negative residue of v modulo n.
inline std::int64_t mod_floor(std::int64_t v, std::int64_t n) {
  const std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

/// F_q realised as exp/log tables over a fixed generator. Immutable after
/// build_field; share by const reference.
struct FieldTable {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t q = 0;
  /// Monic modulus, coefficients low to high, size k+1. For k = 1 this is the
  /// placeholder {0, 1}.
  std::vector<std::uint32_t> modulus;
  /// exp_table[i] = generator^i, i in [0, q-1).
  std::vector<Elem> exp_table;
  /// log_table[x] for x != 0; log_table[0] holds the sentinel -1.
  std::vector<std::int32_t> log_table;
  Elem generator = 0;

  std::uint32_t unit_order() const { return q - 1; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_table[static_cast<std::uint32_t>(log_table[a] + log_table[b]) % (q - 1)];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const;
  /// generator^i for any integer i.
  Elem exp(std::int64_t i) const { return exp_table[mod_floor(i, q - 1)]; }
  /// Discrete log; throws on zero.
  std::int32_t log(Elem a) const;
  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const { return static_cast<Elem>(mod_floor(v, p)); }
  bool is_square(Elem a) const { return a == 0 || log(a) % 2 == 0; }
};

/// Builds F_{p^k}. The modulus for k > 1 is the monic irreducible of degree k
/// whose low coefficients (c_0..c_{k-1}, read as a base-p number with c_0 least
/// significant) are smallest.
FieldTable build_field(std::uint32_t p, std::uint32_t k, std::size_t table_cap = kDefaultTableCap);

/// First element in ascending code order with multiplicative order q-1.
/// Uses raw polynomial arithmetic, so it does not depend on f's tables.
Elem find_generator(const FieldTable& f);

/// Discrete log of x to the table's generator; throws on zero.
std::int32_t dlog(const FieldTable& f, Elem x);

/// Brute-force irreducibility test over Z/p; coefficients low to high, monic.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

/// Product computed from the modulus only (no tables).
Elem raw_mul(const FieldTable& f, Elem a, Elem b);

/// K_q = F_q[sqrt(eps)] with generator omega satisfying omega^{q+1} = eps.
struct ExtFieldTable {
  FieldTable base;
  std::uint32_t q = 0;
  std::uint32_t order = 0;  // q^2
  Elem eps = 0;
  ExtElem sqrt_eps = 0;
  ExtElem omega = 0;
  std::vector<ExtElem> exp_table;       // size q^2 - 1
  std::vector<std::int32_t> log_table;  // size q^2, log_table[0] = -1

  std::uint32_t unit_order() const { return order - 1; }

  static ExtElem pack(Elem x, Elem y, std::uint32_t q) { return x + q * y; }
  ExtElem pack(Elem x, Elem y) const { return pack(x, y, q); }
  Elem re(ExtElem z) const { return z % q; }
  Elem im(ExtElem z) const { return z / q; }
  ExtElem embed(Elem x) const { return x; }
  bool in_base(ExtElem z) const { return im(z) == 0; }

  ExtElem add(ExtElem a, ExtElem b) const {
    return pack(base.add(re(a), re(b)), base.add(im(a), im(b)));
  }
  ExtElem mul(ExtElem a, ExtElem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_table[static_cast<std::uint32_t>(log_table[a] + log_table[b]) % (order - 1)];
  }
  /// Product from the defining relation sqrt(eps)^2 = eps, without tables.
  ExtElem mul_direct(ExtElem a, ExtElem b) const;
  ExtElem pow(ExtElem a, std::int64_t e) const;
  ExtElem exp(std::int64_t i) const { return exp_table[mod_floor(i, order - 1)]; }
  std::int32_t log(ExtElem z) const;
  /// z^q, the Galois conjugate x - y*sqrt(eps).
  ExtElem frobenius(ExtElem z) const { return pack(re(z), base.neg(im(z))); }
};

ExtFieldTable build_quadratic_extension(const FieldTable& f, Elem eps,
                                        std::size_t table_cap = kDefaultTableCap);

/// z^{q+1}, which lies in F_q. norm(0) = 0.
Elem norm(const ExtFieldTable& e, ExtElem z);

// Cache files: <dir>/field_p<p>_k<k>.tbl, magic "EKRF1", then p, k, the k+1
// modulus coefficients and the q-1 exp table entries, all little-endian u32.
std::filesystem::path field_cache_path(const std::filesystem::path& dir, std::uint32_t p, std::uint32_t k);
void save_field_cache(const FieldTable& f, const std::filesystem::path& dir);
/// Returns nullopt when the file is missing or fails verification.
std::optional<FieldTable> load_field_cache(const std::filesystem::path& dir, std::uint32_t p, std::uint32_t k);
FieldTable load_or_build_field(std::uint32_t p, std::uint32_t k, const std::filesystem::path& dir,
                               std::size_t table_cap = kDefaultTableCap);

/// (q, ell, m) with q an odd prime power, q - 1 = ell * m, ell an odd prime
/// not dividing m.
struct EkrConfig {
  std::uint32_t q = 0;
  std::uint32_t ell = 0;
  std::uint32_t m = 0;
  std::uint32_t p = 0;  // characteristic
  std::uint32_t k = 0;  // q = p^k

  /// Validates and derives m; throws ConfigError.
  static EkrConfig make(std::uint32_t q, std::uint32_t ell);

  std::uint64_t group_order() const {
    const std::uint64_t qq = q;
    return (qq * qq - 1) * (qq * qq - qq);
  }
};

/// Every valid (q, ell) with q <= max_q, ordered by q then ell.
std::vector<EkrConfig> valid_configs(std::uint32_t max_q);

}  // namespace ekr
