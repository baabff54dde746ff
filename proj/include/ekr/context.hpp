#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "ekr/finite_field.hpp"

namespace ekr {

struct ContextOptions {
  std::filesystem::path cache_dir;  // empty: no cache
  unsigned threads = 0;             // 0: hardware concurrency
  std::size_t table_cap = kDefaultTableCap;
};

/// Everything fixed by a configuration: F_q with its generator eps, K_q with
/// omega, and the root-of-unity tables zeta^j (order q-1) and xi^j (order q^2-1).
/// Immutable after construction.
class Context {
 public:
  explicit Context(const EkrConfig& cfg, ContextOptions options = {});

  const EkrConfig& config() const { return cfg_; }
  const FieldTable& field() const { return ext_.base; }
  const ExtFieldTable& ext() const { return ext_; }
  unsigned threads() const { return threads_; }

  std::uint32_t q() const { return cfg_.q; }
  Elem eps() const { return ext_.eps; }
  ExtElem omega() const { return ext_.omega; }

  /// zeta^e for any integer e.
  std::complex<double> zeta_pow(std::int64_t e) const { return zeta_[mod_floor(e, cfg_.q - 1)]; }
  /// xi^e for any integer e.
  std::complex<double> xi_pow(std::int64_t e) const { return xi_[mod_floor(e, ext_.order - 1)]; }

 private:
  EkrConfig cfg_;
  ExtFieldTable ext_;
  unsigned threads_;
  std::vector<std::complex<double>> zeta_;
  std::vector<std::complex<double>> xi_;
};

}  // namespace ekr
