#include "ekr/context.hpp"

#include <numbers>

#include "ekr/parallel.hpp"

namespace ekr {

namespace {

std::vector<std::complex<double>> roots_of_unity(std::uint32_t n) {
  std::vector<std::complex<double>> roots(n);
  for (std::uint32_t j = 0; j < n; ++j) {
    roots[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n));
  }
  return roots;
}

ExtFieldTable make_extension(const EkrConfig& cfg, const ContextOptions& options) {
  const FieldTable base = load_or_build_field(cfg.p, cfg.k, options.cache_dir, options.table_cap);
  return build_quadratic_extension(base, base.generator, options.table_cap);
}

}  // namespace

Context::Context(const EkrConfig& cfg, ContextOptions options)
    : cfg_(cfg),
      ext_(make_extension(cfg, options)),
      threads_(resolve_threads(options.threads)),
      zeta_(roots_of_unity(cfg.q - 1)),
      xi_(roots_of_unity(cfg.q * cfg.q - 1)) {}

}  // namespace ekr
