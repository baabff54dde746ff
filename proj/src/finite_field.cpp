#include "ekr/finite_field.hpp"

#include <string>

#include "ekr/error.hpp"

namespace ekr {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / gcd_u64(a, b) * b; }

namespace {

using Poly = std::vector<std::uint32_t>;  // low to high

Poly digits_of(Elem code, std::uint32_t p, std::uint32_t k) {
  Poly d(k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

Elem code_of(const Poly& d, std::uint32_t p) {
  Elem code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
  return code;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over Z/p; b nonzero with trimmed leading coefficient.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Elem poly_mulmod(Elem a, Elem b, std::uint32_t p, std::uint32_t k, const Poly& modulus) {
  if (k == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p);
  const Poly da = digits_of(a, p, k);
  const Poly db = digits_of(b, p, k);
  Poly prod(2 * k - 1, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    for (std::uint32_t j = 0; j < k; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p);
    }
  }
  Poly r = poly_rem(prod, modulus, p);
  r.resize(k, 0);
  return code_of(r, p);
}

Elem poly_pow(Elem a, std::uint64_t e, std::uint32_t p, std::uint32_t k, const Poly& modulus) {
  Elem result = 1;
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, a, p, k, modulus);
    a = poly_mulmod(a, a, p, k, modulus);
    e >>= 1;
  }
  return result;
}

Elem scan_generator(std::uint32_t p, std::uint32_t k, const Poly& modulus) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  const auto factors = prime_factors(q - 1);
  for (Elem g = 1; g < q; ++g) {
    bool generator = true;
    for (const auto r : factors) {
      if (poly_pow(g, (q - 1) / r, p, k, modulus) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  throw Error("no generator found for F_" + std::to_string(q));
}

}  // namespace

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t degree = f.size() - 1;
  if (degree == 1) return true;
  // Trial division by every monic polynomial of degree 1..degree/2.
  for (std::size_t d = 1; d <= degree / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g = digits_of(static_cast<Elem>(low), p, static_cast<std::uint32_t>(d));
      g.push_back(1);
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

Elem FieldTable::add(Elem a, Elem b) const {
  if (k == 1) {
    const Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem result = 0;
  Elem place = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    result += ((a % p + b % p) % p) * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return result;
}

Elem FieldTable::neg(Elem a) const {
  if (k == 1) return a == 0 ? 0 : p - a;
  Elem result = 0;
  Elem place = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    result += ((p - a % p) % p) * place;
    a /= p;
    place *= p;
  }
  return result;
}

Elem FieldTable::inv(Elem a) const {
  if (a == 0) throw Error("inverse of zero in F_" + std::to_string(q));
  return exp_table[(q - 1 - static_cast<std::uint32_t>(log_table[a])) % (q - 1)];
}

Elem FieldTable::pow(Elem a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw Error("negative power of zero");
    return e == 0 ? 1 : 0;
  }
  return exp(static_cast<std::int64_t>(log_table[a]) * mod_floor(e, q - 1));
}

std::int32_t FieldTable::log(Elem a) const {
  if (a == 0 || a >= q) throw Error("discrete log of zero or out-of-range element");
  return log_table[a];
}

Elem raw_mul(const FieldTable& f, Elem a, Elem b) { return poly_mulmod(a, b, f.p, f.k, f.modulus); }

FieldTable build_field(std::uint32_t p, std::uint32_t k, std::size_t table_cap) {
  if (!is_prime(p)) throw ConfigError("field characteristic " + std::to_string(p) + " is not prime");
  if (p == 2) throw ConfigError("even characteristic unsupported");
  if (k == 0) throw ConfigError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > table_cap) throw ConfigError("field order exceeds table cap " + std::to_string(table_cap));
  }

  FieldTable f;
  f.p = p;
  f.k = k;
  f.q = static_cast<std::uint32_t>(q);
  if (k == 1) {
    f.modulus = {0, 1};
  } else {
    const std::uint64_t candidates = q;  // p^k choices of low coefficients
    for (std::uint64_t low = 0; low < candidates; ++low) {
      Poly cand = digits_of(static_cast<Elem>(low), p, k);
      cand.push_back(1);
      if (is_irreducible(p, cand)) {
        f.modulus = cand;
        break;
      }
    }
    if (f.modulus.empty()) throw Error("no irreducible polynomial found");
  }

  f.generator = scan_generator(p, k, f.modulus);
  f.exp_table.resize(f.q - 1);
  f.log_table.assign(f.q, -1);
  Elem x = 1;
  for (std::uint32_t i = 0; i + 1 < f.q; ++i) {
    f.exp_table[i] = x;
    f.log_table[x] = static_cast<std::int32_t>(i);
    x = poly_mulmod(x, f.generator, p, k, f.modulus);
  }
  return f;
}

Elem find_generator(const FieldTable& f) { return scan_generator(f.p, f.k, f.modulus); }

std::int32_t dlog(const FieldTable& f, Elem x) { return f.log(x); }

ExtElem ExtFieldTable::mul_direct(ExtElem a, ExtElem b) const {
  const Elem x1 = re(a), y1 = im(a), x2 = re(b), y2 = im(b);
  const Elem x = base.add(base.mul(x1, x2), base.mul(eps, base.mul(y1, y2)));
  const Elem y = base.add(base.mul(x1, y2), base.mul(x2, y1));
  return pack(x, y);
}

ExtElem ExtFieldTable::pow(ExtElem a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw Error("negative power of zero");
    return e == 0 ? 1 : 0;
  }
  return exp(static_cast<std::int64_t>(log_table[a]) * mod_floor(e, order - 1));
}

std::int32_t ExtFieldTable::log(ExtElem z) const {
  if (z == 0 || z >= order) throw Error("discrete log of zero or out-of-range element in K_q");
  return log_table[z];
}

namespace {

ExtElem ext_pow_direct(const ExtFieldTable& e, ExtElem a, std::uint64_t n) {
  ExtElem result = 1;
  while (n > 0) {
    if (n & 1) result = e.mul_direct(result, a);
    a = e.mul_direct(a, a);
    n >>= 1;
  }
  return result;
}

}  // namespace

ExtFieldTable build_quadratic_extension(const FieldTable& f, Elem eps, std::size_t table_cap) {
  if (eps == 0 || eps >= f.q) throw ConfigError("epsilon must be a nonzero element of F_q");
  if (f.pow(eps, (f.q - 1) / 2) == 1) {
    throw ConfigError("epsilon is a square in F_" + std::to_string(f.q));
  }
  const std::uint64_t order = static_cast<std::uint64_t>(f.q) * f.q;
  if (order > table_cap) throw ConfigError("extension order exceeds table cap " + std::to_string(table_cap));

  ExtFieldTable e;
  e.base = f;
  e.q = f.q;
  e.order = static_cast<std::uint32_t>(order);
  e.eps = eps;
  e.sqrt_eps = e.pack(0, 1);

  const auto factors = prime_factors(order - 1);
  const ExtElem target = e.embed(eps);
  for (ExtElem z = 1; z < order; ++z) {
    if (ext_pow_direct(e, z, f.q + 1) != target) continue;
    bool generator = true;
    for (const auto r : factors) {
      if (ext_pow_direct(e, z, (order - 1) / r) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) {
      e.omega = z;
      break;
    }
  }
  if (e.omega == 0) throw Error("no generator omega with omega^(q+1) = eps");

  e.exp_table.resize(order - 1);
  e.log_table.assign(order, -1);
  ExtElem x = 1;
  for (std::uint32_t i = 0; i + 1 < order; ++i) {
    e.exp_table[i] = x;
    e.log_table[x] = static_cast<std::int32_t>(i);
    x = e.mul_direct(x, e.omega);
  }
  return e;
}

Elem norm(const ExtFieldTable& e, ExtElem z) {
  if (z == 0) return 0;
  const ExtElem n = e.pow(z, static_cast<std::int64_t>(e.q) + 1);
  if (!e.in_base(n)) throw Error("norm left the base field");
  return e.re(n);
}

EkrConfig EkrConfig::make(std::uint32_t q, std::uint32_t ell) {
  if (q < 3) throw ConfigError("q must be an odd prime power, got " + std::to_string(q));
  std::uint32_t p = 0;
  for (std::uint32_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint32_t k = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw ConfigError("q = " + std::to_string(q) + " is not a prime power");
  if (p == 2) throw ConfigError("q must be odd (even characteristic unsupported)");
  if (ell % 2 == 0 || !is_prime(ell)) throw ConfigError("ell must be an odd prime, got " + std::to_string(ell));
  if ((q - 1) % ell != 0) {
    throw ConfigError("ell = " + std::to_string(ell) + " does not divide q - 1 = " + std::to_string(q - 1));
  }
  const std::uint32_t m = (q - 1) / ell;
  if (m % ell == 0) {
    throw ConfigError("ell = " + std::to_string(ell) + " divides m = " + std::to_string(m));
  }
  return EkrConfig{q, ell, m, p, k};
}

std::vector<EkrConfig> valid_configs(std::uint32_t max_q) {
  std::vector<EkrConfig> out;
  for (std::uint32_t q = 3; q <= max_q; q += 2) {
    for (const auto ell : prime_factors(q - 1)) {
      if (ell == 2) continue;
      try {
        out.push_back(EkrConfig::make(q, static_cast<std::uint32_t>(ell)));
      } catch (const ConfigError&) {
        // q not a prime power, or ell^2 | q - 1
      }
    }
  }
  return out;
}

}  // namespace ekr
