#include <array>
#include <cstring>
#include <fstream>
#include <string>

#include "ekr/finite_field.hpp"

namespace ekr {

namespace {

constexpr std::array<char, 5> kMagic = {'E', 'K', 'R', 'F', '1'};

void put_u32(std::ostream& out, std::uint32_t v) {
  const std::array<char, 4> bytes = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                                     static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(bytes.data(), bytes.size());
}

bool get_u32(std::istream& in, std::uint32_t& v) {
  std::array<unsigned char, 4> bytes{};
  if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) return false;
  v = static_cast<std::uint32_t>(bytes[0]) | (static_cast<std::uint32_t>(bytes[1]) << 8) |
      (static_cast<std::uint32_t>(bytes[2]) << 16) | (static_cast<std::uint32_t>(bytes[3]) << 24);
  return true;
}

}  // namespace

std::filesystem::path field_cache_path(const std::filesystem::path& dir, std::uint32_t p, std::uint32_t k) {
  return dir / ("field_p" + std::to_string(p) + "_k" + std::to_string(k) + ".tbl");
}

void save_field_cache(const FieldTable& f, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto path = field_cache_path(dir, f.p, f.k);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write field cache " + tmp);
    out.write(kMagic.data(), kMagic.size());
    put_u32(out, f.p);
    put_u32(out, f.k);
    for (const auto c : f.modulus) put_u32(out, c);
    for (const auto x : f.exp_table) put_u32(out, x);
    if (!out) throw std::runtime_error("short write on field cache " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::optional<FieldTable> load_field_cache(const std::filesystem::path& dir, std::uint32_t p, std::uint32_t k) {
  const auto path = field_cache_path(dir, p, k);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;

  std::array<char, 5> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) return std::nullopt;
  std::uint32_t fp = 0, fk = 0;
  if (!get_u32(in, fp) || !get_u32(in, fk) || fp != p || fk != k || k == 0 || k > 32) return std::nullopt;

  FieldTable f;
  f.p = p;
  f.k = k;
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  if (q > kDefaultTableCap * 1000) return std::nullopt;
  f.q = static_cast<std::uint32_t>(q);
  f.modulus.resize(k + 1);
  for (auto& c : f.modulus) {
    if (!get_u32(in, c) || c >= p) return std::nullopt;
  }
  if (f.modulus.back() != 1) return std::nullopt;
  if (k > 1 && !is_irreducible(p, f.modulus)) return std::nullopt;

  f.exp_table.resize(f.q - 1);
  f.log_table.assign(f.q, -1);
  for (std::uint32_t i = 0; i + 1 < f.q; ++i) {
    Elem x = 0;
    if (!get_u32(in, x) || x == 0 || x >= f.q || f.log_table[x] != -1) return std::nullopt;
    f.exp_table[i] = x;
    f.log_table[x] = static_cast<std::int32_t>(i);
  }
  char extra = 0;
  if (in.read(&extra, 1)) return std::nullopt;
  if (f.exp_table[0] != 1) return std::nullopt;
  f.generator = f.q > 2 ? f.exp_table[1] : 1;

  // Every entry must follow from its predecessor under the modulus.
  for (std::uint32_t i = 0; i + 1 < f.q; ++i) {
    if (raw_mul(f, f.exp_table[i], f.generator) != f.exp_table[(i + 1) % (f.q - 1)]) return std::nullopt;
  }
  return f;
}

FieldTable load_or_build_field(std::uint32_t p, std::uint32_t k, const std::filesystem::path& dir,
                               std::size_t table_cap) {
  if (!dir.empty()) {
    if (auto cached = load_field_cache(dir, p, k); cached && cached->q <= table_cap) return *std::move(cached);
  }
  FieldTable f = build_field(p, k, table_cap);
  if (!dir.empty()) save_field_cache(f, dir);
  return f;
}

}  // namespace ekr
