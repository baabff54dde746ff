#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "ekr/context.hpp"
#include "ekr/error.hpp"

namespace ekr {

/// Row-major 2x2 matrix [[a, b], [c, d]] over F_q.
struct Mat2 {
  Elem a = 0, b = 0, c = 0, d = 0;
  bool operator==(const Mat2&) const = default;
};

inline Mat2 identity() { return {1, 0, 0, 1}; }
inline bool in_borel(const Mat2& g) { return g.c == 0; }

Mat2 mat_mul(const FieldTable& f, const Mat2& g, const Mat2& h);
Elem det(const FieldTable& f, const Mat2& g);
/// Throws Error on a singular matrix.
Mat2 mat_inv(const FieldTable& f, const Mat2& g);
Mat2 mat_pow(const FieldTable& f, Mat2 g, std::uint64_t e);

/// Theta(x + y sqrt(eps)) = [[x, y], [y eps, x]]; throws on z = 0.
Mat2 theta(const ExtFieldTable& e, ExtElem z);

enum class ClassKind : std::uint8_t { C1, C2, C3, C4 };

/// Conjugacy class of GL_2(q). Parameters are discrete logs:
///   C1, C2: p1 = log_eps(x)
///   C3:     p1 < p2, the logs of the two eigenvalues
///   C4:     p1 = log_omega(z), the smaller of log z and log z^q mod q^2-1
struct ClassLabel {
  ClassKind kind = ClassKind::C1;
  std::int64_t p1 = 0;
  std::int64_t p2 = 0;
  std::uint64_t size = 0;

  auto key() const { return std::tuple(kind, p1, p2); }
  bool operator==(const ClassLabel& o) const { return key() == o.key(); }
  auto operator<=>(const ClassLabel& o) const { return key() <=> o.key(); }
};

std::string to_string(ClassKind kind);
/// e.g. "c1(e^0)", "c3(e^1,e^4)", "c4(w^3)".
std::string to_string(const ClassLabel& label);

std::uint64_t class_size(std::uint32_t q, ClassKind kind);
ClassLabel make_class(std::uint32_t q, ClassKind kind, std::int64_t p1, std::int64_t p2 = 0);
/// min(k, q k) mod q^2 - 1.
std::int64_t canonical_c4_log(std::uint32_t q, std::int64_t k);

ClassLabel classify(const Context& ctx, const Mat2& g);
/// All q^2 - 1 classes in label order.
std::vector<ClassLabel> class_inventory(const Context& ctx);
/// The standard representatives diag(x,x), [[x,0],[1,x]], diag(x,y), Theta(z).
Mat2 representative(const Context& ctx, const ClassLabel& label);
/// Order of any element of the class, from the discrete logs of its parameters.
std::uint64_t element_order(const Context& ctx, const ClassLabel& label);

/// Label -> position in class_inventory order.
class ClassIndex {
 public:
  explicit ClassIndex(const std::vector<ClassLabel>& classes);
  std::size_t at(const ClassLabel& label) const;

 private:
  struct KeyHash {
    std::size_t operator()(const ClassLabel& l) const noexcept {
      return std::hash<std::int64_t>()(l.p1 * 1'000'003 + l.p2) ^ static_cast<std::size_t>(l.kind);
    }
  };
  std::unordered_map<ClassLabel, std::size_t, KeyHash> index_;
};

enum class TransversalKind { T1, T2 };

struct Transversal {
  TransversalKind kind = TransversalKind::T1;
  std::vector<Mat2> elements;
};

/// T1 = {[[1,0],[x,1]] : x in F_q} + {[[0,1],[1,0]]}; T2 = {Theta(omega^i) : 0 <= i <= q}.
Transversal b_transversal(const Context& ctx, TransversalKind kind);
/// q+1 elements with t_i t_j^{-1} outside B for all i != j.
bool is_b_transversal(const Context& ctx, const Transversal& t);

/// All (q^2-1)(q^2-q) elements, ordered by (a, b, c, d) codes.
std::vector<Mat2> all_elements(const Context& ctx);
Mat2 random_element(const Context& ctx, std::mt19937_64& rng);

}  // namespace ekr
