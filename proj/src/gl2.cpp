#include "ekr/gl2.hpp"

#include <algorithm>

#include "ekr/error.hpp"

namespace ekr {

Mat2 mat_mul(const FieldTable& f, const Mat2& g, const Mat2& h) {
  return {f.add(f.mul(g.a, h.a), f.mul(g.b, h.c)), f.add(f.mul(g.a, h.b), f.mul(g.b, h.d)),
          f.add(f.mul(g.c, h.a), f.mul(g.d, h.c)), f.add(f.mul(g.c, h.b), f.mul(g.d, h.d))};
}

Elem det(const FieldTable& f, const Mat2& g) { return f.sub(f.mul(g.a, g.d), f.mul(g.b, g.c)); }

Mat2 mat_inv(const FieldTable& f, const Mat2& g) {
  const Elem dt = det(f, g);
  if (dt == 0) throw Error("inverse of a singular matrix");
  const Elem s = f.inv(dt);
  return {f.mul(g.d, s), f.mul(f.neg(g.b), s), f.mul(f.neg(g.c), s), f.mul(g.a, s)};
}

Mat2 mat_pow(const FieldTable& f, Mat2 g, std::uint64_t e) {
  Mat2 result = identity();
  while (e > 0) {
    if (e & 1) result = mat_mul(f, result, g);
    g = mat_mul(f, g, g);
    e >>= 1;
  }
  return result;
}

Mat2 theta(const ExtFieldTable& e, ExtElem z) {
  if (z == 0) throw Error("Theta is defined on nonzero elements only");
  const Elem x = e.re(z), y = e.im(z);
  return {x, y, e.base.mul(y, e.eps), x};
}

std::string to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::C1: return "c1";
    case ClassKind::C2: return "c2";
    case ClassKind::C3: return "c3";
    case ClassKind::C4: return "c4";
  }
  return "?";
}

std::string to_string(const ClassLabel& label) {
  const std::string kind = to_string(label.kind);
  switch (label.kind) {
    case ClassKind::C1:
    case ClassKind::C2: return kind + "(e^" + std::to_string(label.p1) + ")";
    case ClassKind::C3:
      return kind + "(e^" + std::to_string(label.p1) + ",e^" + std::to_string(label.p2) + ")";
    case ClassKind::C4: return kind + "(w^" + std::to_string(label.p1) + ")";
  }
  return kind;
}

std::uint64_t class_size(std::uint32_t q, ClassKind kind) {
  const std::uint64_t qq = q;
  switch (kind) {
    case ClassKind::C1: return 1;
    case ClassKind::C2: return qq * qq - 1;
    case ClassKind::C3: return qq * qq + qq;
    case ClassKind::C4: return qq * qq - qq;
  }
  return 0;
}

std::int64_t canonical_c4_log(std::uint32_t q, std::int64_t k) {
  const std::int64_t n = static_cast<std::int64_t>(q) * q - 1;
  const std::int64_t a = mod_floor(k, n);
  const std::int64_t b = mod_floor(a * q, n);
  return std::min(a, b);
}

ClassLabel make_class(std::uint32_t q, ClassKind kind, std::int64_t p1, std::int64_t p2) {
  ClassLabel label{kind, p1, p2, class_size(q, kind)};
  if (kind == ClassKind::C3 && label.p1 > label.p2) std::swap(label.p1, label.p2);
  if (kind == ClassKind::C4) label.p1 = canonical_c4_log(q, p1);
  if (kind != ClassKind::C3) label.p2 = 0;
  return label;
}

ClassLabel classify(const Context& ctx, const Mat2& g) {
  const FieldTable& f = ctx.field();
  const std::uint32_t q = ctx.q();
  const Elem dt = det(f, g);
  if (dt == 0) throw Error("classify: singular matrix");
  const Elem tr = f.add(g.a, g.d);
  const Elem disc = f.sub(f.mul(tr, tr), f.mul(f.from_int(4), dt));
  const Elem half = f.inv(f.from_int(2));

  if (disc == 0) {
    const std::int64_t x = f.log(f.mul(tr, half));
    const bool scalar = g.b == 0 && g.c == 0 && g.a == g.d;
    return make_class(q, scalar ? ClassKind::C1 : ClassKind::C2, x);
  }
  const std::int32_t disc_log = f.log(disc);
  if (disc_log % 2 == 0) {
    const Elem root = f.exp(disc_log / 2);
    const Elem x = f.mul(f.add(tr, root), half);
    const Elem y = f.mul(f.sub(tr, root), half);
    return make_class(q, ClassKind::C3, f.log(x), f.log(y));
  }
  // Irreducible characteristic polynomial: eigenvalue (t + sqrt(disc)) / 2 in K_q.
  // Every element of F_q has an even omega-log since q + 1 is even.
  const ExtFieldTable& e = ctx.ext();
  const std::int32_t disc_k = e.log(e.embed(disc));
  const ExtElem root = e.exp(disc_k / 2);
  const ExtElem z = e.mul(e.add(e.embed(tr), root), e.embed(half));
  return make_class(q, ClassKind::C4, e.log(z));
}

std::vector<ClassLabel> class_inventory(const Context& ctx) {
  const std::uint32_t q = ctx.q();
  const std::int64_t units = q - 1;
  std::vector<ClassLabel> out;
  out.reserve(static_cast<std::size_t>(q) * q - 1);
  for (std::int64_t i = 0; i < units; ++i) out.push_back(make_class(q, ClassKind::C1, i));
  for (std::int64_t i = 0; i < units; ++i) out.push_back(make_class(q, ClassKind::C2, i));
  for (std::int64_t i = 0; i < units; ++i) {
    for (std::int64_t j = i + 1; j < units; ++j) out.push_back(make_class(q, ClassKind::C3, i, j));
  }
  const std::int64_t n = static_cast<std::int64_t>(q) * q - 1;
  for (std::int64_t k = 1; k < n; ++k) {
    if (k % (q + 1) == 0 || canonical_c4_log(q, k) != k) continue;
    out.push_back(make_class(q, ClassKind::C4, k));
  }
  return out;
}

Mat2 representative(const Context& ctx, const ClassLabel& label) {
  const FieldTable& f = ctx.field();
  switch (label.kind) {
    case ClassKind::C1: {
      const Elem x = f.exp(label.p1);
      return {x, 0, 0, x};
    }
    case ClassKind::C2: {
      const Elem x = f.exp(label.p1);
      return {x, 0, 1, x};
    }
    case ClassKind::C3: return {f.exp(label.p1), 0, 0, f.exp(label.p2)};
    case ClassKind::C4: return theta(ctx.ext(), ctx.ext().exp(label.p1));
  }
  throw Error("unknown class kind");
}

std::uint64_t element_order(const Context& ctx, const ClassLabel& label) {
  const std::uint64_t units = ctx.q() - 1;
  const auto unit_order = [&](std::int64_t log) {
    return units / gcd_u64(static_cast<std::uint64_t>(mod_floor(log, units)), units);
  };
  switch (label.kind) {
    case ClassKind::C1: return unit_order(label.p1);
    case ClassKind::C2: return unit_order(label.p1) * ctx.config().p;
    case ClassKind::C3: return lcm_u64(unit_order(label.p1), unit_order(label.p2));
    case ClassKind::C4: {
      const std::uint64_t n = ctx.ext().unit_order();
      return n / gcd_u64(static_cast<std::uint64_t>(label.p1), n);
    }
  }
  return 0;
}

ClassIndex::ClassIndex(const std::vector<ClassLabel>& classes) {
  index_.reserve(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) index_.emplace(classes[i], i);
}

std::size_t ClassIndex::at(const ClassLabel& label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) throw Error("class " + to_string(label) + " not in inventory");
  return it->second;
}

Transversal b_transversal(const Context& ctx, TransversalKind kind) {
  Transversal t{kind, {}};
  const std::uint32_t q = ctx.q();
  t.elements.reserve(q + 1);
  if (kind == TransversalKind::T1) {
    for (Elem x = 0; x < q; ++x) t.elements.push_back({1, 0, x, 1});
    t.elements.push_back({0, 1, 1, 0});
  } else {
    for (std::uint32_t i = 0; i <= q; ++i) t.elements.push_back(theta(ctx.ext(), ctx.ext().exp(i)));
  }
  return t;
}

bool is_b_transversal(const Context& ctx, const Transversal& t) {
  const FieldTable& f = ctx.field();
  if (t.elements.size() != ctx.q() + 1) return false;
  std::vector<Mat2> inverses;
  inverses.reserve(t.elements.size());
  for (const auto& g : t.elements) {
    if (det(f, g) == 0) return false;
    inverses.push_back(mat_inv(f, g));
  }
  for (std::size_t i = 0; i < t.elements.size(); ++i) {
    for (std::size_t j = 0; j < t.elements.size(); ++j) {
      if (i != j && in_borel(mat_mul(f, t.elements[i], inverses[j]))) return false;
    }
  }
  return true;
}

std::vector<Mat2> all_elements(const Context& ctx) {
  const FieldTable& f = ctx.field();
  const std::uint32_t q = ctx.q();
  std::vector<Mat2> out;
  out.reserve(ctx.config().group_order());
  for (Elem a = 0; a < q; ++a)
    for (Elem b = 0; b < q; ++b)
      for (Elem c = 0; c < q; ++c)
        for (Elem d = 0; d < q; ++d) {
          const Mat2 g{a, b, c, d};
          if (det(f, g) != 0) out.push_back(g);
        }
  return out;
}

Mat2 random_element(const Context& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> entry(0, ctx.q() - 1);
  while (true) {
    const Mat2 g{entry(rng), entry(rng), entry(rng), entry(rng)};
    if (det(ctx.field(), g) != 0) return g;
  }
}

}  // namespace ekr
