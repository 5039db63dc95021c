#include <functional>

#include "hsep/error.hpp"
#include "hsep/finring.hpp"

namespace hsep::finring {

using exactalg::FinAbPresentation;
using exactalg::mod;

namespace {

// Multiplication table on the canonical coordinates of a presentation, where
// `mul` multiplies two canonical vectors.
MulTable table_on(const FinAbPresentation& g, const std::function<Vec(const Vec&, const Vec&)>& mul) {
  const std::size_t d = g.rank();
  MulTable t(d, std::vector<Vec>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Vec ea(d, 0), eb(d, 0);
      ea[a] = 1;
      eb[b] = 1;
      t[a][b] = mul(ea, eb);
    }
  return t;
}

std::string product_name(const std::string& outer, const std::string& inner) {
  if (inner == "1") return outer;
  return outer + "*" + inner;
}

// Display names for canonical coordinates from their lifts.
std::vector<std::string> lift_names(const FinAbPresentation& g, const std::function<std::string(std::size_t)>& gen) {
  std::vector<std::string> names;
  for (std::size_t c = 0; c < g.rank(); ++c) {
    const Vec& l = g.lift_generator(c);
    std::string s;
    for (std::size_t j = 0; j < l.size(); ++j) {
      if (l[j] == 0) continue;
      if (!s.empty()) s += "+";
      s += (l[j] == 1 ? "" : std::to_string(l[j])) + gen(j);
    }
    names.push_back(s.empty() ? "0" : s);
  }
  return names;
}

bool same_ring(const FiniteRing& a, const FiniteRing& b) {
  return a.moduli() == b.moduli() && a.mul_table() == b.mul_table() && a.unit() == b.unit();
}

}  // namespace

StandardRing modular_ring(Residue n) {
  if (n < 1) throw Error("InvalidParams", "Z/n needs n >= 1");
  StandardRing out;
  out.ring = FiniteRing::construct({n}, {{{1}}}, {1}, "Z/" + std::to_string(n), {"1"});
  return out;
}

StandardRing matrix_ring(const FiniteRing& R, std::size_t n) {
  if (n < 1) throw Error("InvalidParams", "M_n needs n >= 1");
  const std::size_t k = R.dim();
  const std::size_t d = n * n * k;
  auto idx = [&](std::size_t a, std::size_t b, std::size_t l) { return (a * n + b) * k + l; };
  std::vector<Residue> moduli(d);
  std::vector<std::string> names(d);
  MulTable mul(d, std::vector<Vec>(d, Vec(d, 0)));
  Vec unit(d, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t l = 0; l < k; ++l) {
        moduli[idx(a, b, l)] = R.moduli()[l];
        names[idx(a, b, l)] = product_name("E" + std::to_string(a + 1) + std::to_string(b + 1), R.basis_names()[l]);
      }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t l = 0; l < k; ++l)
        for (std::size_t d2 = 0; d2 < n; ++d2)
          for (std::size_t m = 0; m < k; ++m) {
            const Vec& rl = R.product(l, m);
            Vec& dst = mul[idx(a, b, l)][idx(b, d2, m)];
            for (std::size_t t = 0; t < k; ++t) dst[idx(a, d2, t)] = rl[t];
          }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t l = 0; l < k; ++l) unit[idx(a, a, l)] = R.unit()[l];

  StandardRing out;
  out.ring = FiniteRing::construct(moduli, std::move(mul), unit, "M_" + std::to_string(n) + "(" + R.label() + ")",
                                   names);
  std::vector<Vec> scalar;
  for (std::size_t l = 0; l < k; ++l) {
    Vec v(d, 0);
    for (std::size_t a = 0; a < n; ++a) v[idx(a, a, l)] = 1;
    scalar.push_back(std::move(v));
  }
  out.homs.emplace("scalar", check_ring_hom(std::move(scalar), R, out.ring));
  return out;
}

StandardRing triangular_ring(const FiniteRing& R, std::size_t n) {
  StandardRing full = matrix_ring(R, n);
  const std::size_t k = R.dim();
  // positions (a, b) with a <= b, row-major
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  std::vector<std::vector<std::size_t>> cell_of(n, std::vector<std::size_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      cell_of[a][b] = cells.size();
      cells.emplace_back(a, b);
    }
  const std::size_t d = cells.size() * k;
  auto full_idx = [&](std::size_t a, std::size_t b, std::size_t l) { return (a * n + b) * k + l; };
  auto idx = [&](std::size_t a, std::size_t b, std::size_t l) { return cell_of[a][b] * k + l; };

  std::vector<Residue> moduli(d);
  std::vector<std::string> names(d);
  for (auto [a, b] : cells)
    for (std::size_t l = 0; l < k; ++l) {
      moduli[idx(a, b, l)] = R.moduli()[l];
      names[idx(a, b, l)] = full.ring.basis_names()[full_idx(a, b, l)];
    }
  auto restrict = [&](const Vec& v) {
    Vec out(d, 0);
    for (auto [a, b] : cells)
      for (std::size_t l = 0; l < k; ++l) out[idx(a, b, l)] = v[full_idx(a, b, l)];
    return out;
  };
  MulTable mul(d, std::vector<Vec>(d));
  for (auto [a, b] : cells)
    for (std::size_t l = 0; l < k; ++l)
      for (auto [c, e] : cells)
        for (std::size_t m = 0; m < k; ++m)
          mul[idx(a, b, l)][idx(c, e, m)] = restrict(full.ring.product(full_idx(a, b, l), full_idx(c, e, m)));

  StandardRing out;
  out.ring = FiniteRing::construct(moduli, std::move(mul), restrict(full.ring.unit()),
                                   "T_" + std::to_string(n) + "(" + R.label() + ")", names);
  std::vector<Vec> scalar, inclusion;
  for (const auto& img : full.homs.at("scalar").images) scalar.push_back(restrict(img));
  for (auto [a, b] : cells)
    for (std::size_t l = 0; l < k; ++l) inclusion.push_back(full.ring.basis(full_idx(a, b, l)));
  out.homs.emplace("scalar", check_ring_hom(std::move(scalar), R, out.ring));
  out.homs.emplace("inclusion", check_ring_hom(std::move(inclusion), out.ring, full.ring));
  return out;
}

StandardRing product_ring(const FiniteRing& A, const FiniteRing& B) {
  const std::size_t ka = A.dim(), kb = B.dim(), d = ka + kb;
  std::vector<Residue> moduli = A.moduli();
  moduli.insert(moduli.end(), B.moduli().begin(), B.moduli().end());
  std::vector<std::string> names;
  for (const auto& s : A.basis_names()) names.push_back("(" + s + ",0)");
  for (const auto& s : B.basis_names()) names.push_back("(0," + s + ")");
  MulTable mul(d, std::vector<Vec>(d, Vec(d, 0)));
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t j = 0; j < ka; ++j)
      for (std::size_t t = 0; t < ka; ++t) mul[i][j][t] = A.product(i, j)[t];
  for (std::size_t i = 0; i < kb; ++i)
    for (std::size_t j = 0; j < kb; ++j)
      for (std::size_t t = 0; t < kb; ++t) mul[ka + i][ka + j][ka + t] = B.product(i, j)[t];
  Vec unit = A.unit();
  unit.insert(unit.end(), B.unit().begin(), B.unit().end());

  StandardRing out;
  out.ring = FiniteRing::construct(moduli, std::move(mul), unit, A.label() + " x " + B.label(), names);
  std::vector<Vec> p1, p2;
  for (std::size_t i = 0; i < d; ++i) {
    Vec a(ka, 0), b(kb, 0);
    if (i < ka) a[i] = 1 % A.moduli()[i];
    else b[i - ka] = 1 % B.moduli()[i - ka];
    p1.push_back(std::move(a));
    p2.push_back(std::move(b));
  }
  out.homs.emplace("proj1", check_ring_hom(std::move(p1), out.ring, A));
  out.homs.emplace("proj2", check_ring_hom(std::move(p2), out.ring, B));
  return out;
}

RingHom product_hom(const RingHom& phi_a, const RingHom& phi_b) {
  if (!same_ring(phi_a.source, phi_b.source)) throw Error("InvalidParams", "product_hom: sources differ");
  StandardRing P = product_ring(phi_a.target, phi_b.target);
  std::vector<Vec> images;
  for (std::size_t r = 0; r < phi_a.source.dim(); ++r) {
    Vec v = phi_a.images[r];
    v.insert(v.end(), phi_b.images[r].begin(), phi_b.images[r].end());
    images.push_back(std::move(v));
  }
  return check_ring_hom(std::move(images), phi_a.source, P.ring);
}

std::vector<std::vector<std::size_t>> cyclic_group_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

StandardRing group_ring(const FiniteRing& R, const std::vector<std::vector<std::size_t>>& cayley,
                        const std::vector<std::string>& element_names) {
  const std::size_t n = cayley.size();
  if (n == 0) throw Error("InvalidCayleyTable", "empty group");
  for (std::size_t a = 0; a < n; ++a) {
    if (cayley[a].size() != n) throw Error("InvalidCayleyTable", "row " + std::to_string(a) + " has wrong length");
    for (std::size_t b = 0; b < n; ++b)
      if (cayley[a][b] >= n) throw Error("InvalidCayleyTable", "entry out of range at " + std::to_string(a) + "," + std::to_string(b));
  }
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = cayley[e][a] == a && cayley[a][e] == a;
    if (ok) identity = e;
  }
  if (!identity) throw Error("InvalidCayleyTable", "no identity element");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]])
          throw Error("InvalidCayleyTable", "not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                                std::to_string(c) + ")");
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n && !has_inverse; ++b) has_inverse = cayley[a][b] == *identity;
    if (!has_inverse) throw Error("InvalidCayleyTable", "element " + std::to_string(a) + " has no inverse");
  }

  const std::size_t k = R.dim(), d = n * k;
  auto idx = [&](std::size_t g, std::size_t l) { return g * k + l; };
  std::vector<Residue> moduli(d);
  std::vector<std::string> names(d);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t l = 0; l < k; ++l) {
      moduli[idx(g, l)] = R.moduli()[l];
      std::string gname = g < element_names.size() ? element_names[g] : "g" + std::to_string(g);
      names[idx(g, l)] = product_name(gname, R.basis_names()[l]);
    }
  MulTable mul(d, std::vector<Vec>(d, Vec(d, 0)));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t l = 0; l < k; ++l)
        for (std::size_t m = 0; m < k; ++m)
          for (std::size_t t = 0; t < k; ++t) mul[idx(g, l)][idx(h, m)][idx(cayley[g][h], t)] = R.product(l, m)[t];
  Vec unit(d, 0);
  for (std::size_t l = 0; l < k; ++l) unit[idx(*identity, l)] = R.unit()[l];

  StandardRing out;
  out.ring = FiniteRing::construct(moduli, std::move(mul), unit, R.label() + "[G" + std::to_string(n) + "]", names);
  std::vector<Vec> scalar;
  for (std::size_t l = 0; l < k; ++l) {
    Vec v(d, 0);
    v[idx(*identity, l)] = 1;
    scalar.push_back(std::move(v));
  }
  out.homs.emplace("scalar", check_ring_hom(std::move(scalar), R, out.ring));
  return out;
}

namespace {

// Remainder of a by the monic polynomial f over Z/p (coefficients low first).
std::vector<Residue> poly_rem(std::vector<Residue> a, const std::vector<Residue>& f, Residue p) {
  const std::size_t d = f.size() - 1;
  while (a.size() > d) {
    Residue lead = mod(a.back(), p);
    std::size_t shift = a.size() - 1 - d;
    for (std::size_t i = 0; i <= d; ++i)
      a[shift + i] = exactalg::sub_mod(mod(a[shift + i], p), exactalg::mul_mod(lead, f[i], p), p);
    a.pop_back();
  }
  for (auto& x : a) x = mod(x, p);
  return a;
}

// Searches monic divisors of degree 1..deg/2; nullopt when the search is too large.
std::optional<bool> is_irreducible(const std::vector<Residue>& f, Residue p) {
  const std::size_t d = f.size() - 1;
  for (std::size_t k = 1; 2 * k <= d; ++k) {
    double count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= static_cast<double>(p);
    if (count > 1e5) return std::nullopt;
    std::vector<Residue> g(k + 1, 0);
    g[k] = 1;
    while (true) {
      // f mod g == 0 ?
      auto r = poly_rem(f, g, p);
      if (exactalg::is_zero(r)) return false;
      std::size_t i = 0;
      while (i < k && ++g[i] == p) g[i++] = 0;
      if (i == k) break;
    }
  }
  return true;
}

std::string poly_string(const std::vector<Residue>& f) {
  std::string s;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    std::string coef = (f[i] == 1 && i > 0) ? "" : std::to_string(f[i]);
    s += (s.empty() ? "" : "+") + coef + mono;
  }
  return s.empty() ? "0" : s;
}

}  // namespace

StandardRing polynomial_quotient(Residue p, const std::vector<Residue>& f_in) {
  if (p < 2) throw Error("InvalidParams", "polynomial_quotient needs p >= 2");
  if (f_in.size() < 2) throw Error("InvalidParams", "polynomial_quotient needs deg f >= 1");
  std::vector<Residue> f;
  for (Residue c : f_in) f.push_back(mod(c, p));
  if (f.back() != 1) throw Error("InvalidParams", "polynomial_quotient needs a monic f");
  const std::size_t d = f.size() - 1;

  MulTable mul(d, std::vector<Vec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Residue> mono(i + j + 1, 0);
      mono[i + j] = 1;
      auto r = poly_rem(mono, f, p);
      r.resize(d, 0);
      mul[i][j] = r;
    }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i) names.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
  Vec unit(d, 0);
  unit[0] = 1;

  StandardRing out;
  std::string base = "F_" + std::to_string(p);
  out.ring = FiniteRing::construct(std::vector<Residue>(d, p), std::move(mul), unit,
                                   base + "[x]/(" + poly_string(f) + ")", names);
  auto irreducible = is_irreducible(f, p);
  if (!irreducible) out.warnings.push_back("irreducibility of " + poly_string(f) + " not checked (search too large)");
  else if (!*irreducible) out.warnings.push_back("ReduciblePolynomialAllowed: " + poly_string(f) + " is reducible");
  FiniteRing Fp = FiniteRing::construct({p}, {{{1}}}, {1}, base, {"1"});
  out.homs.emplace("scalar", check_ring_hom({unit}, Fp, out.ring));
  return out;
}

StandardRing tensor_product(const RingHom& phi_a, const RingHom& phi_b) {
  const FiniteRing& R = phi_a.source;
  if (!same_ring(R, phi_b.source)) throw Error("InvalidParams", "tensor_product: the two homs have different sources");
  if (!commutativity_report(R).is_commutative) throw Error("NonCommutativeBase", R.label());
  if (!image_is_central(phi_a)) throw Error("NonCentralImage", R.label() + " -> " + phi_a.target.label());
  if (!image_is_central(phi_b)) throw Error("NonCentralImage", R.label() + " -> " + phi_b.target.label());
  const FiniteRing& A = phi_a.target;
  const FiniteRing& B = phi_b.target;

  BalancedTensor t = balanced_tensor(A.moduli(), B.moduli(), right_action(phi_a), left_action(phi_b));
  auto lift_pair = [&](const Vec& canon) { return t.group.lift(canon); };
  auto mul = [&](const Vec& x, const Vec& y) {
    Vec lx = lift_pair(x), ly = lift_pair(y);
    Vec out(t.group.rank(), 0);
    for (std::size_t i = 0; i < A.dim(); ++i)
      for (std::size_t j = 0; j < B.dim(); ++j) {
        Residue cx = lx[t.generator(i, j)];
        if (cx == 0) continue;
        for (std::size_t k = 0; k < A.dim(); ++k)
          for (std::size_t l = 0; l < B.dim(); ++l) {
            Residue cy = ly[t.generator(k, l)];
            if (cy == 0) continue;
            Vec a = A.scale(cx, A.product(i, k));
            Vec b = B.scale(cy, B.product(j, l));
            out = t.group.add(out, t.pure(a, b));
          }
      }
    return out;
  };
  auto names = lift_names(t.group, [&](std::size_t g) {
    return A.basis_names()[g / t.ny] + "(x)" + B.basis_names()[g % t.ny];
  });

  StandardRing out;
  out.ring = FiniteRing::construct(t.group.moduli(), table_on(t.group, mul), t.pure(A.unit(), B.unit()),
                                   A.label() + " (x)_" + R.label() + " " + B.label(), names);
  std::vector<Vec> structure, left, right;
  for (const auto& img : phi_a.images) structure.push_back(t.pure(img, B.unit()));
  for (std::size_t i = 0; i < A.dim(); ++i) left.push_back(t.pure(A.basis(i), B.unit()));
  for (std::size_t j = 0; j < B.dim(); ++j) right.push_back(t.pure(A.unit(), B.basis(j)));
  out.homs.emplace("structure", check_ring_hom(std::move(structure), R, out.ring));
  out.homs.emplace("left", check_ring_hom(std::move(left), A, out.ring));
  out.homs.emplace("right", check_ring_hom(std::move(right), B, out.ring));
  return out;
}

StandardRing quotient_ring(const FiniteRing& R, const std::vector<Vec>& ideal) {
  std::vector<Vec> span;
  for (const auto& g : ideal) {
    if (g.size() != R.dim()) throw Error("DimensionMismatch", "quotient ideal generator length");
    Vec gr = R.reduce(g);
    for (std::size_t a = 0; a < R.dim(); ++a)
      for (std::size_t b = 0; b < R.dim(); ++b) span.push_back(R.mul(R.mul(R.basis(a), gr), R.basis(b)));
    span.push_back(gr);
  }
  FinAbPresentation g = exactalg::cokernel_of_rows(span, R.moduli());
  auto mul = [&](const Vec& x, const Vec& y) { return g.project(R.mul(R.reduce(g.lift(x)), R.reduce(g.lift(y)))); };
  auto names = lift_names(g, [&](std::size_t j) { return R.basis_names()[j]; });
  for (auto& s : names) s = "[" + s + "]";

  StandardRing out;
  out.ring = FiniteRing::construct(g.moduli(), table_on(g, mul), g.project(R.unit()), R.label() + "/I", names);
  std::vector<Vec> images;
  for (std::size_t j = 0; j < R.dim(); ++j) images.push_back(g.project_generator(j));
  out.homs.emplace("quotient", check_ring_hom(std::move(images), R, out.ring));
  return out;
}

}  // namespace hsep::finring
