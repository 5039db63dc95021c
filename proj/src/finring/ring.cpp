#include "hsep/error.hpp"
#include "hsep/finring.hpp"

namespace hsep::finring {

using exactalg::add_mod;
using exactalg::mod;
using exactalg::mul_mod;

namespace {

std::string tuple_name(std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (auto i : idx) {
    s += (first ? "" : ",") + std::to_string(i);
    first = false;
  }
  return s + ")";
}

}  // namespace

FiniteRing FiniteRing::construct(std::vector<Residue> moduli, MulTable mul, Vec unit, std::string label,
                                 std::vector<std::string> basis_names) {
  const std::size_t k = moduli.size();
  for (Residue m : moduli)
    if (m < 1) throw Error("InvalidModulus", label + ": basis modulus must be >= 1");
  if (mul.size() != k) throw Error("DimensionMismatch", label + ": mul table needs " + std::to_string(k) + " rows");
  for (std::size_t i = 0; i < k; ++i) {
    if (mul[i].size() != k) throw Error("DimensionMismatch", label + ": mul row " + std::to_string(i));
    for (std::size_t j = 0; j < k; ++j) {
      if (mul[i][j].size() != k) throw Error("DimensionMismatch", label + ": product " + tuple_name({i, j}));
      mul[i][j] = exactalg::reduce(std::move(mul[i][j]), moduli);
    }
  }
  if (unit.size() != k) throw Error("DimensionMismatch", label + ": unit length");
  if (!basis_names.empty() && basis_names.size() != k)
    throw Error("DimensionMismatch", label + ": basis name count");

  FiniteRing R;
  R.moduli_ = std::move(moduli);
  R.mul_ = std::move(mul);
  R.unit_ = exactalg::reduce(std::move(unit), R.moduli_);
  R.label_ = std::move(label);
  if (basis_names.empty())
    for (std::size_t i = 0; i < k; ++i) basis_names.push_back("e" + std::to_string(i + 1));
  R.names_ = std::move(basis_names);

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t t = 0; t < k; ++t) {
        Residue c = R.mul_[i][j][t];
        if (mul_mod(R.moduli_[i] % R.moduli_[t], c, R.moduli_[t]) != 0 ||
            mul_mod(R.moduli_[j] % R.moduli_[t], c, R.moduli_[t]) != 0)
          throw Error("BilinearityIncompatible", R.label_ + ": product " + tuple_name({i, j}) +
                                                     " is not killed by the basis moduli");
      }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        Vec left = R.mul(R.mul_[i][j], R.basis(l));
        Vec right = R.mul(R.basis(i), R.mul_[j][l]);
        if (left != right) throw Error("NotAssociative", R.label_ + ": basis triple " + tuple_name({i, j, l}));
      }
  for (std::size_t i = 0; i < k; ++i) {
    Vec e = R.basis(i);
    if (R.mul(R.unit_, e) != e || R.mul(e, R.unit_) != e)
      throw Error("UnitLawFails", R.label_ + ": basis element " + std::to_string(i));
  }
  return R;
}

Vec FiniteRing::basis(std::size_t i) const {
  Vec v(dim(), 0);
  v[i] = 1 % moduli_[i];
  return v;
}

Vec FiniteRing::mul(const Vec& a, const Vec& b) const {
  const std::size_t k = dim();
  Vec out(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (b[j] == 0) continue;
      const Vec& c = mul_[i][j];
      for (std::size_t t = 0; t < k; ++t) {
        if (c[t] == 0) continue;
        Residue m = moduli_[t];
        Residue coef = mul_mod(mod(a[i], m), mod(b[j], m), m);
        out[t] = add_mod(out[t], mul_mod(coef, c[t], m), m);
      }
    }
  }
  return out;
}

std::vector<Vec> FiniteRing::elements(std::size_t cap) const {
  if (order() > static_cast<unsigned long>(cap)) throw CapExceeded("elements of " + label_, order().get_str());
  std::vector<Vec> out{Vec{}};
  for (Residue m : moduli_) {
    std::vector<Vec> next;
    next.reserve(out.size() * static_cast<std::size_t>(m));
    for (const auto& v : out)
      for (Residue x = 0; x < m; ++x) {
        Vec w = v;
        w.push_back(x);
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

Vec RingHom::apply(const Vec& x) const {
  const auto& tm = target.moduli();
  Vec out(target.dim(), 0);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t t = 0; t < out.size(); ++t)
      if (images[i][t] != 0) out[t] = add_mod(out[t], mul_mod(mod(x[i], tm[t]), images[i][t], tm[t]), tm[t]);
  }
  return out;
}

RingHom check_ring_hom(std::vector<Vec> images, const FiniteRing& source, const FiniteRing& target) {
  const std::string where = source.label() + " -> " + target.label();
  if (images.size() != source.dim()) throw Error("DimensionMismatch", where + ": one image per source basis element");
  for (auto& img : images) {
    if (img.size() != target.dim()) throw Error("DimensionMismatch", where + ": image length");
    img = target.reduce(std::move(img));
  }
  RingHom phi{source, target, std::move(images)};
  for (std::size_t i = 0; i < source.dim(); ++i)
    if (!exactalg::is_zero(target.scale(source.moduli()[i], phi.images[i])))
      throw Error("NotAdditiveWellDefined", where + ": basis element " + std::to_string(i));
  for (std::size_t i = 0; i < source.dim(); ++i)
    for (std::size_t j = 0; j < source.dim(); ++j)
      if (phi.apply(source.product(i, j)) != target.mul(phi.images[i], phi.images[j]))
        throw Error("NotMultiplicative", where + ": basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
  if (phi.apply(source.unit()) != target.unit()) throw Error("NotUnital", where);
  return phi;
}

RingHom identity_hom(const FiniteRing& R) {
  std::vector<Vec> images;
  for (std::size_t i = 0; i < R.dim(); ++i) images.push_back(R.basis(i));
  return check_ring_hom(std::move(images), R, R);
}

RingHom compose(const RingHom& second, const RingHom& first) {
  if (first.target.moduli() != second.source.moduli() || first.target.mul_table() != second.source.mul_table())
    throw Error("DimensionMismatch", "compose: " + first.target.label() + " vs " + second.source.label());
  std::vector<Vec> images;
  for (const auto& img : first.images) images.push_back(second.apply(img));
  return check_ring_hom(std::move(images), first.source, second.target);
}

CommutativityReport commutativity_report(const FiniteRing& S) {
  const std::size_t k = S.dim();
  CommutativityReport rep;
  rep.is_commutative = true;
  exactalg::CongruenceSystem sys;
  sys.unknown_moduli = S.moduli();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      Vec row(k, 0);
      for (std::size_t j = 0; j < k; ++j) {
        row[j] = exactalg::sub_mod(S.product(j, i)[t], S.product(i, j)[t], S.moduli()[t]);
        if (row[j] != 0) rep.is_commutative = false;
      }
      sys.rows.push_back(std::move(row));
      sys.rhs.push_back(0);
      sys.row_moduli.push_back(S.moduli()[t]);
    }
  rep.center = exactalg::solve_congruences(sys);
  return rep;
}

bool image_is_central(const RingHom& phi) {
  const FiniteRing& S = phi.target;
  for (const auto& img : phi.images)
    for (std::size_t j = 0; j < S.dim(); ++j) {
      Vec e = S.basis(j);
      if (S.mul(img, e) != S.mul(e, img)) return false;
    }
  return true;
}

// ---- balanced tensor products ---------------------------------------------

Vec BalancedTensor::pure(const Vec& x, const Vec& y) const {
  Vec out(group.rank(), 0);
  const auto& cm = group.moduli();
  for (std::size_t i = 0; i < nx; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < ny; ++j) {
      if (y[j] == 0) continue;
      std::size_t g = generator(i, j);
      Residue coef = mul_mod(mod(x[i], generator_moduli[g]), mod(y[j], generator_moduli[g]), generator_moduli[g]);
      if (coef == 0) continue;
      const Vec& col = group.project_generator(g);
      for (std::size_t c = 0; c < out.size(); ++c)
        if (col[c] != 0) out[c] = add_mod(out[c], mul_mod(mod(coef, cm[c]), col[c], cm[c]), cm[c]);
    }
  }
  return out;
}

BalancedTensor balanced_tensor(const std::vector<Residue>& moduli_x, const std::vector<Residue>& moduli_y,
                               const std::vector<std::vector<Vec>>& right_x,
                               const std::vector<std::vector<Vec>>& left_y) {
  if (right_x.size() != left_y.size()) throw Error("DimensionMismatch", "balanced tensor: acting ring dimensions");
  BalancedTensor t;
  t.nx = moduli_x.size();
  t.ny = moduli_y.size();
  for (std::size_t i = 0; i < t.nx; ++i)
    for (std::size_t j = 0; j < t.ny; ++j) t.generator_moduli.push_back(exactalg::gcd(moduli_x[i], moduli_y[j]));

  // (x_i . r) (x) y_j - x_i (x) (r . y_j)
  std::vector<Vec> relations;
  const std::size_t n = t.nx * t.ny;
  for (std::size_t r = 0; r < right_x.size(); ++r)
    for (std::size_t i = 0; i < t.nx; ++i)
      for (std::size_t j = 0; j < t.ny; ++j) {
        Vec rel(n, 0);
        for (std::size_t i2 = 0; i2 < t.nx; ++i2) {
          std::size_t g = t.generator(i2, j);
          rel[g] = add_mod(rel[g], mod(right_x[r][i][i2], t.generator_moduli[g]), t.generator_moduli[g]);
        }
        for (std::size_t j2 = 0; j2 < t.ny; ++j2) {
          std::size_t g = t.generator(i, j2);
          rel[g] = exactalg::sub_mod(rel[g], mod(left_y[r][j][j2], t.generator_moduli[g]), t.generator_moduli[g]);
        }
        if (!exactalg::is_zero(rel)) relations.push_back(std::move(rel));
      }
  t.group = exactalg::cokernel_of_rows(relations, t.generator_moduli);
  t.relations = std::move(relations);
  return t;
}

std::vector<std::vector<Vec>> right_action(const RingHom& phi) {
  const FiniteRing& S = phi.target;
  std::vector<std::vector<Vec>> out(phi.images.size());
  for (std::size_t r = 0; r < phi.images.size(); ++r)
    for (std::size_t i = 0; i < S.dim(); ++i) out[r].push_back(S.mul(S.basis(i), phi.images[r]));
  return out;
}

std::vector<std::vector<Vec>> left_action(const RingHom& phi) {
  const FiniteRing& S = phi.target;
  std::vector<std::vector<Vec>> out(phi.images.size());
  for (std::size_t r = 0; r < phi.images.size(); ++r)
    for (std::size_t j = 0; j < S.dim(); ++j) out[r].push_back(S.mul(phi.images[r], S.basis(j)));
  return out;
}

}  // namespace hsep::finring
