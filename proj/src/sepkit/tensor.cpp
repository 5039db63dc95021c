#include "hsep/error.hpp"
#include "hsep/sepkit.hpp"

namespace hsep::sepkit {

using exactalg::add_mod;
using exactalg::mod;
using exactalg::mul_mod;
using finring::BalancedTensor;

Vec LinearMap::apply(const Vec& x) const {
  Vec out(target_moduli.size(), 0);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (x[c] == 0) continue;
    const Vec& col = columns[c];
    for (std::size_t t = 0; t < out.size(); ++t)
      if (col[t] != 0)
        out[t] = add_mod(out[t], mul_mod(mod(x[c], target_moduli[t]), col[t], target_moduli[t]), target_moduli[t]);
  }
  return out;
}

namespace {

// Accumulate coef * v into acc (both in the coordinates of `moduli`).
void axpy(Vec& acc, Residue coef, const Vec& v, const std::vector<Residue>& moduli) {
  if (coef == 0) return;
  for (std::size_t t = 0; t < acc.size(); ++t)
    if (v[t] != 0) acc[t] = add_mod(acc[t], mul_mod(mod(coef, moduli[t]), v[t], moduli[t]), moduli[t]);
}

// x (x) y for an element x of the square (canonical coordinates) and y in S.
Vec pure_outer(const BalancedTensor& t, const Vec& x, const Vec& y) { return t.pure(x, y); }

// Linear map on a square's canonical coordinates given by its value on
// generator pairs (i, j) of S basis elements.
LinearMap map_on_square(const BalancedTensor& sq, std::vector<Residue> target_moduli,
                        const std::function<Vec(std::size_t, std::size_t)>& on_pair) {
  LinearMap m;
  m.target_moduli = std::move(target_moduli);
  for (std::size_t c = 0; c < sq.group.rank(); ++c) {
    const Vec& lift = sq.group.lift_generator(c);
    Vec col(m.target_moduli.size(), 0);
    for (std::size_t g = 0; g < lift.size(); ++g)
      if (lift[g] != 0) axpy(col, lift[g], on_pair(g / sq.ny, g % sq.ny), m.target_moduli);
    m.columns.push_back(std::move(col));
  }
  return m;
}

BalancedTensor build_square(const RingHom& phi) {
  return finring::balanced_tensor(phi.target.moduli(), phi.target.moduli(), finring::right_action(phi),
                                  finring::left_action(phi));
}

}  // namespace

TensorPower tensor_power(const RingHom& phi, int arity) {
  if (arity != 2 && arity != 3) throw Error("InvalidParams", "tensor power arity must be 2 or 3");
  const FiniteRing& S = phi.target;
  const std::size_t k = S.dim();
  TensorPower T;
  T.hom_ = phi;
  T.arity_ = arity;
  BalancedTensor sq = build_square(phi);

  auto pure2_basis = [&](const Vec& x, std::size_t j) { return sq.pure(x, S.basis(j)); };
  std::vector<LinearMap> sq_right;
  for (std::size_t s = 0; s < k; ++s) {
    Vec es = S.basis(s);
    sq_right.push_back(map_on_square(sq, sq.group.moduli(), [&](std::size_t i, std::size_t j) {
      return sq.pure(S.basis(i), S.mul(S.basis(j), es));
    }));
  }

  if (arity == 2) {
    for (std::size_t s = 0; s < k; ++s) {
      Vec es = S.basis(s);
      T.left_.push_back(map_on_square(sq, sq.group.moduli(), [&](std::size_t i, std::size_t j) {
        return pure2_basis(S.mul(es, S.basis(i)), j);
      }));
    }
    T.right_ = std::move(sq_right);
    T.mult_ = map_on_square(sq, S.moduli(), [&](std::size_t i, std::size_t j) { return S.product(i, j); });
    T.tensor_ = std::move(sq);
    return T;
  }

  // cube = square (x)_R S, with R acting on the square through its right S-action
  std::vector<std::vector<Vec>> right_sq(phi.images.size());
  for (std::size_t r = 0; r < phi.images.size(); ++r) {
    LinearMap by_r = map_on_square(sq, sq.group.moduli(), [&](std::size_t i, std::size_t j) {
      return sq.pure(S.basis(i), S.mul(S.basis(j), phi.images[r]));
    });
    right_sq[r] = std::move(by_r.columns);
  }
  T.tensor_ = finring::balanced_tensor(sq.group.moduli(), S.moduli(), right_sq, finring::left_action(phi));
  T.square_ = std::move(sq);
  return T;
}

Vec TensorPower::pure(const std::vector<Vec>& f) const {
  if (static_cast<int>(f.size()) != arity_) throw Error("DimensionMismatch", "pure: wrong number of factors");
  if (arity_ == 2) return tensor_.pure(f[0], f[1]);
  return pure_outer(tensor_, square_->pure(f[0], f[1]), f[2]);
}

Vec TensorPower::act_left(const Vec& s, const Vec& x) const {
  const FiniteRing& S = hom_.target;
  const auto& moduli = group().moduli();
  Vec out(moduli.size(), 0);
  if (arity_ == 2) {
    for (std::size_t b = 0; b < S.dim(); ++b) axpy(out, s[b], left_[b].apply(x), moduli);
    return out;
  }
  const Residue exponent = exactalg::lcm_of(moduli);
  Vec lift = group().lift(x);
  for (std::size_t g = 0; g < lift.size(); ++g) {
    if (lift[g] == 0) continue;
    std::size_t c = g / tensor_.ny, l = g % tensor_.ny;
    // lift of the square coordinate c, then s acts on its first factor
    const Vec& inner = square_->group.lift_generator(c);
    for (std::size_t h = 0; h < inner.size(); ++h) {
      if (inner[h] == 0) continue;
      Vec a = S.mul(s, S.basis(h / square_->ny));
      Vec sq = square_->pure(a, S.basis(h % square_->ny));
      axpy(out, mul_mod(lift[g], inner[h], exponent), tensor_.pure(sq, S.basis(l)), moduli);
    }
  }
  return out;
}

Vec TensorPower::act_right(const Vec& x, const Vec& s) const {
  const FiniteRing& S = hom_.target;
  const auto& moduli = group().moduli();
  Vec out(moduli.size(), 0);
  if (arity_ == 2) {
    for (std::size_t b = 0; b < S.dim(); ++b) axpy(out, s[b], right_[b].apply(x), moduli);
    return out;
  }
  Vec lift = group().lift(x);
  for (std::size_t g = 0; g < lift.size(); ++g) {
    if (lift[g] == 0) continue;
    std::size_t c = g / tensor_.ny, l = g % tensor_.ny;
    Vec ec(square_->group.rank(), 0);
    ec[c] = 1;
    axpy(out, lift[g], tensor_.pure(ec, S.mul(S.basis(l), s)), moduli);
  }
  return out;
}

// ---- Sweedler coring --------------------------------------------------------

SweedlerCoring::SweedlerCoring(const RingHom& phi)
    : square_(tensor_power(phi, 2)), cube_(tensor_power(phi, 3)) {
  const FiniteRing& S = phi.target;
  const std::size_t k = S.dim();
  const BalancedTensor& sq = *cube_.square_;
  pure3_table_.reserve(k * k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      Vec ab = sq.pure(S.basis(a), S.basis(b));
      for (std::size_t c = 0; c < k; ++c) pure3_table_.push_back(cube_.tensor_.pure(ab, S.basis(c)));
    }
}

const Vec& SweedlerCoring::pure3_basis(std::size_t a, std::size_t b, std::size_t c) const {
  const std::size_t k = hom().target.dim();
  return pure3_table_[(a * k + b) * k + c];
}

Vec SweedlerCoring::pure3(const Vec& a, const Vec& b, const Vec& c) const {
  const std::size_t k = hom().target.dim();
  const auto& moduli = cube_.group().moduli();
  const auto& sm = hom().target.moduli();
  Vec out(moduli.size(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (b[j] == 0) continue;
      Residue ij = mul_mod(mod(a[i], sm[j]), b[j], sm[j]);
      for (std::size_t l = 0; l < k; ++l) {
        if (c[l] == 0) continue;
        Residue m = exactalg::gcd(exactalg::gcd(sm[i], sm[j]), sm[l]);
        axpy(out, mul_mod(mod(ij, m), mod(c[l], m), m), pure3_basis(i, j, l), moduli);
      }
    }
  }
  return out;
}

Vec SweedlerCoring::delta(const Vec& x) const {
  const FiniteRing& S = hom().target;
  const auto& moduli = cube_.group().moduli();
  Vec lift = square_.group().lift(x);
  const std::size_t k = S.dim();
  Vec out(moduli.size(), 0);
  for (std::size_t g = 0; g < lift.size(); ++g) {
    if (lift[g] == 0) continue;
    std::size_t i = g / k, j = g % k;
    for (std::size_t m = 0; m < k; ++m)
      if (S.unit()[m] != 0) axpy(out, mul_mod(lift[g], S.unit()[m], S.moduli()[m]), pure3_basis(i, m, j), moduli);
  }
  return out;
}

Vec SweedlerCoring::beta_on_generators(const Vec& u, const Vec& v) const {
  const FiniteRing& S = hom().target;
  const std::size_t k = S.dim();
  const auto& moduli = cube_.group().moduli();
  Vec out(moduli.size(), 0);
  // rows of u and columns of v as elements of S
  std::vector<Vec> u_rows(k, Vec(k, 0)), v_cols(k, Vec(k, 0));
  std::vector<char> u_live(k, 0), v_live(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (u[i * k + j] != 0) {
        u_rows[i][j] = mod(u[i * k + j], S.moduli()[j]);
        u_live[i] = 1;
      }
      if (v[i * k + j] != 0) {
        v_cols[j][i] = mod(v[i * k + j], S.moduli()[i]);
        v_live[j] = 1;
      }
    }
  for (std::size_t i = 0; i < k; ++i) {
    if (!u_live[i]) continue;
    for (std::size_t l = 0; l < k; ++l) {
      if (!v_live[l]) continue;
      Vec w = S.mul(u_rows[i], v_cols[l]);
      for (std::size_t m = 0; m < k; ++m) axpy(out, w[m], pure3_basis(i, m, l), moduli);
    }
  }
  return out;
}

Vec SweedlerCoring::beta(const Vec& x, const Vec& y) const {
  return beta_on_generators(square_.group().lift(x), square_.group().lift(y));
}

Vec SweedlerCoring::collapse_left(const Vec& t) const {
  const FiniteRing& S = hom().target;
  const auto& moduli = square_.group().moduli();
  const BalancedTensor& sq = *cube_.square_;
  const Residue exponent = exactalg::lcm_of(moduli);
  Vec lift = cube_.group().lift(t);
  Vec out(moduli.size(), 0);
  for (std::size_t g = 0; g < lift.size(); ++g) {
    if (lift[g] == 0) continue;
    std::size_t c = g / cube_.tensor_.ny, l = g % cube_.tensor_.ny;
    const Vec& inner = sq.group.lift_generator(c);
    for (std::size_t h = 0; h < inner.size(); ++h) {
      if (inner[h] == 0) continue;
      Vec ab = S.product(h / sq.ny, h % sq.ny);
      Residue coef = mul_mod(lift[g], inner[h], exponent);
      axpy(out, coef, square_.presentation().pure(ab, S.basis(l)), moduli);
    }
  }
  return out;
}

Vec SweedlerCoring::collapse_right(const Vec& t) const {
  const FiniteRing& S = hom().target;
  const auto& moduli = square_.group().moduli();
  const BalancedTensor& sq = *cube_.square_;
  const Residue exponent = exactalg::lcm_of(moduli);
  Vec lift = cube_.group().lift(t);
  Vec out(moduli.size(), 0);
  for (std::size_t g = 0; g < lift.size(); ++g) {
    if (lift[g] == 0) continue;
    std::size_t c = g / cube_.tensor_.ny, l = g % cube_.tensor_.ny;
    const Vec& inner = sq.group.lift_generator(c);
    for (std::size_t h = 0; h < inner.size(); ++h) {
      if (inner[h] == 0) continue;
      Vec bc = S.product(h % sq.ny, l);
      Residue coef = mul_mod(lift[g], inner[h], exponent);
      axpy(out, coef, square_.presentation().pure(S.basis(h / sq.ny), bc), moduli);
    }
  }
  return out;
}

}  // namespace hsep::sepkit
