#pragma once

// Finite rings given by structure constants on an additive basis.
//
// The additive group is the direct sum of Z/m_i over basis elements e_i, and
// e_i * e_j is stored as a coordinate vector. Elements are plain coordinate
// vectors reduced modulo the basis moduli.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hsep/exactalg.hpp"

namespace hsep::finring {

using exactalg::Integer;
using exactalg::Residue;
using exactalg::Vec;

/// mul[i][j] holds the coordinates of e_i * e_j.
using MulTable = std::vector<std::vector<Vec>>;

class FiniteRing {
 public:
  FiniteRing() = default;

  /// Validates bilinearity, associativity and the unit laws on basis tuples;
  /// throws hsep::Error naming the first offending tuple.
  static FiniteRing construct(std::vector<Residue> moduli, MulTable mul, Vec unit, std::string label,
                              std::vector<std::string> basis_names = {});

  const std::string& label() const { return label_; }
  std::size_t dim() const { return moduli_.size(); }
  const std::vector<Residue>& moduli() const { return moduli_; }
  const MulTable& mul_table() const { return mul_; }
  const Vec& unit() const { return unit_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  Integer order() const { return exactalg::order_of(moduli_); }
  bool is_zero_ring() const { return order() == 1; }

  const Vec& product(std::size_t i, std::size_t j) const { return mul_[i][j]; }
  Vec basis(std::size_t i) const;
  Vec zero() const { return Vec(dim(), 0); }
  Vec reduce(Vec v) const { return exactalg::reduce(std::move(v), moduli_); }
  Vec add(const Vec& a, const Vec& b) const { return exactalg::add(a, b, moduli_); }
  Vec sub(const Vec& a, const Vec& b) const { return exactalg::sub(a, b, moduli_); }
  Vec scale(Residue c, const Vec& a) const { return exactalg::scale(c, a, moduli_); }
  Vec mul(const Vec& a, const Vec& b) const;

  /// Every element in lexicographic coordinate order; throws CapExceeded above cap.
  std::vector<Vec> elements(std::size_t cap = 1u << 20) const;

  void set_label(std::string label) { label_ = std::move(label); }

 private:
  std::vector<Residue> moduli_;
  MulTable mul_;
  Vec unit_;
  std::string label_;
  std::vector<std::string> names_;
};

/// A unital ring homomorphism; images[i] = phi(e_i) in target coordinates.
struct RingHom {
  FiniteRing source;
  FiniteRing target;
  std::vector<Vec> images;

  Vec apply(const Vec& x) const;
};

/// Accepts iff the candidate is additively well defined, multiplicative on
/// basis pairs and unital. Errors: NotAdditiveWellDefined, NotMultiplicative,
/// NotUnital (or DimensionMismatch for malformed input).
RingHom check_ring_hom(std::vector<Vec> images, const FiniteRing& source, const FiniteRing& target);

RingHom identity_hom(const FiniteRing& R);
/// second after first
RingHom compose(const RingHom& second, const RingHom& first);

struct CommutativityReport {
  bool is_commutative = false;
  exactalg::AffineSolutionSet center;  // solutions of x e_i = e_i x
};

CommutativityReport commutativity_report(const FiniteRing& S);

/// phi(R) contained in the center of S.
bool image_is_central(const RingHom& phi);

// ---- balanced tensor products ---------------------------------------------

/// X (x) Y over a ring acting on the right of X and the left of Y.
/// Generators are pairs (i, j), index i * ny + j, of order gcd(mx_i, my_j).
struct BalancedTensor {
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<Residue> generator_moduli;
  std::vector<Vec> relations;  // balance relations in generator coordinates
  exactalg::FinAbPresentation group;

  std::size_t generator(std::size_t i, std::size_t j) const { return i * ny + j; }
  /// Canonical coordinates of x (x) y.
  Vec pure(const Vec& x, const Vec& y) const;
};

/// right_x[r][i] = coordinates of x_i . r, left_y[r][j] = coordinates of r . y_j,
/// for every basis element r of the acting ring.
BalancedTensor balanced_tensor(const std::vector<Residue>& moduli_x, const std::vector<Residue>& moduli_y,
                               const std::vector<std::vector<Vec>>& right_x,
                               const std::vector<std::vector<Vec>>& left_y);

/// Right multiplication by phi(r) on S, and left multiplication, per basis r of R.
std::vector<std::vector<Vec>> right_action(const RingHom& phi);
std::vector<std::vector<Vec>> left_action(const RingHom& phi);

// ---- named ring families ---------------------------------------------------

struct StandardRing {
  FiniteRing ring;
  std::map<std::string, RingHom> homs;
  std::vector<std::string> warnings;
};

StandardRing modular_ring(Residue n);
/// M_n(R); hom "scalar": R -> M_n(R).
StandardRing matrix_ring(const FiniteRing& R, std::size_t n);
/// T_n(R); homs "scalar": R -> T_n(R) and "inclusion": T_n(R) -> M_n(R).
StandardRing triangular_ring(const FiniteRing& R, std::size_t n);
/// A x B; homs "proj1", "proj2". The injections are not unital and are omitted.
StandardRing product_ring(const FiniteRing& A, const FiniteRing& B);
/// R -> A x B from phi_a: R -> A and phi_b: R -> B.
RingHom product_hom(const RingHom& phi_a, const RingHom& phi_b);
/// R[G] from a Cayley table (table[g][h] = index of gh); hom "scalar".
StandardRing group_ring(const FiniteRing& R, const std::vector<std::vector<std::size_t>>& cayley,
                        const std::vector<std::string>& element_names = {});
std::vector<std::vector<std::size_t>> cyclic_group_table(std::size_t n);
/// Z/p[x]/(f) with f monic, coefficients low degree first; hom "scalar".
/// A reducible f only produces a warning.
StandardRing polynomial_quotient(Residue p, const std::vector<Residue>& f);
/// A (x)_R B for R commutative with central images; homs "structure": R -> A (x) B,
/// "left": A -> A (x) B, "right": B -> A (x) B.
StandardRing tensor_product(const RingHom& phi_a, const RingHom& phi_b);
/// R / I for the two-sided ideal generated by `ideal`; hom "quotient".
StandardRing quotient_ring(const FiniteRing& R, const std::vector<Vec>& ideal);

}  // namespace hsep::finring
