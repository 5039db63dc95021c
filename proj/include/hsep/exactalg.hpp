#pragma once

// Exact integer and mixed-modulus linear algebra.
//
// Group elements are coordinate vectors of residues. Every finite abelian
// group in the workbench is either a direct sum of cyclic groups given by a
// modulus list, or a FinAbPresentation in invariant-factor coordinates.
// Integer matrices and Smith normal form use arbitrary precision; residue
// arithmetic is done in 64 bits with 128-bit products, which is exact as long
// as every modulus stays below 2^62 (checked, see checked_lcm).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hsep::exactalg {

using Integer = mpz_class;
using Residue = std::int64_t;
using Vec = std::vector<Residue>;

/// Largest modulus the residue kernels accept.
inline constexpr Residue kMaxModulus = Residue{1} << 62;

// ---- residue helpers -------------------------------------------------------

Residue mod(Residue a, Residue m);
Residue mod(const Integer& a, Residue m);
Residue add_mod(Residue a, Residue b, Residue m);
Residue sub_mod(Residue a, Residue b, Residue m);
Residue mul_mod(Residue a, Residue b, Residue m);
Residue gcd(Residue a, Residue b);
/// lcm with an overflow guard; throws hsep::Error("ModulusOverflow", ...).
Residue checked_lcm(Residue a, Residue b);
Residue lcm_of(const std::vector<Residue>& values);

struct ExtendedGcd {
  Residue g;
  Residue s;
  Residue t;
};
/// s*a + t*b = g = gcd(a, b) for a, b >= 0.
ExtendedGcd extended_gcd(Residue a, Residue b);

/// Inverse of a modulo m, or nullopt if gcd(a, m) != 1.
std::optional<Residue> inverse_mod(Residue a, Residue m);

/// Reduce every coordinate of v into [0, moduli[i]).
Vec reduce(Vec v, const std::vector<Residue>& moduli);
Vec add(const Vec& a, const Vec& b, const std::vector<Residue>& moduli);
Vec sub(const Vec& a, const Vec& b, const std::vector<Residue>& moduli);
Vec scale(Residue c, const Vec& a, const std::vector<Residue>& moduli);
bool is_zero(const Vec& v);

/// Product of the moduli (the order of the direct sum they describe).
Integer order_of(const std::vector<Residue>& moduli);

// ---- integer matrices and Smith normal form --------------------------------

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  IntegerMatrix operator*(const IntegerMatrix& rhs) const;
  bool operator==(const IntegerMatrix& rhs) const;

  /// Exact determinant by fraction-free elimination (square matrices only).
  Integer determinant() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// D = U * source * V with U, V unimodular and D diagonal, d_1 | d_2 | ...
struct SmithDecomposition {
  IntegerMatrix U;
  IntegerMatrix D;
  IntegerMatrix V;
  IntegerMatrix source;
  IntegerMatrix U_inverse;
  IntegerMatrix V_inverse;

  /// The min(rows, cols) diagonal entries of D.
  std::vector<Integer> diagonal() const;
  /// Number of nonzero diagonal entries.
  std::size_t rank() const;
};

/// Pivot rule: smallest absolute nonzero entry, ties broken in row-major order.
SmithDecomposition smith_normal_form(const IntegerMatrix& A);

// ---- modular echelon (Howell) form -----------------------------------------

/// Reduced Howell form of a submodule of (Z/M)^width.
///
/// Rows have strictly increasing leading columns, each lead divides M, and
/// entries above a lead are reduced modulo it. The Howell property holds: the
/// rows with lead >= c span every member whose first c coordinates vanish, so
/// each member is uniquely sum t_i row_i with 0 <= t_i < M / lead_i.
struct HowellForm {
  Residue modulus = 1;
  std::size_t width = 0;
  std::vector<Vec> rows;
  std::vector<std::size_t> leads;

  Residue lead_value(std::size_t i) const { return rows[i][leads[i]]; }
  /// Canonical representative of v modulo the row span.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  /// Order of the row span.
  Integer span_order() const;
};

HowellForm howell_form(std::vector<Vec> generators, std::size_t width, Residue modulus);

// ---- finite abelian groups -------------------------------------------------

/// A finite abelian group presented on `generator_count` cyclic generators,
/// together with its canonical invariant-factor coordinates.
///
/// Canonical moduli satisfy d_1 | d_2 | ... with trivial factors dropped; the
/// zero group has no canonical coordinates. project maps original generator
/// coordinates onto canonical ones, lift is a section of project.
class FinAbPresentation {
 public:
  FinAbPresentation() = default;

  /// Canonical form of the direct sum of Z/m_i (no extra relations).
  static FinAbPresentation direct_sum(const std::vector<Residue>& generator_moduli);

  const std::vector<Residue>& moduli() const { return moduli_; }
  const std::vector<Residue>& generator_moduli() const { return generator_moduli_; }
  std::size_t rank() const { return moduli_.size(); }
  std::size_t generator_count() const { return generator_moduli_.size(); }
  Integer order() const { return order_of(moduli_); }

  Vec project(const Vec& original) const;
  /// project(e_j); a column of the projection matrix.
  const Vec& project_generator(std::size_t j) const { return project_cols_[j]; }
  Vec lift(const Vec& canonical) const;
  const Vec& lift_generator(std::size_t c) const { return lift_cols_[c]; }

  Vec zero() const { return Vec(moduli_.size(), 0); }
  Vec reduce(Vec canonical) const { return exactalg::reduce(std::move(canonical), moduli_); }
  Vec add(const Vec& a, const Vec& b) const { return exactalg::add(a, b, moduli_); }
  Vec sub(const Vec& a, const Vec& b) const { return exactalg::sub(a, b, moduli_); }

 private:
  friend FinAbPresentation cokernel_of_rows(const std::vector<Vec>&, const std::vector<Residue>&);
  friend FinAbPresentation cokernel_by_smith(const IntegerMatrix&, const std::vector<Residue>&);

  std::vector<Residue> moduli_;
  std::vector<Residue> generator_moduli_;
  std::vector<Vec> project_cols_;  // generator_count columns of length rank
  std::vector<Vec> lift_cols_;     // rank columns of length generator_count
};

/// Columns of `relations` are relation vectors on generators carrying the
/// order relations generator_moduli[i] * g_i = 0.
FinAbPresentation cokernel(const IntegerMatrix& relations, const std::vector<Residue>& generator_moduli);

/// Same as cokernel() with relations given as residue vectors.
FinAbPresentation cokernel_of_rows(const std::vector<Vec>& relations, const std::vector<Residue>& generator_moduli);

/// Reference route: one Smith normal form of [relations | diag(moduli)].
FinAbPresentation cokernel_by_smith(const IntegerMatrix& relations, const std::vector<Residue>& generator_moduli);

/// A subgroup of the direct sum of Z/ambient[i] in canonical mixed-radix form:
/// every member is uniquely sum t_i basis[i] with 0 <= t_i < radix[i].
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(std::vector<Residue> ambient_moduli, const std::vector<Vec>& generators);

  const std::vector<Residue>& ambient_moduli() const { return ambient_; }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<Residue>& radix() const { return radix_; }
  Integer order() const;

  bool contains(const Vec& v) const;
  /// Canonical representative of the coset v + subgroup.
  Vec reduce(const Vec& v) const;

  /// Visit p + members in lexicographic order of their coordinates, with the
  /// digit vector t of each member. Returning false stops the walk.
  using Visitor = std::function<bool(const Vec& element, const std::vector<Residue>& digits)>;
  void for_each_translate(const Vec& p, const Visitor& visit) const;

 private:
  Vec scale_up(const Vec& v) const;
  Vec scale_down(const Vec& v) const;

  std::vector<Residue> ambient_;
  Residue modulus_ = 1;
  HowellForm howell_;
  std::vector<Vec> basis_;
  std::vector<Residue> radix_;
};

// ---- congruence systems ----------------------------------------------------

/// Simultaneous congruences sum_j rows[i][j] x_j = rhs[i] (mod row_moduli[i])
/// in unknowns x_j taken modulo unknown_moduli[j].
struct CongruenceSystem {
  std::vector<Vec> rows;
  Vec rhs;
  std::vector<Residue> row_moduli;
  std::vector<Residue> unknown_moduli;
};

class AffineSolutionSet {
 public:
  AffineSolutionSet() = default;
  AffineSolutionSet(std::vector<Residue> ambient, std::optional<Vec> particular, Subgroup kernel);

  const std::vector<Residue>& ambient_moduli() const { return ambient_; }
  bool empty() const { return !particular_.has_value(); }
  /// Canonical (reduced) particular solution; nullopt when inconsistent.
  const std::optional<Vec>& particular() const { return particular_; }
  const Subgroup& kernel() const { return kernel_; }
  const std::vector<Vec>& kernel_generators() const { return kernel_.basis(); }

  /// Number of solutions (0 when empty).
  Integer size() const;
  bool contains(const Vec& x) const;
  /// Lexicographic walk; see Subgroup::for_each_translate.
  void for_each(const Subgroup::Visitor& visit) const;
  std::vector<Vec> members() const;

  bool operator==(const AffineSolutionSet& other) const;

 private:
  std::vector<Residue> ambient_;
  std::optional<Vec> particular_;
  Subgroup kernel_;
};

/// Howell-form solver; the workhorse used by the other modules.
AffineSolutionSet solve_congruences(const CongruenceSystem& system);

/// Smith-normal-form solver: adjoins -diag(row_moduli) columns to A and
/// solves the resulting integer system.
AffineSolutionSet solve_congruences_by_smith(const CongruenceSystem& system);

/// Row i of A x = b is read modulo moduli[i]; the unknowns live modulo the
/// lcm of the row moduli, which is where every solution set is periodic.
AffineSolutionSet solve_modular_system(const IntegerMatrix& A, const std::vector<Integer>& b,
                                       const std::vector<Integer>& moduli);

/// Order of the subgroup of the direct sum of Z/moduli[i] spanned by gens.
Integer span_order(const std::vector<Residue>& moduli, const std::vector<Vec>& gens);

std::string to_string(const Vec& v);

}  // namespace hsep::exactalg
