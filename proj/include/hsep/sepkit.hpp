#pragma once

// Separability and h-separability of ring extensions phi: R -> S.
//
// Everything is computed in S (x)_R S and S (x)_R S (x)_R S, presented as
// finite abelian groups in canonical coordinates. Linear conditions become
// congruence systems; the quadratic h-condition is filtered over the
// enumerated separability locus.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hsep/exactalg.hpp"
#include "hsep/finring.hpp"

namespace hsep::sepkit {

using exactalg::AffineSolutionSet;
using exactalg::FinAbPresentation;
using exactalg::Integer;
using exactalg::Residue;
using exactalg::Vec;
using finring::FiniteRing;
using finring::RingHom;

inline constexpr std::size_t kDefaultCap = 1'000'000;

/// Linear endomap of a presented group stored as images of canonical basis vectors.
struct LinearMap {
  std::vector<Residue> target_moduli;
  std::vector<Vec> columns;

  Vec apply(const Vec& x) const;
};

/// S (x)_R S (arity 2) or S (x)_R S (x)_R S (arity 3).
///
/// The arity-3 group is built as (S (x)_R S) (x)_R S on canonical coordinates
/// of the square, which keeps the relation system small.
class TensorPower {
 public:
  const RingHom& hom() const { return hom_; }
  int arity() const { return arity_; }
  const FinAbPresentation& group() const { return tensor_.group; }
  const finring::BalancedTensor& presentation() const { return tensor_; }

  /// pure(a, b) or pure(a, b, c), matching the arity.
  Vec pure(const std::vector<Vec>& factors) const;

  /// s . x and x . s on the outer factors. The per-basis matrices are only
  /// stored for arity 2; arity 3 computes the actions through lifts.
  const LinearMap& left_action(std::size_t s) const { return left_[s]; }
  const LinearMap& right_action(std::size_t s) const { return right_[s]; }
  Vec act_left(const Vec& s, const Vec& x) const;
  Vec act_right(const Vec& x, const Vec& s) const;

  /// a (x) b |-> ab (arity 2 only).
  const LinearMap& mult() const { return mult_; }

 private:
  friend TensorPower tensor_power(const RingHom& phi, int arity);
  friend class SweedlerCoring;

  RingHom hom_;
  int arity_ = 2;
  finring::BalancedTensor tensor_;
  std::optional<finring::BalancedTensor> square_;  // inner square for arity 3
  std::vector<LinearMap> left_;
  std::vector<LinearMap> right_;
  LinearMap mult_;
};

TensorPower tensor_power(const RingHom& phi, int arity);

/// The Sweedler coring C = S (x)_R S with its comultiplication into
/// S (x)_R S (x)_R S and the middle multiplication beta.
class SweedlerCoring {
 public:
  explicit SweedlerCoring(const RingHom& phi);

  const RingHom& hom() const { return square_.hom(); }
  const TensorPower& square() const { return square_; }
  const TensorPower& cube() const { return cube_; }

  /// pure(a, b, c) for basis elements, from a precomputed table.
  const Vec& pure3_basis(std::size_t a, std::size_t b, std::size_t c) const;
  Vec pure3(const Vec& a, const Vec& b, const Vec& c) const;

  /// a (x) b |-> a (x) 1 (x) b
  Vec delta(const Vec& x) const;
  /// a (x) b |-> ab
  Vec counit(const Vec& x) const { return square_.mult().apply(x); }
  /// (a (x) b, c (x) d) |-> a (x) bc (x) d, computed on lifts.
  Vec beta(const Vec& x, const Vec& y) const;
  /// beta on original generator coordinates (pairs of S basis elements).
  Vec beta_on_generators(const Vec& u, const Vec& v) const;

  /// a (x) b (x) c |-> ab (x) c and |-> a (x) bc. Composed with delta both
  /// give the identity of C (the counit laws).
  Vec collapse_left(const Vec& t) const;
  Vec collapse_right(const Vec& t) const;

 private:
  TensorPower square_;
  TensorPower cube_;
  std::vector<Vec> pure3_table_;
};

/// Separability idempotents: mult(e) = 1 and s e = e s for every s.
AffineSolutionSet separability_locus(const SweedlerCoring& C);
AffineSolutionSet separability_locus(const RingHom& phi);

/// beta(e, e) = delta(e). Throws NotSeparabilityIdempotent if e is not in the locus.
bool is_h_idempotent(const SweedlerCoring& C, const AffineSolutionSet& locus, const Vec& e);
bool is_h_idempotent(const RingHom& phi, const Vec& e);

struct EpiCriteria {
  bool mult_bijective = false;  // criterion (2)
  bool one_tensor_one_separable = false;  // criterion (3)
  bool one_tensor_one_h = false;  // criterion (4)
};

EpiCriteria ring_epi_criteria(const SweedlerCoring& C, const AffineSolutionSet& locus);
/// Criterion (2), cross-checked against (3); throws InternalCriterionMismatch.
bool is_ring_epimorphism(const RingHom& phi);

/// All unital ring homs E: S -> R with E o phi = id.
std::vector<RingHom> find_ring_retractions(const RingHom& phi, std::size_t cap = kDefaultCap);

enum class HVerdict { Holds, Fails, Undecided };
std::string to_string(HVerdict v);

struct SeparabilityVerdict {
  RingHom hom;
  bool is_separable = false;
  HVerdict is_h_separable = HVerdict::Undecided;
  bool is_ring_epi = false;
  AffineSolutionSet sep_locus;
  Integer locus_size;
  std::vector<Vec> h_witnesses;  // at most witness_limit, in lexicographic order
  Integer h_witness_count;       // exact when decided
  bool witnesses_truncated = false;
  std::optional<std::vector<RingHom>> retractions;  // nullopt when capped or not requested
  bool image_central = false;
  bool target_commutative = false;
  bool one_tensor_one_separable = false;
  std::string undecided_reason;
};

struct ReportOptions {
  std::size_t cap = kDefaultCap;
  std::size_t witness_limit = 64;
  bool with_retractions = true;
};

SeparabilityVerdict h_separability_report(const RingHom& phi, const ReportOptions& options = {});

/// Calls visit(e) for every h-separability idempotent, in lexicographic
/// order; returns the number visited. Throws CapExceeded when the locus is
/// larger than cap. visit returning false stops early.
Integer for_each_h_idempotent(const SweedlerCoring& C, const AffineSolutionSet& locus, std::size_t cap,
                              const std::function<bool(const Vec&)>& visit);

/// Formal sum a_1 (x) b_1 + ... over the basis of S for a canonical element
/// of S (x)_R S, read off a lift.
std::string formal_sum(const TensorPower& T2, const Vec& x);

}  // namespace hsep::sepkit
