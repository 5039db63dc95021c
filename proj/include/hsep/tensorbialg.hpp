#pragma once

// Truncated tensor bialgebras over Q or F_p and the identities behind the
// h-separability of the free bialgebra functor.
//
// A tensor algebra is built over a graded alphabet (letters of internal degree
// >= 1) and truncated at internal degree N. Products past N vanish, so the
// truncation is a quotient and every degree-preserving identity can be checked
// exactly in degrees <= N.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hsep::tensorbialg {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;  // row-major, rows x cols

inline constexpr std::size_t kDefaultDimensionGuard = 4096;

class ExactField {
 public:
  static ExactField rationals() { return ExactField(0); }
  /// Rejects anything that is not a prime in [2, 97].
  static ExactField prime(long p);
  /// "q" or a decimal prime.
  static ExactField parse(const std::string& spec);

  long characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  std::string name() const;

  Scalar normalize(Scalar a) const;
  Scalar inverse(const Scalar& a) const;
  /// Decimal residue for F_p, reduced fraction for Q.
  std::string format(const Scalar& a) const;

 private:
  explicit ExactField(long p) : p_(p) {}
  long p_;
};

struct GradedSpace {
  std::vector<std::size_t> dims;                  // degrees 0..N
  std::vector<std::vector<std::string>> labels;   // per degree
  std::size_t total_dim() const;
  /// Offset of degree n in the concatenated basis.
  std::size_t offset(std::size_t n) const;
};

/// Degree-preserving linear map; blocks[n] has target.dims[n] rows and source.dims[n] columns.
struct GradedMap {
  GradedSpace source;
  GradedSpace target;
  std::vector<Matrix> blocks;

  Vector apply(const ExactField& k, const Vector& x) const;
};

GradedMap compose(const ExactField& k, const GradedMap& second, const GradedMap& first);
bool equal(const ExactField& k, const GradedMap& a, const GradedMap& b);
GradedMap identity_map(const GradedSpace& s);

using Word = std::vector<std::size_t>;
/// Sparse element of B (x) B keyed by basis index pairs.
using TensorSquare = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

class TruncatedTensorBialgebra {
 public:
  /// Letters with internal degrees >= 1; throws DimensionOverflow when the
  /// truncated carrier exceeds guard.
  static TruncatedTensorBialgebra build(const ExactField& k, std::vector<std::string> letters,
                                        std::vector<std::size_t> degrees, std::size_t N,
                                        std::size_t guard = kDefaultDimensionGuard);

  const ExactField& field() const { return k_; }
  std::size_t truncation() const { return N_; }
  std::size_t letter_count() const { return letters_.size(); }
  const std::vector<std::size_t>& letter_degrees() const { return degrees_; }
  /// Alphabet as a graded space (letters in their internal degrees).
  const GradedSpace& alphabet() const { return alphabet_; }
  const GradedSpace& carrier() const { return carrier_; }
  std::size_t dim() const { return words_.size(); }

  const Word& word(std::size_t i) const { return words_[i]; }
  std::size_t degree(std::size_t i) const { return word_degree_[i]; }
  /// Index of a word, or dim() when it is truncated away.
  std::size_t index_of(const Word& w) const;
  std::string label(std::size_t i) const { return word_label(words_[i]); }
  std::string word_label(const Word& w) const;
  /// Formal sum over the word basis, "0" for zero.
  std::string format(const Vector& x) const;

  Vector basis(std::size_t i) const;
  Vector unit() const { return basis(0); }
  Vector multiply(const Vector& a, const Vector& b) const;
  /// Shuffle coproduct: each word maps to the sum over position subsets of
  /// subword (x) complementary subword.
  TensorSquare coproduct(const Vector& x) const;
  Scalar counit(const Vector& x) const { return x[0]; }
  /// coproduct(x) - x (x) 1 - 1 (x) x
  TensorSquare primitivity_defect(const Vector& x) const;

  /// Inclusion of the words of length n (as opposed to internal degree n).
  Matrix alpha(std::size_t n) const;
  /// Projection onto the words of length 1, with values in the alphabet.
  GradedMap omega() const;

  /// Exact checks of associativity, unitality, coassociativity, counitality and
  /// multiplicativity of the coproduct on basis tuples inside the truncation.
  /// Returns the first failure, empty when all hold.
  std::string check_bialgebra_laws() const;

 private:
  ExactField k_ = ExactField::rationals();
  std::size_t N_ = 0;
  std::vector<std::string> letters_;
  std::vector<std::size_t> degrees_;
  GradedSpace alphabet_;
  GradedSpace carrier_;
  std::vector<Word> words_;
  std::vector<std::size_t> word_degree_;
  std::map<Word, std::size_t> index_;
};

/// T(V) for a V_dim-dimensional V in degree 1; letters v, w, u or x1, x2, ...
TruncatedTensorBialgebra build_truncated(std::size_t V_dim, const ExactField& k, std::size_t N,
                                         std::size_t guard = kDefaultDimensionGuard);

struct Primitives {
  ExactField field = ExactField::rationals();
  GradedSpace space;
  std::vector<Vector> basis;   // carrier coordinates, one per primitive basis vector
  GradedMap xi;                // P -> carrier
  GradedMap xi_hat;            // P -> augmentation kernel
  GradedMap zeta;              // augmentation kernel -> carrier
  /// Coordinates of a primitive carrier element in `basis`; throws if not primitive.
  Vector coordinates(const Vector& x) const;

  /// basis[k] is 1 at free_columns[k] and 0 at every other free column.
  std::vector<std::size_t> free_columns;
};

/// Kernel of the primitivity defect, degree by degree. Asserts counit o xi = 0
/// and zeta o xi_hat = xi.
Primitives primitives(const TruncatedTensorBialgebra& B);

struct IdentityCheck {
  std::string name;
  bool holds = false;
  std::string witness;  // first failing basis vector with both sides
};

struct TBoldReport {
  std::string field;
  std::size_t V_dim = 0;
  std::size_t N = 0;
  std::vector<std::size_t> carrier_dims;    // T V
  std::vector<std::size_t> primitive_dims;  // W = P T V
  std::vector<std::size_t> tw_dims;         // T W
  std::vector<std::size_t> ptw_dims;        // P T W
  std::vector<std::size_t> tu_dims;         // T (T V)^+
  std::vector<IdentityCheck> identities;
  bool all_hold() const;
};

/// gamma = omega o xi T. Checks (a) gamma o eta = Id, (b) gamma gamma = gamma o P eps T
/// on P T P T V, and (c) omega omega o Omega T zeta T = omega o Omega eps T o Omega T zeta T.
TBoldReport verify_t_bold_h_separability(std::size_t V_dim, const ExactField& k, std::size_t N,
                                         std::size_t guard = kDefaultDimensionGuard);

struct NonHWitness {
  std::string element;  // the length-2 word [1|v] in Omega T Omega T V
  Vector omega_omega;   // coordinates in V
  Vector omega_eval;    // coordinates in V
  std::string omega_omega_text;
  std::string omega_eval_text;
  bool differ = false;
  bool omega_eta_is_identity = false;
  std::string note;
};

/// omega is a separability witness for T (omega o eta = Id) that fails the
/// h-condition on t = [1|v].
NonHWitness plain_T_nonh_witness(std::size_t V_dim, const ExactField& k, std::size_t N);

}  // namespace hsep::tensorbialg
