#pragma once

// Finite categories, functors, natural transformations and adjunctions, with
// exhaustive searches for h-separability structures, Rafael-type retractions,
// Eilenberg-Moore sections and monad augmentations.
//
// Morphisms carry a global index inside their category; labels are unique per
// hom-set and equality is index (equivalently label) equality.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace hsep::fincat {

/// Candidate-evaluation bound for the searches in this module.
inline constexpr std::size_t kDefaultSearchCap = 10'000'000;

using Obj = std::size_t;
using Mor = std::size_t;

struct Morphism {
  std::string label;
  Obj source;
  Obj target;
};

struct HomSpec {
  std::string source;
  std::string target;
  std::vector<std::string> labels;
};

/// f o g = h with g: x -> y and f: y -> z. Composites with identities are implied.
struct CompositionSpec {
  std::string x, y, z;
  std::string f, g, h;
};

class FiniteCategory;
using CategoryRef = std::shared_ptr<const FiniteCategory>;

class FiniteCategory {
 public:
  /// identities[i] is the label of id on objects[i] and must be listed in homs.
  /// Rejections: DuplicateLabel, UnknownObject, UnknownMorphism, MissingComposite,
  /// CompositeMismatch, IdentityLawFails, NotAssociative.
  static CategoryRef construct(std::string label, std::vector<std::string> objects, const std::vector<HomSpec>& homs,
                               const std::vector<std::string>& identities,
                               const std::vector<CompositionSpec>& compositions);

  const std::string& label() const { return label_; }
  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }
  const std::string& object_label(Obj x) const { return objects_[x]; }
  const Morphism& morphism(Mor f) const { return morphisms_[f]; }
  const std::vector<Mor>& hom(Obj x, Obj y) const { return homs_[x * object_count() + y]; }
  Mor identity(Obj x) const { return identities_[x]; }
  /// f o g; g.target must equal f.source.
  Mor compose(Mor f, Mor g) const { return compose_[f * morphism_count() + g]; }
  Mor compose(Mor f, Mor g, Mor h) const { return compose(f, compose(g, h)); }

  Obj find_object(const std::string& name) const;
  Mor find_morphism(Obj x, Obj y, const std::string& name) const;
  /// "x->y:label" for reports.
  std::string describe(Mor f) const;

 private:
  std::string label_;
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<std::vector<Mor>> homs_;
  std::vector<Mor> identities_;
  std::vector<Mor> compose_;
};

bool same_category(const FiniteCategory& a, const FiniteCategory& b);

/// Thin category of a preorder; leq pairs are closed reflexively and
/// transitively. Morphisms are labelled "id" and "le".
CategoryRef poset_category(std::string label, std::vector<std::string> objects,
                           const std::vector<std::pair<std::string, std::string>>& leq);
/// 0 <= 1 <= ... <= n-1
CategoryRef chain_category(std::size_t n);
CategoryRef terminal_category();
/// One object "*" with table[a][b] = index of a*b.
CategoryRef monoid_category(std::string label, std::vector<std::string> elements,
                            const std::vector<std::vector<std::size_t>>& table, std::size_t identity);

// ---- functors and natural transformations ---------------------------------

struct FunctorData {
  CategoryRef source;
  CategoryRef target;
  std::vector<Obj> object_map;
  std::vector<Mor> morphism_map;

  Obj operator()(Obj x) const { return object_map[x]; }
  Mor map(Mor f) const { return morphism_map[f]; }
};

/// Rejections: WrongSource/WrongTarget for ill-typed images,
/// IdentityNotPreserved, CompositionNotPreserved.
FunctorData make_functor(CategoryRef source, CategoryRef target, std::vector<Obj> object_map,
                         std::vector<Mor> morphism_map);
FunctorData identity_functor(const CategoryRef& C);
/// second o first
FunctorData compose(const FunctorData& second, const FunctorData& first);
bool functor_equal(const FunctorData& a, const FunctorData& b);
bool is_full(const FunctorData& F);
bool is_faithful(const FunctorData& F);
/// Every functor S -> T, in lexicographic order of the object and morphism maps.
std::vector<FunctorData> find_functors(const CategoryRef& S, const CategoryRef& T,
                                       std::size_t cap = kDefaultSearchCap);

struct NatTransform {
  FunctorData from;
  FunctorData to;
  std::vector<Mor> components;

  Mor operator[](Obj x) const { return components[x]; }
};

/// Rejections: WrongComponent, NotNatural.
NatTransform make_nat_transform(FunctorData from, FunctorData to, std::vector<Mor> components);

/// L: B -> A left adjoint to R: A -> B with unit eta: Id_B -> RL and
/// counit epsilon: LR -> Id_A.
struct AdjunctionData {
  FunctorData L;
  FunctorData R;
  NatTransform unit;
  NatTransform counit;

  const CategoryRef& B() const { return L.source; }
  const CategoryRef& A() const { return L.target; }
};

/// Checks both triangle identities; rejection TriangleIdentityFails.
AdjunctionData make_adjunction(FunctorData L, FunctorData R, std::vector<Mor> unit, std::vector<Mor> counit);
AdjunctionData identity_adjunction(const CategoryRef& C);

// ---- h-separability structures ---------------------------------------------

/// P[x][y][k] is the image of the k-th morphism of Hom(Fx, Fy) in Hom(x, y).
struct HSepStructure {
  FunctorData functor;
  std::vector<std::vector<std::vector<Mor>>> P;

  Mor apply(Obj x, Obj y, Mor g) const;
};

/// Exhaustive backtracking over all P families. CapExceeded when more than cap
/// candidate values would be tried; the message carries the full search-space size.
std::vector<HSepStructure> find_h_separability_structures(const FunctorData& F,
                                                          std::size_t cap = kDefaultSearchCap);
/// Checks retraction, naturality and multiplicativity of a given family.
bool is_h_separability_structure(const HSepStructure& s);
/// P^{GF} = P^F o P^G.
HSepStructure compose_structures(const HSepStructure& PG, const HSepStructure& PF);

// ---- Rafael-type retractions and their equivalents ------------------------

enum class Side { Left, Right };

struct RafaelWitnesses {
  std::vector<NatTransform> separable;
  std::vector<NatTransform> h_separable;
};

/// Left: gamma: RL -> Id with gamma o eta = id, and gamma_B o gamma_RLB =
/// gamma_B o R(eps_LB) for the h-witnesses. Right: delta: Id -> LR with
/// eps o delta = id, and delta_LRA o delta_A = L(eta_RA) o delta_A.
RafaelWitnesses find_rafael_retractions(const AdjunctionData& adj, Side side,
                                        std::size_t cap = kDefaultSearchCap);

/// A monad (M, mu, eta) on a category; for a comonad mu is the comultiplication
/// W -> WW and eta the counit W -> Id.
struct Monad {
  FunctorData M;
  NatTransform mu;
  NatTransform eta;
};

/// (RL, R eps L, eta) for Side::Left, (LR, L eta R, eps) for Side::Right.
Monad induced_monad(const AdjunctionData& adj, Side side);
/// Checks associativity and unit laws (in the comonad form for Side::Right).
void validate_monad(const Monad& m, Side side);

struct EilenbergMoore {
  CategoryRef category;
  FunctorData forgetful;
  /// Structure map a: MB -> B (or coalgebra map B -> WB) of each object.
  std::vector<Mor> structure;
};

/// Algebras of the monad (Side::Left) or coalgebras of the comonad (Side::Right).
EilenbergMoore eilenberg_moore(const Monad& m, Side side);
EilenbergMoore eilenberg_moore(const AdjunctionData& adj, Side side = Side::Left);

/// All functors Gamma with U o Gamma = Id.
std::vector<FunctorData> find_section_functors(const FunctorData& U, std::size_t cap = kDefaultSearchCap);

/// Side::Left: gamma: M -> Id with gamma o eta = id and gamma o M(gamma) = gamma o mu.
/// Side::Right (grouplike morphisms): delta: Id -> W with eps o delta = id and
/// W(delta) o delta = Delta o delta.
std::vector<NatTransform> find_monad_augmentations(const Monad& m, Side side, std::size_t cap = kDefaultSearchCap);

// ---- named examples ----------------------------------------------------------

struct NamedCategory {
  std::string name;
  CategoryRef category;
};

struct NamedAdjunction {
  std::string name;
  AdjunctionData adjunction;
};

/// Small posets, monoids and a parallel pair, each with at most 4 objects and
/// hom-sets of size at most 3.
std::vector<NamedCategory> example_categories();
/// identity, chain2 to terminal (collapse / top), chain2 into chain3 with RL = Id,
/// terminal into chain2 at the bottom, and Id on the monoid C_2 with unit and counit g.
std::vector<NamedAdjunction> example_adjunctions();

}  // namespace hsep::fincat
