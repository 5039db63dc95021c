#include "hsep/error.hpp"
#include "hsep/tensorbialg.hpp"

namespace hsep::tensorbialg {

namespace {

// Assembles a graded map from the images of the source basis, rejecting any
// image with support outside the degree of its argument.
GradedMap graded_from_images(const ExactField& k, const GradedSpace& source, const GradedSpace& target,
                             const std::vector<Vector>& images, const std::string& what) {
  GradedMap m{source, target, {}};
  std::size_t col = 0;
  for (std::size_t n = 0; n < source.dims.size(); ++n) {
    Matrix block(target.dims[n], Vector(source.dims[n], 0));
    for (std::size_t j = 0; j < source.dims[n]; ++j, ++col) {
      const Vector& img = images[col];
      for (std::size_t t = 0; t < target.dims.size(); ++t)
        for (std::size_t i = 0; i < target.dims[t]; ++i) {
          Scalar c = k.normalize(img[target.offset(t) + i]);
          if (c == 0) continue;
          if (t != n) throw Error("DegreeNotPreserved", what + " at " + source.labels[n][j]);
          block[i][j] = c;
        }
    }
    m.blocks.push_back(std::move(block));
  }
  return m;
}

std::string format_in(const ExactField& k, const GradedSpace& s, const Vector& x) {
  std::string out;
  std::size_t idx = 0;
  for (std::size_t n = 0; n < s.dims.size(); ++n)
    for (std::size_t i = 0; i < s.dims[n]; ++i, ++idx) {
      Scalar c = k.normalize(x[idx]);
      if (c == 0) continue;
      bool negative = c < 0;
      if (negative) c = -c;
      std::string term = (c == 1 ? "" : c.get_str() + "*") + s.labels[n][i];
      out += out.empty() ? (negative ? "-" : "") + term : (negative ? " - " : " + ") + term;
    }
  return out.empty() ? "0" : out;
}

IdentityCheck compare(const ExactField& k, std::string name, const GradedMap& lhs, const GradedMap& rhs) {
  IdentityCheck check{std::move(name), equal(k, lhs, rhs), ""};
  if (check.holds) return check;
  for (std::size_t n = 0; n < lhs.blocks.size(); ++n)
    for (std::size_t j = 0; j < lhs.source.dims[n]; ++j) {
      Vector e(lhs.source.total_dim(), 0);
      e[lhs.source.offset(n) + j] = 1;
      Vector a = lhs.apply(k, e), b = rhs.apply(k, e);
      if (a != b) {
        check.witness = "on " + lhs.source.labels[n][j] + ": " + format_in(k, lhs.target, a) + " vs " +
                        format_in(k, rhs.target, b);
        return check;
      }
    }
  return check;
}

}  // namespace

bool TBoldReport::all_hold() const {
  for (const auto& c : identities)
    if (!c.holds) return false;
  return true;
}

TBoldReport verify_t_bold_h_separability(std::size_t V_dim, const ExactField& k, std::size_t N, std::size_t guard) {
  TBoldReport rep;
  rep.field = k.name();
  rep.V_dim = V_dim;
  rep.N = N;

  auto TV = build_truncated(V_dim, k, N, guard);
  const GradedSpace& V = TV.alphabet();
  const GradedMap omega_V = TV.omega();
  auto W = primitives(TV);
  rep.carrier_dims = TV.carrier().dims;
  rep.primitive_dims = W.space.dims;

  // T W, with the primitives of T V as letters in their internal degrees
  std::vector<std::string> letters;
  std::vector<std::size_t> degrees;
  for (std::size_t n = 0; n <= N; ++n)
    for (const auto& l : W.space.labels[n]) {
      letters.push_back(l.find(' ') == std::string::npos ? l : "(" + l + ")");
      degrees.push_back(n);
    }
  auto TW = TruncatedTensorBialgebra::build(k, letters, degrees, N, guard);
  auto PTW = primitives(TW);
  rep.tw_dims = TW.carrier().dims;
  rep.ptw_dims = PTW.space.dims;

  const GradedMap gamma_V = compose(k, omega_V, W.xi);     // P T V -> V
  const GradedMap gamma_W = compose(k, TW.omega(), PTW.xi);  // P T P T V -> P T V

  // (a) gamma o eta = Id, eta: V -> P T V the inclusion of V as primitives
  std::vector<Vector> eta_images;
  for (std::size_t i = 0; i < V_dim; ++i) eta_images.push_back(W.coordinates(TV.basis(TV.index_of({i}))));
  GradedMap eta = graded_from_images(k, V, W.space, eta_images, "eta");
  rep.identities.push_back(compare(k, "gamma o eta = Id", compose(k, gamma_V, eta), identity_map(V)));

  // (b) evaluation eps: T P T V -> T V multiplies the letters out; P eps T is its
  // restriction to primitives, read back in coordinates of P T V
  std::vector<Vector> eval_images;
  for (std::size_t i = 0; i < TW.dim(); ++i) {
    Vector prod = TV.unit();
    for (std::size_t l : TW.word(i)) prod = TV.multiply(prod, W.basis[l]);
    eval_images.push_back(prod);
  }
  GradedMap eval = graded_from_images(k, TW.carrier(), TV.carrier(), eval_images, "evaluation counit");
  std::vector<Vector> peps_images;
  IdentityCheck b{"gamma gamma = gamma o P eps T", false, ""};
  bool peps_ok = true;
  for (const auto& p : PTW.basis) {
    try {
      peps_images.push_back(W.coordinates(eval.apply(k, p)));
    } catch (const Error&) {
      b.witness = "evaluation of " + TW.format(p) + " is not primitive";
      peps_ok = false;
      break;
    }
  }
  if (peps_ok) {
    GradedMap peps = graded_from_images(k, PTW.space, W.space, peps_images, "P eps T");
    b = compare(k, b.name, compose(k, gamma_V, gamma_W), compose(k, gamma_V, peps));
  }
  rep.identities.push_back(b);

  // (c) on T((T V)^+): the two composites into V, with zeta including the
  // augmentation kernel letters into T V
  std::vector<std::string> u_letters;
  std::vector<std::size_t> u_degrees;
  for (std::size_t i = 1; i < TV.dim(); ++i) {
    u_letters.push_back(TV.label(i));
    u_degrees.push_back(TV.word(i).size());
  }
  auto TU = TruncatedTensorBialgebra::build(k, u_letters, u_degrees, N, guard);
  rep.tu_dims = TU.carrier().dims;
  std::vector<Vector> lhs_images, rhs_images;
  for (std::size_t i = 0; i < TU.dim(); ++i) {
    std::vector<Vector> letters_in_tv;
    for (std::size_t l : TU.word(i)) letters_in_tv.push_back(TV.basis(l + 1));
    // omega_{TV} keeps only one-letter words, then omega_V
    Vector inner = letters_in_tv.size() == 1 ? letters_in_tv[0] : Vector(TV.dim(), 0);
    lhs_images.push_back(omega_V.apply(k, inner));
    Vector prod = TV.unit();
    for (const auto& x : letters_in_tv) prod = TV.multiply(prod, x);
    rhs_images.push_back(omega_V.apply(k, prod));
  }
  rep.identities.push_back(compare(k, "omega omega o Omega T zeta T = omega o Omega eps T o Omega T zeta T",
                                   graded_from_images(k, TU.carrier(), V, lhs_images, "omega omega"),
                                   graded_from_images(k, TU.carrier(), V, rhs_images, "omega o eps")));
  return rep;
}

NonHWitness plain_T_nonh_witness(std::size_t V_dim, const ExactField& k, std::size_t N) {
  if (V_dim < 1 || N < 2) throw Error("InvalidArgument", "the witness needs V_dim >= 1 and N >= 2");
  auto TV = build_truncated(V_dim, k, N);
  const GradedMap omega_V = TV.omega();
  const Vector one = TV.unit();
  const Vector v = TV.basis(TV.index_of({0}));

  NonHWitness w;
  w.element = "[1|" + TV.label(TV.index_of({0})) + "]";
  // omega_{TV} kills words of length 2, so omega omega (t) = 0
  w.omega_omega = omega_V.apply(k, Vector(TV.dim(), 0));
  // Omega eps T evaluates the word to 1 * v
  w.omega_eval = omega_V.apply(k, TV.multiply(one, v));
  w.omega_omega_text = format_in(k, TV.alphabet(), w.omega_omega);
  w.omega_eval_text = format_in(k, TV.alphabet(), w.omega_eval);
  w.differ = w.omega_omega != w.omega_eval;

  Matrix a1 = TV.alpha(1);
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < V_dim; ++c) {
    Vector col(TV.dim());
    for (std::size_t r = 0; r < TV.dim(); ++r) col[r] = a1[r][c];
    cols.push_back(col);
  }
  GradedMap eta = graded_from_images(k, TV.alphabet(), TV.carrier(), cols, "eta");
  w.omega_eta_is_identity = equal(k, compose(k, omega_V, eta), identity_map(TV.alphabet()));
  w.note =
      "omega o eta = Id makes omega a separability witness for T, while omega omega and omega o Omega eps T differ "
      "on t. This exhibits the failure for omega only; ruling out every natural gamma needs the argument that "
      "Omega has no section unless every object is isomorphic to the unit, which is not mechanized.";
  return w;
}

}  // namespace hsep::tensorbialg
