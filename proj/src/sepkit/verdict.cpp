#include "hsep/error.hpp"
#include "hsep/sepkit.hpp"

namespace hsep::sepkit {

using exactalg::add_mod;
using exactalg::mod;
using exactalg::mul_mod;

namespace {

// Rows: mult(x) = 1_S (mod the S moduli), then (L_s - R_s) x = 0 per basis s.
exactalg::CongruenceSystem locus_system(const TensorPower& T2) {
  const FiniteRing& S = T2.hom().target;
  const auto& d = T2.group().moduli();
  const std::size_t n = d.size();
  exactalg::CongruenceSystem sys;
  sys.unknown_moduli = d;
  for (std::size_t t = 0; t < S.dim(); ++t) {
    Vec row(n);
    for (std::size_t c = 0; c < n; ++c) row[c] = T2.mult().columns[c][t];
    sys.rows.push_back(std::move(row));
    sys.rhs.push_back(S.unit()[t]);
    sys.row_moduli.push_back(S.moduli()[t]);
  }
  for (std::size_t s = 0; s < S.dim(); ++s)
    for (std::size_t t = 0; t < n; ++t) {
      Vec row(n);
      bool nonzero = false;
      for (std::size_t c = 0; c < n; ++c) {
        row[c] = exactalg::sub_mod(T2.left_action(s).columns[c][t], T2.right_action(s).columns[c][t], d[t]);
        nonzero = nonzero || row[c] != 0;
      }
      if (!nonzero) continue;
      sys.rows.push_back(std::move(row));
      sys.rhs.push_back(0);
      sys.row_moduli.push_back(d[t]);
    }
  return sys;
}

bool satisfies_locus(const TensorPower& T2, const Vec& x, bool homogeneous) {
  const FiniteRing& S = T2.hom().target;
  Vec m = T2.mult().apply(x);
  if (m != (homogeneous ? S.zero() : S.unit())) return false;
  for (std::size_t s = 0; s < S.dim(); ++s)
    if (T2.left_action(s).apply(x) != T2.right_action(s).apply(x)) return false;
  return true;
}

// Q(t) = beta(e, e) - delta(e) for e = p + sum t_k g_k, expanded as a
// quadratic polynomial in the digits t with coefficients in the cube.
struct QuadraticForm {
  std::vector<Residue> moduli;
  std::vector<std::size_t> active;  // coordinates with any nonzero coefficient
  std::size_t vars = 0;
  // coordinate-major: for coordinate z, constant, linear[k], quad[k][l] (k <= l)
  std::vector<Residue> constant;
  std::vector<std::vector<Residue>> linear;
  std::vector<std::vector<Residue>> quad;  // packed upper triangle

  bool vanishes(const std::vector<Residue>& t) const {
    for (std::size_t z : active) {
      Residue m = moduli[z];
      Residue v = constant[z];
      const auto& lin = linear[z];
      const auto& q = quad[z];
      std::size_t idx = 0;
      for (std::size_t k = 0; k < vars; ++k) {
        Residue tk = t[k] % m;
        if (lin[k] != 0) v = add_mod(v, mul_mod(tk, lin[k], m), m);
        for (std::size_t l = k; l < vars; ++l, ++idx)
          if (q[idx] != 0 && tk != 0) v = add_mod(v, mul_mod(mul_mod(tk, t[l] % m, m), q[idx], m), m);
      }
      if (v != 0) return false;
    }
    return true;
  }
};

QuadraticForm quadratic_form(const SweedlerCoring& C, const Vec& p, const std::vector<Vec>& g) {
  const auto& moduli = C.cube().group().moduli();
  const std::size_t dim = moduli.size(), n = g.size();
  auto sub = [&](const Vec& a, const Vec& b) { return exactalg::sub(a, b, moduli); };
  auto add = [&](const Vec& a, const Vec& b) { return exactalg::add(a, b, moduli); };

  QuadraticForm Q;
  Q.moduli = moduli;
  Q.vars = n;
  Vec c0 = sub(C.beta(p, p), C.delta(p));
  std::vector<Vec> lin(n), quad;
  for (std::size_t k = 0; k < n; ++k) lin[k] = sub(add(C.beta(p, g[k]), C.beta(g[k], p)), C.delta(g[k]));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k; l < n; ++l)
      quad.push_back(l == k ? C.beta(g[k], g[k]) : add(C.beta(g[k], g[l]), C.beta(g[l], g[k])));

  Q.constant = c0;
  Q.linear.assign(dim, std::vector<Residue>(n, 0));
  Q.quad.assign(dim, std::vector<Residue>(quad.size(), 0));
  for (std::size_t z = 0; z < dim; ++z) {
    bool any = c0[z] != 0;
    for (std::size_t k = 0; k < n; ++k) {
      Q.linear[z][k] = lin[k][z];
      any = any || lin[k][z] != 0;
    }
    for (std::size_t q = 0; q < quad.size(); ++q) {
      Q.quad[z][q] = quad[q][z];
      any = any || quad[q][z] != 0;
    }
    if (any) Q.active.push_back(z);
  }
  return Q;
}

}  // namespace

AffineSolutionSet separability_locus(const SweedlerCoring& C) {
  const TensorPower& T2 = C.square();
  AffineSolutionSet locus = exactalg::solve_congruences(locus_system(T2));
  if (!locus.empty()) {
    if (!satisfies_locus(T2, *locus.particular(), false))
      throw Error("InternalError", "separability locus: particular solution fails substitution");
    for (const auto& g : locus.kernel_generators())
      if (!satisfies_locus(T2, g, true))
        throw Error("InternalError", "separability locus: kernel generator fails substitution");
  }
  return locus;
}

AffineSolutionSet separability_locus(const RingHom& phi) { return separability_locus(SweedlerCoring(phi)); }

bool is_h_idempotent(const SweedlerCoring& C, const AffineSolutionSet& locus, const Vec& e) {
  if (!locus.contains(e)) throw Error("NotSeparabilityIdempotent", exactalg::to_string(e));
  return C.beta(e, e) == C.delta(e);
}

bool is_h_idempotent(const RingHom& phi, const Vec& e) {
  SweedlerCoring C(phi);
  return is_h_idempotent(C, separability_locus(C), e);
}

EpiCriteria ring_epi_criteria(const SweedlerCoring& C, const AffineSolutionSet& locus) {
  const TensorPower& T2 = C.square();
  const FiniteRing& S = T2.hom().target;
  EpiCriteria e;
  Integer image = exactalg::span_order(S.moduli(), T2.mult().columns);
  e.mult_bijective = image == S.order() && T2.group().order() == S.order();
  Vec one = T2.pure({S.unit(), S.unit()});
  e.one_tensor_one_separable = locus.contains(one);
  e.one_tensor_one_h = e.one_tensor_one_separable && is_h_idempotent(C, locus, one);
  return e;
}

bool is_ring_epimorphism(const RingHom& phi) {
  SweedlerCoring C(phi);
  EpiCriteria e = ring_epi_criteria(C, separability_locus(C));
  if (e.mult_bijective != e.one_tensor_one_separable || e.one_tensor_one_separable != e.one_tensor_one_h)
    throw Error("InternalCriterionMismatch", phi.source.label() + " -> " + phi.target.label());
  return e.mult_bijective;
}

std::vector<RingHom> find_ring_retractions(const RingHom& phi, std::size_t cap) {
  const FiniteRing& R = phi.source;
  const FiniteRing& S = phi.target;
  const std::size_t kr = R.dim(), ks = S.dim();
  // unknown (i, j) = coordinate i of E(e_j), index i * ks + j
  exactalg::CongruenceSystem sys;
  for (std::size_t i = 0; i < kr; ++i)
    for (std::size_t j = 0; j < ks; ++j) sys.unknown_moduli.push_back(R.moduli()[i]);
  auto blank = [&] { return Vec(kr * ks, 0); };
  for (std::size_t i = 0; i < kr; ++i)
    for (std::size_t j = 0; j < ks; ++j) {
      Vec row = blank();
      row[i * ks + j] = mod(S.moduli()[j], R.moduli()[i]);
      if (row[i * ks + j] == 0) continue;
      sys.rows.push_back(std::move(row));
      sys.rhs.push_back(0);
      sys.row_moduli.push_back(R.moduli()[i]);
    }
  auto add_value_rows = [&](const Vec& s, const Vec& value) {
    for (std::size_t i = 0; i < kr; ++i) {
      Vec row = blank();
      for (std::size_t j = 0; j < ks; ++j) row[i * ks + j] = mod(s[j], R.moduli()[i]);
      sys.rows.push_back(std::move(row));
      sys.rhs.push_back(value[i]);
      sys.row_moduli.push_back(R.moduli()[i]);
    }
  };
  for (std::size_t r = 0; r < kr; ++r) add_value_rows(phi.images[r], R.basis(r));
  add_value_rows(S.unit(), R.unit());

  AffineSolutionSet affine = exactalg::solve_congruences(sys);
  if (affine.size() > static_cast<unsigned long>(cap)) throw CapExceeded("retraction candidates", affine.size().get_str());

  std::vector<RingHom> out;
  affine.for_each([&](const Vec& x, const std::vector<Residue>&) {
    std::vector<Vec> images(ks, Vec(kr, 0));
    for (std::size_t i = 0; i < kr; ++i)
      for (std::size_t j = 0; j < ks; ++j) images[j][i] = x[i * ks + j];
    auto apply = [&](const Vec& s) {
      Vec v(kr, 0);
      for (std::size_t j = 0; j < ks; ++j)
        if (s[j] != 0) v = R.add(v, R.scale(s[j], images[j]));
      return v;
    };
    for (std::size_t a = 0; a < ks; ++a)
      for (std::size_t b = 0; b < ks; ++b)
        if (apply(S.product(a, b)) != R.mul(images[a], images[b])) return true;
    out.push_back(finring::check_ring_hom(std::move(images), S, R));
    return true;
  });
  return out;
}

std::string to_string(HVerdict v) {
  switch (v) {
    case HVerdict::Holds: return "true";
    case HVerdict::Fails: return "false";
    case HVerdict::Undecided: return "UNDECIDED-BY-ENUMERATION";
  }
  return "?";
}

Integer for_each_h_idempotent(const SweedlerCoring& C, const AffineSolutionSet& locus, std::size_t cap,
                              const std::function<bool(const Vec&)>& visit) {
  if (locus.empty()) return 0;
  if (locus.size() > static_cast<unsigned long>(cap)) throw CapExceeded("separability locus", locus.size().get_str());
  QuadraticForm Q = quadratic_form(C, *locus.particular(), locus.kernel_generators());
  Integer count = 0;
  locus.for_each([&](const Vec& e, const std::vector<Residue>& digits) {
    if (!Q.vanishes(digits)) return true;
    ++count;
    return visit(e);
  });
  return count;
}

SeparabilityVerdict h_separability_report(const RingHom& phi, const ReportOptions& options) {
  const std::string where = phi.source.label() + " -> " + phi.target.label();
  SweedlerCoring C(phi);
  SeparabilityVerdict v;
  v.hom = phi;
  v.sep_locus = separability_locus(C);
  v.is_separable = !v.sep_locus.empty();
  v.locus_size = v.sep_locus.size();
  v.image_central = finring::image_is_central(phi);
  v.target_commutative = finring::commutativity_report(phi.target).is_commutative;

  EpiCriteria epi = ring_epi_criteria(C, v.sep_locus);
  if (epi.mult_bijective != epi.one_tensor_one_separable || epi.one_tensor_one_separable != epi.one_tensor_one_h)
    throw Error("InternalCriterionMismatch", where + ": ring epimorphism criteria disagree");
  v.is_ring_epi = epi.mult_bijective;
  v.one_tensor_one_separable = epi.one_tensor_one_separable;
  if (v.one_tensor_one_separable && v.locus_size != 1)
    throw Error("InternalCriterionMismatch", where + ": 1(x)1 is separable but the locus is not a singleton");

  try {
    v.h_witness_count = for_each_h_idempotent(C, v.sep_locus, options.cap, [&](const Vec& e) {
      if (v.h_witnesses.size() < options.witness_limit) v.h_witnesses.push_back(e);
      else v.witnesses_truncated = true;
      return true;
    });
    v.is_h_separable = v.h_witness_count > 0 ? HVerdict::Holds : HVerdict::Fails;
  } catch (const CapExceeded& e) {
    v.is_h_separable = HVerdict::Undecided;
    v.undecided_reason = e.what();
  }

  if (v.is_h_separable != HVerdict::Undecided) {
    bool h = v.is_h_separable == HVerdict::Holds;
    if (v.is_ring_epi && !h) throw Error("InternalCriterionMismatch", where + ": epimorphism without h-idempotent");
    if (h && !v.is_separable) throw Error("InternalCriterionMismatch", where + ": h-separable but not separable");
    if (v.image_central && h != v.is_ring_epi)
      throw Error("InternalCriterionMismatch", where + ": central image but h-separable != epimorphism");
  }

  if (options.with_retractions) {
    try {
      v.retractions = find_ring_retractions(phi, options.cap);
    } catch (const CapExceeded&) {
      v.retractions.reset();
    }
  }
  return v;
}

std::string formal_sum(const TensorPower& T2, const Vec& x) {
  const FiniteRing& S = T2.hom().target;
  const auto& names = S.basis_names();
  Vec lift = T2.group().lift(x);
  std::string out;
  for (std::size_t g = 0; g < lift.size(); ++g) {
    if (lift[g] == 0) continue;
    std::size_t i = g / S.dim(), j = g % S.dim();
    if (!out.empty()) out += " + ";
    if (lift[g] != 1) out += std::to_string(lift[g]) + "*";
    out += names[i] + " ⊗ " + names[j];
  }
  return out.empty() ? "0" : out;
}

}  // namespace hsep::sepkit
