#include "hsep/error.hpp"
#include "hsep/exactalg.hpp"

namespace hsep::exactalg {

namespace {

// u with u * a = gcd(a, M) (mod M) and gcd(u, M) = 1.
Residue normalizing_unit(Residue a, Residue M) {
  Residue g = gcd(a, M);
  Residue reduced_mod = M / g;
  Residue base = reduced_mod == 1 ? 0 : *inverse_mod((a / g) % reduced_mod, reduced_mod);
  for (Residue u = base;; u += reduced_mod) {
    if (u == 0) continue;
    if (gcd(u, M) == 1) return u % M;
  }
}

void scale_row(Vec& row, Residue c, Residue M) {
  for (auto& x : row) x = mul_mod(x, c, M);
}

// row -= q * other
void subtract_multiple(Vec& row, const Vec& other, Residue q, Residue M, std::size_t from) {
  if (q == 0) return;
  for (std::size_t j = from; j < row.size(); ++j)
    if (other[j] != 0) row[j] = sub_mod(row[j], mul_mod(q, other[j], M), M);
}

}  // namespace

HowellForm howell_form(std::vector<Vec> generators, std::size_t width, Residue M) {
  if (M < 1 || M > kMaxModulus) throw Error("ModulusOverflow", "Howell modulus " + std::to_string(M));
  HowellForm h;
  h.modulus = M;
  h.width = width;

  std::vector<Vec> work;
  work.reserve(generators.size());
  for (auto& g : generators) {
    if (g.size() != width) throw Error("DimensionMismatch", "Howell generator width");
    for (auto& x : g) x = mod(x, M);
    if (!is_zero(g)) work.push_back(std::move(g));
  }
  if (M == 1) return h;

  for (std::size_t c = 0; c < width && !work.empty(); ++c) {
    std::optional<Vec> pivot;
    std::vector<Vec> next;
    next.reserve(work.size() + 1);
    for (auto& w : work) {
      if (w[c] == 0) {
        next.push_back(std::move(w));
        continue;
      }
      if (!pivot) {
        pivot = std::move(w);
        continue;
      }
      Vec& p = *pivot;
      auto [g, s, t] = extended_gcd(p[c], w[c]);
      Residue pa = p[c] / g, wa = w[c] / g;
      Residue sm = mod(s, M), tm = mod(t, M);
      Vec np(width), nw(width);
      for (std::size_t j = c; j < width; ++j) {
        np[j] = add_mod(mul_mod(sm, p[j], M), mul_mod(tm, w[j], M), M);
        nw[j] = sub_mod(mul_mod(wa, p[j], M), mul_mod(pa, w[j], M), M);
      }
      p = std::move(np);
      if (!is_zero(nw)) next.push_back(std::move(nw));
    }
    if (pivot) {
      Vec& p = *pivot;
      scale_row(p, normalizing_unit(p[c], M), M);
      Residue g = p[c];
      Vec annihilated = p;
      scale_row(annihilated, M / g, M);
      if (!is_zero(annihilated)) next.push_back(std::move(annihilated));
      h.rows.push_back(std::move(p));
      h.leads.push_back(c);
    }
    work = std::move(next);
  }

  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    std::size_t c = h.leads[i];
    Residue g = h.rows[i][c];
    for (std::size_t j = 0; j < i; ++j) {
      Residue q = h.rows[j][c] / g;
      subtract_multiple(h.rows[j], h.rows[i], q, M, c);
    }
  }
  return h;
}

Vec HowellForm::reduce(Vec v) const {
  for (auto& x : v) x = mod(x, modulus);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::size_t c = leads[i];
    Residue q = v[c] / rows[i][c];
    subtract_multiple(v, rows[i], q, modulus, c);
  }
  return v;
}

bool HowellForm::contains(const Vec& v) const { return is_zero(reduce(v)); }

Integer HowellForm::span_order() const {
  Integer n = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) n *= static_cast<long>(modulus / lead_value(i));
  return n;
}

}  // namespace hsep::exactalg
