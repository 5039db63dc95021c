#include "hsep/error.hpp"
#include "hsep/exactalg.hpp"

#include <algorithm>
#include <functional>

namespace hsep::exactalg {

Vec FinAbPresentation::project(const Vec& original) const {
  if (original.size() != generator_count()) throw Error("DimensionMismatch", "project: wrong coordinate count");
  Vec out(rank(), 0);
  for (std::size_t j = 0; j < original.size(); ++j) {
    Residue x = original[j];
    if (x == 0) continue;
    const Vec& col = project_cols_[j];
    for (std::size_t c = 0; c < out.size(); ++c)
      if (col[c] != 0) out[c] = add_mod(out[c], mul_mod(mod(x, moduli_[c]), col[c], moduli_[c]), moduli_[c]);
  }
  return out;
}

Vec FinAbPresentation::lift(const Vec& canonical) const {
  if (canonical.size() != rank()) throw Error("DimensionMismatch", "lift: wrong coordinate count");
  Vec out(generator_count(), 0);
  for (std::size_t c = 0; c < canonical.size(); ++c) {
    Residue x = canonical[c];
    if (x == 0) continue;
    const Vec& col = lift_cols_[c];
    for (std::size_t j = 0; j < out.size(); ++j)
      if (col[j] != 0)
        out[j] = add_mod(out[j], mul_mod(mod(x, generator_moduli_[j]), col[j], generator_moduli_[j]),
                         generator_moduli_[j]);
  }
  return out;
}

FinAbPresentation FinAbPresentation::direct_sum(const std::vector<Residue>& generator_moduli) {
  return cokernel_of_rows({}, generator_moduli);
}

FinAbPresentation cokernel(const IntegerMatrix& relations, const std::vector<Residue>& generator_moduli) {
  if (relations.cols() > 0 && relations.rows() != generator_moduli.size())
    throw Error("DimensionMismatch", "relation vectors must have one entry per generator");
  Residue M = lcm_of(generator_moduli);
  std::vector<Vec> rows;
  rows.reserve(relations.cols());
  for (std::size_t c = 0; c < relations.cols(); ++c) {
    Vec v(relations.rows());
    for (std::size_t r = 0; r < relations.rows(); ++r) v[r] = mod(relations(r, c), M);
    rows.push_back(std::move(v));
  }
  return cokernel_of_rows(rows, generator_moduli);
}

// Howell form over Z/M (M = exponent) eliminates every generator whose
// relation row has a unit lead; the leftover block with non-unit leads is
// diagonalised by a small Smith normal form; untouched generators are Z/M.
FinAbPresentation cokernel_of_rows(const std::vector<Vec>& relations, const std::vector<Residue>& generator_moduli) {
  const std::size_t n = generator_moduli.size();
  for (Residue m : generator_moduli)
    if (m < 1) throw Error("InvalidModulus", "generator modulus must be >= 1");
  FinAbPresentation out;
  out.generator_moduli_ = generator_moduli;
  if (n == 0) return out;

  const Residue M = lcm_of(generator_moduli);
  if (M == 1) {
    out.project_cols_.assign(n, Vec{});
    return out;
  }
  std::vector<Vec> gens;
  gens.reserve(relations.size() + n);
  for (const auto& r : relations) {
    if (r.size() != n) throw Error("DimensionMismatch", "relation vector length");
    gens.push_back(r);
  }
  for (std::size_t j = 0; j < n; ++j)
    if (generator_moduli[j] != M) {
      Vec v(n, 0);
      v[j] = generator_moduli[j] % M;
      gens.push_back(std::move(v));
    }
  HowellForm h = howell_form(std::move(gens), n, M);

  std::vector<char> eliminated(n, 0);
  std::vector<std::size_t> unit_rows, nonunit_rows;
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    if (h.lead_value(i) == 1) {
      eliminated[h.leads[i]] = 1;
      unit_rows.push_back(i);
    } else {
      nonunit_rows.push_back(i);
    }
  }
  // block = surviving generators touched by a non-unit relation
  std::vector<char> in_block(n, 0);
  for (std::size_t i : nonunit_rows)
    for (std::size_t j = 0; j < n; ++j)
      if (h.rows[i][j] != 0) in_block[j] = 1;
  std::vector<std::size_t> block, free_gens;
  for (std::size_t j = 0; j < n; ++j) {
    if (eliminated[j]) continue;
    (in_block[j] ? block : free_gens).push_back(j);
  }

  // Smith normal form of the block: generators x relations (plus M*I).
  const std::size_t b = block.size();
  std::vector<Residue> block_moduli;
  IntegerMatrix U, Ui;
  if (b > 0) {
    IntegerMatrix rel(b, nonunit_rows.size() + b);
    for (std::size_t k = 0; k < nonunit_rows.size(); ++k)
      for (std::size_t r = 0; r < b; ++r) rel(r, k) = static_cast<long>(h.rows[nonunit_rows[k]][block[r]]);
    for (std::size_t r = 0; r < b; ++r) rel(r, nonunit_rows.size() + r) = static_cast<long>(M);
    SmithDecomposition snf = smith_normal_form(rel);
    U = std::move(snf.U);
    Ui = std::move(snf.U_inverse);
    for (std::size_t i = 0; i < b; ++i) block_moduli.push_back(static_cast<Residue>(snf.D(i, i).get_si()));
  }

  // canonical coordinates: nontrivial block factors, then free generators.
  std::vector<std::size_t> block_coords;
  for (std::size_t i = 0; i < b; ++i)
    if (block_moduli[i] != 1) {
      block_coords.push_back(i);
      out.moduli_.push_back(block_moduli[i]);
    }
  for (std::size_t k = 0; k < free_gens.size(); ++k) out.moduli_.push_back(M);
  const std::size_t d = out.moduli_.size();

  auto project_survivor_vector = [&](const Vec& y) {
    // y: coordinates on surviving generators (indexed by original j)
    Vec canon(d, 0);
    for (std::size_t ci = 0; ci < block_coords.size(); ++ci) {
      Residue dm = out.moduli_[ci];
      std::size_t i = block_coords[ci];
      Residue acc = 0;
      for (std::size_t r = 0; r < b; ++r) {
        Residue yr = y[block[r]];
        if (yr == 0) continue;
        acc = add_mod(acc, mul_mod(mod(U(i, r), dm), mod(yr, dm), dm), dm);
      }
      canon[ci] = acc;
    }
    for (std::size_t k = 0; k < free_gens.size(); ++k) canon[block_coords.size() + k] = mod(y[free_gens[k]], M);
    return canon;
  };

  out.project_cols_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec y(n, 0);
    if (!eliminated[j]) {
      y[j] = 1;
    } else {
      // e_j = -(rest of its unit row)
      const Vec* row = nullptr;
      for (std::size_t i : unit_rows)
        if (h.leads[i] == j) row = &h.rows[i];
      for (std::size_t k = j + 1; k < n; ++k)
        if ((*row)[k] != 0) y[k] = sub_mod(0, (*row)[k], M);
    }
    out.project_cols_[j] = project_survivor_vector(y);
  }

  out.lift_cols_.resize(d);
  for (std::size_t ci = 0; ci < block_coords.size(); ++ci) {
    Vec col(n, 0);
    for (std::size_t r = 0; r < b; ++r) col[block[r]] = mod(Ui(r, block_coords[ci]), generator_moduli[block[r]]);
    out.lift_cols_[ci] = std::move(col);
  }
  for (std::size_t k = 0; k < free_gens.size(); ++k) {
    Vec col(n, 0);
    col[free_gens[k]] = 1 % generator_moduli[free_gens[k]];
    out.lift_cols_[block_coords.size() + k] = std::move(col);
  }
  return out;
}

FinAbPresentation cokernel_by_smith(const IntegerMatrix& relations, const std::vector<Residue>& generator_moduli) {
  const std::size_t n = generator_moduli.size();
  if (relations.cols() > 0 && relations.rows() != n)
    throw Error("DimensionMismatch", "relation vectors must have one entry per generator");
  FinAbPresentation out;
  out.generator_moduli_ = generator_moduli;
  if (n == 0) return out;
  IntegerMatrix full(n, relations.cols() + n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < relations.cols(); ++c) full(r, c) = relations(r, c);
    full(r, relations.cols() + r) = static_cast<long>(generator_moduli[r]);
  }
  SmithDecomposition snf = smith_normal_form(full);
  std::vector<std::size_t> coords;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& dii = snf.D(i, i);
    if (dii == 1) continue;
    if (!dii.fits_slong_p() || dii > kMaxModulus) throw Error("ModulusOverflow", "invariant factor too large");
    coords.push_back(i);
    out.moduli_.push_back(static_cast<Residue>(dii.get_si()));
  }
  out.project_cols_.assign(n, Vec(coords.size(), 0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t c = 0; c < coords.size(); ++c) out.project_cols_[j][c] = mod(snf.U(coords[c], j), out.moduli_[c]);
  for (std::size_t c = 0; c < coords.size(); ++c) {
    Vec col(n, 0);
    for (std::size_t j = 0; j < n; ++j) col[j] = mod(snf.U_inverse(j, coords[c]), generator_moduli[j]);
    out.lift_cols_.push_back(std::move(col));
  }
  return out;
}

// ---- subgroups -------------------------------------------------------------

Subgroup::Subgroup(std::vector<Residue> ambient_moduli, const std::vector<Vec>& generators)
    : ambient_(std::move(ambient_moduli)) {
  for (Residue m : ambient_)
    if (m < 1) throw Error("InvalidModulus", "ambient modulus must be >= 1");
  modulus_ = lcm_of(ambient_);
  std::vector<Vec> scaled;
  scaled.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.size() != ambient_.size()) throw Error("DimensionMismatch", "subgroup generator length");
    scaled.push_back(scale_up(g));
  }
  howell_ = howell_form(std::move(scaled), ambient_.size(), modulus_);
  for (std::size_t i = 0; i < howell_.rows.size(); ++i) {
    basis_.push_back(scale_down(howell_.rows[i]));
    radix_.push_back(modulus_ / howell_.lead_value(i));
  }
}

Vec Subgroup::scale_up(const Vec& v) const {
  Vec out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out[j] = mul_mod(mod(v[j], ambient_[j]), modulus_ / ambient_[j], modulus_);
  return out;
}

Vec Subgroup::scale_down(const Vec& v) const {
  Vec out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out[j] = v[j] / (modulus_ / ambient_[j]);
  return out;
}

Integer Subgroup::order() const { return howell_.span_order(); }

bool Subgroup::contains(const Vec& v) const { return howell_.contains(scale_up(v)); }

Vec Subgroup::reduce(const Vec& v) const { return scale_down(howell_.reduce(scale_up(v))); }

void Subgroup::for_each_translate(const Vec& p, const Visitor& visit) const {
  const std::size_t levels = howell_.rows.size();
  const Residue M = modulus_;
  std::vector<Residue> digits(levels, 0);
  Vec start = howell_.reduce(scale_up(p));
  bool keep_going = true;

  // Depth-first: at each level the lead coordinate runs through
  // (v[c] mod g) + k*g, k = 0..radix-1, which is increasing in k.
  std::function<void(std::size_t, Vec&)> walk = [&](std::size_t level, Vec& v) {
    if (!keep_going) return;
    if (level == levels) {
      keep_going = visit(scale_down(v), digits);
      return;
    }
    const Vec& row = howell_.rows[level];
    const std::size_t c = howell_.leads[level];
    const Residue g = row[c];
    const Residue r = radix_[level];
    Residue shift = v[c] / g;  // v[c] = (v[c] mod g) + shift*g
    // start at digit t0 = -shift (mod r)
    Residue t0 = mod(-shift, r);
    Vec cur = v;
    for (std::size_t j = c; j < cur.size(); ++j)
      if (row[j] != 0) cur[j] = add_mod(cur[j], mul_mod(t0, row[j], M), M);
    for (Residue k = 0; k < r && keep_going; ++k) {
      digits[level] = mod(t0 + k, r);
      walk(level + 1, cur);
      for (std::size_t j = c; j < cur.size(); ++j)
        if (row[j] != 0) cur[j] = add_mod(cur[j], row[j], M);
    }
  };
  walk(0, start);
}

Integer span_order(const std::vector<Residue>& moduli, const std::vector<Vec>& gens) {
  return Subgroup(moduli, gens).order();
}

}  // namespace hsep::exactalg
