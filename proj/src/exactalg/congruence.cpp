#include "hsep/error.hpp"
#include "hsep/exactalg.hpp"

namespace hsep::exactalg {

AffineSolutionSet::AffineSolutionSet(std::vector<Residue> ambient, std::optional<Vec> particular, Subgroup kernel)
    : ambient_(std::move(ambient)), kernel_(std::move(kernel)) {
  if (particular) particular_ = kernel_.reduce(*particular);
}

Integer AffineSolutionSet::size() const { return empty() ? Integer(0) : kernel_.order(); }

bool AffineSolutionSet::contains(const Vec& x) const {
  if (empty() || x.size() != ambient_.size()) return false;
  return kernel_.contains(sub(reduce(x, ambient_), *particular_, ambient_));
}

void AffineSolutionSet::for_each(const Subgroup::Visitor& visit) const {
  if (empty()) return;
  kernel_.for_each_translate(*particular_, visit);
}

std::vector<Vec> AffineSolutionSet::members() const {
  std::vector<Vec> out;
  for_each([&](const Vec& v, const std::vector<Residue>&) {
    out.push_back(v);
    return true;
  });
  return out;
}

bool AffineSolutionSet::operator==(const AffineSolutionSet& other) const {
  if (ambient_ != other.ambient_ || empty() != other.empty()) return false;
  if (empty()) return true;
  return *particular_ == *other.particular_ && kernel_.basis() == other.kernel_.basis();
}

namespace {

void validate(const CongruenceSystem& s) {
  const std::size_t r = s.rows.size();
  const std::size_t n = s.unknown_moduli.size();
  if (s.rhs.size() != r || s.row_moduli.size() != r)
    throw Error("DimensionMismatch", "congruence system: rows, rhs and row moduli disagree");
  for (Residue m : s.row_moduli)
    if (m < 1) throw Error("InvalidModulus", "row modulus must be >= 1");
  for (Residue u : s.unknown_moduli)
    if (u < 1) throw Error("InvalidModulus", "unknown modulus must be >= 1");
  for (std::size_t i = 0; i < r; ++i) {
    if (s.rows[i].size() != n) throw Error("DimensionMismatch", "congruence row " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j)
      if (mul_mod(s.unknown_moduli[j], mod(s.rows[i][j], s.row_moduli[i]), s.row_moduli[i]) != 0)
        throw Error("IllDefinedSystem", "coefficient " + std::to_string(i) + "," + std::to_string(j) +
                                            " does not respect the unknown's modulus");
  }
}

}  // namespace

// Rows [A'^T column j | 0 | e_j] and [-b' | 1 | 0] over Z/M, where A', b'
// are the equations rescaled to the common modulus M. After the Howell form,
// the rows whose first r coordinates vanish describe {(t, x) : A'x = t b'}.
AffineSolutionSet solve_congruences(const CongruenceSystem& s) {
  validate(s);
  const std::size_t r = s.rows.size();
  const std::size_t n = s.unknown_moduli.size();
  std::vector<Residue> all = s.row_moduli;
  all.insert(all.end(), s.unknown_moduli.begin(), s.unknown_moduli.end());
  const Residue M = lcm_of(all);

  const std::size_t width = r + 1 + n;
  std::vector<Vec> gens;
  gens.reserve(n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    Vec v(width, 0);
    for (std::size_t i = 0; i < r; ++i)
      v[i] = mul_mod(mod(s.rows[i][j], s.row_moduli[i]), M / s.row_moduli[i], M);
    v[r + 1 + j] = 1 % M;
    gens.push_back(std::move(v));
  }
  {
    Vec v(width, 0);
    for (std::size_t i = 0; i < r; ++i)
      v[i] = sub_mod(0, mul_mod(mod(s.rhs[i], s.row_moduli[i]), M / s.row_moduli[i], M), M);
    v[r] = 1 % M;
    gens.push_back(std::move(v));
  }
  HowellForm h = howell_form(std::move(gens), width, M);

  auto x_part = [&](const Vec& row) {
    Vec x(row.begin() + static_cast<std::ptrdiff_t>(r + 1), row.end());
    return reduce(std::move(x), s.unknown_moduli);
  };
  std::optional<Vec> particular;
  std::vector<Vec> kernel;
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    if (h.leads[i] == r && h.lead_value(i) == 1) particular = x_part(h.rows[i]);
    if (h.leads[i] > r) kernel.push_back(x_part(h.rows[i]));
  }
  if (M == 1) particular = Vec(n, 0);
  return AffineSolutionSet(s.unknown_moduli, particular, Subgroup(s.unknown_moduli, kernel));
}

// Integer system [A | -diag(m)] (x, y) = b; its solutions project onto x.
AffineSolutionSet solve_congruences_by_smith(const CongruenceSystem& s) {
  validate(s);
  const std::size_t r = s.rows.size();
  const std::size_t n = s.unknown_moduli.size();
  IntegerMatrix C(r, n + r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < n; ++j) C(i, j) = static_cast<long>(s.rows[i][j]);
    C(i, n + i) = -static_cast<long>(s.row_moduli[i]);
  }
  SmithDecomposition snf = smith_normal_form(C);
  std::vector<Integer> ub(r, Integer(0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) ub[i] += snf.U(i, k) * static_cast<long>(s.rhs[k]);

  const std::size_t rank = snf.rank();
  bool consistent = true;
  std::vector<Integer> z(n + r, Integer(0));
  for (std::size_t i = 0; i < r; ++i) {
    if (i < rank) {
      if (ub[i] % snf.D(i, i) != 0) consistent = false;
      else z[i] = ub[i] / snf.D(i, i);
    } else if (ub[i] != 0) {
      consistent = false;
    }
  }

  auto column_x = [&](const std::vector<Integer>& w) {
    Vec x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = mod(w[j], s.unknown_moduli[j]);
    return x;
  };
  std::optional<Vec> particular;
  if (consistent) {
    std::vector<Integer> w(n + r, Integer(0));
    for (std::size_t j = 0; j < n + r; ++j)
      for (std::size_t k = 0; k < rank; ++k) w[j] += snf.V(j, k) * z[k];
    particular = column_x(w);
  }
  std::vector<Vec> kernel;
  for (std::size_t k = rank; k < n + r; ++k) {
    std::vector<Integer> w(n + r);
    for (std::size_t j = 0; j < n + r; ++j) w[j] = snf.V(j, k);
    kernel.push_back(column_x(w));
  }
  return AffineSolutionSet(s.unknown_moduli, particular, Subgroup(s.unknown_moduli, kernel));
}

AffineSolutionSet solve_modular_system(const IntegerMatrix& A, const std::vector<Integer>& b,
                                       const std::vector<Integer>& moduli) {
  if (b.size() != A.rows() || moduli.size() != A.rows())
    throw Error("DimensionMismatch", "solve_modular_system: A, b and moduli disagree");
  CongruenceSystem s;
  for (const auto& m : moduli) {
    if (m < 1 || m > kMaxModulus) throw Error("InvalidModulus", "modulus " + m.get_str());
    s.row_moduli.push_back(static_cast<Residue>(m.get_si()));
  }
  const Residue L = lcm_of(s.row_moduli);
  s.unknown_moduli.assign(A.cols(), L);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    Vec row(A.cols());
    for (std::size_t j = 0; j < A.cols(); ++j) row[j] = mod(A(i, j), s.row_moduli[i]);
    s.rows.push_back(std::move(row));
    s.rhs.push_back(mod(b[i], s.row_moduli[i]));
  }
  return solve_congruences_by_smith(s);
}

}  // namespace hsep::exactalg
