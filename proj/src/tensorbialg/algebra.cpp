#include <algorithm>

#include "hsep/error.hpp"
#include "hsep/tensorbialg.hpp"

namespace hsep::tensorbialg {

// ---- fields ------------------------------------------------------------------

ExactField ExactField::prime(long p) {
  if (p < 2 || p > 97) throw Error("InvalidField", "prime fields are supported for 2 <= p <= 97, got " + std::to_string(p));
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw Error("InvalidField", std::to_string(p) + " is not prime");
  return ExactField(p);
}

ExactField ExactField::parse(const std::string& spec) {
  if (spec == "q" || spec == "Q") return rationals();
  std::size_t used = 0;
  long p = 0;
  try {
    p = std::stol(spec, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != spec.size()) throw Error("InvalidField", "expected q or a prime, got '" + spec + "'");
  return prime(p);
}

std::string ExactField::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

Scalar ExactField::normalize(Scalar a) const {
  a.canonicalize();
  if (p_ == 0) return a;
  mpz_class num = a.get_num(), den = a.get_den();
  mpz_class pz = p_;
  if (den != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
      throw Error("DivisionByZero", "denominator divisible by " + std::to_string(p_));
    num *= inv;
  }
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
  return Scalar(r);
}

Scalar ExactField::inverse(const Scalar& a) const {
  Scalar n = normalize(a);
  if (n == 0) throw Error("DivisionByZero", "inverse of zero in " + name());
  if (p_ == 0) return 1 / n;
  mpz_class inv, pz = p_;
  mpz_invert(inv.get_mpz_t(), n.get_num().get_mpz_t(), pz.get_mpz_t());
  return Scalar(inv);
}

std::string ExactField::format(const Scalar& a) const { return normalize(a).get_str(); }

// ---- graded spaces and maps ------------------------------------------------------

std::size_t GradedSpace::total_dim() const {
  std::size_t t = 0;
  for (auto d : dims) t += d;
  return t;
}

std::size_t GradedSpace::offset(std::size_t n) const {
  std::size_t t = 0;
  for (std::size_t i = 0; i < n; ++i) t += dims[i];
  return t;
}

Vector GradedMap::apply(const ExactField& k, const Vector& x) const {
  Vector out(target.total_dim(), 0);
  for (std::size_t n = 0; n < blocks.size(); ++n) {
    std::size_t so = source.offset(n), to = target.offset(n);
    for (std::size_t r = 0; r < target.dims[n]; ++r) {
      Scalar acc = 0;
      for (std::size_t c = 0; c < source.dims[n]; ++c)
        if (x[so + c] != 0 && blocks[n][r][c] != 0) acc += blocks[n][r][c] * x[so + c];
      out[to + r] = k.normalize(acc);
    }
  }
  return out;
}

GradedMap compose(const ExactField& k, const GradedMap& second, const GradedMap& first) {
  if (first.target.dims != second.source.dims) throw Error("DimensionMismatch", "graded composition");
  GradedMap out{first.source, second.target, {}};
  for (std::size_t n = 0; n < first.blocks.size(); ++n) {
    const auto &A = second.blocks[n], &B = first.blocks[n];
    Matrix C(second.target.dims[n], Vector(first.source.dims[n], 0));
    for (std::size_t i = 0; i < C.size(); ++i)
      for (std::size_t j = 0; j < first.source.dims[n]; ++j) {
        Scalar acc = 0;
        for (std::size_t l = 0; l < first.target.dims[n]; ++l)
          if (A[i][l] != 0 && B[l][j] != 0) acc += A[i][l] * B[l][j];
        C[i][j] = k.normalize(acc);
      }
    out.blocks.push_back(std::move(C));
  }
  return out;
}

bool equal(const ExactField& k, const GradedMap& a, const GradedMap& b) {
  if (a.source.dims != b.source.dims || a.target.dims != b.target.dims) return false;
  for (std::size_t n = 0; n < a.blocks.size(); ++n)
    for (std::size_t i = 0; i < a.blocks[n].size(); ++i)
      for (std::size_t j = 0; j < a.blocks[n][i].size(); ++j)
        if (k.normalize(a.blocks[n][i][j] - b.blocks[n][i][j]) != 0) return false;
  return true;
}

GradedMap identity_map(const GradedSpace& s) {
  GradedMap m{s, s, {}};
  for (auto d : s.dims) {
    Matrix I(d, Vector(d, 0));
    for (std::size_t i = 0; i < d; ++i) I[i][i] = 1;
    m.blocks.push_back(std::move(I));
  }
  return m;
}

// ---- tensor bialgebra --------------------------------------------------------------

TruncatedTensorBialgebra TruncatedTensorBialgebra::build(const ExactField& k, std::vector<std::string> letters,
                                                         std::vector<std::size_t> degrees, std::size_t N,
                                                         std::size_t guard) {
  if (letters.size() != degrees.size()) throw Error("DimensionMismatch", "one degree per letter");
  for (auto d : degrees)
    if (d == 0) throw Error("InvalidDegree", "letters need internal degree >= 1");

  std::vector<std::size_t> dims(N + 1, 0);
  dims[0] = 1;
  std::size_t total = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    for (auto d : degrees)
      if (d <= n) dims[n] += dims[n - d];
    total += dims[n];
    if (total > guard)
      throw Error("DimensionOverflow", "truncated tensor algebra needs more than " + std::to_string(guard) +
                                           " basis words by degree " + std::to_string(n));
  }

  TruncatedTensorBialgebra B;
  B.k_ = k;
  B.N_ = N;
  B.letters_ = std::move(letters);
  B.degrees_ = std::move(degrees);

  B.alphabet_.dims.assign(N + 1, 0);
  B.alphabet_.labels.assign(N + 1, {});
  for (std::size_t n = 1; n <= N; ++n)
    for (std::size_t l = 0; l < B.letters_.size(); ++l)
      if (B.degrees_[l] == n) {
        ++B.alphabet_.dims[n];
        B.alphabet_.labels[n].push_back(B.letters_[l]);
      }

  std::vector<std::vector<Word>> by_degree(N + 1);
  by_degree[0].push_back({});
  for (std::size_t n = 1; n <= N; ++n)
    for (std::size_t l = 0; l < B.letters_.size(); ++l) {
      if (B.degrees_[l] > n) continue;
      for (const auto& rest : by_degree[n - B.degrees_[l]]) {
        Word w{l};
        w.insert(w.end(), rest.begin(), rest.end());
        by_degree[n].push_back(std::move(w));
      }
    }
  B.carrier_.dims = dims;
  B.carrier_.labels.assign(N + 1, {});
  for (std::size_t n = 0; n <= N; ++n) {
    std::sort(by_degree[n].begin(), by_degree[n].end());
    for (auto& w : by_degree[n]) {
      B.index_[w] = B.words_.size();
      B.carrier_.labels[n].push_back(B.word_label(w));
      B.words_.push_back(std::move(w));
      B.word_degree_.push_back(n);
    }
  }
  return B;
}

std::size_t TruncatedTensorBialgebra::index_of(const Word& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? dim() : it->second;
}

std::string TruncatedTensorBialgebra::word_label(const Word& w) const {
  if (w.empty()) return "1";
  bool short_letters = std::all_of(w.begin(), w.end(), [&](std::size_t l) { return letters_[l].size() == 1; });
  std::string s = short_letters ? "" : "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (short_letters || i == 0 ? "" : "|") + letters_[w[i]];
  return short_letters ? s : s + "]";
}

std::string TruncatedTensorBialgebra::format(const Vector& x) const {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Scalar c = k_.normalize(x[i]);
    if (c == 0) continue;
    bool negative = c < 0;
    if (negative) c = -c;
    std::string term = (c == 1 ? "" : c.get_str() + "*") + label(i);
    if (s.empty())
      s = (negative ? "-" : "") + term;
    else
      s += (negative ? " - " : " + ") + term;
  }
  return s.empty() ? "0" : s;
}

Vector TruncatedTensorBialgebra::basis(std::size_t i) const {
  Vector v(dim(), 0);
  v[i] = 1;
  return v;
}

Vector TruncatedTensorBialgebra::multiply(const Vector& a, const Vector& b) const {
  Vector out(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j] == 0 || word_degree_[i] + word_degree_[j] > N_) continue;
      Word w = words_[i];
      w.insert(w.end(), words_[j].begin(), words_[j].end());
      out[index_of(w)] += a[i] * b[j];
    }
  }
  for (auto& c : out) c = k_.normalize(c);
  return out;
}

TensorSquare TruncatedTensorBialgebra::coproduct(const Vector& x) const {
  TensorSquare out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    const Word& w = words_[i];
    const std::size_t len = w.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
      Word left, right;
      for (std::size_t p = 0; p < len; ++p) (mask >> p & 1 ? left : right).push_back(w[p]);
      out[{index_of(left), index_of(right)}] += x[i];
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it->second = k_.normalize(it->second);
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

TensorSquare TruncatedTensorBialgebra::primitivity_defect(const Vector& x) const {
  TensorSquare d = coproduct(x);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    d[{i, 0}] -= x[i];
    d[{0, i}] -= x[i];
  }
  for (auto it = d.begin(); it != d.end();) {
    it->second = k_.normalize(it->second);
    it = it->second == 0 ? d.erase(it) : std::next(it);
  }
  return d;
}

Matrix TruncatedTensorBialgebra::alpha(std::size_t n) const {
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < dim(); ++i)
    if (words_[i].size() == n) cols.push_back(i);
  Matrix m(dim(), Vector(cols.size(), 0));
  for (std::size_t c = 0; c < cols.size(); ++c) m[cols[c]][c] = 1;
  return m;
}

GradedMap TruncatedTensorBialgebra::omega() const {
  GradedMap m{carrier_, alphabet_, {}};
  for (std::size_t n = 0; n <= N_; ++n) m.blocks.emplace_back(alphabet_.dims[n], Vector(carrier_.dims[n], 0));
  // letters sit in the alphabet in degree order, in their original relative order
  std::vector<std::size_t> slot(letters_.size());
  std::vector<std::size_t> seen(N_ + 1, 0);
  for (std::size_t l = 0; l < letters_.size(); ++l) slot[l] = seen[degrees_[l]]++;
  for (std::size_t i = 0; i < dim(); ++i)
    if (words_[i].size() == 1) {
      std::size_t l = words_[i][0], n = degrees_[l];
      m.blocks[n][slot[l]][i - carrier_.offset(n)] = 1;
    }
  return m;
}

std::string TruncatedTensorBialgebra::check_bialgebra_laws() const {
  const std::size_t n = dim();
  auto eq = [&](const Vector& a, const Vector& b) { return a == b; };
  for (std::size_t i = 0; i < n; ++i) {
    Vector e = basis(i);
    if (!eq(multiply(unit(), e), e) || !eq(multiply(e, unit()), e)) return "unit law at " + label(i);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (word_degree_[a] + word_degree_[b] > N_) continue;
      Vector ab = multiply(basis(a), basis(b));
      for (std::size_t c = 0; c < n; ++c) {
        if (word_degree_[a] + word_degree_[b] + word_degree_[c] > N_) continue;
        if (!eq(multiply(ab, basis(c)), multiply(basis(a), multiply(basis(b), basis(c)))))
          return "associativity at (" + label(a) + ", " + label(b) + ", " + label(c) + ")";
      }
    }
  for (std::size_t i = 0; i < n; ++i) {
    TensorSquare d = coproduct(basis(i));
    Vector left(n, 0), right(n, 0);
    for (const auto& [p, c] : d) {
      if (p.first == 0) left[p.second] += c;
      if (p.second == 0) right[p.first] += c;
    }
    for (auto& c : left) c = k_.normalize(c);
    for (auto& c : right) c = k_.normalize(c);
    if (!eq(left, basis(i)) || !eq(right, basis(i))) return "counit law at " + label(i);

    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> l3, r3;
    for (const auto& [p, c] : d) {
      for (const auto& [q, c2] : coproduct(basis(p.first))) l3[{q.first, q.second, p.second}] += c * c2;
      for (const auto& [q, c2] : coproduct(basis(p.second))) r3[{p.first, q.first, q.second}] += c * c2;
    }
    auto clean = [&](auto& m) {
      for (auto it = m.begin(); it != m.end();) {
        it->second = k_.normalize(it->second);
        it = it->second == 0 ? m.erase(it) : std::next(it);
      }
    };
    clean(l3);
    clean(r3);
    if (l3 != r3) return "coassociativity at " + label(i);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (word_degree_[a] + word_degree_[b] > N_) continue;
      TensorSquare lhs = coproduct(multiply(basis(a), basis(b)));
      TensorSquare rhs;
      // (x (x) y)(x' (x) y') = xx' (x) yy', trivial braiding
      for (const auto& [p, c] : coproduct(basis(a)))
        for (const auto& [q, c2] : coproduct(basis(b))) {
          if (word_degree_[p.first] + word_degree_[q.first] > N_ || word_degree_[p.second] + word_degree_[q.second] > N_)
            continue;
          Word x = words_[p.first], y = words_[p.second];
          x.insert(x.end(), words_[q.first].begin(), words_[q.first].end());
          y.insert(y.end(), words_[q.second].begin(), words_[q.second].end());
          rhs[{index_of(x), index_of(y)}] += c * c2;
        }
      for (auto it = rhs.begin(); it != rhs.end();) {
        it->second = k_.normalize(it->second);
        it = it->second == 0 ? rhs.erase(it) : std::next(it);
      }
      if (lhs != rhs) return "coproduct not multiplicative at (" + label(a) + ", " + label(b) + ")";
    }
  return "";
}

TruncatedTensorBialgebra build_truncated(std::size_t V_dim, const ExactField& k, std::size_t N, std::size_t guard) {
  if (N < 1) throw Error("InvalidDegree", "truncation degree must be >= 1");
  std::vector<std::string> letters;
  static const char* names[] = {"v", "w", "u"};
  for (std::size_t i = 0; i < V_dim; ++i) letters.push_back(V_dim <= 3 ? names[i] : "x" + std::to_string(i + 1));
  auto B = TruncatedTensorBialgebra::build(k, letters, std::vector<std::size_t>(V_dim, 1), N, guard);
  // coassociativity costs 3^length per word; above this size the laws are left to the tests
  if (B.dim() <= 512) {
    std::string failure = B.check_bialgebra_laws();
    if (!failure.empty()) throw Error("InternalError", "tensor bialgebra law fails: " + failure);
  }
  return B;
}

// ---- primitives ------------------------------------------------------------------------

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols, const ExactField& k) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && k.normalize(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Scalar inv = k.inverse(m[row][c]);
    for (auto& x : m[row]) x = k.normalize(x * inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      Scalar f = m[r][c];
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = k.normalize(m[r][j] - f * m[row][j]);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

Vector Primitives::coordinates(const Vector& x) const {
  Vector coords;
  for (std::size_t f : free_columns) coords.push_back(x[f]);
  Vector back(x.size(), 0);
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (std::size_t i = 0; i < x.size(); ++i) back[i] += coords[b] * basis[b][i];
  for (std::size_t i = 0; i < x.size(); ++i)
    if (field.normalize(back[i] - x[i]) != 0) throw Error("NotPrimitive", "element outside the span of the primitives");
  return coords;
}

Primitives primitives(const TruncatedTensorBialgebra& B) {
  const ExactField& k = B.field();
  const std::size_t N = B.truncation();
  const auto& carrier = B.carrier();
  Primitives P;
  P.field = k;
  P.space.dims.assign(N + 1, 0);
  P.space.labels.assign(N + 1, {});

  for (std::size_t n = 0; n <= N; ++n) {
    const std::size_t off = carrier.offset(n), cols = carrier.dims[n];
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> row_of;
    Matrix m;
    for (std::size_t c = 0; c < cols; ++c)
      for (const auto& [pair, coef] : B.primitivity_defect(B.basis(off + c))) {
        auto [it, fresh] = row_of.emplace(pair, m.size());
        if (fresh) m.emplace_back(cols, 0);
        m[it->second][c] = coef;
      }
    auto pivots = rref(m, cols, k);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t f = 0; f < cols; ++f) {
      if (is_pivot[f]) continue;
      Vector v(B.dim(), 0);
      v[off + f] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r) v[off + pivots[r]] = k.normalize(-m[r][f]);
      P.space.labels[n].push_back(B.format(v));
      P.basis.push_back(std::move(v));
      P.free_columns.push_back(off + f);
      ++P.space.dims[n];
    }
  }

  GradedSpace plus = carrier;
  plus.dims[0] = 0;
  plus.labels[0].clear();
  P.xi = {P.space, carrier, {}};
  P.xi_hat = {P.space, plus, {}};
  P.zeta = {plus, carrier, {}};
  std::size_t b = 0;
  for (std::size_t n = 0; n <= N; ++n) {
    Matrix xi(carrier.dims[n], Vector(P.space.dims[n], 0));
    for (std::size_t j = 0; j < P.space.dims[n]; ++j, ++b) {
      if (P.basis[b][0] != 0) throw Error("InternalError", "primitive with nonzero counit");
      for (std::size_t i = 0; i < carrier.dims[n]; ++i) xi[i][j] = P.basis[b][carrier.offset(n) + i];
    }
    Matrix zeta(carrier.dims[n], Vector(plus.dims[n], 0));
    for (std::size_t i = 0; i < plus.dims[n]; ++i) zeta[i][i] = 1;
    P.xi_hat.blocks.push_back(n == 0 ? Matrix{} : xi);
    P.zeta.blocks.push_back(std::move(zeta));
    P.xi.blocks.push_back(std::move(xi));
  }
  if (!equal(k, compose(k, P.zeta, P.xi_hat), P.xi)) throw Error("InternalError", "xi does not factor through zeta");
  return P;
}

}  // namespace hsep::tensorbialg
