#include "hsep/error.hpp"
#include "hsep/exactalg.hpp"

#include <sstream>

namespace hsep::exactalg {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("DimensionMismatch", "ragged row " + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error("DimensionMismatch", "matrix product inner dimensions");
  IntegerMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

bool IntegerMatrix::operator==(const IntegerMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

Integer IntegerMatrix::determinant() const {
  if (rows_ != cols_) throw Error("DimensionMismatch", "determinant of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntegerMatrix a = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    const Integer& s = (*this)(src, c);
    if (s != 0) (*this)(dst, c) += factor * s;
  }
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const Integer& s = (*this)(r, src);
    if (s != 0) (*this)(r, dst) += factor * s;
  }
}

void IntegerMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntegerMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "," : "") << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (const auto& d : diagonal())
    if (d != 0) ++r;
  return r;
}

namespace {

// Row and column operations applied to D, mirrored on U (rows), V (columns)
// and on the inverses so that D = U * source * V holds throughout.
struct SmithState {
  IntegerMatrix D, U, V, Ui, Vi;

  void swap_rows(std::size_t a, std::size_t b) {
    D.swap_rows(a, b);
    U.swap_rows(a, b);
    Ui.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    D.swap_cols(a, b);
    V.swap_cols(a, b);
    Vi.swap_rows(a, b);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer& c) {
    D.add_row_multiple(dst, src, c);
    U.add_row_multiple(dst, src, c);
    Ui.add_col_multiple(src, dst, -c);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& c) {
    D.add_col_multiple(dst, src, c);
    V.add_col_multiple(dst, src, c);
    Vi.add_row_multiple(src, dst, -c);
  }
  void negate_row(std::size_t r) {
    D.negate_row(r);
    U.negate_row(r);
    Ui.negate_col(r);
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& A) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  SmithState s{A, IntegerMatrix::identity(m), IntegerMatrix::identity(n), IntegerMatrix::identity(m),
               IntegerMatrix::identity(n)};

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    bool exhausted = false;
    while (true) {
      bool found = false;
      std::size_t pr = 0, pc = 0;
      Integer best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const Integer& v = s.D(i, j);
          if (v == 0) continue;
          Integer a = abs(v);
          if (!found || a < best) {
            found = true;
            best = a;
            pr = i;
            pc = j;
          }
        }
      if (!found) {
        exhausted = true;
        break;
      }
      s.swap_rows(t, pr);
      s.swap_cols(t, pc);

      bool clean = true;
      const Integer pivot = s.D(t, t);
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s.D(i, t) == 0) continue;
        Integer q = s.D(i, t) / pivot;  // truncating division
        s.add_row(i, t, -q);
        if (s.D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s.D(t, j) == 0) continue;
        Integer q = s.D(t, j) / pivot;
        s.add_col(j, t, -q);
        if (s.D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (s.D(i, j) % pivot != 0) {
            s.add_row(t, i, Integer(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (exhausted) break;
    if (s.D(t, t) < 0) s.negate_row(t);
  }

  return SmithDecomposition{std::move(s.U), std::move(s.D), std::move(s.V), A, std::move(s.Ui), std::move(s.Vi)};
}

}  // namespace hsep::exactalg
