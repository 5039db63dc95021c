#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "hsep/error.hpp"
#include "hsep/exactalg.hpp"

using namespace hsep::exactalg;

namespace {

// Brute-force orbit of the span of gens inside the direct sum.
std::set<Vec> brute_span(const std::vector<Residue>& moduli, const std::vector<Vec>& gens) {
  std::set<Vec> seen{Vec(moduli.size(), 0)};
  std::vector<Vec> frontier{Vec(moduli.size(), 0)};
  while (!frontier.empty()) {
    Vec v = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      Vec w = add(v, reduce(g, moduli), moduli);
      if (seen.insert(w).second) frontier.push_back(w);
    }
  }
  return seen;
}

std::vector<Vec> all_vectors(const std::vector<Residue>& moduli) {
  std::vector<Vec> out{Vec{}};
  for (Residue m : moduli) {
    std::vector<Vec> next;
    for (const auto& v : out)
      for (Residue x = 0; x < m; ++x) {
        Vec w = v;
        w.push_back(x);
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

bool is_diagonal_chain(const IntegerMatrix& D) {
  std::size_t k = std::min(D.rows(), D.cols());
  for (std::size_t i = 0; i < D.rows(); ++i)
    for (std::size_t j = 0; j < D.cols(); ++j)
      if (i != j && D(i, j) != 0) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (D(i, i) < 0) return false;
    if (i + 1 < k && D(i, i) != 0 && D(i + 1, i + 1) % D(i, i) != 0) return false;
    if (i + 1 < k && D(i, i) == 0 && D(i + 1, i + 1) != 0) return false;
  }
  return true;
}

IntegerMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("smith normal form of small matrices") {
  auto s = smith_normal_form(IntegerMatrix::from_rows({{2, 4}, {6, 8}}));
  CHECK(s.D == IntegerMatrix::from_rows({{2, 0}, {0, 4}}));
  CHECK(s.U * s.source * s.V == s.D);

  auto id = smith_normal_form(IntegerMatrix::identity(3));
  CHECK(id.D == IntegerMatrix::identity(3));

  auto zero = smith_normal_form(IntegerMatrix(2, 3));
  CHECK(zero.rank() == 0);
  CHECK(zero.D == IntegerMatrix(2, 3));
}

TEST_CASE("smith normal form invariants on random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
    IntegerMatrix A = random_matrix(rng, r, c, -9, 9);
    auto s = smith_normal_form(A);
    CHECK(s.U * A * s.V == s.D);
    CHECK(is_diagonal_chain(s.D));
    CHECK(s.U * s.U_inverse == IntegerMatrix::identity(r));
    CHECK(s.V * s.V_inverse == IntegerMatrix::identity(c));
    Integer du = s.U.determinant(), dv = s.V.determinant();
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    if (r == c) CHECK(abs(A.determinant()) == abs(s.D.determinant()));
  }
}

TEST_CASE("determinant") {
  CHECK(IntegerMatrix::from_rows({{1, 2}, {3, 4}}).determinant() == -2);
  CHECK(IntegerMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}).determinant() == 1);
  CHECK(IntegerMatrix::from_rows({{2, 0, 0}, {0, 3, 0}, {5, 7, 4}}).determinant() == 24);
}

TEST_CASE("residue helpers") {
  CHECK(mod(-3, 5) == 2);
  CHECK(*inverse_mod(3, 7) == 5);
  CHECK_FALSE(inverse_mod(2, 4).has_value());
  CHECK(checked_lcm(4, 6) == 12);
  CHECK_THROWS_AS(checked_lcm(Residue{1} << 40, (Residue{1} << 40) - 1), hsep::Error);
  auto e = extended_gcd(240, 46);
  CHECK(e.g == 2);
  CHECK(e.s * 240 + e.t * 46 == 2);
}

TEST_CASE("howell form spans the same subgroup as its generators") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    Residue M = std::vector<Residue>{2, 4, 6, 8, 9, 12}[rng() % 6];
    std::size_t w = 1 + rng() % 3;
    std::vector<Residue> mods(w, M);
    std::vector<Vec> gens;
    for (std::size_t k = 0; k < rng() % 4; ++k) {
      Vec v(w);
      for (auto& x : v) x = static_cast<Residue>(rng() % M);
      gens.push_back(v);
    }
    auto h = howell_form(gens, w, M);
    auto span = brute_span(mods, gens);
    CHECK(h.span_order() == static_cast<long>(span.size()));
    for (const auto& v : all_vectors(mods)) {
      CHECK(h.contains(v) == (span.count(v) == 1));
      // reduce picks one representative per coset
      Vec r = h.reduce(v);
      CHECK(span.count(sub(v, r, mods)) == 1);
    }
  }
}

TEST_CASE("cokernel examples") {
  auto c = FinAbPresentation::direct_sum({2, 3});
  CHECK(c.moduli() == std::vector<Residue>{6});
  CHECK(c.order() == 6);

  // Z/4 with 2g = 0
  auto d = cokernel(IntegerMatrix::from_rows({{2}}), {4});
  CHECK(d.moduli() == std::vector<Residue>{2});

  auto trivial = FinAbPresentation::direct_sum({});
  CHECK(trivial.rank() == 0);
  CHECK(trivial.order() == 1);

  auto ones = FinAbPresentation::direct_sum({1, 1});
  CHECK(ones.rank() == 0);
  CHECK(ones.project({0, 0}).empty());

  // Z^2 / <(2, 4), (6, 8)> restricted to (Z/24)^2
  auto e = cokernel(IntegerMatrix::from_rows({{2, 6}, {4, 8}}), {24, 24});
  CHECK(e.moduli() == std::vector<Residue>{2, 4});
}

TEST_CASE("cokernel routes agree and project is a well-defined surjection") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = 1 + rng() % 4, k = rng() % 4;
    std::vector<Residue> mods(n);
    for (auto& m : mods) m = std::vector<Residue>{1, 2, 3, 4, 6, 8, 9}[rng() % 7];
    IntegerMatrix rel = random_matrix(rng, n, k, -6, 6);
    auto fast = cokernel(rel, mods);
    auto ref = cokernel_by_smith(rel, mods);
    CHECK(fast.moduli() == ref.moduli());

    // oracle: |G| = |direct sum| / |span of relations|
    std::vector<Vec> rel_vecs;
    for (std::size_t c = 0; c < k; ++c) {
      Vec v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = mod(rel(i, c), mods[i]);
      rel_vecs.push_back(v);
    }
    auto span = brute_span(mods, rel_vecs);
    CHECK(fast.order() * static_cast<long>(span.size()) == order_of(mods));

    for (const auto* p : {&fast, &ref}) {
      for (const auto& v : rel_vecs) CHECK(is_zero(p->project(v)));
      for (std::size_t j = 0; j < n; ++j) {
        Vec e(n, 0);
        e[j] = mods[j] % mods[j];
        CHECK(is_zero(p->project(e)));
      }
      for (std::size_t c = 0; c < p->rank(); ++c) {
        Vec u(p->rank(), 0);
        u[c] = 1;
        CHECK(p->project(p->lift(u)) == u);
      }
    }
    // project is additive and its kernel is exactly the relation span
    for (const auto& v : all_vectors(mods)) CHECK(is_zero(fast.project(v)) == (span.count(v) == 1));
  }
}

TEST_CASE("congruence solver small cases") {
  CongruenceSystem one{{{1}}, {1}, {2}, {2}};
  auto s1 = solve_congruences(one);
  REQUIRE_FALSE(s1.empty());
  CHECK(*s1.particular() == Vec{1});
  CHECK(s1.size() == 1);

  CongruenceSystem none{{{2}}, {1}, {4}, {4}};
  CHECK(solve_congruences(none).empty());
  CHECK(solve_congruences_by_smith(none).empty());

  CongruenceSystem sum{{{1, 1}}, {0}, {2}, {2, 2}};
  auto s3 = solve_congruences(sum);
  CHECK(s3.size() == 2);
  CHECK(s3.kernel().order() == 2);
  CHECK(s3.members() == std::vector<Vec>{{0, 0}, {1, 1}});

  CongruenceSystem bad{{{1}}, {0}, {2}, {3}};
  CHECK_THROWS_AS(solve_congruences(bad), hsep::Error);

  auto m = solve_modular_system(IntegerMatrix::from_rows({{3}}), {Integer(1)}, {Integer(7)});
  CHECK(m.members() == std::vector<Vec>{{5}});
}

TEST_CASE("congruence solvers agree with brute force on mixed moduli") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 1 + rng() % 3, r = rng() % 4;
    std::vector<Residue> unk(n);
    for (auto& u : unk) u = std::vector<Residue>{2, 3, 4, 6, 12}[rng() % 5];
    CongruenceSystem s;
    s.unknown_moduli = unk;
    for (std::size_t i = 0; i < r; ++i) {
      Residue m = std::vector<Residue>{2, 3, 4, 6, 8, 12}[rng() % 6];
      Vec row(n);
      for (std::size_t j = 0; j < n; ++j) {
        // coefficients that respect the unknown's modulus: multiples of m / gcd(m, u_j)
        Residue step = m / gcd(m, unk[j]);
        row[j] = mod(static_cast<Residue>(rng() % 5) * step, m);
      }
      s.rows.push_back(row);
      s.rhs.push_back(static_cast<Residue>(rng() % m));
      s.row_moduli.push_back(m);
    }
    std::set<Vec> expected;
    for (const auto& x : all_vectors(unk)) {
      bool ok = true;
      for (std::size_t i = 0; i < r && ok; ++i) {
        Residue acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += s.rows[i][j] * x[j];
        ok = mod(acc - s.rhs[i], s.row_moduli[i]) == 0;
      }
      if (ok) expected.insert(x);
    }
    auto howell = solve_congruences(s);
    auto smith = solve_congruences_by_smith(s);
    CHECK(howell == smith);
    auto members = howell.members();
    CHECK(std::set<Vec>(members.begin(), members.end()) == expected);
    CHECK(members.size() == expected.size());
    CHECK(std::is_sorted(members.begin(), members.end()));
    CHECK(howell.size() == static_cast<long>(expected.size()));
    for (const auto& x : all_vectors(unk)) CHECK(howell.contains(x) == (expected.count(x) == 1));
  }
}

TEST_CASE("subgroup enumeration reports digits consistent with the basis") {
  Subgroup g({4, 6}, {{2, 3}, {0, 2}});
  auto p = g.reduce({1, 1});
  std::vector<Vec> seen;
  g.for_each_translate(p, [&](const Vec& e, const std::vector<Residue>& t) {
    Vec rebuilt = p;
    for (std::size_t i = 0; i < t.size(); ++i) rebuilt = add(rebuilt, scale(t[i], g.basis()[i], {4, 6}), {4, 6});
    CHECK(rebuilt == e);
    seen.push_back(e);
    return true;
  });
  CHECK(static_cast<long>(seen.size()) == g.order());
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(span_order({4, 6}, {{2, 3}, {0, 2}}) == 6);
}
