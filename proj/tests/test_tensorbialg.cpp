#include <doctest.h>

#include "hsep/error.hpp"
#include "hsep/tensorbialg.hpp"

using namespace hsep::tensorbialg;

namespace {

int moebius(std::size_t n) {
  int mu = 1;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  return n > 1 ? -mu : mu;
}

long ipow(long b, std::size_t e) {
  long r = 1;
  while (e--) r *= b;
  return r;
}

// Necklace count: dimension of the degree-n part of the free Lie algebra on d letters.
long witt(long d, std::size_t n) {
  long s = 0;
  for (std::size_t k = 1; k <= n; ++k)
    if (n % k == 0) s += moebius(k) * ipow(d, n / k);
  return s / static_cast<long>(n);
}

// Primitives in characteristic p form the free restricted Lie algebra: degree n
// gains the p^j-th powers of Lie elements of degree n / p^j.
long restricted_witt(long d, std::size_t n, long p) {
  long s = 0;
  for (std::size_t q = 1; q <= n; q *= static_cast<std::size_t>(p)) {
    if (n % q == 0) s += witt(d, n / q);
    if (p == 0) break;
  }
  return s;
}

// Counts primitive elements of degree n by enumerating every vector over F_p.
std::size_t brute_primitive_count(const TruncatedTensorBialgebra& B, std::size_t n, long p) {
  const std::size_t off = B.carrier().offset(n), dim = B.carrier().dims[n];
  std::size_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) total *= static_cast<std::size_t>(p);
  std::size_t count = 0;
  for (std::size_t code = 0; code < total; ++code) {
    Vector x(B.dim(), 0);
    std::size_t c = code;
    for (std::size_t i = 0; i < dim; ++i, c /= static_cast<std::size_t>(p)) x[off + i] = static_cast<long>(c % p);
    count += B.primitivity_defect(x).empty();
  }
  return count;
}

}  // namespace

TEST_CASE("fields") {
  CHECK(ExactField::parse("q").is_rational());
  CHECK(ExactField::parse("5").characteristic() == 5);
  CHECK_THROWS_AS(ExactField::parse("4"), hsep::Error);
  CHECK_THROWS_AS(ExactField::parse("101"), hsep::Error);
  CHECK_THROWS_AS(ExactField::parse("x"), hsep::Error);
  auto F5 = ExactField::prime(5);
  CHECK(F5.normalize(Scalar(-1)) == 4);
  CHECK(F5.normalize(Scalar(1, 2)) == 3);
  CHECK(F5.inverse(Scalar(2)) == 3);
}

TEST_CASE("carrier dimensions and the coproduct") {
  CHECK(build_truncated(1, ExactField::rationals(), 2).carrier().dims == std::vector<std::size_t>{1, 1, 1});
  CHECK(build_truncated(2, ExactField::prime(2), 3).carrier().dims == std::vector<std::size_t>{1, 2, 4, 8});
  CHECK_THROWS_WITH_AS(build_truncated(2, ExactField::rationals(), 12), doctest::Contains("DimensionOverflow"),
                       hsep::Error);

  auto B = build_truncated(2, ExactField::rationals(), 3);
  auto idx = [&](Word w) { return B.index_of(w); };
  // v w: subsets {} {1} {2} {1,2} of the positions
  TensorSquare expected{{{idx({}), idx({0, 1})}, 1}, {{idx({1}), idx({0})}, 1}, {{idx({0}), idx({1})}, 1},
                        {{idx({0, 1}), idx({})}, 1}};
  CHECK(B.coproduct(B.basis(idx({0, 1}))) == expected);
  TensorSquare vv{{{idx({}), idx({0, 0})}, 1}, {{idx({0}), idx({0})}, 2}, {{idx({0, 0}), idx({})}, 1}};
  CHECK(B.coproduct(B.basis(idx({0, 0}))) == vv);
  CHECK(B.label(idx({0, 1})) == "vw");
}

TEST_CASE("bialgebra laws and omega") {
  for (auto k : {ExactField::rationals(), ExactField::prime(2), ExactField::prime(5)})
    for (std::size_t d = 0; d <= 2; ++d)
      for (std::size_t N = 1; N <= 3; ++N) {
        auto B = build_truncated(d, k, N);
        CHECK(B.check_bialgebra_laws().empty());
        auto om = B.omega();
        for (std::size_t n = 0; n <= N; ++n) {
          Matrix a = B.alpha(n);
          for (std::size_t c = 0; c < (a.empty() ? 0 : a[0].size()); ++c) {
            Vector col(B.dim());
            for (std::size_t r = 0; r < B.dim(); ++r) col[r] = a[r][c];
            Vector img = om.apply(k, col);
            Vector expected(d, 0);
            if (n == 1) expected[c] = 1;
            CHECK(img == expected);
          }
        }
      }
  // a graded alphabet with a letter of degree 2
  auto G = TruncatedTensorBialgebra::build(ExactField::rationals(), {"a", "b"}, {1, 2}, 4);
  CHECK(G.carrier().dims == std::vector<std::size_t>{1, 1, 2, 3, 5});
  CHECK(G.check_bialgebra_laws().empty());
}

TEST_CASE("primitive dimensions") {
  auto q2 = primitives(build_truncated(2, ExactField::rationals(), 3));
  CHECK(q2.space.dims == std::vector<std::size_t>{0, 2, 1, 2});
  auto B = build_truncated(2, ExactField::rationals(), 3);
  // the degree-2 primitive is the commutator, up to the sign fixed by the reduced basis
  Vector comm(B.dim(), 0);
  comm[B.index_of({0, 1})] = -1;
  comm[B.index_of({1, 0})] = 1;
  REQUIRE(q2.space.dims[2] == 1);
  CHECK(q2.basis[2] == comm);
  CHECK(q2.space.labels[2][0] == "-vw + wv");

  CHECK(primitives(build_truncated(2, ExactField::prime(2), 3)).space.dims[2] == 3);
  CHECK(primitives(build_truncated(1, ExactField::rationals(), 3)).space.dims == std::vector<std::size_t>{0, 1, 0, 0});

  for (long d = 1; d <= 3; ++d)
    for (auto k : {ExactField::rationals(), ExactField::prime(2), ExactField::prime(3), ExactField::prime(5)}) {
      std::size_t N = d == 3 ? 3 : 5;
      auto P = primitives(build_truncated(static_cast<std::size_t>(d), k, N));
      for (std::size_t n = 1; n <= N; ++n)
        CHECK_MESSAGE(static_cast<long>(P.space.dims[n]) == restricted_witt(d, n, k.characteristic()),
                      k.name() << " d=" << d << " n=" << n);
      // counit o xi = 0 and xi factors through the augmentation kernel
      for (const auto& b : P.basis) CHECK(b[0] == 0);
    }

  for (long p : {2L, 3L}) {
    auto k = ExactField::prime(p);
    auto B2 = build_truncated(2, k, 3);
    auto P = primitives(B2);
    for (std::size_t n = 1; n <= 3; ++n) {
      std::size_t expected = 1;
      for (std::size_t i = 0; i < P.space.dims[n]; ++i) expected *= static_cast<std::size_t>(p);
      CHECK(brute_primitive_count(B2, n, p) == expected);
    }
  }
}

TEST_CASE("final identities for the free bialgebra functor") {
  for (auto k : {ExactField::rationals(), ExactField::prime(2), ExactField::prime(5)})
    for (std::size_t d = 0; d <= 2; ++d)
      for (std::size_t N = 1; N <= 3; ++N) {
        auto rep = verify_t_bold_h_separability(d, k, N);
        REQUIRE(rep.identities.size() == 3);
        for (const auto& c : rep.identities) CHECK_MESSAGE(c.holds, k.name() << " d=" << d << " N=" << N << " " << c.name << " " << c.witness);
      }
  auto rep = verify_t_bold_h_separability(2, ExactField::rationals(), 3);
  CHECK(rep.primitive_dims == std::vector<std::size_t>{0, 2, 1, 2});
  CHECK(rep.tw_dims == std::vector<std::size_t>{1, 2, 5, 14});
}

TEST_CASE("plain T fails the h-condition for omega") {
  for (auto k : {ExactField::rationals(), ExactField::prime(2), ExactField::prime(5)})
    for (std::size_t d = 1; d <= 2; ++d)
      for (std::size_t N = 2; N <= 3; ++N) {
        auto w = plain_T_nonh_witness(d, k, N);
        CHECK(w.differ);
        CHECK(w.omega_eta_is_identity);
        CHECK(w.omega_omega_text == "0");
        CHECK(w.omega_eval_text == "v");
        CHECK(w.element == "[1|v]");
      }
  CHECK_THROWS_AS(plain_T_nonh_witness(0, ExactField::rationals(), 2), hsep::Error);
}
