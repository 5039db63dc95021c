#include <doctest.h>

#include <set>

#include "hsep/error.hpp"
#include "hsep/finring.hpp"

using namespace hsep::finring;
using hsep::exactalg::Vec;

namespace {

FiniteRing F(Residue p) { return modular_ring(p).ring; }

FiniteRing f2_squared() {
  MulTable mul{{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}};
  return FiniteRing::construct({2, 2}, mul, {1, 1}, "F_2^2");
}

std::string kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const hsep::Error& e) {
    return e.kind();
  }
  return "";
}

// All x with x*s = s*x for every s, by enumerating the ring.
std::size_t brute_center_size(const FiniteRing& S) {
  auto all = S.elements();
  std::size_t n = 0;
  for (const auto& x : all) {
    bool central = true;
    for (const auto& s : all)
      if (S.mul(x, s) != S.mul(s, x)) {
        central = false;
        break;
      }
    n += central;
  }
  return n;
}

}  // namespace

TEST_CASE("construct_ring accepts and rejects") {
  auto z6 = FiniteRing::construct({6}, {{{1}}}, {1}, "Z/6");
  CHECK(z6.order() == 6);
  CHECK(kind_of([] { FiniteRing::construct({4}, {{{2}}}, {1}, "bad"); }) == "UnitLawFails");
  CHECK(f2_squared().order() == 4);
  // e*e = e with e of order 2 but product of order 4 cannot be killed
  CHECK(kind_of([] { FiniteRing::construct({2, 4}, {{{0, 1}, {0, 0}}, {{0, 0}, {0, 1}}}, {0, 1}, "x"); }) ==
        "BilinearityIncompatible");
  // a nilpotent-ish table that is not associative: e1*e1 = e2, e2*e1 = 0, e1*e2 = e1 ...
  CHECK(kind_of([] {
          FiniteRing::construct({2, 2, 2},
                                {{{0, 1, 0}, {1, 0, 0}, {1, 0, 0}},
                                 {{0, 0, 0}, {0, 1, 0}, {0, 1, 0}},
                                 {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}},
                                {0, 0, 1}, "nonassoc");
        }) != "");
}

TEST_CASE("zero ring is allowed") {
  auto Z = FiniteRing::construct({}, {}, {}, "0");
  CHECK(Z.is_zero_ring());
  auto Z1 = modular_ring(1).ring;
  CHECK(Z1.is_zero_ring());
}

TEST_CASE("standard rings have the expected orders") {
  auto F2 = F(2);
  auto Z4 = F(4);
  CHECK(matrix_ring(F2, 2).ring.order() == 16);
  CHECK(matrix_ring(Z4, 2).ring.order() == 256);
  CHECK(matrix_ring(F2, 3).ring.order() == 512);
  CHECK(triangular_ring(F2, 2).ring.order() == 8);
  CHECK(triangular_ring(F2, 3).ring.order() == 64);
  CHECK(product_ring(F2, F(3)).ring.order() == 6);
  auto g = group_ring(F2, cyclic_group_table(2));
  CHECK(g.ring.order() == 4);
  // g^2 = 1
  Vec gen = g.ring.basis(1);
  CHECK(g.ring.mul(gen, gen) == g.ring.unit());
  CHECK(group_ring(F(3), cyclic_group_table(3)).ring.order() == 27);
  auto f9 = polynomial_quotient(3, {1, 0, 1});
  CHECK(f9.ring.order() == 9);
  CHECK(f9.warnings.empty());
  auto red = polynomial_quotient(2, {1, 0, 1});
  CHECK(red.warnings.size() == 1);
  CHECK(commutativity_report(matrix_ring(F2, 2).ring).is_commutative == false);
}

TEST_CASE("invalid cayley tables are rejected") {
  CHECK(kind_of([] { group_ring(F(2), {{0, 1}, {1, 1}}); }) == "InvalidCayleyTable");
  CHECK(kind_of([] { group_ring(F(2), {{0, 0}, {0, 0}}); }) == "InvalidCayleyTable");
}

TEST_CASE("ring hom checks") {
  auto Z4 = F(4), Z2 = F(2);
  CHECK_NOTHROW(check_ring_hom({{1}}, Z4, Z2));
  CHECK(kind_of([&] { check_ring_hom({{0}}, Z2, Z2); }) == "NotUnital");
  CHECK(kind_of([&] { check_ring_hom({{1}}, Z2, Z4); }) == "NotAdditiveWellDefined");
  auto S = f2_squared();
  CHECK(kind_of([&] { check_ring_hom({{1, 1}, {1, 0}}, S, S); }) == "NotMultiplicative");
  auto phi = check_ring_hom({{1}}, Z4, Z2);
  CHECK_NOTHROW(compose(identity_hom(Z2), phi));
  auto tri = triangular_ring(Z2, 2);
  auto composite = compose(tri.homs.at("inclusion"), tri.homs.at("scalar"));
  CHECK(composite.apply(Z2.unit()) == matrix_ring(Z2, 2).ring.unit());
}

TEST_CASE("center matches enumeration") {
  auto M2 = matrix_ring(F(2), 2).ring;
  auto rep = commutativity_report(M2);
  CHECK_FALSE(rep.is_commutative);
  CHECK(rep.center.size() == 2);
  CHECK(brute_center_size(M2) == 2);
  auto S = f2_squared();
  CHECK(commutativity_report(S).is_commutative);
  CHECK(commutativity_report(S).center.size() == 4);
  auto T2 = triangular_ring(F(2), 2).ring;
  CHECK(commutativity_report(T2).center.size() == brute_center_size(T2));
  auto M2z4 = matrix_ring(F(4), 2).ring;
  CHECK(commutativity_report(M2z4).center.size() == brute_center_size(M2z4));
}

TEST_CASE("tensor and quotient constructors") {
  auto F2 = F(2);
  auto f4 = polynomial_quotient(2, {1, 1, 1});
  auto t = tensor_product(f4.homs.at("scalar"), f4.homs.at("scalar"));
  CHECK(t.ring.order() == 16);
  CHECK(commutativity_report(t.ring).is_commutative);
  // Z/2 (x)_{Z/4} Z/2 = Z/2
  auto q = check_ring_hom({{1}}, F(4), F2);
  CHECK(tensor_product(q, q).ring.order() == 2);
  // F_2 (x) M_2(F_2) has noncentral... image of scalar is central, fine
  auto m2 = matrix_ring(F2, 2);
  CHECK(tensor_product(m2.homs.at("scalar"), f4.homs.at("scalar")).ring.order() == 256);
  // Z/6 / (2) = Z/2
  auto quo = quotient_ring(F(6), {{2}});
  CHECK(quo.ring.order() == 2);
  // M_2(Z/4) / (2) = M_2(F_2)
  auto m2z4 = matrix_ring(F(4), 2).ring;
  Vec two(4, 0);
  two[0] = 2;
  CHECK(quotient_ring(m2z4, {two}).ring.order() == 16);
}

TEST_CASE("product hom") {
  auto F2 = F(2);
  auto d = product_hom(identity_hom(F2), identity_hom(F2));
  CHECK(d.target.order() == 4);
  CHECK(d.images[0] == Vec{1, 1});
}
