#include <catch_amalgamated.hpp>

#include "forge/zoo.hpp"

using namespace forge;

TEST_CASE("full support recognizes collapsed codes") {
  auto omega = omega_dilator();
  CHECK(full_support(*omega, 0, seq_code({})));
  CHECK(full_support(*omega, 1, seq_code({0})));
  CHECK(full_support(*omega, 2, seq_code({1, 0})));
  CHECK_FALSE(full_support(*omega, 2, seq_code({0})));   // misses position 1
  CHECK_FALSE(full_support(*omega, 1, seq_code({})));    // misses position 0
}

TEST_CASE("extension membership") {
  auto omega = omega_dilator();
  OrderPtr X = nat_order();
  CHECK(d_member(*omega, *X, DElement{FinSubset{X, {4, 9}}, seq_code({1, 0})}));
  CHECK_FALSE(d_member(*omega, *X, DElement{FinSubset{X, {4, 9}}, seq_code({0})}));
  OrderPtr Y = canonical_order(3);
  CHECK_FALSE(d_member(*omega, *Y, DElement{FinSubset{Y, {7}}, seq_code({0})}));
}

TEST_CASE("extension comparison maps into the union") {
  auto omega = omega_dilator();
  OrderPtr X = nat_order();
  // omega^9 vs omega^4: supports {9} and {4}, both sigma = <0>
  DElement hi{FinSubset{X, {9}}, seq_code({0})};
  DElement lo{FinSubset{X, {4}}, seq_code({0})};
  CHECK(d_compare(*omega, lo, hi) == Cmp::Less);
  CHECK(d_compare(*omega, hi, lo) == Cmp::Greater);
  CHECK(d_compare(*omega, hi, hi) == Cmp::Equal);
  // omega^4 + omega^4 > omega^4
  DElement twice{FinSubset{X, {4}}, seq_code({0, 0})};
  CHECK(d_compare(*omega, twice, lo) == Cmp::Greater);
}

TEST_CASE("extension functor acts on supports only") {
  auto omega = omega_dilator();
  OrderEmbedding f{nat_order(), nat_order(), [](Code c) { return 2 * c; }};
  DElement e{FinSubset{nat_order(), {1, 3}}, seq_code({1, 0})};
  DElement image = d_map(*omega, f, e);
  CHECK(image.support.elements == std::vector<Code>{2, 6});
  CHECK(image.sigma == e.sigma);
}

TEST_CASE("normal structure values") {
  auto omega = omega_dilator();
  REQUIRE(omega->mu1() == seq_code({0}));
  // mu_n(m) = omega^m with the exponent read inside n
  CHECK(mu_value(*omega, 3, 0) == seq_code({0}));
  CHECK(mu_value(*omega, 3, 2) == seq_code({2}));
  CHECK_THROWS_AS(mu_value(*omega, 2, 2), DomainViolation);
  CHECK_THROWS_AS(mu_value(*top_dilator(), 2, 0), NotNormal);
  // D^mu_X(x) = <{x}, mu_1(0)>
  DElement m = d_mu(*omega, nat_order(), 7);
  CHECK(m.support.elements == std::vector<Code>{7});
  CHECK(m.sigma == seq_code({0}));
}

TEST_CASE("the coded extension order decodes canonically") {
  auto X = nat_order();
  auto D = std::make_shared<DOrder>(omega_dilator(), X);
  DElement e{FinSubset{X, {2, 5}}, seq_code({1, 0})};
  Code c = DOrder::encode(e);
  auto back = D->decode(c);
  REQUIRE(back.has_value());
  CHECK(back->support.elements == e.support.elements);
  CHECK(back->sigma == e.sigma);
  CHECK(D->member(c));
  // non-canonical support codes are rejected
  CHECK_FALSE(D->member(pair_code(seq_code({5, 2}), seq_code({1, 0}))));
}

TEST_CASE("the law validators accept the zoo and catch corruption") {
  CHECK(validate_prae_dilator(*omega_dilator(), 3, 300).ok());
  CHECK(validate_prae_dilator(*top_dilator(), 3, 300).ok());
  CHECK(validate_prae_dilator(*const_dilator(), 3, 300).ok());
  CHECK(validate_normal(*omega_dilator(), 3, 300).ok());
  // the top dilator rejects every candidate normal structure
  auto top = top_dilator();
  for (Code seed : top->order_at(1)->enumerate(50)) {
    CHECK_FALSE(validate_normal(*with_mu1(top, seed), 3, 100).ok());
  }
  // a wrong seed on omega is also refuted
  CHECK_FALSE(validate_normal(*with_mu1(omega_dilator(), seq_code({})), 3, 100).ok());
}
