#include <catch_amalgamated.hpp>

#include "forge/h_construction.hpp"

using namespace forge;

TEST_CASE("H-sequence coding round trips") {
  HSeq s{{0, 3}, {5, 0}, {1, 1}};
  CHECK(h_decode(h_encode(s)) == s);
  CHECK(h_encode(HSeq{}) == 0);
}

TEST_CASE("membership in H[DEC,n](X)") {
  FamilyPtr dec = dec_family();
  OrderPtr X = nat_order();
  // empty sequence: always a member (root of T_{n+1})
  CHECK(h_member(*dec, 0, *X, {}));
  // condition (ii): the s-components must form an element of DEC_{n+1}
  CHECK(h_member(*dec, 1, *X, {{0, 1}, {3 + 1, 0}}));    // <1,0> decreasing, < 2
  CHECK_FALSE(h_member(*dec, 1, *X, {{0, 0}, {3 + 1, 1}}));  // <0,1> not decreasing
  CHECK_FALSE(h_member(*dec, 0, *X, {{0, 1}}));          // 1 not < 1
  // condition (i): position 1 codes <0> in DEC_1, position 0 codes <>;
  // <0> <_KB <>, so entry 1 must sit strictly below entry 0 in X^top
  CHECK(h_member(*dec, 1, *X, {{7 + 1, 1}, {3 + 1, 0}}));        // 3 < 7: fine
  CHECK_FALSE(h_member(*dec, 1, *X, {{3 + 1, 1}, {7 + 1, 0}}));  // 7 > 3: breaks (i)
  CHECK_FALSE(h_member(*dec, 1, *X, {{3 + 1, 1}, {0, 0}}));      // top not below 3
  CHECK_FALSE(h_member(*dec, 1, *X, {{0, 1}, {0, 0}}));          // top not below top
  // first components must be members of X
  CHECK_FALSE(h_member(*dec, 0, *canonical_order(2), HSeq{{5 + 1, 0}}));
}

TEST_CASE("the KB order on H-sequences") {
  OrderPtr X = nat_order();
  HSeq a{{2, 0}};
  HSeq b{{2, 0}, {0, 0}};
  CHECK(h_compare(*X, b, a) == Cmp::Less);  // proper extension
  CHECK(h_compare(*X, a, b) == Cmp::Greater);
  CHECK(h_entry_compare(*X, HEntry{3, 0}, HEntry{0, 0}) == Cmp::Less);  // top maximal
  CHECK(h_entry_compare(*X, HEntry{3, 0}, HEntry{3, 2}) == Cmp::Less);  // ties on s
  CHECK(h_compare(*X, {{1, 0}}, {{2, 0}}) == Cmp::Less);
}

TEST_CASE("functorial action and support") {
  OrderEmbedding f{nat_order(), nat_order(), [](Code c) { return c + 10; }};
  HSeq s{{0, 2}, {4, 1}};
  HSeq m = h_map(f, s);
  CHECK(m[0].x_top == 0);        // top is fixed
  CHECK(m[1].x_top == 13 + 1);   // inner 3 |-> 13
  CHECK(m[0].s == 2);
  auto T = h_prae_dilator(dec_family(), 0);
  CHECK(T->supp(5, h_encode({{0, 0}, {3, 0}, {3, 1}})) == std::vector<std::size_t>{2});
}

TEST_CASE("H satisfies the prae-dilator laws at desk scale") {
  for (std::size_t n = 0; n <= 2; ++n) {
    CHECK(validate_prae_dilator(*h_prae_dilator(dec_family(), n), 3, 300).ok());
  }
  CHECK(validate_prae_dilator(*h_prae_dilator(bad_family(), 1), 3, 300).ok());
}

TEST_CASE("coded isomorphism round trips and rejects non-members") {
  FamilyPtr dec = dec_family();
  OrderPtr X = canonical_order(4);
  for (std::size_t n = 0; n <= 2; ++n) {
    for (Code c : h_order(dec, n, X)->enumerate(600)) {
      HSeq tau = h_decode(c);
      DElement coded = h_to_coded(*dec, n, X, tau);
      // the collapsed code uses exactly the support positions
      CHECK(coded.support.size() == h_supp(X, tau).size());
      CHECK(h_from_coded(*dec, n, X, coded) == tau);
    }
  }
  CHECK_THROWS_AS(h_to_coded(*dec, 0, X, HSeq{{0, 1}}), NotMember);
  CHECK_THROWS_AS(h_from_coded(*dec, 0, X, DElement{FinSubset{X, {}}, h_encode({{0, 1}})}),
                  NotMember);
}
