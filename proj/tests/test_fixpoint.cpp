#include <algorithm>

#include <catch_amalgamated.hpp>

#include "forge/fixpoint.hpp"
#include "forge/h_construction.hpp"
#include "forge/zoo.hpp"

using namespace forge;

TEST_CASE("term formation enforces the definition") {
  FixSystem sys(omega_dilator());
  TermPtr t0 = sys.make({}, seq_code({}));
  CHECK(t0->height == 0);
  TermPtr t1 = sys.make({t0}, seq_code({0}));
  CHECK(t1->height == 1);
  // interning: the same data yields the same node
  CHECK(sys.make({t0}, seq_code({0})) == t1);
  // sigma must have full support
  CHECK_THROWS_AS(sys.make({t0}, seq_code({})), InvalidTerm);
  CHECK_THROWS_AS(sys.make({}, seq_code({0})), InvalidTerm);
  // children must be pairwise distinct
  CHECK_THROWS_AS(sys.make({t0, t0}, seq_code({1, 0})), InvalidTerm);
  // raw terms validate recursively
  CHECK(sys.valid(RawTerm{{}, 0}));
  CHECK(sys.valid(RawTerm{{RawTerm{{}, 0}}, seq_code({0})}));
  CHECK_FALSE(sys.valid(RawTerm{{RawTerm{{}, seq_code({0})}}, seq_code({0})}));
}

TEST_CASE("Fix(T) is empty exactly when T(0) is") {
  // const: T(0) = {0} is nonempty, so xi<{},0> is a term
  FixSystem c(const_dilator());
  CHECK_NOTHROW(c.make({}, 0));
  // over the empty tree family every fiber of H is empty, so no term at
  // all can be formed: the base case of the recursion never fires
  FixSystem e(h_prae_dilator(explicit_family({}), 0));
  for (Code sigma = 0; sigma < 50; ++sigma) {
    CHECK_FALSE(e.valid(RawTerm{{}, sigma}));
  }
  CHECK(enumerate_fix(e, Big(100000)).empty());
}

TEST_CASE("goedel numbers and lengths") {
  FixSystem sys(omega_dilator());
  TermPtr t0 = sys.make({}, 0);
  TermPtr t1 = sys.make({t0}, seq_code({0}));
  CHECK(term_goedel(t0) == 2);
  CHECK(term_goedel(t1) == 31);
  CHECK(term_length(t0) == 2);   // max{2, 1}
  CHECK(term_length(t1) == 31);  // max{31, 1 + 2*2}
  TermMetrics m = metrics(t1);
  CHECK(m.goedel == 31);
  CHECK(m.height == 1);
}

TEST_CASE("comparison matches the epsilon_0 oracle") {
  FixSystem sys(omega_dilator());
  TermPtr zero = sys.make({}, 0);                       // 0
  TermPtr one = sys.make({zero}, seq_code({0}));        // omega^0 = 1
  TermPtr omega1 = sys.make({one}, seq_code({0}));      // omega^1
  TermPtr omega2 = sys.make({one}, seq_code({0, 0}));   // omega * 2
  TermPtr two = sys.make({zero}, seq_code({0, 0}));     // 2
  TermPtr omega_sq = sys.make({two}, seq_code({0}));    // omega^2
  TermPtr omega_omega = sys.make({omega1}, seq_code({0}));  // omega^omega
  CHECK(sys.compare(zero, one) == Cmp::Less);
  CHECK(sys.compare(omega1, omega2) == Cmp::Less);
  CHECK(sys.compare(omega_sq, omega_omega) == Cmp::Less);
  CHECK(sys.compare(omega2, omega_sq) == Cmp::Less);
  std::vector<TermPtr> all{zero, one, omega1, omega2, two, omega_sq, omega_omega};
  for (TermPtr s : all) {
    for (TermPtr t : all) {
      CHECK(sys.compare(s, t) == eps0_compare(unfold_omega_term(s), unfold_omega_term(t)));
    }
  }
}

TEST_CASE("decode_term inverts the goedel numbering") {
  auto sys = std::make_shared<FixSystem>(omega_dilator());
  for (Code c = 0; c <= 400; ++c) {
    auto t = decode_term(*sys, c);
    if (t) CHECK(term_goedel(*t) == c);
  }
  REQUIRE(decode_term(*sys, 2).has_value());
  REQUIRE(decode_term(*sys, 31).has_value());
  CHECK_FALSE(decode_term(*sys, 0).has_value());
  CHECK_FALSE(decode_term(*sys, 3).has_value());
  auto fix = fix_order(sys);
  CHECK(fix->member(31));
  CHECK(fix->less(2, 31));
}

TEST_CASE("xi round trips at both levels") {
  auto sys = std::make_shared<FixSystem>(omega_dilator());
  TermPtr t0 = sys->make({}, 0);
  TermPtr t1 = xi_apply(*sys, {t0}, seq_code({0}));
  auto [children, sigma] = xi_invert(t1);
  CHECK(children == std::vector<TermPtr>{t0});
  CHECK(sigma == seq_code({0}));
  CHECK(xi_apply(*sys, children, sigma) == t1);

  auto fix = fix_order(sys);
  DElement d{FinSubset{fix, {2}}, seq_code({0})};
  Code c = xi_apply_coded(*fix, d);
  CHECK(c == 31);
  DElement back = xi_invert_coded(fix, c);
  CHECK(back.support.elements == std::vector<Code>{2});
  CHECK(back.sigma == seq_code({0}));
}

TEST_CASE("stages filter by height") {
  FixSystem sys(omega_dilator());
  TermPtr t0 = sys.make({}, 0);
  TermPtr t1 = sys.make({t0}, seq_code({0}));
  CHECK_FALSE(stage_member(t0, 0));  // Fix_0 is empty
  CHECK(stage_member(t0, 1));
  CHECK_FALSE(stage_member(t1, 1));
  CHECK(stage_member(t1, 2));
  // the stage isomorphism D(Fix_n) = Fix_{n+1}
  CHECK(stage_iso_forward(sys, 1, {t0}, seq_code({0})) == t1);
  CHECK_THROWS_AS(stage_iso_forward(sys, 0, {t0}, seq_code({0})), StageViolation);
  auto [ch, sg] = stage_iso_backward(1, t1);
  CHECK(ch == std::vector<TermPtr>{t0});
  CHECK_THROWS_AS(stage_iso_backward(0, t1), StageViolation);
}

TEST_CASE("embedding into the canonical fixed point is the identity") {
  auto sys = std::make_shared<FixSystem>(omega_dilator());
  auto fix = fix_order(sys);
  FixedPointWitness w{fix, [&fix](const DElement& d) { return xi_apply_coded(*fix, d); }};
  std::vector<TermPtr> ts = enumerate_fix(*sys, Big(100000));
  REQUIRE_FALSE(ts.empty());
  for (TermPtr t : ts) {
    CHECK(Big(fix_embed(w, t)) == term_goedel(t));
  }
}

TEST_CASE("a witness that leaves its field is rejected") {
  auto sys = std::make_shared<FixSystem>(omega_dilator());
  FixedPointWitness bogus{canonical_order(1), [](const DElement&) { return Code{7}; }};
  TermPtr t0 = sys->make({}, 0);
  CHECK_THROWS_AS(fix_embed(bogus, t0), InvalidWitness);
}

TEST_CASE("bounded enumeration is complete against the scan oracle") {
  auto sys = std::make_shared<FixSystem>(omega_dilator());
  std::vector<TermPtr> ts = enumerate_fix(*sys, Big(200));
  std::vector<Big> goedels;
  for (TermPtr t : ts) goedels.push_back(term_goedel(t));
  std::sort(goedels.begin(), goedels.end());
  CHECK(goedels == std::vector<Big>{2, 31, 40, 61, 166});
  // oracle: generate by scanning all codes and filtering by length
  std::vector<Big> scanned;
  for (Code c = 0; c <= 200; ++c) {
    auto t = decode_term(*sys, c);
    if (t && term_length(*t) <= 200) scanned.push_back(term_goedel(*t));
  }
  std::sort(scanned.begin(), scanned.end());
  CHECK(goedels == scanned);
  // the enumeration is emitted in increasing order of Fix(T)
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    CHECK(sys->compare(ts[i], ts[i + 1]) == Cmp::Less);
  }
}

TEST_CASE("enumeration scales past the machine word") {
  auto sys = std::make_shared<FixSystem>(omega_dilator());
  std::vector<TermPtr> ts = enumerate_fix(*sys, Big("1000000000000000000"));
  CHECK(ts.size() == 233);
  for (TermPtr t : ts) CHECK(term_length(t) <= Big("1000000000000000000"));
}

TEST_CASE("epsilon_0 oracle basics") {
  Eps0 zero;                      // 0
  Eps0 one{{zero}};               // omega^0
  Eps0 omega{{one}};              // omega^1
  Eps0 omega_twice{{one, one}};   // omega * 2
  Eps0 omega_sq{{Eps0{{zero, zero}}}};  // omega^2
  Eps0 omega_omega{{omega}};      // omega^omega
  CHECK(eps0_compare(zero, one) == Cmp::Less);
  CHECK(eps0_compare(omega, omega_twice) == Cmp::Less);
  CHECK(eps0_compare(omega_omega, omega_sq) == Cmp::Greater);
  // normalization makes the summand order irrelevant
  CHECK(eps0_compare(Eps0{{zero, one}}, Eps0{{one, zero}}) == Cmp::Equal);
}
