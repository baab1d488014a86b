#include <catch_amalgamated.hpp>

#include "forge/trees.hpp"

using namespace forge;

TEST_CASE("explicit trees are prefix-closed and rooted") {
  TreePtr t = explicit_tree({{1, 0, 2}});
  CHECK(t->contains({}));
  CHECK(t->contains({1}));
  CHECK(t->contains({1, 0}));
  CHECK(t->contains({1, 0, 2}));
  CHECK_FALSE(t->contains({0}));
  CHECK_FALSE(t->contains({1, 0, 2, 0}));
  CHECK(empty_tree()->listing()->empty());
}

TEST_CASE("Kleene-Brouwer comparison") {
  // proper end extensions come first
  CHECK(kb_compare({0, 1}, {0}) == Cmp::Less);
  CHECK(kb_compare({0}, {0, 1}) == Cmp::Greater);
  // otherwise the first disagreement decides
  CHECK(kb_compare({0, 5}, {1}) == Cmp::Less);
  CHECK(kb_compare({2}, {1, 9, 9}) == Cmp::Greater);
  CHECK(kb_compare({3, 1}, {3, 1}) == Cmp::Equal);
  // relative to an explicit order on entries
  OrderPtr X = ranked_order({0, 1}, {1, 0});  // 1 < 0
  CHECK(kb_compare(*X, {1}, {0}) == Cmp::Less);
  CHECK_THROWS_AS(kb_compare(*X, {7}, {0}), EntryNotInOrder);
}

TEST_CASE("the KB order codes sequences by their sequence codes") {
  OrderPtr K = kb_order(explicit_tree({{0, 0}, {1}}));
  CHECK(K->member(seq_code({})));
  CHECK(K->member(seq_code({0, 0})));
  CHECK_FALSE(K->member(seq_code({2})));
  CHECK(K->less(seq_code({0, 0}), seq_code({0})));
  CHECK(K->less(seq_code({0}), seq_code({1})));
}

TEST_CASE("bounded branch search ranks the decreasing-sequence trees") {
  for (std::size_t n = 0; n <= 5; ++n) {
    KbWitness w = bounded_branch_search(*dec_tree(n), 10, 8);
    REQUIRE(w.verdict == KbWitness::Verdict::WellFoundedToDepth);
    // brute-force oracle: the root rank of DEC_n is exactly n
    CHECK(w.root_rank() == n);
  }
}

TEST_CASE("bounded branch search finds the zeros branch") {
  KbWitness w = bounded_branch_search(*zeros_tree(), 7, 3);
  REQUIRE(w.verdict == KbWitness::Verdict::BranchPrefix);
  CHECK(w.branch == Seq(7, 0));
}

TEST_CASE("progressiveness probes") {
  // DEC is progressive at every probed level
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK_FALSE(progressive_at_bounded(*dec_family(), n, 10, 8).refuted);
  }
  // BAD is refuted at level 1: BAD_1 is finite, BAD_2 has a branch
  ProgressivenessVerdict v = progressive_at_bounded(*bad_family(), 1, 10, 4);
  REQUIRE(v.refuted);
  CHECK(v.witness_branch == Seq(10, 0));
  // and not refuted at 0, where the antecedent holds and BAD_1 is finite
  CHECK_FALSE(progressive_at_bounded(*bad_family(), 0, 10, 4).refuted);
}

TEST_CASE("family fibers") {
  CHECK(dec_family()->at(3)->contains({2, 1, 0}));
  CHECK_FALSE(dec_family()->at(3)->contains({1, 1}));
  CHECK_FALSE(dec_family()->at(3)->contains({3}));
  CHECK(bad_family()->at(0)->listing()->size() == 1);
  CHECK(bad_family()->at(1)->contains({0}));
  CHECK_FALSE(bad_family()->at(1)->contains({0, 0}));
  CHECK(bad_family()->at(2)->contains(Seq(20, 0)));
  FamilyPtr e = explicit_family({explicit_tree({{0}}), explicit_tree({{1, 1}})});
  CHECK(e->at(1)->contains({1, 1}));
  CHECK_FALSE(e->at(2)->contains({}));  // past the listed fibers: empty
}
