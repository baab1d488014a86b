#pragma once

// Named end-to-end suites.  Each suite aggregates the checks behind one
// acceptance criterion; run_suite dispatches by name.

#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "forge/f_construction.hpp"
#include "forge/fixpoint.hpp"
#include "forge/reduction.hpp"
#include "forge/verify.hpp"
#include "forge/zoo.hpp"

namespace forge {

struct SuiteConfig {
  std::uint64_t seed = 0;
  // Per-suite knobs; zero means "use the suite default".
  std::size_t arity_bound = 0;
  Code code_bound = 0;
  std::string l_bound;  // decimal, may exceed the machine word
  std::size_t chain_len = 0;
  std::size_t depth = 0;
  std::size_t width = 0;
};

namespace suites {

inline Big pick_l_bound(const SuiteConfig& cfg, const char* dflt) {
  return Big(cfg.l_bound.empty() ? dflt : cfg.l_bound.c_str());
}

// -- zoo-laws --------------------------------------------------------------
// Functor and support laws for the zoo; normality holds for omega and
// fails, with witness, for top.
inline SuiteReport zoo_laws(const SuiteConfig& cfg) {
  Stopwatch clock;
  SuiteReport r;
  r.suite = "zoo-laws";
  std::size_t arity = cfg.arity_bound ? cfg.arity_bound : 5;
  Code codes = cfg.code_bound ? cfg.code_bound : 2000;
  for (const DilatorPtr& T : {DilatorPtr(omega_dilator()), DilatorPtr(top_dilator()),
                              DilatorPtr(const_dilator())}) {
    r.absorb(validate_prae_dilator(*T, arity, codes));
  }
  r.absorb(validate_normal(*omega_dilator(), arity, codes));
  // top admits no normal structure: every candidate seed must be refuted
  auto top = top_dilator();
  for (Code seed : top->order_at(1)->enumerate(codes)) {
    ++r.checks;
    ValidationReport probe = validate_normal(*with_mu1(top, seed), arity, codes);
    if (probe.ok()) {
      r.fail("top accepted a normal structure", "mu1 = " + std::to_string(seed));
    }
  }
  r.elapsed_seconds = clock.seconds();
  return r;
}

// -- d-linearity -----------------------------------------------------------
inline OrderPtr random_finite_order(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size_dist(1, 6);
  std::uniform_int_distribution<Code> code_dist(0, 49);
  std::size_t k = size_dist(rng);
  std::set<Code> codes;
  while (codes.size() < k) codes.insert(code_dist(rng));
  std::vector<Code> order(codes.begin(), codes.end());
  std::shuffle(order.begin(), order.end(), rng);  // order need not follow codes
  std::set<std::pair<Code, Code>> less;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) less.emplace(order[i], order[j]);
  }
  return explicit_order(std::move(order), std::move(less));
}

inline SuiteReport d_linearity(const SuiteConfig& cfg) {
  Stopwatch clock;
  SuiteReport r;
  r.suite = "d-linearity";
  Code codes = cfg.code_bound ? cfg.code_bound : 1000;
  std::vector<DilatorPtr> dilators{omega_dilator()};
  for (std::size_t n = 0; n <= 3; ++n) dilators.push_back(h_prae_dilator(dec_family(), n));
  dilators.push_back(f_prae_dilator(dec_family()));
  std::vector<OrderPtr> orders;
  for (std::size_t m = 0; m <= 5; ++m) orders.push_back(canonical_order(m));
  std::mt19937_64 rng(cfg.seed);
  for (int i = 0; i < 20; ++i) orders.push_back(random_finite_order(rng));
  for (const DilatorPtr& T : dilators) {
    for (const OrderPtr& X : orders) {
      r.absorb(check_linear_order(*d_order(T, X), codes));
    }
  }
  r.elapsed_seconds = clock.seconds();
  return r;
}

// -- iso-round-trips -------------------------------------------------------
inline SuiteReport iso_round_trips(const SuiteConfig& cfg) {
  Stopwatch clock;
  SuiteReport r;
  r.suite = "iso-round-trips";
  Code codes = cfg.code_bound ? cfg.code_bound : 500;
  for (const FamilyPtr& family : {dec_family(), bad_family()}) {
    for (std::size_t m = 0; m <= 3; ++m) {
      OrderPtr X = canonical_order(m);
      // H: collapse and re-expand every enumerated element
      for (std::size_t n = 0; n <= 2; ++n) {
        auto T = std::make_shared<HPraeDilator>(family, n);
        std::vector<HSeq> members;
        for (Code c : h_order(family, n, X)->enumerate(codes)) members.push_back(h_decode(c));
        std::vector<DElement> coded;
        for (const HSeq& tau : members) coded.push_back(h_to_coded(*family, n, X, tau));
        for (std::size_t i = 0; i < members.size(); ++i) {
          ++r.checks;
          if (h_from_coded(*family, n, X, coded[i]) != members[i]) {
            r.fail("h iso round trip", show_seq({h_encode(members[i])}));
          }
          for (std::size_t j = 0; j < members.size(); ++j) {
            ++r.checks;
            if (h_compare(*X, members[i], members[j]) != d_compare(*T, coded[i], coded[j])) {
              r.fail("h iso order", std::to_string(h_encode(members[i])) + " vs " +
                                        std::to_string(h_encode(members[j])));
            }
          }
        }
      }
      // F likewise
      auto TF = std::make_shared<FPraeDilator>(family);
      std::vector<FElem> fmembers;
      for (Code c : f_order(family, X)->enumerate(codes)) fmembers.push_back(*f_decode(c));
      std::vector<DElement> fcoded;
      for (const FElem& e : fmembers) fcoded.push_back(f_to_coded(*family, X, e));
      for (std::size_t i = 0; i < fmembers.size(); ++i) {
        ++r.checks;
        if (f_encode(f_from_coded(*family, X, fcoded[i])) != f_encode(fmembers[i])) {
          r.fail("f iso round trip", std::to_string(f_encode(fmembers[i])));
        }
        for (std::size_t j = 0; j < fmembers.size(); ++j) {
          ++r.checks;
          if (f_compare(*family, *X, fmembers[i], fmembers[j]) !=
              d_compare(*TF, fcoded[i], fcoded[j])) {
            r.fail("f iso order", std::to_string(f_encode(fmembers[i])) + " vs " +
                                      std::to_string(f_encode(fmembers[j])));
          }
        }
      }
    }
  }
  // the worked pair in omega^(omega+1): both the well-formed and the
  // collapsed ill-formed pair evaluate to omega^omega + omega^1
  {
    auto omega = omega_dilator();
    OrderPtr X = omega_plus_one();  // top (omega itself) = 0, the natural n = n+1
    Code expected = seq_code({0, 2});
    FinSubset a1{X, {2, 0}};
    Code v1 = evaluate_class(*omega, X, a1, seq_code({1, 0}));
    ++r.checks;
    if (v1 != expected) r.fail("worked pair (well-formed)", std::to_string(v1));
    FinSubset a2{X, {2, 6, 0}};
    Code v2 = evaluate_class(*omega, X, a2, seq_code({2, 0}));
    ++r.checks;
    if (v2 != expected) r.fail("worked pair (collapsed)", std::to_string(v2));
  }
  r.elapsed_seconds = clock.seconds();
  return r;
}

// -- fix-linearity ---------------------------------------------------------
inline SuiteReport fix_linearity(const SuiteConfig& cfg) {
  Stopwatch clock;
  SuiteReport r;
  r.suite = "fix-linearity";
  Big bound = pick_l_bound(cfg, "1000000000000000000");  // 1e18 -> 233 terms
  FixSystem sys(omega_dilator());
  std::vector<TermPtr> ts = enumerate_fix(sys, bound);
  std::size_t n = ts.size();
  r.checks += 1;
  if (n < 200 || n > 1000) {
    r.fail("enumeration size out of range", std::to_string(n) + " terms");
  }
  std::vector<std::vector<Cmp>> rel(n, std::vector<Cmp>(n, Cmp::Equal));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = sys.compare(ts[i], ts[j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++r.checks;
      if (i == j) {
        if (rel[i][j] != Cmp::Equal) r.fail("reflexivity", std::to_string(i));
      } else if (rel[i][j] == Cmp::Equal || rel[i][j] != flip(rel[j][i])) {
        r.fail("trichotomy", std::to_string(i) + " vs " + std::to_string(j));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rel[i][j] != Cmp::Less) continue;
      for (std::size_t k = 0; k < n; ++k) {
        ++r.checks;
        if (rel[j][k] == Cmp::Less && rel[i][k] != Cmp::Less) {
          r.fail("transitivity",
                 std::to_string(i) + " < " + std::to_string(j) + " < " + std::to_string(k));
        }
      }
    }
  }
  r.elapsed_seconds = clock.seconds();
  return r;
}

// -- fix-omega-oracle ------------------------------------------------------
inline SuiteReport fix_omega_oracle(const SuiteConfig& cfg) {
  Stopwatch clock;
  SuiteReport r;
  r.suite = "fix-omega-oracle";
  Code bound = cfg.code_bound ? cfg.code_bound : 500;
  auto sys = std::make_shared<FixSystem>(omega_dilator());
  std::vector<TermPtr> ts;
  for (Code c = 0; c <= bound; ++c) {
    std::optional<TermPtr> t = decode_term(*sys, c);
    if (t && (*t)->height <= 2) ts.push_back(*t);
  }
  for (TermPtr s : ts) {
    for (TermPtr t : ts) {
      ++r.checks;
      if (sys->compare(s, t) != eps0_compare(unfold_omega_term(s), unfold_omega_term(t))) {
        r.fail("oracle disagreement",
               term_goedel(s).str() + " vs " + term_goedel(t).str());
      }
    }
  }
  if (ts.empty()) r.fail("empty enumeration", "no terms decoded");
  r.elapsed_seconds = clock.seconds();
  return r;
}

// -- stage-structure -------------------------------------------------------
inline SuiteReport stage_structure(const SuiteConfig& cfg) {
  Stopwatch clock;
  SuiteReport r;
  r.suite = "stage-structure";
  Big bound = pick_l_bound(cfg, "1000000000000000000");
  FixSystem sys(omega_dilator());
  std::vector<TermPtr> ts = enumerate_fix(sys, bound);
  for (TermPtr s : ts) {
    ++r.checks;
    if (stage_member(s, 0)) r.fail("Fix_0 not empty", term_goedel(s).str());
  }
  for (TermPtr s : ts) {
    for (TermPtr t : ts) {
      if (s->height >= t->height) continue;
      ++r.checks;
      if (sys.compare(s, t) != Cmp::Less) {
        r.fail("initial segment", term_goedel(s).str() + " vs " + term_goedel(t).str());
      }
    }
  }
  for (TermPtr t : ts) {
    ++r.checks;
    std::size_t n = t->height;  // t is in Fix_{n+1}, its children in Fix_n
    try {
      auto [children, sigma] = stage_iso_backward(n, t);
      if (stage_iso_forward(sys, n, children, sigma) != t) {
        r.fail("stage iso round trip", term_goedel(t).str());
      }
    } catch (const StageViolation& e) {
      r.fail("stage iso round trip", e.what());
    }
  }
  r.elapsed_seconds = clock.seconds();
  return r;
}

// -- fix-top-chain ---------------------------------------------------------
// t_0 = xi<{}, top>, t_{k+1} = xi<{t_k}, 0> descend strictly: the missing
// normal structure is what the initial-segment property relies on.
inline SuiteReport fix_top_chain(const SuiteConfig& cfg) {
  Stopwatch clock;
  SuiteReport r;
  r.suite = "fix-top-chain";
  std::size_t len = cfg.chain_len ? cfg.chain_len : 12;
  FixSystem sys(top_dilator());
  std::vector<TermPtr> chain{sys.make({}, 0)};
  while (chain.size() < len) chain.push_back(sys.make({chain.back()}, 1));
  std::vector<std::size_t> lds = longest_descending_subsequence(
      chain.size(), [&](std::size_t i, std::size_t j) { return sys.less(chain[i], chain[j]); });
  ++r.checks;
  if (lds.size() < 10) {
    r.fail("descending chain too short", std::to_string(lds.size()) + " of " + std::to_string(len));
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    ++r.checks;
    if (sys.compare(chain[i + 1], chain[i]) != Cmp::Less) {
      r.fail("chain step not descending", "step " + std::to_string(i));
    }
  }
  // every candidate normal structure on top is rejected
  auto top = top_dilator();
  for (Code seed : top->order_at(1)->enumerate(100)) {
    ++r.checks;
    if (validate_normal(*with_mu1(top, seed), 4, 200).ok()) {
      r.fail("top accepted a normal structure", "mu1 = " + std::to_string(seed));
    }
  }
  r.elapsed_seconds = clock.seconds();
  return r;
}

// -- reduce-dec ------------------------------------------------------------
inline SuiteReport reduce_dec(const SuiteConfig& cfg) {
  Stopwatch clock;
  SuiteReport r;
  r.suite = "reduce-dec";
  Code bound = cfg.code_bound ? cfg.code_bound : 200;
  FamilyPtr family = dec_family();
  FixSystem sys(f_prae_dilator(family));
  try {
    JTable table = build_J(family, sys, bound);
    r.checks += table.entries.size();
    if (table.entries.empty()) r.fail("empty table", "no domain codes below the bound");
    JVerdict v = verify_J(table, sys);
    r.checks += v.pairs_checked;
    for (const std::string& w : v.violations) r.fail("theorem clause", w);
  } catch (const CodingViolation& e) {
    r.fail("coding violation", e.what());
  }
  r.elapsed_seconds = clock.seconds();
  return r;
}

// -- prop33-negative -------------------------------------------------------
// BAD is refuted at level 1: over X = KB(BAD_1) the explicit branch makes
// H[BAD,1](X) ill-founded although X is a well-order.
inline SuiteReport prop33_negative(const SuiteConfig& cfg) {
  Stopwatch clock;
  SuiteReport r;
  r.suite = "prop33-negative";
  std::size_t depth = cfg.depth ? cfg.depth : 20;
  FamilyPtr family = bad_family();
  OrderPtr X = kb_order(family->at(1));  // elements <> (code 0) and <0> (code 1)
  // the branch: position 0 carries <>, position 1 carries <0>, later
  // positions top; every search component is 0
  HSeq branch;
  for (std::size_t i = 0; i < depth; ++i) {
    Code x_top = i == 0 ? 1 : (i == 1 ? 2 : 0);
    branch.push_back(HEntry{x_top, 0});
  }
  std::vector<HSeq> prefixes;
  for (std::size_t k = 1; k <= depth; ++k) {
    prefixes.emplace_back(branch.begin(), branch.begin() + k);
  }
  for (const HSeq& p : prefixes) {
    ++r.checks;
    if (!h_member(*family, 1, *X, p)) {
      r.fail("branch prefix not a member", std::to_string(p.size()) + " entries");
    }
  }
  std::vector<std::size_t> lds = longest_descending_subsequence(
      prefixes.size(), [&](std::size_t i, std::size_t j) {
        return h_compare(*X, prefixes[i], prefixes[j]) == Cmp::Less;
      });
  ++r.checks;
  if (lds.size() < depth) {
    r.fail("no full descending chain", std::to_string(lds.size()) + " of " + std::to_string(depth));
  }
  // the family really is refuted at 1 in the bounded sense
  ProgressivenessVerdict v = progressive_at_bounded(*family, 1, depth, 2);
  ++r.checks;
  if (!v.refuted) r.fail("progressiveness not refuted", "bounded probe at level 1");
  r.elapsed_seconds = clock.seconds();
  return r;
}

// -- kb-equivalence --------------------------------------------------------
namespace detail {

// All prefix-closed trees over entries {0,1} of height <= h, each given
// by its node list.
inline std::vector<std::vector<Seq>> binary_trees(std::size_t h) {
  if (h == 0) return {{Seq{}}};
  std::vector<std::vector<Seq>> below = binary_trees(h - 1);
  std::vector<std::vector<Seq>> out;
  auto graft = [](const std::vector<Seq>& sub, Code first) {
    std::vector<Seq> nodes;
    for (const Seq& s : sub) {
      Seq t{first};
      t.insert(t.end(), s.begin(), s.end());
      nodes.push_back(std::move(t));
    }
    return nodes;
  };
  for (int left = -1; left < static_cast<int>(below.size()); ++left) {
    for (int right = -1; right < static_cast<int>(below.size()); ++right) {
      std::vector<Seq> nodes{Seq{}};
      if (left >= 0) {
        for (Seq& s : graft(below[static_cast<std::size_t>(left)], 0)) nodes.push_back(std::move(s));
      }
      if (right >= 0) {
        for (Seq& s : graft(below[static_cast<std::size_t>(right)], 1)) nodes.push_back(std::move(s));
      }
      out.push_back(std::move(nodes));
    }
  }
  return out;
}

// Extends a finite tree by declaring every maximal-depth node infinite
// (continued by zeros); the result is ill-founded iff such a node exists.
class PaddedTree final : public Tree {
public:
  PaddedTree(TreePtr base, std::size_t pad_depth) : base_(std::move(base)), depth_(pad_depth) {}
  bool contains(const Seq& s) const override {
    if (s.size() <= depth_) return base_->contains(s);
    Seq head(s.begin(), s.begin() + static_cast<long>(depth_));
    if (!base_->contains(head)) return false;
    for (std::size_t i = depth_; i < s.size(); ++i) {
      if (s[i] != 0) return false;
    }
    return true;
  }
  std::string describe() const override { return "padded(" + base_->describe() + ")"; }

private:
  TreePtr base_;
  std::size_t depth_;
};

}  // namespace detail

namespace detail {

inline std::vector<Seq> tree_nodes_to_depth(const Tree& tree, std::size_t depth) {
  std::vector<Seq> elems;
  Seq cur;
  std::function<void()> walk = [&]() {
    if (!tree.contains(cur) || cur.size() > depth) return;
    elems.push_back(cur);
    for (Code x = 0; x < 2; ++x) {
      cur.push_back(x);
      walk();
      cur.pop_back();
    }
  };
  walk();
  return elems;
}

}  // namespace detail

// Each characterization is probed at two depths; "ill-founded" means the
// witness keeps growing as the probe deepens.  All three verdicts must
// agree on every tree.
inline SuiteReport kb_equivalence(const SuiteConfig& cfg) {
  Stopwatch clock;
  SuiteReport r;
  r.suite = "kb-equivalence";
  std::size_t height = cfg.depth ? cfg.depth : 3;
  std::size_t shallow = height + 1;
  std::size_t deep = cfg.width ? cfg.width : 12;
  auto ext_less = [](const std::vector<Seq>& el) {
    return [&el](std::size_t i, std::size_t j) {
      const Seq& a = el[i];
      const Seq& b = el[j];
      return a.size() > b.size() && std::equal(b.begin(), b.end(), a.begin());
    };
  };
  auto kb_less = [](const std::vector<Seq>& el) {
    return [&el](std::size_t i, std::size_t j) { return kb_compare(el[i], el[j]) == Cmp::Less; };
  };
  for (const std::vector<Seq>& nodes : detail::binary_trees(height)) {
    for (bool padded : {false, true}) {
      TreePtr tree = explicit_tree(nodes);
      if (padded) tree = std::make_shared<detail::PaddedTree>(tree, height);
      bool branch_ill = bounded_branch_search(*tree, deep, 2).verdict ==
                        KbWitness::Verdict::BranchPrefix;
      std::vector<Seq> at_shallow = detail::tree_nodes_to_depth(*tree, shallow);
      std::vector<Seq> at_deep = detail::tree_nodes_to_depth(*tree, deep);
      bool ext_ill =
          longest_descending_subsequence(at_deep.size(), ext_less(at_deep)).size() >
          longest_descending_subsequence(at_shallow.size(), ext_less(at_shallow)).size();
      bool kb_ill = longest_descending_subsequence(at_deep.size(), kb_less(at_deep)).size() >
                    longest_descending_subsequence(at_shallow.size(), kb_less(at_shallow)).size();
      ++r.checks;
      if (branch_ill != ext_ill || branch_ill != kb_ill) {
        std::ostringstream os;
        os << (padded ? "padded " : "") << nodes.size() << "-node tree: branch=" << branch_ill
           << " ext=" << ext_ill << " kb=" << kb_ill;
        r.fail("characterizations disagree", os.str());
      }
    }
  }
  r.elapsed_seconds = clock.seconds();
  return r;
}

// -- coding-laws -----------------------------------------------------------
inline SuiteReport coding_laws(const SuiteConfig& cfg) {
  Stopwatch clock;
  SuiteReport r;
  r.suite = "coding-laws";
  Code bound = cfg.code_bound ? cfg.code_bound : 1000;
  for (Code n = 0; n < bound; ++n) {
    for (Code c = 0; c <= bound; ++c) {
      ++r.checks;
      if (pair_code(n, 0) >= pair_code(n + 1, c)) {
        r.fail("pair monotonicity", std::to_string(n) + ", " + std::to_string(c));
      }
    }
  }
  for (Code x = 0; x <= bound; ++x) {
    for (Code y = 0; y <= bound; ++y) {
      ++r.checks;
      auto [a, b] = unpair_code(pair_code(x, y));
      if (a != x || b != y) r.fail("unpair inverse", std::to_string(x) + ", " + std::to_string(y));
    }
  }
  for (Code c = 0; c <= bound; ++c) {
    Seq s = unseq_code(c);
    ++r.checks;
    if (seq_code(s) != c) r.fail("seq inverse", std::to_string(c));
    ++r.checks;
    if (static_cast<Code>(s.size()) > c) r.fail("length bound", std::to_string(c));
  }
  r.elapsed_seconds = clock.seconds();
  return r;
}

}  // namespace suites

inline const std::map<std::string, std::function<SuiteReport(const SuiteConfig&)>>& suite_registry() {
  static const std::map<std::string, std::function<SuiteReport(const SuiteConfig&)>> reg{
      {"zoo-laws", suites::zoo_laws},
      {"d-linearity", suites::d_linearity},
      {"iso-round-trips", suites::iso_round_trips},
      {"fix-linearity", suites::fix_linearity},
      {"fix-omega-oracle", suites::fix_omega_oracle},
      {"stage-structure", suites::stage_structure},
      {"fix-top-chain", suites::fix_top_chain},
      {"reduce-dec", suites::reduce_dec},
      {"prop33-negative", suites::prop33_negative},
      {"kb-equivalence", suites::kb_equivalence},
      {"coding-laws", suites::coding_laws},
  };
  return reg;
}

inline SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  auto it = suite_registry().find(name);
  if (it == suite_registry().end()) throw UnknownSuite(name);
  return it->second(cfg);
}

}  // namespace forge
