#pragma once

// The executable reduction: an embedding J of the sum order
// Sigma_{n in N} T_n^top into any fixed point of D^{F[T]}, built by
// course-of-values recursion on pair codes.  The fixed point used here is
// the notation system Fix(F[T]) itself, with xi given by the composite of
// the coded isomorphism for F and the term constructor.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "forge/f_construction.hpp"
#include "forge/fixpoint.hpp"

namespace forge {

struct CodingViolation : OrderError {
  explicit CodingViolation(const std::string& w) : OrderError("CodingViolation: " + w) {}
};

// Codes of Sigma_{n in N} T_n^top: j = pair(n, c) with c = 0 for top and
// c = seq(s) + 1 for s in T_n.
inline bool sum_member(const TreeFamily& family, Code j) {
  auto [n, c] = unpair_code(j);
  if (c == 0) return true;
  return family.at(static_cast<std::size_t>(n))->contains(unseq_code(c - 1));
}

inline Cmp sum_compare(Code j0, Code j1) {
  auto [n0, c0] = unpair_code(j0);
  auto [n1, c1] = unpair_code(j1);
  if (n0 != n1) return n0 < n1 ? Cmp::Less : Cmp::Greater;
  if (c0 == c1) return Cmp::Equal;
  if (c0 == 0) return Cmp::Greater;  // top is maximal in each fiber
  if (c1 == 0) return Cmp::Less;
  return kb_compare(unseq_code(c0 - 1), unseq_code(c1 - 1));
}

struct JEntry {
  Code pair_code = 0;
  std::size_t n = 0;
  Code fiber_code = 0;  // 0 = top, s |-> seq(s) + 1
  TermPtr image = nullptr;
};

struct JTable {
  FamilyPtr family;
  std::vector<JEntry> entries;          // ascending pair codes
  std::map<Code, TermPtr> by_code;

  TermPtr at(Code j) const {
    auto it = by_code.find(j);
    return it == by_code.end() ? nullptr : it->second;
  }
};

// xi_Fix composed with the coded isomorphism for F, at the term level:
// the pair <support, sigma_F> is assembled directly so that arbitrarily
// deep terms never pass through machine-word codes.
namespace detail {

inline TermPtr j_xi(FixSystem& sys, std::vector<TermPtr> support, const FElem& coded) {
  return sys.make(std::move(support), f_encode(coded));
}

}  // namespace detail

// Theorem recursion:
//   J(<0, sigma>)        = xi(<bot, sigma>)
//   J(<n+1, top>)        = xi(<J(<n, top>), inf, star>)
//   J(<n+1, <s_0...>>)   = xi(<J(<n, top>), n, <<J_n(i), s_i>>_i>)
// with J_n(i) = J(<n, i>) when i codes an element of T_n, top otherwise.
// Every recursive call is on a strictly smaller pair code; a violation of
// that property means the coding scheme is broken and is reported as
// CodingViolation.
inline JTable build_J(FamilyPtr family, FixSystem& sys, Code code_bound) {
  JTable table;
  table.family = family;
  auto recall = [&table](Code j, Code current) -> TermPtr {
    if (j >= current) {
      throw CodingViolation("J(" + std::to_string(current) + ") depends on J(" + std::to_string(j) +
                            "), which is not smaller");
    }
    TermPtr t = table.at(j);
    if (t == nullptr) {
      throw CodingViolation("J(" + std::to_string(current) + ") depends on the non-member code " +
                            std::to_string(j));
    }
    return t;
  };

  for (Code j = 0; j <= code_bound; ++j) {
    if (!sum_member(*family, j)) continue;
    auto [n64, c] = unpair_code(j);
    std::size_t n = static_cast<std::size_t>(n64);
    TermPtr image = nullptr;
    if (n == 0) {
      // no recursive calls: the left summand of F
      image = detail::j_xi(sys, {}, FElem::mk_left(c));
    } else if (c == 0) {
      TermPtr x = recall(pair_code(n64 - 1, 0), j);
      image = detail::j_xi(sys, {x}, FElem::mk_right(0, ninf::infinity));
    } else {
      Seq s = unseq_code(c - 1);
      TermPtr x = recall(pair_code(n64 - 1, 0), j);
      TreePtr lower = family->at(n - 1);
      std::vector<TermPtr> entry_terms(s.size(), nullptr);  // nullptr = top
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (lower->contains(unseq_code(static_cast<Code>(i)))) {
          entry_terms[i] = recall(pair_code(n64 - 1, static_cast<Code>(i) + 1), j);
        }
      }
      // collapse onto the fiber support, sorted in the order of Fix
      std::vector<TermPtr> fiber;
      for (TermPtr t : entry_terms) {
        if (t != nullptr && std::find(fiber.begin(), fiber.end(), t) == fiber.end()) fiber.push_back(t);
      }
      std::sort(fiber.begin(), fiber.end(),
                [&sys](TermPtr u, TermPtr v) { return sys.less(u, v); });
      for (TermPtr t : fiber) {
        if (sys.compare(t, x) != Cmp::Less) {
          throw CodingViolation("fiber value at code " + std::to_string(j) +
                                " is not below J of the previous top");
        }
      }
      HSeq h;
      for (std::size_t i = 0; i < s.size(); ++i) {
        Code xt = 0;
        if (entry_terms[i] != nullptr) {
          auto it = std::find(fiber.begin(), fiber.end(), entry_terms[i]);
          xt = static_cast<Code>(it - fiber.begin()) + 1;
        }
        h.push_back(HEntry{xt, s[i]});
      }
      std::vector<TermPtr> support = fiber;
      support.push_back(x);
      image = detail::j_xi(sys, std::move(support),
                           FElem::mk_right(static_cast<Code>(fiber.size()), ninf::of_nat(n - 1),
                                           std::move(h)));
    }
    table.entries.push_back(JEntry{j, n, c, image});
    table.by_code.emplace(j, image);
  }
  return table;
}

// Theorem clause checks over a finished table.
struct JVerdict {
  std::vector<std::string> violations;
  std::size_t pairs_checked = 0;
  bool ok() const { return violations.empty(); }
};

inline JVerdict verify_J(const JTable& table, FixSystem& sys) {
  JVerdict v;
  const auto& es = table.entries;
  // (i) is structural: every image was interned through the validating
  // constructor.  (ii): the sum order is carried to the order on Fix.
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = 0; j < es.size(); ++j) {
      if (i == j) continue;
      ++v.pairs_checked;
      Cmp dom = sum_compare(es[i].pair_code, es[j].pair_code);
      Cmp img = sys.compare(es[i].image, es[j].image);
      if (dom != img) {
        v.violations.push_back("order mismatch at codes " + std::to_string(es[i].pair_code) + ", " +
                               std::to_string(es[j].pair_code));
      }
    }
  }
  // (iii): each fiber value sits below the top of its fiber.
  for (const JEntry& e : es) {
    if (e.fiber_code == 0) continue;
    TermPtr top = table.at(pair_code(static_cast<Code>(e.n), 0));
    if (top == nullptr) continue;
    if (sys.compare(e.image, top) != Cmp::Less) {
      v.violations.push_back("code " + std::to_string(e.pair_code) + " is not below its fiber top");
    }
  }
  return v;
}

}  // namespace forge
