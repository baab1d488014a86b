#pragma once

// N-trees, tree families, Kleene-Brouwer orders relative to an arbitrary
// order, and bounded well-foundedness / progressiveness probes.  Trees
// are prefix-closed; branches are explored only up to explicit depth and
// width bounds, since well-foundedness itself is not decidable.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "forge/orders.hpp"

namespace forge {

struct EntryNotInOrder : OrderError {
  explicit EntryNotInOrder(const std::string& w) : OrderError("EntryNotInOrder: " + w) {}
};

inline std::string show_seq(const Seq& s) {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ">";
  return os.str();
}

// A prefix-closed subtree of X^{<omega} for X = N, given by a membership
// predicate.
class Tree {
public:
  virtual ~Tree() = default;
  virtual bool contains(const Seq& s) const = 0;
  virtual std::string describe() const = 0;
  // Present for explicitly listed finite trees.
  virtual std::optional<std::vector<Seq>> listing() const { return std::nullopt; }
};

using TreePtr = std::shared_ptr<const Tree>;

class TreeFamily {
public:
  virtual ~TreeFamily() = default;
  virtual TreePtr at(std::size_t n) const = 0;
  virtual std::string describe() const = 0;
};

using FamilyPtr = std::shared_ptr<const TreeFamily>;

// Kleene-Brouwer comparison relative to X: proper end extensions come
// first, otherwise the first disagreement decides.
inline Cmp kb_compare(const CodedOrder& X, const Seq& s, const Seq& t) {
  for (Code c : s) {
    if (!X.member(c)) throw EntryNotInOrder("entry " + std::to_string(c) + " of " + show_seq(s));
  }
  for (Code c : t) {
    if (!X.member(c)) throw EntryNotInOrder("entry " + std::to_string(c) + " of " + show_seq(t));
  }
  std::size_t k = std::min(s.size(), t.size());
  for (std::size_t j = 0; j < k; ++j) {
    Cmp c = compare(X, s[j], t[j]);
    if (c != Cmp::Equal) return c;
  }
  if (s.size() > t.size()) return Cmp::Less;  // proper end extension
  if (s.size() < t.size()) return Cmp::Greater;
  return Cmp::Equal;
}

inline Cmp kb_compare(const Seq& s, const Seq& t) { return kb_compare(*nat_order(), s, t); }

// The Kleene-Brouwer order of a tree as a coded order; sequences carry
// their sequence codes.
namespace detail {

class KbOrder final : public CodedOrder {
public:
  KbOrder(TreePtr tree, OrderPtr entry_order)
      : tree_(std::move(tree)), entry_order_(std::move(entry_order)) {}
  bool member(Code c) const override { return tree_->contains(unseq_code(c)); }
  bool less(Code a, Code b) const override {
    return kb_compare(*entry_order_, unseq_code(a), unseq_code(b)) == Cmp::Less;
  }
  std::string describe() const override {
    return "KB(" + tree_->describe() + "); sequences carry their sequence codes";
  }

private:
  TreePtr tree_;
  OrderPtr entry_order_;
};

}  // namespace detail

inline OrderPtr kb_order(TreePtr tree, OrderPtr entry_order) {
  return std::make_shared<detail::KbOrder>(std::move(tree), std::move(entry_order));
}
inline OrderPtr kb_order(TreePtr tree) { return kb_order(std::move(tree), nat_order()); }

// --- Bounded branch search ------------------------------------------------

struct KbWitness {
  enum class Verdict { WellFoundedToDepth, BranchPrefix };
  Verdict verdict = Verdict::WellFoundedToDepth;
  Seq branch;                              // when a branch prefix was found
  std::map<Seq, std::size_t> ranks;        // explored portion otherwise
  std::size_t root_rank() const {
    auto it = ranks.find(Seq{});
    return it == ranks.end() ? 0 : it->second;
  }
};

namespace detail {

inline bool branch_dfs(const Tree& tree, Seq& s, std::size_t depth, std::size_t width,
                       std::map<Seq, std::size_t>& ranks) {
  if (s.size() == depth) return true;
  std::size_t rank = 0;
  for (Code x = 0; x < width; ++x) {
    s.push_back(x);
    if (tree.contains(s)) {
      if (branch_dfs(tree, s, depth, width, ranks)) return true;
      rank = std::max(rank, ranks[s] + 1);
    }
    s.pop_back();
  }
  ranks[s] = rank;
  return false;
}

}  // namespace detail

// Explores the tree restricted to entries < width and levels <= depth.
// Returns a branch prefix of length depth when one exists in the
// restriction, otherwise a rank table for the explored portion.
inline KbWitness bounded_branch_search(const Tree& tree, std::size_t depth, std::size_t width) {
  KbWitness w;
  if (!tree.contains(Seq{})) {
    w.ranks[Seq{}] = 0;
    return w;
  }
  Seq s;
  if (detail::branch_dfs(tree, s, depth, width, w.ranks)) {
    w.verdict = KbWitness::Verdict::BranchPrefix;
    w.branch = s;
    w.ranks.clear();
  }
  return w;
}

// Bounded shadow of "T is progressive at n": refuted only when the
// explored region shows T_n well-founded and T_{n+1} ill-founded.
struct ProgressivenessVerdict {
  bool refuted = false;
  Seq witness_branch;  // branch prefix in T_{n+1} when refuted
};

inline ProgressivenessVerdict progressive_at_bounded(const TreeFamily& family, std::size_t n,
                                                     std::size_t depth, std::size_t width) {
  ProgressivenessVerdict v;
  KbWitness here = bounded_branch_search(*family.at(n), depth, width);
  if (here.verdict != KbWitness::Verdict::WellFoundedToDepth) return v;  // antecedent fails
  KbWitness next = bounded_branch_search(*family.at(n + 1), depth, width);
  if (next.verdict == KbWitness::Verdict::BranchPrefix) {
    v.refuted = true;
    v.witness_branch = next.branch;
  }
  return v;
}

// --- Concrete trees and families ------------------------------------------

namespace detail {

class ExplicitTree final : public Tree {
public:
  explicit ExplicitTree(std::vector<Seq> seqs) {
    for (Seq& s : seqs) set_.insert(std::move(s));
    set_.insert(Seq{});  // nonempty trees contain the empty sequence
    // close under prefixes
    std::set<Seq> closure;
    for (const Seq& s : set_) {
      Seq p;
      closure.insert(p);
      for (Code x : s) {
        p.push_back(x);
        closure.insert(p);
      }
    }
    set_ = std::move(closure);
  }
  bool contains(const Seq& s) const override { return set_.count(s) > 0; }
  std::string describe() const override { return "explicit tree with " + std::to_string(set_.size()) + " nodes"; }
  std::optional<std::vector<Seq>> listing() const override {
    return std::vector<Seq>(set_.begin(), set_.end());
  }

private:
  std::set<Seq> set_;
};

class EmptyTree final : public Tree {
public:
  bool contains(const Seq&) const override { return false; }
  std::string describe() const override { return "empty tree"; }
  std::optional<std::vector<Seq>> listing() const override { return std::vector<Seq>{}; }
};

// Strictly decreasing sequences with entries < n.  Well-founded for
// every n; the rank of the root is exactly n.
class DecTree final : public Tree {
public:
  explicit DecTree(std::size_t n) : n_(n) {}
  bool contains(const Seq& s) const override {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] >= n_) return false;
      if (i > 0 && s[i - 1] <= s[i]) return false;
    }
    return true;
  }
  std::string describe() const override { return "DEC_" + std::to_string(n_); }

private:
  std::size_t n_;
};

// The tree of all-zero sequences; its single branch is constant zero.
class ZerosTree final : public Tree {
public:
  bool contains(const Seq& s) const override {
    for (Code x : s) {
      if (x != 0) return false;
    }
    return true;
  }
  std::string describe() const override { return "zeros tree"; }
};

class DecFamily final : public TreeFamily {
public:
  TreePtr at(std::size_t n) const override { return std::make_shared<DecTree>(n); }
  std::string describe() const override { return "DEC"; }
};

// Not progressive at 1: BAD_1 is finite while BAD_2 carries the zeros
// branch.
class BadFamily final : public TreeFamily {
public:
  TreePtr at(std::size_t n) const override {
    if (n == 0) return std::make_shared<ExplicitTree>(std::vector<Seq>{});
    if (n == 1) return std::make_shared<ExplicitTree>(std::vector<Seq>{{0}});
    return std::make_shared<ZerosTree>();
  }
  std::string describe() const override { return "BAD"; }
};

class ExplicitFamily final : public TreeFamily {
public:
  explicit ExplicitFamily(std::vector<TreePtr> fibers) : fibers_(std::move(fibers)) {}
  TreePtr at(std::size_t n) const override {
    if (n < fibers_.size()) return fibers_[n];
    return std::make_shared<EmptyTree>();
  }
  std::string describe() const override { return "explicit family with " + std::to_string(fibers_.size()) + " fibers"; }

private:
  std::vector<TreePtr> fibers_;
};

}  // namespace detail

inline TreePtr explicit_tree(std::vector<Seq> seqs) {
  return std::make_shared<detail::ExplicitTree>(std::move(seqs));
}
inline TreePtr empty_tree() { return std::make_shared<detail::EmptyTree>(); }
inline TreePtr dec_tree(std::size_t n) { return std::make_shared<detail::DecTree>(n); }
inline TreePtr zeros_tree() { return std::make_shared<detail::ZerosTree>(); }
inline FamilyPtr dec_family() { return std::make_shared<detail::DecFamily>(); }
inline FamilyPtr bad_family() { return std::make_shared<detail::BadFamily>(); }
inline FamilyPtr explicit_family(std::vector<TreePtr> fibers) {
  return std::make_shared<detail::ExplicitFamily>(std::move(fibers));
}

}  // namespace forge
