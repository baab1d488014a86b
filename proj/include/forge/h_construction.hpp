#pragma once

// The tree-search dilator H[T,n]: along each branch of H[T,n](X) one
// searches for an embedding of T_n into X and, simultaneously, for a
// branch of T_{n+1}.  Provided both as an order on arbitrary X and as a
// coded prae-dilator on the category of natural numbers, together with
// the isomorphism between the two.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "forge/dilator.hpp"
#include "forge/trees.hpp"

namespace forge {

struct NotMember : OrderError {
  explicit NotMember(const std::string& w) : OrderError("NotMember: " + w) {}
};

// An element of H[T,n](X): entries pair an element of X^top (coded with
// top = 0, inner x shifted to x+1) with a natural number.
struct HEntry {
  Code x_top = 0;  // code in with_top(X)
  Code s = 0;

  bool is_top() const { return x_top == 0; }
  friend bool operator==(const HEntry&, const HEntry&) = default;
};

using HSeq = std::vector<HEntry>;

inline Code h_encode(const HSeq& seq) {
  Seq codes;
  codes.reserve(seq.size());
  for (const HEntry& e : seq) codes.push_back(pair_code(e.x_top, e.s));
  return seq_code(codes);
}

inline HSeq h_decode(Code c) {
  HSeq out;
  for (Code p : unseq_code(c)) {
    auto [x, s] = unpair_code(p);
    out.push_back(HEntry{x, s});
  }
  return out;
}

// Positions i < k of an H-sequence are simultaneously read as sequence
// codes of candidate T_n elements.
inline bool h_member(const TreeFamily& family, std::size_t n, const CodedOrder& X, const HSeq& seq) {
  TreePtr level = family.at(n);
  for (const HEntry& e : seq) {
    if (!e.is_top() && !X.member(e.x_top - 1)) return false;
  }
  std::vector<std::optional<Seq>> pos(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Seq decoded = unseq_code(static_cast<Code>(i));
    if (level->contains(decoded)) pos[i] = std::move(decoded);
  }
  // (i): positions that code KB-comparable elements of T_n map increasingly
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!pos[i]) continue;
    for (std::size_t j = 0; j < seq.size(); ++j) {
      if (i == j || !pos[j]) continue;
      if (kb_compare(*pos[i], *pos[j]) != Cmp::Less) continue;
      const HEntry& a = seq[i];
      const HEntry& b = seq[j];
      // a.x_top < b.x_top in X^top
      bool lt = !a.is_top() && (b.is_top() || X.less(a.x_top - 1, b.x_top - 1));
      if (!lt) return false;
    }
  }
  // (ii): the second components form an element of T_{n+1}
  Seq ss;
  ss.reserve(seq.size());
  for (const HEntry& e : seq) ss.push_back(e.s);
  return family.at(n + 1)->contains(ss);
}

// KB order with respect to X^top x N: <x,s> precedes <x',s'> iff x < x'
// in X^top, or x = x' and s < s'.
inline Cmp h_entry_compare(const CodedOrder& X, const HEntry& a, const HEntry& b) {
  if (a.x_top != b.x_top) {
    if (a.is_top()) return Cmp::Greater;
    if (b.is_top()) return Cmp::Less;
    return X.less(a.x_top - 1, b.x_top - 1) ? Cmp::Less : Cmp::Greater;
  }
  if (a.s != b.s) return a.s < b.s ? Cmp::Less : Cmp::Greater;
  return Cmp::Equal;
}

inline Cmp h_compare(const CodedOrder& X, const HSeq& s, const HSeq& t) {
  std::size_t k = std::min(s.size(), t.size());
  for (std::size_t j = 0; j < k; ++j) {
    Cmp c = h_entry_compare(X, s[j], t[j]);
    if (c != Cmp::Equal) return c;
  }
  if (s.size() > t.size()) return Cmp::Less;
  if (s.size() < t.size()) return Cmp::Greater;
  return Cmp::Equal;
}

// H[n](f): applies f^top to the first components, keeps the search data.
inline HSeq h_map(const OrderEmbedding& f, const HSeq& seq) {
  HSeq out = seq;
  for (HEntry& e : out) {
    if (!e.is_top()) e.x_top = f(e.x_top - 1) + 1;
  }
  return out;
}

// supp: the non-top first components, as codes of X.
inline FinSubset h_supp(OrderPtr X, const HSeq& seq) {
  std::vector<Code> elems;
  for (const HEntry& e : seq) {
    if (!e.is_top()) elems.push_back(e.x_top - 1);
  }
  return FinSubset{std::move(X), std::move(elems)};
}

// --- H[T,n](X) as a coded order ------------------------------------------

class HOrder final : public CodedOrder {
public:
  HOrder(FamilyPtr family, std::size_t n, OrderPtr X)
      : family_(std::move(family)), n_(n), X_(std::move(X)) {}

  bool member(Code c) const override { return h_member(*family_, n_, *X_, h_decode(c)); }
  bool less(Code a, Code b) const override {
    return h_compare(*X_, h_decode(a), h_decode(b)) == Cmp::Less;
  }
  std::string describe() const override {
    return "H[" + family_->describe() + "," + std::to_string(n_) + "](" + X_->describe() + ")";
  }

  const FamilyPtr& family() const { return family_; }
  std::size_t level() const { return n_; }
  const OrderPtr& base() const { return X_; }

private:
  FamilyPtr family_;
  std::size_t n_;
  OrderPtr X_;
};

inline OrderPtr h_order(FamilyPtr family, std::size_t n, OrderPtr X) {
  return std::make_shared<HOrder>(std::move(family), n, std::move(X));
}

// --- H[T,n] as a coded prae-dilator --------------------------------------

class HPraeDilator final : public PraeDilator {
public:
  HPraeDilator(FamilyPtr family, std::size_t n) : family_(std::move(family)), n_(n) {}

  std::string name() const override { return "H[" + family_->describe() + "," + std::to_string(n_) + "]"; }

  OrderPtr order_at(std::size_t m) const override { return h_order(family_, n_, canonical_order(m)); }

  Code apply(const FiniteOrderMap& f, Code sigma) const override {
    OrderEmbedding emb{canonical_order(f.source_size), canonical_order(f.target_size),
                       [&f](Code c) { return static_cast<Code>(f.images[static_cast<std::size_t>(c)]); }};
    return h_encode(h_map(emb, h_decode(sigma)));
  }

  std::vector<std::size_t> supp(std::size_t, Code sigma) const override {
    std::vector<std::size_t> s;
    for (const HEntry& e : h_decode(sigma)) {
      if (!e.is_top()) s.push_back(static_cast<std::size_t>(e.x_top - 1));
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  // Re-encoding mapped sequences can overflow; compare them entry-wise.
  Cmp mapped_compare(const FiniteOrderMap& f, Code sigma, const FiniteOrderMap& g,
                     Code tau) const override {
    OrderPtr target = canonical_order(f.target_size);
    OrderEmbedding ef{canonical_order(f.source_size), target,
                      [&f](Code c) { return static_cast<Code>(f.images[static_cast<std::size_t>(c)]); }};
    OrderEmbedding eg{canonical_order(g.source_size), target,
                      [&g](Code c) { return static_cast<Code>(g.images[static_cast<std::size_t>(c)]); }};
    return h_compare(*target, h_map(ef, h_decode(sigma)), h_map(eg, h_decode(tau)));
  }

private:
  FamilyPtr family_;
  std::size_t n_;
};

inline DilatorPtr h_prae_dilator(FamilyPtr family, std::size_t n) {
  return std::make_shared<HPraeDilator>(std::move(family), n);
}

// --- Isomorphism D^{H[n]}(X) = H[n](X) -----------------------------------

// tau |-> <a, sigma>: collapse the non-top entries of tau onto positions
// of its support.
inline DElement h_to_coded(const TreeFamily& family, std::size_t n, OrderPtr X, const HSeq& tau) {
  if (!h_member(family, n, *X, tau)) throw NotMember("h_to_coded applied to a non-member");
  FinSubset a = h_supp(X, tau);
  std::vector<Code> en = increasing_enumeration(a);
  HSeq sigma = tau;
  for (HEntry& e : sigma) {
    if (e.is_top()) continue;
    auto it = std::find(en.begin(), en.end(), e.x_top - 1);
    e.x_top = static_cast<Code>(it - en.begin()) + 1;
  }
  return DElement{std::move(a), h_encode(sigma)};
}

// <a, sigma> |-> H[n](iota_a o en_a)(sigma).
inline HSeq h_from_coded(const TreeFamily& family, std::size_t n, OrderPtr X, const DElement& e) {
  std::vector<Code> en = increasing_enumeration(e.support);
  OrderEmbedding emb{canonical_order(e.support.size()), X,
                     [en](Code i) { return en[static_cast<std::size_t>(i)]; }};
  HSeq tau = h_map(emb, h_decode(e.sigma));
  if (!h_member(family, n, *X, tau)) throw NotMember("h_from_coded produced a non-member");
  return tau;
}

}  // namespace forge
