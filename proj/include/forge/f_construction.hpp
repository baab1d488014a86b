#pragma once

// The composite prae-dilator F[T](X) = T_0^top + Sigma_{x in X}
// Sigma_{n in N^inf_-1} H[T,n](X|x), its normal structure, and the
// isomorphism between the class-sized orders F(X) and the extension of
// the coded restriction.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "forge/h_construction.hpp"

namespace forge {

struct FiberMismatch : OrderError {
  explicit FiberMismatch(const std::string& w) : OrderError("FiberMismatch: " + w) {}
};

// The index order {-1} u N u {infinity}: -1 has code 0, infinity code 1,
// the natural k code k+2.
namespace ninf {

inline constexpr Code minus_one = 0;
inline constexpr Code infinity = 1;
inline Code of_nat(std::size_t n) { return static_cast<Code>(n) + 2; }
inline bool is_finite(Code c) { return c >= 2; }
inline std::size_t nat_of(Code c) { return static_cast<std::size_t>(c - 2); }

inline Cmp compare(Code a, Code b) {
  auto key = [](Code c) -> Code { return c == minus_one ? 0 : (c == infinity ? UINT64_MAX : c); };
  Code ka = key(a), kb = key(b);
  if (ka < kb) return Cmp::Less;
  if (ka > kb) return Cmp::Greater;
  return Cmp::Equal;
}

}  // namespace ninf

namespace detail {

class NInfOrder final : public CodedOrder {
public:
  bool member(Code) const override { return true; }
  bool less(Code a, Code b) const override { return ninf::compare(a, b) == Cmp::Less; }
  std::string describe() const override { return "N with new minimal (-1, code 0) and maximal (inf, code 1) elements"; }
};

}  // namespace detail

inline OrderPtr ninf_order() { return std::make_shared<detail::NInfOrder>(); }

// An element of F[T](X).  Left components live in T_0^top (top = 0, a
// tree sequence s carries code seq(s)+1).  Right components <x,n,sigma>
// pair an element of X with a fiber index and an element of H[n](X|x);
// the fiber value for n in {-1,inf} is the single point star.
struct FElem {
  bool left = false;
  Code left_sigma = 0;
  Code x = 0;
  Code n = ninf::minus_one;
  HSeq h;  // empty for the star fibers

  static FElem mk_left(Code sigma) { return FElem{true, sigma, 0, 0, {}}; }
  static FElem mk_right(Code x, Code n, HSeq h = {}) { return FElem{false, 0, x, n, std::move(h)}; }
};

// Flat sequence coding: <0, sigma> for the left summand, <1, x, n, fiber>
// for the right.  Nesting Cantor pairs instead would square the fiber
// code three times and overflow the machine word almost immediately.
inline Code f_encode(const FElem& e) {
  if (e.left) return seq_code({0, e.left_sigma});
  Code fiber = ninf::is_finite(e.n) ? h_encode(e.h) : 0;
  return seq_code({1, e.x, e.n, fiber});
}

inline std::optional<FElem> f_decode(Code c) {
  Seq parts = unseq_code(c);
  if (parts.size() == 2 && parts[0] == 0) return FElem::mk_left(parts[1]);
  if (parts.size() != 4 || parts[0] != 1) return std::nullopt;
  Code x = parts[1], n = parts[2], fiber = parts[3];
  if (!ninf::is_finite(n) && fiber != 0) return std::nullopt;
  return FElem::mk_right(x, n, ninf::is_finite(n) ? h_decode(fiber) : HSeq{});
}

namespace detail {

// Non-owning view of the initial segment X|x; lives on the stack during
// membership and comparison checks.
class RestrictionView final : public CodedOrder {
public:
  RestrictionView(const CodedOrder& base, Code bound) : base_(base), bound_(bound) {}
  bool member(Code c) const override { return base_.member(c) && base_.less(c, bound_); }
  bool less(Code a, Code b) const override { return base_.less(a, b); }
  std::string describe() const override {
    return "view of (" + base_.describe() + ") below code " + std::to_string(bound_);
  }

private:
  const CodedOrder& base_;
  Code bound_;
};

}  // namespace detail

inline bool f_member(const TreeFamily& family, const CodedOrder& X, const FElem& e) {
  if (e.left) {
    if (e.left_sigma == 0) return true;  // top
    return family.at(0)->contains(unseq_code(e.left_sigma - 1));
  }
  if (!X.member(e.x)) return false;
  if (!ninf::is_finite(e.n)) return e.h.empty();
  detail::RestrictionView below{X, e.x};
  return h_member(family, ninf::nat_of(e.n), below, e.h);
}

inline Cmp f_compare(const TreeFamily&, const CodedOrder& X, const FElem& a, const FElem& b) {
  if (a.left != b.left) return a.left ? Cmp::Less : Cmp::Greater;
  if (a.left) {
    // T_0^top: top (code 0) is maximal, tree elements compare by KB
    if (a.left_sigma == b.left_sigma) return Cmp::Equal;
    if (a.left_sigma == 0) return Cmp::Greater;
    if (b.left_sigma == 0) return Cmp::Less;
    return kb_compare(unseq_code(a.left_sigma - 1), unseq_code(b.left_sigma - 1));
  }
  Cmp cx = compare(X, a.x, b.x);
  if (cx != Cmp::Equal) return cx;
  Cmp cn = ninf::compare(a.n, b.n);
  if (cn != Cmp::Equal) return cn;
  if (!ninf::is_finite(a.n)) return Cmp::Equal;  // star fiber
  return h_compare(X, a.h, b.h);  // entries lie below x, X's comparison agrees
}

// F(f): fixes the left summand, maps x and acts on the fiber by
// H[n](f restricted below x).
inline FElem f_map(const OrderEmbedding& f, const FElem& e) {
  if (e.left) return e;
  FElem out = e;
  out.x = f(e.x);
  if (ninf::is_finite(e.n)) out.h = h_map(f, e.h);
  return out;
}

inline FinSubset f_supp(OrderPtr X, const FElem& e) {
  if (e.left) return FinSubset{std::move(X), {}};
  FinSubset s = h_supp(X, e.h);
  s = FinSubset::unite(s, FinSubset{s.ambient, {e.x}});
  return s;
}

// mu^F_X(x) = <x, -1, star>.
inline FElem f_mu(Code x) { return FElem::mk_right(x, ninf::minus_one); }

// --- F[T](X) as a coded order --------------------------------------------

class FOrder final : public CodedOrder {
public:
  FOrder(FamilyPtr family, OrderPtr X) : family_(std::move(family)), X_(std::move(X)) {}

  bool member(Code c) const override {
    std::optional<FElem> e = f_decode(c);
    return e && f_member(*family_, *X_, *e);
  }
  bool less(Code a, Code b) const override {
    std::optional<FElem> ea = f_decode(a);
    std::optional<FElem> eb = f_decode(b);
    if (!ea || !eb) return false;
    return f_compare(*family_, *X_, *ea, *eb) == Cmp::Less;
  }
  std::string describe() const override {
    return "F[" + family_->describe() + "](" + X_->describe() + ")";
  }

private:
  FamilyPtr family_;
  OrderPtr X_;
};

inline OrderPtr f_order(FamilyPtr family, OrderPtr X) {
  return std::make_shared<FOrder>(std::move(family), std::move(X));
}

// --- F[T] as a coded normal prae-dilator ---------------------------------

class FPraeDilator final : public PraeDilator {
public:
  explicit FPraeDilator(FamilyPtr family) : family_(std::move(family)) {}

  std::string name() const override { return "F[" + family_->describe() + "]"; }

  OrderPtr order_at(std::size_t m) const override { return f_order(family_, canonical_order(m)); }

  Code apply(const FiniteOrderMap& f, Code sigma) const override {
    std::optional<FElem> e = f_decode(sigma);
    if (!e) throw InvalidElement("F.apply on undecodable code " + std::to_string(sigma));
    OrderEmbedding emb{canonical_order(f.source_size), canonical_order(f.target_size),
                       [&f](Code c) { return static_cast<Code>(f.images[static_cast<std::size_t>(c)]); }};
    return f_encode(f_map(emb, *e));
  }

  std::vector<std::size_t> supp(std::size_t m, Code sigma) const override {
    std::optional<FElem> e = f_decode(sigma);
    if (!e) throw InvalidElement("F.supp on undecodable code " + std::to_string(sigma));
    FinSubset s = f_supp(canonical_order(m), *e);
    std::vector<std::size_t> out;
    for (Code c : s.elements) out.push_back(static_cast<std::size_t>(c));
    return out;
  }

  std::optional<Code> mu1() const override { return f_encode(f_mu(0)); }

  // Re-encoding mapped elements can overflow; compare them structurally.
  Cmp mapped_compare(const FiniteOrderMap& f, Code sigma, const FiniteOrderMap& g,
                     Code tau) const override {
    std::optional<FElem> ea = f_decode(sigma);
    std::optional<FElem> eb = f_decode(tau);
    if (!ea || !eb) throw InvalidElement("F.mapped_compare on undecodable codes");
    OrderPtr target = canonical_order(f.target_size);
    OrderEmbedding ef{canonical_order(f.source_size), target,
                      [&f](Code c) { return static_cast<Code>(f.images[static_cast<std::size_t>(c)]); }};
    OrderEmbedding eg{canonical_order(g.source_size), target,
                      [&g](Code c) { return static_cast<Code>(g.images[static_cast<std::size_t>(c)]); }};
    return f_compare(*family_, *target, f_map(ef, *ea), f_map(eg, *eb));
  }

  const FamilyPtr& family() const { return family_; }

private:
  FamilyPtr family_;
};

inline std::shared_ptr<const FPraeDilator> f_prae_dilator(FamilyPtr family) {
  return std::make_shared<FPraeDilator>(std::move(family));
}

// --- Isomorphism F(X) = D^F(X) -------------------------------------------

// <bot,sigma> |-> <{}, <bot,sigma>>;
// <x,n,tau>   |-> <{x} u a, <|a|,n,sigma>> via the fiber isomorphism.
inline DElement f_to_coded(const TreeFamily& family, OrderPtr X, const FElem& e) {
  if (!f_member(family, *X, e)) throw NotMember("f_to_coded applied to a non-member");
  if (e.left) return DElement{FinSubset{X, {}}, f_encode(e)};
  if (!ninf::is_finite(e.n)) {
    return DElement{FinSubset{X, {e.x}}, f_encode(FElem::mk_right(0, e.n))};
  }
  std::size_t n = ninf::nat_of(e.n);
  DElement fiber = h_to_coded(family, n, restrict_below(X, e.x), e.h);
  FinSubset b = FinSubset::unite(FinSubset{X, fiber.support.elements}, FinSubset{X, {e.x}});
  HSeq sigma_h = h_decode(fiber.sigma);
  FElem coded = FElem::mk_right(static_cast<Code>(fiber.support.size()), e.n, std::move(sigma_h));
  return DElement{std::move(b), f_encode(coded)};
}

// Inverse: split the support at its largest element.
inline FElem f_from_coded(const TreeFamily& family, OrderPtr X, const DElement& d) {
  std::optional<FElem> inner = f_decode(d.sigma);
  if (!inner) throw NotMember("f_from_coded: undecodable sigma");
  if (inner->left) {
    if (!d.support.elements.empty()) throw NotMember("f_from_coded: left element with nonempty support");
    return *inner;
  }
  std::vector<Code> en = increasing_enumeration(d.support);
  if (en.empty()) throw NotMember("f_from_coded: right element with empty support");
  Code x = en.back();
  std::vector<Code> a(en.begin(), en.end() - 1);
  FElem out = FElem::mk_right(x, inner->n);
  if (ninf::is_finite(inner->n)) {
    std::size_t n = ninf::nat_of(inner->n);
    OrderPtr below = restrict_below(X, x);
    DElement fiber{FinSubset{below, std::move(a)}, h_encode(inner->h)};
    out.h = h_from_coded(family, n, below, fiber);
  } else if (!a.empty()) {
    throw NotMember("f_from_coded: star fiber with extra support");
  }
  if (!f_member(family, *X, out)) throw NotMember("f_from_coded produced a non-member");
  return out;
}

}  // namespace forge
