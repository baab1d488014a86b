#pragma once

// The notation system Fix(T) for the initial fixed point of a coded
// prae-dilator: terms xi<a,sigma>, the recursive comparison, length and
// height functions, the isomorphism xi_T, embeddings into arbitrary
// fixed points, stages Fix_n(T) and the stage isomorphisms, bounded
// enumeration, and an independent epsilon_0 comparison oracle.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "forge/dilator.hpp"

namespace forge {

struct InvalidTerm : OrderError {
  explicit InvalidTerm(const std::string& w) : OrderError("InvalidTerm: " + w) {}
};
struct StageViolation : OrderError {
  explicit StageViolation(const std::string& w) : OrderError("StageViolation: " + w) {}
};
struct InvalidWitness : OrderError {
  explicit InvalidWitness(const std::string& w) : OrderError("InvalidWitness: " + w) {}
};

// A candidate term before validation; this is what JSON deserializes to.
struct RawTerm {
  std::vector<RawTerm> children;
  Code sigma = 0;
};

// A validated, hash-consed term.  Children are strictly ascending in the
// order of Fix(T).  Goedel numbers quadruple their bit length with every
// level of nesting, so they (and the lengths built on them) are big
// integers computed lazily: deep towers never need them, the comparison
// being structural.
struct Term {
  std::vector<const Term*> children;
  Code sigma = 0;
  std::size_t height = 0;
  mutable std::optional<Big> goedel_cache;
  mutable std::optional<Big> length_cache;
};

using TermPtr = const Term*;

inline const Big& term_goedel(TermPtr t) {
  if (!t->goedel_cache) {
    std::vector<Big> gs;
    for (TermPtr c : t->children) gs.push_back(term_goedel(c));
    std::sort(gs.begin(), gs.end());
    Big acc = 0;
    for (const Big& g : gs) acc = big_seq_append(acc, g);
    t->goedel_cache = big_seq_append(acc, Big(t->sigma)) + 1;
  }
  return *t->goedel_cache;
}

// L_T = max{goedel, 1 + sum 2 L_T(child)}
inline const Big& term_length(TermPtr t) {
  if (!t->length_cache) {
    Big sum = 1;
    for (TermPtr c : t->children) sum += 2 * term_length(c);
    t->length_cache = std::max(term_goedel(t), sum);
  }
  return *t->length_cache;
}

// Fix(T) for a fixed prae-dilator T.  Owns the term arena and the
// comparison memo; terms from different systems must not be mixed.
class FixSystem {
public:
  explicit FixSystem(DilatorPtr T) : T_(std::move(T)) {}
  FixSystem(const FixSystem&) = delete;
  FixSystem& operator=(const FixSystem&) = delete;

  const DilatorPtr& dilator() const { return T_; }

  // xi<a,sigma> with a given as interned terms; sorts a, then checks the
  // membership and full-support conditions of the definition.
  TermPtr make(std::vector<TermPtr> children, Code sigma) {
    std::sort(children.begin(), children.end(),
              [this](TermPtr s, TermPtr t) { return compare(s, t) == Cmp::Less; });
    for (std::size_t i = 0; i + 1 < children.size(); ++i) {
      if (children[i] == children[i + 1]) throw InvalidTerm("children are not pairwise distinct");
    }
    std::size_t k = children.size();
    if (!T_->order_at(k)->member(sigma)) {
      throw InvalidTerm("sigma " + std::to_string(sigma) + " is not in T(" + std::to_string(k) + ")");
    }
    std::vector<std::size_t> sp = T_->supp(k, sigma);
    bool full = sp.size() == k;
    for (std::size_t i = 0; full && i < k; ++i) full = sp[i] == i;
    if (!full) throw InvalidTerm("sigma lacks full support at arity " + std::to_string(k));

    Key key{children, sigma};
    auto it = interned_.find(key);
    if (it != interned_.end()) return it->second;

    Term t;
    t.children = children;
    t.sigma = sigma;
    for (TermPtr c : children) t.height = std::max(t.height, c->height + 1);

    arena_.push_back(std::move(t));
    TermPtr p = &arena_.back();
    interned_.emplace(std::move(key), p);
    return p;
  }

  // Recursively interns a raw term; throws InvalidTerm when the
  // definition is violated anywhere in the tree.
  TermPtr intern(const RawTerm& raw) {
    std::vector<TermPtr> children;
    children.reserve(raw.children.size());
    for (const RawTerm& c : raw.children) children.push_back(intern(c));
    return make(std::move(children), raw.sigma);
  }

  bool valid(const RawTerm& raw) {
    try {
      intern(raw);
      return true;
    } catch (const InvalidTerm&) {
      return false;
    } catch (const InvalidElement&) {
      return false;
    }
  }

  // Def. of the order on Fix(T): map both codes into T(|a u b|) along the
  // maps induced by a, b < a u b and compare there.  The recursion runs
  // on children, whose lengths are strictly smaller.
  Cmp compare(TermPtr s, TermPtr t) const {
    if (s == t) return Cmp::Equal;
    auto it = memo_.find({s, t});
    if (it != memo_.end()) return it->second;
    std::vector<TermPtr> u = merged_children(s, t);
    Cmp r = T_->mapped_compare(induced(s->children, u), s->sigma, induced(t->children, u), t->sigma);
    memo_.emplace(std::make_pair(s, t), r);
    memo_.emplace(std::make_pair(t, s), flip(r));
    return r;
  }

  bool less(TermPtr s, TermPtr t) const { return compare(s, t) == Cmp::Less; }

private:
  using Key = std::pair<std::vector<TermPtr>, Code>;

  std::vector<TermPtr> merged_children(TermPtr s, TermPtr t) const {
    std::vector<TermPtr> u;
    const auto& a = s->children;
    const auto& b = t->children;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) {
        u.push_back(a[i]);
        ++i, ++j;
        continue;
      }
      if (compare(a[i], b[j]) == Cmp::Less) {
        u.push_back(a[i++]);
      } else {
        u.push_back(b[j++]);
      }
    }
    while (i < a.size()) u.push_back(a[i++]);
    while (j < b.size()) u.push_back(b[j++]);
    return u;
  }

  FiniteOrderMap induced(const std::vector<TermPtr>& a, const std::vector<TermPtr>& u) const {
    FiniteOrderMap f;
    f.source_size = a.size();
    f.target_size = u.size();
    for (TermPtr s : a) {
      auto it = std::find(u.begin(), u.end(), s);
      f.images.push_back(static_cast<std::size_t>(it - u.begin()));
    }
    return f;
  }

  DilatorPtr T_;
  std::deque<Term> arena_;  // stable addresses
  std::map<Key, TermPtr> interned_;
  mutable std::map<std::pair<TermPtr, TermPtr>, Cmp> memo_;
};

// --- Metrics and stages ---------------------------------------------------

struct TermMetrics {
  Big goedel;
  Big length;
  std::size_t height = 0;
};

inline TermMetrics metrics(TermPtr t) { return TermMetrics{term_goedel(t), term_length(t), t->height}; }

// Fix_n(T) = {s | h_T(s) < n}; in particular Fix_0(T) is empty.
inline bool stage_member(TermPtr t, std::size_t n) { return t->height < n; }

// --- Fix(T) as a coded order ----------------------------------------------

// Codes are goedel numbers, restricted to terms whose goedel number fits
// a machine word.  decode is the inverse of the goedel numbering.
inline std::optional<TermPtr> decode_term(FixSystem& sys, Code c) {
  if (c < 2) return std::nullopt;
  Seq parts = unseq_code(c - 1);
  if (parts.empty()) return std::nullopt;
  Code sigma = parts.back();
  parts.pop_back();
  std::vector<TermPtr> children;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0 && parts[i - 1] >= parts[i]) return std::nullopt;  // canonical: strictly ascending
    std::optional<TermPtr> child = decode_term(sys, parts[i]);
    if (!child) return std::nullopt;
    children.push_back(*child);
  }
  try {
    TermPtr t = sys.make(std::move(children), sigma);
    if (term_goedel(t) != c) return std::nullopt;
    return t;
  } catch (const InvalidTerm&) {
    return std::nullopt;
  } catch (const InvalidElement&) {
    return std::nullopt;
  }
}

class FixOrder final : public CodedOrder {
public:
  explicit FixOrder(std::shared_ptr<FixSystem> sys) : sys_(std::move(sys)) {}

  bool member(Code c) const override { return decode_term(*sys_, c).has_value(); }
  bool less(Code a, Code b) const override {
    std::optional<TermPtr> s = decode_term(*sys_, a);
    std::optional<TermPtr> t = decode_term(*sys_, b);
    if (!s || !t) return false;
    return sys_->compare(*s, *t) == Cmp::Less;
  }
  std::string describe() const override {
    return "Fix(" + sys_->dilator()->name() + "); codes are goedel numbers";
  }

  FixSystem& system() const { return *sys_; }

private:
  std::shared_ptr<FixSystem> sys_;
};

inline std::shared_ptr<FixOrder> fix_order(std::shared_ptr<FixSystem> sys) {
  return std::make_shared<FixOrder>(std::move(sys));
}

// --- xi_T -----------------------------------------------------------------

// Term level: xi_T reads a coded pair over Fix(T) literally as a term.
inline TermPtr xi_apply(FixSystem& sys, const std::vector<TermPtr>& support, Code sigma) {
  return sys.make(support, sigma);
}

inline std::pair<std::vector<TermPtr>, Code> xi_invert(TermPtr t) {
  return {t->children, t->sigma};
}

// Code level: xi_T on D^T(Fix(T)) with Fix(T) presented as a FixOrder.
inline Code xi_apply_coded(const FixOrder& fix, const DElement& d) {
  std::vector<TermPtr> support;
  for (Code c : increasing_enumeration(d.support)) {
    std::optional<TermPtr> s = decode_term(fix.system(), c);
    if (!s) throw InvalidElement("support code " + std::to_string(c) + " is not a term");
    support.push_back(*s);
  }
  TermPtr t = xi_apply(fix.system(), support, d.sigma);
  if (term_goedel(t) > Big(UINT64_MAX)) throw CodingOverflow{};
  return static_cast<Code>(term_goedel(t));
}

inline DElement xi_invert_coded(std::shared_ptr<const FixOrder> fix, Code c) {
  std::optional<TermPtr> t = decode_term(fix->system(), c);
  if (!t) throw InvalidElement("code " + std::to_string(c) + " is not a term");
  std::vector<Code> codes;
  for (TermPtr s : (*t)->children) codes.push_back(static_cast<Code>(term_goedel(s)));
  return DElement{FinSubset{fix, std::move(codes)}, (*t)->sigma};
}

// --- Stage isomorphism D^T(Fix_n(T)) = Fix_{n+1}(T) -----------------------

inline TermPtr stage_iso_forward(FixSystem& sys, std::size_t n, const std::vector<TermPtr>& support,
                                 Code sigma) {
  for (TermPtr s : support) {
    if (!stage_member(s, n)) throw StageViolation("support term of height " + std::to_string(s->height) +
                                                  " is outside stage " + std::to_string(n));
  }
  return sys.make(support, sigma);
}

inline std::pair<std::vector<TermPtr>, Code> stage_iso_backward(std::size_t n, TermPtr t) {
  if (!stage_member(t, n + 1)) {
    throw StageViolation("term of height " + std::to_string(t->height) + " is outside stage " +
                         std::to_string(n + 1));
  }
  return {t->children, t->sigma};
}

// --- Embeddings into arbitrary fixed points -------------------------------

// A fixed point of D^T presented on a coded order X: xi maps coded pairs
// over X into X.
struct FixedPointWitness {
  OrderPtr X;
  std::function<Code(const DElement&)> xi;
};

// j(xi<a,sigma>) = xi_X(<[j] a, sigma>), by recursion on terms.  Because j
// is order-preserving, the image of a enumerated in X-order lists the
// children in their Fix(T)-order, so sigma needs no adjustment.
inline Code fix_embed(const FixedPointWitness& w, TermPtr t, std::map<TermPtr, Code>& memo) {
  auto it = memo.find(t);
  if (it != memo.end()) return it->second;
  std::vector<Code> image;
  for (TermPtr s : t->children) image.push_back(fix_embed(w, s, memo));
  Code out = w.xi(DElement{FinSubset{w.X, std::move(image)}, t->sigma});
  if (!w.X->member(out)) throw InvalidWitness("xi_X left its field at " + std::to_string(out));
  memo.emplace(t, out);
  return out;
}

inline Code fix_embed(const FixedPointWitness& w, TermPtr t) {
  std::map<TermPtr, Code> memo;
  return fix_embed(w, t, memo);
}

// --- Bounded enumeration --------------------------------------------------

namespace detail {

// All sigma completing the given children into a term of length <= bound.
inline void complete_terms(FixSystem& sys, const std::vector<TermPtr>& children, const Big& bound,
                           std::vector<TermPtr>& out) {
  Big prefix = 0;
  {
    std::vector<Big> gs;
    for (TermPtr c : children) gs.push_back(term_goedel(c));
    std::sort(gs.begin(), gs.end());
    for (const Big& g : gs) prefix = big_seq_append(prefix, g);
  }
  // goedel = pair(prefix, sigma) + 2 is strictly monotone in sigma;
  // binary-search the largest admissible sigma code.
  auto fits = [&](Code sigma) { return big_seq_append(prefix, Big(sigma)) + 1 <= bound; };
  if (!fits(0)) return;
  Code lo = 0, hi = UINT64_MAX;
  while (lo < hi) {
    Code mid = lo + (hi - lo) / 2 + ((hi - lo) & 1);
    if (fits(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  for (Code sigma : sys.dilator()->members_at(children.size(), lo)) {
    try {
      TermPtr t = sys.make(children, sigma);
      if (term_length(t) <= bound) out.push_back(t);
    } catch (const InvalidTerm&) {
    } catch (const InvalidElement&) {
    }
  }
}

// Minimal goedel number any term with exactly these children can have.
inline Big min_goedel(const std::vector<TermPtr>& children) {
  std::vector<Big> gs;
  for (TermPtr c : children) gs.push_back(term_goedel(c));
  std::sort(gs.begin(), gs.end());
  Big acc = 0;
  for (const Big& g : gs) acc = big_seq_append(acc, g);
  return big_seq_append(acc, Big(0)) + 1;
}

inline void subsets_rec(FixSystem& sys, const std::vector<TermPtr>& pool, std::size_t from,
                        std::vector<TermPtr>& chosen, const Big& budget, const Big& bound,
                        std::vector<TermPtr>& out) {
  if (!chosen.empty()) complete_terms(sys, chosen, bound, out);
  for (std::size_t i = from; i < pool.size(); ++i) {
    Big cost = 2 * term_length(pool[i]);
    if (cost >= budget) continue;
    chosen.push_back(pool[i]);
    // enlarging the child set only ever increases the goedel number, so
    // an over-budget prefix rules out all of its supersets as well
    if (min_goedel(chosen) <= bound) {
      subsets_rec(sys, pool, i + 1, chosen, budget - cost, bound, out);
    }
    chosen.pop_back();
  }
}

}  // namespace detail

// Exactly the terms with L_T <= l_bound, sorted by the order of Fix(T).
// Works level by level: children of a term are strictly shorter, so the
// pool of potential children stabilizes.
inline std::vector<TermPtr> enumerate_fix(FixSystem& sys, const Big& l_bound) {
  std::vector<TermPtr> found;
  detail::complete_terms(sys, {}, l_bound, found);
  std::sort(found.begin(), found.end(),
            [&sys](TermPtr s, TermPtr t) { return sys.less(s, t); });
  while (true) {
    std::vector<TermPtr> fresh;
    std::vector<TermPtr> chosen;
    // children cost 1 + sum 2 L <= l_bound
    detail::subsets_rec(sys, found, 0, chosen, l_bound, l_bound, fresh);
    std::size_t before = found.size();
    for (TermPtr t : fresh) {
      if (std::find(found.begin(), found.end(), t) == found.end()) found.push_back(t);
    }
    if (found.size() == before) break;
    std::sort(found.begin(), found.end(),
              [&sys](TermPtr s, TermPtr t) { return sys.less(s, t); });
  }
  return found;
}

// --- epsilon_0 oracle -----------------------------------------------------

// An ordinal below epsilon_0 as a sum omega^e_1 + ... + omega^e_k with
// the exponents themselves of the same shape.
struct Eps0 {
  std::vector<Eps0> exps;
};

inline Cmp eps0_compare(const Eps0& u, const Eps0& v);

namespace detail {

inline Eps0 eps0_normalize(const Eps0& u) {
  Eps0 out;
  for (const Eps0& e : u.exps) out.exps.push_back(eps0_normalize(e));
  std::sort(out.exps.begin(), out.exps.end(),
            [](const Eps0& a, const Eps0& b) { return eps0_compare(a, b) == Cmp::Greater; });
  return out;
}

}  // namespace detail

inline Cmp eps0_compare(const Eps0& u, const Eps0& v) {
  Eps0 nu = detail::eps0_normalize(u);
  Eps0 nv = detail::eps0_normalize(v);
  for (std::size_t i = 0; i < nu.exps.size() && i < nv.exps.size(); ++i) {
    Cmp c = eps0_compare(nu.exps[i], nv.exps[i]);
    if (c != Cmp::Equal) return c;
  }
  if (nu.exps.size() < nv.exps.size()) return Cmp::Less;
  if (nu.exps.size() > nv.exps.size()) return Cmp::Greater;
  return Cmp::Equal;
}

// Unfolds a term of Fix(omega) into an iterated Cantor normal form: sigma
// lists exponent positions into the children taken in increasing order.
inline Eps0 unfold_omega_term(TermPtr t) {
  Eps0 out;
  for (Code i : unseq_code(t->sigma)) {
    out.exps.push_back(unfold_omega_term(t->children[static_cast<std::size_t>(i)]));
  }
  return out;
}

}  // namespace forge
