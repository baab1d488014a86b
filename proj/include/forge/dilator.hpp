#pragma once

// The coded prae-dilator interface, its extension D^T(X) to arbitrary
// orders, normal structures mu^T, and bound-parameterized law validators.

#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "forge/orders.hpp"

namespace forge {

struct InvalidElement : OrderError {
  explicit InvalidElement(const std::string& w) : OrderError("InvalidElement: " + w) {}
};
struct NotNormal : OrderError {
  explicit NotNormal(const std::string& w) : OrderError("NotNormal: " + w) {}
};

// Behavioral contract of a coded prae-dilator T.  The orders T(n) are
// typically infinite, so T is not a finite table; validators probe the
// laws up to explicit bounds.
class PraeDilator {
public:
  virtual ~PraeDilator() = default;
  virtual std::string name() const = 0;
  virtual OrderPtr order_at(std::size_t n) const = 0;
  virtual Code apply(const FiniteOrderMap& f, Code sigma) const = 0;
  // Ascending subset of {0,...,n-1}.
  virtual std::vector<std::size_t> supp(std::size_t n, Code sigma) const = 0;
  // Seed of the normal structure, mu^T_1(0), when T is normal.
  virtual std::optional<Code> mu1() const { return std::nullopt; }
  // All members of T(n) with code <= bound, ascending.  The default scan
  // is fine for small bounds; dilators with sparse codes override it.
  virtual std::vector<Code> members_at(std::size_t n, Code bound) const {
    return order_at(n)->enumerate(bound);
  }
  // Compares T(f)(sigma) with T(g)(tau) in the common target.  The
  // default materializes both image codes; dilators whose image codes
  // can exceed the machine word compare structurally instead.
  virtual Cmp mapped_compare(const FiniteOrderMap& f, Code sigma, const FiniteOrderMap& g,
                             Code tau) const {
    if (f.target_size != g.target_size) throw DomainViolation("mapped_compare: target mismatch");
    Code ms = apply(f, sigma);
    Code mt = apply(g, tau);
    if (ms == mt) return Cmp::Equal;
    return order_at(f.target_size)->less(ms, mt) ? Cmp::Less : Cmp::Greater;
  }
};

using DilatorPtr = std::shared_ptr<const PraeDilator>;

// An element <a, sigma> of D^T(X): a finite subset of X together with a
// code of full support in T(|a|).
struct DElement {
  FinSubset support;
  Code sigma = 0;
};

inline bool full_support(const PraeDilator& T, std::size_t n, Code sigma) {
  std::vector<std::size_t> s = T.supp(n, sigma);
  if (s.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] != i) return false;
  }
  return true;
}

inline bool d_member(const PraeDilator& T, const CodedOrder& X, const FinSubset& a, Code sigma) {
  for (Code c : a.elements) {
    if (!X.member(c)) return false;
  }
  if (!T.order_at(a.size())->member(sigma)) return false;
  return full_support(T, a.size(), sigma);
}

inline bool d_member(const PraeDilator& T, const CodedOrder& X, const DElement& e) {
  return d_member(T, X, e.support, e.sigma);
}

inline Cmp d_compare(const PraeDilator& T, const DElement& lhs, const DElement& rhs) {
  FinSubset u = FinSubset::unite(lhs.support, rhs.support);
  Code ls = T.apply(induced_finite_map(lhs.support, u), lhs.sigma);
  Code rs = T.apply(induced_finite_map(rhs.support, u), rhs.sigma);
  // Equality of the mapped codes forces equality of the elements.
  return compare(*T.order_at(u.size()), ls, rs);
}

// D^T(f)<a,sigma> = <[f](a), sigma>; the support of <a,sigma> is a itself.
inline DElement d_map(const PraeDilator&, const OrderEmbedding& f, const DElement& e) {
  return DElement{finite_image(f, e.support), e.sigma};
}

inline FinSubset d_supp(const DElement& e) { return e.support; }

// mu^T_n(m) = T(iota)(mu^T_1(0)) for iota : 1 -> n with image {m}.
inline Code mu_value(const PraeDilator& T, std::size_t n, std::size_t m) {
  std::optional<Code> seed = T.mu1();
  if (!seed) throw NotNormal(T.name() + " carries no normal structure");
  if (m >= n) throw DomainViolation("mu_value requires m < n");
  return T.apply(FiniteOrderMap{1, n, {m}}, *seed);
}

// D^{mu^T}_X(x) = <{x}, mu^T_1(0)>.
inline DElement d_mu(const PraeDilator& T, OrderPtr X, Code x) {
  std::optional<Code> seed = T.mu1();
  if (!seed) throw NotNormal(T.name() + " carries no normal structure");
  if (!X->member(x)) throw DomainViolation("d_mu applied to a non-member");
  return DElement{FinSubset{std::move(X), {x}}, *seed};
}

// --- D^T(X) as a coded order ---------------------------------------------

// Elements <a, sigma> are coded as pair(seq(a), sigma) where a is listed
// ascending by code.
class DOrder final : public CodedOrder {
public:
  DOrder(DilatorPtr T, OrderPtr X) : T_(std::move(T)), X_(std::move(X)) {}

  static Code encode(const DElement& e) { return pair_code(seq_code(e.support.elements), e.sigma); }

  std::optional<DElement> decode(Code c) const {
    auto [aseq, sigma] = unpair_code(c);
    Seq elems = unseq_code(aseq);
    for (std::size_t i = 1; i < elems.size(); ++i) {
      if (elems[i - 1] >= elems[i]) return std::nullopt;  // non-canonical set code
    }
    DElement e{FinSubset{X_, std::move(elems)}, sigma};
    if (!d_member(*T_, *X_, e)) return std::nullopt;
    return e;
  }

  bool member(Code c) const override { return decode(c).has_value(); }

  bool less(Code a, Code b) const override {
    auto ea = decode(a);
    auto eb = decode(b);
    if (!ea || !eb) return false;
    return d_compare(*T_, *ea, *eb) == Cmp::Less;
  }

  std::string describe() const override {
    return "D^" + T_->name() + "(" + X_->describe() + "); <a,sigma> coded as pair(seq(a),sigma)";
  }

  const DilatorPtr& dilator() const { return T_; }
  const OrderPtr& base() const { return X_; }

private:
  DilatorPtr T_;
  OrderPtr X_;
};

inline OrderPtr d_order(DilatorPtr T, OrderPtr X) { return std::make_shared<DOrder>(std::move(T), std::move(X)); }

// Overrides the normal-structure seed of a dilator; used to probe
// candidate normal structures.
class WithMu1 final : public PraeDilator {
public:
  WithMu1(DilatorPtr base, Code seed) : base_(std::move(base)), seed_(seed) {}
  std::string name() const override { return base_->name() + "[mu1=" + std::to_string(seed_) + "]"; }
  OrderPtr order_at(std::size_t n) const override { return base_->order_at(n); }
  Code apply(const FiniteOrderMap& f, Code sigma) const override { return base_->apply(f, sigma); }
  std::vector<std::size_t> supp(std::size_t n, Code sigma) const override { return base_->supp(n, sigma); }
  std::optional<Code> mu1() const override { return seed_; }

private:
  DilatorPtr base_;
  Code seed_;
};

inline DilatorPtr with_mu1(DilatorPtr base, Code seed) {
  return std::make_shared<WithMu1>(std::move(base), seed);
}

// --- Law validators -------------------------------------------------------

struct Violation {
  std::string law;
  std::string witness;
};

struct ValidationReport {
  std::string subject;
  std::uint64_t checks = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void fail(std::string law, std::string witness) {
    violations.push_back(Violation{std::move(law), std::move(witness)});
  }
};

namespace detail {

inline std::string show_map(const FiniteOrderMap& f) {
  std::ostringstream os;
  os << f.source_size << "->" << f.target_size << "[";
  for (std::size_t i = 0; i < f.images.size(); ++i) os << (i ? "," : "") << f.images[i];
  os << "]";
  return os.str();
}

inline std::string show_supp(const std::vector<std::size_t>& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "}";
  return os.str();
}

}  // namespace detail

// Exhaustively checks the prae-dilator laws for arities up to arity_bound
// and codes up to code_bound: functor laws, strict monotonicity of the
// order action, naturality of supp, and the support condition.  The
// witness code sigma_0 of the support condition is searched among codes
// up to max(code_bound, sigma); all built-in dilators keep codes
// non-increasing under support collapse, so the bound is adequate at desk
// scale.
inline ValidationReport validate_prae_dilator(const PraeDilator& T, std::size_t arity_bound, Code code_bound) {
  ValidationReport rep;
  rep.subject = T.name();

  std::vector<std::vector<Code>> members(arity_bound + 1);
  for (std::size_t n = 0; n <= arity_bound; ++n) members[n] = T.order_at(n)->enumerate(code_bound);

  for (std::size_t n = 0; n <= arity_bound; ++n) {
    const FiniteOrderMap id = FiniteOrderMap::identity(n);
    for (Code sigma : members[n]) {
      ++rep.checks;
      if (T.apply(id, sigma) != sigma) {
        rep.fail("functor-identity", T.name() + "(id_" + std::to_string(n) + ")(" + std::to_string(sigma) + ")");
      }
      // supp lands in {0,...,n-1}
      std::vector<std::size_t> s = T.supp(n, sigma);
      ++rep.checks;
      for (std::size_t v : s) {
        if (v >= n) {
          rep.fail("supp-range", "supp_" + std::to_string(n) + "(" + std::to_string(sigma) + ") = " + detail::show_supp(s));
          break;
        }
      }
      // support condition: sigma = T(en)(sigma0) for some sigma0 of T(|s|)
      ++rep.checks;
      FiniteOrderMap en{s.size(), n, s};
      bool found = false;
      Code search_bound = std::max<Code>(code_bound, sigma);
      for (Code cand : T.order_at(s.size())->enumerate(search_bound)) {
        if (T.apply(en, cand) == sigma) {
          found = true;
          break;
        }
      }
      if (!found) {
        rep.fail("support-condition",
                 "no preimage of " + std::to_string(sigma) + " in T(" + std::to_string(s.size()) +
                     ") along " + detail::show_map(en));
      }
    }
  }

  for (std::size_t m = 0; m <= arity_bound; ++m) {
    for (std::size_t n = m; n <= arity_bound; ++n) {
      for (const FiniteOrderMap& f : all_finite_maps(m, n)) {
        const OrderPtr Tn = T.order_at(n);
        for (Code sigma : members[m]) {
          Code image = T.apply(f, sigma);
          ++rep.checks;
          if (!Tn->member(image)) {
            rep.fail("apply-closure", "T(" + detail::show_map(f) + ")(" + std::to_string(sigma) + ") = " +
                                          std::to_string(image) + " is not in T(" + std::to_string(n) + ")");
            continue;
          }
          // naturality of supp
          std::vector<std::size_t> lhs = T.supp(n, image);
          std::vector<std::size_t> rhs;
          for (std::size_t v : T.supp(m, sigma)) rhs.push_back(f.images[v]);
          std::sort(rhs.begin(), rhs.end());
          ++rep.checks;
          if (lhs != rhs) {
            rep.fail("supp-naturality", "supp(T(" + detail::show_map(f) + ")(" + std::to_string(sigma) + ")) = " +
                                            detail::show_supp(lhs) + " vs image " + detail::show_supp(rhs));
          }
        }
        // strict monotonicity
        const OrderPtr Tm = T.order_at(m);
        for (std::size_t i = 0; i < members[m].size(); ++i) {
          for (std::size_t j = i + 1; j < members[m].size(); ++j) {
            Code lo = members[m][i], hi = members[m][j];
            if (!Tm->less(lo, hi)) std::swap(lo, hi);
            ++rep.checks;
            if (!Tn->less(T.apply(f, lo), T.apply(f, hi))) {
              rep.fail("apply-monotone", "T(" + detail::show_map(f) + ") fails on " + std::to_string(lo) + " < " +
                                             std::to_string(hi));
            }
          }
        }
        // composition with every g : n -> k
        for (std::size_t k = n; k <= arity_bound; ++k) {
          for (const FiniteOrderMap& g : all_finite_maps(n, k)) {
            FiniteOrderMap gf = FiniteOrderMap::compose(g, f);
            for (Code sigma : members[m]) {
              ++rep.checks;
              if (T.apply(gf, sigma) != T.apply(g, T.apply(f, sigma))) {
                rep.fail("functor-composition",
                         "g=" + detail::show_map(g) + " f=" + detail::show_map(f) + " sigma=" + std::to_string(sigma));
              }
            }
          }
        }
      }
    }
  }
  return rep;
}

// Checks the defining equivalence of a normal structure,
//   sigma < mu^T_n(m)  iff  supp(sigma) contained in {0,...,m-1},
// together with naturality of n |-> mu^T_n and supp(mu^T_1(0)) = {0}.
inline ValidationReport validate_normal(const PraeDilator& T, std::size_t arity_bound, Code code_bound) {
  ValidationReport rep;
  rep.subject = T.name() + " (normal structure)";
  std::optional<Code> seed = T.mu1();
  if (!seed) {
    rep.fail("mu1-present", "no candidate mu^T_1(0)");
    return rep;
  }
  ++rep.checks;
  if (!T.order_at(1)->member(*seed)) {
    rep.fail("mu1-member", "mu1 = " + std::to_string(*seed) + " is not in T(1)");
    return rep;
  }
  ++rep.checks;
  if (T.supp(1, *seed) != std::vector<std::size_t>{0}) {
    rep.fail("mu1-support", "supp_1(" + std::to_string(*seed) + ") = " + detail::show_supp(T.supp(1, *seed)));
  }

  for (std::size_t n = 1; n <= arity_bound; ++n) {
    const OrderPtr Tn = T.order_at(n);
    std::vector<Code> members = Tn->enumerate(code_bound);
    for (std::size_t m = 0; m < n; ++m) {
      Code mu = mu_value(T, n, m);
      for (Code sigma : members) {
        bool below = Tn->less(sigma, mu);
        std::vector<std::size_t> s = T.supp(n, sigma);
        bool bounded = true;
        for (std::size_t v : s) bounded = bounded && v < m;
        ++rep.checks;
        if (below != bounded) {
          rep.fail("normal-equivalence", "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                             " sigma=" + std::to_string(sigma) + " below=" + (below ? "1" : "0") +
                                             " supp=" + detail::show_supp(s));
        }
      }
      // mu_n is strictly increasing
      if (m + 1 < n) {
        ++rep.checks;
        if (!Tn->less(mu, mu_value(T, n, m + 1))) {
          rep.fail("mu-increasing", "mu_" + std::to_string(n) + " not increasing at " + std::to_string(m));
        }
      }
    }
    // naturality: T(f)(mu_m(k)) = mu_n(f(k))
    for (std::size_t m = 1; m <= n; ++m) {
      for (const FiniteOrderMap& f : all_finite_maps(m, n)) {
        for (std::size_t k = 0; k < m; ++k) {
          ++rep.checks;
          if (T.apply(f, mu_value(T, m, k)) != mu_value(T, n, f.images[k])) {
            rep.fail("mu-naturality", "f=" + detail::show_map(f) + " k=" + std::to_string(k));
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace forge
