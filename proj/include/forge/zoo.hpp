#pragma once

// Concrete dilators used throughout: the Cantor normal form dilator
// X |-> omega^X, the top dilator X |-> X + {top}, and constant dilators.
// omega and top also act on arbitrary coded orders (class-sized form),
// which is what evaluate_class exercises.

#include <memory>
#include <string>
#include <vector>

#include "forge/dilator.hpp"

namespace forge {

struct MalformedCnf : OrderError {
  explicit MalformedCnf(const std::string& w) : OrderError("MalformedCnf: " + w) {}
};
struct Unsupported : OrderError {
  explicit Unsupported(const std::string& w) : OrderError("Unsupported: " + w) {}
};

// A dilator that is given on arbitrary coded orders, not just on the
// category of natural numbers.  Only zoo dilators provide this.
class ClassDilator {
public:
  virtual ~ClassDilator() = default;
  virtual OrderPtr order_on(OrderPtr X) const = 0;
  virtual Code apply_on(const OrderEmbedding& f, Code sigma) const = 0;
};

// T(iota_a o en_a)(sigma): evaluates a coded pair over X into the
// class-sized order T(X).  Intentionally does not require full support;
// the collapse of ill-formed pairs is part of what the isomorphism
// D^{T|N}(X) = T(X) demonstrates.
inline Code evaluate_class(const ClassDilator& T, OrderPtr X, const FinSubset& a, Code sigma) {
  std::vector<Code> en = increasing_enumeration(a);
  OrderEmbedding f{canonical_order(a.size()), X, [en](Code i) { return en[static_cast<std::size_t>(i)]; }};
  return T.apply_on(f, sigma);
}

// --- omega^X --------------------------------------------------------------

// Cantor normal forms over X: a code is seq(<x_1,...,x_k>) with weakly
// decreasing exponents x_i in X; the empty form is minimal.
inline bool cnf_valid(const CodedOrder& X, const Seq& exps) {
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (!X.member(exps[i])) return false;
    if (i > 0 && X.less(exps[i - 1], exps[i])) return false;
  }
  return true;
}

inline Cmp cnf_compare(const CodedOrder& X, const Seq& u, const Seq& v) {
  if (!cnf_valid(X, u) || !cnf_valid(X, v)) throw MalformedCnf("exponents not weakly decreasing members");
  for (std::size_t i = 0; i < u.size() && i < v.size(); ++i) {
    Cmp c = compare(X, u[i], v[i]);
    if (c != Cmp::Equal) return c;
  }
  if (u.size() < v.size()) return Cmp::Less;
  if (u.size() > v.size()) return Cmp::Greater;
  return Cmp::Equal;
}

namespace detail {

class OmegaOrder final : public CodedOrder {
public:
  explicit OmegaOrder(OrderPtr base) : base_(std::move(base)) {}
  bool member(Code c) const override { return cnf_valid(*base_, unseq_code(c)); }
  bool less(Code a, Code b) const override {
    return cnf_compare(*base_, unseq_code(a), unseq_code(b)) == Cmp::Less;
  }
  std::string describe() const override {
    return "omega^(" + base_->describe() + "); Cantor normal forms coded as exponent sequences";
  }

private:
  OrderPtr base_;
};

}  // namespace detail

inline OrderPtr omega_order(OrderPtr base) { return std::make_shared<detail::OmegaOrder>(std::move(base)); }

class OmegaDilator final : public PraeDilator, public ClassDilator {
public:
  std::string name() const override { return "omega"; }

  OrderPtr order_at(std::size_t n) const override { return omega_order(canonical_order(n)); }
  OrderPtr order_on(OrderPtr X) const override { return omega_order(std::move(X)); }

  Code apply(const FiniteOrderMap& f, Code sigma) const override {
    Seq exps = unseq_code(sigma);
    for (Code& x : exps) x = f.images[static_cast<std::size_t>(x)];
    return seq_code(exps);
  }

  Code apply_on(const OrderEmbedding& f, Code sigma) const override {
    Seq exps = unseq_code(sigma);
    for (Code& x : exps) x = f(x);
    return seq_code(exps);
  }

  std::vector<std::size_t> supp(std::size_t, Code sigma) const override {
    Seq exps = unseq_code(sigma);
    std::vector<std::size_t> s;
    for (Code x : exps) s.push_back(static_cast<std::size_t>(x));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  // mu^omega_1(0) = omega^0, the form with the single exponent 0.
  std::optional<Code> mu1() const override { return seq_code({0}); }

  // Image codes under apply can overflow the machine word even when both
  // inputs are small, so mapped forms are compared exponent-wise.
  Cmp mapped_compare(const FiniteOrderMap& f, Code sigma, const FiniteOrderMap& g,
                     Code tau) const override {
    Seq u = unseq_code(sigma);
    Seq v = unseq_code(tau);
    for (Code& x : u) x = f.images[static_cast<std::size_t>(x)];
    for (Code& x : v) x = g.images[static_cast<std::size_t>(x)];
    for (std::size_t i = 0; i < u.size() && i < v.size(); ++i) {
      if (u[i] != v[i]) return u[i] < v[i] ? Cmp::Less : Cmp::Greater;
    }
    if (u.size() < v.size()) return Cmp::Less;
    if (u.size() > v.size()) return Cmp::Greater;
    return Cmp::Equal;
  }

  // Valid CNF codes are sparse among the naturals, so they are generated
  // directly instead of scanned: extend each weakly decreasing exponent
  // sequence entry by entry while the running code stays within bound.
  std::vector<Code> members_at(std::size_t n, Code bound) const override {
    std::vector<Code> out{0};  // the empty form
    std::vector<std::pair<Code, Code>> frontier;  // (code, last exponent)
    for (Code e = 0; e < n; ++e) {
      Code c;
      try {
        c = pair_code(0, e) + 1;
      } catch (const CodingOverflow&) {
        break;
      }
      if (c > bound) break;
      frontier.emplace_back(c, e);
    }
    while (!frontier.empty()) {
      auto [c, last] = frontier.back();
      frontier.pop_back();
      out.push_back(c);
      for (Code e = 0; e <= last; ++e) {
        Code c2;
        try {
          c2 = pair_code(c, e) + 1;
        } catch (const CodingOverflow&) {
          break;
        }
        if (c2 > bound) break;
        frontier.emplace_back(c2, e);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

// --- X + {top} ------------------------------------------------------------

class TopDilator final : public PraeDilator, public ClassDilator {
public:
  std::string name() const override { return "top"; }

  OrderPtr order_at(std::size_t n) const override { return with_top(canonical_order(n)); }
  OrderPtr order_on(OrderPtr X) const override { return with_top(std::move(X)); }

  Code apply(const FiniteOrderMap& f, Code sigma) const override {
    if (sigma == 0) return 0;
    return static_cast<Code>(f.images[static_cast<std::size_t>(sigma - 1)]) + 1;
  }

  Code apply_on(const OrderEmbedding& f, Code sigma) const override {
    if (sigma == 0) return 0;
    return f(sigma - 1) + 1;
  }

  std::vector<std::size_t> supp(std::size_t, Code sigma) const override {
    if (sigma == 0) return {};
    return {static_cast<std::size_t>(sigma - 1)};
  }

  // No normal structure exists; candidates are probed via with_mu1.
};

// --- constant -------------------------------------------------------------

class ConstDilator final : public PraeDilator {
public:
  std::string name() const override { return "const"; }
  OrderPtr order_at(std::size_t) const override { return canonical_order(1); }
  Code apply(const FiniteOrderMap&, Code) const override { return 0; }
  std::vector<std::size_t> supp(std::size_t, Code) const override { return {}; }
};

inline std::shared_ptr<const OmegaDilator> omega_dilator() { return std::make_shared<OmegaDilator>(); }
inline std::shared_ptr<const TopDilator> top_dilator() { return std::make_shared<TopDilator>(); }
inline std::shared_ptr<const ConstDilator> const_dilator() { return std::make_shared<ConstDilator>(); }

}  // namespace forge
