#pragma once

// Finite and countable linear orders with natural-number codes, increasing
// enumerations, induced maps between finite orders, and the finite subset
// functor.  Fields may be infinite, so enumeration is always bounded.

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "forge/coding.hpp"

namespace forge {

enum class Cmp { Less, Equal, Greater };

inline Cmp flip(Cmp c) {
  if (c == Cmp::Less) return Cmp::Greater;
  if (c == Cmp::Greater) return Cmp::Less;
  return Cmp::Equal;
}

class OrderError : public std::runtime_error {
public:
  explicit OrderError(const std::string& what) : std::runtime_error(what) {}
};

struct AmbientComparisonUndefined : OrderError {
  explicit AmbientComparisonUndefined(const std::string& w) : OrderError("AmbientComparisonUndefined: " + w) {}
};
struct NotASubset : OrderError {
  explicit NotASubset(const std::string& w) : OrderError("NotASubset: " + w) {}
};
struct DomainViolation : OrderError {
  explicit DomainViolation(const std::string& w) : OrderError("DomainViolation: " + w) {}
};

// A linear order whose field is a set of natural-number codes.  Instances
// document their coding via describe().  The field may be infinite;
// enumerate(B) lists exactly the members with code <= B, ascending by code.
class CodedOrder {
public:
  virtual ~CodedOrder() = default;
  virtual bool member(Code c) const = 0;
  virtual bool less(Code a, Code b) const = 0;
  virtual std::string describe() const = 0;
  virtual std::vector<Code> enumerate(Code code_bound) const {
    std::vector<Code> out;
    for (Code c = 0;; ++c) {
      if (member(c)) out.push_back(c);
      if (c == code_bound) break;
    }
    return out;
  }
};

using OrderPtr = std::shared_ptr<const CodedOrder>;

// Member codes are unique, so equality of members is code equality.
inline Cmp compare(const CodedOrder& X, Code a, Code b) {
  if (a == b) return Cmp::Equal;
  return X.less(a, b) ? Cmp::Less : Cmp::Greater;
}

// An embedding between coded orders, given by its action on codes.
struct OrderEmbedding {
  OrderPtr source;
  OrderPtr target;
  std::function<Code(Code)> map;

  Code operator()(Code c) const {
    if (!source->member(c)) throw DomainViolation("embedding applied outside its domain");
    return map(c);
  }
};

// A strictly increasing map f : m -> n between canonical finite orders.
struct FiniteOrderMap {
  std::size_t source_size = 0;
  std::size_t target_size = 0;
  std::vector<std::size_t> images;  // strictly increasing, each < target_size

  bool valid() const {
    if (images.size() != source_size) return false;
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i] >= target_size) return false;
      if (i > 0 && images[i - 1] >= images[i]) return false;
    }
    return true;
  }

  std::size_t operator()(std::size_t i) const {
    if (i >= source_size) throw DomainViolation("finite order map applied outside its domain");
    return images[i];
  }

  static FiniteOrderMap identity(std::size_t n) {
    FiniteOrderMap f{n, n, std::vector<std::size_t>(n)};
    std::iota(f.images.begin(), f.images.end(), std::size_t{0});
    return f;
  }

  // g after f
  static FiniteOrderMap compose(const FiniteOrderMap& g, const FiniteOrderMap& f) {
    if (f.target_size != g.source_size) throw DomainViolation("composing incompatible finite order maps");
    FiniteOrderMap h{f.source_size, g.target_size, {}};
    h.images.reserve(f.source_size);
    for (std::size_t i : f.images) h.images.push_back(g.images[i]);
    return h;
  }
};

// All strictly increasing maps m -> n, i.e. m-element subsets of n.
inline std::vector<FiniteOrderMap> all_finite_maps(std::size_t m, std::size_t n) {
  std::vector<FiniteOrderMap> out;
  if (m > n) return out;
  std::vector<std::size_t> pick(m);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  while (true) {
    out.push_back(FiniteOrderMap{m, n, pick});
    // next combination
    std::size_t i = m;
    while (i > 0 && pick[i - 1] == n - (m - i) - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

// A finite subset of a coded order.  Elements are stored as a canonical
// set: ascending by code, without duplicates.
struct FinSubset {
  OrderPtr ambient;
  std::vector<Code> elements;

  FinSubset() = default;
  FinSubset(OrderPtr amb, std::vector<Code> elems) : ambient(std::move(amb)), elements(std::move(elems)) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  }

  std::size_t size() const { return elements.size(); }
  bool contains(Code c) const { return std::binary_search(elements.begin(), elements.end(), c); }

  bool subset_of(const FinSubset& b) const {
    return std::includes(b.elements.begin(), b.elements.end(), elements.begin(), elements.end());
  }

  static FinSubset unite(const FinSubset& a, const FinSubset& b) {
    std::vector<Code> u;
    std::set_union(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                   std::back_inserter(u));
    return FinSubset{a.ambient, std::move(u)};
  }
};

// en_a: the elements of a listed ascending by the ambient order.
inline std::vector<Code> increasing_enumeration(const FinSubset& a) {
  for (Code c : a.elements) {
    if (!a.ambient->member(c)) {
      throw AmbientComparisonUndefined("code " + std::to_string(c) + " is not a member of the ambient order");
    }
  }
  std::vector<Code> en = a.elements;
  std::sort(en.begin(), en.end(), [&](Code x, Code y) { return a.ambient->less(x, y); });
  return en;
}

// |iota_a^b| : |a| -> |b| with en_b o |iota_a^b| = iota_a^b o en_a.
inline FiniteOrderMap induced_finite_map(const FinSubset& a, const FinSubset& b) {
  if (!a.subset_of(b)) throw NotASubset("induced_finite_map requires a to be contained in b");
  std::vector<Code> en_a = increasing_enumeration(a);
  std::vector<Code> en_b = increasing_enumeration(b);
  FiniteOrderMap f{a.size(), b.size(), {}};
  f.images.reserve(a.size());
  for (Code c : en_a) {
    auto it = std::find(en_b.begin(), en_b.end(), c);
    f.images.push_back(static_cast<std::size_t>(it - en_b.begin()));
  }
  return f;
}

// [f]^{<omega}(a), the pointwise image of a finite subset.
inline FinSubset finite_image(const OrderEmbedding& f, const FinSubset& a) {
  std::vector<Code> out;
  out.reserve(a.size());
  for (Code c : a.elements) out.push_back(f(c));
  return FinSubset{f.target, std::move(out)};
}

// --- Concrete orders ------------------------------------------------------

namespace detail {

class CanonicalOrder final : public CodedOrder {
public:
  explicit CanonicalOrder(std::size_t n) : n_(n) {}
  bool member(Code c) const override { return c < n_; }
  bool less(Code a, Code b) const override { return a < b && member(a) && member(b); }
  std::string describe() const override { return "canonical finite order " + std::to_string(n_) + "; code k is the k-th element"; }
  std::vector<Code> enumerate(Code code_bound) const override {
    std::vector<Code> out;
    for (Code c = 0; c < n_ && c <= code_bound; ++c) out.push_back(c);
    return out;
  }

private:
  std::size_t n_;
};

class NatOrder final : public CodedOrder {
public:
  bool member(Code) const override { return true; }
  bool less(Code a, Code b) const override { return a < b; }
  std::string describe() const override { return "the natural numbers with their usual order"; }
};

class ExplicitOrder final : public CodedOrder {
public:
  ExplicitOrder(std::vector<Code> codes, std::set<std::pair<Code, Code>> less_pairs)
      : codes_(std::move(codes)), less_(std::move(less_pairs)) {
    std::sort(codes_.begin(), codes_.end());
    codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
  }
  bool member(Code c) const override { return std::binary_search(codes_.begin(), codes_.end(), c); }
  bool less(Code a, Code b) const override { return less_.count({a, b}) > 0; }
  std::string describe() const override { return "explicit finite order on " + std::to_string(codes_.size()) + " codes"; }
  std::vector<Code> enumerate(Code code_bound) const override {
    std::vector<Code> out;
    for (Code c : codes_) {
      if (c <= code_bound) out.push_back(c);
    }
    return out;
  }
  const std::vector<Code>& codes() const { return codes_; }
  const std::set<std::pair<Code, Code>>& pairs() const { return less_; }

private:
  std::vector<Code> codes_;
  std::set<std::pair<Code, Code>> less_;
};

class RestrictionOrder final : public CodedOrder {
public:
  RestrictionOrder(OrderPtr base, Code bound) : base_(std::move(base)), bound_(bound) {}
  bool member(Code c) const override { return base_->member(c) && base_->less(c, bound_); }
  bool less(Code a, Code b) const override { return base_->less(a, b); }
  std::string describe() const override {
    return "restriction of (" + base_->describe() + ") below code " + std::to_string(bound_);
  }
  std::vector<Code> enumerate(Code code_bound) const override {
    std::vector<Code> out;
    for (Code c : base_->enumerate(code_bound)) {
      if (base_->less(c, bound_)) out.push_back(c);
    }
    return out;
  }

private:
  OrderPtr base_;
  Code bound_;
};

// X extended by a new maximal element.  The top carries the reserved code
// zero; inner elements shift by one.
class WithTopOrder final : public CodedOrder {
public:
  explicit WithTopOrder(OrderPtr base) : base_(std::move(base)) {}
  bool member(Code c) const override { return c == 0 || base_->member(c - 1); }
  bool less(Code a, Code b) const override {
    if (a == 0) return false;
    if (b == 0) return base_->member(a - 1);
    return base_->less(a - 1, b - 1);
  }
  std::string describe() const override {
    return "(" + base_->describe() + ") with a top element; top has code 0, inner code x becomes x+1";
  }
  std::vector<Code> enumerate(Code code_bound) const override {
    std::vector<Code> out{0};
    if (code_bound > 0) {
      for (Code c : base_->enumerate(code_bound - 1)) out.push_back(c + 1);
    }
    return out;
  }
  const OrderPtr& base() const { return base_; }

private:
  OrderPtr base_;
};

// Dependent sum: pairs <x,y> coded as pair(x,y), compared index first.
class DepSumOrder final : public CodedOrder {
public:
  DepSumOrder(OrderPtr index, std::function<OrderPtr(Code)> fiber, std::string name)
      : index_(std::move(index)), fiber_(std::move(fiber)), name_(std::move(name)) {}
  bool member(Code c) const override {
    auto [x, y] = unpair_code(c);
    return index_->member(x) && fiber_(x)->member(y);
  }
  bool less(Code a, Code b) const override {
    auto [x1, y1] = unpair_code(a);
    auto [x2, y2] = unpair_code(b);
    if (x1 != x2) return index_->less(x1, x2);
    return fiber_(x1)->less(y1, y2);
  }
  std::string describe() const override { return name_; }

private:
  OrderPtr index_;
  std::function<OrderPtr(Code)> fiber_;
  std::string name_;
};

}  // namespace detail

inline OrderPtr canonical_order(std::size_t n) { return std::make_shared<detail::CanonicalOrder>(n); }
inline OrderPtr nat_order() { return std::make_shared<detail::NatOrder>(); }
inline OrderPtr explicit_order(std::vector<Code> codes, std::set<std::pair<Code, Code>> less_pairs) {
  return std::make_shared<detail::ExplicitOrder>(std::move(codes), std::move(less_pairs));
}
inline OrderPtr restrict_below(OrderPtr base, Code bound) {
  return std::make_shared<detail::RestrictionOrder>(std::move(base), bound);
}
inline OrderPtr with_top(OrderPtr base) { return std::make_shared<detail::WithTopOrder>(std::move(base)); }
inline OrderPtr depsum_order(OrderPtr index, std::function<OrderPtr(Code)> fiber, std::string name) {
  return std::make_shared<detail::DepSumOrder>(std::move(index), std::move(fiber), std::move(name));
}

// omega + 1, realized as N with a top element; the top (code 0) plays the
// role of the ordinal omega.
inline OrderPtr omega_plus_one() { return with_top(nat_order()); }

// A finite order from an arbitrary ranking of codes: codes[i] < codes[j]
// iff rank[i] < rank[j].
inline OrderPtr ranked_order(const std::vector<Code>& codes, const std::vector<std::size_t>& ranks) {
  std::set<std::pair<Code, Code>> pairs;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    for (std::size_t j = 0; j < codes.size(); ++j) {
      if (ranks[i] < ranks[j]) pairs.insert({codes[i], codes[j]});
    }
  }
  return explicit_order(codes, std::move(pairs));
}

}  // namespace forge
