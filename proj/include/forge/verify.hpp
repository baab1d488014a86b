#pragma once

// Generic property harness: order-law checking over bounded enumerations
// and bounded well-foundedness search.  Well-foundedness itself is not
// decidable, so the chain search looks for the longest strictly
// descending subsequence of a supplied element stream.

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "forge/dilator.hpp"

namespace forge {

struct UnknownSuite : OrderError {
  explicit UnknownSuite(const std::string& w) : OrderError("UnknownSuite: " + w) {}
};

struct SuiteReport {
  std::string suite;
  std::size_t checks = 0;
  std::vector<Violation> violations;
  double elapsed_seconds = 0.0;

  bool passed() const { return violations.empty(); }
  void fail(std::string law, std::string witness) {
    violations.push_back(Violation{std::move(law), std::move(witness)});
  }
  void absorb(const SuiteReport& other) {
    checks += other.checks;
    for (const Violation& v : other.violations) violations.push_back(v);
    elapsed_seconds += other.elapsed_seconds;
  }
  void absorb(const ValidationReport& other) {
    checks += other.checks;
    for (const Violation& v : other.violations) violations.push_back(v);
  }
};

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

// Irreflexivity, trichotomy and transitivity over enumerate(code_bound).
inline SuiteReport check_linear_order(const CodedOrder& X, Code code_bound) {
  Stopwatch clock;
  SuiteReport r;
  r.suite = "linear-order(" + X.describe() + ")";
  std::vector<Code> el = X.enumerate(code_bound);
  std::size_t n = el.size();
  std::vector<std::vector<int>> rel(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = X.less(el[i], el[j]) ? 1 : 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    ++r.checks;
    if (rel[i][i]) r.fail("irreflexivity", std::to_string(el[i]));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ++r.checks;
      if (rel[i][j] + rel[j][i] != 1) {
        r.fail("trichotomy", std::to_string(el[i]) + " vs " + std::to_string(el[j]));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!rel[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        ++r.checks;
        if (rel[j][k] && !rel[i][k]) {
          r.fail("transitivity", std::to_string(el[i]) + " < " + std::to_string(el[j]) + " < " +
                                     std::to_string(el[k]));
        }
      }
    }
  }
  r.elapsed_seconds = clock.seconds();
  return r;
}

// Longest strictly descending subsequence of the stream, generic in the
// comparison.  Returns the chain itself (as stream indices) when it
// reaches chain_len.
template <class LessFn>
inline std::vector<std::size_t> longest_descending_subsequence(std::size_t size, LessFn less) {
  std::vector<std::size_t> best(size, 1), pred(size, size);
  std::size_t arg = 0;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (less(i, j) && best[j] + 1 > best[i]) {  // stream[i] < stream[j]
        best[i] = best[j] + 1;
        pred[i] = j;
      }
    }
    if (size && best[i] > best[arg]) arg = i;
  }
  std::vector<std::size_t> chain;
  if (size == 0) return chain;
  for (std::size_t i = arg; i != size; i = pred[i]) chain.push_back(i);
  std::reverse(chain.begin(), chain.end());  // descending order of elements
  return chain;
}

// Chain search over an explicit stream of codes.
inline SuiteReport check_wf_stream(const CodedOrder& X, const std::vector<Code>& stream,
                                   std::size_t chain_len) {
  Stopwatch clock;
  SuiteReport r;
  r.suite = "wf-bounded(" + X.describe() + ")";
  std::vector<std::size_t> chain = longest_descending_subsequence(
      stream.size(), [&](std::size_t i, std::size_t j) { return X.less(stream[i], stream[j]); });
  r.checks = stream.size() * stream.size();
  if (chain.size() >= chain_len) {
    std::string w;
    for (std::size_t i : chain) w += (w.empty() ? "" : " > ") + std::to_string(stream[i]);
    r.fail("descending chain of length " + std::to_string(chain.size()), w);
  }
  r.elapsed_seconds = clock.seconds();
  return r;
}

inline SuiteReport check_wf_bounded(const CodedOrder& X, Code code_bound, std::size_t chain_len) {
  return check_wf_stream(X, X.enumerate(code_bound), chain_len);
}

}  // namespace forge
