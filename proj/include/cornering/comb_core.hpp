#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cornering/base.hpp"
#include "cornering/error.hpp"
#include "cornering/polarized.hpp"

namespace cornering {

/// A right comb <f_1 | ... | f_n> with teeth f_i : M_{i-1} * A_i -> M_i * B_i,
/// M_0 = M_n = I. Stored as a representative; its class under sliding is what
/// eq_comb compares.
///
/// Gaps are numbered 1..n-1; gap i carries B_i out of tooth i and A_{i+1} into
/// tooth i+1.
template <MonoidalBase B>
class Comb {
 public:
  using Object = typename B::Object;
  using Morphism = typename B::Morphism;
  using Pattern = AlternationPattern<Object>;

  /// Throws IndexedError(BoundaryMismatch) naming the first ill-typed tooth.
  Comb(Pattern pattern, std::vector<Object> residuals, std::vector<Morphism> teeth)
      : pattern_(std::move(pattern)), residuals_(std::move(residuals)), teeth_(std::move(teeth)) {
    const std::size_t n = pattern_.depth();
    if (n == 0) throw Error(ErrorKind::BoundaryMismatch, "a comb needs at least one tooth");
    if (teeth_.size() != n)
      throw Error(ErrorKind::BoundaryMismatch,
                  "pattern has depth " + std::to_string(n) + " but " + std::to_string(teeth_.size()) + " teeth given");
    if (residuals_.size() != n - 1)
      throw Error(ErrorKind::BoundaryMismatch, "depth " + std::to_string(n) + " needs " + std::to_string(n - 1) +
                                                   " residuals, got " + std::to_string(residuals_.size()));
    for (std::size_t i = 0; i < n; ++i) {
      const Object want_dom = B::tensor(residual_before(i + 1), pattern_.pairs[i].first);
      const Object want_cod = B::tensor(residual_after(i + 1), pattern_.pairs[i].second);
      if (!(B::dom(teeth_[i]) == want_dom) || !(B::cod(teeth_[i]) == want_cod))
        throw IndexedError(ErrorKind::BoundaryMismatch, i + 1,
                           "tooth " + std::to_string(i + 1) + " has type " + B::show(B::dom(teeth_[i])) + " -> " +
                               B::show(B::cod(teeth_[i])) + ", expected " + B::show(want_dom) + " -> " +
                               B::show(want_cod));
    }
  }

  std::size_t depth() const { return teeth_.size(); }
  const Pattern& pattern() const { return pattern_; }
  const std::vector<Object>& residuals() const { return residuals_; }
  const std::vector<Morphism>& teeth() const { return teeth_; }

  /// 1-based accessors following the usual numbering.
  const Morphism& tooth(std::size_t i) const { return teeth_.at(i - 1); }
  const Object& input(std::size_t i) const { return pattern_.pairs.at(i - 1).first; }
  const Object& output(std::size_t i) const { return pattern_.pairs.at(i - 1).second; }
  Object residual_before(std::size_t i) const { return i <= 1 ? B::unit() : residuals_.at(i - 2); }
  Object residual_after(std::size_t i) const { return i >= depth() ? B::unit() : residuals_.at(i - 1); }

  std::string str() const {
    std::string out = "<";
    for (std::size_t i = 0; i < teeth_.size(); ++i) out += (i ? " | " : "") + B::show(teeth_[i]);
    out += ">";
    if (!residuals_.empty()) {
      out += " residuals [";
      for (std::size_t i = 0; i < residuals_.size(); ++i) out += (i ? ", " : "") + B::show(residuals_[i]);
      out += "]";
    }
    return out;
  }

 private:
  Pattern pattern_;
  std::vector<Object> residuals_;
  std::vector<Morphism> teeth_;
};

template <MonoidalBase B>
Comb<B> mk_comb(typename Comb<B>::Pattern pattern, std::vector<typename B::Object> residuals,
                std::vector<typename B::Morphism> teeth) {
  return Comb<B>(std::move(pattern), std::move(residuals), std::move(teeth));
}

/// Reads the pattern off the teeth: A_i and B_i are what remains of each
/// tooth's boundary once the residual prefix is removed.
template <MonoidalBase B>
Comb<B> comb_from_teeth(std::vector<typename B::Object> residuals, std::vector<typename B::Morphism> teeth) {
  using Object = typename B::Object;
  const std::size_t n = teeth.size();
  if (n == 0) throw Error(ErrorKind::BoundaryMismatch, "a comb needs at least one tooth");
  if (residuals.size() + 1 != n)
    throw Error(ErrorKind::BoundaryMismatch, std::to_string(n) + " teeth need " + std::to_string(n - 1) + " residuals");
  AlternationPattern<Object> pattern;
  for (std::size_t i = 0; i < n; ++i) {
    const Object before = i == 0 ? B::unit() : residuals[i - 1];
    const Object after = i + 1 == n ? B::unit() : residuals[i];
    const Object& d = B::dom(teeth[i]);
    const Object& c = B::cod(teeth[i]);
    if (!B::starts_with(d, before) || !B::starts_with(c, after))
      throw IndexedError(ErrorKind::BoundaryMismatch, i + 1,
                         "tooth " + std::to_string(i + 1) + " : " + B::show(d) + " -> " + B::show(c) +
                             " does not carry residuals " + B::show(before) + " / " + B::show(after));
    pattern.pairs.emplace_back(B::drop_prefix(d, before), B::drop_prefix(c, after));
  }
  return Comb<B>(std::move(pattern), std::move(residuals), std::move(teeth));
}

/// The dual comb h_0 : T -> A_1 * N_1, h_i : B_i * N_i -> A_{i+1} * N_{i+1},
/// h_n : B_n * N_n -> U. Its residual wires N_i run to the right of the
/// exchanged objects.
template <MonoidalBase B>
class LeftComb {
 public:
  using Object = typename B::Object;
  using Morphism = typename B::Morphism;
  using Pattern = AlternationPattern<Object>;

  LeftComb(Object source, Object target, Pattern pattern, std::vector<Object> residuals, std::vector<Morphism> teeth)
      : source_(std::move(source)),
        target_(std::move(target)),
        pattern_(std::move(pattern)),
        residuals_(std::move(residuals)),
        teeth_(std::move(teeth)) {
    const std::size_t n = pattern_.depth();
    if (n == 0) throw Error(ErrorKind::BoundaryMismatch, "a left comb needs a non-empty pattern");
    if (residuals_.size() != n || teeth_.size() != n + 1)
      throw Error(ErrorKind::BoundaryMismatch, "depth " + std::to_string(n) + " left comb needs " +
                                                   std::to_string(n) + " residuals and " + std::to_string(n + 1) +
                                                   " teeth");
    for (std::size_t i = 0; i <= n; ++i) {
      const Object want_dom = i == 0 ? source_ : B::tensor(pattern_.pairs[i - 1].second, residuals_[i - 1]);
      const Object want_cod = i == n ? target_ : B::tensor(pattern_.pairs[i].first, residuals_[i]);
      if (!(B::dom(teeth_[i]) == want_dom) || !(B::cod(teeth_[i]) == want_cod))
        throw IndexedError(ErrorKind::BoundaryMismatch, i,
                           "left tooth " + std::to_string(i) + " has type " + B::show(B::dom(teeth_[i])) + " -> " +
                               B::show(B::cod(teeth_[i])) + ", expected " + B::show(want_dom) + " -> " +
                               B::show(want_cod));
    }
  }

  std::size_t depth() const { return pattern_.depth(); }
  const Object& source() const { return source_; }
  const Object& target() const { return target_; }
  const Pattern& pattern() const { return pattern_; }
  const std::vector<Object>& residuals() const { return residuals_; }
  const std::vector<Morphism>& teeth() const { return teeth_; }

 private:
  Object source_;
  Object target_;
  Pattern pattern_;
  std::vector<Object> residuals_;
  std::vector<Morphism> teeth_;
};

}  // namespace cornering
