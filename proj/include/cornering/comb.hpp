#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cornering/comb_core.hpp"
#include "cornering/sliding_equivalence.hpp"

namespace cornering {

/// Same pattern and same class under sliding.
template <MonoidalBase B>
bool eq_comb(const Comb<B>& c1, const Comb<B>& c2) {
  if (!(c1.pattern() == c2.pattern())) return false;
  return SlidingEquivalence<B>::equivalent(c1, c2);
}

/// Moves the mediator m : M' -> M_i across gap i: tooth i becomes `core`,
/// tooth i+1 becomes (m * id) ; f_{i+1}. Requires f_i = core ; (m * id) in
/// the base, otherwise throws FactorizationRejected.
template <MonoidalBase B>
Comb<B> slide(const Comb<B>& c, std::size_t gap, const typename B::Morphism& core, const typename B::Morphism& m) {
  const std::size_t n = c.depth();
  if (gap < 1 || gap >= n)
    throw Error(ErrorKind::GapOutOfRange, "gap " + std::to_string(gap) + " of a depth-" + std::to_string(n) + " comb");
  if (!(B::cod(m) == c.residual_after(gap)))
    throw Error(ErrorKind::BoundaryMismatch,
                "mediator lands in " + B::show(B::cod(m)) + ", residual is " + B::show(c.residual_after(gap)));
  const auto& out = c.output(gap);
  const auto& in = c.input(gap + 1);
  if (!(B::cod(core) == B::tensor(B::dom(m), out)) || !(B::dom(core) == B::dom(c.tooth(gap))))
    throw Error(ErrorKind::BoundaryMismatch, "core has type " + B::show(B::dom(core)) + " -> " + B::show(B::cod(core)));
  if (!B::equal(c.tooth(gap), B::seq(core, B::par(m, B::identity(out)))))
    throw Error(ErrorKind::FactorizationRejected,
                "tooth " + std::to_string(gap) + " is not core ; (m * id) in the base");

  auto teeth = c.teeth();
  auto residuals = c.residuals();
  teeth[gap - 1] = core;
  teeth[gap] = B::seq(B::par(m, B::identity(in)), c.tooth(gap + 1));
  residuals[gap - 1] = B::dom(m);
  return Comb<B>(c.pattern(), std::move(residuals), std::move(teeth));
}

/// The depth-1 comb <f> with pattern [(dom f, cod f)].
template <MonoidalBase B>
Comb<B> from_morphism(const typename B::Morphism& f) {
  return Comb<B>({{{B::dom(f), B::cod(f)}}}, {}, {f});
}

template <MonoidalBase B>
typename B::Morphism collapse(const Comb<B>& c) {
  if (c.depth() != 1)
    throw Error(ErrorKind::DepthMismatch, "collapse needs depth 1, got " + std::to_string(c.depth()));
  return c.tooth(1);
}

/// Inserts `inner` (depth m) into gap i of `outer` (depth n); the result has
/// depth n + m - 2 and threads the outer residual M_i to the left of the inner
/// residuals.
template <MonoidalBase B>
Comb<B> plug_gap(const Comb<B>& outer, std::size_t gap, const Comb<B>& inner) {
  using Object = typename B::Object;
  using Morphism = typename B::Morphism;
  const std::size_t n = outer.depth(), m = inner.depth();
  if (gap < 1 || gap >= n)
    throw Error(ErrorKind::GapOutOfRange, "gap " + std::to_string(gap) + " of a depth-" + std::to_string(n) + " comb");
  if (!(inner.input(1) == outer.output(gap)))
    throw Error(ErrorKind::BoundaryMismatch, "inner comb starts from " + B::show(inner.input(1)) +
                                                 " but gap " + std::to_string(gap) + " emits " +
                                                 B::show(outer.output(gap)));
  if (!(inner.output(m) == outer.input(gap + 1)))
    throw Error(ErrorKind::BoundaryMismatch, "inner comb ends in " + B::show(inner.output(m)) + " but gap " +
                                                 std::to_string(gap) + " expects " +
                                                 B::show(outer.input(gap + 1)));

  const Object& mid = outer.residual_after(gap);
  const Morphism mid_id = B::identity(mid);
  AlternationPattern<Object> pattern;
  std::vector<Object> residuals;
  std::vector<Morphism> teeth;

  for (std::size_t i = 1; i < gap; ++i) {
    pattern.pairs.push_back(outer.pattern().pairs[i - 1]);
    teeth.push_back(outer.tooth(i));
    residuals.push_back(outer.residual_after(i));
  }
  if (m == 1) {
    teeth.push_back(B::seq(B::seq(outer.tooth(gap), B::par(mid_id, inner.tooth(1))), outer.tooth(gap + 1)));
    pattern.pairs.emplace_back(outer.input(gap), outer.output(gap + 1));
  } else {
    teeth.push_back(B::seq(outer.tooth(gap), B::par(mid_id, inner.tooth(1))));
    pattern.pairs.emplace_back(outer.input(gap), inner.output(1));
    residuals.push_back(B::tensor(mid, inner.residual_after(1)));
    for (std::size_t j = 2; j < m; ++j) {
      teeth.push_back(B::par(mid_id, inner.tooth(j)));
      pattern.pairs.emplace_back(inner.input(j), inner.output(j));
      residuals.push_back(B::tensor(mid, inner.residual_after(j)));
    }
    teeth.push_back(B::seq(B::par(mid_id, inner.tooth(m)), outer.tooth(gap + 1)));
    pattern.pairs.emplace_back(inner.input(m), outer.output(gap + 1));
  }
  if (gap + 1 < n) residuals.push_back(outer.residual_after(gap + 1));
  for (std::size_t i = gap + 2; i <= n; ++i) {
    pattern.pairs.push_back(outer.pattern().pairs[i - 1]);
    teeth.push_back(outer.tooth(i));
    if (i < n) residuals.push_back(outer.residual_after(i));
  }
  return Comb<B>(std::move(pattern), std::move(residuals), std::move(teeth));
}

/// Fills every internal gap with a morphism g_i : B_i -> A_{i+1} and returns
/// the resulting A_1 -> B_n. Gaps are plugged last-to-first so earlier gap
/// numbers stay valid.
template <MonoidalBase B>
typename B::Morphism run(const Comb<B>& c, const std::vector<typename B::Morphism>& fillers) {
  if (fillers.size() + 1 != c.depth())
    throw Error(ErrorKind::GapOutOfRange, "a depth-" + std::to_string(c.depth()) + " comb has " +
                                              std::to_string(c.depth() - 1) + " gaps, got " +
                                              std::to_string(fillers.size()) + " fillers");
  Comb<B> acc = c;
  for (std::size_t gap = fillers.size(); gap >= 1; --gap) acc = plug_gap(acc, gap, from_morphism<B>(fillers[gap - 1]));
  return collapse(acc);
}

/// Plugs the gaps in the given order; `order` lists original gap numbers.
template <MonoidalBase B>
typename B::Morphism run_in_order(const Comb<B>& c, const std::vector<typename B::Morphism>& fillers,
                                  const std::vector<std::size_t>& order) {
  if (fillers.size() + 1 != c.depth() || order.size() != fillers.size())
    throw Error(ErrorKind::GapOutOfRange, "filler count does not match the comb's gaps");
  std::vector<std::size_t> current(order.size());
  for (std::size_t i = 0; i < current.size(); ++i) current[i] = i + 1;
  Comb<B> acc = c;
  for (std::size_t original : order) {
    auto it = std::find(current.begin(), current.end(), original);
    if (it == current.end()) throw Error(ErrorKind::GapOutOfRange, "gap " + std::to_string(original) + " listed twice");
    const auto position = static_cast<std::size_t>(it - current.begin()) + 1;
    acc = plug_gap(acc, position, from_morphism<B>(fillers[original - 1]));
    current.erase(it);
  }
  return collapse(acc);
}

/// Composes a right comb with a left comb over the same pattern by
/// alternating their teeth; the result is a morphism T -> U.
template <MonoidalBase B>
typename B::Morphism interleave(const Comb<B>& r, const LeftComb<B>& l) {
  if (!(r.pattern() == l.pattern()))
    throw Error(ErrorKind::PatternMismatch, "right and left combs disagree on their exchange pattern");
  const std::size_t n = r.depth();
  const auto& h = l.teeth();
  auto acc = h[0];
  for (std::size_t i = 1; i <= n; ++i) {
    acc = B::seq(acc, B::par(r.tooth(i), B::identity(l.residuals()[i - 1])));
    if (i < n) acc = B::seq(acc, B::par(B::identity(r.residual_after(i)), h[i]));
  }
  return B::seq(acc, h[n]);
}

}  // namespace cornering
