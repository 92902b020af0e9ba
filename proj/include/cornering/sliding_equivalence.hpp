#pragma once

#include <string>
#include <vector>

#include "cornering/comb_core.hpp"

namespace cornering {

/// Decides sliding equivalence of two combs over the same pattern. Each base
/// provides a class invariant `key` that is complete for its base.
template <MonoidalBase B>
struct SlidingEquivalence;

/// Free base: the teeth are glued along their residual wires into a single
/// diagram. The right boundary is modelled by a frame wire that every port box
/// sits on, so the faces between consecutive ports stay distinct. Sliding a
/// box along a residual wire is then an interchange move of the glued diagram.
template <>
struct SlidingEquivalence<FreeBase> {
  using Key = free::NormalDiagram;

  static constexpr const char* frame_letter = "#frame";

  static free::Generator input_port(std::size_t i, const free::ObjectWord& a) {
    return {"#in" + std::to_string(i), free::ObjectWord{frame_letter}, a * free::ObjectWord{frame_letter}};
  }
  static free::Generator output_port(std::size_t i, const free::ObjectWord& b) {
    return {"#out" + std::to_string(i), b * free::ObjectWord{frame_letter}, free::ObjectWord{frame_letter}};
  }

  /// Layers of the glued diagram frame -> frame.
  static std::vector<free::Layer> glue(const Comb<FreeBase>& c) {
    std::vector<free::Layer> layers;
    for (std::size_t i = 1; i <= c.depth(); ++i) {
      layers.push_back({c.residual_before(i).size(), input_port(i, c.input(i))});
      for (auto& l : free::flatten(c.tooth(i))) layers.push_back(std::move(l));
      layers.push_back({c.residual_after(i).size(), output_port(i, c.output(i))});
    }
    return layers;
  }

  static Key key(const Comb<FreeBase>& c) {
    return free::normalize_layers(free::ObjectWord{frame_letter}, glue(c));
  }

  static bool equivalent(const Comb<FreeBase>& a, const Comb<FreeBase>& b) { return key(a) == key(b); }
};

/// Finite cartesian base: a comb is determined up to sliding by what it does
/// to input histories. Behaviour i maps (a_1, ..., a_i) to the B_i it emits
/// when run on that history.
template <>
struct SlidingEquivalence<FinBase> {
  using Key = std::vector<fin::FinMorphism>;

  static Key key(const Comb<FinBase>& c) {
    Key behaviours;
    // (history code, residual state) for every history of the current length
    std::vector<std::pair<std::size_t, std::size_t>> frontier{{0, 0}};
    fin::FinObject history;
    for (std::size_t i = 1; i <= c.depth(); ++i) {
      const auto& a = c.input(i);
      const auto& b = c.output(i);
      const std::size_t na = a.cardinality(), nb = b.cardinality();
      const auto& tooth = c.tooth(i);
      fin::FinObject next_history = history * a;
      std::vector<std::uint32_t> table(next_history.cardinality(), 0u);
      std::vector<std::pair<std::size_t, std::size_t>> next;
      next.reserve(frontier.size() * na);
      for (const auto& [h, m] : frontier) {
        for (std::size_t x = 0; x < na; ++x) {
          const std::size_t out = tooth(m * na + x);
          table[h * na + x] = static_cast<std::uint32_t>(out % nb);
          next.emplace_back(h * na + x, out / nb);
        }
      }
      behaviours.emplace_back(next_history, b, std::move(table));
      frontier = std::move(next);
      history = std::move(next_history);
    }
    return behaviours;
  }

  static bool equivalent(const Comb<FinBase>& a, const Comb<FinBase>& b) { return key(a) == key(b); }
};

/// The representative whose residuals are the full input histories
/// A_1 * ... * A_i and whose teeth record the history and emit the behaviour.
inline Comb<FinBase> history_normal_form(const Comb<FinBase>& c) {
  const auto behaviours = SlidingEquivalence<FinBase>::key(c);
  std::vector<fin::FinObject> residuals;
  std::vector<fin::FinMorphism> teeth;
  fin::FinObject history;
  for (std::size_t i = 1; i <= c.depth(); ++i) {
    const auto& a = c.input(i);
    const auto& b = c.output(i);
    const auto& g = behaviours[i - 1];
    const fin::FinObject next = history * a;
    if (i == c.depth()) {
      teeth.push_back(g);
    } else {
      const std::size_t nb = b.cardinality();
      teeth.push_back(fin::FinMorphism::from_function(history * a, next * b,
                                                      [&g, nb](std::size_t x) { return x * nb + g(x); }));
      residuals.push_back(next);
    }
    history = next;
  }
  return Comb<FinBase>(c.pattern(), std::move(residuals), std::move(teeth));
}

}  // namespace cornering
