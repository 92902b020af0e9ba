#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cornering {

/// A° (left participant sends A rightward) or A• (right participant sends A
/// leftward).
enum class Polarity { Circ, Bullet };

template <class Object>
struct PolarizedLetter {
  Object object;
  Polarity polarity;

  friend bool operator==(const PolarizedLetter&, const PolarizedLetter&) = default;
};

/// An element of the free monoid on polarized objects. Note (A*B)• is a single
/// letter, distinct from A• * B•.
template <class Object>
using PolarizedWord = std::vector<PolarizedLetter<Object>>;

/// Length n if `w` is A_1• B_1° ... A_n• B_n° with n > 0, otherwise nullopt.
template <class Object>
std::optional<std::size_t> alternation_depth(const PolarizedWord<Object>& w) {
  if (w.empty() || w.size() % 2 != 0) return std::nullopt;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i].polarity != (i % 2 == 0 ? Polarity::Bullet : Polarity::Circ)) return std::nullopt;
  return w.size() / 2;
}

/// The pairs (A_i, B_i) of a •°-alternating boundary.
template <class Object>
struct AlternationPattern {
  std::vector<std::pair<Object, Object>> pairs;

  std::size_t depth() const { return pairs.size(); }

  PolarizedWord<Object> boundary() const {
    PolarizedWord<Object> w;
    for (const auto& [a, b] : pairs) {
      w.push_back({a, Polarity::Bullet});
      w.push_back({b, Polarity::Circ});
    }
    return w;
  }

  static std::optional<AlternationPattern> from_boundary(const PolarizedWord<Object>& w) {
    if (!alternation_depth(w)) return std::nullopt;
    AlternationPattern p;
    for (std::size_t i = 0; i < w.size(); i += 2) p.pairs.emplace_back(w[i].object, w[i + 1].object);
    return p;
  }

  friend bool operator==(const AlternationPattern&, const AlternationPattern&) = default;
};

}  // namespace cornering
