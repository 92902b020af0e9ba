#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "cornering/error.hpp"
#include "cornering/fin/object.hpp"

namespace cornering::fin {

/// A total function between carriers, stored as a table indexed by the
/// encoded domain element.
class FinMorphism {
 public:
  FinMorphism() = default;

  FinMorphism(FinObject dom, FinObject cod, std::vector<std::uint32_t> table)
      : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
    if (table_.size() != dom_.cardinality())
      throw Error(ErrorKind::InvalidArgument, "table has " + std::to_string(table_.size()) + " entries, domain " +
                                                  dom_.str() + " has " + std::to_string(dom_.cardinality()));
    const auto n = cod_.cardinality();
    for (auto v : table_)
      if (v >= n) throw Error(ErrorKind::InvalidArgument, "table entry " + std::to_string(v) + " outside " + cod_.str());
  }

  static FinMorphism from_function(FinObject dom, FinObject cod, const std::function<std::size_t(std::size_t)>& fn) {
    std::vector<std::uint32_t> table(dom.cardinality());
    for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<std::uint32_t>(fn(i));
    return FinMorphism(std::move(dom), std::move(cod), std::move(table));
  }

  const FinObject& dom() const { return dom_; }
  const FinObject& cod() const { return cod_; }
  const std::vector<std::uint32_t>& table() const { return table_; }
  std::uint32_t operator()(std::size_t x) const { return table_[x]; }

  std::string str() const {
    std::string out = "table(" + dom_.str() + " -> " + cod_.str() + " :";
    for (std::size_t i = 0; i < table_.size(); ++i) out += (i ? ", " : " ") + std::to_string(table_[i]);
    return out + ")";
  }

  friend bool operator==(const FinMorphism&, const FinMorphism&) = default;
  friend auto operator<=>(const FinMorphism&, const FinMorphism&) = default;

 private:
  FinObject dom_;
  FinObject cod_;
  std::vector<std::uint32_t> table_;
};

inline FinMorphism identity(const FinObject& a) {
  std::vector<std::uint32_t> t(a.cardinality());
  std::iota(t.begin(), t.end(), 0u);
  return FinMorphism(a, a, std::move(t));
}

/// Diagram-order composite: first f, then g. Throws BoundaryMismatch.
inline FinMorphism compose_fin(const FinMorphism& f, const FinMorphism& g) {
  if (f.cod() != g.dom())
    throw Error(ErrorKind::BoundaryMismatch, "cannot compose " + f.cod().str() + " with " + g.dom().str());
  std::vector<std::uint32_t> t(f.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g(f(i));
  return FinMorphism(f.dom(), g.cod(), std::move(t));
}

inline FinMorphism tensor_fin(const FinMorphism& f, const FinMorphism& g) {
  const std::size_t gd = g.dom().cardinality(), gc = g.cod().cardinality();
  std::vector<std::uint32_t> t(f.table().size() * gd);
  for (std::size_t i = 0; i < f.table().size(); ++i)
    for (std::size_t j = 0; j < gd; ++j) t[i * gd + j] = static_cast<std::uint32_t>(f(i) * gc + g(j));
  return FinMorphism(f.dom() * g.dom(), f.cod() * g.cod(), std::move(t));
}

inline bool eq_fin(const FinMorphism& f, const FinMorphism& g) { return f == g; }

/// Diagonal A -> A * A.
inline FinMorphism copy(const FinObject& a) {
  const std::size_t n = a.cardinality();
  return FinMorphism::from_function(a, a * a, [n](std::size_t x) { return x * n + x; });
}

/// Terminal map A -> I.
inline FinMorphism discard(const FinObject& a) {
  return FinMorphism(a, FinObject::unit(), std::vector<std::uint32_t>(a.cardinality(), 0u));
}

/// Symmetry A * B -> B * A.
inline FinMorphism swap(const FinObject& a, const FinObject& b) {
  const std::size_t nb = b.cardinality(), na = a.cardinality();
  return FinMorphism::from_function(a * b, b * a, [na, nb](std::size_t x) { return (x % nb) * na + x / nb; });
}

/// Projections out of A * B.
inline FinMorphism project_first(const FinObject& a, const FinObject& b) {
  const std::size_t nb = b.cardinality();
  return FinMorphism::from_function(a * b, a, [nb](std::size_t x) { return x / nb; });
}

inline FinMorphism project_second(const FinObject& a, const FinObject& b) {
  const std::size_t nb = b.cardinality();
  return FinMorphism::from_function(a * b, b, [nb](std::size_t x) { return x % nb; });
}

/// The constant I -> B picking `element`.
inline FinMorphism point(const FinObject& b, std::size_t element) {
  return FinMorphism(FinObject::unit(), b, {static_cast<std::uint32_t>(element)});
}

}  // namespace cornering::fin
