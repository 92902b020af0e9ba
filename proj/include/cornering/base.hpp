#pragma once

#include <concepts>
#include <string>

#include "cornering/fin/comonoid.hpp"
#include "cornering/fin/enumerate.hpp"
#include "cornering/fin/morphism.hpp"
#include "cornering/free/normal_form.hpp"
#include "cornering/free/term.hpp"

namespace cornering {

/// What comb, optic and oracle code needs from a strict monoidal base:
/// a monoid of object words, identities, sequential and parallel composition,
/// and decidable equality of morphisms.
template <class B>
concept MonoidalBase = requires(const typename B::Object& x, const typename B::Morphism& f) {
  { B::unit() } -> std::same_as<typename B::Object>;
  { B::tensor(x, x) } -> std::same_as<typename B::Object>;
  { B::identity(x) } -> std::same_as<typename B::Morphism>;
  { B::seq(f, f) } -> std::same_as<typename B::Morphism>;
  { B::par(f, f) } -> std::same_as<typename B::Morphism>;
  { B::dom(f) } -> std::convertible_to<typename B::Object>;
  { B::cod(f) } -> std::convertible_to<typename B::Object>;
  { B::equal(f, f) } -> std::same_as<bool>;
  { B::starts_with(x, x) } -> std::same_as<bool>;
  { B::drop_prefix(x, x) } -> std::same_as<typename B::Object>;
  { B::length(x) } -> std::same_as<std::size_t>;
  { B::show(x) } -> std::same_as<std::string>;
  { B::show(f) } -> std::same_as<std::string>;
  { x == x } -> std::same_as<bool>;
};

/// The free strict monoidal category on a signature.
struct FreeBase {
  using Object = free::ObjectWord;
  using Morphism = free::MorTerm;
  static constexpr const char* name = "free";

  static Object unit() { return {}; }
  static Object tensor(const Object& a, const Object& b) { return a * b; }
  static Morphism identity(const Object& a) { return free::MorTerm::identity(a); }
  static Morphism seq(const Morphism& f, const Morphism& g) {
    if (f.cod() != g.dom())
      throw Error(ErrorKind::BoundaryMismatch, "cannot compose " + f.cod().str() + " with " + g.dom().str());
    return free::MorTerm::seq(f, g);
  }
  static Morphism par(const Morphism& f, const Morphism& g) { return free::MorTerm::par(f, g); }
  static const Object& dom(const Morphism& f) { return f.dom(); }
  static const Object& cod(const Morphism& f) { return f.cod(); }
  static bool equal(const Morphism& f, const Morphism& g) { return free::eq_base(f, g); }
  static bool starts_with(const Object& w, const Object& p) { return w.starts_with(p); }
  static Object drop_prefix(const Object& w, const Object& p) { return w.drop_prefix(p); }
  static std::size_t length(const Object& w) { return w.size(); }
  static std::string show(const Object& w) { return w.str(); }
  static std::string show(const Morphism& f) { return f.str(); }
};

/// Finite sets and total functions, with the cartesian product as tensor.
struct FinBase {
  using Object = fin::FinObject;
  using Morphism = fin::FinMorphism;
  static constexpr const char* name = "finite";

  static Object unit() { return {}; }
  static Object tensor(const Object& a, const Object& b) { return a * b; }
  static Morphism identity(const Object& a) { return fin::identity(a); }
  static Morphism seq(const Morphism& f, const Morphism& g) { return fin::compose_fin(f, g); }
  static Morphism par(const Morphism& f, const Morphism& g) { return fin::tensor_fin(f, g); }
  static const Object& dom(const Morphism& f) { return f.dom(); }
  static const Object& cod(const Morphism& f) { return f.cod(); }
  static bool equal(const Morphism& f, const Morphism& g) { return fin::eq_fin(f, g); }
  static bool starts_with(const Object& w, const Object& p) { return w.starts_with(p); }
  static Object drop_prefix(const Object& w, const Object& p) { return w.drop_prefix(p); }
  static std::size_t length(const Object& w) { return w.length(); }
  static std::string show(const Object& w) { return w.str(); }
  static std::string show(const Morphism& f) { return f.str(); }
};

static_assert(MonoidalBase<FreeBase>);
static_assert(MonoidalBase<FinBase>);

}  // namespace cornering
