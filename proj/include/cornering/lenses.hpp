#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cornering/optics.hpp"

namespace cornering {

/// get : A -> B, put : A * B -> A over the finite cartesian base.
struct Lens {
  fin::FinObject a;
  fin::FinObject b;
  fin::FinMorphism get;
  fin::FinMorphism put;

  Lens(fin::FinMorphism get_, fin::FinMorphism put_)
      : a(get_.dom()), b(get_.cod()), get(std::move(get_)), put(std::move(put_)) {
    if (!(put.dom() == a * b) || !(put.cod() == a))
      throw Error(ErrorKind::BoundaryMismatch, "put must have type " + (a * b).str() + " -> " + a.str() + ", got " +
                                                   put.dom().str() + " -> " + put.cod().str());
  }

  friend bool operator==(const Lens&, const Lens&) = default;
};

/// <1_A | 1_A | 1_A> over the pattern [(A, A), (A, A), (A, A)].
template <MonoidalBase B>
Comb<B> comult_comb(const typename B::Object& a) {
  const auto id = B::identity(a);
  return Comb<B>({{{a, a}, {a, a}, {a, a}}}, {B::unit(), B::unit()}, {id, id, id});
}

template <MonoidalBase B>
Comb<B> counit_comb(const typename B::Object& a) {
  return from_morphism<B>(B::identity(a));
}

/// The two sides of the comultiplication equation for a homogeneous optic
/// <alpha | beta>_M : (A, A) -> (B, B), in tuple form:
/// <alpha | 1_{M*B} | beta> and <alpha | beta;alpha | beta>.
template <MonoidalBase B>
std::pair<Comb<B>, Comb<B>> comultiplication_sides(const Optic<B>& h) {
  if (!h.homogeneous()) throw Error(ErrorKind::NotHomogeneous, "optic " + h.str() + " is not homogeneous");
  const auto a = h.source().first;
  const auto b = h.target().first;
  const auto& m = h.residual();
  typename Comb<B>::Pattern p{{{a, b}, {b, b}, {b, a}}};
  return {Comb<B>(p, {m, m}, {h.forward(), B::identity(B::tensor(m, b)), h.backward()}),
          Comb<B>(p, {m, m}, {h.forward(), B::seq(h.backward(), h.forward()), h.backward()})};
}

/// Comonoid homomorphism check: counit equation alpha;beta = 1_A and the
/// comultiplication equation, both decided up to sliding.
template <MonoidalBase B>
bool is_lawful(const Optic<B>& h) {
  if (!h.homogeneous()) throw Error(ErrorKind::NotHomogeneous, "optic " + h.str() + " is not homogeneous");
  const auto a = h.source().first;
  if (!B::equal(B::seq(h.forward(), h.backward()), B::identity(a))) return false;
  const auto [lhs, rhs] = comultiplication_sides(h);
  return eq_comb(lhs, rhs);
}

/// <copy_A ; (1_A * get) | put>_A
inline Optic<FinBase> optic_of_lens(const Lens& l) {
  return Optic<FinBase>(l.a, fin::compose_fin(fin::copy(l.a), fin::tensor_fin(fin::identity(l.a), l.get)), l.put);
}

inline Lens decompose(const Optic<FinBase>& h) {
  if (!h.homogeneous()) throw Error(ErrorKind::NotHomogeneous, "optic " + h.str() + " is not homogeneous");
  const auto& m = h.residual();
  const auto b = h.target().first;
  auto get = fin::compose_fin(h.forward(), fin::tensor_fin(fin::discard(m), fin::identity(b)));
  auto recover = fin::compose_fin(h.forward(), fin::tensor_fin(fin::identity(m), fin::discard(b)));
  auto put = fin::compose_fin(fin::tensor_fin(recover, fin::identity(b)), h.backward());
  return Lens(std::move(get), std::move(put));
}

struct LensLaws {
  bool getput = true;
  bool putget = true;
  bool putput = true;

  bool all() const { return getput && putget && putput; }
};

/// GetPut: put(a, get a) = a. PutGet: get(put(a, b)) = b.
/// PutPut: put(put(a, b), b') = put(a, b').
inline LensLaws check_lens_laws(const Lens& l) {
  LensLaws laws;
  const std::size_t na = l.a.cardinality(), nb = l.b.cardinality();
  for (std::size_t x = 0; x < na; ++x) {
    if (l.put(x * nb + l.get(x)) != x) laws.getput = false;
    for (std::size_t y = 0; y < nb; ++y) {
      const std::size_t updated = l.put(x * nb + y);
      if (l.get(updated) != y) laws.putget = false;
      for (std::size_t y2 = 0; y2 < nb; ++y2)
        if (l.put(updated * nb + y2) != l.put(x * nb + y2)) laws.putput = false;
    }
  }
  return laws;
}

/// Whether alpha : A -> M * B and beta : M * B -> A are mutually inverse.
template <MonoidalBase B>
bool mutually_inverse(const typename B::Morphism& alpha, const typename B::Morphism& beta) {
  return B::dom(alpha) == B::cod(beta) && B::cod(alpha) == B::dom(beta) &&
         B::equal(B::seq(alpha, beta), B::identity(B::dom(alpha))) &&
         B::equal(B::seq(beta, alpha), B::identity(B::cod(alpha)));
}

struct LemmaSuiteReport {
  struct Entry {
    std::string get;
    std::string put;
    LensLaws laws;
    bool lawful = false;
  };

  fin::FinObject a;
  fin::FinObject b;
  bool inhabited = false;
  std::size_t lenses = 0;
  std::size_t satisfying_laws = 0;
  std::size_t lawful = 0;
  std::size_t both = 0;
  std::vector<Entry> laws_not_lawful;  // would refute "laws imply lawful"
  std::vector<Entry> lawful_not_laws;  // refutes the converse only when B is inhabited

  /// Violations of the two implications; an uninhabited B is recorded but
  /// does not count against the converse.
  std::size_t violations() const { return laws_not_lawful.size() + (inhabited ? lawful_not_laws.size() : 0); }
  bool sets_equal() const { return laws_not_lawful.empty() && lawful_not_laws.empty(); }
};

/// Classifies every lens A <-> B by the lens laws and by lawfulness.
inline LemmaSuiteReport verify_lemma_suite(const fin::FinObject& a, const fin::FinObject& b) {
  LemmaSuiteReport report;
  report.a = a;
  report.b = b;
  report.inhabited = fin::is_inhabited(b);
  for (const auto& get : fin::enumerate_homs(a, b)) {
    for (const auto& put : fin::enumerate_homs(a * b, a)) {
      const Lens l(get, put);
      const LensLaws laws = check_lens_laws(l);
      const bool lawful = is_lawful(optic_of_lens(l));
      ++report.lenses;
      report.satisfying_laws += laws.all();
      report.lawful += lawful;
      report.both += laws.all() && lawful;
      if (laws.all() != lawful) {
        LemmaSuiteReport::Entry e{get.str(), put.str(), laws, lawful};
        (laws.all() ? report.laws_not_lawful : report.lawful_not_laws).push_back(std::move(e));
      }
    }
  }
  return report;
}

}  // namespace cornering
