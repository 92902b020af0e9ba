#pragma once

#include <string>
#include <vector>

#include "cornering/fin/enumerate.hpp"
#include "cornering/fin/morphism.hpp"

namespace cornering::fin {

struct ComonoidReport {
  bool coassociative = true;
  bool counital = true;
  bool cocommutative = true;
  bool coherent = true;         // copy/discard on A*B and I built from the letters
  bool natural = true;          // sampled morphisms are comonoid homomorphisms
  std::size_t morphisms_checked = 0;

  bool ok() const { return coassociative && counital && cocommutative && coherent && natural; }
};

namespace detail {

inline bool homomorphism(const FinMorphism& f) {
  const auto& a = f.dom();
  const auto& b = f.cod();
  return compose_fin(f, copy(b)) == compose_fin(copy(a), tensor_fin(f, f)) &&
         compose_fin(f, discard(b)) == discard(a);
}

}  // namespace detail

/// Checks the commutative comonoid equations for (copy, discard) on `a` by
/// evaluating both sides on every element.
inline ComonoidReport comonoid_report(const FinObject& a, std::size_t sample_limit = 256) {
  ComonoidReport r;
  const auto id = identity(a);
  const auto d = copy(a);
  const auto e = discard(a);

  r.coassociative = compose_fin(d, tensor_fin(d, id)) == compose_fin(d, tensor_fin(id, d));
  r.counital = compose_fin(d, tensor_fin(e, id)) == id && compose_fin(d, tensor_fin(id, e)) == id;
  r.cocommutative = compose_fin(d, swap(a, a)) == d;

  // copy on a word is the letterwise copies followed by the middle interchange
  FinObject prefix;
  for (const auto& letter : a.letters()) {
    const FinObject x{letter};
    const auto lhs = copy(prefix * x);
    const auto rhs = compose_fin(tensor_fin(copy(prefix), copy(x)),
                                 tensor_fin(tensor_fin(identity(prefix), swap(prefix, x)), identity(x)));
    const auto del_l = discard(prefix * x);
    const auto del_r = tensor_fin(discard(prefix), discard(x));
    if (!(lhs == rhs) || !(del_l == del_r)) r.coherent = false;
    prefix = prefix * x;
  }
  const FinObject unit;
  if (!(copy(unit) == identity(unit)) || !(discard(unit) == identity(unit))) r.coherent = false;

  const FinObject two{FinSet{"2", 2}};
  for (const auto& target : {a, two, a * a}) {
    std::size_t seen = 0;
    for (const auto& f : enumerate_homs(a, target)) {
      if (seen++ >= sample_limit) break;
      ++r.morphisms_checked;
      if (!detail::homomorphism(f)) r.natural = false;
    }
  }
  return r;
}

inline bool check_comonoid_axioms(const FinObject& a) { return comonoid_report(a).ok(); }

}  // namespace cornering::fin
