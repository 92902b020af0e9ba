#pragma once

#include <string>
#include <utility>

#include "cornering/comb.hpp"

namespace cornering {

/// <alpha | beta>_M : (A, B) -> (C, D) with alpha : A -> M * C and
/// beta : M * D -> B. Stored as a representative; compare with eq_optic.
template <MonoidalBase B>
class Optic {
 public:
  using Object = typename B::Object;
  using Morphism = typename B::Morphism;

  Optic(Object residual, Morphism forward, Morphism backward)
      : residual_(std::move(residual)), forward_(std::move(forward)), backward_(std::move(backward)) {
    if (!B::starts_with(B::cod(forward_), residual_))
      throw Error(ErrorKind::BoundaryMismatch,
                  "forward part lands in " + B::show(B::cod(forward_)) + ", not in " + B::show(residual_) + " * C");
    if (!B::starts_with(B::dom(backward_), residual_))
      throw Error(ErrorKind::BoundaryMismatch,
                  "backward part starts from " + B::show(B::dom(backward_)) + ", not from " + B::show(residual_) + " * D");
  }

  const Object& residual() const { return residual_; }
  const Morphism& forward() const { return forward_; }
  const Morphism& backward() const { return backward_; }

  std::pair<Object, Object> source() const { return {B::dom(forward_), B::cod(backward_)}; }
  std::pair<Object, Object> target() const {
    return {B::drop_prefix(B::cod(forward_), residual_), B::drop_prefix(B::dom(backward_), residual_)};
  }
  bool homogeneous() const {
    const auto [a, b] = source();
    const auto [c, d] = target();
    return a == b && c == d;
  }

  std::string str() const {
    return "<" + B::show(forward_) + " | " + B::show(backward_) + "> @ " + B::show(residual_);
  }

 private:
  Object residual_;
  Morphism forward_;
  Morphism backward_;
};

template <MonoidalBase B>
Optic<B> id_optic(const typename B::Object& a, const typename B::Object& b) {
  return Optic<B>(B::unit(), B::identity(a), B::identity(b));
}

template <MonoidalBase B>
Optic<B> compose_optic(const Optic<B>& h1, const Optic<B>& h2) {
  if (!(h1.target() == h2.source()))
    throw Error(ErrorKind::BoundaryMismatch, "optic targets (" + B::show(h1.target().first) + ", " +
                                                 B::show(h1.target().second) + ") but the next starts at (" +
                                                 B::show(h2.source().first) + ", " + B::show(h2.source().second) +
                                                 ")");
  const auto m = B::identity(h1.residual());
  return Optic<B>(B::tensor(h1.residual(), h2.residual()), B::seq(h1.forward(), B::par(m, h2.forward())),
                  B::seq(B::par(m, h2.backward()), h1.backward()));
}

/// Pattern [(A, C), (D, B)], residual [M].
template <MonoidalBase B>
Comb<B> to_comb(const Optic<B>& h) {
  const auto [a, b] = h.source();
  const auto [c, d] = h.target();
  return Comb<B>({{{a, c}, {d, b}}}, {h.residual()}, {h.forward(), h.backward()});
}

template <MonoidalBase B>
Optic<B> from_comb(const Comb<B>& c) {
  if (c.depth() != 2)
    throw Error(ErrorKind::DepthMismatch, "an optic is a depth-2 comb, got depth " + std::to_string(c.depth()));
  return Optic<B>(c.residuals()[0], c.tooth(1), c.tooth(2));
}

template <MonoidalBase B>
bool eq_optic(const Optic<B>& h1, const Optic<B>& h2) {
  if (!(h1.source() == h2.source()) || !(h1.target() == h2.target())) return false;
  return eq_comb(to_comb(h1), to_comb(h2));
}

/// Horizontal composite of two bent depth-2 cells: c2 goes into the gap of c1.
template <MonoidalBase B>
Comb<B> hcompose2(const Comb<B>& c1, const Comb<B>& c2) {
  if (c1.depth() != 2 || c2.depth() != 2)
    throw Error(ErrorKind::DepthMismatch, "hcompose2 takes two depth-2 combs");
  return plug_gap(c1, 1, c2);
}

/// A depth-1 comb presented as a cell A° -> B° or B• -> A•. Both carry the
/// same tooth; only the advertised boundary differs.
template <MonoidalBase B>
struct PolarizedHom {
  PolarizedWord<typename B::Object> source;
  PolarizedWord<typename B::Object> target;
  Comb<B> comb;
};

template <MonoidalBase B>
PolarizedHom<B> f_circ(const typename B::Morphism& f) {
  return {{{B::dom(f), Polarity::Circ}}, {{B::cod(f), Polarity::Circ}}, from_morphism<B>(f)};
}

template <MonoidalBase B>
PolarizedHom<B> f_bullet(const typename B::Morphism& f) {
  return {{{B::cod(f), Polarity::Bullet}}, {{B::dom(f), Polarity::Bullet}}, from_morphism<B>(f)};
}

/// The counit (A, A) -> (I, I), i.e. the optic <1_A | 1_A>_A.
template <MonoidalBase B>
Optic<B> counit_optic(const typename B::Object& a) {
  return Optic<B>(a, B::identity(a), B::identity(a));
}

/// f° acting on the first component: <f | 1_B>_I : (A, B) -> (B, B).
template <MonoidalBase B>
Optic<B> whisker_circ(const typename B::Morphism& f) {
  return Optic<B>(B::unit(), f, B::identity(B::cod(f)));
}

/// f• acting on the second component: <1_A | f>_I : (A, B) -> (A, A).
template <MonoidalBase B>
Optic<B> whisker_bullet(const typename B::Morphism& f) {
  return Optic<B>(B::unit(), B::identity(B::dom(f)), f);
}

/// Both sides of the extranaturality square for f : A -> B, as optics
/// (A, B) -> (I, I).
template <MonoidalBase B>
std::pair<Optic<B>, Optic<B>> extranaturality_sides(const typename B::Morphism& f) {
  return {compose_optic(whisker_circ<B>(f), counit_optic<B>(B::cod(f))),
          compose_optic(whisker_bullet<B>(f), counit_optic<B>(B::dom(f)))};
}

/// Runs an optic (A, B) -> (I, I) down to the morphism A -> B it denotes.
template <MonoidalBase B>
typename B::Morphism run_closed(const Optic<B>& h) {
  return run(to_comb(h), {B::identity(B::unit())});
}

}  // namespace cornering
