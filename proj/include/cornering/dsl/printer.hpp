#pragma once

#include <string>

#include "cornering/dsl/workspace.hpp"

namespace cornering::dsl {

template <MonoidalBase B>
std::string left_comb_str(const LeftComb<B>& l) {
  std::string out = "<";
  for (std::size_t i = 0; i < l.teeth().size(); ++i) out += (i ? " | " : "") + B::show(l.teeth()[i]);
  out += "> residuals [";
  for (std::size_t i = 0; i < l.residuals().size(); ++i) out += (i ? ", " : "") + B::show(l.residuals()[i]);
  return out + "]";
}

inline std::string polar_str(const PolarizedWord<free::ObjectWord>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& [obj, pol] = w[i];
    const std::string s = obj.str();
    out += (i ? " * " : "") + (obj.size() > 1 ? "(" + s + ")" : s) + (pol == Polarity::Bullet ? "^*" : "^o");
  }
  return out;
}

/// The body of a declaration, as it would appear after `name =`.
inline std::string entity_str(const Entity& e) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TermEntity>)
          return std::visit([](const auto& m) { return m.str(); }, x.term);
        else if constexpr (std::is_same_v<T, CombEntity>)
          return std::visit([](const auto& c) { return c.str(); }, x.comb);
        else if constexpr (std::is_same_v<T, LeftEntity>)
          return std::visit([](const auto& c) { return left_comb_str(c); }, x.comb);
        else if constexpr (std::is_same_v<T, OpticEntity>)
          return std::visit([](const auto& h) { return h.str(); }, x.optic);
        else if constexpr (std::is_same_v<T, LensEntity>)
          return "get " + x.lens.get.str() + " put " + x.lens.put.str();
        else if constexpr (std::is_same_v<T, PolarEntity>)
          return polar_str(x.word);
        else
          return "";
      },
      e);
}

/// DSL source that parses back to a workspace with the same meaning. Terms
/// are written out in full, so references between declarations are inlined.
inline std::string print(const Workspace& ws) {
  std::string out;
  for (const auto& name : ws.order()) {
    const Entity& e = ws.at(name);
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, ObjectEntity>) {
            out += "object " + name + "\n";
          } else if constexpr (std::is_same_v<T, SetEntity>) {
            out += "set " + name + " = " + std::to_string(x.set.size) + "\n";
          } else if constexpr (std::is_same_v<T, GenEntity>) {
            out += "gen " + name + " : " + x.generator.dom.str() + " -> " + x.generator.cod.str() + "\n";
          } else if constexpr (std::is_same_v<T, FunEntity>) {
            out += "fun " + name + " : " + x.fun.dom().str() + " -> " + x.fun.cod().str() + " = [";
            for (std::size_t i = 0; i < x.fun.table().size(); ++i)
              out += (i ? ", " : "") + std::to_string(x.fun.table()[i]);
            out += "]\n";
          } else {
            out += kind_name(e) + " " + name + " = " + entity_str(e) + "\n";
          }
        },
        e);
  }
  return out;
}

}  // namespace cornering::dsl
