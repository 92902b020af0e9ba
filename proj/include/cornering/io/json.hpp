#pragma once

#include <json.hpp>

#include "cornering/lenses.hpp"

namespace cornering::io {

using nlohmann::json;

inline json to_json(const free::ObjectWord& w) { return w.letters(); }

inline json to_json(const fin::FinObject& w) {
  json letters = json::array();
  for (const auto& l : w.letters()) letters.push_back({{"set", l.name}, {"size", l.size}});
  return letters;
}

inline json to_json(const free::MorTerm& t) {
  return {{"term", t.str()}, {"dom", to_json(t.dom())}, {"cod", to_json(t.cod())}};
}

inline json to_json(const fin::FinMorphism& f) {
  return {{"dom", to_json(f.dom())}, {"cod", to_json(f.cod())}, {"table", f.table()}};
}

inline json to_json(const free::NormalDiagram& d) {
  json layers = json::array();
  for (const auto& l : d.layers) layers.push_back({{"offset", l.offset}, {"generator", l.generator.name}});
  return {{"dom", to_json(d.dom)}, {"cod", to_json(d.cod)}, {"layers", layers}};
}

template <MonoidalBase B>
json to_json(const AlternationPattern<typename B::Object>& p) {
  json pairs = json::array();
  for (const auto& [a, b] : p.pairs) pairs.push_back({{"in", to_json(a)}, {"out", to_json(b)}});
  return pairs;
}

template <MonoidalBase B>
json to_json(const Comb<B>& c) {
  json residuals = json::array(), teeth = json::array();
  for (const auto& m : c.residuals()) residuals.push_back(to_json(m));
  for (const auto& t : c.teeth()) teeth.push_back(to_json(t));
  return {{"base", B::name}, {"depth", c.depth()}, {"pattern", to_json<B>(c.pattern())}, {"residuals", residuals},
          {"teeth", teeth}};
}

template <MonoidalBase B>
json to_json(const LeftComb<B>& l) {
  json residuals = json::array(), teeth = json::array();
  for (const auto& m : l.residuals()) residuals.push_back(to_json(m));
  for (const auto& t : l.teeth()) teeth.push_back(to_json(t));
  return {{"base", B::name},           {"source", to_json(l.source())},   {"target", to_json(l.target())},
          {"pattern", to_json<B>(l.pattern())}, {"residuals", residuals}, {"teeth", teeth}};
}

template <MonoidalBase B>
json to_json(const Optic<B>& h) {
  const auto [a, b] = h.source();
  const auto [c, d] = h.target();
  return {{"base", B::name},
          {"source", {to_json(a), to_json(b)}},
          {"target", {to_json(c), to_json(d)}},
          {"residual", to_json(h.residual())},
          {"forward", to_json(h.forward())},
          {"backward", to_json(h.backward())}};
}

inline json to_json(const Lens& l) {
  return {{"a", to_json(l.a)}, {"b", to_json(l.b)}, {"get", to_json(l.get)}, {"put", to_json(l.put)}};
}

inline json to_json(const LensLaws& laws) {
  return {{"getput", laws.getput}, {"putget", laws.putget}, {"putput", laws.putput}};
}

inline json to_json(const LemmaSuiteReport& r) {
  auto entries = [](const std::vector<LemmaSuiteReport::Entry>& es) {
    json out = json::array();
    for (const auto& e : es)
      out.push_back({{"get", e.get}, {"put", e.put}, {"laws", to_json(e.laws)}, {"lawful", e.lawful}});
    return out;
  };
  return {{"a", to_json(r.a)},
          {"b", to_json(r.b)},
          {"inhabited", r.inhabited},
          {"lenses", r.lenses},
          {"satisfying_laws", r.satisfying_laws},
          {"lawful", r.lawful},
          {"both", r.both},
          {"sets_equal", r.sets_equal()},
          {"violations", r.violations()},
          {"laws_not_lawful", entries(r.laws_not_lawful)},
          {"lawful_not_laws", entries(r.lawful_not_laws)}};
}

/// Wraps a payload in the versioned envelope.
inline json envelope(const std::string& command, json payload) {
  return {{"schema", 1}, {"command", command}, {"result", std::move(payload)}};
}

}  // namespace cornering::io
