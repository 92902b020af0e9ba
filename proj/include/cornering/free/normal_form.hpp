#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cornering/error.hpp"
#include "cornering/free/term.hpp"

namespace cornering::free {

/// One whiskered generator id_L * g * id_R, where L has `offset` letters.
struct Layer {
  std::size_t offset = 0;
  Generator generator;

  friend bool operator==(const Layer&, const Layer&) = default;
};

inline bool layer_less(const Layer& a, const Layer& b) {
  return std::tie(a.offset, a.generator.name, a.generator.dom, a.generator.cod) <
         std::tie(b.offset, b.generator.name, b.generator.dom, b.generator.cod);
}

inline bool layers_less(const std::vector<Layer>& a, const std::vector<Layer>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), layer_less);
}

/// A morphism as a list of whiskered generators. Produced by normalize_base it
/// is the lexicographically least layer list of its interchange class.
struct NormalDiagram {
  ObjectWord dom;
  ObjectWord cod;
  std::vector<Layer> layers;

  friend bool operator==(const NormalDiagram&, const NormalDiagram&) = default;
};

/// Layers of `t` in the order a left-to-right, top-to-bottom reading of the
/// term produces them. Not canonical.
inline std::vector<Layer> flatten(const MorTerm& t) {
  std::vector<Layer> out;
  auto go = [&out](auto&& self, const MorTerm& term, std::size_t shift) -> void {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, MorTerm::Gen>) {
            out.push_back(Layer{shift, n.generator});
          } else if constexpr (std::is_same_v<T, MorTerm::Identity>) {
          } else if constexpr (std::is_same_v<T, MorTerm::Seq>) {
            self(self, n.first, shift);
            self(self, n.second, shift);
          } else {
            // left factor acts first while the right factor's inputs wait to its right
            self(self, n.left, shift);
            self(self, n.right, shift + n.left.cod().size());
          }
        },
        term.node());
  };
  go(go, t, 0);
  return out;
}

/// Replays `layers` from `dom`; throws TypeMismatch if a layer does not fit.
inline ObjectWord replay_codomain(const ObjectWord& dom, const std::vector<Layer>& layers) {
  std::vector<std::string> cut = dom.letters();
  for (const auto& layer : layers) {
    const auto& g = layer.generator;
    if (layer.offset + g.dom.size() > cut.size() ||
        !std::equal(g.dom.letters().begin(), g.dom.letters().end(),
                    cut.begin() + static_cast<std::ptrdiff_t>(layer.offset)))
      throw Error(ErrorKind::TypeMismatch, "layer " + g.name + " does not fit the current wires");
    auto at = cut.erase(cut.begin() + static_cast<std::ptrdiff_t>(layer.offset),
                        cut.begin() + static_cast<std::ptrdiff_t>(layer.offset + g.dom.size()));
    cut.insert(at, g.cod.letters().begin(), g.cod.letters().end());
  }
  return ObjectWord(std::move(cut));
}

/// The term id * g * id ; ... reading of a diagram.
inline MorTerm to_term(const NormalDiagram& d) {
  if (d.layers.empty()) return MorTerm::identity(d.dom);
  std::vector<std::string> cut = d.dom.letters();
  std::optional<MorTerm> acc;
  for (const auto& layer : d.layers) {
    const auto& g = layer.generator;
    ObjectWord left(std::vector<std::string>(cut.begin(), cut.begin() + static_cast<std::ptrdiff_t>(layer.offset)));
    ObjectWord right(std::vector<std::string>(cut.begin() + static_cast<std::ptrdiff_t>(layer.offset + g.dom.size()),
                                              cut.end()));
    MorTerm step = MorTerm::generator(g);
    if (!left.empty()) step = MorTerm::par(MorTerm::identity(left), step);
    if (!right.empty()) step = MorTerm::par(step, MorTerm::identity(right));
    acc = acc ? MorTerm::seq(*acc, step) : step;
    cut = (left * g.cod * right).letters();
  }
  return *acc;
}

namespace detail {

class UnionFind {
 public:
  int make() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }
  int find(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

/// Port graph of a layer list together with the planar faces between wires.
/// Faces 0 and 1 are the regions touching the left and right edges.
struct PlanarStructure {
  struct Wire {
    int left_face;
    int right_face;
  };
  struct Box {
    Generator generator;
    std::vector<int> inputs;
    std::vector<int> outputs;
    int region = -1;  // face a box without inputs sits in
  };

  std::vector<Wire> wires;
  std::vector<Box> boxes;
  std::vector<int> top;
  std::vector<int> bottom;
  UnionFind faces;

  int face(int f) const { return faces.find(f); }
};

inline PlanarStructure analyse(const ObjectWord& dom, const std::vector<Layer>& layers) {
  PlanarStructure s;
  const int left_edge = s.faces.make();
  const int right_edge = s.faces.make();
  std::vector<int> cut;
  std::vector<int> gaps;  // gaps[k] is the face left of cut[k]; gaps.back() right of the last wire

  auto new_wire = [&s](int lf, int rf) {
    s.wires.push_back({lf, rf});
    return static_cast<int>(s.wires.size() - 1);
  };

  gaps.push_back(left_edge);
  for (std::size_t i = 0; i < dom.size(); ++i) gaps.push_back(i + 1 == dom.size() ? right_edge : s.faces.make());
  if (dom.empty()) s.faces.unite(left_edge, right_edge);
  for (std::size_t i = 0; i < dom.size(); ++i) cut.push_back(new_wire(gaps[i], gaps[i + 1]));
  s.top = cut;

  for (const auto& layer : layers) {
    const auto& g = layer.generator;
    const std::size_t k = layer.offset, a = g.dom.size(), b = g.cod.size();
    PlanarStructure::Box box{g, {}, {}, -1};
    box.inputs.assign(cut.begin() + static_cast<std::ptrdiff_t>(k), cut.begin() + static_cast<std::ptrdiff_t>(k + a));
    const int lf = gaps[k];
    const int rf = gaps[k + a];
    if (a == 0) box.region = lf;
    if (b == 0) s.faces.unite(lf, rf);

    std::vector<int> new_gaps{lf};
    for (std::size_t j = 1; j < b; ++j) new_gaps.push_back(s.faces.make());
    if (b > 0) new_gaps.push_back(rf);
    for (std::size_t j = 0; j < b; ++j) box.outputs.push_back(new_wire(new_gaps[j], new_gaps[j + 1]));

    cut.erase(cut.begin() + static_cast<std::ptrdiff_t>(k), cut.begin() + static_cast<std::ptrdiff_t>(k + a));
    cut.insert(cut.begin() + static_cast<std::ptrdiff_t>(k), box.outputs.begin(), box.outputs.end());
    gaps.erase(gaps.begin() + static_cast<std::ptrdiff_t>(k), gaps.begin() + static_cast<std::ptrdiff_t>(k + a + 1));
    gaps.insert(gaps.begin() + static_cast<std::ptrdiff_t>(k), new_gaps.begin(), new_gaps.end());
    s.boxes.push_back(std::move(box));
  }
  s.bottom = cut;
  return s;
}

/// Finds the least layer list that reproduces the port graph of `s` with every
/// input-free box in its original face.
class Scheduler {
 public:
  explicit Scheduler(const PlanarStructure& s) : s_(s) {}

  std::vector<Layer> run() {
    std::vector<char> done(s_.boxes.size(), 0);
    auto best = search(done, s_.top);
    if (!best) throw Error(ErrorKind::InvalidArgument, "internal: diagram admits no schedule");
    return *best;
  }

 private:
  struct Candidate {
    std::size_t offset;
    std::size_t box;
  };

  int gap_face(const std::vector<int>& cut, std::size_t k) const {
    if (k == 0) return s_.face(0);
    if (k == cut.size()) return s_.face(1);
    return s_.face(s_.wires[static_cast<std::size_t>(cut[k - 1])].right_face);
  }

  std::vector<Candidate> candidates(const std::vector<char>& done, const std::vector<int>& cut) const {
    std::vector<Candidate> out;
    for (std::size_t bi = 0; bi < s_.boxes.size(); ++bi) {
      if (done[bi]) continue;
      const auto& box = s_.boxes[bi];
      if (box.inputs.empty()) {
        const int region = s_.face(box.region);
        for (std::size_t k = 0; k <= cut.size(); ++k)
          if (gap_face(cut, k) == region) out.push_back({k, bi});
        continue;
      }
      auto it = std::find(cut.begin(), cut.end(), box.inputs.front());
      if (it == cut.end()) continue;
      const auto k = static_cast<std::size_t>(it - cut.begin());
      if (k + box.inputs.size() > cut.size()) continue;
      if (std::equal(box.inputs.begin(), box.inputs.end(), it)) out.push_back({k, bi});
    }
    return out;
  }

  Layer layer_of(const Candidate& c) const { return Layer{c.offset, s_.boxes[c.box].generator}; }

  std::optional<std::vector<Layer>> search(std::vector<char>& done, const std::vector<int>& cut) {
    if (std::all_of(done.begin(), done.end(), [](char d) { return d != 0; })) {
      // an input-free box may have been placed so that the bottom wires come out permuted
      if (cut != s_.bottom) return std::nullopt;
      return std::vector<Layer>{};
    }
    std::string key(done.begin(), done.end());
    for (int w : cut) key += "," + std::to_string(w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    auto cands = candidates(done, cut);
    std::stable_sort(cands.begin(), cands.end(),
                     [this](const Candidate& x, const Candidate& y) { return layer_less(layer_of(x), layer_of(y)); });

    std::optional<std::vector<Layer>> result;
    for (std::size_t i = 0; i < cands.size() && !result;) {
      std::size_t j = i;
      while (j < cands.size() && !layer_less(layer_of(cands[i]), layer_of(cands[j]))) ++j;
      for (std::size_t c = i; c < j; ++c) {
        const auto& box = s_.boxes[cands[c].box];
        std::vector<int> next = cut;
        const auto at = next.begin() + static_cast<std::ptrdiff_t>(cands[c].offset);
        next.erase(at, at + static_cast<std::ptrdiff_t>(box.inputs.size()));
        next.insert(next.begin() + static_cast<std::ptrdiff_t>(cands[c].offset), box.outputs.begin(),
                    box.outputs.end());
        done[cands[c].box] = 1;
        auto tail = search(done, next);
        done[cands[c].box] = 0;
        if (!tail) continue;
        tail->insert(tail->begin(), layer_of(cands[c]));
        if (!result || layers_less(*tail, *result)) result = std::move(tail);
      }
      i = j;
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

  const PlanarStructure& s_;
  std::map<std::string, std::optional<std::vector<Layer>>> memo_;
};

}  // namespace detail

/// Canonical representative of the interchange class of a layer list.
inline NormalDiagram normalize_layers(const ObjectWord& dom, const std::vector<Layer>& layers) {
  ObjectWord cod = replay_codomain(dom, layers);
  auto structure = detail::analyse(dom, layers);
  detail::Scheduler scheduler(structure);
  return NormalDiagram{dom, std::move(cod), scheduler.run()};
}

inline NormalDiagram normalize_base(const MorTerm& t) { return normalize_layers(t.dom(), flatten(t)); }

/// Equality in the free strict monoidal category.
inline bool eq_base(const MorTerm& s, const MorTerm& t) {
  if (s.dom() != t.dom() || s.cod() != t.cod()) return false;
  return normalize_base(s).layers == normalize_base(t).layers;
}

}  // namespace cornering::free
