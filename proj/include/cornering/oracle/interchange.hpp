#pragma once

#include <deque>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "cornering/free/term.hpp"
#include "cornering/oracle/verdict.hpp"

namespace cornering::oracle {

/// A whiskered generator, kept apart from the library's layer type so the
/// oracle shares no code with the normalizer.
struct Box {
  std::size_t offset;
  std::string name;
  std::size_t in;
  std::size_t out;
  std::vector<std::string> dom;
  std::vector<std::string> cod;

  auto key() const { return std::tie(offset, name, dom, cod); }
  friend bool operator<(const Box& a, const Box& b) { return a.key() < b.key(); }
  friend bool operator==(const Box& a, const Box& b) { return a.key() == b.key(); }
};

using Boxes = std::vector<Box>;

/// Reads a term into boxes. For a tensor the right factor is emitted first.
inline Boxes boxes_of(const free::MorTerm& t) {
  Boxes out;
  auto go = [&out](auto&& self, const free::MorTerm& term, std::size_t shift) -> void {
    if (auto* g = std::get_if<free::MorTerm::Gen>(&term.node())) {
      const auto& gen = g->generator;
      out.push_back({shift, gen.name, gen.dom.size(), gen.cod.size(), gen.dom.letters(), gen.cod.letters()});
    } else if (auto* s = std::get_if<free::MorTerm::Seq>(&term.node())) {
      self(self, s->first, shift);
      self(self, s->second, shift);
    } else if (auto* p = std::get_if<free::MorTerm::Par>(&term.node())) {
      self(self, p->right, shift + p->left.dom().size());
      self(self, p->left, shift);
    }
  };
  go(go, t, 0);
  return out;
}

/// The box pair obtained by exchanging two consecutive boxes, if their wire
/// intervals are disjoint. Up to two results: a box with no outputs followed
/// by one with no inputs at the same spot can pass on either side.
inline std::vector<std::pair<Box, Box>> exchanges(const Box& first, const Box& second) {
  std::vector<std::pair<Box, Box>> result;
  if (second.offset + second.in <= first.offset) {
    Box a = second, b = first;
    b.offset = first.offset - second.in + second.out;
    result.emplace_back(a, b);
  }
  if (second.offset >= first.offset + first.out) {
    Box a = second, b = first;
    a.offset = second.offset - first.out + first.in;
    result.emplace_back(a, b);
  }
  return result;
}

inline std::vector<Boxes> neighbours(const Boxes& boxes) {
  std::vector<Boxes> out;
  for (std::size_t i = 0; i + 1 < boxes.size(); ++i) {
    for (auto& [a, b] : exchanges(boxes[i], boxes[i + 1])) {
      Boxes next = boxes;
      next[i] = a;
      next[i + 1] = b;
      if (next != boxes) out.push_back(std::move(next));
    }
  }
  return out;
}

/// Every box list reachable by exchanges, or nothing if more than
/// `state_cap` lists or deeper than `move_bound` moves would be needed.
struct Closure {
  std::set<Boxes> states;
  bool complete = true;
};

inline Closure interchange_closure(const Boxes& start, std::size_t move_bound, std::size_t state_cap = 200000) {
  Closure c;
  std::deque<std::pair<Boxes, std::size_t>> queue{{start, 0}};
  c.states.insert(start);
  while (!queue.empty()) {
    auto [cur, depth] = std::move(queue.front());
    queue.pop_front();
    for (auto& next : neighbours(cur)) {
      if (c.states.contains(next)) continue;
      if (depth + 1 > move_bound || c.states.size() >= state_cap) {
        c.complete = false;
        continue;
      }
      c.states.insert(next);
      queue.emplace_back(std::move(next), depth + 1);
    }
  }
  return c;
}

/// BFS over single exchanges of adjacent boxes. Associativity, units and
/// functoriality of the tensor are absorbed by reading terms as box lists.
inline Verdict interchange_closure_eq(const free::MorTerm& s, const free::MorTerm& t, std::size_t move_bound,
                                      std::size_t state_cap = 200000) {
  if (s.dom() != t.dom() || s.cod() != t.cod()) return Verdict::Unequal;
  const Boxes a = boxes_of(s), b = boxes_of(t);
  if (a == b) return Verdict::Equal;
  if (a.size() != b.size()) return Verdict::Unequal;
  std::set<Boxes> seen{a};
  std::deque<std::pair<Boxes, std::size_t>> queue{{a, 0}};
  bool truncated = false;
  while (!queue.empty()) {
    auto [cur, depth] = std::move(queue.front());
    queue.pop_front();
    for (auto& next : neighbours(cur)) {
      if (next == b) return Verdict::Equal;
      if (seen.contains(next)) continue;
      if (depth + 1 >= move_bound || seen.size() >= state_cap) {
        truncated = true;
        continue;
      }
      seen.insert(next);
      queue.emplace_back(std::move(next), depth + 1);
    }
  }
  return truncated ? Verdict::Inconclusive : Verdict::Unequal;
}

}  // namespace cornering::oracle
