#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "cornering/comb_core.hpp"
#include "cornering/oracle/verdict.hpp"

namespace cornering::oracle {

/// All words of length <= bound over the given letters, shortest first.
inline std::vector<fin::FinObject> words_up_to(const std::vector<fin::FinSet>& alphabet, std::size_t bound) {
  std::vector<fin::FinObject> words{fin::FinObject{}};
  std::vector<fin::FinObject> layer{fin::FinObject{}};
  for (std::size_t len = 1; len <= bound; ++len) {
    std::vector<fin::FinObject> next;
    for (const auto& w : layer)
      for (const auto& letter : alphabet) next.push_back(w * fin::FinObject{letter});
    words.insert(words.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return words;
}

/// The letters occurring in a comb's pattern and residuals.
inline std::vector<fin::FinSet> alphabet_of(const Comb<FinBase>& c) {
  std::set<fin::FinSet> letters;
  auto add = [&letters](const fin::FinObject& w) { letters.insert(w.letters().begin(), w.letters().end()); };
  for (const auto& [a, b] : c.pattern().pairs) {
    add(a);
    add(b);
  }
  for (const auto& m : c.residuals()) add(m);
  return {letters.begin(), letters.end()};
}

/// A comb with raw tables, used by the closure search. Residual i is
/// words[residual[i]].
struct RawComb {
  std::vector<std::size_t> residual;
  std::vector<std::vector<std::uint32_t>> teeth;

  auto operator<=>(const RawComb&) const = default;
};

/// The slide graph on combs over one pattern whose residuals are drawn from
/// a fixed list of words. Edges are single slides; they are symmetric, so
/// forward slides from every comb cover every edge.
class SlideGraph {
 public:
  SlideGraph(std::vector<std::pair<fin::FinObject, fin::FinObject>> pattern, std::vector<fin::FinObject> words)
      : pattern_(std::move(pattern)), words_(std::move(words)) {}

  std::size_t depth() const { return pattern_.size(); }
  const std::vector<fin::FinObject>& words() const { return words_; }

  std::size_t residual_size(const RawComb& c, std::size_t i) const {
    return i == 0 || i == depth() ? 1 : words_[c.residual[i - 1]].cardinality();
  }
  std::size_t in_size(std::size_t i) const { return pattern_[i - 1].first.cardinality(); }
  std::size_t out_size(std::size_t i) const { return pattern_[i - 1].second.cardinality(); }

  RawComb raw(const Comb<FinBase>& c) const {
    RawComb r;
    for (const auto& m : c.residuals()) {
      auto it = std::find(words_.begin(), words_.end(), m);
      if (it == words_.end()) throw Error(ErrorKind::InvalidArgument, "residual " + m.str() + " outside the bound");
      r.residual.push_back(static_cast<std::size_t>(it - words_.begin()));
    }
    for (const auto& t : c.teeth()) r.teeth.push_back(t.table());
    return r;
  }

  Comb<FinBase> cook(const RawComb& r) const {
    AlternationPattern<fin::FinObject> p{pattern_};
    std::vector<fin::FinObject> residuals;
    for (auto id : r.residual) residuals.push_back(words_[id]);
    std::vector<fin::FinMorphism> teeth;
    for (std::size_t i = 1; i <= depth(); ++i) {
      const auto before = i == 1 ? fin::FinObject{} : residuals[i - 2];
      const auto after = i == depth() ? fin::FinObject{} : residuals[i - 1];
      teeth.emplace_back(before * pattern_[i - 1].first, after * pattern_[i - 1].second, r.teeth[i - 1]);
    }
    return Comb<FinBase>(std::move(p), std::move(residuals), std::move(teeth));
  }

  using Visitor = std::function<bool(const RawComb&)>;

  /// Calls `visit` on every comb reached by sliding some m : M' -> M_i out of
  /// tooth i into tooth i+1. Stops early, returning false, once `visit` does.
  bool forward_slides(const RawComb& c, const Visitor& visit) const {
    for (std::size_t gap = 1; gap < depth(); ++gap) {
      const std::size_t s = residual_size(c, gap);
      const std::size_t nb = out_size(gap), na = in_size(gap + 1);
      const auto& f = c.teeth[gap - 1];
      const auto& g = c.teeth[gap];
      for (std::size_t w = 0; w < words_.size(); ++w) {
        const std::size_t s2 = words_[w].cardinality();
        const bool go_on = for_each_function(s2, s, [&](const std::vector<std::uint32_t>& m) {
          // preimages of each residual state
          std::vector<std::vector<std::uint32_t>> pre(s);
          for (std::uint32_t x = 0; x < s2; ++x) pre[m[x]].push_back(x);
          std::vector<const std::vector<std::uint32_t>*> choices(f.size());
          for (std::size_t u = 0; u < f.size(); ++u) {
            choices[u] = &pre[f[u] / nb];
            if (choices[u]->empty()) return true;
          }
          RawComb next = c;
          next.residual[gap - 1] = w;
          auto& g2 = next.teeth[gap];
          g2.assign(s2 * na, 0);
          for (std::size_t x = 0; x < s2; ++x)
            for (std::size_t a = 0; a < na; ++a) g2[x * na + a] = g[m[x] * na + a];
          auto& core = next.teeth[gap - 1];
          std::vector<std::size_t> pick(f.size(), 0);
          while (true) {
            for (std::size_t u = 0; u < f.size(); ++u)
              core[u] = static_cast<std::uint32_t>((*choices[u])[pick[u]] * nb + f[u] % nb);
            if (!visit(next)) return false;
            std::size_t u = f.size();
            while (u > 0) {
              --u;
              if (++pick[u] < choices[u]->size()) break;
              pick[u] = 0;
              if (u == 0) return true;
            }
            if (f.empty()) return true;
          }
        });
        if (!go_on) return false;
      }
    }
    return true;
  }

  /// Calls `visit` on every comb from which one forward slide reaches `c`.
  bool backward_slides(const RawComb& c, const Visitor& visit) const {
    for (std::size_t gap = 1; gap < depth(); ++gap) {
      const std::size_t s2 = residual_size(c, gap);
      const std::size_t nb = out_size(gap), na = in_size(gap + 1);
      const std::size_t after = residual_size(c, gap + 1) * out_size(gap + 1);
      const auto& f = c.teeth[gap - 1];
      const auto& g = c.teeth[gap];
      for (std::size_t w = 0; w < words_.size(); ++w) {
        const std::size_t s = words_[w].cardinality();
        const bool go_on = for_each_function(s2, s, [&](const std::vector<std::uint32_t>& m) {
          // g' on the image of m is forced by g; elsewhere it is free
          std::vector<std::int64_t> forced(s * na, -1);
          for (std::size_t x = 0; x < s2; ++x)
            for (std::size_t a = 0; a < na; ++a) {
              auto& slot = forced[m[x] * na + a];
              const auto v = static_cast<std::int64_t>(g[x * na + a]);
              if (slot >= 0 && slot != v) return true;
              slot = v;
            }
          RawComb prev = c;
          prev.residual[gap - 1] = w;
          auto& f2 = prev.teeth[gap - 1];
          for (std::size_t u = 0; u < f.size(); ++u) f2[u] = static_cast<std::uint32_t>(m[f[u] / nb] * nb + f[u] % nb);
          std::vector<std::size_t> free_slots;
          auto& g2 = prev.teeth[gap];
          g2.assign(s * na, 0);
          for (std::size_t k = 0; k < forced.size(); ++k) {
            if (forced[k] >= 0) g2[k] = static_cast<std::uint32_t>(forced[k]);
            else free_slots.push_back(k);
          }
          if (after == 0 && !free_slots.empty()) return true;
          while (true) {
            if (!visit(prev)) return false;
            std::size_t k = free_slots.size();
            while (k > 0) {
              --k;
              if (++g2[free_slots[k]] < after) break;
              g2[free_slots[k]] = 0;
              if (k == 0) return true;
            }
            if (free_slots.empty()) return true;
          }
        });
        if (!go_on) return false;
      }
    }
    return true;
  }

  /// Calls `visit` on every table of a function from an n-set to a k-set,
  /// until it returns false.
  static bool for_each_function(std::size_t n, std::size_t k,
                                const std::function<bool(const std::vector<std::uint32_t>&)>& visit) {
    if (k == 0 && n > 0) return true;
    std::vector<std::uint32_t> t(n, 0);
    while (true) {
      if (!visit(t)) return false;
      std::size_t i = n;
      while (i > 0) {
        --i;
        if (++t[i] < k) break;
        t[i] = 0;
        if (i == 0) return true;
      }
      if (n == 0) return true;
    }
  }

 private:
  std::vector<std::pair<fin::FinObject, fin::FinObject>> pattern_;
  std::vector<fin::FinObject> words_;
};

/// Breadth-first search from c1 over single slides in either direction, with
/// residuals of at most `residual_bound` letters, looking for c2.
/// `state_cap` bounds the states kept, `work_cap` the neighbours generated;
/// hitting either gives Inconclusive.
inline Verdict sliding_closure_eq(const Comb<FinBase>& c1, const Comb<FinBase>& c2, std::size_t residual_bound,
                                  std::size_t state_cap = 200000, std::size_t work_cap = 20000000) {
  if (!(c1.pattern() == c2.pattern())) return Verdict::Unequal;
  auto letters = alphabet_of(c1);
  for (const auto& l : alphabet_of(c2))
    if (std::find(letters.begin(), letters.end(), l) == letters.end()) letters.push_back(l);
  std::size_t longest = 0;
  for (const auto& m : c1.residuals()) longest = std::max(longest, m.length());
  for (const auto& m : c2.residuals()) longest = std::max(longest, m.length());
  if (longest > residual_bound) return Verdict::Inconclusive;

  const SlideGraph graph(c1.pattern().pairs, words_up_to(letters, residual_bound));
  const RawComb start = graph.raw(c1), goal = graph.raw(c2);
  if (start == goal) return Verdict::Equal;
  std::set<RawComb> seen{start};
  std::deque<RawComb> queue{start};
  bool found = false, truncated = false;
  std::size_t work = 0;
  auto step = [&](const RawComb& next) {
    if (++work > work_cap) {
      truncated = true;
      return false;
    }
    if (seen.contains(next)) return true;
    if (next == goal) {
      found = true;
      return false;
    }
    if (seen.size() >= state_cap) {
      truncated = true;
      return true;
    }
    seen.insert(next);
    queue.push_back(next);
    return true;
  };
  while (!queue.empty() && !found && work <= work_cap) {
    const RawComb cur = std::move(queue.front());
    queue.pop_front();
    if (graph.forward_slides(cur, step)) graph.backward_slides(cur, step);
  }
  if (found) return Verdict::Equal;
  return truncated ? Verdict::Inconclusive : Verdict::Unequal;
}

/// Every comb over a pattern with residuals drawn from `words`, numbered
/// densely so a union-find can run over the whole family.
class CombFamily {
 public:
  CombFamily(std::vector<std::pair<fin::FinObject, fin::FinObject>> pattern, std::vector<fin::FinObject> words)
      : graph_(std::move(pattern), std::move(words)) {
    const std::size_t n = graph_.depth();
    const std::size_t w = graph_.words().size();
    std::vector<std::size_t> res(n - 1, 0);
    while (true) {
      Block b;
      b.residual = res;
      b.offset = total_;
      RawComb shape{res, {}};
      std::size_t count = 1;
      for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t d = graph_.residual_size(shape, i - 1) * graph_.in_size(i);
        const std::size_t c = graph_.residual_size(shape, i) * graph_.out_size(i);
        b.dom.push_back(d);
        b.cod.push_back(c);
        for (std::size_t k = 0; k < d; ++k) {
          if (c != 0 && count > (std::size_t{1} << 40) / c)
            throw Error(ErrorKind::InvalidArgument, "comb family too large to enumerate");
          count *= c;
        }
      }
      b.count = count;
      total_ += count;
      blocks_.push_back(std::move(b));
      std::size_t i = res.size();
      while (i > 0) {
        --i;
        if (++res[i] < w) break;
        res[i] = 0;
        if (i == 0) break;
      }
      if (res.empty() || std::all_of(res.begin(), res.end(), [](std::size_t x) { return x == 0; })) break;
    }
  }

  std::size_t size() const { return total_; }
  const SlideGraph& graph() const { return graph_; }

  std::size_t index(const RawComb& c) const {
    const Block& b = blocks_[block_id(c.residual)];
    std::size_t idx = 0;
    for (std::size_t i = 0; i < c.teeth.size(); ++i)
      for (auto v : c.teeth[i]) idx = idx * b.cod[i] + v;
    return b.offset + idx;
  }

  RawComb decode(std::size_t index) const {
    auto it = std::upper_bound(blocks_.begin(), blocks_.end(), index,
                               [](std::size_t x, const Block& b) { return x < b.offset; });
    const Block& b = *std::prev(it);
    std::size_t rest = index - b.offset;
    RawComb c{b.residual, std::vector<std::vector<std::uint32_t>>(b.dom.size())};
    for (std::size_t i = b.dom.size(); i-- > 0;) {
      c.teeth[i].resize(b.dom[i]);
      for (std::size_t k = b.dom[i]; k-- > 0;) {
        c.teeth[i][k] = static_cast<std::uint32_t>(rest % b.cod[i]);
        rest /= b.cod[i];
      }
    }
    return c;
  }

  /// Connected components of the slide graph restricted to the family.
  std::vector<std::size_t> components(std::size_t* edges = nullptr) const {
    std::vector<std::size_t> parent(total_);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&parent](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t count = 0;
    for (std::size_t i = 0; i < total_; ++i) {
      const RawComb c = decode(i);
      graph_.forward_slides(c, [&](const RawComb& next) {
        ++count;
        const std::size_t a = find(i), b = find(index(next));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
        return true;
      });
    }
    for (std::size_t i = 0; i < total_; ++i) parent[i] = find(i);
    if (edges) *edges = count;
    return parent;
  }

 private:
  struct Block {
    std::vector<std::size_t> residual;
    std::size_t offset = 0;
    std::size_t count = 0;
    std::vector<std::size_t> dom;
    std::vector<std::size_t> cod;
  };

  std::size_t block_id(const std::vector<std::size_t>& residual) const {
    std::size_t id = 0;
    for (auto r : residual) id = id * graph_.words().size() + r;
    return id;
  }

  SlideGraph graph_;
  std::vector<Block> blocks_;
  std::size_t total_ = 0;
};

}  // namespace cornering::oracle
