#pragma once

#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cornering/comb_core.hpp"
#include "cornering/oracle/interchange.hpp"
#include "cornering/oracle/verdict.hpp"

namespace cornering::oracle {

/// Slide closure over the free base. Teeth are box lists; a slide cuts a
/// representative of one tooth's interchange class so that the cut-off part
/// acts on the residual wires only, and moves that part into the neighbour.
class FreeSlideSearch {
 public:
  using Word = std::vector<std::string>;

  struct State {
    std::vector<Word> residuals;
    std::vector<Boxes> teeth;

    auto operator<=>(const State&) const = default;
  };

  FreeSlideSearch(const AlternationPattern<free::ObjectWord>& pattern, std::size_t residual_bound,
                  std::size_t state_cap)
      : residual_bound_(residual_bound), state_cap_(state_cap) {
    for (const auto& [a, b] : pattern.pairs) {
      inputs_.push_back(a.letters());
      outputs_.push_back(b.letters());
    }
  }

  bool truncated() const { return truncated_; }

  State state(const Comb<FreeBase>& c) {
    State s;
    for (const auto& m : c.residuals()) s.residuals.push_back(m.letters());
    for (const auto& t : c.teeth()) s.teeth.push_back(canonical(boxes_of(t)));
    return s;
  }

  Verdict search(const State& start, const State& goal) {
    if (start == goal) return Verdict::Equal;
    std::set<State> seen{start};
    std::deque<State> queue{start};
    while (!queue.empty()) {
      const State cur = std::move(queue.front());
      queue.pop_front();
      for (auto& next : moves(cur)) {
        if (next == goal) return Verdict::Equal;
        if (seen.contains(next)) continue;
        if (seen.size() >= state_cap_) {
          truncated_ = true;
          continue;
        }
        seen.insert(next);
        queue.push_back(std::move(next));
      }
    }
    return truncated_ ? Verdict::Inconclusive : Verdict::Unequal;
  }

 private:
  const std::set<Boxes>& closure(const Boxes& b) {
    auto it = closures_.find(b);
    if (it != closures_.end()) return it->second;
    Closure c = interchange_closure(b, 64, 20000);
    if (!c.complete) truncated_ = true;
    for (const auto& rep : c.states) closures_.emplace(rep, c.states);
    return closures_.at(b);
  }

  Boxes canonical(const Boxes& b) { return *closure(b).begin(); }

  static Word replay(Word w, const Box& box) {
    Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(box.offset));
    out.insert(out.end(), box.cod.begin(), box.cod.end());
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(box.offset + box.in), w.end());
    return out;
  }

  static Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
  }

  Word residual(const State& s, std::size_t i) const {
    return i == 0 || i == s.teeth.size() ? Word{} : s.residuals[i - 1];
  }

  std::vector<State> moves(const State& s) {
    std::vector<State> out;
    const std::size_t n = s.teeth.size();
    for (std::size_t gap = 1; gap < n; ++gap) {
      const Word in_word = concat(residual(s, gap - 1), inputs_[gap - 1]);
      const std::size_t keep_right = outputs_[gap - 1].size();
      // forward: a suffix of tooth `gap` acting on the residual only
      for (const auto& rep : closure(s.teeth[gap - 1])) {
        std::vector<Word> cuts{in_word};
        for (const auto& box : rep) cuts.push_back(replay(cuts.back(), box));
        for (std::size_t p = 0; p < rep.size(); ++p) {
          bool left_only = true;
          for (std::size_t k = p; k < rep.size() && left_only; ++k)
            left_only = rep[k].offset + rep[k].in + keep_right <= cuts[k].size();
          if (!left_only) continue;
          const Word mid(cuts[p].begin(), cuts[p].end() - static_cast<std::ptrdiff_t>(keep_right));
          if (mid.size() > residual_bound_) continue;
          State next = s;
          next.residuals[gap - 1] = mid;
          next.teeth[gap - 1] = canonical(Boxes(rep.begin(), rep.begin() + static_cast<std::ptrdiff_t>(p)));
          Boxes moved(rep.begin() + static_cast<std::ptrdiff_t>(p), rep.end());
          moved.insert(moved.end(), s.teeth[gap].begin(), s.teeth[gap].end());
          next.teeth[gap] = canonical(moved);
          out.push_back(std::move(next));
        }
      }
      // backward: a prefix of tooth `gap + 1` acting on the residual only
      const Word next_in = concat(residual(s, gap), inputs_[gap]);
      const std::size_t keep = inputs_[gap].size();
      for (const auto& rep : closure(s.teeth[gap])) {
        Word cut = next_in;
        for (std::size_t p = 1; p <= rep.size(); ++p) {
          if (rep[p - 1].offset + rep[p - 1].in + keep > cut.size()) break;
          cut = replay(cut, rep[p - 1]);
          const Word mid(cut.begin(), cut.end() - static_cast<std::ptrdiff_t>(keep));
          if (mid.size() > residual_bound_) continue;
          State next = s;
          next.residuals[gap - 1] = mid;
          Boxes grown = s.teeth[gap - 1];
          grown.insert(grown.end(), rep.begin(), rep.begin() + static_cast<std::ptrdiff_t>(p));
          next.teeth[gap - 1] = canonical(grown);
          next.teeth[gap] = canonical(Boxes(rep.begin() + static_cast<std::ptrdiff_t>(p), rep.end()));
          out.push_back(std::move(next));
        }
      }
    }
    return out;
  }

  std::vector<Word> inputs_;
  std::vector<Word> outputs_;
  std::size_t residual_bound_;
  std::size_t state_cap_;
  bool truncated_ = false;
  std::map<Boxes, std::set<Boxes>> closures_;
};

inline Verdict sliding_closure_eq(const Comb<FreeBase>& c1, const Comb<FreeBase>& c2, std::size_t residual_bound,
                                  std::size_t state_cap = 20000) {
  if (!(c1.pattern() == c2.pattern())) return Verdict::Unequal;
  FreeSlideSearch search(c1.pattern(), residual_bound, state_cap);
  const auto a = search.state(c1);
  const auto b = search.state(c2);
  return search.search(a, b);
}

}  // namespace cornering::oracle
