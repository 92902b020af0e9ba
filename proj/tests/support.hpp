#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cornering/cornering.hpp"
#include "cornering/dsl/printer.hpp"
#include "cornering/dsl/workspace.hpp"
#include "cornering/oracle.hpp"

namespace support {

using namespace cornering;

inline fin::FinObject set(const std::string& name, std::uint32_t size) { return fin::FinObject{fin::FinSet{name, size}}; }

inline fin::FinMorphism table(fin::FinObject dom, fin::FinObject cod, std::vector<std::uint32_t> t) {
  return fin::FinMorphism(std::move(dom), std::move(cod), std::move(t));
}

/// Runs a finite comb on its fillers by stepping through the teeth with
/// explicit state, independently of plug_gap.
inline fin::FinMorphism simulate(const Comb<FinBase>& c, const std::vector<fin::FinMorphism>& fillers) {
  const auto dom = c.input(1);
  const auto cod = c.output(c.depth());
  return fin::FinMorphism::from_function(dom, cod, [&](std::size_t a) {
    std::size_t state = 0, x = a;
    for (std::size_t i = 1; i <= c.depth(); ++i) {
      const std::size_t na = c.input(i).cardinality(), nb = c.output(i).cardinality();
      const std::size_t out = c.tooth(i)(state * na + x);
      state = out / nb;
      const std::size_t b = out % nb;
      x = i < c.depth() ? fillers[i - 1](b) : b;
    }
    return x;
  });
}

// ---- free terms

inline free::ObjectWord word(std::initializer_list<std::string> letters) { return free::ObjectWord(letters); }

inline free::MorTerm gen(const std::string& name, free::ObjectWord dom, free::ObjectWord cod) {
  return free::MorTerm::generator({name, std::move(dom), std::move(cod)});
}

inline free::MorTerm id(free::ObjectWord w) { return free::MorTerm::identity(std::move(w)); }

/// A small signature: object letters and generators.
struct Sig {
  std::vector<std::string> objects;
  std::vector<free::Generator> gens;

  std::string str() const {
    std::string out;
    for (const auto& g : gens) out += (out.empty() ? "" : ", ") + g.name + " : " + g.dom.str() + " -> " + g.cod.str();
    return out;
  }
};

inline std::vector<free::ObjectWord> words_up_to(const std::vector<std::string>& letters, std::size_t bound) {
  std::vector<free::ObjectWord> out{free::ObjectWord{}};
  std::vector<free::ObjectWord> layer{free::ObjectWord{}};
  for (std::size_t n = 1; n <= bound; ++n) {
    std::vector<free::ObjectWord> next;
    for (const auto& w : layer)
      for (const auto& l : letters) next.push_back(w * free::ObjectWord{l});
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

/// Signatures with one or two generators. One object letter with types of
/// length <= 2, or two object letters with types of length <= 1.
inline std::vector<Sig> small_signatures() {
  std::vector<Sig> out;
  for (const auto& [letters, len] : std::vector<std::pair<std::vector<std::string>, std::size_t>>{
           {{"X"}, 2}, {{"X", "Y"}, 1}}) {
    std::vector<std::pair<free::ObjectWord, free::ObjectWord>> types;
    for (const auto& d : words_up_to(letters, len))
      for (const auto& c : words_up_to(letters, len)) types.emplace_back(d, c);
    for (std::size_t i = 0; i < types.size(); ++i) {
      out.push_back({letters, {{"f", types[i].first, types[i].second}}});
      for (std::size_t j = i; j < types.size(); ++j)
        out.push_back({letters, {{"f", types[i].first, types[i].second}, {"g", types[j].first, types[j].second}}});
    }
  }
  return out;
}

/// Every layer list over `sig` from a domain of length <= dom_bound, with at
/// most `layers` generators and intermediate words of length <= width.
inline void for_each_diagram(const Sig& sig, std::size_t dom_bound, std::size_t layers, std::size_t width,
                             const std::function<void(const free::ObjectWord&, const std::vector<free::Layer>&)>& visit) {
  std::vector<free::Layer> stack;
  auto go = [&](auto&& self, const free::ObjectWord& dom, const free::ObjectWord& cur) -> void {
    visit(dom, stack);
    if (stack.size() == layers) return;
    for (const auto& g : sig.gens) {
      if (g.dom.size() > cur.size()) continue;
      for (std::size_t off = 0; off + g.dom.size() <= cur.size(); ++off) {
        if (cur.slice(off, g.dom.size()) != g.dom) continue;
        const auto next = cur.slice(0, off) * g.cod * cur.slice(off + g.dom.size(), cur.size() - off - g.dom.size());
        if (next.size() > width) continue;
        stack.push_back({off, g});
        self(self, dom, next);
        stack.pop_back();
      }
    }
  };
  for (const auto& dom : words_up_to(sig.objects, dom_bound)) go(go, dom, dom);
}

/// A term for a layer list, in one of several shapes chosen by `rng`:
/// different bracketings of composition and whiskering, and adjacent layers
/// on disjoint wires fused into one tensor.
inline free::MorTerm term_of(const free::ObjectWord& dom, const std::vector<free::Layer>& layers, std::mt19937& rng) {
  if (layers.empty()) return id(dom);
  std::vector<free::MorTerm> parts;
  free::ObjectWord cur = dom;
  auto whisker = [&rng](const free::ObjectWord& left, free::MorTerm mid, const free::ObjectWord& right) {
    if (left.empty() && right.empty() && rng() % 2) return mid;
    if (rng() % 2) return free::MorTerm::par(free::MorTerm::par(id(left), std::move(mid)), id(right));
    return free::MorTerm::par(id(left), free::MorTerm::par(std::move(mid), id(right)));
  };
  for (std::size_t k = 0; k < layers.size(); ++k) {
    const auto& l = layers[k];
    const auto& g = l.generator;
    const std::size_t rest = cur.size() - l.offset - g.dom.size();
    auto next = cur.slice(0, l.offset) * g.cod * cur.slice(l.offset + g.dom.size(), rest);
    if (k + 1 < layers.size() && rng() % 3 == 0) {
      const auto& l2 = layers[k + 1];
      const auto& g2 = l2.generator;
      // second box strictly to the right of the first box's outputs
      if (l2.offset >= l.offset + g.cod.size()) {
        const std::size_t gap = l2.offset - l.offset - g.cod.size();
        const std::size_t tail = next.size() - l2.offset - g2.dom.size();
        auto fused = free::MorTerm::par(free::MorTerm::par(gen(g.name, g.dom, g.cod), id(next.slice(l.offset + g.cod.size(), gap))),
                                        gen(g2.name, g2.dom, g2.cod));
        parts.push_back(whisker(cur.slice(0, l.offset), fused, next.slice(l2.offset + g2.dom.size(), tail)));
        cur = next.slice(0, l2.offset) * g2.cod * next.slice(l2.offset + g2.dom.size(), tail);
        ++k;
        continue;
      }
    }
    parts.push_back(whisker(cur.slice(0, l.offset), gen(g.name, g.dom, g.cod), cur.slice(l.offset + g.dom.size(), rest)));
    cur = next;
  }
  if (rng() % 2) {
    free::MorTerm acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = free::MorTerm::seq(acc, parts[i]);
    return acc;
  }
  free::MorTerm acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) acc = free::MorTerm::seq(parts[i], acc);
  return acc;
}

/// Random composable free optics (A_k, B_k) -> (A_{k+1}, B_{k+1}) with
/// residuals drawn from {I, M, N, M * N}.
struct FreeOptics {
  std::mt19937 rng;

  explicit FreeOptics(unsigned seed) : rng(seed) {}

  Optic<FreeBase> make(std::size_t k) {
    const std::vector<free::ObjectWord> residuals{{}, {"M"}, {"N"}, {"M", "N"}};
    const auto r = residuals[rng() % residuals.size()];
    const free::ObjectWord a{"A" + std::to_string(k)}, b{"B" + std::to_string(k)};
    const free::ObjectWord c{"A" + std::to_string(k + 1)}, d{"B" + std::to_string(k + 1)};
    const std::string tag = std::to_string(k) + "_" + std::to_string(rng() % 3);
    auto fwd = gen("a" + tag, a, r * c);
    auto bwd = gen("b" + tag, r * d, b);
    if (rng() % 2) fwd = free::MorTerm::seq(fwd, free::MorTerm::par(id(r), gen("e" + std::to_string(k + 1), c, c)));
    if (rng() % 2) bwd = free::MorTerm::seq(free::MorTerm::par(id(r), gen("d" + std::to_string(k + 1), d, d)), bwd);
    if (!r.empty() && rng() % 2) {
      // a mediator on the residual, on either side of the cut
      const auto u = gen("u", r, r);
      if (rng() % 2) fwd = free::MorTerm::seq(fwd, free::MorTerm::par(u, id(c)));
      else bwd = free::MorTerm::seq(free::MorTerm::par(u, id(d)), bwd);
    }
    return Optic<FreeBase>(r, fwd, bwd);
  }
};

// ---- CLI

struct Run {
  int code = -1;
  std::string out;
};

/// Runs the CLI with `args`, capturing stdout, and stderr too when `merge` is set.
inline Run run_cli(const std::string& cli, const std::string& args, bool merge = false) {
  Run r;
  const std::string cmd = "'" + cli + "' " + args + (merge ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline Run run_cli(const std::string& cli, const std::vector<std::string>& args, bool merge = false) {
  std::string line;
  for (const auto& a : args) line += (line.empty() ? "'" : " '") + a + "'";
  return run_cli(cli, line, merge);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace support
