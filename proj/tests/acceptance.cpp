// Acceptance run: one PASS/FAIL line per criterion. Pass criterion numbers as
// arguments to run a subset.
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "support.hpp"

using namespace cornering;
using support::set;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

const fin::FinObject X = set("X", 2);
const fin::FinObject I{};

// Budgets from the criteria, in seconds.
constexpr double c1_budget = 120;
constexpr double c2_budget = 300;
constexpr double c7_budget = 60;

// ---- 1

Outcome base_equality() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t terms = 0, pairs = 0, direct = 0, disagreements = 0, inconclusive = 0;
  std::mt19937 rng(7);
  for (const auto& sig : support::small_signatures()) {
    // terms grouped by domain: (normal form, oracle class)
    std::map<free::ObjectWord, std::vector<std::pair<free::NormalDiagram, oracle::Boxes>>> groups;
    std::map<free::ObjectWord, std::vector<free::MorTerm>> samples;
    support::for_each_diagram(sig, 3, 4, 5, [&](const free::ObjectWord& dom, const std::vector<free::Layer>& layers) {
      const auto t = support::term_of(dom, layers, rng);
      const auto closure = oracle::interchange_closure(oracle::boxes_of(t), 64, 100000);
      if (!closure.complete) ++inconclusive;
      groups[dom].emplace_back(free::normalize_base(t), *closure.states.begin());
      auto& s = samples[dom];
      if (!s.empty() && s.back().cod() == t.cod()) {
        // the pair function itself, on consecutive terms
        ++direct;
        const bool eq = free::eq_base(s.back(), t);
        const auto v = oracle::interchange_closure_eq(s.back(), t, 64);
        if (v == oracle::Verdict::Inconclusive) ++inconclusive;
        else if (eq != (v == oracle::Verdict::Equal)) ++disagreements;
      }
      s.push_back(t);
      ++terms;
    });
    for (auto& [dom, g] : groups) {
      // eq_base and the oracle must induce the same partition
      std::map<std::vector<free::Layer>, oracle::Boxes, decltype(&free::layers_less)> by_key(&free::layers_less);
      std::map<oracle::Boxes, const free::NormalDiagram*> by_class;
      std::map<free::ObjectWord, std::size_t> per_cod;
      for (const auto& [nf, cls] : g) {
        ++per_cod[nf.cod];
        auto [it, fresh] = by_key.emplace(nf.layers, cls);
        if (!fresh && !(it->second == cls)) ++disagreements;
        auto [jt, fresh2] = by_class.emplace(cls, &nf);
        if (!fresh2 && !(jt->second->layers == nf.layers && jt->second->cod == nf.cod)) ++disagreements;
      }
      for (const auto& [cod, n] : per_cod) pairs += n * (n - 1) / 2;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o;
  o.pass = disagreements == 0 && inconclusive == 0 && secs <= c1_budget;
  o.detail = std::to_string(support::small_signatures().size()) + " signatures, " + std::to_string(terms) +
             " terms, " + std::to_string(pairs) + " pairs by partition, " + std::to_string(direct) +
             " direct oracle calls, " + std::to_string(disagreements) + " disagreements, " +
             std::to_string(inconclusive) + " inconclusive";
  return o;
}

// ---- 2

struct Family {
  std::string name;
  AlternationPattern<fin::FinObject> pattern;
  std::unique_ptr<oracle::CombFamily> combs;
  std::vector<std::size_t> component;
};

std::vector<Family>& families() {
  static std::vector<Family> fs = [] {
    std::vector<Family> out;
    const auto words = oracle::words_up_to({fin::FinSet{"X", 2}}, 2);
    for (const auto& [name, pairs] : std::vector<std::pair<std::string, std::vector<std::pair<fin::FinObject, fin::FinObject>>>>{
             {"[(X,X),(X,X)]", {{X, X}, {X, X}}},
             {"[(X,X),(I,I),(I,X)]", {{X, X}, {I, I}, {I, X}}},
             {"[(I,X),(I,I),(X,I)]", {{I, X}, {I, I}, {X, I}}}}) {
      Family f;
      f.name = name;
      f.pattern.pairs = pairs;
      f.combs = std::make_unique<oracle::CombFamily>(pairs, words);
      out.push_back(std::move(f));
    }
    return out;
  }();
  return fs;
}

Outcome lemma3_quotient() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t combs = 0, disagreements = 0;
  std::string detail;
  for (auto& f : families()) {
    std::size_t edges = 0;
    f.component = f.combs->components(&edges);
    std::map<std::size_t, SlidingEquivalence<FinBase>::Key> key_of_class;
    std::map<SlidingEquivalence<FinBase>::Key, std::size_t> class_of_key;
    for (std::size_t i = 0; i < f.combs->size(); ++i) {
      const auto key = SlidingEquivalence<FinBase>::key(f.combs->graph().cook(f.combs->decode(i)));
      auto [it, fresh] = key_of_class.emplace(f.component[i], key);
      if (!fresh && it->second != key) ++disagreements;
      auto [jt, fresh2] = class_of_key.emplace(key, f.component[i]);
      if (!fresh2 && jt->second != f.component[i]) ++disagreements;
    }
    combs += f.combs->size();
    detail += f.name + ": " + std::to_string(f.combs->size()) + " combs, " + std::to_string(edges) + " slides, " +
              std::to_string(key_of_class.size()) + " classes; ";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o;
  o.pass = disagreements == 0 && secs <= c2_budget;
  o.detail = detail + std::to_string(disagreements) + " disagreements, 0 inconclusive";
  return o;
}

// ---- 3, 4

const std::vector<Optic<FinBase>>& finite_optics() {
  static const auto optics = oracle::enumerate_optics(X, X, X, X, {I, X});
  return optics;
}

bool same(const Optic<FinBase>& a, const Optic<FinBase>& b) {
  return a.residual() == b.residual() && a.forward() == b.forward() && a.backward() == b.backward();
}

Outcome optic_laws() {
  const auto& hs = finite_optics();
  std::size_t checks = 0, violations = 0;
  const auto idx = id_optic<FinBase>(X, X);
  for (const auto& h : hs) {
    checks += 2;
    violations += !eq_optic(compose_optic(idx, h), h) + !eq_optic(compose_optic(h, idx), h);
  }
  std::vector<Optic<FinBase>> pairs;
  pairs.reserve(hs.size() * hs.size());
  for (const auto& a : hs)
    for (const auto& b : hs) pairs.push_back(compose_optic(a, b));
  const std::size_t n = hs.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        ++checks;
        if (!eq_optic(compose_optic(pairs[i * n + j], hs[k]), compose_optic(hs[i], pairs[j * n + k]))) ++violations;
      }
  support::FreeOptics gen(11);
  for (int t = 0; t < 100; ++t) {
    const auto h1 = gen.make(0), h2 = gen.make(1), h3 = gen.make(2);
    const auto [a, b] = h1.source();
    checks += 3;
    violations += !eq_optic(compose_optic(compose_optic(h1, h2), h3), compose_optic(h1, compose_optic(h2, h3)));
    violations += !eq_optic(compose_optic(id_optic<FreeBase>(a, b), h1), h1);
    violations += !eq_optic(compose_optic(h1, id_optic<FreeBase>(h1.target().first, h1.target().second)), h1);
  }
  return {violations == 0, std::to_string(n) + " finite optics, 100 free triples, " + std::to_string(checks) +
                               " checks, " + std::to_string(violations) + " violations"};
}

Outcome bridge() {
  const auto& hs = finite_optics();
  std::size_t checks = 0, violations = 0;
  for (const auto& h : hs) {
    ++checks;
    if (!same(from_comb(to_comb(h)), h)) ++violations;
  }
  for (const auto& a : hs)
    for (const auto& b : hs) {
      ++checks;
      if (!eq_comb(to_comb(compose_optic(a, b)), hcompose2(to_comb(a), to_comb(b)))) ++violations;
    }
  for (const auto& c : oracle::enumerate_combs(families()[0].pattern, oracle::words_up_to({fin::FinSet{"X", 2}}, 2))) {
    ++checks;
    const auto back = to_comb(from_comb(c));
    if (!(back.residuals() == c.residuals() && back.teeth() == c.teeth() && back.pattern() == c.pattern())) ++violations;
  }
  support::FreeOptics gen(23);
  for (int t = 0; t < 100; ++t) {
    const auto h1 = gen.make(0), h2 = gen.make(1);
    checks += 2;
    const auto back = from_comb(to_comb(h1));
    violations += !(back.residual() == h1.residual() && free::eq_base(back.forward(), h1.forward()) &&
                    back.forward().str() == h1.forward().str() && back.backward().str() == h1.backward().str());
    violations += !eq_comb(to_comb(compose_optic(h1, h2)), hcompose2(to_comb(h1), to_comb(h2)));
  }
  return {violations == 0, std::to_string(checks) + " checks, " + std::to_string(violations) + " violations"};
}

// ---- 5, 6, 7

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

Outcome lemma6() {
  const std::vector<fin::FinObject> objects{I, set("E", 0), X, set("Y", 3), set("Z", 4), X * X};
  std::size_t configs = 0, pairs = 0, counterexamples = 0, miscounted = 0;
  for (const auto& a : objects)
    for (const auto& m : objects)
      for (const auto& b : objects) {
        const auto mb = m * b;
        if (a.cardinality() > 4 || mb.cardinality() > 4) continue;
        ++configs;
        std::size_t found = 0;
        for (const auto& alpha : fin::enumerate_homs(a, mb))
          for (const auto& beta : fin::enumerate_homs(mb, a)) {
            if (!mutually_inverse<FinBase>(alpha, beta)) continue;
            ++found;
            if (!is_lawful(Optic<FinBase>(m, alpha, beta))) ++counterexamples;
          }
        // bijections exist only between equinumerous carriers
        const std::size_t expected = a.cardinality() == mb.cardinality() ? factorial(a.cardinality()) : 0;
        if (found != expected) ++miscounted;
        pairs += found;
      }
  return {counterexamples == 0 && miscounted == 0,
          std::to_string(configs) + " carrier triples, " + std::to_string(pairs) + " inverse pairs, " +
              std::to_string(counterexamples) + " counterexamples, " + std::to_string(miscounted) + " miscounts"};
}

Outcome lemma7() {
  std::size_t lenses = 0, optics = 0, counterexamples = 0;
  for (const auto& l : oracle::enumerate_lenses(X, X)) {
    ++lenses;
    if (!(decompose(optic_of_lens(l)) == l)) ++counterexamples;
  }
  oracle::enumerate_optics(X, X, X, X, {I, X, set("Y", 3), X * X, set("Z", 4)}, [&](const Optic<FinBase>& h) {
    ++optics;
    if (!eq_optic(optic_of_lens(decompose(h)), h)) ++counterexamples;
  });
  return {counterexamples == 0, std::to_string(lenses) + " lenses, " + std::to_string(optics) + " optics, " +
                                    std::to_string(counterexamples) + " counterexamples"};
}

Outcome lemma89() {
  const auto start = std::chrono::steady_clock::now();
  const auto r = verify_lemma_suite(X, X);
  // independent count: a lens on 2 = 1 * 2 satisfying all laws has a bijective get
  std::size_t bijective_gets = 0;
  for (const auto& l : oracle::enumerate_lenses(X, X))
    if (check_lens_laws(l).all()) bijective_gets += l.get(0) != l.get(1);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = r.lenses == 64 && r.sets_equal() && r.satisfying_laws == r.lawful && r.both == r.lawful &&
                  bijective_gets == r.satisfying_laws && r.satisfying_laws == 2 && secs <= c7_budget;
  return {ok, std::to_string(r.lenses) + " lenses, " + std::to_string(r.satisfying_laws) + " satisfy the laws, " +
                  std::to_string(r.lawful) + " lawful, " + std::to_string(r.both) + " both, " +
                  std::to_string(r.violations()) + " violations"};
}

// ---- 8

/// Checks that f(comb) depends only on the comb's slide component.
template <class F>
std::size_t congruence(const Family& fam, F&& f, std::size_t& checks) {
  std::map<std::size_t, SlidingEquivalence<FinBase>::Key> seen;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < fam.combs->size(); ++i) {
    const auto c = fam.combs->graph().cook(fam.combs->decode(i));
    auto key = f(c);
    ++checks;
    auto [it, fresh] = seen.emplace(fam.component[i], key);
    if (!fresh && it->second != key) ++bad;
  }
  return bad;
}

Outcome comb_operations() {
  auto& fs = families();
  if (fs[0].component.empty())
    for (auto& f : fs) f.component = f.combs->components();
  const auto& d2 = fs[0];
  const auto& d3a = fs[1];
  const auto& d3b = fs[2];
  using Key = SlidingEquivalence<FinBase>::Key;
  auto key = [](const Comb<FinBase>& c) { return SlidingEquivalence<FinBase>::key(c); };
  std::size_t checks = 0, violations = 0;
  auto depth_is = [&](const Comb<FinBase>& c, std::size_t n) {
    ++checks;
    if (c.depth() != n) ++violations;
  };

  const auto xx = oracle::enumerate_combs(d2.pattern, {I, X});
  const std::vector<Comb<FinBase>> d2_contexts{xx[5], xx[123], xx[xx.size() - 7]};
  const auto not_x = support::table(X, X, {1, 0});
  const auto point1 = fin::point(X, 1);
  const Comb<FinBase> unit_gap({{{I, I}, {I, I}}}, {X}, {point1, fin::discard(X)});
  const Comb<FinBase> emit_gap({{{I, I}, {I, X}}}, {X}, {point1, not_x});
  const Comb<FinBase> outer3({{{X, X}, {X, X}, {X, X}}}, {X, X * X},
                             {fin::copy(X), fin::tensor_fin(fin::copy(X), not_x),
                              fin::tensor_fin(fin::discard(X), support::table(X * X, X, {0, 1, 1, 0}))});

  // d2 as the inner argument
  for (const auto& outer : d2_contexts)
    violations += congruence(d2, [&](const Comb<FinBase>& c) { auto p = plug_gap(outer, 1, c); depth_is(p, 2); return key(p); }, checks);
  violations += congruence(d2, [&](const Comb<FinBase>& c) { auto p = plug_gap(outer3, 2, c); depth_is(p, 3); return key(p); }, checks);
  // d2 as the outer argument
  for (const auto& inner : d2_contexts)
    violations += congruence(d2, [&](const Comb<FinBase>& c) { auto p = plug_gap(c, 1, inner); depth_is(p, 2); return key(p); }, checks);
  violations += congruence(d2, [&](const Comb<FinBase>& c) { auto p = plug_gap(c, 1, from_morphism<FinBase>(not_x)); depth_is(p, 1); return key(p); }, checks);
  violations += congruence(d2, [&](const Comb<FinBase>& c) { auto p = plug_gap(outer3, 1, c); depth_is(p, 3); return key(p); }, checks);
  // depth-3 families on both sides
  violations += congruence(d3a, [&](const Comb<FinBase>& c) { auto p = plug_gap(d2_contexts[1], 1, c); depth_is(p, 3); return key(p); }, checks);
  violations += congruence(d3a, [&](const Comb<FinBase>& c) { auto p = plug_gap(c, 2, unit_gap); depth_is(p, 3); return key(p); }, checks);
  violations += congruence(d3b, [&](const Comb<FinBase>& c) { auto p = plug_gap(c, 2, emit_gap); depth_is(p, 3); return key(p); }, checks);
  violations += congruence(d3b, [&](const Comb<FinBase>& c) { auto p = plug_gap(c, 1, from_morphism<FinBase>(fin::discard(X))); depth_is(p, 2); return key(p); }, checks);

  // run: both plugging orders, against direct simulation
  for (const auto* fam : {&d3a, &d3b}) {
    const auto& p = fam->pattern.pairs;
    std::vector<std::vector<fin::FinMorphism>> fillers{{}};
    for (std::size_t gap = 0; gap + 1 < p.size(); ++gap) {
      std::vector<std::vector<fin::FinMorphism>> next;
      for (const auto& fs_ : fillers)
        for (const auto& g : fin::enumerate_homs(p[gap].second, p[gap + 1].first)) {
          next.push_back(fs_);
          next.back().push_back(g);
        }
      fillers = std::move(next);
    }
    for (std::size_t i = 0; i < fam->combs->size(); ++i) {
      const auto c = fam->combs->graph().cook(fam->combs->decode(i));
      for (const auto& fl : fillers) {
        checks += 2;
        const auto forward = run_in_order(c, fl, {1, 2});
        const auto backward = run_in_order(c, fl, {2, 1});
        violations += !(forward == backward) + !(forward == support::simulate(c, fl));
      }
    }
  }
  // run is also a function of the slide class
  for (const auto& g : fin::enumerate_homs(X, X))
    violations += congruence(d2, [&](const Comb<FinBase>& c) { return Key{run(c, {g})}; }, checks);

  // interleave, right argument slid
  std::vector<LeftComb<FinBase>> lefts;
  std::mt19937 rng(3);
  auto random_hom = [&rng](const fin::FinObject& a, const fin::FinObject& b) {
    return fin::FinMorphism::from_function(a, b, [&](std::size_t) { return rng() % b.cardinality(); });
  };
  for (const auto& n1 : {I, X})
    for (const auto& n2 : {I, X})
      for (int t = 0; t < 3; ++t)
        lefts.emplace_back(I, X, d2.pattern, std::vector<fin::FinObject>{n1, n2},
                           std::vector<fin::FinMorphism>{random_hom(I, X * n1), random_hom(X * n1, X * n2), random_hom(X * n2, X)});
  for (const auto& l : lefts)
    violations += congruence(d2, [&](const Comb<FinBase>& c) { return Key{interleave(c, l)}; }, checks);

  // interleave, left argument slid: h0 = core ; (1 * m) against h1' = (1 * m) ; h1
  const auto d2_all = oracle::enumerate_combs(d2.pattern, {I, X});
  for (const auto& n1 : {I, X, X * X})
    for (const auto& n1p : {I, X, X * X})
      for (int t = 0; t < 20; ++t) {
        const auto core = random_hom(I, X * n1p);
        const auto m = random_hom(n1p, n1);
        const auto h1 = random_hom(X * n1, X * X);
        const auto h2 = random_hom(X * X, X);
        const LeftComb<FinBase> l(I, X, d2.pattern, {n1, X},
                                  {fin::compose_fin(core, fin::tensor_fin(fin::identity(X), m)), h1, h2});
        const LeftComb<FinBase> slid(I, X, d2.pattern, {n1p, X},
                                     {core, fin::compose_fin(fin::tensor_fin(fin::identity(X), m), h1), h2});
        for (const auto& r : d2_all) {
          ++checks;
          if (!(interleave(r, l) == interleave(r, slid))) ++violations;
        }
      }
  return {violations == 0, std::to_string(checks) + " checks, " + std::to_string(violations) + " violations"};
}

// ---- 9

Outcome yanking() {
  std::size_t checks = 0, violations = 0;
  for (const auto& dom : {I, X, X * X})
    for (const auto& cod : {I, X, X * X})
      for (const auto& f : fin::enumerate_homs(dom, cod)) {
        ++checks;
        const auto c = from_morphism<FinBase>(f);
        if (!(collapse(c) == f) || !eq_comb(from_morphism<FinBase>(collapse(c)), c)) ++violations;
      }
  for (const auto& h : finite_optics()) {
    checks += 2;
    violations += !same(from_comb(to_comb(h)), h);
    const auto c = to_comb(h);
    violations += !eq_comb(to_comb(from_comb(c)), c);
  }
  support::FreeOptics gen(5);
  for (int t = 0; t < 50; ++t) {
    const auto h = gen.make(0);
    checks += 3;
    violations += !free::eq_base(collapse(from_morphism<FreeBase>(h.forward())), h.forward());
    violations += !eq_comb(to_comb(from_comb(to_comb(h))), to_comb(h));
    violations += !eq_optic(from_comb(to_comb(h)), h);
  }
  return {violations == 0, std::to_string(checks) + " checks, " + std::to_string(violations) + " violations"};
}

// ---- 10

Outcome cli() {
  const std::string cli = CORNERING_CLI;
  const std::string samples = CORNERING_SAMPLES;
  std::string detail;
  bool ok = true;
  for (const std::string& args : std::vector<std::string>{"lemma-suite --sizes 2,2", "lemma-suite '" + samples + "/lemma_suite.cornering' --sets A,B"}) {
    const auto r = support::run_cli(cli, args);
    bool good = r.code == 0;
    try {
      const auto j = nlohmann::json::parse(r.out);
      const auto& res = j.at("result");
      good = good && res.at("lenses") == 64 && res.at("violations") == 0 && res.at("sets_equal") == true &&
             res.at("both") == res.at("lawful") && res.at("both") == res.at("satisfying_laws");
    } catch (const std::exception&) {
      good = false;
    }
    ok = ok && good;
    detail += args.substr(0, 11) + (good ? " ok" : " FAILED") + "; ";
  }
  const auto dir = std::filesystem::temp_directory_path() / ("cornering_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::size_t identical = 0, renders = 0;
  for (const auto& [file, name] : std::vector<std::pair<std::string, std::string>>{
           {"free_optics.cornering", "hk"}, {"combs.cornering", "three"}, {"finite_lenses.cornering", "swap_back"}}) {
    std::string bytes[2];
    for (int k = 0; k < 2; ++k) {
      const auto out = (dir / (name + std::to_string(k) + ".svg")).string();
      const auto r = support::run_cli(cli, "--out '" + out + "' render '" + samples + "/" + file + "' " + name);
      bytes[k] = r.code == 0 ? support::read_file(out) : "";
    }
    ++renders;
    if (!bytes[0].empty() && bytes[0] == bytes[1] && bytes[0].rfind("<svg", 0) == 0) ++identical;
  }
  std::filesystem::remove_all(dir);
  ok = ok && identical == renders;
  detail += std::to_string(identical) + "/" + std::to_string(renders) + " SVG renders byte-identical";
  return {ok, detail};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, Outcome (*)()>> criteria{
      {"base equality soundness", base_equality},
      {"sliding quotient", lemma3_quotient},
      {"optic category laws", optic_laws},
      {"comb/optic bridge", bridge},
      {"mutually inverse pairs are lawful", lemma6},
      {"lens decomposition round trips", lemma7},
      {"lens laws match lawfulness", lemma89},
      {"comb operations", comb_operations},
      {"yanking identities", yanking},
      {"command line", cli},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int n = static_cast<int>(i + 1);
    if (!only.empty() && !only.contains(n)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::printf("%s %2d %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", n, criteria[i].first.c_str(), o.detail.c_str(),
                secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
