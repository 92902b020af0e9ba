// Command-line front end for the cornering library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cornering/cornering.hpp"
#include "cornering/dsl/printer.hpp"
#include "cornering/dsl/workspace.hpp"
#include "cornering/io/json.hpp"
#include "cornering/io/svg.hpp"
#include "cornering/oracle.hpp"

using namespace cornering;
using nlohmann::json;

namespace {

enum Exit { Ok = 0, Failed = 1, Usage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  bool as_json = false;
  std::string path;
  std::string text;
  json payload;
};

/// A named entity read as a comb: combs as they are, optics through to_comb,
/// lenses through their optic, morphisms as depth-1 combs.
dsl::AnyComb as_comb(const dsl::Workspace& ws, const std::string& name) {
  const dsl::Entity& e = ws.lookup(name);
  if (auto* c = std::get_if<dsl::CombEntity>(&e)) return c->comb;
  if (auto* o = std::get_if<dsl::OpticEntity>(&e))
    return std::visit([](const auto& h) -> dsl::AnyComb { return to_comb(h); }, o->optic);
  if (auto* l = std::get_if<dsl::LensEntity>(&e)) return to_comb(optic_of_lens(l->lens));
  if (auto* t = std::get_if<dsl::TermEntity>(&e))
    return std::visit(
        [](const auto& m) -> dsl::AnyComb {
          using M = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<M, free::MorTerm>) return from_morphism<FreeBase>(m);
          else return from_morphism<FinBase>(m);
        },
        t->term);
  if (auto* g = std::get_if<dsl::GenEntity>(&e)) return from_morphism<FreeBase>(free::MorTerm::generator(g->generator));
  if (auto* f = std::get_if<dsl::FunEntity>(&e)) return from_morphism<FinBase>(f->fun);
  throw UsageError("'" + name + "' is a " + dsl::kind_name(e) + ", not a comb, optic or morphism");
}

std::optional<dsl::Morph> as_morphism(const dsl::Workspace& ws, const std::string& name) {
  const dsl::Entity& e = ws.lookup(name);
  if (auto* t = std::get_if<dsl::TermEntity>(&e)) return t->term;
  if (auto* g = std::get_if<dsl::GenEntity>(&e)) return free::MorTerm::generator(g->generator);
  if (auto* f = std::get_if<dsl::FunEntity>(&e)) return f->fun;
  return std::nullopt;
}

dsl::AnyOptic as_optic(const dsl::Workspace& ws, const std::string& name) {
  const dsl::Entity& e = ws.lookup(name);
  if (auto* o = std::get_if<dsl::OpticEntity>(&e)) return o->optic;
  if (auto* l = std::get_if<dsl::LensEntity>(&e)) return optic_of_lens(l->lens);
  if (auto* c = std::get_if<dsl::CombEntity>(&e))
    return std::visit([](const auto& k) -> dsl::AnyOptic { return from_comb(k); }, c->comb);
  throw UsageError("'" + name + "' is a " + dsl::kind_name(e) + ", not an optic");
}

template <class B>
std::size_t longest_residual(const Comb<B>& c) {
  std::size_t n = 0;
  for (const auto& m : c.residuals()) n = std::max(n, B::length(m));
  return n;
}

std::string type_of(const dsl::Entity& e) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, dsl::GenEntity>) {
          return x.generator.dom.str() + " -> " + x.generator.cod.str();
        } else if constexpr (std::is_same_v<T, dsl::SetEntity>) {
          return std::to_string(x.set.size) + " elements";
        } else if constexpr (std::is_same_v<T, dsl::FunEntity>) {
          return x.fun.dom().str() + " -> " + x.fun.cod().str();
        } else if constexpr (std::is_same_v<T, dsl::TermEntity>) {
          return std::visit([](const auto& m) { return m.dom().str() + " -> " + m.cod().str(); }, x.term);
        } else if constexpr (std::is_same_v<T, dsl::CombEntity>) {
          return std::visit(
              [](const auto& c) {
                std::string s = "depth " + std::to_string(c.depth()) + ", pattern [";
                for (std::size_t i = 1; i <= c.depth(); ++i)
                  s += (i > 1 ? ", (" : "(") + c.input(i).str() + ", " + c.output(i).str() + ")";
                return s + "]";
              },
              x.comb);
        } else if constexpr (std::is_same_v<T, dsl::LeftEntity>) {
          return std::visit(
              [](const auto& l) {
                return "depth " + std::to_string(l.depth()) + ", " + l.source().str() + " -> " + l.target().str();
              },
              x.comb);
        } else if constexpr (std::is_same_v<T, dsl::OpticEntity>) {
          return std::visit(
              [](const auto& h) {
                const auto [a, b] = h.source();
                const auto [c, d] = h.target();
                return "(" + a.str() + ", " + b.str() + ") -> (" + c.str() + ", " + d.str() + ")";
              },
              x.optic);
        } else if constexpr (std::is_same_v<T, dsl::LensEntity>) {
          return x.lens.a.str() + " <-> " + x.lens.b.str();
        } else if constexpr (std::is_same_v<T, dsl::PolarEntity>) {
          const auto n = alternation_depth(x.word);
          return n ? "alternation depth " + std::to_string(*n) : std::string("not alternating");
        } else {
          return "";
        }
      },
      e);
}

int cmd_check(const dsl::Workspace& ws, Output& out) {
  json decls = json::array();
  for (const auto& name : ws.order()) {
    const auto& e = ws.at(name);
    const std::string type = type_of(e);
    out.text += dsl::kind_name(e) + " " + name + (type.empty() ? "" : " : " + type) + "\n";
    decls.push_back({{"name", name}, {"kind", dsl::kind_name(e)}, {"type", type}});
  }
  out.text += "ok: " + std::to_string(ws.order().size()) + " declarations\n";
  out.payload = {{"declarations", decls}};
  return Ok;
}

int cmd_normalize(const dsl::Workspace& ws, const std::string& name, Output& out) {
  if (auto m = as_morphism(ws, name)) {
    if (auto* t = std::get_if<free::MorTerm>(&*m)) {
      const auto d = free::normalize_base(*t);
      out.text += free::to_term(d).str() + "\n";
      for (const auto& l : d.layers) out.text += "  layer offset " + std::to_string(l.offset) + " " + l.generator.name + "\n";
      out.payload = io::to_json(d);
    } else {
      const auto& f = std::get<fin::FinMorphism>(*m);
      out.text += f.str() + "\n";
      out.payload = io::to_json(f);
    }
    return Ok;
  }
  const dsl::AnyComb c = as_comb(ws, name);
  if (auto* fc = std::get_if<Comb<FinBase>>(&c)) {
    const auto h = history_normal_form(*fc);
    out.text += h.str() + "\n";
    out.payload = io::to_json(h);
  } else {
    const auto key = SlidingEquivalence<FreeBase>::key(std::get<Comb<FreeBase>>(c));
    out.text += "glued diagram " + key.dom.str() + " -> " + key.cod.str() + "\n";
    for (const auto& l : key.layers) out.text += "  layer offset " + std::to_string(l.offset) + " " + l.generator.name + "\n";
    out.payload = io::to_json(key);
  }
  return Ok;
}

int cmd_eq(const dsl::Workspace& ws, const std::string& n1, const std::string& n2, bool use_oracle,
           std::optional<std::size_t> bound, Output& out) {
  bool equal = false;
  std::optional<oracle::Verdict> verdict;
  const auto m1 = as_morphism(ws, n1), m2 = as_morphism(ws, n2);
  if (m1 && m2) {
    if (m1->index() != m2->index()) throw UsageError("cannot compare a free-base term with a finite function");
    if (auto* s = std::get_if<free::MorTerm>(&*m1)) {
      const auto& t = std::get<free::MorTerm>(*m2);
      equal = free::eq_base(*s, t);
      if (use_oracle) verdict = oracle::interchange_closure_eq(*s, t, bound.value_or(64));
    } else {
      const auto& f = std::get<fin::FinMorphism>(*m1);
      const auto& g = std::get<fin::FinMorphism>(*m2);
      equal = fin::eq_fin(f, g);
      if (use_oracle) {
        if (f.dom() == g.dom() && f.cod() == g.cod())
          verdict = oracle::sliding_closure_eq(from_morphism<FinBase>(f), from_morphism<FinBase>(g), 0);
        else
          verdict = oracle::Verdict::Unequal;
      }
    }
  } else {
    const auto& e1 = ws.lookup(n1);
    const auto& e2 = ws.lookup(n2);
    const bool optics = std::holds_alternative<dsl::OpticEntity>(e1) && std::holds_alternative<dsl::OpticEntity>(e2);
    const dsl::AnyComb c1 = as_comb(ws, n1), c2 = as_comb(ws, n2);
    if (c1.index() != c2.index()) throw UsageError("cannot compare combs over different bases");
    std::visit(
        [&](const auto& a) {
          using C = std::decay_t<decltype(a)>;
          const auto& b = std::get<C>(c2);
          equal = optics ? eq_optic(from_comb(a), from_comb(b)) : eq_comb(a, b);
          if (use_oracle) {
            const std::size_t k = bound.value_or(std::max(longest_residual(a), longest_residual(b)) + 2);
            verdict = oracle::sliding_closure_eq(a, b, k);
          }
        },
        c1);
  }
  out.text += std::string(equal ? "equal" : "unequal") + "\n";
  out.payload = {{"left", n1}, {"right", n2}, {"equal", equal}};
  bool mismatch = false;
  if (verdict) {
    out.text += "oracle: " + oracle::to_string(*verdict) + "\n";
    out.payload["oracle"] = oracle::to_string(*verdict);
    mismatch = (equal && *verdict == oracle::Verdict::Unequal) || (!equal && *verdict == oracle::Verdict::Equal);
    if (mismatch) out.text += "mismatch between the decision procedure and the oracle\n";
    out.payload["mismatch"] = mismatch;
  }
  return equal && !mismatch ? Ok : Failed;
}

int cmd_compose(const dsl::Workspace& ws, const std::string& n1, const std::string& n2, Output& out) {
  const auto h1 = as_optic(ws, n1), h2 = as_optic(ws, n2);
  if (h1.index() != h2.index()) throw UsageError("cannot compose optics over different bases");
  std::visit(
      [&](const auto& a) {
        const auto h = compose_optic(a, std::get<std::decay_t<decltype(a)>>(h2));
        out.text += h.str() + "\n";
        out.payload = io::to_json(h);
      },
      h1);
  return Ok;
}

int cmd_plug(const dsl::Workspace& ws, const std::string& outer, std::size_t gap, const std::string& inner,
             Output& out) {
  const auto c1 = as_comb(ws, outer), c2 = as_comb(ws, inner);
  if (c1.index() != c2.index()) throw UsageError("cannot plug combs over different bases");
  std::visit(
      [&](const auto& a) {
        const auto c = plug_gap(a, gap, std::get<std::decay_t<decltype(a)>>(c2));
        out.text += c.str() + "\n";
        out.payload = io::to_json(c);
      },
      c1);
  return Ok;
}

int cmd_run(const dsl::Workspace& ws, const std::string& name, const std::vector<std::string>& fillers, Output& out) {
  const auto c = as_comb(ws, name);
  std::visit(
      [&](const auto& comb) {
        using M = std::decay_t<decltype(comb.tooth(1))>;
        std::vector<M> gs;
        for (const auto& f : fillers) {
          const auto m = as_morphism(ws, f);
          if (!m || !std::holds_alternative<M>(*m)) throw UsageError("'" + f + "' is not a morphism of the comb's base");
          gs.push_back(std::get<M>(*m));
        }
        const auto result = run(comb, gs);
        out.text += result.str() + "\n";
        out.payload = io::to_json(result);
      },
      c);
  return Ok;
}

int cmd_interleave(const dsl::Workspace& ws, const std::string& right, const std::string& left, Output& out) {
  const auto r = as_comb(ws, right);
  const auto& e = ws.lookup(left);
  const auto* l = std::get_if<dsl::LeftEntity>(&e);
  if (!l) throw UsageError("'" + left + "' is a " + dsl::kind_name(e) + ", not a left comb");
  if (r.index() != l->comb.index()) throw UsageError("cannot interleave combs over different bases");
  std::visit(
      [&](const auto& rc) {
        using C = std::decay_t<decltype(rc)>;
        using Base = std::conditional_t<std::is_same_v<C, Comb<FreeBase>>, FreeBase, FinBase>;
        const auto result = interleave(rc, std::get<LeftComb<Base>>(l->comb));
        out.text += result.str() + "\n";
        out.payload = io::to_json(result);
      },
      r);
  return Ok;
}

int cmd_lens_laws(const dsl::Workspace& ws, const std::string& name, Output& out) {
  const auto& e = ws.lookup(name);
  std::optional<Lens> lens;
  if (auto* l = std::get_if<dsl::LensEntity>(&e)) lens = l->lens;
  else if (auto* o = std::get_if<dsl::OpticEntity>(&e); o && std::holds_alternative<Optic<FinBase>>(o->optic))
    lens = decompose(std::get<Optic<FinBase>>(o->optic));
  else throw UsageError("'" + name + "' is not a lens or a finite-base optic");
  const auto laws = check_lens_laws(*lens);
  auto mark = [](bool b) { return b ? "holds" : "fails"; };
  out.text += std::string("GetPut ") + mark(laws.getput) + "\nPutGet " + mark(laws.putget) + "\nPutPut " +
              mark(laws.putput) + "\n";
  out.payload = io::to_json(laws);
  return laws.all() ? Ok : Failed;
}

int cmd_lawful(const dsl::Workspace& ws, const std::string& name, Output& out) {
  const auto h = as_optic(ws, name);
  const bool lawful = std::visit([](const auto& o) { return is_lawful(o); }, h);
  out.text += std::string(lawful ? "lawful" : "not lawful") + "\n";
  out.payload = {{"name", name}, {"lawful", lawful}};
  return lawful ? Ok : Failed;
}

int cmd_lemma_suite(const std::string& file, const std::string& sizes, const std::string& sets, Output& out) {
  fin::FinObject a, b;
  if (!sets.empty()) {
    if (file.empty()) throw UsageError("--sets needs a source file");
    const auto ws = dsl::parse_file(file);
    const auto comma = sets.find(',');
    if (comma == std::string::npos) throw UsageError("--sets expects A,B");
    a = ws.set_word({sets.substr(0, comma)});
    b = ws.set_word({sets.substr(comma + 1)});
  } else {
    std::size_t na = 0, nb = 0;
    char comma = 0;
    std::istringstream in(sizes);
    if (!(in >> na >> comma >> nb) || comma != ',' || !in.eof()) throw UsageError("--sizes expects two sizes, e.g. 2,2");
    if (!file.empty()) dsl::parse_file(file);
    a = fin::FinObject{{"A", static_cast<std::uint32_t>(na)}};
    b = fin::FinObject{{"B", static_cast<std::uint32_t>(nb)}};
  }
  const auto report = verify_lemma_suite(a, b);
  out.as_json = true;
  out.payload = io::to_json(report);
  return report.violations() == 0 ? Ok : Failed;
}

int cmd_render(const dsl::Workspace& ws, const std::string& name, Output& out) {
  const auto c = as_comb(ws, name);
  out.text = std::visit([](const auto& k) { return io::render_svg(k); }, c);
  out.payload = {{"svg", out.text}};
  return Ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cornering: combs, optics and lenses over free and finite bases"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.as_json, "Print a JSON document");
  app.add_option("--out", out.path, "Write the output to a file");
  app.fallthrough();

  std::string file, n1, n2, sizes, sets;
  std::size_t gap = 0;
  std::optional<std::size_t> bound;
  bool use_oracle = false;
  std::vector<std::string> fillers;

  auto* check = app.add_subcommand("check", "Parse and type-check a source file");
  check->add_option("file", file)->required();
  auto* normalize = app.add_subcommand("normalize", "Print the normal form of a term or comb");
  normalize->add_option("file", file)->required();
  normalize->add_option("name", n1)->required();
  auto* eq = app.add_subcommand("eq", "Decide equality of two terms, combs or optics");
  eq->add_option("file", file)->required();
  eq->add_option("first", n1)->required();
  eq->add_option("second", n2)->required();
  eq->add_flag("--oracle", use_oracle, "Cross-check with the brute-force oracle");
  eq->add_option("--bound", bound, "Residual bound (combs) or move bound (terms) for the oracle");
  auto* compose = app.add_subcommand("compose", "Compose two optics");
  compose->add_option("file", file)->required();
  compose->add_option("first", n1)->required();
  compose->add_option("second", n2)->required();
  auto* plug = app.add_subcommand("plug", "Insert a comb into a gap of another");
  plug->add_option("file", file)->required();
  plug->add_option("outer", n1)->required();
  plug->add_option("gap", gap, "1-based gap index")->required();
  plug->add_option("inner", n2)->required();
  auto* run_cmd = app.add_subcommand("run", "Fill every gap of a comb with morphisms");
  run_cmd->add_option("file", file)->required();
  run_cmd->add_option("comb", n1)->required();
  run_cmd->add_option("fillers", fillers);
  auto* inter = app.add_subcommand("interleave", "Interleave a right comb with a left comb");
  inter->add_option("file", file)->required();
  inter->add_option("right", n1)->required();
  inter->add_option("left", n2)->required();
  auto* laws = app.add_subcommand("lens-laws", "Check GetPut, PutGet and PutPut");
  laws->add_option("file", file)->required();
  laws->add_option("name", n1)->required();
  auto* lawful = app.add_subcommand("lawful", "Check that a homogeneous optic is a comonoid homomorphism");
  lawful->add_option("file", file)->required();
  lawful->add_option("name", n1)->required();
  auto* suite = app.add_subcommand("lemma-suite", "Compare lens laws with lawfulness over all lenses");
  suite->add_option("file", file, "Source file declaring the sets");
  suite->add_option("--sizes", sizes, "Carrier sizes, e.g. 2,2");
  suite->add_option("--sets", sets, "Declared sets to use, e.g. A,B");
  auto* render = app.add_subcommand("render", "Render a comb or optic as SVG");
  render->add_option("file", file)->required();
  render->add_option("name", n1)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return Usage;
  }

  int code = Ok;
  try {
    if (suite->parsed()) {
      if (sizes.empty() && sets.empty()) throw UsageError("lemma-suite needs --sizes or --sets");
      code = cmd_lemma_suite(file, sizes, sets, out);
    } else {
      const auto ws = dsl::parse_file(file);
      if (check->parsed()) code = cmd_check(ws, out);
      else if (normalize->parsed()) code = cmd_normalize(ws, n1, out);
      else if (eq->parsed()) code = cmd_eq(ws, n1, n2, use_oracle, bound, out);
      else if (compose->parsed()) code = cmd_compose(ws, n1, n2, out);
      else if (plug->parsed()) code = cmd_plug(ws, n1, gap, n2, out);
      else if (run_cmd->parsed()) code = cmd_run(ws, n1, fillers, out);
      else if (inter->parsed()) code = cmd_interleave(ws, n1, n2, out);
      else if (laws->parsed()) code = cmd_lens_laws(ws, n1, out);
      else if (lawful->parsed()) code = cmd_lawful(ws, n1, out);
      else if (render->parsed()) code = cmd_render(ws, n1, out);
    }
  } catch (const dsl::DslError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const std::string body = out.as_json ? io::envelope(command, out.payload).dump(2) + "\n" : out.text;
  if (out.path.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(out.path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << out.path << "\n";
      return Usage;
    }
    f << body;
  }
  return code;
}
