#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "cornering/dsl/syntax.hpp"
#include "cornering/lenses.hpp"

namespace cornering::dsl {

using Morph = std::variant<free::MorTerm, fin::FinMorphism>;
using AnyComb = std::variant<Comb<FreeBase>, Comb<FinBase>>;
using AnyLeft = std::variant<LeftComb<FreeBase>, LeftComb<FinBase>>;
using AnyOptic = std::variant<Optic<FreeBase>, Optic<FinBase>>;

struct ObjectEntity {};
struct GenEntity {
  free::Generator generator;
};
struct SetEntity {
  fin::FinSet set;
};
struct FunEntity {
  fin::FinMorphism fun;
};
struct TermEntity {
  Morph term;
};
struct CombEntity {
  AnyComb comb;
};
struct LeftEntity {
  AnyLeft comb;
};
struct OpticEntity {
  AnyOptic optic;
};
struct LensEntity {
  Lens lens;
};
struct PolarEntity {
  PolarizedWord<free::ObjectWord> word;
};

using Entity = std::variant<ObjectEntity, GenEntity, SetEntity, FunEntity, TermEntity, CombEntity, LeftEntity,
                            OpticEntity, LensEntity, PolarEntity>;

inline std::string kind_name(const Entity& e) {
  static const char* names[] = {"object", "gen", "set", "fun", "term", "comb", "left", "optic", "lens", "polar"};
  return names[e.index()];
}

/// Resolved declarations, in source order.
class Workspace {
 public:
  const free::Signature& signature() const { return sig_; }
  const std::vector<std::string>& order() const { return order_; }
  bool contains(const std::string& name) const { return entities_.contains(name); }
  const Entity& at(const std::string& name) const { return entities_.at(name); }

  const Entity& lookup(const std::string& name, Location at = {}) const {
    auto it = entities_.find(name);
    if (it == entities_.end()) throw DslError("UnresolvedReference", at, "'" + name + "' is not declared");
    return it->second;
  }

  template <class T>
  const T& lookup_as(const std::string& name, const char* what) const {
    const Entity& e = lookup(name);
    if (auto* p = std::get_if<T>(&e)) return *p;
    throw DslError("TypeMismatch", {}, "'" + name + "' is a " + kind_name(e) + ", not " + what);
  }

  fin::FinObject set_word(const std::vector<std::string>& names) const {
    std::vector<fin::FinSet> letters;
    for (const auto& n : names) letters.push_back(lookup_as<SetEntity>(n, "a set").set);
    return fin::FinObject(std::move(letters));
  }

  void add(const Decl& d);

 private:
  struct Unit {};
  using Value = std::variant<Unit, free::MorTerm, fin::FinMorphism>;
  using AnyWord = std::variant<Unit, free::ObjectWord, fin::FinObject>;

  void declare(const Name& n, Entity e) {
    if (entities_.contains(n.text)) throw DslError("DuplicateName", n.at, "'" + n.text + "' is already declared");
    entities_.emplace(n.text, std::move(e));
    order_.push_back(n.text);
  }

  AnyWord resolve_word(const WordAst& w) const {
    if (w.letters.empty()) return Unit{};
    std::vector<std::string> objects;
    std::vector<fin::FinSet> sets;
    for (const auto& l : w.letters) {
      const Entity& e = lookup(l.text, l.at);
      if (std::holds_alternative<ObjectEntity>(e)) objects.push_back(l.text);
      else if (auto* s = std::get_if<SetEntity>(&e)) sets.push_back(s->set);
      else throw DslError("TypeMismatch", l.at, "'" + l.text + "' is a " + kind_name(e) + ", not an object or set");
      if (!objects.empty() && !sets.empty())
        throw DslError("TypeMismatch", l.at, "a word cannot mix free objects and finite sets");
    }
    if (!objects.empty()) return free::ObjectWord(std::move(objects));
    return fin::FinObject(std::move(sets));
  }

  free::ObjectWord free_word(const WordAst& w) const {
    const AnyWord r = resolve_word(w);
    if (std::holds_alternative<fin::FinObject>(r))
      throw DslError("TypeMismatch", w.at, "expected a word of objects, found finite sets");
    if (auto* o = std::get_if<free::ObjectWord>(&r)) return *o;
    return {};
  }

  fin::FinObject fin_word(const WordAst& w) const {
    const AnyWord r = resolve_word(w);
    if (std::holds_alternative<free::ObjectWord>(r))
      throw DslError("TypeMismatch", w.at, "expected a word of finite sets, found objects");
    if (auto* o = std::get_if<fin::FinObject>(&r)) return *o;
    return {};
  }

  template <class F>
  static auto located(Location at, F&& f) {
    try {
      return f();
    } catch (const Error& e) {
      throw DslError(std::string(to_string(e.kind())), at, e.message());
    }
  }

  Value eval(const ExprAst& e) const {
    return std::visit(
        [&](const auto& n) -> Value {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, ExprAst::Ref>) {
            const Entity& ent = lookup(n.name, e.at);
            if (auto* g = std::get_if<GenEntity>(&ent)) return free::MorTerm::generator(g->generator);
            if (auto* f = std::get_if<FunEntity>(&ent)) return f->fun;
            if (auto* t = std::get_if<TermEntity>(&ent))
              return std::visit([](const auto& m) -> Value { return m; }, t->term);
            throw DslError("TypeMismatch", e.at, "'" + n.name + "' is a " + kind_name(ent) + ", not a morphism");
          } else if constexpr (std::is_same_v<T, ExprAst::Id>) {
            const AnyWord w = resolve_word(n.word);
            if (auto* o = std::get_if<free::ObjectWord>(&w)) return free::MorTerm::identity(*o);
            if (auto* s = std::get_if<fin::FinObject>(&w)) return fin::identity(*s);
            return Unit{};
          } else if constexpr (std::is_same_v<T, ExprAst::Copy>) {
            return fin::copy(fin_word(n.word));
          } else if constexpr (std::is_same_v<T, ExprAst::Delete>) {
            return fin::discard(fin_word(n.word));
          } else if constexpr (std::is_same_v<T, ExprAst::Table>) {
            std::vector<std::uint32_t> values(n.values.begin(), n.values.end());
            const auto d = fin_word(n.dom), c = fin_word(n.cod);
            return located(e.at, [&] { return fin::FinMorphism(d, c, values); });
          } else if constexpr (std::is_same_v<T, ExprAst::Seq>) {
            return combine(eval(*n.first), eval(*n.second), e.at, true);
          } else {
            return combine(eval(*n.left), eval(*n.right), e.at, false);
          }
        },
        e.node);
  }

  static Value combine(const Value& a, const Value& b, Location at, bool sequential) {
    const bool a_unit = std::holds_alternative<Unit>(a), b_unit = std::holds_alternative<Unit>(b);
    if (a_unit && b_unit) return Unit{};
    if (a_unit || b_unit) {
      const Value& other = a_unit ? b : a;
      if (sequential) {
        const bool ok = std::visit(
            [&](const auto& m) {
              if constexpr (std::is_same_v<std::decay_t<decltype(m)>, Unit>) return true;
              else return a_unit ? m.dom().empty() : m.cod().empty();
            },
            other);
        if (!ok) throw DslError("TypeMismatch", at, "cannot compose with id(I) here");
      }
      return other;
    }
    if (a.index() != b.index())
      throw DslError("TypeMismatch", at, "cannot combine a free-base term with a finite-base function");
    if (auto* f = std::get_if<free::MorTerm>(&a)) {
      const auto& g = std::get<free::MorTerm>(b);
      return located(at, [&] { return sequential ? free::MorTerm::seq(*f, g) : free::MorTerm::par(*f, g); });
    }
    const auto& f = std::get<fin::FinMorphism>(a);
    const auto& g = std::get<fin::FinMorphism>(b);
    return located(at, [&] { return sequential ? fin::compose_fin(f, g) : fin::tensor_fin(f, g); });
  }

  /// Evaluates a list of morphisms that must live in one base; bare id(I)
  /// adopts the base of its neighbours (free if all are bare).
  bool teeth_are_finite(const std::vector<Value>& vs, const std::vector<WordAst>& words, Location at) const {
    bool any_free = false, any_fin = false;
    for (const auto& v : vs) {
      any_free |= std::holds_alternative<free::MorTerm>(v);
      any_fin |= std::holds_alternative<fin::FinMorphism>(v);
    }
    for (const auto& w : words) {
      const AnyWord r = resolve_word(w);
      any_free |= std::holds_alternative<free::ObjectWord>(r);
      any_fin |= std::holds_alternative<fin::FinObject>(r);
    }
    if (any_free && any_fin) throw DslError("TypeMismatch", at, "declaration mixes free-base and finite-base parts");
    return any_fin;
  }

  template <class B>
  static std::vector<typename B::Morphism> as_base(const std::vector<Value>& vs) {
    std::vector<typename B::Morphism> out;
    for (const auto& v : vs) {
      if (std::holds_alternative<Unit>(v)) out.push_back(B::identity(B::unit()));
      else out.push_back(std::get<typename B::Morphism>(v));
    }
    return out;
  }

  template <class B>
  std::vector<typename B::Object> words_in(const std::vector<WordAst>& ws) const {
    std::vector<typename B::Object> out;
    for (const auto& w : ws) {
      if constexpr (std::is_same_v<B, FreeBase>) out.push_back(free_word(w));
      else out.push_back(fin_word(w));
    }
    return out;
  }

  template <class B>
  static LeftComb<B> left_from_teeth(std::vector<typename B::Object> residuals, std::vector<typename B::Morphism> teeth) {
    using Object = typename B::Object;
    const std::size_t n = residuals.size();
    if (teeth.size() != n + 1)
      throw Error(ErrorKind::BoundaryMismatch, "a left comb with " + std::to_string(n) + " residuals needs " +
                                                   std::to_string(n + 1) + " teeth");
    auto strip = [](const Object& w, const Object& suffix, std::size_t tooth) {
      const auto& l = w.letters();
      const auto& s = suffix.letters();
      if (s.size() > l.size() || !std::equal(s.begin(), s.end(), l.end() - static_cast<std::ptrdiff_t>(s.size())))
        throw IndexedError(ErrorKind::BoundaryMismatch, tooth,
                           "left tooth " + std::to_string(tooth) + " does not carry residual " + B::show(suffix));
      return Object(std::vector(l.begin(), l.end() - static_cast<std::ptrdiff_t>(s.size())));
    };
    AlternationPattern<Object> p;
    for (std::size_t i = 1; i <= n; ++i)
      p.pairs.emplace_back(strip(B::cod(teeth[i - 1]), residuals[i - 1], i - 1), strip(B::dom(teeth[i]), residuals[i - 1], i));
    Object source = B::dom(teeth.front()), target = B::cod(teeth.back());
    return LeftComb<B>(std::move(source), std::move(target), std::move(p), std::move(residuals), std::move(teeth));
  }

  std::map<std::string, Entity> entities_;
  std::vector<std::string> order_;
  free::Signature sig_;
};

inline void Workspace::add(const Decl& d) {
  using K = Decl::Kind;
  const Name& name = d.names.front();
  switch (d.kind) {
    case K::Object:
      for (const auto& n : d.names) {
        declare(n, ObjectEntity{});
        sig_.add_object(n.text);
      }
      return;
    case K::Set:
      declare(name, SetEntity{fin::FinSet{name.text, static_cast<std::uint32_t>(d.size)}});
      return;
    case K::Gen: {
      auto dom = free_word(d.dom), cod = free_word(d.cod);
      free::Generator g{name.text, dom, cod};
      declare(name, GenEntity{g});
      located(d.at, [&] {
        sig_.add_generator(g.name, g.dom, g.cod);
        return 0;
      });
      return;
    }
    case K::Fun: {
      auto dom = fin_word(d.dom), cod = fin_word(d.cod);
      std::vector<std::uint32_t> values(d.values.begin(), d.values.end());
      auto f = located(d.at, [&] { return fin::FinMorphism(dom, cod, values); });
      declare(name, FunEntity{std::move(f)});
      return;
    }
    case K::Term: {
      const Value v = eval(*d.exprs.front());
      if (auto* f = std::get_if<fin::FinMorphism>(&v)) declare(name, TermEntity{*f});
      else if (auto* t = std::get_if<free::MorTerm>(&v)) declare(name, TermEntity{*t});
      else declare(name, TermEntity{free::MorTerm::identity({})});
      return;
    }
    case K::Comb:
    case K::Left:
    case K::Optic: {
      std::vector<Value> vs;
      for (const auto& e : d.exprs) vs.push_back(eval(*e));
      const bool finite = teeth_are_finite(vs, d.words, d.at);
      auto build = [&]<class B>(B) -> Entity {
        auto teeth = as_base<B>(vs);
        auto words = words_in<B>(d.words);
        return located(d.at, [&]() -> Entity {
          if (d.kind == K::Comb) return CombEntity{comb_from_teeth<B>(std::move(words), std::move(teeth))};
          if (d.kind == K::Left) return LeftEntity{left_from_teeth<B>(std::move(words), std::move(teeth))};
          if (teeth.size() != 2) throw Error(ErrorKind::DepthMismatch, "an optic has exactly two parts");
          return OpticEntity{Optic<B>(words.front(), teeth[0], teeth[1])};
        });
      };
      declare(name, finite ? build(FinBase{}) : build(FreeBase{}));
      return;
    }
    case K::Lens: {
      auto get = eval(*d.exprs[0]);
      auto put = eval(*d.exprs[1]);
      if (!std::holds_alternative<fin::FinMorphism>(get) || !std::holds_alternative<fin::FinMorphism>(put))
        throw DslError("TypeMismatch", d.at, "lenses live over the finite base: get and put must be finite functions");
      auto lens = located(d.at, [&] { return Lens(std::get<fin::FinMorphism>(get), std::get<fin::FinMorphism>(put)); });
      declare(name, LensEntity{std::move(lens)});
      return;
    }
    case K::Polar: {
      PolarizedWord<free::ObjectWord> w;
      for (const auto& atom : d.polar) {
        std::vector<std::string> letters;
        for (const auto& l : atom.word.letters) {
          const Entity& e = lookup(l.text, l.at);
          if (!std::holds_alternative<ObjectEntity>(e) && !std::holds_alternative<SetEntity>(e))
            throw DslError("TypeMismatch", l.at, "'" + l.text + "' is a " + kind_name(e) + ", not an object or set");
          letters.push_back(l.text);
        }
        w.push_back({free::ObjectWord(std::move(letters)), atom.bullet ? Polarity::Bullet : Polarity::Circ});
      }
      declare(name, PolarEntity{std::move(w)});
      return;
    }
  }
}

inline Workspace parse(const std::string& src) {
  Workspace ws;
  for (const auto& d : parse_decls(src)) ws.add(d);
  return ws;
}

inline Workspace parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace cornering::dsl
