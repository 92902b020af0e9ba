#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "cornering/error.hpp"
#include "cornering/free/word.hpp"

namespace cornering::free {

struct Generator {
  std::string name;
  ObjectWord dom;
  ObjectWord cod;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Object and morphism generators of a free strict monoidal category.
class Signature {
 public:
  void add_object(const std::string& name) {
    if (!objects_.insert(name).second) throw Error(ErrorKind::InvalidArgument, "duplicate object generator " + name);
  }

  void add_generator(const std::string& name, ObjectWord dom, ObjectWord cod) {
    for (const auto* w : {&dom, &cod})
      for (const auto& letter : w->letters())
        if (!objects_.contains(letter))
          throw Error(ErrorKind::UnknownGenerator, "object " + letter + " in the type of " + name + " is not declared");
    if (!generators_.emplace(name, Generator{name, std::move(dom), std::move(cod)}).second)
      throw Error(ErrorKind::InvalidArgument, "duplicate morphism generator " + name);
  }

  bool has_object(const std::string& name) const { return objects_.contains(name); }
  const Generator* find(const std::string& name) const {
    auto it = generators_.find(name);
    return it == generators_.end() ? nullptr : &it->second;
  }

  const std::set<std::string>& objects() const { return objects_; }
  const std::map<std::string, Generator>& generators() const { return generators_; }

 private:
  std::set<std::string> objects_;
  std::map<std::string, Generator> generators_;
};

/// A typed morphism term. Immutable and cheap to copy (shared structure).
class MorTerm {
 public:
  struct Gen;
  struct Identity;
  struct Seq;
  struct Par;
  using Node = std::variant<Gen, Identity, Seq, Par>;

  static MorTerm generator(Generator g);
  static MorTerm identity(ObjectWord w);
  static MorTerm seq(MorTerm first, MorTerm second);
  static MorTerm par(MorTerm left, MorTerm right);

  const ObjectWord& dom() const;
  const ObjectWord& cod() const;
  const Node& node() const;

  /// Number of generator occurrences.
  std::size_t size() const;

  /// Diagram-order text: `;` for composition, `*` for tensor.
  std::string str() const { return print(0); }

 private:
  struct Data;

  MorTerm(Node node, ObjectWord dom, ObjectWord cod);

  // precedence: 0 = seq context, 1 = par context
  std::string print(int prec) const;

  std::shared_ptr<const Data> data_;
};

struct MorTerm::Gen {
  Generator generator;
};
struct MorTerm::Identity {
  ObjectWord object;
};
struct MorTerm::Seq {
  MorTerm first;
  MorTerm second;
};
struct MorTerm::Par {
  MorTerm left;
  MorTerm right;
};
struct MorTerm::Data {
  Node node;
  ObjectWord dom;
  ObjectWord cod;
};

inline MorTerm::MorTerm(Node node, ObjectWord dom, ObjectWord cod)
    : data_(std::make_shared<const Data>(Data{std::move(node), std::move(dom), std::move(cod)})) {}

inline MorTerm MorTerm::generator(Generator g) {
  ObjectWord dom = g.dom, cod = g.cod;
  return MorTerm(Node{Gen{std::move(g)}}, std::move(dom), std::move(cod));
}

inline MorTerm MorTerm::identity(ObjectWord w) { return MorTerm(Node{Identity{w}}, w, w); }

inline MorTerm MorTerm::seq(MorTerm first, MorTerm second) {
  if (first.cod() != second.dom())
    throw Error(ErrorKind::TypeMismatch, "cannot compose " + first.cod().str() + " with " + second.dom().str());
  ObjectWord dom = first.dom(), cod = second.cod();
  return MorTerm(Node{Seq{std::move(first), std::move(second)}}, std::move(dom), std::move(cod));
}

inline MorTerm MorTerm::par(MorTerm left, MorTerm right) {
  ObjectWord dom = left.dom() * right.dom(), cod = left.cod() * right.cod();
  return MorTerm(Node{Par{std::move(left), std::move(right)}}, std::move(dom), std::move(cod));
}

inline const ObjectWord& MorTerm::dom() const { return data_->dom; }
inline const ObjectWord& MorTerm::cod() const { return data_->cod; }
inline const MorTerm::Node& MorTerm::node() const { return data_->node; }

inline std::size_t MorTerm::size() const {
  return std::visit(
      [](const auto& n) -> std::size_t {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Gen>) return 1;
        else if constexpr (std::is_same_v<T, Identity>) return 0;
        else if constexpr (std::is_same_v<T, Seq>) return n.first.size() + n.second.size();
        else return n.left.size() + n.right.size();
      },
      node());
}

inline std::string MorTerm::print(int prec) const {
  return std::visit(
      [prec](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Gen>) return n.generator.name;
        else if constexpr (std::is_same_v<T, Identity>) return "id(" + n.object.str() + ")";
        else if constexpr (std::is_same_v<T, Seq>) {
          std::string s = n.first.print(0) + " ; " + n.second.print(0);
          return prec > 0 ? "(" + s + ")" : s;
        } else {
          return n.left.print(1) + " * " + n.right.print(1);
        }
      },
      node());
}

/// Untyped term syntax referring to generators by name; resolved by validate.
struct TermExpr {
  struct Name {
    std::string name;
  };
  struct Identity {
    ObjectWord object;
  };
  struct Seq {
    std::shared_ptr<const TermExpr> first, second;
  };
  struct Par {
    std::shared_ptr<const TermExpr> left, right;
  };
  std::variant<Name, Identity, Seq, Par> node;

  static TermExpr name(std::string n) { return {Name{std::move(n)}}; }
  static TermExpr identity(ObjectWord w) { return {Identity{std::move(w)}}; }
  static TermExpr seq(TermExpr a, TermExpr b) {
    return {Seq{std::make_shared<const TermExpr>(std::move(a)), std::make_shared<const TermExpr>(std::move(b))}};
  }
  static TermExpr par(TermExpr a, TermExpr b) {
    return {Par{std::make_shared<const TermExpr>(std::move(a)), std::make_shared<const TermExpr>(std::move(b))}};
  }
};

/// Resolves names against `sig` and computes boundaries.
/// Throws UnknownGenerator or TypeMismatch.
inline MorTerm validate(const Signature& sig, const TermExpr& expr) {
  return std::visit(
      [&sig](const auto& n) -> MorTerm {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, TermExpr::Name>) {
          const Generator* g = sig.find(n.name);
          if (!g) throw Error(ErrorKind::UnknownGenerator, "undeclared generator " + n.name);
          return MorTerm::generator(*g);
        } else if constexpr (std::is_same_v<T, TermExpr::Identity>) {
          for (const auto& letter : n.object.letters())
            if (!sig.has_object(letter)) throw Error(ErrorKind::UnknownGenerator, "undeclared object " + letter);
          return MorTerm::identity(n.object);
        } else if constexpr (std::is_same_v<T, TermExpr::Seq>) {
          return MorTerm::seq(validate(sig, *n.first), validate(sig, *n.second));
        } else {
          return MorTerm::par(validate(sig, *n.left), validate(sig, *n.right));
        }
      },
      expr.node);
}

/// Checks that every generator in an already-built term is declared in `sig`
/// with the same type.
inline const MorTerm& validate(const Signature& sig, const MorTerm& t) {
  std::visit(
      [&sig](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, MorTerm::Gen>) {
          const Generator* g = sig.find(n.generator.name);
          if (!g) throw Error(ErrorKind::UnknownGenerator, "undeclared generator " + n.generator.name);
          if (!(*g == n.generator)) throw Error(ErrorKind::TypeMismatch, "generator " + g->name + " used at a foreign type");
        } else if constexpr (std::is_same_v<T, MorTerm::Identity>) {
          for (const auto& letter : n.object.letters())
            if (!sig.has_object(letter)) throw Error(ErrorKind::UnknownGenerator, "undeclared object " + letter);
        } else if constexpr (std::is_same_v<T, MorTerm::Seq>) {
          validate(sig, n.first);
          validate(sig, n.second);
        } else {
          validate(sig, n.left);
          validate(sig, n.right);
        }
      },
      t.node());
  return t;
}

}  // namespace cornering::free
