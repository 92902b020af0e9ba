#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "cornering/error.hpp"

namespace cornering::fin {

/// A named finite set {0, ..., size-1}.
struct FinSet {
  std::string name;
  std::uint32_t size = 0;

  friend bool operator==(const FinSet&, const FinSet&) = default;
  friend auto operator<=>(const FinSet&, const FinSet&) = default;
};

/// A word of finite sets. Its carrier is the cartesian product of the letters,
/// encoded as mixed-radix integers with the first letter most significant. The
/// empty word has exactly one element, the empty tuple.
class FinObject {
 public:
  FinObject() = default;
  FinObject(std::initializer_list<FinSet> letters) : letters_(letters) {}
  explicit FinObject(std::vector<FinSet> letters) : letters_(std::move(letters)) {}

  static FinObject unit() { return {}; }

  const std::vector<FinSet>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  std::size_t cardinality() const {
    std::size_t n = 1;
    for (const auto& l : letters_) n *= l.size;
    return n;
  }

  FinObject operator*(const FinObject& rhs) const {
    std::vector<FinSet> out = letters_;
    out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
    return FinObject(std::move(out));
  }

  bool starts_with(const FinObject& prefix) const {
    if (prefix.length() > length()) return false;
    for (std::size_t i = 0; i < prefix.length(); ++i)
      if (!(letters_[i] == prefix.letters_[i])) return false;
    return true;
  }

  FinObject drop_prefix(const FinObject& prefix) const {
    return FinObject(std::vector<FinSet>(letters_.begin() + static_cast<std::ptrdiff_t>(prefix.length()), letters_.end()));
  }

  /// Components of the element with index `code`.
  std::vector<std::uint32_t> decode(std::size_t code) const {
    std::vector<std::uint32_t> out(letters_.size());
    for (std::size_t i = letters_.size(); i-- > 0;) {
      out[i] = static_cast<std::uint32_t>(code % letters_[i].size);
      code /= letters_[i].size;
    }
    return out;
  }

  std::size_t encode(const std::vector<std::uint32_t>& tuple) const {
    if (tuple.size() != letters_.size()) throw Error(ErrorKind::InvalidArgument, "tuple arity mismatch");
    std::size_t code = 0;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (tuple[i] >= letters_[i].size) throw Error(ErrorKind::InvalidArgument, "tuple component out of range");
      code = code * letters_[i].size + tuple[i];
    }
    return code;
  }

  std::string str() const {
    if (letters_.empty()) return "I";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) out += " * ";
      out += letters_[i].name;
    }
    return out;
  }

  friend bool operator==(const FinObject&, const FinObject&) = default;
  friend auto operator<=>(const FinObject&, const FinObject&) = default;

 private:
  std::vector<FinSet> letters_;
};

}  // namespace cornering::fin
