#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cornering::free {

/// A word of generating objects; the empty word is the monoidal unit I.
class ObjectWord {
 public:
  ObjectWord() = default;
  ObjectWord(std::initializer_list<std::string> letters) : letters_(letters) {}
  explicit ObjectWord(std::vector<std::string> letters) : letters_(std::move(letters)) {}

  static ObjectWord unit() { return {}; }

  const std::vector<std::string>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::string& operator[](std::size_t i) const { return letters_[i]; }

  ObjectWord operator*(const ObjectWord& rhs) const {
    std::vector<std::string> out = letters_;
    out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
    return ObjectWord(std::move(out));
  }

  /// Letters [from, from + count).
  ObjectWord slice(std::size_t from, std::size_t count) const {
    return ObjectWord(std::vector<std::string>(letters_.begin() + static_cast<std::ptrdiff_t>(from),
                                               letters_.begin() + static_cast<std::ptrdiff_t>(from + count)));
  }

  bool starts_with(const ObjectWord& prefix) const {
    return prefix.size() <= size() && std::equal(prefix.letters_.begin(), prefix.letters_.end(), letters_.begin());
  }

  /// Drops `prefix` from the front; caller guarantees starts_with(prefix).
  ObjectWord drop_prefix(const ObjectWord& prefix) const { return slice(prefix.size(), size() - prefix.size()); }

  std::string str() const {
    if (letters_.empty()) return "I";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) out += " * ";
      out += letters_[i];
    }
    return out;
  }

  friend bool operator==(const ObjectWord&, const ObjectWord&) = default;
  friend auto operator<=>(const ObjectWord&, const ObjectWord&) = default;

 private:
  std::vector<std::string> letters_;
};

}  // namespace cornering::free
