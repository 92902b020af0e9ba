#pragma once

#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

#include "cornering/fin/morphism.hpp"

namespace cornering::fin {

/// Cursor over every function dom -> cod, in lexicographic order of tables
/// (entry 0 most significant). Each cursor is independent state.
class HomCursor {
 public:
  HomCursor(FinObject dom, FinObject cod)
      : dom_(std::move(dom)), cod_(std::move(cod)), radix_(cod_.cardinality()), table_(dom_.cardinality(), 0u) {
    exhausted_ = radix_ == 0 && !table_.empty();
  }

  /// The next function, or nullopt once all |cod|^|dom| have been produced.
  std::optional<FinMorphism> next() {
    if (exhausted_) return std::nullopt;
    FinMorphism out(dom_, cod_, table_);
    advance();
    return out;
  }

  bool done() const { return exhausted_; }

 private:
  void advance() {
    for (std::size_t i = table_.size(); i-- > 0;) {
      if (++table_[i] < radix_) return;
      table_[i] = 0;
    }
    exhausted_ = true;
  }

  FinObject dom_;
  FinObject cod_;
  std::size_t radix_;
  std::vector<std::uint32_t> table_;
  bool exhausted_ = false;
};

/// Range adaptor so hom-sets work with range-for.
class HomSet {
 public:
  HomSet(FinObject dom, FinObject cod) : dom_(std::move(dom)), cod_(std::move(cod)) {}

  class iterator {
   public:
    using value_type = FinMorphism;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(HomCursor cursor) : cursor_(std::move(cursor)) { current_ = cursor_->next(); }

    const FinMorphism& operator*() const { return *current_; }
    const FinMorphism* operator->() const { return &*current_; }
    iterator& operator++() {
      current_ = cursor_->next();
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return !current_.has_value(); }

   private:
    std::optional<HomCursor> cursor_;
    std::optional<FinMorphism> current_;
  };

  iterator begin() const { return iterator(HomCursor(dom_, cod_)); }
  std::default_sentinel_t end() const { return {}; }

  /// |cod|^|dom|, saturating at SIZE_MAX.
  std::size_t size() const {
    const std::size_t base = cod_.cardinality(), exp = dom_.cardinality();
    std::size_t n = 1;
    for (std::size_t i = 0; i < exp; ++i) {
      if (base != 0 && n > SIZE_MAX / base) return SIZE_MAX;
      n *= base;
    }
    return n;
  }

 private:
  FinObject dom_;
  FinObject cod_;
};

inline HomSet enumerate_homs(const FinObject& a, const FinObject& b) { return HomSet(a, b); }

inline bool is_inhabited(const FinObject& b) { return b.cardinality() > 0; }

}  // namespace cornering::fin
