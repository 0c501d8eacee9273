#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace soltes {

/// A value of T extended with a distinguished infinite element.
///
/// Infinity compares greater than every finite value and absorbs addition.
/// Reading the value of an infinite element throws.
template <typename T>
class Extended {
 public:
  Extended() : value_(T{}) {}
  Extended(T value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)

  static Extended infinite() {
    Extended e;
    e.value_.reset();
    return e;
  }

  bool is_finite() const { return value_.has_value(); }
  bool is_infinite() const { return !value_.has_value(); }

  const T& value() const {
    if (!value_) throw std::logic_error("value() of an infinite Extended");
    return *value_;
  }

  Extended& operator+=(const Extended& other) {
    if (!value_ || !other.value_) {
      value_.reset();
    } else {
      *value_ += *other.value_;
    }
    return *this;
  }

  friend Extended operator+(Extended a, const Extended& b) { return a += b; }

  friend bool operator==(const Extended& a, const Extended& b) { return a.value_ == b.value_; }

  friend std::strong_ordering operator<=>(const Extended& a, const Extended& b) {
    if (!a.value_ || !b.value_) {
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    if (*a.value_ < *b.value_) return std::strong_ordering::less;
    if (*b.value_ < *a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Extended& e) {
    if (!e.value_) return os << "inf";
    return os << *e.value_;
  }

 private:
  std::optional<T> value_;
};

/// Difference of two extended values; infinite if either side is.
template <typename Out, typename T>
Extended<Out> extended_difference(const Extended<T>& a, const Extended<T>& b) {
  if (a.is_infinite() || b.is_infinite()) return Extended<Out>::infinite();
  return Extended<Out>(static_cast<Out>(a.value()) - static_cast<Out>(b.value()));
}

}  // namespace soltes
