#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "lwskit/errors.hpp"

namespace lwskit {

// Extended integer: int64 value or +infinity. INT64_MAX is reserved as the
// infinity sentinel, so the struct stays 8 bytes and trivially copyable.
// Arithmetic is checked: finite overflow throws, it never wraps.
//
// Multiplication convention: 0 * inf = 0 (min-plus measure convention; needed
// so 0/1 selector vectors can multiply sub-tensors containing inf).
// negative * inf is an error -- the domain has no -infinity.
class ExtInt {
 public:
  constexpr ExtInt() : raw_(0) {}
  constexpr ExtInt(int64_t v) : raw_(v) {}  // NOLINT: implicit by design
  static constexpr ExtInt inf() { return ExtInt(kInf, Tag{}); }

  bool is_inf() const { return raw_ == kInf; }
  // Finite value; throws on infinity.
  int64_t value() const {
    if (is_inf()) throw overflow_error("ExtInt::value() on infinity");
    return raw_;
  }
  // Raw representation (INT64_MAX = infinity); for hot loops.
  int64_t raw() const { return raw_; }
  static constexpr int64_t raw_inf() { return kInf; }
  static ExtInt from_raw(int64_t r) { return ExtInt(r, Tag{}); }

  friend ExtInt operator+(ExtInt a, ExtInt b) {
    if (a.is_inf() || b.is_inf()) return inf();
    int64_t r;
    if (__builtin_add_overflow(a.raw_, b.raw_, &r) || r == kInf)
      throw overflow_error("ExtInt add overflow");
    return ExtInt(r);
  }

  friend ExtInt operator*(ExtInt a, ExtInt b) {
    if (a.raw_ == 0 || b.raw_ == 0) return ExtInt(0);
    if (a.is_inf() || b.is_inf()) {
      int64_t fin = a.is_inf() ? b.raw_ : a.raw_;
      if (fin < 0 && fin != kInf)
        throw overflow_error("ExtInt: negative * infinity undefined");
      return inf();
    }
    int64_t r;
    if (__builtin_mul_overflow(a.raw_, b.raw_, &r) || r == kInf)
      throw overflow_error("ExtInt mul overflow");
    return ExtInt(r);
  }

  friend bool operator==(ExtInt a, ExtInt b) { return a.raw_ == b.raw_; }
  friend bool operator!=(ExtInt a, ExtInt b) { return a.raw_ != b.raw_; }
  // inf compares greater than every finite value (sentinel is INT64_MAX).
  friend bool operator<(ExtInt a, ExtInt b) { return a.raw_ < b.raw_; }
  friend bool operator<=(ExtInt a, ExtInt b) { return a.raw_ <= b.raw_; }

  static ExtInt min(ExtInt a, ExtInt b) { return a < b ? a : b; }

  std::string str() const { return is_inf() ? "inf" : std::to_string(raw_); }

 private:
  struct Tag {};
  constexpr ExtInt(int64_t r, Tag) : raw_(r) {}
  static constexpr int64_t kInf = std::numeric_limits<int64_t>::max();
  int64_t raw_;
};

}  // namespace lwskit
