#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace milnor {

// Natural number extended with infinity. Carrier of orders, intersection
// multiplicities and Milnor numbers; n < infinity for every finite n, and
// n + infinity = infinity.
class ExtNat {
  public:
    constexpr ExtNat() = default;

    static constexpr ExtNat of(std::uint64_t n) {
        ExtNat e;
        e.value_ = n;
        e.finite_ = true;
        return e;
    }

    static constexpr ExtNat infinity() {
        ExtNat e;
        e.finite_ = false;
        return e;
    }

    constexpr bool is_finite() const { return finite_; }
    constexpr bool is_infinite() const { return !finite_; }

    constexpr std::uint64_t value() const {
        if (!finite_) throw std::logic_error("ExtNat: value() on infinity");
        return value_;
    }

    friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
        if (!a.finite_ || !b.finite_) return infinity();
        return of(a.value_ + b.value_);
    }

    ExtNat& operator+=(ExtNat other) { return *this = *this + other; }

    friend constexpr bool operator==(ExtNat a, ExtNat b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr bool operator!=(ExtNat a, ExtNat b) { return !(a == b); }

    friend constexpr bool operator<(ExtNat a, ExtNat b) {
        if (!a.finite_) return false;           // infinity < x never
        if (!b.finite_) return true;            // finite < infinity
        return a.value_ < b.value_;
    }
    friend constexpr bool operator<=(ExtNat a, ExtNat b) { return a < b || a == b; }
    friend constexpr bool operator>(ExtNat a, ExtNat b) { return b < a; }
    friend constexpr bool operator>=(ExtNat a, ExtNat b) { return b <= a; }

    friend constexpr bool operator==(ExtNat a, std::uint64_t n) { return a == of(n); }
    friend constexpr bool operator<=(ExtNat a, std::uint64_t n) { return a <= of(n); }
    friend constexpr bool operator<(ExtNat a, std::uint64_t n) { return a < of(n); }
    friend constexpr bool operator>(ExtNat a, std::uint64_t n) { return a > of(n); }

    std::string to_string() const {
        return finite_ ? std::to_string(value_) : std::string("infinity");
    }

    friend std::ostream& operator<<(std::ostream& os, ExtNat e) {
        return os << e.to_string();
    }

  private:
    std::uint64_t value_ = 0;
    bool finite_ = true;
};

}  // namespace milnor
