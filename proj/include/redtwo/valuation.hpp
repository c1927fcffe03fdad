#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "redtwo/errors.hpp"

namespace redtwo {

// 2-adic valuation normalized so v(2) = 1.  Values live in (1/e)Z for the
// ramification index e of the ambient tower, plus +infinity for certified
// zero.  Stored in lowest terms.
class Valuation {
public:
    constexpr Valuation() : num_(0), den_(1), inf_(false) {}
    Valuation(std::int64_t num, std::int64_t den) : num_(num), den_(den), inf_(false) {
        if (den_ == 0) throw Error("valuation with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }
    static Valuation integer(std::int64_t n) { return Valuation(n, 1); }
    static Valuation infinity() {
        Valuation v;
        v.inf_ = true;
        return v;
    }

    bool is_infinite() const { return inf_; }
    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return inf_ || den_ == 1; }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
    friend bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }

    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.inf_ || b.inf_) return infinity();
        return Valuation(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Valuation operator-(const Valuation& a, const Valuation& b) {
        if (a.inf_) return infinity();
        if (b.inf_) throw Error("cannot subtract infinite valuation");
        return Valuation(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    Valuation operator-() const {
        if (inf_) throw Error("cannot negate infinite valuation");
        return Valuation(-num_, den_);
    }
    friend Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

    bool is_zero() const { return !inf_ && num_ == 0; }
    bool positive() const { return inf_ || num_ > 0; }
    bool negative() const { return !inf_ && num_ < 0; }

    std::string str() const {
        if (inf_) return "inf";
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    friend std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.str(); }

private:
    std::int64_t num_;
    std::int64_t den_;
    bool inf_;
};

}  // namespace redtwo
