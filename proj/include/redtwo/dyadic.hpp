#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "redtwo/errors.hpp"
#include "redtwo/valuation.hpp"

namespace redtwo {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// v2 of a nonzero integer.
std::int64_t v2(const BigInt& x);
// v2 of a nonzero rational.
std::int64_t v2(const BigRat& q);
// Inverse of an odd integer modulo 2^k.
BigInt inv_odd_mod2k(const BigInt& u, std::int64_t k);
// x mod 2^k reduced to [0, 2^k).
BigInt mod2k(const BigInt& x, std::int64_t k);

// One tracked 2-adic number: a coordinate of an extension element.
//
// Three states:
//   Zero   — certified exact zero.
//   Unit   — value 2^val * unit with unit odd, unit known modulo 2^prec
//            (prec = relative precision in bits).
//   Below  — only the bound v(x) >= val is known; the value vanished under
//            truncation and cannot be distinguished from zero.
//
// Values constructed from integers or rationals additionally carry the exact
// rational, so arithmetic chains on parsed inputs certify valuations and
// zeros with no precision loss.  The rational is dropped as soon as an
// inexact operand (e.g. a Hensel-lifted square root) enters.
class Dyadic {
public:
    enum class Kind { Zero, Unit, Below };

    Dyadic() : kind_(Kind::Zero), exact_(BigRat(0)) {}

    static Dyadic from_int(long n) { return from_rational(BigRat(n)); }
    static Dyadic from_int(const BigInt& n) { return from_rational(BigRat(n)); }
    static Dyadic from_rational(const BigRat& q);
    // Inexact unit-form value (used by Hensel lifting); unit must be odd.
    static Dyadic from_unit(std::int64_t val, const BigInt& unit, std::int64_t prec);
    static Dyadic below(std::int64_t bound);
    static Dyadic zero() { return Dyadic(); }

    Kind kind() const { return kind_; }
    bool is_exact() const { return exact_.has_value(); }
    bool is_certified_zero() const { return kind_ == Kind::Zero; }
    bool is_unit_form() const { return kind_ == Kind::Unit; }
    bool is_below() const { return kind_ == Kind::Below; }

    // Valuation; for Below states this is only a lower bound.
    std::int64_t val_or_bound() const { return val_; }
    const BigRat& exact_value() const { return *exact_; }

    // Unit part modulo 2^p (materializes exact rationals on demand).
    BigInt unit_mod(std::int64_t p) const;
    std::int64_t prec() const;  // relative precision; huge sentinel when exact

    Dyadic operator-() const;
    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator/(const Dyadic& a, const Dyadic& b);
    Dyadic& operator+=(const Dyadic& b) { return *this = *this + b; }
    Dyadic& operator-=(const Dyadic& b) { return *this = *this - b; }
    Dyadic& operator*=(const Dyadic& b) { return *this = *this * b; }
    Dyadic& operator/=(const Dyadic& b) { return *this = *this / b; }

    // Multiply by 2^k.
    Dyadic shifted(std::int64_t k) const;

    // Exact 2-adic valuation; throws InsufficientPrecision on Below states.
    Valuation valuation() const;

    // Value mod 2 in {0,1}; requires v >= 0 certain.
    int residue_bit() const;

    // True when the difference is a certified zero (exact paths) or vanishes
    // to the full tracked precision.
    bool same_value(const Dyadic& b) const;

    std::string str() const;

    static constexpr std::int64_t kExactPrec = (1LL << 40);

private:
    Kind kind_;
    std::optional<BigRat> exact_;
    std::int64_t val_ = 0;
    BigInt unit_ = 0;
    std::int64_t prec_ = 0;

    void derive_from_exact();
};

}  // namespace redtwo
