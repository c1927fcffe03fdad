#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "redtwo/errors.hpp"

namespace redtwo {

// F_{2^m} with a fixed defining polynomial per degree, so residue embeddings
// are reproducible.  Elements are m-bit vectors; bit j is the coefficient of
// g^j for the generator g (the class of x).
class FiniteField {
public:
    explicit FiniteField(int degree);

    int degree() const { return m_; }
    // Defining polynomial as a bitmask including the leading term.
    std::uint32_t modulus() const { return mod_; }

    static const FiniteField& of_degree(int m);  // shared canonical instances

    // Highest degree with a table entry (root search for unit quadratics over
    // F_{2^8} needs its quadratic extension).
    static constexpr int kMaxDegree = 16;
    // Cap for user-constructed fields.
    static constexpr int kMaxUserDegree = 8;

private:
    int m_;
    std::uint32_t mod_;
};

class FFElement {
public:
    FFElement() : field_(nullptr), bits_(0) {}
    FFElement(const FiniteField& f, std::uint32_t bits) : field_(&f), bits_(bits & mask()) {}

    static FFElement zero(const FiniteField& f) { return FFElement(f, 0); }
    static FFElement one(const FiniteField& f) { return FFElement(f, 1); }
    static FFElement gen(const FiniteField& f) { return FFElement(f, f.degree() >= 2 ? 2u : 1u); }

    const FiniteField& field() const {
        if (!field_) throw Error("uninitialized finite field element");
        return *field_;
    }
    std::uint32_t bits() const { return bits_; }
    bool is_zero() const { return bits_ == 0; }
    bool attached() const { return field_ != nullptr; }

    friend FFElement operator+(const FFElement& a, const FFElement& b);
    friend FFElement operator-(const FFElement& a, const FFElement& b) { return a + b; }
    friend FFElement operator*(const FFElement& a, const FFElement& b);
    friend FFElement operator/(const FFElement& a, const FFElement& b);
    FFElement operator-() const { return *this; }
    FFElement& operator+=(const FFElement& b) { return *this = *this + b; }
    FFElement& operator-=(const FFElement& b) { return *this = *this + b; }
    FFElement& operator*=(const FFElement& b) { return *this = *this * b; }

    FFElement inverse() const;
    FFElement pow(std::uint64_t e) const;
    FFElement frobenius() const { return *this * *this; }

    friend bool operator==(const FFElement& a, const FFElement& b);
    friend bool operator!=(const FFElement& a, const FFElement& b) { return !(a == b); }

    // Rendered as a polynomial in g, e.g. "0", "1", "g", "g+1", "g^2+g".
    std::string str() const;

private:
    const FiniteField* field_;
    std::uint32_t bits_;
    std::uint32_t mask() const { return (1u << field_->degree()) - 1; }
};

// Image of a under the canonical embedding F_{2^m} -> F_{2^n}, m | n.
// The embedding sends the degree-m generator to the lexicographically
// smallest root of its defining polynomial in the bigger field.
FFElement embed(const FFElement& a, const FiniteField& target);

// Smallest common field of both operands' fields (degree lcm), with both
// embedded; used by mixed-field arithmetic.
std::pair<FFElement, FFElement> to_common_field(const FFElement& a, const FFElement& b);

// Both roots of x^2 + c x + 1 over F_{2^m} or its quadratic extension,
// ordered lexicographically by bit pattern.  c = 0 yields the double root 1.
// The roots multiply to 1 and sum to c (after embedding c).
std::pair<FFElement, FFElement> solve_unit_quadratic(const FFElement& c);

}  // namespace redtwo
