#pragma once

#include <memory>
#include <string>
#include <vector>

#include "redtwo/dyadic.hpp"
#include "redtwo/gf2m.hpp"
#include "redtwo/valuation.hpp"

namespace redtwo {

// A finite extension E of Q_2 presented as an unramified-then-Eisenstein
// tower: E = Q_2(omega)(pi) with omega a root of the canonical degree-f
// unramified polynomial and pi a root of a degree-e Eisenstein polynomial
// with rational coefficients.  The value group is (1/e)Z and the residue
// field is F_{2^f}.  Immutable after construction.
class ExtensionTower {
public:
    // eisenstein: monic coefficient list c_0..c_e with c_e = 1, required
    // Eisenstein for e >= 2 (v(c_i) >= 1, v(c_0) = 1).  Pass {} for e = 1.
    static std::shared_ptr<const ExtensionTower> make(int f, int e,
                                                      std::vector<BigRat> eisenstein,
                                                      std::int64_t precision = 64);

    int residue_degree() const { return f_; }
    int ramification_index() const { return e_; }
    int total_degree() const { return e_ * f_; }
    std::int64_t working_precision() const { return prec_; }
    const FiniteField& residue_field() const { return FiniteField::of_degree(f_); }
    const std::vector<BigRat>& eisenstein() const { return eis_; }
    // Reduced product of basis monomials: row-major tables indexed by
    // (i*f+j, k*f+l), each entry a coordinate vector of rationals.
    const std::vector<BigRat>& basis_product(int u, int v) const {
        return prod_[static_cast<std::size_t>(u) * static_cast<std::size_t>(e_ * f_) +
                     static_cast<std::size_t>(v)];
    }

    std::string str() const;

private:
    ExtensionTower(int f, int e, std::vector<BigRat> eis, std::int64_t prec);
    int f_;
    int e_;
    std::vector<BigRat> eis_;
    std::int64_t prec_;
    std::vector<std::vector<BigRat>> prod_;
};

using TowerPtr = std::shared_ptr<const ExtensionTower>;

// Element of a tower in the basis {pi^i omega^j : 0 <= i < e, 0 <= j < f},
// one tracked 2-adic coordinate per basis monomial.  Valuations are exact
// whenever every relevant coordinate is certified (the basis monomials have
// pairwise-independent valuation data, so no cross-coordinate cancellation
// can occur).
class ExtElement {
public:
    ExtElement() = default;
    ExtElement(TowerPtr tower, std::vector<Dyadic> coords);

    static ExtElement zero(const TowerPtr& t);
    static ExtElement one(const TowerPtr& t);
    static ExtElement from_rational(const TowerPtr& t, const BigRat& q);
    static ExtElement from_int(const TowerPtr& t, const BigInt& n) {
        return from_rational(t, BigRat(n));
    }
    static ExtElement pi(const TowerPtr& t);     // Eisenstein root (e >= 2)
    static ExtElement omega(const TowerPtr& t);  // unramified root (f >= 2)

    const TowerPtr& tower() const { return tower_; }
    const std::vector<Dyadic>& coords() const { return coords_; }
    bool attached() const { return tower_ != nullptr; }

    bool is_certified_zero() const;

    friend ExtElement operator+(const ExtElement& a, const ExtElement& b);
    friend ExtElement operator-(const ExtElement& a, const ExtElement& b);
    friend ExtElement operator*(const ExtElement& a, const ExtElement& b);
    friend ExtElement operator/(const ExtElement& a, const ExtElement& b);
    ExtElement operator-() const;
    ExtElement& operator+=(const ExtElement& b) { return *this = *this + b; }
    ExtElement& operator-=(const ExtElement& b) { return *this = *this - b; }
    ExtElement& operator*=(const ExtElement& b) { return *this = *this * b; }
    ExtElement& operator/=(const ExtElement& b) { return *this = *this / b; }

    ExtElement pow(long n) const;  // n may be negative
    ExtElement scaled(const BigRat& q) const;

    // Exact valuation in (1/e)Z, +infinity for certified zero.
    Valuation valuation() const;

    // Image in the residue field F_{2^f}; requires v >= 0.
    FFElement residue() const;

    // Difference is certified zero or vanishes to working precision.
    bool same_value(const ExtElement& b) const;

    std::string str() const;

private:
    TowerPtr tower_;
    std::vector<Dyadic> coords_;
    void check_same_tower(const ExtElement& b) const;
};

// Square root of a rational unit u (requires u odd with u = 1 mod 8), as a
// tracked unit with the given relative precision; takes the root = 1 mod 4.
Dyadic hensel_sqrt_unit(const BigRat& u, std::int64_t prec);

// Convenience tower builders used by the expression layer and tests.
TowerPtr tower_q2(std::int64_t precision = 64);                      // Q_2 itself
TowerPtr tower_unramified(int f, std::int64_t precision = 64);       // Q_2(omega)
TowerPtr tower_kummer(int q, std::int64_t precision = 64);           // x^q - 2
TowerPtr tower_sqrt_even(const BigInt& d, std::int64_t prec = 64);   // x^2 - d, v(d) = 1
TowerPtr tower_sqrt_odd3(const BigInt& d, std::int64_t prec = 64);   // x^2-2x+(1-d), d=3 mod 4

}  // namespace redtwo
