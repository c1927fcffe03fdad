#include "redtwo/dyadic.hpp"

#include <sstream>

namespace redtwo {

namespace mp = boost::multiprecision;

std::int64_t v2(const BigInt& x) {
    if (x.is_zero()) throw Error("v2 of integer zero");
    return static_cast<std::int64_t>(mp::lsb(x < 0 ? BigInt(-x) : x));
}

std::int64_t v2(const BigRat& q) {
    if (q.is_zero()) throw Error("v2 of rational zero");
    return v2(numerator(q)) - v2(denominator(q));
}

BigInt mod2k(const BigInt& x, std::int64_t k) {
    if (k <= 0) return 0;
    BigInt m = BigInt(1) << static_cast<unsigned>(k);
    BigInt r = x % m;
    if (r < 0) r += m;
    return r;
}

BigInt inv_odd_mod2k(const BigInt& u, std::int64_t k) {
    if (u.is_zero() || (u & 1) == 0) throw Error("inverse of even integer mod 2^k");
    // Newton: x <- x(2 - ux) doubles the number of correct bits.
    BigInt x = 1;
    std::int64_t bits = 1;
    while (bits < k) {
        bits *= 2;
        BigInt m = BigInt(1) << static_cast<unsigned>(std::min(bits, k));
        x = (x * (2 - ((u % m) * x) % m)) % m;
        if (x < 0) x += m;
    }
    return mod2k(x, k);
}

Dyadic Dyadic::from_rational(const BigRat& q) {
    Dyadic d;
    d.exact_ = q;
    d.derive_from_exact();
    return d;
}

Dyadic Dyadic::from_unit(std::int64_t val, const BigInt& unit, std::int64_t prec) {
    if ((unit & 1) == 0) throw Error("unit part must be odd");
    if (prec <= 0) return below(val);
    Dyadic d;
    d.exact_.reset();
    d.kind_ = Kind::Unit;
    d.val_ = val;
    d.prec_ = prec;
    d.unit_ = mod2k(unit, prec);
    return d;
}

Dyadic Dyadic::below(std::int64_t bound) {
    Dyadic d;
    d.exact_.reset();
    d.kind_ = Kind::Below;
    d.val_ = bound;
    return d;
}

void Dyadic::derive_from_exact() {
    if (exact_->is_zero()) {
        kind_ = Kind::Zero;
        val_ = 0;
        unit_ = 0;
    } else {
        kind_ = Kind::Unit;
        val_ = v2(*exact_);
        unit_ = 0;  // materialized lazily
    }
    prec_ = kExactPrec;
}

BigInt Dyadic::unit_mod(std::int64_t p) const {
    if (kind_ != Kind::Unit) throw Error("unit_mod on non-unit value");
    if (exact_) {
        BigInt n = numerator(*exact_);
        BigInt d = denominator(*exact_);
        bool neg = n < 0;
        if (neg) n = -n;
        n >>= static_cast<unsigned>(v2(n));
        std::int64_t dv = v2(d);
        d >>= static_cast<unsigned>(dv);
        BigInt r = (mod2k(n, p) * inv_odd_mod2k(d, p)) % (BigInt(1) << static_cast<unsigned>(p));
        if (neg) r = -r;
        return mod2k(r, p);
    }
    if (p > prec_) throw InsufficientPrecision("requested more unit bits than tracked");
    return mod2k(unit_, p);
}

std::int64_t Dyadic::prec() const { return exact_ ? kExactPrec : prec_; }

Dyadic Dyadic::operator-() const {
    if (kind_ == Kind::Zero) return *this;
    if (kind_ == Kind::Below) return *this;
    if (exact_) return from_rational(-*exact_);
    return from_unit(val_, mod2k(-unit_, prec_), prec_);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    using K = Dyadic::Kind;
    if (a.kind_ == K::Zero) return b;
    if (b.kind_ == K::Zero) return a;
    if (a.exact_ && b.exact_) return Dyadic::from_rational(*a.exact_ + *b.exact_);
    if (a.kind_ == K::Below && b.kind_ == K::Below)
        return Dyadic::below(std::min(a.val_, b.val_));
    if (a.kind_ == K::Below || b.kind_ == K::Below) {
        const Dyadic& u = (a.kind_ == K::Unit) ? a : b;
        const Dyadic& w = (a.kind_ == K::Unit) ? b : a;
        if (u.val_ >= w.val_) return Dyadic::below(w.val_);
        std::int64_t p = std::min(u.prec(), w.val_ - u.val_);
        return Dyadic::from_unit(u.val_, u.unit_mod(p), p);
    }
    // both unit forms
    const Dyadic& lo = (a.val_ <= b.val_) ? a : b;
    const Dyadic& hi = (a.val_ <= b.val_) ? b : a;
    if (lo.val_ < hi.val_) {
        std::int64_t p = std::min(lo.prec(), hi.val_ + hi.prec() - lo.val_);
        std::int64_t sh = hi.val_ - lo.val_;
        if (sh >= p) return Dyadic::from_unit(lo.val_, lo.unit_mod(p), p);
        BigInt s = lo.unit_mod(p) + (hi.unit_mod(p - sh) << static_cast<unsigned>(sh));
        return Dyadic::from_unit(lo.val_, mod2k(s, p), p);
    }
    std::int64_t p = std::min(lo.prec(), hi.prec());
    BigInt s = mod2k(lo.unit_mod(p) + hi.unit_mod(p), p);
    if (s.is_zero()) return Dyadic::below(lo.val_ + p);
    std::int64_t k = v2(s);
    if (k >= p) return Dyadic::below(lo.val_ + p);
    return Dyadic::from_unit(lo.val_ + k, s >> static_cast<unsigned>(k), p - k);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    using K = Dyadic::Kind;
    if (a.kind_ == K::Zero || b.kind_ == K::Zero) return Dyadic::zero();
    if (a.exact_ && b.exact_) return Dyadic::from_rational(*a.exact_ * *b.exact_);
    if (a.kind_ == K::Below || b.kind_ == K::Below)
        return Dyadic::below(a.val_ + b.val_);
    std::int64_t p = std::min(a.prec(), b.prec());
    return Dyadic::from_unit(a.val_ + b.val_, mod2k(a.unit_mod(p) * b.unit_mod(p), p), p);
}

Dyadic operator/(const Dyadic& a, const Dyadic& b) {
    using K = Dyadic::Kind;
    if (b.kind_ == K::Zero) throw DivisionByZero("division by certified zero");
    if (b.kind_ == K::Below)
        throw InsufficientPrecision("division by value indistinguishable from zero");
    if (a.kind_ == K::Zero) return Dyadic::zero();
    if (a.exact_ && b.exact_) return Dyadic::from_rational(*a.exact_ / *b.exact_);
    if (a.kind_ == K::Below) return Dyadic::below(a.val_ - b.val_);
    std::int64_t p = std::min(a.prec(), b.prec());
    BigInt q = mod2k(a.unit_mod(p) * inv_odd_mod2k(b.unit_mod(p), p), p);
    return Dyadic::from_unit(a.val_ - b.val_, q, p);
}

Dyadic Dyadic::shifted(std::int64_t k) const {
    if (kind_ == Kind::Zero) return *this;
    if (exact_) {
        BigRat q = *exact_;
        if (k >= 0)
            q *= BigRat(BigInt(1) << static_cast<unsigned>(k));
        else
            q /= BigRat(BigInt(1) << static_cast<unsigned>(-k));
        return from_rational(q);
    }
    Dyadic d = *this;
    d.val_ += k;
    return d;
}

Valuation Dyadic::valuation() const {
    switch (kind_) {
        case Kind::Zero:
            return Valuation::infinity();
        case Kind::Unit:
            return Valuation::integer(val_);
        case Kind::Below:
        default:
            throw InsufficientPrecision("valuation undecidable: value vanishes to precision 2^" +
                                        std::to_string(val_));
    }
}

int Dyadic::residue_bit() const {
    switch (kind_) {
        case Kind::Zero:
            return 0;
        case Kind::Unit:
            if (val_ < 0) throw NegativeValuation("residue of value with v < 0");
            return val_ == 0 ? 1 : 0;
        case Kind::Below:
        default:
            if (val_ >= 1) return 0;
            throw InsufficientPrecision("residue undecidable at tracked precision");
    }
}

bool Dyadic::same_value(const Dyadic& b) const {
    Dyadic d = *this - b;
    return d.kind_ == Kind::Zero || d.kind_ == Kind::Below;
}

std::string Dyadic::str() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Zero:
            os << "0";
            break;
        case Kind::Unit:
            if (exact_)
                os << *exact_;
            else
                os << "2^" << val_ << "*(" << unit_ << " mod 2^" << prec_ << ")";
            break;
        case Kind::Below:
            os << "O(2^" << val_ << ")";
            break;
    }
    return os.str();
}

}  // namespace redtwo
