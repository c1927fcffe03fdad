#include "redtwo/gf2m.hpp"

#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace redtwo {

namespace {

// Defining polynomials as bitmasks; index = degree.  Degrees 1..16.
constexpr std::array<std::uint32_t, 17> kModuli = {
    0,
    0b10,                  // x           (F_2; never reduced against)
    0b111,                 // x^2+x+1
    0b1011,                // x^3+x+1
    0b10011,               // x^4+x+1
    0b100101,              // x^5+x^2+1
    0b1000011,             // x^6+x+1
    0b10000011,            // x^7+x+1
    0b100011011,           // x^8+x^4+x^3+x+1
    0b1000010001,          // x^9+x^4+1
    0b10000001001,         // x^10+x^3+1
    0b100000000101,        // x^11+x^2+1
    0b1000001010011,       // x^12+x^6+x^4+x+1
    0b10000000011011,      // x^13+x^4+x^3+x+1
    0b100010000100011,     // x^14+x^10+x^5+x+1
    0b1000000000000011,    // x^15+x+1
    0b10001000000001011,   // x^16+x^12+x^3+x+1
};

std::uint32_t gf_mul(std::uint32_t a, std::uint32_t b, int m, std::uint32_t mod) {
    std::uint64_t acc = 0;
    std::uint64_t x = a;
    while (b) {
        if (b & 1) acc ^= x;
        x <<= 1;
        b >>= 1;
    }
    // reduce degree < 2m against the modulus
    for (int d = 2 * m - 2; d >= m; --d) {
        if (acc >> d & 1) acc ^= static_cast<std::uint64_t>(mod) << (d - m);
    }
    return static_cast<std::uint32_t>(acc);
}

}  // namespace

FiniteField::FiniteField(int degree) : m_(degree) {
    if (degree < 1 || degree > kMaxDegree)
        throw UnsupportedDegree("finite field degree out of range: " + std::to_string(degree));
    mod_ = kModuli[static_cast<std::size_t>(degree)];
}

const FiniteField& FiniteField::of_degree(int m) {
    static std::map<int, FiniteField> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, FiniteField(m)).first;
    return it->second;
}

FFElement operator+(const FFElement& a, const FFElement& b) {
    if (a.field().degree() != b.field().degree()) {
        auto [x, y] = to_common_field(a, b);
        return x + y;
    }
    return FFElement(a.field(), a.bits_ ^ b.bits_);
}

FFElement operator*(const FFElement& a, const FFElement& b) {
    if (a.field().degree() != b.field().degree()) {
        auto [x, y] = to_common_field(a, b);
        return x * y;
    }
    const FiniteField& f = a.field();
    return FFElement(f, gf_mul(a.bits_, b.bits_, f.degree(), f.modulus()));
}

FFElement operator/(const FFElement& a, const FFElement& b) { return a * b.inverse(); }

FFElement FFElement::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in F_{2^m}");
    // order of the multiplicative group is 2^m - 1
    std::uint64_t e = (1ull << field().degree()) - 2;
    return pow(e);
}

FFElement FFElement::pow(std::uint64_t e) const {
    FFElement acc = FFElement::one(field());
    FFElement base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const FFElement& a, const FFElement& b) {
    if (!a.field_ || !b.field_) return a.field_ == b.field_ && a.bits_ == b.bits_;
    if (a.field().degree() == b.field().degree()) return a.bits_ == b.bits_;
    auto [x, y] = to_common_field(a, b);
    return x.bits() == y.bits();
}

std::string FFElement::str() const {
    if (bits_ == 0) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = field().degree() - 1; j >= 0; --j) {
        if (!(bits_ >> j & 1)) continue;
        if (!first) os << "+";
        if (j == 0)
            os << "1";
        else if (j == 1)
            os << "g";
        else
            os << "g^" << j;
        first = false;
    }
    return os.str();
}

FFElement embed(const FFElement& a, const FiniteField& target) {
    const FiniteField& src = a.field();
    int m = src.degree();
    int n = target.degree();
    if (m == n) return FFElement(target, a.bits());
    if (n % m != 0)
        throw UnsupportedDegree("no embedding F_{2^" + std::to_string(m) + "} -> F_{2^" +
                                std::to_string(n) + "}");
    if (m == 1) return FFElement(target, a.bits());
    // image of the source generator: smallest root of the source modulus
    std::uint32_t img = 0;
    bool found = false;
    for (std::uint32_t cand = 0; cand < (1u << n); ++cand) {
        // evaluate source defining polynomial at cand
        FFElement x(target, cand);
        FFElement acc = FFElement::zero(target);
        FFElement p = FFElement::one(target);
        std::uint32_t mod = src.modulus();
        for (int j = 0; j <= m; ++j) {
            if (mod >> j & 1) acc += p;
            p = p * x;
        }
        if (acc.is_zero()) {
            img = cand;
            found = true;
            break;
        }
    }
    if (!found) throw Error("defining polynomial has no root in extension (table bug)");
    FFElement g(target, img);
    FFElement acc = FFElement::zero(target);
    FFElement p = FFElement::one(target);
    for (int j = 0; j < m; ++j) {
        if (a.bits() >> j & 1) acc += p;
        p = p * g;
    }
    return acc;
}

std::pair<FFElement, FFElement> to_common_field(const FFElement& a, const FFElement& b) {
    int m = a.field().degree(), n = b.field().degree();
    int l = std::lcm(m, n);
    const FiniteField& big = FiniteField::of_degree(l);
    return {embed(a, big), embed(b, big)};
}

std::pair<FFElement, FFElement> solve_unit_quadratic(const FFElement& c) {
    const FiniteField& f = c.field();
    auto search = [](const FFElement& cc) -> std::vector<FFElement> {
        const FiniteField& g = cc.field();
        std::vector<FFElement> roots;
        for (std::uint32_t x = 0; x < (1u << g.degree()); ++x) {
            FFElement e(g, x);
            if ((e * e + cc * e + FFElement::one(g)).is_zero()) roots.push_back(e);
        }
        return roots;
    };
    std::vector<FFElement> roots = search(c);
    if (roots.empty()) {
        const FiniteField& ext = FiniteField::of_degree(2 * f.degree());
        roots = search(embed(c, ext));
    }
    if (roots.empty()) throw Error("unit quadratic has no root in the quadratic extension");
    if (roots.size() == 1) return {roots[0], roots[0]};  // double root (c = 0)
    if (roots[1].bits() < roots[0].bits()) std::swap(roots[0], roots[1]);
    return {roots[0], roots[1]};
}

}  // namespace redtwo
