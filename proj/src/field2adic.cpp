#include "redtwo/field2adic.hpp"

#include <array>
#include <sstream>

namespace redtwo {

namespace {

// Canonical unramified defining polynomials (monic, integer, irreducible
// mod 2); index = residue degree.  Chosen once so residue embeddings are
// reproducible across runs; degree 2 lifts F_4 through a cube root of unity.
const std::array<std::vector<long>, 5> kUnramified = {{
    {},
    {},              // f = 1: no generator
    {1, 1, 1},       // y^2 + y + 1
    {1, 1, 0, 1},    // y^3 + y + 1
    {1, 1, 0, 0, 1}, // y^4 + y + 1
}};

}  // namespace

ExtensionTower::ExtensionTower(int f, int e, std::vector<BigRat> eis, std::int64_t prec)
    : f_(f), e_(e), eis_(std::move(eis)), prec_(prec) {
    const int n = e_ * f_;
    // pi^m for m in [0, 2e-2] over the pi-power basis, rational coefficients
    std::vector<std::vector<BigRat>> pipow(static_cast<std::size_t>(2 * e_ - 1));
    for (int m = 0; m <= 2 * e_ - 2; ++m) {
        std::vector<BigRat>& row = pipow[static_cast<std::size_t>(m)];
        row.assign(static_cast<std::size_t>(e_), BigRat(0));
        if (m < e_) {
            row[static_cast<std::size_t>(m)] = 1;
        } else {
            // pi^m = pi^(m-e) * pi^e = pi^(m-e) * (-sum c_i pi^i)
            const std::vector<BigRat>& lower = pipow[static_cast<std::size_t>(m - e_)];
            std::vector<BigRat> acc(static_cast<std::size_t>(2 * e_ - 1), BigRat(0));
            for (int i = 0; i < e_; ++i) {
                if (lower[static_cast<std::size_t>(i)].is_zero()) continue;
                for (int k = 0; k < e_; ++k) {
                    if (eis_[static_cast<std::size_t>(k)].is_zero()) continue;
                    acc[static_cast<std::size_t>(i + k)] -=
                        lower[static_cast<std::size_t>(i)] * eis_[static_cast<std::size_t>(k)];
                }
            }
            // acc may still have degree >= e when e >= 2 and m-e+k >= e;
            // fold down using rows already computed (they have lower index)
            for (int d = 2 * e_ - 2; d >= e_; --d) {
                BigRat c = acc[static_cast<std::size_t>(d)];
                if (c.is_zero()) continue;
                acc[static_cast<std::size_t>(d)] = 0;
                const std::vector<BigRat>& rep = pipow[static_cast<std::size_t>(d)];
                for (int k = 0; k < e_; ++k) acc[static_cast<std::size_t>(k)] += c * rep[static_cast<std::size_t>(k)];
            }
            row.assign(acc.begin(), acc.begin() + e_);
        }
    }
    // omega^m for m in [0, 2f-2] over the omega-power basis, integer coeffs
    std::vector<std::vector<BigRat>> ompow(static_cast<std::size_t>(2 * f_ - 1));
    for (int m = 0; m <= 2 * f_ - 2; ++m) {
        std::vector<BigRat>& row = ompow[static_cast<std::size_t>(m)];
        row.assign(static_cast<std::size_t>(f_), BigRat(0));
        if (m < f_) {
            row[static_cast<std::size_t>(m)] = 1;
        } else {
            const std::vector<long>& u = kUnramified[static_cast<std::size_t>(f_)];
            const std::vector<BigRat>& lower = ompow[static_cast<std::size_t>(m - f_)];
            std::vector<BigRat> acc(static_cast<std::size_t>(2 * f_ - 1), BigRat(0));
            for (int i = 0; i < f_; ++i) {
                if (lower[static_cast<std::size_t>(i)].is_zero()) continue;
                for (int k = 0; k < f_; ++k)
                    acc[static_cast<std::size_t>(i + k)] -=
                        lower[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(k)];
            }
            for (int d = 2 * f_ - 2; d >= f_; --d) {
                BigRat c = acc[static_cast<std::size_t>(d)];
                if (c.is_zero()) continue;
                acc[static_cast<std::size_t>(d)] = 0;
                const std::vector<BigRat>& rep = ompow[static_cast<std::size_t>(d)];
                for (int k = 0; k < f_; ++k) acc[static_cast<std::size_t>(k)] += c * rep[static_cast<std::size_t>(k)];
            }
            row.assign(acc.begin(), acc.begin() + f_);
        }
    }
    // full basis product table
    prod_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), {});
    for (int i = 0; i < e_; ++i)
        for (int j = 0; j < f_; ++j)
            for (int k = 0; k < e_; ++k)
                for (int l = 0; l < f_; ++l) {
                    std::vector<BigRat> out(static_cast<std::size_t>(n), BigRat(0));
                    const std::vector<BigRat>& pr = pipow[static_cast<std::size_t>(i + k)];
                    const std::vector<BigRat>& om = ompow[static_cast<std::size_t>(j + l)];
                    for (int a = 0; a < e_; ++a) {
                        if (pr[static_cast<std::size_t>(a)].is_zero()) continue;
                        for (int b = 0; b < f_; ++b) {
                            if (om[static_cast<std::size_t>(b)].is_zero()) continue;
                            out[static_cast<std::size_t>(a * f_ + b)] +=
                                pr[static_cast<std::size_t>(a)] * om[static_cast<std::size_t>(b)];
                        }
                    }
                    prod_[static_cast<std::size_t>(i * f_ + j) * static_cast<std::size_t>(n) +
                          static_cast<std::size_t>(k * f_ + l)] = std::move(out);
                }
}

std::shared_ptr<const ExtensionTower> ExtensionTower::make(int f, int e,
                                                           std::vector<BigRat> eisenstein,
                                                           std::int64_t precision) {
    if (f < 1 || e < 1 || e * f > 8)
        throw UnsupportedDegree("tower degree out of range: e*f = " + std::to_string(e * f));
    if (f > 4) throw UnsupportedDegree("no canonical unramified polynomial for f > 4");
    if (precision < 16) throw Error("working precision must be at least 16");
    if (e == 1) {
        eisenstein = {BigRat(0), BigRat(1)};  // placeholder x, never used
    } else {
        if (static_cast<int>(eisenstein.size()) != e + 1)
            throw NotEisenstein("need e+1 coefficients for the Eisenstein polynomial");
        if (eisenstein.back() != 1)
            throw NotEisenstein("Eisenstein polynomial must be monic");
        for (int i = 1; i < e; ++i) {
            const BigRat& c = eisenstein[static_cast<std::size_t>(i)];
            if (!c.is_zero() && v2(c) < 1)
                throw NotEisenstein("coefficient of x^" + std::to_string(i) +
                                    " has valuation < 1");
        }
        const BigRat& c0 = eisenstein[0];
        if (c0.is_zero() || v2(c0) != 1)
            throw NotEisenstein("constant term must have valuation exactly 1");
    }
    return std::shared_ptr<const ExtensionTower>(
        new ExtensionTower(f, e, std::move(eisenstein), precision));
}

std::string ExtensionTower::str() const {
    std::ostringstream os;
    os << "Q2(f=" << f_ << ",e=" << e_ << ")";
    return os.str();
}

ExtElement::ExtElement(TowerPtr tower, std::vector<Dyadic> coords)
    : tower_(std::move(tower)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != tower_->total_degree())
        throw Error("coordinate vector length mismatch");
}

ExtElement ExtElement::zero(const TowerPtr& t) {
    return ExtElement(t, std::vector<Dyadic>(static_cast<std::size_t>(t->total_degree())));
}

ExtElement ExtElement::one(const TowerPtr& t) { return from_rational(t, BigRat(1)); }

ExtElement ExtElement::from_rational(const TowerPtr& t, const BigRat& q) {
    ExtElement x = zero(t);
    x.coords_[0] = Dyadic::from_rational(q);
    return x;
}

ExtElement ExtElement::pi(const TowerPtr& t) {
    if (t->ramification_index() < 2) throw Error("tower has no Eisenstein root");
    ExtElement x = zero(t);
    x.coords_[static_cast<std::size_t>(t->residue_degree())] = Dyadic::from_int(1L);
    return x;
}

ExtElement ExtElement::omega(const TowerPtr& t) {
    if (t->residue_degree() < 2) throw Error("tower has no unramified root");
    ExtElement x = zero(t);
    x.coords_[1] = Dyadic::from_int(1L);
    return x;
}

void ExtElement::check_same_tower(const ExtElement& b) const {
    if (tower_.get() != b.tower_.get()) throw RingMismatch("elements of different towers");
}

bool ExtElement::is_certified_zero() const {
    for (const Dyadic& c : coords_)
        if (!c.is_certified_zero()) return false;
    return true;
}

ExtElement operator+(const ExtElement& a, const ExtElement& b) {
    a.check_same_tower(b);
    std::vector<Dyadic> out(a.coords_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coords_[i] + b.coords_[i];
    return ExtElement(a.tower_, std::move(out));
}

ExtElement operator-(const ExtElement& a, const ExtElement& b) { return a + (-b); }

ExtElement ExtElement::operator-() const {
    std::vector<Dyadic> out(coords_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = -coords_[i];
    return ExtElement(tower_, std::move(out));
}

ExtElement operator*(const ExtElement& a, const ExtElement& b) {
    a.check_same_tower(b);
    const int n = a.tower_->total_degree();
    std::vector<Dyadic> out(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
        if (a.coords_[static_cast<std::size_t>(u)].is_certified_zero()) continue;
        for (int v = 0; v < n; ++v) {
            if (b.coords_[static_cast<std::size_t>(v)].is_certified_zero()) continue;
            Dyadic c = a.coords_[static_cast<std::size_t>(u)] * b.coords_[static_cast<std::size_t>(v)];
            const std::vector<BigRat>& rep = a.tower_->basis_product(u, v);
            for (int w = 0; w < n; ++w) {
                if (rep[static_cast<std::size_t>(w)].is_zero()) continue;
                out[static_cast<std::size_t>(w)] +=
                    c * Dyadic::from_rational(rep[static_cast<std::size_t>(w)]);
            }
        }
    }
    return ExtElement(a.tower_, std::move(out));
}

ExtElement operator/(const ExtElement& a, const ExtElement& b) {
    a.check_same_tower(b);
    if (b.is_certified_zero()) throw DivisionByZero("division by zero tower element");
    const int n = a.tower_->total_degree();
    if (n == 1) {
        return ExtElement(a.tower_, {a.coords_[0] / b.coords_[0]});
    }
    // Solve M_b x = a where M_b is multiplication by b in the power basis.
    std::vector<std::vector<Dyadic>> m(static_cast<std::size_t>(n),
                                       std::vector<Dyadic>(static_cast<std::size_t>(n)));
    for (int v = 0; v < n; ++v) {  // column v = b * basis_v
        for (int u = 0; u < n; ++u) {
            if (b.coords_[static_cast<std::size_t>(u)].is_certified_zero()) continue;
            const std::vector<BigRat>& rep = a.tower_->basis_product(u, v);
            for (int w = 0; w < n; ++w) {
                if (rep[static_cast<std::size_t>(w)].is_zero()) continue;
                m[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)] +=
                    b.coords_[static_cast<std::size_t>(u)] *
                    Dyadic::from_rational(rep[static_cast<std::size_t>(w)]);
            }
        }
    }
    std::vector<Dyadic> rhs = a.coords_;
    // Gaussian elimination, pivoting on the lowest-valuation certified entry.
    std::vector<int> colperm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) colperm[static_cast<std::size_t>(i)] = i;
    for (int step = 0; step < n; ++step) {
        int pr = -1, pc = -1;
        Valuation best = Valuation::infinity();
        for (int r = step; r < n; ++r)
            for (int c = step; c < n; ++c) {
                const Dyadic& x = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                if (!x.is_unit_form()) continue;
                Valuation v = x.valuation();
                if (pr < 0 || v < best) {
                    best = v;
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) {
            for (int r = step; r < n; ++r)
                for (int c = step; c < n; ++c)
                    if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].is_below())
                        throw InsufficientPrecision("division pivot vanished below precision");
            throw DivisionByZero("singular multiplication matrix in division");
        }
        std::swap(m[static_cast<std::size_t>(step)], m[static_cast<std::size_t>(pr)]);
        std::swap(rhs[static_cast<std::size_t>(step)], rhs[static_cast<std::size_t>(pr)]);
        if (pc != step) {
            for (int r = 0; r < n; ++r)
                std::swap(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(step)],
                          m[static_cast<std::size_t>(r)][static_cast<std::size_t>(pc)]);
            std::swap(colperm[static_cast<std::size_t>(step)], colperm[static_cast<std::size_t>(pc)]);
        }
        const Dyadic piv = m[static_cast<std::size_t>(step)][static_cast<std::size_t>(step)];
        for (int r = 0; r < n; ++r) {
            if (r == step) continue;
            const Dyadic& x = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(step)];
            if (x.is_certified_zero()) continue;
            Dyadic factor = x / piv;
            for (int c = step; c < n; ++c)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    factor * m[static_cast<std::size_t>(step)][static_cast<std::size_t>(c)];
            rhs[static_cast<std::size_t>(r)] -= factor * rhs[static_cast<std::size_t>(step)];
        }
    }
    std::vector<Dyadic> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        x[static_cast<std::size_t>(colperm[static_cast<std::size_t>(i)])] =
            rhs[static_cast<std::size_t>(i)] /
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    return ExtElement(a.tower_, std::move(x));
}

ExtElement ExtElement::pow(long n) const {
    ExtElement base = *this;
    if (n < 0) {
        base = one(tower_) / base;
        n = -n;
    }
    ExtElement acc = one(tower_);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

ExtElement ExtElement::scaled(const BigRat& q) const {
    Dyadic s = Dyadic::from_rational(q);
    std::vector<Dyadic> out(coords_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coords_[i] * s;
    return ExtElement(tower_, std::move(out));
}

Valuation ExtElement::valuation() const {
    const int e = tower_->ramification_index();
    const int f = tower_->residue_degree();
    bool have_unit = false, have_below = false;
    Valuation best_unit = Valuation::infinity();
    Valuation best_bound = Valuation::infinity();
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < f; ++j) {
            const Dyadic& c = coords_[static_cast<std::size_t>(i * f + j)];
            if (c.is_certified_zero()) continue;
            Valuation shift(i, e);
            if (c.is_unit_form()) {
                Valuation v = Valuation::integer(c.val_or_bound()) + shift;
                if (!have_unit || v < best_unit) best_unit = v;
                have_unit = true;
            } else {
                Valuation v = Valuation::integer(c.val_or_bound()) + shift;
                if (!have_below || v < best_bound) best_bound = v;
                have_below = true;
            }
        }
    if (!have_unit && !have_below) return Valuation::infinity();
    // Basis coordinates cannot cancel one another (distinct fractional parts
    // across pi-classes, residue independence within a class), so the minimum
    // over certified coordinates is the valuation provided no indeterminate
    // coordinate could undercut it.
    if (have_unit && (!have_below || best_unit <= best_bound)) return best_unit;
    throw InsufficientPrecision("valuation hidden below working precision");
}

FFElement ExtElement::residue() const {
    Valuation v = valuation();  // may throw InsufficientPrecision
    if (v.negative()) throw NegativeValuation("residue of element with v < 0");
    const int f = tower_->residue_degree();
    const FiniteField& rf = tower_->residue_field();
    if (v.positive()) return FFElement::zero(rf);
    std::uint32_t bits = 0;
    for (int j = 0; j < f; ++j) {
        int b = coords_[static_cast<std::size_t>(j)].residue_bit();
        if (b) bits |= 1u << j;
    }
    return FFElement(rf, bits);
}

bool ExtElement::same_value(const ExtElement& b) const {
    check_same_tower(b);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (!coords_[i].same_value(b.coords_[i])) return false;
    return true;
}

std::string ExtElement::str() const {
    const int e = tower_->ramification_index();
    const int f = tower_->residue_degree();
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < f; ++j) {
            const Dyadic& c = coords_[static_cast<std::size_t>(i * f + j)];
            if (c.is_certified_zero()) continue;
            if (!first) os << " + ";
            os << c.str();
            if (i > 0) os << "*pi" << (i > 1 ? "^" + std::to_string(i) : "");
            if (j > 0) os << "*w" << (j > 1 ? "^" + std::to_string(j) : "");
            first = false;
        }
    if (first) os << "0";
    return os.str();
}

Dyadic hensel_sqrt_unit(const BigRat& u, std::int64_t prec) {
    if (u.is_zero() || v2(u) != 0) throw Error("hensel_sqrt_unit needs an odd rational");
    const std::int64_t k = prec + 8;
    BigInt m = BigInt(1) << static_cast<unsigned>(k);
    BigInt un = (mod2k(numerator(u), k) * inv_odd_mod2k(denominator(u), k)) % m;
    if ((un & 7) != 1) throw Error("rational is not a square unit (need u = 1 mod 8)");
    BigInt y = 1;
    // y <- (y + u/y)/2; each step roughly doubles the correct bit count
    for (int it = 0; it < 64; ++it) {
        BigInt next = ((y + un * inv_odd_mod2k(y, k)) % m) >> 1;
        next %= m;
        if (next == y) break;
        y = next;
    }
    if (((y * y - un) % (BigInt(1) << static_cast<unsigned>(prec))) != 0)
        throw Error("hensel lift failed to converge");
    if ((y & 3) != 1) y = m - y;  // fix the sign branch: root = 1 mod 4
    return Dyadic::from_unit(0, y, prec);
}

TowerPtr tower_q2(std::int64_t precision) { return ExtensionTower::make(1, 1, {}, precision); }

TowerPtr tower_unramified(int f, std::int64_t precision) {
    return ExtensionTower::make(f, 1, {}, precision);
}

TowerPtr tower_kummer(int q, std::int64_t precision) {
    std::vector<BigRat> eis(static_cast<std::size_t>(q) + 1, BigRat(0));
    eis[0] = -2;
    eis[static_cast<std::size_t>(q)] = 1;
    return ExtensionTower::make(1, q, std::move(eis), precision);
}

TowerPtr tower_sqrt_even(const BigInt& d, std::int64_t prec) {
    return ExtensionTower::make(1, 2, {BigRat(-d), BigRat(0), BigRat(1)}, prec);
}

TowerPtr tower_sqrt_odd3(const BigInt& d, std::int64_t prec) {
    // minimal polynomial of 1 + sqrt(d): x^2 - 2x + (1-d), Eisenstein for d = 3 mod 4
    return ExtensionTower::make(1, 2, {BigRat(1 - d), BigRat(-2), BigRat(1)}, prec);
}

}  // namespace redtwo
