#include "phinmod/field.hpp"

#include <algorithm>
#include <sstream>

namespace phinmod {

bool is_prime(long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec make_field(long p, int e) {
    if (!is_prime(p)) throw FieldError("prime must be a prime number, got " + std::to_string(p));
    if (e < 1) throw FieldError("ramification index must be >= 1, got " + std::to_string(e));
    return FieldSpec{p, e};
}

long padic_ord(const Rat& x, long p) {
    if (x == 0) throw FieldError("p-adic order of zero");
    long ord = 0;
    mpz_class n = x.get_num();
    mpz_class d = x.get_den();
    mpz_class pz(p), q, r;
    while (true) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
        if (r != 0) break;
        n = q;
        ++ord;
    }
    while (true) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t());
        if (r != 0) break;
        d = q;
        --ord;
    }
    return ord;
}

FieldElement::FieldElement(const FieldSpec& spec, std::vector<Rat> coeffs)
    : spec_(spec), coeffs_(std::move(coeffs)) {
    if ((int)coeffs_.size() != spec_.ramification)
        throw FieldError("coefficient count does not match ramification index");
    for (auto& c : coeffs_) c.canonicalize();
}

FieldElement FieldElement::zero(const FieldSpec& spec) {
    return FieldElement(spec, std::vector<Rat>(spec.ramification, Rat(0)));
}

FieldElement FieldElement::one(const FieldSpec& spec) {
    return from_rational(spec, 1);
}

FieldElement FieldElement::from_rational(const FieldSpec& spec, const Rat& x) {
    std::vector<Rat> c(spec.ramification, Rat(0));
    c[0] = x;
    return FieldElement(spec, std::move(c));
}

FieldElement FieldElement::unit_u_power(const FieldSpec& spec, const Rat& c, long k) {
    if (k < 0) throw FieldError("unit_u_power wants k >= 0");
    long e = spec.ramification;
    long q = k / e, r = k % e;
    Rat scaled = c;
    for (long i = 0; i < q; ++i) scaled *= spec.prime;
    std::vector<Rat> coeffs(e, Rat(0));
    coeffs[r] = scaled;
    return FieldElement(spec, std::move(coeffs));
}

bool FieldElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

bool FieldElement::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

void FieldElement::check_same_spec(const FieldElement& o) const {
    if (!(spec_ == o.spec_)) throw FieldError("mismatched field specs");
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    a.check_same_spec(b);
    FieldElement r = a;
    for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    a.check_same_spec(b);
    FieldElement r = a;
    for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
    return r;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    a.check_same_spec(b);
    int e = a.spec_.ramification;
    // rational factors just scale the coefficient vector
    if (a.is_rational()) {
        if (a.coeffs_[0] == 0) return FieldElement::zero(a.spec_);
        FieldElement r = b;
        for (auto& c : r.coeffs_) c *= a.coeffs_[0];
        return r;
    }
    if (b.is_rational()) return b * a;
    std::vector<Rat> out(e, Rat(0));
    Rat p(a.spec_.prime);
    for (int i = 0; i < e; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (int j = 0; j < e; ++j) {
            if (b.coeffs_[j] == 0) continue;
            Rat prod = a.coeffs_[i] * b.coeffs_[j];
            int k = i + j;
            if (k >= e) {
                out[k - e] += prod * p;  // u^e = p
            } else {
                out[k] += prod;
            }
        }
    }
    return FieldElement(a.spec_, std::move(out));
}

namespace {

// Dense polynomials over Q, lowest degree first, used only for the inverse.
using Poly = std::vector<Rat>;

int degree(const Poly& f) {
    for (int i = (int)f.size() - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

Poly poly_sub_scaled(const Poly& a, const Poly& b, const Rat& c, int shift) {
    Poly r = a;
    if (r.size() < b.size() + shift) r.resize(b.size() + shift, Rat(0));
    for (size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
    return r;
}

// Division with remainder: a = q*b + r.
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    int db = degree(b);
    if (db < 0) throw FieldError("polynomial division by zero");
    r = a;
    q.assign(std::max<size_t>(a.size(), 1), Rat(0));
    int dr = degree(r);
    while (dr >= db) {
        Rat c = r[dr] / b[db];
        int shift = dr - db;
        q[shift] += c;
        r = poly_sub_scaled(r, b, c, shift);
        dr = degree(r);
    }
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r = a;
    if (r.size() < b.size()) r.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

}  // namespace

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw FieldError("division by zero");
    int e = spec_.ramification;
    if (e == 1) return from_rational(spec_, Rat(1) / coeffs_[0]);
    // monomial c u^k: inverse is (1/c) u^{e-k} / p
    int nonzero = -1;
    bool monomial = true;
    for (int i = 0; i < e && monomial; ++i) {
        if (coeffs_[i] == 0) continue;
        if (nonzero >= 0) monomial = false;
        nonzero = i;
    }
    if (monomial) {
        if (nonzero == 0) return from_rational(spec_, Rat(1) / coeffs_[0]);
        std::vector<Rat> out(e, Rat(0));
        out[e - nonzero] = Rat(1) / (coeffs_[nonzero] * spec_.prime);
        return FieldElement(spec_, std::move(out));
    }

    // Extended Euclid on (f, m) with m = x^e - p; since m is irreducible and f != 0,
    // gcd is a nonzero constant and s*f = gcd (mod m).
    Poly m(e + 1, Rat(0));
    m[0] = -Rat(spec_.prime);
    m[e] = 1;
    Poly f(coeffs_.begin(), coeffs_.end());

    Poly r0 = m, r1 = f;
    Poly s0 = {Rat(0)}, s1 = {Rat(1)};
    while (degree(r1) > 0) {
        Poly q, rem;
        poly_divmod(r0, r1, q, rem);
        Poly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if (degree(r1) != 0) throw InternalError("x^e - p not coprime with a nonzero element");
    Rat lead = r1[0];
    Poly inv = s1;
    for (auto& c : inv) c /= lead;
    Poly q, rem;
    poly_divmod(inv, m, q, rem);
    rem.resize(e, Rat(0));
    return FieldElement(spec_, std::vector<Rat>(rem.begin(), rem.begin() + e));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    a.check_same_spec(b);
    return a * b.inverse();
}

Valuation FieldElement::valuation() const {
    int e = spec_.ramification;
    bool found = false;
    Rat best;
    int hits = 0;
    for (int i = 0; i < e; ++i) {
        if (coeffs_[i] == 0) continue;
        Rat cand = Rat(padic_ord(coeffs_[i], spec_.prime)) + Rat(i, e);
        cand.canonicalize();
        if (!found || cand < best) {
            best = cand;
            found = true;
            hits = 1;
        } else if (cand == best) {
            ++hits;
        }
    }
    if (!found) return Valuation::infinity();
    // Distinct fractional parts i/e make the minimizer unique.
    if (hits != 1) throw InternalError("non-unique minimizing index in valuation");
    return Valuation(best);
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    a.check_same_spec(b);
    return a.coeffs_ == b.coeffs_;
}

int FieldElement::compare_encoding(const FieldElement& a, const FieldElement& b) {
    a.check_same_spec(b);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        int c = mpq_cmp(a.coeffs_[i].get_mpq_t(), b.coeffs_[i].get_mpq_t());
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

std::string FieldElement::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[i].get_str();
        if (i == 1) os << "*u";
        if (i > 1) os << "*u^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace phinmod
