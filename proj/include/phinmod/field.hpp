// Exact arithmetic in the model coefficient field E = Q(p^{1/e}).
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace phinmod {

using Rat = mpq_class;

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The model field E = Q(u), u^e = p.  The value group of v is (1/e)Z with v(p) = 1.
struct FieldSpec {
    long prime = 2;
    int ramification = 1;

    bool operator==(const FieldSpec&) const = default;
};

bool is_prime(long n);

/// Validating constructor; throws FieldError on non-prime p or e <= 0.
FieldSpec make_field(long p, int e);

/// Value of the valuation map: a rational in (1/e)Z, or +infinity (only for 0).
class Valuation {
public:
    static Valuation infinity() { return Valuation(true, 0); }
    Valuation(const Rat& v) : inf_(false), v_(v) { v_.canonicalize(); }
    Valuation(long v) : inf_(false), v_(v) {}

    bool is_infinite() const { return inf_; }
    const Rat& value() const {
        if (inf_) throw FieldError("valuation of zero has no finite value");
        return v_;
    }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return a < b || a == b; }
    friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
    friend bool operator>=(const Valuation& a, const Valuation& b) { return b <= a; }

    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.inf_ || b.inf_) return infinity();
        return Valuation(a.v_ + b.v_);
    }

    std::string str() const { return inf_ ? "inf" : v_.get_str(); }

private:
    Valuation(bool inf, const Rat& v) : inf_(inf), v_(v) {}
    bool inf_;
    Rat v_;
};

/// v_p of a nonzero rational (exponent of p in num minus exponent in den).
long padic_ord(const Rat& x, long p);

/**
 * FieldElement: an element sum a_i u^i (0 <= i < e) of E = Q(u), u^e = p.
 *
 * Arithmetic is exact, performed modulo u^e - p (irreducible by Eisenstein).
 * valuation() = min_i { v_p(a_i) + i/e } over nonzero coefficients; the minimizing
 * index is unique because the candidates have pairwise distinct fractional parts.
 */
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(const FieldSpec& spec, std::vector<Rat> coeffs);

    static FieldElement zero(const FieldSpec& spec);
    static FieldElement one(const FieldSpec& spec);
    static FieldElement from_rational(const FieldSpec& spec, const Rat& x);
    /// c * u^k for any k >= 0 (reduced via u^e = p).
    static FieldElement unit_u_power(const FieldSpec& spec, const Rat& c, long k);

    const FieldSpec& spec() const { return spec_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;  // all coefficients above index 0 vanish
    const Rat& rational_part() const { return coeffs_[0]; }

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    /// Multiplicative inverse via extended gcd in Q[x]/(x^e - p).
    FieldElement inverse() const;

    Valuation valuation() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    /// Total order on encodings (valuation ties in the classifier are broken with this).
    static int compare_encoding(const FieldElement& a, const FieldElement& b);

    std::string str() const;

private:
    FieldSpec spec_;
    std::vector<Rat> coeffs_;  // size = spec_.ramification

    void check_same_spec(const FieldElement& o) const;
};

}  // namespace phinmod
