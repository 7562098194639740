#pragma once
//
// Exact base-field scalars: arbitrary-precision rationals (GMP) or residues
// in a small prime field F_p.  All arithmetic is exact; there is no floating
// point anywhere in this library.
//

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pforge {

// Thrown for every domain error in the library (bad shapes, unknown names,
// division by zero, malformed input, ...).
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Which field the computation lives in: prime == 0 means the rationals,
// otherwise F_prime with prime in {2, 3, 5, 7}.
struct FieldSpec {
    long prime = 0;

    bool is_rational() const { return prime == 0; }
    bool operator==(const FieldSpec& o) const { return prime == o.prime; }
    bool operator!=(const FieldSpec& o) const { return prime != o.prime; }
    std::string to_string() const;
};

// Checks that p is one of the supported enumeration primes and returns it.
long require_supported_prime(long p);

class Scalar {
public:
    // Default: rational zero.
    Scalar() = default;

    static Scalar zero(const FieldSpec& f) { return from_int(0, f); }
    static Scalar one(const FieldSpec& f) { return from_int(1, f); }
    static Scalar from_int(long v, const FieldSpec& f);
    static Scalar rational(const mpq_class& q);
    static Scalar residue(long prime, long value);

    // Parses the canonical textual form and rejects anything non-canonical:
    // rationals are "n" or "n/d" with gcd(n,d)=1, d>1; prime-field values are
    // plain integers in [0, p).
    static Scalar parse(const std::string& text, const FieldSpec& f);

    FieldSpec field() const { return FieldSpec{prime_}; }
    bool is_zero() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inv() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Canonical textual form (inverse of parse).
    std::string to_string() const;

    // Prime-field residue accessor (error on rationals).
    long residue_value() const;
    const mpq_class& rational_value() const;

private:
    void require_same_field(const Scalar& o) const;

    long prime_ = 0;     // 0 = rational
    mpq_class q_ = 0;    // value when rational
    long r_ = 0;         // value when prime-field
};

}  // namespace pforge
