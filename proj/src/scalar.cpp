#include "pforge/scalar.hpp"

namespace pforge {

std::string FieldSpec::to_string() const {
    return is_rational() ? std::string("Q") : "F" + std::to_string(prime);
}

long require_supported_prime(long p) {
    if (p != 2 && p != 3 && p != 5 && p != 7)
        throw error("unsupported prime field F" + std::to_string(p) +
                    " (supported: 2, 3, 5, 7)");
    return p;
}

Scalar Scalar::from_int(long v, const FieldSpec& f) {
    if (f.is_rational()) return rational(mpq_class(v));
    return residue(f.prime, v);
}

Scalar Scalar::rational(const mpq_class& q) {
    Scalar s;
    s.prime_ = 0;
    s.q_ = q;
    s.q_.canonicalize();
    return s;
}

Scalar Scalar::residue(long prime, long value) {
    require_supported_prime(prime);
    Scalar s;
    s.prime_ = prime;
    s.r_ = ((value % prime) + prime) % prime;
    return s;
}

Scalar Scalar::parse(const std::string& text, const FieldSpec& f) {
    if (text.empty()) throw error("empty scalar string");
    auto parse_int = [](const std::string& t) -> mpz_class {
        std::size_t start = (t[0] == '-') ? 1 : 0;
        if (start == t.size()) throw error("malformed integer '" + t + "'");
        for (std::size_t i = start; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                throw error("malformed integer '" + t + "'");
        if (t.size() - start > 1 && t[start] == '0')
            throw error("non-canonical integer '" + t + "' (leading zero)");
        return mpz_class(t);
    };
    if (!f.is_rational()) {
        if (text.find('/') != std::string::npos || text[0] == '-')
            throw error("prime-field scalar must be a plain integer in [0, p): '" +
                        text + "'");
        mpz_class v = parse_int(text);
        if (v < 0 || v >= f.prime)
            throw error("prime-field scalar '" + text + "' out of range [0, " +
                        std::to_string(f.prime) + ")");
        return residue(f.prime, v.get_si());
    }
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        mpz_class n = parse_int(text);
        return rational(mpq_class(n));
    }
    mpz_class num = parse_int(text.substr(0, slash));
    mpz_class den = parse_int(text.substr(slash + 1));
    if (den <= 0) throw error("denominator must be positive in '" + text + "'");
    if (den == 1) throw error("non-canonical scalar '" + text + "' (write '" +
                              num.get_str() + "')");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) throw error("non-canonical scalar '" + text + "' (not reduced)");
    return rational(mpq_class(num, den));
}

bool Scalar::is_zero() const {
    return prime_ == 0 ? q_ == 0 : r_ == 0;
}

void Scalar::require_same_field(const Scalar& o) const {
    if (prime_ != o.prime_)
        throw error("scalar field mismatch: " + field().to_string() + " vs " +
                    o.field().to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    if (prime_ == 0) return rational(q_ + o.q_);
    return residue(prime_, r_ + o.r_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(o);
    if (prime_ == 0) return rational(q_ - o.q_);
    return residue(prime_, r_ - o.r_ + prime_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    if (prime_ == 0) return rational(q_ * o.q_);
    return residue(prime_, r_ * o.r_);
}

Scalar Scalar::operator-() const {
    if (prime_ == 0) return rational(-q_);
    return residue(prime_, prime_ - r_);
}

Scalar Scalar::inv() const {
    if (is_zero()) throw error("division by zero");
    if (prime_ == 0) return rational(1 / q_);
    // Fermat inverse; p is tiny so the loop is fine.
    long acc = 1;
    for (long e = 0; e < prime_ - 2; ++e) acc = (acc * r_) % prime_;
    return residue(prime_, acc);
}

bool Scalar::operator==(const Scalar& o) const {
    if (prime_ != o.prime_) return false;
    return prime_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const {
    if (prime_ != 0) return std::to_string(r_);
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

long Scalar::residue_value() const {
    if (prime_ == 0) throw error("residue_value on a rational scalar");
    return r_;
}

const mpq_class& Scalar::rational_value() const {
    if (prime_ != 0) throw error("rational_value on a prime-field scalar");
    return q_;
}

}  // namespace pforge
