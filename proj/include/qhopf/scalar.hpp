#pragma once

// Exact scalars over Q or a prime field F_p.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qhopf {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Raised for any malformed input or arithmetic precondition failure.
class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Scalar;

/// The base field: characteristic 0 (Q) or a prime p.
class Field {
public:
    constexpr Field() = default;

    static constexpr Field rational() { return Field{}; }

    static Field prime(std::uint64_t p)
    {
        if (p < 2 || p >= (std::uint64_t{1} << 32) || !is_prime(p)) {
            throw MathError("field modulus " + std::to_string(p) + " is not a prime below 2^32");
        }
        Field f;
        f.p_ = p;
        return f;
    }

    /// Parses "rational" or "fp:<p>".
    static Field parse(std::string_view spec)
    {
        if (spec == "rational") {
            return rational();
        }
        if (spec.starts_with("fp:")) {
            auto digits = std::string(spec.substr(3));
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
                throw MathError("bad field spec '" + std::string(spec) + "'");
            }
            return prime(std::stoull(digits));
        }
        throw MathError("bad field spec '" + std::string(spec) + "' (expected rational or fp:<p>)");
    }

    constexpr std::uint64_t characteristic() const { return p_; }
    constexpr bool is_rational() const { return p_ == 0; }

    std::string to_string() const { return is_rational() ? "rational" : "fp:" + std::to_string(p_); }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    Scalar from_rational(const Rational& q) const;
    /// Parses the canonical scalar grammar: "a", "-a", "a/b"; in F_p a fraction
    /// is read as a * b^{-1}.
    Scalar scalar(std::string_view text) const;

    friend constexpr bool operator==(Field a, Field b) { return a.p_ == b.p_; }

private:
    static bool is_prime(std::uint64_t n)
    {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) return false;
        }
        return true;
    }

    std::uint64_t p_ = 0;
};

/// Element of Q (reduced fraction, positive denominator) or of F_p
/// (residue in [0, p)). Operations between different fields throw.
class Scalar {
public:
    Scalar() = default;

    Field field() const { return field_; }
    bool is_zero() const { return field_.is_rational() ? q_.is_zero() : r_ == 0; }
    bool is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

    const Rational& rational() const { return q_; }
    std::uint64_t residue() const { return r_; }

    Scalar& operator+=(const Scalar& o)
    {
        check(o);
        if (field_.is_rational()) {
            q_ += o.q_;
        } else {
            r_ = (r_ + o.r_) % field_.characteristic();
        }
        return *this;
    }

    Scalar& operator-=(const Scalar& o)
    {
        check(o);
        if (field_.is_rational()) {
            q_ -= o.q_;
        } else {
            const auto p = field_.characteristic();
            r_ = (r_ + p - o.r_) % p;
        }
        return *this;
    }

    Scalar& operator*=(const Scalar& o)
    {
        check(o);
        if (field_.is_rational()) {
            q_ *= o.q_;
        } else {
            r_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r_) * o.r_ % field_.characteristic());
        }
        return *this;
    }

    Scalar& operator/=(const Scalar& o)
    {
        check(o);
        if (o.is_zero()) {
            throw MathError("division by zero");
        }
        if (field_.is_rational()) {
            q_ /= o.q_;
        } else {
            *this *= o.inverse();
        }
        return *this;
    }

    Scalar operator-() const
    {
        Scalar s = *this;
        if (field_.is_rational()) {
            s.q_ = -q_;
        } else if (r_ != 0) {
            s.r_ = field_.characteristic() - r_;
        }
        return s;
    }

    Scalar inverse() const
    {
        if (is_zero()) {
            throw MathError("division by zero");
        }
        Scalar s = *this;
        if (field_.is_rational()) {
            s.q_ = 1 / q_;
            return s;
        }
        // Fermat: r^(p-2)
        const auto p = field_.characteristic();
        std::uint64_t base = r_, exp = p - 2, acc = 1;
        while (exp) {
            if (exp & 1) acc = static_cast<std::uint64_t>(static_cast<unsigned __int128>(acc) * base % p);
            base = static_cast<std::uint64_t>(static_cast<unsigned __int128>(base) * base % p);
            exp >>= 1;
        }
        s.r_ = acc;
        return s;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b)
    {
        if (!(a.field_ == b.field_)) return false;
        return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
    }

    /// Canonical string: "p/q" (q omitted when 1) or the decimal residue.
    std::string to_string() const
    {
        if (!field_.is_rational()) {
            return std::to_string(r_);
        }
        auto num = boost::multiprecision::numerator(q_);
        auto den = boost::multiprecision::denominator(q_);
        if (den == 1) {
            return num.str();
        }
        return num.str() + "/" + den.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
    friend class Field;

    void check(const Scalar& o) const
    {
        if (!(field_ == o.field_)) {
            throw MathError("field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
        }
    }

    Field field_{};
    Rational q_{};
    std::uint64_t r_ = 0;
};

inline Scalar Field::zero() const { return from_int(0); }
inline Scalar Field::one() const { return from_int(1); }

inline Scalar Field::from_int(long long v) const
{
    Scalar s;
    s.field_ = *this;
    if (is_rational()) {
        s.q_ = v;
    } else {
        const auto p = static_cast<long long>(p_);
        s.r_ = static_cast<std::uint64_t>(((v % p) + p) % p);
    }
    return s;
}

inline Scalar Field::from_rational(const Rational& q) const
{
    Scalar s;
    s.field_ = *this;
    if (is_rational()) {
        s.q_ = q;
        return s;
    }
    const Integer p{p_};
    Integer num = boost::multiprecision::numerator(q) % p;
    if (num < 0) num += p;
    Integer den = boost::multiprecision::denominator(q) % p;
    if (den == 0) {
        throw MathError("denominator of " + q.str() + " is not invertible in " + to_string());
    }
    Scalar n = from_int(0), d = from_int(0);
    n.r_ = num.convert_to<std::uint64_t>();
    d.r_ = den.convert_to<std::uint64_t>();
    return n / d;
}

inline Scalar Field::scalar(std::string_view text) const
{
    auto bad = [&](const std::string& why) {
        return MathError(why + " in scalar '" + std::string(text) + "'");
    };
    auto slash = text.find('/');
    auto num_txt = std::string(text.substr(0, slash));
    auto den_txt = slash == std::string_view::npos ? std::string("1") : std::string(text.substr(slash + 1));
    auto valid_int = [](const std::string& s, bool allow_sign) {
        std::size_t start = (allow_sign && !s.empty() && s[0] == '-') ? 1 : 0;
        return s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos;
    };
    if (!valid_int(num_txt, true) || !valid_int(den_txt, false)) {
        throw bad("malformed number");
    }
    Integer num(num_txt), den(den_txt);
    if (den == 0) {
        throw bad("division by zero");
    }
    if (!is_rational() && den % Integer{p_} == 0) {
        throw bad("denominator not invertible in " + to_string());
    }
    return from_rational(Rational(num, den));
}

} // namespace qhopf
