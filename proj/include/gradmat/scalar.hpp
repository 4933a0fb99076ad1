#pragma once

/// Exact scalars: arbitrary-precision rationals (field Q) and finite fields
/// GF(p^s). Rationals are kept gcd-reduced with positive denominator by
/// boost::multiprecision, so equality is structural. Finite-field elements
/// are coefficient vectors modulo a deterministic irreducible polynomial
/// (the first of its degree in lexicographic coefficient order), so the same
/// field descriptor always denotes the same structure constants.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "gradmat/common.hpp"
#include "gradmat/polygf.hpp"

namespace gradmat {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t t = 2; t * t <= p; ++t)
        if (p % t == 0) return false;
    return true;
}

enum class FieldKind { Rational, Finite };

class Field {
public:
    Field() : kind_(FieldKind::Rational) {}

    static Field rationals() { return Field(); }

    static Field prime(std::int64_t p) { return finite(p, 1); }

    static Field finite(std::int64_t p, std::int64_t deg) {
        if (!is_prime(p)) throw invalid_argument("characteristic must be prime");
        if (deg < 1) throw invalid_argument("extension degree must be >= 1");
        Field f;
        f.kind_ = FieldKind::Finite;
        f.p_ = p;
        f.deg_ = deg;
        if (deg > 1) f.modulus_ = polygf::first_irreducible(p, static_cast<std::size_t>(deg));
        return f;
    }

    /// Parses "Q", "GF(q)" with q = p^s.
    static Field parse(const std::string& s) {
        if (s == "Q" || s == "QQ") return rationals();
        if (s.size() > 4 && s.substr(0, 3) == "GF(" && s.back() == ')') {
            std::int64_t q = std::stoll(s.substr(3, s.size() - 4));
            if (q < 2) throw invalid_argument("field order must be >= 2");
            std::int64_t p = q;
            for (std::int64_t t = 2; t * t <= q; ++t)
                if (q % t == 0) { p = t; break; }
            std::int64_t deg = 0, acc = 1;
            while (acc < q) { acc *= p; ++deg; }
            if (acc != q) throw invalid_argument("field order is not a prime power: " + s);
            return finite(p, deg);
        }
        throw invalid_argument("unknown field descriptor: " + s);
    }

    FieldKind kind() const { return kind_; }
    bool is_rational() const { return kind_ == FieldKind::Rational; }
    bool is_finite() const { return kind_ == FieldKind::Finite; }
    std::int64_t characteristic() const { return kind_ == FieldKind::Finite ? p_ : 0; }
    std::int64_t degree() const { return deg_; }
    std::int64_t order() const {
        std::int64_t q = 1;
        for (std::int64_t i = 0; i < deg_; ++i) q *= p_;
        return q;
    }
    const polygf::Poly& modulus() const { return modulus_; }

    std::string to_string() const {
        if (is_rational()) return "Q";
        return "GF(" + std::to_string(order()) + ")";
    }

    bool operator==(const Field& o) const {
        return kind_ == o.kind_ && p_ == o.p_ && deg_ == o.deg_;
    }

private:
    FieldKind kind_;
    std::int64_t p_ = 0;
    std::int64_t deg_ = 1;
    polygf::Poly modulus_; // monic, only for deg_ > 1
};

class Scalar {
public:
    Scalar() = default;

    static Scalar zero(const Field& f) { return make(f, 0); }
    static Scalar one(const Field& f) { return make(f, 1); }

    /// Integer constant in the given field.
    static Scalar make(const Field& f, std::int64_t n) {
        Scalar s;
        s.field_ = f;
        if (f.is_rational()) {
            s.rat_ = n;
        } else {
            s.cf_.assign(static_cast<std::size_t>(f.degree()), 0);
            s.cf_[0] = ((n % f.characteristic()) + f.characteristic()) % f.characteristic();
        }
        return s;
    }

    static Scalar rational(BigRat r) {
        Scalar s;
        s.field_ = Field::rationals();
        s.rat_ = std::move(r);
        return s;
    }

    /// Finite-field element from coefficient vector (low degree first).
    static Scalar from_coeffs(const Field& f, std::vector<std::int64_t> cf) {
        if (!f.is_finite()) throw invalid_argument("coefficients need a finite field");
        if (cf.size() != static_cast<std::size_t>(f.degree()))
            throw invalid_argument("coefficient count mismatch");
        Scalar s;
        s.field_ = f;
        const std::int64_t p = f.characteristic();
        for (auto& c : cf) c = ((c % p) + p) % p;
        s.cf_ = std::move(cf);
        return s;
    }

    /// Element of GF(p^s) with the given enumeration index: base-p digits,
    /// c_0 least significant. Index 0 is zero, index 1 is one.
    static Scalar from_index(const Field& f, std::int64_t idx) {
        if (!f.is_finite()) throw invalid_argument("enumeration needs a finite field");
        std::vector<std::int64_t> cf(static_cast<std::size_t>(f.degree()), 0);
        for (auto& c : cf) {
            c = idx % f.characteristic();
            idx /= f.characteristic();
        }
        return from_coeffs(f, std::move(cf));
    }

    std::int64_t to_index() const {
        require_finite();
        std::int64_t idx = 0;
        for (std::size_t i = cf_.size(); i-- > 0;)
            idx = idx * field_.characteristic() + cf_[i];
        return idx;
    }

    const Field& field() const { return field_; }
    const BigRat& rat() const { return rat_; }
    const std::vector<std::int64_t>& coeffs() const { return cf_; }

    bool is_zero() const {
        if (field_.is_rational()) return rat_ == 0;
        for (auto c : cf_)
            if (c) return false;
        return true;
    }

    bool is_one() const { return *this == one(field_); }

    Scalar operator+(const Scalar& o) const {
        check(o);
        Scalar r = *this;
        if (field_.is_rational()) {
            r.rat_ += o.rat_;
        } else {
            for (std::size_t i = 0; i < cf_.size(); ++i)
                r.cf_[i] = (cf_[i] + o.cf_[i]) % field_.characteristic();
        }
        return r;
    }

    Scalar operator-(const Scalar& o) const {
        check(o);
        Scalar r = *this;
        if (field_.is_rational()) {
            r.rat_ -= o.rat_;
        } else {
            const std::int64_t p = field_.characteristic();
            for (std::size_t i = 0; i < cf_.size(); ++i)
                r.cf_[i] = ((cf_[i] - o.cf_[i]) % p + p) % p;
        }
        return r;
    }

    Scalar operator-() const { return zero(field_) - *this; }

    Scalar operator*(const Scalar& o) const {
        check(o);
        Scalar r = *this;
        if (field_.is_rational()) {
            r.rat_ *= o.rat_;
            return r;
        }
        const std::int64_t p = field_.characteristic();
        if (field_.degree() == 1) {
            r.cf_[0] = cf_[0] * o.cf_[0] % p;
            return r;
        }
        polygf::Poly prod = polygf::mod(polygf::mul(cf_, o.cf_, p), field_.modulus(), p);
        prod.resize(cf_.size(), 0);
        r.cf_ = std::move(prod);
        return r;
    }

    Scalar inverse() const {
        if (is_zero()) throw invalid_argument("division by zero");
        if (field_.is_rational()) {
            Scalar r = *this;
            r.rat_ = 1 / rat_;
            return r;
        }
        // a^(q-2)
        std::int64_t e = field_.order() - 2;
        Scalar acc = one(field_), base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    bool operator==(const Scalar& o) const {
        return field_ == o.field_ && rat_ == o.rat_ && cf_ == o.cf_;
    }

    /// "a/b" (rationals; "/b" omitted when b = 1), "r mod p" (prime fields),
    /// "c0,c1,... mod p^s" (proper extensions).
    std::string to_string() const {
        std::ostringstream os;
        if (field_.is_rational()) {
            os << numerator(rat_);
            if (denominator(rat_) != 1) os << '/' << denominator(rat_);
            return os.str();
        }
        if (field_.degree() == 1) {
            os << cf_[0] << " mod " << field_.characteristic();
            return os.str();
        }
        for (std::size_t i = 0; i < cf_.size(); ++i) {
            if (i) os << ',';
            os << cf_[i];
        }
        os << " mod " << field_.characteristic() << '^' << field_.degree();
        return os.str();
    }

    static Scalar parse(const Field& f, const std::string& text);

private:
    void check(const Scalar& o) const {
        if (!(field_ == o.field_))
            throw invalid_argument("scalars from different fields");
    }
    void require_finite() const {
        if (!field_.is_finite()) throw invalid_argument("finite field required");
    }

    Field field_;
    BigRat rat_;
    std::vector<std::int64_t> cf_;
};

inline Scalar Scalar::parse(const Field& f, const std::string& text) {
    auto strip = [](std::string s) {
        const auto a = s.find_first_not_of(" \t");
        const auto b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string body = strip(text);
    const auto modpos = body.find(" mod ");
    if (modpos != std::string::npos) body = strip(body.substr(0, modpos));
    if (f.is_rational()) {
        const auto slash = body.find('/');
        BigInt num(slash == std::string::npos ? body : body.substr(0, slash));
        BigInt den(slash == std::string::npos ? std::string("1") : body.substr(slash + 1));
        if (den == 0) throw invalid_argument("zero denominator: " + text);
        return Scalar::rational(BigRat(num, den));
    }
    std::vector<std::int64_t> cf;
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ','))
        cf.push_back(std::stoll(strip(tok)));
    if (cf.size() == 1 && f.degree() > 1) cf.resize(static_cast<std::size_t>(f.degree()), 0);
    return Scalar::from_coeffs(f, std::move(cf));
}

} // namespace gradmat
