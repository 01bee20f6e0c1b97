#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hcot {

/// Exact rational number, always stored in reduced form with a positive
/// denominator. The 24 Game and the ToT merge arithmetic never leave the
/// range of int64 once reduced, so no big-integer backend is needed.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    // Caller must reject division by zero first; see Rational::is_zero().
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }

    bool is_zero() const { return num_ == 0; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace hcot
