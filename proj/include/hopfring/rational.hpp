#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hopf {

// Exact rational scalar. Every coefficient in the catalog is a small
// integer, so int64 components never get near overflow; gcd-normalize
// anyway so equality is structural.
class Rat {
public:
    Rat() = default;
    Rat(std::int64_t n) : num_(n) {}
    Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rat operator+(Rat a, Rat b) {
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(Rat a, Rat b) {
        return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator*(Rat a, Rat b) { return Rat(a.num_ * b.num_, a.den_ * b.den_); }
    friend Rat operator/(Rat a, Rat b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rat operator-() const { Rat r; r.num_ = -num_; r.den_ = den_; return r; }
    Rat& operator+=(Rat b) { *this = *this + b; return *this; }
    Rat& operator-=(Rat b) { *this = *this - b; return *this; }
    Rat& operator*=(Rat b) { *this = *this * b; return *this; }

    friend bool operator==(Rat a, Rat b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(Rat a, Rat b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    // Reduce mod p into the canonical residue 0..p-1; the denominator must
    // be invertible. Used when pushing rational catalog coefficients into F_p.
    std::int64_t mod(std::int64_t p) const {
        std::int64_t d = den_ % p;
        if (d == 0) throw std::domain_error("denominator divisible by p");
        std::int64_t inv = 1;                    // d^(p-2) mod p, p is tiny
        for (int i = 0; i < p - 2; ++i) inv = inv * d % p;
        std::int64_t r = (num_ % p) * inv % p;
        return r < 0 ? r + p : r;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace hopf
