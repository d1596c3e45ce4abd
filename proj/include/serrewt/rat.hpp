#ifndef SERREWT_RAT_HPP_
#define SERREWT_RAT_HPP_

#include <cstdint>
#include <numeric>
#include <string>

namespace swt {

/* Small exact rational, used for filtration degrees and slopes. */
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n) : num(n), den(1) {}
    Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    friend Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
    friend Rat operator/(Rat a, Rat b) { return Rat(a.num * b.den, a.den * b.num); }
    friend bool operator==(const Rat &a, const Rat &b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat &a, const Rat &b) { return !(a == b); }
    friend bool operator<(const Rat &a, const Rat &b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(const Rat &a, const Rat &b) { return a.num * b.den <= b.num * a.den; }
    friend bool operator>(const Rat &a, const Rat &b) { return b < a; }
    friend bool operator>=(const Rat &a, const Rat &b) { return b <= a; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

} // namespace swt

#endif
