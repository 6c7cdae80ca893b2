#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace horogame {

// expression templates off: plain value semantics for min/max and ternaries
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rat =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

inline double to_double(const Rat& r) { return static_cast<double>(r); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline BigInt rat_floor(const Rat& r) {
    return floor_div(numerator(r), denominator(r));
}

inline BigInt rat_ceil(const Rat& r) { return -rat_floor(-r); }

inline BigInt rat_round(const Rat& r) { return rat_floor(r + Rat(1, 2)); }

inline Rat rat_pow(const Rat& base, int e) {
    Rat acc(1), b = base;
    int n = e < 0 ? -e : e;
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return e < 0 ? Rat(1) / acc : acc;
}

// Exact conversion: every finite double is a dyadic rational.
inline Rat rat_from_double(double d) {
    if (!std::isfinite(d)) throw std::domain_error("rat_from_double: non-finite");
    int exp = 0;
    double m = std::frexp(d, &exp);  // d = m * 2^exp, |m| in [0.5, 1)
    BigInt num = 0;
    for (int i = 0; i < 64 && m != 0.0; ++i) {
        m *= 2;
        double ip = std::floor(m);
        num = (num << 1) + BigInt(static_cast<long long>(ip));
        m -= ip;
        --exp;
    }
    Rat r(num);
    return exp >= 0 ? Rat(r * rat_pow(Rat(2), exp)) : Rat(r / rat_pow(Rat(2), -exp));
}

inline std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// Accepts "p/q", integers, and plain decimals like "0.25" or "-3.5e-2".
inline std::optional<Rat> parse_rat(std::string_view sv) {
    std::string s(sv);
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt num(s.substr(0, slash));
            BigInt den(s.substr(slash + 1));
            if (den == 0) return std::nullopt;
            return Rat(num, den);
        }
        auto dot = s.find('.');
        auto epos = s.find_first_of("eE");
        if (dot == std::string::npos && epos == std::string::npos) return Rat(BigInt(s));
        long expo = 0;
        if (epos != std::string::npos) {
            expo = std::stol(s.substr(epos + 1));
            s = s.substr(0, epos);
            dot = s.find('.');
        }
        std::string digits = s;
        long frac_len = 0;
        if (dot != std::string::npos) {
            frac_len = static_cast<long>(s.size() - dot - 1);
            digits = s.substr(0, dot) + s.substr(dot + 1);
        }
        bool negative = false;
        if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
            negative = digits[0] == '-';
            digits.erase(0, 1);
        }
        // strip leading zeros so the integer parse cannot read them as octal
        auto nz = digits.find_first_not_of('0');
        digits = nz == std::string::npos ? "0" : digits.substr(nz);
        if (digits.empty()) return std::nullopt;
        Rat r{BigInt(digits)};
        if (negative) r = -r;
        long net = expo - frac_len;
        Rat ten(10);
        return net >= 0 ? Rat(r * rat_pow(ten, static_cast<int>(net)))
                        : Rat(r / rat_pow(ten, static_cast<int>(-net)));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline Rat parse_rat_or_throw(std::string_view sv, const char* what = "rational") {
    auto r = parse_rat(sv);
    if (!r) throw std::invalid_argument(std::string("cannot parse ") + what + ": " + std::string(sv));
    return *r;
}

// 2^-k grid with pitch at most hint * 2^-rel_bits; keeps game arithmetic on
// nested dyadic grids so denominators stay linear in the round count
inline int grid_exponent(const Rat& hint, int rel_bits) {
    long e = static_cast<long>(msb(denominator(hint))) - static_cast<long>(msb(numerator(hint)));
    if (e < 0) e = 0;
    return static_cast<int>(e) + rel_bits + 1;
}

inline Rat quantize_down(const Rat& v, const Rat& scale_hint, int rel_bits) {
    int k = grid_exponent(scale_hint, rel_bits);
    BigInt scaled = rat_floor(v * rat_pow(Rat(2), k));
    return Rat(scaled) / rat_pow(Rat(2), k);
}

inline Rat quantize_up(const Rat& v, const Rat& scale_hint, int rel_bits) {
    int k = grid_exponent(scale_hint, rel_bits);
    BigInt scaled = rat_ceil(v * rat_pow(Rat(2), k));
    return Rat(scaled) / rat_pow(Rat(2), k);
}

inline BigInt big_gcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace horogame
