#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lengthforge {

// Exact arbitrary-precision integers and rationals. cpp_rational keeps values
// canonical: numerator and denominator coprime, denominator >= 1.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when an enumeration or table would exceed its configured budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// p-adic valuation result; `infinite` marks v_p(0).
struct Valuation {
    bool infinite = false;
    long long exponent = 0;

    friend bool operator==(const Valuation&, const Valuation&) = default;
};

inline Rat make_rational(Int numerator, Int denominator) {
    if (denominator == 0) {
        throw std::invalid_argument("make_rational: zero denominator");
    }
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    return Rat(std::move(numerator), std::move(denominator));
}

namespace detail {

inline constexpr std::array<unsigned, 25> kSmallPrimes = {
    2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// Strong-probable-prime test to base `a` for odd n > 1 with n - 1 = d * 2^r.
inline bool strong_probable_prime(const Int& n, const Int& d, unsigned r, const Int& a) {
    Int x = boost::multiprecision::powm(a, d, n);
    if (x == 1 || x == n - 1) {
        return true;
    }
    for (unsigned i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) {
            return true;
        }
    }
    return false;
}

}  // namespace detail

// Deterministic primality test. Trial division by primes below 100, then
// Miller-Rabin with the twelve bases 2..37, which decides primality exactly
// for all n < 3.3e24 (far above anything reachable through the level ceiling).
inline bool is_prime(const Int& n) {
    if (n < 0) {
        throw std::invalid_argument("is_prime: input must be nonnegative");
    }
    if (n < 2) {
        return false;
    }
    for (unsigned q : detail::kSmallPrimes) {
        if (n == q) {
            return true;
        }
        if (n % q == 0) {
            return false;
        }
    }
    if (n < 101 * 101) {
        return true;
    }
    Int d = n - 1;
    unsigned r = 0;
    while (d % 2 == 0) {
        d >>= 1;
        ++r;
    }
    for (unsigned a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (!detail::strong_probable_prime(n, d, r, Int(a))) {
            return false;
        }
    }
    return true;
}

// Smallest prime p with p > lower_bound and p not dividing forbidden_lcm.
inline Int next_qualifying_prime(const Int& lower_bound, const Int& forbidden_lcm) {
    if (lower_bound < 2) {
        throw std::invalid_argument("next_qualifying_prime: lower bound must be >= 2");
    }
    if (forbidden_lcm < 1) {
        throw std::invalid_argument("next_qualifying_prime: forbidden lcm must be >= 1");
    }
    // The answer exceeds 2, so an odd-only scan is complete.
    Int candidate = lower_bound + 1;
    if (candidate % 2 == 0) {
        ++candidate;
    }
    for (;; candidate += 2) {
        if (is_prime(candidate) && forbidden_lcm % candidate != 0) {
            return candidate;
        }
    }
}

// v_p(q): the j with q = p^j * (a/b), p dividing neither a nor b; v_p(0) is
// marked infinite.
inline Valuation padic_valuation(const Int& p, const Rat& q) {
    if (!is_prime(p)) {
        throw std::invalid_argument("padic_valuation: modulus must be prime");
    }
    if (q == 0) {
        return Valuation{.infinite = true, .exponent = 0};
    }
    auto multiplicity = [&p](Int x) {
        long long count = 0;
        x = abs(x);
        while (x % p == 0) {
            x /= p;
            ++count;
        }
        return count;
    };
    return Valuation{.infinite = false,
                     .exponent = multiplicity(numerator(q)) - multiplicity(denominator(q))};
}

inline std::string int_to_string(const Int& x) { return x.str(); }

inline Int int_from_string(std::string_view text) {
    std::size_t start = (!text.empty() && text.front() == '-') ? 1 : 0;
    if (text.size() == start) {
        throw std::invalid_argument("int_from_string: empty integer literal");
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw std::invalid_argument("int_from_string: invalid integer literal '" +
                                        std::string(text) + "'");
        }
    }
    return Int(std::string(text));
}

// Canonical text form: "n/d" in lowest terms, or a plain decimal string when
// the value is an integer. Round-trips bit-exactly through rat_from_string.
inline std::string rat_to_string(const Rat& q) {
    Int den = denominator(q);
    if (den == 1) {
        return numerator(q).str();
    }
    return numerator(q).str() + "/" + den.str();
}

inline Rat rat_from_string(std::string_view text) {
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rat(int_from_string(text));
    }
    Int num = int_from_string(text.substr(0, slash));
    Int den = int_from_string(text.substr(slash + 1));
    if (den <= 0) {
        throw std::invalid_argument("rat_from_string: denominator must be positive");
    }
    return make_rational(std::move(num), std::move(den));
}

}  // namespace lengthforge
