#pragma once

#include <string>
#include <vector>

#include <lengthforge/lengthforge.hpp>

namespace testutil {

inline lengthforge::Rat rat(const std::string& text) { return lengthforge::rat_from_string(text); }

inline std::vector<lengthforge::Rat> rats(const std::vector<std::string>& texts) {
    std::vector<lengthforge::Rat> out;
    for (const auto& t : texts) {
        out.push_back(rat(t));
    }
    return out;
}

inline std::vector<lengthforge::Int> ints(const std::vector<long long>& values) {
    return {values.begin(), values.end()};
}

// Primality by plain trial division; the independent oracle for the
// arithmetic module's tests.
inline bool naive_prime(long long n) {
    if (n < 2) {
        return false;
    }
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

}  // namespace testutil
