#include "hogames/hyperexp.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace hogames {

std::string HyperValue::str() const {
    if (exact) return value.str();
    return "hyperexp(" + std::to_string(a) + ", " + std::to_string(n) + ", " +
           std::to_string(m) + ")";
}

std::size_t hyperexp_digit_cap() {
    if (const char* env = std::getenv("HOGAMES_DIGIT_CAP")) {
        char* end = nullptr;
        unsigned long long cap = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && cap > 0) return static_cast<std::size_t>(cap);
    }
    return 10000;
}

HyperValue hyperexp(std::uint64_t a, std::uint64_t n, std::uint64_t m) {
    const std::size_t cap = hyperexp_digit_cap();
    HyperValue v;
    v.a = a;
    v.n = n;
    v.m = m;
    v.value = m;
    for (std::uint64_t step = 0; step < n; ++step) {
        if (a <= 1) {
            // 1^x = 1; 0^x is 0 for x >= 1 and 1 for x = 0.
            v.value = a == 1 ? 1 : (v.value == 0 ? 1 : 0);
            continue;
        }
        // Exponent must stay addressable and the result under the digit cap.
        double digits = v.value.convert_to<double>() * std::log10(static_cast<double>(a));
        if (v.value > (std::numeric_limits<unsigned>::max)() ||
            digits > static_cast<double>(cap)) {
            v.exact = false;
            v.value = 0;
            return v;
        }
        v.value = boost::multiprecision::pow(BigInt(a), v.value.convert_to<unsigned>());
        if (v.value.str().size() > cap) {
            v.exact = false;
            v.value = 0;
            return v;
        }
    }
    return v;
}

HyperValue interaction_bound(std::size_t n, std::size_t m, std::size_t k,
                             std::optional<std::size_t> d) {
    if (k < 1) throw std::invalid_argument("interaction_bound: k must be at least 1");
    std::size_t b = std::min(n, m);
    std::size_t base = k;
    if (d) {
        if (*d < 2)
            throw std::invalid_argument("interaction_bound: depth must be at least 2");
        b = std::min(b, *d - 2);
        base = 2 * k;
    }
    return hyperexp(base, b, base);
}

}  // namespace hogames
