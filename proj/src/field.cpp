#include "rmac/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace rmac {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

} // namespace

bool is_prime(std::uint64_t value)
{
    if (value < 2)
        return false;
    for (std::uint64_t small : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (value % small == 0)
            return value == small;
    }
    std::uint64_t odd = value - 1;
    int twos = 0;
    while ((odd & 1) == 0) {
        odd >>= 1;
        ++twos;
    }
    // This witness set is deterministic for all n < 3.3e24.
    for (std::uint64_t witness : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        std::uint64_t x = pow_mod(witness, odd, value);
        if (x == 1 || x == value - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < twos; ++r) {
            x = mul_mod(x, x, value);
            if (x == value - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p)
{
    if (p >= (std::uint64_t{1} << 32))
        throw std::invalid_argument("field modulus must be below 2^32, got " + std::to_string(p));
    if (!is_prime(p))
        throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
    return FieldSpec(Kind::PrimeField, p);
}

FieldSpec FieldSpec::parse(std::string_view text)
{
    std::string lowered(text);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lowered == "q")
        return rationals();
    if (lowered.size() >= 2 && lowered[0] == 'f') {
        std::uint64_t p = 0;
        const char* first = lowered.data() + 1;
        const char* last = lowered.data() + lowered.size();
        auto [ptr, ec] = std::from_chars(first, last, p);
        if (ec == std::errc() && ptr == last)
            return prime(p);
    }
    throw std::invalid_argument("unrecognized field '" + std::string(text) +
                                "' (expected q, f2 or f<prime>)");
}

std::string FieldSpec::to_string() const
{
    if (is_rational())
        return "q";
    return "f" + std::to_string(modulus_);
}

} // namespace rmac
