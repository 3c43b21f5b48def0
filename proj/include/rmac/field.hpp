#ifndef RMAC_FIELD_HPP
#define RMAC_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace rmac {

/// Deterministic primality test, exact for every 64-bit input.
bool is_prime(std::uint64_t value);

/// Coefficient field for homology: the rationals or F_p for a prime p.
class FieldSpec {
public:
    enum class Kind { Rationals, PrimeField };

    static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
    /// Throws std::invalid_argument unless p is a prime below 2^32.
    static FieldSpec prime(std::uint64_t p);

    /// Parses "q", "f2", "f<p>" (case-insensitive). Throws std::invalid_argument.
    static FieldSpec parse(std::string_view text);

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::Rationals; }
    /// Modulus of a prime field; 0 for the rationals.
    std::uint64_t modulus() const { return modulus_; }

    /// Round-trips through parse(): "q" or "f<p>".
    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    Kind kind_;
    std::uint64_t modulus_;
};

} // namespace rmac

#endif
