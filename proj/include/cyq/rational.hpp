#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cyq {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" or "p" for integral values; always canonical.
std::string to_string(const Rational& q);

Rational parse_rational(const std::string& text);

// Coefficient domain used for rank computations. Algebra elements are always
// stored over Q; in prime mode matrices are reduced mod p before elimination,
// so ranks are only certified over Q in rational mode.
class Field {
public:
    static Field rational() { return Field(0); }
    static Field prime(std::uint64_t p);

    bool is_rational() const noexcept { return p_ == 0; }
    std::uint64_t characteristic() const noexcept { return p_; }
    std::string name() const;

    // Reduce a rational mod p. Throws ValidationError if p divides the denominator.
    std::uint64_t reduce(const Rational& q) const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;
};

// Parse the CLI spelling: "q" or "p<prime>".
Field parse_field(const std::string& spec);

} // namespace cyq
