#ifndef RACKHOM_INTEGER_HPP
#define RACKHOM_INTEGER_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <gmpxx.h>

namespace rackhom {

/// Arbitrary-precision signed integer.
///
/// Values that fit in a signed 64-bit word are stored inline and all
/// arithmetic on them runs on machine words with overflow detection.  On
/// overflow the value is promoted to a GMP integer and demoted again as
/// soon as a result fits.  Boundary matrices of racks are dominated by
/// entries in {-1, 0, 1}, so almost all work stays on the fast path.
class Integer {
public:
    Integer() noexcept = default;

    template <std::signed_integral T>
    Integer(T value) noexcept : small_(static_cast<std::int64_t>(value)) {}

    template <std::unsigned_integral T>
    Integer(T value) {
        if (static_cast<std::uint64_t>(value) <=
            static_cast<std::uint64_t>(INT64_MAX)) {
            small_ = static_cast<std::int64_t>(value);
        } else {
            big_ = std::make_unique<mpz_class>();
            mpz_import(big_->get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0,
                       &value);
        }
    }

    explicit Integer(const mpz_class& value);
    explicit Integer(std::string_view decimal);

    Integer(const Integer& other);
    Integer(Integer&& other) noexcept = default;
    Integer& operator=(const Integer& other);
    Integer& operator=(Integer&& other) noexcept = default;
    ~Integer() = default;

    [[nodiscard]] bool is_small() const noexcept { return !big_; }
    [[nodiscard]] bool is_zero() const noexcept { return !big_ && small_ == 0; }
    [[nodiscard]] int sign() const noexcept;

    /// Precondition: is_small().
    [[nodiscard]] std::int64_t to_int64() const noexcept { return small_; }
    [[nodiscard]] mpz_class to_mpz() const;
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] double to_double() const;

    Integer& operator+=(const Integer& rhs);
    Integer& operator-=(const Integer& rhs);
    Integer& operator*=(const Integer& rhs);
    /// Truncating division, as for built-in integers.  Throws on division by zero.
    Integer& operator/=(const Integer& rhs);
    /// Remainder with the sign of the dividend.
    Integer& operator%=(const Integer& rhs);

    [[nodiscard]] Integer operator-() const;
    [[nodiscard]] Integer operator+() const { return *this; }

    friend Integer operator+(Integer lhs, const Integer& rhs) { return lhs += rhs; }
    friend Integer operator-(Integer lhs, const Integer& rhs) { return lhs -= rhs; }
    friend Integer operator*(Integer lhs, const Integer& rhs) { return lhs *= rhs; }
    friend Integer operator/(Integer lhs, const Integer& rhs) { return lhs /= rhs; }
    friend Integer operator%(Integer lhs, const Integer& rhs) { return lhs %= rhs; }

    friend bool operator==(const Integer& lhs, const Integer& rhs) noexcept;
    friend std::strong_ordering operator<=>(const Integer& lhs,
                                            const Integer& rhs) noexcept;

    friend std::ostream& operator<<(std::ostream& os, const Integer& value);

private:
    void normalize();

    std::int64_t small_ = 0;
    std::unique_ptr<mpz_class> big_;  // engaged only when the value does not fit
};

[[nodiscard]] Integer abs(const Integer& value);
/// Non-negative greatest common divisor; gcd(0, 0) = 0.
[[nodiscard]] Integer gcd(const Integer& a, const Integer& b);
[[nodiscard]] Integer lcm(const Integer& a, const Integer& b);
[[nodiscard]] Integer pow(const Integer& base, unsigned exponent);
/// Floor of the base-2 logarithm of |value|, or -1 for zero.
[[nodiscard]] long bit_length(const Integer& value);

}  // namespace rackhom

namespace Eigen {

template <>
struct NumTraits<rackhom::Integer> : GenericNumTraits<rackhom::Integer> {
    using Real = rackhom::Integer;
    using NonInteger = rackhom::Integer;
    using Nested = rackhom::Integer;
    using Literal = rackhom::Integer;

    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 4
    };

    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // RACKHOM_INTEGER_HPP
