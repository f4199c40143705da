#ifndef RACKHOM_ERRORS_HPP
#define RACKHOM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rackhom {

enum class Errc {
    NotSquare,
    EntryOutOfRange,
    NotBijective,
    NotSelfDistributive,
    InfiniteOrbits,
    NotPermutation,
    NotGenerating,
    NotFixedPoint,
    DegreeTooLarge,
    MixedDegrees,
    NotACycle,
    EmptySpec,
    ParseError,
    ValidationError,
};

/// Stable identifier of an error code, used verbatim in CLI diagnostics.
[[nodiscard]] std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    [[nodiscard]] Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

class NotBijective : public Error {
public:
    explicit NotBijective(std::size_t row);
    [[nodiscard]] std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

/// Carries a witnessing triple: x ▷ (y ▷ z) ≠ (x ▷ y) ▷ (x ▷ z).
class NotSelfDistributive : public Error {
public:
    NotSelfDistributive(std::size_t x, std::size_t y, std::size_t z);
    [[nodiscard]] std::size_t x() const noexcept { return x_; }
    [[nodiscard]] std::size_t y() const noexcept { return y_; }
    [[nodiscard]] std::size_t z() const noexcept { return z_; }

private:
    std::size_t x_, y_, z_;
};

}  // namespace rackhom

#endif  // RACKHOM_ERRORS_HPP
