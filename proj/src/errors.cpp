#include "rackhom/errors.hpp"

namespace rackhom {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::NotSquare: return "NotSquare";
        case Errc::EntryOutOfRange: return "EntryOutOfRange";
        case Errc::NotBijective: return "NotBijective";
        case Errc::NotSelfDistributive: return "NotSelfDistributive";
        case Errc::InfiniteOrbits: return "InfiniteOrbits";
        case Errc::NotPermutation: return "NotPermutation";
        case Errc::NotGenerating: return "NotGenerating";
        case Errc::NotFixedPoint: return "NotFixedPoint";
        case Errc::DegreeTooLarge: return "DegreeTooLarge";
        case Errc::MixedDegrees: return "MixedDegrees";
        case Errc::NotACycle: return "NotACycle";
        case Errc::EmptySpec: return "EmptySpec";
        case Errc::ParseError: return "ParseError";
        case Errc::ValidationError: return "ValidationError";
    }
    return "Unknown";
}

NotBijective::NotBijective(std::size_t row)
    : Error(Errc::NotBijective,
            "left multiplication by " + std::to_string(row) + " is not a bijection"),
      row_(row) {}

NotSelfDistributive::NotSelfDistributive(std::size_t x, std::size_t y, std::size_t z)
    : Error(Errc::NotSelfDistributive,
            "self-distributivity fails at (x, y, z) = (" + std::to_string(x) + ", " +
                std::to_string(y) + ", " + std::to_string(z) + ")"),
      x_(x),
      y_(y),
      z_(z) {}

}  // namespace rackhom
