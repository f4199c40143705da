#ifndef RACKHOM_CYCLES_HPP
#define RACKHOM_CYCLES_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "rackhom/chain.hpp"
#include "rackhom/rack.hpp"

namespace rackhom {

/// Left multiplication by x - y.
struct Difference {
    Element x;
    Element y;
    friend bool operator==(const Difference&, const Difference&) = default;
};

/// Left multiplication by t t for a fixed point t.
struct FixedSquare {
    Element t;
    friend bool operator==(const FixedSquare&, const FixedSquare&) = default;
};

/// w -> t sum_{i<d} phi^i(t w) for t in an orbit of size d.
struct OrbitAverage {
    Element t;
    std::size_t orbit_size;
    friend bool operator==(const OrbitAverage&, const OrbitAverage&) = default;
};

/// The 1-cycle x; only allowed as the last factor.
struct Terminal {
    Element x;
    friend bool operator==(const Terminal&, const Terminal&) = default;
};

using CycleFactor = std::variant<Difference, FixedSquare, OrbitAverage, Terminal>;

/// A product of cycle-building factors read left to right, applied to the
/// unit (or to the terminal element) from the right.
struct CycleRecipe {
    std::vector<CycleFactor> factors;

    [[nodiscard]] std::size_t degree() const noexcept;
    friend bool operator==(const CycleRecipe&, const CycleRecipe&) = default;
    friend std::ostream& operator<<(std::ostream& os, const CycleRecipe& recipe);
};

/// (x_1 - y_1) ... (x_k - y_k) · terminal.  A cycle on any permutation rack.
[[nodiscard]] Chain difference_product(const FiniteRack& rack,
                                       std::span<const std::pair<Element, Element>> pairs,
                                       Element terminal);

/// t t c.  Throws NotFixedPoint unless phi(t) = t.
[[nodiscard]] Chain fixed_point_square(const FiniteRack& rack, Element t, const Chain& c);

/// t sum_{i=0}^{d-1} phi^i(t c), d the orbit size of t.
[[nodiscard]] Chain orbit_average(const FiniteRack& rack, Element t, const Chain& c);

/// Expands a recipe.  Throws ValidationError on malformed recipes (misplaced
/// terminal, FixedSquare on a moving point, wrong orbit size).
[[nodiscard]] Chain realize(const FiniteRack& rack, const CycleRecipe& recipe);

/// Recipes for B_n with Q the minimal element of each orbit and q* = 0:
///   B_0 = {1},  B_1 = Q,
///   B_n = {(q - q*) b : q in Q \ {q*}, b in B_{n-1}}
///       ∪ {t_av(b) : t in Q, b in B_{n-2}},
/// the difference branch first, each branch in orbit order.  t_av is the
/// orbit average, which is t t on fixed points.
[[nodiscard]] std::vector<CycleRecipe> basis_recipes(const FiniteRack& rack, std::size_t n,
                                                     std::size_t basis_cap = default_basis_cap);

[[nodiscard]] std::vector<Chain> basis_bn(const FiniteRack& rack, std::size_t n,
                                          std::size_t basis_cap = default_basis_cap);

struct IndependenceCertificate {
    std::size_t rank = 0;
    bool independent = true;
};

/// Rank of the detection images of the chains in Z S^n.  Independent images
/// imply independent homology classes.  Throws MixedDegrees.
[[nodiscard]] IndependenceCertificate independence_certificate(const FiniteRack& rack,
                                                               std::span<const Chain> chains);

}  // namespace rackhom

#endif  // RACKHOM_CYCLES_HPP
