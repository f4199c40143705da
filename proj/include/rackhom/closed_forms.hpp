#ifndef RACKHOM_CLOSED_FORMS_HPP
#define RACKHOM_CLOSED_FORMS_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "rackhom/integer.hpp"
#include "rackhom/rack.hpp"

namespace rackhom {

/// Power series in T with integer coefficients, truncated after T^order.
class IntPolynomial {
public:
    explicit IntPolynomial(std::size_t order);
    IntPolynomial(std::size_t order, std::vector<Integer> coefficients);
    IntPolynomial(std::size_t order, std::initializer_list<Integer> coefficients);

    [[nodiscard]] std::size_t order() const noexcept { return coefficients_.size() - 1; }
    [[nodiscard]] const std::vector<Integer>& coefficients() const noexcept {
        return coefficients_;
    }
    /// Zero above the truncation order.
    [[nodiscard]] Integer coefficient(std::size_t k) const;
    void set_coefficient(std::size_t k, Integer value);

    /// Binary operations truncate at the smaller order.
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const Integer& s, const IntPolynomial& a);

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
    friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

private:
    std::vector<Integer> coefficients_;
};

[[nodiscard]] IntPolynomial power(const IntPolynomial& base, std::size_t exponent);

/// numerator / denominator as a power series; needs denominator(0) = ±1.
[[nodiscard]] IntPolynomial series_quotient(const IntPolynomial& numerator,
                                            const IntPolynomial& denominator);

/// Ranks of the equivariant homology of (X, phi) and of its reduced version:
/// Z S in degree 0 and Z S_fin in degree 1.
struct EquivariantRanks {
    std::size_t h0 = 0;
    std::size_t h1 = 0;
    std::size_t reduced_h0 = 0;
    std::size_t reduced_h1 = 0;

    friend bool operator==(const EquivariantRanks&, const EquivariantRanks&) = default;
};

/// Throws EmptySpec when the spec has no orbits.
[[nodiscard]] EquivariantRanks equivariant_ranks(const PermutationSpec& spec);

/// f(T) = (r - 1) + r_fin T, the Poincaré polynomial of the reduced
/// equivariant homology, truncated at the given order.
[[nodiscard]] IntPolynomial reduced_equivariant_series(const PermutationSpec& spec,
                                                       std::size_t order);

/// E^2_{p,q}: 1 at (0, 0), 0 elsewhere in row 0, and for q >= 1 the
/// coefficient of T^p in f(T)^q + f(T)^{q-1}.
[[nodiscard]] Integer e2_rank(const PermutationSpec& spec, std::size_t p, std::size_t q);

/// Sum of e2_rank over p + q = n.
[[nodiscard]] Integer e2_total(const PermutationSpec& spec, std::size_t n);

/// beta_0 = 1, beta_1 = r, beta_{n+2} = (r - 1) beta_{n+1} + r_fin beta_n.
[[nodiscard]] Integer betti(const PermutationSpec& spec, std::size_t n);
/// beta_0 .. beta_{count-1}.
[[nodiscard]] std::vector<Integer> betti_numbers(const PermutationSpec& spec, std::size_t count);

/// The first `terms` coefficients of (1 + T) / (1 - (r - 1) T - r_fin T^2).
[[nodiscard]] IntPolynomial poincare_series(const PermutationSpec& spec, std::size_t terms);

/// Compares 1 - f(T) T with (1 + T)(1 - r T) for f(T) = (r - 1) + r T,
/// coefficientwise through T^{terms-1}.
[[nodiscard]] bool functional_equation_check(std::size_t r, std::size_t terms);

/// Betti numbers of a free permutation rack with r orbits: 1 in degree 0,
/// r (r - 1)^{n-1} above.
[[nodiscard]] Integer free_permutation_rack_rank(std::size_t r, std::size_t n);

/// Betti numbers of the free rack on the given number of generators:
/// 1, generators, then 0.
[[nodiscard]] Integer free_rack_rank(std::size_t generators, std::size_t m);

/// The structure group of a permutation rack is free abelian on its orbits.
[[nodiscard]] std::size_t structure_group_rank(const PermutationSpec& spec);

struct KunnethGap {
    Integer actual;  ///< rank of HR_n of the free permutation rack on r orbits
    Integer naive;   ///< r^n + r^{n-1}, what a Künneth sequence would predict

    friend bool operator==(const KunnethGap&, const KunnethGap&) = default;
};

/// In degree 0 both sides are 1.
[[nodiscard]] KunnethGap kunneth_gap(std::size_t r, std::size_t n);

}  // namespace rackhom

#endif  // RACKHOM_CLOSED_FORMS_HPP
