#ifndef RACKHOM_CHAIN_HPP
#define RACKHOM_CHAIN_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "rackhom/integer.hpp"
#include "rackhom/linalg.hpp"
#include "rackhom/rack.hpp"

namespace rackhom {

/// Refuse to build bases with more elements than this unless told otherwise.
inline constexpr std::size_t default_basis_cap = 1'000'000;

/// A non-commutative monomial x_1 ... x_n; the empty tuple is the unit in
/// degree 0.  Ordered lexicographically.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Element> entries) : entries_(std::move(entries)) {}
    Monomial(std::initializer_list<Element> entries) : entries_(entries) {}

    [[nodiscard]] std::size_t degree() const noexcept { return entries_.size(); }
    [[nodiscard]] std::span<const Element> entries() const noexcept { return entries_; }
    [[nodiscard]] Element operator[](std::size_t i) const { return entries_[i]; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<Element> entries_;
};

/// x · w
[[nodiscard]] Monomial prepend(Element x, const Monomial& w);
[[nodiscard]] Monomial concatenate(const Monomial& u, const Monomial& v);

/// Homogeneous element of CR_n: a sparse integer combination of monomials
/// of one degree.  Zero coefficients are never stored.
class Chain {
public:
    using Terms = std::map<Monomial, Integer>;

    explicit Chain(std::size_t degree = 0) : degree_(degree) {}
    Chain(std::size_t degree, std::initializer_list<std::pair<Monomial, Integer>> terms);

    [[nodiscard]] static Chain of(Monomial m, const Integer& coefficient = 1);
    /// The empty monomial with coefficient one.
    [[nodiscard]] static Chain unit() { return of(Monomial{}); }

    [[nodiscard]] std::size_t degree() const noexcept { return degree_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
    [[nodiscard]] Integer coefficient(const Monomial& m) const;

    /// Throws MixedDegrees when m has the wrong degree.
    void add(const Monomial& m, const Integer& coefficient);
    void add(Monomial&& m, const Integer& coefficient);

    Chain& operator+=(const Chain& rhs);
    Chain& operator-=(const Chain& rhs);
    Chain& operator*=(const Integer& scalar);

    [[nodiscard]] Chain operator-() const;
    friend Chain operator+(Chain lhs, const Chain& rhs) { return lhs += rhs; }
    friend Chain operator-(Chain lhs, const Chain& rhs) { return lhs -= rhs; }
    friend Chain operator*(const Integer& scalar, Chain c) { return c *= scalar; }

    /// Degrees are compared too, so zero chains of different degrees differ.
    friend bool operator==(const Chain&, const Chain&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Chain& c);

private:
    std::size_t degree_;
    Terms terms_;
};

/// x · c
[[nodiscard]] Chain left_multiply(Element x, const Chain& c);
/// Product in the tensor algebra: monomials concatenate.
[[nodiscard]] Chain multiply(const Chain& a, const Chain& b);
/// phi applied letterwise to every monomial.
[[nodiscard]] Chain apply_permutation(std::span<const Element> phi, const Chain& c);

/// |X|^n, or DegreeTooLarge when that exceeds the cap.
[[nodiscard]] std::size_t checked_basis_size(std::size_t rack_size, std::size_t n,
                                             std::size_t basis_cap = default_basis_cap);

/// Lexicographic index of w among the monomials of its degree.
[[nodiscard]] std::size_t monomial_index(const Monomial& w, std::size_t rack_size);
[[nodiscard]] Monomial monomial_at(std::size_t index, std::size_t degree,
                                   std::size_t rack_size);

/// All monomials of degree n in lexicographic order.
[[nodiscard]] std::vector<Monomial> enumerate_basis(const FiniteRack& rack, std::size_t n,
                                                    std::size_t basis_cap = default_basis_cap);

/// d(x_1 ... x_n) = sum_{k=1}^{n-1} (-1)^{k-1} x_1 ... x_{k-1}
///     (x_{k+1} ... x_n - (x_k ▷ x_{k+1}) ... (x_k ▷ x_n)).
/// Zero in degrees 0 and 1.
[[nodiscard]] Chain boundary_of_monomial(const FiniteRack& rack, const Monomial& w);

[[nodiscard]] Chain apply_boundary(const FiniteRack& rack, const Chain& c);

/// Matrix of d_n : CR_n -> CR_{n-1}.  Rows follow the lexicographic basis
/// of degree n-1, columns that of degree n.
struct BoundaryMatrix {
    std::size_t degree = 0;
    SparseIntMatrix matrix;
};

/// Precondition n >= 1.
[[nodiscard]] BoundaryMatrix boundary_matrix(const FiniteRack& rack, std::size_t n,
                                             std::size_t basis_cap = default_basis_cap);

/// The chain map CR(X, phi) -> CR(S, id) induced by the orbit projection:
/// every letter is replaced by its orbit id.
[[nodiscard]] Chain detection_map(const Chain& c, std::span<const std::size_t> orbit_of);

struct StartSetReduction {
    Chain reduced;  ///< every monomial starts in the start set
    Chain witness;  ///< reduced - c = d(witness)
};

/// Rewrites c modulo boundaries so that every monomial starts with an element
/// of start_set, using d(t w) = w - phi(w) - t d(w).  A monomial starting at
/// x outside the set is replaced by phi(w) + t d(w), where t is the first
/// element of the set on the forward orbit of x.  Degree-0 chains are
/// returned unchanged.  Throws NotPermutation or NotGenerating.
[[nodiscard]] StartSetReduction reduce_to_start_set(const FiniteRack& rack, const Chain& c,
                                                    std::span<const Element> start_set);

}  // namespace rackhom

#endif  // RACKHOM_CHAIN_HPP
