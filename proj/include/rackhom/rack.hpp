#ifndef RACKHOM_RACK_HPP
#define RACKHOM_RACK_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace rackhom {

/// Rack elements are dense ids 0..size-1.
using Element = std::uint32_t;

/// table(x, y) = x ▷ y.
using RackTable = Eigen::Matrix<Element, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// phi[y] is the image of y.
using Permutation = std::vector<Element>;

/// A finite set with a validated rack operation.  Instances can only be
/// obtained through validate_rack and the named constructors below, so every
/// FiniteRack satisfies both rack axioms.
class FiniteRack {
public:
    [[nodiscard]] std::size_t size() const noexcept {
        return static_cast<std::size_t>(table_.rows());
    }
    [[nodiscard]] Element act(Element x, Element y) const { return table_(x, y); }
    [[nodiscard]] const RackTable& table() const noexcept { return table_; }

    friend bool operator==(const FiniteRack& a, const FiniteRack& b) {
        return a.table_.rows() == b.table_.rows() && a.table_ == b.table_;
    }

private:
    explicit FiniteRack(RackTable table) : table_(std::move(table)) {}
    friend FiniteRack validate_rack(RackTable table);

    RackTable table_;
};

/// Checks that every row is a permutation and that every left
/// multiplication distributes, exhaustively over all triples.
/// Throws NotBijective or NotSelfDistributive with the first witness in
/// lexicographic order.
[[nodiscard]] FiniteRack validate_rack(RackTable table);

/// Same, from nested rows as read from external input.  Also rejects
/// ragged or non-square input (NotSquare) and out-of-range or negative ids
/// (EntryOutOfRange).
[[nodiscard]] FiniteRack validate_rack(const std::vector<std::vector<std::int64_t>>& rows);

/// Orbit data of a permutation, finite or not.  r = orbit_count(), r_fin =
/// finite_orbit_count().
struct PermutationSpec {
    std::vector<std::size_t> finite_orbit_sizes;
    std::size_t free_orbit_count = 0;

    [[nodiscard]] std::size_t orbit_count() const noexcept {
        return finite_orbit_sizes.size() + free_orbit_count;
    }
    [[nodiscard]] std::size_t finite_orbit_count() const noexcept {
        return finite_orbit_sizes.size();
    }
    [[nodiscard]] std::size_t element_count() const noexcept;

    friend bool operator==(const PermutationSpec&, const PermutationSpec&) = default;
};

/// Realizes x ▷ y = phi(y) where phi cycles each orbit; orbit k occupies the
/// ids following those of orbits 0..k-1.  Throws InfiniteOrbits when the
/// spec has free orbits.
[[nodiscard]] FiniteRack permutation_rack(const PermutationSpec& spec);

/// x ▷ y = phi(y) for an explicit permutation.  Throws ValidationError when
/// phi is not a bijection of 0..n-1.
[[nodiscard]] FiniteRack permutation_rack(std::span<const Element> phi);

/// x ▷ y = y.
[[nodiscard]] FiniteRack trivial_rack(std::size_t n);

/// x ▷ y = 2x - y mod n.
[[nodiscard]] FiniteRack dihedral_rack(std::size_t n);

/// The permutation phi with x ▷ y = phi(y), if all rows coincide.
[[nodiscard]] std::optional<Permutation> as_permutation(const FiniteRack& rack);

struct OrbitDecomposition {
    /// Cycles (x_0, ..., x_{d-1}) with phi(x_i) = x_{i+1 mod d}, each starting
    /// at its minimal element, sorted by that element.
    std::vector<std::vector<Element>> orbits;
    std::vector<std::size_t> orbit_of;

    [[nodiscard]] std::size_t orbit_count() const noexcept { return orbits.size(); }
};

[[nodiscard]] OrbitDecomposition orbit_decomposition(std::span<const Element> phi);

/// Finite orbit sizes of a decomposition, in canonical orbit order.
[[nodiscard]] PermutationSpec spec_of(const OrbitDecomposition& orbits);

/// Throws NotPermutation for racks that are not permutation racks.
[[nodiscard]] Permutation require_permutation(const FiniteRack& rack);

}  // namespace rackhom

#endif  // RACKHOM_RACK_HPP
