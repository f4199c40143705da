#include "rackhom/homology.hpp"

#include "rackhom/errors.hpp"
#include "rackhom/linalg.hpp"

namespace rackhom {

HomologyGroup rack_homology(const FiniteRack& rack, std::size_t n, std::size_t basis_cap) {
    const std::size_t dim = checked_basis_size(rack.size(), n, basis_cap);
    const std::size_t incoming =
        n == 0 ? 0 : smith_normal_form(boundary_matrix(rack, n, basis_cap).matrix).rank;
    const auto outgoing = smith_normal_form(boundary_matrix(rack, n + 1, basis_cap).matrix);
    return HomologyGroup{dim - incoming - outgoing.rank, outgoing.torsion()};
}

std::vector<HomologyGroup> homology_table(const FiniteRack& rack, std::size_t max_degree,
                                          std::size_t basis_cap) {
    // Validate the largest basis before doing any work.
    (void)checked_basis_size(rack.size(), max_degree + 1, basis_cap);
    std::vector<HomologyGroup> table;
    table.reserve(max_degree + 1);
    std::size_t incoming = 0;
    for (std::size_t n = 0; n <= max_degree; ++n) {
        const auto outgoing = smith_normal_form(boundary_matrix(rack, n + 1, basis_cap).matrix);
        const std::size_t dim = checked_basis_size(rack.size(), n, basis_cap);
        table.push_back(HomologyGroup{dim - incoming - outgoing.rank, outgoing.torsion()});
        incoming = outgoing.rank;
    }
    return table;
}

bool is_cycle(const FiniteRack& rack, const Chain& c) {
    return apply_boundary(rack, c).is_zero();
}

bool is_rational_boundary(const FiniteRack& rack, const Chain& c, std::size_t basis_cap) {
    if (!is_cycle(rack, c)) throw Error(Errc::NotACycle, "chain has nonzero boundary");
    if (c.is_zero()) return true;
    const SparseIntMatrix d = boundary_matrix(rack, c.degree() + 1, basis_cap).matrix;

    using Triplet = Eigen::Triplet<Integer, SparseIntMatrix::StorageIndex>;
    std::vector<Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(d.nonZeros()) + c.size());
    for (Eigen::Index k = 0; k < d.outerSize(); ++k) {
        for (SparseIntMatrix::InnerIterator it(d, k); it; ++it) {
            triplets.emplace_back(static_cast<SparseIntMatrix::StorageIndex>(it.row()),
                                  static_cast<SparseIntMatrix::StorageIndex>(it.col()),
                                  it.value());
        }
    }
    for (const auto& [m, coeff] : c.terms()) {
        triplets.emplace_back(
            static_cast<SparseIntMatrix::StorageIndex>(monomial_index(m, rack.size())),
            static_cast<SparseIntMatrix::StorageIndex>(d.cols()), coeff);
    }
    SparseIntMatrix augmented(d.rows(), d.cols() + 1);
    augmented.setFromTriplets(triplets.begin(), triplets.end());
    return rational_rank(augmented) == rational_rank(d);
}

}  // namespace rackhom
