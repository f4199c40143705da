#ifndef RACKHOM_HOMOLOGY_HPP
#define RACKHOM_HOMOLOGY_HPP

#include <cstddef>
#include <vector>

#include "rackhom/chain.hpp"
#include "rackhom/integer.hpp"
#include "rackhom/rack.hpp"

namespace rackhom {

/// Z^free_rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k with 1 < t_1 | t_2 | ... | t_k.
struct HomologyGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// HR_n by brute force: free rank dim CR_n - rank d_n - rank d_{n+1}, with
/// d_0 = 0, and torsion from the elementary divisors of d_{n+1}.
[[nodiscard]] HomologyGroup rack_homology(const FiniteRack& rack, std::size_t n,
                                          std::size_t basis_cap = default_basis_cap);

/// HR_0 .. HR_max_degree; every boundary matrix is reduced once.
[[nodiscard]] std::vector<HomologyGroup> homology_table(const FiniteRack& rack,
                                                        std::size_t max_degree,
                                                        std::size_t basis_cap = default_basis_cap);

[[nodiscard]] bool is_cycle(const FiniteRack& rack, const Chain& c);

/// Whether the cycle c is a boundary over the rationals, i.e. appending c as
/// a column does not raise the rank of d_{n+1}.  Throws NotACycle.
[[nodiscard]] bool is_rational_boundary(const FiniteRack& rack, const Chain& c,
                                        std::size_t basis_cap = default_basis_cap);

}  // namespace rackhom

#endif  // RACKHOM_HOMOLOGY_HPP
