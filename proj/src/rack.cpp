#include "rackhom/rack.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rackhom/errors.hpp"

namespace rackhom {

FiniteRack validate_rack(RackTable table) {
    const auto n = static_cast<std::size_t>(table.rows());
    if (static_cast<std::size_t>(table.cols()) != n || n == 0) {
        throw Error(Errc::NotSquare, "rack table must be a nonempty square array");
    }
    std::vector<char> seen(n);
    for (std::size_t x = 0; x < n; ++x) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t y = 0; y < n; ++y) {
            const Element v = table(x, y);
            if (v >= n) {
                throw Error(Errc::EntryOutOfRange,
                            "entry " + std::to_string(v) + " at (" + std::to_string(x) +
                                ", " + std::to_string(y) + ") is out of range");
            }
            if (seen[v]) throw NotBijective(x);
            seen[v] = 1;
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const Element xy = table(x, y);
            for (std::size_t z = 0; z < n; ++z) {
                if (table(x, table(y, z)) != table(xy, table(x, z))) {
                    throw NotSelfDistributive(x, y, z);
                }
            }
        }
    }
    return FiniteRack(std::move(table));
}

FiniteRack validate_rack(const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) throw Error(Errc::NotSquare, "rack table must be nonempty");
    RackTable table(n, n);
    for (std::size_t x = 0; x < n; ++x) {
        if (rows[x].size() != n) {
            throw Error(Errc::NotSquare, "row " + std::to_string(x) + " has length " +
                                             std::to_string(rows[x].size()) +
                                             ", expected " + std::to_string(n));
        }
        for (std::size_t y = 0; y < n; ++y) {
            const std::int64_t v = rows[x][y];
            if (v < 0 || static_cast<std::uint64_t>(v) >= n) {
                throw Error(Errc::EntryOutOfRange,
                            "entry " + std::to_string(v) + " at (" + std::to_string(x) +
                                ", " + std::to_string(y) + ") is out of range");
            }
            table(x, y) = static_cast<Element>(v);
        }
    }
    return validate_rack(std::move(table));
}

std::size_t PermutationSpec::element_count() const noexcept {
    return std::accumulate(finite_orbit_sizes.begin(), finite_orbit_sizes.end(),
                           std::size_t{0});
}

FiniteRack permutation_rack(const PermutationSpec& spec) {
    if (spec.free_orbit_count > 0) {
        throw Error(Errc::InfiniteOrbits,
                    "a permutation with free orbits has no finite realization");
    }
    if (spec.finite_orbit_sizes.empty()) {
        throw Error(Errc::EmptySpec, "permutation spec has no orbits");
    }
    Permutation phi;
    phi.reserve(spec.element_count());
    Element start = 0;
    for (std::size_t d : spec.finite_orbit_sizes) {
        if (d == 0) throw Error(Errc::ValidationError, "orbit sizes must be positive");
        for (std::size_t i = 0; i < d; ++i) {
            phi.push_back(start + static_cast<Element>((i + 1) % d));
        }
        start += static_cast<Element>(d);
    }
    return permutation_rack(phi);
}

FiniteRack permutation_rack(std::span<const Element> phi) {
    const std::size_t n = phi.size();
    if (n == 0) throw Error(Errc::ValidationError, "permutation on the empty set");
    std::vector<char> seen(n);
    for (Element v : phi) {
        if (v >= n || seen[v]) {
            throw Error(Errc::ValidationError, "not a permutation of 0.." +
                                                   std::to_string(n - 1));
        }
        seen[v] = 1;
    }
    RackTable table(n, n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) table(x, y) = phi[y];
    }
    return validate_rack(std::move(table));
}

FiniteRack trivial_rack(std::size_t n) {
    Permutation id(n);
    std::iota(id.begin(), id.end(), Element{0});
    return permutation_rack(id);
}

FiniteRack dihedral_rack(std::size_t n) {
    if (n == 0) throw Error(Errc::ValidationError, "dihedral rack needs n >= 1");
    RackTable table(n, n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            table(x, y) = static_cast<Element>((2 * x + n - y) % n);
        }
    }
    return validate_rack(std::move(table));
}

std::optional<Permutation> as_permutation(const FiniteRack& rack) {
    const auto& t = rack.table();
    for (Eigen::Index x = 1; x < t.rows(); ++x) {
        if (t.row(x) != t.row(0)) return std::nullopt;
    }
    return Permutation(t.row(0).begin(), t.row(0).end());
}

Permutation require_permutation(const FiniteRack& rack) {
    auto phi = as_permutation(rack);
    if (!phi) throw Error(Errc::NotPermutation, "left multiplications differ");
    return *std::move(phi);
}

OrbitDecomposition orbit_decomposition(std::span<const Element> phi) {
    constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
    std::vector<char> seen(phi.size());
    for (Element v : phi) {
        if (v >= phi.size() || seen[v]) {
            throw Error(Errc::ValidationError, "orbit decomposition of a non-bijection");
        }
        seen[v] = 1;
    }
    OrbitDecomposition out;
    out.orbit_of.assign(phi.size(), unassigned);
    for (std::size_t start = 0; start < phi.size(); ++start) {
        if (out.orbit_of[start] != unassigned) continue;
        std::vector<Element> cycle;
        Element x = static_cast<Element>(start);
        do {
            out.orbit_of[x] = out.orbits.size();
            cycle.push_back(x);
            x = phi[x];
        } while (x != start);
        out.orbits.push_back(std::move(cycle));
    }
    return out;
}

PermutationSpec spec_of(const OrbitDecomposition& orbits) {
    PermutationSpec spec;
    for (const auto& cycle : orbits.orbits) spec.finite_orbit_sizes.push_back(cycle.size());
    return spec;
}

}  // namespace rackhom
