#ifndef RACKHOM_TESTS_SUPPORT_HPP
#define RACKHOM_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "rackhom/chain.hpp"
#include "rackhom/rack.hpp"

namespace support {

using rackhom::Element;

inline rackhom::Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
    rackhom::Permutation phi(n);
    std::iota(phi.begin(), phi.end(), Element{0});
    std::shuffle(phi.begin(), phi.end(), rng);
    return phi;
}

// x ▷ y = t y + (1 - t) x mod n with t a unit; always a rack.
inline rackhom::FiniteRack alexander_rack(std::size_t n, std::int64_t t) {
    const auto m = static_cast<std::int64_t>(n);
    std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
    for (std::int64_t x = 0; x < m; ++x) {
        for (std::int64_t y = 0; y < m; ++y) {
            rows[x][y] = (((t * y + (1 - t) * x) % m) + m) % m;
        }
    }
    return rackhom::validate_rack(rows);
}

// A mix of permutation, dihedral, trivial and Alexander racks with 1..max_size elements.
inline rackhom::FiniteRack random_rack(std::mt19937_64& rng, std::size_t max_size) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_size)(rng);
    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
        case 0: return rackhom::dihedral_rack(n);
        case 1: return rackhom::trivial_rack(n);
        case 2: {
            std::vector<std::int64_t> units;
            for (std::int64_t t = 1; t < static_cast<std::int64_t>(std::max<std::size_t>(n, 2)); ++t) {
                if (std::gcd(t, static_cast<std::int64_t>(n)) == 1) units.push_back(t);
            }
            if (units.empty()) units.push_back(1);
            const auto t = units[std::uniform_int_distribution<std::size_t>(0, units.size() - 1)(rng)];
            return alexander_rack(n, t);
        }
        default: {
            const auto phi = random_permutation(rng, n);
            return rackhom::permutation_rack(phi);
        }
    }
}

inline rackhom::Monomial random_monomial(std::mt19937_64& rng, std::size_t size,
                                         std::size_t degree) {
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(size - 1));
    std::vector<Element> entries(degree);
    for (auto& e : entries) e = pick(rng);
    return rackhom::Monomial(std::move(entries));
}

inline rackhom::Chain random_chain(std::mt19937_64& rng, std::size_t size, std::size_t degree,
                                   std::size_t max_terms = 6) {
    rackhom::Chain c(degree);
    const std::size_t terms = std::uniform_int_distribution<std::size_t>(1, max_terms)(rng);
    std::uniform_int_distribution<int> coefficient(-5, 5);
    for (std::size_t k = 0; k < terms; ++k) {
        c.add(random_monomial(rng, size, degree), coefficient(rng));
    }
    return c;
}

// All permutation racks up to relabelling: one per partition of n.
inline std::vector<std::vector<std::size_t>> partitions(std::size_t n, std::size_t largest) {
    if (n == 0) return {{}};
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t first = std::min(n, largest); first >= 1; --first) {
        for (auto rest : partitions(n - first, first)) {
            rest.insert(rest.begin(), first);
            out.push_back(std::move(rest));
        }
    }
    return out;
}

}  // namespace support

#endif  // RACKHOM_TESTS_SUPPORT_HPP
