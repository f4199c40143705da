#include "rackhom/cycles.hpp"

#include <ostream>
#include <string>

#include "rackhom/errors.hpp"
#include "rackhom/linalg.hpp"

namespace rackhom {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::size_t orbit_size_of(std::span<const Element> phi, Element t) {
    std::size_t d = 1;
    for (Element x = phi[t]; x != t; x = phi[x]) ++d;
    return d;
}

Chain average_with(std::span<const Element> phi, Element t, std::size_t d, const Chain& c) {
    Chain shifted = left_multiply(t, c);
    Chain sum(shifted.degree());
    for (std::size_t i = 0; i < d; ++i) {
        sum += shifted;
        shifted = apply_permutation(phi, shifted);
    }
    return left_multiply(t, sum);
}

}  // namespace

std::size_t CycleRecipe::degree() const noexcept {
    std::size_t n = 0;
    for (const auto& f : factors) {
        n += std::visit(overloaded{[](const Difference&) { return std::size_t{1}; },
                                   [](const FixedSquare&) { return std::size_t{2}; },
                                   [](const OrbitAverage&) { return std::size_t{2}; },
                                   [](const Terminal&) { return std::size_t{1}; }},
                        f);
    }
    return n;
}

std::ostream& operator<<(std::ostream& os, const CycleRecipe& recipe) {
    if (recipe.factors.empty()) return os << "1";
    bool first = true;
    for (const auto& f : recipe.factors) {
        if (!first) os << " ";
        first = false;
        std::visit(overloaded{[&](const Difference& d) { os << "(" << d.x << "-" << d.y << ")"; },
                              [&](const FixedSquare& s) { os << s.t << "^2"; },
                              [&](const OrbitAverage& a) {
                                  os << "av(" << a.t << "," << a.orbit_size << ")";
                              },
                              [&](const Terminal& t) { os << t.x; }},
                   f);
    }
    return os;
}

Chain difference_product(const FiniteRack& rack,
                         std::span<const std::pair<Element, Element>> pairs, Element terminal) {
    (void)require_permutation(rack);
    Chain c = Chain::of(Monomial{terminal});
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
        c = left_multiply(it->first, c) - left_multiply(it->second, c);
    }
    return c;
}

Chain fixed_point_square(const FiniteRack& rack, Element t, const Chain& c) {
    const Permutation phi = require_permutation(rack);
    if (phi[t] != t) {
        throw Error(Errc::NotFixedPoint, std::to_string(t) + " is not a fixed point");
    }
    return left_multiply(t, left_multiply(t, c));
}

Chain orbit_average(const FiniteRack& rack, Element t, const Chain& c) {
    const Permutation phi = require_permutation(rack);
    return average_with(phi, t, orbit_size_of(phi, t), c);
}

Chain realize(const FiniteRack& rack, const CycleRecipe& recipe) {
    const Permutation phi = require_permutation(rack);
    const auto& factors = recipe.factors;
    std::size_t end = factors.size();
    Chain c = Chain::unit();
    if (end > 0) {
        if (const auto* t = std::get_if<Terminal>(&factors.back())) {
            c = Chain::of(Monomial{t->x});
            --end;
        }
    }
    for (std::size_t k = end; k-- > 0;) {
        c = std::visit(
            overloaded{
                [&](const Difference& d) {
                    return left_multiply(d.x, c) - left_multiply(d.y, c);
                },
                [&](const FixedSquare& s) {
                    if (phi[s.t] != s.t) {
                        throw Error(Errc::ValidationError,
                                    "FixedSquare on non-fixed point " + std::to_string(s.t));
                    }
                    return left_multiply(s.t, left_multiply(s.t, c));
                },
                [&](const OrbitAverage& a) {
                    if (orbit_size_of(phi, a.t) != a.orbit_size) {
                        throw Error(Errc::ValidationError,
                                    "OrbitAverage with wrong orbit size at " +
                                        std::to_string(a.t));
                    }
                    return average_with(phi, a.t, a.orbit_size, c);
                },
                [&](const Terminal&) -> Chain {
                    throw Error(Errc::ValidationError, "Terminal must be the last factor");
                }},
            factors[k]);
    }
    return c;
}

std::vector<CycleRecipe> basis_recipes(const FiniteRack& rack, std::size_t n,
                                       std::size_t basis_cap) {
    (void)checked_basis_size(rack.size(), n, basis_cap);
    const Permutation phi = require_permutation(rack);
    const OrbitDecomposition orbits = orbit_decomposition(phi);

    std::vector<CycleFactor> averages;
    for (const auto& cycle : orbits.orbits) {
        const Element t = cycle.front();
        if (cycle.size() == 1) {
            averages.emplace_back(FixedSquare{t});
        } else {
            averages.emplace_back(OrbitAverage{t, cycle.size()});
        }
    }
    const Element q_star = orbits.orbits.front().front();

    std::vector<std::vector<CycleRecipe>> levels;
    levels.push_back({CycleRecipe{}});
    if (n >= 1) {
        std::vector<CycleRecipe> first;
        for (const auto& cycle : orbits.orbits) first.push_back(CycleRecipe{{Terminal{cycle.front()}}});
        levels.push_back(std::move(first));
    }
    for (std::size_t k = 2; k <= n; ++k) {
        std::vector<CycleRecipe> level;
        for (std::size_t o = 1; o < orbits.orbit_count(); ++o) {
            const Element q = orbits.orbits[o].front();
            for (const auto& b : levels[k - 1]) {
                CycleRecipe r{{Difference{q, q_star}}};
                r.factors.insert(r.factors.end(), b.factors.begin(), b.factors.end());
                level.push_back(std::move(r));
            }
        }
        for (const auto& factor : averages) {
            for (const auto& b : levels[k - 2]) {
                CycleRecipe r{{factor}};
                r.factors.insert(r.factors.end(), b.factors.begin(), b.factors.end());
                level.push_back(std::move(r));
            }
        }
        levels.push_back(std::move(level));
    }
    return std::move(levels[n]);
}

std::vector<Chain> basis_bn(const FiniteRack& rack, std::size_t n, std::size_t basis_cap) {
    std::vector<Chain> out;
    for (const auto& recipe : basis_recipes(rack, n, basis_cap)) out.push_back(realize(rack, recipe));
    return out;
}

IndependenceCertificate independence_certificate(const FiniteRack& rack,
                                                 std::span<const Chain> chains) {
    if (chains.empty()) return {};
    const std::size_t degree = chains.front().degree();
    for (const auto& c : chains) {
        if (c.degree() != degree) throw Error(Errc::MixedDegrees, "chains of different degrees");
    }
    const Permutation phi = require_permutation(rack);
    const OrbitDecomposition orbits = orbit_decomposition(phi);
    const std::size_t rows = checked_basis_size(orbits.orbit_count(), degree);

    using Triplet = Eigen::Triplet<Integer, SparseIntMatrix::StorageIndex>;
    std::vector<Triplet> triplets;
    for (std::size_t j = 0; j < chains.size(); ++j) {
        const Chain image = detection_map(chains[j], orbits.orbit_of);
        for (const auto& [m, coeff] : image.terms()) {
            triplets.emplace_back(
                static_cast<SparseIntMatrix::StorageIndex>(monomial_index(m, orbits.orbit_count())),
                static_cast<SparseIntMatrix::StorageIndex>(j), coeff);
        }
    }
    SparseIntMatrix images(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(chains.size()));
    images.setFromTriplets(triplets.begin(), triplets.end());
    const std::size_t rank = rational_rank(images);
    return IndependenceCertificate{rank, rank == chains.size()};
}

}  // namespace rackhom
