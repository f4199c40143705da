#include "rackhom/chain.hpp"

#include <algorithm>
#include <stdexcept>
#include <ostream>
#include <string>

#include "rackhom/errors.hpp"

namespace rackhom {
namespace {

/// Calls emit(face, sign) for the 2(n-1) faces of w, with the sign of
/// each face in d(w).  The face span is only valid during the call.
template <typename Emit>
void for_each_face(const FiniteRack& rack, std::span<const Element> w, Emit&& emit) {
    const std::size_t n = w.size();
    if (n < 2) return;
    std::vector<Element> face(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const int sign = (k % 2 == 0) ? 1 : -1;
        std::copy(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k), face.begin());
        for (std::size_t j = k + 1; j < n; ++j) face[j - 1] = w[j];
        emit(std::span<const Element>(face), sign);
        for (std::size_t j = k + 1; j < n; ++j) face[j - 1] = rack.act(w[k], w[j]);
        emit(std::span<const Element>(face), -sign);
    }
}

}  // namespace

Monomial prepend(Element x, const Monomial& w) {
    std::vector<Element> entries;
    entries.reserve(w.degree() + 1);
    entries.push_back(x);
    entries.insert(entries.end(), w.entries().begin(), w.entries().end());
    return Monomial(std::move(entries));
}

Monomial concatenate(const Monomial& u, const Monomial& v) {
    std::vector<Element> entries(u.entries().begin(), u.entries().end());
    entries.insert(entries.end(), v.entries().begin(), v.entries().end());
    return Monomial(std::move(entries));
}

Chain::Chain(std::size_t degree, std::initializer_list<std::pair<Monomial, Integer>> terms)
    : degree_(degree) {
    for (const auto& [m, c] : terms) add(m, c);
}

Chain Chain::of(Monomial m, const Integer& coefficient) {
    Chain c(m.degree());
    c.add(std::move(m), coefficient);
    return c;
}

Integer Chain::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

void Chain::add(const Monomial& m, const Integer& coefficient) {
    add(Monomial(m), coefficient);
}

void Chain::add(Monomial&& m, const Integer& coefficient) {
    if (m.degree() != degree_) {
        throw Error(Errc::MixedDegrees, "monomial of degree " + std::to_string(m.degree()) +
                                            " added to a chain of degree " +
                                            std::to_string(degree_));
    }
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Chain& Chain::operator+=(const Chain& rhs) {
    if (rhs.degree_ != degree_) {
        throw Error(Errc::MixedDegrees, "adding chains of degrees " + std::to_string(degree_) +
                                            " and " + std::to_string(rhs.degree_));
    }
    for (const auto& [m, c] : rhs.terms_) add(m, c);
    return *this;
}

Chain& Chain::operator-=(const Chain& rhs) { return *this += -rhs; }

Chain& Chain::operator*=(const Integer& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

Chain Chain::operator-() const {
    Chain out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

std::ostream& operator<<(std::ostream& os, const Chain& c) {
    if (c.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [m, coeff] : c.terms()) {
        if (coeff.sign() < 0) {
            os << (first ? "-" : " - ");
        } else if (!first) {
            os << " + ";
        }
        const Integer magnitude = abs(coeff);
        if (magnitude != Integer(1)) os << magnitude << "*";
        os << "(";
        for (std::size_t i = 0; i < m.degree(); ++i) os << (i ? "," : "") << m[i];
        os << ")";
        first = false;
    }
    return os;
}

Chain left_multiply(Element x, const Chain& c) {
    Chain out(c.degree() + 1);
    for (const auto& [m, coeff] : c.terms()) out.add(prepend(x, m), coeff);
    return out;
}

Chain multiply(const Chain& a, const Chain& b) {
    Chain out(a.degree() + b.degree());
    for (const auto& [u, cu] : a.terms()) {
        for (const auto& [v, cv] : b.terms()) out.add(concatenate(u, v), cu * cv);
    }
    return out;
}

Chain apply_permutation(std::span<const Element> phi, const Chain& c) {
    Chain out(c.degree());
    for (const auto& [m, coeff] : c.terms()) {
        std::vector<Element> image(m.degree());
        for (std::size_t i = 0; i < m.degree(); ++i) image[i] = phi[m[i]];
        out.add(Monomial(std::move(image)), coeff);
    }
    return out;
}

std::size_t checked_basis_size(std::size_t rack_size, std::size_t n, std::size_t basis_cap) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (rack_size != 0 && size > basis_cap / rack_size) {
            throw Error(Errc::DegreeTooLarge,
                        std::to_string(rack_size) + "^" + std::to_string(n) +
                            " basis elements exceed the cap of " + std::to_string(basis_cap));
        }
        size *= rack_size;
    }
    if (size > basis_cap) {
        throw Error(Errc::DegreeTooLarge, std::to_string(size) +
                                              " basis elements exceed the cap of " +
                                              std::to_string(basis_cap));
    }
    return size;
}

std::size_t monomial_index(const Monomial& w, std::size_t rack_size) {
    std::size_t index = 0;
    for (Element x : w.entries()) index = index * rack_size + x;
    return index;
}

Monomial monomial_at(std::size_t index, std::size_t degree, std::size_t rack_size) {
    std::vector<Element> entries(degree);
    for (std::size_t i = degree; i-- > 0;) {
        entries[i] = static_cast<Element>(index % rack_size);
        index /= rack_size;
    }
    return Monomial(std::move(entries));
}

std::vector<Monomial> enumerate_basis(const FiniteRack& rack, std::size_t n,
                                      std::size_t basis_cap) {
    const std::size_t count = checked_basis_size(rack.size(), n, basis_cap);
    std::vector<Monomial> basis;
    basis.reserve(count);
    for (std::size_t i = 0; i < count; ++i) basis.push_back(monomial_at(i, n, rack.size()));
    return basis;
}

Chain boundary_of_monomial(const FiniteRack& rack, const Monomial& w) {
    Chain out(w.degree() == 0 ? 0 : w.degree() - 1);
    for_each_face(rack, w.entries(), [&](std::span<const Element> face, int sign) {
        out.add(Monomial(std::vector<Element>(face.begin(), face.end())), Integer(sign));
    });
    return out;
}

Chain apply_boundary(const FiniteRack& rack, const Chain& c) {
    Chain out(c.degree() == 0 ? 0 : c.degree() - 1);
    for (const auto& [m, coeff] : c.terms()) {
        Chain face = boundary_of_monomial(rack, m);
        face *= coeff;
        out += face;
    }
    return out;
}

BoundaryMatrix boundary_matrix(const FiniteRack& rack, std::size_t n, std::size_t basis_cap) {
    if (n == 0) throw std::invalid_argument("boundary_matrix: degree must be at least 1");
    const std::size_t size = rack.size();
    const std::size_t cols = checked_basis_size(size, n, basis_cap);
    const std::size_t rows = checked_basis_size(size, n - 1, basis_cap);

    using Triplet = Eigen::Triplet<Integer, SparseIntMatrix::StorageIndex>;
    std::vector<Triplet> triplets;
    triplets.reserve(cols * (n > 1 ? 2 * (n - 1) : 0));
    std::vector<std::pair<std::size_t, int>> column;
    for (std::size_t j = 0; j < cols; ++j) {
        const Monomial w = monomial_at(j, n, size);
        column.clear();
        for_each_face(rack, w.entries(), [&](std::span<const Element> face, int sign) {
            std::size_t index = 0;
            for (Element x : face) index = index * size + x;
            column.emplace_back(index, sign);
        });
        std::sort(column.begin(), column.end());
        for (std::size_t k = 0; k < column.size();) {
            const std::size_t row = column[k].first;
            int value = 0;
            for (; k < column.size() && column[k].first == row; ++k) value += column[k].second;
            if (value != 0) {
                triplets.emplace_back(static_cast<SparseIntMatrix::StorageIndex>(row),
                                      static_cast<SparseIntMatrix::StorageIndex>(j),
                                      Integer(value));
            }
        }
    }
    BoundaryMatrix out;
    out.degree = n;
    out.matrix.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    out.matrix.setFromTriplets(triplets.begin(), triplets.end());
    return out;
}

Chain detection_map(const Chain& c, std::span<const std::size_t> orbit_of) {
    Chain out(c.degree());
    for (const auto& [m, coeff] : c.terms()) {
        std::vector<Element> image(m.degree());
        for (std::size_t i = 0; i < m.degree(); ++i) {
            image[i] = static_cast<Element>(orbit_of[m[i]]);
        }
        out.add(Monomial(std::move(image)), coeff);
    }
    return out;
}

StartSetReduction reduce_to_start_set(const FiniteRack& rack, const Chain& c,
                                      std::span<const Element> start_set) {
    const Permutation phi = require_permutation(rack);
    const OrbitDecomposition orbits = orbit_decomposition(phi);
    std::vector<char> in_set(rack.size());
    std::vector<char> orbit_hit(orbits.orbit_count());
    for (Element t : start_set) {
        if (t >= rack.size()) throw Error(Errc::EntryOutOfRange, "start set element out of range");
        in_set[t] = 1;
        orbit_hit[orbits.orbit_of[t]] = 1;
    }
    if (std::find(orbit_hit.begin(), orbit_hit.end(), 0) != orbit_hit.end()) {
        throw Error(Errc::NotGenerating, "start set misses an orbit");
    }

    StartSetReduction out{c, Chain(c.degree() + 1)};
    if (c.degree() == 0) return out;

    auto outside = [&](const Chain& chain) {
        return std::find_if(chain.terms().begin(), chain.terms().end(),
                            [&](const auto& term) { return !in_set[term.first[0]]; });
    };
    for (auto it = outside(out.reduced); it != out.reduced.terms().end();
         it = outside(out.reduced)) {
        const Monomial w = it->first;
        const Integer a = it->second;
        Element t = phi[w[0]];
        while (!in_set[t]) t = phi[t];

        // a w = a (phi(w) + t d(w)) + d(a t w)
        Chain replacement = apply_permutation(phi, Chain::of(w));
        replacement += left_multiply(t, boundary_of_monomial(rack, w));
        replacement -= Chain::of(w);
        replacement *= a;
        out.reduced += replacement;
        out.witness.add(prepend(t, w), -a);
    }
    return out;
}

}  // namespace rackhom
