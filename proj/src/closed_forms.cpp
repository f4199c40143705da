#include "rackhom/closed_forms.hpp"

#include <algorithm>
#include <ostream>

#include "rackhom/errors.hpp"

namespace rackhom {
namespace {

void require_orbits(const PermutationSpec& spec) {
    if (spec.orbit_count() == 0) throw Error(Errc::EmptySpec, "permutation spec has no orbits");
}

Integer as_integer(std::size_t v) { return Integer(static_cast<std::uint64_t>(v)); }

}  // namespace

IntPolynomial::IntPolynomial(std::size_t order) : coefficients_(order + 1) {}

IntPolynomial::IntPolynomial(std::size_t order, std::vector<Integer> coefficients)
    : coefficients_(std::move(coefficients)) {
    coefficients_.resize(order + 1);
}

IntPolynomial::IntPolynomial(std::size_t order, std::initializer_list<Integer> coefficients)
    : IntPolynomial(order, std::vector<Integer>(coefficients)) {}

Integer IntPolynomial::coefficient(std::size_t k) const {
    return k < coefficients_.size() ? coefficients_[k] : Integer(0);
}

void IntPolynomial::set_coefficient(std::size_t k, Integer value) {
    if (k < coefficients_.size()) coefficients_[k] = std::move(value);
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial out(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= out.order(); ++k) {
        out.coefficients_[k] = a.coefficients_[k] + b.coefficients_[k];
    }
    return out;
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    return a + Integer(-1) * b;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) {
        if (a.coefficients_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= out.order(); ++j) {
            out.coefficients_[i + j] += a.coefficients_[i] * b.coefficients_[j];
        }
    }
    return out;
}

IntPolynomial operator*(const Integer& s, const IntPolynomial& a) {
    IntPolynomial out = a;
    for (auto& c : out.coefficients_) c *= s;
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
    for (std::size_t k = 0; k <= p.order(); ++k) os << (k ? "," : "") << p.coefficient(k);
    return os;
}

IntPolynomial power(const IntPolynomial& base, std::size_t exponent) {
    IntPolynomial result(base.order(), {Integer(1)});
    for (std::size_t i = 0; i < exponent; ++i) result = result * base;
    return result;
}

IntPolynomial series_quotient(const IntPolynomial& numerator, const IntPolynomial& denominator) {
    const Integer lead = denominator.coefficient(0);
    if (lead != Integer(1) && lead != Integer(-1)) {
        throw std::domain_error("series_quotient: constant term of denominator must be a unit");
    }
    const std::size_t order = std::min(numerator.order(), denominator.order());
    IntPolynomial out(order);
    for (std::size_t n = 0; n <= order; ++n) {
        Integer acc = numerator.coefficient(n);
        for (std::size_t k = 1; k <= n; ++k) {
            acc -= denominator.coefficient(k) * out.coefficient(n - k);
        }
        out.set_coefficient(n, acc * lead);
    }
    return out;
}

EquivariantRanks equivariant_ranks(const PermutationSpec& spec) {
    require_orbits(spec);
    const std::size_t r = spec.orbit_count();
    const std::size_t r_fin = spec.finite_orbit_count();
    return EquivariantRanks{r, r_fin, r - 1, r_fin};
}

IntPolynomial reduced_equivariant_series(const PermutationSpec& spec, std::size_t order) {
    return IntPolynomial(order, {as_integer(spec.orbit_count()) - Integer(1),
                                 as_integer(spec.finite_orbit_count())});
}

Integer e2_rank(const PermutationSpec& spec, std::size_t p, std::size_t q) {
    if (q == 0) return Integer(p == 0 ? 1 : 0);
    if (p > q) return Integer(0);
    const IntPolynomial f = reduced_equivariant_series(spec, p);
    const IntPolynomial lower = power(f, q - 1);
    return (lower * f + lower).coefficient(p);
}

Integer e2_total(const PermutationSpec& spec, std::size_t n) {
    Integer total(0);
    for (std::size_t p = 0; p <= n; ++p) total += e2_rank(spec, p, n - p);
    return total;
}

std::vector<Integer> betti_numbers(const PermutationSpec& spec, std::size_t count) {
    require_orbits(spec);
    const Integer r = as_integer(spec.orbit_count());
    const Integer r_fin = as_integer(spec.finite_orbit_count());
    std::vector<Integer> beta;
    beta.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        if (n == 0) {
            beta.emplace_back(1);
        } else if (n == 1) {
            beta.push_back(r);
        } else {
            beta.push_back((r - Integer(1)) * beta[n - 1] + r_fin * beta[n - 2]);
        }
    }
    return beta;
}

Integer betti(const PermutationSpec& spec, std::size_t n) {
    return betti_numbers(spec, n + 1).back();
}

IntPolynomial poincare_series(const PermutationSpec& spec, std::size_t terms) {
    require_orbits(spec);
    if (terms == 0) throw std::invalid_argument("poincare_series: terms must be positive");
    const std::size_t order = terms - 1;
    const IntPolynomial numerator(order, {Integer(1), Integer(1)});
    const IntPolynomial denominator(order, {Integer(1),
                                            Integer(1) - as_integer(spec.orbit_count()),
                                            -as_integer(spec.finite_orbit_count())});
    return series_quotient(numerator, denominator);
}

bool functional_equation_check(std::size_t r, std::size_t terms) {
    if (terms == 0) return true;
    const std::size_t order = terms - 1;
    const Integer rank = as_integer(r);
    const IntPolynomial f(order, {rank - Integer(1), rank});
    const IntPolynomial t(order, {Integer(0), Integer(1)});
    const IntPolynomial one(order, {Integer(1)});
    const IntPolynomial lhs = one - f * t;
    const IntPolynomial rhs = (one + t) * (one - rank * t);
    return lhs == rhs;
}

Integer free_permutation_rack_rank(std::size_t r, std::size_t n) {
    if (n == 0) return Integer(1);
    return as_integer(r) * pow(as_integer(r) - Integer(1), static_cast<unsigned>(n - 1));
}

Integer free_rack_rank(std::size_t generators, std::size_t m) {
    if (m == 0) return Integer(1);
    if (m == 1) return as_integer(generators);
    return Integer(0);
}

std::size_t structure_group_rank(const PermutationSpec& spec) {
    require_orbits(spec);
    return spec.orbit_count();
}

KunnethGap kunneth_gap(std::size_t r, std::size_t n) {
    const Integer actual = free_permutation_rack_rank(r, n);
    if (n == 0) return KunnethGap{actual, Integer(1)};
    const Integer rank = as_integer(r);
    const auto e = static_cast<unsigned>(n);
    return KunnethGap{actual, pow(rank, e) + pow(rank, e - 1)};
}

}  // namespace rackhom
