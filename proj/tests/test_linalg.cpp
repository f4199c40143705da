#include <doctest.h>

#include <random>

#include "rackhom/linalg.hpp"

using namespace rackhom;

namespace {

DenseIntMatrix dense(std::initializer_list<std::initializer_list<long>> rows) {
    const auto r = static_cast<Eigen::Index>(rows.size());
    const auto c = r ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
    DenseIntMatrix m(r, c);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (long v : row) m(i, j++) = Integer(v);
        ++i;
    }
    return m;
}

DenseIntMatrix random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols,
                             int bound, double density) {
    std::uniform_int_distribution<int> value(-bound, bound);
    std::bernoulli_distribution keep(density);
    DenseIntMatrix m = DenseIntMatrix::Constant(rows, cols, Integer(0));
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            if (keep(rng)) m(i, j) = Integer(value(rng));
        }
    }
    return m;
}

// Cofactor expansion; only for tiny matrices.
Integer cofactor_det(const DenseIntMatrix& m) {
    const Eigen::Index n = m.rows();
    if (n == 0) return Integer(1);
    if (n == 1) return m(0, 0);
    Integer sum(0);
    for (Eigen::Index j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        DenseIntMatrix minor(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r) {
            for (Eigen::Index c = 0, k = 0; c < n; ++c) {
                if (c != j) minor(r - 1, k++) = m(r, c);
            }
        }
        const Integer term = m(0, j) * cofactor_det(minor);
        if (j % 2 == 0) sum += term;
        else sum -= term;
    }
    return sum;
}

void subsets(Eigen::Index n, Eigen::Index k, Eigen::Index from, std::vector<Eigen::Index>& cur,
             std::vector<std::vector<Eigen::Index>>& out) {
    if (Eigen::Index(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (Eigen::Index i = from; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// Elementary divisors as quotients of successive gcds of k x k minors.
std::vector<Integer> determinantal_divisors(const DenseIntMatrix& m) {
    std::vector<Integer> out;
    Integer previous(1);
    for (Eigen::Index k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        std::vector<std::vector<Eigen::Index>> rs, cs;
        std::vector<Eigen::Index> cur;
        subsets(m.rows(), k, 0, cur, rs);
        subsets(m.cols(), k, 0, cur, cs);
        Integer g(0);
        for (const auto& r : rs) {
            for (const auto& c : cs) {
                DenseIntMatrix sub(k, k);
                for (Eigen::Index i = 0; i < k; ++i) {
                    for (Eigen::Index j = 0; j < k; ++j) sub(i, j) = m(r[i], c[j]);
                }
                g = gcd(g, cofactor_det(sub));
            }
        }
        if (g.is_zero()) break;
        out.push_back(g / previous);
        previous = g;
    }
    return out;
}

std::vector<Integer> ints(std::initializer_list<long> values) {
    std::vector<Integer> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

void check_transforms(const DenseIntMatrix& a, const SmithForm<Integer>& s) {
    REQUIRE(s.left);
    REQUIRE(s.right);
    const DenseIntMatrix product = (*s.left) * a * (*s.right);
    DenseIntMatrix diagonal = DenseIntMatrix::Constant(a.rows(), a.cols(), Integer(0));
    for (std::size_t i = 0; i < s.rank; ++i) diagonal(Eigen::Index(i), Eigen::Index(i)) = s.divisors[i];
    CHECK(product == diagonal);
    CHECK(abs(exact_determinant(*s.left)) == Integer(1));
    CHECK(abs(exact_determinant(*s.right)) == Integer(1));
}

}  // namespace

TEST_CASE("smith form of small fixed matrices") {
    const auto zero = smith_normal_form(DenseIntMatrix(DenseIntMatrix::Constant(3, 3, Integer(0))));
    CHECK(zero.rank == 0);
    CHECK(zero.divisors.empty());
    const auto identity = smith_normal_form(DenseIntMatrix(DenseIntMatrix::Identity(3, 3)));
    CHECK(identity.divisors == ints({1, 1, 1}));
    const auto s = smith_normal_form(dense({{2, 4}, {6, 8}}), true);
    CHECK(s.rank == 2);
    CHECK(s.divisors == ints({2, 4}));
    CHECK(s.torsion() == ints({2, 4}));
    check_transforms(dense({{2, 4}, {6, 8}}), s);
}

TEST_CASE("smith form needing gcd pivots") {
    // Diagonal (2, 3) is not in normal form: the divisors are (1, 6).
    const auto a = dense({{2, 0}, {0, 3}});
    const auto s = smith_normal_form(a, true);
    CHECK(s.divisors == ints({1, 6}));
    check_transforms(a, s);
    const auto b = dense({{4, 6, 0}, {0, 10, 15}, {6, 0, 9}});
    const auto sb = smith_normal_form(b, true);
    CHECK(sb.divisors == determinantal_divisors(b));
    check_transforms(b, sb);
    const auto c = dense({{0, 0, 0}, {0, 0, 5}});
    const auto sc = smith_normal_form(c, true);
    CHECK(sc.divisors == ints({5}));
    check_transforms(c, sc);
}

TEST_CASE("smith form with empty dimensions") {
    const auto s = smith_normal_form(DenseIntMatrix(0, 4), true);
    CHECK(s.rank == 0);
    CHECK(s.left->rows() == 0);
    CHECK(s.right->rows() == 4);
    CHECK(rational_rank(DenseIntMatrix(3, 0)) == 0);
}

TEST_CASE("smith form agrees with determinantal divisors") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const auto rows = 1 + trial % 4;
        const auto cols = 1 + (trial / 4) % 4;
        const auto a = random_matrix(rng, rows, cols, 6, 0.7);
        const auto s = smith_normal_form(a, true);
        CHECK(s.divisors == determinantal_divisors(a));
        check_transforms(a, s);
    }
}

TEST_CASE("large entries leave the machine word") {
    DenseIntMatrix a(2, 2);
    a << Integer("123456789012345678901"), Integer("98765432109876543210"),
        Integer("11111111111111111111"), Integer("22222222222222222223");
    const auto s = smith_normal_form(a, true);
    CHECK(s.rank == 2);
    CHECK(s.divisors == determinantal_divisors(a));
    check_transforms(a, s);
    CHECK(exact_determinant(a) == cofactor_det(a));
}

TEST_CASE("rational rank") {
    CHECK(rational_rank(DenseIntMatrix(DenseIntMatrix::Constant(2, 3, Integer(0)))) == 0);
    CHECK(rational_rank(DenseIntMatrix(DenseIntMatrix::Identity(4, 4))) == 4);
    CHECK(rational_rank(dense({{1, 2}, {2, 4}})) == 1);
    CHECK(rational_rank(dense({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
}

TEST_CASE("modular rank bounds the rational rank") {
    const SparseIntMatrix a = dense({{2, 4}, {6, 8}}).sparseView();
    CHECK(modular_rank(a, 2) == 0);
    CHECK(modular_rank(a, 3) == 2);
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        const SparseIntMatrix m = random_matrix(rng, 6, 7, 9, 0.4).sparseView();
        const std::size_t rank = rational_rank(m);
        CHECK(modular_rank(m, 1'000'000'007u) == rank);
        CHECK(modular_rank(m, 5) <= rank);
    }
}

TEST_CASE("Bareiss determinant") {
    CHECK(exact_determinant(dense({{2, 4}, {6, 8}})) == Integer(-8));
    CHECK(exact_determinant(dense({{0, 1}, {1, 0}})) == Integer(-1));
    CHECK(exact_determinant(dense({{1, 2}, {2, 4}})) == Integer(0));
    CHECK(exact_determinant(DenseIntMatrix(0, 0)) == Integer(1));
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const auto n = 1 + trial % 5;
        const auto a = random_matrix(rng, n, n, 9, 0.8);
        CHECK(exact_determinant(a) == cofactor_det(a));
    }
}

TEST_CASE("smith form is deterministic and permutation invariant") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_matrix(rng, 8, 6, 9, 0.35);
        const auto s = smith_normal_form(a);
        CHECK(smith_normal_form(a).divisors == s.divisors);
        Eigen::PermutationMatrix<Eigen::Dynamic> p(8), q(6);
        p.setIdentity();
        q.setIdentity();
        std::shuffle(p.indices().data(), p.indices().data() + 8, rng);
        std::shuffle(q.indices().data(), q.indices().data() + 6, rng);
        const DenseIntMatrix shuffled = p * a * q;
        CHECK(smith_normal_form(shuffled).divisors == s.divisors);
    }
}
