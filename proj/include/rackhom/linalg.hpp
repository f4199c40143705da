#ifndef RACKHOM_LINALG_HPP
#define RACKHOM_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "rackhom/integer.hpp"

namespace rackhom {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using SparseMatrix = Eigen::SparseMatrix<Scalar>;

using DenseIntMatrix = DenseMatrix<Integer>;
using SparseIntMatrix = SparseMatrix<Integer>;

/// U * A * V = diag(divisors, 0, ...), divisors[i] | divisors[i+1], all
/// positive.  The transforms are only present when requested.
template <typename Scalar>
struct SmithForm {
    std::size_t rank = 0;
    std::vector<Scalar> divisors;
    std::optional<DenseMatrix<Scalar>> left;   ///< U, rows x rows
    std::optional<DenseMatrix<Scalar>> right;  ///< V, cols x cols

    /// The divisors exceeding one.
    [[nodiscard]] std::vector<Scalar> torsion() const {
        std::vector<Scalar> out;
        for (const auto& d : divisors) {
            if (d > Scalar(1)) out.push_back(d);
        }
        return out;
    }
};

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
    return x < Scalar(0) ? Scalar(-x) : x;
}

/// Returns (g, s, t) with s a + t b = g = gcd(a, b) >= 0.
template <typename Scalar>
std::tuple<Scalar, Scalar, Scalar> extended_gcd(const Scalar& a, const Scalar& b) {
    Scalar old_r = a, r = b;
    Scalar old_s = 1, s = 0;
    Scalar old_t = 0, t = 1;
    while (r != Scalar(0)) {
        const Scalar q = old_r / r;
        Scalar next = old_r - q * r;
        old_r = std::move(r);
        r = std::move(next);
        next = old_s - q * s;
        old_s = std::move(s);
        s = std::move(next);
        next = old_t - q * t;
        old_t = std::move(t);
        t = std::move(next);
    }
    if (old_r < Scalar(0)) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

template <typename Scalar>
bool divides(const Scalar& d, const Scalar& x) {
    return x % d == Scalar(0);
}

/// Sparse working copy of a matrix for unimodular elimination.  Values live
/// in rows sorted by column; columns keep sorted lists of their row ids.
template <typename Scalar>
class SmithEliminator {
public:
    using Index = std::ptrdiff_t;
    using Entry = std::pair<Index, Scalar>;

    SmithEliminator(const SparseMatrix<Scalar>& a, bool with_transforms)
        : rows_(static_cast<std::size_t>(a.rows())), cols_(static_cast<std::size_t>(a.cols())) {
        for (Index k = 0; k < a.outerSize(); ++k) {
            for (typename SparseMatrix<Scalar>::InnerIterator it(a, k); it; ++it) {
                if (it.value() == Scalar(0)) continue;
                rows_[static_cast<std::size_t>(it.row())].emplace_back(it.col(), it.value());
            }
        }
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            auto& row = rows_[i];
            std::sort(row.begin(), row.end(),
                      [](const Entry& x, const Entry& y) { return x.first < y.first; });
            for (const auto& [c, v] : row) cols_[static_cast<std::size_t>(c)].push_back(Index(i));
        }
        if (with_transforms) {
            left_ = DenseMatrix<Scalar>::Identity(a.rows(), a.rows());
            right_ = DenseMatrix<Scalar>::Identity(a.cols(), a.cols());
        }
    }

    SmithForm<Scalar> run() {
        while (auto pivot = choose_pivot()) {
            const auto [i, c] = settle(pivot->first, pivot->second);
            pivots_.push_back({i, c, get(i, c)});
            set(i, c, Scalar(0));
        }
        enforce_divisibility();
        return finish();
    }

private:
    struct Pivot {
        Index row;
        Index col;
        Scalar value;
    };

    std::vector<Entry>& row(Index i) { return rows_[static_cast<std::size_t>(i)]; }
    std::vector<Index>& col(Index c) { return cols_[static_cast<std::size_t>(c)]; }

    Scalar get(Index i, Index c) {
        auto& r = row(i);
        auto it = std::lower_bound(r.begin(), r.end(), c,
                                   [](const Entry& e, Index key) { return e.first < key; });
        return (it != r.end() && it->first == c) ? it->second : Scalar(0);
    }

    void set(Index i, Index c, Scalar value) {
        auto& r = row(i);
        auto it = std::lower_bound(r.begin(), r.end(), c,
                                   [](const Entry& e, Index key) { return e.first < key; });
        const bool present = it != r.end() && it->first == c;
        auto& rows_of_c = col(c);
        if (value == Scalar(0)) {
            if (!present) return;
            r.erase(it);
            rows_of_c.erase(std::lower_bound(rows_of_c.begin(), rows_of_c.end(), i));
        } else if (present) {
            it->second = std::move(value);
        } else {
            r.insert(it, Entry{c, std::move(value)});
            rows_of_c.insert(std::lower_bound(rows_of_c.begin(), rows_of_c.end(), i), i);
        }
    }

    /// Smallest nonzero magnitude first, then least Markowitz cost
    /// (row fill - 1) * (column fill - 1), then position.
    std::optional<std::pair<Index, Index>> choose_pivot() {
        std::optional<std::pair<Index, Index>> best;
        Scalar best_abs{};
        std::size_t best_cost = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto& r = rows_[i];
            if (r.empty()) continue;
            const std::size_t row_fill = r.size() - 1;
            for (const auto& [c, v] : r) {
                Scalar mag = abs_value(v);
                const std::size_t cost = row_fill * (cols_[static_cast<std::size_t>(c)].size() - 1);
                if (!best || mag < best_abs || (mag == best_abs && cost < best_cost)) {
                    best = {Index(i), c};
                    best_abs = std::move(mag);
                    best_cost = cost;
                    if (best_abs == Scalar(1) && best_cost == 0) return best;
                }
            }
        }
        return best;
    }

    /// Clears row i and column c except for the pivot.  Entries are reduced by
    /// the nearest-integer quotient; a nonzero remainder is smaller than the
    /// pivot and becomes the next pivot.  Returns the final pivot position.
    std::pair<Index, Index> settle(Index i, Index c) {
        for (;;) {
            std::optional<std::pair<Index, Index>> smaller;
            Scalar smallest{};
            const auto note = [&](Index r, Index k) {
                Scalar mag = abs_value(get(r, k));
                if (!smaller || mag < smallest) {
                    smaller = {r, k};
                    smallest = std::move(mag);
                }
            };
            const std::vector<Index> others = col(c);
            for (Index j : others) {
                if (j == i) continue;
                const Scalar q = nearest_quotient(get(j, c), get(i, c));
                if (q != Scalar(0)) combine_rows(i, j, 1, 0, -q, 1);
                if (get(j, c) != Scalar(0)) note(j, c);
            }
            if (!smaller) {
                std::vector<Index> ks;
                for (const auto& [k, v] : row(i)) {
                    if (k != c) ks.push_back(k);
                }
                for (Index k : ks) {
                    const Scalar q = nearest_quotient(get(i, k), get(i, c));
                    if (q != Scalar(0)) combine_cols(c, k, 1, 0, -q, 1);
                    if (get(i, k) != Scalar(0)) note(i, k);
                }
            }
            if (!smaller) return {i, c};
            i = smaller->first;
            c = smaller->second;
        }
    }

    /// Rounds a / p to the nearest integer, so |a - q p| <= |p| / 2.
    static Scalar nearest_quotient(const Scalar& a, const Scalar& p) {
        const Scalar two(2);
        Scalar q = a / p;
        const Scalar r = a - q * p;
        if (abs_value(two * r) > abs_value(p)) {
            q += ((r < Scalar(0)) == (p < Scalar(0))) ? Scalar(1) : Scalar(-1);
        }
        return q;
    }

    /// row_i <- a row_i + b row_j,  row_j <- c row_i + d row_j.
    void combine_rows(Index i, Index j, const Scalar& a, const Scalar& b, const Scalar& c,
                      const Scalar& d) {
        const bool keep_i = a == Scalar(1) && b == Scalar(0);
        std::vector<Entry> new_i;
        std::vector<Entry> new_j;
        const auto& ri = row(i);
        const auto& rj = row(j);
        std::size_t x = 0, y = 0;
        while (x < ri.size() || y < rj.size()) {
            Index column;
            Scalar vi{}, vj{};
            if (y == rj.size() || (x < ri.size() && ri[x].first < rj[y].first)) {
                column = ri[x].first;
                vi = ri[x++].second;
            } else if (x == ri.size() || rj[y].first < ri[x].first) {
                column = rj[y].first;
                vj = rj[y++].second;
            } else {
                column = ri[x].first;
                vi = ri[x++].second;
                vj = rj[y++].second;
            }
            if (!keep_i) {
                Scalar v = a * vi + b * vj;
                if (v != Scalar(0)) new_i.emplace_back(column, std::move(v));
            }
            Scalar w = c * vi + d * vj;
            if (w != Scalar(0)) new_j.emplace_back(column, std::move(w));
        }
        if (!keep_i) replace_row(i, std::move(new_i));
        replace_row(j, std::move(new_j));
        if (left_) {
            auto& u = *left_;
            const DenseMatrix<Scalar> ui = u.row(i);
            const DenseMatrix<Scalar> uj = u.row(j);
            if (!keep_i) u.row(i) = a * ui + b * uj;
            u.row(j) = c * ui + d * uj;
        }
    }

    void replace_row(Index i, std::vector<Entry> fresh) {
        auto& old = row(i);
        std::size_t x = 0, y = 0;
        while (x < old.size() || y < fresh.size()) {
            if (y == fresh.size() || (x < old.size() && old[x].first < fresh[y].first)) {
                auto& rows_of = col(old[x++].first);
                rows_of.erase(std::lower_bound(rows_of.begin(), rows_of.end(), i));
            } else if (x == old.size() || fresh[y].first < old[x].first) {
                auto& rows_of = col(fresh[y++].first);
                rows_of.insert(std::lower_bound(rows_of.begin(), rows_of.end(), i), i);
            } else {
                ++x;
                ++y;
            }
        }
        old = std::move(fresh);
    }

    /// col_p <- a col_p + b col_q,  col_q <- c col_p + d col_q.
    void combine_cols(Index p, Index q, const Scalar& a, const Scalar& b, const Scalar& c,
                      const Scalar& d) {
        const bool keep_p = a == Scalar(1) && b == Scalar(0);
        std::vector<Index> touched;
        std::set_union(col(p).begin(), col(p).end(), col(q).begin(), col(q).end(),
                       std::back_inserter(touched));
        for (Index i : touched) {
            const Scalar vp = get(i, p);
            const Scalar vq = get(i, q);
            if (!keep_p) set(i, p, a * vp + b * vq);
            set(i, q, c * vp + d * vq);
        }
        if (right_) {
            auto& v = *right_;
            const DenseMatrix<Scalar> vp = v.col(p);
            const DenseMatrix<Scalar> vq = v.col(q);
            if (!keep_p) v.col(p) = a * vp + b * vq;
            v.col(q) = c * vp + d * vq;
        }
    }

    void enforce_divisibility() {
        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            if (abs_value(pivots_[i].value) == Scalar(1)) continue;
            for (std::size_t j = i + 1; j < pivots_.size(); ++j) {
                const Scalar a = pivots_[i].value;
                const Scalar b = pivots_[j].value;
                if (divides(a, b)) continue;
                const auto [g, s, t] = extended_gcd(a, b);
                // [s t; -b/g a/g] diag(a, b) [1 -tb/g; 1 sa/g] = diag(g, ab/g)
                if (left_) {
                    auto& u = *left_;
                    const Index ri = pivots_[i].row, rj = pivots_[j].row;
                    const DenseMatrix<Scalar> ui = u.row(ri);
                    const DenseMatrix<Scalar> uj = u.row(rj);
                    u.row(ri) = s * ui + t * uj;
                    u.row(rj) = Scalar(-(b / g)) * ui + Scalar(a / g) * uj;
                }
                if (right_) {
                    auto& v = *right_;
                    const Index ci = pivots_[i].col, cj = pivots_[j].col;
                    const DenseMatrix<Scalar> vi = v.col(ci);
                    const DenseMatrix<Scalar> vj = v.col(cj);
                    v.col(ci) = vi + vj;
                    v.col(cj) = Scalar(-(t * b / g)) * vi + Scalar(s * a / g) * vj;
                }
                pivots_[i].value = g;
                pivots_[j].value = a / g * b;
                if (abs_value(pivots_[i].value) == Scalar(1)) break;
            }
        }
        for (auto& p : pivots_) {
            if (p.value < Scalar(0)) {
                p.value = -p.value;
                if (left_) left_->row(p.row) = -left_->row(p.row);
            }
        }
    }

    SmithForm<Scalar> finish() {
        SmithForm<Scalar> out;
        out.rank = pivots_.size();
        out.divisors.reserve(pivots_.size());
        for (const auto& p : pivots_) out.divisors.push_back(p.value);
        if (left_) {
            out.left = DenseMatrix<Scalar>(left_->rows(), left_->cols());
            out.right = DenseMatrix<Scalar>(right_->rows(), right_->cols());
            std::vector<char> used_row(static_cast<std::size_t>(left_->rows()));
            std::vector<char> used_col(static_cast<std::size_t>(right_->cols()));
            Index next = 0;
            for (const auto& p : pivots_) {
                out.left->row(next) = left_->row(p.row);
                out.right->col(next) = right_->col(p.col);
                used_row[static_cast<std::size_t>(p.row)] = 1;
                used_col[static_cast<std::size_t>(p.col)] = 1;
                ++next;
            }
            Index r = next;
            for (Index i = 0; i < left_->rows(); ++i) {
                if (!used_row[static_cast<std::size_t>(i)]) out.left->row(r++) = left_->row(i);
            }
            Index c = next;
            for (Index j = 0; j < right_->cols(); ++j) {
                if (!used_col[static_cast<std::size_t>(j)]) out.right->col(c++) = right_->col(j);
            }
        }
        return out;
    }

    std::vector<std::vector<Entry>> rows_;
    std::vector<std::vector<Index>> cols_;
    std::optional<DenseMatrix<Scalar>> left_;
    std::optional<DenseMatrix<Scalar>> right_;
    std::vector<Pivot> pivots_;
};

/// Sparse row with sorted column ids, used by the rank routines.
template <typename Scalar>
using SparseRow = std::vector<std::pair<std::ptrdiff_t, Scalar>>;

template <typename Scalar>
std::vector<SparseRow<Scalar>> rows_of(const SparseMatrix<Scalar>& a) {
    std::vector<SparseRow<Scalar>> rows(static_cast<std::size_t>(a.rows()));
    for (std::ptrdiff_t k = 0; k < a.outerSize(); ++k) {
        for (typename SparseMatrix<Scalar>::InnerIterator it(a, k); it; ++it) {
            if (it.value() != Scalar(0)) {
                rows[static_cast<std::size_t>(it.row())].emplace_back(it.col(), it.value());
            }
        }
    }
    for (auto& r : rows) {
        std::sort(r.begin(), r.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
    }
    return rows;
}

}  // namespace detail

/// Smith normal form by sparse unimodular elimination with Markowitz-style
/// pivoting.  Deterministic for a given input.  The dense transforms cost
/// O(rows^2 + cols^2) storage; request them for moderate sizes only.
template <typename Scalar>
[[nodiscard]] SmithForm<Scalar> smith_normal_form(const SparseMatrix<Scalar>& a,
                                                  bool with_transforms = false) {
    return detail::SmithEliminator<Scalar>(a, with_transforms).run();
}

template <typename Scalar>
[[nodiscard]] SmithForm<Scalar> smith_normal_form(const DenseMatrix<Scalar>& a,
                                                  bool with_transforms = false) {
    const SparseMatrix<Scalar> sparse = a.sparseView(Scalar(0), Scalar(0));
    return smith_normal_form(sparse, with_transforms);
}

/// Rank over the rationals by fraction-free row reduction: each new row is
/// reduced against the echelon rows by integer cross-multiplication and
/// divided by the gcd of its entries.
template <typename Scalar>
[[nodiscard]] std::size_t rational_rank(const SparseMatrix<Scalar>& a) {
    using Row = detail::SparseRow<Scalar>;
    std::map<std::ptrdiff_t, Row> echelon;  // keyed by leading column
    for (Row r : detail::rows_of(a)) {
        while (!r.empty()) {
            auto found = echelon.find(r.front().first);
            if (found == echelon.end()) {
                const auto lead = r.front().first;
                echelon.emplace(lead, std::move(r));
                break;
            }
            const Row& p = found->second;
            const Scalar alpha = p.front().second;  // applied to r
            const Scalar beta = r.front().second;   // applied to p
            Row next;
            std::size_t x = 0, y = 0;
            while (x < r.size() || y < p.size()) {
                std::ptrdiff_t column;
                Scalar v;
                if (y == p.size() || (x < r.size() && r[x].first < p[y].first)) {
                    column = r[x].first;
                    v = alpha * r[x++].second;
                } else if (x == r.size() || p[y].first < r[x].first) {
                    column = p[y].first;
                    v = -(beta * p[y++].second);
                } else {
                    column = r[x].first;
                    v = alpha * r[x++].second - beta * p[y++].second;
                }
                if (v != Scalar(0)) next.emplace_back(column, std::move(v));
            }
            Scalar content(0);
            for (const auto& [c, v] : next) {
                using std::gcd;
                content = gcd(content, v);
                if (content == Scalar(1)) break;
            }
            if (content > Scalar(1)) {
                for (auto& e : next) e.second = e.second / content;
            }
            r = std::move(next);
        }
    }
    return echelon.size();
}

template <typename Scalar>
[[nodiscard]] std::size_t rational_rank(const DenseMatrix<Scalar>& a) {
    const SparseMatrix<Scalar> sparse = a.sparseView(Scalar(0), Scalar(0));
    return rational_rank(sparse);
}

/// Rank over Z/p for a prime p < 2^32.  Never larger than the rational rank.
[[nodiscard]] std::size_t modular_rank(const SparseIntMatrix& a, std::uint32_t prime);

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
template <typename Scalar>
[[nodiscard]] Scalar exact_determinant(DenseMatrix<Scalar> m) {
    const auto n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("exact_determinant: matrix not square");
    Scalar sign(1);
    Scalar previous(1);
    for (Eigen::Index k = 0; k < n; ++k) {
        if (m(k, k) == Scalar(0)) {
            Eigen::Index swap = k + 1;
            while (swap < n && m(swap, k) == Scalar(0)) ++swap;
            if (swap == n) return Scalar(0);
            m.row(k).swap(m.row(swap));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
            }
        }
        previous = m(k, k);
    }
    return n == 0 ? Scalar(1) : Scalar(sign * m(n - 1, n - 1));
}

extern template struct SmithForm<Integer>;
extern template SmithForm<Integer> smith_normal_form(const SparseIntMatrix&, bool);
extern template std::size_t rational_rank(const SparseIntMatrix&);
extern template Integer exact_determinant(DenseIntMatrix);

}  // namespace rackhom

#endif  // RACKHOM_LINALG_HPP
