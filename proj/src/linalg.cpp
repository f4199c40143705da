#include "rackhom/linalg.hpp"

namespace rackhom {

template struct SmithForm<Integer>;
template SmithForm<Integer> smith_normal_form(const SparseIntMatrix&, bool);
template std::size_t rational_rank(const SparseIntMatrix&);
template Integer exact_determinant(DenseIntMatrix);

namespace {

std::uint64_t reduce_mod(const Integer& v, std::uint32_t prime) {
    if (v.is_small()) {
        const std::int64_t r = v.to_int64() % static_cast<std::int64_t>(prime);
        return static_cast<std::uint64_t>(r < 0 ? r + prime : r);
    }
    mpz_class big = v.to_mpz();
    return mpz_fdiv_ui(big.get_mpz_t(), prime);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t prime) {
    std::uint64_t result = 1;
    std::uint64_t exponent = prime - 2;
    while (exponent != 0) {
        if (exponent & 1U) result = result * a % prime;
        a = a * a % prime;
        exponent >>= 1U;
    }
    return result;
}

}  // namespace

std::size_t modular_rank(const SparseIntMatrix& a, std::uint32_t prime) {
    using Row = std::vector<std::pair<std::ptrdiff_t, std::uint64_t>>;
    const std::uint64_t p = prime;
    std::map<std::ptrdiff_t, Row> echelon;  // monic rows keyed by leading column
    for (const auto& source : detail::rows_of(a)) {
        Row r;
        for (const auto& [c, v] : source) {
            const std::uint64_t m = reduce_mod(v, prime);
            if (m != 0) r.emplace_back(c, m);
        }
        while (!r.empty()) {
            auto found = echelon.find(r.front().first);
            if (found == echelon.end()) {
                const std::uint64_t inv = inverse_mod(r.front().second, p);
                for (auto& e : r) e.second = e.second * inv % p;
                const auto lead = r.front().first;
                echelon.emplace(lead, std::move(r));
                break;
            }
            const Row& pivot = found->second;
            const std::uint64_t factor = r.front().second;
            Row next;
            std::size_t x = 0, y = 0;
            while (x < r.size() || y < pivot.size()) {
                std::ptrdiff_t column;
                std::uint64_t v;
                if (y == pivot.size() || (x < r.size() && r[x].first < pivot[y].first)) {
                    column = r[x].first;
                    v = r[x++].second;
                } else if (x == r.size() || pivot[y].first < r[x].first) {
                    column = pivot[y].first;
                    v = (p - factor * pivot[y++].second % p) % p;
                } else {
                    column = r[x].first;
                    v = (r[x++].second + p - factor * pivot[y++].second % p) % p;
                }
                if (v != 0) next.emplace_back(column, v);
            }
            r = std::move(next);
        }
    }
    return echelon.size();
}

}  // namespace rackhom
