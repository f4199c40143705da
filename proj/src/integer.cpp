#include "rackhom/integer.hpp"

#include <climits>
#include <ostream>
#include <stdexcept>

namespace rackhom {
namespace {

mpz_class to_mpz_value(std::int64_t v) {
    mpz_class out;
    // mpz_set_si takes a long, which is 64 bits on every supported target.
    static_assert(sizeof(long) == sizeof(std::int64_t));
    mpz_set_si(out.get_mpz_t(), static_cast<long>(v));
    return out;
}

}  // namespace

Integer::Integer(const mpz_class& value) : big_(std::make_unique<mpz_class>(value)) {
    normalize();
}

Integer::Integer(std::string_view decimal) {
    mpz_class parsed;
    if (parsed.set_str(std::string(decimal), 10) != 0) {
        throw std::invalid_argument("Integer: not a decimal integer: " +
                                    std::string(decimal));
    }
    big_ = std::make_unique<mpz_class>(std::move(parsed));
    normalize();
}

Integer::Integer(const Integer& other) : small_(other.small_) {
    if (other.big_) big_ = std::make_unique<mpz_class>(*other.big_);
}

Integer& Integer::operator=(const Integer& other) {
    if (this == &other) return *this;
    small_ = other.small_;
    if (other.big_) {
        if (big_) {
            *big_ = *other.big_;
        } else {
            big_ = std::make_unique<mpz_class>(*other.big_);
        }
    } else {
        big_.reset();
    }
    return *this;
}

void Integer::normalize() {
    if (big_ && mpz_fits_slong_p(big_->get_mpz_t())) {
        small_ = mpz_get_si(big_->get_mpz_t());
        big_.reset();
    }
}

int Integer::sign() const noexcept {
    if (big_) return mpz_sgn(big_->get_mpz_t());
    return (small_ > 0) - (small_ < 0);
}

mpz_class Integer::to_mpz() const { return big_ ? *big_ : to_mpz_value(small_); }

std::string Integer::to_string() const {
    return big_ ? big_->get_str() : std::to_string(small_);
}

double Integer::to_double() const {
    return big_ ? big_->get_d() : static_cast<double>(small_);
}

Integer& Integer::operator+=(const Integer& rhs) {
    if (!big_ && !rhs.big_) {
        std::int64_t out;
        if (!__builtin_add_overflow(small_, rhs.small_, &out)) {
            small_ = out;
            return *this;
        }
    }
    big_ = std::make_unique<mpz_class>(to_mpz() + rhs.to_mpz());
    normalize();
    return *this;
}

Integer& Integer::operator-=(const Integer& rhs) {
    if (!big_ && !rhs.big_) {
        std::int64_t out;
        if (!__builtin_sub_overflow(small_, rhs.small_, &out)) {
            small_ = out;
            return *this;
        }
    }
    big_ = std::make_unique<mpz_class>(to_mpz() - rhs.to_mpz());
    normalize();
    return *this;
}

Integer& Integer::operator*=(const Integer& rhs) {
    if (!big_ && !rhs.big_) {
        std::int64_t out;
        if (!__builtin_mul_overflow(small_, rhs.small_, &out)) {
            small_ = out;
            return *this;
        }
    }
    big_ = std::make_unique<mpz_class>(to_mpz() * rhs.to_mpz());
    normalize();
    return *this;
}

Integer& Integer::operator/=(const Integer& rhs) {
    if (rhs.is_zero()) throw std::domain_error("Integer: division by zero");
    if (!big_ && !rhs.big_ && !(small_ == INT64_MIN && rhs.small_ == -1)) {
        small_ /= rhs.small_;
        return *this;
    }
    mpz_class q;
    mpz_class a = to_mpz();
    mpz_class b = rhs.to_mpz();
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    big_ = std::make_unique<mpz_class>(std::move(q));
    normalize();
    return *this;
}

Integer& Integer::operator%=(const Integer& rhs) {
    if (rhs.is_zero()) throw std::domain_error("Integer: division by zero");
    if (!big_ && !rhs.big_) {
        small_ = rhs.small_ == -1 ? 0 : small_ % rhs.small_;
        return *this;
    }
    mpz_class r;
    mpz_class a = to_mpz();
    mpz_class b = rhs.to_mpz();
    mpz_tdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    big_ = std::make_unique<mpz_class>(std::move(r));
    normalize();
    return *this;
}

Integer Integer::operator-() const {
    if (!big_ && small_ != INT64_MIN) return Integer(-small_);
    return Integer(mpz_class(-to_mpz()));
}

bool operator==(const Integer& lhs, const Integer& rhs) noexcept {
    if (!lhs.big_ && !rhs.big_) return lhs.small_ == rhs.small_;
    // Normalized representation: a big value never equals a small one.
    if (!lhs.big_ || !rhs.big_) return false;
    return mpz_cmp(lhs.big_->get_mpz_t(), rhs.big_->get_mpz_t()) == 0;
}

std::strong_ordering operator<=>(const Integer& lhs, const Integer& rhs) noexcept {
    if (!lhs.big_ && !rhs.big_) return lhs.small_ <=> rhs.small_;
    int c;
    if (lhs.big_ && rhs.big_) {
        c = mpz_cmp(lhs.big_->get_mpz_t(), rhs.big_->get_mpz_t());
    } else if (lhs.big_) {
        c = mpz_cmp_si(lhs.big_->get_mpz_t(), static_cast<long>(rhs.small_));
    } else {
        c = -mpz_cmp_si(rhs.big_->get_mpz_t(), static_cast<long>(lhs.small_));
    }
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Integer& value) {
    return os << value.to_string();
}

Integer abs(const Integer& value) { return value.sign() < 0 ? -value : value; }

Integer gcd(const Integer& a, const Integer& b) {
    if (a.is_small() && b.is_small() && a.to_int64() != INT64_MIN &&
        b.to_int64() != INT64_MIN) {
        std::int64_t x = a.to_int64() < 0 ? -a.to_int64() : a.to_int64();
        std::int64_t y = b.to_int64() < 0 ? -b.to_int64() : b.to_int64();
        while (y != 0) {
            std::int64_t r = x % y;
            x = y;
            y = r;
        }
        return Integer(x);
    }
    mpz_class g;
    mpz_class x = a.to_mpz();
    mpz_class y = b.to_mpz();
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return Integer(g);
}

Integer lcm(const Integer& a, const Integer& b) {
    if (a.is_zero() || b.is_zero()) return Integer(0);
    return abs(a / gcd(a, b) * b);
}

Integer pow(const Integer& base, unsigned exponent) {
    Integer result(1);
    Integer square = base;
    while (exponent != 0) {
        if (exponent & 1U) result *= square;
        exponent >>= 1U;
        if (exponent != 0) square *= square;
    }
    return result;
}

long bit_length(const Integer& value) {
    if (value.is_zero()) return -1;
    mpz_class v = value.to_mpz();
    return static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2)) - 1;
}

}  // namespace rackhom
