#include "repalg/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace repalg {
namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

using u128 = unsigned __int128;
using i128 = __int128;

u128 gcd_u128(u128 a, u128 b) {
  if (a == 0) return b;
  if (b == 0) return a;
  int shift = 0;
  while (((a | b) & 1) == 0) {
    a >>= 1;
    b >>= 1;
    ++shift;
  }
  while ((a & 1) == 0) a >>= 1;
  do {
    while ((b & 1) == 0) b >>= 1;
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t abs_u64(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  std::uint64_t words[2] = {static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(u >> 64)};
  mpz_class r;
  mpz_import(r.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  if (neg) r = -r;
  return r;
}

bool fits_inline(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) && z != std::numeric_limits<long>::min();
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e != 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t mpz_mod_u64(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  assign_wide(num, den);
}

Rational::Rational(const mpq_class& q) { assign_mpq(q); }

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  q.canonicalize();
  return Rational(q);
}

void Rational::assign_mpq(const mpq_class& q) {
  if (fits_inline(q.get_num()) && fits_inline(q.get_den())) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(q);
  }
}

void Rational::assign_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 unum = num < 0 ? static_cast<u128>(-num) : static_cast<u128>(num);
  u128 g = gcd_u128(unum, static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (num >= -static_cast<i128>(kMax) && num <= kMax && den <= kMax) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(mpz_from_i128(num), mpz_from_i128(den));
  }
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t Rational::hash() const {
  if (big_) return std::hash<std::string>()(big_->get_str());
  std::uint64_t h = static_cast<std::uint64_t>(num_) * 0x9E3779B97F4A7C15ull;
  h ^= static_cast<std::uint64_t>(den_) + 0x7F4A7C15ull + (h << 6) + (h >> 2);
  return static_cast<std::size_t>(h);
}

bool Rational::reduce_mod(std::uint64_t p, std::uint64_t& out) const {
  std::uint64_t n;
  std::uint64_t d;
  bool neg;
  if (big_) {
    n = mpz_mod_u64(big_->get_num(), p);
    d = mpz_mod_u64(big_->get_den(), p);
    neg = false;
  } else {
    n = abs_u64(num_) % p;
    d = static_cast<std::uint64_t>(den_) % p;
    neg = num_ < 0;
  }
  if (d == 0) return false;
  if (neg && n != 0) n = p - n;
  out = mulmod(n, powmod(d, p - 2, p), p);
  return true;
}

Rational Rational::operator-() const {
  Rational r;
  if (big_) {
    r.big_ = std::make_unique<mpq_class>(-*big_);
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(num_, rhs.num_, &s) && s != std::numeric_limits<std::int64_t>::min()) {
        num_ = s;
        return *this;
      }
      assign_wide(static_cast<i128>(num_) + rhs.num_, 1);
      return *this;
    }
    std::int64_t g = static_cast<std::int64_t>(gcd_u64(static_cast<std::uint64_t>(den_),
                                                       static_cast<std::uint64_t>(rhs.den_)));
    i128 n = static_cast<i128>(num_) * (rhs.den_ / g) + static_cast<i128>(rhs.num_) * (den_ / g);
    i128 d = static_cast<i128>(den_ / g) * rhs.den_;
    assign_wide(n, d);
    return *this;
  }
  assign_mpq(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (num_ == 0 || rhs.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t p;
      if (!__builtin_mul_overflow(num_, rhs.num_, &p) && p != std::numeric_limits<std::int64_t>::min()) {
        num_ = p;
        return *this;
      }
    }
    std::int64_t g1 = static_cast<std::int64_t>(gcd_u64(abs_u64(num_), static_cast<std::uint64_t>(rhs.den_)));
    std::int64_t g2 = static_cast<std::int64_t>(gcd_u64(abs_u64(rhs.num_), static_cast<std::uint64_t>(den_)));
    i128 n = static_cast<i128>(num_ / g1) * (rhs.num_ / g2);
    i128 d = static_cast<i128>(den_ / g2) * (rhs.den_ / g1);
    assign_wide(n, d);
    return *this;
  }
  assign_mpq(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!rhs.big_) {
    Rational recip;
    recip.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
    recip.den_ = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
    return *this *= recip;
  }
  assign_mpq(to_mpq() / rhs.to_mpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace repalg
