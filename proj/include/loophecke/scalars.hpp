#pragma once

// Exact scalar arithmetic: rationals, prime fields, and rational functions
// in one variable t. One scalar kind is chosen per computation run; mixing
// kinds (or prime moduli) is a contract violation and throws.

#include <gmpxx.h>

#include <cstdint>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lh {

struct ScalarError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PoleAtPoint : ScalarError {
  using ScalarError::ScalarError;
};
struct ScalarKindMismatch : ScalarError {
  using ScalarError::ScalarError;
};

// ---------------------------------------------------------------------------
// Rational: arbitrary-precision a/b, gcd-reduced, denominator > 0.

class Rational {
 public:
  Rational() : q_(0) {}
  explicit Rational(long v) : q_(v) {}
  Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw ScalarError("Rational: zero denominator");
    q_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  static Rational from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw ScalarError("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw ScalarError("Rational: zero denominator");
    q.canonicalize();
    return Rational(q);
  }

  std::string str() const { return q_.get_str(); }

  bool is_zero() const { return q_ == 0; }
  bool is_one() const { return q_ == 1; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw ScalarError("Rational: division by zero");
    return Rational(mpq_class(q_ / o.q_));
  }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

  Rational inverse() const {
    if (is_zero()) throw ScalarError("Rational: inverse of zero");
    return Rational(mpq_class(1 / q_));
  }

  bool operator==(const Rational& o) const { return q_ == o.q_; }
  bool operator!=(const Rational& o) const { return q_ != o.q_; }
  bool operator<(const Rational& o) const { return q_ < o.q_; }

  // Context API: mint constants of the same kind as *this.
  Rational make(long v) const { return Rational(v); }
  Rational make_rational(const Rational& r) const { return r; }

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

 private:
  mpq_class q_;
};

// ---------------------------------------------------------------------------
// GFp: prime field with 62-bit modulus. Elements carry their modulus;
// arithmetic across different moduli throws ScalarKindMismatch.

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline bool miller_rabin_64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // Deterministic witness set for all 64-bit integers.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

inline void check_prime_modulus(std::uint64_t p) {
  static std::set<std::uint64_t> verified;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (verified.count(p)) return;
  if (p < 2 || !miller_rabin_64(p))
    throw ScalarError("GFp: modulus " + std::to_string(p) + " is not prime");
  verified.insert(p);
}

}  // namespace detail

// The two fixed 62-bit primes used for modular dimension runs: every
// reported modular dimension must agree across both.
inline constexpr std::uint64_t kPrimeA = 4611686018427387847ull;  // 2^62 - 57
inline constexpr std::uint64_t kPrimeB = 4611686018427387817ull;  // 2^62 - 87

class GFp {
 public:
  GFp() : r_(0), p_(0) {}  // placeholder zero; arithmetic requires a modulus
  GFp(std::uint64_t r, std::uint64_t p) : r_(r % p), p_(p) {
    detail::check_prime_modulus(p);
  }
  static GFp from_long(long v, std::uint64_t p) {
    detail::check_prime_modulus(p);
    std::uint64_t r = static_cast<std::uint64_t>(v % static_cast<long>(p));
    if (v < 0) r = (r + p) % p;
    return GFp(r, p);
  }

  std::uint64_t residue() const { return r_; }
  std::uint64_t modulus() const { return p_; }
  std::string str() const { return std::to_string(r_) + " mod " + std::to_string(p_); }

  bool is_zero() const { return r_ == 0; }
  bool is_one() const { return r_ == 1 % p_or(1); }

  GFp operator-() const { return raw(r_ ? p_or(1) - r_ : 0, p_); }
  GFp operator+(const GFp& o) const {
    std::uint64_t p = joint(o);
    std::uint64_t s = r_ + o.r_;
    if (s >= p) s -= p;
    return raw(s, p);
  }
  GFp operator-(const GFp& o) const {
    std::uint64_t p = joint(o);
    return raw(r_ >= o.r_ ? r_ - o.r_ : r_ + p - o.r_, p);
  }
  GFp operator*(const GFp& o) const {
    std::uint64_t p = joint(o);
    return raw(detail::mulmod(r_, o.r_, p), p);
  }
  GFp operator/(const GFp& o) const { return *this * o.inverse(); }
  GFp& operator+=(const GFp& o) { *this = *this + o; return *this; }
  GFp& operator-=(const GFp& o) { *this = *this - o; return *this; }
  GFp& operator*=(const GFp& o) { *this = *this * o; return *this; }

  GFp inverse() const {
    if (p_ == 0 || r_ == 0) throw ScalarError("GFp: inverse of zero");
    return raw(detail::powmod(r_, p_ - 2, p_), p_);
  }

  bool operator==(const GFp& o) const {
    if (p_ && o.p_ && p_ != o.p_)
      throw ScalarKindMismatch("GFp: comparing different moduli");
    return r_ == o.r_;
  }
  bool operator!=(const GFp& o) const { return !(*this == o); }
  bool operator<(const GFp& o) const { joint(o); return r_ < o.r_; }

  GFp make(long v) const {
    require_attached();
    return from_long(v, p_);
  }
  GFp make_rational(const Rational& r) const {
    require_attached();
    GFp num = from_mpz(r.num());
    GFp den = from_mpz(r.den());
    return num * den.inverse();
  }

 private:
  static GFp raw(std::uint64_t r, std::uint64_t p) {
    GFp g;
    g.r_ = r;
    g.p_ = p;
    return g;
  }
  std::uint64_t p_or(std::uint64_t d) const { return p_ ? p_ : d; }
  void require_attached() const {
    if (p_ == 0) throw ScalarError("GFp: no modulus attached");
  }
  // Placeholder zeros (p_ == 0) may combine with attached elements; two
  // attached elements must share the modulus.
  std::uint64_t joint(const GFp& o) const {
    if (p_ == 0 && o.p_ == 0) throw ScalarError("GFp: no modulus attached");
    if (p_ == 0) { if (r_) throw ScalarError("GFp: detached nonzero"); return o.p_; }
    if (o.p_ == 0) { if (o.r_) throw ScalarError("GFp: detached nonzero"); return p_; }
    if (p_ != o.p_)
      throw ScalarKindMismatch("GFp: mixing moduli " + std::to_string(p_) +
                               " and " + std::to_string(o.p_));
    return p_;
  }
  GFp from_mpz(const mpz_class& z) const {
    mpz_class m = z % static_cast<unsigned long>(p_);
    if (m < 0) m += static_cast<unsigned long>(p_);
    return raw(m.get_ui(), p_);
  }

  std::uint64_t r_, p_;
};

// ---------------------------------------------------------------------------
// Poly: dense polynomial in t over Rational, no trailing zero coefficients.

class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational c) { c_.push_back(std::move(c)); strip(); }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

  static Poly t() { return Poly({Rational(0), Rational(1)}); }
  static Poly constant(long v) { return Poly(Rational(v)); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rational& lead() const {
    if (is_zero()) throw ScalarError("Poly: lead of zero");
    return c_.back();
  }
  Rational coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[k];
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  Poly operator+(const Poly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(int(i)) + o.coeff(int(i));
    return Poly(std::move(r));
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
  }
  Poly scaled(const Rational& s) const {
    Poly r = *this;
    for (auto& c : r.c_) c = c * s;
    r.strip();
    return r;
  }

  // Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw ScalarError("Poly: division by zero");
    Poly r = *this;
    std::vector<Rational> q(std::max<int>(degree() - d.degree() + 1, 0), Rational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
      int k = r.degree() - d.degree();
      Rational f = r.lead() / d.lead();
      q[k] = f;
      std::vector<Rational> sub(k, Rational(0));
      sub.insert(sub.end(), d.c_.begin(), d.c_.end());
      r = r - Poly(std::move(sub)).scaled(f);
    }
    return {Poly(std::move(q)), r};
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(lead().inverse());
  }

  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = a.divmod(b).second;
      a = b;
      b = r;
    }
    return a.monic();
  }

  Rational eval(const Rational& t0) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t0 + *it;
    return acc;
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  bool operator<(const Poly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (size_t i = c_.size(); i-- > 0;)
      if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
  }

  // Renders like "t^2 - 3t + 1"; rational coefficients as "a/b".
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      Rational c = c_[k];
      if (c.is_zero()) continue;
      bool neg = c < Rational(0);
      Rational a = neg ? -c : c;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      bool unit_coeff = a == Rational(1);
      if (k == 0 || !unit_coeff) out += a.str();
      if (k >= 1) {
        out += "t";
        if (k >= 2) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  void strip() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// ---------------------------------------------------------------------------
// RatFunc: element of Q(t). Denominator monic, gcd(num, den) = 1.

class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly::constant(1)) {}
  explicit RatFunc(long v) : num_(Poly::constant(v)), den_(Poly::constant(1)) {}
  explicit RatFunc(const Rational& r) : num_(Poly(r)), den_(Poly::constant(1)) {}
  explicit RatFunc(Poly p) : num_(std::move(p)), den_(Poly::constant(1)) {}
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  static RatFunc t() { return RatFunc(Poly::t()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == Poly::constant(1) && den_ == Poly::constant(1); }

  RatFunc operator-() const { return raw(-num_, den_); }
  RatFunc operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
  RatFunc operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
  }
  RatFunc operator/(const RatFunc& o) const { return *this * o.inverse(); }
  RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
  RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
  RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }

  RatFunc inverse() const {
    if (is_zero()) throw ScalarError("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
  }

  Rational evaluate(const Rational& t0) const {
    Rational d = den_.eval(t0);
    if (d.is_zero()) throw PoleAtPoint("RatFunc: pole at t = " + t0.str());
    return num_.eval(t0) / d;
  }

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  bool operator<(const RatFunc& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
  }

  RatFunc make(long v) const { return RatFunc(v); }
  RatFunc make_rational(const Rational& r) const { return RatFunc(r); }

  std::string str() const {
    if (den_ == Poly::constant(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  static RatFunc raw(Poly n, Poly d) {
    RatFunc f;
    f.num_ = std::move(n);
    f.den_ = std::move(d);
    return f;
  }
  void normalize() {
    if (den_.is_zero()) throw ScalarError("RatFunc: zero denominator");
    if (num_.is_zero()) {
      den_ = Poly::constant(1);
      return;
    }
    Poly g = Poly::gcd(num_, den_);
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
    Rational lead = den_.lead();
    den_ = den_.scaled(lead.inverse());
    num_ = num_.scaled(lead.inverse());
  }

  Poly num_, den_;
};

// Parse a scalar of the same kind as the context element.
inline Rational parse_scalar(const std::string& s, const Rational&) {
  return Rational::from_string(s);
}

}  // namespace lh
