#pragma once

// Exact integer and rational number theory behind power-graph edge counting:
// trial-division factorization, totients, the divisor sums S(n) = sum phi(d)*d
// and sum phi(d)^2 with their closed-form products, and the inequality bounds
// used by the range-verification commands.  All verdicts are computed in exact
// big-integer rational arithmetic; machine-width results use checked ops and
// signal overflow instead of wrapping.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b)
    throw std::overflow_error("unsigned 64-bit overflow in addition");
  return a + b;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
    throw std::overflow_error("unsigned 64-bit overflow in multiplication");
  return a * b;
}

inline std::uint64_t to_u64_checked(const BigInt& v, const char* what) {
  if (v < 0 || v > BigInt(std::numeric_limits<std::uint64_t>::max()))
    throw std::overflow_error(std::string(what) + " exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

inline BigInt big_pow(std::uint64_t base, unsigned exp) {
  return boost::multiprecision::pow(BigInt(base), exp);
}

// Exact quotient; the call sites only divide where divisibility is provable.
inline BigInt exact_div(const BigInt& num, const BigInt& den) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw std::logic_error("exact_div: non-exact division");
  return q;
}

}  // namespace detail

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime-exponent decomposition of a positive integer.  Primes strictly
/// ascend, all exponents are >= 1, and the factor list is empty exactly
/// for n = 1.
class Factorization {
 public:
  Factorization(std::uint64_t n, std::vector<PrimePower> factors)
      : n_(n), factors_(std::move(factors)) {
    if (n_ == 0) throw std::invalid_argument("Factorization: n must be positive");
    std::uint64_t product = 1;
    std::uint64_t previous = 0;
    for (const auto& pp : factors_) {
      if (pp.prime <= previous)
        throw std::invalid_argument("Factorization: primes must strictly increase");
      if (pp.exponent == 0)
        throw std::invalid_argument("Factorization: exponents must be positive");
      previous = pp.prime;
      for (unsigned e = 0; e < pp.exponent; ++e)
        product = detail::checked_mul(product, pp.prime);
    }
    if (product != n_)
      throw std::invalid_argument("Factorization: factors do not multiply to n");
  }

  std::uint64_t value() const { return n_; }
  const std::vector<PrimePower>& factors() const { return factors_; }
  std::size_t distinct_primes() const { return factors_.size(); }
  bool is_one() const { return factors_.empty(); }

  /// q, the least prime divisor.  Requires n > 1.
  std::uint64_t least_prime() const { return at_front().prime; }
  /// p, the greatest prime divisor.  Requires n > 1.
  std::uint64_t greatest_prime() const { return at_back().prime; }
  /// Exponent of the least prime divisor.
  unsigned least_exponent() const { return at_front().exponent; }
  /// Exponent of the greatest prime divisor.
  unsigned greatest_exponent() const { return at_back().exponent; }

 private:
  const PrimePower& at_front() const {
    if (factors_.empty()) throw std::domain_error("n = 1 has no prime divisors");
    return factors_.front();
  }
  const PrimePower& at_back() const {
    if (factors_.empty()) throw std::domain_error("n = 1 has no prime divisors");
    return factors_.back();
  }

  std::uint64_t n_;
  std::vector<PrimePower> factors_;
};

/// Deterministic trial division up to sqrt(n).  Accepts any positive 64-bit n.
inline Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  std::vector<PrimePower> factors;
  std::uint64_t rest = n;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) factors.push_back({p, e});
  };
  strip(2);
  strip(3);
  // Remaining prime candidates are 6k +- 1.
  for (std::uint64_t d = 5; d <= rest / d; d += 6) {
    strip(d);
    if (d + 2 <= rest / (d + 2)) strip(d + 2);
    else break;
  }
  if (rest > 1) factors.push_back({rest, 1});
  return Factorization(n, std::move(factors));
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  const auto f = factorize(n).factors();
  return f.size() == 1 && f[0].exponent == 1;
}

/// All divisors of n paired with their totients, ascending by divisor.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> divisors_with_totients(
    const Factorization& f) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> divs{{1, 1}};
  for (const auto& pp : f.factors()) {
    const std::size_t base = divs.size();
    std::uint64_t pe = 1;       // p^l
    std::uint64_t phi_pe = 1;   // phi(p^l)
    for (unsigned l = 1; l <= pp.exponent; ++l) {
      phi_pe = (l == 1) ? pp.prime - 1 : detail::checked_mul(phi_pe, pp.prime);
      pe = detail::checked_mul(pe, pp.prime);
      for (std::size_t i = 0; i < base; ++i)
        divs.emplace_back(detail::checked_mul(divs[i].first, pe),
                          detail::checked_mul(divs[i].second, phi_pe));
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

inline std::vector<std::uint64_t> divisors(const Factorization& f) {
  std::vector<std::uint64_t> out;
  for (const auto& [d, phi] : divisors_with_totients(f)) out.push_back(d);
  return out;
}

/// Euler totient via the prime-product formula; totient(1) = 1.
inline std::uint64_t totient(const Factorization& f) {
  std::uint64_t result = 1;
  for (const auto& pp : f.factors()) {
    result = detail::checked_mul(result, pp.prime - 1);
    for (unsigned e = 1; e < pp.exponent; ++e)
      result = detail::checked_mul(result, pp.prime);
  }
  return result;
}

inline std::uint64_t totient(std::uint64_t n) { return totient(factorize(n)); }

namespace detail {

// S(n) = sum_{d|n} phi(d)*d via the closed-form product of
// (p^(2a+1) + 1) / (p + 1), evaluated exactly in big integers.
inline BigInt order_sum_closed(const Factorization& f) {
  BigInt result = 1;
  for (const auto& pp : f.factors()) {
    const BigInt numer = big_pow(pp.prime, 2 * pp.exponent + 1) + 1;
    result *= exact_div(numer, BigInt(pp.prime + 1));
  }
  return result;
}

// sum_{d|n} phi(d)^2 via the closed-form product of
// (p^(2a) * (p - 1) + 2) / (p + 1).
inline BigInt totient_square_sum_closed(const Factorization& f) {
  BigInt result = 1;
  for (const auto& pp : f.factors()) {
    const BigInt numer = big_pow(pp.prime, 2 * pp.exponent) * (pp.prime - 1) + 2;
    result *= exact_div(numer, BigInt(pp.prime + 1));
  }
  return result;
}

}  // namespace detail

/// S(n) = sum_{d|n} phi(d)*d.  Computed both by naive divisor enumeration and
/// by the closed-form product; disagreement is a logic error, overflow of the
/// 64-bit result is signalled.
inline std::uint64_t divisor_order_sum(const Factorization& f) {
  const std::uint64_t closed =
      detail::to_u64_checked(detail::order_sum_closed(f), "divisor order sum");
  std::uint64_t naive = 0;
  for (const auto& [d, phi] : divisors_with_totients(f))
    naive = detail::checked_add(naive, detail::checked_mul(phi, d));
  if (naive != closed)
    throw std::logic_error("divisor_order_sum: divisor loop and closed form disagree");
  return closed;
}

/// sum_{d|n} phi(d)^2, dual-path like divisor_order_sum.
inline std::uint64_t divisor_totient_square_sum(const Factorization& f) {
  const std::uint64_t closed = detail::to_u64_checked(
      detail::totient_square_sum_closed(f), "divisor totient-square sum");
  std::uint64_t naive = 0;
  for (const auto& [d, phi] : divisors_with_totients(f))
    naive = detail::checked_add(naive, detail::checked_mul(phi, phi));
  if (naive != closed)
    throw std::logic_error(
        "divisor_totient_square_sum: divisor loop and closed form disagree");
  return closed;
}

/// Directed / bidirectional / undirected edge counts of a power graph.
struct EdgeCounts {
  std::uint64_t directed = 0;
  std::uint64_t bidirectional = 0;
  std::uint64_t undirected = 0;
  friend bool operator==(const EdgeCounts&, const EdgeCounts&) = default;
};

/// Edge counts of the power graph of Z_n from the divisor-sum identities:
/// directed = S(n) - n, bidirectional = (sum phi(d)^2 - n) / 2.
inline EdgeCounts cyclic_edge_counts(const Factorization& f) {
  const std::uint64_t n = f.value();
  const std::uint64_t s = divisor_order_sum(f);
  const std::uint64_t t2 = divisor_totient_square_sum(f);
  EdgeCounts c;
  c.directed = s - n;                 // s >= n: each term phi(d)*d >= phi(d)
  c.bidirectional = (t2 - n) / 2;     // t2 >= n and t2 == n (mod 2)
  c.undirected = c.directed - c.bidirectional;
  return c;
}

/// Degree of any order-e vertex in the power graph of Z_n:
/// e - 1 - phi(e) + sum_{d | n/e} phi(d*e).  Requires e | n.
inline std::uint64_t cyclic_degree(const Factorization& f, std::uint64_t e) {
  const std::uint64_t n = f.value();
  if (e == 0 || n % e != 0)
    throw std::invalid_argument("cyclic_degree: e must divide n");
  const std::uint64_t phi_e = totient(e);
  std::uint64_t in_sum = 0;
  for (std::uint64_t d : divisors(factorize(n / e)))
    in_sum = detail::checked_add(in_sum, totient(detail::checked_mul(d, e)));
  // in_sum includes the d = 1 term phi(e), so the subtraction stays >= 0.
  return (e - 1) + (in_sum - phi_e);
}

/// Exact-rational verdict of an inequality check.
struct BoundReport {
  std::uint64_t n = 0;
  Rational lhs;
  Rational rhs;
  bool holds = false;
  bool equality = false;
  bool applicable = true;
};

namespace detail {

inline std::vector<std::uint64_t> distinct_primes(const Factorization& f) {
  std::vector<std::uint64_t> ps;
  for (const auto& pp : f.factors()) ps.push_back(pp.prime);
  return ps;
}

// The prime signatures excluded from the product-form lower bound:
// {2}, {2,3}, {2,3,5}, {2,3,5,7}.
inline bool has_forbidden_signature(const Factorization& f) {
  static const std::vector<std::vector<std::uint64_t>> forbidden = {
      {2}, {2, 3}, {2, 3, 5}, {2, 3, 5, 7}};
  const auto ps = distinct_primes(f);
  return std::find(forbidden.begin(), forbidden.end(), ps) != forbidden.end();
}

// R(n) = (prod (p_h + 1)/p_h) * n^2 / p.
inline Rational product_bound_rhs(const Factorization& f) {
  Rational r(BigInt(f.value()) * f.value(), f.greatest_prime());
  for (const auto& pp : f.factors()) r *= Rational(pp.prime + 1, pp.prime);
  return r;
}

// Q(n) = ((q + 1)/q) * n^2 / p.
inline Rational least_prime_bound_rhs(const Factorization& f) {
  return Rational(f.least_prime() + 1, f.least_prime()) *
         Rational(BigInt(f.value()) * f.value(), f.greatest_prime());
}

inline void require_above_one(const Factorization& f, const char* op) {
  if (f.value() <= 1)
    throw std::invalid_argument(std::string(op) + ": requires n > 1");
}

}  // namespace detail

/// S(n) >= (prod (p_h+1)/p_h) * n^2 / p, skipped (applicable = false, lhs/rhs
/// still reported) for the excluded prime signatures.
inline BoundReport check_bound_odd(const Factorization& f) {
  detail::require_above_one(f, "check_bound_odd");
  BoundReport r;
  r.n = f.value();
  r.lhs = Rational(detail::order_sum_closed(f));
  r.rhs = detail::product_bound_rhs(f);
  r.applicable = !detail::has_forbidden_signature(f);
  r.holds = r.lhs >= r.rhs;
  r.equality = r.lhs == r.rhs;
  return r;
}

/// S(n) >= ((q+1)/q) * n^2 / p, inapplicable only for powers of 2; holds for
/// every applicable n.
inline BoundReport check_bound(const Factorization& f) {
  detail::require_above_one(f, "check_bound");
  BoundReport r;
  r.n = f.value();
  r.lhs = Rational(detail::order_sum_closed(f));
  r.rhs = detail::least_prime_bound_rhs(f);
  r.applicable = !(f.distinct_primes() == 1 && f.least_prime() == 2);
  r.holds = r.lhs >= r.rhs;
  r.equality = r.lhs == r.rhs;
  return r;
}

/// The exact constants of the product-bound proof.  T and U depend only on
/// the distinct primes of n; S/R and S/Q carry the exponents.
struct BoundRatios {
  Rational T;         // p * prod p_h^2 / (p_h+1)^2
  Rational U;         // p*q/(q+1) * prod p_h / (p_h+1)
  Rational S_over_R;
  Rational S_over_Q;
};

inline BoundRatios bound_ratios(const Factorization& f) {
  detail::require_above_one(f, "bound_ratios");
  BoundRatios out;
  const std::uint64_t p = f.greatest_prime();
  const std::uint64_t q = f.least_prime();
  out.T = Rational(p);
  for (const auto& pp : f.factors())
    out.T *= Rational(BigInt(pp.prime) * pp.prime,
                      BigInt(pp.prime + 1) * (pp.prime + 1));
  out.U = Rational(BigInt(p) * q, q + 1);
  for (const auto& pp : f.factors()) out.U *= Rational(pp.prime, pp.prime + 1);
  const Rational s{detail::order_sum_closed(f)};
  out.S_over_R = s / detail::product_bound_rhs(f);
  out.S_over_Q = s / detail::least_prime_bound_rhs(f);
  return out;
}

/// phi(n) >= n/p; always holds, equality exactly for n = 2^a * 3^b, a >= 1.
inline BoundReport totient_lower_bound(const Factorization& f) {
  detail::require_above_one(f, "totient_lower_bound");
  BoundReport r;
  r.n = f.value();
  r.lhs = Rational(totient(f));
  r.rhs = Rational(f.value(), f.greatest_prime());
  r.holds = r.lhs >= r.rhs;
  r.equality = r.lhs == r.rhs;
  const auto ps = detail::distinct_primes(f);
  const bool form_2a3b = ps == std::vector<std::uint64_t>{2} ||
                         ps == std::vector<std::uint64_t>{2, 3};
  if (r.equality != form_2a3b)
    throw std::logic_error("totient_lower_bound: equality class mismatch");
  return r;
}

/// w(r) = 2r - phi(r) - 1, the per-vertex weight whose divisor monotonicity
/// drives the edge-maximality argument.  w(1) = 0.
inline std::uint64_t monotone_weight(std::uint64_t r) {
  if (r == 0) throw std::invalid_argument("monotone_weight: r must be positive");
  return detail::checked_mul(2, r) - totient(r) - 1;
}

}  // namespace pg
