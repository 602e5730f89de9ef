#pragma once

#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"

namespace vknot {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Sparse Laurent polynomial in A with exact integer coefficients.
/// Zero coefficients are never stored, so structural equality is value equality.
class LaurentPoly {
 public:
  using TermMap = std::map<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(BigInt constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(int constant);     // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const BigInt& coefficient, int exponent);
  static LaurentPoly from_terms(const TermMap& terms);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  BigInt coefficient(int exponent) const;

  // Both require a nonzero polynomial.
  int min_exponent() const;
  int max_exponent() const;

  /// Multiplies by A^k.
  LaurentPoly shifted(int k) const;
  /// Substitutes A -> A^{-1}.
  LaurentPoly invert_variable() const;
  /// gcd of all coefficients (positive), zero for the zero polynomial.
  BigInt content() const;
  /// Exact division of every coefficient; `divisor` must divide the content.
  LaurentPoly divided_exactly(const BigInt& divisor) const;

  /// Exact value at A = a. Throws std::domain_error for a = 0.
  Rational eval(const Rational& a) const;

  /// Canonical text: ascending exponents, `c*A^e`, constant term printed bare.
  std::string to_string() const;
  /// Array of [exponent, coefficient] pairs in ascending exponent order.
  nlohmann::ordered_json to_json() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator-(const LaurentPoly& p);
  friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) { return p.terms_ == q.terms_; }

 private:
  void add_term(int exponent, const BigInt& coefficient);

  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly lp_invert_variable(const LaurentPoly& p);
Rational lp_eval_int(const LaurentPoly& p, const Rational& a);

/// Sparse Laurent polynomial in two commuting variables A, B.
class BiLaurent {
 public:
  using Exponents = std::pair<int, int>;
  using TermMap = std::map<Exponents, BigInt>;

  BiLaurent() = default;
  BiLaurent(int constant);  // NOLINT(google-explicit-constructor)

  static BiLaurent monomial(const BigInt& coefficient, int a_exponent, int b_exponent);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(int a_exponent, int b_exponent) const;

  /// Substitutes B -> A^{-1}.
  LaurentPoly collapse_b_to_inverse_a() const;
  /// Exchanges the roles of A and B.
  BiLaurent swap_variables() const;

  std::string to_string() const;
  nlohmann::ordered_json to_json() const;

  BiLaurent& operator+=(const BiLaurent& other);
  void add_term(int a_exponent, int b_exponent, const BigInt& coefficient);

  friend BiLaurent operator+(BiLaurent p, const BiLaurent& q) { return p += q; }
  friend BiLaurent operator*(const BiLaurent& p, const BiLaurent& q);
  friend bool operator==(const BiLaurent& p, const BiLaurent& q) { return p.terms_ == q.terms_; }

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const BiLaurent& p);

/// A ratio of Laurent polynomials held in display-canonical form.
///
/// Canonical form: the common monomial factor is moved so the denominator's
/// lowest exponent is 0, the joint integer content is divided out, and the
/// denominator's lowest-degree coefficient is positive. A zero numerator is
/// stored as 0/1. When one part divides the other exactly the quotient is
/// taken; otherwise no polynomial gcd is computed, so two equal ratios may
/// have different canonical parts. Equality is decided by cross-multiplication.
class RationalExpr {
 public:
  RationalExpr() : numerator_(0), denominator_(1) {}

  const LaurentPoly& numerator() const { return numerator_; }
  const LaurentPoly& denominator() const { return denominator_; }

  bool is_zero() const { return numerator_.is_zero(); }
  bool is_one() const;
  RationalExpr invert_variable() const;

  std::string to_string() const;
  nlohmann::ordered_json to_json() const;

  friend bool operator==(const RationalExpr& x, const RationalExpr& y);

 private:
  friend RationalExpr ratio_reduce(const LaurentPoly& num, const LaurentPoly& den);
  RationalExpr(LaurentPoly num, LaurentPoly den)
      : numerator_(std::move(num)), denominator_(std::move(den)) {}

  LaurentPoly numerator_;
  LaurentPoly denominator_;
};

std::ostream& operator<<(std::ostream& os, const RationalExpr& r);

/// Throws std::domain_error when `den` is the zero polynomial.
RationalExpr ratio_reduce(const LaurentPoly& num, const LaurentPoly& den);

/// Big integers as JSON: a number when it fits in 64 bits, a decimal string otherwise.
nlohmann::ordered_json bigint_to_json(const BigInt& value);

}  // namespace vknot
