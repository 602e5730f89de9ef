#include "vknot/polynomial.hpp"

#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vknot {

namespace {

void append_signed_term(std::ostringstream& out, bool first, const BigInt& coefficient,
                        const std::string& monomial) {
  const bool negative = coefficient < 0;
  const BigInt magnitude = negative ? BigInt(-coefficient) : coefficient;
  if (negative) {
    out << '-';
  } else if (!first) {
    out << '+';
  }
  out << magnitude;
  if (!monomial.empty()) out << '*' << monomial;
}

}  // namespace

nlohmann::ordered_json bigint_to_json(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(value);
  }
  return value.str();
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(BigInt constant) { add_term(0, constant); }

LaurentPoly::LaurentPoly(int constant) { add_term(0, BigInt(constant)); }

LaurentPoly LaurentPoly::monomial(const BigInt& coefficient, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

LaurentPoly LaurentPoly::from_terms(const TermMap& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

BigInt LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of the zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of the zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exponent, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + k, c);
  return p;
}

LaurentPoly LaurentPoly::invert_variable() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
  return p;
}

BigInt LaurentPoly::content() const {
  BigInt g = 0;
  for (const auto& [e, c] : terms_) g = boost::multiprecision::gcd(g, abs(c));
  return g;
}

LaurentPoly LaurentPoly::divided_exactly(const BigInt& divisor) const {
  if (divisor == 0) throw std::domain_error("division by zero");
  LaurentPoly p;
  for (const auto& [e, c] : terms_) {
    if (c % divisor != 0) throw std::domain_error("inexact coefficient division");
    p.terms_.emplace_hint(p.terms_.end(), e, c / divisor);
  }
  return p;
}

Rational LaurentPoly::eval(const Rational& a) const {
  if (a == 0) throw std::domain_error("Laurent polynomial evaluated at A = 0");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational power = 1;
    const Rational base = e >= 0 ? a : Rational(1) / a;
    for (int i = 0; i < std::abs(e); ++i) power *= base;
    total += Rational(c) * power;
  }
  return total;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    append_signed_term(out, first, c, e == 0 ? std::string() : "A^" + std::to_string(e));
    first = false;
  }
  return out.str();
}

nlohmann::ordered_json LaurentPoly::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [e, c] : terms_) arr.push_back({e, bigint_to_json(c)});
  return arr;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r;
  for (const auto& [e1, c1] : p.terms_) {
    for (const auto& [e2, c2] : q.terms_) r.add_term(e1 + e2, c1 * c2);
  }
  return r;
}

LaurentPoly operator-(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
  return r;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
LaurentPoly lp_invert_variable(const LaurentPoly& p) { return p.invert_variable(); }
Rational lp_eval_int(const LaurentPoly& p, const Rational& a) { return p.eval(a); }

// ---------------------------------------------------------------------------
// BiLaurent

BiLaurent::BiLaurent(int constant) { add_term(0, 0, BigInt(constant)); }

BiLaurent BiLaurent::monomial(const BigInt& coefficient, int a_exponent, int b_exponent) {
  BiLaurent p;
  p.add_term(a_exponent, b_exponent, coefficient);
  return p;
}

BigInt BiLaurent::coefficient(int a_exponent, int b_exponent) const {
  auto it = terms_.find({a_exponent, b_exponent});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void BiLaurent::add_term(int a_exponent, int b_exponent, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace({a_exponent, b_exponent}, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly BiLaurent::collapse_b_to_inverse_a() const {
  LaurentPoly p;
  for (const auto& [ex, c] : terms_) p += LaurentPoly::monomial(c, ex.first - ex.second);
  return p;
}

BiLaurent BiLaurent::swap_variables() const {
  BiLaurent p;
  for (const auto& [ex, c] : terms_) p.terms_.emplace(Exponents{ex.second, ex.first}, c);
  return p;
}

std::string BiLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [ex, c] : terms_) {
    std::string mono;
    if (ex.first != 0) mono = "A^" + std::to_string(ex.first);
    if (ex.second != 0) {
      if (!mono.empty()) mono += '*';
      mono += "B^" + std::to_string(ex.second);
    }
    append_signed_term(out, first, c, mono);
    first = false;
  }
  return out.str();
}

nlohmann::ordered_json BiLaurent::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [ex, c] : terms_) arr.push_back({ex.first, ex.second, bigint_to_json(c)});
  return arr;
}

BiLaurent& BiLaurent::operator+=(const BiLaurent& other) {
  for (const auto& [ex, c] : other.terms_) add_term(ex.first, ex.second, c);
  return *this;
}

BiLaurent operator*(const BiLaurent& p, const BiLaurent& q) {
  BiLaurent r;
  for (const auto& [e1, c1] : p.terms_) {
    for (const auto& [e2, c2] : q.terms_) {
      r.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
    }
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const BiLaurent& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// RationalExpr

namespace {

/// p / q in Z[A, A^-1] when q divides p exactly with an integral quotient.
std::optional<LaurentPoly> exact_quotient(LaurentPoly p, const LaurentPoly& q) {
  const auto& [q_top, q_lead] = *q.terms().rbegin();
  LaurentPoly quotient;
  while (!p.is_zero()) {
    const auto& [p_top, p_lead] = *p.terms().rbegin();
    if (p_top - p.min_exponent() < q_top - q.min_exponent()) return std::nullopt;
    if (p_lead % q_lead != 0) return std::nullopt;
    const LaurentPoly step = LaurentPoly::monomial(p_lead / q_lead, p_top - q_top);
    quotient = quotient + step;
    p = p - step * q;
  }
  return quotient;
}

}  // namespace

RationalExpr ratio_reduce(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("ratio with zero denominator");
  if (num.is_zero()) return RationalExpr(LaurentPoly(0), LaurentPoly(1));

  const int shift = -den.min_exponent();
  LaurentPoly n = num.shifted(shift);
  LaurentPoly d = den.shifted(shift);

  // Whole-polynomial cancellation when one part divides the other.
  if (auto q = exact_quotient(n, d)) return RationalExpr(*q, LaurentPoly(1));
  if (auto q = exact_quotient(d, n); q && q->terms().size() == 1) {
    const auto& [e, c] = *q->terms().begin();
    LaurentPoly top = LaurentPoly::monomial(c < 0 ? -1 : 1, -e);
    LaurentPoly bottom(c < 0 ? BigInt(-c) : c);
    return RationalExpr(top, bottom);
  }

  BigInt g = boost::multiprecision::gcd(n.content(), d.content());
  if (d.terms().begin()->second < 0) g = -g;
  return RationalExpr(n.divided_exactly(g), d.divided_exactly(g));
}

bool RationalExpr::is_one() const { return numerator_ == denominator_; }

RationalExpr RationalExpr::invert_variable() const {
  return ratio_reduce(numerator_.invert_variable(), denominator_.invert_variable());
}

bool operator==(const RationalExpr& x, const RationalExpr& y) {
  return x.numerator_ * y.denominator_ == y.numerator_ * x.denominator_;
}

std::string RationalExpr::to_string() const {
  if (denominator_ == LaurentPoly(1)) return numerator_.to_string();
  auto wrap = [](const LaurentPoly& p) {
    return p.terms().size() > 1 ? "(" + p.to_string() + ")" : p.to_string();
  };
  return wrap(numerator_) + "/" + wrap(denominator_);
}

nlohmann::ordered_json RationalExpr::to_json() const {
  nlohmann::ordered_json j;
  j["num"] = numerator_.to_json();
  j["den"] = denominator_.to_json();
  return j;
}

std::ostream& operator<<(std::ostream& os, const RationalExpr& r) { return os << r.to_string(); }

}  // namespace vknot
