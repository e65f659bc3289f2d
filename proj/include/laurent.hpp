// Laurent polynomials in one variable q with rational coefficients,
// used for graded characters, Poincare polynomials and q-integers.

#pragma once

#include <map>
#include <sstream>
#include <string>

#include "linalg.hpp"

namespace laurent {

using linalg::Rational;

class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(const Rational& c) {
    if (c != 0) coeffs_[0] = c;
  }
  static Laurent monomial(int exp, const Rational& c = 1) {
    Laurent p;
    if (c != 0) p.coeffs_[exp] = c;
    return p;
  }

  const std::map<int, Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.coeffs_) {
      Rational& slot = coeffs_[e];
      slot += c;
      if (slot == 0) coeffs_.erase(e);
    }
    return *this;
  }
  Laurent operator+(const Laurent& o) const {
    Laurent r = *this;
    r += o;
    return r;
  }
  Laurent operator-() const {
    Laurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
  }
  Laurent operator-(const Laurent& o) const { return *this + (-o); }
  Laurent operator*(const Laurent& o) const {
    Laurent r;
    for (const auto& [e1, c1] : coeffs_)
      for (const auto& [e2, c2] : o.coeffs_) {
        Rational& slot = r.coeffs_[e1 + e2];
        slot += c1 * c2;
        if (slot == 0) r.coeffs_.erase(e1 + e2);
      }
    return r;
  }
  bool operator==(const Laurent& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // Shift grading: multiply by q^n.
  Laurent shifted(int n) const {
    Laurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + n] = c;
    return r;
  }

  Rational eval_at_one() const {
    Rational s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
  }

  // Substitute q -> -q.
  Laurent negate_variable() const {
    Laurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = (e % 2 ? -c : c);
    return r;
  }

  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
      if (!first) os << (c > 0 ? " + " : " - ");
      else if (c < 0) os << "-";
      Rational a = c > 0 ? c : Rational(-c);
      if (a != 1 || e == 0) os << a;
      if (e != 0) {
        if (a != 1) os << "*";
        os << "q";
        if (e != 1) os << "^" << e;
      }
      first = false;
    }
    return os.str();
  }

 private:
  std::map<int, Rational> coeffs_;
};

// Balanced quantum integer [n]_q = q^{-n+1} + q^{-n+3} + ... + q^{n-1}.
inline Laurent q_integer(int n) {
  Laurent p;
  for (int r = 0; r < n; ++r) p += Laurent::monomial(2 * r - n + 1);
  return p;
}

}  // namespace laurent
