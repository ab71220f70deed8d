#include "knots/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace knots {

Laurent Laurent::monomial(int exp, BigInt coeff) {
  Laurent p;
  if (coeff != 0) p.terms_.emplace_back(exp, std::move(coeff));
  return p;
}

const Laurent& Laurent::circle_weight() {
  static const Laurent delta = [] {
    Laurent p;
    p.terms_.emplace_back(-2, BigInt(-1));
    p.terms_.emplace_back(2, BigInt(-1));
    return p;
  }();
  return delta;
}

int Laurent::min_exp() const {
  if (terms_.empty()) throw zero_polynomial("min_exp of zero polynomial");
  return terms_.front().first;
}

int Laurent::max_exp() const {
  if (terms_.empty()) throw zero_polynomial("max_exp of zero polynomial");
  return terms_.back().first;
}

BigInt Laurent::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const auto& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exp) return it->second;
  return 0;
}

void Laurent::add_scaled(const Laurent& p, int shift, const BigInt& coeff) {
  if (coeff == 0 || p.terms_.empty()) return;
  std::vector<std::pair<int, BigInt>> merged;
  merged.reserve(terms_.size() + p.terms_.size());
  auto a = terms_.begin();
  auto b = p.terms_.begin();
  while (a != terms_.end() || b != p.terms_.end()) {
    if (b == p.terms_.end() || (a != terms_.end() && a->first < b->first + shift)) {
      merged.push_back(std::move(*a));
      ++a;
    } else if (a == terms_.end() || b->first + shift < a->first) {
      merged.emplace_back(b->first + shift, b->second * coeff);
      ++b;
    } else {
      BigInt c = a->second + b->second * coeff;
      if (c != 0) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

Laurent& Laurent::operator+=(const Laurent& rhs) {
  add_scaled(rhs, 0, 1);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& rhs) {
  add_scaled(rhs, 0, -1);
  return *this;
}

Laurent Laurent::operator+(const Laurent& rhs) const {
  Laurent r = *this;
  r += rhs;
  return r;
}

Laurent Laurent::operator-(const Laurent& rhs) const {
  Laurent r = *this;
  r -= rhs;
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Laurent Laurent::operator*(const Laurent& rhs) const {
  Laurent r;
  for (const auto& t : rhs.terms_) r.add_scaled(*this, t.first, t.second);
  return r;
}

Laurent Laurent::times_monomial(int shift, const BigInt& coeff) const {
  Laurent r;
  if (coeff == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.emplace_back(t.first + shift, t.second * coeff);
  return r;
}

Laurent Laurent::div_exact(const Laurent& divisor) const {
  if (divisor.is_zero()) throw division_not_exact("division by zero polynomial");
  Laurent rem = *this;
  Laurent quot;
  const int dexp = divisor.min_exp();
  const BigInt& dc = divisor.terms_.front().second;
  while (!rem.is_zero()) {
    const auto& lt = rem.terms_.front();
    if (lt.second % dc != 0)
      throw division_not_exact("leading coefficient not divisible");
    BigInt q = lt.second / dc;
    int shift = lt.first - dexp;
    quot.terms_.emplace_back(lt.first - dexp, q);
    rem.add_scaled(divisor, shift, -q);
    if (!rem.is_zero() && rem.min_exp() <= lt.first)
      throw division_not_exact("remainder did not shrink");
  }
  quot.normalize();
  return quot;
}

Laurent Laurent::reversed() const {
  Laurent r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    r.terms_.emplace_back(-it->first, it->second);
  return r;
}

Laurent Laurent::stretched(int k) const {
  Laurent r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.emplace_back(t.first * k, t.second);
  return r;
}

std::complex<double> Laurent::eval_unit(double angle) const {
  std::complex<double> acc(0.0, 0.0);
  for (const auto& t : terms_) {
    double mag = t.second.convert_to<double>();
    acc += mag * std::polar(1.0, angle * t.first);
  }
  return acc;
}

void Laurent::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<int, BigInt>> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& t) { return t.second == 0; }),
            out.end());
  terms_ = std::move(out);
}

std::string Laurent::to_string(const std::string& var, int exp_unit) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    BigInt c = it->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    BigInt ac = abs(c);
    int e = it->first;
    if (e == 0) {
      os << ac.str();
      continue;
    }
    if (ac != 1) os << ac.str() << "*";
    os << var;
    if (e == exp_unit) continue;
    os << "^";
    if (exp_unit == 1) {
      os << e;
    } else {
      int g = std::gcd(std::abs(e), exp_unit);
      int num = e / g, den = exp_unit / g;
      if (den == 1)
        os << num;
      else
        os << "(" << num << "/" << den << ")";
    }
  }
  return os.str();
}

}  // namespace knots
