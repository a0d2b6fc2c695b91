#include "kpopen/weighted.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kpo {

std::string to_string(TimeFamily family) { return family == TimeFamily::T ? "T" : "ts"; }

namespace {

void trim(WeightedPolynomial::Exponent& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

void require_same_family(const WeightedPolynomial& a, const WeightedPolynomial& b) {
  if (a.family() != b.family()) throw std::invalid_argument("time families differ");
}

}  // namespace

WeightedPolynomial WeightedPolynomial::constant(TimeFamily family, int max_weight, const Rational& c) {
  WeightedPolynomial p(family, max_weight);
  p.add_term({}, c);
  return p;
}

WeightedPolynomial WeightedPolynomial::variable(TimeFamily family, int max_weight, int slot) {
  WeightedPolynomial p(family, max_weight);
  Exponent e(slot, 0);
  e[slot - 1] = 1;
  p.add_term(e, 1);
  return p;
}

int WeightedPolynomial::weight(const Exponent& e) {
  int w = 0;
  for (std::size_t k = 0; k < e.size(); ++k) w += static_cast<int>(k + 1) * e[k];
  return w;
}

void WeightedPolynomial::add_term(Exponent e, const Rational& c) {
  if (c == 0) return;
  trim(e);
  if (weight(e) > max_weight_) return;
  auto [it, inserted] = terms_.emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational WeightedPolynomial::coeff(Exponent e) const {
  trim(e);
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

WeightedPolynomial WeightedPolynomial::truncated(int max_weight) const {
  WeightedPolynomial r(family_, max_weight);
  for (const auto& [e, c] : terms_) r.add_term(e, c);
  return r;
}

WeightedPolynomial WeightedPolynomial::scaled(const Rational& c) const {
  WeightedPolynomial r(family_, max_weight_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

WeightedPolynomial WeightedPolynomial::derivative(int slot) const {
  WeightedPolynomial r(family_, max_weight_);
  if (slot < 1) return r;
  for (const auto& [e, c] : terms_) {
    if (static_cast<int>(e.size()) < slot || e[slot - 1] == 0) continue;
    Exponent f = e;
    --f[slot - 1];
    r.add_term(f, c * e[slot - 1]);
  }
  return r;
}

WeightedPolynomial WeightedPolynomial::times_variable(int slot) const {
  WeightedPolynomial r(family_, max_weight_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    if (static_cast<int>(f.size()) < slot) f.resize(slot, 0);
    ++f[slot - 1];
    r.add_term(f, c);
  }
  return r;
}

WeightedPolynomial WeightedPolynomial::homogeneous_part(int w) const {
  WeightedPolynomial r(family_, max_weight_);
  for (const auto& [e, c] : terms_)
    if (weight(e) == w) r.terms_.emplace(e, c);
  return r;
}

Integer ts_scale(int slot) {
  if (slot < 1) throw std::invalid_argument("slot must be positive");
  if (slot % 2) return double_factorial(slot);
  int n = slot / 2 - 1;
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, n + 1);
  return p * factorial(n + 1);
}

WeightedPolynomial WeightedPolynomial::to_family(TimeFamily family) const {
  if (family == family_) return *this;
  WeightedPolynomial r(family, max_weight_);
  for (const auto& [e, c] : terms_) {
    Integer f = 1;
    for (std::size_t k = 0; k < e.size(); ++k)
      for (int j = 0; j < e[k]; ++j) f *= ts_scale(static_cast<int>(k + 1));
    r.terms_.emplace(e, family == TimeFamily::ts ? Rational(c / f) : Rational(c * f));
  }
  return r;
}

WeightedPolynomial operator+(const WeightedPolynomial& a, const WeightedPolynomial& b) {
  require_same_family(a, b);
  WeightedPolynomial r = a.truncated(std::min(a.max_weight_, b.max_weight_));
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

WeightedPolynomial operator-(const WeightedPolynomial& a, const WeightedPolynomial& b) { return a + b.scaled(-1); }

WeightedPolynomial operator*(const WeightedPolynomial& a, const WeightedPolynomial& b) {
  require_same_family(a, b);
  const int cap = std::min(a.max_weight_, b.max_weight_);
  WeightedPolynomial r(a.family_, cap);
  std::vector<std::pair<int, const std::pair<const WeightedPolynomial::Exponent, Rational>*>> bs;
  for (const auto& t : b.terms_) bs.emplace_back(WeightedPolynomial::weight(t.first), &t);
  std::sort(bs.begin(), bs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  WeightedPolynomial::Exponent e;
  for (const auto& [ea, ca] : a.terms_) {
    const int wa = WeightedPolynomial::weight(ea);
    for (const auto& [wb, tb] : bs) {
      if (wa + wb > cap) break;
      const auto& eb = tb->first;
      e.assign(std::max(ea.size(), eb.size()), 0);
      for (std::size_t k = 0; k < ea.size(); ++k) e[k] += ea[k];
      for (std::size_t k = 0; k < eb.size(); ++k) e[k] += eb[k];
      r.add_term(e, ca * tb->second);
    }
  }
  return r;
}

std::string WeightedPolynomial::monomial_name(const Exponent& e) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!first) os << "*";
    first = false;
    const int slot = static_cast<int>(k + 1);
    if (family_ == TimeFamily::T)
      os << "T" << slot;
    else
      os << (slot % 2 ? "t" : "s") << (slot % 2 ? (slot - 1) / 2 : slot / 2 - 1);
    if (e[k] > 1) os << "^" << e[k];
  }
  return first ? "1" : os.str();
}

WeightedPolynomial truncated_log(const WeightedPolynomial& p) {
  if (p.constant_term() != 1) throw std::invalid_argument("logarithm needs constant term 1");
  WeightedPolynomial q = p - WeightedPolynomial::constant(p.family(), p.max_weight(), 1);
  WeightedPolynomial result(p.family(), p.max_weight());
  WeightedPolynomial power = q;
  for (int k = 1; k <= p.max_weight() && !power.is_zero(); ++k) {
    result = result + power.scaled(ratio(k % 2 ? 1 : -1, k));
    power = power * q;
  }
  return result;
}

WeightedPolynomial truncated_exp(const WeightedPolynomial& p) {
  if (p.constant_term() != 0) throw std::invalid_argument("exponential needs constant term 0");
  WeightedPolynomial result = WeightedPolynomial::constant(p.family(), p.max_weight(), 1);
  WeightedPolynomial power = WeightedPolynomial::constant(p.family(), p.max_weight(), 1);
  for (int k = 1; k <= p.max_weight(); ++k) {
    power = (power * p).scaled(ratio(1, k));
    if (power.is_zero()) break;
    result = result + power;
  }
  return result;
}

}  // namespace kpo
