#include "kpopen/symmfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kpo {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

int Partition::multiplicity(int v) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), v)); }

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition transpose(const Partition& lambda) {
  std::vector<int> t;
  if (lambda.empty()) return Partition();
  for (int j = 1; j <= lambda[0]; ++j) {
    int c = 0;
    for (int p : lambda.parts())
      if (p >= j) ++c;
    t.push_back(c);
  }
  return Partition(t);
}

FrobeniusForm frobenius(const Partition& lambda) {
  FrobeniusForm f;
  Partition t = transpose(lambda);
  for (int i = 0; i < lambda.length() && lambda[i] > i; ++i) {
    f.arms.push_back(lambda[i] - i - 1);
    f.legs.push_back(t[i] - i - 1);
  }
  return f;
}

Partition from_frobenius(const FrobeniusForm& f) {
  const int k = f.rank();
  if (static_cast<int>(f.legs.size()) != k) throw std::invalid_argument("arms and legs differ in length");
  for (int i = 0; i < k; ++i) {
    if (f.arms[i] < 0 || f.legs[i] < 0) throw std::invalid_argument("Frobenius entries must be nonnegative");
    if (i > 0 && (f.arms[i] >= f.arms[i - 1] || f.legs[i] >= f.legs[i - 1]))
      throw std::invalid_argument("Frobenius entries must be strictly decreasing");
  }
  if (k == 0) return Partition();
  // Rows 1..k: arm + i; rows below the diagonal block come from the legs.
  std::vector<int> rows(k);
  for (int i = 0; i < k; ++i) rows[i] = f.arms[i] + i + 1;
  int len = f.legs[0] + 1;
  for (int r = k; r < len; ++r) {
    int c = 0;
    for (int j = 0; j < k; ++j)
      if (f.legs[j] + j >= r) ++c;
    rows.push_back(c);
  }
  return Partition(rows);
}

Integer z_aut(const Partition& lambda) {
  Integer z = 1;
  std::map<int, int> mult;
  for (int p : lambda.parts()) ++mult[p];
  for (auto [part, k] : mult) {
    Integer pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), part, k);
    z *= pk * factorial(k);
  }
  return z;
}

namespace {

// Beta-set encoding: beta_i = lambda_i + (L - i), i = 1..L.
std::vector<int> beta_set(const Partition& lambda, int length) {
  std::vector<int> b(length);
  for (int i = 0; i < length; ++i) b[i] = (i < lambda.length() ? lambda[i] : 0) + (length - 1 - i);
  return b;
}

Partition from_beta(std::vector<int> b) {
  std::sort(b.rbegin(), b.rend());
  const int length = static_cast<int>(b.size());
  std::vector<int> parts;
  for (int i = 0; i < length; ++i) {
    int p = b[i] - (length - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return Partition(parts);
}

struct CharacterMemo {
  std::mutex mu;
  std::map<std::pair<Partition, Partition>, long long> table;
};

CharacterMemo& character_memo() {
  static CharacterMemo memo;
  return memo;
}

long long mn_rule(const Partition& lambda, const Partition& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, mu);
  {
    std::lock_guard<std::mutex> lock(character_memo().mu);
    auto it = character_memo().table.find(key);
    if (it != character_memo().table.end()) return it->second;
  }
  const int r = mu[0];
  Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
  const int length = lambda.length();
  std::vector<int> b = beta_set(lambda, length);
  std::set<int> occupied(b.begin(), b.end());
  long long total = 0;
  for (int i = 0; i < length; ++i) {
    int target = b[i] - r;
    if (target < 0 || occupied.count(target)) continue;
    int between = 0;
    for (int x : b)
      if (x > target && x < b[i]) ++between;
    std::vector<int> nb = b;
    nb[i] = target;
    long long sub = mn_rule(from_beta(nb), rest);
    total += (between % 2 ? -sub : sub);
  }
  std::lock_guard<std::mutex> lock(character_memo().mu);
  character_memo().table.emplace(key, total);
  return total;
}

}  // namespace

long long character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("character needs partitions of equal size");
  return mn_rule(lambda, mu);
}

PowerSumPolynomial PowerSumPolynomial::one() {
  PowerSumPolynomial p;
  p.add(Partition(), 1);
  return p;
}

PowerSumPolynomial PowerSumPolynomial::power_sum(int k) {
  PowerSumPolynomial p;
  p.add(Partition({k}), 1);
  return p;
}

Rational PowerSumPolynomial::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PowerSumPolynomial::add(const Partition& lambda, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PowerSumPolynomial& PowerSumPolynomial::operator+=(const PowerSumPolynomial& o) {
  for (const auto& [l, c] : o.terms_) add(l, c);
  return *this;
}

PowerSumPolynomial PowerSumPolynomial::scaled(const Rational& c) const {
  PowerSumPolynomial r;
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [l, v] : r.terms_) v *= c;
  return r;
}

PowerSumPolynomial operator*(const PowerSumPolynomial& a, const PowerSumPolynomial& b) {
  PowerSumPolynomial r;
  for (const auto& [la, ca] : a.terms_)
    for (const auto& [lb, cb] : b.terms_) {
      std::vector<int> merged;
      std::merge(la.parts().begin(), la.parts().end(), lb.parts().begin(), lb.parts().end(),
                 std::back_inserter(merged), std::greater<int>());
      r.add(Partition(merged), ca * cb);
    }
  return r;
}

PowerSumPolynomial complete_homogeneous(int n) {
  static std::mutex mu;
  static std::vector<PowerSumPolynomial> cache{PowerSumPolynomial::one()};
  if (n < 0) return PowerSumPolynomial();
  std::lock_guard<std::mutex> lock(mu);
  // Coefficients of exp(sum_k p_k x^k / k): n h_n = sum_{k=1}^n p_k h_{n-k}.
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    PowerSumPolynomial h;
    for (int k = 1; k <= m; ++k) h += PowerSumPolynomial::power_sum(k) * cache[m - k];
    cache.push_back(h.scaled(ratio(1, m)));
  }
  return cache[n];
}

PowerSumPolynomial schur_in_powersums(const Partition& mu) {
  PowerSumPolynomial s;
  for (const Partition& lambda : partitions_of(mu.size()))
    s.add(lambda, ratio(Integer(static_cast<long>(character(mu, lambda))), z_aut(lambda)));
  return s;
}

PowerSumPolynomial schur_jacobi_trudi(const Partition& mu) {
  const int k = mu.length();
  if (k == 0) return PowerSumPolynomial::one();
  auto entry = [&](int i, int j) { return complete_homogeneous(mu[i] - i + j); };
  // Laplace expansion along rows, memoized on the set of used columns.
  std::map<unsigned, PowerSumPolynomial> memo;
  std::function<PowerSumPolynomial(int, unsigned)> minor = [&](int row, unsigned used) -> PowerSumPolynomial {
    if (row == k) return PowerSumPolynomial::one();
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    PowerSumPolynomial acc;
    int sign_count = 0;
    for (int j = 0; j < k; ++j) {
      if (used & (1u << j)) continue;
      PowerSumPolynomial term = entry(row, j) * minor(row + 1, used | (1u << j));
      acc += (sign_count % 2 ? term.scaled(-1) : term);
      ++sign_count;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return minor(0, 0);
}

}  // namespace kpo
