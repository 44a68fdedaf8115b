#include "eqcoh/reps.hpp"

#include <numeric>
#include <sstream>

#include "eqcoh/error.hpp"

namespace eqcoh {

std::vector<int> divisors(int n) {
  if (n < 1) throw DomainError("group order must be positive");
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

int mod(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

int pvaluation(long long x, int p) {
  if (x == 0) throw DomainError("valuation of zero");
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

VirtualRep::VirtualRep(int n) : n_(n) {
  if (n < 1) throw DomainError("group order must be positive");
}

VirtualRep VirtualRep::trivial(int n, int dim) {
  VirtualRep r(n);
  r.trivial_ = dim;
  return r;
}

VirtualRep VirtualRep::lambda(int n, int i, int mult) {
  VirtualRep r(n);
  r.add_lambda(i, mult);
  return r;
}

VirtualRep VirtualRep::sign(int n, int mult) {
  if (n % 2 != 0) throw DomainError("sign representation needs even order, got n=" + std::to_string(n));
  VirtualRep r(n);
  r.sigma_ = mult;
  return r;
}

VirtualRep VirtualRep::real_regular(int n) {
  VirtualRep r = trivial(n, 1);
  if (n % 2 == 0) r.sigma_ = 1;
  for (int i = 1; 2 * i < n; ++i) r.add_lambda(i, 1);
  return r;
}

void VirtualRep::add_lambda(int i, int mult) {
  int e = mod(i, n_);
  if (e == 0) {
    trivial_ += 2 * mult;
    return;
  }
  int& m = lambda_[e];
  m += mult;
  if (m == 0) lambda_.erase(e);
}

int VirtualRep::lambda_mult(int i) const {
  auto it = lambda_.find(mod(i, n_));
  return it == lambda_.end() ? 0 : it->second;
}

int VirtualRep::dim() const {
  int d = trivial_ + sigma_;
  for (auto [e, m] : lambda_) d += 2 * m;
  return d;
}

bool VirtualRep::is_zero() const { return trivial_ == 0 && sigma_ == 0 && lambda_.empty(); }

bool VirtualRep::is_actual() const {
  if (trivial_ < 0 || sigma_ < 0) return false;
  for (auto [e, m] : lambda_)
    if (m < 0) return false;
  return true;
}

VirtualRep& VirtualRep::operator+=(const VirtualRep& o) {
  if (o.n_ != n_) throw DomainError("representations of different groups");
  trivial_ += o.trivial_;
  sigma_ += o.sigma_;
  for (auto [e, m] : o.lambda_) add_lambda(e, m);
  return *this;
}

VirtualRep& VirtualRep::operator-=(const VirtualRep& o) { return *this += -o; }

VirtualRep VirtualRep::operator-() const {
  VirtualRep r(n_);
  r.trivial_ = -trivial_;
  r.sigma_ = -sigma_;
  for (auto [e, m] : lambda_) r.lambda_[e] = -m;
  return r;
}

VirtualRep operator*(int k, const VirtualRep& a) {
  VirtualRep r(a.n_);
  if (k == 0) return r;
  r.trivial_ = k * a.trivial_;
  r.sigma_ = k * a.sigma_;
  for (auto [e, m] : a.lambda_) r.lambda_[e] = k * m;
  return r;
}

std::string VirtualRep::str() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](int c, const std::string& atom) {
    if (c == 0) return;
    int a = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (atom.empty()) {
      os << a;
    } else {
      if (a != 1) os << a;
      os << atom;
    }
  };
  term(trivial_, "");
  for (auto [e, m] : lambda_) term(m, "L" + std::to_string(e));
  term(sigma_, "s");
  if (first) os << "0";
  return os.str();
}

int fixed_dim(const VirtualRep& a, int d) {
  int n = a.order();
  if (d < 1 || n % d != 0) throw DomainError(std::to_string(d) + " does not divide " + std::to_string(n));
  int f = a.trivial_dim();
  for (auto [e, m] : a.lambdas())
    if (e % d == 0) f += 2 * m;
  if ((n / d) % 2 == 0) f += a.sigma();
  return f;
}

VirtualRep twist(const VirtualRep& a, int j) {
  int n = a.order();
  if (a.sigma() != 0) throw DomainError("twist is only defined on complex representations");
  if (a.trivial_dim() % 2 != 0) throw DomainError("twist needs an even trivial part");
  VirtualRep r = VirtualRep::lambda(n, -j, a.trivial_dim() / 2);
  for (auto [e, m] : a.lambdas()) r += VirtualRep::lambda(n, e - j, m);
  return r;
}

VirtualRep phi(int ell, int n) {
  if (ell < 0) throw DomainError("phi needs ell >= 0");
  VirtualRep r(n);
  for (int j = 0; j < ell; ++j) r += VirtualRep::lambda(n, j - ell);
  return r;
}

VirtualRep quat_w(int k, int n) {
  if (k < 0) throw DomainError("quat_w needs k >= 0");
  VirtualRep r(n);
  for (int i = 0; i < k; ++i) {
    r += VirtualRep::lambda(n, i - k);
    r += VirtualRep::lambda(n, -i - k);
  }
  return r;
}

VirtualRep restrict_to(const VirtualRep& a, int m) {
  int n = a.order();
  if (m < 1 || n % m != 0) throw DomainError(std::to_string(m) + " does not divide " + std::to_string(n));
  VirtualRep r = VirtualRep::trivial(m, a.trivial_dim());
  for (auto [e, k] : a.lambdas()) r += VirtualRep::lambda(m, e, k);
  if (a.sigma() != 0) {
    if ((n / m) % 2 == 0)
      r += VirtualRep::trivial(m, a.sigma());
    else
      r += VirtualRep::sign(m, a.sigma());
  }
  return r;
}

VirtualRep hz_normalize(const VirtualRep& a) {
  int n = a.order();
  VirtualRep r = VirtualRep::trivial(n, a.trivial_dim());
  if (a.sigma() != 0) r += VirtualRep::sign(n, a.sigma());
  for (auto [e, m] : a.lambdas()) r += VirtualRep::lambda(n, std::gcd(e, n), m);
  return r;
}

}  // namespace eqcoh
