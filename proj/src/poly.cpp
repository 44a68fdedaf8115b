#include "eqcoh/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "eqcoh/error.hpp"
#include "eqcoh/reps.hpp"

namespace eqcoh {

std::string RingSpec::var_name(int i) const {
  if (i < m) return "a" + std::to_string(i);
  if (i < 2 * m) return "u" + std::to_string(i - m);
  if (i < 3 * m) return "v" + std::to_string(i - 2 * m + 1);
  if (i == 3 * m) return "x";
  return (quaternionic ? "beta" : "alpha") + std::to_string(ipow(p, i - 3 * m - 1));
}

long long RingSpec::pm() const { return ipow(p, m); }

bool MonoOrder::operator()(const Mono& l, const Mono& r) const {
  int dl = 0, dr = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    dl += l[i];
    dr += r[i];
  }
  if (dl != dr) return dl > dr;
  return l > r;
}

namespace {

long long checked_mul(long long a, long long b) {
  long long out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("polynomial coefficient overflow");
  return out;
}

long long checked_add(long long a, long long b) {
  long long out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("polynomial coefficient overflow");
  return out;
}

// 0 means "integer, no reduction".
long long modulus_for(const RingSpec& r, const Mono& mono) {
  if (r.modp) return r.p;
  for (int k = r.m - 1; k >= 0; --k)
    if (mono[r.a(k)] > 0) return ipow(r.p, r.m - k);
  return 0;
}

long long rewrite_v(const RingSpec& r, Mono& mono) {
  long long factor = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int t = r.m; t >= 1; --t) {
      while (mono[r.v(t)] > 0) {
        if (t == r.m) {
          --mono[r.v(t)];
          ++mono[r.u(t - 1)];
        } else if (mono[r.u(t)] > 0) {
          --mono[r.v(t)];
          --mono[r.u(t)];
          ++mono[r.u(t - 1)];
        } else if (mono[r.a(t)] > 0) {
          --mono[r.v(t)];
          --mono[r.a(t)];
          ++mono[r.a(t - 1)];
          factor = checked_mul(factor, r.p);
        } else {
          break;
        }
        changed = true;
      }
    }
  }
  return factor;
}

}  // namespace

Poly::Poly(std::shared_ptr<const RingSpec> ring) : ring_(std::move(ring)) {
  if (ring_->nvars() > kMaxVars) throw DomainError("too many generators for the polynomial engine");
}

Poly Poly::constant(std::shared_ptr<const RingSpec> ring, long long c) {
  Poly p(std::move(ring));
  p.add_term(Mono{}, c);
  return p;
}

Poly Poly::var(std::shared_ptr<const RingSpec> ring, int index, int power) {
  Poly p(std::move(ring));
  Mono m{};
  m[index] = static_cast<std::uint16_t>(power);
  p.add_term(m, 1);
  return p;
}

void Poly::add_term(Mono mono, long long coeff) {
  if (coeff == 0) return;
  coeff = checked_mul(coeff, rewrite_v(*ring_, mono));
  long long mod = modulus_for(*ring_, mono);
  if (mod) coeff = eqcoh::mod(coeff, static_cast<int>(mod));
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (inserted) return;
  long long c = checked_add(it->second, coeff);
  if (mod) c = eqcoh::mod(c, static_cast<int>(mod));
  if (c == 0)
    terms_.erase(it);
  else
    it->second = c;
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(long long c) {
  Poly out(ring_);
  for (auto& [m, k] : terms_) out.add_term(m, checked_mul(k, c));
  *this = std::move(out);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(a.ring_);
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) {
      Mono m;
      for (int i = 0; i < kMaxVars; ++i) m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
      out.add_term(m, checked_mul(ca, cb));
    }
  return out;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw DomainError("negative power");
  Poly result = constant(ring_, 1), base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

Poly Poly::substitute(int index, const Poly& value) const {
  std::map<int, Poly> powers;
  Poly out(ring_);
  for (auto& [m, c] : terms_) {
    int e = m[index];
    Mono rest = m;
    rest[index] = 0;
    Poly term(ring_);
    term.add_term(rest, c);
    if (e > 0) {
      auto it = powers.find(e);
      if (it == powers.end()) it = powers.emplace(e, value.pow(e)).first;
      term = term * it->second;
    }
    out += term;
  }
  return out;
}

Poly Poly::reduce_to(std::shared_ptr<const RingSpec> ring) const {
  if (ring->p != ring_->p || ring->m != ring_->m) throw DomainError("rings over different groups");
  Poly out(std::move(ring));
  for (auto& [m, c] : terms_) out.add_term(m, c);
  return out;
}

Poly Poly::square_classes() const {
  const RingSpec& r = *ring_;
  Poly out(ring_);
  for (auto& [m, c] : terms_) {
    Mono s = m;
    for (int k = 0; k < r.m; ++k) {
      s[r.a(k)] = static_cast<std::uint16_t>(2 * m[r.a(k)]);
      s[r.u(k)] = static_cast<std::uint16_t>(2 * m[r.u(k)]);
      s[r.v(k + 1)] = static_cast<std::uint16_t>(2 * m[r.v(k + 1)]);
    }
    out.add_term(s, c);
  }
  return out;
}

Poly Poly::underlying() const {
  const RingSpec& r = *ring_;
  Poly out(ring_);
  for (auto& [m, c] : terms_) {
    bool has_a = false;
    for (int k = 0; k < r.m; ++k) has_a |= m[r.a(k)] > 0;
    if (has_a) continue;
    Mono s = m;
    for (int k = 0; k < r.m; ++k) {
      s[r.u(k)] = 0;
      s[r.v(k + 1)] = 0;
    }
    out.add_term(s, c);
  }
  return out;
}

std::map<int, Poly> Poly::by_x_power() const {
  std::map<int, Poly> out;
  const int xi = ring_->x();
  for (auto& [m, c] : terms_) {
    Mono rest = m;
    rest[xi] = 0;
    auto it = out.try_emplace(m[xi], ring_).first;
    it->second.add_term(rest, c);
  }
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    long long shown = c;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) shown = -c;
    } else if (c < 0) {
      os << "-";
      shown = -c;
    }
    first = false;
    std::string body;
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += ring_->var_name(i);
      if (m[i] > 1) body += "^" + std::to_string(m[i]);
    }
    if (body.empty())
      os << shown;
    else if (shown == 1)
      os << body;
    else
      os << shown << "*" << body;
  }
  return os.str();
}

}  // namespace eqcoh
