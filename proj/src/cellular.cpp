#include "eqcoh/cellular.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "eqcoh/error.hpp"
#include "eqcoh/smith.hpp"

namespace eqcoh {

namespace {

using Map = std::vector<long long>;
using Block = std::vector<std::vector<Map>>;  // [target][source]

bool is_zero_map(const Map& f) {
  return std::all_of(f.begin(), f.end(), [](long long v) { return v == 0; });
}

void tidy(Map& f) {
  if (is_zero_map(f)) f.clear();
}

// f: Z[G/A] -> Z[G/B] (length n/b), g: Z[G/B] -> Z[G/C] (length n/c); returns g o f.
Map compose(const Map& f, const Map& g) {
  if (f.empty() || g.empty()) return {};
  const int lc = static_cast<int>(g.size());
  Map out(lc, 0);
  for (int t = 0; t < static_cast<int>(f.size()); ++t) {
    if (f[t] == 0) continue;
    for (int x = 0; x < lc; ++x) out[x] += f[t] * g[mod(x - t, lc)];
  }
  tidy(out);
  return out;
}

void add_into(Map& dst, const Map& src, long long coef, int len) {
  if (src.empty() || coef == 0) return;
  if (dst.empty()) dst.assign(len, 0);
  for (int i = 0; i < len; ++i) dst[i] += coef * src[i];
  tidy(dst);
}

// Transpose of f: Z[G/A] -> Z[G/B] under the permutation-basis pairing.
Map transpose(const Map& f, int n, int a) {
  if (f.empty()) return {};
  const int la = n / a, lb = static_cast<int>(f.size());
  Map out(la, 0);
  for (int x = 0; x < la; ++x) out[x] = f[mod(-x, lb)];
  return out;
}

PermComplex unit_complex(int n, int degree) {
  PermComplex c;
  c.n = n;
  c.cells[degree] = {n};
  return c;
}

// Reduced cellular chains of S^U for an irreducible U.
PermComplex irreducible_sphere(int n, int kind_exponent) {
  PermComplex c;
  c.n = n;
  if (kind_exponent < 0) {  // sign representation
    c.cells[0] = {n};
    c.cells[1] = {n / 2};
    c.d[1] = {{Map{1}}};
    return c;
  }
  const int i = kind_exponent;
  const int k = std::gcd(i, n), q = n / k;
  // Rays and sectors are indexed by G/C_k; the generator rotating one step is
  // the inverse of i/k modulo q.
  int step = 0;
  for (int u = 1; u < q; ++u)
    if (mod(static_cast<long long>(u) * (i / k), q) == 1) step = u;
  c.cells[0] = {n};
  c.cells[1] = {k};
  c.cells[2] = {k};
  c.d[1] = {{Map{1}}};
  Map boundary(q, 0);
  boundary[step] += 1;
  boundary[0] -= 1;
  c.d[2] = {{boundary}};
  return c;
}

PermComplex dual(const PermComplex& c) {
  PermComplex out;
  out.n = c.n;
  for (auto& [deg, cs] : c.cells) out.cells[-deg] = cs;
  // d_i : C_i -> C_{i-1} transposes to C_{i-1}^* -> C_i^*, i.e. degree 1-i -> -i.
  for (auto& [deg, blk] : c.d) {
    const auto& src = c.cells.at(deg);
    const auto& tgt = c.cells.at(deg - 1);
    Block t(src.size(), std::vector<Map>(tgt.size()));
    for (std::size_t a = 0; a < tgt.size(); ++a)
      for (std::size_t b = 0; b < src.size(); ++b) t[b][a] = transpose(blk[a][b], c.n, src[b]);
    out.d[1 - deg] = std::move(t);
  }
  return out;
}

struct Orbit {
  int r, g;
};

// Orbit index and position of the pair (x, y) in G/C_a x G/C_b.
Orbit locate(int n, int a, int b, int x, int y) {
  const int R = n / std::lcm(a, b);
  const int r = mod(y - x, R);
  const int span = n / std::gcd(a, b);
  for (int g = 0; g < span; ++g)
    if (mod(g - x, n / a) == 0 && mod(g - (y - r), n / b) == 0) return {r, g};
  throw std::logic_error("orbit lookup failed");
}

Block& block_for(PermComplex& c, int deg) {
  auto& blk = c.d[deg];
  const auto& src = c.cells[deg];
  const auto& tgt = c.cells[deg - 1];
  if (blk.size() != tgt.size()) blk.assign(tgt.size(), std::vector<Map>(src.size()));
  for (auto& row : blk) row.resize(src.size());
  return blk;
}

PermComplex tensor(const PermComplex& P, const PermComplex& Q) {
  const int n = P.n;
  PermComplex out;
  out.n = n;
  using Key = std::tuple<int, int, int, int, int>;  // (i, s, j, q, r)
  std::map<Key, std::pair<int, int>> where;           // -> (degree, index)
  for (auto& [i, ps] : P.cells)
    for (auto& [j, qs] : Q.cells)
      for (std::size_t s = 0; s < ps.size(); ++s)
        for (std::size_t q = 0; q < qs.size(); ++q) {
          const int R = n / std::lcm(ps[s], qs[q]);
          for (int r = 0; r < R; ++r) {
            auto& cs = out.cells[i + j];
            where[{i, (int)s, j, (int)q, r}] = {i + j, static_cast<int>(cs.size())};
            cs.push_back(std::gcd(ps[s], qs[q]));
          }
        }
  for (auto& [deg, cs] : out.cells)
    if (out.cells.count(deg - 1)) block_for(out, deg);

  for (auto& [key, pos] : where) {
    auto [i, s, j, q, r] = key;
    const int a = P.cells.at(i)[s], b = Q.cells.at(j)[q];
    const int deg = pos.first, src = pos.second;
    if (auto it = P.d.find(i); it != P.d.end()) {
      const auto& tgts = P.cells.at(i - 1);
      for (std::size_t s2 = 0; s2 < tgts.size(); ++s2) {
        const Map& f = it->second[s2][s];
        if (f.empty()) continue;
        const int a2 = tgts[s2];
        for (int t = 0; t < static_cast<int>(f.size()); ++t) {
          if (f[t] == 0) continue;
          Orbit o = locate(n, a2, b, t, r);
          auto tp = where.at({i - 1, (int)s2, j, q, o.r});
          Map& m = out.d[deg][tp.second][src];
          if (m.empty()) m.assign(n / std::gcd(a2, b), 0);
          m[o.g] += f[t];
        }
      }
    }
    if (auto it = Q.d.find(j); it != Q.d.end()) {
      const long long sign = (i % 2 == 0) ? 1 : -1;
      const auto& tgts = Q.cells.at(j - 1);
      for (std::size_t q2 = 0; q2 < tgts.size(); ++q2) {
        const Map& h = it->second[q2][q];
        if (h.empty()) continue;
        const int b2 = tgts[q2];
        for (int t = 0; t < static_cast<int>(h.size()); ++t) {
          if (h[t] == 0) continue;
          Orbit o = locate(n, a, b2, 0, mod(r + t, n / b2));
          auto tp = where.at({i, s, j - 1, (int)q2, o.r});
          Map& m = out.d[deg][tp.second][src];
          if (m.empty()) m.assign(n / std::gcd(a, b2), 0);
          m[o.g] += sign * h[t];
        }
      }
    }
  }
  for (auto& [deg, blk] : out.d)
    for (auto& row : blk)
      for (auto& m : row) tidy(m);
  return out;
}

// Returns the position of the single +-1 entry, or -1.
int unit_position(const Map& f) {
  int pos = -1;
  for (int t = 0; t < static_cast<int>(f.size()); ++t) {
    if (f[t] == 0) continue;
    if (pos >= 0 || (f[t] != 1 && f[t] != -1)) return -1;
    pos = t;
  }
  return pos;
}

void eliminate(PermComplex& c, int deg, int t, int s) {
  Block& blk = c.d[deg];
  const Map& phi = blk[t][s];
  const int u = unit_position(phi);
  const int a = c.cells[deg][s];
  Map inv(c.n / a, 0);
  inv[mod(-u, c.n / a)] = phi[u];
  const auto& src = c.cells[deg];
  const auto& tgt = c.cells[deg - 1];
  for (std::size_t s2 = 0; s2 < src.size(); ++s2) {
    if ((int)s2 == s || blk[t][s2].empty()) continue;
    Map via = compose(blk[t][s2], inv);  // s2 -> t -> s
    if (via.empty()) continue;
    for (std::size_t t2 = 0; t2 < tgt.size(); ++t2) {
      if ((int)t2 == t || blk[t2][s].empty()) continue;
      Map corr = compose(via, blk[t2][s]);
      add_into(blk[t2][s2], corr, -1, c.n / tgt[t2]);
    }
  }
  for (auto& row : blk) row.erase(row.begin() + s);
  blk.erase(blk.begin() + t);
  c.cells[deg].erase(c.cells[deg].begin() + s);
  c.cells[deg - 1].erase(c.cells[deg - 1].begin() + t);
  if (auto it = c.d.find(deg + 1); it != c.d.end()) it->second.erase(it->second.begin() + s);
  if (auto it = c.d.find(deg - 1); it != c.d.end())
    for (auto& row : it->second) row.erase(row.begin() + t);
}

void reduce(PermComplex& c) {
  for (bool again = true; again;) {
    again = false;
    for (auto& [deg, blk] : c.d) {
      for (std::size_t t = 0; t < blk.size() && !again; ++t)
        for (std::size_t s = 0; s < blk[t].size() && !again; ++s) {
          if (c.cells[deg][s] != c.cells[deg - 1][t] || unit_position(blk[t][s]) < 0) continue;
          eliminate(c, deg, static_cast<int>(t), static_cast<int>(s));
          again = true;
        }
      if (again) break;
    }
  }
  for (auto it = c.cells.begin(); it != c.cells.end();) it = it->second.empty() ? c.cells.erase(it) : std::next(it);
  for (auto it = c.d.begin(); it != c.d.end();) {
    bool keep = c.cells.count(it->first) && c.cells.count(it->first - 1);
    it = keep ? std::next(it) : c.d.erase(it);
  }
}

PermComplex shift(PermComplex c, int by) {
  PermComplex out;
  out.n = c.n;
  for (auto& [deg, cs] : c.cells) out.cells[deg + by] = cs;
  for (auto& [deg, blk] : c.d) {
    // Shifting by an odd amount flips the sign of the differential; homology
    // does not care, so the plain relabel is enough.
    out.d[deg + by] = std::move(blk);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Linear algebra on the level-wise complexes.

using Mat = std::vector<std::vector<long long>>;  // [row][col]

Mat fixed_matrix(const PermComplex& c, int deg) {
  const auto srcs = c.cells.count(deg) ? c.cells.at(deg) : std::vector<int>{};
  const auto tgts = c.cells.count(deg - 1) ? c.cells.at(deg - 1) : std::vector<int>{};
  Mat m(tgts.size(), std::vector<long long>(srcs.size(), 0));
  auto it = c.d.find(deg);
  if (it == c.d.end()) return m;
  for (std::size_t t = 0; t < tgts.size(); ++t)
    for (std::size_t s = 0; s < srcs.size(); ++s) {
      const Map& f = it->second[t][s];
      if (f.empty()) continue;
      long long sum = std::accumulate(f.begin(), f.end(), 0LL) * tgts[t];
      if (sum % srcs[s] != 0) throw std::logic_error("non-integral fixed point map");
      m[t][s] = sum / srcs[s];
    }
  return m;
}

std::vector<int> offsets(int n, const std::vector<int>& cs) {
  std::vector<int> off{0};
  for (int a : cs) off.push_back(off.back() + n / a);
  return off;
}

Mat underlying_matrix(const PermComplex& c, int deg) {
  const auto srcs = c.cells.count(deg) ? c.cells.at(deg) : std::vector<int>{};
  const auto tgts = c.cells.count(deg - 1) ? c.cells.at(deg - 1) : std::vector<int>{};
  auto so = offsets(c.n, srcs), to = offsets(c.n, tgts);
  Mat m(to.back(), std::vector<long long>(so.back(), 0));
  auto it = c.d.find(deg);
  if (it == c.d.end()) return m;
  for (std::size_t t = 0; t < tgts.size(); ++t)
    for (std::size_t s = 0; s < srcs.size(); ++s) {
      const Map& f = it->second[t][s];
      if (f.empty()) continue;
      const int lb = c.n / tgts[t];
      for (int x = 0; x < c.n / srcs[s]; ++x)
        for (int y = 0; y < lb; ++y) m[to[t] + y][so[s] + x] = f[mod(y - x, lb)];
    }
  return m;
}

Mat transpose_mat(const Mat& m, std::size_t cols) {
  Mat t(cols, std::vector<long long>(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

int rank_z(const Mat& m, std::size_t cols) {
  if (m.empty() || cols == 0) return 0;
  SmithForm sf = smith_form(m, static_cast<int>(cols));
  return static_cast<int>(std::count_if(sf.invariants.begin(), sf.invariants.end(), [](long long v) { return v != 0; }));
}

// Row reduction mod p; returns the rank and leaves m in echelon form.
int rank_p(Mat m, int p) {
  int rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < (int)rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && mod(m[piv][c], p) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    long long inv = 1;
    for (long long v = mod(m[rank][c], p); mod(v * inv, p) != 1;) ++inv;
    for (auto& v : m[rank]) v = mod(v * inv, p);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != (std::size_t)rank && mod(m[r][c], p) != 0) {
        long long f = mod(m[r][c], p);
        for (std::size_t k = 0; k < cols; ++k) m[r][k] = mod(m[r][k] - f * m[rank][k], p);
      }
    ++rank;
  }
  return rank;
}

// Basis of the kernel of x -> m x over F_p.
std::vector<std::vector<long long>> kernel_p(Mat m, std::size_t cols, int p) {
  const std::size_t rows = m.size();
  std::vector<int> pivot_col;
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < (int)rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && mod(m[piv][c], p) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    long long inv = 1;
    for (long long v = mod(m[rank][c], p); mod(v * inv, p) != 1;) ++inv;
    for (auto& v : m[rank]) v = mod(v * inv, p);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != (std::size_t)rank && mod(m[r][c], p) != 0) {
        long long f = mod(m[r][c], p);
        for (std::size_t k = 0; k < cols; ++k) m[r][k] = mod(m[r][k] - f * m[rank][k], p);
      }
    pivot_col.push_back(static_cast<int>(c));
    ++rank;
  }
  std::vector<std::vector<long long>> basis;
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<long long> v(cols, 0);
    v[free] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = mod(-m[r][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Does appending `extra` columns to m raise its rank mod p?
bool raises_rank(const Mat& m, std::size_t rows, const std::vector<std::vector<long long>>& extra, int p) {
  Mat a(rows);
  for (std::size_t r = 0; r < rows; ++r) a[r] = r < m.size() ? m[r] : std::vector<long long>{};
  std::size_t base_cols = m.empty() ? 0 : m[0].size();
  for (auto& row : a) row.resize(base_cols, 0);
  int before = rank_p(a, p);
  for (const auto& col : extra)
    for (std::size_t r = 0; r < rows; ++r) a[r].push_back(col[r]);
  return rank_p(a, p) > before;
}

std::vector<std::pair<int, int>> irreducibles(const VirtualRep& beta, int& trivial) {
  // Real forms: lambda^i ~ lambda^{n-i} and lambda^{n/2} ~ 2 sigma.
  const int n = beta.order();
  trivial = beta.trivial_dim();
  std::map<int, int> lam;
  int sigma = beta.sigma();
  for (auto [e, m] : beta.lambdas()) {
    int r = std::min(e, n - e);
    if (2 * r == n)
      sigma += 2 * m;
    else
      lam[r] += m;
  }
  // (kernel order, exponent or -1 for sigma, multiplicity)
  std::vector<std::tuple<int, int, int>> items;
  if (sigma != 0) items.emplace_back(n / 2, -1, sigma);
  for (auto [e, m] : lam)
    if (m != 0) items.emplace_back(std::gcd(e, n), e, m);
  std::sort(items.begin(), items.end(), [](auto& x, auto& y) { return std::get<0>(x) > std::get<0>(y); });
  std::vector<std::pair<int, int>> out;  // (exponent or -1, +-1), repeated
  for (auto [k, e, m] : items)
    for (int i = 0; i < std::abs(m); ++i) out.emplace_back(e, m > 0 ? 1 : -1);
  return out;
}

}  // namespace

int PermComplex::size() const {
  int s = 0;
  for (auto& [deg, cs] : cells) s += static_cast<int>(cs.size());
  return s;
}

PermComplex sphere_chains(const VirtualRep& beta) {
  const int n = beta.order();
  int trivial;
  auto items = irreducibles(beta, trivial);
  PermComplex c = unit_complex(n, 0);
  for (auto [e, sign] : items) {
    PermComplex u = irreducible_sphere(n, e);
    c = tensor(c, sign > 0 ? u : dual(u));
    reduce(c);
  }
  return shift(std::move(c), trivial);
}

std::string AbelianGroup::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < free_rank; ++i, first = false) os << (first ? "" : " + ") << "Z";
  for (long long t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return os.str();
}

namespace {

AbelianGroup compute_pi(const VirtualRep& alpha) {
  PermComplex c = sphere_chains(-alpha);
  const std::size_t c0 = c.cells.count(0) ? c.cells.at(0).size() : 0;
  const std::size_t c1 = c.cells.count(1) ? c.cells.at(1).size() : 0;
  const std::size_t cm = c.cells.count(-1) ? c.cells.at(-1).size() : 0;
  AbelianGroup g;
  if (c0 == 0) return g;
  Mat d0 = fixed_matrix(c, 0), d1 = fixed_matrix(c, 1);
  int r0 = rank_z(transpose_mat(d0, c0), cm);
  int r1 = 0;
  if (c1 > 0) {
    SmithForm sf = smith_form(transpose_mat(d1, c1), static_cast<int>(c0));
    for (long long v : sf.invariants) {
      if (v == 0) continue;
      ++r1;
      if (v > 1) g.torsion.push_back(v);
    }
  }
  g.free_rank = static_cast<int>(c0) - r0 - r1;
  return g;
}

}  // namespace

// Memoized on the real form: the slice checks revisit the same degrees
// written with lambda^i and lambda^{n-i} mixed.
AbelianGroup cellular_pi(const VirtualRep& alpha) {
  using Key = std::tuple<int, int, std::vector<std::pair<int, int>>>;
  static std::map<Key, AbelianGroup> cache;
  static std::mutex mu;
  int trivial;
  auto items = irreducibles(-alpha, trivial);
  Key key{alpha.order(), trivial, std::move(items)};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  AbelianGroup g = compute_pi(alpha);
  std::lock_guard lock(mu);
  if (cache.size() > 100000) cache.clear();
  cache.emplace(std::move(key), g);
  return g;
}

CellularMackey cellular_mackey_modp(const VirtualRep& alpha) {
  const int p = alpha.order();
  if (!is_prime(p)) throw DomainError("mod p Mackey computation needs a group of prime order");
  PermComplex c = sphere_chains(-alpha);
  auto cells_at = [&](int d) { return c.cells.count(d) ? c.cells.at(d) : std::vector<int>{}; };
  const auto k0 = cells_at(0), k1 = cells_at(1), km = cells_at(-1);
  auto off0 = offsets(p, k0), off1 = offsets(p, k1), offm = offsets(p, km);

  Mat g0 = fixed_matrix(c, 0), g1 = fixed_matrix(c, 1);
  Mat e0 = underlying_matrix(c, 0), e1 = underlying_matrix(c, 1);
  // fixed_matrix / underlying_matrix return [target][source]; size them even when empty.
  if (g0.empty()) g0.assign(km.size(), std::vector<long long>(k0.size(), 0));
  if (e0.empty()) e0.assign(offm.back(), std::vector<long long>(off0.back(), 0));

  CellularMackey out;
  out.top = static_cast<int>(k0.size()) - rank_p(g0, p) - rank_p(g1, p);
  out.bottom = off0.back() - rank_p(e0, p) - rank_p(e1, p);

  if (out.top > 0 && out.bottom > 0) {
    // Restriction: orbit sum N_A -> sum of its basis vectors.
    std::vector<std::vector<long long>> res_images;
    for (const auto& z : kernel_p(g0, k0.size(), p)) {
      std::vector<long long> v(off0.back(), 0);
      for (std::size_t s = 0; s < k0.size(); ++s)
        for (int x = off0[s]; x < off0[s + 1]; ++x) v[x] = z[s];
      res_images.push_back(std::move(v));
    }
    out.res_nonzero = raises_rank(e1, off0.back(), res_images, p);
    // Transfer: basis vector of Z[G/A] -> |A| N_A.
    std::vector<std::vector<long long>> tr_images;
    for (const auto& w : kernel_p(e0, off0.back(), p)) {
      std::vector<long long> v(k0.size(), 0);
      for (std::size_t s = 0; s < k0.size(); ++s)
        for (int x = off0[s]; x < off0[s + 1]; ++x) v[s] = mod(v[s] + w[x] * k0[s], p);
      tr_images.push_back(std::move(v));
    }
    out.tr_nonzero = raises_rank(g1, k0.size(), tr_images, p);
  }

  if (out.top == 0 && out.bottom == 0)
    out.name = MackeyName::Zero;
  else if (out.top == 1 && out.bottom == 1 && out.res_nonzero && !out.tr_nonzero)
    out.name = MackeyName::Const;
  else if (out.top == 1 && out.bottom == 1 && !out.res_nonzero && out.tr_nonzero)
    out.name = MackeyName::Dual;
  else if (out.top == 1 && out.bottom == 0)
    out.name = MackeyName::Point;
  else if (out.top == 0 && out.bottom == 1 && p == 2)
    out.name = MackeyName::Lambda;
  return out;
}

}  // namespace eqcoh
