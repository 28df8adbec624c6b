#include "daha/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace daha {

WeylElem WeylElem::identity(int rank) {
  WeylElem w;
  for (int i = 0; i < rank; ++i) {
    w.mat[i * kMaxRank + i] = 1;
    w.inv[i * kMaxRank + i] = 1;
  }
  return w;
}

namespace {

Coweight mat_apply(const std::array<int32_t, kMaxRank * kMaxRank>& m, const Coweight& b) {
  Coweight r;
  for (int i = 0; i < kMaxRank; ++i) {
    int32_t s = 0;
    for (int j = 0; j < kMaxRank; ++j) s += m[i * kMaxRank + j] * b.c[j];
    r.c[i] = s;
  }
  return r;
}

// (w alpha)_j = sum_i inv[i][j] c_i, from (b_j, w alpha) = (w^{-1} b_j, alpha).
RootCoords mat_apply_transposed(const std::array<int32_t, kMaxRank * kMaxRank>& m, const RootCoords& c) {
  RootCoords r{};
  for (int j = 0; j < kMaxRank; ++j) {
    int32_t s = 0;
    for (int i = 0; i < kMaxRank; ++i) s += m[i * kMaxRank + j] * c[i];
    r[j] = s;
  }
  return r;
}

std::array<int32_t, kMaxRank * kMaxRank> mat_mul(const std::array<int32_t, kMaxRank * kMaxRank>& a,
                                                 const std::array<int32_t, kMaxRank * kMaxRank>& b) {
  std::array<int32_t, kMaxRank * kMaxRank> r{};
  for (int i = 0; i < kMaxRank; ++i)
    for (int k = 0; k < kMaxRank; ++k) {
      int32_t x = a[i * kMaxRank + k];
      if (x == 0) continue;
      for (int j = 0; j < kMaxRank; ++j) r[i * kMaxRank + j] += x * b[k * kMaxRank + j];
    }
  return r;
}

// Gauss-Jordan inverse of an n x n rational matrix stored with stride kMaxRank.
std::array<Rational, kMaxRank * kMaxRank> invert(const std::array<Rational, kMaxRank * kMaxRank>& a, int n) {
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a[i * kMaxRank + j];
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular matrix");
    std::swap(m[piv], m[col]);
    Rational p = m[col][col];
    for (auto& x : m[col]) x /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  std::array<Rational, kMaxRank * kMaxRank> out;
  for (auto& x : out) x = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i * kMaxRank + j] = m[i][n + j];
  return out;
}

}  // namespace

Coweight WeylElem::apply(const Coweight& b) const { return mat_apply(mat, b); }
Coweight WeylElem::apply_inverse(const Coweight& b) const { return mat_apply(inv, b); }
RootCoords WeylElem::apply_root(const RootCoords& r) const { return mat_apply_transposed(inv, r); }
RootCoords WeylElem::apply_inverse_root(const RootCoords& r) const { return mat_apply_transposed(mat, r); }

WeylElem operator*(const WeylElem& a, const WeylElem& b) {
  WeylElem r;
  r.mat = mat_mul(a.mat, b.mat);
  r.inv = mat_mul(b.inv, a.inv);
  return r;
}

bool WeylElem::is_identity(int rank) const { return mat == identity(rank).mat; }

RootDatum RootDatum::build(char family, int rank) {
  auto bad = [&](const std::string& why) {
    return std::invalid_argument("invalid root system " + std::string(1, family) + std::to_string(rank) + ": " + why);
  };
  if (rank < 1 || rank > kMaxRank) throw bad("rank must be in 1..8");
  switch (family) {
    case 'A': break;
    case 'B':
    case 'C':
      if (rank < 2) throw bad("rank must be >= 2");
      break;
    case 'D':
      if (rank < 4) throw bad("rank must be >= 4");
      break;
    case 'E':
      if (rank < 6) throw bad("rank must be 6, 7 or 8");
      break;
    case 'F':
      if (rank != 4) throw bad("rank must be 4");
      break;
    case 'G':
      if (rank != 2) throw bad("rank must be 2");
      break;
    default: throw bad("unknown family");
  }
  RootDatum d;
  d.family_ = family;
  d.rank_ = rank;
  const int n = rank;
  for (auto& x : d.root_gram_) x = 0;
  std::vector<Rational> len(n, Rational(2));
  std::vector<std::pair<int, int>> edges;  // 0-based bonds
  switch (family) {
    case 'A':
    case 'B':
    case 'C':
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      if (family == 'B') len[n - 1] = 1;
      if (family == 'C')
        for (int i = 0; i + 1 < n; ++i) len[i] = 1;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) edges.push_back({i, i + 1});
      edges.push_back({n - 3, n - 1});
      break;
    case 'E':
      edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (int i = 4; i + 1 < n; ++i) edges.push_back({i, i + 1});
      break;
    case 'F':
      edges = {{0, 1}, {1, 2}, {2, 3}};
      len[2] = len[3] = 1;
      break;
    case 'G':
      edges = {{0, 1}};
      len[0] = make_rational(2, 3);
      break;
  }
  for (int i = 0; i < n; ++i) d.root_gram_[i * kMaxRank + i] = len[i];
  for (auto [i, j] : edges) {
    // Adjacent simple roots: (a_i, a_j) = -min(|a_i|^2, |a_j|^2)/2 for simple
    // and double bonds; G2 gives -1 with lengths 2 and 2/3.
    Rational v = family == 'G' ? Rational(-1) : Rational(-std::min(len[i], len[j]) / 2);
    if (len[i] != len[j] && family != 'G') v = -1;
    d.root_gram_[i * kMaxRank + j] = v;
    d.root_gram_[j * kMaxRank + i] = v;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational c = 2 * d.root_gram_[i * kMaxRank + j] / d.root_gram_[i * kMaxRank + i];
      if (c.get_den() != 1) throw std::logic_error("non-integral Cartan entry");
      d.cartan_[i * kMaxRank + j] = static_cast<int>(c.get_num().get_si());
    }
  for (auto& x : d.coweight_gram_) x = 0;
  d.coweight_gram_ = invert(d.root_gram_, n);
  std::array<Rational, kMaxRank * kMaxRank> ct;
  for (auto& x : ct) x = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ct[i * kMaxRank + j] = d.cartan_[j * kMaxRank + i];
  d.cartan_t_inv_ = invert(ct, n);

  // m table: 2 for D_{2k}, C_{2k+1}; 1 for C_{2k}, B_k; otherwise |Pi|.
  if (family == 'D' && n % 2 == 0)
    d.m_ = 2;
  else if (family == 'C' && n % 2 == 1)
    d.m_ = 2;
  else if (family == 'C' || family == 'B')
    d.m_ = 1;
  else if (family == 'A')
    d.m_ = n + 1;
  else if (family == 'D')
    d.m_ = 4;
  else if (family == 'E')
    d.m_ = n == 6 ? 3 : (n == 7 ? 2 : 1);
  else
    d.m_ = 1;

  d.generate_roots();
  d.compute_rho();
  d.w0_ = WeylElem::identity(n);
  {
    Coweight rho_check;
    for (int i = 0; i < n; ++i) rho_check[i] = 1;
    std::vector<int> word;
    d.antidominant(rho_check, &word);
    for (int i : word) d.w0_ = d.simple_reflection(i) * d.w0_;
  }
  d.compute_minuscule();
  return d;
}

void RootDatum::generate_roots() {
  const int n = rank_;
  std::vector<RootCoords> pos;
  std::map<RootCoords, int> seen;
  std::deque<RootCoords> queue;
  for (int i = 0; i < n; ++i) {
    RootCoords c{};
    c[i] = 1;
    pos.push_back(c);
    seen[c] = static_cast<int>(pos.size()) - 1;
    queue.push_back(c);
  }
  while (!queue.empty()) {
    RootCoords beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      // <beta, alpha_i^vee> = sum_j c_j C_ij
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += beta[j] * cartan_[i * kMaxRank + j];
      int p = 0;
      RootCoords down = beta;
      for (;;) {
        down[i] -= 1;
        if (down[i] < 0 || !seen.count(down)) break;
        ++p;
      }
      if (p - pairing > 0) {
        RootCoords up = beta;
        up[i] += 1;
        if (!seen.count(up)) {
          pos.push_back(up);
          seen[up] = static_cast<int>(pos.size()) - 1;
          queue.push_back(up);
        }
      }
    }
  }
  // Deterministic order: by height, then lexicographic coordinates.
  std::sort(pos.begin(), pos.end(), [](const RootCoords& a, const RootCoords& b) {
    int ha = 0, hb = 0;
    for (int k = 0; k < kMaxRank; ++k) {
      ha += a[k];
      hb += b[k];
    }
    if (ha != hb) return ha < hb;
    return a > b;
  });
  num_pos_ = static_cast<int>(pos.size());
  roots_.assign(2 * num_pos_, RootInfo{});
  Rational longest = 0;
  for (int k = 0; k < num_pos_; ++k) {
    for (int s = 0; s < 2; ++s) {
      RootInfo& ri = roots_[k + s * num_pos_];
      for (int j = 0; j < kMaxRank; ++j) ri.coords[j] = s == 0 ? pos[k][j] : -pos[k][j];
      ri.positive = s == 0;
      ri.nu = pair_roots(ri.coords, ri.coords);
      int h = 0;
      for (int j = 0; j < n; ++j) h += ri.coords[j];
      ri.height = h;
      // coroot: (alpha^vee, alpha_j) = 2 (alpha, alpha_j) / nu
      for (int j = 0; j < n; ++j) {
        Rational x = 0;
        for (int i = 0; i < n; ++i) x += ri.coords[i] * root_gram_[i * kMaxRank + j];
        x = 2 * x / ri.nu;
        if (x.get_den() != 1) throw std::logic_error("non-integral coroot");
        ri.coroot[j] = static_cast<int32_t>(x.get_num().get_si());
      }
    }
    if (roots_[k].nu > longest) longest = roots_[k].nu;
  }
  if (longest != 2) throw std::logic_error("long roots not normalized to length 2");
  has_short_ = false;
  short_nu_ = 2;
  for (auto& r : roots_) {
    r.is_long = (r.nu == 2);
    if (!r.is_long) {
      has_short_ = true;
      short_nu_ = r.nu;
    }
  }
  simple_idx_.assign(n, -1);
  theta_idx_ = num_pos_ - 1;  // unique root of maximal height
  std::vector<std::pair<RootCoords, int>> keys;
  for (int k = 0; k < 2 * num_pos_; ++k) keys.push_back({roots_[k].coords, k});
  std::sort(keys.begin(), keys.end());
  root_keys_.clear();
  root_key_idx_.clear();
  for (auto& [c, k] : keys) {
    root_keys_.push_back(c);
    root_key_idx_.push_back(k);
  }
  for (int i = 0; i < n; ++i) {
    RootCoords c{};
    c[i] = 1;
    simple_idx_[i] = root_index(c);
  }
}

int RootDatum::root_index(const RootCoords& c) const {
  auto it = std::lower_bound(root_keys_.begin(), root_keys_.end(), c);
  if (it == root_keys_.end() || *it != c) return -1;
  return root_key_idx_[it - root_keys_.begin()];
}

int RootDatum::pair(const Coweight& b, int root_idx) const { return pair(b, roots_[root_idx].coords); }

int RootDatum::pair(const Coweight& b, const RootCoords& c) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) s += b.c[i] * c[i];
  return s;
}

Rational RootDatum::pair(const Coweight& a, const Coweight& b) const {
  Rational s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (b.c[j] != 0) s += coweight_gram_[i * kMaxRank + j] * (a.c[i] * b.c[j]);
  }
  return s;
}

Rational RootDatum::pair_roots(const RootCoords& a, const RootCoords& b) const {
  Rational s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (b[j] != 0) s += root_gram_[i * kMaxRank + j] * (a[i] * b[j]);
  }
  return s;
}

std::vector<Rational> RootDatum::root_vector(const RootCoords& c) const {
  std::vector<Rational> v(rank_, Rational(0));
  for (int j = 0; j < rank_; ++j)
    for (int i = 0; i < rank_; ++i) v[j] += c[i] * root_gram_[i * kMaxRank + j];
  return v;
}

void RootDatum::compute_rho() {
  rho_long_.assign(rank_, Rational(0));
  rho_short_.assign(rank_, Rational(0));
  for (int k = 0; k < num_pos_; ++k) {
    auto v = root_vector(roots_[k].coords);
    auto& target = roots_[k].is_long ? rho_long_ : rho_short_;
    for (int j = 0; j < rank_; ++j) target[j] += v[j] / 2;
  }
}

Rational RootDatum::pair_rho(const Coweight& b, bool is_long) const {
  const auto& r = rho(is_long);
  Rational s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (b.c[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += b.c[i] * coweight_gram(i, j) * r[j];
  }
  return s;
}

WeylElem RootDatum::simple_reflection(int i) const {
  // s_i(b)_j = k_j - k_i C_{ij}
  const int ii = i - 1;
  WeylElem w = WeylElem::identity(rank_);
  for (int j = 0; j < rank_; ++j) w.mat[j * kMaxRank + ii] -= cartan_[ii * kMaxRank + j];
  w.inv = w.mat;
  return w;
}

Coweight RootDatum::antidominant(const Coweight& b, std::vector<int>* word) const {
  Coweight x = b;
  for (;;) {
    int i = 0;
    while (i < rank_ && x.c[i] <= 0) ++i;
    if (i == rank_) return x;
    const int k = x.c[i];
    for (int j = 0; j < rank_; ++j) x.c[j] -= k * cartan_[i * kMaxRank + j];
    if (word) word->push_back(i + 1);
  }
}

Coweight RootDatum::dominant(const Coweight& b) const { return w0_.apply(antidominant(b)); }

void RootDatum::compute_minuscule() {
  minuscule_.clear();
  const RootCoords& th = roots_[theta_idx_].coords;
  for (int r = 1; r <= rank_; ++r) {
    if (th[r - 1] != 1) continue;
    MinusculeEntry e;
    e.r = r;
    e.b_r = fundamental(r);
    std::vector<int> word;
    antidominant(e.b_r, &word);
    e.omega = WeylElem::identity(rank_);
    for (int i : word) e.omega = simple_reflection(i) * e.omega;
    e.omega_word.assign(word.rbegin(), word.rend());
    minuscule_.push_back(e);
  }
  for (auto& e : minuscule_) {
    Coweight target = -w0_.apply(e.b_r);
    for (const auto& f : minuscule_)
      if (f.b_r == target) e.star = f.r;
  }
}

const MinusculeEntry* RootDatum::minuscule_entry(int r) const {
  for (const auto& e : minuscule_)
    if (e.r == r) return &e;
  return nullptr;
}

int RootDatum::star(int r) const {
  if (r == 0) return 0;
  const MinusculeEntry* e = minuscule_entry(r);
  if (!e) throw std::invalid_argument("node is not minuscule");
  return e->star;
}

std::vector<Rational> RootDatum::to_coroot_basis(const Coweight& b) const {
  std::vector<Rational> p(rank_, Rational(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) p[i] += cartan_t_inv_[i * kMaxRank + j] * b.c[j];
  return p;
}

bool RootDatum::in_coroot_lattice(const Coweight& b) const {
  for (const auto& x : to_coroot_basis(b))
    if (x.get_den() != 1) return false;
  return true;
}

bool RootDatum::coroot_leq(const Coweight& b, const Coweight& c) const {
  for (const auto& x : to_coroot_basis(c - b))
    if (x.get_den() != 1 || x < 0) return false;
  return true;
}

std::vector<std::vector<Rational>> RootDatum::root_gram_matrix() const {
  std::vector<std::vector<Rational>> m(rank_, std::vector<Rational>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) m[i][j] = root_gram_[i * kMaxRank + j];
  return m;
}

std::vector<std::vector<Rational>> RootDatum::coweight_gram_matrix() const {
  std::vector<std::vector<Rational>> m(rank_, std::vector<Rational>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) m[i][j] = coweight_gram_[i * kMaxRank + j];
  return m;
}

std::vector<std::vector<int>> RootDatum::cartan_matrix() const {
  std::vector<std::vector<int>> m(rank_, std::vector<int>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) m[i][j] = cartan_[i * kMaxRank + j];
  return m;
}

}  // namespace daha
