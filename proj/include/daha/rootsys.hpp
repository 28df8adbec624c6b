// Reduced irreducible root systems of types A-G, normalized so that long
// roots have (a,a) = 2. Vectors of the ambient space are stored in the basis
// of fundamental coweights b_1..b_n; roots are stored in the simple-root
// basis. Pairings go through the exact Gram matrices.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "daha/poly.hpp"

namespace daha {

inline constexpr int kMaxRank = 8;

// Integer point of the coweight lattice B, coordinates in the b_i basis.
// Unused trailing coordinates are zero.
struct Coweight {
  std::array<int32_t, kMaxRank> c{};

  int32_t& operator[](int i) { return c[i]; }
  int32_t operator[](int i) const { return c[i]; }
  Coweight operator-() const {
    Coweight r;
    for (int i = 0; i < kMaxRank; ++i) r.c[i] = -c[i];
    return r;
  }
  Coweight& operator+=(const Coweight& o) {
    for (int i = 0; i < kMaxRank; ++i) c[i] += o.c[i];
    return *this;
  }
  Coweight& operator-=(const Coweight& o) {
    for (int i = 0; i < kMaxRank; ++i) c[i] -= o.c[i];
    return *this;
  }
  friend Coweight operator+(Coweight a, const Coweight& b) { return a += b; }
  friend Coweight operator-(Coweight a, const Coweight& b) { return a -= b; }
  friend Coweight operator*(int k, Coweight a) {
    for (auto& x : a.c) x *= k;
    return a;
  }
  bool is_zero() const { return *this == Coweight{}; }
  friend auto operator<=>(const Coweight&, const Coweight&) = default;
  friend bool operator==(const Coweight&, const Coweight&) = default;
};

struct CoweightHash {
  std::size_t operator()(const Coweight& b) const {
    std::size_t h = 0;
    for (int x : b.c) h = h * 1000003u + static_cast<std::size_t>(x + 4096);
    return h;
  }
};

// Root coordinates in the simple-root basis.
using RootCoords = std::array<int32_t, kMaxRank>;

// Finite Weyl group element as a pair of integer matrices acting on B:
// `mat` is the action of w, `inv` that of w^{-1}. Row-major kMaxRank x kMaxRank.
struct WeylElem {
  std::array<int32_t, kMaxRank * kMaxRank> mat{};
  std::array<int32_t, kMaxRank * kMaxRank> inv{};

  static WeylElem identity(int rank);
  Coweight apply(const Coweight& b) const;
  Coweight apply_inverse(const Coweight& b) const;
  RootCoords apply_root(const RootCoords& r) const;  // w(alpha)
  RootCoords apply_inverse_root(const RootCoords& r) const;
  WeylElem inverse() const {
    WeylElem r;
    r.mat = inv;
    r.inv = mat;
    return r;
  }
  friend WeylElem operator*(const WeylElem& a, const WeylElem& b);
  bool is_identity(int rank) const;
  friend auto operator<=>(const WeylElem& a, const WeylElem& b) { return a.mat <=> b.mat; }
  friend bool operator==(const WeylElem& a, const WeylElem& b) { return a.mat == b.mat; }
};

struct RootInfo {
  RootCoords coords{};  // simple-root basis
  Coweight coroot;      // alpha^vee in the b_i basis
  Rational nu;          // (alpha, alpha)
  bool is_long = true;
  bool positive = true;
  int height = 0;
};

struct MinusculeEntry {
  int r = 0;        // node index 1..n
  Coweight b_r;     // fundamental coweight b_r
  WeylElem omega;   // omega_r = w0 w0^+, minimal with omega_r(b_r) = (b_r)_-
  std::vector<int> omega_word;  // reduced word of omega_r (node indices 1..n, leftmost first)
  int star = 0;     // r*
};

class RootDatum {
 public:
  // family in {A,B,C,D,E,F,G}; throws std::invalid_argument on invalid input.
  static RootDatum build(char family, int rank);

  char family() const { return family_; }
  int rank() const { return rank_; }
  std::string label() const { return std::string(1, family_) + std::to_string(rank_); }
  // m with (B, B) = Z/m, tabulated by type; v = q^{1/2m}.
  int m() const { return m_; }
  int two_m() const { return 2 * m_; }
  bool has_short() const { return has_short_; }
  Rational short_nu() const { return short_nu_; }

  const Rational& root_gram(int i, int j) const { return root_gram_[i * kMaxRank + j]; }      // (alpha_i, alpha_j)
  const Rational& coweight_gram(int i, int j) const { return coweight_gram_[i * kMaxRank + j]; }  // (b_i, b_j)
  int cartan(int i, int j) const { return cartan_[i * kMaxRank + j]; }  // (alpha_i^vee, alpha_j), 0-based

  // Roots: indices [0, N) positive, [N, 2N) their negatives (index + N).
  int num_positive() const { return num_pos_; }
  int num_roots() const { return 2 * num_pos_; }
  const RootInfo& root(int idx) const { return roots_[idx]; }
  int negate(int idx) const { return idx < num_pos_ ? idx + num_pos_ : idx - num_pos_; }
  int root_index(const RootCoords& c) const;  // -1 when not a root
  int simple_root(int i) const { return simple_idx_[i - 1]; }  // i in 1..n
  int theta() const { return theta_idx_; }

  // (b, alpha) for a coweight and a root (an integer).
  int pair(const Coweight& b, int root_idx) const;
  int pair(const Coweight& b, const RootCoords& c) const;
  Rational pair(const Coweight& a, const Coweight& b) const;
  Rational pair_roots(const RootCoords& a, const RootCoords& b) const;
  // A root as a vector in the b_i basis (rational coordinates).
  std::vector<Rational> root_vector(const RootCoords& c) const;

  // rho_nu in the b_i basis; long index 0, short index 1.
  const std::vector<Rational>& rho(bool is_long) const { return is_long ? rho_long_ : rho_short_; }
  // (b, rho_nu).
  Rational pair_rho(const Coweight& b, bool is_long) const;
  Coweight theta_coroot() const { return roots_[theta_idx_].coroot; }
  // Coroot a_i = alpha_i^vee in the b basis (i in 1..n).
  Coweight simple_coroot(int i) const { return roots_[simple_idx_[i - 1]].coroot; }
  Coweight fundamental(int i) const {
    Coweight b;
    b[i - 1] = 1;
    return b;
  }
  // Whether the simple root alpha_i (i in 1..n) is long; i = 0 refers to alpha_0 (long).
  bool simple_is_long(int i) const { return i == 0 ? true : roots_[simple_idx_[i - 1]].is_long; }

  WeylElem simple_reflection(int i) const;  // i in 1..n
  const WeylElem& longest() const { return w0_; }
  int longest_length() const { return num_pos_; }

  const std::vector<MinusculeEntry>& minuscule() const { return minuscule_; }
  const MinusculeEntry* minuscule_entry(int r) const;
  int star(int r) const;  // r* (0* = 0)

  // Converts a coweight to coordinates in the coroot basis a_i (rational).
  std::vector<Rational> to_coroot_basis(const Coweight& b) const;
  bool in_coroot_lattice(const Coweight& b) const;
  // c - b in A_+ (nonnegative integer combination of a_i).
  bool coroot_leq(const Coweight& b, const Coweight& c) const;

  // Sorting to the antidominant chamber: returns b_- and fills the reduced
  // word (node indices, applied first-to-last) of the minimal w with w(b) = b_-.
  Coweight antidominant(const Coweight& b, std::vector<int>* word = nullptr) const;
  Coweight dominant(const Coweight& b) const;

  // Matrix views for serialization.
  std::vector<std::vector<Rational>> root_gram_matrix() const;
  std::vector<std::vector<Rational>> coweight_gram_matrix() const;
  std::vector<std::vector<int>> cartan_matrix() const;

 private:
  void generate_roots();
  void compute_rho();
  void compute_minuscule();

  char family_ = 'A';
  int rank_ = 1;
  int m_ = 1;
  bool has_short_ = false;
  Rational short_nu_ = 2;
  std::array<Rational, kMaxRank * kMaxRank> root_gram_;
  std::array<Rational, kMaxRank * kMaxRank> coweight_gram_;
  std::array<int, kMaxRank * kMaxRank> cartan_{};
  std::array<Rational, kMaxRank * kMaxRank> cartan_t_inv_;  // (C^T)^{-1}
  std::vector<RootInfo> roots_;
  std::vector<RootCoords> root_keys_;  // sorted coords for lookup
  std::vector<int> root_key_idx_;
  std::vector<int> simple_idx_;
  int num_pos_ = 0;
  int theta_idx_ = 0;
  std::vector<Rational> rho_long_, rho_short_;
  WeylElem w0_;
  std::vector<MinusculeEntry> minuscule_;
};

}  // namespace daha
