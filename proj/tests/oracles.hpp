#pragma once
// Brute-force reference implementations.  Apart from the matrix container,
// det and inverse, nothing here calls into the library.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "k3lat/glue.hpp"
#include "k3lat/k3embed.hpp"
#include "k3lat/quadform.hpp"

namespace oracle {

using k3lat::Int;
using k3lat::IntMatrix;
using k3lat::IntVector;

// Leibniz expansion, n <= 7.
inline Int leibniz_det(const IntMatrix& m) {
  std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Int total = 0;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inv += p[i] > p[j];
    Int t = inv % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && t != 0; ++i) t *= m(i, p[i]);
    total += t;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// (a,b)_p from the solvability of a x^2 + b y^2 = z^2 in Z_p.  After removing
// p^2 factors, a primitive solution mod p^k with k = 3 (odd p) or 5 (p = 2)
// lifts by Hensel, since the gradient of a primitive solution has valuation
// at most v_p(2) + 1.  A primitive solution may be scaled so that one of its
// unit coordinates is 1.
inline int hilbert_by_search(long a, long b, long p) {
  while (a % (p * p) == 0) a /= p * p;
  while (b % (p * p) == 0) b /= p * p;
  const int k = p == 2 ? 5 : 3;
  const long m = ipow(p, k);
  auto md = [m](long x) { return ((x % m) + m) % m; };
  std::vector<char> square(m, 0);
  for (long z = 0; z < m; ++z) square[z * z % m] = 1;
  // x = 1
  for (long y = 0; y < m; ++y)
    if (square[md(a + b * (y * y % m))]) return 1;
  // p | x, y = 1
  for (long x = 0; x < m; x += p)
    if (square[md(a * (x * x % m) + b)]) return 1;
  // p | x, p | y, z = 1
  for (long x = 0; x < m; x += p)
    for (long y = 0; y < m; y += p)
      if (md(a * (x * x % m) + b * (y * y % m)) == 1) return 1;
  return -1;
}

// Does the form have a nonzero integer isotropic vector with entries in [-box, box]?
inline bool isotropic_in_box(const IntMatrix& g, long box) {
  std::size_t n = g.rows();
  IntVector x(n, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == n) {
      bool nz = std::any_of(x.begin(), x.end(), [](const Int& v) { return v != 0; });
      return nz && k3lat::bilinear(g, x, x) == 0;
    }
    for (long v = -box; v <= box; ++v) {
      x[i] = v;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

// All x with x^T g x == target for positive definite g, using
// x_i^2 <= target * (g^{-1})_{ii}.
inline std::vector<IntVector> vectors_of_norm(const IntMatrix& g, const Int& target) {
  std::size_t n = g.rows();
  auto inv = *k3lat::inverse(k3lat::to_rat(g));
  std::vector<long> bound(n);
  for (std::size_t i = 0; i < n; ++i) {
    k3lat::Rat lim = inv(i, i) * target;
    long b = 0;
    while (k3lat::Rat((b + 1) * (b + 1)) <= lim) ++b;
    bound[i] = b;
  }
  std::vector<IntVector> out;
  IntVector x(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      if (k3lat::bilinear(g, x, x) == target) out.push_back(x);
      return;
    }
    for (long v = -bound[i]; v <= bound[i]; ++v) {
      x[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

// Integral isometry a -> b by trying every assignment of basis images.
// Both positive definite of the same rank.
inline bool isometric_by_search(const IntMatrix& a, const IntMatrix& b) {
  std::size_t n = a.rows();
  if (b.rows() != n || k3lat::det(a) != k3lat::det(b)) return false;
  std::vector<std::vector<IntVector>> cand(n);
  for (std::size_t i = 0; i < n; ++i) cand[i] = vectors_of_norm(b, a(i, i));
  std::vector<const IntVector*> pick(n);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (const auto& v : cand[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = k3lat::bilinear(b, *pick[j], v) == a(j, i);
      if (!ok) continue;
      pick[i] = &v;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  // equal determinants make any Gram-preserving map unimodular
  return rec(0);
}

inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    int c = coef(rng);
    for (std::size_t r = 0; r < n; ++r) u(r, i) += c * u(r, j);
  }
  return u;
}

inline IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = d(rng);
  return g;
}

// Positive definite by Sylvester's criterion.
inline bool positive_definite(const IntMatrix& g) {
  for (std::size_t k = 1; k <= g.rows(); ++k) {
    IntMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = g(i, j);
    if (leibniz_det(m) <= 0) return false;
  }
  return true;
}

inline IntMatrix congruent(const IntMatrix& g, const IntMatrix& u) { return u.transpose() * g * u; }

}  // namespace oracle
