#include "k3lat/exact.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace k3lat {

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

RatVector to_rat(const IntVector& v) { return RatVector(v.begin(), v.end()); }

IntMatrix to_int(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rat x = m(i, j);
      x.canonicalize();
      if (x.get_den() != 1) throw Error("non-integral entry " + to_string(x));
      r(i, j) = x.get_num();
    }
  return r;
}

IntVector to_int(const RatVector& v) {
  IntVector r;
  r.reserve(v.size());
  for (Rat x : v) {
    x.canonicalize();
    if (x.get_den() != 1) throw Error("non-integral entry " + to_string(x));
    r.push_back(x.get_num());
  }
  return r;
}

IntMatrix block_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw Error("hstack row mismatch");
  IntMatrix r(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error("dot length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw Error("dot length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat bilinear(const IntMatrix& g, const RatVector& x, const RatVector& y) {
  if (g.rows() != x.size() || g.cols() != y.size()) throw Error("bilinear shape mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Rat row = 0;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) row += g(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

Int bilinear(const IntMatrix& g, const IntVector& x, const IntVector& y) {
  if (g.rows() != x.size() || g.cols() != y.size()) throw Error("bilinear shape mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Int row = 0;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) row += g(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

// Bareiss fraction-free elimination.
Int det(const IntMatrix& m) {
  if (!m.square()) throw Error("det of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rat det(const RatMatrix& m) {
  if (!m.square()) throw Error("det of non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rat d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      d = -d;
    }
    d *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return d;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
    Rat inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  return rref(a).size();
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.square()) throw Error("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = 1;
  }
  auto piv = rref(a);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  RatMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = a(i, n + j);
  return r;
}

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t k) {
  if (i == k) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(i, j), a(k, j));
}
void swap_cols(IntMatrix& a, std::size_t i, std::size_t k) {
  if (i == k) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, k));
}
// row i -= q * row k
void sub_row(IntMatrix& a, std::size_t i, std::size_t k, const Int& q) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (a(k, j) != 0) a(i, j) -= q * a(k, j);
}
void sub_col(IntMatrix& a, std::size_t i, std::size_t k, const Int& q) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (a(r, k) != 0) a(r, i) -= q * a(r, k);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& d = s.d;
  const std::size_t r = d.rows(), c = d.cols();
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    // smallest nonzero entry of the trailing block
    std::size_t pi = r, pj = c;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (d(i, j) != 0 && (pi == r || abs(d(i, j)) < abs(d(pi, pj)))) pi = i, pj = j;
    if (pi == r) break;
    swap_rows(d, t, pi), swap_rows(s.u, t, pi);
    swap_cols(d, t, pj), swap_cols(s.v, t, pj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);
        sub_row(d, i, t, q), sub_row(s.u, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        sub_col(d, j, t, q), sub_col(s.v, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < r; ++i)
          if (d(i, t) != 0 && abs(d(i, t)) < abs(d(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < c; ++j)
          if (d(t, j) != 0 && abs(d(t, j)) < abs(d(bi, bj))) bi = t, bj = j;
        swap_rows(d, t, bi), swap_rows(s.u, t, bi);
        swap_cols(d, t, bj), swap_cols(s.v, t, bj);
        continue;
      }
      // divisibility of the rest
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == r) break;
      sub_row(d, t, bad, Int(-1)), sub_row(s.u, t, bad, Int(-1));
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < c; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < r; ++j) s.u(t, j) = -s.u(t, j);
    }
  }
  return s;
}

std::vector<Int> invariant_factors(const IntMatrix& m) {
  auto s = smith_normal_form(m);
  std::vector<Int> f;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    if (s.d(i, i) != 0) f.push_back(s.d(i, i));
  return f;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  auto s = smith_normal_form(m);
  std::size_t rk = 0;
  while (rk < std::min(m.rows(), m.cols()) && s.d(rk, rk) != 0) ++rk;
  IntMatrix k(m.cols(), m.cols() - rk);
  for (std::size_t j = rk; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) k(i, j - rk) = s.v(i, j);
  return k;
}

IntMatrix row_span_basis(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    for (std::size_t i = row + 1; i < a.rows(); ++i) {
      if (a(i, col) == 0) continue;
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a(row, col).get_mpz_t(),
                 a(i, col).get_mpz_t());
      Int x = a(row, col) / g, y = a(i, col) / g;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        Int p = a(row, j), q = a(i, j);
        a(row, j) = s * p + t * q;
        a(i, j) = -y * p + x * q;
      }
    }
    if (a(row, col) == 0) continue;
    if (a(row, col) < 0)
      for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) = -a(row, j);
    for (std::size_t i = 0; i < row; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, col).get_mpz_t(), a(row, col).get_mpz_t());
      if (q != 0) sub_row(a, i, row, q);
    }
    ++row;
  }
  IntMatrix r(row, a.cols());
  for (std::size_t i = 0; i < row; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  return r;
}

std::string to_string(const Signature& s) {
  return "(" + std::to_string(s.pos) + "," + std::to_string(s.zero) + "," +
         std::to_string(s.neg) + ")";
}

CongruenceDiagonal congruence_diagonal(const RatMatrix& g) {
  if (!g.is_symmetric()) throw Error("congruence_diagonal needs a symmetric matrix");
  RatMatrix a = g;
  std::size_t n = a.rows();
  std::vector<bool> done(n, false);
  CongruenceDiagonal out;
  std::size_t left = n;
  while (left > 0) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && a(i, i) != 0) {
        p = i;
        break;
      }
    if (p != n) {
      Rat piv = a(p, p);
      out.entries.push_back(piv);
      for (std::size_t i = 0; i < n; ++i) {
        if (done[i] || i == p || a(i, p) == 0) continue;
        Rat f = a(i, p) / piv;
        for (std::size_t j = 0; j < n; ++j)
          if (!done[j] && j != p) a(i, j) -= f * a(p, j);
      }
      done[p] = true;
      --left;
      continue;
    }
    std::size_t pi = n, pj = n;
    for (std::size_t i = 0; i < n && pi == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!done[i] && !done[j] && a(i, j) != 0) {
          pi = i, pj = j;
          break;
        }
    if (pi == n) {
      out.nullity = left;
      break;
    }
    // hyperbolic pivot [[0,b],[b,0]]
    Rat b = a(pi, pj);
    out.entries.push_back(2 * b);
    out.entries.push_back(-2 * b);
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < n; ++k)
      if (!done[k] && k != pi && k != pj) rest.push_back(k);
    // Schur complement: a_kl -= (a_k,pi a_pj,l + a_k,pj a_pi,l) / b
    std::vector<Rat> ci, cj;
    for (auto k : rest) ci.push_back(a(k, pi)), cj.push_back(a(k, pj));
    for (std::size_t x = 0; x < rest.size(); ++x)
      for (std::size_t y = 0; y < rest.size(); ++y)
        a(rest[x], rest[y]) -= (ci[x] * cj[y] + cj[x] * ci[y]) / b;
    done[pi] = done[pj] = true;
    left -= 2;
  }
  return out;
}

Signature signature(const RatMatrix& g) {
  auto cd = congruence_diagonal(g);
  Signature s;
  s.zero = cd.nullity;
  for (const auto& e : cd.entries) (e > 0 ? s.pos : s.neg)++;
  return s;
}

Signature signature(const IntMatrix& g) { return signature(to_rat(g)); }

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != b.size()) throw Error("solve shape mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  RatVector x(a.cols());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, a.cols());
  return x;
}

Int gcd_of(const IntVector& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

Int lcm_denominators(const RatVector& v) {
  Int l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  return l;
}

Rat mod_rat(const Rat& x, const Rat& m) {
  Rat q = x / m;
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rat r = x - m * Rat(f);
  r.canonicalize();
  return r;
}

std::string to_string(const Int& x) { return x.get_str(); }
std::string to_string(const Rat& x) {
  Rat y = x;
  y.canonicalize();
  return y.get_str();
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace k3lat
