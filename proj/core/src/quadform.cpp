#include "k3lat/quadform.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace k3lat {

bool is_prime(const Int& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

namespace {

// Brent's variant of Pollard rho; n odd composite.
Int rho(const Int& n) {
  for (unsigned long c = 1;; ++c) {
    Int y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1, m = 64;
    auto f = [&](const Int& v) {
      Int t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(Int n, std::vector<Int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Int d = rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<Int> factor(const Int& n0) {
  if (n0 == 0) throw Error("factor(0)");
  Int n = abs(n0);
  std::vector<Int> out;
  for (unsigned long p = 2; p < 10000 && Int(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      out.emplace_back(p);
      n /= p;
    }
  }
  if (n > 1) factor_into(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> prime_divisors(const Int& n) {
  auto f = factor(n);
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

Int squarefree_part(const Int& n) {
  if (n == 0) throw Error("squarefree part of 0");
  Int r = n < 0 ? -1 : 1;
  auto f = factor(n);
  for (std::size_t i = 0; i < f.size();) {
    std::size_t j = i;
    while (j < f.size() && f[j] == f[i]) ++j;
    if ((j - i) % 2) r *= f[i];
    i = j;
  }
  return r;
}

Int squarefree_class(const Rat& r) {
  if (r == 0) throw Error("square class of 0");
  return squarefree_part(Int(r.get_num() * r.get_den()));
}

int valuation(const Int& n, const Int& p) {
  if (n == 0) throw Error("valuation of 0");
  int v = 0;
  Int m = n;
  while (m % p == 0) m /= p, ++v;
  return v;
}

namespace {

void split(const Int& a, const Int& p, int& alpha, Int& unit) {
  alpha = 0;
  unit = a;
  while (unit % p == 0) unit /= p, ++alpha;
}

int legendre(const Int& u, const Int& p) { return mpz_legendre(u.get_mpz_t(), p.get_mpz_t()); }

int mod8(const Int& u) {
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 8);
  return static_cast<int>(r.get_si());
}

}  // namespace

bool is_local_square(const Rat& a, const Place& v) {
  Int s = squarefree_class(a);
  if (v == 0) return s > 0;
  if (s % v == 0) return false;
  if (v == 2) return mod8(s) == 1;
  return legendre(s, v) == 1;
}

int hilbert_symbol(const Rat& ra, const Rat& rb, const Place& v) {
  if (ra == 0 || rb == 0) throw Error("Hilbert symbol of 0");
  Int a = squarefree_class(ra), b = squarefree_class(rb);
  if (v == 0) return (a < 0 && b < 0) ? -1 : 1;
  int al, be;
  Int u, w;
  split(a, v, al, u);
  split(b, v, be, w);
  if (v == 2) {
    int eu = ((mod8(u) - 1) / 2) & 1, ew = ((mod8(w) - 1) / 2) & 1;
    int ou = ((mod8(u) * mod8(u) - 1) / 8) & 1, ow = ((mod8(w) * mod8(w) - 1) / 8) & 1;
    int e = (eu * ew + al * ow + be * ou) & 1;
    return e ? -1 : 1;
  }
  int s = 1;
  Int half = (v - 1) / 2;
  if ((al * be) % 2 && half % 2 != 0) s = -s;
  if (be % 2) s *= legendre(u, v);
  if (al % 2) s *= legendre(w, v);
  return s;
}

std::vector<Int> diagonalize(const IntMatrix& g) {
  auto cd = congruence_diagonal(to_rat(g));
  if (cd.nullity) throw Error("diagonalize needs a nondegenerate form");
  std::vector<Int> out;
  for (const auto& e : cd.entries) out.push_back(squarefree_class(e));
  return out;
}

int hasse_invariant(const std::vector<Int>& d, const Place& v) {
  int s = 1;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) s *= hilbert_symbol(d[i], d[j], v);
  return s;
}

int hasse_invariant(const IntMatrix& g, const Place& v) { return hasse_invariant(diagonalize(g), v); }

namespace {

std::size_t aniso_local(std::size_t n, Int d, int eps, const Place& p) {
  for (;;) {
    if (n <= 1) return n;
    if (n == 2) return is_local_square(-d, p) ? 0 : 2;
    if (n == 3) return eps == hilbert_symbol(-1, -d, p) ? 1 : 3;
    if (n == 4) {
      if (!is_local_square(d, p)) return 2;
      return eps == hilbert_symbol(-1, -1, p) ? 0 : 4;
    }
    // split off a hyperbolic plane
    d = -d;
    eps *= hilbert_symbol(-1, d, p);
    n -= 2;
  }
}

Int det_nonzero(const IntMatrix& g) {
  Int d = det(g);
  if (d == 0) throw Error("form is degenerate");
  return d;
}

}  // namespace

std::size_t anisotropic_dimension(const IntMatrix& g, const Place& v) {
  auto d = diagonalize(g);
  if (v == 0) {
    std::size_t pos = 0;
    for (const auto& x : d) pos += x > 0;
    std::size_t neg = d.size() - pos;
    return pos > neg ? pos - neg : neg - pos;
  }
  if (!is_prime(v)) throw Error("place must be 0 or a prime");
  Int prod = 1;
  for (const auto& x : d) prod *= x;
  return aniso_local(d.size(), squarefree_part(prod), hasse_invariant(d, v), v);
}

std::size_t witt_index(const IntMatrix& g, const Place& v) {
  return (g.rows() - anisotropic_dimension(g, v)) / 2;
}

std::vector<Place> relevant_places(const Int& det) {
  std::vector<Place> out{kInfinity};
  for (const auto& p : prime_divisors(2 * det)) out.push_back(p);
  return out;
}

std::size_t witt_index_global(const IntMatrix& g) {
  Int d = det_nonzero(g);
  std::size_t n = g.rows();
  std::size_t best;
  if (n % 2) {
    best = (n - 1) / 2;
  } else {
    Int delta = (n / 2) % 2 ? -d : d;
    Int s;
    bool square = delta > 0 && mpz_perfect_square_p(delta.get_mpz_t());
    best = square ? n / 2 : n / 2 - 1;
  }
  for (const auto& v : relevant_places(d)) best = std::min(best, witt_index(g, v));
  return best;
}

bool has_k_planes(const IntMatrix& g, std::size_t k, const std::optional<Place>& v) {
  std::size_t w = v ? witt_index(g, *v) : witt_index_global(g);
  return w >= k + 1;
}

std::string to_string(const QuadFormInvariants& q) {
  std::ostringstream os;
  os << "rank " << q.rank << ", disc " << q.disc_class.get_str() << ", signature "
     << to_string(q.signature) << ", hasse -1 at {";
  for (std::size_t i = 0; i < q.hasse_minus.size(); ++i)
    os << (i ? "," : "") << (q.hasse_minus[i] == 0 ? std::string("inf") : q.hasse_minus[i].get_str());
  os << "}";
  return os.str();
}

QuadFormInvariants invariants(const IntMatrix& g) {
  QuadFormInvariants q;
  Int d = det_nonzero(g);
  auto diag = diagonalize(g);
  q.rank = g.rows();
  q.disc_class = squarefree_part(d);
  q.signature = signature(g);
  for (const auto& v : relevant_places(d))
    if (hasse_invariant(diag, v) == -1) q.hasse_minus.push_back(v);
  return q;
}

bool rationally_equivalent(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) return false;
  return invariants(a) == invariants(b);
}

QuadFormInvariants rescaled(const QuadFormInvariants& q, const Int& n) {
  if (n == 0) throw Error("rescale by zero");
  QuadFormInvariants r = q;
  const std::size_t k = q.rank;
  Int nk = 1;
  for (std::size_t i = 0; i < k % 2; ++i) nk *= n;
  r.disc_class = squarefree_part(q.disc_class * nk);
  if (n < 0) std::swap(r.signature.pos, r.signature.neg);
  // eps(nq) = eps(q) * (n, (-1)^(k(k-1)/2) d^(k-1))
  Int other = ((k * (k - 1) / 2) % 2) ? -1 : 1;
  if ((k - 1) % 2) other *= q.disc_class;
  std::set<Place> places(q.hasse_minus.begin(), q.hasse_minus.end());
  for (const auto& v : relevant_places(q.disc_class * n)) places.insert(v);
  r.hasse_minus.clear();
  for (const auto& v : places) {
    int e = std::count(q.hasse_minus.begin(), q.hasse_minus.end(), v) ? -1 : 1;
    if (e * hilbert_symbol(n, other, v) == -1) r.hasse_minus.push_back(v);
  }
  return r;
}

bool quadrics_isomorphic(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) return false;
  const std::size_t r = a.rows();
  auto qa = invariants(a), qb = invariants(b);
  if (r % 2) return rescaled(qa, qa.disc_class) == rescaled(qb, qb.disc_class);
  if (qa.disc_class != qb.disc_class) return false;
  Int delta = ((r / 2) % 2) ? -qa.disc_class : qa.disc_class;
  std::set<Place> places(qa.hasse_minus.begin(), qa.hasse_minus.end());
  places.insert(qb.hasse_minus.begin(), qb.hasse_minus.end());
  auto eta = [&](const Place& v) {
    int x = std::count(qa.hasse_minus.begin(), qa.hasse_minus.end(), v) ? -1 : 1;
    int y = std::count(qb.hasse_minus.begin(), qb.hasse_minus.end(), v) ? -1 : 1;
    return x * y;
  };
  for (int s : {1, -1}) {
    Signature sa = qa.signature;
    if (s < 0) std::swap(sa.pos, sa.neg);
    if (!(sa == qb.signature)) continue;
    if (hilbert_symbol(s, delta, kInfinity) != eta(kInfinity)) continue;
    bool ok = true;
    for (const auto& v : places)
      if (v != 0 && eta(v) == -1 && is_local_square(delta, v)) ok = false;
    if (ok) return true;
  }
  return false;
}

Int ruling_disc(const IntMatrix& g) {
  const std::size_t r = g.rows();
  if (r % 2 || r < 2) throw Error("ruling_disc needs even rank 2k+2");
  Int d = det_nonzero(g);
  if ((r / 2) % 2) d = -d;
  return squarefree_part(d);
}

}  // namespace k3lat
