#include "k3lat/lattice.hpp"

namespace k3lat {

Int Lattice::det() const { return k3lat::det(gram); }
Signature Lattice::signature() const { return k3lat::signature(gram); }
bool Lattice::is_even() const { return k3lat::is_even(gram); }

RatVector Lattice::to_ambient(const RatVector& own) const {
  if (!ambient) throw Error("lattice has no ambient");
  return basis * own;
}

Lattice make_lattice(IntMatrix gram, std::string name) {
  if (!gram.is_symmetric()) throw Error("Gram matrix is not symmetric");
  Lattice l;
  l.gram = std::move(gram);
  l.name = std::move(name);
  return l;
}

Lattice embed(const Lattice& ambient, RatMatrix basis, std::string name) {
  if (basis.rows() != ambient.rank()) throw Error("basis rows must equal ambient rank");
  if (rank(basis) != basis.cols()) throw Error("embedded basis is linearly dependent");
  RatMatrix g = basis.transpose() * to_rat(ambient.gram) * basis;
  Lattice l;
  l.gram = to_int(g);
  l.name = std::move(name);
  l.ambient = std::make_shared<const Lattice>(ambient);
  l.basis = std::move(basis);
  return l;
}

Lattice embed(const Lattice& ambient, const IntMatrix& basis, std::string name) {
  return embed(ambient, to_rat(basis), std::move(name));
}

IntMatrix dynkin_gram(RootType t, int n) {
  if (n < 1) throw Error("root lattice rank must be positive");
  if (t == RootType::D && n < 4) throw Error("D_n needs n >= 4");
  if (t == RootType::E && (n < 6 || n > 8)) throw Error("E_n needs 6 <= n <= 8");
  IntMatrix g(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = -2;
  auto link = [&](int a, int b) { g(a - 1, b - 1) = g(b - 1, a - 1) = 1; };
  int chain = t == RootType::A ? n : n - 1;
  for (int i = 1; i < chain; ++i) link(i, i + 1);
  if (t == RootType::D) link(n, n - 2);
  if (t == RootType::E) link(n, n - 3);
  return g;
}

Lattice root_lattice(RootType t, int n) {
  const char* p = t == RootType::A ? "A" : t == RootType::D ? "D" : "E";
  return make_lattice(dynkin_gram(t, n), std::string(p) + std::to_string(n));
}

Lattice hyperbolic() { return make_lattice(IntMatrix{{0, 1}, {1, 0}}, "U"); }

Lattice rank_one(const Int& k, bool allow_odd) {
  if (!allow_odd && k % 2 != 0) throw Error("rank_one with odd norm needs allow_odd");
  IntMatrix g(1, 1);
  g(0, 0) = k;
  return make_lattice(g, "<" + k.get_str() + ">");
}

Lattice rescale(const Lattice& l, const Int& n) {
  if (n == 0) throw Error("rescale by zero");
  IntMatrix g = l.gram;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= n;
  return make_lattice(g, l.name.empty() ? std::string() : l.name + "(" + n.get_str() + ")");
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  std::string nm;
  if (!a.name.empty() && !b.name.empty()) nm = a.name + "+" + b.name;
  return make_lattice(block_sum(a.gram, b.gram), nm);
}

Lattice direct_sum(const std::vector<Lattice>& parts) {
  if (parts.empty()) return make_lattice(IntMatrix(0, 0));
  Lattice r = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) r = direct_sum(r, parts[i]);
  return r;
}

Lattice diagonal_lattice(const std::vector<long>& d, std::string name) {
  IntVector v(d.begin(), d.end());
  return make_lattice(IntMatrix::diagonal(v), std::move(name));
}

bool is_even(const IntMatrix& gram) {
  for (std::size_t i = 0; i < gram.rows(); ++i)
    if (gram(i, i) % 2 != 0) return false;
  return true;
}

Int FiniteQuadraticForm::order() const {
  Int o = 1;
  for (const auto& d : invariant_factors) o *= d;
  return o;
}

Rat FiniteQuadraticForm::q_of(const IntVector& c) const {
  Rat s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    s += Rat(c[i] * c[i]) * q[i];
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (c[j] != 0) s += 2 * Rat(c[i] * c[j]) * b(i, j);
  }
  return mod_rat(s, even ? Rat(2) : Rat(1));
}

Rat FiniteQuadraticForm::b_of(const IntVector& x, const IntVector& y) const {
  Rat s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) s += Rat(x[i] * y[j]) * b(i, j);
  }
  return mod_rat(s, Rat(1));
}

IntVector FiniteQuadraticForm::reduce(const IntVector& c) const {
  IntVector r(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    mpz_fdiv_r(r[i].get_mpz_t(), c[i].get_mpz_t(), invariant_factors[i].get_mpz_t());
  return r;
}

IntVector FiniteQuadraticForm::add(const IntVector& x, const IntVector& y) const {
  IntVector s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
  return reduce(s);
}

std::size_t FiniteQuadraticForm::element_order(const IntVector& c) const {
  Int o = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Int g = gcd(c[i], invariant_factors[i]);
    o = lcm(o, invariant_factors[i] / g);
  }
  return o.get_ui();
}

std::vector<IntVector> FiniteQuadraticForm::elements() const {
  std::vector<IntVector> out;
  IntVector c(length(), 0);
  for (;;) {
    out.push_back(c);
    std::size_t i = 0;
    while (i < c.size()) {
      c[i] += 1;
      if (c[i] < invariant_factors[i]) break;
      c[i] = 0;
      ++i;
    }
    if (i == c.size()) break;
  }
  return out;
}

RatVector FiniteQuadraticForm::lift(const IntVector& c) const {
  RatVector v(generators.empty() ? to_coords.cols() : generators[0].size());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += Rat(c[i]) * generators[i][k];
  return v;
}

FiniteQuadraticForm FiniteQuadraticForm::negated() const {
  FiniteQuadraticForm f = *this;
  Rat m = even ? Rat(2) : Rat(1);
  for (auto& x : f.q) x = mod_rat(-x, m);
  for (std::size_t i = 0; i < f.b.rows(); ++i)
    for (std::size_t j = 0; j < f.b.cols(); ++j) f.b(i, j) = mod_rat(-f.b(i, j), Rat(1));
  return f;
}

FiniteQuadraticForm discriminant_group(const Lattice& l) {
  const IntMatrix& g = l.gram;
  const std::size_t n = g.rows();
  auto s = smith_normal_form(g);
  for (std::size_t i = 0; i < n; ++i)
    if (s.d(i, i) == 0) throw Error("discriminant group of a degenerate lattice");
  FiniteQuadraticForm f;
  f.even = is_even(g);
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i)
    if (s.d(i, i) > 1) idx.push_back(i);
  f.to_coords = IntMatrix(idx.size(), n);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    std::size_t i = idx[k];
    f.invariant_factors.push_back(s.d(i, i));
    RatVector gen(n);
    for (std::size_t r = 0; r < n; ++r) gen[r] = Rat(s.v(r, i), s.d(i, i));
    for (auto& x : gen) x.canonicalize();
    f.generators.push_back(gen);
    for (std::size_t c = 0; c < n; ++c) f.to_coords(k, c) = s.u(i, c);
  }
  const std::size_t m = idx.size();
  f.b = RatMatrix(m, m);
  Rat qmod = f.even ? Rat(2) : Rat(1);
  for (std::size_t i = 0; i < m; ++i) {
    f.q.push_back(mod_rat(bilinear(g, f.generators[i], f.generators[i]), qmod));
    for (std::size_t j = 0; j < m; ++j)
      f.b(i, j) = mod_rat(bilinear(g, f.generators[i], f.generators[j]), Rat(1));
  }
  return f;
}

IntVector disc_coords(const FiniteQuadraticForm& f, const IntMatrix& g, const RatVector& x) {
  RatVector gx = to_rat(g) * x;
  IntVector gi = to_int(gx);  // throws if x is not a dual vector
  IntVector c = f.to_coords * gi;
  return f.reduce(c);
}

Lattice orthogonal_complement(const Lattice& ambient, const IntMatrix& sub, std::string name) {
  if (sub.rows() != ambient.rank()) throw Error("sublattice basis has wrong length");
  IntMatrix pairing = sub.transpose() * ambient.gram;
  IntMatrix k = kernel_basis(pairing);
  if (k.cols() == 0) {
    Lattice l = make_lattice(IntMatrix(0, 0), std::move(name));
    l.ambient = std::make_shared<const Lattice>(ambient);
    l.basis = RatMatrix(ambient.rank(), 0);
    return l;
  }
  return embed(ambient, k, std::move(name));
}

Lattice orthogonal_complement(const Lattice& sublattice) {
  if (!sublattice.ambient) throw Error("complement needs an embedded lattice");
  return orthogonal_complement(*sublattice.ambient, to_int(sublattice.basis));
}

IntMatrix saturation(const IntMatrix& basis) {
  IntMatrix k = kernel_basis(basis.transpose());
  return kernel_basis(k.transpose());
}

bool is_primitive(const IntMatrix& basis) {
  auto f = invariant_factors(basis);
  if (f.size() != basis.cols()) return false;
  for (const auto& x : f)
    if (x != 1) return false;
  return true;
}

Int index_in(const Lattice& sub, const Lattice& sup) {
  if (sub.rank() != sup.rank()) throw Error("index needs equal ranks");
  Int a = abs(sub.det()), b = abs(sup.det());
  if (b == 0) throw Error("index in a degenerate lattice");
  if (a % b != 0) throw Error("determinant ratio is not integral");
  Int r = a / b, s;
  mpz_sqrt(s.get_mpz_t(), r.get_mpz_t());
  if (s * s != r) throw Error("determinant ratio is not a square");
  return s;
}

std::optional<IntVector> coords_in(const Lattice& l, const RatVector& v) {
  if (!l.ambient) {
    for (const auto& x : v)
      if (x.get_den() != 1) return std::nullopt;
    return to_int(v);
  }
  auto x = solve(l.basis, v);
  if (!x) return std::nullopt;
  if (l.basis * *x != v) return std::nullopt;
  for (const auto& c : *x)
    if (c.get_den() != 1) return std::nullopt;
  return to_int(*x);
}

bool contains(const Lattice& l, const RatVector& v) { return coords_in(l, v).has_value(); }

Int divisibility(const Lattice& l, const IntVector& v) { return gcd_of(l.gram * v); }

Int norm(const Lattice& l, const IntVector& v) { return bilinear(l.gram, v, v); }

}  // namespace k3lat
