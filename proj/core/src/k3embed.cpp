#include "k3lat/k3embed.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace k3lat {

namespace {

Lattice e8_with_nodes(const std::vector<int>& nodes, const std::string& name) {
  Lattice e8 = root_lattice(RootType::E, 8);
  IntMatrix b(8, nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) b(nodes[j] - 1, j) = 1;
  return embed(e8, b, name);
}

}  // namespace

IntVector vector_of_norm(const Int& k) {
  if (k % 2 != 0) throw Error("U has no vector of odd norm");
  return {Int(1), Int(k / 2)};
}

Lattice embed_standard(const std::string& spec) {
  if (spec == "A5+A1 in E8") return e8_with_nodes(kA5A1Nodes, "A5+A1");
  if (spec == "A2+A1^3 in E8") return e8_with_nodes(kA2A1cNodes, "A2+A1^3");
  const std::string vn = "vector_of_norm(";
  if (spec.rfind(vn, 0) == 0) {
    auto close = spec.find(')');
    if (close == std::string::npos || spec.substr(close) != ") in U")
      throw Error("unknown embedding '" + spec + "'");
    Int k;
    if (k.set_str(spec.substr(vn.size(), close - vn.size()), 10) != 0)
      throw Error("bad norm in '" + spec + "'");
    IntVector v = vector_of_norm(k);
    IntMatrix b(2, 1);
    b(0, 0) = v[0], b(1, 0) = v[1];
    return embed(hyperbolic(), b, "<" + k.get_str() + ">");
  }
  Lattice v = build_V();
  std::vector<IntVector> cols;
  auto unit = [](std::size_t i) {
    IntVector e(22, 0);
    e[i] = 1;
    return e;
  };
  auto add_e8_nodes = [&](const std::vector<int>& nodes) {
    for (int n : nodes) cols.push_back(unit(13 + n));
  };
  if (spec == "U+E8+A5+A1 in V" || spec == "L2-isogeny-complement") {
    cols.push_back(unit(0)), cols.push_back(unit(1));
    for (std::size_t i = 6; i < 14; ++i) cols.push_back(unit(i));
    add_e8_nodes(kA5A1Nodes);
    return embed(v, IntMatrix::from_columns(cols, 22), "U+E8+A5+A1");
  }
  if (spec == "rank17 in V") {
    cols.push_back(unit(0)), cols.push_back(unit(1));
    for (std::size_t i = 6; i < 14; ++i) cols.push_back(unit(i));
    add_e8_nodes(kA2A1cNodes);
    for (std::size_t u : {2, 4}) {
      IntVector r(22, 0);
      r[u] = 1, r[u + 1] = -1;  // a root of U
      cols.push_back(r);
    }
    return embed(v, IntMatrix::from_columns(cols, 22), "U+E8+A2+A1^5");
  }
  throw Error("unknown embedding '" + spec + "'");
}

std::vector<std::string> standard_embeddings() {
  return {"A5+A1 in E8", "A2+A1^3 in E8", "U+E8+A5+A1 in V", "L2-isogeny-complement",
          "rank17 in V", "vector_of_norm(k) in U"};
}

Lattice embed_Lp_in_Lambda3(const Int& p) {
  Lattice lp = build_Lp(p);
  Lattice lam = build_Lambda(3);
  IntMatrix b(6, 5);
  for (std::size_t i = 0; i < 4; ++i) b(i, i) = 1;
  IntVector v = vector_of_norm(4 * p);
  b(4, 4) = v[0], b(5, 4) = v[1];
  Lattice e = embed(lam, b, lp.name);
  if (!(e.gram == lp.gram)) throw Error("Lp embedding does not reproduce the Gram matrix");
  return e;
}

Lattice transcendental_of(const Lattice& e) {
  Lattice t = orthogonal_complement(e);
  t.name = e.name.empty() ? "T" : "T(" + e.name + ")";
  return t;
}

std::optional<std::vector<IntVector>> disc_form_isomorphism(const FiniteQuadraticForm& a,
                                                            const FiniteQuadraticForm& b) {
  if (a.invariant_factors != b.invariant_factors || a.even != b.even) return std::nullopt;
  const std::size_t n = a.length();
  auto elems = b.elements();
  std::vector<std::size_t> ord;
  std::vector<Rat> qv;
  for (const auto& e : elems) ord.push_back(b.element_order(e)), qv.push_back(b.q_of(e));

  std::vector<IntVector> img(n);
  auto span_size = [&](std::size_t k) {
    std::set<IntVector> s{IntVector(b.length(), 0)};
    for (std::size_t i = 0; i < k; ++i) {
      std::set<IntVector> t = s;
      for (const auto& x : s) {
        IntVector y = x;
        for (unsigned long m = 1; m < a.invariant_factors[i].get_ui(); ++m) {
          y = b.add(y, img[i]);
          t.insert(y);
        }
      }
      s = std::move(t);
    }
    return s.size();
  };
  auto image_of = [&](const IntVector& c) {
    IntVector y(b.length(), 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < y.size(); ++k) y[k] += c[i] * img[i][k];
    return b.reduce(y);
  };
  std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t size) -> bool {
    if (i == n) return true;
    const std::size_t d = a.invariant_factors[i].get_ui();
    for (std::size_t e = 0; e < elems.size(); ++e) {
      if (ord[e] != d || qv[e] != a.q[i]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = b.b_of(elems[e], img[j]) == a.b(i, j);
      if (!ok) continue;
      img[i] = elems[e];
      std::size_t s = span_size(i + 1);
      if (s != size * d) continue;
      if (go(i + 1, s)) return true;
    }
    return false;
  };
  if (!go(0, 1)) return std::nullopt;
  // full table check
  std::set<IntVector> seen;
  for (const auto& c : a.elements()) {
    IntVector y = image_of(c);
    if (a.q_of(c) != b.q_of(y)) return std::nullopt;
    seen.insert(y);
  }
  if (Int(static_cast<unsigned long>(seen.size())) != b.order()) return std::nullopt;
  return img;
}

bool genus_equal(const Lattice& a, const Lattice& b, std::size_t max_order) {
  if (a.rank() != b.rank()) return false;
  if (!a.is_even() || !b.is_even()) throw Error("genus_equal needs even lattices");
  if (a.det() == 0 || b.det() == 0) throw Error("genus_equal needs nondegenerate lattices");
  if (!(a.signature() == b.signature())) return false;
  if (a.det() != b.det()) return false;
  if (abs(a.det()) > max_order) throw Error("discriminant group too large for search");
  return disc_form_isomorphism(discriminant_group(a), discriminant_group(b)).has_value();
}

bool nikulin_uniqueness_applies(const Lattice& l) {
  auto s = l.signature();
  if (s.zero || s.pos == 0 || s.neg == 0) return false;
  auto f = invariant_factors(l.gram);
  std::set<Int> primes;
  for (const auto& d : f)
    if (d > 1)
      for (const auto& p : prime_divisors(d)) primes.insert(p);
  for (const auto& p : primes) {
    std::size_t len = 0;
    for (const auto& d : f) len += (d % p == 0);
    if (l.rank() < len + 2) return false;
  }
  return true;
}

bool is_two_elementary(const Lattice& l) {
  for (const auto& d : invariant_factors(l.gram))
    if (d != 1 && d != 2) return false;
  return true;
}

std::vector<IntVector> short_vectors(const IntMatrix& g, const Int& bound) {
  const std::size_t n = g.rows();
  RatMatrix q = to_rat(g);
  for (std::size_t i = 0; i < n; ++i) {
    if (q(i, i) <= 0) throw Error("short_vectors needs a positive definite form");
    for (std::size_t j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) = q(i, j) / q(i, i);
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
  }
  std::vector<IntVector> out;
  IntVector x(n, 0);
  std::function<void(std::size_t, Rat)> rec = [&](std::size_t lvl, Rat remaining) {
    const std::size_t i = lvl;
    Rat c = 0;
    for (std::size_t j = i + 1; j < n; ++j) c -= q(i, j) * x[j];
    Rat t = remaining / q(i, i);
    Int tc;
    mpz_cdiv_q(tc.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    Int s;
    mpz_sqrt(s.get_mpz_t(), tc.get_mpz_t());
    Int fc;
    mpz_fdiv_q(fc.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
    for (Int v = fc - s - 1; v <= fc + s + 1; ++v) {
      Rat dlt = Rat(v) - c;
      Rat used = q(i, i) * dlt * dlt;
      if (used > remaining) continue;
      x[i] = v;
      if (i == 0) {
        if (std::any_of(x.begin(), x.end(), [](const Int& z) { return z != 0; })) out.push_back(x);
      } else {
        rec(i - 1, remaining - used);
      }
    }
    x[i] = 0;
  };
  if (n) rec(n - 1, Rat(bound));
  return out;
}

namespace {

int definite_sign(const Lattice& l) {
  auto s = l.signature();
  if (s.zero == 0 && s.neg == 0) return 1;
  if (s.zero == 0 && s.pos == 0) return -1;
  throw Error("lattice is not definite");
}

IntMatrix scaled(const IntMatrix& g, int s) {
  IntMatrix r = g;
  if (s < 0)
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = -r(i, j);
  return r;
}

// Greedy pair reduction of a positive definite Gram; returns the basis change.
IntMatrix greedy_reduce(const IntMatrix& p) {
  const std::size_t n = p.rows();
  IntMatrix b = IntMatrix::identity(n);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        IntMatrix g = b.transpose() * p * b;
        const Int& nj = g(j, j);
        Int two = 2 * g(i, j);
        if (abs(two) <= nj) continue;
        Int q;
        Int num = two + nj;
        Int den = 2 * nj;
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        for (std::size_t k = 0; k < n; ++k) b(k, i) -= q * b(k, j);
        changed = true;
      }
  }
  // sort by norm
  IntMatrix g = b.transpose() * p * b;
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](auto x, auto y) { return g(x, x) < g(y, y); });
  IntMatrix r(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) r(k, j) = b(k, idx[j]);
  return r;
}

// Backtracking: images for a basis with target Gram `ga` among candidate vectors.
std::optional<IntMatrix> match_gram(const IntMatrix& ga, const IntMatrix& gb,
                                    const std::vector<IntVector>& cands, bool need_unimodular) {
  const std::size_t n = ga.rows();
  std::map<Int, std::vector<std::size_t>> by_norm;
  std::vector<IntVector> gv;  // gb * cand
  for (std::size_t c = 0; c < cands.size(); ++c) {
    gv.push_back(gb * cands[c]);
    by_norm[dot(cands[c], gv.back())].push_back(c);
  }
  std::vector<std::size_t> pick(n);
  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    if (i == n) {
      if (!need_unimodular) return true;
      IntMatrix y(n, n);
      for (std::size_t j = 0; j < n; ++j) y.set_column(j, cands[pick[j]]);
      return abs(det(y)) == 1;
    }
    auto it = by_norm.find(ga(i, i));
    if (it == by_norm.end()) return false;
    for (auto c : it->second) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = dot(cands[pick[j]], gv[c]) == ga(j, i);
      if (!ok) continue;
      pick[i] = c;
      if (go(i + 1)) return true;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  IntMatrix y(gb.rows(), n);
  for (std::size_t j = 0; j < n; ++j) y.set_column(j, cands[pick[j]]);
  return y;
}

}  // namespace

std::map<Int, std::size_t> theta_counts(const Lattice& l, const Int& bound) {
  int s = definite_sign(l);
  std::map<Int, std::size_t> m;
  IntMatrix p = scaled(l.gram, s);
  for (const auto& v : short_vectors(p, bound)) m[bilinear(p, v, v)]++;
  return m;
}

std::optional<IntMatrix> definite_isometry(const Lattice& a, const Lattice& b) {
  if (a.rank() != b.rank() || a.rank() > 8) {
    if (a.rank() > 8 || b.rank() > 8) throw Error("definite_isomorphic supports rank <= 8");
    return std::nullopt;
  }
  int sa = definite_sign(a), sb = definite_sign(b);
  if (sa != sb || a.det() != b.det()) return std::nullopt;
  if (a.rank() == 0) return IntMatrix(0, 0);
  if (theta_counts(a, 8) != theta_counts(b, 8)) return std::nullopt;
  IntMatrix pa = scaled(a.gram, sa), pb = scaled(b.gram, sb);
  IntMatrix red = greedy_reduce(pa);
  IntMatrix ga = red.transpose() * pa * red;
  Int maxn = 0;
  for (std::size_t i = 0; i < ga.rows(); ++i) maxn = std::max(maxn, ga(i, i));
  auto cands = short_vectors(pb, maxn);
  auto y = match_gram(ga, pb, cands, false);
  if (!y) return std::nullopt;
  // images of the original basis: y * red^{-1}
  IntMatrix m = to_int(to_rat(*y) * *inverse(to_rat(red)));
  if (!(m.transpose() * b.gram * m == a.gram) || abs(det(m)) != 1)
    throw Error("internal: isometry check failed");
  return m;
}

bool definite_isomorphic(const Lattice& a, const Lattice& b) {
  return definite_isometry(a, b).has_value();
}

std::optional<IntMatrix> bounded_isometry(const Lattice& a, const Lattice& b, long box) {
  if (a.rank() != b.rank() || a.det() != b.det()) return std::nullopt;
  const std::size_t n = b.rank();
  std::set<Int> norms;
  for (std::size_t i = 0; i < n; ++i) norms.insert(a.gram(i, i));
  std::vector<IntVector> cands;
  std::vector<long> c(n, -box);
  for (;;) {
    IntVector v(c.begin(), c.end());
    if (std::any_of(c.begin(), c.end(), [](long z) { return z != 0; }) &&
        norms.count(bilinear(b.gram, v, v)))
      cands.push_back(v);
    std::size_t i = 0;
    while (i < n && c[i] == box) c[i++] = -box;
    if (i == n) break;
    ++c[i];
  }
  auto y = match_gram(a.gram, b.gram, cands, true);
  if (y && !(y->transpose() * b.gram * *y == a.gram)) throw Error("internal: isometry check failed");
  return y;
}

QuadFormInvariants quadric_certificate(const Lattice& l) { return invariants(l.gram); }

}  // namespace k3lat
