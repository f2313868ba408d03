#include "k3lat/glue.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace k3lat {

RatVector GlueSpec::as_rational() const {
  RatVector r;
  r.reserve(vector.size());
  for (const auto& x : vector) {
    Rat q(x, denominator);
    q.canonicalize();
    r.push_back(q);
  }
  return r;
}

GlueSpec GlueSpec::from_rational(const RatVector& v) {
  GlueSpec g;
  g.denominator = lcm_denominators(v);
  for (const auto& x : v) g.vector.push_back(x.get_num() * (g.denominator / x.get_den()));
  return g;
}

Lattice adjoin(const Lattice& base, const std::vector<GlueSpec>& glue, bool require_even) {
  const std::size_t n = base.rank();
  Int den = 1;
  for (const auto& g : glue) {
    if (g.vector.size() != n) throw Error("glue vector has wrong length");
    if (g.denominator < 1) throw Error("glue denominator must be positive");
    den = lcm(den, g.denominator);
  }
  RatMatrix grat = to_rat(base.gram);
  for (const auto& g : glue) {
    RatVector v = g.as_rational();
    for (const auto& x : grat * v)
      if (x.get_den() != 1) throw Error("glue vector has non-integral pairing with the base");
    Rat nv = bilinear(base.gram, v, v);
    if (nv.get_den() != 1) throw Error("glue vector has non-integral norm " + to_string(nv));
    if (require_even && nv.get_num() % 2 != 0)
      throw Error("glue vector has odd norm " + to_string(nv));
  }
  IntMatrix rows(n + glue.size(), n);
  for (std::size_t i = 0; i < n; ++i) rows(i, i) = den;
  for (std::size_t k = 0; k < glue.size(); ++k)
    for (std::size_t j = 0; j < n; ++j)
      rows(n + k, j) = glue[k].vector[j] * (den / glue[k].denominator);
  IntMatrix h = row_span_basis(rows);
  RatMatrix basis(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      basis(j, i) = Rat(h(i, j), den);
      basis(j, i).canonicalize();
    }
  Lattice out;
  try {
    out = embed(base, basis, base.name.empty() ? std::string() : base.name + "[glue]");
  } catch (const Error&) {
    throw Error("glue vectors have non-integral mutual pairing");
  }
  if (require_even && !out.is_even()) throw Error("adjoined lattice is not even");
  return out;
}

std::vector<Lattice> even_overlattices(const Lattice& l, const Int& max_index,
                                       std::size_t max_group_order) {
  if (!l.is_even()) throw Error("even_overlattices needs an even lattice");
  auto f = discriminant_group(l);
  if (f.order() > max_group_order) throw Error("discriminant group too large to enumerate");
  auto elems = f.elements();
  std::vector<IntVector> iso;
  for (const auto& e : elems)
    if (f.q_of(e) == 0 && std::any_of(e.begin(), e.end(), [](const Int& x) { return x != 0; }))
      iso.push_back(e);

  using Group = std::vector<IntVector>;
  auto closure = [&](Group h, const IntVector& x) {
    std::set<IntVector> s(h.begin(), h.end());
    std::vector<IntVector> frontier(h.begin(), h.end());
    while (!frontier.empty()) {
      std::vector<IntVector> next;
      for (const auto& a : frontier) {
        IntVector b = f.add(a, x);
        if (s.insert(b).second) next.push_back(b);
      }
      frontier = std::move(next);
    }
    return Group(s.begin(), s.end());
  };
  bool bounded = max_index > 0;
  std::set<Group> seen;
  std::vector<Group> order;
  Group zero{IntVector(f.length(), 0)};
  seen.insert(zero);
  order.push_back(zero);
  for (std::size_t at = 0; at < order.size(); ++at) {
    Group h = order[at];
    std::set<IntVector> hs(h.begin(), h.end());
    for (const auto& x : iso) {
      if (hs.count(x)) continue;
      bool ok = true;
      for (const auto& y : h)
        if (f.b_of(x, y) != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      Group g = closure(h, x);
      if (bounded && Int(static_cast<unsigned long>(g.size())) > max_index) continue;
      if (seen.insert(g).second) order.push_back(g);
    }
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const Group& a, const Group& b) { return a.size() < b.size(); });
  std::vector<Lattice> out;
  for (const auto& g : order) {
    std::vector<GlueSpec> glue;
    for (const auto& e : g) {
      if (std::all_of(e.begin(), e.end(), [](const Int& x) { return x == 0; })) continue;
      glue.push_back(GlueSpec::from_rational(f.lift(e)));
    }
    if (glue.empty()) {
      out.push_back(embed(l, IntMatrix::identity(l.rank()), l.name));
      continue;
    }
    out.push_back(adjoin(l, glue, true));
  }
  return out;
}

std::optional<GlueSpec> find_isotropic_glue(const Lattice& l, const RatVector& target,
                                            const Int& d, const std::vector<RatVector>& search,
                                            long bound) {
  auto own = [&](const RatVector& v) {
    auto c = coords_in(l, v);
    if (!c) throw Error("search vector is not in the lattice");
    return *c;
  };
  IntVector t = own(target);
  std::vector<IntVector> s;
  for (const auto& v : search) s.push_back(own(v));
  std::vector<long> c(s.size(), -bound);
  for (;;) {
    IntVector v = t;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += c[i] * s[i][k];
    if (norm(l, v) == 0) {
      Int g = divisibility(l, v);
      if (g % d == 0) return GlueSpec{v, d};
    }
    std::size_t i = 0;
    while (i < c.size() && c[i] == bound) c[i++] = -bound;
    if (i == c.size()) break;
    ++c[i];
  }
  return std::nullopt;
}

int z2_4(const std::string& bits) {
  if (bits.size() != 4) throw Error("element of (Z/2)^4 needs four bits");
  int x = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw Error("bad bit string " + bits);
    x = 2 * x + (ch - '0');
  }
  return x;
}

int z2_4_eval(int f, int x) { return std::popcount(static_cast<unsigned>(f & x)) & 1; }

std::vector<int> z2_4_span(const std::vector<int>& gens) {
  std::set<int> s{0};
  for (int g : gens) {
    std::set<int> t = s;
    for (int x : s) t.insert(x ^ g);
    s = t;
  }
  return {s.begin(), s.end()};
}

std::vector<int> ld_default_subgroup() { return {0, 1, 2, 3}; }

Lattice base_2d_a1_15(const Int& d) {
  IntVector diag(16, Int(-2));
  diag[0] = 2 * d;
  return make_lattice(IntMatrix::diagonal(diag), "<" + Int(2 * d).get_str() + ">+A1^15");
}

std::vector<GlueSpec> m16_glue(std::size_t offset) {
  std::vector<GlueSpec> g;
  for (int f = 1; f < 16; ++f) {
    GlueSpec s{IntVector(offset + 15, 0), 2};
    for (int x = 1; x < 16; ++x)
      if (z2_4_eval(f, x) == 1) s.vector[offset + x - 1] = 1;
    g.push_back(s);
  }
  return g;
}

Lattice build_M16() {
  Lattice a = make_lattice(IntMatrix::diagonal(IntVector(15, Int(-2))), "A1^15");
  Lattice m = adjoin(a, m16_glue(0), true);
  m.name = "M16";
  return m;
}

Lattice build_Ld(const Int& d, LdVariant v) {
  if (d <= 0) throw Error("L_d needs d > 0");
  if (d % 4 != 3) throw Error("L_d glue (l + sum b)/2 is even only for d = 3 mod 4");
  Lattice base = base_2d_a1_15(d);
  auto glue = m16_glue(1);
  GlueSpec extra{IntVector(16, 0), 2};
  extra.vector[0] = 1;
  if (v == LdVariant::subgroup) {
    for (int x : ld_default_subgroup())
      if (x) extra.vector[x] = 1;
  } else {
    for (int x = 1; x < 16; ++x) extra.vector[x] = 1;
  }
  glue.push_back(extra);
  Lattice l = adjoin(base, glue, true);
  l.name = "L_d(" + d.get_str() + (v == LdVariant::subgroup ? ",subgroup)" : ",all)");
  return l;
}

Lattice build_N1() {
  Lattice l = build_Ld(3, LdVariant::subgroup);
  l.name = "N1";
  return l;
}

Lattice build_N2() {
  Lattice l = build_Ld(3, LdVariant::all);
  l.name = "N2";
  return l;
}

Lattice build_KummerK() {
  Lattice a = make_lattice(IntMatrix::diagonal(IntVector(16, Int(-2))), "A1^16");
  std::vector<GlueSpec> glue;
  for (int f = 1; f < 16; ++f)
    for (int c = 0; c < 2; ++c) {
      GlueSpec s{IntVector(16, 0), 2};
      for (int x = 0; x < 16; ++x)
        if (z2_4_eval(f, x) == c) s.vector[x] = 1;
      glue.push_back(s);
    }
  Lattice k = adjoin(a, glue, true);
  k.name = "KummerK";
  return k;
}

namespace {

IntMatrix fiber_zero_section() { return IntMatrix{{0, 1}, {1, -2}}; }

}  // namespace

L2Data build_L2_data() {
  L2Data out;
  IntMatrix triv = block_sum(block_sum(fiber_zero_section(), dynkin_gram(RootType::D, 4)),
                             IntMatrix::diagonal(IntVector(9, Int(-2))));
  out.trivial = make_lattice(triv, "L0");
  IntMatrix g(16, 16);
  for (std::size_t i = 0; i < 15; ++i)
    for (std::size_t j = 0; j < 15; ++j) g(i, j) = triv(i, j);
  g(15, 15) = -2;
  g(15, 0) = g(0, 15) = 1;
  g(15, 1) = g(1, 15) = 1;
  for (std::size_t i = 6; i < 15; ++i) g(15, i) = g(i, 15) = 1;
  out.with_section = make_lattice(g, "L0+s");

  const std::size_t leaves[3] = {2, 4, 5};
  RatMatrix grat = to_rat(g);
  for (int k = 0; k < 2; ++k) {
    RatVector rhs(16, Rat(0));
    rhs[0] = 1;  // fiber degree
    rhs[leaves[k]] = 1;
    for (int fib = 0; fib < 9; ++fib) rhs[6 + fib] = (fib / 3 == k) ? 0 : 1;
    auto x = solve(grat, rhs);
    if (!x) throw Error("torsion section constraints are infeasible");
    if (bilinear(g, *x, *x) != -2) throw Error("torsion section class has wrong self-intersection");
    if ((*x)[15] != 0) throw Error("torsion section class leaves the trivial lattice");
    out.torsion[k] = *x;
  }
  out.l2 = adjoin(out.with_section,
                  {GlueSpec::from_rational(out.torsion[0]), GlueSpec::from_rational(out.torsion[1])},
                  true);
  out.l2.name = "L2";
  return out;
}

Lattice build_L0() { return build_L2_data().trivial; }
Lattice build_L2() { return build_L2_data().l2; }

Lattice build_Lambda(const Int& n) {
  if (n <= 0) throw Error("Lambda(n) needs n > 0");
  Lattice l = direct_sum({rank_one(-2), rank_one(-2 * n), hyperbolic(), hyperbolic()});
  l.name = "Lambda(" + n.get_str() + ")";
  return l;
}

Lattice build_U_E8_E6() {
  Lattice l = direct_sum({hyperbolic(), root_lattice(RootType::E, 8), root_lattice(RootType::E, 6)});
  l.name = "U_E8_E6";
  return l;
}

Lattice build_U_D8_A5_A1() {
  return direct_sum({hyperbolic(), root_lattice(RootType::D, 8), root_lattice(RootType::A, 5),
                     root_lattice(RootType::A, 1)});
}

Lattice build_L_sat() {
  Lattice base = build_U_D8_A5_A1();
  auto inv = inverse(to_rat(base.gram));
  // spinor weight of D8 (node 8) + order-2 class of A5 + generator of A1
  RatVector e(16, Rat(0));
  e[9] = 1;
  e[10] = 3;
  e[15] = 1;
  Lattice l = adjoin(base, {GlueSpec::from_rational(*inv * e)}, true);
  l.name = "L_sat";
  return l;
}

Lattice build_V() {
  Lattice e8 = root_lattice(RootType::E, 8);
  Lattice l = direct_sum({hyperbolic(), hyperbolic(), hyperbolic(), e8, e8});
  l.name = "V";
  return l;
}

Lattice build_Np(const Int& p, const Int& n) {
  if (p < 3 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) throw Error("Np needs an odd prime p");
  if (n <= 0 || mpz_legendre(n.get_mpz_t(), p.get_mpz_t()) != -1)
    throw Error("Np needs a positive quadratic non-residue n mod p");
  IntVector d{Int(1), Int(-n), p, Int(-n * p)};
  return make_lattice(IntMatrix::diagonal(d), "Np(" + p.get_str() + "," + n.get_str() + ")");
}

Lattice build_Lp(const Int& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0 || p % 24 != 17)
    throw Error("Lp needs a prime p = 17 mod 24");
  Lattice l = direct_sum({rank_one(-2), rank_one(-6), hyperbolic(), rank_one(4 * p)});
  l.name = "Lp(" + p.get_str() + ")";
  return l;
}

Lattice build_T() {
  return make_lattice(IntMatrix{{-2, -1, 0, -1}, {-1, 2, 1, -1}, {0, 1, -2, 1}, {-1, -1, 1, 2}}, "T");
}

namespace {

std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Int parse_int(const std::string& s) {
  Int x;
  if (s.empty() || x.set_str(s, 10) != 0) throw Error("bad integer argument '" + s + "'");
  return x;
}

}  // namespace

Lattice build_named(const std::string& name) {
  std::string head = name, body;
  auto open = name.find('(');
  if (open != std::string::npos) {
    if (name.back() != ')') throw Error("unbalanced parentheses in '" + name + "'");
    head = name.substr(0, open);
    body = name.substr(open + 1, name.size() - open - 2);
  }
  auto args = body.empty() ? std::vector<std::string>{} : split_args(body);
  auto want = [&](std::size_t k) {
    if (args.size() != k)
      throw Error(head + " takes " + std::to_string(k) + " argument(s)");
  };
  if (head == "L0") return want(0), build_L0();
  if (head == "L2") return want(0), build_L2();
  if (head == "Lambda") return want(1), build_Lambda(parse_int(args[0]));
  if (head == "M16") return want(0), build_M16();
  if (head == "N1") return want(0), build_N1();
  if (head == "N2") return want(0), build_N2();
  if (head == "KummerK") return want(0), build_KummerK();
  if (head == "U_E8_E6") return want(0), build_U_E8_E6();
  if (head == "L_sat") return want(0), build_L_sat();
  if (head == "U_D8_A5_A1") return want(0), build_U_D8_A5_A1();
  if (head == "V") return want(0), build_V();
  if (head == "T") return want(0), build_T();
  if (head == "Np") return want(2), build_Np(parse_int(args[0]), parse_int(args[1]));
  if (head == "Lp") return want(1), build_Lp(parse_int(args[0]));
  if (head == "L_d") {
    want(2);
    LdVariant v;
    if (args[1] == "subgroup")
      v = LdVariant::subgroup;
    else if (args[1] == "all")
      v = LdVariant::all;
    else
      throw Error("L_d variant must be 'subgroup' or 'all'");
    return build_Ld(parse_int(args[0]), v);
  }
  throw Error("unknown named lattice '" + name + "'");
}

std::vector<std::string> named_lattice_names() {
  return {"L0", "L2", "Lambda(n)", "M16", "N1", "N2", "KummerK", "U_E8_E6", "U_D8_A5_A1", "L_sat", "V",
          "Np(p,n)", "Lp(p)", "L_d(d,subgroup|all)", "T"};
}

}  // namespace k3lat
