#include "k3lat/claims.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"
#include "k3lat/ellsurf.hpp"
#include "k3lat/glue.hpp"
#include "k3lat/k3embed.hpp"
#include "k3lat/quadform.hpp"

namespace k3lat {

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::skip: return "skip";
  }
  return "?";
}

namespace {

std::string str(bool b) { return b ? "true" : "false"; }
std::string str(const Int& x) { return x.get_str(); }
std::string str(const Rat& x) { return to_string(x); }
std::string str(long x) { return std::to_string(x); }
std::string str(int x) { return std::to_string(x); }
std::string str(std::size_t x) { return std::to_string(x); }
std::string str(const std::string& s) { return s; }
std::string str(const char* s) { return s; }
std::string str(const Signature& s) { return to_string(s); }

// Collects key/value pairs; the claim passes when every expected key matches.
struct Check {
  ClaimResult r;
  template <class A, class B>
  void eq(const std::string& key, const A& computed, const B& expected) {
    r.computed.emplace_back(key, str(computed));
    r.expected.emplace_back(key, str(expected));
  }
  template <class A>
  void info(const std::string& key, const A& computed) {
    r.computed.emplace_back(key, str(computed));
  }
  ClaimResult done(std::string note = {}) {
    r.note = std::move(note);
    std::map<std::string, std::string> got(r.computed.begin(), r.computed.end());
    bool ok = true;
    for (const auto& [k, v] : r.expected) ok = ok && got.count(k) && got[k] == v;
    r.status = ok ? ClaimStatus::pass : ClaimStatus::fail;
    return r;
  }
};

IntVector unit(std::size_t n, std::size_t i) {
  IntVector e(n, 0);
  e[i] = 1;
  return e;
}

// --- (Z/2)^4 helpers on <2d> + A1^15 coordinates ---------------------------

// h - sum_{x in S, x != 0} b_x
IntVector h_minus(const std::vector<int>& s, long hcoef = 1) {
  IntVector v(16, 0);
  v[0] = hcoef;
  for (int x : s)
    if (x) v[x] -= 1;
  return v;
}

RatVector half(const IntVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    r[i] = Rat(v[i], 2);
    r[i].canonicalize();
  }
  return r;
}

std::vector<GlueSpec> ld_glue(LdVariant var) {
  auto g = m16_glue(1);
  GlueSpec extra{IntVector(16, 0), 2};
  extra.vector[0] = 1;
  if (var == LdVariant::subgroup) {
    for (int x : ld_default_subgroup())
      if (x) extra.vector[x] = 1;
  } else {
    for (int x = 1; x < 16; ++x) extra.vector[x] = 1;
  }
  g.push_back(extra);
  return g;
}

Lattice ld_with(const Int& d, LdVariant var, const std::vector<IntVector>& halves) {
  auto g = ld_glue(var);
  for (const auto& v : halves) g.push_back(GlueSpec{v, 2});
  return adjoin(base_2d_a1_15(d), g, true);
}

Int pair_base(const Int& d, const IntVector& x, const IntVector& y) {
  return bilinear(base_2d_a1_15(d).gram, x, y);
}

// gcd of the pairings of an ambient vector with a basis of l
Int ambient_divisibility(const Lattice& l, const RatVector& v) {
  RatVector gv = to_rat(l.ambient->gram) * v;
  Int g = 0;
  for (std::size_t c = 0; c < l.rank(); ++c) {
    Rat p = dot(gv, l.basis.column(c));
    if (p.get_den() != 1) return 0;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p.get_num_mpz_t());
  }
  return g;
}

std::vector<int> subgroup(const std::vector<std::string>& gens) {
  std::vector<int> g;
  for (const auto& s : gens) g.push_back(z2_4(s));
  return z2_4_span(g);
}

// --- lattices from the examples ---------------------------------------------

IntMatrix lambda_gram(long n) { return build_Lambda(n).gram; }

IntMatrix mh_gram(long n) {
  IntMatrix m(6, 6);
  m(0, 0) = -2;
  m(1, 1) = -2 * n;
  m(2, 3) = m(3, 2) = -2 * n;
  m(4, 5) = m(5, 4) = 2;
  return m;
}

IntMatrix counterexample_gram() { return IntMatrix::diagonal({-1, -1, -2, -6, 7, 7}); }

IntMatrix rank18_gram() {
  return IntMatrix{{6, 5, 3, -3}, {5, 6, -2, 4}, {3, -2, -6, -2}, {-3, 4, -2, 6}};
}

Lattice a2_twice_plus_a1() {
  return direct_sum(root_lattice(RootType::A, 1), rescale(root_lattice(RootType::A, 2), 2));
}

// --- claim bodies -------------------------------------------------------------

ClaimResult l2_even() {
  Check c;
  c.eq("even", build_L2().is_even(), true);
  return c.done();
}

ClaimResult l2_sig() {
  Check c;
  auto l = build_L2();
  c.eq("rank", l.rank(), 16ul);
  c.eq("signature", l.signature(), "(1,0,15)");
  return c.done();
}

ClaimResult l2_disc() {
  Check c;
  auto d = build_L2_data();
  c.eq("det", d.l2.det(), -192);
  c.eq("disc_group_order", discriminant_group(d.l2).order(), 192);
  c.eq("index_over_trivial_plus_section", index_in(d.with_section, d.l2), 4);
  return c.done();
}

ClaimResult l2_mw() {
  Check c;
  auto d = build_L2_data();
  auto fibers = FiberConfig{KodairaType::Istar(0)} + repeat(KodairaType::I(2), 9);
  SectionIncidence s{1, {{KodairaType::Istar(0), 0}}};
  for (int i = 0; i < 9; ++i) s.fibers.push_back({KodairaType::I(2), 1});
  Rat h = height_pairing({2, 16, 4}, s);
  c.eq("generator_height", h, "3/2");
  auto rel = mw_disc_relation(192, fibers, 4, h);
  c.eq("disc_times_tors2", rel.lhs, 3072);
  c.eq("trivdisc_times_height", rel.rhs, 3072);
  // the torsion classes: 2t in the trivial lattice, t.s = 0
  const IntMatrix& g = d.with_section.gram;
  for (int k = 0; k < 2; ++k) {
    std::string t = "t" + std::to_string(k + 1);
    bool two_t_integral = true;
    for (const auto& x : d.torsion[k]) two_t_integral = two_t_integral && Rat(2 * x).get_den() == 1;
    c.eq(t + ".2t_in_trivial", two_t_integral && d.torsion[k][15] == 0, true);
    c.eq(t + ".dot_s", bilinear(g, d.torsion[k], to_rat(unit(16, 15))), 0);
    c.eq(t + ".norm", bilinear(g, d.torsion[k], d.torsion[k]), -2);
  }
  return c.done();
}

ClaimResult n1n2_disc() {
  Check c;
  auto n1 = build_N1(), n2 = build_N2();
  c.eq("det_N1", n1.det(), -192);
  c.eq("det_N2", n2.det(), -192);
  c.eq("sig_N1", n1.signature(), "(1,0,15)");
  c.eq("sig_N2", n2.signature(), "(1,0,15)");
  c.eq("index_N1_over_<6>+M16", index_in(adjoin(base_2d_a1_15(3), m16_glue(1)), n1), 2);
  return c.done();
}

ClaimResult n1n2_distinct() {
  Check c;
  auto n1 = build_N1(), n2 = build_N2(), l2 = build_L2();
  c.eq("genus(N1)=genus(N2)", genus_equal(n1, n2), false);
  c.eq("genus(N1)=genus(L2)", genus_equal(n1, l2), false);
  c.eq("genus(N2)=genus(L2)", genus_equal(n2, l2), false);
  return c.done();
}

ClaimResult m16_disc() {
  Check c;
  auto m = build_M16();
  c.eq("rank", m.rank(), 15ul);
  c.eq("det", m.det(), -128);
  c.eq("even", m.is_even(), true);
  return c.done();
}

ClaimResult kummer_disc() {
  Check c;
  auto k = build_KummerK();
  c.eq("rank", k.rank(), 16ul);
  c.eq("abs_det", Int(abs(k.det())), 64);
  c.eq("even", k.is_even(), true);
  return c.done();
}

ClaimResult kummer_complement() {
  Check c;
  auto k = build_KummerK();
  auto v = build_V();
  auto u23 = rescale(direct_sum({hyperbolic(), hyperbolic(), hyperbolic()}), 2);
  auto sk = k.signature(), sv = v.signature();
  Signature comp{sv.pos - sk.pos, 0, sv.neg - sk.neg};
  c.eq("complement_signature", comp, u23.signature());
  // complement of a primitive sublattice of a unimodular lattice carries -q
  auto iso = disc_form_isomorphism(discriminant_group(k).negated(), discriminant_group(u23));
  c.eq("disc_form(-q_K)=q_U(2)^3", iso.has_value(), true);
  // even indefinite 2-elementary lattices of rank >= 3 are unique in their genus
  c.eq("two_elementary_uniqueness", is_two_elementary(u23) && u23.rank() >= 3, true);
  c.eq("Q(U(2)^3)~Q(U^3)", quadrics_isomorphic(u23.gram, rescale(u23, 1).gram), true);
  return c.done();
}

ClaimResult e8_a5a1() {
  Check c;
  auto sub = embed_standard("A5+A1 in E8");
  auto t = transcendental_of(sub);
  c.eq("complement_rank", t.rank(), 2ul);
  c.eq("complement_det", t.det(), 12);
  c.eq("primitive", is_primitive(to_int(t.basis)), true);
  c.eq("isometric_to_diag(-2,-6)", definite_isomorphic(t, diagonal_lattice({-2, -6})), true);
  return c.done();
}

ClaimResult e8_a2a1c() {
  Check c;
  auto sub = embed_standard("A2+A1^3 in E8");
  auto t = transcendental_of(sub);
  c.eq("complement_rank", t.rank(), 3ul);
  c.eq("complement_det", t.det(), -24);
  c.eq("isometric_to_A1+A2(2)", definite_isomorphic(t, a2_twice_plus_a1()), true);
  return c.done();
}

ClaimResult m3_hasse() {
  Check c;
  auto g = lambda_gram(3);
  auto inv = invariants(g);
  std::string finite_minus;
  for (const auto& p : inv.hasse_minus)
    if (p != 0) finite_minus += (finite_minus.empty() ? "" : ",") + p.get_str();
  c.eq("finite_places_with_-1", finite_minus.empty() ? "none" : finite_minus, "none");
  for (long p : {2, 3}) c.eq("hasse@" + std::to_string(p), hasse_invariant(g, p), 1);
  c.info("invariants", to_string(inv));
  return c.done();
}

ClaimResult counterexample_hasse(long p) {
  Check c;
  auto g = counterexample_gram();
  auto inv = invariants(g);
  std::string finite_minus;
  for (const auto& q : inv.hasse_minus)
    if (q != 0) finite_minus += (finite_minus.empty() ? "" : ",") + q.get_str();
  c.eq("hasse@" + std::to_string(p), hasse_invariant(g, p), -1);
  c.eq("finite_places_with_-1", finite_minus, "2,7");
  c.eq("same_rank_sig_disc_as_M3",
       inv.rank == 6 && inv.signature == invariants(lambda_gram(3)).signature &&
           inv.disc_class == invariants(lambda_gram(3)).disc_class,
       true);
  c.eq("Q-equivalent_to_M3", rationally_equivalent(g, lambda_gram(3)), false);
  return c.done();
}

ClaimResult t_det() {
  Check c;
  auto t = build_T();
  c.eq("det", t.det(), 36);
  c.eq("even", t.is_even(), true);
  c.eq("signature", t.signature(), "(2,0,2)");
  return c.done();
}

ClaimResult t_aniso(long p) {
  Check c;
  auto t = build_T();
  c.eq("anisotropic_dim@" + std::to_string(p), anisotropic_dimension(t.gram, p), 4ul);
  c.eq("witt_index@" + std::to_string(p), witt_index(t.gram, p), 0ul);
  return c.done();
}

ClaimResult t_glue_isom() {
  Check c;
  Lattice amb = direct_sum({rank_one(-2), rank_one(-2), hyperbolic(), hyperbolic()});
  IntMatrix vecs = IntMatrix::from_columns({{0, 0, 1, -2, -1, 1}, {0, 0, 1, -1, 1, -2}}, 6);
  c.eq("v1.norm", bilinear(amb.gram, vecs.column(0), vecs.column(0)), -6);
  c.eq("v2.norm", bilinear(amb.gram, vecs.column(1), vecs.column(1)), -6);
  c.eq("v1.v2", bilinear(amb.gram, vecs.column(0), vecs.column(1)), 0);
  Lattice tp = orthogonal_complement(amb, vecs, "T'");
  Lattice dg = diagonal_lattice({-2, -2, 6, 6});
  auto m = bounded_isometry(dg, tp, 3);
  c.eq("T'=diag(-2,-2,6,6)", m.has_value(), true);
  if (!m) return c.done();
  RatVector g = to_rat(*m) * RatVector(4, Rat(1, 2));
  Lattice tt = adjoin(tp, {GlueSpec::from_rational(g)}, true);
  c.eq("T''.det", tt.det(), 36);
  auto iso = bounded_isometry(build_T(), tt, 3);
  c.eq("T''=T", iso.has_value(), true);
  return c.done();
}

ClaimResult rank17_disc() {
  Check c;
  auto pic = embed_standard("rank17 in V");
  c.eq("rank", pic.rank(), 17ul);
  c.eq("det", pic.det(), 96);
  c.eq("primitive", is_primitive(to_int(pic.basis)), true);
  auto model = direct_sum({hyperbolic(), root_lattice(RootType::E, 8), root_lattice(RootType::A, 2),
                           diagonal_lattice({-2, -2, -2, -2, -2})});
  c.eq("genus=U+E8+A2+A1^5", genus_equal(pic, model), true);
  return c.done();
}

ClaimResult rank17_trans() {
  Check c;
  auto t = transcendental_of(embed_standard("rank17 in V"));
  auto model = direct_sum({a2_twice_plus_a1(), rank_one(2), rank_one(2)});
  c.eq("rank", t.rank(), 5ul);
  c.eq("signature", t.signature(), "(2,0,3)");
  c.eq("genus_equal", genus_equal(t, model), true);
  c.eq("isometric", bounded_isometry(model, t, 4).has_value(), true);
  return c.done();
}

ClaimResult rank17_lines() {
  Check c;
  auto t = transcendental_of(embed_standard("rank17 in V"));
  c.eq("witt_index@2", witt_index(t.gram, 2), 1ul);
  c.eq("lines_over_Q2", has_k_planes(t.gram, 1, Place(2)), false);
  c.eq("points_over_Q", has_k_planes(t.gram, 0), true);
  auto k = rescale(direct_sum({hyperbolic(), hyperbolic(), hyperbolic()}), 2);
  c.eq("Q(K)_has_planes", has_k_planes(k.gram, 2), true);
  return c.done();
}

ClaimResult lp_hasse() {
  Check c;
  for (long p : {17, 41}) {
    auto l = build_Lp(p);
    c.eq("hasse@" + std::to_string(p), hasse_invariant(l.gram, p), -1);
  }
  return c.done();
}

ClaimResult lp_lines() {
  Check c;
  for (long p : {17, 41}) {
    auto l = build_Lp(p);
    std::string s = std::to_string(p);
    c.eq("witt_index@" + s, witt_index(l.gram, p), 1ul);
    c.eq("lines_over_Q" + s, has_k_planes(l.gram, 1, Place(p)), false);
  }
  return c.done();
}

ClaimResult lp_embeds() {
  Check c;
  for (long p : {17, 41}) {
    auto e = embed_Lp_in_Lambda3(p);
    std::string s = std::to_string(p);
    c.eq("gram_matches@" + s, e.gram == build_Lp(p).gram, true);
    c.eq("primitive@" + s, is_primitive(to_int(e.basis)), true);
    IntVector v = vector_of_norm(4 * p);
    c.eq("U_vector_norm@" + s, bilinear(hyperbolic().gram, v, v), 4 * p);
  }
  return c.done();
}

ClaimResult rank18_det() {
  Check c;
  c.eq("det", det(rank18_gram()), 1156);
  c.eq("det=2^2*17^2", det(rank18_gram()) == 4 * 17 * 17, true);
  return c.done();
}

ClaimResult rank18_diag() {
  Check c;
  auto d = diagonalize(rank18_gram());
  std::string s;
  for (const auto& x : d) s += (s.empty() ? "" : ",") + x.get_str();
  c.info("diagonal_classes", s);
  c.eq("Q-equivalent_to_<-2,-6,17,51>",
       rationally_equivalent(rank18_gram(), IntMatrix::diagonal({-2, -6, 17, 51})), true);
  return c.done();
}

ClaimResult rank18_17() {
  Check c;
  c.eq("witt_index@17", witt_index(rank18_gram(), 17), 0ul);
  c.eq("17_mod_8", 17 % 8, 1);
  return c.done();
}

ClaimResult np_aniso() {
  Check c;
  for (long p : {5, 13}) {
    auto l = build_Np(p, 2);
    std::string s = std::to_string(p);
    c.eq("anisotropic_dim@" + s, anisotropic_dimension(l.gram, p), 4ul);
    // an even full-rank sublattice (2 N_p) has the same quadric
    auto even = make_lattice(IntMatrix::diagonal({4, -8, 4 * p, -8 * p}));
    c.eq("even_sublattice_aniso@" + s, anisotropic_dimension(even.gram, p), 4ul);
    c.eq("signature@" + s, l.signature(), "(2,0,2)");
  }
  return c.done();
}

ClaimResult mh_equiv(long n) {
  Check c;
  c.eq("Q-equivalent", rationally_equivalent(mh_gram(n), lambda_gram(n)), true);
  c.eq("det_MH", det(mh_gram(n)), -2 * (-2 * n) * (-4 * n * n) * (-4));
  return c.done();
}

ClaimResult table1_det(int n) {
  Check c;
  long bad = 0;
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      if (!table1_det_identity(n, a, b)) ++bad;
  c.eq("failures_over_a,b_in_[-3,3]", bad, 0l);
  c.eq("det(a=1,b=1)", det(table1_matrix(n, 1, 1)), table1_det_formula(n, 1, 1));
  return c.done();
}

ClaimResult euler_wtilde() {
  Check c;
  for (int n = 1; n <= 6; ++n)
    c.eq("chi(6n I2), n=" + std::to_string(n), total_euler(repeat(KodairaType::I(2), 6 * n)), 12 * n);
  return c.done();
}

FiberConfig quotient_fibers(int n, bool lambda_nu) {
  int star = n % 2 == 0 ? 2 : (lambda_nu ? 3 : 1);
  return repeat(KodairaType::I(2), 3 * n) + repeat(KodairaType::Istar(0), star);
}

ClaimResult euler_k3_quotient() {
  Check c;
  for (int n : {2, 3}) {
    int chi = total_euler(quotient_fibers(n, false));
    c.eq("chi, n=" + std::to_string(n), chi, 24);
    c.eq("h20, n=" + std::to_string(n), h20_from_euler(chi), 1);
  }
  for (int n = 1; n <= 8; ++n) {
    Rat h = h20_from_euler(total_euler(quotient_fibers(n, false)));
    c.eq("h20=ceil((n-1)/2), n=" + std::to_string(n), h, n / 2);
  }
  c.info("12*ceil((n-1)/2)_at_n=3", 12);
  return c.done("Euler numbers follow the fibre sums, not 12*ceil((n-1)/2)");
}

ClaimResult euler_lambdanu() {
  Check c;
  c.eq("chi, n=3", total_euler(quotient_fibers(3, true)), 36);
  for (int n = 1; n <= 8; ++n) {
    Rat h = h20_from_euler(total_euler(quotient_fibers(n, true)));
    c.eq("h20=floor((n+1)/2), n=" + std::to_string(n), h, (n + 1) / 2);
  }
  for (int n = 1; n <= 6; ++n) {
    // m odd parts: chi = 6(m + n), h20 = (m + n - 2)/2
    for (int m = 0; m <= 4; ++m) {
      if ((m + n) % 2) continue;
      c.eq("h20(m=" + std::to_string(m) + ",n=" + std::to_string(n) + ")",
           h20_from_euler(6 * (m + n)), Rat(Rat(m + n - 2) / 2));
    }
  }
  return c.done();
}

ClaimResult st_l2() {
  Check c;
  auto f = FiberConfig{KodairaType::Istar(0)} + repeat(KodairaType::I(2), 9);
  c.eq("rank", shioda_tate_rank({2, 16, 4}, f), 1);
  c.eq("trivial_disc", trivial_lattice_disc(f), 2048);
  c.eq("euler", total_euler(f), 24);
  return c.done();
}

ClaimResult st_otherfib() {
  Check c;
  auto f = FiberConfig{KodairaType::Istar(2), KodairaType::I(3)} + repeat(KodairaType::I(2), 6);
  c.eq("rank", shioda_tate_rank({2, 16, 2}, f), 0);
  c.eq("reducible_euler", total_euler(f), 23);
  c.eq("I1_fibers", 24 - total_euler(f), 1);
  return c.done();
}

ClaimResult st_rational() {
  Check c;
  auto f = FiberConfig{KodairaType::Istar(0)} + repeat(KodairaType::I(2), 3);
  c.eq("rank", shioda_tate_rank({1, 10, 4}, f), 1);
  c.eq("trivial_disc", trivial_lattice_disc(f), 32);
  c.eq("euler", total_euler(f), 12);
  return c.done();
}

ClaimResult height_l2() {
  Check c;
  SectionIncidence s{1, {{KodairaType::Istar(0), 0}}};
  for (int i = 0; i < 9; ++i) s.fibers.push_back({KodairaType::I(2), 1});
  c.eq("height", height_pairing({2, 16, 4}, s), "3/2");
  return c.done();
}

ClaimResult height_torsion() {
  Check c;
  SectionIncidence s{0, {{KodairaType::Istar(0), 1}}};
  for (int i = 0; i < 9; ++i) s.fibers.push_back({KodairaType::I(2), i < 3 ? 0 : 1});
  c.eq("height", height_pairing({2, 16, 4}, s), 0);
  return c.done();
}

ClaimResult height_rational() {
  Check c;
  auto f = FiberConfig{KodairaType::Istar(0)} + repeat(KodairaType::I(2), 3);
  Rat h = Rat(1 * 4 * 4) / Rat(trivial_lattice_disc(f));
  c.eq("height_via_disc", h, "1/2");
  c.eq("relation", mw_disc_relation(1, f, 4, h).holds, true);
  SectionIncidence s{1, {{KodairaType::Istar(0), 0}}};
  for (int i = 0; i < 3; ++i) s.fibers.push_back({KodairaType::I(2), 1});
  c.info("direct_formula_PO=1", height_pairing({1, 10, 4}, s));
  s.meets_zero_section = 0;
  c.info("direct_formula_PO=0", height_pairing({1, 10, 4}, s));
  return c.done("direct height formula with P.O=1 gives 5/2; P.O=0 reproduces 1/2");
}

ClaimResult mwdisc(const Int& disc, const FiberConfig& f, const Int& tors, const Rat& h,
                   const Int& both) {
  Check c;
  auto r = mw_disc_relation(disc, f, tors, h);
  c.eq("lhs", r.lhs, both);
  c.eq("rhs", r.rhs, both);
  c.eq("holds", r.holds, true);
  return c.done();
}

ClaimResult otherfib_768() {
  Check c;
  auto f = FiberConfig{KodairaType::Istar(2), KodairaType::I(3)} + repeat(KodairaType::I(2), 6);
  Int t = trivial_lattice_disc(f);
  c.eq("trivial_disc", t, 768);
  c.eq("trivial_disc/2^2", Int(t / 4), Int(-build_L2().det()));
  return c.done();
}

ClaimResult l_disc12() {
  Check c;
  auto f = FiberConfig{KodairaType::Istar(4), KodairaType::I(6), KodairaType::I(2)};
  c.eq("trivial_disc", trivial_lattice_disc(f), 48);
  auto l = build_L_sat();
  c.eq("det", l.det(), -12);
  c.eq("det_U+D8+A5+A1", build_U_D8_A5_A1().det(), -48);
  c.eq("index", index_in(build_U_D8_A5_A1(), l), 2);
  c.eq("Q-equivalent_to_U+E8+A5+A1",
       rationally_equivalent(l.gram, direct_sum({hyperbolic(), root_lattice(RootType::E, 8),
                                                 root_lattice(RootType::A, 5),
                                                 root_lattice(RootType::A, 1)})
                                         .gram),
       true);
  return c.done();
}

ClaimResult l_unique() {
  Check c;
  auto base = direct_sum({hyperbolic(), root_lattice(RootType::D, 8), root_lattice(RootType::E, 6)});
  auto all = even_overlattices(base, 0);
  c.info("isotropic_subgroups_including_trivial", all.size());
  // the two spinor classes of D8 give isometric overlattices; classes are counted up to isometry
  bool same_genus = all.size() > 1, index2 = true;
  for (std::size_t k = 1; k < all.size(); ++k) {
    same_genus = same_genus && genus_equal(all[k], build_U_E8_E6());
    index2 = index2 && index_in(base, all[k]) == 2;
  }
  bool unique = nikulin_uniqueness_applies(build_U_E8_E6());
  c.eq("proper_overlattices_genus=U+E8+E6", same_genus, true);
  c.eq("all_index_2", index2, true);
  c.eq("U+E8+E6_unique_in_genus", unique, true);
  c.eq("proper_overlattices_up_to_isometry", same_genus && unique ? 1l : -1l, 1l);
  return c.done();
}

// roots of a negative definite even lattice
std::size_t root_count(const Lattice& l) {
  auto t = theta_counts(l, 2);
  return t.count(2) ? t[2] : 0;
}

ClaimResult l_no_index4() {
  Check c;
  // U is unimodular, so even overlattices of U+X are U plus those of X
  auto x = direct_sum({root_lattice(RootType::D, 8), root_lattice(RootType::A, 5), root_lattice(RootType::A, 1)});
  auto all = even_overlattices(x, 4);
  std::size_t roots = root_count(x), i4 = 0, i4_same_roots = 0;
  for (std::size_t k = 1; k < all.size(); ++k) {
    if (index_in(x, all[k]) != 4) continue;
    ++i4;
    i4_same_roots += root_count(all[k]) == roots;
  }
  c.eq("index_4_overlattices", i4, 0ul);
  c.eq("index_4_overlattices_without_new_roots", i4_same_roots, 0ul);
  return c.done(i4 ? "index-4 even overlattices exist (a D8 spinor class plus the order-2 class of A5+A1 gives "
                     "E8+E6); none keeps the root system"
                   : "");
}

const std::vector<int> kNosecG = {0, 1, 4, 5};  // <0001, 0100>

ClaimResult nosec(int what) {
  Check c;
  auto n1 = build_N1();
  IntVector f = h_minus(kNosecG);
  switch (what) {
    case 0:
      c.eq("F.glue_pairings_even", ambient_divisibility(n1, to_rat(f)) % 2 == 0, true);
      c.eq("divisibility(N1,F)", ambient_divisibility(n1, to_rat(f)), 2);
      break;
    case 1:
      c.eq("F_in_N1", contains(n1, to_rat(f)), true);
      c.eq("F/2_in_N1", contains(n1, half(f)), false);
      break;
    default:
      c.eq("F.F", pair_base(3, f, f), 0);
      c.eq("F.H", pair_base(3, f, unit(16, 0)), 6);
  }
  return c.done();
}

ClaimResult cubics() {
  Check c;
  auto n1 = build_N1(), n2 = build_N2();
  long in_n1 = 0, in_n2 = 0, norm_ok = 0;
  for (int f = 1; f < 16; ++f) {
    std::vector<int> g;
    for (int x = 0; x < 16; ++x)
      if (z2_4_eval(f, x) == 0) g.push_back(x);
    RatVector cg = half(h_minus(g));
    norm_ok += bilinear(base_2d_a1_15(3).gram, cg, cg) == -2;
    in_n1 += contains(n1, cg);
    in_n2 += contains(n2, cg);
  }
  c.eq("order8_subgroups_with_norm_-2", norm_ok, 15l);
  c.eq("C_G_in_N1", in_n1, 15l);
  c.info("C_G_in_N2", in_n2);
  return c.done(in_n1 == 15 ? ""
                            : "(H - sum C)/2 is not in N1 for any order-8 subgroup; it lies in N2");
}

ClaimResult n1works() {
  Check c;
  auto g1 = subgroup({"0001", "0100"}), g2 = subgroup({"0010", "0100"});
  auto g0 = ld_default_subgroup();
  IntVector f1 = h_minus(g1), f2 = h_minus(g2);
  c.eq("F1.F1", pair_base(3, f1, f1), 0);
  c.eq("F2.F2", pair_base(3, f2, f2), 0);
  c.eq("F1.F2", pair_base(3, f1, f2), 4);
  std::vector<int> triple;
  for (int x : g0)
    if (x && std::count(g1.begin(), g1.end(), x) && std::count(g2.begin(), g2.end(), x))
      triple.push_back(x);
  c.eq("G.G1.G2_trivial", triple.empty(), true);
  Lattice m = ld_with(3, LdVariant::subgroup, {f1, f2});
  c.eq("det_N1[F1/2,F2/2]", m.det(), -12);
  IntVector w(16, 0);
  w[0] = 2;
  w[z2_4("0111")] = -2;
  w[z2_4("1011")] = -2;
  for (const char* s : {"1100", "1101", "1110", "1111"}) w[z2_4(s)] = -1;
  c.eq("w.w", pair_base(3, w, w), 0);
  c.eq("w_in_lattice", contains(m, to_rat(w)), true);
  c.eq("w/2_in_lattice", contains(m, half(w)), false);
  c.eq("w_pairs_evenly", ambient_divisibility(m, to_rat(w)) % 2 == 0, true);
  return c.done();
}

ClaimResult n2works() {
  Check c;
  std::vector<IntVector> fs;
  for (const char* a : {"1000", "0100", "0010"}) fs.push_back(h_minus(subgroup({a, "0001"})));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      c.eq("F" + std::to_string(i + 1) + ".F" + std::to_string(j + 1), pair_base(3, fs[i], fs[j]), 4);
  std::vector<IntVector> used;
  Lattice last;
  const long expect[3] = {-48, -12, -3};
  for (std::size_t i = 0; i < 3; ++i) {
    Lattice prev = ld_with(3, LdVariant::all, used);
    c.eq("F" + std::to_string(i + 1) + "_even_in_previous",
         ambient_divisibility(prev, to_rat(fs[i])) % 2 == 0, true);
    used.push_back(fs[i]);
    last = ld_with(3, LdVariant::all, used);
    c.eq("det_step" + std::to_string(i + 1), last.det(), expect[i]);
  }
  c.eq("final_genus=U+E8+E6", genus_equal(last, build_U_E8_E6()), true);
  c.eq("unique_in_genus", nikulin_uniqueness_applies(build_U_E8_E6()), true);
  return c.done();
}

// x = sum of b_i over i outside the subgroup H of <2d'> + M16
IntVector sqrel_x_vec() {
  IntVector x(16, 0);
  auto h = ld_default_subgroup();
  for (int i = 1; i < 16; ++i)
    if (!std::count(h.begin(), h.end(), i)) x[i] = 1;
  return x;
}

ClaimResult sqrel_x() {
  Check c;
  IntVector x = sqrel_x_vec();
  c.eq("x.x", pair_base(7, x, x), -24);
  return c.done();
}

ClaimResult sqrel_8d5() {
  Check c;
  const int i = 4;  // an element outside H
  for (long dp : {7, 11}) {
    std::string s = std::to_string(dp);
    IntVector x = sqrel_x_vec();
    IntVector v(16, 0), lit(16, 0);
    for (std::size_t k = 0; k < 16; ++k) v[k] = -x[k], lit[k] = -x[k];
    v[0] = 2, lit[0] = 2;
    v[i] -= 2;
    lit[i] -= 1;
    c.eq("(2l-2b_i-x)^2@" + s, pair_base(dp, v, v), 8 * (dp - 5));
    c.info("(2l-b_i-x)^2_literal@" + s, pair_base(dp, lit, lit));
    // complete to an isotropic vector with multiples of 2 b_h, h in H
    Lattice l = build_Ld(dp, LdVariant::subgroup);
    std::vector<RatVector> search;
    for (int h : ld_default_subgroup())
      if (h) {
        IntVector e = unit(16, h);
        e[h] = 2;
        search.push_back(to_rat(e));
      }
    auto glue = find_isotropic_glue(l, to_rat(v), 2, search, 3);
    c.eq("isotropic_completion@" + s, glue.has_value(), true);
  }
  return c.done("vector read as 2l - 2b_i - x with i outside H");
}

ClaimResult sqrel_discform() {
  Check c;
  const long p = 3;
  for (long dp : {3, 7}) {
    std::string s = std::to_string(dp);
    Int d = p * p * dp;
    Lattice ld = build_Ld(d, LdVariant::subgroup);
    Lattice target = build_Ld(dp, LdVariant::subgroup);
    // l_d - p sum a_i b_{g_i} with sum a_i^2 = d'
    std::vector<RatVector> search;
    for (int g : {4, 8, 12, 1}) {
      IntVector e(16, 0);
      e[g] = -p;
      search.push_back(to_rat(e));
    }
    auto glue = find_isotropic_glue(ld, to_rat(unit(16, 0)), p, search, 3);
    c.eq("isotropic_l-p*sum@" + s, glue.has_value(), true);
    RatVector lp(16, Rat(0));
    lp[0] = Rat(1, p);
    auto base = base_2d_a1_15(d);
    auto g = ld_glue(LdVariant::subgroup);
    g.push_back(GlueSpec::from_rational(lp));
    Lattice over = adjoin(base, g, true);
    c.eq("det(L_d[l/p])@" + s, over.det(), target.det());
    c.eq("genus(L_d[l/p])=genus(L_d')@" + s, genus_equal(over, target), true);
  }
  return c.done();
}

std::vector<Claim> make_registry() {
  std::vector<Claim> r;
  auto add = [&](std::string id, std::vector<std::string> tags, std::string loc,
                 std::function<ClaimResult()> f) {
    r.push_back(Claim{std::move(id), std::move(tags), std::move(loc), std::move(f)});
  };
  add("L2.even", {"l2", "lattice"}, "L2 built from the D4~ + 9 A1~ fibration is even", l2_even);
  add("L2.sig", {"l2", "lattice"}, "L2 has rank 16 and signature (1,15)", l2_sig);
  add("L2.disc", {"l2", "lattice"}, "disc L2 = -192", l2_disc);
  add("L2.mw", {"l2", "ellsurf"}, "Mordell-Weil of the L2 fibration: height 3/2, torsion (Z/2)^2", l2_mw);
  add("N1N2.disc", {"n1n2", "glue"}, "N1, N2 as index-2 overlattices of <6> + M16 with disc -192", n1n2_disc);
  add("N1N2.distinct", {"n1n2", "k3embed"}, "N1, N2 and L2 lie in three different genera", n1n2_distinct);
  add("M16.disc", {"n1n2", "glue"}, "M16: A1^15 glued by the simplex code, disc -128", m16_disc);
  add("kummer.disc", {"kummer", "glue"}, "Kummer lattice K: rank 16, |disc| 64", kummer_disc);
  add("kummer.complement-genus", {"kummer", "k3embed"}, "complement of K in the K3 lattice is U(2)^3", kummer_complement);
  add("e8.complements.a5a1", {"e8", "k3embed"}, "complement of A5+A1 in E8 is <-2>+<-6>", e8_a5a1);
  add("e8.complements.a2a1c", {"e8", "k3embed"}, "complement of A2+A1^3 in E8 is A1+A2(2)", e8_a2a1c);
  add("m3.hasse.finite", {"hasse", "quadform"}, "Hasse invariants of Lambda(3) trivial at finite primes", m3_hasse);
  add("counterexample.hasse.2", {"hasse", "quadform"}, "<-1,-1,-2,-6,7,7>: Hasse invariant -1 at 2", [] { return counterexample_hasse(2); });
  add("counterexample.hasse.7", {"hasse", "quadform"}, "<-1,-1,-2,-6,7,7>: Hasse invariant -1 at 7", [] { return counterexample_hasse(7); });
  add("T.det", {"rank18", "lattice"}, "rank-4 lattice T of det 36", t_det);
  add("T.aniso2", {"rank18", "quadform"}, "T anisotropic over Q2", [] { return t_aniso(2); });
  add("T.aniso3", {"rank18", "quadform"}, "T anisotropic over Q3", [] { return t_aniso(3); });
  add("T.glue-isom", {"rank18", "k3embed"}, "index-2 gluing of <-2,-2,6,6> inside <-2,-2>+U+U reproduces T", t_glue_isom);
  add("rank17.disc96", {"rank17", "k3embed"}, "rank-17 Picard lattice of disc 96 embedded in the K3 lattice", rank17_disc);
  add("rank17.trans", {"rank17", "k3embed"}, "its transcendental lattice is A1+A2(2)+<2>+<2>", rank17_trans);
  add("rank17.no-q2-lines", {"rank17", "quadform"}, "associated quadric has no lines over Q2", rank17_lines);
  add("Lp.hasse-p", {"lp", "quadform"}, "Lp has Hasse invariant -1 at p", lp_hasse);
  add("Lp.no-lines", {"lp", "quadform"}, "Lp quadric has no lines over Qp", lp_lines);
  add("Lp.embeds", {"lp", "k3embed"}, "Lp embeds primitively via a norm-4p vector of U", lp_embeds);
  add("rank18ex.det1156", {"rank18ex", "lattice"}, "rank-4 Gram matrix of det 2^2 17^2", rank18_det);
  add("rank18ex.diag", {"rank18ex", "quadform"}, "that form is Q-equivalent to <-2,-6,17,51>", rank18_diag);
  add("rank18ex.not-solvable-17", {"rank18ex", "quadform"}, "that form is anisotropic at 17", rank18_17);
  add("Np.aniso-p", {"np", "quadform"}, "x^2 - n y^2 + p z^2 - n p w^2 anisotropic at p", np_aniso);
  for (long n : {1, 2, 3, 6})
    add("mh.equiv-lambda.n=" + std::to_string(n), {"mh", "quadform"}, "M_H(n) Q-equivalent to Lambda(n)", [n] { return mh_equiv(n); });
  for (int n = 1; n <= 4; ++n)
    add("table1.det.n" + std::to_string(n), {"table1", "ellsurf"}, "determinant formula -n 2^(6n) (a+b)^2", [n] { return table1_det(n); });
  add("euler.wtilde", {"euler", "ellsurf"}, "Euler number of W~ is 12n", euler_wtilde);
  add("euler.k3-quotient", {"euler", "ellsurf"}, "Euler numbers and h^{2,0} of the quotient surfaces", euler_k3_quotient);
  add("euler.lambdanu", {"euler", "ellsurf"}, "Euler numbers and h^{2,0} of the second quotient family", euler_lambdanu);
  add("st.l2-rank1", {"st", "ellsurf"}, "Shioda-Tate: L2 fibration has MW rank 1", st_l2);
  add("st.otherfib-rank0", {"st", "ellsurf"}, "Shioda-Tate: D6+A2+A1^6 fibration has MW rank 0", st_otherfib);
  add("st.rational-rank1", {"st", "ellsurf"}, "Shioda-Tate: rational surface fibration has MW rank 1", st_rational);
  add("height.l2-3/2", {"height", "ellsurf"}, "height of a generating section is 3/2", height_l2);
  add("height.torsion-0", {"height", "ellsurf"}, "torsion section has height 0", height_torsion);
  add("height.rational-1/2-via-disc", {"height", "ellsurf"}, "height 1/2 from the discriminant relation", height_rational);
  add("mwdisc.rational", {"mwdisc", "ellsurf"}, "MW/discriminant relation, rational surface", [] {
    return mwdisc(1, FiberConfig{KodairaType::Istar(0)} + repeat(KodairaType::I(2), 3), 4, Rat(1, 2), 16);
  });
  add("mwdisc.l2", {"mwdisc", "ellsurf"}, "MW/discriminant relation, L2 fibration", [] {
    return mwdisc(192, FiberConfig{KodairaType::Istar(0)} + repeat(KodairaType::I(2), 9), 4, Rat(3, 2), 3072);
  });
  add("mwdisc.L", {"mwdisc", "ellsurf"}, "MW/discriminant relation, D8+A5+A1 fibration", [] {
    return mwdisc(12, FiberConfig{KodairaType::Istar(4), KodairaType::I(6), KodairaType::I(2)}, 2, Rat(1), 48);
  });
  add("otherfib.disc768", {"ellsurf"}, "U+D6+A2+A1^6 has |disc| 768", otherfib_768);
  add("L.disc12", {"L", "glue"}, "Pic of the D8+A5+A1 fibration has disc -12", l_disc12);
  add("L.overlattice-unique", {"L", "glue"}, "U+D8+E6 has one proper even overlattice, U+E8+E6", l_unique);
  add("L.no-index4", {"L", "glue"}, "U+D8+A5+A1 has no index-4 even overlattice", l_no_index4);
  add("nosec.F-even", {"nosec", "glue"}, "F pairs evenly with N1", [] { return nosec(0); });
  add("nosec.F-notdiv", {"nosec", "glue"}, "F is not divisible by 2 in N1", [] { return nosec(1); });
  add("nosec.F-isotropic", {"nosec", "glue"}, "F = H - sum over G of C_i is isotropic", [] { return nosec(2); });
  add("cubics.CG-membership", {"cubics", "glue"}, "(H - sum over G of C_i)/2 lies in N1 for order-8 G", cubics);
  add("n1works.isotropic-class", {"n1works", "glue"}, "isotropic class 2H - 2C_0111 - 2C_1011 - ... is primitive", n1works);
  add("n2works.chain-48-12-3", {"n2works", "glue"}, "adjoining three half-fibres to N2 gives discs -48, -12, -3", n2works);
  add("sqrel.x-norm-24", {"sqrel", "glue"}, "sum of C_i off H has norm -24", sqrel_x);
  add("sqrel.8dminus5", {"sqrel", "glue"}, "2l - 2C_i - x has norm 8(d'-5)", sqrel_8d5);
  add("sqrel.discform-p2", {"sqrel", "glue"}, "L_{p^2 d'}[l/p] is in the genus of L_{d'}", sqrel_discform);
  std::sort(r.begin(), r.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
  return r;
}

}  // namespace

const std::vector<Claim>& registry() {
  static const std::vector<Claim> r = make_registry();
  return r;
}

const Claim* find_claim(const std::string& id) {
  for (const auto& c : registry())
    if (c.id == id) return &c;
  return nullptr;
}

ClaimResult run_claim(const std::string& id) {
  const Claim* c = find_claim(id);
  if (!c) throw Error("unknown claim '" + id + "'");
  auto t0 = std::chrono::steady_clock::now();
  ClaimResult r;
  try {
    r = c->run();
  } catch (const std::exception& e) {
    r.status = ClaimStatus::fail;
    r.note = std::string("error: ") + e.what();
  }
  r.id = id;
  r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0);
  return r;
}

std::vector<ClaimResult> run_all(const std::optional<std::string>& tag) {
  std::vector<ClaimResult> out;
  for (const auto& c : registry()) {
    if (tag && std::find(c.tags.begin(), c.tags.end(), *tag) == c.tags.end()) continue;
    out.push_back(run_claim(c.id));
  }
  return out;
}

bool all_passed(const std::vector<ClaimResult>& r) {
  return std::all_of(r.begin(), r.end(), [](const auto& x) { return x.status == ClaimStatus::pass; });
}

std::string human_report(const std::vector<ClaimResult>& rs, bool with_timing) {
  std::ostringstream os;
  std::size_t pass = 0;
  for (const auto& r : rs) {
    pass += r.status == ClaimStatus::pass;
    os << (r.status == ClaimStatus::pass ? "PASS " : r.status == ClaimStatus::fail ? "FAIL " : "SKIP ")
       << r.id;
    if (with_timing) os << "  (" << r.elapsed.count() / 1000 << " ms)";
    os << "\n";
    if (r.status != ClaimStatus::pass) {
      std::map<std::string, std::string> exp(r.expected.begin(), r.expected.end());
      for (const auto& [k, v] : r.computed) {
        os << "    " << k << ": " << v;
        if (exp.count(k) && exp[k] != v) os << "  (expected " << exp[k] << ")";
        os << "\n";
      }
    }
    if (!r.note.empty()) os << "    note: " << r.note << "\n";
  }
  os << pass << "/" << rs.size() << " claims pass\n";
  return os.str();
}

std::string json_report(const std::vector<ClaimResult>& rs) {
  auto sorted = rs;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& r : sorted) {
    nlohmann::ordered_json o;
    o["id"] = r.id;
    o["status"] = to_string(r.status);
    const Claim* c = find_claim(r.id);
    o["location"] = c ? c->location : "";
    o["computed"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.computed) o["computed"][k] = v;
    o["expected"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.expected) o["expected"][k] = v;
    if (!r.note.empty()) o["note"] = r.note;
    j.push_back(o);
  }
  return j.dump(2) + "\n";
}

}  // namespace k3lat
