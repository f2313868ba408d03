// One line per acceptance criterion.  Exit status is 0 unless a criterion
// fails somewhere other than the statements known to be false as written
// (listed in kKnownFalse with the value that refutes them).

#include <iostream>
#include <map>
#include <set>

#include "k3lat/claims.hpp"
#include "oracles.hpp"

using namespace k3lat;

namespace {

struct Outcome {
  bool pass = true;
  bool unexpected = false;
  std::vector<std::string> detail;
};

const std::map<std::string, std::string> kKnownFalse = {
    {"cubics.CG-membership", "C_G_in_N1"},
    {"L.no-index4", "index_4_overlattices"},
};

void claims(Outcome& o, const std::vector<std::string>& ids) {
  for (const auto& id : ids) {
    ClaimResult r = run_claim(id);
    // formulas checked in a corrected reading also show the value as printed
    for (const auto& [k, v] : r.computed)
      if (k.find("_literal") != std::string::npos) o.detail.push_back(id + ": " + k + " = " + v);
    if (r.status == ClaimStatus::pass) continue;
    o.pass = false;
    std::map<std::string, std::string> got(r.computed.begin(), r.computed.end());
    std::set<std::string> bad;
    for (const auto& [k, v] : r.expected)
      if (!got.count(k) || got[k] != v) bad.insert(k);
    auto known = kKnownFalse.find(id);
    bool explained = known != kKnownFalse.end() && bad.size() == 1 && bad.count(known->second);
    if (!explained) o.unexpected = true;
    for (const auto& k : bad) {
      std::string want;
      for (const auto& [ek, ev] : r.expected)
        if (ek == k) want = ev;
      o.detail.push_back(id + ": " + k + " = " + (got.count(k) ? got[k] : "?") + ", expected " + want +
                         (explained ? " (false as stated)" : ""));
    }
    if (!r.note.empty() && r.note.rfind("error:", 0) == 0) o.detail.push_back(id + ": " + r.note);
  }
}

void property(Outcome& o, const std::string& what, bool ok) {
  if (ok) return;
  o.pass = o.pass && ok;
  o.unexpected = true;
  o.detail.push_back(what);
}

Outcome property_suites() {
  Outcome o;
  std::mt19937_64 rng(20241019);

  // Hilbert reciprocity on 200 random pairs
  {
    std::uniform_int_distribution<long> d(-100000, 100000);
    bool ok = true;
    for (int done = 0; done < 200;) {
      long a = d(rng), b = d(rng);
      if (!a || !b) continue;
      int prod = hilbert_symbol(a, b, kInfinity);
      std::set<Int> ps = {2};
      for (const auto& p : prime_divisors(a)) ps.insert(p);
      for (const auto& p : prime_divisors(b)) ps.insert(p);
      for (const auto& p : ps) prod *= hilbert_symbol(a, b, p);
      ok = ok && prod == 1;
      ++done;
    }
    property(o, "Hilbert reciprocity", ok);
  }
  // Hilbert symbol against the mod p^k search
  {
    bool ok = true;
    for (long p : {2, 3, 5, 7, 11, 13})
      for (long a = -30; a <= 30 && ok; ++a)
        for (long b = -30; b <= 30 && ok; ++b)
          if (a && b) ok = hilbert_symbol(a, b, p) == oracle::hilbert_by_search(a, b, p);
    property(o, "hilbert_symbol vs brute force", ok);
  }
  // det(overlattice) * index^2 = det(base) on random glue
  {
    std::uniform_int_distribution<int> bit(0, 1);
    bool ok = true;
    for (int t = 0; t < 60; ++t) {
      std::size_t n = 4 + t % 6;
      Lattice base = make_lattice(IntMatrix::diagonal(IntVector(n, Int(-4))));
      IntVector c(n);
      bool nz = false;
      for (auto& x : c) nz = (x = bit(rng)) != 0 || nz;
      if (!nz) continue;
      Lattice over = adjoin(base, {GlueSpec{c, 2}}, false);
      ok = ok && base.det() == over.det() * 4;
    }
    property(o, "glue det * index^2", ok);
  }
  // SNF reconstruction
  {
    std::uniform_int_distribution<long> d(-12, 12);
    bool ok = true;
    for (int t = 0; t < 100; ++t) {
      std::size_t r = 1 + t % 5, c = 1 + (t / 5) % 5;
      IntMatrix m(r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
      auto s = smith_normal_form(m);
      ok = ok && s.u * m * s.v == s.d;
    }
    property(o, "SNF u*m*v = d", ok);
  }
  // discriminant-form axioms on the named lattices
  {
    bool ok = true;
    for (const auto& name : {"L0", "L2", "M16", "N1", "N2", "KummerK", "U_E8_E6", "U_D8_A5_A1", "L_sat", "V", "T",
                             "Lambda(3)", "Np(5,2)", "Lp(17)"}) {
      Lattice l = build_named(name);
      auto f = discriminant_group(l);
      auto els = f.elements();
      Rat two = l.is_even() ? 2 : 1;
      std::size_t pairs = 0;
      for (std::size_t i = 0; i < els.size() && pairs < 5000; ++i)
        for (std::size_t j = i; j < els.size() && pairs < 5000; ++j, ++pairs)
          ok = ok && f.q_of(f.add(els[i], els[j])) ==
                         mod_rat(f.q_of(els[i]) + f.q_of(els[j]) + 2 * f.b_of(els[i], els[j]), two);
    }
    property(o, "disc-form axioms", ok);
  }
  // definite_isomorphic vs exhaustive search, rank 3, entries <= 6
  {
    std::vector<IntMatrix> forms;
    while (forms.size() < 16) {
      IntMatrix g = oracle::random_symmetric(rng, 3, -6, 6);
      if (oracle::positive_definite(g)) forms.push_back(g);
    }
    bool ok = true;
    for (std::size_t i = 0; i < forms.size(); ++i) {
      IntMatrix h = oracle::congruent(forms[i], oracle::random_unimodular(rng, 3, 6));
      ok = ok && definite_isomorphic(make_lattice(forms[i]), make_lattice(h)) &&
           oracle::isometric_by_search(forms[i], h);
      for (std::size_t j = i + 1; j < forms.size(); ++j)
        if (det(forms[i]) == det(forms[j]))
          ok = ok && definite_isomorphic(make_lattice(forms[i]), make_lattice(forms[j])) ==
                         oracle::isometric_by_search(forms[i], forms[j]);
    }
    property(o, "definite_isomorphic vs exhaustive", ok);
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    std::string title;
    std::vector<std::string> ids;
  };
  std::vector<Criterion> list = {
      {"L2: det -192, even, signature (1,15)", {"L2.disc", "L2.even", "L2.sig"}},
      {"M16 det -128; N1, N2 det -192; N1, N2, L2 pairwise distinct", {"M16.disc", "N1N2.disc", "N1N2.distinct"}},
      {"Kummer K: rank 16, |det| 64, complement genus U(2)^3", {"kummer.disc", "kummer.complement-genus"}},
      {"E8 complements: A5+A1 -> <-2,-6>, A2+A1^3 -> A1+A2(2)", {"e8.complements.a5a1", "e8.complements.a2a1c"}},
      {"Hasse: Lambda(3) trivial at finite primes; <-1,-1,-2,-6,7,7> nontrivial exactly at 2, 7",
       {"m3.hasse.finite", "counterexample.hasse.2", "counterexample.hasse.7"}},
      {"T: det 36, anisotropic over Q2 and Q3, glue construction isometric to T",
       {"T.det", "T.aniso2", "T.aniso3", "T.glue-isom"}},
      {"rank 17: disc 96, transcendental A1+A2(2)+<2>+<2>, Witt index 1 at 2",
       {"rank17.disc96", "rank17.trans", "rank17.no-q2-lines"}},
      {"Lp, p = 17, 41: Hasse -1 at p, Witt index 1, embedding into Lambda(3)",
       {"Lp.hasse-p", "Lp.no-lines", "Lp.embeds"}},
      {"rank 18 example: det 1156, classes (-2,-6,17,51), anisotropic at 17",
       {"rank18ex.det1156", "rank18ex.diag", "rank18ex.not-solvable-17"}},
      {"M_H(n) Q-equivalent to Lambda(n), n = 1, 2, 3, 6",
       {"mh.equiv-lambda.n=1", "mh.equiv-lambda.n=2", "mh.equiv-lambda.n=3", "mh.equiv-lambda.n=6"}},
      {"table 1 determinant formula, n = 1..4, a, b in -3..3",
       {"table1.det.n1", "table1.det.n2", "table1.det.n3", "table1.det.n4"}},
      {"fibrations: Shioda-Tate ranks, trivial discs, heights, MW/disc relation",
       {"st.l2-rank1", "st.otherfib-rank0", "st.rational-rank1", "otherfib.disc768", "L.disc12", "height.l2-3/2",
        "height.torsion-0", "height.rational-1/2-via-disc", "mwdisc.rational", "mwdisc.l2", "mwdisc.L"}},
      {"overlattices: none of index 4 over U+D8+A5+A1; U+D8+E6 -> U+E8+E6; chain -48, -12, -3",
       {"L.no-index4", "L.overlattice-unique", "n2works.chain-48-12-3"}},
      {"class arithmetic: F even and primitive, C_G in N1, isotropic class, x^2 = -24, 8(d'-5)",
       {"nosec.F-even", "nosec.F-notdiv", "nosec.F-isotropic", "cubics.CG-membership", "n1works.isotropic-class",
        "sqrel.x-norm-24", "sqrel.8dminus5", "sqrel.discform-p2"}},
  };
  bool unexpected = false;
  int passed = 0, k = 0;
  auto print = [&](const std::string& title, const Outcome& o) {
    ++k;
    passed += o.pass;
    unexpected = unexpected || o.unexpected;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << k << ": " << title << "\n";
    for (const auto& d : o.detail) std::cout << "        " << d << "\n";
  };
  for (const auto& c : list) {
    Outcome o;
    claims(o, c.ids);
    print(c.title, o);
  }
  print("property suites (reciprocity, Hilbert oracle, glue index, SNF, disc forms, definite isometry)",
        property_suites());
  std::cout << passed << "/" << k << " criteria pass";
  if (!unexpected && passed < k) std::cout << "; remaining failures are statements that are false as written";
  std::cout << "\n";
  return unexpected ? 1 : 0;
}
