#include "k3lat/ellsurf.hpp"

namespace k3lat {

using K = KodairaType::Kind;

KodairaType KodairaType::parse(const std::string& s0) {
  std::string s = s0;
  bool star = !s.empty() && s.back() == '*';
  if (star) s.pop_back();
  if (s == "II") return of(star ? K::IIstar : K::II);
  if (s == "III") return of(star ? K::IIIstar : K::III);
  if (s == "IV") return of(star ? K::IVstar : K::IV);
  if (s.size() >= 2 && s[0] == 'I') {
    std::string num = s.substr(1);
    if (num[0] == '_') num = num.substr(1);
    for (char c : num)
      if (c < '0' || c > '9') throw Error("bad Kodaira symbol '" + s0 + "'");
    if (num.empty()) throw Error("bad Kodaira symbol '" + s0 + "'");
    int n = std::stoi(num);
    return star ? Istar(n) : I(n);
  }
  throw Error("bad Kodaira symbol '" + s0 + "'");
}

int KodairaType::components() const {
  switch (kind) {
    case K::I: return n == 0 ? 1 : n;
    case K::Istar: return n + 5;
    case K::II: return 1;
    case K::III: return 2;
    case K::IV: return 3;
    case K::IVstar: return 7;
    case K::IIIstar: return 8;
    case K::IIstar: return 9;
  }
  return 1;
}

std::string KodairaType::str() const {
  switch (kind) {
    case K::I: return "I" + std::to_string(n);
    case K::Istar: return "I" + std::to_string(n) + "*";
    case K::II: return "II";
    case K::III: return "III";
    case K::IV: return "IV";
    case K::IVstar: return "IV*";
    case K::IIIstar: return "III*";
    case K::IIstar: return "II*";
  }
  return "?";
}

FiberConfig repeat(const KodairaType& t, int count) { return FiberConfig(count, t); }

FiberConfig operator+(FiberConfig a, const FiberConfig& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::optional<AdeLabel> kodaira_to_ade(const KodairaType& t) {
  switch (t.kind) {
    case K::I:
      if (t.n < 2) return std::nullopt;
      return AdeLabel{RootType::A, t.n - 1};
    case K::Istar: return AdeLabel{RootType::D, t.n + 4};
    case K::II: return std::nullopt;
    case K::III: return AdeLabel{RootType::A, 1};
    case K::IV: return AdeLabel{RootType::A, 2};
    case K::IVstar: return AdeLabel{RootType::E, 6};
    case K::IIIstar: return AdeLabel{RootType::E, 7};
    case K::IIstar: return AdeLabel{RootType::E, 8};
  }
  return std::nullopt;
}

std::string to_string(const AdeLabel& a) {
  const char* p = a.type == RootType::A ? "A" : a.type == RootType::D ? "D" : "E";
  return p + std::to_string(a.rank);
}

Int root_disc(const AdeLabel& a) {
  switch (a.type) {
    case RootType::A: return a.rank + 1;
    case RootType::D: return 4;
    case RootType::E: return 9 - a.rank;
  }
  return 1;
}

int euler_number(const KodairaType& t) {
  switch (t.kind) {
    case K::I: return t.n;
    case K::Istar: return t.n + 6;
    case K::II: return 2;
    case K::III: return 3;
    case K::IV: return 4;
    case K::IVstar: return 8;
    case K::IIIstar: return 9;
    case K::IIstar: return 10;
  }
  return 0;
}

int total_euler(const FiberConfig& c) {
  int s = 0;
  for (const auto& t : c) s += euler_number(t);
  return s;
}

Rat h20_from_euler(int chi) {
  if (chi % 12 != 0) throw Error("Euler number " + std::to_string(chi) + " is not a multiple of 12");
  return Rat(chi / 12 - 1);
}

int shioda_tate_rank(const SurfaceData& s, const FiberConfig& c) {
  int fibral = 0;
  for (const auto& t : c) fibral += t.components() - 1;
  int r = s.rho - 2 - fibral;
  if (r < 0) throw Error("Picard number too small for the fiber configuration");
  return r;
}

Int trivial_lattice_disc(const FiberConfig& c) {
  Int d = 1;
  for (const auto& t : c)
    if (auto a = kodaira_to_ade(t)) d *= root_disc(*a);
  return d;
}

Rat height_contribution(const KodairaType& t, int i) {
  if (i < 0 || i >= t.components()) throw Error("component index out of range for " + t.str());
  if (i == 0) return 0;
  switch (t.kind) {
    case K::I: {
      Rat r(i * (t.n - i), t.n);
      r.canonicalize();
      return r;
    }
    case K::III: return Rat(1, 2);
    case K::IV: return Rat(2, 3);
    case K::Istar:
      if (i == 1 || t.n == 0) {
        if (i <= 3) return 1;
      } else if (i <= 3) {
        Rat r(t.n, 4);
        r.canonicalize();
        return 1 + r;
      }
      break;
    case K::IVstar:
      if (i <= 2) return Rat(4, 3);
      break;
    case K::IIIstar:
      if (i == 1) return Rat(3, 2);
      break;
    default:
      break;
  }
  throw Error("no height contribution for component " + std::to_string(i) + " of " + t.str());
}

Rat height_pairing(const SurfaceData& s, const SectionIncidence& inc) {
  Rat h = 2 * s.chi_O + 2 * Rat(inc.meets_zero_section);
  for (const auto& [t, i] : inc.fibers) h -= height_contribution(t, i);
  h.canonicalize();
  return h;
}

MwDiscCheck mw_disc_relation(const Int& disc_ns, const FiberConfig& c, const Int& tors,
                             const Rat& height_det) {
  MwDiscCheck m;
  m.lhs = Rat(abs(disc_ns) * tors * tors);
  m.rhs = Rat(trivial_lattice_disc(c)) * height_det;
  m.rhs.canonicalize();
  m.holds = m.lhs == m.rhs;
  return m;
}

IntMatrix table1_matrix(int n, const Int& a, const Int& b) {
  if (n < 1) throw Error("table1 needs n >= 1");
  const int size = 5 + 6 * n;
  IntMatrix m(size, size);
  const Int top[5][5] = {{-n, n, n, n, 1}, {n, -n, n, a, 1}, {n, n, -n, b, 1},
                         {n, a, b, -n, 1}, {1, 1, 1, 1, 0}};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) m(i, j) = top[i][j];
  for (int k = 5; k < size; ++k) {
    for (int r = 1; r <= 3; ++r) m(r, k) = m(k, r) = 1;
    m(k, k) = -2;
  }
  return m;
}

Int table1_det_formula(int n, const Int& a, const Int& b) {
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, 6 * n);
  return -n * p * (a + b) * (a + b);
}

bool table1_det_identity(int n, const Int& a, const Int& b) {
  return det(table1_matrix(n, a, b)) == table1_det_formula(n, a, b);
}

}  // namespace k3lat
