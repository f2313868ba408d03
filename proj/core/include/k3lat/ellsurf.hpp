#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3lat/exact.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

struct KodairaType {
  enum class Kind { I, Istar, II, III, IV, IVstar, IIIstar, IIstar };
  Kind kind = Kind::I;
  int n = 0;  // index for I_n and I_n*

  static KodairaType I(int n) { return {Kind::I, n}; }
  static KodairaType Istar(int n) { return {Kind::Istar, n}; }
  static KodairaType of(Kind k) { return {k, 0}; }
  static KodairaType parse(const std::string& s);

  // Number of irreducible components.
  int components() const;
  std::string str() const;
  bool operator==(const KodairaType&) const = default;
};

using FiberConfig = std::vector<KodairaType>;
FiberConfig repeat(const KodairaType& t, int count);
FiberConfig operator+(FiberConfig a, const FiberConfig& b);

struct AdeLabel {
  RootType type;
  int rank;
  bool operator==(const AdeLabel&) const = default;
};
std::optional<AdeLabel> kodaira_to_ade(const KodairaType& t);
std::string to_string(const AdeLabel& a);
// |det| of the root lattice.
Int root_disc(const AdeLabel& a);

int euler_number(const KodairaType& t);
int total_euler(const FiberConfig& c);
Rat h20_from_euler(int chi);

struct SurfaceData {
  int chi_O = 2;
  int rho = 0;
  int torsion_order = 1;
};

int shioda_tate_rank(const SurfaceData& s, const FiberConfig& c);
Int trivial_lattice_disc(const FiberConfig& c);

// Component labels: 0 is the identity component everywhere.  I_n: i in 0..n-1
// around the cycle.  I_b*: 1 near, 2 and 3 far.  III, III*: 1.  IV, IV*: 1, 2.
struct SectionIncidence {
  Int meets_zero_section = 0;
  std::vector<std::pair<KodairaType, int>> fibers;
};

Rat height_contribution(const KodairaType& t, int component);
Rat height_pairing(const SurfaceData& s, const SectionIncidence& inc);

struct MwDiscCheck {
  bool holds = false;
  Rat lhs, rhs;  // |disc NS| * tors^2 and trivdisc * height_det
};
MwDiscCheck mw_disc_relation(const Int& disc_ns, const FiberConfig& c, const Int& torsion_order,
                             const Rat& height_det);

// Rows S, G, G', L, F, A_1..A_6n.
IntMatrix table1_matrix(int n, const Int& a, const Int& b);
Int table1_det_formula(int n, const Int& a, const Int& b);
bool table1_det_identity(int n, const Int& a, const Int& b);

}  // namespace k3lat
