#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3lat/lattice.hpp"

namespace k3lat {

// The rational vector `vector / denominator`, in coordinates of the base.
struct GlueSpec {
  IntVector vector;
  Int denominator = 2;

  RatVector as_rational() const;
  static GlueSpec from_rational(const RatVector& v);
};

// Overlattice generated by `base` and the glue vectors.  The result has
// `base` as its ambient; basis columns are in base coordinates.
Lattice adjoin(const Lattice& base, const std::vector<GlueSpec>& glue, bool require_even = true);

// One overlattice per isotropic subgroup of order <= max_index (0 = no bound),
// the trivial subgroup first.  Input must be even and nondegenerate.
std::vector<Lattice> even_overlattices(const Lattice& l, const Int& max_index,
                                       std::size_t max_group_order = 1u << 14);

// Searches target + sum c_i s_i (|c_i| <= bound) for a norm-0 vector of l that
// pairs into d Z with all of l.  Vectors are in ambient coordinates when l has
// an ambient, else in own coordinates.  The result is in own coordinates.
std::optional<GlueSpec> find_isotropic_glue(const Lattice& l, const RatVector& target,
                                            const Int& d, const std::vector<RatVector>& search,
                                            long bound);

// (Z/2)^4 labels: bit string "abcd" <-> 8a+4b+2c+d.
int z2_4(const std::string& bits);
// f(x) for the linear functional with mask f.
int z2_4_eval(int f, int x);
// Elements of the subgroup generated by the given elements.
std::vector<int> z2_4_span(const std::vector<int>& gens);

enum class LdVariant { subgroup, all };

// Fixed order-4 subgroup for the subgroup variant: first two components zero.
std::vector<int> ld_default_subgroup();

// Coordinates of L_d, M16, N1, N2 are those of <2d> + A1^15 (index 0 is the
// polarization l, index i in 1..15 is b_i for the group element i).
Lattice base_2d_a1_15(const Int& d);
std::vector<GlueSpec> m16_glue(std::size_t offset);
Lattice build_M16();
Lattice build_Ld(const Int& d, LdVariant v);
Lattice build_N1();
Lattice build_N2();
Lattice build_KummerK();

// L2 pieces.  Base coordinates: 0 F, 1 O, 2..5 D4 (2,4,5 reduced leaves d1,d2,d3;
// 3 the double component), 6..14 the nine A1 components, 15 the section s.
struct L2Data {
  Lattice trivial;     // U + D4 + A1^9 in (F, O) coordinates
  Lattice with_section;
  RatVector torsion[2];
  Lattice l2;
};
L2Data build_L2_data();

Lattice build_L0();
Lattice build_L2();
Lattice build_Lambda(const Int& n);
Lattice build_U_E8_E6();
Lattice build_U_D8_A5_A1();
Lattice build_L_sat();
Lattice build_V();
Lattice build_Np(const Int& p, const Int& n);
Lattice build_Lp(const Int& p);
Lattice build_T();

// Named constructor, e.g. "L2", "Lambda(3)", "Np(5,2)", "L_d(7,subgroup)".
Lattice build_named(const std::string& name);
std::vector<std::string> named_lattice_names();

}  // namespace k3lat
