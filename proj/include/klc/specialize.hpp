/*
  The modules at u = 1 compared with tensor products of Z S_n-modules.
  V = Z{x_1..x_n} with S_n permuting the x_i. Vectors of V (x) E and
  V (x) V (x) E are keyed by (i, gamma) -> i * |E| + gamma and
  (i, j, gamma) -> (i * n + j) * |E| + gamma, 0-based.
*/
#pragma once

#include <map>

#include "klc/check.hpp"
#include "klc/induce.hpp"
#include "klc/tensor_square.hpp"

namespace klc {

using IntVec = std::map<int, Integer>;

IntVec at_u1(const SparseVec& v);
SparseVec lift(const IntVec& v);
// w acting on a vector of E at u = 1
IntVec act_u1(const WGraph& E, const Perm& w, const IntVec& v);

// Z S_n (x)_{S_{n-1}} E = V (x) E through g (x) e -> (g (x) 1) (x) g e, for
// J = J_{n-1} or J'_{n-1}: both composites are the identity and the map is equivariant
CheckResult check_gk_iso(const WGraph& E, const ParabolicSet& J);

// E2 at u = 1 is V (x) V (x) E with the non-reduced part on x_k (x) x_k, and the
// quotient onto F2 matches the projection onto T^2_red V (x) E (finite square only)
CheckResult check_vve_split(const SquareModule& m);

// the degree one affine module at u = 1 is x-linear: (a_k pi, gamma) <-> x_k (x) c_k gamma
CheckResult check_affine_poly(const WGraph& E);

}  // namespace klc
