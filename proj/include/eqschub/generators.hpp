#pragma once

#include "eqschub/parameter_sequence.hpp"

namespace eqschub {

// Shifted presentation generators over the equivariant coefficient ring.
// With t the equivariant specialization of the shape,
//   tau_h(s, j): s-fold downward shift of h_j,
//     tau_h(s, j) = tau_h(s-1, j) + (t_{j+p-s} - t_{1-s}) * tau_h(s-1, j-1),
//   tau_e(s, i): s-fold upward shift of e_i,
//     tau_e(s, i) = tau_e(s-1, i) + (t_s - t_{p-i+s+1}) * tau_e(s-1, i-1),
// with tau_h(0, j) = h_j (zero outside 0..m-p) and tau_e(0, i) = e_i (zero
// outside 0..p); index 0 gives the constant 1.
poly tau_h(int s, int j, const grassmann_shape& shape);
poly tau_e(int s, int i, const grassmann_shape& shape);

// Determinantal class representatives:
//   giambelli_h(lam) = det[ tau_h(j-1, lam_i + j - i) ]_{p x p},
//   giambelli_e(lam) = det[ tau_e(j-1, lam'_i + j - i) ]_{cols x cols},
// the latter accepting any cols >= max(m-p, lam_1); cols = 0 selects that
// minimum.  Out-of-rectangle first parts are allowed in giambelli_e.
poly giambelli_h(const partition& lam, const grassmann_shape& shape);
poly giambelli_e(const partition& lam, const grassmann_shape& shape, int cols = 0);

// Relation sources: the grade-k determinants in the opposite family,
//   cap_E(k) = det[ tau_h(j-1, 1 + j - i) ]_{k x k}   (h-generators),
//   cap_H(k) = det[ tau_e(j-1, 1 + j - i) ]_{k x k}   (e-generators).
poly cap_E(int k, const grassmann_shape& shape);
poly cap_H(int k, const grassmann_shape& shape);

} // namespace eqschub
