#pragma once

#include "qparity/exact_matrix.hpp"
#include "qparity/rational.hpp"
#include "qparity/series.hpp"

namespace qparity {

/// Coefficient-extraction matrix of the endomorphism induced by a 3-variable
/// series F on homogeneous degree-S polynomials:
///   R_S(a,b) = [w1^a w2^{S-a} w3^b](F),   0 <= a,b <= S.
/// Requires F truncated to box order >= S.
ExactMatrix build_RS(const TruncatedSeries& f, int S);

/// Verifies that the induced map commutes with multiplication by (u+v) on
/// every degree-S basis monomial, comparing both sides exactly through the
/// degree-(S+1) coefficients (uses R_S and R_{S+1}).
bool commute_check(const TruncatedSeries& f, int S);

/// (1-w1) dF/dw1 + (1-w2) dF/dw2 + w3(1-w3) dF/dw3 - (1+w3) F,
/// truncated to box order N-1 (the region where the derivative data is
/// complete).
TruncatedSeries lde_residual(const TruncatedSeries& f);

/// Coefficient recursion equivalent to the commutation property:
///   (a+1)R(a+1,b,c) + (b+1)R(a,b+1,c) = c R(a,b,c-1) + (a+b-c+1) R(a,b,c)
/// checked for all a+b+c+1 <= N.
bool recursion_check(const TruncatedSeries& f, int N);

struct FtoHResult {
  TruncatedSeries h;     // 2-variable (x,y): the z = 0 slice
  int z_clear_order;     // largest M <= N with all z-coefficients at
                         // x_deg + z_deg <= M equal to zero
  bool z_independent;    // z_clear_order reached the full exact region
};

/// Applies the inverse isomorphism
///   H(x,y,z) = (1-z)^2/(1+y-z) * F(x+z-xz, z, y/(1+y-z))
/// and reports the z = 0 slice together with how far the z-dependence
/// vanishes. F is special exactly when the image is z-free.
FtoHResult f_to_h(const TruncatedSeries& f);

/// F(w1,w2,w3) = 1/((1-w2)(1-w3)) * H((w1-w2)/(1-w2), w3(1-w2)/(1-w3)),
/// truncated to box order `order` (requires H.order() >= order). Exact for
/// coefficients with w1_deg + w2_deg <= order.
TruncatedSeries h_to_f(const TruncatedSeries& h, int order);

/// e_n = sum_b (-1)^{n-b} binom(n,b) R_n(n,b)
///     = [w1^n w3^n]((1-w3)^n F(w1,0,w3)).
BigRational eigen_from_ev(const TruncatedSeries& f, int n);

/// e_n = [x^n y^n](H).
BigRational eigen_from_h(const TruncatedSeries& h, int n);

/// Verifies prod_{n=0}^{S} (R_S - e_n I) = 0 exactly, with e_n taken from
/// the eigenvalue formula. Requires F special (checked via the coefficient
/// recursion first; throws std::invalid_argument otherwise).
bool annihilation_check(const TruncatedSeries& f, int S);

/// F of the identity map: (1-w2)^{-1} (1-w1 w3)^{-1}.
TruncatedSeries identity_f(int order);
/// H of the identity map: (1+y-xy)^{-1}.
TruncatedSeries identity_h(int order);

struct SpecialityWitness {
  bool commute = false;       // commute_check for all S < order
  bool lde_zero = false;      // lde_residual vanishes
  bool recursion = false;     // recursion_check through the full box
  bool z_independent = false; // f_to_h image z-free on its exact region
  int order = 0;
  bool special() const { return commute && lde_zero && recursion && z_independent; }
  bool criteria_agree() const {
    return commute == lde_zero && lde_zero == recursion &&
           recursion == z_independent;
  }
};

/// Runs all four specialness criteria at the truncation order of F.
SpecialityWitness verify_speciality(const TruncatedSeries& f);

/// A series together with its H-transform and the verified criteria.
struct SpecialSeriesPair {
  TruncatedSeries f;
  TruncatedSeries h;
  int order;
  SpecialityWitness witness;
};
SpecialSeriesPair make_special_pair(const TruncatedSeries& f);

}  // namespace qparity
