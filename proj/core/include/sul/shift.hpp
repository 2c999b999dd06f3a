#pragma once

// Dimension-shift maps between R^{d+2l} (radial functions) and R^d
// (functions carrying a degree-l harmonic factor).

#include <string_view>

#include "sul/reps.hpp"
#include "sul/weights.hpp"

namespace sul {

enum class ShiftDirection { Drop, Lift };

std::string_view to_string(ShiftDirection dir);

/// (r(l) + l) / 2 with r(l) = l mod 2; exact integer arithmetic.
int shift_sign_exponent(int ell);

/// s (-1)^{(r(l) + l)/2}
int shifted_sign(int s, int ell);

struct ShiftRecord {
  int source_dim = 0;
  int target_dim = 0;
  int ell = 0;
  int sign_in = 1;
  int sign_out = 1;
  ShiftDirection direction = ShiftDirection::Drop;
};

/// Drop: s in d + 2l becomes s' = shifted_sign(s, l) in d.
ShiftRecord drop_record(int source_dim, int ell, int s);
/// Lift: s' in d becomes s in d + 2l (the inverse law; the factor is an involution).
ShiftRecord lift_record(int source_dim, int ell, int s_prime);

/// f(y) = u(|y|) in R^{d+2l}  ->  H(x) u(|x|) in R^d. Coefficients are kept.
GaussianMixture drop(const GaussianMixture& f, const HarmonicFactor& h);
LaguerreFunction drop(const LaguerreFunction& f, const HarmonicFactor& h);

/// x_1...x_l u(|x|) in R^d  ->  u(|y|) in R^{d+2l}.
GaussianMixture lift(const GaussianMixture& f);

/// Weight on R^d obtained from the radial |y|^gamma on R^{d+2l}: H |x|^gamma,
/// or sgn(H) |x|^{gamma+l} when `sign_wrap` (the Q = |x|^l sgn(H) / H choice).
Weight drop_weight(const Weight& radial, const HarmonicFactor& h, bool sign_wrap);

/// Radial weight |y|^{gamma_r} on R^{d+2l} matching H |x|^{gamma_r} on R^d.
Weight lift_weight(const Weight& w);

/// int_{R^{d+2l}} P g#  /  int_{R^d} P~ f  =  (omega_2 / 2)^l  with omega_2 = 4 pi.
double transport_factor(int ell);

/// +1 if H is even under x_k -> -x_k, -1 if odd.
int axis_parity(const HarmonicFactor& h, int axis);

struct SymmetrizeResult {
  bool zero = false;  // odd part vanishes identically
  GaussianMixture result;  // f(x) - f(x with x_k negated)
};

SymmetrizeResult symmetrize_odd(const GaussianMixture& f, int axis);

/// True when f is odd in axes 0..l-1 and even in the rest (COORDINATE_PRODUCT
/// layout). ONE counts as the l = 0 case.
bool has_coordinate_parity(const GaussianMixture& f);

struct RadializeInfo {
  bool radial = false;
  bool average_vanishes = false;
};

RadializeInfo radialize_check(const GaussianMixture& f);

}  // namespace sul
