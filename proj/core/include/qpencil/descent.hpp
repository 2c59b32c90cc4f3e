#pragma once

/// @file descent.hpp
/// Constructions attached to rational points and odd-degree divisors on the
/// hyperelliptic curve z^2 = f(x, y): the resolvent element x - T, explicit
/// common isotropic subspaces of an extended pencil on L + K^2, integral
/// orbit representatives, the 4-adic coefficient rescaling bridge, and the
/// norm condition test N(alpha) = f0 * (nonzero rational square).

#include <optional>
#include <vector>

#include "qpencil/ideal.hpp"
#include "qpencil/orbits.hpp"

namespace qpencil {

/// A point (x0 : y0 : z0) with z0^2 = f(x0, y0) and (x0, y0) != (0, 0);
/// z0 = 0 marks a Weierstrass point.
struct CurvePoint {
  Rat x0, y0, z0;
};

/// Validates the curve equation and builds the point; throws otherwise.
CurvePoint curve_point_make(const EtaleAlgebra& L, const Rat& x0, const Rat& y0,
                            const Rat& z0);

inline bool curve_point_is_weierstrass(const CurvePoint& q) { return q.z0 == 0; }

/// A semi-reduced divisor in Mumford form: P monic squarefree of odd degree
/// m with deg R < m and P | R^2 - f(x, 1). Divisors supported at a root of
/// g are admitted only in degree 1 and carry `shares_root_with_g`;
/// `integral` records whether both polynomials have integer coefficients.
struct MumfordDivisor {
  QPoly P;
  QPoly R;
  bool shares_root_with_g = false;
  bool integral = false;
};

/// Checks every clause of the Mumford shape, throwing a distinct
/// domain_error per violation, and returns the divisor with its flags set.
MumfordDivisor validate_mumford(const EtaleAlgebra& L, const QPoly& P, const QPoly& R);

/// The resolvent element of an affine point (y0 != 0), after normalizing to
/// y0 = 1: x0 - theta when z0 != 0, and h1(theta) - h0(theta) at a
/// Weierstrass point, where h0 = t - x0 and h1 = f(t, 1) / h0.
AlgElement x_minus_T(const EtaleAlgebra& L, const CurvePoint& q);

/// The resolvent element P(theta) of a divisor. A divisor sharing a root
/// with g must carry the degree-1 flag (then the Weierstrass point branch
/// is used); otherwise this throws.
AlgElement x_minus_T(const EtaleAlgebra& L, const MumfordDivisor& d);

/// One basis vector of a subspace of L + K^2.
struct PlaneVector {
  AlgElement lambda;  ///< component in L
  Rat a, b;           ///< the two K coordinates
};

/// A list of g + 1 vectors spanning a common isotropic subspace of both
/// bilinear forms of an extended pencil on L + K^2.
struct IsotropicPlane {
  std::vector<PlaneVector> basis;
};

/// The extended pencil of alpha on L + K^2 (dimension n + 2): the L-block
/// Gram entries are the theta^{n-1} coefficients of alpha * t^{i+j} resp.
/// alpha * t^{i+j+1} mod g, and the K^2 tails are [[1,0],[0,0]] and
/// [[0,1],[1,0]]. Its invariant binary form is (N(alpha)/f0) * f(x,y) y^2.
QPencil extended_pencil(const EtaleAlgebra& L, const AlgElement& alpha);

/// Coordinate columns ((n + 2) x k) of plane vectors: power coordinates of
/// lambda followed by a and b.
QMat plane_columns(const EtaleAlgebra& L, const IsotropicPlane& plane);

/// True iff every pair of columns pairs to zero under both forms.
bool plane_is_isotropic(const QPencil& pencil, const QMat& columns);

struct SolublePlane {
  QPencil pencil;       ///< extended pencil of the point's resolvent element
  IsotropicPlane plane; ///< g + 1 vectors, isotropy verified exactly
};

/// Builds the extended pencil of x_minus_T(q) together with an exactly
/// isotropic (g+1)-plane whose K^2 components are forced by isotropy. The
/// construction is verified before returning. With y0 normalized to 1 the
/// invariant form is (z0/f0)^2 f y^2 off the Weierstrass locus and
/// (f'(x0)/f0)^2 f y^2 at a Weierstrass point.
SolublePlane soluble_plane_from_point(const EtaleAlgebra& L, const CurvePoint& q);

/// Both oriented representatives (s > 0 and s < 0) of one projective datum;
/// the triples differ only in the sign of s.
struct SignedTriples {
  OrbitTriple plus;
  OrbitTriple minus;
};

/// Integral orbit of the point (0 : 1 : c) on z^2 = f with f_n = c^2:
/// alpha = theta and I the integer span of {c, theta, ..., theta^{(n-2)/2},
/// zeta_{n/2}, ..., zeta_{n-1}}, with |s| = |c| / |f0|^{(n-2)/2}. Requires
/// integral f, even n >= 4, and nonzero c. Both triples validate.
SignedTriples one_point_integral_orbit(const EtaleAlgebra& L, const Rat& c);

/// Integral orbit of an odd-degree divisor: alpha = P(theta) and
/// I = R(theta) R_f + P(theta) I((n-3-m)/2), with |s| = |Res(P, R)| /
/// |f0|^{(n-3+m)/2}. Requires integral f, even n >= 4, integral (P, R),
/// odd m <= g + 1, and no shared root with g. Both triples validate.
SignedTriples integral_orbit_from_divisor(const EtaleAlgebra& L, const MumfordDivisor& d);

/// The form with coefficients f_i / 16^{n-i}; throws when some coefficient
/// is not divisible (f must be integral).
QForm scaling_bridge_reduce(const QForm& f);

/// One rescaling step (A, B) -> (4A, B): multiplies coefficient i of the
/// invariant form by 4^{n-i}, so two steps recover f from a pencil whose
/// invariant form is scaling_bridge_reduce(f).
QPencil scaling_bridge_step(const QPencil& p);

enum class NormConditionStatus {
  Witness,                 ///< an element with N(alpha)/f0 a nonzero square
  AbsentWithinBound,       ///< exhaustive scan found none (normal outcome)
  RefusedNegativeDefinite, ///< f negative definite: no real orbit, not scanned
};

struct NormConditionResult {
  NormConditionStatus status = NormConditionStatus::AbsentWithinBound;
  std::optional<AlgElement> witness;
  Rat root;  ///< the r > 0 with N(witness) = f0 r^2 when a witness exists
};

/// The r > 0 with N(alpha) = f0 r^2, when N(alpha)/f0 is a nonzero
/// rational square; nullopt otherwise (including zero divisors).
std::optional<Rat> norm_condition_verify(const EtaleAlgebra& L, const AlgElement& alpha);

/// Scans alpha = a_0 + a_1 theta + ... + a_{n-1} theta^{n-1} over integer
/// coordinates |a_i| <= bound, in lexicographic order, for a witness.
/// Refuses without scanning when f is negative definite over the reals.
NormConditionResult norm_condition_search(const EtaleAlgebra& L, long bound);

}  // namespace qpencil
