#pragma once

/// @file localglobal.hpp
/// Local analysis of hyperelliptic equations y^2 = f(x) with integral f:
/// reduction-type classification at odd primes, a sufficient test for
/// solubility over Q_p, the quadratic-twist quadruple {f, -f, 2f, -2f}
/// with its mod-8 coefficient family, the 2-adic split-node model, and a
/// machine-checked hypothesis transcript whose conclusion is that the four
/// twists' 2^infinity-Selmer ranks have odd sum.
///
/// The transcript certifies hypotheses only. It never computes a Selmer
/// group; the final implication is imported as a theorem and the artifact
/// records which of its hypotheses were verified on the given input.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpencil/binary_form.hpp"
#include "qpencil/poly.hpp"
#include "qpencil/prime_field.hpp"

namespace qpencil {

/// How y^2 = f(x) reduces at an odd prime, in the order the classifier
/// tries them (first match wins):
///   GoodWithRoot          f mod p squarefree of full degree with a rational
///                         root: good reduction, and the root lifts to a
///                         point (so every quadratic twist is soluble).
///   SplitSemistableToric1 f mod p = (x-a)^2 h with h squarefree, h(a) a
///                         nonzero square, and h possessing a rational root:
///                         a split node, semistable reduction with
///                         one-dimensional toric part, twists all soluble.
///   SquareTimesUnit       f mod p is a unit times a perfect square; point
///                         counts give no conclusion here.
///   SolubleByWeil         none of the above shapes, not a unit times a
///                         square, and p > 4 n^2, so the smooth part of the
///                         reduced curve has more than n rational points
///                         and one of them lifts.
///   Other                 no conclusion (includes zero reduction).
enum class ReductionKind {
  GoodWithRoot,
  SplitSemistableToric1,
  SolubleByWeil,
  SquareTimesUnit,
  Other,
};

/// Stable display name ("GoodWithRoot", ...).
const char* reduction_kind_name(ReductionKind kind);

/// Classification result with enough witness data to re-derive it from
/// scratch (see reduction_witness_check).
struct ReductionClass {
  std::uint64_t p = 0;
  ReductionKind kind = ReductionKind::Other;
  int degree = 0;  ///< degree of f over Q

  /// GoodWithRoot: the smallest rational root of f mod p.
  /// SplitSemistableToric1: the node abscissa a.
  std::optional<std::uint64_t> root;
  /// SplitSemistableToric1: h with f == (x-a)^2 h mod p.
  /// SquareTimesUnit: monic h with f == unit * h^2 mod p.
  std::optional<FpPoly> cofactor;
  /// SquareTimesUnit: the leading unit.
  std::optional<FpElem> unit;
  /// SplitSemistableToric1: the smallest rational root of h.
  std::optional<std::uint64_t> cofactor_root;
  /// SplitSemistableToric1: some r with r^2 == h(a) mod p.
  std::optional<FpElem> cofactor_value_sqrt;
};

/// Classifies the reduction of y^2 = f(x) at an odd prime p, trying the
/// kinds in the documented order. f must be integral and nonzero of degree
/// >= 1; p must be an odd prime. A binary form is dehomogenized first.
ReductionClass reduction_classify_odd(const QPoly& f, std::uint64_t p);
ReductionClass reduction_classify_odd(const QForm& f, std::uint64_t p);

/// Recomputes every witness recorded in rc against f and p from scratch:
/// GoodWithRoot roots satisfy f(a) == 0 with gcd(f, f') constant mod p;
/// SplitSemistableToric1 witnesses satisfy f == (x-a)^2 h, h(a) == r^2 != 0,
/// h squarefree, h(root) == 0; SquareTimesUnit satisfies f == unit * h^2;
/// SolubleByWeil re-checks p > 4 n^2 and that f mod p is not a unit times
/// a square. Returns false on any mismatch.
bool reduction_witness_check(const QPoly& f, const ReductionClass& rc);

/// Sufficient test for C(Q_p) != {} at odd p: true when the reduction class
/// already guarantees a point (GoodWithRoot, SplitSemistableToric1, or
/// SolubleByWeil), and otherwise after a bounded search over x mod p^k,
/// k <= 3, for a value f(x) that is zero or has even p-valuation with
/// square unit part (such a value is a square in Q_p, so the point lifts).
/// Returns nullopt when nothing is found; it never proves insolubility.
std::optional<bool> local_soluble_good_odd(const QPoly& f, std::uint64_t p);

/// The quadruple of quadratic twists of y^2 = f(x) and the mod-8
/// coefficient test gating the parity transcript.
struct TwistFamily {
  QPoly base;
  std::array<QPoly, 4> twists;  ///< f, -f, 2f, -2f
  bool mod8_family = false;     ///< recomputed from base, deterministic
  /// Attached exactly when requested and mod8_family holds.
  std::string certificate;
};

/// True iff, writing n = deg f and g = floor((n-1)/2), the integer
/// coefficients of f satisfy a_2 == 1, a_{2g+1} == 4 and every other
/// a_i == 0 modulo 8.
bool mod8_family_check(const QPoly& f);

/// Builds the four twists {f, -f, 2f, -2f}. f must be integral, squarefree
/// over Q, of degree >= 3. When check_congruences is set and the mod-8 test
/// passes, the statement certificate for the family is attached.
TwistFamily twist_family(const QPoly& f, bool check_congruences);

/// Result of reducing y^2 = f(x) through y -> 2y + x, division by 4, and
/// reduction mod 2, together with a transcript of what was checked.
struct TwoAdicModel {
  /// True iff (f - x^2)/4 == x^{2g+1} mod 2, i.e. the reduced curve is
  /// y^2 + x y = x^{2g+1}, which has a split node at (0,0) (tangent cone
  /// y(y+x), distinct rational factors over F_2) and no other singular
  /// point.
  bool is_split_node_model = false;
  QPoly reduced_rhs;  ///< m = (f - x^2)/4 over Z
  std::vector<std::string> transcript;
};

/// Substitutes y -> 2y + x in y^2 = f(x) and divides by 4, yielding
/// y^2 + x y = m(x) with m = (f - x^2)/4, then reduces mod 2 and compares
/// against x^{2g+1}. f must be integral of odd degree n = 2g+1 >= 3 (the
/// even-degree variant is rejected), and f - x^2 must be divisible by 4
/// coefficientwise for the substitution to stay integral.
TwoAdicModel two_adic_split_node_check(const QPoly& f);

/// One machine-checked hypothesis in a parity transcript.
struct ParityHypothesis {
  std::string name;
  bool verified = false;
  std::string witness;
};

/// Hypothesis transcript for the odd-parity conclusion about the twist
/// quadruple. issued is true exactly when every hypothesis verified; only
/// then are conclusion and statement nonempty. Otherwise refusal names the
/// first failed hypothesis.
struct ParityOutcome {
  QPoly form;
  std::vector<ParityHypothesis> hypotheses;
  bool issued = false;
  std::string conclusion;  ///< "rank-sum-odd" when issued
  std::string statement;   ///< the full sentence when issued
  std::string refusal;     ///< first failed hypothesis name otherwise
};

/// Checks, in order: (1) "mod-8-congruence" - f is squarefree over Q and
/// lies in the mod-8 family; (2) "two-adic-split-node" - the reduced model
/// is y^2 + x y = x^{2g+1} with its split node; (3) "two-adic-point" - that
/// model has odd degree 2g+1 with a single nonsingular point at infinity,
/// which lifts 2-adically, so the curve has a Q_2-point; (4)
/// "odd-primes-split" - the quadratic characters of -1, 2, -2 multiply to
/// the trivial character of 4, so every odd prime has a square in
/// {-1, 2, -2} and splits in Q(i, sqrt 2) (re-verified for all odd primes
/// below 1000). When all hold, the transcript is issued with conclusion
/// "rank-sum-odd": the 2^infinity-Selmer ranks of the Jacobians of
/// y^2 = f, -f, 2f, -2f sum to an odd number. A transcript is never issued
/// when the split-node check fails. f must be integral.
ParityOutcome parity_certificate(const QPoly& f);

}  // namespace qpencil
