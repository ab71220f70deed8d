#pragma once

#include <vector>

#include "knots/diagram.hpp"
#include "knots/laurent.hpp"
#include "knots/stategraph.hpp"

namespace knots {

enum class BracketEngine { oracle, statesum, fast };

struct BracketOptions {
  int max_enum_crossings = 20;   // state/subgraph enumeration cap
  int max_sweep_width = 14;      // open strand-end cap for the fast engine
  long long max_cable_crossings = 20000;
  BracketEngine engine = BracketEngine::fast;
};

/// Unnormalized bracket [D]: every closed circle, including free loops,
/// contributes one factor of (-A^2 - A^-2); [empty diagram] = 1.
Laurent bracket_unnormalized(const Diagram& d, BracketEngine engine,
                             const BracketOptions& opts = {});

/// Kauffman bracket with <unknot> = 1 (the unnormalized value divided by
/// one circle weight).  The three engines agree exactly.
Laurent bracket_oracle(const Diagram& d, const BracketOptions& opts = {});
Laurent bracket_statesum(const Diagram& d, const BracketOptions& opts = {});
Laurent bracket_fast(const Diagram& d, const BracketOptions& opts = {});
Laurent kauffman_bracket(const Diagram& d, const BracketOptions& opts = {});

/// Jones polynomial as a Laurent polynomial in t with exponents stored in
/// quarter-t units (so multi-component links with half-integer powers stay
/// exact): (-A)^{-3w} <D> with A = t^{-1/4}.
Laurent jones(const Diagram& d, const BracketOptions& opts = {});

/// Coefficients of the Chebyshev-like basis polynomial S_n(x), lowest
/// degree first: S_0 = 1, S_1 = x, S_{n+1} = x S_n - S_{n-1}.
std::vector<long long> chebyshev_expansion(int n);

/// Extreme degrees and coefficients of a quarter-t-unit polynomial.
/// beta / beta_prime are the literal coefficients one full t-degree inside
/// the extremes and may be zero when the polynomial has a gap there.
struct DegreeInfo {
  int j_quarter = 0;        // 4 * (maximum t-degree)
  int jprime_quarter = 0;   // 4 * (minimum t-degree)
  BigInt alpha, beta, alpha_prime, beta_prime;
};

DegreeInfo degrees_and_coeffs(const Laurent& p_quarter_t);

struct ColoredJonesResult {
  int n = 0;
  Laurent poly;  // quarter-t units
  DegreeInfo degrees;
};

/// Reduced colored Jones polynomial via Chebyshev expansion over
/// blackboard cables, normalized so that every diagram of the unknot gives
/// the constant 1 and n = 1 reproduces jones().
ColoredJonesResult colored_jones(const Diagram& d, int n, const BracketOptions& opts = {});

struct StableCoefficients {
  bool a_adequate = false;
  bool b_adequate = false;
  BigInt beta_prime_pred;  // |stable penultimate coefficient| = 1 - chi(G'_A)
  BigInt beta_pred;        // |stable second coefficient| = 1 - chi(G'_B)
  bool verified_n2_n3 = false;
  bool verification_ran = false;
};

/// Predicted stable coefficients from the reduced state graphs, optionally
/// verified against the n = 2 and n = 3 colored Jones computations.
StableCoefficients stable_coefficients(const Diagram& d, const BracketOptions& opts = {},
                                       bool verify = true);

/// S_n evaluated at the circle weight; the unknot value used for
/// normalization in colored_jones.
Laurent chebyshev_at_circle_weight(int n);

}  // namespace knots
