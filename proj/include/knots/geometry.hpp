#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knots/bracket.hpp"
#include "knots/diagram.hpp"
#include "knots/stategraph.hpp"

namespace knots {

/// Volumes of the regular ideal tetrahedron and octahedron at reporting
/// precision; every bound below is a multiple of one of these.
inline constexpr double kIdealTetrahedronVolume = 1.0149;
inline constexpr double kIdealOctahedronVolume = 3.6638;

struct SlopeReport {
  int b_surface_a = 0;  // -2 * (negative crossings)
  int b_surface_b = 0;  // +2 * (positive crossings)
  bool a_adequate = false;
  bool b_adequate = false;
  struct Contribution {
    int crossing = 0;
    int sign = 0;
    int to_a = 0;  // -2 at negative crossings
    int to_b = 0;  // +2 at positive crossings
  };
  std::vector<Contribution> contributions;
  // finite-n degree samples (quarter-t units; 4*j(n) is the quarter degree)
  std::vector<int> j_quarter;
  std::vector<int> jprime_quarter;
};

/// Boundary slopes of the two state surfaces of a knot diagram, with
/// optional finite-n colored Jones degree samples for n = 1..trend_n.
SlopeReport boundary_slopes(const Diagram& d, int trend_n = 0, const BracketOptions& opts = {});

struct FiberednessReport {
  bool ga_tree = false;
  bool fiber_sa = false;
  bool beta_prime_zero = false;
};

FiberednessReport fiberedness(const Diagram& d);

struct EssentialSurfaceReport {
  bool sa_essential = false;
  bool sb_essential = false;
  bool sa_orientable = false;
  bool sb_orientable = false;
  int chi_sa = 0;
  int chi_sb = 0;
};

EssentialSurfaceReport essential_surfaces(const Diagram& d);

struct MontesinosHint {
  int positive_tangles = 0;
  int negative_tangles = 0;
};

struct VolumeHints {
  bool positive_braid = false;
  std::optional<MontesinosHint> montesinos;
};

struct VolumeBound {
  std::string name;
  std::optional<double> lower;
  std::optional<double> upper;
  std::vector<std::string> hypotheses;
  std::string status;  // "emitted" or "precondition-failed: <hypothesis>"
};

struct VolumeBoundReport {
  bool assumes_hyperbolic = true;
  int chi_minus_gpa = 0;
  int chi_minus_gpb = 0;
  std::string ec_zero = "unknown";  // "proved-zero" | "unknown"
  std::optional<int> guts_chi_minus;
  int twist_number = 0;
  int num_link_components = 0;
  std::vector<VolumeBound> bounds;
};

/// Apply every volume-bound formula whose hypotheses can be verified from
/// the diagram (plus caller-supplied presentation hints).  Hyperbolicity is
/// an input assumption recorded in the report, never decided here.
VolumeBoundReport volume_bounds(const Diagram& d, const VolumeHints& hints = {});

// Formula-level helpers (pure arithmetic, exposed for direct checks).
double octahedral_guts_lower(int chi_minus);
std::pair<double, double> alternating_volume_bounds(int twist_number);
std::pair<double, double> positive_braid_volume_bounds(int twist_number);
std::pair<double, double> montesinos_volume_bounds(int twist_number, int num_components);
std::pair<double, double> positive_braid_stable_bounds(const BigInt& beta_prime_abs);
std::pair<double, double> montesinos_stable_bounds(const BigInt& beta_abs,
                                                   const BigInt& beta_prime_abs,
                                                   int num_components);

/// Growth sequence 2*pi*log|J^n(e^{2*pi*i/n})|/n for n = 2..N.
std::vector<double> kashaev_probe(const Diagram& d, int n_max, const BracketOptions& opts = {});

}  // namespace knots
