#include "knots/geometry.hpp"

#include <cmath>

#include "knots/errors.hpp"
#include "knots/polyhedra.hpp"

namespace knots {

SlopeReport boundary_slopes(const Diagram& d, int trend_n, const BracketOptions& opts) {
  if (d.num_components != 1) throw not_a_knot("boundary slopes are defined for knot diagrams");
  SlopeReport r;
  AdequacyReport adq = adequacy(d);
  r.a_adequate = adq.a_adequate;
  r.b_adequate = adq.b_adequate;
  for (int x = 0; x < d.crossing_count(); x++) {
    SlopeReport::Contribution c;
    c.crossing = x;
    c.sign = d.signs[x];
    c.to_a = c.sign < 0 ? -2 : 0;
    c.to_b = c.sign > 0 ? +2 : 0;
    r.contributions.push_back(c);
    r.b_surface_a += c.to_a;
    r.b_surface_b += c.to_b;
  }
  for (int n = 1; n <= trend_n; n++) {
    ColoredJonesResult cj = colored_jones(d, n, opts);
    r.j_quarter.push_back(cj.degrees.j_quarter);
    r.jprime_quarter.push_back(cj.degrees.jprime_quarter);
  }
  return r;
}

FiberednessReport fiberedness(const Diagram& d) {
  AdequacyReport adq = adequacy(d);
  if (!adq.a_adequate) throw not_adequate("fiberedness criterion needs an A-adequate diagram");
  FiberednessReport r;
  GraphStats gpa = graph_stats(reduce(build_ribbon_graph(d, all_a_state(d))));
  r.ga_tree = gpa.tree;
  r.fiber_sa = gpa.tree;
  r.beta_prime_zero = (1 - gpa.chi) == 0;
  return r;
}

EssentialSurfaceReport essential_surfaces(const Diagram& d) {
  EssentialSurfaceReport r;
  const int c = d.crossing_count();
  StateStructure sa = build_state_structure(d, all_a_state(d));
  StateStructure sb = build_state_structure(d, all_b_state(d));
  r.sa_essential = !sa.ribbon.has_loop();
  r.sb_essential = !sb.ribbon.has_loop();
  r.sa_orientable = graph_stats(sa.ribbon).bipartite;
  r.sb_orientable = graph_stats(sb.ribbon).bipartite;
  r.chi_sa = sa.circle_count() + d.free_loops() - c;
  r.chi_sb = sb.circle_count() + d.free_loops() - c;
  return r;
}

double octahedral_guts_lower(int chi_minus) { return kIdealOctahedronVolume * chi_minus; }

std::pair<double, double> alternating_volume_bounds(int twist_number) {
  double lower = std::max(kIdealOctahedronVolume / 2.0 * (twist_number - 2), 0.0);
  double upper = 10.0 * kIdealTetrahedronVolume * (twist_number - 1);
  return {lower, upper};
}

std::pair<double, double> positive_braid_volume_bounds(int twist_number) {
  double lower = 2.0 * kIdealOctahedronVolume / 3.0 * twist_number;
  double upper = 10.0 * kIdealTetrahedronVolume * (twist_number - 1);
  return {lower, upper};
}

std::pair<double, double> montesinos_volume_bounds(int twist_number, int num_components) {
  double lower = kIdealOctahedronVolume / 4.0 * (twist_number - num_components);
  double upper = 2.0 * kIdealOctahedronVolume * twist_number;
  return {lower, upper};
}

std::pair<double, double> positive_braid_stable_bounds(const BigInt& beta_prime_abs) {
  double b = beta_prime_abs.convert_to<double>();
  double lower = kIdealOctahedronVolume * (b - 1);
  double upper = 15.0 * kIdealTetrahedronVolume * (b - 1) - 10.0 * kIdealTetrahedronVolume;
  return {lower, upper};
}

std::pair<double, double> montesinos_stable_bounds(const BigInt& beta_abs,
                                                   const BigInt& beta_prime_abs,
                                                   int num_components) {
  double b = beta_abs.convert_to<double>();
  double bp = beta_prime_abs.convert_to<double>();
  double lower = kIdealOctahedronVolume * (std::max(b, bp) - 1);
  double upper = 4.0 * kIdealOctahedronVolume * (b + bp - 2) +
                 2.0 * kIdealOctahedronVolume * num_components;
  return {lower, upper};
}

namespace {

VolumeBound make_bound(std::string name, std::vector<std::string> hyps,
                       std::optional<double> lower, std::optional<double> upper,
                       const std::string& failed) {
  VolumeBound b;
  b.name = std::move(name);
  b.hypotheses = std::move(hyps);
  if (!failed.empty()) {
    b.status = "precondition-failed: " + failed;
    return b;
  }
  if (lower && upper && *lower >= *upper) {
    b.status = "precondition-failed: degenerate bounds (lower >= upper)";
    return b;
  }
  b.lower = lower;
  b.upper = upper;
  b.status = "emitted";
  return b;
}

}  // namespace

VolumeBoundReport volume_bounds(const Diagram& d, const VolumeHints& hints) {
  if (d.num_projection_components != 1)
    throw precondition_unverifiable("volume bounds need a connected diagram");
  VolumeBoundReport rep;
  Classification cls = classify(d);
  AdequacyReport adq = adequacy(d);
  TwistPartition tp = twist_partition(d);
  rep.twist_number = tp.twist_number;
  rep.num_link_components = d.num_components;
  GraphStats gpa = graph_stats(reduce(build_ribbon_graph(d, all_a_state(d))));
  GraphStats gpb = graph_stats(reduce(build_ribbon_graph(d, all_b_state(d))));
  rep.chi_minus_gpa = gpa.chi_minus;
  rep.chi_minus_gpb = gpb.chi_minus;

  // (a) octahedral guts bound, available when every 2-edge loop of the
  // state graph lives in a single twist region
  {
    std::string failed;
    if (!cls.prime)
      failed = "diagram is not prime";
    else if (!adq.a_adequate)
      failed = "diagram is not A-adequate";
    else {
      TwoEdgeLoopReport loops = two_edge_loops(build_ribbon_graph(d, all_a_state(d)), tp);
      if (!loops.all_same_twist_region)
        failed = "a 2-edge loop spans distinct twist regions";
    }
    if (failed.empty()) {
      rep.ec_zero = "proved-zero";
      rep.guts_chi_minus = gpa.chi_minus;
    }
    rep.bounds.push_back(make_bound(
        "octahedral-guts",
        {"prime", "A-adequate", "2-edge loops confined to twist regions", "hyperbolic"},
        octahedral_guts_lower(gpa.chi_minus), std::nullopt, failed));
  }

  // (b) two-sided alternating bound in the twist number
  {
    std::string failed;
    if (!cls.alternating)
      failed = "diagram is not alternating";
    else if (!cls.prime)
      failed = "diagram is not prime";
    else if (!tp.twist_reduced)
      failed = "diagram is not twist-reduced";
    auto [lo, hi] = alternating_volume_bounds(rep.twist_number);
    rep.bounds.push_back(make_bound("alternating-twist",
                                    {"alternating", "prime", "twist-reduced", "hyperbolic"},
                                    lo, hi, failed));
  }

  // (c) positive braid closure (hinted)
  bool positive_braid_ok = false;
  {
    std::string failed;
    if (!hints.positive_braid) {
      failed = "positive-braid presentation not hinted";
    } else if (d.negative_crossings() != 0) {
      failed = "diagram has negative crossings";
    } else {
      for (const auto& cls2 : tp.classes)
        if (cls2.size() < 3) {
          failed = "a twist region has fewer than 3 crossings";
          break;
        }
    }
    positive_braid_ok = failed.empty();
    auto [lo, hi] = positive_braid_volume_bounds(rep.twist_number);
    rep.bounds.push_back(make_bound(
        "positive-braid-twist",
        {"positive braid closure (hint)", ">=3 crossings per twist region", "hyperbolic"},
        lo, hi, failed));
  }

  // (d) Montesinos with enough tangles of both signs (hinted)
  bool montesinos_ok = false;
  {
    std::string failed;
    if (!hints.montesinos)
      failed = "Montesinos presentation not hinted";
    else if (hints.montesinos->positive_tangles < 3 || hints.montesinos->negative_tangles < 3)
      failed = "needs at least three positive and three negative tangles";
    montesinos_ok = failed.empty();
    auto [lo, hi] = montesinos_volume_bounds(rep.twist_number, rep.num_link_components);
    rep.bounds.push_back(make_bound(
        "montesinos-twist",
        {"reduced Montesinos diagram (hint)", ">=3 positive and >=3 negative tangles",
         "hyperbolic"},
        lo, hi, failed));
  }

  // (e) stable-coefficient forms
  {
    std::string failed;
    if (!positive_braid_ok)
      failed = "positive-braid hypotheses not established";
    else if (!adq.a_adequate)
      failed = "diagram is not A-adequate";
    BigInt bp = 1 - gpa.chi;
    auto [lo, hi] = positive_braid_stable_bounds(bp);
    rep.bounds.push_back(make_bound(
        "positive-braid-stable-coefficient",
        {"positive braid closure (hint)", ">=3 crossings per twist region", "A-adequate",
         "hyperbolic"},
        lo, hi, failed));
  }
  {
    std::string failed;
    if (!montesinos_ok)
      failed = "Montesinos hypotheses not established";
    else if (!adq.adequate)
      failed = "diagram is not adequate on both sides";
    BigInt b = 1 - gpb.chi, bp = 1 - gpa.chi;
    auto [lo, hi] = montesinos_stable_bounds(b, bp, rep.num_link_components);
    rep.bounds.push_back(make_bound(
        "montesinos-stable-coefficient",
        {"reduced Montesinos diagram (hint)", ">=3 positive and >=3 negative tangles",
         "adequate", "hyperbolic"},
        lo, hi, failed));
  }
  return rep;
}

std::vector<double> kashaev_probe(const Diagram& d, int n_max, const BracketOptions& opts) {
  std::vector<double> out;
  const double two_pi = 2.0 * M_PI;
  for (int n = 2; n <= n_max; n++) {
    ColoredJonesResult cj = colored_jones(d, n, opts);
    // evaluate at t = exp(2*pi*i/n); quarter-t exponent q contributes
    // exp(2*pi*i*q/(4n))
    std::complex<double> val = cj.poly.eval_unit(two_pi / (4.0 * n));
    out.push_back(two_pi * std::log(std::abs(val)) / n);
  }
  return out;
}

}  // namespace knots
