#include "knots/bracket.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "knots/errors.hpp"

namespace knots {

namespace {

Laurent circle_weight_pow(int k) {
  Laurent p = Laurent::one();
  for (int i = 0; i < k; i++) p = p * Laurent::circle_weight();
  return p;
}

Laurent with_free_loops(Laurent p, int loops) {
  for (int i = 0; i < loops; i++) p = p * Laurent::circle_weight();
  return p;
}

Laurent oracle_engine(const Diagram& d, const BracketOptions& opts) {
  const int c = d.crossing_count();
  if (c > opts.max_enum_crossings)
    throw resource_limit("state enumeration needs " + std::to_string(c) +
                         " crossings > cap " + std::to_string(opts.max_enum_crossings));
  // counts[b][m]: states with b B-smoothings and m circles
  std::vector<std::vector<unsigned long long>> counts(
      c + 1, std::vector<unsigned long long>(c + 2 + d.free_loops(), 0));
  const int ports = 4 * c;
  std::vector<int> parent(ports);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << c); mask++) {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) parent[a] = b;
    };
    for (int a = 0; a < d.arc_count(); a++)
      unite(port_id(d.arc_ends[a][0]), port_id(d.arc_ends[a][1]));
    int bcount = 0;
    for (int x = 0; x < c; x++) {
      if (mask >> x & 1) {
        bcount++;
        unite(4 * x + 0, 4 * x + 3);
        unite(4 * x + 1, 4 * x + 2);
      } else {
        unite(4 * x + 0, 4 * x + 1);
        unite(4 * x + 2, 4 * x + 3);
      }
    }
    int circles = 0;
    for (int p = 0; p < ports; p++)
      if (find(p) == p) circles++;
    counts[bcount][circles]++;
  }
  Laurent result;
  std::vector<Laurent> deltas(c + 2 + d.free_loops());
  deltas[0] = Laurent::one();
  for (size_t m = 1; m < deltas.size(); m++) deltas[m] = deltas[m - 1] * Laurent::circle_weight();
  for (int b = 0; b <= c; b++)
    for (size_t m = 0; m < counts[b].size(); m++)
      if (counts[b][m]) result.add_scaled(deltas[m], c - 2 * b, BigInt(counts[b][m]));
  if (c == 0) result = Laurent::one();
  return with_free_loops(result, d.free_loops());
}

Laurent statesum_engine(const Diagram& d, const BracketOptions& opts) {
  const int c = d.crossing_count();
  if (d.num_projection_components != 1 && !(c == 0 && d.free_loops() == 1))
    throw precondition_unverifiable("spanning-subgraph bracket requires a connected diagram");
  if (c > opts.max_enum_crossings)
    throw resource_limit("subgraph enumeration needs " + std::to_string(c) +
                         " crossings > cap " + std::to_string(opts.max_enum_crossings));
  if (c == 0) return with_free_loops(Laurent::one(), d.free_loops());
  StateStructure st = build_state_structure(d, all_a_state(d));
  std::vector<Laurent> deltas(c + 2 + d.free_loops());
  deltas[0] = Laurent::one();
  for (size_t m = 1; m < deltas.size(); m++) deltas[m] = deltas[m - 1] * Laurent::circle_weight();
  Laurent result;
  std::vector<bool> include(c, false);
  // edges are indexed by crossing; subsets enumerated by binary counter
  for (std::uint64_t mask = 0;; mask++) {
    for (int x = 0; x < c; x++) include[x] = (mask >> x) & 1;
    int e_sub = static_cast<int>(std::popcount(mask));
    int f = ribbon_faces(st.ribbon, include);
    result.add_scaled(deltas[f], c - 2 * e_sub, 1);
    if (mask == (std::uint64_t(1) << c) - 1) break;
  }
  return with_free_loops(result, d.free_loops());
}

// Fast engine: resolve crossings one at a time, maintaining a map from
// pairings of open strand-ends (ports of unresolved crossings reached by
// the resolved region) to accumulated Laurent coefficients.
struct SweepState {
  std::map<std::vector<int>, Laurent> states;
};

std::vector<int> canonical_mat(std::map<int, int>& pairing) {
  std::vector<int> key;
  key.reserve(pairing.size());
  for (auto [a, b] : pairing)
    if (a < b) {
      key.push_back(a);
      key.push_back(b);
    }
  return key;
}

std::vector<int> sweep_order(const Diagram& d) {
  const int c = d.crossing_count();
  std::vector<int> order;
  std::vector<bool> done(c, false);
  std::vector<int> open_at(c, 0);  // open ports per unresolved crossing
  std::vector<int> self_arcs(c, 0);
  for (int a = 0; a < d.arc_count(); a++)
    if (d.arc_ends[a][0].crossing == d.arc_ends[a][1].crossing)
      self_arcs[d.arc_ends[a][0].crossing]++;
  for (int step = 0; step < c; step++) {
    int best = -1, best_delta = 0, best_open = -1;
    for (int x = 0; x < c; x++) {
      if (done[x]) continue;
      int delta = (4 - open_at[x] - 2 * self_arcs[x]) - open_at[x];
      if (best == -1 || delta < best_delta ||
          (delta == best_delta && open_at[x] > best_open)) {
        best = x;
        best_delta = delta;
        best_open = open_at[x];
      }
    }
    order.push_back(best);
    done[best] = true;
    for (int s = 0; s < 4; s++) {
      Port q = d.partner(Port{best, s});
      if (!done[q.crossing]) open_at[q.crossing]++;
    }
  }
  return order;
}

Laurent fast_engine(const Diagram& d, const BracketOptions& opts) {
  const int c = d.crossing_count();
  if (c == 0) {
    Laurent one = Laurent::one();
    return with_free_loops(one, d.free_loops());
  }
  std::vector<int> order = sweep_order(d);
  std::vector<bool> done(c, false);
  SweepState cur;
  cur.states.emplace(std::vector<int>{}, Laurent::one());
  for (int y : order) {
    SweepState next;
    done[y] = true;
    for (const auto& [key, poly] : cur.states) {
      std::map<int, int> matching;
      for (size_t i = 0; i < key.size(); i += 2) {
        matching[key[i]] = key[i + 1];
        matching[key[i + 1]] = key[i];
      }
      for (int choice = 0; choice < 2; choice++) {
        Resolution r = choice == 0 ? Resolution::A : Resolution::B;
        // local connector graph on y's ports plus external terminals
        // nodes: y ports get two link slots (smoothing + strand)
        std::map<int, std::vector<int>> links;  // port id -> neighbors
        auto add_link = [&](int a, int b) {
          links[a].push_back(b);
          links[b].push_back(a);
        };
        for (int s : {0, 2}) {
          int t = smoothing_partner(r, s);
          add_link(port_id(Port{y, s}), port_id(Port{y, t}));
        }
        // strand connections for each port of y
        std::vector<bool> arc_done(4, false);
        for (int s = 0; s < 4; s++) {
          if (arc_done[s]) continue;
          int pid = port_id(Port{y, s});
          Port q = d.partner(Port{y, s});
          if (q.crossing == y && q.slot != s) {
            add_link(pid, port_id(q));
            arc_done[q.slot] = true;
          } else if (auto it = matching.find(pid); it != matching.end()) {
            // strand through the resolved region to another open port
            add_link(pid, it->second);
          } else {
            // fresh open end at the unresolved side
            add_link(pid, port_id(q));
          }
        }
        // trace paths/cycles; terminals are ports not belonging to y
        std::map<int, int> new_pairs;
        int loops = 0;
        std::set<int> visited;
        auto is_terminal = [&](int pid) { return pid / 4 != y; };
        for (auto& [node, nbrs] : links) {
          if (visited.count(node) || !is_terminal(node)) continue;
          // walk from this terminal to the other end
          int prev = node, curn = nbrs[0];
          visited.insert(node);
          while (!is_terminal(curn)) {
            visited.insert(curn);
            const auto& nn = links[curn];
            int nxt = (nn[0] == prev) ? nn[1] : nn[0];
            prev = curn;
            curn = nxt;
          }
          visited.insert(curn);
          new_pairs[node] = curn;
          new_pairs[curn] = node;
        }
        for (auto& [node, nbrs] : links) {
          if (visited.count(node)) continue;
          // closed loop inside the resolved region
          int prev = node, curn = nbrs[0];
          visited.insert(node);
          while (curn != node) {
            visited.insert(curn);
            const auto& nn = links[curn];
            int nxt = (nn[0] == prev) ? nn[1] : nn[0];
            prev = curn;
            curn = nxt;
          }
          loops++;
        }
        // carry over untouched pairs
        for (auto [a, b] : matching) {
          if (a < b && links.find(a) == links.end() && links.find(b) == links.end()) {
            new_pairs[a] = b;
            new_pairs[b] = a;
          }
        }
        if (static_cast<int>(new_pairs.size()) > opts.max_sweep_width)
          throw resource_limit("sweep width " + std::to_string(new_pairs.size()) +
                               " exceeds cap " + std::to_string(opts.max_sweep_width));
        std::vector<int> nkey = canonical_mat(new_pairs);
        Laurent term = poly.times_monomial(choice == 0 ? 1 : -1, 1);
        for (int i = 0; i < loops; i++) term = term * Laurent::circle_weight();
        auto [it, inserted] = next.states.emplace(std::move(nkey), std::move(term));
        if (!inserted) it->second += term;
      }
    }
    cur = std::move(next);
  }
  if (cur.states.size() != 1 || !cur.states.begin()->first.empty())
    throw internal_error("sweep did not close all strands");
  return with_free_loops(cur.states.begin()->second, d.free_loops());
}

}  // namespace

Laurent bracket_unnormalized(const Diagram& d, BracketEngine engine, const BracketOptions& opts) {
  switch (engine) {
    case BracketEngine::oracle:
      return oracle_engine(d, opts);
    case BracketEngine::statesum:
      return statesum_engine(d, opts);
    case BracketEngine::fast:
      return fast_engine(d, opts);
  }
  throw internal_error("bad engine");
}

namespace {

Laurent normalized(const Diagram& d, Laurent unnorm) {
  if (d.num_components == 0) return unnorm;  // empty diagram
  return unnorm.div_exact(Laurent::circle_weight());
}

}  // namespace

Laurent bracket_oracle(const Diagram& d, const BracketOptions& opts) {
  return normalized(d, bracket_unnormalized(d, BracketEngine::oracle, opts));
}

Laurent bracket_statesum(const Diagram& d, const BracketOptions& opts) {
  return normalized(d, bracket_unnormalized(d, BracketEngine::statesum, opts));
}

Laurent bracket_fast(const Diagram& d, const BracketOptions& opts) {
  return normalized(d, bracket_unnormalized(d, BracketEngine::fast, opts));
}

Laurent kauffman_bracket(const Diagram& d, const BracketOptions& opts) {
  return normalized(d, bracket_unnormalized(d, opts.engine, opts));
}

Laurent jones(const Diagram& d, const BracketOptions& opts) {
  Laurent br = kauffman_bracket(d, opts);
  int w = d.writhe();
  BigInt sign = (w % 2 == 0) ? 1 : -1;  // (-A)^{-3w} = (-1)^w A^{-3w}
  Laurent in_a = br.times_monomial(-3 * w, sign);
  // A-exponent k becomes t-exponent -k/4; quarter-t units store -k
  return in_a.reversed();
}

std::vector<long long> chebyshev_expansion(int n) {
  if (n < 0) throw precondition_unverifiable("chebyshev index must be >= 0");
  std::vector<long long> prev{1};        // S_0
  if (n == 0) return prev;
  std::vector<long long> cur{0, 1};      // S_1
  for (int k = 1; k < n; k++) {
    std::vector<long long> nxt(k + 2, 0);
    for (int i = 0; i <= k; i++) nxt[i + 1] += cur[i];
    for (int i = 0; i < k; i++) nxt[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(nxt);
  }
  return cur;
}

Laurent chebyshev_at_circle_weight(int n) {
  Laurent prev = Laurent::one();
  if (n == 0) return prev;
  Laurent cur = Laurent::circle_weight();
  for (int k = 1; k < n; k++) {
    Laurent nxt = cur * Laurent::circle_weight() - prev;
    prev = std::move(cur);
    cur = std::move(nxt);
  }
  return cur;
}

DegreeInfo degrees_and_coeffs(const Laurent& p) {
  if (p.is_zero()) throw zero_polynomial("degrees of the zero polynomial");
  DegreeInfo info;
  info.j_quarter = p.max_exp();
  info.jprime_quarter = p.min_exp();
  info.alpha = p.coeff(info.j_quarter);
  info.beta = p.coeff(info.j_quarter - 4);
  info.alpha_prime = p.coeff(info.jprime_quarter);
  info.beta_prime = p.coeff(info.jprime_quarter + 4);
  return info;
}

ColoredJonesResult colored_jones(const Diagram& d, int n, const BracketOptions& opts) {
  if (n < 1) throw precondition_unverifiable("colored index must be >= 1");
  std::vector<long long> cheb = chebyshev_expansion(n);
  Laurent raw;
  for (int k = n; k >= 0; k -= 2) {
    if (k >= static_cast<int>(cheb.size()) || cheb[k] == 0) continue;
    Laurent cable_bracket;
    if (k == 0) {
      cable_bracket = Laurent::one();
    } else {
      Diagram dk = cable(d, k, opts.max_cable_crossings);
      cable_bracket = bracket_unnormalized(dk, opts.engine, opts);
    }
    raw.add_scaled(cable_bracket, 0, BigInt(cheb[k]));
  }
  // framing correction ((-1)^n A^{n^2+2n})^{-w}
  int w = d.writhe();
  BigInt sign = ((static_cast<long long>(n) * w) % 2 == 0) ? 1 : -1;
  raw = raw.times_monomial(-w * (n * n + 2 * n), sign);
  // normalize by the unknot value
  Laurent unknot_value = chebyshev_at_circle_weight(n);
  Laurent reduced = raw.div_exact(unknot_value);
  ColoredJonesResult res;
  res.n = n;
  res.poly = reduced.reversed();  // to quarter-t units
  res.degrees = degrees_and_coeffs(res.poly);
  return res;
}

StableCoefficients stable_coefficients(const Diagram& d, const BracketOptions& opts, bool verify) {
  AdequacyReport adq = adequacy(d);
  if (!adq.a_adequate && !adq.b_adequate)
    throw not_adequate("diagram is neither A- nor B-adequate");
  StableCoefficients sc;
  sc.a_adequate = adq.a_adequate;
  sc.b_adequate = adq.b_adequate;
  if (adq.a_adequate) {
    GraphStats ga = graph_stats(reduce(build_ribbon_graph(d, all_a_state(d))));
    sc.beta_prime_pred = 1 - ga.chi;
  }
  if (adq.b_adequate) {
    GraphStats gb = graph_stats(reduce(build_ribbon_graph(d, all_b_state(d))));
    sc.beta_pred = 1 - gb.chi;
  }
  if (verify) {
    try {
      ColoredJonesResult c2 = colored_jones(d, 2, opts);
      ColoredJonesResult c3 = colored_jones(d, 3, opts);
      bool ok = true;
      if (adq.a_adequate) {
        ok = ok && abs(c2.degrees.alpha_prime) == 1 && abs(c3.degrees.alpha_prime) == 1;
        ok = ok && abs(c2.degrees.beta_prime) == sc.beta_prime_pred &&
             abs(c3.degrees.beta_prime) == sc.beta_prime_pred;
      }
      if (adq.b_adequate) {
        ok = ok && abs(c2.degrees.alpha) == 1 && abs(c3.degrees.alpha) == 1;
        ok = ok && abs(c2.degrees.beta) == sc.beta_pred && abs(c3.degrees.beta) == sc.beta_pred;
      }
      sc.verified_n2_n3 = ok;
      sc.verification_ran = true;
    } catch (const Error& e) {
      if (e.kind() != "ResourceLimit") throw;
      sc.verification_ran = false;
    }
  }
  return sc;
}

}  // namespace knots
