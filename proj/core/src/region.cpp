#include "mimodof/region.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "mimodof/rational_linalg.hpp"

namespace mimodof {

std::string LinearInequality::to_string() const {
  std::string out;
  for (Msg m : coeffs.members()) {
    if (!out.empty()) out += " + ";
    out += "d";
    out += msg_tag(m);
  }
  out += " <= ";
  out += std::to_string(rhs);
  return out;
}

std::string DofPolytope::to_string() const {
  std::string out;
  for (const auto& iq : ineqs) {
    out += iq.to_string();
    out += "\n";
  }
  return out;
}

std::vector<LinearInequality> general_region_rows(const AntennaConfig& cfg) {
  const long long m1 = cfg.m1, m2 = cfg.m2, n1 = cfg.n1, n2 = cfg.n2;
  using M = Msg;
  auto set = [](std::initializer_list<Msg> l) { return MessageSet::of(l); };

  std::vector<LinearInequality> rows;
  rows.push_back({set({M::W1, M::W2, M::W0, M::W01, M::W11, M::W12, M::W21}),
                  std::max(m1, n1), {3}});
  rows.push_back({set({M::W1, M::W2, M::W0, M::W01, M::W11, M::W12, M::W22}),
                  std::max(m2, n1), {4}});
  rows.push_back({set({M::W1, M::W2, M::W0, M::W02, M::W21, M::W22, M::W11}),
                  std::max(m1, n2), {5}});
  rows.push_back({set({M::W1, M::W2, M::W0, M::W02, M::W21, M::W22, M::W12}),
                  std::max(m2, n2), {6}});
  rows.push_back({set({M::W1, M::W2, M::W0, M::W01, M::W11, M::W12}), n1, {7}});
  rows.push_back({set({M::W1, M::W2, M::W0, M::W02, M::W21, M::W22}), n2, {8}});
  rows.push_back({set({M::W1, M::W11, M::W21}), m1, {9}});
  rows.push_back({set({M::W2, M::W12, M::W22}), m2, {10}});
  rows.push_back({MessageSet::all(), std::min(m1 + m2, n1 + n2), {11}});
  return rows;
}

DofPolytope build_general_region(const AntennaConfig& cfg, MessageSet msgs) {
  if (msgs.empty()) {
    throw std::invalid_argument("message set must be nonempty");
  }
  DofPolytope poly;
  poly.active = msgs;
  for (LinearInequality row : general_region_rows(cfg)) {
    row.coeffs = row.coeffs.intersect(msgs);
    if (row.coeffs.empty()) continue;  // bound degenerates to 0 <= rhs
    auto same = std::find_if(poly.ineqs.begin(), poly.ineqs.end(),
                             [&](const LinearInequality& kept) {
                               return kept.coeffs == row.coeffs;
                             });
    if (same == poly.ineqs.end()) {
      poly.ineqs.push_back(std::move(row));
    } else if (row.rhs < same->rhs) {
      same->rhs = row.rhs;
      same->sources = row.sources;
    } else if (row.rhs == same->rhs) {
      same->sources.insert(same->sources.end(), row.sources.begin(),
                           row.sources.end());
    }
  }
  return poly;
}

bool contains(const DofPolytope& poly, const DofTuple& d) {
  if (!d.support().is_subset_of(poly.active)) {
    throw std::invalid_argument(
        "tuple has mass outside the polytope's active message set");
  }
  if (!d.is_nonnegative()) return false;
  for (const auto& iq : poly.ineqs) {
    if (!iq.holds_at(d)) return false;
  }
  return true;
}

std::optional<int> first_violated(const DofPolytope& poly, const DofTuple& d) {
  for (std::size_t i = 0; i < poly.ineqs.size(); ++i) {
    if (!poly.ineqs[i].holds_at(d)) return static_cast<int>(i);
  }
  return std::nullopt;
}

namespace {

RatMat system_matrix(const DofPolytope& poly, const std::vector<Msg>& vars) {
  RatMat a;
  a.reserve(poly.ineqs.size());
  for (const auto& iq : poly.ineqs) {
    RatVec row(vars.size(), Rat(0));
    for (std::size_t j = 0; j < vars.size(); ++j) {
      if (iq.coeffs.contains(vars[j])) row[j] = Rat(1);
    }
    a.push_back(std::move(row));
  }
  return a;
}

DofTuple tuple_from_point(const RatVec& x, const std::vector<Msg>& vars) {
  DofTuple d;
  for (std::size_t j = 0; j < vars.size(); ++j) d.set(vars[j], x[j]);
  return d;
}

Vertex make_vertex(const DofPolytope& poly, DofTuple point) {
  Vertex v;
  v.active_facets.clear();
  for (std::size_t i = 0; i < poly.ineqs.size(); ++i) {
    if (poly.ineqs[i].lhs_at(point) == Rat(poly.ineqs[i].rhs)) {
      v.active_facets.push_back(static_cast<int>(i));
    }
  }
  long long den = 1;
  for (Msg m : kAllMessages) den = lcm_ll(den, point[m].denominator());
  v.denominator = den;
  v.point = std::move(point);
  return v;
}

}  // namespace

std::vector<Vertex> enumerate_vertices(const DofPolytope& poly) {
  const std::vector<Msg> vars = poly.active.members();
  RatMat a = system_matrix(poly, vars);
  RatVec b;
  b.reserve(poly.ineqs.size());
  for (const auto& iq : poly.ineqs) b.push_back(Rat(iq.rhs));

  std::vector<Vertex> out;
  for (const RatVec& x : enumerate_basic_feasible_points(a, b)) {
    Vertex v = make_vertex(poly, tuple_from_point(x, vars));

    // Certificate: tight facets plus tight sign constraints span the space.
    RatMat tight;
    for (int i : v.active_facets) tight.push_back(a[i]);
    for (std::size_t j = 0; j < vars.size(); ++j) {
      if (v.point[vars[j]] == Rat(0)) {
        RatVec unit(vars.size(), Rat(0));
        unit[j] = Rat(1);
        tight.push_back(std::move(unit));
      }
    }
    assert(exact_rank(tight) == static_cast<int>(vars.size()));

    out.push_back(std::move(v));
  }
  return out;
}

WeightedMax max_weighted_sum(const DofPolytope& poly,
                             const std::map<Msg, Rat>& weights) {
  for (const auto& [m, w] : weights) {
    if (w < Rat(0)) throw std::invalid_argument("weights must be nonnegative");
    if (w > Rat(0) && !poly.active.contains(m)) {
      throw std::invalid_argument("weight on inactive message d" +
                                  std::string(msg_tag(m)));
    }
  }
  auto objective = [&](const DofTuple& d) {
    Rat acc(0);
    for (const auto& [m, w] : weights) acc += w * d[m];
    return acc;
  };

  const auto vertices = enumerate_vertices(poly);
  if (vertices.empty()) throw std::logic_error("polytope has no vertices");

  WeightedMax best{objective(vertices.front().point), vertices.front()};
  for (const auto& v : vertices) {
    const Rat val = objective(v.point);
    if (val > best.value) best = {val, v};
    // Vertices arrive in lexicographic order, so the first maximizer is the
    // lexicographically smallest one.
  }
  return best;
}

DenominatorStats vertex_denominator_stats(const DofPolytope& poly) {
  DenominatorStats stats;
  for (auto& v : enumerate_vertices(poly)) {
    stats.max_denominator = std::max(stats.max_denominator, v.denominator);
    if (v.denominator > 1) stats.fractional_vertices.push_back(std::move(v));
  }
  return stats;
}

DofPolytope remove_redundant(const DofPolytope& poly) {
  DofPolytope out = poly;
  const std::vector<Msg> vars = out.active.members();

  for (std::size_t i = 0; i < out.ineqs.size();) {
    DofPolytope relaxed = out;
    relaxed.ineqs.erase(relaxed.ineqs.begin() + static_cast<long>(i));

    // If some coordinate of this bound is covered by no other inequality the
    // relaxed region is unbounded in that direction and the bound is a facet.
    MessageSet covered;
    for (const auto& iq : relaxed.ineqs) {
      covered = MessageSet(covered.bits() | iq.coeffs.bits());
    }
    if (!out.ineqs[i].coeffs.is_subset_of(covered)) {
      ++i;
      continue;
    }

    std::map<Msg, Rat> w;
    for (Msg m : out.ineqs[i].coeffs.members()) w[m] = Rat(1);
    const Rat relaxed_max = max_weighted_sum(relaxed, w).value;
    if (relaxed_max <= Rat(out.ineqs[i].rhs)) {
      out.ineqs.erase(out.ineqs.begin() + static_cast<long>(i));
    } else {
      ++i;
    }
  }
  return out;
}

Rat max_free_coordinate(const DofPolytope& poly, Msg k,
                        const std::map<Msg, Rat>& fixed) {
  if (!poly.active.contains(k)) {
    throw std::invalid_argument("free coordinate is not active");
  }
  DofTuple base;
  for (Msg m : poly.active.members()) {
    if (m == k) continue;
    auto it = fixed.find(m);
    if (it == fixed.end()) {
      throw std::invalid_argument("every active coordinate except the free "
                                  "one must be pinned");
    }
    if (it->second < Rat(0)) {
      throw std::invalid_argument("pinned values must be nonnegative");
    }
    base.set(m, it->second);
  }

  std::optional<Rat> bound;
  for (const auto& iq : poly.ineqs) {
    const Rat slack = Rat(iq.rhs) - iq.lhs_at(base);
    if (!iq.coeffs.contains(k)) {
      if (slack < Rat(0)) {
        throw std::invalid_argument("pinned values violate " + iq.to_string());
      }
      continue;
    }
    if (!bound || slack < *bound) bound = slack;
  }
  if (!bound) throw std::logic_error("free coordinate appears in no bound");
  if (*bound < Rat(0)) {
    throw std::invalid_argument("pinned values leave no feasible value for d" +
                                std::string(msg_tag(k)));
  }
  return *bound;
}

bool regions_set_equal(const DofPolytope& a, const DofPolytope& b) {
  if (a.active != b.active) return false;
  for (const auto& v : enumerate_vertices(a)) {
    if (!contains(b, v.point)) return false;
  }
  for (const auto& v : enumerate_vertices(b)) {
    if (!contains(a, v.point)) return false;
  }
  return true;
}

}  // namespace mimodof
