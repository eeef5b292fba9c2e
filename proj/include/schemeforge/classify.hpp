#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schemeforge/terwilliger.hpp"

namespace schemeforge {

struct BaseDims {
  int base_point = 0;
  std::size_t t0 = 0;
  std::size_t t = 0;
  std::optional<std::size_t> t_tilde;
};

/// Everything the classifier computed for one scheme: exact dimensions,
/// diamond pairs, the structural verdicts of the characterization theorems,
/// their brute-force dimension counterparts, and a consistency flag that is
/// true exactly when every structural verdict equals its brute counterpart.
struct ClassificationReport {
  std::string name;
  int n = 0;
  int rank = 0;  // d + 1
  Thinness thin = Thinness::neither;
  std::vector<int> suborbit_sizes;  // valence multiset in class order

  int base_point = 0;
  std::size_t dim_t0 = 0;
  std::size_t dim_t1 = 0;
  std::size_t dim_t = 0;
  std::optional<std::size_t> dim_t_tilde;
  std::optional<BaseDims> second_base;

  std::vector<DiamondPair> diamonds;
  std::size_t unordered_diamond_pairs = 0;

  // structural route (diamond-pair criteria); absent when not applicable
  std::optional<bool> triply_regular_structural;
  std::optional<bool> t_equals_ttilde_structural;
  std::optional<bool> triply_transitive_structural;

  // brute-force route (dimension comparisons)
  bool triply_regular_brute = false;
  std::optional<bool> t_equals_ttilde_brute;
  std::optional<bool> triply_transitive_brute;

  bool consistent = true;
  std::optional<WedderburnRecord> wedderburn;
  std::optional<bool> regular_subgroup_found;

  bool is_triply_transitive() const { return triply_transitive_brute.value_or(false); }
};

/// Theorem route: the scheme is triply regular iff no diamond pair (i, k)
/// admits a valency-2 class l with (i, l) and (l, k) both non-diamond. The
/// valency restriction on l follows the corollary phrasing; without it the
/// diagonal class would vacuously falsify the condition for every diamond
/// pair.
inline bool triply_regular_structural(const Scheme& s, const std::vector<DiamondPair>& diamonds) {
  if (thinness(s) == Thinness::neither)
    throw Error("triply_regular_structural: scheme is not quasi-thin");
  auto is_diamond = [&](int a, int b) {
    for (const auto& dp : diamonds)
      if (dp.i == a && dp.k == b) return true;
    return false;
  };
  for (const auto& dp : diamonds)
    for (int l = 0; l <= s.d; ++l) {
      if (s.valence[static_cast<std::size_t>(l)] != 2) continue;
      if (!is_diamond(dp.i, l) && !is_diamond(l, dp.k)) return false;
    }
  return true;
}

/// Corollary route: T = T~ iff every diamond pair (i, k) admits a valency-2
/// class l with (i, l) and (l, k) both non-diamond.
inline bool t_equals_centralizer_structural(const Scheme& s, const std::vector<DiamondPair>& diamonds) {
  if (thinness(s) == Thinness::neither)
    throw Error("t_equals_centralizer_structural: scheme is not quasi-thin");
  auto is_diamond = [&](int a, int b) {
    for (const auto& dp : diamonds)
      if (dp.i == a && dp.k == b) return true;
    return false;
  };
  for (const auto& dp : diamonds) {
    bool found = false;
    for (int l = 0; l <= s.d && !found; ++l) {
      if (s.valence[static_cast<std::size_t>(l)] != 2) continue;
      if (!is_diamond(dp.i, l) && !is_diamond(l, dp.k)) found = true;
    }
    if (!found) return false;
  }
  return true;
}

struct ClassifyOptions {
  int base_point = 0;
  bool cross_check_base = false;  // recompute dims at a second base point
  bool search_regular_subgroup = true;
  Caps caps;
};

inline ClassificationReport classify(const Scheme& scheme, const PermGroup* group = nullptr,
                                     const ClassifyOptions& opts = {}) {
  AxiomReport axioms = verify_axioms(scheme);
  if (!axioms.ok()) throw ParseError("classify: axioms violated:\n" + axioms.summary());

  if (group) {
    if (!group->is_transitive()) throw Error("classify: attached group is not transitive");
    // The attached group must realize the scheme as its orbital scheme, up to
    // class relabeling; automorphism groups are never inferred.
    Scheme orbital = from_orbitals(*group);
    std::vector<int> to_orbital(static_cast<std::size_t>(scheme.d) + 1, -1);
    std::vector<int> to_scheme(static_cast<std::size_t>(orbital.d) + 1, -1);
    bool matches = orbital.n == scheme.n && orbital.d == scheme.d;
    for (int u = 0; u < scheme.n && matches; ++u)
      for (int w = 0; w < scheme.n; ++w) {
        int a = scheme.color_of(u, w), b = orbital.color_of(u, w);
        if (to_orbital[static_cast<std::size_t>(a)] == -1) to_orbital[static_cast<std::size_t>(a)] = b;
        if (to_scheme[static_cast<std::size_t>(b)] == -1) to_scheme[static_cast<std::size_t>(b)] = a;
        if (to_orbital[static_cast<std::size_t>(a)] != b || to_scheme[static_cast<std::size_t>(b)] != a) {
          matches = false;
          break;
        }
      }
    if (!matches)
      throw Error("classify: scheme is not the orbital scheme of the attached group");
  }

  ClassificationReport rep;
  rep.n = scheme.n;
  rep.rank = scheme.d + 1;
  rep.thin = thinness(scheme);
  rep.suborbit_sizes = scheme.valence;
  rep.base_point = opts.base_point;
  const int v = opts.base_point;

  const auto& tensor = intersection_tensor(scheme);
  rep.dim_t0 = t0_basis(scheme, v).dim();
  if (rep.dim_t0 != tensor.nonzero_count())
    throw Error("classify: dim T0 disagrees with nonzero intersection-number count");
  rep.dim_t1 = t1_basis(scheme, v).dim();
  rep.dim_t = t_algebra(scheme, v).dim();
  if (rep.dim_t1 != rep.dim_t)
    throw Error("classify: dim T1 != dim T (closure-under-products theorem violated)");

  if (group) rep.dim_t_tilde = centralizer_basis(*group, v, opts.caps).basis.dim();

  rep.triply_regular_brute = rep.dim_t0 == rep.dim_t;
  if (rep.dim_t_tilde) {
    rep.t_equals_ttilde_brute = rep.dim_t == *rep.dim_t_tilde;
    rep.triply_transitive_brute = rep.triply_regular_brute && *rep.t_equals_ttilde_brute;
  }

  if (rep.thin != Thinness::neither) {
    rep.diamonds = diamond_pairs(scheme, v);
    std::size_t ordered = rep.diamonds.size();
    // every diamond pair appears with its reverse
    rep.unordered_diamond_pairs = (ordered + 1) / 2;
    rep.triply_regular_structural = triply_regular_structural(scheme, rep.diamonds);
    rep.triply_transitive_structural = rep.diamonds.empty();
    if (group) rep.t_equals_ttilde_structural = t_equals_centralizer_structural(scheme, rep.diamonds);
  }

  // Structural/brute disagreement is reported, never raised: the
  // disagreement itself is the interesting output.
  if (rep.triply_regular_structural && *rep.triply_regular_structural != rep.triply_regular_brute)
    rep.consistent = false;
  if (rep.t_equals_ttilde_structural && rep.t_equals_ttilde_brute &&
      *rep.t_equals_ttilde_structural != *rep.t_equals_ttilde_brute)
    rep.consistent = false;
  if (rep.triply_transitive_structural && rep.triply_transitive_brute &&
      *rep.triply_transitive_structural != *rep.triply_transitive_brute)
    rep.consistent = false;

  if (group && rep.thin == Thinness::quasi_thin) {
    rep.wedderburn = wedderburn_check(scheme, *group, v, rep.dim_t,
                                      rep.triply_transitive_brute.value_or(false), opts.caps);
    if (opts.search_regular_subgroup) {
      auto regular = find_regular_subgroup(*group, opts.caps);
      rep.regular_subgroup_found = regular.has_value();
      // a regular subgroup predicts triple transitivity; it may never
      // contradict the brute verdict
      if (regular && rep.triply_transitive_brute && !*rep.triply_transitive_brute)
        throw Error("classify: regular subgroup found but scheme is not triply transitive");
    }
  }

  if (opts.cross_check_base && scheme.n > 1) {
    BaseDims second;
    second.base_point = (v + 1) % scheme.n;
    second.t0 = t0_basis(scheme, second.base_point).dim();
    second.t = t_algebra(scheme, second.base_point).dim();
    if (group) second.t_tilde = centralizer_basis(*group, second.base_point, opts.caps).basis.dim();
    rep.second_base = second;
  }

  return rep;
}

}  // namespace schemeforge
