#pragma once

#include <array>
#include <optional>
#include <vector>

#include "schemeforge/scheme.hpp"
#include "schemeforge/span_basis.hpp"

namespace schemeforge {

namespace detail {

/// E*_i A_j E*_k as a flattened sparse vector: entries (u, w) with u in
/// N_i(v), w in N_k(v) and (u, w) in R_j.
inline std::vector<std::pair<std::uint32_t, Rational>> monomial_entries(const Scheme& s, int v,
                                                                        int i, int j, int k) {
  std::vector<std::pair<std::uint32_t, Rational>> out;
  const std::size_t n = static_cast<std::size_t>(s.n);
  for (int u = 0; u < s.n; ++u) {
    if (s.color_of(v, u) != i) continue;
    for (int w = 0; w < s.n; ++w)
      if (s.color_of(v, w) == k && s.color_of(u, w) == j)
        out.emplace_back(static_cast<std::uint32_t>(static_cast<std::size_t>(u) * n + static_cast<std::size_t>(w)), Rational(1));
  }
  return out;
}

inline bool insert_sparse(SpanBasis& basis, const std::vector<std::pair<std::uint32_t, Rational>>& entries) {
  std::vector<Rational> v(basis.ambient(), Rational(0));
  for (const auto& [idx, val] : entries) v[idx] += val;
  return basis.insert_vector(std::move(v));
}

}  // namespace detail

/// Span of all nonzero E*_i A_j E*_k. The dimension must equal the number of
/// nonzero intersection numbers; a mismatch means an internal bug.
inline SpanBasis t0_basis(const Scheme& s, int v = 0) {
  const std::size_t n = static_cast<std::size_t>(s.n);
  SpanBasis basis(n * n);
  const auto& tensor = intersection_tensor(s);
  for (int i = 0; i <= s.d; ++i)
    for (int j = 0; j <= s.d; ++j)
      for (int k = 0; k <= s.d; ++k) {
        if (tensor.at(i, j, k) == 0) continue;
        detail::insert_sparse(basis, detail::monomial_entries(s, v, i, j, k));
      }
  if (basis.dim() != tensor.nonzero_count())
    throw Error("t0_basis: dimension disagrees with nonzero intersection-number count");
  return basis;
}

/// Span of T^0 together with all products of two T^0 monomials. Only products
/// with matching middle idempotent are formed; the rest vanish since
/// E*_k E*_{k'} = 0 for k != k'.
inline SpanBasis t1_basis(const Scheme& s, int v = 0) {
  const std::size_t n = static_cast<std::size_t>(s.n);
  SpanBasis basis(n * n);
  const auto& tensor = intersection_tensor(s);

  using Sparse = std::vector<std::pair<std::uint32_t, Rational>>;
  struct Mon {
    int i, k;
    Sparse entries;
  };
  std::vector<Mon> mons;
  for (int i = 0; i <= s.d; ++i)
    for (int j = 0; j <= s.d; ++j)
      for (int k = 0; k <= s.d; ++k) {
        if (tensor.at(i, j, k) == 0) continue;
        mons.push_back({i, k, detail::monomial_entries(s, v, i, j, k)});
        detail::insert_sparse(basis, mons.back().entries);
      }

  std::vector<std::vector<std::size_t>> by_first(static_cast<std::size_t>(s.d) + 1);
  for (std::size_t m = 0; m < mons.size(); ++m) by_first[static_cast<std::size_t>(mons[m].i)].push_back(m);

  std::vector<Rational> scratch(n * n, Rational(0));
  std::vector<std::uint32_t> touched;
  std::vector<char> flag(n * n, 0);
  for (const auto& a : mons) {
    // index rows of the right factor lazily per left factor's middle class
    for (std::size_t mi : by_first[static_cast<std::size_t>(a.k)]) {
      const auto& b = mons[mi];
      std::vector<std::vector<std::pair<std::uint32_t, Rational>>> brows(n);
      for (const auto& [idx, val] : b.entries) brows[idx / n].emplace_back(idx % n, val);
      touched.clear();
      for (const auto& [aidx, aval] : a.entries) {
        std::size_t arow = aidx / n, acol = aidx % n;
        for (const auto& [bcol, bval] : brows[acol]) {
          std::uint32_t idx = static_cast<std::uint32_t>(arow * n + bcol);
          scratch[idx] += aval * bval;
          if (!flag[idx]) {
            flag[idx] = 1;
            touched.push_back(idx);
          }
        }
      }
      if (!touched.empty()) {
        basis.insert_scratch(scratch);
        for (std::uint32_t idx : touched) flag[idx] = 0;
      }
    }
  }
  return basis;
}

/// The Terwilliger algebra itself: closure of {A_i} union {E*_i}.
inline SpanBasis t_algebra(const Scheme& s, int v = 0, std::size_t round_cap = 0) {
  std::vector<ExactMatrix> gens;
  for (int i = 0; i <= s.d; ++i) gens.push_back(adjacency_matrix(s, i));
  for (int i = 0; i <= s.d; ++i) gens.push_back(dual_idempotent(s, i, v));
  return algebra_closure(gens, round_cap);
}

/// Centralizer algebra of the point stabilizer G_v: spanned by the orbital
/// matrices of G_v on Omega x Omega. Also reports the suborbit decomposition
/// dim = sum_i N_i, where N_i counts the orbits of G_v meet G_{u_i}.
struct CentralizerBasis {
  SpanBasis basis;
  std::vector<std::size_t> suborbit_counts;  // N_i per suborbit of G_v
};

inline CentralizerBasis centralizer_basis(const PermGroup& G, int v = 0, const Caps& caps = {}) {
  if (!G.is_transitive()) throw Error("centralizer_basis: group is not transitive");
  const int n = G.degree;
  PermGroup stab = point_stabilizer(G, v, caps);

  // orbits of G_v on ordered pairs, each contributing one 0/1 basis matrix
  std::vector<std::vector<int>> pair_orbit(static_cast<std::size_t>(n),
                                           std::vector<int>(static_cast<std::size_t>(n), -1));
  SpanBasis basis(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  int orbit_count = 0;
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w) {
      if (pair_orbit[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] != -1) continue;
      std::vector<std::pair<std::uint32_t, Rational>> entries;
      std::deque<std::pair<int, int>> queue{{u, w}};
      pair_orbit[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] = orbit_count;
      while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        entries.emplace_back(static_cast<std::uint32_t>(static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)), Rational(1));
        for (const auto& g : stab.generators) {
          int a = g(x), b = g(y);
          if (pair_orbit[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == -1) {
            pair_orbit[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = orbit_count;
            queue.push_back({a, b});
          }
        }
      }
      if (!detail::insert_sparse(basis, entries))
        throw Error("centralizer_basis: orbital matrices must be independent");
      ++orbit_count;
    }

  // suborbit decomposition from representatives u_i
  CentralizerBasis out{std::move(basis), {}};
  for (const auto& sub : orbits(stab, v)) {
    PermGroup both = two_point_stabilizer(G, v, sub.front(), caps);
    out.suborbit_counts.push_back(orbits(both).size());
  }
  std::size_t total = 0;
  for (std::size_t c : out.suborbit_counts) total += c;
  if (total != out.basis.dim())
    throw Error("centralizer_basis: suborbit decomposition disagrees with orbit count");
  return out;
}

/// An ordered class pair (i, k) with both valences 2 admitting a middle class
/// j with p_{ij}^k = 2, i.e. the complete-bipartite configuration between
/// N_i(v) and N_k(v). witness = (v, y1, y2, u, z).
struct DiamondPair {
  int i, k, j;
  std::array<int, 5> witness;

  friend bool operator==(const DiamondPair& a, const DiamondPair& b) {
    return a.i == b.i && a.k == b.k && a.j == b.j;
  }
};

inline std::vector<DiamondPair> diamond_pairs(const Scheme& s, int v = 0) {
  if (thinness(s) == Thinness::neither)
    throw Error("diamond_pairs: scheme is not quasi-thin");
  const auto& tensor = intersection_tensor(s);
  std::vector<DiamondPair> out;
  for (int i = 0; i <= s.d; ++i) {
    if (s.valence[static_cast<std::size_t>(i)] != 2) continue;
    for (int k = 0; k <= s.d; ++k) {
      if (s.valence[static_cast<std::size_t>(k)] != 2) continue;
      int middle = -1;
      for (int j = 0; j <= s.d; ++j)
        if (tensor.at(i, j, k) == 2) {
          if (middle != -1) throw Error("diamond_pairs: middle class is not unique");
          middle = j;
        }
      if (middle == -1) continue;

      auto ni = s.neighborhood(i, v);
      auto nk = s.neighborhood(k, v);
      DiamondPair dp{i, k, middle, {v, ni[0], ni[1], nk[0], nk[1]}};
      for (int y : ni)
        for (int u : nk)
          if (s.color_of(y, u) != middle)
            throw Error("diamond_pairs: witness does not match the diamond configuration");
      out.push_back(dp);
    }
  }
  return out;
}

/// Dimension of the compression E*_i X E*_k of a span, plus the 2x2 block
/// patterns present when both valences are 2.
struct PeirceBlock {
  std::size_t dim = 0;
  int rows = 0, cols = 0;
  // only meaningful for 2x2 blocks
  bool has_identity = false;       // I_2
  bool has_anti_identity = false;  // J_2 - I_2
  bool has_all_ones = false;       // J_2
};

inline PeirceBlock peirce_block_dim(const SpanBasis& basis, const Scheme& s, int i, int k, int v = 0) {
  if (i < 0 || i > s.d || k < 0 || k > s.d) throw Error("peirce_block_dim: class index out of range");
  auto ni = s.neighborhood(i, v);
  auto nk = s.neighborhood(k, v);
  const std::size_t n = static_cast<std::size_t>(s.n);
  const std::size_t br = ni.size(), bc = nk.size();

  SpanBasis block(br * bc);
  for (std::size_t r = 0; r < basis.dim(); ++r) {
    const auto& row = basis.row(r);
    std::vector<Rational> compressed(br * bc);
    bool nonzero = false;
    for (std::size_t a = 0; a < br; ++a)
      for (std::size_t b = 0; b < bc; ++b) {
        compressed[a * bc + b] = row[static_cast<std::size_t>(ni[a]) * n + static_cast<std::size_t>(nk[b])];
        nonzero = nonzero || !is_zero(compressed[a * bc + b]);
      }
    if (nonzero) block.insert_vector(std::move(compressed));
  }

  PeirceBlock out;
  out.dim = block.dim();
  out.rows = static_cast<int>(br);
  out.cols = static_cast<int>(bc);
  if (br == 2 && bc == 2) {
    out.has_identity = block.contains_vector({1, 0, 0, 1});
    out.has_anti_identity = block.contains_vector({0, 1, 1, 0});
    out.has_all_ones = block.contains_vector({1, 1, 1, 1});
  }
  return out;
}

/// Wedderburn dimension identity for brute-verified triply transitive
/// quasi-thin schemes: with t the fixed points of the stabilizer involution
/// and s = (n - t) / 2, dim T must equal (s + t)^2 + s^2.
struct WedderburnRecord {
  bool applicable = false;
  std::string reason;  // when not applicable
  int t = 0;
  int s = 0;
  std::size_t predicted = 0;
  std::size_t actual = 0;
  bool holds = false;
};

inline WedderburnRecord wedderburn_check(const Scheme& scheme, const PermGroup& G, int v,
                                         std::size_t dim_t, bool triply_transitive,
                                         const Caps& caps = {}) {
  WedderburnRecord rec;
  if (thinness(scheme) != Thinness::quasi_thin) {
    rec.reason = "scheme is not quasi-thin (stabilizer has no involution)";
    return rec;
  }
  if (!triply_transitive) {
    rec.reason = "scheme is not triply transitive";
    return rec;
  }
  PermGroup stab = point_stabilizer(G, v, caps);
  if (stab.order() != 2) {
    rec.reason = "point stabilizer does not have order 2";
    return rec;
  }
  const Permutation& phi = stab.elements[1];
  rec.applicable = true;
  rec.t = phi.fixed_point_count();
  rec.s = (scheme.n - rec.t) / 2;
  rec.predicted = static_cast<std::size_t>(rec.s + rec.t) * static_cast<std::size_t>(rec.s + rec.t) +
                  static_cast<std::size_t>(rec.s) * static_cast<std::size_t>(rec.s);
  rec.actual = dim_t;
  rec.holds = rec.predicted == rec.actual;
  return rec;
}

}  // namespace schemeforge
