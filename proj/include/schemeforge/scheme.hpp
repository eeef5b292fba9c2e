#pragma once

#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "schemeforge/exact_matrix.hpp"
#include "schemeforge/perm_group.hpp"

namespace schemeforge {

enum class Thinness { thin, quasi_thin, neither };

inline std::string to_string(Thinness t) {
  switch (t) {
    case Thinness::thin: return "thin";
    case Thinness::quasi_thin: return "quasi-thin";
    default: return "neither";
  }
}

/// All (d+1)^3 intersection numbers p_{ij}^k.
struct IntersectionTensor {
  int d = 0;
  std::vector<long long> p;  // flattened (i, j, k)

  long long at(int i, int j, int k) const {
    const std::size_t m = static_cast<std::size_t>(d) + 1;
    return p[(static_cast<std::size_t>(i) * m + static_cast<std::size_t>(j)) * m + static_cast<std::size_t>(k)];
  }
  long long& at(int i, int j, int k) {
    const std::size_t m = static_cast<std::size_t>(d) + 1;
    return p[(static_cast<std::size_t>(i) * m + static_cast<std::size_t>(j)) * m + static_cast<std::size_t>(k)];
  }

  std::size_t nonzero_count() const {
    std::size_t c = 0;
    for (long long v : p)
      if (v != 0) ++c;
    return c;
  }
};

struct AxiomViolation {
  std::string axiom;    // "AS1", "AS2", "AS3", "regularity"
  std::string detail;
  std::vector<int> witness;  // points / classes involved
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const {
    if (ok()) return "all axioms hold";
    std::ostringstream os;
    for (const auto& v : violations) {
      os << v.axiom << ": " << v.detail << " [witness:";
      for (int w : v.witness) os << " " << w;
      os << "]\n";
    }
    return os.str();
  }
};

/// An association scheme as a color matrix on Omega x Omega. Class 0 is the
/// diagonal; nontrivial classes are numbered by the lexicographically minimal
/// pair (Schurian construction) or first row-major occurrence (ingestion).
struct Scheme {
  enum class Origin { schurian_from_group, ingested };

  int n = 0;
  int d = 0;
  std::vector<std::vector<int>> color;
  std::vector<int> dual;      // involution on {0..d}, fixes 0
  std::vector<int> valence;   // k_i, with k_0 = 1
  Origin origin = Origin::ingested;

  int color_of(int u, int v) const { return color[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; }

  /// N_i(v), sorted ascending.
  std::vector<int> neighborhood(int i, int v) const {
    std::vector<int> out;
    for (int u = 0; u < n; ++u)
      if (color_of(v, u) == i) out.push_back(u);
    return out;
  }

  mutable std::shared_ptr<const IntersectionTensor> tensor_cache;
};

namespace detail {

/// Structural checks on a raw coloring, before a Scheme is built. Reports the
/// first witness per violated axiom.
inline AxiomReport verify_color_matrix(const std::vector<std::vector<int>>& color) {
  AxiomReport report;
  const int n = static_cast<int>(color.size());
  if (n == 0) {
    report.violations.push_back({"AS1", "empty point set", {}});
    return report;
  }
  int maxc = 0;
  for (int u = 0; u < n; ++u) {
    if (static_cast<int>(color[static_cast<std::size_t>(u)].size()) != n) {
      report.violations.push_back({"AS1", "color matrix is not square", {u}});
      return report;
    }
    for (int v = 0; v < n; ++v) {
      int c = color[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
      if (c < 0) {
        report.violations.push_back({"AS1", "negative color", {u, v}});
        return report;
      }
      maxc = std::max(maxc, c);
    }
  }
  const int d = maxc;
  auto col = [&](int u, int v) { return color[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; };

  // AS1: every class 0..d occurs, and class 0 is exactly the diagonal.
  std::vector<char> present(static_cast<std::size_t>(d) + 1, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) present[static_cast<std::size_t>(col(u, v))] = 1;
  for (int c = 0; c <= d; ++c)
    if (!present[static_cast<std::size_t>(c)]) {
      report.violations.push_back({"AS1", "color " + std::to_string(c) + " never occurs", {c}});
      break;
    }
  bool as1_ok = true;
  for (int u = 0; u < n && as1_ok; ++u) {
    if (col(u, u) != 0) {
      report.violations.push_back({"AS1", "diagonal entry is not color 0", {u, u}});
      as1_ok = false;
    }
  }
  for (int u = 0; u < n && as1_ok; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && col(u, v) == 0) {
        report.violations.push_back({"AS1", "color 0 appears off the diagonal", {u, v}});
        as1_ok = false;
        break;
      }
  if (!report.ok()) return report;

  // AS2: transposing a class must land in a single class, involutively.
  std::vector<int> dual(static_cast<std::size_t>(d) + 1, -1);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int c = col(u, v), ct = col(v, u);
      if (dual[static_cast<std::size_t>(c)] == -1) {
        dual[static_cast<std::size_t>(c)] = ct;
      } else if (dual[static_cast<std::size_t>(c)] != ct) {
        report.violations.push_back(
            {"AS2", "transpose of class " + std::to_string(c) + " is not a single class", {u, v}});
        return report;
      }
    }
  for (int c = 0; c <= d; ++c)
    if (dual[static_cast<std::size_t>(dual[static_cast<std::size_t>(c)])] != c) {
      report.violations.push_back({"AS2", "dual map is not an involution", {c}});
      return report;
    }

  // Regularity of every class digraph: constant out-valency first, then
  // in-valency equal to the out-valency of the dual class.
  std::vector<int> val(static_cast<std::size_t>(d) + 1, -1);
  for (int c = 0; c <= d && report.ok(); ++c) {
    for (int u = 0; u < n; ++u) {
      int out = 0;
      for (int v = 0; v < n; ++v)
        if (col(u, v) == c) ++out;
      if (val[static_cast<std::size_t>(c)] == -1) val[static_cast<std::size_t>(c)] = out;
      if (out != val[static_cast<std::size_t>(c)]) {
        report.violations.push_back({"regularity", "class " + std::to_string(c) + " has uneven out-valency", {c, u}});
        break;
      }
    }
  }
  for (int c = 0; c <= d && report.ok(); ++c) {
    for (int u = 0; u < n; ++u) {
      int in = 0;
      for (int v = 0; v < n; ++v)
        if (col(v, u) == c) ++in;
      if (in != val[static_cast<std::size_t>(dual[static_cast<std::size_t>(c)])]) {
        report.violations.push_back({"regularity", "class " + std::to_string(c) + " has uneven in-valency", {c, u}});
        break;
      }
    }
  }
  if (!report.ok()) return report;

  // AS3: the triangle count p_{ij}^k from one representative pair per color
  // must agree with every other pair of that color. Exhaustive over all pairs.
  const std::size_t m = static_cast<std::size_t>(d) + 1;
  std::vector<std::vector<long long>> rep_counts(m);
  std::vector<char> have_rep(m, 0);
  std::vector<long long> counts(m * m);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int k = col(u, v);
      std::fill(counts.begin(), counts.end(), 0);
      for (int w = 0; w < n; ++w)
        ++counts[static_cast<std::size_t>(col(u, w)) * m + static_cast<std::size_t>(col(w, v))];
      if (!have_rep[static_cast<std::size_t>(k)]) {
        rep_counts[static_cast<std::size_t>(k)] = counts;
        have_rep[static_cast<std::size_t>(k)] = 1;
      } else if (rep_counts[static_cast<std::size_t>(k)] != counts) {
        for (std::size_t ij = 0; ij < m * m; ++ij)
          if (rep_counts[static_cast<std::size_t>(k)][ij] != counts[ij]) {
            report.violations.push_back(
                {"AS3",
                 "p_{" + std::to_string(ij / m) + "," + std::to_string(ij % m) + "}^" + std::to_string(k) +
                     " differs between pairs of color " + std::to_string(k),
                 {u, v, k}});
            return report;
          }
      }
    }
  return report;
}

inline Scheme build_scheme(std::vector<std::vector<int>> color, Scheme::Origin origin) {
  AxiomReport report = verify_color_matrix(color);
  if (!report.ok()) throw ParseError("invalid association scheme: " + report.summary());
  Scheme s;
  s.n = static_cast<int>(color.size());
  int maxc = 0;
  for (const auto& row : color)
    for (int c : row) maxc = std::max(maxc, c);
  s.d = maxc;
  s.color = std::move(color);
  s.origin = origin;
  s.dual.assign(static_cast<std::size_t>(s.d) + 1, -1);
  s.valence.assign(static_cast<std::size_t>(s.d) + 1, 0);
  for (int v = 0; v < s.n; ++v) ++s.valence[static_cast<std::size_t>(s.color_of(0, v))];
  for (int u = 0; u < s.n; ++u)
    for (int v = 0; v < s.n; ++v) s.dual[static_cast<std::size_t>(s.color_of(u, v))] = s.color_of(v, u);
  return s;
}

}  // namespace detail

/// Verifies (AS1)-(AS3) plus class regularity exhaustively. Violations are
/// report content, not errors.
inline AxiomReport verify_axioms(const Scheme& s) { return detail::verify_color_matrix(s.color); }

inline AxiomReport verify_axioms(const std::vector<std::vector<int>>& color) {
  return detail::verify_color_matrix(color);
}

/// The orbital scheme of a transitive group: colors are orbital indices with
/// the diagonal as class 0. Axioms hold by construction but are re-verified.
inline Scheme from_orbitals(const PermGroup& G) {
  OrbitalData data = orbitals(G);
  return detail::build_scheme(std::move(data.color), Scheme::Origin::schurian_from_group);
}

/// Ingests a raw coloring; rejected with a witness if any axiom fails.
inline Scheme from_color_matrix(std::vector<std::vector<int>> color) {
  return detail::build_scheme(std::move(color), Scheme::Origin::ingested);
}

/// Full tensor, computed once per color from a representative pair and cached.
inline const IntersectionTensor& intersection_tensor(const Scheme& s) {
  if (s.tensor_cache) return *s.tensor_cache;
  auto tensor = std::make_shared<IntersectionTensor>();
  tensor->d = s.d;
  const std::size_t m = static_cast<std::size_t>(s.d) + 1;
  tensor->p.assign(m * m * m, 0);
  std::vector<std::pair<int, int>> rep(m, {-1, -1});
  for (int u = 0; u < s.n; ++u)
    for (int v = 0; v < s.n; ++v) {
      auto& r = rep[static_cast<std::size_t>(s.color_of(u, v))];
      if (r.first == -1) r = {u, v};
    }
  for (int k = 0; k <= s.d; ++k) {
    auto [u, v] = rep[static_cast<std::size_t>(k)];
    for (int w = 0; w < s.n; ++w) ++tensor->at(s.color_of(u, w), s.color_of(w, v), k);
  }
  s.tensor_cache = tensor;
  return *s.tensor_cache;
}

/// Adjacency matrix A_i of class i; A_0 is the identity.
inline ExactMatrix adjacency_matrix(const Scheme& s, int i) {
  if (i < 0 || i > s.d) throw Error("adjacency_matrix: class index out of range");
  ExactMatrix a(static_cast<std::size_t>(s.n), static_cast<std::size_t>(s.n));
  for (int u = 0; u < s.n; ++u)
    for (int v = 0; v < s.n; ++v)
      if (s.color_of(u, v) == i) a.at(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = 1;
  return a;
}

/// Diagonal idempotent E*_{i,v} indicating N_i(v).
inline ExactMatrix dual_idempotent(const Scheme& s, int i, int v) {
  if (i < 0 || i > s.d) throw Error("dual_idempotent: class index out of range");
  if (v < 0 || v >= s.n) throw Error("dual_idempotent: base point out of range");
  ExactMatrix e(static_cast<std::size_t>(s.n), static_cast<std::size_t>(s.n));
  for (int u = 0; u < s.n; ++u)
    if (s.color_of(v, u) == i) e.at(static_cast<std::size_t>(u), static_cast<std::size_t>(u)) = 1;
  return e;
}

inline Thinness thinness(const Scheme& s) {
  int maxval = 0;
  for (int i = 0; i <= s.d; ++i) maxval = std::max(maxval, s.valence[static_cast<std::size_t>(i)]);
  if (maxval <= 1) return Thinness::thin;
  if (maxval == 2) return Thinness::quasi_thin;
  return Thinness::neither;
}

/// Defining Bose-Mesner identity A_i A_j = sum_k p_{ij}^k A_k, checked
/// exactly for every ordered pair of classes.
inline bool verify_bose_mesner(const Scheme& s) {
  const auto& t = intersection_tensor(s);
  std::vector<ExactMatrix> adj;
  for (int i = 0; i <= s.d; ++i) adj.push_back(adjacency_matrix(s, i));
  for (int i = 0; i <= s.d; ++i)
    for (int j = 0; j <= s.d; ++j) {
      ExactMatrix lhs = mat_mul(adj[static_cast<std::size_t>(i)], adj[static_cast<std::size_t>(j)]);
      ExactMatrix rhs(static_cast<std::size_t>(s.n), static_cast<std::size_t>(s.n));
      for (int k = 0; k <= s.d; ++k) {
        long long c = t.at(i, j, k);
        if (c != 0) rhs = rhs + Rational(c) * adj[static_cast<std::size_t>(k)];
      }
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace schemeforge
