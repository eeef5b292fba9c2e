#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <vector>

#include "schemeforge/exact_matrix.hpp"

namespace schemeforge {

/// Row-reduced exact basis of a subspace of the n*n-dimensional matrix space.
/// Matrices are flattened row-major; pivots are first-nonzero columns, each
/// pivot entry is 1 and is the only nonzero entry in its column (RREF). Rows
/// are kept sorted by pivot, which makes the basis reproducible across runs.
///
/// Mutation is single-writer; concurrent reads of a settled basis are safe.
class SpanBasis {
public:
  explicit SpanBasis(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }

  const std::vector<Rational>& row(std::size_t r) const { return rows_[r]; }
  const std::vector<std::uint32_t>& row_support(std::size_t r) const { return supports_[r]; }
  std::size_t pivot(std::size_t r) const { return pivots_[r]; }

  /// Reduces v against the basis in place. On return v is the residue.
  void reduce(std::vector<Rational>& v) const {
    if (v.size() != ambient_) throw Error("SpanBasis: ambient mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& c = v[pivots_[r]];
      if (is_zero(c)) continue;
      Rational coef = c;  // row pivot entry is 1
      for (std::uint32_t col : supports_[r]) v[col] -= coef * rows_[r][col];
    }
  }

  /// Inserts the flattened vector, maintaining RREF. Returns true if the
  /// basis grew (the vector was independent of the current span).
  bool insert_vector(std::vector<Rational> v) {
    reduce(v);
    std::size_t piv = ambient_;
    for (std::size_t c = 0; c < ambient_; ++c)
      if (!is_zero(v[c])) {
        piv = c;
        break;
      }
    if (piv == ambient_) return false;
    adopt_row(std::move(v), piv);
    return true;
  }

  bool insert(const ExactMatrix& m) {
    if (m.rows() * m.cols() != ambient_) throw Error("SpanBasis: matrix shape mismatch");
    return insert_vector(m.flat());
  }

  bool contains_vector(std::vector<Rational> v) const {
    reduce(v);
    for (const auto& x : v)
      if (!is_zero(x)) return false;
    return true;
  }

  bool contains(const ExactMatrix& m) const { return contains_vector(m.flat()); }

  /// Basis rows reshaped back to n x n matrices.
  std::vector<ExactMatrix> matrices(std::size_t n) const {
    if (n * n != ambient_) throw Error("SpanBasis: not a square ambient");
    std::vector<ExactMatrix> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(ExactMatrix::from_flat(n, n, r));
    return out;
  }

  /// Sparse (row, col, value) triples of each basis row, for debugging.
  std::string dump(std::size_t n) const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      os << "row " << r << ":";
      for (std::uint32_t col : supports_[r])
        os << " (" << col / n << "," << col % n << "," << rows_[r][col] << ")";
      os << "\n";
    }
    return os.str();
  }

  // Reduction workspace entry point used by the closure engine: v is dense,
  // already reduced and normalized rows are applied here exactly as in
  // insert_vector, but the caller owns the scratch buffer.
  bool insert_scratch(std::vector<Rational>& scratch) {
    reduce(scratch);
    std::size_t piv = ambient_;
    for (std::size_t c = 0; c < ambient_; ++c)
      if (!is_zero(scratch[c])) {
        piv = c;
        break;
      }
    if (piv == ambient_) return false;
    std::vector<Rational> v(ambient_);
    v.swap(scratch);
    scratch.assign(ambient_, Rational(0));
    adopt_row(std::move(v), piv);
    return true;
  }

private:
  void adopt_row(std::vector<Rational> v, std::size_t piv) {
    Rational lead = v[piv];
    std::vector<std::uint32_t> support;
    for (std::size_t c = piv; c < ambient_; ++c) {
      if (is_zero(v[c])) continue;
      v[c] /= lead;
      support.push_back(static_cast<std::uint32_t>(c));
    }
    // clear the new pivot column in existing rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& c = rows_[r][piv];
      if (is_zero(c)) continue;
      Rational coef = c;
      for (std::uint32_t col : support) rows_[r][col] -= coef * v[col];
      rebuild_support(r);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    rows_.insert(rows_.begin() + pos, std::move(v));
    supports_.insert(supports_.begin() + pos, std::move(support));
    pivots_.insert(pivots_.begin() + pos, piv);
  }

  void rebuild_support(std::size_t r) {
    supports_[r].clear();
    for (std::size_t c = pivots_[r]; c < ambient_; ++c)
      if (!is_zero(rows_[r][c])) supports_[r].push_back(static_cast<std::uint32_t>(c));
  }

  std::size_t ambient_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::vector<std::uint32_t>> supports_;
  std::vector<std::size_t> pivots_;
};

/// Seeds a basis with the generators and repeatedly inserts all pairwise
/// products of the current basis rows until a full round adds nothing.
/// Terminates since the dimension is bounded by the ambient dimension; the
/// round cap is a defensive guard only.
inline SpanBasis algebra_closure(const std::vector<ExactMatrix>& generators,
                                 std::size_t round_cap = 0) {
  if (generators.empty()) throw Error("algebra_closure: no generators");
  const std::size_t n = generators[0].rows();
  for (const auto& g : generators)
    if (g.rows() != n || g.cols() != n) throw Error("algebra_closure: matrices must be square and equal");
  if (round_cap == 0) round_cap = n * n + 1;

  SpanBasis basis(n * n);
  for (const auto& g : generators) basis.insert(g);

  // Sparse row lists per basis matrix; products touch only real entries.
  struct Sparse {
    std::vector<std::vector<std::pair<std::uint32_t, Rational>>> rows;
  };
  auto snapshot = [&]() {
    std::vector<Sparse> mats(basis.dim());
    for (std::size_t r = 0; r < basis.dim(); ++r) {
      mats[r].rows.resize(n);
      for (std::uint32_t col : basis.row_support(r))
        mats[r].rows[col / n].emplace_back(col % n, basis.row(r)[col]);
    }
    return mats;
  };

  std::vector<Rational> scratch(n * n, Rational(0));
  std::vector<std::uint32_t> touched;
  std::vector<char> touched_flag(n * n, 0);

  std::size_t rounds = 0;
  for (;;) {
    if (++rounds > round_cap) throw Error("algebra_closure: round cap exceeded");
    auto mats = snapshot();
    bool grew = false;
    for (const auto& A : mats) {
      for (const auto& B : mats) {
        touched.clear();
        for (std::size_t i = 0; i < n; ++i) {
          for (const auto& [k, x] : A.rows[i]) {
            for (const auto& [j, y] : B.rows[k]) {
              std::uint32_t idx = static_cast<std::uint32_t>(i * n + j);
              scratch[idx] += x * y;
              if (!touched_flag[idx]) {
                touched_flag[idx] = 1;
                touched.push_back(idx);
              }
            }
          }
        }
        if (!touched.empty()) {
          if (basis.insert_scratch(scratch)) grew = true;
          // insert_scratch either consumed-and-reset scratch (on growth) or
          // left the fully reduced residue, which is all zeros when dependent
          for (std::uint32_t idx : touched) touched_flag[idx] = 0;
        }
      }
    }
    if (!grew) break;
  }
  return basis;
}

}  // namespace schemeforge
