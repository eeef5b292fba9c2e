#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "schemeforge/exact_matrix.hpp"
#include "schemeforge/span_basis.hpp"

using namespace schemeforge;

namespace {

ExactMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
  ExactMatrix m(n, n);
  m.at(i, j) = 1;
  return m;
}

// deterministic pseudo-random matrix with small integer entries
ExactMatrix random_matrix(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> entry(-3, 3);
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
  return m;
}

}  // namespace

TEST_CASE("exact matrix arithmetic") {
  ExactMatrix a(2, 2);
  a.at(0, 0) = Rational(1, 3);
  a.at(0, 1) = 2;
  a.at(1, 0) = -1;
  a.at(1, 1) = Rational(5, 7);

  SECTION("rationals stay exact") {
    // 1/3 + 1/3 + 1/3 == 1 holds exactly, unlike floating point
    Rational third(1, 3);
    CHECK(third + third + third == 1);
    ExactMatrix s = a + a + a;
    CHECK(s.at(0, 0) == 1);
    CHECK(s.at(1, 1) == Rational(15, 7));
  }

  SECTION("identity and ones") {
    CHECK(mat_mul(ExactMatrix::identity(2), a) == a);
    CHECK(mat_mul(a, ExactMatrix::identity(2)) == a);
    ExactMatrix j = ExactMatrix::ones(2);
    CHECK(mat_mul(j, j) == Rational(2) * j);
  }

  SECTION("hand-computed product") {
    ExactMatrix b(2, 2);
    b.at(0, 0) = 1;
    b.at(0, 1) = 1;
    b.at(1, 0) = 0;
    b.at(1, 1) = 2;
    ExactMatrix c = mat_mul(a, b);
    CHECK(c.at(0, 0) == Rational(1, 3));
    CHECK(c.at(0, 1) == Rational(1, 3) + 4);
    CHECK(c.at(1, 0) == -1);
    CHECK(c.at(1, 1) == -1 + Rational(10, 7));
  }

  SECTION("transpose and trace") {
    CHECK(a.transpose().transpose() == a);
    CHECK(a.trace() == Rational(1, 3) + Rational(5, 7));
    std::mt19937 rng(7);
    ExactMatrix x = random_matrix(4, rng), y = random_matrix(4, rng);
    CHECK(mat_mul(x, y).transpose() == mat_mul(y.transpose(), x.transpose()));
    CHECK(mat_mul(x, y).trace() == mat_mul(y, x).trace());
  }

  SECTION("shape errors") {
    CHECK_THROWS_AS(a + ExactMatrix(3, 3), Error);
    CHECK_THROWS_AS(mat_mul(a, ExactMatrix(3, 2)), Error);
    CHECK_THROWS_AS(ExactMatrix::from_flat(2, 2, {1, 2, 3}), Error);
  }
}

TEST_CASE("span basis") {
  SECTION("dimension bookkeeping and membership") {
    SpanBasis basis(4);  // 2x2 matrices
    CHECK(basis.dim() == 0);
    CHECK(basis.contains(ExactMatrix(2, 2)));  // zero matrix is in every span

    CHECK(basis.insert(ExactMatrix::identity(2)));
    CHECK(basis.dim() == 1);
    CHECK_FALSE(basis.insert(Rational(7) * ExactMatrix::identity(2)));  // dependent
    CHECK(basis.dim() == 1);

    CHECK(basis.insert(ExactMatrix::ones(2)));
    CHECK(basis.dim() == 2);
    // span{I, J} contains J - I but not E01 alone
    CHECK(basis.contains(ExactMatrix::ones(2) - ExactMatrix::identity(2)));
    CHECK_FALSE(basis.contains(unit(2, 0, 1)));

    CHECK(basis.insert(unit(2, 0, 1)));
    CHECK_FALSE(basis.insert(unit(2, 1, 0)));  // equals J - I - E01
    CHECK(basis.insert(unit(2, 0, 0)));
    CHECK(basis.dim() == 4);  // full ambient
    CHECK(basis.contains(unit(2, 1, 1)));
  }

  SECTION("reduced form is canonical: insertion order does not matter") {
    std::mt19937 rng(11);
    std::vector<ExactMatrix> mats;
    for (int i = 0; i < 5; ++i) mats.push_back(random_matrix(3, rng));

    auto build = [](const std::vector<ExactMatrix>& ms) {
      SpanBasis b(9);
      for (const auto& m : ms) b.insert(m);
      return b;
    };
    SpanBasis b1 = build(mats);
    std::vector<ExactMatrix> shuffled = mats;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    SpanBasis b2 = build(shuffled);

    REQUIRE(b1.dim() == b2.dim());
    for (std::size_t r = 0; r < b1.dim(); ++r) {
      CHECK(b1.pivot(r) == b2.pivot(r));
      CHECK(b1.row(r) == b2.row(r));
    }
  }

  SECTION("RREF invariants") {
    std::mt19937 rng(23);
    SpanBasis b(16);
    for (int i = 0; i < 6; ++i) b.insert(random_matrix(4, rng));
    for (std::size_t r = 0; r < b.dim(); ++r) {
      if (r > 0) CHECK(b.pivot(r - 1) < b.pivot(r));
      CHECK(b.row(r)[b.pivot(r)] == 1);
      for (std::size_t r2 = 0; r2 < b.dim(); ++r2)
        if (r2 != r) CHECK(is_zero(b.row(r2)[b.pivot(r)]));
      // supports list exactly the nonzero columns
      for (std::uint32_t col : b.row_support(r)) CHECK_FALSE(is_zero(b.row(r)[col]));
      std::size_t nnz = 0;
      for (const auto& x : b.row(r))
        if (!is_zero(x)) ++nnz;
      CHECK(nnz == b.row_support(r).size());
    }
  }

  SECTION("ambient mismatch is an error") {
    SpanBasis b(4);
    CHECK_THROWS_AS(b.insert(ExactMatrix(3, 3)), Error);
    CHECK_THROWS_AS(b.contains_vector(std::vector<Rational>(5)), Error);
  }
}

TEST_CASE("algebra closure") {
  SECTION("matrix units generate the full algebra") {
    // E01 and E12 generate all of the upper triangular nilpotent part plus
    // products; closure is span{E01, E12, E02} of dimension 3
    std::vector<ExactMatrix> gens = {unit(3, 0, 1), unit(3, 1, 2)};
    SpanBasis b = algebra_closure(gens);
    CHECK(b.dim() == 3);
    CHECK(b.contains(unit(3, 0, 2)));
    CHECK_FALSE(b.contains(ExactMatrix::identity(3)));
  }

  SECTION("round cap triggers") {
    // the same generators need two rounds; a cap of one round must throw
    std::vector<ExactMatrix> gens = {unit(3, 0, 1), unit(3, 1, 2)};
    CHECK_THROWS_AS(algebra_closure(gens, 1), Error);
  }

  SECTION("closure is a fixpoint") {
    std::mt19937 rng(5);
    std::vector<ExactMatrix> gens = {random_matrix(3, rng), random_matrix(3, rng)};
    SpanBasis b = algebra_closure(gens);
    auto mats = b.matrices(3);
    for (const auto& x : mats)
      for (const auto& y : mats) CHECK(b.contains(mat_mul(x, y)));
    // and re-closing the basis changes nothing
    CHECK(algebra_closure(mats).dim() == b.dim());
  }

  SECTION("conjugation by a permutation matrix preserves dimension") {
    std::mt19937 rng(13);
    std::vector<ExactMatrix> gens = {random_matrix(4, rng), random_matrix(4, rng)};
    ExactMatrix p(4, 4);  // cycle 0->1->2->3->0
    p.at(0, 1) = p.at(1, 2) = p.at(2, 3) = p.at(3, 0) = 1;
    ExactMatrix pinv = p.transpose();
    std::vector<ExactMatrix> conj;
    for (const auto& g : gens) conj.push_back(mat_mul(pinv, mat_mul(g, p)));
    CHECK(algebra_closure(gens).dim() == algebra_closure(conj).dim());
  }

  SECTION("identity alone closes immediately") {
    SpanBasis b = algebra_closure({ExactMatrix::identity(5)});
    CHECK(b.dim() == 1);
  }

  SECTION("no generators is an error") {
    CHECK_THROWS_AS(algebra_closure({}), Error);
  }
}
