#include <gtest/gtest.h>

#include <random>

#include "setopt/error.hpp"
#include "setopt/lp.hpp"

using setopt::Rational;
using setopt::Vec;
namespace lp = setopt::lp;

namespace {

// max c^T x over {A x <= b, x >= 0} by enumerating every basic point: pick
// n active constraints among the rows and the bounds, solve, keep feasible.
struct Vertex {
  bool any = false;
  Rational best;
};

std::optional<Vec<Rational>> solve_square(std::vector<Vec<Rational>> m, Vec<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[c]);
    std::swap(rhs[piv], rhs[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = 0; k < n; ++k) m[r][k] -= f * m[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  Vec<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

Vertex enumerate(const std::vector<Vec<Rational>>& a, const Vec<Rational>& b, const Vec<Rational>& c) {
  const std::size_t n = c.size();
  std::vector<Vec<Rational>> rows = a;
  Vec<Rational> rhs = b;
  for (std::size_t j = 0; j < n; ++j) {
    Vec<Rational> r(n, 0);
    r[j] = -1;
    rows.push_back(r);
    rhs.push_back(0);
  }
  Vertex out;
  const std::size_t total = rows.size();
  for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != n) continue;
    std::vector<Vec<Rational>> m;
    Vec<Rational> r;
    for (std::size_t k = 0; k < total; ++k)
      if (mask >> k & 1) {
        m.push_back(rows[k]);
        r.push_back(rhs[k]);
      }
    auto x = solve_square(m, r);
    if (!x) continue;
    bool ok = true;
    for (std::size_t k = 0; k < total && ok; ++k) {
      Rational s = 0;
      for (std::size_t j = 0; j < n; ++j) s += rows[k][j] * (*x)[j];
      ok = s <= rhs[k];
    }
    if (!ok) continue;
    Rational v = 0;
    for (std::size_t j = 0; j < n; ++j) v += c[j] * (*x)[j];
    if (!out.any || v > out.best) out.best = v;
    out.any = true;
  }
  return out;
}

}  // namespace

TEST(Lp, SimplexVertexFeasible) {
  lp::LinearProgram<double> prog(2);
  prog.add_eq({1, 1}, 1);
  prog.lower = {0.0, 0.0};
  auto f = lp::feasible(prog);
  ASSERT_TRUE(f.feasible);
  EXPECT_NEAR(f.point[0] + f.point[1], 1.0, 1e-12);
  EXPECT_GE(f.point[0], 0.0);
  EXPECT_GE(f.point[1], 0.0);
}

TEST(Lp, ContradictoryBoundsInfeasible) {
  lp::LinearProgram<Rational> prog(1);
  prog.add_eq({1}, -1);
  prog.lower = {Rational(0)};
  EXPECT_FALSE(lp::feasible(prog).feasible);
  EXPECT_EQ(lp::maximize(prog).status, lp::Status::Infeasible);
}

TEST(Lp, UniqueSolution) {
  lp::LinearProgram<Rational> prog(2);
  prog.add_eq({1, -1}, 0);
  prog.add_eq({1, 1}, 2);
  prog.lower = {Rational(0), Rational(0)};
  auto f = lp::feasible(prog);
  ASSERT_TRUE(f.feasible);
  EXPECT_EQ(f.point, (Vec<Rational>{1, 1}));
}

TEST(Lp, SingleBoundOptimum) {
  lp::LinearProgram<double> prog(1);
  prog.objective = {1};
  prog.add_le({1}, 1);
  auto out = lp::maximize(prog);
  ASSERT_TRUE(out.optimal());
  EXPECT_NEAR(out.value, 1.0, 1e-12);
  EXPECT_NEAR(out.point[0], 1.0, 1e-12);
}

TEST(Lp, FreeVariableUnbounded) {
  lp::LinearProgram<Rational> prog(1);
  prog.objective = {1};
  EXPECT_EQ(lp::maximize(prog).status, lp::Status::Unbounded);
}

TEST(Lp, MaximizeOnSimplex) {
  lp::LinearProgram<Rational> prog(2);
  prog.objective = {1, 0};
  prog.add_eq({1, 1}, 1);
  prog.lower = {Rational(0), Rational(0)};
  auto out = lp::maximize(prog);
  ASSERT_TRUE(out.optimal());
  EXPECT_EQ(out.value, 1);
  EXPECT_EQ(out.point, (Vec<Rational>{1, 0}));
}

TEST(Lp, MalformedProgramRejected) {
  lp::LinearProgram<double> prog(2);
  prog.add_eq({1, 1, 1}, 1);
  try {
    lp::feasible(prog);
    FAIL() << "expected an error";
  } catch (const setopt::Error& e) {
    EXPECT_EQ(e.code(), setopt::ErrorCode::DimensionMismatch);
  }
}

TEST(Lp, IterationCapRaised) {
  lp::LinearProgram<double> prog(3);
  prog.objective = {1, 1, 1};
  prog.add_le({1, 1, 1}, 3);
  prog.add_le({1, 0, 0}, 1);
  prog.add_le({0, 1, 0}, 1);
  prog.lower = {0.0, 0.0, 0.0};
  lp::Options opts;
  opts.max_iterations = 0;
  try {
    lp::maximize(prog, opts);
    FAIL() << "expected an error";
  } catch (const setopt::Error& e) {
    EXPECT_EQ(e.code(), setopt::ErrorCode::IterationCap);
  }
}

TEST(Lp, DegenerateCyclingExampleTerminates) {
  // Beale's classic cycling program; Bland's rule must terminate at 1/20.
  lp::LinearProgram<Rational> prog(4);
  prog.objective = {Rational(3, 4), Rational(-150), Rational(1, 50), Rational(-6)};
  prog.add_le({Rational(1, 4), Rational(-60), Rational(-1, 25), Rational(9)}, 0);
  prog.add_le({Rational(1, 2), Rational(-90), Rational(-1, 50), Rational(3)}, 0);
  prog.add_le({0, 0, 1, 0}, 1);
  prog.lower = {Rational(0), Rational(0), Rational(0), Rational(0)};
  auto out = lp::maximize(prog);
  ASSERT_TRUE(out.optimal());
  EXPECT_EQ(out.value, Rational(1, 20));
}

TEST(Lp, RandomProgramsMatchVertexEnumeration) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-4, 6), rhs(1, 9), obj(-3, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 2, rows = 2 + trial % 3;
    std::vector<Vec<Rational>> a;
    Vec<Rational> b, c;
    for (std::size_t r = 0; r < rows; ++r) {
      Vec<Rational> row;
      for (std::size_t j = 0; j < n; ++j) row.push_back(coef(rng));
      a.push_back(row);
      b.push_back(rhs(rng));
    }
    // box keeps the program bounded
    for (std::size_t j = 0; j < n; ++j) {
      Vec<Rational> row(n, 0);
      row[j] = 1;
      a.push_back(row);
      b.push_back(10);
    }
    for (std::size_t j = 0; j < n; ++j) c.push_back(obj(rng));

    lp::LinearProgram<Rational> exact(n);
    lp::LinearProgram<double> approx(n);
    exact.objective = c;
    for (std::size_t j = 0; j < n; ++j) approx.objective[j] = c[j].convert_to<double>();
    for (std::size_t r = 0; r < a.size(); ++r) {
      exact.add_le(a[r], b[r]);
      Vec<double> row;
      for (auto& v : a[r]) row.push_back(v.convert_to<double>());
      approx.add_le(row, b[r].convert_to<double>());
    }
    for (std::size_t j = 0; j < n; ++j) {
      exact.lower[j] = Rational(0);
      approx.lower[j] = 0.0;
    }

    auto ref = enumerate(a, b, c);
    auto got = lp::maximize(exact);
    auto fl = lp::maximize(approx);
    ASSERT_TRUE(ref.any) << "trial " << trial;  // x = 0 is feasible
    ASSERT_TRUE(got.optimal()) << "trial " << trial;
    EXPECT_EQ(got.value, ref.best) << "trial " << trial;
    EXPECT_EQ(lp::max_violation(exact, got.point), 0);
    ASSERT_TRUE(fl.optimal());
    EXPECT_NEAR(fl.value, ref.best.convert_to<double>(), 1e-7);
  }
}
