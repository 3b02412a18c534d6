#include <gtest/gtest.h>

#include <cmath>

#include "setopt/cone.hpp"
#include "setopt/error.hpp"
#include "support.hpp"

using setopt::Cone;
using setopt::ErrorCode;
using setopt::Rational;
using setopt::Vec;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const setopt::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::Io;
}

}  // namespace

TEST(Cone, OrthantIsValid) {
  auto k = fixture::orthant2();
  EXPECT_EQ(k.dim(), 2u);
  EXPECT_EQ(k.num_rows(), 2u);
}

TEST(Cone, RejectsBadCones) {
  EXPECT_EQ(code_of([] { Cone<double>::validate({{1, 0}}, {1, 0}); }), ErrorCode::NotPointed);
  EXPECT_EQ(code_of([] { Cone<double>::validate({{1, 0}, {0, 1}}, {1, 0}); }),
            ErrorCode::NotInterior);
  EXPECT_EQ(code_of([] { Cone<Rational>::validate({{0, 0}, {0, 1}}, {1, 1}); }),
            ErrorCode::ZeroRow);
  EXPECT_EQ(code_of([] { Cone<double>::validate({{1, 0, 0}, {0, 1}}, {1, 1}); }),
            ErrorCode::DimMismatch);
}

TEST(Cone, MarginHandValues) {
  auto k = fixture::orthant2q();
  EXPECT_EQ(k.margin({0, 0}, {2, 3}), 2);
  EXPECT_EQ(k.margin({5, -7}, {5, -7}), 0);

  auto skew = Cone<Rational>::validate({{0, 1}, {1, -1}}, {1, Rational(1, 2)});
  EXPECT_EQ(skew.margin({0, 0}, {2, 1}), 2);
}

TEST(Cone, MarginContract) {
  // from <_K to - eps e iff eps < margin, and <=_K iff eps <= margin.
  auto k = Cone<Rational>::validate({{2, 1}, {-1, 3}}, {1, 1});
  const std::vector<Vec<Rational>> pts{{0, 0}, {1, 2}, {3, -1}, {Rational(1, 3), 4}, {-2, 1}};
  for (const auto& a : pts) {
    for (const auto& b : pts) {
      const Rational m = k.margin(a, b);
      for (Rational eps : {m - 1, m, m + 1, Rational(0), Rational(1, 2)}) {
        Vec<Rational> t{b[0] - eps, b[1] - eps};
        EXPECT_EQ(k.less(a, t), eps < m);
        EXPECT_EQ(k.leq(a, t), eps <= m);
        EXPECT_EQ(k.lneq(a, t), eps <= m && a != t);
      }
    }
  }
}

TEST(Cone, REpsilon) {
  auto k = fixture::orthant2();
  EXPECT_DOUBLE_EQ(setopt::r_epsilon(k, 2.0, 0.5), 1.0);

  auto scaled = Cone<double>::validate({{2, 0}, {0, 2}}, {1, 1});
  EXPECT_DOUBLE_EQ(setopt::r_epsilon(scaled, 2.0, 0.5), setopt::r_epsilon(k, 2.0, 0.5));

  EXPECT_EQ(code_of([&] { setopt::r_epsilon(k, 0.0, 0.5); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([&] { setopt::r_epsilon(k, 1.0, 1.0); }), ErrorCode::InvalidArgument);
}

TEST(Cone, REpsilonBallInsideInterior) {
  auto k = Cone<double>::validate({{2, 1}, {-1, 3}}, {1, 1});
  const double eps = 0.7;
  const double r = setopt::r_epsilon(k, eps, 0.5);
  for (int s = 0; s < 360; ++s) {
    const double th = s * M_PI / 180.0;
    Vec<double> y{eps + r * std::cos(th), eps + r * std::sin(th)};
    EXPECT_TRUE(k.less({0, 0}, y)) << "angle " << s;
  }
}

TEST(Cone, DualCone) {
  auto k = fixture::orthant2();
  EXPECT_TRUE(k.in_dual_cone({1, 1}));
  EXPECT_FALSE(k.in_dual_cone({-1, 0}));
  EXPECT_TRUE(k.in_dual_cone({0, 0}));

  // K = {y : y2 >= 0, y1 - y2 >= 0}; K* is generated by (0,1) and (1,-1).
  auto skew = Cone<Rational>::validate({{0, 1}, {1, -1}}, {2, 1});
  EXPECT_TRUE(skew.in_dual_cone({1, 0}));
  EXPECT_TRUE(skew.in_dual_cone({2, -1}));
  EXPECT_FALSE(skew.in_dual_cone({0, -1}));
}

TEST(Cone, Rank) {
  EXPECT_EQ(setopt::matrix_rank<Rational>({{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(setopt::matrix_rank<Rational>({{1, 2}, {2, 4}, {0, 1}}), 2u);
}

TEST(Cone, ConvertKeepsValues) {
  auto k = Cone<Rational>::validate({{0, 1}, {1, -1}}, {1, Rational(1, 2)});
  auto d = k.convert<double>();
  EXPECT_DOUBLE_EQ(d.margin({0, 0}, {2, 1}), 2.0);
}
