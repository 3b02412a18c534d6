#include <gtest/gtest.h>

#include <filesystem>
#include <nlohmann/json.hpp>

#include "setopt/error.hpp"
#include "setopt/instance.hpp"
#include "support.hpp"

using nlohmann::json;
using setopt::ErrorCode;
using setopt::ExampleParams;
using setopt::Instance;
using setopt::Rational;
using setopt::Vec;
using fixture::pt;

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

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const setopt::Error& e) {
    return e.what();
  }
  return "";
}

json small_doc() {
  return json::parse(R"({
    "cone": {"rows": [[1, 0], [0, 1]], "e": [1, 1]},
    "decisions": [{"label": "a", "x": [0]}, {"label": "b", "x": [1]}],
    "images": [
      {"type": "finite", "points": [[0, 1], ["1/2", 0]]},
      {"type": "finite", "points": [[2, 2]]}
    ]
  })");
}

}  // namespace

TEST(Instance, SaveLoadRoundTrip) {
  auto inst = setopt::make_example("mfdvp");
  auto dir = std::filesystem::temp_directory_path() / "setopt_instance_test";
  std::filesystem::create_directories(dir);
  auto path = dir / "mfdvp.json";
  setopt::save_instance(inst, path);
  EXPECT_EQ(setopt::load_instance(path), inst);
  EXPECT_EQ(setopt::load_instance(path, {.require_rational = true}), inst);
  EXPECT_EQ(setopt::instance_from_json(setopt::instance_to_json(inst)), inst);
  std::filesystem::remove_all(dir);
}

TEST(Instance, RoundTripOfEveryGenerator) {
  for (const auto& name : setopt::example_names()) {
    auto inst = setopt::make_example(name);
    EXPECT_EQ(setopt::instance_from_json(setopt::instance_to_json(inst)), inst) << name;
  }
}

TEST(Instance, ParsesSmallDocument) {
  auto inst = setopt::instance_from_json(small_doc());
  ASSERT_EQ(inst.size(), 2u);
  EXPECT_EQ(inst.labels(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(inst.images[0].points[1], pt({"1/2", "0"}));
  EXPECT_EQ(inst.index_of("b"), 1u);
  EXPECT_EQ(code_of([&] { inst.index_of("zzz"); }), ErrorCode::UnknownLabel);
}

TEST(Instance, DuplicateLabel) {
  auto doc = small_doc();
  doc["decisions"][1]["label"] = "a";
  EXPECT_EQ(code_of([&] { setopt::instance_from_json(doc); }), ErrorCode::DuplicateLabel);
}

TEST(Instance, ImageDimensionMismatch) {
  auto doc = small_doc();
  doc["images"][1]["points"] = json::parse("[[1, 2, 3]]");
  EXPECT_EQ(code_of([&] { setopt::instance_from_json(doc); }), ErrorCode::DimMismatch);
}

TEST(Instance, MixedImageKinds) {
  auto doc = small_doc();
  doc["images"][1]["type"] = "polytope";
  EXPECT_EQ(code_of([&] { setopt::instance_from_json(doc); }), ErrorCode::MixedImageKinds);
}

TEST(Instance, EmptyImage) {
  auto doc = small_doc();
  doc["images"][0]["points"] = json::array();
  EXPECT_EQ(code_of([&] { setopt::instance_from_json(doc); }), ErrorCode::EmptyImage);
}

TEST(Instance, ParseErrorsNameTheField) {
  auto doc = small_doc();
  doc["decisions"][1]["label"] = 7;
  auto msg = message_of([&] { setopt::instance_from_json(doc); });
  EXPECT_NE(msg.find("decisions[1].label"), std::string::npos) << msg;

  auto doc2 = small_doc();
  doc2["images"][0]["points"][1][0] = "one half";
  EXPECT_EQ(code_of([&] { setopt::instance_from_json(doc2); }), ErrorCode::ParseError);
}

TEST(Instance, ExactModeRejectsFloatLiterals) {
  auto doc = small_doc();
  doc["images"][0]["points"][0][0] = 0.5;
  EXPECT_EQ(code_of([&] { setopt::instance_from_json(doc, {.require_rational = true}); }),
            ErrorCode::NonRationalLiteral);
  // without exact mode the float is read as the decimal it prints as
  auto inst = setopt::instance_from_json(doc);
  EXPECT_EQ(inst.images[0].points[0][0], Rational(1, 2));
}

TEST(Instance, BadConeRejected) {
  auto doc = small_doc();
  doc["cone"]["e"] = json::parse("[1, 0]");
  EXPECT_EQ(code_of([&] { setopt::instance_from_json(doc); }), ErrorCode::NotInterior);
}

TEST(Instance, MakeProblemCanonicalizesImages) {
  auto inst = fixture::finite_instance({{{1, 1}, {1, 1}, {0, 2}}, {{0, 0}}});
  auto prob = setopt::make_problem<Rational>(inst);
  EXPECT_EQ(prob.images[0].points.size(), 2u);
  auto poly = fixture::finite_instance({{{0, 0}, {2, 0}, {0, 2}, {1, 1}, {1, 0}}}, true);
  EXPECT_EQ(setopt::make_problem<double>(poly).images[0].points.size(), 3u);
}

TEST(Generators, MfdvpImages) {
  auto inst = setopt::make_example("mfdvp");
  ASSERT_EQ(inst.labels(), (std::vector<std::string>{"0", "1", "2"}));
  EXPECT_EQ(inst.images[0].points, (std::vector<Vec<Rational>>{{2, 0}, {0, 2}}));
  EXPECT_EQ(inst.images[1].points, (std::vector<Vec<Rational>>{{1, -1}, {0, 2}}));
  EXPECT_EQ(inst.images[2].points, (std::vector<Vec<Rational>>{{2, 0}, {-1, 1}}));
  auto poly = setopt::make_example("mfdvp_polytope");
  EXPECT_FALSE(poly.all_finite());
  EXPECT_EQ(poly.images[1].points, inst.images[1].points);
}

TEST(Generators, TOneAndStrictMin) {
  auto t = setopt::make_example("t_one");
  ASSERT_EQ(t.size(), 9u);
  EXPECT_EQ(t.labels().front(), "0.25");
  EXPECT_EQ(t.labels().back(), "0.5");
  EXPECT_EQ(t.images[4].points,
            (std::vector<Vec<Rational>>{{1, 0}, {0, 1}, pt({"0.375", "0.375"})}));

  ExampleParams g;
  g.grid = 3;
  auto s = setopt::make_example("strict_min", g);
  EXPECT_EQ(s.labels(), (std::vector<std::string>{"0", "0.5", "1"}));
  EXPECT_EQ(s.images[1].points, (std::vector<Vec<Rational>>{pt({"0", "0.5"})}));
}

TEST(Generators, CantorPoints) {
  ExampleParams c;
  c.truncation = 3;
  c.limit_points = 4;
  auto inst = setopt::make_example("cantor", c);
  EXPECT_EQ(inst.labels(), (std::vector<std::string>{"0", "1/2", "2/3", "1"}));
  // F(1/2) = {y^{0,1}, y^{1,1}}
  const auto& half = inst.images[inst.index_of("1/2")].points;
  ASSERT_EQ(half.size(), 2u);
  EXPECT_EQ(half[1], pt({"4.25", "-3.25"}));
  EXPECT_EQ(half[0], pt({"3", "-2"}));
  const auto& one = inst.images[inst.index_of("1")].points;
  EXPECT_EQ(one.size(), 5u);
  EXPECT_EQ(one[0], pt({"3.5", "-1.5"}));
  // base points have y1 + y2 = 2 - 2^(1-i) and the tails only add to it
  for (const auto& img : inst.images)
    for (const auto& y : img.points) EXPECT_GE(y[0] + y[1], 0);
}

TEST(Generators, CantorRejectsShortLimit) {
  ExampleParams c;
  c.truncation = 5;
  c.limit_points = 3;
  EXPECT_EQ(code_of([&] { setopt::make_example("cantor", c); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { setopt::make_example("nope"); }), ErrorCode::UnknownExample);
}

TEST(Generators, RandomFiniteIsSeeded) {
  ExampleParams a;
  a.seed = 42;
  auto x = setopt::make_example("random_finite", a);
  auto y = setopt::make_example("random_finite", a);
  EXPECT_EQ(x, y);
  a.seed = 43;
  EXPECT_FALSE(x == setopt::make_example("random_finite", a));
  EXPECT_GE(x.size(), 2u);
  EXPECT_LE(x.size(), 8u);
}

TEST(Generators, EveryExampleValidates) {
  for (const auto& name : setopt::example_names()) {
    auto inst = setopt::make_example(name);
    EXPECT_NO_THROW(inst.validate()) << name;
  }
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    ExampleParams p;
    p.seed = seed;
    EXPECT_NO_THROW(setopt::make_example("random_finite", p).validate());
    p.polytope = true;
    EXPECT_NO_THROW(setopt::make_example("random_finite", p).validate());
    p.n = 2;
    p.grid = 5;
    EXPECT_NO_THROW(setopt::make_example("convex_polyhedral", p).validate());
  }
}

TEST(Distance, Examples) {
  auto inst = fixture::finite_instance({{{0, 0}, {1, 0}}, {{2, 2}}});
  EXPECT_DOUBLE_EQ(setopt::instance_distance(inst, inst), 0.0);
  auto moved = inst;
  for (auto& img : moved.images)
    for (auto& y : img.points) y[0] += Rational(1, 10);
  EXPECT_NEAR(setopt::instance_distance(inst, moved), 0.1, 1e-12);
  auto other = setopt::make_example("mfdvp");
  EXPECT_THROW(setopt::instance_distance(inst, other), setopt::Error);
}

TEST(Discretize, Examples) {
  auto inst = fixture::finite_instance({{{0, 0}, pt({"0.3", "0"}), {1, 0}}, {{5, 5}}});
  auto d = setopt::discretize_map(inst, 0.35);
  EXPECT_EQ(d.images[0].points, (std::vector<Vec<Rational>>{pt({"0.3", "0"}), {1, 0}}));
  EXPECT_EQ(d.images[1].points, inst.images[1].points);
  EXPECT_LE(setopt::instance_distance(inst, d), 0.35);
  EXPECT_TRUE(d.metadata.count("discretized_eps"));

  auto tight = setopt::discretize_map(inst, 0.2);
  EXPECT_EQ(tight.images, inst.images);
}

TEST(Discretize, DistanceBound) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    ExampleParams p;
    p.seed = seed;
    auto inst = setopt::make_example("random_finite", p);
    for (double eps : {0.5, 1.0, 2.5}) {
      auto d = setopt::discretize_map(inst, eps);
      EXPECT_LE(setopt::instance_distance(inst, d), eps);
      for (std::size_t k = 0; k < inst.size(); ++k)
        EXPECT_LE(d.images[k].size(), inst.images[k].size());
    }
  }
}
