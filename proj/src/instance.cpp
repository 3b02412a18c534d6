#include "setopt/instance.hpp"

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "setopt/error.hpp"

namespace setopt {

using nlohmann::json;

// ---- model ----------------------------------------------------------------

void Instance::validate() const {
  if (decisions.empty()) throw Error(ErrorCode::InvalidArgument, "instance has no decisions");
  if (images.size() != decisions.size()) {
    throw Error(ErrorCode::InvalidArgument, "images must be parallel to decisions (" +
                                                std::to_string(images.size()) + " vs " +
                                                std::to_string(decisions.size()) + ")");
  }
  for (const auto& row : cone_rows) {
    if (row.size() != e.size()) {
      throw Error(ErrorCode::DimMismatch, "cone row length differs from e");
    }
  }
  (void)Cone<Rational>::validate(cone_rows, e);

  std::set<std::string> seen;
  const std::size_t n = decisions.front().x.size();
  for (std::size_t k = 0; k < decisions.size(); ++k) {
    const auto& d = decisions[k];
    if (!seen.insert(d.label).second) {
      throw Error(ErrorCode::DuplicateLabel, "duplicate label '" + d.label + "'");
    }
    if (d.x.size() != n) {
      throw Error(ErrorCode::DimMismatch, "decision '" + d.label + "' has dimension " +
                                              std::to_string(d.x.size()) + ", expected " +
                                              std::to_string(n));
    }
    const auto& img = images[k];
    if (img.points.empty()) {
      throw Error(ErrorCode::EmptyImage, "image of '" + d.label + "' is empty");
    }
    for (const auto& p : img.points) {
      if (p.size() != e.size()) {
        throw Error(ErrorCode::DimMismatch, "image of '" + d.label + "' has a " +
                                                std::to_string(p.size()) + "-vector under a " +
                                                std::to_string(e.size()) + "-dimensional cone");
      }
    }
    if (img.kind != images.front().kind) {
      throw Error(ErrorCode::MixedImageKinds, "finite and polytope images in one instance");
    }
  }
}

std::size_t Instance::index_of(const std::string& label) const {
  for (std::size_t k = 0; k < decisions.size(); ++k)
    if (decisions[k].label == label) return k;
  throw Error(ErrorCode::UnknownLabel, "no decision labeled '" + label + "'");
}

std::vector<std::string> Instance::labels() const {
  std::vector<std::string> out;
  out.reserve(decisions.size());
  for (const auto& d : decisions) out.push_back(d.label);
  return out;
}

bool Instance::all_finite() const {
  for (const auto& img : images)
    if (!img.is_finite()) return false;
  return true;
}

bool Instance::operator==(const Instance& other) const {
  if (cone_rows != other.cone_rows || e != other.e || decisions != other.decisions ||
      metadata != other.metadata || images.size() != other.images.size()) {
    return false;
  }
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (images[k].kind != other.images[k].kind || images[k].points != other.images[k].points)
      return false;
  }
  return true;
}

template <class T>
std::size_t Problem<T>::index_of(const std::string& label) const {
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == label) return k;
  throw Error(ErrorCode::UnknownLabel, "no decision labeled '" + label + "'");
}

template <class T>
Problem<T> make_problem(const Instance& inst) {
  inst.validate();
  Problem<T> prob{Cone<Rational>::validate(inst.cone_rows, inst.e).template convert<T>(),
                  inst.labels(),
                  {}};
  prob.images.reserve(inst.size());
  for (const auto& img : inst.images) {
    // Canonicalize exactly, then convert.
    const auto keep =
        img.is_finite() ? distinct_points(img.points) : prune_to_extreme(img.points);
    ImageSet<T> out;
    out.kind = img.kind;
    for (std::size_t i : keep) out.points.push_back(convert_vec<T>(img.points[i]));
    prob.images.push_back(std::move(out));
  }
  return prob;
}

template struct Problem<double>;
template struct Problem<Rational>;
template Problem<double> make_problem<double>(const Instance&);
template Problem<Rational> make_problem<Rational>(const Instance&);

// ---- JSON -------------------------------------------------------------------

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::ParseError, path + ": " + what);
}

const json& member(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) field_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) field_error(path, std::string("missing field '") + key + "'");
  return *it;
}

Rational read_number(const json& v, const std::string& path, bool require_rational) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Rational(v.get<std::uint64_t>());
    return Rational(v.get<std::int64_t>());
  }
  if (v.is_number_float()) {
    if (require_rational) {
      throw Error(ErrorCode::NonRationalLiteral,
                  path + ": float literal in exact mode; write it as a \"p/q\" string");
    }
    return rational_from_double(v.get<double>());
  }
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      field_error(path, e.what());
    }
  }
  field_error(path, "expected a number or a \"p/q\" string");
}

Vec<Rational> read_vector(const json& v, const std::string& path, bool require_rational) {
  if (!v.is_array()) field_error(path, "expected an array");
  Vec<Rational> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(read_number(v[i], path + "[" + std::to_string(i) + "]", require_rational));
  return out;
}

std::vector<Vec<Rational>> read_matrix(const json& v, const std::string& path,
                                       bool require_rational) {
  if (!v.is_array()) field_error(path, "expected an array of arrays");
  std::vector<Vec<Rational>> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(read_vector(v[i], path + "[" + std::to_string(i) + "]", require_rational));
  return out;
}

json vector_json(const Vec<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(number_to_json(q));
  return out;
}

json matrix_json(const std::vector<Vec<Rational>>& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(vector_json(row));
  return out;
}

}  // namespace

json number_to_json(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) {
    const auto num = boost::multiprecision::numerator(q);
    if (num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max()) {
      return json(num.convert_to<std::int64_t>());
    }
  }
  return json(format_rational(q));
}

Instance instance_from_json(const json& j, const LoadOptions& opts) {
  const bool exact = opts.require_rational;
  Instance inst;
  const auto& cone = member(j, "cone", "$");
  inst.cone_rows = read_matrix(member(cone, "rows", "cone"), "cone.rows", exact);
  inst.e = read_vector(member(cone, "e", "cone"), "cone.e", exact);

  const auto& decisions = member(j, "decisions", "$");
  if (!decisions.is_array()) field_error("decisions", "expected an array");
  for (std::size_t k = 0; k < decisions.size(); ++k) {
    const std::string path = "decisions[" + std::to_string(k) + "]";
    const auto& label = member(decisions[k], "label", path);
    if (!label.is_string()) field_error(path + ".label", "expected a string");
    // Decision coordinates only name points of the feasible set; floats are
    // accepted here even in exact mode.
    inst.decisions.push_back(
        {label.get<std::string>(), read_vector(member(decisions[k], "x", path), path + ".x", false)});
  }

  const auto& images = member(j, "images", "$");
  if (!images.is_array()) field_error("images", "expected an array");
  for (std::size_t k = 0; k < images.size(); ++k) {
    const std::string path = "images[" + std::to_string(k) + "]";
    const auto& type = member(images[k], "type", path);
    ImageSet<Rational> img;
    if (type == "finite") {
      img.kind = ImageKind::Finite;
    } else if (type == "polytope") {
      img.kind = ImageKind::Polytope;
    } else {
      field_error(path + ".type", "expected \"finite\" or \"polytope\"");
    }
    img.points = read_matrix(member(images[k], "points", path), path + ".points", exact);
    inst.images.push_back(std::move(img));
  }

  if (auto it = j.find("metadata"); it != j.end() && !it->is_null()) {
    if (!it->is_object()) field_error("metadata", "expected an object");
    for (const auto& [key, value] : it->items())
      inst.metadata[key] = value.is_string() ? value.get<std::string>() : value.dump();
  }
  inst.validate();
  return inst;
}

json instance_to_json(const Instance& inst) {
  json j;
  j["cone"] = {{"rows", matrix_json(inst.cone_rows)}, {"e", vector_json(inst.e)}};
  j["decisions"] = json::array();
  for (const auto& d : inst.decisions)
    j["decisions"].push_back({{"label", d.label}, {"x", vector_json(d.x)}});
  j["images"] = json::array();
  for (const auto& img : inst.images) {
    j["images"].push_back(
        {{"type", img.is_finite() ? "finite" : "polytope"}, {"points", matrix_json(img.points)}});
  }
  j["metadata"] = json::object();
  for (const auto& [k, v] : inst.metadata) j["metadata"][k] = v;
  return j;
}

Instance load_instance(const std::filesystem::path& path, const LoadOptions& opts) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
  return instance_from_json(j, opts);
}

void save_instance(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << instance_to_json(inst).dump(2) << '\n';
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

// ---- metric construction ------------------------------------------------

namespace {
std::vector<Vec<double>> double_points(const ImageSet<Rational>& img, const std::string& label) {
  if (!img.is_finite()) {
    throw Error(ErrorCode::Unsupported, "image of '" + label + "' is not finite");
  }
  std::vector<Vec<double>> out;
  for (const auto& p : img.points) out.push_back(to_double(p));
  return out;
}
}  // namespace

double instance_distance(const Instance& a, const Instance& b) {
  if (a.decisions != b.decisions) {
    throw Error(ErrorCode::InvalidArgument, "instances have different decision lists");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto& label = a.decisions[k].label;
    worst = std::max(worst, hausdorff(double_points(a.images[k], label),
                                      double_points(b.images[k], label)));
  }
  return worst;
}

Instance discretize_map(const Instance& inst, double eps) {
  if (!(eps > 0.0)) throw Error(ErrorCode::InvalidArgument, "discretization radius must be positive");
  Instance out = inst;
  for (std::size_t k = 0; k < inst.size(); ++k) {
    const auto cover = covering_number_internal(double_points(inst.images[k], inst.decisions[k].label), eps);
    std::vector<Vec<Rational>> centers;
    for (std::size_t i : cover.centers) centers.push_back(inst.images[k].points[i]);
    out.images[k].points = std::move(centers);
  }
  std::ostringstream note;
  note << eps;
  out.metadata["discretized_eps"] = note.str();
  return out;
}

// ---- generators -------------------------------------------------------------

void set_orthant_cone(Instance& inst, std::size_t m) {
  inst.cone_rows.assign(m, Vec<Rational>(m, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) inst.cone_rows[i][i] = 1;
  inst.e.assign(m, Rational(1));
}

namespace {

Rational pow2_neg(int k) {
  // 2^-k for k >= 0
  Rational r = 1;
  for (int s = 0; s < k; ++s) r /= 2;
  return r;
}

void add(Instance& inst, std::string label, Vec<Rational> x, ImageSet<Rational> img) {
  inst.decisions.push_back({std::move(label), std::move(x)});
  inst.images.push_back(std::move(img));
}

std::vector<Rational> grid(const Rational& lo, const Rational& hi, int g) {
  if (g < 1) throw Error(ErrorCode::InvalidArgument, "grid size must be at least 1");
  std::vector<Rational> out;
  if (g == 1) return {lo};
  for (int k = 0; k < g; ++k) out.push_back(lo + (hi - lo) * Rational(k) / Rational(g - 1));
  return out;
}

Instance t_one(const ExampleParams& p) {
  const int g = p.grid > 0 ? p.grid : 9;
  Instance inst;
  set_orthant_cone(inst, 2);
  for (const auto& x : grid(Rational(1, 4), Rational(1, 2), g)) {
    add(inst, format_decimal(x), {x},
        ImageSet<Rational>::polytope({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {x, x}}));
  }
  inst.metadata = {{"generator", "t_one"}, {"grid", "uniform [1/4, 1/2], " + std::to_string(g) + " points"}};
  return inst;
}

Instance strict_min(const ExampleParams& p) {
  const int g = p.grid > 0 ? p.grid : 5;
  Instance inst;
  set_orthant_cone(inst, 2);
  for (const auto& x : grid(Rational(0), Rational(1), g))
    add(inst, format_decimal(x), {x}, ImageSet<Rational>::finite({{Rational(0), x}}));
  inst.metadata = {{"generator", "strict_min"}, {"grid", "uniform [0, 1], " + std::to_string(g) + " points"}};
  return inst;
}

Instance cantor(const ExampleParams& p) {
  const int T = p.truncation, N = p.limit_points;
  if (T < 1) throw Error(ErrorCode::InvalidArgument, "cantor needs T >= 1");
  if (N < T) throw Error(ErrorCode::InvalidArgument, "cantor needs N >= T");
  const Vec<Rational> y0{Rational(5, 2), Rational(-5, 2)};
  auto ybar = [&](int i) {
    if (i == 0) return y0;
    return Vec<Rational>{y0[0] + 1 + pow2_neg(i) + pow2_neg(i + 1),
                         y0[1] + 1 - 2 * pow2_neg(i) - pow2_neg(i) - pow2_neg(i + 1)};
  };
  auto shift = [](Vec<Rational> v, const Rational& s) {
    v[0] += s;
    v[1] += s;
    return v;
  };
  Instance inst;
  set_orthant_cone(inst, 2);
  for (int t = 1; t <= T; ++t) {
    const int k = t - 1;
    std::vector<Vec<Rational>> pts;
    for (int i = 0; i <= k; ++i) pts.push_back(shift(ybar(i), pow2_neg(i) - pow2_neg(k)));
    const Rational x(t - 1, t);
    add(inst, format_rational(x), {x}, ImageSet<Rational>::finite(std::move(pts)));
  }
  std::vector<Vec<Rational>> limit;
  for (int i = 0; i <= N; ++i) limit.push_back(shift(ybar(i), pow2_neg(i)));
  add(inst, "1", {Rational(1)}, ImageSet<Rational>::finite(std::move(limit)));
  inst.metadata = {{"generator", "cantor"},
                   {"truncation", "T=" + std::to_string(T) + " N=" + std::to_string(N)}};
  return inst;
}

std::vector<std::vector<Vec<Rational>>> mfdvp_points() {
  auto pt = [](int a, int b) { return Vec<Rational>{Rational(a), Rational(b)}; };
  return {{pt(2, 0), pt(0, 2)}, {pt(1, -1), pt(0, 2)}, {pt(2, 0), pt(-1, 1)}};
}

Instance mfdvp(bool polytope) {
  Instance inst;
  set_orthant_cone(inst, 2);
  const auto pts = mfdvp_points();
  for (int k = 0; k < 3; ++k) {
    add(inst, std::to_string(k), {Rational(k)},
        polytope ? ImageSet<Rational>::polytope(pts[k]) : ImageSet<Rational>::finite(pts[k]));
  }
  inst.metadata = {{"generator", polytope ? "mfdvp_polytope" : "mfdvp"}};
  return inst;
}

// mt19937_64 output is fixed by the standard; the reduction below is ours, so
// the stream is identical across standard libraries.
struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  int uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine() % span);
  }
};

std::vector<Vec<Rational>> select(const std::vector<Vec<Rational>>& pts,
                                  const std::vector<std::size_t>& idx) {
  std::vector<Vec<Rational>> out;
  for (std::size_t i : idx) out.push_back(pts[i]);
  return out;
}

Instance random_finite(const ExampleParams& p) {
  if (p.max_image < 1 || p.coord_range < 0 || p.decisions < 0) {
    throw Error(ErrorCode::InvalidArgument, "random_finite: invalid size parameters");
  }
  Rng rng(p.seed);
  const int count = p.decisions > 0 ? p.decisions : rng.uniform(2, 8);
  Instance inst;
  set_orthant_cone(inst, 2);
  for (int k = 0; k < count; ++k) {
    const int size = rng.uniform(1, p.max_image);
    std::vector<Vec<Rational>> pts;
    for (int s = 0; s < size; ++s) {
      const int a = rng.uniform(-p.coord_range, p.coord_range);
      const int b = rng.uniform(-p.coord_range, p.coord_range);
      pts.push_back({Rational(a), Rational(b)});
    }
    auto img = p.polytope ? ImageSet<Rational>::polytope(select(pts, prune_to_extreme(pts)))
                          : ImageSet<Rational>::finite(select(pts, distinct_points(pts)));
    add(inst, std::to_string(k), {Rational(k)}, std::move(img));
  }
  inst.metadata = {{"generator", "random_finite"},
                   {"seed", std::to_string(p.seed)},
                   {"kind", p.polytope ? "polytope" : "finite"},
                   {"max_image", std::to_string(p.max_image)},
                   {"coord_range", std::to_string(p.coord_range)}};
  return inst;
}

// Half-plane c^T y <= b in the image plane.
struct HalfPlane {
  Vec<Rational> c;
  Rational b;
};

std::vector<Vec<Rational>> polygon_vertices(const std::vector<HalfPlane>& hs) {
  std::vector<Vec<Rational>> pts;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      const auto& u = hs[i].c;
      const auto& v = hs[j].c;
      const Rational det = u[0] * v[1] - u[1] * v[0];
      if (det == 0) continue;
      Vec<Rational> y{(hs[i].b * v[1] - u[1] * hs[j].b) / det,
                      (u[0] * hs[j].b - hs[i].b * v[0]) / det};
      bool inside = true;
      for (const auto& h : hs) inside = inside && dot(h.c, y) <= h.b;
      if (inside) pts.push_back(std::move(y));
    }
  }
  if (pts.empty()) throw Error(ErrorCode::InvalidArgument, "degenerate polyhedral image");
  return select(pts, prune_to_extreme(pts));
}

Instance convex_polyhedral(const ExampleParams& p) {
  const int g = p.grid > 0 ? p.grid : 17;
  if (p.n != 1 && p.n != 2) throw Error(ErrorCode::InvalidArgument, "convex_polyhedral needs n in {1, 2}");
  Rng rng(p.seed);
  // gph F = {(x, y) : E x + C y <= h}; every row keeps y = 0 strictly
  // feasible over the whole x box, and the bound rows keep images compact.
  struct GraphRow {
    Vec<Rational> ex;
    Vec<Rational> cy;
    Rational h;
  };
  std::vector<GraphRow> rows;
  const int random_rows = 4;
  for (int r = 0; r < random_rows; ++r) {
    GraphRow row;
    Rational reach = 0;
    for (int i = 0; i < p.n; ++i) {
      const int coef = rng.uniform(-2, 2);
      row.ex.push_back(Rational(coef));
      if (coef > 0) reach += coef;
    }
    int c0 = 0, c1 = 0;
    while (c0 == 0 && c1 == 0) {
      c0 = rng.uniform(-3, 3);
      c1 = rng.uniform(-3, 3);
    }
    row.cy = {Rational(c0), Rational(c1)};
    row.h = reach + rng.uniform(1, 3);
    rows.push_back(std::move(row));
  }
  // Lower bounds y_i >= -(h_i - E_i x) move with x, so the minimal corner of
  // the image shifts across the grid; upper bounds are fixed.
  for (int i = 0; i < 2; ++i) {
    GraphRow lower;
    Rational reach = 0;
    for (int k = 0; k < p.n; ++k) {
      const int coef = rng.uniform(-4, 4);
      lower.ex.push_back(Rational(coef));
      if (coef > 0) reach += coef;
    }
    lower.cy = {Rational(i == 0 ? -1 : 0), Rational(i == 1 ? -1 : 0)};
    lower.h = reach + rng.uniform(1, 3);
    rows.push_back(std::move(lower));

    GraphRow upper;
    upper.ex.assign(p.n, Rational(0));
    upper.cy = {Rational(i == 0 ? 1 : 0), Rational(i == 1 ? 1 : 0)};
    upper.h = 6;
    rows.push_back(std::move(upper));
  }

  const auto axis = grid(Rational(0), Rational(1), g);
  std::vector<Vec<Rational>> xs;
  if (p.n == 1) {
    for (const auto& a : axis) xs.push_back({a});
  } else {
    for (const auto& a : axis)
      for (const auto& b : axis) xs.push_back({a, b});
  }

  Instance inst;
  set_orthant_cone(inst, 2);
  for (const auto& x : xs) {
    std::vector<HalfPlane> hs;
    for (const auto& row : rows) hs.push_back({row.cy, row.h - dot(row.ex, x)});
    std::string label = format_decimal(x[0]);
    if (p.n == 2) label += "," + format_decimal(x[1]);
    add(inst, label, x, ImageSet<Rational>::polytope(polygon_vertices(hs)));
  }
  std::ostringstream graph_text;
  for (const auto& row : rows) {
    graph_text << "[";
    for (const auto& v : row.ex) graph_text << format_rational(v) << ' ';
    graph_text << "| " << format_rational(row.cy[0]) << ' ' << format_rational(row.cy[1]) << " <= "
         << format_rational(row.h) << "]";
  }
  inst.metadata = {{"generator", "convex_polyhedral"},
                   {"seed", std::to_string(p.seed)},
                   {"n", std::to_string(p.n)},
                   {"grid", "uniform [0, 1] per axis, " + std::to_string(g) + " points"},
                   {"graph", graph_text.str()}};
  return inst;
}

}  // namespace

std::vector<std::string> example_names() {
  return {"t_one", "strict_min", "cantor", "mfdvp", "mfdvp_polytope", "random_finite",
          "convex_polyhedral"};
}

Instance make_example(const std::string& name, const ExampleParams& params) {
  Instance inst;
  if (name == "t_one") {
    inst = t_one(params);
  } else if (name == "strict_min") {
    inst = strict_min(params);
  } else if (name == "cantor") {
    inst = cantor(params);
  } else if (name == "mfdvp") {
    inst = mfdvp(false);
  } else if (name == "mfdvp_polytope") {
    inst = mfdvp(true);
  } else if (name == "random_finite") {
    inst = random_finite(params);
  } else if (name == "convex_polyhedral") {
    inst = convex_polyhedral(params);
  } else {
    throw Error(ErrorCode::UnknownExample, "unknown example '" + name + "'");
  }
  inst.validate();
  return inst;
}

}  // namespace setopt
