#include "setopt/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "setopt/error.hpp"
#include "setopt/json_util.hpp"
#include "setopt/verifier.hpp"

namespace setopt::cli {

namespace {

using nlohmann::json;

struct Flags {
  std::string instance;
  std::string out;
  std::string other;
  std::string concept_name = "weak";
  std::string kind = "weak";
  std::string eps = "0";
  std::string x;
  std::string weights;
  std::string eps_grid = "0.1,0.7,1.5";
  int p = 1;
  double gamma = 0.5;
  bool exact = false;
  // generators
  std::string example;
  int grid = 0;
  int truncation = 6;
  int limit_points = 8;
  std::uint64_t seed = 1;
  int decisions = 0;
  int max_image = 6;
  bool polytope = false;
  int n = 1;
  int count = 10;
  // verify
  int seeds = 50;
  int polytope_seeds = 20;
  int p_max = 3;
  bool inject_fault = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Instance load(const Flags& f) {
  if (f.instance.empty()) throw UsageError("--instance is required");
  return load_instance(f.instance, LoadOptions{f.exact});
}

void write_json(const std::string& path, const json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << j.dump(2) << '\n';
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << text;
}

template <class T>
T parse_scalar(const std::string& text) {
  return Num<T>::from_rational(parse_rational(text));
}

Concept parse_concept(const std::string& s) {
  if (s == "weak") return Concept::Weak;
  if (s == "type1") return Concept::TypeOne;
  if (s == "type2") return Concept::TypeTwo;
  throw UsageError("unknown concept '" + s + "'");
}

VpKind parse_kind(const std::string& s) {
  if (s == "weak") return VpKind::Weak;
  if (s == "min") return VpKind::Min;
  throw UsageError("unknown kind '" + s + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i];
  return s;
}

std::string show(double x) {
  std::ostringstream o;
  o << std::setprecision(17) << x;
  return o.str();
}
std::string show(const Rational& q) { return format_rational(q); }

template <class T>
int do_solve(const Instance& inst, const Flags& f, std::ostream& out) {
  const auto prob = make_problem<T>(inst);
  const auto rep = solve_direct(prob, parse_concept(f.concept_name), parse_scalar<T>(f.eps));
  out << "members: " << join(rep.members()) << '\n';
  if (!rep.thresholds.empty()) {
    for (std::size_t k = 0; k < rep.labels.size(); ++k)
      out << "  tau(" << rep.labels[k] << ") = " << show(rep.thresholds[k]) << '\n';
  }
  write_json(f.out, report_to_json(rep));
  return Ok;
}

template <class T>
int do_vectorize(const Instance& inst, const Flags& f, std::ostream& out) {
  const auto prob = make_problem<T>(inst);
  const auto rep = membership_vp(prob, f.p, parse_scalar<T>(f.eps), parse_kind(f.kind));
  out << "members: " << join(rep.members()) << '\n';
  if (rep.incomplete) out << "incomplete: polytope pools searched below their size\n";
  write_json(f.out, vp_report_to_json(rep));
  return Ok;
}

template <class T>
int do_minimal_p(const Instance& inst, const Flags& f, std::ostream& out) {
  if (f.x.empty()) throw UsageError("--x is required");
  const auto prob = make_problem<T>(inst);
  const auto res = minimal_p(prob, prob.index_of(f.x), parse_scalar<T>(f.eps), parse_kind(f.kind));
  json j{{"x", f.x}, {"kind", f.kind}, {"epsilon", f.eps}, {"incomplete", res.incomplete}};
  if (res.never) {
    out << "p_star=never\n";
    j["p_star"] = "never";
  } else {
    out << "p_star=" << res.p_star << '\n';
    j["p_star"] = res.p_star;
  }
  j["witness"] = certificate_to_json(res.witness, prob.labels);
  write_json(f.out, j);
  return Ok;
}

template <class T>
int do_covering_p(const Instance& inst, const Flags& f, std::ostream& out) {
  const auto prob = make_problem<T>(inst);
  const double eps = to_double(Vec<Rational>{parse_rational(f.eps)})[0];
  json j{{"epsilon", f.eps}, {"gamma", f.gamma}};
  int p = 0;
  if (f.x.empty()) {
    p = covering_p_bound_global(prob, eps, f.gamma);
    j["scope"] = "weak solutions";
  } else {
    p = covering_p_bound(prob, prob.index_of(f.x), eps, f.gamma);
    j["x"] = f.x;
  }
  j["p"] = p;
  out << "p=" << p << '\n';
  write_json(f.out, j);
  return Ok;
}

template <class T>
int do_weighted_sum(const Instance& inst, const Flags& f, std::ostream& out) {
  const auto prob = make_problem<T>(inst);
  std::vector<Vec<T>> w;
  for (const auto& block : split(f.weights, ';')) {
    Vec<T> wi;
    for (const auto& c : split(block, ',')) wi.push_back(parse_scalar<T>(c));
    w.push_back(std::move(wi));
  }
  if (w.empty()) throw UsageError("--w needs at least one weight vector, e.g. \"1,1;0,1\"");
  const auto res = solve_weighted_sum(prob, w);
  json j{{"value", scalar_json(res.value)}, {"solutions", json::array()}};
  out << "value=" << show(res.value) << '\n';
  for (const auto& s : res.solutions) {
    json tuple = json::array();
    out << s.label << ":";
    for (const auto& y : s.tuple) {
      json pt = json::array();
      out << " (";
      for (std::size_t c = 0; c < y.size(); ++c) {
        out << (c ? "," : "") << show(y[c]);
        pt.push_back(scalar_json(y[c]));
      }
      out << ")";
      tuple.push_back(std::move(pt));
    }
    out << '\n';
    j["solutions"].push_back({{"label", s.label}, {"tuple", std::move(tuple)}});
  }
  write_json(f.out, j);
  return Ok;
}

template <class T>
std::vector<bool> solution_flags(const Instance& inst, const Flags& f) {
  return solve_direct(make_problem<T>(inst), parse_concept(f.concept_name), parse_scalar<T>(f.eps)).member;
}

ExampleParams example_params(const Flags& f) {
  ExampleParams p;
  p.grid = f.grid;
  p.truncation = f.truncation;
  p.limit_points = f.limit_points;
  p.seed = f.seed;
  p.decisions = f.decisions;
  p.max_image = f.max_image;
  p.polytope = f.polytope;
  p.n = f.n;
  return p;
}

void print_failures(const SuiteReport& rep, std::ostream& out) {
  for (const auto* c : rep.failed()) {
    out << (c->hard ? "FAIL " : "note ") << c->name << " [" << c->instance_id << "] " << c->detail
        << '\n';
  }
}

int dispatch(const std::string& verb, const Flags& f, std::ostream& out) {
  auto by_mode = [&](auto fn_double, auto fn_exact) {
    const auto inst = load(f);
    return f.exact ? fn_exact(inst) : fn_double(inst);
  };
#define SETOPT_VERB(fn)                                                              \
  by_mode([&](const Instance& i) { return fn<double>(i, f, out); },                  \
          [&](const Instance& i) { return fn<Rational>(i, f, out); })

  if (verb == "solve") return SETOPT_VERB(do_solve);
  if (verb == "vectorize") return SETOPT_VERB(do_vectorize);
  if (verb == "minimal-p") return SETOPT_VERB(do_minimal_p);
  if (verb == "covering-p") return SETOPT_VERB(do_covering_p);
  if (verb == "weighted-sum") return SETOPT_VERB(do_weighted_sum);
#undef SETOPT_VERB

  if (verb == "example") {
    const auto inst = make_example(f.example, example_params(f));
    if (f.out.empty()) {
      out << instance_to_json(inst).dump(2) << '\n';
    } else {
      save_instance(inst, f.out);
      out << f.example << ": " << inst.size() << " decisions written to " << f.out << '\n';
    }
    return Ok;
  }
  if (verb == "discretize") {
    const auto inst = load(f);
    const double eps = std::stod(f.eps);
    const auto d = discretize_map(inst, eps);
    std::size_t before = 0, after = 0;
    for (std::size_t k = 0; k < inst.size(); ++k) {
      before += inst.images[k].size();
      after += d.images[k].size();
    }
    out << "points: " << before << " -> " << after << ", distance " << show(instance_distance(inst, d))
        << '\n';
    if (!f.out.empty()) save_instance(d, f.out);
    return Ok;
  }
  if (verb == "distance") {
    if (f.other.empty()) throw UsageError("--with is required");
    const auto a = load(f);
    const auto b = load_instance(f.other, LoadOptions{f.exact});
    const double d = instance_distance(a, b);
    out << "distance=" << show(d) << '\n';
    write_json(f.out, json{{"distance", d}});
    return Ok;
  }
  if (verb == "verify") {
    SuiteConfig cfg;
    for (int s = 1; s <= f.seeds; ++s) cfg.seeds.push_back(f.seed + static_cast<std::uint64_t>(s - 1));
    for (int s = 1; s <= f.polytope_seeds; ++s)
      cfg.polytope_seeds.push_back(f.seed + 1000 + static_cast<std::uint64_t>(s - 1));
    cfg.eps_grid.clear();
    for (const auto& e : split(f.eps_grid, ',')) cfg.eps_grid.push_back(std::stod(e));
    cfg.p_max = f.p_max;
    cfg.inject_oracle_fault = f.inject_fault;
    const auto rep = run_suite(cfg);
    out << "checks: " << rep.checks.size() << ", failed: " << rep.failures() << '\n';
    print_failures(rep, out);
    write_json(f.out, rep.to_json());
    return rep.hard_failure() ? HardFailure : Ok;
  }
  if (verb == "convex-exp") {
    const auto rep = convex_experiment(ConvexConfig{f.seed, f.grid > 0 ? f.grid : 17, f.n, f.count});
    out << "agreement: " << show(rep.agreement) << " over " << rep.compared << " labels\n";
    print_failures(rep, out);
    write_json(f.out, rep.to_json());
    return Ok;
  }
  if (verb == "plot") {
    const auto inst = load(f);
    const auto member = f.exact ? solution_flags<Rational>(inst, f) : solution_flags<double>(inst, f);
    const bool planar = inst.image_dim() == 2;
    const auto text = planar ? render_svg(inst, member) : render_csv(inst, member);
    if (f.out.empty()) {
      out << text;
    } else {
      write_text(f.out, text);
      out << (planar ? "svg" : "csv") << " written to " << f.out << '\n';
    }
    return Ok;
  }
  throw UsageError("unknown verb '" + verb + "'");
}

// ---- drawing --------------------------------------------------------------

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#17becf", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"};

std::string fmt(double v) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(2) << v;
  return o.str();
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Instance& inst, const std::vector<bool>& member) {
  if (inst.image_dim() != 2) throw Error(ErrorCode::Unsupported, "SVG plots need planar images");
  const auto prob = make_problem<double>(inst);
  double lo[2] = {1e300, 1e300}, hi[2] = {-1e300, -1e300};
  for (const auto& img : prob.images) {
    for (const auto& y : img.points) {
      for (int c = 0; c < 2; ++c) {
        lo[c] = std::min(lo[c], y[c]);
        hi[c] = std::max(hi[c], y[c]);
      }
    }
  }
  const double size = 480, pad = 40, legend = 160;
  double span = std::max(hi[0] - lo[0], hi[1] - lo[1]);
  if (span <= 0) span = 1;
  auto sx = [&](double v) { return pad + (v - lo[0]) / span * size; };
  auto sy = [&](double v) { return pad + size - (v - lo[1]) / span * size; };

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(size + 2 * pad + legend)
    << "\" height=\"" << fmt(size + 2 * pad) << "\">\n"
    << "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<g class=\"axes\" stroke=\"#999\" stroke-width=\"1\">\n"
    << "<line x1=\"" << fmt(pad) << "\" y1=\"" << fmt(pad + size) << "\" x2=\"" << fmt(pad + size)
    << "\" y2=\"" << fmt(pad + size) << "\"/>\n"
    << "<line x1=\"" << fmt(pad) << "\" y1=\"" << fmt(pad) << "\" x2=\"" << fmt(pad) << "\" y2=\""
    << fmt(pad + size) << "\"/>\n</g>\n";

  for (std::size_t k = 0; k < prob.size(); ++k) {
    const auto& img = prob.images[k];
    const std::string color = kPalette[k % (sizeof(kPalette) / sizeof(kPalette[0]))];
    const auto minimal = minimal_vertices(img, prob.cone);
    s << "<g class=\"image\" data-label=\"" << escape(prob.labels[k]) << "\" data-member=\""
      << (member[k] ? "true" : "false") << "\">\n";
    if (!img.is_finite() && img.size() > 1) {
      // Vertices in angular order around the centroid.
      double cx = 0, cy = 0;
      for (const auto& y : img.points) {
        cx += y[0];
        cy += y[1];
      }
      cx /= static_cast<double>(img.size());
      cy /= static_cast<double>(img.size());
      std::vector<std::size_t> order(img.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::atan2(img.points[a][1] - cy, img.points[a][0] - cx) <
               std::atan2(img.points[b][1] - cy, img.points[b][0] - cx);
      });
      s << "<polygon class=\"outline\" fill=\"" << color << "\" fill-opacity=\""
        << (member[k] ? "0.25" : "0.05") << "\" stroke=\"" << color << "\" points=\"";
      for (std::size_t i = 0; i < order.size(); ++i)
        s << (i ? " " : "") << fmt(sx(img.points[order[i]][0])) << "," << fmt(sy(img.points[order[i]][1]));
      s << "\"/>\n";
    }
    for (std::size_t i = 0; i < img.size(); ++i) {
      const bool is_min = std::find(minimal.begin(), minimal.end(), i) != minimal.end();
      s << "<circle class=\"point" << (is_min ? " minimal" : "") << "\" cx=\"" << fmt(sx(img.points[i][0]))
        << "\" cy=\"" << fmt(sy(img.points[i][1])) << "\" r=\"" << (is_min ? "6" : "4") << "\" stroke=\""
        << color << "\" stroke-width=\"2\" fill=\"" << (member[k] ? color : "none") << "\"/>\n";
    }
    s << "</g>\n";
    const double ly = pad + 18.0 * static_cast<double>(k);
    s << "<text class=\"legend\" x=\"" << fmt(2 * pad + size) << "\" y=\"" << fmt(ly)
      << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << color << "\">"
      << escape(prob.labels[k]) << (member[k] ? " (member)" : "") << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

std::string render_csv(const Instance& inst, const std::vector<bool>& member) {
  std::ostringstream s;
  s << "label,member,kind,points\n";
  for (std::size_t k = 0; k < inst.size(); ++k) {
    s << inst.decisions[k].label << ',' << (member[k] ? 1 : 0) << ','
      << (inst.images[k].is_finite() ? "finite" : "polytope") << ',';
    const auto& pts = inst.images[k].points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      s << (i ? ";" : "");
      for (std::size_t c = 0; c < pts[i].size(); ++c) s << (c ? " " : "") << format_rational(pts[i][c]);
    }
    s << '\n';
  }
  return s.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite set optimization under the lower set less order, and its vectorization."};
  app.name("setopt");
  app.require_subcommand(1, 1);
  Flags f;

  auto input = [&](CLI::App* c) {
    c->add_option("-i,--instance", f.instance, "Instance JSON file")->required();
    c->add_flag("--exact", f.exact, "Exact rational arithmetic; float literals are rejected");
  };
  auto output = [&](CLI::App* c, const char* what) { c->add_option("-o,--out", f.out, what); };
  auto eps = [&](CLI::App* c) {
    c->add_option("--eps", f.eps, "Shift eps >= 0, decimal or p/q")->capture_default_str();
  };
  auto kind = [&](CLI::App* c) {
    c->add_option("--kind", f.kind, "weak | min")
        ->check(CLI::IsMember({"weak", "min"}))
        ->capture_default_str();
  };
  auto concept_opt = [&](CLI::App* c) {
    c->add_option("--concept", f.concept_name, "weak | type1 | type2")
        ->check(CLI::IsMember({"weak", "type1", "type2"}))
        ->capture_default_str();
  };

  auto* solve = app.add_subcommand("solve", "Solution sets of the set problem");
  input(solve), concept_opt(solve), eps(solve), output(solve, "Report JSON");

  auto* vec = app.add_subcommand("vectorize", "Projected solutions of the p-fold vector problem");
  input(vec), kind(vec), eps(vec), output(vec, "Report JSON");
  vec->add_option("--p", f.p, "Number of stacked image points")->check(CLI::PositiveNumber)->capture_default_str();

  auto* minp = app.add_subcommand("minimal-p", "Smallest p making a decision a member");
  input(minp), kind(minp), eps(minp), output(minp, "Report JSON");
  minp->add_option("--x", f.x, "Decision label")->required();

  auto* cov = app.add_subcommand("covering-p", "Covering-number budget for a decision (or all weak solutions)");
  input(cov), eps(cov), output(cov, "Report JSON");
  cov->add_option("--x", f.x, "Decision label; omit for the maximum over weak solutions");
  cov->add_option("--gamma", f.gamma, "Radius fraction in (0, 1)")->capture_default_str();

  auto* ws = app.add_subcommand("weighted-sum", "Weighted-sum scalarization of the p-fold problem");
  input(ws), output(ws, "Report JSON");
  ws->add_option("--w", f.weights, "Weight vectors, e.g. \"1,1;0,1\" for p = 2")->required();

  auto* ex = app.add_subcommand("example", "Write a built-in or generated instance");
  ex->add_option("name", f.example, "t_one | strict_min | cantor | mfdvp | mfdvp_polytope | random_finite | convex_polyhedral")
      ->required();
  output(ex, "Instance JSON (stdout when omitted)");
  ex->add_option("--grid", f.grid, "Grid size (0: generator default)");
  ex->add_option("--T", f.truncation, "cantor truncation")->capture_default_str();
  ex->add_option("--N", f.limit_points, "cantor limit points, N >= T")->capture_default_str();
  ex->add_option("--seed", f.seed, "Generator seed")->capture_default_str();
  ex->add_option("--decisions", f.decisions, "random_finite size (0: drawn from [2, 8])");
  ex->add_option("--max-image", f.max_image, "random_finite image size bound")->capture_default_str();
  ex->add_flag("--polytope", f.polytope, "random_finite with polytope images");
  ex->add_option("--n", f.n, "convex_polyhedral decision dimension (1 or 2)")->capture_default_str();

  auto* disc = app.add_subcommand("discretize", "Replace finite images by internal eps-cover centers");
  input(disc), eps(disc), output(disc, "Discretized instance JSON");

  auto* dist = app.add_subcommand("distance", "Largest Hausdorff distance between paired images");
  input(dist), output(dist, "Report JSON");
  dist->add_option("--with", f.other, "Second instance JSON")->required();

  auto* ver = app.add_subcommand("verify", "Run the property suite on built-in and seeded instances");
  output(ver, "Suite report JSON");
  ver->add_option("--seed", f.seed, "First seed")->capture_default_str();
  ver->add_option("--seeds", f.seeds, "Random finite instances")->capture_default_str();
  ver->add_option("--polytope-seeds", f.polytope_seeds, "Random polytope instances")->capture_default_str();
  ver->add_option("--eps-grid", f.eps_grid, "Positive eps values, comma separated (eps = 0 always runs)")
      ->capture_default_str();
  ver->add_option("--p-max", f.p_max, "Largest p of the lattice")->capture_default_str();
  ver->add_flag("--inject-fault", f.inject_fault, "Flip one oracle verdict (self-test of the suite)");

  auto* cx = app.add_subcommand("convex-exp", "Compare weak VP_{n+1} members with weak solutions on convex polyhedral maps");
  output(cx, "Report JSON");
  cx->add_option("--seed", f.seed, "First seed")->capture_default_str();
  cx->add_option("--grid", f.grid, "Grid points per axis (0: 17)");
  cx->add_option("--n", f.n, "Decision dimension (1 or 2)")->capture_default_str();
  cx->add_option("--count", f.count, "Number of instances")->capture_default_str();

  auto* plot = app.add_subcommand("plot", "SVG of a planar instance (CSV otherwise)");
  input(plot), concept_opt(plot), eps(plot), output(plot, "SVG or CSV file (stdout when omitted)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return Ok;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return Ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return Usage;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    return dispatch(verb, f, out);
  } catch (const UsageError& e) {
    err << "setopt " << verb << ": " << e.what() << '\n';
    return Usage;
  } catch (const Error& e) {
    err << "setopt " << verb << ": " << to_string(e.code()) << ": " << e.what() << '\n';
    return Usage;
  } catch (const std::exception& e) {
    err << "setopt " << verb << ": " << e.what() << '\n';
    return Usage;
  }
}

}  // namespace setopt::cli
