#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

#include "checks.hpp"
#include "pseudoanalytic/antigradient.hpp"
#include "pseudoanalytic/contexts.hpp"
#include "pseudoanalytic/error.hpp"
#include "pseudoanalytic/grid.hpp"
#include "pseudoanalytic/oracles.hpp"
#include "pseudoanalytic/transplant.hpp"
#include "table.hpp"

namespace pseudoanalytic::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  double tol = 1e-6;
  int quad_order = 8;
  double h = 1e-5;
  std::string out;
  std::string format;

  QuadratureCfg quad() const { return QuadratureCfg::gauss_legendre(quad_order); }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--tol", c.tol, "Pass/fail tolerance of comparisons")->check(CLI::PositiveNumber);
  app->add_option("--quad-order", c.quad_order, "Gauss-Legendre nodes per panel")->check(CLI::Range(2, 64));
  app->add_option("--h", c.h, "Finite-difference step")->check(CLI::PositiveNumber);
  app->add_option("-o,--out", c.out, "Output file (default: standard output)");
  app->add_option("--format", c.format, "csv or json (default: from the --out extension, else csv)")
      ->check(CLI::IsMember({"csv", "json"}));
}

json common_spec(const Common& c) {
  return {{"tol", c.tol}, {"quad_order", c.quad_order}, {"h", c.h}};
}

std::vector<double> split_numbers(const std::string& s, char sep, std::size_t count, const char* what) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("malformed ") + what + " '" + s + "'");
    }
  }
  if (v.size() != count) throw UsageError(std::string("malformed ") + what + " '" + s + "'");
  return v;
}

Point parse_point(const std::string& s) {
  const auto v = split_numbers(s, ',', 2, "point");
  return {v[0], v[1]};
}

Box parse_box(const std::string& s) {
  const auto v = split_numbers(s, ',', 4, "box");
  if (!(v[0] < v[1] && v[2] < v[3])) throw UsageError("box must satisfy xmin < xmax and ymin < ymax");
  return {v[0], v[1], v[2], v[3]};
}

std::pair<int, int> parse_grid(const std::string& s) {
  const auto v = split_numbers(s, 'x', 2, "grid");
  const int nx = static_cast<int>(v[0]), ny = static_cast<int>(v[1]);
  if (nx != v[0] || ny != v[1] || nx < 2 || ny < 2) throw UsageError("grid must be NXxNY with NX, NY >= 2");
  return {nx, ny};
}

/// "1", "i" (or "j"), "-i", or "re,im".
Binumber parse_coeff(const std::string& s, Signature sig) {
  if (s == "i" || s == "j" || s == "e") return Binumber::unit(sig);
  if (s == "-i" || s == "-j" || s == "-e") return -Binumber::unit(sig);
  if (s.find(',') != std::string::npos) {
    const auto v = split_numbers(s, ',', 2, "coefficient");
    return Binumber(v[0], v[1], sig);
  }
  return Binumber::real(split_numbers(s, ',', 1, "coefficient")[0], sig);
}

SchrodingerContext context(const std::string& name) {
  const auto& n = contexts::names();
  if (std::find(n.begin(), n.end(), name) == n.end()) throw UsageError("unknown context '" + name + "'");
  return contexts::by_name(name);
}

/// Contexts whose main pair (f, e/f) is its own successor up to normalization.
bool period_one(const std::string& name) {
  return name == "f_y2" || name == "unit" || name == "hyperbolic_unit";
}

/// Period-one context with the same potential, used to reach the others.
std::string default_source(const std::string& name) {
  if (name == "g_1xy3") return "f_y2";
  if (name == "g_xy") return "unit";
  if (name == "hyperbolic_quadric") return "hyperbolic_unit";
  return "";
}

Box default_box(const SchrodingerContext& ctx, bool quadrant_default_wide = false) {
  if (ctx.domain.contains({-1, -1})) return {-1, 1, -1, 1};
  return quadrant_default_wide ? Box{0.1, 4, 0.1, 8} : Box{0.5, 3, 0.5, 3};
}

GridSpec make_grid(const std::string& grid, const std::string& box, const SchrodingerContext& ctx,
                   bool wide) {
  const auto [nx, ny] = parse_grid(grid);
  GridSpec g{nx, ny, box.empty() ? default_box(ctx, wide) : parse_box(box)};
  for (Point p : {Point{g.box.xmin, g.box.ymin}, Point{g.box.xmax, g.box.ymax}, Point{g.box.xmin, g.box.ymax},
                  Point{g.box.xmax, g.box.ymin}})
    if (!ctx.domain.contains(p)) throw UsageError("box leaves the domain " + ctx.domain.description());
  return g;
}

json box_json(const Box& b) { return json::array({b.xmin, b.xmax, b.ymin, b.ymax}); }
json point_json(Point p) { return json::array({p.x, p.y}); }
json coeff_json(const Binumber& a) { return json::array({a.re, a.im}); }

void emit(const Common& c, std::ostream& out, const Table& t, const json& spec) {
  Format f = Format::csv;
  if (c.format == "json" || (c.format.empty() && c.out.size() > 5 && c.out.ends_with(".json"))) f = Format::json;
  if (c.out.empty()) {
    write_table(out, t, f, spec);
    return;
  }
  std::ofstream file(c.out);
  if (!file) throw UsageError("cannot open output file '" + c.out + "'");
  write_table(file, t, f, spec);
}

Cell num(double v) { return v; }

// ---------------------------------------------------------------------------

struct FormalPowerArgs {
  Common common;
  std::string ctx = "f_y2";
  int n = 1;
  std::string a = "1";
  std::string center = "1,2";
  std::string grid = "50x50";
  std::string box;
  bool oracle = false;
  std::string via;
};

std::optional<BiField> closed_form_power(const std::string& name, const SchrodingerContext& ctx, int n,
                                         const Binumber& a, Point c) {
  if (name == "f_y2" && n <= 2) return oracles::zf(n, a, c);
  if (name == "g_1xy3" && n <= 2) return oracles::zg(n, a, c);
  if (name == "unit" || name == "hyperbolic_unit") return analytic_power(ctx.sig, n, a, c, ctx.domain).value;
  return std::nullopt;
}

int formal_power_cmd(const FormalPowerArgs& args, std::ostream& out, std::ostream& err) {
  const SchrodingerContext ctx = context(args.ctx);
  const Binumber a = parse_coeff(args.a, ctx.sig);
  const Point c = parse_point(args.center);
  if (args.n < 0) throw UsageError("formal-power builds orders n >= 0; negative orders come from kernel-grid");
  if (!ctx.domain.contains(c)) throw UsageError("center outside the domain " + ctx.domain.description());
  const GridSpec grid = make_grid(args.grid, args.box, ctx, false);
  const QuadratureCfg quad = args.common.quad();
  const RecursionCfg rc{PathPolicy{}, quad};
  TransplantConfig tc;
  tc.quad = quad;

  FormalPower Z;
  if (!args.via.empty()) {
    const SchrodingerContext src = context(args.via);
    if (!period_one(args.via)) throw UsageError("--via-transplant needs a period-one context (f_y2, unit, hyperbolic_unit)");
    const auto seq = GeneratingSequence::constant(contexts::main_pair(src));
    Z = transplant_formal_power(src, ctx, formal_power(seq, args.n, a, c, 0, rc), tc);
  } else if (period_one(args.ctx) || args.n == 0) {
    Z = formal_power(GeneratingSequence::constant(contexts::main_pair(ctx)), args.n, a, c, 0, rc);
  } else {
    throw UsageError("no generating sequence is known for " + args.ctx + "; pass --via-transplant " +
                     default_source(args.ctx));
  }

  std::optional<BiField> oracle;
  if (args.oracle) {
    oracle = closed_form_power(args.ctx, ctx, args.n, a, c);
    if (!oracle) throw UsageError("no closed form for " + args.ctx + " at order " + std::to_string(args.n));
  }

  const auto pts = grid.points();
  const auto vals = evaluate_grid_parallel(pts, [&](Point p) -> std::optional<Binumber> { return Z.value(p); });
  std::vector<std::optional<Binumber>> ref;
  if (oracle) ref = evaluate_grid_parallel(pts, [&](Point p) -> std::optional<Binumber> { return (*oracle)(p); });

  Table t{{"x", "y", "re", "im"}, {}};
  if (oracle) t.columns.insert(t.columns.end(), {"oracle_re", "oracle_im", "rel_err"});
  double worst = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<Cell> row{num(pts[i].x), num(pts[i].y), num(vals[i]->re), num(vals[i]->im)};
    if (oracle) {
      const Binumber w = *ref[i];
      const double d = norm(*vals[i] - w);
      const double e = norm(w) > 0.0 ? d / norm(w) : d;
      worst = std::max(worst, e);
      row.insert(row.end(), {num(w.re), num(w.im), num(e)});
    }
    t.rows.push_back(std::move(row));
  }
  json spec = {{"command", "formal-power"}, {"context", args.ctx},  {"n", args.n},
               {"a", coeff_json(a)},        {"center", point_json(c)}, {"grid", {grid.nx, grid.ny}},
               {"box", box_json(grid.box)}, {"via_transplant", args.via.empty() ? json(nullptr) : json(args.via)},
               {"oracle", args.oracle}};
  spec.update(common_spec(args.common));
  emit(args.common, out, t, spec);
  if (oracle) {
    const bool pass = worst <= args.common.tol;
    err << "formal-power: max_rel_err=" << worst << " tol=" << args.common.tol << (pass ? " PASS" : " FAIL") << '\n';
    if (!pass) return verification_failure;
  }
  return ok;
}

// ---------------------------------------------------------------------------

struct KernelArgs {
  Common common;
  std::string ctx = "g_xy";
  std::string a = "1";
  std::string center = "1,5";
  std::string grid = "100x100";
  std::string box;
  std::string base;
  double exclude = 0.05;
  std::string closed_form = "none";
  double circle = 0.02;
  std::string constant;
};

int kernel_grid_cmd(const KernelArgs& args, std::ostream& out, std::ostream& err) {
  const SchrodingerContext ctx = context(args.ctx);
  if (ctx.sig != Signature::Elliptic) throw UsageError("kernel-grid needs an elliptic context");
  const Binumber a = parse_coeff(args.a, ctx.sig);
  const Point c = parse_point(args.center);
  if (!ctx.domain.contains(c)) throw UsageError("center outside the domain " + ctx.domain.description());
  // Quadrant contexts anchor near the corner; plane contexts keep the base off the pole.
  const Point base = !args.base.empty()           ? parse_point(args.base)
                     : ctx.domain.contains({0.0, -1.0}) ? Point{c.x - 1.0, c.y - 1.0}
                                                        : Point{1e-6, 1e-6};
  const GridSpec grid = make_grid(args.grid, args.box, ctx, true);
  const bool plane_unit = args.ctx == "unit";
  const std::string constant = args.constant.empty() ? (plane_unit ? "pole" : "zero") : args.constant;
  if (args.closed_form != "none" && (args.ctx != "g_xy" || !(a == Binumber::real(1.0, ctx.sig))))
    throw UsageError("closed forms exist for --ctx g_xy with -a 1 only");

  TransplantConfig cfg;
  cfg.quad = args.common.quad();
  cfg.base_point = base;
  if (constant == "pole") {
    const Binumber d(base.x - c.x, base.y - c.y, ctx.sig);
    cfg.constant = ConstantPolicy::pin_at(base, (a / d).im);
  }
  const FormalPower K = cauchy_kernel(ctx, a, c, cfg);

  auto closed = [&](Point p) -> Binumber {
    if (args.closed_form == "printed") return oracles::kernel_printed(p, c);
    const Path path = make_path(base, p, K.value.domain(), cfg.path, cfg.quad);
    return oracles::kernel_corrected(p, c, path.vertices);
  };
  const bool with_closed = args.closed_form != "none";

  const auto pts = grid.points();
  std::vector<std::vector<Cell>> rows(pts.size());
  std::vector<double> errs(pts.size(), 0.0);
  parallel_for(pts.size(), [&](std::size_t i) {
    const Point p = pts[i];
    std::vector<Cell>& row = rows[i];
    row = {num(p.x), num(p.y)};
    if (distance(p, c) < args.exclude) {
      row.resize(with_closed ? 8 : 5);
      return;
    }
    const Binumber v = K.value(p);
    const double H = norm(Binumber(p.x - c.x, p.y - c.y, ctx.sig) * v);
    row.insert(row.end(), {num(v.re), num(v.im), num(H)});
    if (with_closed) {
      const Binumber w = closed(p);
      errs[i] = norm(v - w) / norm(w);
      row.insert(row.end(), {num(w.re), num(w.im), num(errs[i])});
    }
  });
  Table t{{"x", "y", "re", "im", "H"}, std::move(rows)};
  if (with_closed) t.columns.insert(t.columns.end(), {"closed_re", "closed_im", "closed_rel_err"});
  json spec = {{"command", "kernel-grid"},  {"context", args.ctx},          {"a", coeff_json(a)},
               {"center", point_json(c)},     {"base", point_json(base)},     {"constant", constant},
               {"grid", {grid.nx, grid.ny}},  {"box", box_json(grid.box)},    {"exclude", args.exclude},
               {"closed_form", args.closed_form}};
  spec.update(common_spec(args.common));
  emit(args.common, out, t, spec);

  if (args.circle > 0.0) {
    std::vector<double> H(720);
    parallel_for(H.size(), [&](std::size_t k) {
      const double th = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(H.size());
      const Point p{c.x + args.circle * std::cos(th), c.y + args.circle * std::sin(th)};
      H[k] = norm(Binumber(p.x - c.x, p.y - c.y, ctx.sig) * K.value(p));
    });
    const auto [lo, hi] = std::minmax_element(H.begin(), H.end());
    err << "kernel-grid: H on |z-z0|=" << args.circle << ": min=" << *lo << " max=" << *hi << '\n';
  }
  if (with_closed) {
    const double worst = *std::max_element(errs.begin(), errs.end());
    const bool pass = worst <= args.common.tol;
    err << "kernel-grid: closed_form=" << args.closed_form << " max_rel_err=" << worst << " tol=" << args.common.tol
        << (pass ? " PASS" : " FAIL") << '\n';
    if (!pass) return verification_failure;
  }
  return ok;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  Common common;
  std::string ctx = "all";
  std::vector<std::string> perturb;
  bool list = false;
};

int verify_cmd(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const auto names = check_names();
  if (args.list) {
    for (const auto& n : names) out << n << '\n';
    return ok;
  }
  const std::set<std::string> tags{"all", "f_y2", "g_1xy3", "g_xy", "unit", "hyperbolic_unit"};
  if (!tags.count(args.ctx)) throw UsageError("verify --ctx must be all, f_y2, g_1xy3, g_xy, unit or hyperbolic_unit");
  for (const auto& p : args.perturb)
    if (std::find(names.begin(), names.end(), p) == names.end()) throw UsageError("unknown invariant '" + p + "'");

  VerifyOptions opts;
  opts.context = args.ctx;
  opts.perturb = args.perturb;
  opts.tol = args.common.tol;
  opts.quad = args.common.quad();
  opts.h = args.common.h;
  const auto checks = run_verify(opts);

  Table t{{"name", "context", "measured", "tolerance", "pass", "detail"}, {}};
  std::vector<std::string> failed;
  for (const auto& c : checks) {
    t.rows.push_back({c.name, c.context, num(c.measured), num(c.tol), c.pass,
                      c.detail.empty() ? Cell{} : Cell{c.detail}});
    if (!c.pass) failed.push_back(c.name);
  }
  json spec = {{"command", "verify"}, {"context", args.ctx}, {"perturb", args.perturb}};
  spec.update(common_spec(args.common));
  emit(args.common, out, t, spec);
  err << "verify: " << checks.size() << " invariants, " << failed.size() << " failed";
  for (const auto& f : failed) err << ' ' << f;
  err << '\n';
  return failed.empty() ? ok : verification_failure;
}

// ---------------------------------------------------------------------------

struct SequenceArgs {
  Common common;
  std::string ctx = "g_1xy3";
  int M = 2;
  std::string center = "1,2";
  std::string grid = "10x10";
  std::string box;
  std::string via;
};

int sequence_cmd(const SequenceArgs& args, std::ostream& out, std::ostream& err) {
  const SchrodingerContext ctx = context(args.ctx);
  const Point c = parse_point(args.center);
  if (args.M < 0) throw UsageError("-M must be non-negative");
  if (!ctx.domain.contains(c)) throw UsageError("center outside the domain " + ctx.domain.description());
  const GridSpec grid = make_grid(args.grid, args.box, ctx, false);
  std::string via = args.via;
  if (via.empty() && !period_one(args.ctx)) via = default_source(args.ctx);
  if (!via.empty() && !period_one(via)) throw UsageError("--via must name a period-one context");
  std::optional<SchrodingerContext> src;
  if (!via.empty()) src = context(via);
  const RecursionCfg rc{PathPolicy{}, args.common.quad()};
  TransplantConfig tc;
  tc.quad = rc.quad;

  // A failing step is reported as a row; the pairs before it are kept.
  std::vector<GeneratingPair> pairs;
  std::string failure;
  for (int M = args.M; M >= 0 && pairs.empty(); --M) {
    try {
      pairs = successor_sequence(ctx, M, c, src, rc, tc);
    } catch (const Error& e) {
      if (failure.empty()) failure = std::string(to_string(e.kind())) + ": " + e.what();
    }
  }

  const auto pts = grid.points();
  const bool g_oracle = args.ctx == "g_1xy3";
  Table t{{"m", "x", "y", "F_re", "F_im", "G_re", "G_im", "successor_residual", "oracle_F_rel_err",
           "oracle_G_rel_err", "status"},
          {}};
  bool pass = failure.empty();
  for (int m = 0; m < static_cast<int>(pairs.size()); ++m) {
    std::optional<BiField> oF, oG;
    if (g_oracle && m == 1) oF = oracles::F1(c), oG = oracles::G1(c);
    if (g_oracle && m == 2) oF = oracles::F2(c), oG = oracles::G2(c);
    std::vector<std::vector<Cell>> rows(pts.size());
    std::vector<double> res(pts.size(), 0.0), ef(pts.size(), 0.0), eg(pts.size(), 0.0);
    parallel_for(pts.size(), [&](std::size_t i) {
      const Point p = pts[i];
      const Binumber F = pairs[m].F(p), G = pairs[m].G(p);
      Cell r, cf, cg;
      if (m > 0) {
        res[i] = norm(pairs[m].a(p) - pairs[m - 1].a(p)) + norm(pairs[m].b(p) + pairs[m - 1].B(p));
        r = res[i];
      }
      if (oF) {
        ef[i] = norm(F - (*oF)(p)) / norm((*oF)(p));
        eg[i] = norm(G - (*oG)(p)) / norm((*oG)(p));
        cf = ef[i];
        cg = eg[i];
      }
      rows[i] = {static_cast<long long>(m), num(p.x), num(p.y), num(F.re), num(F.im), num(G.re), num(G.im),
                 r, cf, cg, std::string("ok")};
    });
    for (auto& row : rows) t.rows.push_back(std::move(row));
    const double worst_res = *std::max_element(res.begin(), res.end());
    const double worst_oracle = std::max(*std::max_element(ef.begin(), ef.end()), *std::max_element(eg.begin(), eg.end()));
    err << "sequence: m=" << m;
    if (m > 0) err << " successor_residual=" << worst_res;
    if (oF) err << " oracle_rel_err=" << worst_oracle;
    err << '\n';
    pass = pass && worst_res <= args.common.tol && worst_oracle <= args.common.tol;
  }
  if (!failure.empty())
    t.rows.push_back({static_cast<long long>(pairs.size()), Cell{}, Cell{}, Cell{}, Cell{}, Cell{}, Cell{}, Cell{},
                      Cell{}, Cell{}, failure});

  // Equivalence checks: F_2 / (y/y0)^2 and G_2 / (i (y0/y)^2) real and
  // constant for g_1xy3; every successor equal to F_1 = F_0/f(z0) for
  // period-one contexts.
  auto spread_of = [&](const std::function<Binumber(Point)>& ratio) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo, im = 0.0;
    for (Point p : pts) {
      const Binumber r = ratio(p);
      lo = std::min(lo, r.re);
      hi = std::max(hi, r.re);
      im = std::max(im, std::fabs(r.im));
    }
    return std::pair{im, hi - lo};
  };
  if (g_oracle && pairs.size() > 2) {
    const Binumber e = Binumber::unit(ctx.sig);
    const auto [fi, fs] = spread_of([&](Point p) { return pairs[2].F(p) * (c.y * c.y / (p.y * p.y)); });
    const auto [gi, gs] = spread_of([&](Point p) { return pairs[2].G(p) * (p.y * p.y / (c.y * c.y)) / e; });
    err << "sequence: F2/(y/y0)^2 max|Im|=" << fi << " spread=" << fs << "; G2/(i(y0/y)^2) max|Im|=" << gi
        << " spread=" << gs << '\n';
    pass = pass && std::max({fi, fs, gi, gs}) <= args.common.tol;
  }
  if (period_one(args.ctx) && pairs.size() > 1) {
    const double f0 = ctx.f(c).re;
    double w = std::max(max_rel_err(pairs[1].F, pairs[0].F / f0, pts), max_rel_err(pairs[1].G, pairs[0].G * f0, pts));
    for (std::size_t m = 2; m < pairs.size(); ++m)
      w = std::max({w, max_rel_err(pairs[m].F, pairs[1].F, pts), max_rel_err(pairs[m].G, pairs[1].G, pts)});
    err << "sequence: period one, max rel deviation=" << w << '\n';
    pass = pass && w <= args.common.tol;
  }
  if (!failure.empty()) err << "sequence: step " << pairs.size() << " failed: " << failure << '\n';

  json spec = {{"command", "sequence"}, {"context", args.ctx},       {"M", args.M},
               {"center", point_json(c)}, {"grid", {grid.nx, grid.ny}}, {"box", box_json(grid.box)},
               {"via", via.empty() ? json(nullptr) : json(via)}};
  spec.update(common_spec(args.common));
  emit(args.common, out, t, spec);
  return pass ? ok : verification_failure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudoanalytic functions: formal powers, Cauchy kernels, sequences and invariant checks"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  FormalPowerArgs fp;
  auto* fpc = app.add_subcommand("formal-power", "Formal power Z^(n)(a, z0; z) on a grid");
  fpc->add_option("--ctx", fp.ctx, "Named context");
  fpc->add_option("-n", fp.n, "Order n >= 0");
  fpc->add_option("-a", fp.a, "Coefficient: 1, i, or re,im");
  fpc->add_option("--center", fp.center, "Center z0 as x,y");
  fpc->add_option("--grid", fp.grid, "NXxNY");
  fpc->add_option("--box", fp.box, "xmin,xmax,ymin,ymax");
  fpc->add_flag("--oracle", fp.oracle, "Compare against the closed form");
  fpc->add_option("--via-transplant", fp.via, "Build in a period-one context and transplant");
  add_common(fpc, fp.common);

  KernelArgs kg;
  auto* kgc = app.add_subcommand("kernel-grid", "Cauchy kernel Z^(-1)(a, z0; z) and H = |(z - z0) Z| on a grid");
  kgc->add_option("--ctx", kg.ctx, "Named elliptic context");
  kgc->add_option("-a", kg.a, "Coefficient: 1, i, or re,im");
  kgc->add_option("--center", kg.center, "Pole z0 as x,y");
  kgc->add_option("--grid", kg.grid, "NXxNY");
  kgc->add_option("--box", kg.box, "xmin,xmax,ymin,ymax");
  kgc->add_option("--base", kg.base, "Base point z1 of the integration (default 1e-6,1e-6 in quadrant contexts, center-(1,1) in plane contexts)");
  kgc->add_option("--exclude", kg.exclude, "Radius of the puncture disc written as null");
  kgc->add_option("--closed-form", kg.closed_form, "Closed-form column")
      ->check(CLI::IsMember({"none", "printed", "corrected"}));
  kgc->add_option("--circle", kg.circle, "Report the range of H on |z - z0| = R (0: off)");
  kgc->add_option("--constant", kg.constant, "zero: Im vanishes at z1; pole: Im matches a/(z1 - z0)")
      ->check(CLI::IsMember({"zero", "pole"}));
  add_common(kgc, kg.common);

  VerifyArgs vf;
  auto* vfc = app.add_subcommand("verify", "Run the invariant suite");
  vfc->add_option("--ctx", vf.ctx, "all or a context tag");
  vfc->add_option("--perturb", vf.perturb, "Perturb the named invariant (negative control)");
  vfc->add_flag("--list", vf.list, "List invariant names");
  add_common(vfc, vf.common);

  SequenceArgs sq;
  auto* sqc = app.add_subcommand("sequence", "Generating sequence (F_m, G_m), m = 0..M");
  sqc->add_option("--ctx", sq.ctx, "Named context");
  sqc->add_option("-M", sq.M, "Last index M");
  sqc->add_option("--center", sq.center, "Normalization point z0 as x,y");
  sqc->add_option("--grid", sq.grid, "NXxNY");
  sqc->add_option("--box", sq.box, "xmin,xmax,ymin,ymax");
  sqc->add_option("--via", sq.via, "Period-one context supplying the formal powers");
  add_common(sqc, sq.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (fpc->parsed()) return formal_power_cmd(fp, out, err);
    if (kgc->parsed()) return kernel_grid_cmd(kg, out, err);
    if (vfc->parsed()) return verify_cmd(vf, out, err);
    return sequence_cmd(sq, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return usage_error;
  } catch (const ContractViolation& e) {
    err << "usage error: " << e.what() << '\n';
    return usage_error;
  } catch (const Error& e) {
    err << "numerical error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return numerical_error;
  } catch (const std::exception& e) {
    err << "numerical error: " << e.what() << '\n';
    return numerical_error;
  }
}

}  // namespace pseudoanalytic::cli
