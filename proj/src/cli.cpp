#include "solenoid/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "solenoid/dynamics.hpp"
#include "solenoid/error.hpp"
#include "solenoid/hull.hpp"
#include "solenoid/induced.hpp"
#include "solenoid/io.hpp"

namespace solenoid::cli {

namespace {

using io::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNoSuchOrbit:
    case ErrorKind::kBreakpointCapExceeded:
      return kExitMath;
    default:
      return kExitUsage;
  }
}

Format resolve(Format f, Format fallback) { return f == Format::kDefault ? fallback : f; }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << content;
  if (!file) throw UsageError("failed writing '" + path + "'");
}

void emit(const ExperimentConfig& config, const std::string& content, std::ostream& out) {
  if (config.out.empty()) {
    out << content;
  } else {
    write_file(config.out, content);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json load_input(const ExperimentConfig& config) {
  if (config.input.empty()) throw UsageError("--input is required");
  return io::load_json(config.input);
}

InducedHomeo load_induced(const ExperimentConfig& config) {
  io::AnyHomeo any = io::parse_any_homeo(load_input(config));
  if (auto* f = std::get_if<InducedHomeo>(&any)) return *f;
  // A limit-periodic descriptor stands for its finest stored truncation.
  const auto& h = std::get<LimitPeriodicHomeo>(any);
  return lp_truncate(h, h.levels()).homeo;
}

std::vector<SolenoidPoint> sample_points(const ExperimentConfig& config) {
  if (config.samples < 0) throw UsageError("--samples must be >= 0");
  std::mt19937_64 rng(config.seed);
  std::vector<SolenoidPoint> points;
  points.reserve(static_cast<std::size_t>(config.samples));
  for (std::int64_t i = 0; i < config.samples; ++i) {
    points.push_back(random_exact_point(rng, config.depth));
  }
  return points;
}

CircleLift leaf_lift(const InducedHomeo& f) {
  if (f.is_pl()) return CircleLift(f.base_leaf_map());
  const AnalyticLift& a = *f.base().analytic();
  return CircleLift(AnalyticLift(a.degree(), a.alpha() + f.offset().get_d(), a.terms()));
}

std::int64_t enclosure_iters(const ExperimentConfig& config) {
  if (config.iters < 1) throw UsageError("--iters must be >= 1");
  return config.iters;
}

// ------------------------------------------------------------------ commands

int cmd_rotation(const ExperimentConfig& config, std::ostream& out, std::ostream&) {
  InducedHomeo f = load_induced(config);
  RotationEnclosure e = certify_rotation(leaf_lift(f), enclosure_iters(config));
  Format format = resolve(config.format, Format::kJson);
  if (format == Format::kJson) {
    emit(config, dump(io::enclosure_to_json(e)), out);
  } else if (format == Format::kCsv) {
    std::ostringstream csv;
    csv << "lo,hi,exact,witness,iterations,certified\n"
        << to_string(e.lo) << ',' << to_string(e.hi) << ','
        << (e.exact ? to_string(*e.exact) : "") << ','
        << (e.witness ? to_string(*e.witness) : "") << ',' << e.iterations << ','
        << (e.certified ? "true" : "false") << '\n';
    emit(config, csv.str(), out);
  } else {
    throw UsageError("rotation supports --format json|csv");
  }
  return kExitOk;
}

std::string verdict_name(const OrbitClassification& c) {
  if (c.fiber_periodic()) return "FiberPeriodic";
  if (c.asymptotic()) return "AsymptoticToFiber";
  return "Inconclusive";
}

int cmd_orbit(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  InducedHomeo f = load_induced(config);
  Rational tol = parse_rational(config.tol);
  if (tol < 0) throw UsageError("--tol must be >= 0");
  if (config.iters < 0) throw UsageError("--iters must be >= 0");

  Rational rho;
  if (!config.rho.empty()) {
    rho = parse_rational(config.rho);
  } else {
    // A zero orbit budget still needs a certified p/q.
    RotationEnclosure e = certify_rotation(leaf_lift(f), std::max<std::int64_t>(config.iters, 1));
    if (!e.exact) {
      err << "no rational rotation number certified (denominators <= "
          << e.searched_denominator << "); orbit classification needs p/q\n";
      return kExitMath;
    }
    rho = *e.exact;
  }
  const Integer p = rho.get_num();
  if (rho.get_den() > 1'000'000'000) throw UsageError("rotation denominator too large");
  const std::int64_t q = rho.get_den().get_si();

  SolenoidPoint start = SolenoidPoint::zero(config.depth);
  if (!config.start.empty()) {
    start = parse_point(config.start);
    if (start.depth() != config.depth) throw UsageError("--start depth differs from --depth");
  } else {
    std::mt19937_64 rng(config.seed);
    start = random_exact_point(rng, config.depth);
  }

  OrbitClassification c = classify_orbit(f, start, p, q, config.iters, tol, true);

  Format format = resolve(config.format, Format::kCsv);
  if (format == Format::kCsv) {
    std::ostringstream csv;
    csv << "iterate,x";
    for (std::size_t m = 1; m <= config.depth; ++m) csv << ",r" << m;
    csv << ",distance\n";
    for (const OrbitSample& s : c.trace) {
      csv << s.iterate << ',' << to_string(s.point.leaf());
      for (const Integer& r : s.point.fiber().residues()) csv << ',' << r.get_str();
      csv << ',' << to_string(s.distance) << '\n';
    }
    emit(config, csv.str(), out);
  } else if (format == Format::kJson) {
    Json j;
    j["verdict"] = verdict_name(c);
    j["p"] = to_string(p);
    j["q"] = q;
    j["start"] = to_literal(start);
    if (const auto* a = std::get_if<AsymptoticToFiber>(&c.verdict)) {
      j["target"] = to_literal(a->target);
      j["distance"] = to_string(a->distance);
      j["iterations"] = a->iterations;
    } else if (const auto* inc = std::get_if<Inconclusive>(&c.verdict)) {
      j["reason"] = inc->reason;
    }
    emit(config, dump(j), out);
  } else {
    throw UsageError("orbit supports --format csv|json");
  }
  err << "verdict: " << verdict_name(c);
  if (const auto* inc = std::get_if<Inconclusive>(&c.verdict)) err << " (" << inc->reason << ")";
  err << '\n';
  return kExitOk;
}

int cmd_semiconj(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  InducedHomeo f = load_induced(config);
  if (!f.is_pl()) throw UsageError("semiconj needs an exact (pl) map");
  std::vector<SolenoidPoint> points = sample_points(config);
  SemiconjugacyReport report = check_semiconjugacy(f, points);
  if (resolve(config.format, Format::kJson) != Format::kJson) {
    throw UsageError("semiconj supports --format json");
  }
  emit(config, dump(io::semiconjugacy_to_json(report)), out);
  if (!report.exact) {
    err << "semi-conjugacy violated: max_error " << to_string(report.max_error) << '\n';
    return kExitMath;
  }
  return kExitOk;
}

int cmd_hull(const ExperimentConfig& config, std::ostream& out, std::ostream&) {
  io::AnyHomeo any = io::parse_any_homeo(load_input(config));
  if (resolve(config.format, Format::kJson) != Format::kJson) {
    throw UsageError("hull supports --format json");
  }
  Json j;
  if (const auto* h = std::get_if<LimitPeriodicHomeo>(&any)) {
    j["classification"] = "limit_periodic";
    j["tower"] = h->tower();
    Json levels = Json::array();
    for (std::size_t level = 0; level <= h->levels(); ++level) {
      HullRef hull = Hull::of_truncation(*h, level);
      Json row;
      row["level"] = level;
      row["period"] = std::to_string(hull->period());
      row["bound"] = to_string(hull->error_bound());
      levels.push_back(row);
    }
    j["levels"] = levels;
    emit(config, dump(j), out);
    return kExitOk;
  }
  const InducedHomeo& f = std::get<InducedHomeo>(any);
  if (!f.is_pl()) throw UsageError("hull needs an exact (pl) map");
  HullRef hull = Hull::of_induced(f);
  std::vector<SolenoidPoint> points = sample_points(config);
  Rational hom_error = 0;
  for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
    HullPoint lhs = K_map(sol_add(points[i], points[i + 1]), hull);
    HullPoint rhs = hull_mul(K_map(points[i], hull), K_map(points[i + 1], hull));
    hom_error = std::max(hom_error, hull_distance(lhs, rhs));
  }
  j["classification"] = "periodic";
  j["period"] = std::to_string(hull->period());
  j["degree"] = f.degree();
  j["quotient_rotation"] = io::enclosure_to_json(
      quotient_rotation(quotient_map(hull), enclosure_iters(config)));
  j["homomorphism_max_error"] = to_string(hom_error);
  j["samples"] = points.size();
  emit(config, dump(j), out);
  return kExitOk;
}

struct DensityRow {
  std::size_t level;
  std::int64_t period;
  Rational bound;
  Rational gap;
};

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string density_svg(const std::vector<DensityRow>& rows) {
  const double width = 480, height = 320, margin = 40;
  double top = 0;
  for (const DensityRow& r : rows) top = std::max({top, r.bound.get_d(), r.gap.get_d()});
  if (top <= 0) top = 1;
  const double span = rows.size() > 1 ? static_cast<double>(rows.size() - 1) : 1.0;
  auto px = [&](std::size_t i) { return margin + (width - 2 * margin) * static_cast<double>(i) / span; };
  auto py = [&](double v) { return height - margin - (height - 2 * margin) * v / top; };
  auto polyline = [&](bool bound) {
    std::string pts;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const double v = bound ? rows[i].bound.get_d() : rows[i].gap.get_d();
      if (i) pts += ' ';
      pts += fixed(px(i)) + "," + fixed(py(v));
    }
    return pts;
  };
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "  <line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin
      << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n"
      << "  <line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
      << height - margin << "\" stroke=\"black\"/>\n"
      << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\""
      << polyline(true) << "\"/>\n"
      << "  <polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\" points=\""
      << polyline(false) << "\"/>\n"
      << "  <text x=\"" << width / 2 << "\" y=\"" << height - 8
      << "\" text-anchor=\"middle\" font-size=\"12\">level</text>\n"
      << "  <text x=\"" << width - margin << "\" y=\"" << margin
      << "\" text-anchor=\"end\" font-size=\"12\" fill=\"#1f77b4\">certified bound</text>\n"
      << "  <text x=\"" << width - margin << "\" y=\"" << margin + 16
      << "\" text-anchor=\"end\" font-size=\"12\" fill=\"#d62728\">measured gap</text>\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    svg << "  <text x=\"" << fixed(px(i)) << "\" y=\"" << height - margin + 14
        << "\" text-anchor=\"middle\" font-size=\"10\">" << rows[i].level << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

int cmd_density(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  io::AnyHomeo any = io::parse_any_homeo(load_input(config));
  const auto* h = std::get_if<LimitPeriodicHomeo>(&any);
  if (!h) throw UsageError("density needs a limit-periodic ({\"lp\": ...}) descriptor");
  if (config.samples < 1) throw UsageError("--samples must be >= 1 for density");

  const PlFunction& full = h->partial_sum(h->levels());
  const Rational span(full.period());
  std::vector<DensityRow> rows;
  for (std::size_t level = 0; level <= h->levels(); ++level) {
    const PlFunction& part = h->partial_sum(level);
    Rational gap = 0;
    for (std::int64_t i = 0; i < config.samples; ++i) {
      Rational x = span * Rational(i) / Rational(config.samples);
      Rational d = full.eval(x) - part.eval(x);
      gap = std::max(gap, Rational(abs(d)));
    }
    rows.push_back({level, level == 0 ? 1 : h->tower()[level - 1], h->bound(level), gap});
  }

  std::ostringstream csv;
  csv << "level,period,certified_bound,measured_gap\n";
  for (const DensityRow& r : rows) {
    csv << r.level << ',' << r.period << ',' << to_string(r.bound) << ',' << to_string(r.gap) << '\n';
  }
  Format format = resolve(config.format, Format::kCsv);
  if (format == Format::kCsv) {
    emit(config, csv.str(), out);
    if (!config.out.empty()) {
      std::filesystem::path svg_path(config.out);
      svg_path.replace_extension(".svg");
      write_file(svg_path.string(), density_svg(rows));
    }
  } else if (format == Format::kSvg) {
    emit(config, density_svg(rows), out);
  } else {
    throw UsageError("density supports --format csv|svg");
  }
  for (const DensityRow& r : rows) {
    if (r.gap > r.bound) {
      err << "measured gap exceeds the certified bound at level " << r.level << '\n';
      return kExitMath;
    }
  }
  return kExitOk;
}

}  // namespace

SolenoidPoint random_exact_point(std::mt19937_64& rng, std::size_t depth) {
  const std::uint64_t den = 1 + rng() % 64;
  const std::uint64_t num = rng() % den;
  Integer t(static_cast<unsigned long>(rng()));
  Integer top;
  mpz_fdiv_r(top.get_mpz_t(), t.get_mpz_t(), factorial(depth).get_mpz_t());
  Rational leaf(Integer(static_cast<unsigned long>(num)), Integer(static_cast<unsigned long>(den)));
  leaf.canonicalize();
  return canonicalize<Rational>(leaf, ProfiniteInt::embed(top, depth));
}

int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.depth < 1 || config.depth > kMaxDepth) throw UsageError("--depth out of range");
    if (config.subcommand == "rotation") return cmd_rotation(config, out, err);
    if (config.subcommand == "orbit") return cmd_orbit(config, out, err);
    if (config.subcommand == "semiconj") return cmd_semiconj(config, out, err);
    if (config.subcommand == "hull") return cmd_hull(config, out, err);
    if (config.subcommand == "density") return cmd_density(config, out, err);
    throw UsageError("unknown subcommand '" + config.subcommand + "'");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ExperimentConfig config;
  CLI::App app{"Dynamics of induced homeomorphisms of the universal solenoid", "solenoid_cli"};
  app.add_option("subcommand", config.subcommand, "rotation | orbit | semiconj | hull | density")
      ->required()
      ->check(CLI::IsMember({"rotation", "orbit", "semiconj", "hull", "density"}));
  app.add_option("--input", config.input, "map / homeomorphism descriptor (JSON)");
  app.add_option("--depth", config.depth, "profinite truncation depth M")->capture_default_str();
  app.add_option("--iters", config.iters, "iteration budget q")->capture_default_str();
  app.add_option("--tol", config.tol, "tolerance (rational or decimal)")->capture_default_str();
  app.add_option("--samples", config.samples, "sample count")->capture_default_str();
  app.add_option("--seed", config.seed, "random seed")->capture_default_str();
  app.add_option("--out", config.out, "output path (stdout when omitted)");
  std::string format;
  app.add_option("--format", format, "csv | json | svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  app.add_option("--start", config.start, "orbit start point 'x=p/q; k=(r1,...,rM)'");
  app.add_option("--rho", config.rho, "orbit rotation number p/q (skips certification)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (format == "csv") config.format = Format::kCsv;
  if (format == "json") config.format = Format::kJson;
  if (format == "svg") config.format = Format::kSvg;
  return run(config, out, err);
}

}  // namespace solenoid::cli
