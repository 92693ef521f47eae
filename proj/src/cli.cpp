#include "slitsqueeze/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "slitsqueeze/domain_io.hpp"
#include "slitsqueeze/error.hpp"
#include "slitsqueeze/geometry.hpp"
#include "slitsqueeze/oracle.hpp"
#include "slitsqueeze/prime.hpp"
#include "slitsqueeze/slit_map.hpp"
#include "slitsqueeze/squeezing.hpp"

namespace slitsqueeze {

namespace {

using json = nlohmann::ordered_json;

constexpr double kGridMargin = 1e-3;

enum class Format { json, csv };

struct Inputs {
  std::optional<double> q;
  std::string z;
  std::string y;
  std::string at;
  std::string domain;
  std::size_t boundary = 0;
  std::string grid;
  std::optional<double> tol;
  std::size_t max_terms = TruncationPolicy{}.max_terms;
  std::size_t max_word_length = TruncationPolicy{}.max_word_length;
  std::size_t samples = kDefaultSamples;
  std::string format_text;
};

struct RunConfig {
  TruncationPolicy policy;
  std::size_t samples;
  Format format;
};

[[noreturn]] void bad_input(const std::string& msg) { throw Error(ErrorKind::InvalidArgument, msg); }

double parse_real(const std::string& text, const std::string& what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) bad_input(what + ": not a number: '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

Complex parse_complex(const std::string& text, const std::string& what) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return {parse_real(parts[0], what), 0.0};
  if (parts.size() != 2) bad_input(what + ": expected re,im but got '" + text + "'");
  return {parse_real(parts[0], what), parse_real(parts[1], what)};
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v == 0) {
    bad_input(what + ": expected a positive integer, got '" + text + "'");
  }
  return v;
}

std::string shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string digits17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json point(Complex z) { return json::array({z.real(), z.imag()}); }

RunConfig make_config(const Inputs& in, Format fallback) {
  const Format format = in.format_text.empty() ? fallback : in.format_text == "csv" ? Format::csv : Format::json;
  RunConfig c{TruncationPolicy{}, in.samples, format};
  if (in.tol) {
    c.policy.tol = *in.tol;
  } else if (const char* env = std::getenv("SLITSQUEEZE_TOL"); env && *env) {
    c.policy.tol = parse_real(env, "SLITSQUEEZE_TOL");
  }
  c.policy.max_terms = in.max_terms;
  c.policy.max_word_length = in.max_word_length;
  c.policy.validate();
  if (c.samples < 8) bad_input("--samples must be >= 8");
  return c;
}

CircularDomain pick_domain(const Inputs& in) {
  if (!in.domain.empty()) {
    if (in.q) bad_input("give either --domain or --q, not both");
    return load_domain(in.domain);
  }
  if (in.q) return annulus_domain(Annulus(*in.q));
  bad_input("a domain is required: --domain <file> or --q <inner radius>");
}

Complex require_point(const std::string& text, const char* flag) {
  if (text.empty()) bad_input(std::string(flag) + " is required");
  return parse_complex(text, flag);
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::NoConvergence:
    case ErrorKind::DenominatorZero:
    case ErrorKind::ProfileDegenerate:
      return 1;
    default:
      return 2;
  }
}

// ---------------------------------------------------------------------------

int cmd_annulus_squeeze(const Inputs& in, std::ostream& out) {
  const RunConfig cfg = make_config(in, in.grid.empty() ? Format::json : Format::csv);
  if (!in.q) bad_input("--q is required");
  const double q = Annulus(*in.q).q();
  if (in.grid.empty()) {
    const Complex z = require_point(in.z, "--z");
    const double s = squeeze_annulus_exact(z, q);
    if (cfg.format == Format::csv) {
      out << "abs_z,S\n" << shortest(std::abs(z)) << ',' << shortest(s) << '\n';
    } else {
      out << json{{"q", q}, {"z", point(z)}, {"S", s}}.dump() << '\n';
    }
    return 0;
  }
  if (!in.z.empty()) bad_input("give either --z or --grid, not both");
  const auto parts = split(in.grid, ':');
  if (parts.size() != 3) bad_input("--grid: expected a:b:n, got '" + in.grid + "'");
  const double a = parse_real(parts[0], "--grid");
  const double b = parse_real(parts[1], "--grid");
  const std::size_t n = parse_count(parts[2], "--grid");
  std::vector<std::pair<double, double>> rows;
  for (std::size_t k = 0; k < n; ++k) {
    const double r = n == 1 ? a : a + (b - a) * static_cast<double>(k) / static_cast<double>(n - 1);
    rows.emplace_back(r, squeeze_annulus_exact(r, q));
  }
  if (cfg.format == Format::csv) {
    out << "abs_z,S\n";
    for (const auto& [r, s] : rows) out << shortest(r) << ',' << shortest(s) << '\n';
  } else {
    json arr = json::array();
    for (const auto& [r, s] : rows) arr.push_back({{"abs_z", r}, {"S", s}});
    out << json{{"q", q}, {"rows", arr}}.dump() << '\n';
  }
  return 0;
}

int cmd_sk_prime(const Inputs& in, std::ostream& out) {
  const RunConfig cfg = make_config(in, Format::json);
  const Complex z = require_point(in.z, "--z");
  const Complex y = require_point(in.y, "--y");
  PrimeValue v;
  std::vector<std::pair<std::string, double>> extra;
  if (in.q && in.domain.empty()) {
    v = omega_annulus(z, y, *in.q, cfg.policy);
    extra.emplace_back("reflection_residual", reflection_identity_residual(z, y, *in.q, cfg.policy));
    extra.emplace_back("quasi_periodicity_residual", quasi_periodicity_residual(z, y, *in.q, cfg.policy));
    extra.emplace_back("quasi_periodicity_residual_linear_q",
                       quasi_periodicity_residual(z, y, *in.q, cfg.policy, QuasiPeriodicity::kLinearInQ));
  } else {
    v = omega_circular(z, y, pick_domain(in), cfg.policy);
  }
  if (cfg.format == Format::csv) {
    out << "re,im,est_error,terms_used,converged";
    for (const auto& e : extra) out << ',' << e.first;
    out << '\n'
        << digits17(v.value.real()) << ',' << digits17(v.value.imag()) << ',' << digits17(v.est_error) << ','
        << v.terms_used << ',' << (v.converged ? 1 : 0);
    for (const auto& e : extra) out << ',' << digits17(e.second);
    out << '\n';
    return 0;
  }
  // hand-written so every number keeps 17 significant digits
  out << "{\"omega\":[" << digits17(v.value.real()) << ',' << digits17(v.value.imag())
      << "],\"est_error\":" << digits17(v.est_error) << ",\"terms_used\":" << v.terms_used
      << ",\"converged\":" << (v.converged ? "true" : "false");
  for (const auto& e : extra) out << ",\"" << e.first << "\":" << digits17(e.second);
  out << "}\n";
  return 0;
}

int cmd_slit_map(const Inputs& in, std::ostream& out) {
  const RunConfig cfg = make_config(in, Format::json);
  const CircularDomain d = pick_domain(in);
  const SlitMap m(d, require_point(in.z, "--z"), in.boundary, cfg.policy);
  const Complex at = require_point(in.at, "--at");
  const SlitValue v = m.eval(at);
  if (cfg.format == Format::csv) {
    out << "re,im,modulus,est_error\n"
        << shortest(v.value.real()) << ',' << shortest(v.value.imag()) << ',' << shortest(std::abs(v.value)) << ','
        << shortest(v.est_error) << '\n';
  } else {
    out << json{{"base", point(m.base())},
                {"boundary", in.boundary},
                {"at", point(at)},
                {"value", point(v.value)},
                {"modulus", std::abs(v.value)},
                {"est_error", v.est_error},
                {"derivative_at_base", m.derivative_at_base()}}
               .dump()
        << '\n';
  }
  return 0;
}

json profile_json(const SlitProfile& p) {
  json radii = json::array();
  for (const auto& r : p.radii) radii.push_back(json::array({r.boundary, r.radius}));
  return {{"i", p.boundary_index},        {"radii", radii},
          {"deviations", p.deviations},   {"samples", p.samples_per_circle},
          {"est_error", p.est_error},     {"reliable", p.reliable()}};
}

int cmd_profile(const Inputs& in, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = make_config(in, Format::json);
  const CircularDomain d = pick_domain(in);
  const SlitProfile p = slit_profile(d, require_point(in.z, "--z"), in.boundary, cfg.samples, cfg.policy);
  if (cfg.format == Format::csv) {
    out << "j,radius,deviation\n";
    for (std::size_t k = 0; k < p.radii.size(); ++k) {
      out << p.radii[k].boundary << ',' << shortest(p.radii[k].radius) << ',' << shortest(p.deviations[k]) << '\n';
    }
  } else {
    out << profile_json(p).dump() << '\n';
  }
  if (!p.reliable()) {
    err << "warning: slit circles deviate by more than " << shortest(kUnreliableDeviation) << "\n";
    return 1;
  }
  return 0;
}

json no_convergence_json(const NoConvergenceError& e) {
  return {{"error", "NoConvergence"}, {"message", e.what()}, {"history", e.history()}};
}

int cmd_bounds(const Inputs& in, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = make_config(in, Format::json);
  const CircularDomain d = pick_domain(in);
  const Complex z0 = require_point(in.z, "--z");
  SqueezeBounds b;
  try {
    b = squeeze_bounds(d, z0, {cfg.samples, cfg.policy});
  } catch (const NoConvergenceError& e) {
    out << json{{"base", point(z0)}, {"diagnostics", no_convergence_json(e)}}.dump() << '\n';
    err << e.what() << '\n';
    return 1;
  }
  bool reliable = true;
  double est_error = 0.0;
  json deviations = json::array();
  for (const auto& p : b.profiles) {
    reliable = reliable && p.reliable();
    est_error = std::max(est_error, p.est_error);
    deviations.push_back(p.deviations);
  }
  if (cfg.format == Format::csv) {
    out << "re,im,lower,upper,exact\n"
        << shortest(z0.real()) << ',' << shortest(z0.imag()) << ',' << shortest(b.lower) << ',' << shortest(b.upper)
        << ',' << (b.exact ? 1 : 0) << '\n';
  } else {
    json per = json::array();
    for (const auto& pb : b.per_boundary) per.push_back({{"i", pb.boundary}, {"min", pb.lower}, {"max", pb.upper}});
    json certs = json::array();
    for (const auto& c : extremality_certificate(b)) {
      certs.push_back({{"i", c.boundary_index},
                       {"common_radius", c.common_radius},
                       {"spread", c.spread},
                       {"certified", c.certified}});
    }
    out << json{{"base", point(z0)},
                {"lower", b.lower},
                {"upper", b.upper},
                {"exact", b.exact},
                {"per_boundary", per},
                {"certificates", certs},
                {"diagnostics", {{"deviations", deviations}, {"est_error", est_error}, {"reliable", reliable}}}}
               .dump()
        << '\n';
  }
  if (!reliable) {
    err << "warning: slit circles deviate by more than " << shortest(kUnreliableDeviation)
        << "; bounds are not usable\n";
    return 1;
  }
  return 0;
}

std::vector<Complex> grid_points(const std::string& spec) {
  const auto parts = split(spec, ':');
  std::vector<Complex> pts;
  const auto axis = [](double a, double b, std::size_t n, std::size_t k) {
    return n == 1 ? a : a + (b - a) * static_cast<double>(k) / static_cast<double>(n - 1);
  };
  if (!parts.empty() && parts[0] == "rect" && parts.size() == 7) {
    const double x0 = parse_real(parts[1], "--grid");
    const double x1 = parse_real(parts[2], "--grid");
    const std::size_t nx = parse_count(parts[3], "--grid");
    const double y0 = parse_real(parts[4], "--grid");
    const double y1 = parse_real(parts[5], "--grid");
    const std::size_t ny = parse_count(parts[6], "--grid");
    for (std::size_t j = 0; j < ny; ++j) {
      for (std::size_t k = 0; k < nx; ++k) pts.emplace_back(axis(x0, x1, nx, k), axis(y0, y1, ny, j));
    }
  } else if (!parts.empty() && parts[0] == "polar" && parts.size() == 5) {
    const double r0 = parse_real(parts[1], "--grid");
    const double r1 = parse_real(parts[2], "--grid");
    const std::size_t nr = parse_count(parts[3], "--grid");
    const std::size_t nt = parse_count(parts[4], "--grid");
    for (std::size_t j = 0; j < nr; ++j) {
      for (std::size_t k = 0; k < nt; ++k) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(nt);
        pts.push_back(std::polar(axis(r0, r1, nr, j), t));
      }
    }
  } else {
    bad_input("--grid: expected rect:x0:x1:nx:y0:y1:ny or polar:r0:r1:nr:ntheta, got '" + spec + "'");
  }
  return pts;
}

int cmd_grid(const Inputs& in, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = make_config(in, Format::csv);
  const CircularDomain d = pick_domain(in);
  if (in.grid.empty()) bad_input("--grid is required");
  const auto pts = grid_points(in.grid);
  std::size_t skipped = 0;
  std::size_t failed = 0;
  json rows = json::array();
  if (cfg.format == Format::csv) out << "re,im,lower,upper,exact\n";
  for (const Complex z : pts) {
    if (!(d.clearance(z) > kGridMargin)) {
      ++skipped;
      continue;
    }
    SqueezeBounds b;
    try {
      b = squeeze_bounds(d, z, {cfg.samples, cfg.policy});
    } catch (const Error& e) {
      if (exit_code(e.kind()) != 1) throw;
      ++failed;
      err << "point " << shortest(z.real()) << ',' << shortest(z.imag()) << ": " << e.what() << '\n';
      continue;
    }
    if (cfg.format == Format::csv) {
      out << shortest(z.real()) << ',' << shortest(z.imag()) << ',' << shortest(b.lower) << ','
          << shortest(b.upper) << ',' << (b.exact ? 1 : 0) << '\n';
    } else {
      rows.push_back({{"re", z.real()}, {"im", z.imag()}, {"lower", b.lower}, {"upper", b.upper}, {"exact", b.exact}});
    }
  }
  if (cfg.format == Format::json) out << rows.dump() << '\n';
  err << "skipped " << skipped << " of " << pts.size() << " grid points outside the domain (margin "
      << shortest(kGridMargin) << ")\n";
  return failed > 0 ? 1 : 0;
}

// ---------------------------------------------------------------------------

struct Check {
  std::string name;
  double value;
  double threshold;
  bool pass;
};

Check below(std::string name, double value, double threshold) {
  return {std::move(name), value, threshold, value < threshold};
}

void annulus_battery(const TruncationPolicy& policy, std::vector<Check>& checks) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto annulus_point = [&](double q) {
    const double r = q + (1.0 - q) * (0.05 + 0.9 * unit(rng));
    return std::polar(r, 2.0 * std::numbers::pi * unit(rng));
  };

  double refl = 0.0;
  double quasi = 0.0;
  for (const double q : {0.1, 0.3, 0.5, 0.7}) {
    for (int k = 0; k < 25; ++k) {
      const Complex z = annulus_point(q);
      const Complex y = annulus_point(q);
      refl = std::max(refl, reflection_identity_residual(z, y, q, policy));
      quasi = std::max(quasi, quasi_periodicity_residual(z, y, q, policy));
    }
  }
  checks.push_back(below("reflection_identity", refl, 1e-10));
  checks.push_back(below("quasi_periodicity", quasi, 1e-10));

  double unimodular = 0.0;
  double radius = 0.0;
  double spread = 0.0;
  for (int k = 0; k < 10; ++k) {
    const double q = 0.1 + 0.6 * unit(rng);
    const Complex y = annulus_point(q);
    const CircularDomain d = annulus_domain(Annulus(q));
    const SlitMap m(d, y, 0, policy);
    unimodular = std::max(unimodular, oracle::unimodularity_residual(m, 360));
    const auto s = oracle::sample_modulus_on_circle(m, d.boundary(1), 360);
    radius = std::max(radius, std::abs(s.mean_modulus - slit_radius_annulus_closed_form(y)));
    spread = std::max(spread, s.spread());
  }
  checks.push_back(below("boundary_unimodularity", unimodular, 1e-9));
  checks.push_back(below("slit_radius", radius, 1e-8));
  checks.push_back(below("slit_circle_spread", spread, 1e-8));

  double pipeline = 0.0;
  for (const double q : {0.15, 0.25, 0.5}) {
    const CircularDomain d = annulus_domain(Annulus(q));
    for (int k = 0; k < 5; ++k) {
      const double r = q + (1.0 - q) * (0.1 + 0.2 * k);
      const SqueezeBounds b = squeeze_bounds(d, r, {64, policy});
      const double exact = squeeze_annulus_exact(r, q);
      pipeline = std::max({pipeline, std::abs(b.lower - exact), std::abs(b.upper - exact)});
    }
  }
  checks.push_back(below("annulus_pipeline", pipeline, 1e-6));

  const CircularDomain sym = make_circular_domain({{{0.5, 0.0}, 0.15}, {{-0.5, 0.0}, 0.15}});
  const double alpha = canonical_derivative(sym, 0.0, 0, policy);
  checks.push_back({"derivative_lower_bound", alpha, 1.0 - 1e-8, alpha >= 1.0 - 1e-8});
}

Complex deepest_point(const CircularDomain& d) {
  Complex best = 0.0;
  double depth = -1.0;
  for (int j = 0; j < 40; ++j) {
    for (int k = 0; k < 64; ++k) {
      const Complex z = std::polar(0.975 * j / 39.0, 2.0 * std::numbers::pi * k / 64.0);
      if (const double c = d.clearance(z); c > depth) {
        depth = c;
        best = z;
      }
    }
  }
  return best;
}

void domain_battery(const CircularDomain& d, Complex z0, const RunConfig& cfg, std::vector<Check>& checks) {
  try {
    checks.push_back(
        below("boundary_unimodularity", oracle::unimodularity_residual(SlitMap(d, z0, 0, cfg.policy), 360), 1e-9));
    // hole boundaries only see the truncation error of the word table
    double holes = 0.0;
    for (std::size_t i = 1; i <= d.hole_count(); ++i) {
      holes = std::max(holes, oracle::unimodularity_residual(SlitMap(d, z0, i, cfg.policy), 360));
    }
    checks.push_back(below("hole_unimodularity", holes, 1e-7));
    const SqueezeBounds b = squeeze_bounds(d, z0, {cfg.samples, cfg.policy});
    double deviation = 0.0;
    double est_error = 0.0;
    for (const auto& p : b.profiles) {
      for (const double v : p.deviations) deviation = std::max(deviation, v);
      est_error = std::max(est_error, p.est_error);
    }
    checks.push_back(below("slit_circle_spread", deviation, kUnreliableDeviation));
    checks.push_back({"convergence", est_error, cfg.policy.capped_tol, est_error <= cfg.policy.capped_tol});
    bool ordered = b.lower > 0.0 && b.lower <= b.upper && b.upper < 1.0;
    for (const auto& pb : b.per_boundary) ordered = ordered && pb.lower <= pb.upper;
    checks.push_back({"bounds_ordering", b.upper - b.lower, 0.0, ordered});
    if (d.contains(0.0)) {
      const double alpha = canonical_derivative(d, 0.0, 0, cfg.policy);
      checks.push_back({"derivative_lower_bound", alpha, 1.0 - 1e-8, alpha >= 1.0 - 1e-8});
    }
  } catch (const NoConvergenceError& e) {
    const double last = e.history().empty() ? 0.0 : e.history().back();
    checks.push_back({"convergence", last, cfg.policy.capped_tol, false});
  }
}

int cmd_verify(const Inputs& in, std::ostream& out) {
  const RunConfig cfg = make_config(in, Format::json);
  std::vector<Check> checks;
  if (in.domain.empty() && !in.q) {
    annulus_battery(cfg.policy, checks);
  } else {
    const CircularDomain d = pick_domain(in);
    const Complex z0 = in.z.empty() ? deepest_point(d) : parse_complex(in.z, "--z");
    if (!d.contains(z0)) throw Error(ErrorKind::BasePointOutsideDomain, "--z is not inside the domain");
    domain_battery(d, z0, cfg, checks);
  }
  bool all = true;
  if (cfg.format == Format::csv) {
    out << "check,value,threshold,pass\n";
    for (const auto& c : checks) {
      out << c.name << ',' << shortest(c.value) << ',' << shortest(c.threshold) << ',' << (c.pass ? 1 : 0) << '\n';
      all = all && c.pass;
    }
  } else {
    json report = json::array();
    for (const auto& c : checks) {
      report.push_back({{"check", c.name}, {"value", c.value}, {"threshold", c.threshold}, {"pass", c.pass}});
      all = all && c.pass;
    }
    out << report.dump(2) << '\n';
  }
  return all ? 0 : 1;
}

// ---------------------------------------------------------------------------

void add_policy_flags(CLI::App& sub, Inputs& in) {
  sub.add_option("--tol", in.tol, "relative update at which products stop (env SLITSQUEEZE_TOL)");
  sub.add_option("--max-terms", in.max_terms, "annulus / cyclic-group term cap");
  sub.add_option("--max-word-length", in.max_word_length, "Schottky word length cap");
  sub.add_option("--format", in.format_text, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

void add_domain_flags(CLI::App& sub, Inputs& in) {
  sub.add_option("--domain", in.domain, "domain file");
  sub.add_option("--q", in.q, "concentric annulus q < |z| < 1 instead of a file");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Squeezing function of circular domains"};
  app.name(args.empty() ? "slitsqueeze" : args[0]);
  app.require_subcommand(1);
  Inputs in;

  auto* annulus = app.add_subcommand("annulus-squeeze", "closed-form S on the annulus q < |z| < 1");
  annulus->add_option("--q", in.q, "inner radius")->required();
  annulus->add_option("--z", in.z, "point re,im");
  annulus->add_option("--grid", in.grid, "radial grid a:b:n (CSV rows |z|, S)");
  add_policy_flags(*annulus, in);

  auto* prime = app.add_subcommand("sk-prime", "prime function ω(z, y)");
  add_domain_flags(*prime, in);
  prime->add_option("--z", in.z, "first argument re,im");
  prime->add_option("--y", in.y, "second argument re,im");
  add_policy_flags(*prime, in);

  auto* slit = app.add_subcommand("slit-map", "evaluate the circular slit map");
  add_domain_flags(*slit, in);
  slit->add_option("--z", in.z, "base point re,im");
  slit->add_option("--boundary", in.boundary, "boundary sent to the unit circle");
  slit->add_option("--at", in.at, "evaluation point re,im");
  add_policy_flags(*slit, in);

  auto* profile = app.add_subcommand("profile", "slit radii of one canonical map");
  add_domain_flags(*profile, in);
  profile->add_option("--z", in.z, "base point re,im");
  profile->add_option("--boundary", in.boundary, "boundary sent to the unit circle");
  profile->add_option("--samples", in.samples, "samples per boundary circle");
  add_policy_flags(*profile, in);

  auto* bounds = app.add_subcommand("bounds", "two-sided squeezing bounds at one point");
  add_domain_flags(*bounds, in);
  bounds->add_option("--z", in.z, "base point re,im");
  bounds->add_option("--samples", in.samples, "samples per boundary circle");
  add_policy_flags(*bounds, in);

  auto* grid = app.add_subcommand("grid", "bounds over a grid, CSV");
  add_domain_flags(*grid, in);
  grid->add_option("--grid", in.grid, "rect:x0:x1:nx:y0:y1:ny or polar:r0:r1:nr:ntheta");
  grid->add_option("--samples", in.samples, "samples per boundary circle");
  add_policy_flags(*grid, in);

  auto* verify = app.add_subcommand("verify", "run the oracle checks");
  add_domain_flags(*verify, in);
  verify->add_option("--z", in.z, "base point for domain checks re,im");
  verify->add_option("--samples", in.samples, "samples per boundary circle");
  add_policy_flags(*verify, in);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (annulus->parsed()) return cmd_annulus_squeeze(in, out);
    if (prime->parsed()) return cmd_sk_prime(in, out);
    if (slit->parsed()) return cmd_slit_map(in, out);
    if (profile->parsed()) return cmd_profile(in, out, err);
    if (bounds->parsed()) return cmd_bounds(in, out, err);
    if (grid->parsed()) return cmd_grid(in, out, err);
    if (verify->parsed()) return cmd_verify(in, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return 2;
}

}  // namespace slitsqueeze
