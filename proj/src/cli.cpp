#include "qcb/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "qcb/chernoff.hpp"
#include "qcb/errors.hpp"
#include "qcb/gaussian.hpp"
#include "qcb/geometry.hpp"
#include "qcb/localdisc.hpp"
#include "qcb/multicopy.hpp"
#include "qcb/parallel.hpp"

namespace qcb::cli {

using json = nlohmann::ordered_json;

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

// A double that serializes with 12 significant digits.
json num(double x) {
  if (!std::isfinite(x)) return format_number(x);
  return std::strtod(format_number(x).c_str(), nullptr);
}

json exponent_json(const RateExponent& e) {
  if (e.is_infinite()) return json{{"infinite", true}};
  return num(e.value());
}

// -- state files -------------------------------------------------------------

struct StateSpec {
  enum class Kind { matrix, bloch, ket, gaussian, distribution };
  Kind kind = Kind::matrix;
  std::optional<DensityMatrix> rho;
  std::optional<QubitState> qubit;
  std::optional<CVector> ket;
  std::optional<GaussianState> gaussian;
  std::optional<DiscreteDistribution> dist;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double as_real(const json& j, const std::string& what) {
  if (!j.is_number()) throw ValidationError(what + " must be a number");
  return j.get<double>();
}

std::vector<double> real_array(const json& j, const std::string& what) {
  if (!j.is_array()) throw ValidationError(what + " must be an array");
  std::vector<double> out;
  for (const auto& v : j) out.push_back(as_real(v, what));
  return out;
}

CMatrix parse_matrix(const json& m) {
  if (!m.is_object() || !m.contains("re")) throw ValidationError("matrix needs a \"re\" field");
  const auto& re = m["re"];
  if (!re.is_array() || re.empty()) throw ValidationError("matrix.re must be a non-empty array of rows");
  const int n = static_cast<int>(re.size());
  if (m.contains("dim") && as_real(m["dim"], "matrix.dim") != n) {
    throw ValidationError("matrix.dim does not match the number of rows");
  }
  CMatrix out = CMatrix::Zero(n, n);
  auto fill = [&](const json& rows, bool imag) {
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
      throw ValidationError("matrix rows must form a square array");
    }
    for (int i = 0; i < n; ++i) {
      const auto row = real_array(rows[i], "matrix entry");
      if (static_cast<int>(row.size()) != n) throw ValidationError("matrix rows must form a square array");
      for (int k = 0; k < n; ++k) {
        if (imag) {
          out(i, k) += Complex(0.0, row[k]);
        } else {
          out(i, k) += row[k];
        }
      }
    }
  };
  fill(re, false);
  if (m.contains("im")) fill(m["im"], true);
  return out;
}

StateSpec parse_state(const json& j) {
  if (!j.is_object()) throw ValidationError("state file must hold a JSON object");
  static const char* kinds[] = {"matrix", "bloch", "ket", "gaussian", "distribution"};
  int found = 0;
  for (const char* k : kinds) found += j.contains(k) ? 1 : 0;
  if (found != 1 || j.size() != 1) {
    throw ValidationError("state file must contain exactly one of matrix, bloch, ket, gaussian, distribution");
  }
  if (j.contains("matrix")) {
    StateSpec s;
    s.kind = StateSpec::Kind::matrix;
    s.rho = density_from_matrix(parse_matrix(j["matrix"]));
    return s;
  }
  if (j.contains("bloch")) {
    const auto r = real_array(j["bloch"], "bloch");
    if (r.size() != 3) throw ValidationError("bloch must have three components");
    StateSpec s;
    s.kind = StateSpec::Kind::bloch;
    s.qubit = QubitState(r[0], r[1], r[2]);
    s.rho = s.qubit->density();
    return s;
  }
  if (j.contains("ket")) {
    const auto& k = j["ket"];
    if (!k.is_object() || !k.contains("re")) throw ValidationError("ket needs a \"re\" field");
    const auto re = real_array(k["re"], "ket.re");
    std::vector<double> im(re.size(), 0.0);
    if (k.contains("im")) im = real_array(k["im"], "ket.im");
    if (im.size() != re.size()) throw ValidationError("ket.re and ket.im differ in length");
    CVector psi(static_cast<Eigen::Index>(re.size()));
    for (std::size_t i = 0; i < re.size(); ++i) psi[static_cast<Eigen::Index>(i)] = Complex(re[i], im[i]);
    StateSpec s;
    s.kind = StateSpec::Kind::ket;
    s.rho = density_from_ket(psi);
    s.ket = psi;
    return s;
  }
  if (j.contains("gaussian")) {
    const auto& g = j["gaussian"];
    if (!g.is_object()) throw ValidationError("gaussian must be an object");
    auto field = [&](const char* name, double dflt) {
      return g.contains(name) ? as_real(g[name], std::string("gaussian.") + name) : dflt;
    };
    const Vec2 d(field("q", 0.0), field("p", 0.0));
    const double r = field("r", 0.0);
    const double phi = field("phi", 0.0);
    StateSpec s;
    s.kind = StateSpec::Kind::gaussian;
    const bool pure = !g.contains("beta") || g["beta"].is_null() ||
                      (g["beta"].is_string() && g["beta"].get<std::string>() == "inf");
    if (pure) {
      s.gaussian = GaussianState::pure(d, r, phi);
    } else {
      s.gaussian = GaussianState(as_real(g["beta"], "gaussian.beta"), d, r, phi);
    }
    return s;
  }
  StateSpec s;
  s.kind = StateSpec::Kind::distribution;
  s.dist = DiscreteDistribution(real_array(j["distribution"], "distribution"));
  return s;
}

json parse_json_text(const std::string& text, const std::string& path) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError("malformed JSON in " + path + ": " + e.what());
  }
}

// -- report ------------------------------------------------------------------

struct Context {
  std::vector<std::string> args;
  std::string input_bytes;  // concatenated input files, digested into the report
  std::optional<std::uint64_t> seed;

  json load_json(const std::string& path) {
    const std::string text = read_file(path);
    input_bytes += text;
    input_bytes.push_back('\0');
    return parse_json_text(text, path);
  }
  StateSpec load_state(const std::string& path) { return parse_state(load_json(path)); }

  json report(const std::string& command, json results) const {
    json r;
    r["command"] = command;
    r["argv"] = args;
    r["input_digest"] = "fnv1a64:" + fnv1a_hex(input_bytes);
    r["version"] = kVersion;
    if (seed) r["seed"] = *seed;
    r["results"] = std::move(results);
    return r;
  }
};

const DensityMatrix& density(const StateSpec& s) {
  if (!s.rho) throw ValidationError("this command needs a quantum state (matrix, bloch or ket)");
  return *s.rho;
}

QubitState qubit(const StateSpec& s) {
  if (s.qubit) return *s.qubit;
  const auto& rho = density(s);
  if (rho.dim() != 2) throw ValidationError("this command needs qubit states");
  return to_bloch(rho);
}

const GaussianState& gaussian_state(const StateSpec& s) {
  if (!s.gaussian) throw ValidationError("this command needs Gaussian state files");
  return *s.gaussian;
}

json chernoff_json(const ChernoffResult& r) {
  return json{{"q", num(r.q)}, {"s_star", num(r.s_star)}, {"exponent", exponent_json(r.exponent)}};
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows, std::ostream& fallback) {
  std::ostringstream body;
  for (std::size_t i = 0; i < header.size(); ++i) body << (i ? "," : "") << header[i];
  body << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) body << (i ? "," : "") << format_number(row[i]);
    body << '\n';
  }
  if (path.empty()) {
    fallback << body.str();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write file: " + path);
  out << body.str();
}

// -- commands ----------------------------------------------------------------

json cmd_chernoff(Context& ctx, const std::string& a, const std::string& b, std::optional<double> pi0) {
  const auto sa = ctx.load_state(a);
  const auto sb = ctx.load_state(b);
  if (sa.dist || sb.dist) {
    if (!sa.dist || !sb.dist) throw ValidationError("cannot mix a distribution with a quantum state");
    if (pi0) throw ValidationError("--pi0 applies to quantum states only");
    json out = chernoff_json(classical_chernoff(*sa.dist, *sb.dist));
    out["kind"] = "classical";
    return out;
  }
  if (sa.gaussian || sb.gaussian) {
    json out = chernoff_json(gaussian_chernoff(gaussian_state(sa), gaussian_state(sb)));
    out["kind"] = "gaussian";
    return out;
  }
  json out = chernoff_json(quantum_chernoff(density(sa), density(sb)));
  out["kind"] = "quantum";
  if (pi0) out["weighted_bound"] = num(quantum_chernoff_weighted(density(sa), density(sb), *pi0));
  return out;
}

json cmd_bounds(Context& ctx, const std::string& a, const std::string& b) {
  const auto sa = ctx.load_state(a);
  const auto sb = ctx.load_state(b);
  const auto r = bounds_report(density(sa), density(sb));
  return json{{"fid_lower_pe", num(r.fid_lower_pe)},
              {"helstrom_pe", num(r.helstrom_pe)},
              {"p_qc", num(r.p_qc)},
              {"half_overlap_root", num(r.half_overlap_root)},
              {"fid_upper_pe", num(r.fid_upper_pe)},
              {"fidelity", num(r.fidelity)}};
}

json cmd_dcc(Context& ctx, const std::string& a, const std::string& b, int starts) {
  const auto q0 = qubit(ctx.load_state(a));
  const auto q1 = qubit(ctx.load_state(b));
  const double f = fidelity(q0.density(), q1.density());
  json out;
  if (q0.is_pure() && q1.is_pure()) {
    out["d_cc"] = exponent_json(d_cc_pure(q0, q1));
    out["regime"] = "unanimity";
  } else {
    const auto r = d_cc_qubit(q0, q1, starts);
    out["d_cc"] = exponent_json(r.d_cc);
    out["s_star"] = num(r.s_star);
    out["regime"] = to_string(r.regime);
    const auto& e0 = r.povm.e0().matrix();
    json re = json::array(), im = json::array();
    for (int i = 0; i < 2; ++i) {
      re.push_back({num(e0(i, 0).real()), num(e0(i, 1).real())});
      im.push_back({num(e0(i, 0).imag()), num(e0(i, 1).imag())});
    }
    out["povm_e0"] = json{{"re", re}, {"im", im}};
  }
  out["fid_lower"] = num(f > 0.0 ? -0.5 * std::log(f) : INFINITY);
  out["d_qc"] = exponent_json(quantum_chernoff(q0.density(), q1.density()).exponent);
  return out;
}

double ncopy_error(const StateSpec& sa, const StateSpec& sb, int n, double pi0) {
  const auto q0 = qubit(sa);
  const auto q1 = qubit(sb);
  if (q0.is_pure() && q1.is_pure()) return pure_ncopy_error(q0, q1, n, pi0);
  return helstrom_ncopy_qubit_serial(q0, q1, n, pi0);
}

json cmd_multicopy(Context& ctx, const std::string& a, const std::string& b, std::optional<int> n,
                   std::optional<int> n_min, std::optional<int> n_max, bool extrapolate, double pi0,
                   const std::string& out_path, std::ostream& out) {
  const auto sa = ctx.load_state(a);
  const auto sb = ctx.load_state(b);
  if (n) {
    if (n_min || n_max || extrapolate) throw ValidationError("--n excludes --n-min/--n-max/--extrapolate");
    const double pe = ncopy_error(sa, sb, *n, pi0);
    return json{{"n", *n}, {"pe", num(pe)}};
  }
  if (!n_min || !n_max) throw ValidationError("give either --n or both --n-min and --n-max");
  if (*n_min < 1 || *n_max < *n_min) throw ValidationError("need 1 <= n-min <= n-max");
  const std::size_t count = static_cast<std::size_t>(*n_max - *n_min + 1);
  const auto pes = parallel_map<double>(count, [&](std::size_t i) {
    return ncopy_error(sa, sb, *n_min + static_cast<int>(i), pi0);
  });
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<int, double>> points;
  for (std::size_t i = 0; i < count; ++i) {
    const int k = *n_min + static_cast<int>(i);
    rows.push_back({double(k), pes[i], pes[i] > 0.0 ? -std::log(pes[i]) / k : INFINITY});
    points.emplace_back(k, pes[i]);
  }
  json res{{"n_min", *n_min}, {"n_max", *n_max}};
  if (extrapolate) {
    const auto fit = rate_extrapolate(points);
    res["fit"] = json{{"slope", num(fit.slope)}, {"intercept", num(fit.intercept)}, {"residual", num(fit.residual)}};
  }
  if (out_path.empty() && !extrapolate) {
    write_csv("", {"n", "pe", "rate"}, rows, out);
    return nullptr;
  }
  write_csv(out_path, {"n", "pe", "rate"}, rows, out);
  if (!out_path.empty()) res["csv"] = out_path;
  return res;
}

json cmd_metric(Context& ctx, const std::string& which, const std::string& state, const std::string& dir) {
  const auto s = ctx.load_state(state);
  const json dj = ctx.load_json(dir);
  if (!dj.is_object() || !dj.contains("matrix") || dj.size() != 1) {
    throw ValidationError("direction file must contain a single \"matrix\" entry");
  }
  const TangentDirection d(parse_matrix(dj["matrix"]));
  double v = 0.0;
  if (which == "qc") {
    v = ds2_qc(density(s), d);
  } else if (which == "bures") {
    v = ds2_bures(density(s), d);
  } else {
    v = ds2_cc(density(s), d);
  }
  return json{{"which", which}, {"ds2", num(v)}};
}

json cmd_sample(Context& ctx, int d, long long count, std::uint64_t seed, const std::string& out_path,
                std::ostream& out) {
  if (count < 1) throw ValidationError("--count must be positive");
  ctx.seed = seed;
  // one stream per sample, so rows do not depend on the schedule
  const auto mats = parallel_map<std::vector<double>>(static_cast<std::size_t>(count), [&](std::size_t i) {
    std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                     static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
    std::mt19937_64 rng(sq);
    const auto rho = sample_density_qc(d, rng);
    std::vector<double> row{double(i)};
    const auto& ev = rho.eig().eigenvalues;
    for (int k = d - 1; k >= 0; --k) row.push_back(ev[k]);
    row.push_back(rho.purity());
    return row;
  });
  std::vector<std::string> header{"index"};
  for (int k = 1; k <= d; ++k) header.push_back("lambda_" + std::to_string(k));
  header.push_back("purity");
  write_csv(out_path, header, mats, out);
  if (out_path.empty()) return nullptr;
  return json{{"prior", "qc"}, {"d", d}, {"count", count}, {"csv", out_path}};
}

GaussianDifferential parse_differential(const json& j) {
  if (!j.is_object()) throw ValidationError("Gaussian direction must be an object");
  GaussianDifferential d;
  for (const auto& [k, v] : j.items()) {
    const double x = as_real(v, k);
    if (k == "dbeta") d.dbeta = x;
    else if (k == "dq") d.dq = x;
    else if (k == "dp") d.dp = x;
    else if (k == "dr") d.dr = x;
    else if (k == "dphi") d.dphi = x;
    else throw ValidationError("unknown Gaussian direction field: " + k);
  }
  return d;
}

json cmd_figure1(double theta, int steps, const std::string& out_path, std::ostream& out) {
  if (steps < 1) throw ValidationError("--steps must be positive");
  if (!(theta > 0.0 && theta <= std::numbers::pi + 1e-12)) throw ValidationError("--theta must lie in (0, pi]");
  const auto pts = parallel_map<EqualPurityCurves>(static_cast<std::size_t>(steps + 1), [&](std::size_t i) {
    return equal_purity_point(static_cast<double>(i) / steps, theta);
  });
  std::vector<std::vector<double>> rows;
  for (const auto& p : pts) rows.push_back({p.r, p.d_qc, p.d_cc, p.fid_lower, p.fid_upper});
  write_csv(out_path, {"r", "d_qc", "d_cc", "fid_lower", "fid_upper"}, rows, out);
  if (out_path.empty()) return nullptr;
  return json{{"theta", num(theta)}, {"steps", steps}, {"csv", out_path}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  configure_threads_from_env();
  CLI::App app{"Distinguishability measures for quantum states", "qcb"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string a, b, out_path, which = "qc", state, dir;
  std::optional<double> pi0;
  double pi0_plain = 0.5;
  int starts = kDefaultStarts;
  std::optional<int> n, n_min, n_max;
  bool extrapolate = false;
  int cd = 0, dim = 2, steps = 50;
  long long count = 1;
  std::uint64_t seed = 0;
  std::string prior = "qc";
  double theta = 0.0, beta = 1.0, r = 0.0;

  auto* chernoff = app.add_subcommand("chernoff", "Chernoff bound (classical, quantum or Gaussian)");
  chernoff->add_option("--a", a, "first state file")->required();
  chernoff->add_option("--b", b, "second state file")->required();
  chernoff->add_option("--pi0", pi0, "prior of the first hypothesis");

  auto* helstrom = app.add_subcommand("helstrom", "Minimum single-copy error probability");
  helstrom->add_option("--a", a)->required();
  helstrom->add_option("--b", b)->required();
  helstrom->add_option("--pi0", pi0_plain);

  auto* bounds = app.add_subcommand("bounds", "Ordered chain of error bounds");
  bounds->add_option("--a", a)->required();
  bounds->add_option("--b", b)->required();

  auto* dcc = app.add_subcommand("dcc", "Exponent for identical local measurements (qubits)");
  dcc->add_option("--a", a)->required();
  dcc->add_option("--b", b)->required();
  dcc->add_option("--starts", starts)->check(CLI::PositiveNumber);

  auto* multicopy = app.add_subcommand("multicopy", "Exact n-copy error probability (qubits)");
  multicopy->add_option("--a", a)->required();
  multicopy->add_option("--b", b)->required();
  multicopy->add_option("--n", n);
  multicopy->add_option("--n-min", n_min);
  multicopy->add_option("--n-max", n_max);
  multicopy->add_flag("--extrapolate", extrapolate);
  multicopy->add_option("--pi0", pi0_plain);
  multicopy->add_option("--out", out_path, "CSV output for sweeps");

  auto* constants = app.add_subcommand("constants", "Normalization constants");
  constants->add_option("--cd", cd, "C_d for d in [2, 10]")->required();

  auto* metric = app.add_subcommand("metric", "Metric ds^2 along a direction");
  metric->add_option("--which", which)->check(CLI::IsMember({"qc", "bures", "cc"}));
  metric->add_option("--state", state)->required();
  metric->add_option("--direction", dir, "file with a traceless Hermitian matrix")->required();

  auto* geodesic = app.add_subcommand("geodesic", "Geodesic distance of the qubit Chernoff metric");
  geodesic->add_option("--a", a)->required();
  geodesic->add_option("--b", b)->required();

  auto* sample = app.add_subcommand("sample", "Random density matrices from a prior");
  sample->add_option("--prior", prior)->check(CLI::IsMember({"qc"}));
  sample->add_option("--d", dim)->required();
  sample->add_option("--count", count)->required();
  sample->add_option("--seed", seed)->required();
  sample->add_option("--out", out_path);

  auto* gaussian = app.add_subcommand("gaussian", "Single-mode Gaussian states");
  gaussian->require_subcommand(1);
  auto* g_chernoff = gaussian->add_subcommand("chernoff");
  g_chernoff->add_option("--a", a)->required();
  g_chernoff->add_option("--b", b)->required();
  auto* g_overlap = gaussian->add_subcommand("overlap");
  g_overlap->add_option("--a", a)->required();
  g_overlap->add_option("--b", b)->required();
  auto* g_metric = gaussian->add_subcommand("metric");
  g_metric->add_option("--which", which)->check(CLI::IsMember({"qc", "cc"}));
  g_metric->add_option("--state", state)->required();
  g_metric->add_option("--direction", dir, "file with dbeta, dq, dp, dr, dphi")->required();
  auto* g_prior = gaussian->add_subcommand("prior");
  g_prior->add_option("--beta", beta)->required();
  g_prior->add_option("--r", r)->required();

  auto* figure1 = app.add_subcommand("figure1", "Equal-purity sweep of D_QC, D_CC and the fidelity bounds");
  figure1->add_option("--theta", theta)->required();
  figure1->add_option("--steps", steps);
  figure1->add_option("--out", out_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  Context ctx{args, {}, std::nullopt};
  try {
    json res;
    std::string name;
    if (chernoff->parsed()) {
      name = "chernoff";
      res = cmd_chernoff(ctx, a, b, pi0);
    } else if (helstrom->parsed()) {
      name = "helstrom";
      const auto sa = ctx.load_state(a);
      const auto sb = ctx.load_state(b);
      res = json{{"pe", num(helstrom_error(density(sa), density(sb), pi0_plain))}};
    } else if (bounds->parsed()) {
      name = "bounds";
      res = cmd_bounds(ctx, a, b);
    } else if (dcc->parsed()) {
      name = "dcc";
      res = cmd_dcc(ctx, a, b, starts);
    } else if (multicopy->parsed()) {
      name = "multicopy";
      res = cmd_multicopy(ctx, a, b, n, n_min, n_max, extrapolate, pi0_plain, out_path, out);
    } else if (constants->parsed()) {
      name = "constants";
      res = json{{"d", cd}, {"c_d", num(cd_constant(cd))}};
    } else if (metric->parsed()) {
      name = "metric";
      res = cmd_metric(ctx, which, state, dir);
    } else if (geodesic->parsed()) {
      name = "geodesic";
      const auto q0 = qubit(ctx.load_state(a));
      const auto q1 = qubit(ctx.load_state(b));
      res = json{{"distance", num(geodesic_qc_qubit(q0, q1))}};
    } else if (sample->parsed()) {
      name = "sample";
      res = cmd_sample(ctx, dim, count, seed, out_path, out);
    } else if (figure1->parsed()) {
      name = "figure1";
      res = cmd_figure1(theta, steps, out_path, out);
    } else if (g_chernoff->parsed()) {
      name = "gaussian chernoff";
      const auto sa = ctx.load_state(a);
      const auto sb = ctx.load_state(b);
      res = chernoff_json(gaussian_chernoff(gaussian_state(sa), gaussian_state(sb)));
    } else if (g_overlap->parsed()) {
      name = "gaussian overlap";
      const auto sa = ctx.load_state(a);
      const auto sb = ctx.load_state(b);
      res = json{{"overlap", num(overlap(gaussian_state(sa), gaussian_state(sb)))}};
    } else if (g_metric->parsed()) {
      name = "gaussian metric";
      const auto s = ctx.load_state(state);
      const auto d = parse_differential(ctx.load_json(dir));
      const auto kind = which == "cc" ? GaussianMetricKind::cc : GaussianMetricKind::qc;
      res = json{{"which", which}, {"ds2", num(ds2_gaussian(kind, gaussian_state(s), d))}};
    } else if (g_prior->parsed()) {
      name = "gaussian prior";
      res = json{{"jeffreys_qc", num(jeffreys_qc_gaussian(beta, r))}};
    }
    if (!res.is_null()) out << ctx.report(name, std::move(res)).dump(2) << '\n';
    return 0;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace qcb::cli
