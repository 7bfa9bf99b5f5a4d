// Copyright 2026 The spdgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spdgeom/cli.hpp"

#include "spdgeom/decompose.hpp"
#include "spdgeom/errors.hpp"
#include "spdgeom/io.hpp"
#include "spdgeom/manifold.hpp"
#include "spdgeom/matfun.hpp"
#include "spdgeom/subspace.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace spdgeom
{

namespace
{

using nlohmann::json;

struct Settings
{
  double tol = ProjectionOptions{}.tol;
  int max_iter = ProjectionOptions{}.max_iter;
  bool unchecked = false;
  std::string format = "json";
  double t = 0.5;
  int n = 0;
  std::vector<std::string> args;
};

// Everything one invocation accumulates; nothing is shared between runs.
struct Context
{
  std::string command;
  std::vector<std::string> args;
  std::uint64_t digest = fnv1a("");
  json outputs = json::object();
  std::vector<std::string> warnings;
  std::optional<int> iterations;
  std::optional<double> residual;
  // Output key printed in CSV mode.
  std::string primary;

  void absorb(const std::string & bytes)
  {
    digest = fnv1a(bytes, digest);
    digest = fnv1a(std::string(1, '\0'), digest);
  }
};

json rows(const Matrix & m)
{
  json out = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      row.push_back(m(i, j));
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::string digest_hex(std::uint64_t h)
{
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Matrix read_general(Context & ctx, const std::string & arg)
{
  const Matrix m = load_matrix(arg);
  ctx.absorb(write_matrix_json(m));
  return m;
}

SymMatrix read_sym(Context & ctx, const std::string & arg, const std::string & name)
{
  return require_symmetric(read_general(ctx, arg), name, ctx.warnings);
}

SpdMatrix read_spd(Context & ctx, const std::string & arg, const std::string & name)
{
  return SpdMatrix(read_sym(ctx, arg, name));
}

Subspace read_subspace(Context & ctx, const std::string & spec, Index n)
{
  ctx.absorb(spec);
  if (spec.rfind("file:", 0) == 0) {
    ctx.absorb(read_file(spec.substr(5)));
  }
  return subspace_from_spec(spec, n);
}

ProjectionOptions projection_options(const Settings & s)
{
  ProjectionOptions opts;
  opts.tol = s.tol;
  opts.max_iter = s.max_iter;
  opts.unchecked = s.unchecked;
  return opts;
}

json lts_json(const Subspace & e, const LtsReport & r)
{
  json out{
    {"is_lts", r.is_lts},
    {"triple_ok", r.triple_ok},
    {"double_bracket_ok", r.double_bracket_ok},
    {"max_triple_residual", r.max_triple_residual},
    {"max_double_residual", r.max_double_residual},
    {"dim", e.dim()},
    {"ambient_dim", e.ambient_dim()}};
  if (r.witness) {
    out["witness"] = json{
      {"x", rows(r.witness->x.matrix())},
      {"y", rows(r.witness->y.matrix())},
      {"z", rows(r.witness->z.matrix())},
      {"residual_direction", rows(r.witness->residual_direction.matrix())},
      {"residual", r.witness->residual}};
  }
  return out;
}

// Runs lts_check for file subspaces and enforces strict mode with a witness.
void check_file_subspace(Context & ctx, const Settings & s, const std::string & spec, const Subspace & e)
{
  if (spec.rfind("file:", 0) != 0) {
    return;
  }
  const LtsReport r = lts_check(e);
  ctx.outputs["lts"] = lts_json(e, r);
  if (!r.is_lts && !s.unchecked) {
    std::ostringstream os;
    os << "subspace '" << spec << "' is not a Lie triple system (residual "
       << std::max(r.max_triple_residual, r.max_double_residual)
       << "); pass --unchecked to compute a stationary point";
    throw PreconditionError(os.str());
  }
}

void cmd_dist(Context & ctx, const Settings & s)
{
  const SpdMatrix a = read_spd(ctx, s.args[0], "a");
  const SpdMatrix b = read_spd(ctx, s.args[1], "b");
  ctx.outputs["distance"] = distance(a, b);
  ctx.primary = "distance";
}

void cmd_geodesic(Context & ctx, const Settings & s)
{
  const SpdMatrix a = read_spd(ctx, s.args[0], "a");
  const SpdMatrix b = read_spd(ctx, s.args[1], "b");
  ctx.absorb(json(s.t).dump());
  ctx.outputs["t"] = s.t;
  ctx.outputs["point"] = rows(geodesic({a, b}, s.t).matrix());
  ctx.primary = "point";
}

void cmd_logm(Context & ctx, const Settings & s)
{
  ctx.outputs["log"] = rows(spd_log(read_spd(ctx, s.args[0], "x")).matrix());
  ctx.primary = "log";
}

void cmd_expm(Context & ctx, const Settings & s)
{
  ctx.outputs["exp"] = rows(spd_exp(read_sym(ctx, s.args[0], "x")).matrix());
  ctx.primary = "exp";
}

void cmd_project(Context & ctx, const Settings & s)
{
  const SpdMatrix x = read_spd(ctx, s.args[0], "x");
  const Subspace e = read_subspace(ctx, s.args[1], x.dim());
  check_file_subspace(ctx, s, s.args[1], e);
  const ProjectionResult r = geodesic_project(x, e, projection_options(s));
  ctx.outputs["pi"] = rows(r.pi.matrix());
  ctx.outputs["distance"] = distance(x, r.pi);
  ctx.outputs["residual"] = r.residual;
  ctx.outputs["iterations"] = r.iterations;
  ctx.outputs["unique"] = r.unique;
  ctx.iterations = r.iterations;
  ctx.residual = r.residual;
  ctx.primary = "pi";
  if (!r.unique) {
    ctx.warnings.emplace_back("subspace is not a Lie triple system: result is a stationary point");
  }
}

void cmd_mostow(Context & ctx, const Settings & s)
{
  const SpdMatrix x = read_spd(ctx, s.args[0], "x");
  const Subspace e = read_subspace(ctx, s.args[1], x.dim());
  check_file_subspace(ctx, s, s.args[1], e);
  const MostowFactors m = mostow_spd(x, e, projection_options(s));
  const Matrix rebuilt = m.e.matrix() * m.f.matrix() * m.e.matrix();
  ctx.outputs["e"] = rows(m.e.matrix());
  ctx.outputs["f"] = rows(m.f.matrix());
  ctx.outputs["pi"] = rows(m.pi.matrix());
  ctx.outputs["reconstruction_residual"] = (rebuilt - x.matrix()).norm();
  ctx.outputs["complement_residual"] = m.residual;
  ctx.outputs["unique"] = m.unique;
  ctx.iterations = m.iterations;
  ctx.residual = m.residual;
  ctx.primary = "f";
}

void cmd_gl(Context & ctx, const Settings & s)
{
  const Matrix g = read_general(ctx, s.args[0]);
  const Subspace e = read_subspace(ctx, s.args[1], g.rows());
  check_file_subspace(ctx, s, s.args[1], e);
  const GlFactors m = mostow_gl(g, e, projection_options(s));
  const Index n = g.rows();
  ctx.outputs["k"] = rows(m.k);
  ctx.outputs["f"] = rows(m.f.matrix());
  ctx.outputs["e"] = rows(m.e.matrix());
  ctx.outputs["reconstruction_residual"] = (m.k * m.f.matrix() * m.e.matrix() - g).norm();
  ctx.outputs["orthogonality_residual"] =
    (m.k.transpose() * m.k - Matrix::Identity(n, n)).norm();
  ctx.outputs["unique"] = m.unique;
  ctx.iterations = m.iterations;
  ctx.residual = m.residual;
  ctx.primary = "k";
}

void cmd_lts(Context & ctx, const Settings & s)
{
  std::string spec = s.args[0];
  const bool builtin = spec == "diag" || spec.rfind("block:", 0) == 0 ||
    spec.rfind("antiblock:", 0) == 0 || spec.rfind("file:", 0) == 0;
  if (!builtin) {
    spec = "file:" + spec;
  }
  const Subspace e = read_subspace(ctx, spec, s.n);
  const LtsReport r = lts_check(e);
  ctx.outputs = lts_json(e, r);
  ctx.residual = std::max(r.max_triple_residual, r.max_double_residual);
  ctx.primary = "is_lts";
}

void cmd_curvature(Context & ctx, const Settings & s)
{
  const SymMatrix x = read_sym(ctx, s.args[0], "x");
  const SymMatrix y = read_sym(ctx, s.args[1], "y");
  ctx.outputs["sectional_curvature"] = sectional_curvature_id(x, y);
  ctx.primary = "sectional_curvature";
}

struct Outcome
{
  json report;
  int exit_code;
  std::string log;
};

Outcome run_single(const std::vector<std::string> & args, bool allow_batch);

// Turns one manifest entry into an argument vector. String arguments that
// name files next to the manifest are resolved against its directory.
std::vector<std::string> entry_args(const json & entry, const std::filesystem::path & dir)
{
  auto resolve = [&dir](const std::string & a) {
      if (a.empty() || a.front() == '[' || a.front() == '{' || a.front() == '-') {
        return a;
      }
      const bool file_spec = a.rfind("file:", 0) == 0;
      const std::filesystem::path p(file_spec ? a.substr(5) : a);
      if (p.is_relative() && std::filesystem::exists(dir / p)) {
        return (file_spec ? std::string("file:") : std::string()) + (dir / p).string();
      }
      return a;
    };
  std::vector<std::string> out;
  if (entry.is_array()) {
    for (const json & a : entry) {
      if (!a.is_string()) {
        throw ParseError("batch entry arrays must contain only strings");
      }
      out.push_back(resolve(a.get<std::string>()));
    }
    return out;
  }
  if (!entry.is_object() || !entry.contains("command") || !entry["command"].is_string()) {
    throw ParseError("batch entry must be an object with a \"command\" string or an argument array");
  }
  out.push_back(entry["command"].get<std::string>());
  if (entry.contains("args")) {
    if (!entry["args"].is_array()) {
      throw ParseError("batch entry \"args\" must be an array");
    }
    for (const json & a : entry["args"]) {
      out.push_back(a.is_string() ? resolve(a.get<std::string>()) : a.dump());
    }
  }
  for (const auto & [key, flag] : {std::pair{"t", "--t"}, std::pair{"tol", "--tol"},
      std::pair{"max_iter", "--max-iter"}, std::pair{"n", "--n"}})
  {
    if (entry.contains(key)) {
      out.push_back(flag);
      out.push_back(entry[key].is_string() ? entry[key].get<std::string>() : entry[key].dump());
    }
  }
  if (entry.value("unchecked", false)) {
    out.emplace_back("--unchecked");
  }
  return out;
}

void cmd_batch(Context & ctx, const Settings & s, std::string & log)
{
  const std::string & arg = s.args[0];
  const bool inline_manifest = !arg.empty() && arg.front() == '[';
  const std::string text = inline_manifest ? arg : read_file(arg);
  ctx.absorb(text);
  json manifest;
  try {
    manifest = json::parse(text);
  } catch (const json::parse_error & e) {
    throw ParseError(std::string("invalid batch manifest: ") + e.what());
  }
  if (!manifest.is_array()) {
    throw ParseError("batch manifest must be a JSON array");
  }
  const std::filesystem::path dir = inline_manifest ?
    std::filesystem::current_path() : std::filesystem::path(arg).parent_path();

  const std::size_t count = manifest.size();
  std::vector<Outcome> results(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          results[i] = run_single(entry_args(manifest[i], dir), false);
        } catch (const ParseError & e) {
          results[i] = {json{{"command", nullptr}, {"error", {{"kind", "parse"}, {"message", e.what()}}},
              {"exit_code", kExitParse}}, kExitParse, std::string("spd: error: ") + e.what() + "\n"};
        }
      }
    };
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(hw, count);
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) {
    pool.emplace_back(worker);
  }
  if (count > 0) {
    worker();
  }
  for (std::thread & t : pool) {
    t.join();
  }

  json list = json::array();
  int failed = 0;
  int worst = kExitOk;
  for (std::size_t i = 0; i < count; ++i) {
    list.push_back(std::move(results[i].report));
    if (results[i].exit_code != kExitOk) {
      ++failed;
      worst = std::max(worst, results[i].exit_code);
    }
    std::istringstream lines(results[i].log);
    for (std::string line; std::getline(lines, line);) {
      log += "[entry " + std::to_string(i) + "] " + line + "\n";
    }
  }
  ctx.outputs["results"] = std::move(list);
  ctx.outputs["count"] = count;
  ctx.outputs["failed"] = failed;
  ctx.outputs["exit_code"] = worst;
}

const char * error_kind(const std::exception & e)
{
  if (dynamic_cast<const ParseError *>(&e)) {return "parse";}
  if (dynamic_cast<const PreconditionError *>(&e)) {return "precondition";}
  if (dynamic_cast<const IllConditionedError *>(&e)) {return "ill_conditioned";}
  if (dynamic_cast<const DomainError *>(&e)) {return "domain";}
  if (dynamic_cast<const NumericalFailure *>(&e)) {return "numerical_failure";}
  return "internal";
}

int exit_code_of(const std::exception & e)
{
  if (dynamic_cast<const ParseError *>(&e)) {return kExitParse;}
  if (dynamic_cast<const DomainError *>(&e)) {return kExitDomain;}
  if (dynamic_cast<const NumericalFailure *>(&e)) {return kExitNumerical;}
  return kExitInternal;
}

double default_tol()
{
  const char * env = std::getenv("SPD_TOL");
  if (env == nullptr || *env == '\0') {
    return ProjectionOptions{}.tol;
  }
  errno = 0;
  char * end = nullptr;
  const double v = std::strtod(env, &end);
  if (*end != '\0' || errno == ERANGE || !(v > 0.0)) {
    throw ParseError(std::string("SPD_TOL must be a positive number, got '") + env + "'");
  }
  return v;
}

json report_of(const Context & ctx, int exit_code)
{
  json diag{
    {"iterations", ctx.iterations ? json(*ctx.iterations) : json(nullptr)},
    {"residual", ctx.residual ? json(*ctx.residual) : json(nullptr)},
    {"warnings", ctx.warnings}};
  return json{
    {"command", ctx.command},
    {"args", ctx.args},
    {"inputs_digest", digest_hex(ctx.digest)},
    {"outputs", ctx.outputs},
    {"diagnostics", std::move(diag)},
    {"exit_code", exit_code}};
}

std::string csv_payload(const json & value)
{
  if (value.is_array()) {
    Matrix m(static_cast<Index>(value.size()), static_cast<Index>(value.at(0).size()));
    for (Index i = 0; i < m.rows(); ++i) {
      for (Index j = 0; j < m.cols(); ++j) {
        m(i, j) = value[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get<double>();
      }
    }
    return write_matrix_csv(m);
  }
  if (value.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g\n", value.get<double>());
    return buf;
  }
  return value.dump() + "\n";
}

std::string slot_help(const std::string & name)
{
  if (name == "subspace") {
    return "diag, block:P,Q,..., antiblock:P,Q or file:PATH";
  }
  if (name == "manifest") {
    return "JSON manifest file or inline JSON array";
  }
  return "Matrix: .json or .csv file, or inline JSON";
}

Outcome run_single(const std::vector<std::string> & args, bool allow_batch)
{
  Context ctx;
  ctx.args = args;
  ctx.command = args.empty() ? "" : args.front();
  std::string log;
  Settings s;

  CLI::App app{"Affine-invariant geometry of symmetric positive-definite matrices", "spd"};
  app.require_subcommand(1, 1);
  app.add_option("--tol", s.tol, "Projection tolerance (default 1e-11, or $SPD_TOL)")
  ->check(CLI::PositiveNumber);
  app.add_option("--max-iter", s.max_iter, "Projection iteration cap")
  ->check(CLI::NonNegativeNumber);
  app.add_flag("--unchecked", s.unchecked, "Allow subspaces that are not Lie triple systems");
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  struct Command
  {
    const char * name;
    const char * help;
    std::vector<const char *> positionals;
  };
  const std::vector<Command> commands{
    {"dist", "Affine-invariant distance", {"a", "b"}},
    {"geodesic", "Point at parameter t on the geodesic from a to b", {"a", "b"}},
    {"logm", "Matrix logarithm of an SPD matrix", {"x"}},
    {"expm", "Matrix exponential of a symmetric matrix", {"x"}},
    {"project", "Geodesic projection onto exp(E)", {"x", "subspace"}},
    {"mostow", "x = e f e with e in exp(E), f in exp(E^perp)", {"x", "subspace"}},
    {"gl", "g = k f e with k orthogonal", {"g", "subspace"}},
    {"lts", "Lie triple system check of a subspace", {"subspace"}},
    {"curvature", "Sectional curvature at the identity", {"x", "y"}},
    {"batch", "Run a JSON manifest of commands", {"manifest"}},
  };
  std::vector<std::string> slots(2);
  std::vector<CLI::App *> subs;
  for (const Command & c : commands) {
    CLI::App * sub = app.add_subcommand(c.name, c.help);
    sub->fallthrough();
    for (std::size_t i = 0; i < c.positionals.size(); ++i) {
      sub->add_option(c.positionals[i], slots[i], slot_help(c.positionals[i]))
      ->required();
    }
    if (std::string(c.name) == "geodesic") {
      sub->add_option("--t", s.t, "Geodesic parameter")->required();
    }
    if (std::string(c.name) == "lts") {
      sub->add_option("--n", s.n, "Ambient dimension for the 'diag' spec")
      ->check(CLI::PositiveNumber);
    }
    subs.push_back(sub);
  }

  int code = kExitOk;
  try {
    s.tol = default_tol();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
      return {json(app.help()), kExitOk, ""};
    } catch (const CLI::ParseError & e) {
      throw ParseError(e.what());
    }
    std::size_t which = 0;
    while (!subs[which]->parsed()) {
      ++which;
    }
    ctx.command = commands[which].name;
    ctx.absorb(ctx.command);
    s.args.assign(slots.begin(), slots.begin() + commands[which].positionals.size());

    const std::string cmd = ctx.command;
    if (cmd == "dist") {cmd_dist(ctx, s);}
    else if (cmd == "geodesic") {cmd_geodesic(ctx, s);}
    else if (cmd == "logm") {cmd_logm(ctx, s);}
    else if (cmd == "expm") {cmd_expm(ctx, s);}
    else if (cmd == "project") {cmd_project(ctx, s);}
    else if (cmd == "mostow") {cmd_mostow(ctx, s);}
    else if (cmd == "gl") {cmd_gl(ctx, s);}
    else if (cmd == "lts") {cmd_lts(ctx, s);}
    else if (cmd == "curvature") {cmd_curvature(ctx, s);}
    else if (!allow_batch) {throw ParseError("batch entries cannot run nested batches");}
    else {
      cmd_batch(ctx, s, log);
      code = ctx.outputs["exit_code"].get<int>();
    }
  } catch (const std::exception & e) {
    code = exit_code_of(e);
    if (const auto * nf = dynamic_cast<const NumericalFailure *>(&e)) {
      if (nf->iterations() >= 0) {
        ctx.iterations = nf->iterations();
      }
      ctx.residual = nf->residual();
    }
    json report = report_of(ctx, code);
    report["error"] = json{{"kind", error_kind(e)}, {"message", e.what()}};
    for (const std::string & w : ctx.warnings) {
      log += "spd: warning: " + w + "\n";
    }
    log += std::string("spd: error: ") + e.what() + "\n";
    return {std::move(report), code, std::move(log)};
  }

  for (const std::string & w : ctx.warnings) {
    log += "spd: warning: " + w + "\n";
  }
  json report = report_of(ctx, code);
  if (s.format == "csv" && !ctx.primary.empty()) {
    report["csv"] = csv_payload(ctx.outputs[ctx.primary]);
  }
  return {std::move(report), code, std::move(log)};
}

}  // namespace

CliResult run_cli(const std::vector<std::string> & args)
{
  Outcome o = run_single(args, true);
  if (o.report.is_string()) {
    return {o.exit_code, o.report.get<std::string>(), o.log};
  }
  if (o.report.contains("csv")) {
    return {o.exit_code, o.report["csv"].get<std::string>(), o.log + o.report.dump() + "\n"};
  }
  return {o.exit_code, o.report.dump(2) + "\n", o.log};
}

int cli_main(int argc, char ** argv)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  const CliResult r = run_cli(args);
  std::cout << r.out;
  std::cerr << r.err;
  std::cout.flush();
  return r.exit_code;
}

}  // namespace spdgeom
