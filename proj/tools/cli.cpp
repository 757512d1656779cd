// Copyright 2026 The subrec Authors
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

#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "subrec/algebra.hpp"
#include "subrec/channel.hpp"
#include "subrec/correctability.hpp"
#include "subrec/demos.hpp"
#include "subrec/error.hpp"
#include "subrec/io.hpp"
#include "subrec/recovery.hpp"
#include "subrec/ucc.hpp"
#include "subrec/version.hpp"

namespace subrec::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string channel;
  std::string subsystem;
  std::string out;
  std::string subsystem_out;
  std::string format = "text";
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 0;
  bool no_tp_check = false;
  bool dual_compose = false;

  std::string demo;
  double p = 0.5;
  std::vector<double> theta{0.3, 1.2, 2.5, 4.0};
  Index d_a = 2;
  Index d_b = 2;
  Index dim = 8;
  Index kraus = 3;
  bool non_unital = false;
};

struct Outcome {
  json report;
  std::string text;
  int code = kExitOk;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

json matrix(const ComplexMatrix& m) { return json::parse(io::matrix_to_json(m)); }
json subsystem(const SubsystemDecomposition& dec) {
  return json::parse(io::subsystem_to_json(dec));
}
json channel(const KrausChannel& ch) { return json::parse(io::channel_to_json(ch)); }

json header(const std::string& command) {
  return json{{"command", command}, {"version", std::string(kVersion)}};
}

KrausChannel load_channel(const Options& opt, std::istream& in) {
  std::string text;
  if (opt.channel.empty() || opt.channel == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    text = io::read_file(opt.channel);
  }
  return io::channel_from_json(text, opt.tolerance, !opt.no_tp_check);
}

SubsystemDecomposition load_subsystem(const Options& opt) {
  return io::subsystem_from_json(io::read_file(opt.subsystem), opt.tolerance);
}

json blocks_json(const BlockMatrix& blocks) {
  json rows = json::array();
  for (const auto& row : blocks) {
    json r = json::array();
    for (const auto& b : row) r.push_back(matrix(b));
    rows.push_back(std::move(r));
  }
  return rows;
}

void describe_check(const CorrectabilityCertificate& cert, Outcome& o) {
  o.report["passed"] = cert.passed;
  o.report["dim"] = cert.dim;
  o.report["dA"] = cert.d_a;
  o.report["dB"] = cert.d_b;
  o.report["residuals"] = {{"factorization", cert.residual},
                           {"superoperator", cert.superoperator_residual}};
  if (cert.g_a) {
    o.report["F_blocks"] = blocks_json(cert.f_blocks);
    o.report["G_A"] = matrix(*cert.g_a);
  }
  std::ostringstream t;
  t << "correctable: " << (cert.passed ? "yes" : "no") << " (dim " << cert.dim << ", dA "
    << cert.d_a << ", dB " << cert.d_b << ", " << cert.kraus_count << " Kraus operators)\n"
    << "  factorization residual  " << sci(cert.residual) << "\n";
  if (cert.g_a) t << "  superoperator residual  " << sci(cert.superoperator_residual) << "\n";
  o.text += t.str();
  if (!cert.passed) o.code = kExitNegative;
}

Outcome cmd_check(const Options& opt, std::istream& in) {
  const KrausChannel ch = load_channel(opt, in);
  const SubsystemDecomposition dec = load_subsystem(opt);
  Outcome o{header("check"), "", kExitOk};
  describe_check(check_correctable(ch, dec, opt.tolerance), o);
  return o;
}

Outcome cmd_recover(const Options& opt, std::istream& in) {
  const KrausChannel ch = load_channel(opt, in);
  const SubsystemDecomposition dec = load_subsystem(opt);
  const CorrectabilityCertificate cert = check_correctable(ch, dec, opt.tolerance);
  Outcome o{header("recover"), "", kExitOk};
  describe_check(cert, o);
  if (!cert.passed) return o;

  const RecoveryResult res = construct_recovery(ch, dec, cert, opt.tolerance);
  const KrausChannel correction = recovery_to_correction(res, dec, opt.tolerance);
  json kraus = json::array();
  for (const auto& k : res.f_ca_kraus) kraus.push_back(matrix(k));
  json d_blocks = json::array();
  for (const auto& b : res.d_blocks) {
    json diag = json::array();
    for (Index i = 0; i < b.d.rows(); ++i) diag.push_back(b.d(i, i).real());
    d_blocks.push_back({{"index", b.index}, {"rank", b.rank}, {"diagonal", diag}});
  }
  std::ostringstream summary;
  summary << "U_recovery maps the noisy A(x)B code onto C(x)B with dC = "
          << res.c_subsystem.d_a() << " (dA = " << dec.d_a() << ", dB = " << dec.d_b()
          << "); the correction channel has " << correction.size() << " Kraus operator"
          << (correction.size() == 1 ? "" : "s") << ".";
  o.report["U_recovery"] = matrix(res.u_recovery);
  o.report["C_subsystem"] = subsystem(res.c_subsystem);
  o.report["F_CA_kraus"] = std::move(kraus);
  o.report["D_blocks"] = std::move(d_blocks);
  o.report["correction"] = channel(correction);
  o.report["residuals"]["recovery"] = res.residual;
  o.report["residuals"]["orthogonality"] = res.orthogonality_residual;
  o.report["residuals"]["action"] = res.action_residual;
  o.report["summary"] = summary.str();
  o.text += summary.str() + "\n  recovery residual       " + sci(res.residual) +
            "\n  orthogonality residual  " + sci(res.orthogonality_residual) +
            "\n  action residual         " + sci(res.action_residual) + "\n";
  return o;
}

json sectors_json(const std::vector<ClassicalSector>& sectors) {
  json out = json::array();
  for (const auto& s : sectors) {
    out.push_back({{"multiplicity", s.multiplicity}, {"isometry", matrix(s.isometry)}});
  }
  return out;
}

json structure_json(const AlgebraStructure& s) {
  json blocks = json::array();
  for (const auto& b : s.blocks) blocks.push_back({{"m", b.m}, {"n", b.n}, {"offset", b.offset}});
  return blocks;
}

std::string blocks_text(const AlgebraStructure& s) {
  std::ostringstream t;
  t << "  blocks (m x n):";
  for (const auto& b : s.blocks) t << " " << b.m << "x" << b.n;
  t << "\n";
  return t.str();
}

Outcome cmd_ns(const Options& opt, std::istream& in) {
  KrausChannel ch = load_channel(opt, in);
  if (opt.dual_compose) ch = compose(dual(ch, opt.tolerance), ch, opt.tolerance);
  const NoiselessReport ns = noiseless_subsystems(ch, opt.seed, opt.tolerance);

  Outcome o{header("ns"), "", kExitOk};
  o.report["dual_compose"] = opt.dual_compose;
  o.report["seed"] = ns.structure.seed;
  o.report["fixed_point_dimension"] = ns.fixed_point_dimension;
  o.report["blocks"] = structure_json(ns.structure);
  o.report["Q"] = matrix(ns.structure.q);
  json subs = json::array();
  std::size_t next = 0;
  for (std::size_t k = 0; k < ns.structure.blocks.size(); ++k) {
    if (ns.structure.blocks[k].m == 1) continue;
    subs.push_back({{"block", k}, {"subsystem", subsystem(ns.subsystems[next++])}});
  }
  o.report["subsystems"] = std::move(subs);
  o.report["classical_sectors"] = sectors_json(ns.classical_sectors);
  o.report["residuals"] = {{"pattern", ns.structure.pattern_residual},
                           {"noiseless", ns.residuals}};

  std::ostringstream t;
  t << "noiseless subsystems of " << (opt.dual_compose ? "E^dag o E" : "E") << ": "
    << ns.subsystems.size() << " quantum, " << ns.classical_sectors.size()
    << " classical sector(s) (fixed-point algebra dim " << ns.fixed_point_dimension
    << ", seed " << ns.structure.seed << ")\n"
    << blocks_text(ns.structure);
  for (std::size_t i = 0; i < ns.subsystems.size(); ++i) {
    t << "  subsystem " << i << ": dA " << ns.subsystems[i].d_a() << ", dB "
      << ns.subsystems[i].d_b() << ", residual " << sci(ns.residuals[i]) << "\n";
  }
  t << "  pattern residual " << sci(ns.structure.pattern_residual) << "\n";
  o.text = t.str();
  if (ns.subsystems.empty()) o.code = kExitNegative;
  return o;
}

Outcome cmd_ucc(const Options& opt, std::istream& in) {
  const KrausChannel ch = load_channel(opt, in);
  const UccReport rep = find_ucc(ch, opt.seed, opt.tolerance);

  Outcome o{header("ucc"), "", kExitOk};
  o.report["seed"] = rep.seed;
  o.report["blocks"] = structure_json(rep.structure);
  json subs = json::array();
  json residuals = json::array();
  for (const auto& s : rep.subsystems) {
    subs.push_back({{"block", s.block},
                    {"subsystem", subsystem(s.dec)},
                    {"U_correction", matrix(s.u_correction)},
                    {"residual", s.residual}});
    residuals.push_back(s.residual);
  }
  json ranks = json::array();
  for (const auto& r : rep.rank_diagnostics) {
    ranks.push_back({{"rank_image", r.rank_image},
                     {"rank_projector", r.rank_projector},
                     {"rank_corrected", r.rank_corrected},
                     {"dA", r.d_a}});
  }
  o.report["subsystems"] = std::move(subs);
  o.report["classical_sectors"] = sectors_json(rep.classical_sectors);
  o.report["rank_diagnostics"] = std::move(ranks);
  o.report["residuals"] = {{"correction", residuals},
                           {"pattern", rep.structure.pattern_residual}};

  std::ostringstream t;
  t << "unitarily correctable subsystems: " << rep.subsystems.size() << " quantum, "
    << rep.classical_sectors.size() << " classical sector(s) (seed " << rep.seed << ")\n"
    << blocks_text(rep.structure);
  for (std::size_t i = 0; i < rep.subsystems.size(); ++i) {
    const auto& s = rep.subsystems[i];
    t << "  subsystem " << i << ": dA " << s.dec.d_a() << ", dB " << s.dec.d_b()
      << ", correction residual " << sci(s.residual) << "\n";
  }
  o.text = t.str();
  if (rep.subsystems.empty()) o.code = kExitNegative;
  return o;
}

int cmd_demo(const Options& opt, std::ostream& out) {
  DemoSpec spec;
  spec.kind = demo_kind_from_string(opt.demo);
  spec.p = opt.p;
  if (opt.theta.size() != 4) throw Error(ErrorCode::kBadParams, "--theta needs four angles");
  std::copy(opt.theta.begin(), opt.theta.end(), spec.theta.begin());
  spec.seed = opt.seed;
  spec.d_a = opt.d_a;
  spec.d_b = opt.d_b;
  spec.dim = opt.dim;
  spec.noise_kraus = opt.kraus;
  spec.unital = !opt.non_unital;
  const Demo demo = demo_build(spec, opt.tolerance);

  KrausChannel ch = demo.channel;
  if (opt.dual_compose) ch = compose(dual(ch, opt.tolerance), ch, opt.tolerance);
  const std::string text = io::channel_to_json(ch);
  if (opt.out.empty()) {
    out << text << "\n";
  } else {
    io::write_file(opt.out, text);
  }
  if (!opt.subsystem_out.empty() && demo.code) {
    io::write_file(opt.subsystem_out, io::subsystem_to_json(*demo.code));
  }
  return kExitOk;
}

std::optional<double> env_tolerance() {
  const char* v = std::getenv("SUBREC_TOLERANCE");
  if (v == nullptr || *v == '\0') return std::nullopt;
  std::size_t used = 0;
  const double t = std::stod(v, &used);
  if (used != std::string(v).size() || !(t > 0.0)) throw std::invalid_argument(v);
  return t;
}

void add_common(CLI::App* sub, Options& opt, bool needs_subsystem) {
  sub->add_option("--channel", opt.channel, "Channel JSON file (default: standard input)");
  if (needs_subsystem) {
    sub->add_option("--subsystem", opt.subsystem, "Subsystem JSON file")->required();
  }
  sub->add_option("--tolerance", opt.tolerance, "Relative tolerance")
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", opt.seed, "Seed for randomized steps");
  sub->add_option("--out", opt.out, "Also write the JSON report to this file");
  sub->add_option("--format", opt.format, "Report format on standard output")
      ->check(CLI::IsMember({"json", "text"}));
  sub->add_flag("--no-tp-check", opt.no_tp_check, "Accept non-trace-preserving input");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opt;
  try {
    if (const auto t = env_tolerance()) opt.tolerance = *t;
  } catch (const std::exception&) {
    err << "subrec: SUBREC_TOLERANCE must be a positive number\n";
    return kExitUsage;
  }

  CLI::App app{"Correctable and noiseless subsystems of quantum channels", "subrec"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "Test a subsystem for correctability");
  add_common(check, opt, true);
  auto* recover = app.add_subcommand("recover", "Build the recovery unitary for a subsystem");
  add_common(recover, opt, true);
  auto* ns = app.add_subcommand("ns", "Noiseless subsystems of a unital channel");
  add_common(ns, opt, false);
  ns->add_flag("--dual-compose", opt.dual_compose, "Analyze E^dag o E instead of E");
  auto* ucc = app.add_subcommand("ucc", "Unitarily correctable subsystems of a unital channel");
  add_common(ucc, opt, false);

  auto* demo = app.add_subcommand("demo", "Emit a built-in example channel as JSON");
  demo->add_option("name", opt.demo, "phase-flip | binary-unitary | swap | planted")
      ->required()
      ->check(CLI::IsMember({"phase-flip", "binary-unitary", "swap", "planted"}));
  demo->add_option("--p", opt.p, "Noise probability in (0, 1)");
  demo->add_option("--theta", opt.theta, "Four eigenphases, increasing in [0, 2 pi)")
      ->delimiter(',')
      ->expected(4);
  demo->add_option("--seed", opt.seed, "Seed for random unitaries");
  demo->add_option("--dA", opt.d_a, "planted: dimension of A");
  demo->add_option("--dB", opt.d_b, "planted: dimension of B");
  demo->add_option("--dim", opt.dim, "planted: ambient dimension");
  demo->add_option("--kraus", opt.kraus, "planted: Kraus operators of the A noise");
  demo->add_flag("--non-unital", opt.non_unital, "planted: non-unital noise");
  demo->add_option("--tolerance", opt.tolerance, "Relative tolerance")
      ->check(CLI::PositiveNumber);
  demo->add_option("--out", opt.out, "Write the channel here instead of standard output");
  demo->add_option("--subsystem-out", opt.subsystem_out, "Write the example code here");
  demo->add_flag("--dual-compose", opt.dual_compose, "Emit E^dag o E instead of E");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (demo->parsed()) return cmd_demo(opt, out);
    Outcome o;
    if (check->parsed()) {
      o = cmd_check(opt, in);
    } else if (recover->parsed()) {
      o = cmd_recover(opt, in);
    } else if (ns->parsed()) {
      o = cmd_ns(opt, in);
    } else {
      o = cmd_ucc(opt, in);
    }
    o.report["tolerance"] = opt.tolerance;
    const std::string dumped = o.report.dump(2);
    if (!opt.out.empty()) io::write_file(opt.out, dumped);
    if (opt.format == "json") {
      out << dumped << "\n";
    } else {
      out << o.text;
    }
    return o.code;
  } catch (const Error& e) {
    err << "subrec: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "subrec: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace subrec::cli
