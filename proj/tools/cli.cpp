#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "torusvoa/torusvoa.hpp"

namespace torusvoa::cli {

namespace {

std::string render_series(const QSeries& s, OutputMode mode) {
  if (mode == OutputMode::json) return to_json(s).dump(2) + "\n";
  return to_string(s) + "\n";
}

std::string render_report(const VerificationReport& r) {
  std::ostringstream os;
  os << r.check << " r=" << r.r;
  if (r.c) os << " c=" << *r.c;
  if (r.p) os << " p=" << *r.p;
  if (r.n) os << " n=" << *r.n;
  if (r.coset) os << " i=" << *r.coset;
  if (r.shape) os << " shape=" << *r.shape;
  if (r.cutoff) os << " cutoff=" << *r.cutoff;
  if (r.check == "singlet" || r.check == "triplet") {
    os << " agreement=";
    if (r.agreement.full) {
      os << "full";
    } else {
      os << "q^(" << *r.agreement.order << ")";
    }
    if (r.threshold) os << " threshold=" << *r.threshold;
  }
  os << " " << to_string(r.verdict);
  if (r.first_disagreement) {
    os << " first-disagreement=" << r.first_disagreement->exponent << ":" << r.first_disagreement->lhs
       << "/" << r.first_disagreement->rhs;
  }
  if (!r.detail.empty()) os << " " << r.detail;
  return os.str();
}

std::vector<VerificationReport> props_reports(const CliConfig& config) {
  const int r = config.rank;
  std::vector<VerificationReport> out;
  if (!config.shape.empty()) {
    const Partition lambda = Partition::parse(config.shape);
    out.push_back(check_prop_zero_weight(lambda, r));
    out.push_back(check_prop_full_dim(lambda, config.colour, r));
    out.push_back(phi_bijection_check(lambda, config.colour, r));
    return out;
  }
  for (int weight = 0; weight <= config.colour * (r + 1); ++weight) {
    for_each_partition(weight, r, [&](const Partition& lambda) { out.push_back(check_prop_zero_weight(lambda, r)); });
  }
  for (int n = 0; n <= config.colour; ++n) {
    for (const auto& lambda : full_dim_shapes(n, r)) {
      out.push_back(check_prop_full_dim(lambda, n, r));
      out.push_back(phi_bijection_check(lambda, n, r));
    }
  }
  return out;
}

int run_verify(const CliConfig& config, std::ostream& out) {
  EvaluationOptions opts;
  opts.threads = config.threads;
  std::vector<VerificationReport> reports;
  if (config.target == "singlet") {
    reports.push_back(verify_singlet_theorem(config.rank, config.components, config.p, config.colour,
                                             config.order, opts));
  } else if (config.target == "triplet") {
    const int coset = config.coset.value_or(config.rank > 0 ? config.colour % config.rank : 0);
    reports.push_back(verify_triplet_theorem(config.rank, config.p, coset, config.colour, config.order, opts));
  } else if (config.target == "props") {
    reports = props_reports(config);
  } else {
    throw std::invalid_argument("verify target must be singlet, triplet or props");
  }
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  if (config.mode == OutputMode::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    out << arr.dump(2) << "\n";
  } else {
    for (const auto& r : reports) out << render_report(r) << "\n";
  }
  return ok ? kExitOk : kExitFailed;
}

int dispatch(const CliConfig& config, std::ostream& out) {
  if (config.threads > 256) throw std::invalid_argument("--threads must be at most 256");
  const std::string& cmd = config.subcommand;
  if (cmd == "kostka") {
    const Partition lambda = Partition::parse(config.shape);
    const Composition mu = Composition::parse(config.content);
    const BigInt k = kostka(lambda, mu);
    if (config.mode == OutputMode::json) {
      nlohmann::json j{{"shape", lambda.parts()}, {"content", mu.entries()}, {"kostka", k.str()}};
      out << j.dump(2) << "\n";
    } else {
      out << k << "\n";
    }
    return kExitOk;
  }
  if (cmd == "schur") {
    if (config.rank < 1) throw std::invalid_argument("rank must be positive");
    out << render_series(principal_spec(Partition::parse(config.shape), config.rank), config.mode);
    return kExitOk;
  }
  if (cmd == "jones") {
    const TorusLinkSpec spec{config.rank, config.components, config.p, config.colour};
    EvaluationOptions opts;
    opts.threads = config.threads;
    QSeries s;
    if (config.shift == "none") {
      s = jones_torus_link(spec, opts);
    } else if (config.shift == "singlet") {
      s = shifted_invariant_singlet(spec, opts);
    } else if (config.shift == "triplet") {
      s = shifted_invariant_triplet(spec, opts);
    } else {
      throw std::invalid_argument("--shift must be singlet, triplet or none");
    }
    out << render_series(s, config.mode);
    return kExitOk;
  }
  if (cmd == "char") {
    const CharacterKind kind = parse_character_kind(config.kind);
    if (kind == CharacterKind::singlet && config.coset && *config.coset != 0) {
      throw std::invalid_argument("--coset applies to the triplet character only");
    }
    const CharacterSpec spec{config.rank, config.p, kind, config.coset.value_or(0), config.order};
    CharacterOptions opts;
    opts.threads = config.threads;
    const QSeries s = kind == CharacterKind::singlet ? singlet_char(spec, opts) : triplet_char(spec, opts);
    out << render_series(s, config.mode);
    return kExitOk;
  }
  if (cmd == "verify") return run_verify(config, out);
  if (cmd == "selftest") return selftest(out, config.threads) ? kExitOk : kExitFailed;
  throw std::invalid_argument("unknown subcommand '" + cmd + "'");
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.output_path) {
      std::ostringstream buffer;
      const int status = dispatch(config, buffer);
      std::ofstream file(*config.output_path, std::ios::binary);
      if (!file) {
        err << "error: cannot open output file '" << *config.output_path << "'\n";
        return kExitUsage;
      }
      file << buffer.str();
      return status;
    }
    return dispatch(config, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

int run_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig config;
  if (const char* env = std::getenv("TORUSVOA_ORDER"); env && *env) {
    try {
      config.order = parse_rational(env);
    } catch (const std::invalid_argument& e) {
      err << "error: TORUSVOA_ORDER: " << e.what() << "\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Coloured sl_r invariants of torus links and (1,p) singlet/triplet characters", "torusvoa"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  std::string order_text;
  std::string output;
  app.add_flag("--json", json, "Emit JSON instead of text");
  app.add_option("--threads", config.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--output", output, "Write the rendered output to this file");
  app.add_option("--order", order_text, "Truncation order N (integer or a/b); default $TORUSVOA_ORDER or 20");

  auto* kostka = app.add_subcommand("kostka", "Kostka number K_{shape,content}");
  kostka->add_option("--shape", config.shape, "Partition, e.g. 2,1 or 3^2")->required();
  kostka->add_option("--content", config.content, "Composition, e.g. 1,1,1 or 7^4")->required();

  auto* schur = app.add_subcommand("schur", "Principal specialization of a Schur polynomial");
  schur->add_option("--shape", config.shape, "Partition")->required();
  schur->add_option("--rank", config.rank, "Number of variables r")->required();

  auto* jones = app.add_subcommand("jones", "Coloured invariant of the torus link T(c, pc)");
  jones->add_option("--rank", config.rank, "Rank r of sl_r")->required();
  jones->add_option("--components", config.components, "Number of components c")->required();
  jones->add_option("--p", config.p, "Twist parameter p")->required();
  jones->add_option("--colour", config.colour, "Colour n")->required();
  jones->add_option("--shift", config.shift, "Theorem-ready shift")
      ->check(CLI::IsMember({"singlet", "triplet", "none"}));

  auto* chr = app.add_subcommand("char", "Normalized singlet or triplet character");
  chr->add_option("--kind", config.kind, "singlet or triplet")->required()->check(CLI::IsMember({"singlet", "triplet"}));
  chr->add_option("--rank", config.rank, "Rank r")->required();
  chr->add_option("--p", config.p, "Parameter p >= 2")->required();
  chr->add_option("--coset", config.coset, "Coset index i (triplet)");

  auto* verify = app.add_subcommand("verify", "Verify a limit theorem or the combinatorial statements");
  verify->add_option("target", config.target, "singlet, triplet or props")
      ->required()
      ->check(CLI::IsMember({"singlet", "triplet", "props"}));
  verify->add_option("--rank", config.rank, "Rank r")->required();
  verify->add_option("--components", config.components, "Number of components c (singlet)");
  verify->add_option("--p", config.p, "Parameter p");
  verify->add_option("--colour", config.colour, "Colour n");
  verify->add_option("--coset", config.coset, "Coset index i (triplet)");
  verify->add_option("--shape", config.shape, "Single partition to check (props)");

  app.add_subcommand("selftest", "Run the invariant suite at small scale");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  config.mode = json ? OutputMode::json : OutputMode::text;
  if (!output.empty()) config.output_path = output;
  if (!order_text.empty()) {
    try {
      config.order = parse_rational(order_text);
    } catch (const std::invalid_argument& e) {
      err << "error: --order: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  if (config.order <= 0) {
    err << "error: --order must be positive\n";
    return kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace torusvoa::cli
