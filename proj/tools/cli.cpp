#include "cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

#include "oscalg/oscalg.hpp"

namespace oscalg::cli {

namespace {

std::string kind_text(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::finite_dim4: return "FiniteDim4";
    case VerdictKind::infinite: return "Infinite";
    case VerdictKind::consistent_with_finite: return "ConsistentWithFinite";
    case VerdictKind::infinite_witnessed: return "InfiniteWitnessed";
  }
  return "?";
}

bool verdict_is_finite_side(VerdictKind kind) {
  return kind == VerdictKind::finite_dim4 || kind == VerdictKind::consistent_with_finite;
}

void print_verdict(std::ostream& out, const Verdict& v, int indent = 2) {
  std::string pad(indent, ' ');
  out << pad << "verdict: " << kind_text(v.kind) << "\n";
  if (v.a0) out << pad << "a0 = " << v.a0->to_string() << "\n";
  if (v.a2) out << pad << "a2 = " << v.a2->to_string() << "\n";
  if (v.witness) {
    out << pad << "witness: A^(" << v.witness->j << ") differs at n=" << v.witness->n1
        << " (" << v.witness->v1 << ") and n=" << v.witness->n2 << " (" << v.witness->v2
        << ")\n";
  }
  if (!v.note.empty()) out << pad << "note: " << v.note << "\n";
}

void print_closure(std::ostream& out, const ClosureResult& c, int indent = 2) {
  std::string pad(indent, ' ');
  out << pad << "closure: " << (c.status == ClosureStatus::closed ? "Closed" : "BudgetExceeded")
      << "  dim=" << c.dim << "  depth=" << c.depth_reached << "\n";
  out << pad << "growth:";
  for (const auto& [depth, dim] : c.growth_log) out << " (" << depth << "," << dim << ")";
  out << "\n";
  if (!c.note.empty()) out << pad << "note: " << c.note << "\n";
  if (c.status == ClosureStatus::closed) {
    out << pad << "basis:\n";
    for (const auto& op : c.basis) out << pad << "  " << op.to_string() << "\n";
  }
}

void print_relations(std::ostream& out, const VerifyReport& r) {
  for (const auto& rel : r.relations) {
    out << "  " << std::left << std::setw(18) << rel.relation << " max residual "
        << std::scientific << std::setprecision(3) << rel.max_residual << "  "
        << (rel.pass ? "pass" : "FAIL") << std::defaultfloat << "\n";
  }
  out << "  overall: " << (r.pass ? "pass" : "FAIL") << "\n";
}

struct Processed {
  Json doc;
  std::string text;
  bool verdict_ok = true;
  bool internal_failure = false;
  std::string input_failure;  // nonempty: document still emitted, but exit 2
};

Verdict verdict_for(const RunConfig& config, const SpecInput& input) {
  if (input.spec.symbolic()) {
    return classify(input.spec);
  }
  std::vector<Rational> window;
  for (std::size_t n = 0; n < *input.spec.horizon; ++n) window.push_back(input.spec.b2.at(n));
  return classify_prefix(window, config.j_max);
}

Processed do_classify(const RunConfig& config, const SpecInput& input) {
  Processed p;
  Verdict v = verdict_for(config, input);
  p.doc = to_json(v);
  std::ostringstream os;
  os << "[classify] " << input.spec.label << "\n";
  print_verdict(os, v);
  p.text = os.str();
  p.verdict_ok = verdict_is_finite_side(v.kind);
  return p;
}

Processed do_verify(const RunConfig& config, const SpecInput& input) {
  if (config.truncation < 3) {
    throw InputError("flag '-M': verify needs a truncation of at least 3");
  }
  Processed p;
  VerifyReport r = verify_relations(input.spec, config.truncation, config.tol);
  p.doc = to_json(r);
  std::ostringstream os;
  os << "[verify] " << input.spec.label << "  M=" << r.truncation << "  tol=" << std::scientific
     << std::setprecision(2) << r.tolerance << std::defaultfloat << "\n";
  print_relations(os, r);
  p.text = os.str();
  p.verdict_ok = r.pass;
  return p;
}

Processed do_closure(const RunConfig& config, const SpecInput& input) {
  if (config.max_dim < 4) {
    throw InputError("flag '--max-dim': closure needs a dimension budget of at least 4");
  }
  Processed p;
  ClosureOptions options;
  options.max_dim = config.max_dim;
  options.max_depth = config.max_depth;
  ClosureResult c = lie_closure(input.spec, options);
  p.doc = to_json(c);
  std::ostringstream os;
  os << "[closure] " << input.spec.label << "\n";
  print_closure(os, c);
  p.text = os.str();
  p.verdict_ok = c.status == ClosureStatus::closed;
  return p;
}

Processed do_moments(const SpecInput& input) {
  if (!input.moments) {
    throw InputError("the moments command needs a {\"moments\": [...]} input file");
  }
  Processed p;
  RecurrenceTable t = moments_to_recurrence(*input.moments, input.moment_count);
  p.doc = to_json(t);
  std::ostringstream os;
  os << "[moments] " << input.spec.label << "  count=" << input.moment_count << "\n";
  os << "  " << std::left << std::setw(4) << "n" << std::setw(14) << "a_n" << "b_n^2\n";
  for (std::size_t n = 0; n < t.a.size(); ++n) {
    os << "  " << std::left << std::setw(4) << n << std::setw(14) << t.a[n].to_string()
       << t.b2[n].to_string() << "\n";
  }
  p.text = os.str();
  return p;
}

Processed do_report(const RunConfig& config, const SpecInput& input) {
  Processed p;
  ClosureOptions options;
  options.max_dim = config.max_dim;
  options.max_depth = config.max_depth;
  Report r = classification_report(input.spec, options, config.j_max);
  p.doc = to_json(r);

  std::ostringstream os;
  os << "[report] " << input.spec.label << "\n";
  os << "  validation: " << (r.validation.valid ? "valid" : r.validation.message) << "\n";
  if (!r.table_rows.empty()) {
    for (std::size_t j = 0; j < r.table_rows.size(); ++j) {
      os << "  A^(" << j << "): " << r.table_rows[j].to_string() << "\n";
    }
  }
  if (r.verdict) {
    print_verdict(os, *r.verdict);
    os << "  symmetrize-invariant: " << (r.symmetrize_invariant ? "yes" : "NO") << "\n";
  }
  if (r.closure) {
    print_closure(os, *r.closure);
    os << "  verdict agreement: " << (r.verdicts_agree ? "yes" : "NO") << "\n";
  }
  if (!r.note.empty()) os << "  note: " << r.note << "\n";
  p.text = os.str();

  p.verdict_ok = r.validation.valid && r.verdict && verdict_is_finite_side(r.verdict->kind);
  p.internal_failure = r.closure.has_value() && !r.verdicts_agree;
  if (!r.validation.valid) {
    // the report document still carries the validation failure
    p.input_failure = "invalid spec: " + r.validation.message;
  }
  return p;
}

Processed process(const RunConfig& config, const SpecInput& input) {
  switch (config.command) {
    case Command::classify: return do_classify(config, input);
    case Command::verify: return do_verify(config, input);
    case Command::closure: return do_closure(config, input);
    case Command::moments: return do_moments(input);
    case Command::report: return do_report(config, input);
  }
  throw Error("unknown command");
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig config;
  CLI::App app{"generalized oscillator algebras from recurrence coefficients", "oscalg"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", config.inputs, "spec file(s), JSON")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--format", config.format, "output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"text", Format::text}, {"json", Format::json}}));
    sub->add_flag("--verdict-exit", config.verdict_exit,
                  "exit 1 on infinite/fail verdicts (default: exit 0 for any completed run)");
    return sub;
  };

  CLI::App* classify_cmd = add_common(app.add_subcommand("classify", "dimension verdict"));
  classify_cmd->add_option("--j-max", config.j_max, "difference table depth");

  CLI::App* verify_cmd = add_common(app.add_subcommand("verify", "check operator relations"));
  verify_cmd->add_option("-M,--truncation", config.truncation, "matrix truncation");
  verify_cmd->add_option("--tol", config.tol, "residual tolerance");

  CLI::App* closure_cmd = add_common(app.add_subcommand("closure", "Lie closure of {I,N,a+,a-}"));
  closure_cmd->add_option("--max-dim", config.max_dim, "basis size budget");
  closure_cmd->add_option("--max-depth", config.max_depth, "bracket nesting budget");

  add_common(app.add_subcommand("moments", "recurrence coefficients from moments"));

  CLI::App* report_cmd = add_common(app.add_subcommand("report", "aggregated classification"));
  report_cmd->add_option("--j-max", config.j_max, "difference table depth");
  report_cmd->add_option("--max-dim", config.max_dim, "closure basis size budget");
  report_cmd->add_option("--max-depth", config.max_depth, "closure bracket nesting budget");

  // CLI11 parses argv back to front.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw InputError(std::string("command line: ") + e.what());
  }

  if (classify_cmd->parsed()) config.command = Command::classify;
  else if (verify_cmd->parsed()) config.command = Command::verify;
  else if (closure_cmd->parsed()) config.command = Command::closure;
  else if (report_cmd->parsed()) config.command = Command::report;
  else config.command = Command::moments;
  return config;
}

int completion_exit_code(bool verdict_exit, bool verdict_ok, bool internal_failure) {
  if (internal_failure) return 3;
  if (verdict_exit && !verdict_ok) return 1;
  return 0;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  int exit_code = 0;
  Json docs = Json::array();
  for (const std::string& path : config.inputs) {
    try {
      SpecInput input = load_spec_file(path);
      Processed p = process(config, input);
      if (config.format == Format::json) {
        docs.push_back(std::move(p.doc));
      } else {
        out << p.text;
      }
      if (!p.input_failure.empty()) {
        err << "error: " << path << ": " << p.input_failure << "\n";
        exit_code = std::max(exit_code, 2);
      }
      exit_code = std::max(
          exit_code, completion_exit_code(config.verdict_exit, p.verdict_ok, p.internal_failure));
    } catch (const Error& e) {
      err << "error: " << path << ": " << e.what() << "\n";
      exit_code = std::max(exit_code, 2);
    }
  }
  if (config.format == Format::json && !docs.empty()) {
    out << (docs.size() == 1 ? docs.front() : docs).dump(2) << "\n";
  }
  return exit_code;
}

}  // namespace oscalg::cli
