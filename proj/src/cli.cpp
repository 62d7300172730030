#include "dckpell/cli.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "dckpell/dc_kpell_quaternion.hpp"
#include "dckpell/dual_complex_io.hpp"
#include "dckpell/errors.hpp"
#include "dckpell/kpell_sequences.hpp"

namespace dckpell::cli {
namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

long parse_long(std::string_view text) {
  long value = 0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end) {
    throw UsageError("malformed integer: '" + std::string(text) + "'");
  }
  return value;
}

ExactRational parse_positive_k(const std::string& text) {
  ExactRational k = ExactRational::parse(text);
  if (k.sign() <= 0) throw UsageError("k must be positive, got " + k.to_string());
  return k;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t idx = 0; idx < items.size(); ++idx) {
    if (idx != 0) out += sep;
    out += items[idx];
  }
  return out;
}

std::string render(const DCRational& w, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: return to_json(w).dump();
    case OutputFormat::kCsv:
      return w.one.to_string() + "," + w.i.to_string() + "," + w.eps.to_string() + "," + w.ieps.to_string();
    case OutputFormat::kPlainText: return render_plain(w);
  }
  return {};
}

struct SeqArgs {
  std::string family = "pell";
  std::string k;
  std::string from = "0";
  std::string to;
  std::string format = "plain";
};

int cmd_seq(const SeqArgs& args, std::ostream& out) {
  const SequenceFamily family = parse_family(args.family);
  const ExactRational k = parse_positive_k(args.k);
  const long from = parse_long(args.from);
  const long to = args.to.empty() ? from : parse_long(args.to);
  if (from > to) throw UsageError("--from must not exceed --to");
  const OutputFormat format = parse_format(args.format);
  const KPellTable table(k, from, to + 1);
  std::vector<std::string> values;
  for (long n = from; n <= to; ++n) values.push_back(table.term(family, n).to_string());
  switch (format) {
    case OutputFormat::kCsv: out << join(values, ",") << '\n'; break;
    case OutputFormat::kPlainText: out << join(values, " ") << '\n'; break;
    case OutputFormat::kJson: {
      auto rows = nlohmann::ordered_json::array();
      for (long n = from; n <= to; ++n) {
        nlohmann::ordered_json row;
        row["n"] = n;
        row["value"] = values[static_cast<std::size_t>(n - from)];
        rows.push_back(std::move(row));
      }
      out << rows.dump() << '\n';
      break;
    }
  }
  return kExitOk;
}

struct QuatArgs {
  std::string family = "pell";
  std::string k;
  std::string n;
  std::string format = "json";
};

int cmd_quat(const QuatArgs& args, std::ostream& out) {
  const SequenceFamily family = parse_family(args.family);
  const ExactRational k = parse_positive_k(args.k);
  const long n = parse_long(args.n);
  const OutputFormat format = parse_format(args.format);
  out << render(build_quaternion(family, k, n).value(), format) << '\n';
  return kExitOk;
}

struct IdentityArgs {
  std::string id;
  std::optional<std::string> k, n, m, r;
  std::string format = "json";
};

int cmd_identity(const IdentityArgs& args, std::ostream& out) {
  const IdentityId id = parse_identity(args.id);
  Bindings b;
  if (args.k) b.k = parse_positive_k(*args.k);
  if (args.n) b.n = parse_long(*args.n);
  if (args.m) b.m = parse_long(*args.m);
  if (args.r) b.r = parse_long(*args.r);
  const OutputFormat format = parse_format(args.format);
  const CheckResult result = check_one(id, b);
  if (format == OutputFormat::kJson) {
    nlohmann::ordered_json j;
    j["equal"] = result.equal;
    j["lhs"] = to_json(result.lhs);
    j["rhs"] = to_json(result.rhs);
    out << j.dump() << '\n';
  } else {
    out << "equal: " << (result.equal ? "true" : "false") << '\n'
        << "lhs: " << render(result.lhs, format) << '\n'
        << "rhs: " << render(result.rhs, format) << '\n';
  }
  return result.equal ? kExitOk : kExitUnequal;
}

struct SweepArgs {
  std::string ids = "all";
  std::string k = "1,2,3,4";
  std::string n = "0..32";
  std::string m = "0..32";
  std::string r = "1..8";
  std::size_t max_counterexamples = 5;
  unsigned threads = 0;
  std::string out_path;
  std::string format = "plain";
  bool no_timing = false;
};

int cmd_sweep(const SweepArgs& args, std::ostream& out) {
  SweepConfig config;
  config.ids = parse_identity_list(args.ids);
  config.k_values = parse_rational_list(args.k);
  config.n_range = parse_range(args.n);
  config.m_range = parse_range(args.m);
  config.r_range = parse_range(args.r);
  config.max_counterexamples = args.max_counterexamples;
  config.threads = args.threads;
  const OutputFormat format = parse_format(args.format);

  std::ofstream file;
  if (!args.out_path.empty()) {
    file.open(args.out_path);
    if (!file) throw UsageError("cannot write report to '" + args.out_path + "'");
  }
  const auto reports = sweep(config);
  const auto json = reports_to_json(reports, !args.no_timing);
  if (file.is_open()) {
    file << json.dump(2) << '\n';
    if (!file) throw UsageError("failed writing report to '" + args.out_path + "'");
  }
  switch (format) {
    case OutputFormat::kPlainText:
      for (const auto& r : reports) out << summary_line(r) << '\n';
      break;
    case OutputFormat::kCsv: out << summary_csv(reports); break;
    case OutputFormat::kJson: out << json.dump(2) << '\n'; break;
  }
  const bool all_hold =
      std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.verdict == Verdict::kHolds; });
  return all_hold ? kExitOk : kExitUnequal;
}

struct BinetArgs {
  std::string k;
  std::string n;
  std::string level = "number";
  std::string format = "plain";
};

int cmd_binet(const BinetArgs& args, std::ostream& out) {
  const ExactRational k = parse_positive_k(args.k);
  const long n = parse_long(args.n);
  if (n < 0) throw UsageError("--n must be non-negative");
  const OutputFormat format = parse_format(args.format);
  nlohmann::ordered_json value;
  std::string text;
  bool consistent = false;
  if (args.level == "number") {
    const ExactRational binet = seq_binet(k, static_cast<std::uint64_t>(n));
    consistent = binet == seq_term(SequenceSpec(SequenceFamily::kPell, k), n);
    value = binet.to_string();
    text = binet.to_string();
  } else if (args.level == "quaternion") {
    const DCRational binet = binet_quaternion(k, static_cast<std::uint64_t>(n));
    consistent = binet == build_quaternion(SequenceFamily::kPell, k, n).value();
    value = to_json(binet);
    text = value.dump();
  } else {
    throw UsageError("--level must be 'number' or 'quaternion'");
  }
  if (format == OutputFormat::kJson) {
    nlohmann::ordered_json j;
    j["value"] = value;
    j["consistent"] = consistent;
    out << j.dump() << '\n';
  } else {
    out << text << '\n' << "consistent: " << (consistent ? "true" : "false") << '\n';
  }
  return consistent ? kExitOk : kExitUnequal;
}

int cmd_list(std::ostream& out) {
  for (const auto& info : identity_catalog()) out << info.tag << "  " << info.statement << '\n';
  return kExitOk;
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "json") return OutputFormat::kJson;
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "plain") return OutputFormat::kPlainText;
  throw UsageError("unknown format '" + std::string(text) + "' (json, csv, plain)");
}

IndexRange parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const long v = parse_long(text);
    return {v, v};
  }
  const IndexRange range{parse_long(text.substr(0, dots)), parse_long(text.substr(dots + 2))};
  if (range.first > range.last) throw UsageError("empty range '" + std::string(text) + "'");
  return range;
}

std::vector<ExactRational> parse_rational_list(std::string_view text) {
  std::vector<ExactRational> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_positive_k(std::string(text.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<IdentityId> parse_identity_list(std::string_view text) {
  std::vector<IdentityId> out;
  if (text == "all") {
    for (const auto& info : identity_catalog()) out.push_back(info.id);
    return out;
  }
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_identity(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact dual-complex k-Pell arithmetic and identity verification"};
  app.require_subcommand(1);

  SeqArgs seq;
  auto* seq_cmd = app.add_subcommand("seq", "k-Pell family terms over an index range");
  seq_cmd->add_option("--family", seq.family, "pell | pell-lucas | modified-pell");
  seq_cmd->add_option("--k", seq.k, "positive rational k")->required();
  seq_cmd->add_option("--from", seq.from, "first index");
  seq_cmd->add_option("--to", seq.to, "last index (inclusive)");
  seq_cmd->add_option("--format", seq.format, "plain | csv | json");

  QuatArgs quat;
  auto* quat_cmd = app.add_subcommand("quat", "dual-complex k-Pell quaternion Q(n)");
  quat_cmd->add_option("--family", quat.family, "pell | pell-lucas | modified-pell");
  quat_cmd->add_option("--k", quat.k, "positive rational k")->required();
  quat_cmd->add_option("--n", quat.n, "index")->required();
  quat_cmd->add_option("--format", quat.format, "json | plain | csv");

  IdentityArgs ident;
  auto* ident_cmd = app.add_subcommand("identity", "check one identity at one parameter tuple");
  ident_cmd->add_option("--id", ident.id, "identity tag, see 'list'")->required();
  ident_cmd->add_option("--k", ident.k, "positive rational k");
  ident_cmd->add_option("--n", ident.n, "n");
  ident_cmd->add_option("--m", ident.m, "m");
  ident_cmd->add_option("--r", ident.r, "r");
  ident_cmd->add_option("--format", ident.format, "json | plain");

  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "verify identities over a parameter grid");
  sweep_cmd->add_option("--ids", sw.ids, "'all' or comma-separated tags");
  sweep_cmd->add_option("--k", sw.k, "comma-separated positive rationals");
  sweep_cmd->add_option("--n", sw.n, "range a..b");
  sweep_cmd->add_option("--m", sw.m, "range a..b");
  sweep_cmd->add_option("--r", sw.r, "range a..b");
  sweep_cmd->add_option("--max-counterexamples", sw.max_counterexamples, "per identity");
  sweep_cmd->add_option("--threads", sw.threads, "worker threads (0 = hardware)");
  sweep_cmd->add_option("--out", sw.out_path, "write the JSON report here");
  sweep_cmd->add_option("--format", sw.format, "summary format: plain | csv | json");
  sweep_cmd->add_flag("--no-timing", sw.no_timing, "write elapsed_ms as 0");

  BinetArgs binet;
  auto* binet_cmd = app.add_subcommand("binet", "Binet evaluation checked against the recurrence");
  binet_cmd->add_option("--k", binet.k, "positive rational k")->required();
  binet_cmd->add_option("--n", binet.n, "non-negative index")->required();
  binet_cmd->add_option("--level", binet.level, "number | quaternion");
  binet_cmd->add_option("--format", binet.format, "plain | json");

  app.add_subcommand("list", "list identity tags");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (seq_cmd->parsed()) return cmd_seq(seq, out);
    if (quat_cmd->parsed()) return cmd_quat(quat, out);
    if (ident_cmd->parsed()) return cmd_identity(ident, out);
    if (sweep_cmd->parsed()) return cmd_sweep(sw, out);
    if (binet_cmd->parsed()) return cmd_binet(binet, out);
    return cmd_list(out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitUnequal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace dckpell::cli
