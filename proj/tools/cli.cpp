#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "modgroup/counting.hpp"
#include "modgroup/errors.hpp"
#include "modgroup/growth_report.hpp"
#include "modgroup/involutions.hpp"
#include "modgroup/matrix.hpp"
#include "modgroup/oracle.hpp"
#include "modgroup/validation.hpp"
#include "modgroup/word.hpp"

namespace modgroup::cli {

namespace {

struct Config {
  std::string format = "text";
  std::string out_path;
  bool hyperbolic_only = false;
  std::string ambiguous_criterion = "palindromic";
  unsigned max_oracle_t = kDefaultOracleCeiling;
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());

  std::string word;
  std::string type;
  std::uint64_t t = 0;
  std::uint64_t t_max_positional = 0;
  std::uint64_t t_max_flag = 0;

  OracleOptions oracle() const {
    OracleOptions o;
    o.hyperbolic_only = hyperbolic_only;
    o.ambiguous_criterion = *parse_ambiguous_criterion(ambiguous_criterion);
    o.max_length = max_oracle_t;
    o.workers = workers;
    return o;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Fields = std::vector<std::pair<std::string, std::string>>;

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string fixed6(double x) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << x;
  return s.str();
}

void write_fields(std::ostream& out, const Fields& fields, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json obj;
    for (const auto& [k, v] : fields) obj[k] = v;
    out << obj.dump(2) << '\n';
  } else if (format == "csv") {
    out << "field,value\n";
    for (const auto& [k, v] : fields) out << k << ',' << v << '\n';
  } else {
    std::size_t width = 0;
    for (const auto& f : fields) width = std::max(width, f.first.size());
    for (const auto& [k, v] : fields) {
      out << std::left << std::setw(static_cast<int>(width + 1)) << k + ":" << std::right << ' '
          << v << '\n';
    }
  }
}

int cmd_classify(const Config& cfg, std::ostream& out) {
  const ReducedWord w = parse_word(cfg.word);
  Fields f;
  f.emplace_back("reduced", w.empty() ? "e" : format_word(w));
  if (w.empty()) {
    f.emplace_back("identity", "the word reduces to the identity; it has no nontrivial class");
    write_fields(out, f, cfg.format);
    return kOk;
  }
  const CyclicReduction cr = cyclically_reduce(w);
  f.emplace_back("core", format_word(cr.core));
  f.emplace_back("conjugator", cr.conjugator.empty() ? "e" : format_word(cr.conjugator));

  std::optional<SignSequence> seq;
  try {
    seq = to_sign_sequence(w);
    f.emplace_back("sign_sequence", seq->to_string());
  } catch (const NotABWord& e) {
    f.emplace_back("sign_sequence", std::string("none (") + e.what() + ")");
  }

  const ProjMatrix m = word_to_matrix(w);
  const TraceClass tc = classify(m);
  f.emplace_back("matrix", m.to_json());
  f.emplace_back("trace_class", to_string(tc.kind));
  f.emplace_back("trace", tc.trace_abs.str());
  if (tc.kind == TraceKind::hyperbolic) {
    const NormLength nl = norm_and_length(m);
    f.emplace_back("norm", fixed6(nl.norm));
    f.emplace_back("length", fixed6(nl.length));
  }

  if (seq) {
    const PrimitiveRoot root = primitive_root(*seq);
    f.emplace_back("primitive", yes_no(root.exponent == 1));
    if (root.exponent != 1) {
      f.emplace_back("primitive_root", root.root.to_string() + "^" + std::to_string(root.exponent));
    }
  } else {
    f.emplace_back("primitive", "n/a");
  }

  // Word-level predicates: the class of w against the class of its image.
  for (SymmetryType type : {SymmetryType::reciprocal, SymmetryType::inert, SymmetryType::ambiguous}) {
    f.emplace_back(std::string(to_string(type)), yes_no(are_conjugate(apply_involution(type, w), w)));
  }
  if (seq) {
    f.emplace_back("palindromic_rotation", yes_no(is_ambiguous_symbolic(*seq)));
    if (const auto witness = is_inert_symbolic(*seq)) {
      f.emplace_back("inert_witness", "m=" + std::to_string(witness->antiperiod) +
                                          " (sequence length " + std::to_string(seq->size()) +
                                          ", word length " + std::to_string(2 * seq->size()) +
                                          ")");
    }
  }
  write_fields(out, f, cfg.format);
  return kOk;
}

int cmd_matrix(const Config& cfg, std::ostream& out) {
  const ProjMatrix m = word_to_matrix(parse_word(cfg.word));
  out << m.to_json() << '\n';
  return kOk;
}

std::vector<RowType> row_types(const std::string& name) {
  if (name == "all") return {std::begin(kAllRowTypes), std::end(kAllRowTypes)};
  if (const auto type = parse_row_type(name)) return {*type};
  throw UsageError("unknown type '" + name + "'");
}

void write_rows(std::ostream& out, const std::vector<GrowthRow>& rows, const std::string& format) {
  if (format == "json") {
    out << to_json(rows).dump(2) << '\n';
  } else if (format == "csv") {
    write_csv(out, rows);
  } else {
    write_text(out, rows);
  }
}

int cmd_count(const Config& cfg, std::ostream& out) {
  const auto types = row_types(cfg.type);
  auto rows = asymptotic_report(cfg.t, cfg.t, types);
  attach_oracle(rows, cfg.oracle());
  if (cfg.format != "text") {
    write_rows(out, rows, cfg.format);
    return kOk;
  }
  for (const GrowthRow& r : rows) {
    out << to_string(r.type) << '(' << r.t << ") = "
        << (r.formula ? r.formula->str() : "-") << "  [word length " << r.word_length;
    if (r.oracle) out << ", oracle " << r.oracle->str();
    if (r.ratio) out << ", ratio " << format_ratio(*r.ratio);
    if (r.bounds_ok) out << ", bounds " << (*r.bounds_ok ? "ok" : "VIOLATED");
    out << "]\n";
  }
  return kOk;
}

std::uint64_t resolve_t_max(const Config& cfg) {
  if (cfg.t_max_positional != 0 && cfg.t_max_flag != 0 && cfg.t_max_positional != cfg.t_max_flag) {
    throw UsageError("conflicting t_max values");
  }
  const std::uint64_t t_max = std::max(cfg.t_max_positional, cfg.t_max_flag);
  if (t_max == 0) throw UsageError("t_max must be a positive integer");
  return t_max;
}

int cmd_table(const Config& cfg, std::ostream& out) {
  const auto types = row_types(cfg.type);
  auto rows = asymptotic_report(1, resolve_t_max(cfg), types);
  attach_oracle(rows, cfg.oracle());
  write_rows(out, rows, cfg.format);
  return kOk;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const ValidationReport report = cross_validate(resolve_t_max(cfg), cfg.oracle());
  if (cfg.format == "json") {
    out << to_json(report).dump(2) << '\n';
  } else if (cfg.format == "csv") {
    write_csv(out, report);
  } else {
    write_text(out, report);
  }
  return report.all_ok() ? kOk : kAssertionFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Word calculus and symmetric conjugacy class counts for Z2*Z3", "modgroup-cli"};
  app.fallthrough();
  app.require_subcommand(1);

  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--out", cfg.out_path, "Write output to this file");
  app.add_flag("--hyperbolic-only", cfg.hyperbolic_only, "Drop constant-sign classes in the oracle");
  app.add_option("--ambiguous-criterion", cfg.ambiguous_criterion,
                 "Oracle criterion for ambiguous classes")
      ->check(CLI::IsMember({"palindromic", "reversal-fixed"}));
  app.add_option("--max-oracle-t", cfg.max_oracle_t,
                 "Longest sign sequence the oracle may enumerate")
      ->check(CLI::Range(1U, 63U));
  app.add_option("--workers", cfg.workers, "Oracle worker threads")->check(CLI::Range(1U, 1024U));

  auto* classify = app.add_subcommand("classify", "Describe the conjugacy class of a word");
  classify->add_option("word", cfg.word, "Word over A, B, b (b = B^-1)")->required();

  auto* matrix = app.add_subcommand("matrix", "Canonical PSL(2,Z) matrix of a word as JSON");
  matrix->add_option("word", cfg.word, "Word over A, B, b")->required();

  auto* count = app.add_subcommand("count", "Counts at a single t");
  count->add_option("type", cfg.type, "Row type or 'all'")->required();
  count->add_option("t", cfg.t, "Index t")->required()->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("table", "Growth table for t = 1..t_max");
  table->add_option("type", cfg.type, "Row type or 'all'")->required();
  table->add_option("t_max", cfg.t_max_positional, "Largest t");
  table->add_option("--t-max", cfg.t_max_flag, "Largest t");

  auto* verify = app.add_subcommand("verify", "Cross-check formulas against the oracle");
  verify->add_option("t_max", cfg.t_max_positional, "Largest t");
  verify->add_option("--t-max", cfg.t_max_flag, "Largest t");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << cfg.out_path << " for writing\n";
      return kUsage;
    }
    sink = &file;
  }

  try {
    if (classify->parsed()) return cmd_classify(cfg, *sink);
    if (matrix->parsed()) return cmd_matrix(cfg, *sink);
    if (count->parsed()) return cmd_count(cfg, *sink);
    if (table->parsed()) return cmd_table(cfg, *sink);
    if (verify->parsed()) return cmd_verify(cfg, *sink);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const InvariantViolation& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kAssertionFailed;
  }
  return kUsage;
}

}  // namespace modgroup::cli
