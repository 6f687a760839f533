// circal command-line tool. Talks to the library exclusively through the C
// API in circal.h; file handling and output formatting live here.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "circal.h"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

constexpr const char* kUsage = R"(usage: circal [--json] <command> [arguments]

commands:
  validate FILE                     check a decomposition file, report issues
  width FILE                        circular width of the decomposition
  compare FILE1 FILE2               compare the two widths: less|equal|greater
  csum FILE1 FILE2 [--output OUT]   induced decomposition of the connected sum
  bsum FILE1 FILE2 [--output OUT]   induced closed decomposition of the
                                    boundary sum of the two exteriors
  bound csum|bsum FILE1 FILE2       width upper bound for the sum
  thin FILE [--budget N] [--output OUT] [--trace FILE]
                                    search the rewrite graph for a thinner
                                    decomposition (formal-model result)
  classify FILE                     fibered / almost-fibered / multi-stage,
                                    with structural indicators
  knot NAME --table CSV [--output OUT]
                                    canonical decomposition from a knot table

options:
  --json    machine-readable output on stdout
  --help    this text

exit status: 0 success, 1 domain error (including invalid input for
validate), 2 usage error.)";

struct Args {
  std::vector<std::string> positional;
  bool json = false;
  std::optional<std::string> output;
  std::optional<std::string> trace;
  std::optional<std::string> table;
  long budget = 10000;
  bool help = false;
};

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n" << kUsage << "\n";
  return kExitUsage;
}

int domain_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitDomain;
}

int api_error() { return domain_error(circal_last_error()); }

bool parse_args(int argc, char** argv, Args& args, std::string& problem) {
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    auto next_value = [&](const char* flag) -> std::optional<std::string> {
      if (i + 1 >= argc) {
        problem = std::string(flag) + " needs a value";
        return std::nullopt;
      }
      return std::string(argv[++i]);
    };
    if (arg == "--json") {
      args.json = true;
    } else if (arg == "--help" || arg == "-h") {
      args.help = true;
    } else if (arg == "--output") {
      if (auto v = next_value("--output")) args.output = *v; else return false;
    } else if (arg == "--trace") {
      if (auto v = next_value("--trace")) args.trace = *v; else return false;
    } else if (arg == "--table") {
      if (auto v = next_value("--table")) args.table = *v; else return false;
    } else if (arg == "--budget") {
      auto v = next_value("--budget");
      if (!v) return false;
      try {
        args.budget = std::stol(*v);
      } catch (...) {
        problem = "--budget needs an integer";
        return false;
      }
    } else if (!arg.empty() && arg[0] == '-') {
      problem = "unknown option '" + arg + "'";
      return false;
    } else {
      args.positional.push_back(arg);
    }
  }
  return true;
}

bool read_file(const std::string& path, std::string& out, std::string& problem) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    problem = "cannot read '" + path + "'";
    return false;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

bool write_file(const std::string& path, const std::string& content, std::string& problem) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) {
    problem = "cannot write '" + path + "'";
    return false;
  }
  return true;
}

struct DecompositionHandle {
  circal_decomposition* ptr = nullptr;
  DecompositionHandle() = default;
  explicit DecompositionHandle(circal_decomposition* p) : ptr(p) {}
  ~DecompositionHandle() { circal_decomposition_free(ptr); }
  DecompositionHandle(const DecompositionHandle&) = delete;
  DecompositionHandle& operator=(const DecompositionHandle&) = delete;
  DecompositionHandle(DecompositionHandle&& other) noexcept : ptr(other.ptr) { other.ptr = nullptr; }
};

bool load_decomposition(const std::string& path, DecompositionHandle& handle,
                        std::string& problem) {
  std::string text;
  if (!read_file(path, text, problem)) return false;
  circal_decomposition* raw = nullptr;
  if (circal_decomposition_parse(text.c_str(), &raw) != CIRCAL_OK) {
    problem = path + ": " + circal_last_error();
    return false;
  }
  handle.ptr = raw;
  return true;
}

std::optional<std::vector<int>> fetch_width(const circal_decomposition* d, std::string& problem) {
  size_t count = 0;
  if (circal_width(d, nullptr, 0, &count) != CIRCAL_OK) {
    problem = circal_last_error();
    return std::nullopt;
  }
  std::vector<int32_t> entries(count);
  if (circal_width(d, entries.data(), entries.size(), &count) != CIRCAL_OK) {
    problem = circal_last_error();
    return std::nullopt;
  }
  return std::vector<int>(entries.begin(), entries.end());
}

std::string width_text(const std::vector<int>& entries) {
  std::string out = "{";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries[i]);
  }
  return out + "}";
}

std::string serialize_handle(const circal_decomposition* d) {
  char* text = nullptr;
  if (circal_decomposition_serialize(d, &text) != CIRCAL_OK) return "";
  std::string out(text);
  circal_string_free(text);
  return out;
}

std::vector<std::string> provenance_of(const circal_decomposition* d) {
  std::vector<std::string> lines;
  for (size_t i = 0; i < circal_provenance_count(d); ++i)
    lines.emplace_back(circal_provenance_line(d, i));
  return lines;
}

// Shared tail for the commands that produce a decomposition: write it to
// --output or print it, and report its width.
int emit_decomposition(const Args& args, const char* command, const circal_decomposition* d,
                       json extra = json::object()) {
  std::string problem;
  auto w = fetch_width(d, problem);
  if (!w) return domain_error(problem);
  std::string text = serialize_handle(d);
  if (args.output && !write_file(*args.output, text, problem)) return domain_error(problem);

  if (args.json) {
    json out = {{"command", command}, {"width", *w}, {"provenance", provenance_of(d)}};
    if (args.output)
      out["output"] = *args.output;
    else
      out["decomposition"] = text;
    out.update(extra);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  for (auto& [key, value] : extra.items()) {
    if (value.is_string())
      std::cout << key << " " << value.get<std::string>() << "\n";
    else
      std::cout << key << " " << value.dump() << "\n";
  }
  std::cout << "width " << width_text(*w) << "\n";
  if (args.output)
    std::cout << "wrote " << *args.output << "\n";
  else
    std::cout << text;
  return kExitOk;
}

int cmd_validate(const Args& args) {
  if (args.positional.size() != 2) return usage_error("validate needs one file");
  DecompositionHandle d;
  std::string problem;
  if (!load_decomposition(args.positional[1], d, problem)) return domain_error(problem);

  circal_report* report = nullptr;
  if (circal_validate(d.ptr, &report) != CIRCAL_OK) return api_error();
  bool valid = circal_report_valid(report) != 0;
  std::vector<std::string> errors, warnings;
  for (size_t i = 0; i < circal_report_error_count(report); ++i)
    errors.emplace_back(circal_report_error(report, i));
  for (size_t i = 0; i < circal_report_warning_count(report); ++i)
    warnings.emplace_back(circal_report_warning(report, i));
  circal_report_free(report);

  if (args.json) {
    json out = {{"command", "validate"},
                {"valid", valid},
                {"errors", errors},
                {"warnings", warnings}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (valid ? "valid" : "invalid") << "\n";
    for (const auto& e : errors) std::cout << "error: " << e << "\n";
    for (const auto& w : warnings) std::cout << "warning: " << w << "\n";
  }
  return valid ? kExitOk : kExitDomain;
}

int cmd_width(const Args& args) {
  if (args.positional.size() != 2) return usage_error("width needs one file");
  DecompositionHandle d;
  std::string problem;
  if (!load_decomposition(args.positional[1], d, problem)) return domain_error(problem);
  auto w = fetch_width(d.ptr, problem);
  if (!w) return domain_error(problem);
  if (args.json)
    std::cout << json{{"command", "width"}, {"width", *w}}.dump(2) << "\n";
  else
    std::cout << width_text(*w) << "\n";
  return kExitOk;
}

int cmd_compare(const Args& args) {
  if (args.positional.size() != 3) return usage_error("compare needs two files");
  DecompositionHandle a, b;
  std::string problem;
  if (!load_decomposition(args.positional[1], a, problem)) return domain_error(problem);
  if (!load_decomposition(args.positional[2], b, problem)) return domain_error(problem);
  auto wa = fetch_width(a.ptr, problem);
  if (!wa) return domain_error(problem);
  auto wb = fetch_width(b.ptr, problem);
  if (!wb) return domain_error(problem);

  std::vector<int32_t> ea(wa->begin(), wa->end()), eb(wb->begin(), wb->end());
  int cmp = circal_compare_width(ea.data(), ea.size(), eb.data(), eb.size());
  const char* verdict = cmp < 0 ? "less" : cmp > 0 ? "greater" : "equal";
  if (args.json)
    std::cout << json{{"command", "compare"}, {"order", verdict}}.dump(2) << "\n";
  else
    std::cout << verdict << "\n";
  return kExitOk;
}

int cmd_sum(const Args& args, bool boundary) {
  const char* name = boundary ? "bsum" : "csum";
  if (args.positional.size() != 3)
    return usage_error(std::string(name) + " needs two files");
  DecompositionHandle a, b;
  std::string problem;
  if (!load_decomposition(args.positional[1], a, problem)) return domain_error(problem);
  if (!load_decomposition(args.positional[2], b, problem)) return domain_error(problem);

  circal_decomposition* raw = nullptr;
  circal_status rc = boundary
                         ? circal_boundary_sum(a.ptr, b.ptr, args.positional[1].c_str(),
                                               args.positional[2].c_str(), &raw)
                         : circal_connected_sum(a.ptr, b.ptr, args.positional[1].c_str(),
                                                args.positional[2].c_str(), &raw);
  if (rc != CIRCAL_OK) return api_error();
  DecompositionHandle out(raw);
  return emit_decomposition(args, name, out.ptr);
}

int cmd_bound(const Args& args) {
  if (args.positional.size() != 4 ||
      (args.positional[1] != "csum" && args.positional[1] != "bsum"))
    return usage_error("bound needs csum|bsum and two files");
  bool boundary = args.positional[1] == "bsum";
  DecompositionHandle a, b;
  std::string problem;
  if (!load_decomposition(args.positional[2], a, problem)) return domain_error(problem);
  if (!load_decomposition(args.positional[3], b, problem)) return domain_error(problem);

  size_t count = 0;
  circal_status rc = boundary ? circal_bound_bsum(a.ptr, b.ptr, nullptr, 0, &count)
                              : circal_bound_csum(a.ptr, b.ptr, nullptr, 0, &count);
  if (rc != CIRCAL_OK) return api_error();
  std::vector<int32_t> entries(count);
  rc = boundary ? circal_bound_bsum(a.ptr, b.ptr, entries.data(), entries.size(), &count)
                : circal_bound_csum(a.ptr, b.ptr, entries.data(), entries.size(), &count);
  if (rc != CIRCAL_OK) return api_error();
  std::vector<int> bound(entries.begin(), entries.end());

  if (args.json)
    std::cout << json{{"command", "bound"}, {"kind", args.positional[1]}, {"bound", bound}}.dump(2)
              << "\n";
  else
    std::cout << width_text(bound) << "\n";
  return kExitOk;
}

int cmd_thin(const Args& args) {
  if (args.positional.size() != 2) return usage_error("thin needs one file");
  DecompositionHandle d;
  std::string problem;
  if (!load_decomposition(args.positional[1], d, problem)) return domain_error(problem);
  auto initial = fetch_width(d.ptr, problem);
  if (!initial) return domain_error(problem);

  circal_decomposition* raw_best = nullptr;
  char* raw_trace = nullptr;
  int64_t nodes = 0;
  int exhausted = 0;
  if (circal_thin_search(d.ptr, args.budget, &raw_best, &raw_trace, &nodes, &exhausted) !=
      CIRCAL_OK)
    return api_error();
  DecompositionHandle best(raw_best);
  std::string trace(raw_trace ? raw_trace : "");
  circal_string_free(raw_trace);

  if (args.trace && !write_file(*args.trace, trace, problem)) return domain_error(problem);

  std::vector<std::string> trace_lines;
  std::istringstream stream(trace);
  for (std::string line; std::getline(stream, line);) trace_lines.push_back(line);

  json extra = {{"label", "formal-model result"},
                {"initial-width", *initial},
                {"nodes-expanded", nodes},
                {"exhausted", exhausted != 0}};
  if (!args.json) {
    std::cout << "formal-model result (certifies the rewrite graph only)\n"
              << "initial-width " << width_text(*initial) << "\n"
              << "nodes-expanded " << nodes << "\n"
              << "exhausted " << (exhausted ? "yes" : "no") << "\n";
    if (!args.trace)
      for (const auto& line : trace_lines) std::cout << "rewrite " << line << "\n";
    else
      std::cout << "trace " << *args.trace << "\n";
    auto w = fetch_width(best.ptr, problem);
    if (!w) return domain_error(problem);
    std::cout << "width " << width_text(*w) << "\n";
    if (args.output) {
      if (!write_file(*args.output, serialize_handle(best.ptr), problem))
        return domain_error(problem);
      std::cout << "wrote " << *args.output << "\n";
    }
    return kExitOk;
  }
  extra["trace"] = trace_lines;
  return emit_decomposition(args, "thin", best.ptr, extra);
}

int cmd_classify(const Args& args) {
  if (args.positional.size() != 2) return usage_error("classify needs one file");
  DecompositionHandle d;
  std::string problem;
  if (!load_decomposition(args.positional[1], d, problem)) return domain_error(problem);
  circal_classification c;
  if (circal_classify(d.ptr, 0, &c) != CIRCAL_OK) return api_error();

  if (args.json) {
    json out = {{"command", "classify"},
                {"form", circal_form_name(c.form)},
                {"closed-thin-component", c.closed_thin_component != 0},
                {"multiple-thin-surfaces", c.multiple_thin_surfaces != 0},
                {"locally-thin-asserted", c.locally_thin_asserted != 0}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "form " << circal_form_name(c.form) << "\n"
              << "closed-thin-component " << (c.closed_thin_component ? "yes" : "no") << "\n"
              << "multiple-thin-surfaces " << (c.multiple_thin_surfaces ? "yes" : "no") << "\n"
              << "locally-thin-asserted " << (c.locally_thin_asserted ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_knot(const Args& args) {
  if (args.positional.size() != 2) return usage_error("knot needs a name");
  if (!args.table) return usage_error("knot needs --table CSV");
  std::string csv, problem;
  if (!read_file(*args.table, csv, problem)) return domain_error(problem);

  circal_knot_table* table = nullptr;
  if (circal_knot_table_parse(csv.c_str(), &table) != CIRCAL_OK)
    return domain_error(*args.table + ": " + circal_last_error());
  circal_decomposition* raw = nullptr;
  circal_status rc = circal_knot_decomposition(table, args.positional[1].c_str(), &raw);
  circal_knot_table_free(table);
  if (rc != CIRCAL_OK) return api_error();
  DecompositionHandle d(raw);
  return emit_decomposition(args, "knot", d.ptr, {{"name", args.positional[1]}});
}

}  // namespace

int main(int argc, char** argv) {
  Args args;
  std::string problem;
  if (!parse_args(argc, argv, args, problem)) return usage_error(problem);
  if (args.help) {
    std::cout << kUsage << "\n";
    return kExitOk;
  }
  if (args.positional.empty()) return usage_error("missing command");

  const std::string& command = args.positional[0];
  if (command == "validate") return cmd_validate(args);
  if (command == "width") return cmd_width(args);
  if (command == "compare") return cmd_compare(args);
  if (command == "csum") return cmd_sum(args, false);
  if (command == "bsum") return cmd_sum(args, true);
  if (command == "bound") return cmd_bound(args);
  if (command == "thin") return cmd_thin(args);
  if (command == "classify") return cmd_classify(args);
  if (command == "knot") return cmd_knot(args);
  return usage_error("unknown command '" + command + "'");
}
