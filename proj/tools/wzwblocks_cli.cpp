// Command-line front end. Everything goes through the C API in
// wzwblocks.h; this translation unit never touches the C++ core directly.

#include <wzwblocks.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

// Integers above 2^53 lose precision in common JSON consumers, so they are
// serialized as decimal strings instead.
constexpr int64_t kJsonIntLimit = int64_t(1) << 53;

struct OwnedStr {
  char* ptr = nullptr;
  OwnedStr() = default;
  OwnedStr(const OwnedStr&) = delete;
  OwnedStr& operator=(const OwnedStr&) = delete;
  ~OwnedStr() { wzw_string_free(ptr); }
  char** out() { return &ptr; }
  std::string str() const { return ptr == nullptr ? std::string() : std::string(ptr); }
};

struct ReportHandle {
  wzw_report* ptr = nullptr;
  ReportHandle() = default;
  ReportHandle(const ReportHandle&) = delete;
  ReportHandle& operator=(const ReportHandle&) = delete;
  ~ReportHandle() { wzw_report_free(ptr); }
};

struct SelfcheckHandle {
  wzw_selfcheck* ptr = nullptr;
  SelfcheckHandle() = default;
  SelfcheckHandle(const SelfcheckHandle&) = delete;
  SelfcheckHandle& operator=(const SelfcheckHandle&) = delete;
  ~SelfcheckHandle() { wzw_selfcheck_free(ptr); }
};

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  return Format::Text;
}

bool parse_int64(std::string_view text, int64_t& out) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

// "a,b" with either part possibly negative.
bool parse_pair(const std::string& text, int64_t& a, int64_t& b) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return false;
  return parse_int64(std::string_view(text).substr(0, comma), a) &&
         parse_int64(std::string_view(text).substr(comma + 1), b);
}

struct Range {
  int64_t lo = 0;
  int64_t hi = 0;
};

// "lo..hi" or a single value.
bool parse_range(const std::string& text, Range& out) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    if (!parse_int64(text, out.lo)) return false;
    out.hi = out.lo;
    return true;
  }
  return parse_int64(std::string_view(text).substr(0, dots), out.lo) &&
         parse_int64(std::string_view(text).substr(dots + 2), out.hi);
}

ordered_json json_integer(const std::string& decimal) {
  int64_t value = 0;
  if (parse_int64(decimal, value) && value <= kJsonIntLimit && value >= -kJsonIntLimit) {
    return value;
  }
  return decimal;
}

const char* hint_name(wzw_hint hint) {
  switch (hint) {
    case WZW_HINT_YES:
      return "yes";
    case WZW_HINT_NO:
      return "no";
    default:
      return "unknown";
  }
}

const char* bool_name(bool value) { return value ? "true" : "false"; }

std::string csv_quote(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char ch : value) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) line += ',';
    line += csv_quote(cells[i]);
  }
  line += '\n';
  return line;
}

std::string text_table(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) widths[i] = header[i].size();
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << "  ";
      out << row[i] << std::string(widths[i] - row[i].size(), ' ');
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out.str();
}

// Validation failures carry a machine-readable reason in every format.
int render_failure(Format format, const std::string& reason, const std::string& message) {
  switch (format) {
    case Format::Json: {
      ordered_json out;
      out["reason"] = reason;
      out["message"] = message;
      std::cout << out.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      std::cout << "reason,message\n" << csv_line({reason, message});
      break;
    case Format::Text:
      std::cout << "error: " << reason << "\n  " << message << '\n';
      break;
  }
  return kExitUsage;
}

int render_status(Format format, wzw_status status) {
  const std::string message = wzw_last_error();
  if (status == WZW_ERR_INTERNAL) {
    std::cerr << "internal error: " << message << '\n';
    return kExitInternal;
  }
  return render_failure(format, wzw_status_name(status), message);
}

bool write_output(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return true;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) return false;
  file << content;
  file.flush();
  return static_cast<bool>(file);
}

// Fully rendered single-run record, shared by `dim` and `scan`.
struct ReportView {
  int64_t e = 0;
  int64_t c = 0;
  int64_t a = 0;
  int64_t b = 0;
  bool parity = false;
  bool stable = false;
  std::string smooth_hint;
  std::string genus;
  // Empty when the row was skipped before the pipeline ran.
  std::string n, d1, d2, ell, m_closed, m_grr, dim;
  std::string skip_reason;

  bool computed() const { return skip_reason.empty(); }
};

std::optional<ReportView> view_from_handles(int64_t e, int64_t c, int64_t a, int64_t b,
                                            const wzw_report* report) {
  ReportView view;
  view.e = e;
  view.c = c;
  view.a = a;
  view.b = b;
  view.parity = true;
  view.stable = true;
  wzw_hint hint = WZW_HINT_UNKNOWN;
  if (wzw_report_smooth_hint(report, &hint) != WZW_OK) return std::nullopt;
  view.smooth_hint = hint_name(hint);
  const std::pair<wzw_report_field, std::string*> fields[] = {
      {WZW_FIELD_GENUS, &view.genus},   {WZW_FIELD_N, &view.n},
      {WZW_FIELD_D1, &view.d1},         {WZW_FIELD_D2, &view.d2},
      {WZW_FIELD_ELL, &view.ell},       {WZW_FIELD_M_CLOSED, &view.m_closed},
      {WZW_FIELD_M_GRR, &view.m_grr},   {WZW_FIELD_DIM, &view.dim},
  };
  for (const auto& [field, slot] : fields) {
    OwnedStr value;
    if (wzw_report_value(report, field, value.out()) != WZW_OK) return std::nullopt;
    *slot = value.str();
  }
  return view;
}

// Lattice-level facts are still reported for rows the pipeline skipped.
std::optional<ReportView> view_skipped(int64_t e, int64_t c, int64_t a, int64_t b,
                                       const std::string& reason) {
  ReportView view;
  view.e = e;
  view.c = c;
  view.a = a;
  view.b = b;
  view.skip_reason = reason;
  int parity = 0;
  int stable = 0;
  wzw_hint hint = WZW_HINT_UNKNOWN;
  OwnedStr genus;
  if (wzw_parity_ok(e, a, b, &parity) != WZW_OK) return std::nullopt;
  if (wzw_check_stability(e, c, &stable) != WZW_OK) return std::nullopt;
  if (wzw_smooth_member_hint(e, a, b, &hint) != WZW_OK) return std::nullopt;
  if (wzw_adjunction_genus(e, a, b, genus.out()) != WZW_OK) return std::nullopt;
  view.parity = parity != 0;
  view.stable = stable != 0;
  view.smooth_hint = hint_name(hint);
  view.genus = genus.str();
  return view;
}

const std::vector<std::string>& table_header() {
  static const std::vector<std::string> header = {"e", "c", "a",     "b", "parity", "stable",
                                                  "smooth_hint", "genus", "n", "ell", "m", "dim"};
  return header;
}

std::vector<std::string> table_row(const ReportView& view) {
  return {std::to_string(view.e),
          std::to_string(view.c),
          std::to_string(view.a),
          std::to_string(view.b),
          bool_name(view.parity),
          bool_name(view.stable),
          view.smooth_hint,
          view.genus,
          view.n,
          view.ell,
          view.m_closed,
          view.dim};
}

ordered_json report_json(const ReportView& view) {
  ordered_json out;
  out["e"] = json_integer(std::to_string(view.e));
  out["c"] = json_integer(std::to_string(view.c));
  out["a"] = json_integer(std::to_string(view.a));
  out["b"] = json_integer(std::to_string(view.b));
  out["parity"] = view.parity;
  out["stable"] = view.stable;
  out["smooth_hint"] = view.smooth_hint;
  out["genus"] = json_integer(view.genus);
  if (view.computed()) {
    out["n"] = json_integer(view.n);
    out["d1"] = json_integer(view.d1);
    out["d2"] = json_integer(view.d2);
    out["ell"] = json_integer(view.ell);
    out["m_closed"] = json_integer(view.m_closed);
    out["m_grr"] = json_integer(view.m_grr);
    out["dim"] = json_integer(view.dim);
  } else {
    out["skip_reason"] = view.skip_reason;
  }
  return out;
}

int run_dim(int64_t e, int64_t c, const std::string& curve, Format format) {
  int64_t a = 0;
  int64_t b = 0;
  if (!parse_pair(curve, a, b)) {
    return render_failure(format, "invalid", "curve must be 'a,b' with integer entries");
  }
  ReportHandle handle;
  const wzw_status status = wzw_report_compute(e, c, a, b, &handle.ptr);
  if (status != WZW_OK) return render_status(format, status);
  const auto view = view_from_handles(e, c, a, b, handle.ptr);
  if (!view) {
    std::cerr << "internal error: " << wzw_last_error() << '\n';
    return kExitInternal;
  }
  switch (format) {
    case Format::Json:
      std::cout << report_json(*view).dump(2) << '\n';
      break;
    case Format::Csv:
      std::cout << csv_line(table_header()) << csv_line(table_row(*view));
      break;
    case Format::Text: {
      const auto& v = *view;
      std::cout << "e           = " << v.e << '\n'
                << "c           = " << v.c << '\n'
                << "curve       = (" << v.a << "," << v.b << ")\n"
                << "parity      = " << bool_name(v.parity) << '\n'
                << "stable      = " << bool_name(v.stable) << '\n'
                << "smooth_hint = " << v.smooth_hint << '\n'
                << "genus       = " << v.genus << '\n'
                << "n           = " << v.n << '\n'
                << "d1          = " << v.d1 << '\n'
                << "d2          = " << v.d2 << '\n'
                << "ell         = " << v.ell << '\n'
                << "m_closed    = " << v.m_closed << '\n'
                << "m_grr       = " << v.m_grr << '\n'
                << "dim         = " << v.dim << '\n';
      break;
    }
  }
  return kExitOk;
}

int run_cohom(int64_t e, const std::string& divisor, Format format) {
  int64_t a = 0;
  int64_t b = 0;
  if (!parse_pair(divisor, a, b)) {
    return render_failure(format, "invalid", "divisor must be 'a,b' with integer entries");
  }
  OwnedStr h0, h1, h2, chi;
  wzw_status status = wzw_cohomology_table(e, a, b, h0.out(), h1.out(), h2.out());
  if (status == WZW_OK) status = wzw_chi_rr(e, a, b, chi.out());
  if (status != WZW_OK) return render_status(format, status);
  switch (format) {
    case Format::Json: {
      ordered_json out;
      out["e"] = json_integer(std::to_string(e));
      out["a"] = json_integer(std::to_string(a));
      out["b"] = json_integer(std::to_string(b));
      out["h0"] = json_integer(h0.str());
      out["h1"] = json_integer(h1.str());
      out["h2"] = json_integer(h2.str());
      out["chi"] = json_integer(chi.str());
      std::cout << out.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      std::cout << "e,a,b,h0,h1,h2,chi\n"
                << csv_line({std::to_string(e), std::to_string(a), std::to_string(b), h0.str(),
                             h1.str(), h2.str(), chi.str()});
      break;
    case Format::Text:
      std::cout << "divisor = (" << a << "," << b << ") on F_" << e << '\n'
                << "h0      = " << h0.str() << '\n'
                << "h1      = " << h1.str() << '\n'
                << "h2      = " << h2.str() << '\n'
                << "chi     = " << chi.str() << '\n';
      break;
  }
  return kExitOk;
}

int run_scan(const Range& e_range, const Range& c_range, const Range& a_range,
             const Range& b_range, bool skip_invalid, Format format,
             const std::string& out_path) {
  for (const Range* range : {&e_range, &c_range, &a_range, &b_range}) {
    if (range->lo > range->hi) {
      return render_failure(format, "invalid", "empty range: lower bound exceeds upper bound");
    }
  }
  if (e_range.lo < 0) return render_failure(format, "invalid", "scan needs e >= 0");
  if (c_range.lo < 1) return render_failure(format, "invalid", "scan needs c >= 1");

  std::vector<ReportView> rows;
  for (int64_t e = e_range.lo; e <= e_range.hi; ++e) {
    for (int64_t c = c_range.lo; c <= c_range.hi; ++c) {
      for (int64_t a = a_range.lo; a <= a_range.hi; ++a) {
        for (int64_t b = b_range.lo; b <= b_range.hi; ++b) {
          int parity = 0;
          if (wzw_parity_ok(e, a, b, &parity) != WZW_OK) {
            std::cerr << "internal error: " << wzw_last_error() << '\n';
            return kExitInternal;
          }
          std::optional<ReportView> view;
          if (parity != 0) {
            ReportHandle handle;
            const wzw_status status = wzw_report_compute(e, c, a, b, &handle.ptr);
            if (status == WZW_OK) {
              view = view_from_handles(e, c, a, b, handle.ptr);
            } else if (status == WZW_ERR_PARITY || status == WZW_ERR_STABILITY) {
              view = view_skipped(e, c, a, b, wzw_status_name(status));
            } else {
              return render_status(format, status);
            }
          } else {
            view = view_skipped(e, c, a, b, "parity");
          }
          if (!view) {
            std::cerr << "internal error: " << wzw_last_error() << '\n';
            return kExitInternal;
          }
          if (!view->computed() && skip_invalid) continue;
          rows.push_back(std::move(*view));
        }
      }
    }
  }

  std::string content;
  switch (format) {
    case Format::Json: {
      ordered_json out = ordered_json::array();
      for (const auto& row : rows) out.push_back(report_json(row));
      content = out.dump(2) + '\n';
      break;
    }
    case Format::Csv: {
      content = csv_line(table_header());
      for (const auto& row : rows) content += csv_line(table_row(row));
      break;
    }
    case Format::Text: {
      std::vector<std::vector<std::string>> cells;
      cells.reserve(rows.size());
      for (const auto& row : rows) cells.push_back(table_row(row));
      content = text_table(table_header(), cells);
      break;
    }
  }
  if (!write_output(content, out_path)) {
    std::cerr << "cannot write " << out_path << '\n';
    return kExitIo;
  }
  return kExitOk;
}

int run_verify(int32_t grid) {
  SelfcheckHandle handle;
  const wzw_status status = wzw_selfcheck_run(grid, &handle.ptr);
  if (status != WZW_OK) return render_status(Format::Text, status);
  const int32_t suites = wzw_selfcheck_suite_count(handle.ptr);
  std::vector<std::vector<std::string>> rows;
  for (int32_t i = 0; i < suites; ++i) {
    rows.push_back({wzw_selfcheck_suite_name(handle.ptr, i),
                    std::to_string(wzw_selfcheck_suite_cases(handle.ptr, i)),
                    std::to_string(wzw_selfcheck_suite_failures(handle.ptr, i))});
  }
  std::cout << text_table({"suite", "cases", "failures"}, rows);
  bool passed = wzw_selfcheck_passed(handle.ptr) != 0;
  if (!passed) {
    for (int32_t i = 0; i < suites; ++i) {
      const int32_t count = wzw_selfcheck_counterexample_count(handle.ptr, i);
      for (int32_t j = 0; j < count; ++j) {
        std::cout << "counterexample [" << wzw_selfcheck_suite_name(handle.ptr, i)
                  << "] " << wzw_selfcheck_counterexample(handle.ptr, i, j) << '\n';
      }
    }
    std::cout << "FAILED (grid " << grid << ")\n";
    return kExitInternal;
  }
  std::cout << "all suites passed (grid " << grid << ")\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact conformal-block dimensions for rank-2 bundles on ruled surfaces"};
  app.require_subcommand(1);

  std::string format_name = "text";
  const auto format_validator = CLI::IsMember({"text", "csv", "json"});

  // dim
  int64_t dim_e = 0;
  int64_t dim_c = 0;
  std::string dim_curve;
  auto* dim = app.add_subcommand("dim", "Dimension of the space of conformal blocks");
  dim->add_option("--e", dim_e, "surface invariant e = -Sigma^2 (>= 0)")->required();
  dim->add_option("--c", dim_c, "second Chern class c2")->required();
  dim->add_option("--curve", dim_curve, "curve class 'a,b' meaning a*Sigma + b*f")->required();
  dim->add_option("--format", format_name, "output format")->check(format_validator);

  // cohom
  int64_t cohom_e = 0;
  std::string cohom_divisor;
  auto* cohom = app.add_subcommand("cohom", "Cohomology of a line bundle O(a*Sigma + b*f)");
  cohom->add_option("--e", cohom_e, "surface invariant e = -Sigma^2 (>= 0)")->required();
  cohom->add_option("--divisor", cohom_divisor, "divisor class 'a,b'")->required();
  cohom->add_option("--format", format_name, "output format")->check(format_validator);

  // scan
  std::string scan_e = "0..2";
  std::string scan_c = "1..3";
  std::string scan_a = "0..3";
  std::string scan_b = "-3..3";
  bool skip_invalid = true;
  std::string out_path;
  auto* scan = app.add_subcommand("scan", "Tabulate the pipeline over parameter ranges");
  scan->add_option("--e", scan_e, "range for e, 'lo..hi' or a single value");
  scan->add_option("--c", scan_c, "range for c (c >= 1)");
  scan->add_option("--a", scan_a, "range for the Sigma-coefficient of C");
  scan->add_option("--b", scan_b, "range for the f-coefficient of C");
  scan->add_option("--skip-invalid", skip_invalid,
                   "drop rows failing parity/stability instead of flagging them");
  scan->add_option("--format", format_name, "output format")->check(format_validator);
  scan->add_option("--out", out_path, "write the table to a file instead of stdout");

  // verify
  int32_t grid = 4;
  auto* verify = app.add_subcommand("verify", "Run the self-verification suites");
  verify->add_option("--grid", grid, "grid size scaling every suite (>= 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Format format = parse_format(format_name);
  if (dim->parsed()) return run_dim(dim_e, dim_c, dim_curve, format);
  if (cohom->parsed()) return run_cohom(cohom_e, cohom_divisor, format);
  if (verify->parsed()) return run_verify(grid);

  Range e_range, c_range, a_range, b_range;
  if (!parse_range(scan_e, e_range) || !parse_range(scan_c, c_range) ||
      !parse_range(scan_a, a_range) || !parse_range(scan_b, b_range)) {
    return render_failure(format, "invalid", "ranges must be 'lo..hi' or a single integer");
  }
  return run_scan(e_range, c_range, a_range, b_range, skip_invalid, format, out_path);
}
