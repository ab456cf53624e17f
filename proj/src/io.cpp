#include "eireg/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iomanip>
#include <sstream>

namespace eireg {

namespace {

int parse_int(std::string_view token, std::string_view whole) {
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last) {
    throw Error(ErrorKind::ParseError,
                "bad number '" + std::string(token) + "' in partition '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  }
  if (compact.empty() || compact == "-") return {};

  std::vector<int> parts;
  std::string_view rest = compact;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view token = rest.substr(0, comma);
    const auto caret = token.find('^');
    const int part = parse_int(token.substr(0, caret), text);
    const int times = caret == std::string_view::npos ? 1 : parse_int(token.substr(caret + 1), text);
    if (part < 0 || times < 0) {
      throw Error(ErrorKind::ParseError, "negative entry in partition '" + std::string(text) + "'");
    }
    parts.insert(parts.end(), static_cast<std::size_t>(times), part);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

std::string format_partition(const Partition& lambda) {
  if (lambda.empty()) return "-";
  std::string out;
  const auto parts = lambda.parts();
  for (std::size_t k = 0; k < parts.size();) {
    std::size_t run = 1;
    while (k + run < parts.size() && parts[k + run] == parts[k]) ++run;
    if (!out.empty()) out += ',';
    out += std::to_string(parts[k]);
    if (run > 1) out += '^' + std::to_string(run);
    k += run;
  }
  return out;
}

std::string render_abacus(const AbacusDisplay& abacus) {
  const int e = abacus.runners();
  const int rows = abacus.top() < 0 ? 1 : abacus.top() / e + 2;
  std::string out;
  for (int row = 0; row < rows; ++row) {
    for (int runner = 0; runner < e; ++runner) out += abacus.occupied(row * e + runner) ? 'b' : 'n';
    out += '\n';
  }
  return out;
}

std::vector<std::vector<std::string>> ladder_labels(const Partition& lambda, const EiParams& p) {
  std::vector<std::vector<std::string>> rows;
  for (int a = 1; a <= lambda.length(); ++a) {
    auto& row = rows.emplace_back();
    for (int b = 1; b <= lambda.part(a); ++b) {
      const LadderKey key = ladder_key({a, b}, p);
      row.push_back(p.coprime() ? std::to_string(key.l)
                                : "<" + std::to_string(key.l) + "," + std::to_string(key.r) + ">");
    }
  }
  return rows;
}

std::string render_ladders(const Partition& lambda, const EiParams& p) {
  const auto labels = ladder_labels(lambda, p);
  std::size_t width = 0;
  for (const auto& row : labels) {
    for (const auto& label : row) width = std::max(width, label.size());
  }
  std::ostringstream out;
  for (const auto& row : labels) {
    for (std::size_t b = 0; b < row.size(); ++b) {
      if (b > 0) out << ' ';
      out << std::setw(static_cast<int>(width)) << row[b];
    }
    out << '\n';
  }
  return out.str();
}

std::string format_node(Node x) {
  return "(" + std::to_string(x.row) + "," + std::to_string(x.col) + ")";
}

nlohmann::json to_json(const LadderFingerprint& fp) {
  // std::map already iterates in (l, r) order.
  auto out = nlohmann::json::array();
  for (const auto& [key, count] : fp.counts()) {
    out.push_back({{"l", key.l}, {"r", key.r}, {"count", count}});
  }
  return out;
}

nlohmann::json to_json(const AbacusDisplay& abacus) {
  return {{"e", abacus.runners()},
          {"occupied", std::vector<int>(abacus.beads().begin(), abacus.beads().end())}};
}

nlohmann::json to_json(const PhiTrace& trace) {
  const auto t = trace.t_prefix();
  return {{"s1", trace.s1},
          {"s_list", trace.s_list},
          {"x_list", trace.x_list},
          {"b_list", trace.b_list},
          {"t_prefix", std::vector<int>(t.begin(), t.end())},
          {"c", trace.c},
          {"before", to_json(trace.before)},
          {"after", to_json(trace.after)}};
}

nlohmann::json to_json(const RegResult& result) {
  auto steps = nlohmann::json::array();
  for (const auto& step : result.steps) steps.push_back(to_json(step));
  return {{"input", format_partition(result.input)},
          {"output", format_partition(result.output)},
          {"e", result.params.e()},
          {"i", result.params.i()},
          {"steps", steps}};
}

nlohmann::json to_json(const RegClass& cls) {
  std::vector<std::string> members;
  for (const auto& m : cls.members) members.push_back(format_partition(m));
  return {{"representative", format_partition(cls.representative)},
          {"members", members},
          {"fingerprint", to_json(cls.fingerprint)}};
}

nlohmann::json to_json(const VerificationReport& report) {
  auto checks = nlohmann::json::array();
  for (const auto& check : report.checks) {
    nlohmann::json entry{{"name", check.name}, {"pass", check.passed}};
    entry["counterexample"] =
        check.counterexample ? nlohmann::json(format_partition(*check.counterexample)) : nlohmann::json();
    if (!check.detail.empty()) entry["detail"] = check.detail;
    checks.push_back(std::move(entry));
  }
  return {{"n", report.n},
          {"e", report.e},
          {"i", report.i},
          {"class_count", report.class_count},
          {"passed", report.all_passed()},
          {"checks", checks}};
}

std::string render_report(const VerificationReport& report) {
  std::ostringstream out;
  out << "n=" << report.n << " e=" << report.e << " i=" << report.i
      << " classes=" << report.class_count << '\n';
  for (const auto& check : report.checks) {
    out << "  " << std::left << std::setw(18) << check.name << (check.passed ? "pass" : "FAIL");
    if (check.counterexample) {
      out << "  " << format_partition(*check.counterexample) << "  " << check.detail;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace eireg
