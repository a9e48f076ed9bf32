#include "partlab/partlab.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace partlab;
using json = nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kCap = 3 };

enum class Format { Text, Csv, Json };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, sep);) parts.push_back(part);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

int to_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw UsageError("bad " + what + " '" + s + "'");
  }
  if (used != s.size()) throw UsageError("bad " + what + " '" + s + "'");
  return value;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = to_int(text, "index");
    return {n, n};
  }
  const int lo = to_int(text.substr(0, dots), "range start");
  const int hi = to_int(text.substr(dots + 2), "range end");
  if (lo < 0 || hi < lo) throw UsageError("empty or negative range '" + text + "'");
  return {lo, hi};
}

void require_brute(int n) {
  if (n > max_brute_n()) {
    throw CapExceeded("n=" + std::to_string(n) + " exceeds the brute-force cap of " + std::to_string(max_brute_n()),
                      max_brute_n());
  }
}

// ---- count ----

struct Sequence {
  std::string kind;  // f, d2, e3, bell, p, h, stirling1, stirling2
  int a = 0;
  int b = 0;
  std::string name;
};

Sequence parse_sequence(const std::string& token) {
  const auto parts = split(token, ':');
  Sequence s;
  s.kind = parts[0];
  s.name = token;
  auto arity = [&](std::size_t expected) {
    if (parts.size() != expected + 1) {
      throw UsageError("sequence '" + s.kind + "' takes " + std::to_string(expected) + " parameter(s)");
    }
  };
  if (s.kind == "f") {
    arity(1);
    s.a = to_int(parts[1], "k");
    if (s.a < 2) throw UsageError("f:k needs k >= 2");
  } else if (s.kind == "p") {
    arity(1);
    s.a = to_int(parts[1], "m");
    if (s.a < 0) throw UsageError("p:m needs m >= 0");
  } else if (s.kind == "h") {
    arity(2);
    s.a = to_int(parts[1], "k");
    s.b = to_int(parts[2], "j");
    if (s.a < 2 || s.b < 1 || s.b > s.a - 1) throw UsageError("h:k:j needs k >= 2 and 1 <= j <= k-1");
  } else if (s.kind == "stirling1" || s.kind == "stirling2") {
    arity(1);
    s.a = to_int(parts[1], "k");
    if (s.a < 0) throw UsageError(s.kind + ":k needs k >= 0");
  } else if (s.kind == "d2" || s.kind == "e3" || s.kind == "bell") {
    arity(0);
  } else {
    throw UsageError("unknown sequence '" + token + "' (f:k, d2, e3, bell, p:m, h:k:j, stirling1:k, stirling2:k)");
  }
  return s;
}

BigInt recurrence_value(const Sequence& s, int n) {
  if (s.kind == "f") return f_k(s.a, n);
  if (s.kind == "d2") return d2(n);
  if (s.kind == "e3") return e3(n);
  if (s.kind == "bell") return bell(n);
  if (s.kind == "p") return n < s.a ? BigInt(0) : p_heads(s.a, n);
  if (s.kind == "h") return n < s.b ? BigInt(0) : h_k(s.a, s.b, n);
  if (s.kind == "stirling1") return n < s.a ? BigInt(0) : stirling1(n, s.a);
  return n < s.a ? BigInt(0) : stirling2(n, s.a);
}

std::vector<BigInt> gf_values(const Sequence& s, int hi) {
  std::vector<BigInt> out;
  if (s.kind == "f") return integer_coefficients(gf_fk(s.a, hi));
  if (s.kind == "d2") return integer_coefficients(gf_d2(hi));
  if (s.kind == "e3") return integer_coefficients(gf_e3(hi));
  if (s.kind == "bell" || s.kind == "p") {
    const int m = s.kind == "p" ? s.a : 0;
    const auto egf = egf_p_heads(m, std::max(hi - m, 0));
    for (int n = 0; n <= hi; ++n) {
      if (n < m) {
        out.emplace_back(0);
        continue;
      }
      const Rational c = egf[n - m] * Rational(factorial(n - m));
      out.push_back(boost::multiprecision::numerator(c));
    }
    return out;
  }
  throw UsageError("no generating function for '" + s.name + "'; use --method recurrence or brute");
}

bool brute_member(const Sequence& s, const SetPartition& p, const std::optional<PatternWord>& tau) {
  auto first_heads = [&](int m) {
    for (int i = 1; i <= std::min(m, p.size()); ++i) {
      if (!p.is_head(i)) return false;
    }
    return true;
  };
  if (s.kind == "f") return avoids(p, *tau);
  if (s.kind == "d2") return dcr(p, 2) == 0;
  if (s.kind == "e3") return dcr(p, 3) == 0;
  if (s.kind == "bell") return true;
  if (s.kind == "p") return first_heads(s.a);
  if (s.kind == "h") return fcr(p, s.a) == 0 && first_heads(s.b);
  return p.block_count() == s.a;
}

BigInt brute_value(const Sequence& s, int n, int jobs) {
  if (s.kind == "stirling1") throw UsageError("stirling1 has no partition model; use --method recurrence");
  require_brute(n);
  if ((s.kind == "p" && n < s.a) || (s.kind == "h" && n < s.b)) return 0;
  std::optional<PatternWord> tau;
  if (s.kind == "f") tau = front_crossing_pattern(s.a);
  const auto total = sweep<std::uint64_t>(
      n, jobs, [&](std::uint64_t& acc, const SetPartition& p) { acc += brute_member(s, p, tau) ? 1 : 0; },
      [](std::uint64_t& acc, std::uint64_t shard) { acc += shard; });
  return BigInt(total);
}

int cmd_count(const std::string& token, const std::string& range, const std::string& method, Format format,
              int jobs) {
  const auto s = parse_sequence(token);
  const auto [lo, hi] = parse_range(range);
  if (lo < 0) throw UsageError("negative index");
  std::vector<BigInt> values;
  if (method == "gf") {
    if (hi > bound_cap(BoundKind::Series)) {
      throw CapExceeded("series order " + std::to_string(hi) + " exceeds the cap of " +
                            std::to_string(bound_cap(BoundKind::Series)),
                        bound_cap(BoundKind::Series));
    }
    const auto all = gf_values(s, hi);
    values.assign(all.begin() + lo, all.begin() + hi + 1);
  } else {
    if (method == "brute") require_brute(hi);
    for (int n = lo; n <= hi; ++n) {
      values.push_back(method == "brute" ? brute_value(s, n, jobs) : recurrence_value(s, n));
    }
  }

  if (format == Format::Json) {
    json rows = json::array();
    for (int n = lo; n <= hi; ++n) rows.push_back({{"n", n}, {"value", values[n - lo].str()}});
    std::cout << json{{"sequence", token}, {"method", method}, {"values", rows}}.dump(2) << "\n";
  } else if (format == Format::Csv) {
    std::cout << "n,value\n";
    for (int n = lo; n <= hi; ++n) std::cout << n << "," << values[n - lo] << "\n";
  } else {
    for (int n = lo; n <= hi; ++n) std::cout << (n == lo ? "" : ",") << values[n - lo];
    std::cout << "\n";
  }
  return kPass;
}

// ---- verify ----

json report_json(const VerificationReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  json j{{"check", r.check},  {"title", r.title},     {"parameters", params},
         {"status", r.passed ? "pass" : "fail"}, {"seconds", r.seconds}, {"details", r.details}};
  j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
  return j;
}

int cmd_verify(const std::vector<std::string>& tokens, std::optional<int> bound, Format format, int jobs) {
  std::vector<const CheckSpec*> specs;
  for (const auto& t : tokens) {
    if (t == "all") {
      for (const auto& spec : check_registry()) specs.push_back(&spec);
      continue;
    }
    const auto* spec = find_check(t);
    if (!spec) {
      std::string known;
      for (const auto& s : check_registry()) known += " " + std::string(s.token);
      throw UsageError("unknown check '" + t + "'; known:" + known);
    }
    specs.push_back(spec);
  }
  std::vector<VerificationReport> reports;
  for (const auto* spec : specs) {
    try {
      reports.push_back(run_check(*spec, bound, jobs));
    } catch (const CapExceeded&) {
      throw;
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    const auto& r = reports.back();
    if (format == Format::Text) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.check;
      for (const auto& [k, v] : r.parameters) {
        if (k != "jobs") std::cout << " " << k << "=" << v;
      }
      std::cout << " (" << r.seconds << " s): " << r.title << "\n";
      if (r.witness) std::cout << "  witness: " << *r.witness << "\n";
      for (const auto& d : r.details) std::cout << "  " << d << "\n";
      std::cout.flush();
    }
  }
  if (format == Format::Json) {
    json all = json::array();
    for (const auto& r : reports) all.push_back(report_json(r));
    std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  } else if (format == Format::Csv) {
    std::cout << "check,status,bound,seconds,witness\n";
    for (const auto& r : reports) {
      std::string w = r.witness.value_or("");
      std::replace(w.begin(), w.end(), ',', ' ');
      std::cout << r.check << "," << (r.passed ? "pass" : "fail") << "," << r.parameters[0].second << ","
                << r.seconds << ",\"" << w << "\"\n";
    }
  }
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
  return ok ? kPass : kFail;
}

// ---- stats ----

int cmd_stats(const std::vector<std::string>& args, std::optional<int> sweep_n, Format format, int jobs) {
  if (sweep_n) {
    // Distribution over all of Π_n; one statistic gives a histogram, two a joint one.
    if (args.empty() || args.size() > 2) throw UsageError("stats --n takes one or two statistics");
    require_brute(*sweep_n);
    const auto x = Statistic::parse(args[0]);
    const auto y = args.size() == 2 ? Statistic::parse(args[1]) : x;
    const auto hist = sweep<JointHistogram>(
        *sweep_n, jobs, [&](JointHistogram& h, const SetPartition& p) { h.add(x(p), args.size() == 2 ? y(p) : 0); },
        [](JointHistogram& total, const JointHistogram& shard) { total.merge(shard); });
    if (format == Format::Json) {
      json cells = json::array();
      for (const auto& [key, count] : hist.cells()) {
        json c{{x.name(), key.first}, {"count", count}};
        if (args.size() == 2) c[y.name()] = key.second;
        cells.push_back(c);
      }
      std::cout << json{{"n", *sweep_n}, {"statistics", args}, {"cells", cells}}.dump(2) << "\n";
    } else {
      std::cout << x.name() << (args.size() == 2 ? "," + y.name() : "") << ",count\n";
      for (const auto& [key, count] : hist.cells()) {
        std::cout << key.first;
        if (args.size() == 2) std::cout << "," << key.second;
        std::cout << "," << count << "\n";
      }
    }
    return kPass;
  }
  if (args.size() < 2) throw UsageError("stats needs a partition and at least one statistic");
  const auto p = parse_partition(args[0]);
  std::vector<std::pair<std::string, int>> values;
  for (std::size_t i = 1; i < args.size(); ++i) {
    const auto s = Statistic::parse(args[i]);
    values.emplace_back(s.name(), s(p));
  }
  if (format == Format::Json) {
    json j{{"partition", to_word_string(p)}, {"blocks", to_block_string(p)}};
    json v = json::object();
    for (const auto& [k, val] : values) v[k] = val;
    j["statistics"] = v;
    std::cout << j.dump(2) << "\n";
  } else if (format == Format::Csv) {
    std::cout << "statistic,value\n";
    for (const auto& [k, v] : values) std::cout << k << "," << v << "\n";
  } else {
    for (const auto& [k, v] : values) std::cout << k << " = " << v << "\n";
  }
  return kPass;
}

// ---- map ----

std::string apply_map(const std::string& name, const std::string& input) {
  if (name == "phi") return phi(parse_partition(input)).to_string();
  if (name == "phi-inv") return to_word_string(phi_inverse(PlaneTree::parse(input)));
  if (name == "psi") return psi(parse_partition(input)).to_string();
  if (name == "psi-inv") return to_word_string(psi_inverse(PlaneTree::parse(input)));
  if (name == "to-filling") return partition_to_filling(parse_partition(input)).to_string();
  if (name == "from-filling") return to_word_string(filling_to_partition(Filling::parse(input)));
  if (name.rfind("involution:", 0) == 0) {
    const int k = to_int(name.substr(11), "k");
    return to_word_string(front_involution(parse_partition(input), k));
  }
  throw UsageError("unknown map '" + name + "' (phi, phi-inv, psi, psi-inv, involution:k, to-filling, from-filling)");
}

int cmd_map(const std::string& name, const std::string& input, Format format) {
  const auto out = apply_map(name, input);
  if (format == Format::Json) {
    std::cout << json{{"map", name}, {"input", input}, {"output", out}}.dump(2) << "\n";
  } else {
    std::cout << out << "\n";
  }
  return kPass;
}

// ---- enumerate ----

int cmd_enumerate(int n, const std::string& avoid, const std::vector<std::string>& filters, Format format) {
  require_brute(n);
  std::optional<PatternWord> tau;
  if (!avoid.empty()) tau = PatternWord::parse(avoid);
  std::vector<std::pair<Statistic, int>> where;
  for (const auto& f : filters) {
    const auto eq = f.find('=');
    if (eq == std::string::npos) throw UsageError("filter must look like stat=value, got '" + f + "'");
    where.emplace_back(Statistic::parse(f.substr(0, eq)), to_int(f.substr(eq + 1), "filter value"));
  }
  json words = json::array();
  std::uint64_t count = 0;
  for (const auto& p : enumerate(n)) {
    if (tau && !avoids(p, *tau)) continue;
    if (!std::all_of(where.begin(), where.end(), [&](const auto& w) { return w.first(p) == w.second; })) continue;
    ++count;
    if (format == Format::Json) {
      words.push_back(to_word_string(p));
    } else {
      std::cout << to_word_string(p) << "\n";
    }
  }
  if (format == Format::Json) std::cout << json{{"n", n}, {"count", count}, {"partitions", words}}.dump(2) << "\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partlab: exact enumeration and verification for pattern-avoiding set partitions"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--jobs", jobs, "Threads for exhaustive sweeps")->check(CLI::PositiveNumber)->capture_default_str();

  std::string seq, range = "0..10", method = "recurrence";
  auto* count = app.add_subcommand("count", "Print a sequence over an index range");
  count->add_option("sequence", seq, "f:k, d2, e3, bell, p:m, h:k:j, stirling1:k, stirling2:k")->required();
  count->add_option("range", range, "Index or range a..b")->capture_default_str();
  count->add_option("--method", method)->check(CLI::IsMember({"recurrence", "gf", "brute"}))->capture_default_str();

  std::vector<std::string> checks;
  std::optional<int> bound;
  auto* verify = app.add_subcommand("verify", "Run verification checks ('all' runs every check)");
  verify->add_option("checks", checks)->required();
  verify->add_option("--n", bound, "Bound for the check (n, series order or cells)");

  std::vector<std::string> stat_args;
  std::optional<int> stats_n;
  auto* stats = app.add_subcommand("stats", "Statistics of a partition, or their distribution over all of Π_n");
  stats->add_option("args", stat_args, "PARTITION STAT... (or STAT [STAT] with --n)")->required();
  stats->add_option("--n", stats_n, "Sweep Π_n instead of a single partition");

  std::string map_name, map_input;
  auto* map = app.add_subcommand("map", "Apply a bijection or involution");
  map->add_option("name", map_name, "phi, phi-inv, psi, psi-inv, involution:k, to-filling, from-filling")->required();
  map->add_option("input", map_input)->required();

  int enum_n = 0;
  std::string avoid;
  std::vector<std::string> filters;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List the partitions of [n] as restricted growth words");
  enumerate_cmd->add_option("n", enum_n)->required()->check(CLI::NonNegativeNumber);
  enumerate_cmd->add_option("--avoid", avoid, "Keep only partitions avoiding this pattern, e.g. 12312");
  enumerate_cmd->add_option("--where", filters, "Keep only partitions with stat=value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  const Format format = format_name == "json" ? Format::Json : format_name == "csv" ? Format::Csv : Format::Text;
  try {
    if (*count) return cmd_count(seq, range, method, format, jobs);
    if (*verify) return cmd_verify(checks, bound, format, jobs);
    if (*stats) return cmd_stats(stat_args, stats_n, format, jobs);
    if (*map) return cmd_map(map_name, map_input, format);
    if (*enumerate_cmd) return cmd_enumerate(enum_n, avoid, filters, format);
  } catch (const CapExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kCap;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
