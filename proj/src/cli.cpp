#include "overlap_lab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "overlap_lab/asymptotics.hpp"
#include "overlap_lab/counting.hpp"
#include "overlap_lab/oracle.hpp"

namespace overlap_lab::cli {

namespace {

using nlohmann::json;

// Counts above 2^53 lose precision as JSON doubles, so they travel as strings.
json count_json(const BigCount& value) {
  static const BigCount kMaxExact = BigCount(1) << 53;
  if (value <= kMaxExact) return value.convert_to<std::uint64_t>();
  return value.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string join(const std::vector<std::size_t>& values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << std::setw(static_cast<int>(widths[c])) << row[c];
    }
    out << '\n';
  }
}

const std::map<std::string, OutputFormat> kFormats = {
    {"plain", OutputFormat::Plain}, {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};

void add_format_option(CLI::App* cmd, OutputFormat& format) {
  cmd->add_option("--format", format, "Output format: plain, csv or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->default_str("plain");
}

std::uint64_t pair_budget_from_env() {
  const char* raw = std::getenv(kBudgetEnvVar);
  if (raw == nullptr || *raw == '\0') return kDefaultPairBudget;
  std::uint64_t value = 0;
  std::string_view text(raw);
  for (char c : text) {
    if (c < '0' || c > '9' || value > (UINT64_MAX - 9) / 10)
      throw InvalidInput(std::string(kBudgetEnvVar) + " must be a non-negative integer");
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return value;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string u;
  std::string v;
  std::uint32_t k = 2;
  bool letters = false;
  OutputFormat format = OutputFormat::Plain;
};

int cmd_analyze(const AnalyzeArgs& a, bool k_given, std::ostream& out) {
  const Alphabet alphabet(a.letters && !k_given ? 26 : a.k);
  auto parse = [&](const std::string& text, const char* name) {
    try {
      return parse_word(text, alphabet, a.letters);
    } catch (const InvalidInput& e) {
      throw InvalidInput(std::string(name) + ": " + e.what());
    }
  };
  const Word u = parse(a.u, "u");
  const Word v = parse(a.v, "v");
  const OverlapProfile p = overlap_profile(u, v);

  auto word_text = [&](const std::optional<Word>& w) -> std::string {
    return w ? render_word(*w, a.letters) : std::string();
  };

  switch (a.format) {
    case OutputFormat::Plain:
      out << "u=" << render_word(u, a.letters) << '\n'
          << "v=" << render_word(v, a.letters) << '\n'
          << "right_borders=[" << join(p.right_border_lengths, ", ") << "]\n"
          << "left_borders=[" << join(p.left_border_lengths, ", ") << "]\n"
          << "so(u,v)=" << (p.so_uv ? word_text(p.so_uv) : "(none)") << '\n'
          << "lso(u,v)=" << p.lso_uv << '\n'
          << "so(v,u)=" << (p.so_vu ? word_text(p.so_vu) : "(none)") << '\n'
          << "lso(v,u)=" << p.lso_vu << '\n'
          << "class=" << to_string(p.pair_class) << '\n';
      break;
    case OutputFormat::Csv:
      out << "u,v,right_borders,left_borders,so_uv,lso_uv,so_vu,lso_vu,class\n"
          << csv_field(render_word(u, a.letters)) << ',' << csv_field(render_word(v, a.letters)) << ','
          << join(p.right_border_lengths, " ") << ',' << join(p.left_border_lengths, " ") << ','
          << csv_field(word_text(p.so_uv)) << ',' << p.lso_uv << ',' << csv_field(word_text(p.so_vu))
          << ',' << p.lso_vu << ',' << to_string(p.pair_class) << '\n';
      break;
    case OutputFormat::Json: {
      json doc;
      doc["schema_version"] = kJsonSchemaVersion;
      doc["command"] = "analyze";
      doc["k"] = alphabet.size();
      doc["u"] = render_word(u, a.letters);
      doc["v"] = render_word(v, a.letters);
      doc["right_border_lengths"] = p.right_border_lengths;
      doc["left_border_lengths"] = p.left_border_lengths;
      doc["so_uv"] = p.so_uv ? json(word_text(p.so_uv)) : json(nullptr);
      doc["lso_uv"] = p.lso_uv;
      doc["so_vu"] = p.so_vu ? json(word_text(p.so_vu)) : json(nullptr);
      doc["lso_vu"] = p.lso_vu;
      doc["class"] = std::string(to_string(p.pair_class));
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return kSuccess;
}

// ------------------------------------------------------------------ count

struct CountArgs {
  std::uint32_t k = 2;
  std::uint32_t n_max = 0;
  std::string quantities = "M,R,U";
  OutputFormat format = OutputFormat::Plain;
};

int cmd_count(const CountArgs& a, std::ostream& out) {
  if (a.k < 1) throw InvalidInput("--k must be at least 1");
  if (a.n_max < 1) throw InvalidInput("--n must be at least 1");

  static const std::vector<std::string> kOrder = {"M", "R", "U", "u"};
  std::vector<bool> wanted(kOrder.size(), false);
  for (const auto& q : split(a.quantities, ',')) {
    const auto it = std::find(kOrder.begin(), kOrder.end(), q);
    if (it == kOrder.end()) throw InvalidInput("unknown quantity '" + q + "' (expected M, R, U or u)");
    wanted[static_cast<std::size_t>(it - kOrder.begin())] = true;
  }
  std::vector<std::string> columns;
  for (std::size_t i = 0; i < kOrder.size(); ++i)
    if (wanted[i]) columns.push_back(kOrder[i]);

  CountCache cache(a.k);
  auto value = [&](const std::string& q, std::uint32_t n) -> BigCount {
    if (q == "M") return cache.mutually_bordered(n);
    if (q == "R") return cache.right_bordered(n);
    if (q == "U") return cache.mutually_unbordered(n);
    return cache.unbordered(n);
  };

  switch (a.format) {
    case OutputFormat::Plain:
    case OutputFormat::Csv: {
      std::vector<std::vector<std::string>> rows;
      rows.push_back({"n"});
      rows.front().insert(rows.front().end(), columns.begin(), columns.end());
      for (std::uint32_t n = 1; n <= a.n_max; ++n) {
        std::vector<std::string> row = {std::to_string(n)};
        for (const auto& q : columns) row.push_back(value(q, n).str());
        rows.push_back(std::move(row));
      }
      if (a.format == OutputFormat::Plain) {
        print_table(out, rows);
      } else {
        for (const auto& row : rows) {
          for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
          out << '\n';
        }
      }
      break;
    }
    case OutputFormat::Json: {
      json doc;
      doc["schema_version"] = kJsonSchemaVersion;
      doc["command"] = "count";
      doc["k"] = a.k;
      json rows = json::array();
      for (std::uint32_t n = 1; n <= a.n_max; ++n) {
        json row;
        row["n"] = n;
        for (const auto& q : columns) row[q] = count_json(value(q, n));
        rows.push_back(std::move(row));
      }
      doc["rows"] = std::move(rows);
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return kSuccess;
}

// ----------------------------------------------------------------- oracle

struct OracleArgs {
  std::uint32_t k = 2;
  std::uint32_t m_max = 0;
  std::uint32_t n_max = 0;
  std::string checks = "census";
  unsigned threads = 0;
  std::size_t max_violations = kDefaultViolationCap;
  OutputFormat format = OutputFormat::Plain;
};

json violations_json(const ViolationReport& r) {
  json list = json::array();
  for (const auto& v : r.violations)
    list.push_back({{"u", render_word(v.u)}, {"v", render_word(v.v)}, {"reason", v.reason}});
  return list;
}

int cmd_oracle(const OracleArgs& a, std::ostream& out, std::ostream& err) {
  if (a.k < 1) throw InvalidInput("--k must be at least 1");
  if (a.n_max < 1) throw InvalidInput("--n must be at least 1");
  const std::uint32_t m_max = a.m_max == 0 ? a.n_max : a.m_max;

  bool census = false, lemmas = false, fourthirds = false, histogram = false;
  for (const auto& c : split(a.checks, ',')) {
    if (c == "census") census = true;
    else if (c == "lemmas") lemmas = true;
    else if (c == "fourthirds") fourthirds = true;
    else if (c == "lso-histogram") histogram = true;
    else throw InvalidInput("unknown check '" + c + "' (expected census, lemmas, fourthirds or lso-histogram)");
  }

  EnumerationOptions options;
  options.pair_budget = pair_budget_from_env();
  options.threads = a.threads;
  options.max_violations = a.max_violations;

  // Refuse before printing anything.
  if (census) check_budget(a.k, m_max, a.n_max, options);
  if (lemmas || fourthirds || histogram) check_budget(a.k, a.n_max, a.n_max, options);

  json doc;
  doc["schema_version"] = kJsonSchemaVersion;
  doc["command"] = "oracle";
  doc["k"] = a.k;
  std::vector<std::vector<std::string>> csv_rows = {{"check", "k", "m", "n", "metric", "value"}};
  auto csv = [&](const char* check, std::uint32_t m, std::uint32_t n, const std::string& metric,
                 const std::string& value) {
    csv_rows.push_back({check, std::to_string(a.k), std::to_string(m), std::to_string(n), metric, value});
  };
  std::uint64_t violation_total = 0;
  const bool plain = a.format == OutputFormat::Plain;

  if (census) {
    std::vector<std::vector<PairCensus>> grid(m_max);
    for (std::uint32_t m = 1; m <= m_max; ++m)
      for (std::uint32_t n = 1; n <= a.n_max; ++n)
        grid[m - 1].push_back(enumerate_pair_census(a.k, m, n, options));

    struct Field {
      const char* key;
      const char* title;
      BigCount PairCensus::*member;
    };
    const Field fields[] = {
        {"M", "mutually bordered", &PairCensus::mutually_bordered},
        {"R", "right-bordered", &PairCensus::right_bordered},
        {"L", "left-bordered", &PairCensus::left_bordered},
        {"U", "mutually unbordered", &PairCensus::mutually_unbordered},
    };
    if (plain) {
      for (const auto& f : fields) {
        out << f.key << "_" << a.k << "(m,n): " << f.title << " pairs, m rows, n columns\n";
        std::vector<std::vector<std::string>> rows = {{"m/n"}};
        for (std::uint32_t n = 1; n <= a.n_max; ++n) rows[0].push_back(std::to_string(n));
        for (std::uint32_t m = 1; m <= m_max; ++m) {
          std::vector<std::string> row = {std::to_string(m)};
          for (const auto& c : grid[m - 1]) row.push_back((c.*f.member).str());
          rows.push_back(std::move(row));
        }
        print_table(out, rows);
        out << '\n';
      }
    }
    json cells = json::array();
    for (const auto& row : grid) {
      for (const auto& c : row) {
        json cell = {{"m", c.m}, {"n", c.n}};
        for (const auto& f : fields) {
          cell[f.key] = count_json(c.*f.member);
          csv("census", c.m, c.n, f.key, (c.*f.member).str());
        }
        cells.push_back(std::move(cell));
      }
    }
    doc["census"] = std::move(cells);
  }

  if (lemmas) {
    json entries = json::array();
    if (plain) out << "lemma checks (k = " << a.k << ")\n";
    for (std::uint32_t n = 1; n <= a.n_max; ++n) {
      const ViolationReport shortest = verify_shortest_unbordered(a.k, n, options);
      const ViolationReport decomposition = verify_decomposition(a.k, n, options);
      violation_total += shortest.violations.size() + decomposition.violations.size();
      if (plain) {
        out << "  n=" << n << " shortest-unbordered: checked=" << shortest.checked
            << " violations=" << shortest.violations.size() << "; decomposition: checked="
            << decomposition.checked << " violations=" << decomposition.violations.size()
            << " max_overlap_sum=" << decomposition.max_overlap_sum << '\n';
        for (const auto* r : {&shortest, &decomposition})
          for (const auto& v : r->violations)
            out << "    violation u=" << render_word(v.u) << " v=" << render_word(v.v) << ": " << v.reason << '\n';
      }
      csv("shortest-unbordered", n, n, "checked", std::to_string(shortest.checked));
      csv("shortest-unbordered", n, n, "violations", std::to_string(shortest.violations.size()));
      csv("decomposition", n, n, "checked", std::to_string(decomposition.checked));
      csv("decomposition", n, n, "violations", std::to_string(decomposition.violations.size()));
      csv("decomposition", n, n, "max_overlap_sum", std::to_string(decomposition.max_overlap_sum));
      entries.push_back({{"n", n},
                         {"shortest_unbordered",
                          {{"checked", shortest.checked}, {"violations", violations_json(shortest)}}},
                         {"decomposition",
                          {{"checked", decomposition.checked},
                           {"max_overlap_sum", decomposition.max_overlap_sum},
                           {"violations", violations_json(decomposition)}}}});
    }
    doc["lemmas"] = std::move(entries);
  }

  if (fourthirds) {
    json entries = json::array();
    if (plain) out << "overlap-sum bound (k = " << a.k << ")\n";
    for (std::uint32_t n = 1; n <= a.n_max; ++n) {
      const std::size_t best = max_overlap_sum(a.k, n, options);
      const std::size_t bound = 4 * std::size_t{n} / 3;
      const bool ok = best <= bound;
      if (!ok) ++violation_total;
      if (plain)
        out << "  n=" << n << " max lso(u,v)+lso(v,u)=" << best << " bound=" << bound << (ok ? "" : " VIOLATED")
            << '\n';
      csv("fourthirds", n, n, "max_overlap_sum", std::to_string(best));
      csv("fourthirds", n, n, "bound", std::to_string(bound));
      entries.push_back({{"n", n}, {"max_overlap_sum", best}, {"bound", bound}, {"ok", ok}});
    }
    doc["fourthirds"] = std::move(entries);
  }

  if (histogram) {
    json entries = json::array();
    CountCache cache(a.k);
    if (plain) out << "lso histogram (k = " << a.k << ")\n";
    for (std::uint32_t n = 1; n <= a.n_max; ++n) {
      const auto counts = census_by_lso(a.k, n, options);
      bool matches = true;
      for (const auto& [i, c] : counts)
        if (i >= 1 && c != cache.s(static_cast<std::uint32_t>(i), n)) matches = false;
      if (!matches) ++violation_total;
      json buckets;
      if (plain) out << "  n=" << n << ':';
      for (const auto& [i, c] : counts) {
        buckets[std::to_string(i)] = count_json(c);
        if (plain) out << ' ' << i << ':' << c.str();
        csv("lso-histogram", n, n, "lso=" + std::to_string(i), c.str());
      }
      if (plain) out << (matches ? "" : "  MISMATCH with u_i k^(2(n-i))") << '\n';
      csv("lso-histogram", n, n, "matches_recurrence", matches ? "true" : "false");
      entries.push_back({{"n", n}, {"counts", std::move(buckets)}, {"matches_recurrence", matches}});
    }
    doc["lso_histogram"] = std::move(entries);
  }

  doc["violations"] = violation_total;
  switch (a.format) {
    case OutputFormat::Plain:
      if (lemmas || fourthirds || histogram) out << "violations=" << violation_total << '\n';
      break;
    case OutputFormat::Csv:
      for (const auto& row : csv_rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_field(row[c]);
        out << '\n';
      }
      break;
    case OutputFormat::Json:
      out << doc.dump(2) << '\n';
      break;
  }
  if (violation_total > 0) {
    err << "error: " << violation_total << " violation(s) found\n";
    return kViolationFound;
  }
  return kSuccess;
}

// ----------------------------------------------------------------- limits

struct LimitsArgs {
  std::uint32_t k = 2;
  std::uint32_t terms = 40;
  unsigned precision = 3;
  OutputFormat format = OutputFormat::Plain;
};

int cmd_limits(const LimitsArgs& a, std::ostream& out, std::ostream& err) {
  if (a.k < 2) throw InvalidInput("--k must be at least 2 for limits");
  if (a.terms < 1) throw InvalidInput("--terms must be at least 1");

  struct Entry {
    LimitQuantity quantity;
    const char* label;
  };
  const Entry entries[] = {
      {LimitQuantity::MLimit, "M"},
      {LimitQuantity::RLimit, "R"},
      {LimitQuantity::ULimit, "U"},
      {LimitQuantity::ExpectedLso, "E[lso]"},
      {LimitQuantity::UnborderedDensity, "u_n/k^n"},
  };
  std::vector<LimitReport> reports;
  bool all_certified = true;
  for (const auto& e : entries) {
    reports.push_back(limit_report(e.quantity, a.k, a.terms, a.precision));
    all_certified = all_certified && reports.back().certified;
  }

  switch (a.format) {
    case OutputFormat::Plain: {
      out << "k=" << a.k << " terms=" << a.terms << " precision=" << a.precision << '\n';
      std::vector<std::vector<std::string>> rows;
      for (std::size_t i = 0; i < reports.size(); ++i)
        rows.push_back({entries[i].label, reports[i].decimal, reports[i].certified ? "" : "(uncertified)"});
      for (const auto& row : rows) out << row[0] << '=' << row[1] << (row[2].empty() ? "" : " " + row[2]) << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "quantity,k,terms,precision,decimal,certified,lo,hi\n";
      for (const auto& r : reports)
        out << to_string(r.quantity) << ',' << r.k << ',' << r.terms << ',' << r.precision << ',' << r.decimal << ','
            << (r.certified ? "true" : "false") << ',' << to_string(r.interval.lo) << ','
            << to_string(r.interval.hi) << '\n';
      break;
    case OutputFormat::Json: {
      json doc;
      doc["schema_version"] = kJsonSchemaVersion;
      doc["command"] = "limits";
      doc["k"] = a.k;
      doc["terms"] = a.terms;
      doc["precision"] = a.precision;
      json limits;
      for (const auto& r : reports)
        limits[std::string(to_string(r.quantity))] = {{"decimal", r.decimal},
                                                      {"certified", r.certified},
                                                      {"lo", to_string(r.interval.lo)},
                                                      {"hi", to_string(r.interval.hi)}};
      doc["limits"] = std::move(limits);
      out << doc.dump(2) << '\n';
      break;
    }
  }
  if (!all_certified) {
    err << "error: " << a.terms << " terms cannot certify " << a.precision
        << " decimals; rerun with a larger --terms\n";
    return kPrecisionShortfall;
  }
  return kSuccess;
}

}  // namespace

Word parse_word(std::string_view text, Alphabet alphabet, bool letters) {
  if (text.empty()) throw InvalidInput("empty word");
  if (letters) {
    const Word w = Word::from_letters(text);
    return Word(std::vector<Symbol>(w.symbols().begin(), w.symbols().end()), alphabet);
  }
  if (alphabet.size() <= 10) return Word::from_digits(text, alphabet);

  std::vector<Symbol> symbols;
  const auto tokens = split(std::string(text), ',');
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    const bool digits = !tok.empty() && tok.size() <= 9 &&
                        std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; });
    if (!digits)
      throw InvalidInput("'" + tok + "' at position " + std::to_string(i + 1) + " is not a decimal symbol");
    symbols.push_back(static_cast<Symbol>(std::stoul(tok)));
  }
  return Word(std::move(symbols), alphabet);
}

std::string render_word(const Word& w, bool letters) {
  std::string out;
  if (letters) {
    for (Symbol s : w.symbols()) out += static_cast<char>('a' + s);
    return out;
  }
  const bool compact = w.alphabet().size() <= 10;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (compact) {
      out += static_cast<char>('0' + w[i]);
    } else {
      if (i) out += ',';
      out += std::to_string(w[i]);
    }
  }
  return out;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Borders, mutual overlaps and pair counts of words"};
  app.name("overlap_lab");
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Border profile of an ordered pair (u, v)");
  analyze_cmd->add_option("u", analyze.u, "First word")->required();
  analyze_cmd->add_option("v", analyze.v, "Second word")->required();
  auto* analyze_k = analyze_cmd->add_option("--k", analyze.k, "Alphabet size (default 2, or 26 with --letters)");
  analyze_cmd->add_flag("--letters", analyze.letters, "Read words as lowercase letters a-z");
  add_format_option(analyze_cmd, analyze.format);

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Exact M, R, U and u_n for n = 1..N");
  count_cmd->add_option("--k", count.k, "Alphabet size")->default_val(2);
  count_cmd->add_option("--n", count.n_max, "Largest word length")->required();
  count_cmd->add_option("--quantities", count.quantities, "Comma-separated subset of M,R,U,u")
      ->default_val("M,R,U");
  add_format_option(count_cmd, count.format);

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive enumeration and structural checks");
  oracle_cmd->add_option("--k", oracle.k, "Alphabet size")->default_val(2);
  oracle_cmd->add_option("--m", oracle.m_max, "Largest |u| for the census (default: --n)");
  oracle_cmd->add_option("--n", oracle.n_max, "Largest word length")->required();
  oracle_cmd->add_option("--checks", oracle.checks, "Comma-separated subset of census,lemmas,fourthirds,lso-histogram")
      ->default_val("census");
  oracle_cmd->add_option("--threads", oracle.threads, "Worker threads, 0 for all cores")->default_val(0);
  oracle_cmd->add_option("--max-violations", oracle.max_violations, "Violations kept per report")
      ->default_val(kDefaultViolationCap);
  add_format_option(oracle_cmd, oracle.format);

  LimitsArgs limits;
  auto* limits_cmd = app.add_subcommand("limits", "Certified limiting densities and expected overlap");
  limits_cmd->add_option("--k", limits.k, "Alphabet size")->default_val(2);
  limits_cmd->add_option("--terms", limits.terms, "Series terms")->default_val(40);
  limits_cmd->add_option("--precision", limits.precision, "Decimal digits")->default_val(3);
  add_format_option(limits_cmd, limits.format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(analyze, analyze_k->count() > 0, out);
    if (*count_cmd) return cmd_count(count, out);
    if (*oracle_cmd) return cmd_oracle(oracle, out, err);
    if (*limits_cmd) return cmd_limits(limits, out, err);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (set " << kBudgetEnvVar << " to raise the budget)\n";
    return kBudgetExceeded;
  }
  return kUsageError;
}

}  // namespace overlap_lab::cli
