#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "springer2/degeneration.hpp"
#include "springer2/springer.hpp"
#include "springer2/verify.hpp"

using namespace springer2;
using nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "1.0.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A document is the JSON payload plus a flat table for csv/tex.
struct Document {
  ordered_json json;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::string tex_field(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '_' || ch == '&' || ch == '%' || ch == '#' || ch == '{' || ch == '}') out += '\\';
    out += ch;
  }
  return "$" + out + "$";
}

void render(const Document& d, const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << d.json.dump(2) << "\n";
  } else if (format == "csv") {
    for (std::size_t i = 0; i < d.columns.size(); ++i) os << (i ? "," : "") << csv_field(d.columns[i]);
    os << "\n";
    for (const auto& r : d.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
      os << "\n";
    }
  } else {
    os << "\\begin{tabular}{" << std::string(d.columns.size(), 'l') << "}\n";
    for (std::size_t i = 0; i < d.columns.size(); ++i) os << (i ? " & " : "") << d.columns[i];
    os << " \\\\\n\\hline\n";
    for (const auto& r : d.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? " & " : "") << tex_field(r[i]);
      os << " \\\\\n";
    }
    os << "\\end{tabular}\n";
  }
}

std::vector<LieCase> cases_of(const std::string& s) {
  if (s == "all") return all_cases();
  try {
    return {parse_case(s)};
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

LieCase single_case(const std::string& s) {
  if (s == "all") throw UsageError("this command needs a single --case");
  return cases_of(s).front();
}

std::string mask_string(std::uint64_t m, int bits) {
  std::string s;
  for (int i = 0; i < bits; ++i) s += (m >> i & 1) ? '1' : '0';
  return s.empty() ? "-" : s;
}

ordered_json symbol_json(const Symbol& s) { return {{"A", s.a}, {"B", s.b}, {"text", to_string(s)}}; }

ordered_json meta(const std::string& command, ordered_json params) {
  return {{"tool", "springer2"}, {"version", kVersion}, {"command", command}, {"parameters", std::move(params)}};
}

std::string bip_of(const Symbol& s) {
  return s.space.unordered ? to_string(to_unordered_bipartition(s)) : to_string(to_bipartition(s));
}

Document cmd_orbits(const std::vector<LieCase>& cases, int n) {
  Document d;
  d.columns = {"case", "n", "orbit", "group_order", "rho"};
  ordered_json docs = ordered_json::array();
  for (LieCase c : cases) {
    ordered_json entries = ordered_json::array();
    for (const auto& x : enumerate_orbits(c, n)) {
      const auto g = component_group(x);
      const Symbol s = rho(x);
      const auto order = std::uint64_t{1} << g.rank();
      entries.push_back({{"orbit", to_string(x)}, {"group_order", order}, {"rho", symbol_json(s)}});
      d.rows.push_back({case_name(c), std::to_string(n), to_string(x), std::to_string(order), to_string(s)});
    }
    docs.push_back({{"case", case_name(c)}, {"n", n}, {"entries", std::move(entries)}});
  }
  d.json = {{"metadata", meta("orbits", {{"case", cases.size() == 1 ? case_name(cases[0]) : "all"}, {"n", n}})},
            {"documents", std::move(docs)}};
  return d;
}

Document cmd_springer(const std::vector<LieCase>& cases, int n, const std::string& orbit) {
  Document d;
  d.columns = {"case", "n", "orbit", "group_order", "character", "intervals", "symbol", "bipartition", "degenerate"};
  ordered_json docs = ordered_json::array();
  for (LieCase c : cases) {
    std::vector<OrbitDatum> orbits;
    if (orbit.empty()) {
      orbits = enumerate_orbits(c, n);
    } else {
      try {
        orbits = {parse_orbit(c, n, orbit)};
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    ordered_json entries = ordered_json::array();
    const auto all = table(c, n);
    for (const auto& x : orbits) {
      const auto g = component_group(x);
      const auto order = std::uint64_t{1} << g.rank();
      ordered_json chars = ordered_json::array();
      for (const auto& e : all) {
        if (e.orbit != x) continue;
        const Symbol s = correspondence(x, e.interval_mask);
        const int bits = decompose(s).dimension();
        const std::string bp = bipartition_string(e);
        chars.push_back({{"character", mask_string(e.character, g.rank())},
                         {"intervals", mask_string(e.interval_mask, bits)},
                         {"symbol", symbol_json(s)},
                         {"bipartition", bp},
                         {"degenerate", e.degenerate}});
        d.rows.push_back({case_name(c), std::to_string(n), to_string(x), std::to_string(order),
                          mask_string(e.character, g.rank()), mask_string(e.interval_mask, bits), to_string(s), bp,
                          e.degenerate ? "yes" : "no"});
      }
      entries.push_back({{"orbit", to_string(x)}, {"group_order", order}, {"symbol", symbol_json(rho(x))},
                         {"characters", std::move(chars)}});
    }
    docs.push_back({{"case", case_name(c)}, {"n", n}, {"entries", std::move(entries)}});
  }
  d.json = {{"metadata", meta("springer", {{"case", cases.size() == 1 ? case_name(cases[0]) : "all"}, {"n", n}})},
            {"documents", std::move(docs)}};
  return d;
}

// Keeps the representative length the user typed.
Symbol read_symbol(LieCase c, int n, const std::string& text) {
  try {
    const Symbol s = parse_symbol(text, case_space(c, n));
    const int typed = static_cast<int>(parse_rows(text).second.size());
    return typed > s.m() && !s.space.unordered ? at_length(s, typed) : s;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string pairs_text(const CharacterPairs& p, int bits, int bits_prime) {
  std::string s;
  for (auto [u, w] : p) s += (s.empty() ? "" : " ") + ("(" + mask_string(u, bits) + "," + mask_string(w, bits_prime) + ")");
  return s;
}

Document cmd_branch(LieCase c, int n, const std::string& symbol, const std::string& orbit) {
  if (n < 1) throw UsageError("branch needs --n >= 1");
  if (symbol.empty() == orbit.empty()) throw UsageError("branch needs exactly one of --symbol and --orbit");
  Document d;
  ordered_json params = {{"case", case_name(c)}, {"n", n}};
  if (!symbol.empty()) {
    const Symbol s = read_symbol(c, n, symbol);
    params["symbol"] = symbol;
    d.columns = {"target", "bipartition", "distinguished"};
    ordered_json targets = ordered_json::array();
    for (auto t : symbol_branch(s, c)) {
      if (t.m() < s.m()) t = at_length(t, s.m());
      targets.push_back({{"symbol", symbol_json(t)}, {"bipartition", bip_of(t)}, {"distinguished", is_distinguished(t)}});
      d.rows.push_back({to_string(t), bip_of(t), is_distinguished(t) ? "yes" : "no"});
    }
    d.json = {{"metadata", meta("branch", params)},
              {"source", {{"symbol", symbol_json(s)}, {"bipartition", bip_of(s)}}},
              {"targets", std::move(targets)}};
    return d;
  }
  OrbitDatum x;
  try {
    x = parse_orbit(c, n, orbit);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  params["orbit"] = orbit;
  d.columns = {"target", "clause", "i", "dimY", "index", "A_P'", "epsilon"};
  ordered_json targets = ordered_json::array();
  for (const auto& r : orbit_degenerations(x)) {
    const auto eps = epsilon_pairs(r);
    const auto g = component_group(r.source), gp = component_group(r.target_padded);
    ordered_json pairs = ordered_json::array();
    for (auto [u, w] : eps) pairs.push_back({mask_string(u, g.rank()), mask_string(w, gp.rank())});
    const auto idx = std::uint64_t{1} << r.triple.index_log2();
    const auto app = std::uint64_t{1} << r.triple.a_p_prime_log2();
    targets.push_back({{"orbit", to_string(r.target)}, {"clause", r.clause}, {"i", r.i}, {"dimY", r.dim_y},
                       {"symbol", symbol_json(rho(r.target))}, {"index_A_P", idx}, {"order_A_P_prime", app},
                       {"epsilon_pairs", std::move(pairs)}});
    d.rows.push_back({to_string(r.target), r.clause, std::to_string(r.i), std::to_string(r.dim_y), std::to_string(idx),
                      std::to_string(app), pairs_text(eps, g.rank(), gp.rank())});
  }
  d.json = {{"metadata", meta("branch", params)},
            {"source", {{"orbit", to_string(x)}, {"symbol", symbol_json(rho(x))}}},
            {"degenerations", std::move(targets)}};
  return d;
}

Document cmd_rho(LieCase c, int n, const std::string& symbol, const std::string& orbit) {
  if (symbol.empty() == orbit.empty()) throw UsageError("rho needs exactly one of --symbol and --orbit");
  Document d;
  d.columns = {"orbit", "symbol", "bipartition"};
  OrbitDatum x;
  if (!orbit.empty()) {
    try {
      x = parse_orbit(c, n, orbit);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else {
    const Symbol s = read_symbol(c, n, symbol);
    try {
      x = rho_inverse(s, c);
    } catch (const SymbolError& e) {
      throw UsageError(e.what());
    }
  }
  const Symbol s = rho(x);
  d.rows.push_back({to_string(x), to_string(s), bip_of(s)});
  d.json = {{"metadata", meta("rho", {{"case", case_name(c)}, {"n", n}})},
            {"orbit", to_string(x)},
            {"symbol", symbol_json(s)},
            {"bipartition", bip_of(s)}};
  return d;
}

int cmd_verify(const std::vector<LieCase>& cases, int max_n, const std::string& format) {
  const auto res = run_suite(cases, max_n);
  bool ok = true;
  for (const auto& r : res) ok = ok && r.passed();
  if (format == "json") {
    ordered_json crit = ordered_json::array();
    for (const auto& r : res)
      crit.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed()}, {"checks", r.checks},
                      {"failures", r.failures}});
    ordered_json params = {{"case", cases.size() == 1 ? case_name(cases[0]) : "all"}, {"max_n", max_n}};
    std::cout << ordered_json{{"metadata", meta("verify", params)}, {"passed", ok}, {"criteria", crit}}.dump(2) << "\n";
  } else {
    for (const auto& r : res) {
      std::cout << (r.passed() ? "PASS" : "FAIL") << "  " << r.id << ". " << r.title << " (" << r.checks << " checks";
      if (!r.passed()) std::cout << ", " << r.failures.size() << " failures";
      std::cout << ")\n";
      for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i) std::cout << "      " << r.failures[i] << "\n";
      if (r.failures.size() > 5) std::cout << "      ...\n";
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Springer correspondence in characteristic 2: orbits, symbols and restriction checks"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string lie = "sp", format = "json", orbit, symbol;
  int n = 1, max_n = 8;
  auto common = [&](CLI::App* sub, bool with_n) {
    sub->add_option("--case", lie, "sp, oo, eo, spd, ood or all")->required();
    if (with_n) sub->add_option("--n", n, "rank")->required()->check(CLI::NonNegativeNumber);
  };
  auto with_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json, csv or tex")->check(CLI::IsMember({"json", "csv", "tex"}));
  };

  auto* orbits = app.add_subcommand("orbits", "list orbits with component group orders");
  common(orbits, true);
  with_format(orbits);
  auto* springer = app.add_subcommand("springer", "correspondence table");
  common(springer, true);
  with_format(springer);
  springer->add_option("--orbit", orbit, "restrict to one orbit");
  auto* branch = app.add_subcommand("branch", "branch a symbol, or list the degenerations of an orbit");
  common(branch, true);
  with_format(branch);
  branch->add_option("--symbol", symbol, "A=...;B=...");
  branch->add_option("--orbit", orbit, "orbit grammar");
  auto* rho_cmd = app.add_subcommand("rho", "distinguished symbol of an orbit, or the orbit of a symbol");
  common(rho_cmd, true);
  with_format(rho_cmd);
  rho_cmd->add_option("--symbol", symbol, "A=...;B=...");
  rho_cmd->add_option("--orbit", orbit, "orbit grammar");
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  common(verify, false);
  verify->add_option("--max-n", max_n, "largest rank")->check(CLI::Range(0, 12));
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      if (!verify->count("--format")) format = "text";
      return cmd_verify(cases_of(lie), max_n, format);
    }
    Document d;
    if (orbits->parsed()) d = cmd_orbits(cases_of(lie), n);
    else if (springer->parsed()) d = cmd_springer(cases_of(lie), n, orbit);
    else if (branch->parsed()) d = cmd_branch(single_case(lie), n, symbol, orbit);
    else d = cmd_rho(single_case(lie), n, symbol, orbit);
    render(d, format, std::cout);
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
