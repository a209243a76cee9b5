#include "e6char/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "e6char/charalg.hpp"
#include "e6char/graded.hpp"
#include "e6char/lweight.hpp"
#include "e6char/rootsys.hpp"
#include "e6char/verify.hpp"

namespace e6char::cli {

namespace {

using nlohmann::json;

struct Env {
  std::size_t width = 100;
  bool color = false;
};

Env read_env() {
  Env env;
  if (const char* w = std::getenv("E6CHAR_WIDTH")) {
    try {
      const long v = std::stol(w);
      if (v >= 20) env.width = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  if (const char* c = std::getenv("E6CHAR_COLOR")) env.color = std::string_view(c) == "1" || std::string_view(c) == "always";
  return env;
}

// Usage problems found after CLI11 is done.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Coord> parse_coords(const std::string& text, const std::string& flag) {
  std::vector<Coord> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError(flag + ": empty coordinate in '" + text + "'");
    item = item.substr(b, e - b + 1);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw UsageError(flag + ": '" + item + "' is not an integer");
    out.push_back(v);
  }
  if (out.empty() || (!text.empty() && text.back() == ','))
    throw UsageError(flag + ": expected comma-separated integers, got '" + text + "'");
  return out;
}

WeightVec parse_weight(const std::string& text, const std::string& flag, int rank) {
  auto c = parse_coords(text, flag);
  if (static_cast<int>(c.size()) != rank)
    throw UsageError(flag + ": expected " + std::to_string(rank) + " coordinates, got " + std::to_string(c.size()));
  return WeightVec(std::move(c));
}

json big_json(const BigInt& b) {
  if (b >= std::numeric_limits<long long>::min() && b <= std::numeric_limits<long long>::max())
    return static_cast<long long>(b);
  return b.str();
}

json document(const std::string& command, json payload) {
  return json{{"schema_version", "1"}, {"command", command}, {"payload", std::move(payload)}};
}

std::string paren(const std::vector<Coord>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ')';
  return os.str();
}

// Joins items into lines of at most width characters.
void wrap(std::ostream& out, const std::string& lead, const std::vector<std::string>& items, std::size_t width) {
  std::string line = lead;
  const std::string indent(lead.size(), ' ');
  bool fresh = true;
  for (const auto& it : items) {
    const std::string piece = fresh ? it : ", " + it;
    if (!fresh && line.size() + piece.size() > width) {
      out << line << ",\n";
      line = indent + it;
    } else {
      line += piece;
    }
    fresh = false;
  }
  out << line << '\n';
}

void print_table(std::ostream& out, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) w[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) w[c] = std::max(w[c], r[c].size());
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) s += "  ";
      s += r[c] + std::string(w[c] - r[c].size(), ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

std::string linear_combination(const std::vector<Coord>& c, const std::string& symbol) {
  std::string s;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const Coord a = c[k] < 0 ? -c[k] : c[k];
    if (c[k] < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    if (a != 1) s += std::to_string(a);
    s += symbol + "_" + std::to_string(k + 1);
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// roots

int cmd_roots(const std::string& type, bool only_nonsimple, const std::string& format, std::ostream& out) {
  const DynkinDiagram d = DynkinDiagram::parse(type);
  const bool e6 = d.is_builtin_e6();
  json records = json::array();
  auto roots = positive_roots(d);
  if (e6) {
    // Simple roots in node order, then beta_1 .. beta_30.
    auto rank = [](const RootVec& a) {
      if (const int b = e6_beta_index(a)) return b + 6;
      return static_cast<int>(std::find(a.coords.begin(), a.coords.end(), 1) - a.coords.begin()) + 1;
    };
    std::sort(roots.begin(), roots.end(), [&](const RootVec& x, const RootVec& y) { return rank(x) < rank(y); });
  }
  int index = 0;
  for (const auto& a : roots) {
    ++index;
    if (only_nonsimple && height(a) == 1) continue;
    json r{{"index", index}, {"root", a.coords}, {"weight", root_to_weight(d, a).coords}, {"height", height(a)}};
    if (e6) {
      const int b = e6_beta_index(a);
      r["beta_index"] = b ? json(b) : json(nullptr);
    }
    records.push_back(std::move(r));
  }
  json payload{{"type", d.name()}, {"rank", d.rank()}, {"count", records.size()}, {"roots", records}};

  if (format == "json") {
    out << document("roots", payload).dump(2) << '\n';
    return kSuccess;
  }

  auto label = [&](const json& r) {
    if (!e6) return "r" + std::to_string(r["index"].get<int>());
    if (r["beta_index"].is_null()) {
      const auto& c = r["root"];
      for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] == 1) return "alpha" + std::to_string(k + 1);
    }
    return "beta" + std::to_string(r["beta_index"].get<int>());
  };

  if (format == "latex") {
    out << "\\begin{tabular}{lll}\n\\hline\n & simple roots & fundamental weights \\\\\n\\hline\n";
    for (const auto& r : payload["roots"]) {
      std::string name = label(r);
      if (name.rfind("beta", 0) == 0)
        name = "\\beta_{" + name.substr(4) + "}";
      else if (name.rfind("alpha", 0) == 0)
        name = "\\alpha_{" + name.substr(5) + "}";
      else
        name = "\\gamma_{" + name.substr(1) + "}";
      out << "$" << name << "$ & $" << linear_combination(r["root"].get<std::vector<Coord>>(), "\\alpha") << "$ & $"
          << linear_combination(r["weight"].get<std::vector<Coord>>(), "\\omega") << "$ \\\\\n";
    }
    out << "\\hline\n\\end{tabular}\n";
    return kSuccess;
  }

  out << payload["type"].get<std::string>() << ": " << payload["count"].get<std::size_t>() << " positive roots\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : payload["roots"])
    rows.push_back({label(r), paren(r["root"].get<std::vector<Coord>>()), paren(r["weight"].get<std::vector<Coord>>()),
                    std::to_string(r["height"].get<Coord>())});
  print_table(out, {"name", "root", "weight", "height"}, rows);
  return kSuccess;
}

// ---------------------------------------------------------------------------
// char

int cmd_char(const std::string& type, const std::string& hw, const std::string& wt, const std::string& format,
             std::ostream& out) {
  const DynkinDiagram d = DynkinDiagram::parse(type);
  const WeightVec lambda = parse_weight(hw, "--hw", d.rank());
  if (!is_dominant(lambda)) throw InvalidInput("highest weight " + to_string(lambda) + " is not dominant");
  const Character ch = irr_character(d, lambda);
  json payload{{"type", d.name()}, {"hw", lambda.coords}};
  if (!wt.empty()) {
    const WeightVec mu = parse_weight(wt, "--wt", d.rank());
    payload["weight"] = mu.coords;
    payload["mult"] = big_json(ch.mult(d, mu));
  } else {
    payload["dim"] = weyl_dim(d, lambda).str();
    json table = json::array();
    for (auto it = ch.dominant_mults().rbegin(); it != ch.dominant_mults().rend(); ++it)
      table.push_back({{"weight", it->first.coords}, {"mult", big_json(it->second)},
                       {"orbit_size", orbit_size(d, it->first).str()}});
    payload["dominant_weights"] = table;
  }

  if (format == "json") {
    out << document("char", payload).dump(2) << '\n';
    return kSuccess;
  }
  out << "V" << paren(lambda.coords) << " of " << d.name() << '\n';
  if (!wt.empty()) {
    out << "mult" << paren(payload["weight"].get<std::vector<Coord>>()) << " = " << payload["mult"].dump() << '\n';
    return kSuccess;
  }
  out << "dim = " << payload["dim"].get<std::string>() << '\n';
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : payload["dominant_weights"])
    rows.push_back({paren(r["weight"].get<std::vector<Coord>>()), r["mult"].dump(), r["orbit_size"].get<std::string>()});
  print_table(out, {"dominant weight", "mult", "orbit"}, rows);
  return kSuccess;
}

// ---------------------------------------------------------------------------
// graded

graded::LambdaE6 read_lambda(const std::string& text, bool bourbaki) {
  WeightVec w = parse_weight(text, "--lambda", 6);
  if (bourbaki) w = e6_weight_from_bourbaki(w);
  return graded::LambdaE6::from_weight(w);
}

int cmd_graded(const std::string& lambda_text, bool dims, bool expand, bool bourbaki, const std::string& format,
               const Env& env, std::ostream& out) {
  const auto lambda = read_lambda(lambda_text, bourbaki);
  const auto d = DynkinDiagram::e6();
  const auto ex = graded::expand_graded(lambda, expand);
  const auto& g = ex.decomposition;

  json degrees = json::array();
  for (const auto& [t, list] : g.degrees) {
    json comps = json::array();
    for (const auto& c : list)
      comps.push_back({{"hw", c.hw.coords}, {"mult", big_json(c.mult)}, {"dim", weyl_dim(d, c.hw).str()}});
    degrees.push_back({{"t", t}, {"components", comps}});
  }
  json payload{{"lambda", lambda.weight().coords}, {"status", graded::to_string(g.status)}, {"degrees", degrees}};
  if (dims) {
    json coeffs = json::array();
    for (const auto& c : ex.dims) coeffs.push_back(c.str());
    payload["dims"] = {{"coefficients", coeffs}, {"polynomial", graded::format_t_polynomial(ex.dims)},
                       {"total", ex.total.str()}};
  }
  if (expand) {
    json pieces = json::array();
    for (const auto& [t, weights] : ex.dominant_weights) {
      json table = json::array();
      for (auto it = weights.rbegin(); it != weights.rend(); ++it)
        table.push_back({{"weight", it->first.coords}, {"mult", big_json(it->second)}});
      pieces.push_back({{"t", t}, {"dominant_weights", table}});
    }
    payload["expanded"] = pieces;
  }

  if (format == "json") {
    out << document("graded", payload).dump(2) << '\n';
    return kSuccess;
  }
  out << "M" << paren(lambda.weight().coords) << "  status " << payload["status"].get<std::string>() << '\n';
  for (const auto& deg : payload["degrees"]) {
    std::vector<std::string> items;
    for (const auto& c : deg["components"]) {
      const std::string m = c["mult"].dump();
      items.push_back((m == "1" ? "" : m + " ") + "V" + paren(c["hw"].get<std::vector<Coord>>()) + " [" +
                      c["dim"].get<std::string>() + "]");
    }
    wrap(out, "t^" + std::to_string(deg["t"].get<Coord>()) + ": ", items, env.width);
  }
  if (dims)
    out << "dims: " << payload["dims"]["polynomial"].get<std::string>() << "  (total "
        << payload["dims"]["total"].get<std::string>() << ")\n";
  if (expand) {
    for (const auto& piece : payload["expanded"]) {
      std::vector<std::string> items;
      for (const auto& w : piece["dominant_weights"])
        items.push_back(paren(w["weight"].get<std::vector<Coord>>()) + ":" + w["mult"].dump());
      wrap(out, "t^" + std::to_string(piece["t"].get<Coord>()) + " weights: ", items, env.width);
    }
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------
// psi

int cmd_psi(const std::string& lambda_text, bool bourbaki, const std::string& format, const Env& env, std::ostream& out) {
  const auto lambda = read_lambda(lambda_text, bourbaki);
  const auto c = graded::classify_psi(lambda);
  std::vector<int> indices;
  for (const auto& a : c.psi) indices.push_back(e6_beta_index(a));
  std::sort(indices.begin(), indices.end());
  const json betas = indices;
  json payload{{"lambda", lambda.weight().coords}, {"psi", betas}, {"verdict", graded::to_string(c.verdict)}};
  if (c.verdict == graded::PsiVerdict::NotCovered)
    payload["message"] = "Psi^lambda is nonempty and equals Psi_nu for no weight nu";

  if (format == "json") {
    out << document("psi", payload).dump(2) << '\n';
    return kSuccess;
  }
  out << "lambda " << paren(lambda.weight().coords) << "  verdict " << payload["verdict"].get<std::string>() << '\n';
  std::vector<std::string> items;
  for (const auto& b : betas) items.push_back("beta" + b.dump());
  if (items.empty())
    out << "Psi: (empty)\n";
  else
    wrap(out, "Psi: ", items, env.width);
  if (payload.contains("message")) out << payload["message"].get<std::string>() << '\n';
  return kSuccess;
}

// ---------------------------------------------------------------------------
// minaff

int cmd_minaff(const std::string& type, const std::string& hw, int epsilon, Coord base, const std::string& format,
               std::ostream& out) {
  const DynkinDiagram d = DynkinDiagram::parse(type);
  const WeightVec lambda = parse_weight(hw, "--hw", d.rank());
  const auto ma = min_aff_lweight(d, lambda, epsilon, base);
  json centers = json::array();
  for (Node i : ma.path) centers.push_back({{"node", i}, {"center", ma.centers.at(i)}, {"m", lambda.at_node(i)}});
  json factors = json::array();
  for (const auto& [k, n] : ma.lweight.exponents()) factors.push_back({{"node", k.first}, {"exponent", k.second}, {"power", n}});
  json payload{{"type", d.name()}, {"hw", lambda.coords}, {"epsilon", epsilon}, {"base", base},
               {"path", ma.path}, {"centers", centers}, {"lweight", factors}};

  if (format == "json") {
    out << document("minaff", payload).dump(2) << '\n';
    return kSuccess;
  }
  out << "minimal affinization of V" << paren(lambda.coords) << " (" << d.name() << ", epsilon " << (epsilon > 0 ? "+1" : "-1")
      << ", base q^" << base << ")\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : centers)
    rows.push_back({std::to_string(c["node"].get<Node>()), std::to_string(c["m"].get<Coord>()),
                    std::to_string(c["center"].get<Coord>())});
  print_table(out, {"node", "m", "center"}, rows);
  out << "l-weight: " << to_string(ma.lweight) << '\n';
  return kSuccess;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& suite, Coord max_coord, const std::string& format, const Env& env, std::ostream& out) {
  std::vector<std::string> names;
  if (suite == "all")
    names = verify::suite_names();
  else if (verify::known_suite(suite))
    names = {suite};
  else
    throw UsageError("unknown suite '" + suite + "'");

  std::vector<verify::SuiteReport> reports;
  for (const auto& n : names) reports.push_back(verify::run_suite(n, {max_coord}));
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.ok(); });

  if (format == "json") {
    json suites = json::array();
    for (const auto& r : reports)
      suites.push_back({{"suite", r.suite}, {"ok", r.ok()}, {"checks", r.checks}, {"failed", r.failed},
                        {"seconds", r.seconds}, {"notes", r.notes}, {"failures", r.failures}});
    out << document("verify", {{"ok", ok}, {"max_coord", max_coord}, {"suites", suites}}).dump(2) << '\n';
  } else {
    auto verdict = [&](bool pass) {
      const std::string word = pass ? "PASS" : "FAIL";
      if (!env.color) return word;
      return std::string(pass ? "\033[32m" : "\033[31m") + word + "\033[0m";
    };
    for (const auto& r : reports) {
      out << verdict(r.ok()) << "  " << r.suite << ": " << r.checks << " checks, " << r.failed << " failed, "
          << std::fixed << std::setprecision(2) << r.seconds << " s\n";
      for (const auto& n : r.notes) out << "      " << n << '\n';
      for (const auto& f : r.failures) out << "      failed: " << f << '\n';
    }
  }
  return ok ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const Env env = read_env();
  CLI::App app{"E6 root data, characters, graded characters and l-weights", "e6char"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  std::string format = "text";
  auto add_format = [&](CLI::App* sub, bool latex) {
    std::vector<std::string> allowed{"json", "text"};
    if (latex) allowed.push_back("latex");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(allowed))->capture_default_str();
  };

  std::string type = "E6";
  auto* roots = app.add_subcommand("roots", "List positive roots");
  bool only_nonsimple = false;
  roots->add_option("--type", type, "E6, An, Dn or an edge list like 1-2,2-3")->capture_default_str();
  roots->add_flag("--only-nonsimple", only_nonsimple, "Skip the simple roots");
  add_format(roots, true);

  auto* chr = app.add_subcommand("char", "Character of an irreducible module");
  std::string hw, wt;
  chr->add_option("--type", type, "Diagram type")->capture_default_str();
  chr->add_option("--hw", hw, "Highest weight, comma separated")->required();
  chr->add_option("--wt", wt, "Report the multiplicity of this weight only");
  add_format(chr, false);

  auto* grd = app.add_subcommand("graded", "Graded character of M(lambda) for E6");
  std::string lambda;
  bool dims = false, expand = false, bourbaki = false;
  grd->add_option("--lambda", lambda, "m1,...,m6 in the built-in E6 labeling")->required();
  grd->add_flag("--dims", dims, "Print the dimension polynomial");
  grd->add_flag("--expand", expand, "Print dominant weight multiplicities per degree");
  grd->add_flag("--bourbaki", bourbaki, "Read --lambda in Bourbaki order");
  add_format(grd, false);

  auto* psi = app.add_subcommand("psi", "Classify Psi^lambda (requires m3 = 0)");
  psi->add_option("--lambda", lambda, "m1,...,m6")->required();
  psi->add_flag("--bourbaki", bourbaki, "Read --lambda in Bourbaki order");
  add_format(psi, false);

  auto* minaff = app.add_subcommand("minaff", "Drinfeld data of a minimal affinization");
  int epsilon = 1;
  Coord base = 0;
  minaff->add_option("--type", type, "Diagram type")->capture_default_str();
  minaff->add_option("--hw", hw, "Highest weight, comma separated")->required();
  minaff->add_option("--epsilon", epsilon, "+1 or -1")->check(CLI::IsMember({1, -1}))->capture_default_str();
  minaff->add_option("--base", base, "q-exponent of the first center")->capture_default_str();
  add_format(minaff, false);

  auto* ver = app.add_subcommand("verify", "Run self-check suites");
  std::string suite;
  Coord max_coord = 2;
  ver->add_option("--suite", suite, "roots|characters|multiplicity_free|ab_bijection|psi|lweight|all")->required();
  ver->add_option("--max-coord", max_coord, "Bound on lambda coordinates in sweeps")
      ->check(CLI::Range(Coord(0), Coord(4)))
      ->capture_default_str();
  add_format(ver, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*roots) return cmd_roots(type, only_nonsimple, format, out);
    if (*chr) return cmd_char(type, hw, wt, format, out);
    if (*grd) return cmd_graded(lambda, dims, expand, bourbaki, format, env, out);
    if (*psi) return cmd_psi(lambda, bourbaki, format, env, out);
    if (*minaff) return cmd_minaff(type, hw, epsilon, base, format, out);
    if (*ver) return cmd_verify(suite, max_coord, format, env, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace e6char::cli
