// boxball: command-line front end for the box-ball library.
// Exit codes: 0 success, 2 usage or parse error, 3 domain error.

#include "boxball/bbs.hpp"
#include "boxball/crystal.hpp"
#include "boxball/kkr.hpp"
#include "boxball/pbbs.hpp"
#include "boxball/tau.hpp"
#include "boxball/troptoda.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

using namespace boxball;
using nlohmann::json;

namespace {

constexpr int kJsonSchema = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raw input: positional text or the contents of --file.
struct Input {
  std::string text;
  std::string file;

  std::string source() const { return file.empty() ? "<arg>" : file; }

  // Text with surrounding whitespace removed; characters outside `allowed`
  // are reported by line and column.
  std::string read(const std::string& allowed) const {
    std::string raw = text;
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw UsageError("cannot open " + file);
      std::ostringstream ss;
      ss << in.rdbuf();
      raw = ss.str();
    }
    if (raw.empty() && file.empty()) throw UsageError("missing input");
    long line = 1, col = 0;
    std::string out;
    for (char c : raw) {
      ++col;
      if (c == '\n') {
        ++line;
        col = 0;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') continue;
      if (allowed.find(c) == std::string::npos)
        throw UsageError(source() + ":" + std::to_string(line) + ":" + std::to_string(col) +
                         ": unexpected character '" + std::string(1, c) + "'");
      out.push_back(c);
    }
    if (out.empty()) throw UsageError(source() + ": empty input");
    return out;
  }
};

const std::string kCells = ".123456789";
const std::string kPeriodicCells = ".12";
const std::string kNumbers = "0123456789-/,";

json rat(const Rational& q) {
  if (denominator(q) == 1) return json(static_cast<long long>(numerator(q)));
  return json(to_string(q));
}

json rat_vec(const RatVec& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(rat(q));
  return a;
}

json big(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return json(static_cast<long long>(v));
  return json(v.str());
}

RatVec parse_rat_list(std::string text, const std::string& what) {
  auto eq = text.find('=');
  if (eq != std::string::npos) text = text.substr(eq + 1);
  RatVec out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(parse_rational(tok));
    } catch (const DomainError& e) {
      throw UsageError(what + ": " + e.what());
    }
  }
  if (out.empty()) throw UsageError(what + ": empty list");
  return out;
}

std::vector<long> parse_long_list(const std::string& text, const std::string& what) {
  std::vector<long> out;
  for (const auto& q : parse_rat_list(text, what)) {
    if (denominator(q) != 1) throw UsageError(what + ": expected integers");
    out.push_back(static_cast<long>(numerator(q)));
  }
  return out;
}

int parse_l(const std::string& s) {
  if (s == "inf" || s == "infinity") return kInfinity;
  try {
    std::size_t used = 0;
    int l = std::stoi(s, &used);
    if (used != s.size() || l < 1) throw std::invalid_argument(s);
    return l;
  } catch (const std::exception&) {
    throw UsageError("--l expects positive integers or 'inf', got '" + s + "'");
  }
}

std::string l_name(int l) { return l == kInfinity ? "inf" : std::to_string(l); }

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

void print_json(const json& j) { std::cout << j.dump() << "\n"; }

// ---- evolve -------------------------------------------------------------

struct EvolveConfig {
  Input input;
  std::vector<std::string> ls = {"inf"};
  long steps = 6;
  long t0 = 0;
  bool periodic = false;
  bool takahashi = false;
  int rank = 0;
  std::string format = "text";
};

int cmd_evolve(const EvolveConfig& cfg) {
  if (cfg.steps < 0) throw UsageError("--steps must be non-negative");
  std::vector<int> ls;
  for (const auto& s : cfg.ls) ls.push_back(parse_l(s));
  std::vector<std::vector<std::string>> rows(static_cast<std::size_t>(cfg.steps + 1));

  if (cfg.periodic) {
    if (cfg.takahashi) throw UsageError("--takahashi applies to the infinite lattice only");
    const auto p0 = PeriodicState::parse(cfg.input.read(kPeriodicCells));
    for (int l : ls) {
      PeriodicState p = p0;
      for (long t = 0; t <= cfg.steps; ++t) {
        rows[static_cast<std::size_t>(t)].push_back(p.str());
        if (t < cfg.steps) p = evolve_periodic(p, l).state;
      }
    }
  } else {
    const std::string text = cfg.input.read(kCells);
    const auto s0 = BBSState::parse(text, cfg.rank);
    if (cfg.takahashi) {
      if (ls.size() != 1 || ls[0] != kInfinity) throw UsageError("--takahashi renders T_inf only");
      std::vector<std::pair<std::string, BBSState>> frames;
      BBSState s = s0;
      for (long t = 0; t <= cfg.steps; ++t) {
        frames.push_back({"t=" + std::to_string(cfg.t0 + t), s});
        if (t == cfg.steps) break;
        std::vector<BBSState> mids;
        BBSState next = evolve_takahashi(s, &mids);
        for (std::size_t k = 0; k < mids.size(); ++k)
          frames.push_back({"K" + std::to_string(s.n + 1 - static_cast<int>(k)), mids[k]});
        s = next;
      }
      long from = 0, to = static_cast<long>(text.size()) - 1;
      for (const auto& [label, st] : frames)
        if (auto sup = st.support()) {
          from = std::min(from, sup->first);
          to = std::max(to, sup->second);
        }
      if (cfg.format == "json") {
        json j = {{"origin", from}, {"frames", json::array()}};
        for (const auto& [label, st] : frames) j["frames"].push_back({{"label", label}, {"row", st.render(from, to)}});
        print_json(j);
      } else {
        // Intermediate K_a stages are unlabeled in text form.
        for (const auto& [label, st] : frames)
          std::cout << pad(label[0] == 't' ? label : "", 6) << st.render(from, to) << "\n";
      }
      return 0;
    }
    std::vector<std::vector<BBSState>> states(ls.size());
    long from = 0, to = static_cast<long>(text.size()) - 1;
    for (std::size_t j = 0; j < ls.size(); ++j) {
      BBSState s = s0;
      for (long t = 0; t <= cfg.steps; ++t) {
        states[j].push_back(s);
        if (auto sup = s.support()) {
          from = std::min(from, sup->first);
          to = std::max(to, sup->second);
        }
        if (t < cfg.steps) s = evolve(s, ls[j]).state;
      }
    }
    for (std::size_t j = 0; j < ls.size(); ++j)
      for (long t = 0; t <= cfg.steps; ++t)
        rows[static_cast<std::size_t>(t)].push_back(states[j][static_cast<std::size_t>(t)].render(from, to));
  }

  if (cfg.format == "json") {
    json j = {{"periodic", cfg.periodic}, {"l", json::array()}, {"rows", rows}};
    for (int l : ls) j["l"].push_back(l_name(l));
    print_json(j);
    return 0;
  }
  for (long t = 0; t <= cfg.steps; ++t) {
    const std::string label = "t=" + std::to_string(cfg.t0 + t);
    std::string line = cfg.periodic ? "      " + pad(label, 5) : pad(label, 6);
    const auto& cols = rows[static_cast<std::size_t>(t)];
    for (std::size_t j = 0; j < cols.size(); ++j) line += (j ? "  |  " : "") + cols[j];
    std::cout << line << "\n";
  }
  return 0;
}

// ---- scatter ------------------------------------------------------------

int cmd_scatter(const std::string& big_text, const std::string& small_text, bool lattice, const std::string& format) {
  std::vector<int> bigl, smalll;
  try {
    bigl = parse_label(big_text);
    smalll = parse_label(small_text);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  ScatterResult r = lattice ? scatter_two_simulated(bigl, smalll) : scatter_two(bigl, smalll);
  if (format == "json") {
    print_json({{"method", lattice ? "lattice" : "R"},
                {"small_out", format_label(r.small_out)},
                {"big_out", format_label(r.big_out)},
                {"delta", r.delta}});
  } else {
    std::cout << "[" << format_label(bigl) << "] x [" << format_label(smalll) << "] -> [" << format_label(r.small_out)
              << "] x [" << format_label(r.big_out) << "]  delta = " << r.delta << "\n";
  }
  return 0;
}

// ---- kkr and tau --------------------------------------------------------

int infer_rank(const std::vector<int>& w, int rank) {
  if (rank > 0) return rank;
  int top = 2;
  for (int b : w) top = std::max(top, b);
  return top - 1;
}

int cmd_kkr(const Input& in, bool inverse, bool extended, int rank) {
  if (inverse) {
    std::string text = in.text;
    if (!in.file.empty()) {
      std::ifstream f(in.file);
      if (!f) throw UsageError("cannot open " + in.file);
      std::ostringstream ss;
      ss << f.rdbuf();
      text = ss.str();
    }
    RiggedConfiguration rc;
    try {
      rc = rc_from_json(text);
    } catch (const DomainError& e) {
      throw UsageError(in.source() + ": " + e.what());
    }
    std::cout << format_word(kkr_phi_inv(rc, !extended)) << "\n";
    return 0;
  }
  auto w = parse_word(in.read(kCells));
  std::cout << rc_to_json(kkr_phi(w, infer_rank(w, rank), !extended)) << "\n";
  return 0;
}

int cmd_tau(const Input& in, int rank) {
  auto w = parse_word(in.read(kCells));
  const int n = infer_rank(w, rank);
  TauTable tt = tau_table(StringSet::from_rc(kkr_phi(w, n)));
  std::cout << "k";
  for (int a = 0; a <= n + 1; ++a) std::cout << "\ttau_" << a;
  std::cout << "\n";
  for (long k = 0; k <= tt.L; ++k) {
    std::cout << k;
    for (int a = 0; a <= n + 1; ++a) std::cout << "\t" << tt(k, a);
    std::cout << "\n";
  }
  return 0;
}

// ---- analyze ------------------------------------------------------------

json action_json(const ActionVariable& act) {
  json F = json::array();
  for (const auto& row : act.F()) F.push_back(row);
  return {{"L", act.L}, {"mu", act.mu}, {"parts", act.parts}, {"mult", act.mult}, {"vacancies", act.vacancies()},
          {"F", F}};
}

int cmd_analyze(const std::string& what, const Input& in, const std::string& mu_text) {
  if (what == "decompose" || what == "count") {
    std::vector<long> L = parse_long_list(in.read(kNumbers), "L");
    if (L.size() != 1) throw UsageError("expected a single system size L");
    ActionVariable act = ActionVariable::from_partition(parse_long_list(mu_text, "mu"), L[0]);
    if (what == "count") {
      json j = {{"L", act.L},
                {"mu", act.mu},
                {"cardinality", big(isolevel_cardinality(act))},
                {"bethe", rat(cardinality_bethe(act))},
                {"combinatorial", rat(cardinality_combinatorial(act))}};
      if (act.L <= 20) j["enumeration"] = enumerate_isolevel(act).size();
      print_json(j);
      return 0;
    }
    json comps = json::array();
    for (const auto& c : torus_decomposition(act)) {
      json F = json::array();
      for (const auto& row : c.F_gamma) F.push_back(rat_vec(row));
      comps.push_back({{"gamma", c.gamma}, {"multiplicity", big(c.multiplicity)}, {"F_gamma", F},
                       {"det_F_gamma", rat(c.det_F_gamma)}});
    }
    print_json({{"L", act.L}, {"mu", act.mu}, {"cardinality", big(isolevel_cardinality(act))}, {"components", comps}});
    return 0;
  }
  const auto p = PeriodicState::parse(in.read(kPeriodicCells));
  if (what == "action") {
    print_json(action_json(action_variable(p)));
  } else if (what == "angle") {
    AngleVariable J = direct_scattering(p);
    print_json({{"mu", J.action.mu}, {"offset", highest_offset(p)}, {"J", J.J}, {"gamma", internal_symmetry(J)}});
  } else if (what == "period") {
    ActionVariable act = action_variable(p);
    long top = act.parts.empty() ? 1 : act.parts.back();
    json j = json::object();
    for (int l = 1; l <= top; ++l) j["N" + std::to_string(l)] = fundamental_period(p, l);
    print_json(j);
  } else {
    throw UsageError("unknown analysis '" + what + "'");
  }
  return 0;
}

// ---- toda ---------------------------------------------------------------

json toda_json(const TodaState& s) { return rat_vec(s.interleaved()); }

int cmd_toda(const std::string& what, const Input& in, const std::string& z0_text, long steps, long leftmost,
             const std::string& format) {
  if (what == "embed") {
    const auto p = PeriodicState::parse(in.read(kPeriodicCells));
    TodaState s = embed_pbbs(p, leftmost);
    print_json({{"state", toda_json(s)}, {"C", rat_vec(toda_levels(action_variable(p)))},
                {"conserved", rat_vec(conserved_all(s))}});
    return 0;
  }
  if (what == "spectral") {
    SpectralData sd = spectral_data(parse_rat_list(in.read(kNumbers + "C="), "C"));
    json Om = json::array();
    for (const auto& row : sd.Omega) Om.push_back(rat_vec(row));
    print_json({{"C", rat_vec(sd.C)}, {"L", rat(sd.L)}, {"lambda", rat_vec(sd.lambda)}, {"eta", rat_vec(sd.eta)},
                {"Omega", Om}, {"smooth", sd.smooth}});
    return 0;
  }
  if (steps < 0) throw UsageError("--steps must be non-negative");
  std::vector<TodaState> traj;
  if (what == "evolve") {
    TodaState s = TodaState::from_interleaved(parse_rat_list(in.read(kNumbers), "state"));
    for (long t = 0; t <= steps; ++t) {
      traj.push_back(s);
      if (t < steps) s = evolve_toda(s);
    }
  } else if (what == "solve") {
    if (z0_text.empty()) throw UsageError("toda solve needs --z0");
    SpectralData sd = spectral_data(parse_rat_list(in.read(kNumbers + "C="), "C"));
    RatVec z0 = parse_rat_list(z0_text, "Z0");
    for (long t = 0; t <= steps; ++t) traj.push_back(theta_trajectory_state(z0, sd, t));
  } else {
    throw UsageError("unknown toda action '" + what + "'");
  }
  if (format == "json") {
    json rows = json::array();
    for (const auto& s : traj) rows.push_back(toda_json(s));
    print_json({{"trajectory", rows}, {"conserved", rat_vec(conserved_all(traj[0]))}});
  } else if (format == "tsv") {
    std::cout << "t";
    for (std::size_t j = 1; j <= traj[0].N(); ++j) std::cout << "\tQ" << j << "\tW" << j;
    std::cout << "\n";
    for (std::size_t t = 0; t < traj.size(); ++t) {
      std::cout << t;
      for (const auto& q : traj[t].interleaved()) std::cout << "\t" << to_string(q);
      std::cout << "\n";
    }
  } else {
    for (std::size_t t = 0; t < traj.size(); ++t) std::cout << pad("t=" + std::to_string(t), 6) << traj[t].str() << "\n";
  }
  return 0;
}

// ---- selftest -----------------------------------------------------------

int cmd_selftest() {
  std::vector<std::pair<std::string, std::function<bool()>>> checks = {
      {"combinatorial R 13347*135",
       [] {
         auto r = comb_R(CrystalElement::from_word(6, "13347"), CrystalElement::from_word(6, "135"));
         return r.left.word() == "147" && r.right.word() == "13335" && r.energy == 1;
       }},
      {"KKR round trip 11112221322433",
       [] {
         auto w = parse_word("11112221322433");
         return kkr_phi_inv(kkr_phi(w, 3)) == w;
       }},
      {"scattering [554322]x[422]",
       [] {
         auto r = scatter_two(parse_label("554322"), parse_label("422"));
         return format_label(r.small_out) == "553" && format_label(r.big_out) == "442222" && r.delta == 5;
       }},
      {"periods of 1212111222",
       [] {
         auto p = PeriodicState::parse("1212111222");
         return fundamental_period(p, 1) == 10 && fundamental_period(p, 2) == 20 && fundamental_period(p, 3) == 2;
       }},
      {"Toda period matrix for C=(0,1,4,9)",
       [] { return spectral_data({0, 1, 4, 9}).Omega == to_rational(IntMat{{16, -5}, {-5, 10}}); }},
  };
  int failed = 0;
  for (const auto& [name, fn] : checks) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception&) {
    }
    failed += !ok;
    std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
  }
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Box-ball systems, rigged configurations and the tropical periodic Toda lattice"};
  app.set_version_flag("--version", "boxball 0.1.0 (json schema " + std::to_string(kJsonSchema) + ")");
  app.require_subcommand(1);
  std::function<int()> run;

  const std::vector<std::string> formats = {"text", "json", "tsv"};

  EvolveConfig ev;
  auto* evolve = app.add_subcommand("evolve", "Render T_l evolution rows");
  evolve->add_option("state", ev.input.text, "State such as ...2222..332");
  evolve->add_option("--file", ev.input.file, "Read the state from a file")->check(CLI::ExistingFile);
  evolve->add_option("--l", ev.ls, "Carrier capacities, comma separated; 'inf' for T_inf")->delimiter(',');
  evolve->add_option("--steps", ev.steps, "Number of time steps");
  evolve->add_option("--t0", ev.t0, "Time label of the first row");
  evolve->add_flag("--periodic", ev.periodic, "Periodic sl2 lattice");
  evolve->add_flag("--takahashi", ev.takahashi, "Show the K_a stages of T_inf");
  evolve->add_option("--rank", ev.rank, "Rank n (letters 1..n+1); inferred when omitted");
  evolve->add_option("--format", ev.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  evolve->callback([&] { run = [&] { return cmd_evolve(ev); }; });

  std::string big_text, small_text, sc_format = "text";
  bool lattice = false;
  auto* scatter = app.add_subcommand("scatter", "Two-soliton scattering");
  scatter->add_option("big", big_text, "Longer soliton, e.g. 554322")->required();
  scatter->add_option("small", small_text, "Shorter soliton, e.g. 422")->required();
  scatter->add_flag("--lattice", lattice, "Read the outcome off a lattice simulation");
  scatter->add_option("--format", sc_format)->check(CLI::IsMember({"text", "json"}));
  scatter->callback([&] { run = [&] { return cmd_scatter(big_text, small_text, lattice, sc_format); }; });

  Input kin;
  bool inverse = false, extended = false;
  int krank = 0;
  auto* kkr = app.add_subcommand("kkr", "Rigged configuration of a highest path (JSON)");
  kkr->add_option("input", kin.text, "Path word, or rigged configuration JSON with --inverse");
  kkr->add_option("--file", kin.file)->check(CLI::ExistingFile);
  kkr->add_flag("--inverse", inverse, "Map a rigged configuration back to a path");
  kkr->add_flag("--extended", extended, "Accept non-highest paths and unbounded riggings");
  kkr->add_option("--rank", krank);
  kkr->callback([&] { run = [&] { return cmd_kkr(kin, inverse, extended, krank); }; });

  Input tin;
  int trank = 0;
  auto* tau = app.add_subcommand("tau", "Tau function table (TSV)");
  tau->add_option("path", tin.text);
  tau->add_option("--file", tin.file)->check(CLI::ExistingFile);
  tau->add_option("--rank", trank);
  tau->callback([&] { run = [&] { return cmd_tau(tin, trank); }; });

  std::string what, mu_text;
  Input ain;
  auto* analyze = app.add_subcommand("analyze", "Periodic action/angle analysis (JSON)");
  analyze->add_option("what", what, "action, angle, period, decompose or count")
      ->required()
      ->check(CLI::IsMember({"action", "angle", "period", "decompose", "count"}));
  analyze->add_option("input", ain.text, "Periodic state, or L for decompose/count");
  analyze->add_option("--file", ain.file)->check(CLI::ExistingFile);
  analyze->add_option("--mu", mu_text, "Partition for decompose/count, e.g. 3,2,2,1,1,1");
  analyze->callback([&] { run = [&] { return cmd_analyze(what, ain, mu_text); }; });

  std::string toda_what, z0_text, toda_format = "text";
  Input toin;
  long toda_steps = 5, leftmost = 0;
  auto* toda = app.add_subcommand("toda", "Tropical periodic Toda lattice");
  toda->add_option("what", toda_what, "evolve, spectral, solve or embed")
      ->required()
      ->check(CLI::IsMember({"evolve", "spectral", "solve", "embed"}));
  toda->add_option("input", toin.text, "Q1,W1,...,QN,WN | C=... | periodic state");
  toda->add_option("--file", toin.file)->check(CLI::ExistingFile);
  toda->add_option("--z0", z0_text, "Initial theta argument for solve");
  toda->add_option("--steps", toda_steps);
  toda->add_option("--leftmost", leftmost, "Box index (0-based) read first by embed");
  toda->add_option("--format", toda_format)->check(CLI::IsMember(formats));
  toda->callback([&] { run = [&] { return cmd_toda(toda_what, toin, z0_text, toda_steps, leftmost, toda_format); }; });

  auto* selftest = app.add_subcommand("selftest", "Quick fixture checks");
  selftest->callback([&] { run = [] { return cmd_selftest(); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return run();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
