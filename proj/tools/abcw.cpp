// abcw: command-line front end for the AbC workbench.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "abc/bpi.hpp"
#include "abc/equivalence.hpp"
#include "abc/error.hpp"
#include "abc/eval.hpp"
#include "abc/lts.hpp"
#include "abc/parser.hpp"
#include "abc/print.hpp"

#ifndef ABC_CORPUS_DIR
#define ABC_CORPUS_DIR "corpus"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;
constexpr const char* kSchema = "abcw/1";

struct Config {
  bool json = false;
  unsigned jobs = 1;
  std::size_t max_states = 100000;
  std::size_t max_depth = 1000;
  std::string universe_file;
  std::string domains_file;
  bool strict = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw abc::Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_bpi(const std::string& path) { return fs::path(path).extension() == ".bpi"; }

abc::System load_abc(const std::string& path) {
  try {
    return abc::parse_abc(read_file(path));
  } catch (const abc::ParseError& e) {
    throw abc::Error(path + ":" + e.what());
  }
}

abc::bpi::TermPtr load_bpi(const std::string& path) {
  try {
    return abc::bpi::parse_bpi(read_file(path));
  } catch (const abc::ParseError& e) {
    throw abc::Error(path + ":" + e.what());
  }
}

// A loaded system with the extra universe and domains from the flags.
struct Loaded {
  abc::System sys;
  abc::Program prog;
};

Loaded load_system(const std::string& path, const Config& cfg) {
  Loaded l{load_abc(path), {}};
  if (!l.sys.root) throw abc::Error(path + ": no system declared");
  if (!cfg.domains_file.empty()) l.sys.domains.merge(load_abc(cfg.domains_file).domains);
  if (!cfg.universe_file.empty())
    for (auto& lab : load_abc(cfg.universe_file).universe) l.sys.universe.push_back(lab);
  abc::check_definitions(l.sys.defs);
  abc::check_component(*l.sys.root, l.sys.defs);
  l.prog = l.sys.program();
  l.prog.strict = cfg.strict;
  return l;
}

abc::LabelUniverse universe_of(const std::vector<abc::Label>& labels, const abc::Solver& solver) {
  abc::LabelUniverse u;
  for (const auto& l : labels) u.add(l, solver);
  return u;
}

abc::ExploreOptions explore_options(const Config& cfg) {
  abc::ExploreOptions o;
  o.max_states = cfg.max_states;
  o.max_depth = cfg.max_depth;
  o.jobs = cfg.jobs;
  return o;
}

void emit_json(json j) {
  j["schema"] = kSchema;
  std::cout << j.dump(2) << "\n";
}

int bound_error(const abc::Lts& lts) {
  std::cerr << "abcw: exploration incomplete: " << lts.truncation_reason << " ("
            << lts.frontier << " states unexpanded)\n";
  return kError;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_parse(const Config& cfg, const std::string& path) {
  std::string text;
  if (is_bpi(path)) {
    text = abc::bpi::pretty(*load_bpi(path));
  } else {
    text = abc::pretty(load_abc(path));
  }
  if (cfg.json) {
    emit_json({{"command", "parse"}, {"kind", is_bpi(path) ? "bpi" : "abc"}, {"text", text}});
  } else {
    std::cout << text;
    if (is_bpi(path)) std::cout << "\n";
  }
  return kOk;
}

int cmd_steps(const Config& cfg, const std::string& path) {
  Loaded l = load_system(path, cfg);
  abc::Solver solver(l.sys.domains);
  json steps = json::array();
  auto report = [&](const abc::Label& lab, const abc::CompPtr& target) {
    if (cfg.json) {
      steps.push_back({{"label", abc::to_string(lab)}, {"target", abc::to_string(*target)}});
    } else {
      std::cout << abc::to_string(lab) << "\n  -> " << abc::to_string(*target) << "\n";
    }
  };
  for (const auto& s : abc::system_out_steps(l.sys.root, l.prog)) report(s.label, s.target);
  for (const auto& u : universe_of(l.sys.universe, solver).labels())
    for (const auto& t : abc::system_in_step(l.sys.root, u, l.prog)) report(u, t);
  if (cfg.json) emit_json({{"command", "steps"}, {"steps", steps}});
  return kOk;
}

int cmd_explore(const Config& cfg, const std::string& path, const std::string& out,
                bool close) {
  Loaded l = load_system(path, cfg);
  abc::Solver solver(l.sys.domains);
  abc::Subject subject{l.sys.root, &l.prog};
  auto opts = explore_options(cfg);
  abc::LabelUniverse u = universe_of(l.sys.universe, solver);
  if (close) u = abc::shared_alphabet({subject}, solver, u, opts);
  abc::Lts lts = abc::explore(subject, u, solver, opts);
  if (lts.truncated) return bound_error(lts);
  std::string aut = abc::export_aut(lts, solver);
  if (!out.empty()) {
    abc::write_aut(lts, solver, out);
  } else if (!cfg.json) {
    std::cout << aut;
  }
  if (cfg.json) {
    json j{{"command", "explore"},
           {"states", lts.states.size()},
           {"transitions", lts.transitions.size()},
           {"universe_fingerprint", u.fingerprint()},
           {"universe_size", u.size()}};
    if (out.empty()) j["aut"] = aut;
    emit_json(j);
  }
  return kOk;
}

int cmd_barbs(const Config& cfg, const std::string& path) {
  Loaded l = load_system(path, cfg);
  abc::Solver solver(l.sys.domains);
  abc::Subject subject{l.sys.root, &l.prog};
  auto opts = explore_options(cfg);
  auto u = abc::shared_alphabet({subject}, solver, universe_of(l.sys.universe, solver), opts);
  abc::Lts lts = abc::explore(subject, u, solver, opts);
  if (lts.truncated) return bound_error(lts);
  auto render = [&](const std::vector<abc::PredPtr>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(abc::to_string(*solver.normalize(p)));
    return out;
  };
  auto strong = render(abc::barbs(lts, lts.initial(), solver));
  auto weak = render(abc::weak_barbs(lts, lts.initial(), solver));
  if (cfg.json) {
    emit_json({{"command", "barbs"}, {"strong", strong}, {"weak", weak}});
  } else {
    for (const auto& b : strong) std::cout << "strong " << b << "\n";
    for (const auto& b : weak) std::cout << "weak " << b << "\n";
  }
  return kOk;
}

json witness_json(const abc::Witness& w) {
  json steps = json::array();
  for (const auto& s : w.steps) {
    json j{{"attacker", s.attacker == 0 ? "left" : "right"},
           {"label", abc::to_string(s.label)},
           {"attacker_from", s.attacker_from},
           {"attacker_to", s.attacker_to},
           {"defender_from", s.defender_from}};
    j["defender_to"] = s.defender_to ? json(*s.defender_to) : json(nullptr);
    steps.push_back(j);
  }
  return steps;
}

abc::Verdict run_bisim(const Loaded& a, const Loaded& b, bool weak, const Config& cfg) {
  abc::DomainContext domains = a.sys.domains;
  domains.merge(b.sys.domains);
  abc::Solver solver(domains);
  abc::BisimOptions opts;
  opts.weak = weak;
  opts.explore = explore_options(cfg);
  for (const auto& l : a.sys.universe) opts.universe.add(l, solver);
  for (const auto& l : b.sys.universe) opts.universe.add(l, solver);
  return abc::check_bisim({a.sys.root, &a.prog}, {b.sys.root, &b.prog}, solver, opts);
}

int cmd_check_bisim(const Config& cfg, const std::string& left, const std::string& right,
                    bool weak) {
  Loaded a = load_system(left, cfg);
  Loaded b = load_system(right, cfg);
  abc::Verdict v = run_bisim(a, b, weak, cfg);
  std::string verdict =
      v.inconclusive ? "inconclusive" : (v.equivalent ? "equivalent" : "not equivalent");
  if (cfg.json) {
    json j{{"command", "check-bisim"},
           {"mode", weak ? "weak" : "strong"},
           {"verdict", verdict},
           {"equivalent", v.equivalent},
           {"inconclusive", v.inconclusive},
           {"universe_fingerprint", v.universe_fingerprint},
           {"universe_size", v.universe_size},
           {"left_states", v.left_states},
           {"right_states", v.right_states}};
    j["witness"] = v.witness ? witness_json(*v.witness) : json(nullptr);
    emit_json(j);
  } else {
    std::cout << "verdict: " << verdict << " (" << (weak ? "weak" : "strong") << ")\n"
              << "universe: " << v.universe_size << " labels, fingerprint "
              << v.universe_fingerprint << "\n"
              << "states: left " << v.left_states << ", right " << v.right_states << "\n";
    if (v.witness) {
      std::cout << "witness:\n";
      std::size_t i = 1;
      for (const auto& s : v.witness->steps) {
        std::cout << "  " << i++ << ". " << (s.attacker == 0 ? "left" : "right") << " "
                  << abc::to_string(s.label);
        if (!s.defender_to) std::cout << "  (no matching move)";
        std::cout << "\n";
      }
    }
  }
  if (v.inconclusive) {
    std::cerr << "abcw: exploration hit a bound; verdict covers the explored part only\n";
    return kError;
  }
  return v.equivalent ? kOk : kNegative;
}

abc::System translate(const abc::bpi::Program& prog) {
  abc::bpi::Encoding enc = abc::bpi::encode(prog);
  abc::System sys;
  sys.root = enc.system;
  sys.defs = enc.defs;
  return sys;
}

int cmd_translate(const Config& cfg, const std::string& path, const std::string& out) {
  std::string text = abc::pretty(translate(abc::bpi::lift(load_bpi(path))));
  if (!out.empty()) {
    std::ofstream f(out, std::ios::binary);
    if (!(f << text)) throw abc::Error("cannot write " + out);
  } else if (!cfg.json) {
    std::cout << text;
  }
  if (cfg.json) emit_json({{"command", "translate"}, {"text", text}});
  return kOk;
}

int cmd_verify_encoding(const Config& cfg, const std::string& path) {
  abc::bpi::Program prog = abc::bpi::lift(load_bpi(path));
  abc::bpi::Bounds bounds;
  bounds.max_states = cfg.max_states;
  auto rep = abc::bpi::correspondence_check(prog, bounds);
  if (cfg.json) {
    emit_json({{"command", "verify-encoding"},
               {"ok", rep.ok},
               {"states", rep.states},
               {"transitions", rep.transitions},
               {"inputs", rep.inputs},
               {"violations", rep.violations}});
  } else {
    std::cout << (rep.ok ? "ok" : "violation") << ": " << rep.states << " states, "
              << rep.transitions << " transitions, " << rep.inputs << " input checks\n";
    for (const auto& v : rep.violations) std::cout << "  " << v << "\n";
  }
  return rep.ok ? kOk : kNegative;
}

int cmd_corpus(const Config& cfg, const std::string& dir) {
  json manifest = json::parse(read_file((fs::path(dir) / "manifest.json").string()));
  json results = json::array();
  bool all_ok = true;
  auto record = [&](const std::string& kind, const std::string& name, bool ok,
                    const std::string& detail) {
    all_ok = all_ok && ok;
    if (cfg.json) {
      results.push_back({{"kind", kind}, {"name", name}, {"ok", ok}, {"detail", detail}});
    } else {
      std::cout << (ok ? "PASS " : "FAIL ") << kind << " " << name;
      if (!detail.empty()) std::cout << " (" << detail << ")";
      std::cout << "\n";
    }
  };

  std::vector<fs::path> files;
  for (const auto& sub : {"abc", "bpi"})
    for (const auto& e : fs::directory_iterator(fs::path(dir) / sub)) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    std::string name = f.lexically_relative(dir).generic_string();
    try {
      bool ok;
      if (is_bpi(f.string())) {
        auto t = load_bpi(f.string());
        ok = abc::bpi::equal(t, abc::bpi::parse_bpi(abc::bpi::pretty(*t)));
      } else {
        auto s = load_abc(f.string());
        ok = abc::equal(s, abc::parse_abc(abc::pretty(s)));
      }
      record("round-trip", name, ok, "");
    } catch (const abc::Error& e) {
      record("round-trip", name, false, e.what());
    }
  }

  for (const auto& entry : manifest["bisim"]) {
    std::string name = entry["name"];
    bool expect = entry["expect"];
    try {
      Loaded a = load_system((fs::path(dir) / entry["left"].get<std::string>()).string(), cfg);
      Loaded b = load_system((fs::path(dir) / entry["right"].get<std::string>()).string(), cfg);
      abc::Verdict v = run_bisim(a, b, entry.value("weak", true), cfg);
      bool ok = !v.inconclusive && v.equivalent == expect;
      record("bisim", name, ok,
             v.inconclusive ? "inconclusive" : (v.equivalent ? "equivalent" : "not equivalent"));
    } catch (const abc::Error& e) {
      record("bisim", name, false, e.what());
    }
  }

  for (const auto& entry : manifest["encoding"]) {
    std::string rel = entry;
    try {
      auto prog = abc::bpi::lift(load_bpi((fs::path(dir) / rel).string()));
      auto rep = abc::bpi::correspondence_check(prog);
      record("encoding", rel, rep.ok,
             rep.ok ? std::to_string(rep.states) + " states"
                    : (rep.violations.empty() ? "" : rep.violations.front()));
    } catch (const abc::Error& e) {
      record("encoding", rel, false, e.what());
    }
  }

  for (const auto& entry : manifest["bpi_pairs"]) {
    std::string name = entry["name"];
    bool expect = entry["expect"];
    try {
      auto a = abc::bpi::lift(abc::bpi::parse_bpi(entry["left"].get<std::string>()));
      auto b = abc::bpi::lift(abc::bpi::parse_bpi(entry["right"].get<std::string>()));
      bool weak = entry.value("weak", true);
      bool source = abc::bpi::bisimilar(a, b, weak);
      Loaded ea{translate(a), {}}, eb{translate(b), {}};
      ea.prog = ea.sys.program();
      eb.prog = eb.sys.program();
      abc::Verdict v = run_bisim(ea, eb, weak, cfg);
      bool ok = source == expect && !v.inconclusive && v.equivalent == source;
      record("bpi-bisim", name, ok,
             std::string(source ? "bisimilar" : "not bisimilar") + ", encodings " +
                 (v.equivalent ? "equivalent" : "not equivalent"));
    } catch (const abc::Error& e) {
      record("bpi-bisim", name, false, e.what());
    }
  }

  if (cfg.json) emit_json({{"command", "corpus"}, {"ok", all_ok}, {"results", results}});
  return all_ok ? kOk : kNegative;
}

std::size_t env_default(const char* var, std::size_t fallback) {
  const char* v = std::getenv(var);
  if (!v || !*v) return fallback;
  try {
    return static_cast<std::size_t>(std::stoull(v));
  } catch (const std::exception&) {
    std::cerr << "abcw: ignoring invalid " << var << "=" << v << "\n";
    return fallback;
  }
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  cfg.max_states = env_default("ABCW_MAX_STATES", cfg.max_states);
  cfg.max_depth = env_default("ABCW_MAX_DEPTH", cfg.max_depth);

  CLI::App app{"abcw - AbC calculus workbench"};
  app.require_subcommand(1);
  app.add_flag("--json", cfg.json, "Machine-readable JSON output");
  app.add_option("--jobs", cfg.jobs, "Exploration threads (0 = all cores)")->capture_default_str();
  app.add_option("--max-states", cfg.max_states, "State bound (env ABCW_MAX_STATES)")
      ->capture_default_str();
  app.add_option("--max-depth", cfg.max_depth, "Depth bound (env ABCW_MAX_DEPTH)")
      ->capture_default_str();
  app.add_option("--universe", cfg.universe_file, "Extra universe entries from an .abc file")
      ->check(CLI::ExistingFile);
  app.add_option("--domains", cfg.domains_file, "Extra domain declarations from an .abc file")
      ->check(CLI::ExistingFile);
  app.add_flag("--strict", cfg.strict, "Treat evaluation errors as fatal");

  std::string file, file2, out, dir = ABC_CORPUS_DIR;
  bool strong = false, weak = false, no_close = false;

  auto* parse = app.add_subcommand("parse", "Parse a file and print it back");
  parse->add_option("file", file, ".abc or .bpi file")->required()->check(CLI::ExistingFile);

  auto* steps = app.add_subcommand("steps", "One-step successors of the system");
  steps->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* explore = app.add_subcommand("explore", "Explore the state space and emit .aut");
  explore->add_option("file", file)->required()->check(CLI::ExistingFile);
  explore->add_option("-o,--output", out, "Write the .aut here instead of stdout");
  explore->add_flag("--no-closure", no_close, "Use only the declared universe");

  auto* barbs = app.add_subcommand("barbs", "Strong and weak barbs of the initial state");
  barbs->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* bisim = app.add_subcommand("check-bisim", "Decide bisimilarity of two systems");
  auto* mode = bisim->add_option_group("mode");
  mode->add_flag("--strong", strong, "Strong bisimilarity");
  mode->add_flag("--weak", weak, "Weak bisimilarity (default)");
  mode->require_option(0, 1);
  bisim->add_option("left", file)->required()->check(CLI::ExistingFile);
  bisim->add_option("right", file2)->required()->check(CLI::ExistingFile);

  auto* tr = app.add_subcommand("translate", "Encode a bpi term as an AbC system");
  tr->add_option("file", file)->required()->check(CLI::ExistingFile);
  tr->add_option("-o,--output", out, "Write the .abc here instead of stdout");

  auto* ve = app.add_subcommand("verify-encoding", "Check the encoding step correspondence");
  ve->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* corpus = app.add_subcommand("corpus", "Run the regression corpus");
  corpus->add_option("--dir", dir, "Corpus directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*parse) return cmd_parse(cfg, file);
    if (*steps) return cmd_steps(cfg, file);
    if (*explore) return cmd_explore(cfg, file, out, !no_close);
    if (*barbs) return cmd_barbs(cfg, file);
    if (*bisim) return cmd_check_bisim(cfg, file, file2, !strong);
    if (*tr) return cmd_translate(cfg, file, out);
    if (*ve) return cmd_verify_encoding(cfg, file);
    if (*corpus) return cmd_corpus(cfg, dir);
  } catch (const abc::BoundExceeded& e) {
    std::cerr << "abcw: " << e.what() << "\n";
    return kError;
  } catch (const abc::Error& e) {
    std::cerr << "abcw: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "abcw: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
