#include "abc/lts.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>
#include <unordered_map>

#include "abc/error.hpp"
#include "abc/print.hpp"

namespace abc {

bool label_equiv(const Label& a, const Label& b, const Solver& solver) {
  if (a.kind != b.kind) return false;
  if (a.kind == Label::Kind::Output) {
    bool fa = solver.is_ff(a.pred), fb = solver.is_ff(b.pred);
    if (fa || fb) return fa && fb;
  }
  return a.env == b.env && a.values == b.values && solver.equiv(a.pred, b.pred);
}

bool LabelUniverse::add(const Label& l, const Solver& solver) {
  Label in = as_input(l);
  for (const auto& existing : labels_)
    if (label_equiv(existing, in, solver)) return false;
  labels_.push_back(std::move(in));
  return true;
}

std::string LabelUniverse::fingerprint() const {
  std::vector<std::string> texts;
  for (const auto& l : labels_) texts.push_back(to_string(l));
  std::sort(texts.begin(), texts.end());
  std::uint64_t h = 14695981039346656037ull;
  for (const auto& t : texts) {
    for (unsigned char c : t) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= '\n';
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::vector<std::size_t>> Lts::outgoing() const {
  std::vector<std::vector<std::size_t>> out(states.size());
  for (std::size_t i = 0; i < transitions.size(); ++i) out[transitions[i].src].push_back(i);
  return out;
}

namespace {

struct Successor {
  Label label;
  std::string label_key;
  CompPtr target;
  std::string key;
  bool tau = false;
};

std::vector<Successor> successors(const CompPtr& state, const Program& prog,
                                  const LabelUniverse& universe, const Solver& solver) {
  std::vector<Successor> out;
  for (auto& s : system_out_steps(state, prog)) {
    bool tau = solver.is_ff(s.label.pred);
    std::string lk = to_string(s.label);
    std::string key = canonical_key(*s.target);
    out.push_back({std::move(s.label), std::move(lk), std::move(s.target), std::move(key), tau});
  }
  for (const auto& u : universe.labels()) {
    std::string lk = to_string(u);
    for (auto& t : system_in_step(state, u, prog)) {
      std::string key = canonical_key(*t);
      out.push_back({u, lk, std::move(t), std::move(key), false});
    }
  }
  std::sort(out.begin(), out.end(), [](const Successor& a, const Successor& b) {
    return std::tie(a.label_key, a.key) < std::tie(b.label_key, b.key);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Successor& a, const Successor& b) {
                          return a.label_key == b.label_key && a.key == b.key;
                        }),
            out.end());
  return out;
}

template <class F>
void parallel_for(std::size_t n, unsigned jobs, const F& body) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  if (jobs <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < std::min<std::size_t>(jobs, n); ++j) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

Lts explore(const Subject& subject, const LabelUniverse& universe, const Solver& solver,
            const ExploreOptions& opts) {
  Lts lts;
  std::unordered_map<std::string, std::size_t> index;
  auto root_key = canonical_key(*subject.system);
  index.emplace(root_key, 0);
  lts.states.push_back(subject.system);
  lts.keys.push_back(std::move(root_key));

  std::vector<std::size_t> layer{0};
  std::set<std::string> dropped;
  for (std::size_t depth = 0; !layer.empty(); ++depth) {
    if (depth >= opts.max_depth) {
      lts.truncated = true;
      lts.truncation_reason = "depth bound " + std::to_string(opts.max_depth) + " reached";
      lts.frontier = layer.size();
      break;
    }
    std::vector<std::vector<Successor>> succ(layer.size());
    parallel_for(layer.size(), opts.jobs, [&](std::size_t i) {
      succ[i] = successors(lts.states[layer[i]], *subject.program, universe, solver);
    });
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < layer.size(); ++i) {
      for (auto& s : succ[i]) {
        auto it = index.find(s.key);
        std::size_t dst;
        if (it != index.end()) {
          dst = it->second;
        } else if (lts.states.size() >= opts.max_states) {
          lts.truncated = true;
          lts.truncation_reason = "state bound " + std::to_string(opts.max_states) + " reached";
          dropped.insert(s.key);
          continue;
        } else {
          dst = lts.states.size();
          index.emplace(s.key, dst);
          lts.states.push_back(std::move(s.target));
          lts.keys.push_back(std::move(s.key));
          next.push_back(dst);
        }
        lts.transitions.push_back({layer[i], std::move(s.label), dst, s.tau});
      }
    }
    layer = std::move(next);
  }
  if (!dropped.empty()) lts.frontier += dropped.size();
  return lts;
}

void require_complete(const Lts& lts) {
  if (lts.truncated) throw BoundExceeded(lts.truncation_reason, lts.frontier);
}

LabelUniverse shared_alphabet(const std::vector<Subject>& subjects, const Solver& solver,
                              const LabelUniverse& extra, const ExploreOptions& opts,
                              std::size_t max_rounds) {
  LabelUniverse u = extra;
  for (std::size_t round = 0; round < max_rounds; ++round) {
    bool grew = false;
    for (const auto& s : subjects) {
      Lts lts = explore(s, u, solver, opts);
      for (const auto& t : lts.transitions)
        if (t.label.is_output() && !t.tau) grew = u.add(t.label, solver) || grew;
    }
    if (!grew) break;
  }
  return u;
}

Label tau_label() {
  return make_label(Label::Kind::Output, {}, make_ff(), {});
}

namespace {

std::vector<std::vector<std::size_t>> tau_closure(const Lts& lts) {
  std::vector<std::vector<std::size_t>> tau_succ(lts.states.size());
  for (const auto& t : lts.transitions)
    if (t.tau) tau_succ[t.src].push_back(t.dst);
  std::vector<std::vector<std::size_t>> closure(lts.states.size());
  std::vector<char> seen(lts.states.size());
  for (std::size_t s = 0; s < lts.states.size(); ++s) {
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      closure[s].push_back(x);
      for (auto y : tau_succ[x])
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    std::sort(closure[s].begin(), closure[s].end());
  }
  return closure;
}

}  // namespace

Lts weak_closure(const Lts& lts) {
  Lts out;
  out.states = lts.states;
  out.keys = lts.keys;
  out.truncated = lts.truncated;
  out.frontier = lts.frontier;
  out.truncation_reason = lts.truncation_reason;

  auto closure = tau_closure(lts);
  auto outgoing = lts.outgoing();
  std::set<std::tuple<std::size_t, std::string, std::size_t>> seen;
  Label tau = tau_label();
  const std::string tau_key = "tau";
  for (std::size_t s = 0; s < lts.states.size(); ++s) {
    for (auto t : closure[s])
      if (seen.emplace(s, tau_key, t).second) out.transitions.push_back({s, tau, t, true});
    for (auto s1 : closure[s]) {
      for (auto ti : outgoing[s1]) {
        const auto& tr = lts.transitions[ti];
        if (tr.tau) continue;
        std::string lk = to_string(tr.label);
        for (auto t : closure[tr.dst])
          if (seen.emplace(s, lk, t).second) out.transitions.push_back({s, tr.label, t, false});
      }
    }
  }
  std::stable_sort(out.transitions.begin(), out.transitions.end(),
                   [](const Transition& a, const Transition& b) { return a.src < b.src; });
  return out;
}

std::set<std::pair<std::size_t, std::size_t>> reduction_over(const Lts& lts, const PredPtr& pred,
                                                              const Solver& solver, bool weak) {
  std::set<std::pair<std::size_t, std::size_t>> strong;
  for (const auto& t : lts.transitions)
    if (t.label.is_output() && solver.equiv(t.label.pred, pred)) strong.emplace(t.src, t.dst);
  if (!weak) return strong;
  auto closure = tau_closure(lts);
  std::vector<std::vector<std::size_t>> pre(lts.states.size());
  for (std::size_t s = 0; s < lts.states.size(); ++s)
    for (auto t : closure[s]) pre[t].push_back(s);
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [a, b] : strong)
    for (auto s : pre[a])
      for (auto t : closure[b]) out.emplace(s, t);
  return out;
}

std::string export_aut(const Lts& lts, const Solver& solver) {
  std::string out = "des (0," + std::to_string(lts.transitions.size()) + "," +
                    std::to_string(lts.states.size()) + ")\n";
  for (const auto& t : lts.transitions) {
    std::string text;
    if (t.tau) {
      text = "tau";
    } else {
      Label l = t.label;
      l.pred = solver.normalize(l.pred);
      text = to_string(l);
      std::replace(text.begin(), text.end(), '"', '\'');
    }
    out += "(" + std::to_string(t.src) + ",\"" + text + "\"," + std::to_string(t.dst) + ")\n";
  }
  return out;
}

void write_aut(const Lts& lts, const Solver& solver, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path + " for writing");
  f << export_aut(lts, solver);
  if (!f) throw Error("error writing " + path);
}

}  // namespace abc
