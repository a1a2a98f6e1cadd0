#include "abc/equivalence.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace abc {

std::vector<std::string> Witness::trace() const {
  std::vector<std::string> out;
  for (const auto& s : steps) out.push_back(to_string(s.label));
  return out;
}

namespace {

// Two LTSs laid side by side with labels replaced by label_equiv classes.
struct Graph {
  std::size_t left_size = 0;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj;  // (class, dst)
  std::vector<Label> class_rep;
};

Graph combine(const Lts& left, const Lts& right, const Solver& solver) {
  Graph g;
  g.left_size = left.states.size();
  g.adj.resize(left.states.size() + right.states.size());
  std::map<std::string, std::size_t> by_text;
  auto classify = [&](const Label& l) {
    std::string text = to_string(l);
    auto it = by_text.find(text);
    if (it != by_text.end()) return it->second;
    std::size_t cls = g.class_rep.size();
    for (std::size_t c = 0; c < g.class_rep.size(); ++c)
      if (label_equiv(g.class_rep[c], l, solver)) {
        cls = c;
        break;
      }
    if (cls == g.class_rep.size()) g.class_rep.push_back(l);
    by_text.emplace(std::move(text), cls);
    return cls;
  };
  for (const auto& t : left.transitions) g.adj[t.src].emplace_back(classify(t.label), t.dst);
  for (const auto& t : right.transitions)
    g.adj[g.left_size + t.src].emplace_back(classify(t.label), g.left_size + t.dst);
  for (auto& a : g.adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return g;
}

using Partition = std::vector<std::size_t>;
using Signature = std::vector<std::pair<std::size_t, std::size_t>>;

Signature signature(const Graph& g, const Partition& p, std::size_t s) {
  Signature sig;
  for (const auto& [cls, dst] : g.adj[s]) sig.emplace_back(cls, p[dst]);
  std::sort(sig.begin(), sig.end());
  sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
  return sig;
}

// Signature refinement; history[k] is the partition after k rounds.
std::vector<Partition> refine(const Graph& g) {
  std::vector<Partition> history{Partition(g.adj.size(), 0)};
  std::size_t blocks = g.adj.empty() ? 0 : 1;
  while (true) {
    const Partition& cur = history.back();
    std::map<std::pair<std::size_t, Signature>, std::size_t> ids;
    Partition next(g.adj.size());
    for (std::size_t s = 0; s < g.adj.size(); ++s) {
      auto key = std::make_pair(cur[s], signature(g, cur, s));
      auto [it, _] = ids.emplace(std::move(key), ids.size());
      next[s] = it->second;
    }
    if (ids.size() == blocks) break;
    blocks = ids.size();
    history.push_back(std::move(next));
  }
  return history;
}

// First round that separates s and t, or 0 if none does.
std::size_t separation(const std::vector<Partition>& history, std::size_t s, std::size_t t) {
  for (std::size_t k = 1; k < history.size(); ++k)
    if (history[k][s] != history[k][t]) return k;
  return 0;
}

Witness build_witness(const Graph& g, const std::vector<Partition>& history, std::size_t s,
                      std::size_t t) {
  Witness w;
  auto local = [&](std::size_t x) { return x < g.left_size ? x : x - g.left_size; };
  std::size_t k = separation(history, s, t);
  while (k > 0) {
    const Partition& prev = history[k - 1];
    auto sig_s = signature(g, prev, s), sig_t = signature(g, prev, t);
    std::pair<std::size_t, std::size_t> move;
    bool attacker_is_s;
    auto missing = [](const Signature& a, const Signature& b) {
      for (const auto& m : a)
        if (!std::binary_search(b.begin(), b.end(), m)) return std::optional(m);
      return std::optional<std::pair<std::size_t, std::size_t>>();
    };
    if (auto m = missing(sig_s, sig_t)) {
      move = *m;
      attacker_is_s = true;
    } else {
      move = *missing(sig_t, sig_s);
      attacker_is_s = false;
    }
    std::size_t att = attacker_is_s ? s : t, def = attacker_is_s ? t : s;
    std::size_t att_to = 0;
    for (const auto& [cls, dst] : g.adj[att])
      if (cls == move.first && prev[dst] == move.second) {
        att_to = dst;
        break;
      }
    WitnessStep step;
    step.attacker = att < g.left_size ? 0 : 1;
    step.label = g.class_rep[move.first];
    step.attacker_from = local(att);
    step.attacker_to = local(att_to);
    step.defender_from = local(def);
    std::optional<std::size_t> best;
    std::size_t best_k = 0;
    for (const auto& [cls, dst] : g.adj[def]) {
      if (cls != move.first) continue;
      std::size_t sep = separation(history, att_to, dst);
      if (!best || sep > best_k) {
        best = dst;
        best_k = sep;
      }
    }
    if (best) step.defender_to = local(*best);
    w.steps.push_back(std::move(step));
    if (!best) break;
    s = attacker_is_s ? att_to : *best;
    t = attacker_is_s ? *best : att_to;
    k = best_k;
  }
  return w;
}

}  // namespace

Verdict compare_lts(const Lts& left, const Lts& right, const Solver& solver, bool weak) {
  Verdict v;
  v.weak = weak;
  v.inconclusive = left.truncated || right.truncated;
  v.left_states = left.states.size();
  v.right_states = right.states.size();
  Lts l = weak ? weak_closure(left) : left;
  Lts r = weak ? weak_closure(right) : right;
  Graph g = combine(l, r, solver);
  auto history = refine(g);
  std::size_t a = l.initial(), b = g.left_size + r.initial();
  v.equivalent = history.back()[a] == history.back()[b];
  if (!v.equivalent) v.witness = build_witness(g, history, a, b);
  return v;
}

Verdict check_bisim(const Subject& left, const Subject& right, const Solver& solver,
                    const BisimOptions& opts) {
  LabelUniverse u = opts.close_universe
                        ? shared_alphabet({left, right}, solver, opts.universe, opts.explore)
                        : opts.universe;
  Lts l = explore(left, u, solver, opts.explore);
  Lts r = explore(right, u, solver, opts.explore);
  Verdict v = compare_lts(l, r, solver, opts.weak);
  v.universe_fingerprint = u.fingerprint();
  v.universe_size = u.size();
  return v;
}

Verdict strong_bisim(const Subject& left, const Subject& right, const Solver& solver,
                     BisimOptions opts) {
  opts.weak = false;
  return check_bisim(left, right, solver, opts);
}

Verdict weak_bisim(const Subject& left, const Subject& right, const Solver& solver,
                   BisimOptions opts) {
  opts.weak = true;
  return check_bisim(left, right, solver, opts);
}

bool replay_witness(const Witness& w, const Lts& left, const Lts& right, const Solver& solver,
                    bool weak) {
  if (w.steps.empty()) return false;
  Lts l = weak ? weak_closure(left) : left;
  Lts r = weak ? weak_closure(right) : right;
  const Lts* sides[2] = {&l, &r};
  auto has_move = [&](const Lts& lts, std::size_t from, const Label& label, std::size_t to) {
    for (const auto& t : lts.transitions)
      if (t.src == from && t.dst == to && label_equiv(t.label, label, solver)) return true;
    return false;
  };
  std::size_t pos[2] = {l.initial(), r.initial()};
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const auto& st = w.steps[i];
    if (st.attacker != 0 && st.attacker != 1) return false;
    int att = st.attacker, def = 1 - att;
    if (st.attacker_from != pos[att] || st.defender_from != pos[def]) return false;
    if (!has_move(*sides[att], st.attacker_from, st.label, st.attacker_to)) return false;
    bool last = i + 1 == w.steps.size();
    if (last) {
      if (st.defender_to) return false;
      for (const auto& t : sides[def]->transitions)
        if (t.src == st.defender_from && label_equiv(t.label, st.label, solver)) return false;
      return true;
    }
    if (!st.defender_to || !has_move(*sides[def], st.defender_from, st.label, *st.defender_to))
      return false;
    pos[att] = st.attacker_to;
    pos[def] = *st.defender_to;
  }
  return false;
}

namespace {

void add_barb(std::vector<PredPtr>& out, const PredPtr& p, const Solver& solver) {
  for (const auto& q : out)
    if (solver.equiv(p, q)) return;
  out.push_back(p);
}

}  // namespace

std::vector<PredPtr> barbs(const Lts& lts, std::size_t state, const Solver& solver) {
  std::vector<PredPtr> out;
  for (const auto& t : lts.transitions)
    if (t.src == state && t.label.is_output() && !t.tau) add_barb(out, t.label.pred, solver);
  return out;
}

std::vector<PredPtr> weak_barbs(const Lts& lts, std::size_t state, const Solver& solver) {
  std::vector<char> seen(lts.states.size());
  std::vector<std::size_t> stack{state};
  seen[state] = 1;
  auto outgoing = lts.outgoing();
  std::vector<PredPtr> out;
  while (!stack.empty()) {
    auto s = stack.back();
    stack.pop_back();
    for (auto i : outgoing[s]) {
      const auto& t = lts.transitions[i];
      if (t.tau) {
        if (!seen[t.dst]) {
          seen[t.dst] = 1;
          stack.push_back(t.dst);
        }
      } else if (t.label.is_output()) {
        add_barb(out, t.label.pred, solver);
      }
    }
  }
  return out;
}

std::vector<PredPtr> barbs(const CompPtr& c, const Program& prog, const Solver& solver) {
  std::vector<PredPtr> out;
  for (const auto& s : system_out_steps(c, prog))
    if (!solver.is_ff(s.label.pred)) add_barb(out, s.label.pred, solver);
  return out;
}

bool same_barbs(const std::vector<PredPtr>& a, const std::vector<PredPtr>& b,
                const Solver& solver) {
  auto covered = [&](const std::vector<PredPtr>& x, const std::vector<PredPtr>& y) {
    for (const auto& p : x) {
      bool found = false;
      for (const auto& q : y) found = found || solver.equiv(p, q);
      if (!found) return false;
    }
    return true;
  };
  return covered(a, b) && covered(b, a);
}

}  // namespace abc
