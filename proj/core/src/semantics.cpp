#include "abc/semantics.hpp"

#include "abc/eval.hpp"
#include "abc/predicate.hpp"
#include "abc/print.hpp"

namespace abc {

Label make_label(Label::Kind kind, AttributeEnv env, PredPtr pred, Values values) {
  return Label{kind, std::move(env), std::move(pred), std::move(values)};
}

Label as_input(const Label& output) {
  Label l = output;
  l.kind = Label::Kind::Input;
  return l;
}

std::string to_string(const Label& l) {
  const char* kind = l.kind == Label::Kind::Output  ? "out"
                     : l.kind == Label::Kind::Input ? "in"
                                                    : "discard";
  return std::string(kind) + " " + l.env.to_string() + " [" + to_string(*l.pred) + "] " +
         to_string(l.values);
}

namespace {

struct ProcOut {
  PredPtr pred;
  Values values;
  std::vector<Update> updates;
  ProcPtr next;
};

struct ProcIn {
  std::vector<Update> updates;
  ProcPtr next;
};

std::vector<Update> substitute_updates(const std::vector<Update>& us, const Substitution& sigma) {
  std::vector<Update> out;
  for (const auto& u : us) out.push_back({u.attr, substitute(u.value, sigma)});
  return out;
}

void proc_outputs(const ProcPtr& p, const AttributeEnv& env, const Program& prog,
                  std::vector<ProcOut>& out) {
  switch (p->kind) {
    case Process::Kind::Nil:
    case Process::Kind::Input: return;
    case Process::Kind::Output:
      try {
        Values vs;
        for (const auto& e : p->exprs) vs.push_back(eval_expr(*e, env));
        out.push_back({close(p->pred, env), std::move(vs), p->updates, p->left});
      } catch (const EvalError&) {
        if (prog.strict) throw;
      }
      return;
    case Process::Kind::Aware:
      if (satisfies(env, *p->pred)) proc_outputs(p->left, env, prog, out);
      return;
    case Process::Kind::Choice:
      proc_outputs(p->left, env, prog, out);
      proc_outputs(p->right, env, prog, out);
      return;
    case Process::Kind::Par: {
      std::vector<ProcOut> l, r;
      proc_outputs(p->left, env, prog, l);
      proc_outputs(p->right, env, prog, r);
      for (auto& o : l) {
        o.next = make_par(o.next, p->right);
        out.push_back(std::move(o));
      }
      for (auto& o : r) {
        o.next = make_par(p->left, o.next);
        out.push_back(std::move(o));
      }
      return;
    }
    case Process::Kind::Call: {
      ProcPtr body;
      try {
        body = unfold(*p, prog.defs, env);
      } catch (const EvalError&) {
        if (prog.strict) throw;
        return;
      }
      proc_outputs(body, env, prog, out);
      return;
    }
  }
}

void proc_inputs(const ProcPtr& p, const AttributeEnv& env, const AttributeEnv& exposed,
                 const Label& msg, const Program& prog, std::vector<ProcIn>& out) {
  switch (p->kind) {
    case Process::Kind::Nil:
    case Process::Kind::Output: return;
    case Process::Kind::Input: {
      if (p->vars.size() != msg.values.size()) return;
      Substitution sigma = bind(p->vars, msg.values);
      PredPtr guard;
      try {
        guard = close(substitute_pred(p->pred, sigma), env);
      } catch (const EvalError&) {
        return;
      }
      if (!satisfies(msg.env, *guard) || !satisfies(exposed, *msg.pred)) return;
      out.push_back({substitute_updates(p->updates, sigma), substitute(p->left, sigma)});
      return;
    }
    case Process::Kind::Aware:
      if (satisfies(env, *p->pred)) proc_inputs(p->left, env, exposed, msg, prog, out);
      return;
    case Process::Kind::Choice:
      proc_inputs(p->left, env, exposed, msg, prog, out);
      proc_inputs(p->right, env, exposed, msg, prog, out);
      return;
    case Process::Kind::Par: {
      std::vector<ProcIn> l, r;
      proc_inputs(p->left, env, exposed, msg, prog, l);
      proc_inputs(p->right, env, exposed, msg, prog, r);
      for (auto& i : l) out.push_back({std::move(i.updates), make_par(i.next, p->right)});
      for (auto& i : r) out.push_back({std::move(i.updates), make_par(p->left, i.next)});
      return;
    }
    case Process::Kind::Call: {
      ProcPtr body;
      try {
        body = unfold(*p, prog.defs, env);
      } catch (const EvalError&) {
        return;
      }
      proc_inputs(body, env, exposed, msg, prog, out);
      return;
    }
  }
}

}  // namespace

std::vector<Step> component_out_steps(const Component& leaf, const Program& prog) {
  std::vector<ProcOut> outs;
  proc_outputs(leaf.proc, leaf.env, prog, outs);
  std::vector<Step> steps;
  AttributeEnv exposed = restrict_env(leaf.env, leaf.iface);
  for (auto& o : outs) {
    CompPtr target;
    try {
      target = apply_updates(leaf, o.updates, o.next, prog.domains);
    } catch (const EvalError&) {
      if (prog.strict) throw;
      continue;
    }
    steps.push_back({make_label(Label::Kind::Output, exposed, std::move(o.pred), std::move(o.values)),
                     std::move(target)});
  }
  return steps;
}

InResponse component_in_step(const Component& leaf, const Label& msg, const Program& prog) {
  std::vector<ProcIn> ins;
  proc_inputs(leaf.proc, leaf.env, restrict_env(leaf.env, leaf.iface), msg, prog, ins);
  InResponse r;
  for (auto& i : ins) {
    try {
      r.accepted.push_back(apply_updates(leaf, i.updates, i.next, prog.domains));
    } catch (const EvalError&) {
      if (prog.strict) throw;
    }
  }
  r.discarded = r.accepted.empty();
  return r;
}

std::vector<Step> system_out_steps(const CompPtr& c, const Program& prog) {
  switch (c->kind) {
    case Component::Kind::Leaf: return component_out_steps(*c, prog);
    case Component::Kind::Par: {
      std::vector<Step> out;
      for (auto& s : system_out_steps(c->left, prog))
        for (auto& r : system_in_step(c->right, s.label, prog))
          out.push_back({s.label, make_comp_par(s.target, r)});
      for (auto& s : system_out_steps(c->right, prog))
        for (auto& l : system_in_step(c->left, s.label, prog))
          out.push_back({s.label, make_comp_par(l, s.target)});
      return out;
    }
    case Component::Kind::RestrictOut: {
      std::vector<Step> out;
      for (auto& s : system_out_steps(c->left, prog)) {
        Label l = s.label;
        l.pred = simplify(make_and(l.pred, instantiate(*c->fn, l.env, l.values)));
        out.push_back({std::move(l), make_restrict_out(c->fn, s.target)});
      }
      return out;
    }
    case Component::Kind::RestrictIn: {
      std::vector<Step> out;
      for (auto& s : system_out_steps(c->left, prog))
        out.push_back({std::move(s.label), make_restrict_in(c->fn, s.target)});
      return out;
    }
  }
  return {};
}

std::vector<CompPtr> system_in_step(const CompPtr& c, const Label& msg, const Program& prog) {
  switch (c->kind) {
    case Component::Kind::Leaf: {
      auto r = component_in_step(*c, msg, prog);
      if (r.discarded) return {c};
      return std::move(r.accepted);
    }
    case Component::Kind::Par: {
      auto ls = system_in_step(c->left, msg, prog);
      auto rs = system_in_step(c->right, msg, prog);
      std::vector<CompPtr> out;
      for (const auto& l : ls)
        for (const auto& r : rs) out.push_back(l == c->left && r == c->right ? c : make_comp_par(l, r));
      return out;
    }
    case Component::Kind::RestrictOut: {
      std::vector<CompPtr> out;
      for (auto& t : system_in_step(c->left, msg, prog))
        out.push_back(t == c->left ? c : make_restrict_out(c->fn, t));
      return out;
    }
    case Component::Kind::RestrictIn: {
      Label inner = msg;
      inner.pred = simplify(make_and(msg.pred, instantiate(*c->fn, msg.env, msg.values)));
      std::vector<CompPtr> out;
      for (auto& t : system_in_step(c->left, inner, prog))
        out.push_back(t == c->left ? c : make_restrict_in(c->fn, t));
      return out;
    }
  }
  return {c};
}

}  // namespace abc
