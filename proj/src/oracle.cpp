#include "hrc/oracle.hpp"

#include <cstdint>

#include "hrc/error.hpp"

namespace hrc::oracle {

namespace {

// A value an expression can take on one decoded run at one step: either a
// truth value or a domain symbol.
struct Value {
  bool is_bool = true;
  bool b = false;
  std::string s;
};

bool truth_of(const ExprPtr &expr, const Run &run, unsigned step,
              const Alphabet &alphabet);

Value value_of(const ExprPtr &expr, const Run &run, unsigned step,
               const Alphabet &alphabet) {
  if (expr->kind == Expr::Kind::Ref) {
    if (alphabet.has_port(expr->name)) {
      const PortDecl &p = alphabet.port(alphabet.port_index(expr->name));
      const std::string &v = run.values.at(expr->name).at(step);
      if (p.domain == std::vector<std::string>{"false", "true"})
        return Value{true, v == "true", {}};
      return Value{false, false, v};
    }
    return Value{false, false, expr->name};  // a domain symbol
  }
  return Value{true, truth_of(expr, run, step, alphabet), {}};
}

bool truth_of(const ExprPtr &expr, const Run &run, unsigned step,
              const Alphabet &alphabet) {
  switch (expr->kind) {
    case Expr::Kind::Const:
      return expr->value;
    case Expr::Kind::Ref: {
      if (!alphabet.has_port(expr->name))
        fail(ErrorKind::InvalidArgument,
             "oracle: bare name '" + expr->name + "' is not a port");
      return run.values.at(expr->name).at(step) == "true";
    }
    case Expr::Kind::Not:
      return !truth_of(expr->lhs, run, step, alphabet);
    case Expr::Kind::And:
      return truth_of(expr->lhs, run, step, alphabet) &&
             truth_of(expr->rhs, run, step, alphabet);
    case Expr::Kind::Or:
      return truth_of(expr->lhs, run, step, alphabet) ||
             truth_of(expr->rhs, run, step, alphabet);
    case Expr::Kind::Implies:
      return !truth_of(expr->lhs, run, step, alphabet) ||
             truth_of(expr->rhs, run, step, alphabet);
    case Expr::Kind::Eq:
    case Expr::Kind::Ne: {
      Value l = value_of(expr->lhs, run, step, alphabet);
      Value r = value_of(expr->rhs, run, step, alphabet);
      bool eq;
      if (l.is_bool && r.is_bool)
        eq = l.b == r.b;
      else if (!l.is_bool && !r.is_bool)
        eq = l.s == r.s;
      else
        fail(ErrorKind::InvalidArgument,
             "oracle: comparison mixes boolean and symbolic operands");
      return expr->kind == Expr::Kind::Eq ? eq : !eq;
    }
  }
  fail(ErrorKind::InvalidArgument, "oracle: unknown expression kind");
}

std::set<std::string> port_names(const Alphabet &alphabet) {
  std::set<std::string> out;
  for (const PortDecl &p : alphabet.ports()) out.insert(p.name);
  return out;
}

// Equalize two run sets over the union alphabet before a binary operation.
std::pair<RunSet, RunSet> equalized(const RunSet &a, const RunSet &b) {
  if (a.alphabet == b.alphabet) return {a, b};
  Alphabet joint = a.alphabet.union_with(b.alphabet);
  return {lift(a, joint), lift(b, joint)};
}

// All value histories of one port, in domain-then-step odometer order.
std::vector<std::vector<std::string>> histories(const PortDecl &port,
                                                unsigned trace_length) {
  std::vector<std::vector<std::string>> out;
  std::vector<std::size_t> idx(trace_length, 0);
  while (true) {
    std::vector<std::string> h;
    h.reserve(trace_length);
    for (unsigned s = 0; s < trace_length; ++s) h.push_back(port.domain[idx[s]]);
    out.push_back(std::move(h));
    unsigned s = trace_length;
    while (s > 0) {
      --s;
      if (++idx[s] < port.domain.size()) break;
      idx[s] = 0;
      if (s == 0) return out;
    }
  }
}

RunSet eliminate_port(const RunSet &b, const std::string &port, bool forall) {
  if (!b.alphabet.has_port(port)) return b;
  const PortDecl &decl = b.alphabet.port(b.alphabet.port_index(port));
  Alphabet reduced = b.alphabet.without_port(port);
  std::vector<std::vector<std::string>> exts =
      histories(decl, b.alphabet.trace_length());
  RunSet out{reduced, {}};
  for (std::uint64_t i = 0; i < reduced.universe_size(); ++i) {
    Run base = reduced.run_at(i);
    bool all = true, any = false;
    for (const std::vector<std::string> &h : exts) {
      Run full = base;
      full.values[port] = h;
      bool member = b.members.count(b.alphabet.index_of(full)) != 0;
      all = all && member;
      any = any || member;
    }
    if (forall ? all : any) out.members.insert(i);
  }
  return out;
}

}  // namespace

RunSet evaluate(const ExprPtr &expr, const Alphabet &alphabet) {
  RunSet out{alphabet, {}};
  for (std::uint64_t i = 0; i < alphabet.universe_size(); ++i) {
    Run run = alphabet.run_at(i);
    bool holds = true;
    for (unsigned s = 0; holds && s < alphabet.trace_length(); ++s)
      holds = truth_of(expr, run, s, alphabet);
    if (holds) out.members.insert(i);
  }
  return out;
}

RunSet full_set(const Alphabet &alphabet) {
  RunSet out{alphabet, {}};
  for (std::uint64_t i = 0; i < alphabet.universe_size(); ++i)
    out.members.insert(i);
  return out;
}

RunSet complement(const RunSet &b) {
  RunSet out{b.alphabet, {}};
  for (std::uint64_t i = 0; i < b.alphabet.universe_size(); ++i)
    if (!b.members.count(i)) out.members.insert(i);
  return out;
}

RunSet lift(const RunSet &b, const Alphabet &target) {
  if (!target.contains(b.alphabet))
    fail(ErrorKind::InvalidArgument,
         "oracle: lift target does not extend the source alphabet");
  std::set<std::string> source_ports = port_names(b.alphabet);
  RunSet out{target, {}};
  for (std::uint64_t i = 0; i < target.universe_size(); ++i) {
    Run projected = project_run(target.run_at(i), source_ports);
    if (b.members.count(b.alphabet.index_of(projected))) out.members.insert(i);
  }
  return out;
}

RunSet intersect(const RunSet &a, const RunSet &b) {
  auto [x, y] = equalized(a, b);
  RunSet out{x.alphabet, {}};
  for (std::uint64_t i : x.members)
    if (y.members.count(i)) out.members.insert(i);
  return out;
}

RunSet unite(const RunSet &a, const RunSet &b) {
  auto [x, y] = equalized(a, b);
  RunSet out{x.alphabet, x.members};
  out.members.insert(y.members.begin(), y.members.end());
  return out;
}

RunSet forall_eliminate(const RunSet &b, const std::string &port) {
  return eliminate_port(b, port, true);
}

RunSet exists_eliminate(const RunSet &b, const std::string &port) {
  return eliminate_port(b, port, false);
}

bool is_subset(const RunSet &a, const RunSet &b) {
  auto [x, y] = equalized(a, b);
  for (std::uint64_t i : x.members)
    if (!y.members.count(i)) return false;
  return true;
}

bool is_receptive(const RunSet &b, const std::set<std::string> &ports) {
  // Project onto `ports` (hide everything else), then demand fullness.
  RunSet reduced = b;
  for (const PortDecl &decl : b.alphabet.ports())
    if (!ports.count(decl.name)) reduced = exists_eliminate(reduced, decl.name);
  return reduced.members.size() == reduced.alphabet.universe_size();
}

ContractPair make_pair(const RunSet &assume, const RunSet &promise) {
  auto [a, g] = equalized(assume, promise);
  return ContractPair{a, g};
}

ContractPair canonicalize(const ContractPair &c) {
  return ContractPair{c.assume, unite(c.promise, complement(c.assume))};
}

bool satisfies(const RunSet &m, const ContractPair &c) {
  return is_subset(intersect(m, c.assume), c.promise);
}

bool dominates(const ContractPair &c, const ContractPair &c_prime) {
  return is_subset(c_prime.assume, c.assume) &&
         is_subset(c.promise, c_prime.promise);
}

ContractPair meet(const ContractPair &c1, const ContractPair &c2) {
  return make_pair(unite(c1.assume, c2.assume),
                   intersect(c1.promise, c2.promise));
}

ContractPair join(const ContractPair &c1, const ContractPair &c2) {
  return make_pair(intersect(c1.assume, c2.assume),
                   unite(c1.promise, c2.promise));
}

ContractPair compose(const ContractPair &c1, const ContractPair &c2) {
  ContractPair k1 = canonicalize(c1);
  ContractPair k2 = canonicalize(c2);
  RunSet g = intersect(k1.promise, k2.promise);
  RunSet a = unite(intersect(k1.assume, k2.assume), complement(g));
  return make_pair(a, g);
}

ContractPair eliminate(const ContractPair &c,
                       const std::set<std::string> &ports) {
  ContractPair k = canonicalize(c);
  for (const std::string &p : ports) {
    k.assume = forall_eliminate(k.assume, p);
    k.promise = exists_eliminate(k.promise, p);
  }
  return k;
}

ContractPair fuse(const std::vector<ContractPair> &contracts,
                  const std::set<std::string> &ports) {
  if (contracts.empty())
    fail(ErrorKind::InvalidArgument,
         "oracle: fusion requires at least one contract");
  if (contracts.size() > 63)
    fail(ErrorKind::FusionCapExceeded, "oracle: too many contracts to fuse");
  std::vector<ContractPair> canon;
  for (const ContractPair &c : contracts) canon.push_back(canonicalize(c));
  bool have_result = false;
  ContractPair result;
  const std::uint64_t n = canon.size();
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    bool have_term = false;
    ContractPair composite;
    for (std::uint64_t i = 0; i < n; ++i) {
      if (!(mask & (1ull << i))) continue;
      composite = have_term ? compose(composite, canon[i]) : canon[i];
      have_term = true;
    }
    ContractPair term = eliminate(composite, ports);
    result = have_result ? meet(result, term) : term;
    have_result = true;
  }
  return result;
}

std::optional<Mismatch> compare(const std::string &what, const RunSet &expected,
                                const Assertion &actual) {
  if (!(expected.alphabet == actual.alphabet()))
    return Mismatch{what + ": alphabets differ", std::nullopt};
  for (std::uint64_t i = 0; i < expected.alphabet.universe_size(); ++i) {
    bool in_expected = expected.members.count(i) != 0;
    bool in_actual = actual.contains(i);
    if (in_expected != in_actual)
      return Mismatch{what + ": run is " +
                          (in_actual ? "present but should be absent"
                                     : "absent but should be present"),
                      expected.alphabet.run_at(i)};
  }
  return std::nullopt;
}

std::optional<Mismatch> compare_bool(const std::string &what, bool expected,
                                     bool actual) {
  if (expected == actual) return std::nullopt;
  return Mismatch{what + ": expected " + (expected ? "true" : "false") +
                      ", got " + (actual ? "true" : "false"),
                  std::nullopt};
}

namespace {

void push(std::vector<Mismatch> &out, std::optional<Mismatch> m) {
  if (m) out.push_back(std::move(*m));
}

}  // namespace

std::vector<Mismatch> verify_model(const SpecDocument &doc,
                                   const Model &model) {
  std::vector<Mismatch> out;
  const Alphabet &alphabet = model.alphabet;

  std::map<std::string, RunSet> named_sets;
  for (const AssertionDef &def : doc.assertions) {
    RunSet s = evaluate(def.expr, alphabet);
    push(out, compare("assertion " + def.name, s,
                      model.assertions.at(def.name)));
    named_sets.emplace(def.name, std::move(s));
  }

  std::map<std::string, ContractPair> pairs;
  for (const ContractDef &def : doc.contracts) {
    ContractPair raw = make_pair(evaluate(def.assume, alphabet),
                                 evaluate(def.promise, alphabet));
    const Contract &engine = model.contracts.at(def.name);
    push(out, compare("contract " + def.name + " assumption", raw.assume,
                      engine.assumption()));
    push(out, compare("contract " + def.name + " promise", raw.promise,
                      engine.promise()));
    ContractPair canon = canonicalize(raw);
    Contract engine_canon = engine.canonicalized();
    push(out, compare("contract " + def.name + " canonical assumption",
                      canon.assume, engine_canon.assumption()));
    push(out, compare("contract " + def.name + " canonical promise",
                      canon.promise, engine_canon.promise()));
    push(out, compare("contract " + def.name + " maximal implementation",
                      canon.promise, engine.max_implementation()));
    pairs.emplace(def.name, std::move(raw));
  }

  for (const auto &[mname, mset] : named_sets)
    for (const auto &[cname, cpair] : pairs)
      push(out, compare_bool("satisfies(" + mname + ", " + cname + ")",
                             satisfies(mset, cpair),
                             hrc::satisfies(model.assertions.at(mname),
                                            model.contracts.at(cname))));

  for (const auto &[n1, p1] : pairs)
    for (const auto &[n2, p2] : pairs) {
      const Contract &e1 = model.contracts.at(n1);
      const Contract &e2 = model.contracts.at(n2);
      push(out, compare_bool("dominates(" + n1 + ", " + n2 + ")",
                             dominates(p1, p2), hrc::dominates(e1, e2)));
      if (n1 >= n2) continue;
      ContractPair m = meet(p1, p2);
      Contract em = hrc::meet(e1, e2);
      push(out, compare("meet(" + n1 + ", " + n2 + ") assumption", m.assume,
                        em.assumption()));
      push(out, compare("meet(" + n1 + ", " + n2 + ") promise", m.promise,
                        em.promise()));
      ContractPair j = join(p1, p2);
      Contract ej = hrc::join(e1, e2);
      push(out, compare("join(" + n1 + ", " + n2 + ") assumption", j.assume,
                        ej.assumption()));
      push(out, compare("join(" + n1 + ", " + n2 + ") promise", j.promise,
                        ej.promise()));
      ContractPair k = compose(p1, p2);
      Contract ek = hrc::compose(e1, e2);
      push(out, compare("compose(" + n1 + ", " + n2 + ") assumption", k.assume,
                        ek.assumption()));
      push(out, compare("compose(" + n1 + ", " + n2 + ") promise", k.promise,
                        ek.promise()));
    }

  for (const auto &[name, pair] : pairs)
    for (const PortDecl &port : alphabet.ports()) {
      ContractPair e = eliminate(pair, {port.name});
      Contract ee = hrc::eliminate(model.contracts.at(name), {port.name});
      push(out, compare("eliminate(" + name + ", " + port.name +
                            ") assumption",
                        e.assume, ee.assumption()));
      push(out, compare("eliminate(" + name + ", " + port.name + ") promise",
                        e.promise, ee.promise()));
    }

  for (const auto &[name, contract] : model.profiled_contracts) {
    ContractPair canon = canonicalize(pairs.at(name));
    push(out, compare_bool(
                  "is_consistent(" + name + ")",
                  is_receptive(canon.promise, contract.profile().uncontrolled()),
                  is_consistent(contract)));
    push(out, compare_bool(
                  "is_compatible(" + name + ")",
                  is_receptive(canon.assume, contract.profile().controlled()),
                  is_compatible(contract)));
  }

  for (const ComponentDef &def : doc.components) {
    const Model::ComponentEntry &entry = model.components.at(def.name);
    const std::string tag = "component " + def.name;

    RichComponent rc;
    rc.name = entry.name;
    rc.contracts = entry.contracts;

    std::set<std::string> oracle_q(def.local_ports.begin(),
                                   def.local_ports.end());
    std::set<std::string> mentioned;
    for (const std::string &ref : def.contract_refs)
      for (const ContractDef &c : doc.contracts)
        if (c.name == ref) {
          collect_ports(c.assume, doc, mentioned);
          collect_ports(c.promise, doc, mentioned);
        }
    if (def.implementation) collect_ports(def.implementation, doc, mentioned);
    for (const std::string &p : mentioned) {
      const PortSpec *spec = doc.find_port(p);
      if (spec && spec->local_marker) oracle_q.insert(p);
    }
    push(out, compare_bool(tag + " local port set", true,
                           oracle_q == rc.local_ports()));

    if (entry.impl_behavior) {
      RunSet behavior = evaluate(def.implementation, alphabet);
      push(out,
           compare(tag + " implementation behavior", behavior,
                   *entry.impl_behavior));
      bool engine_receptive = true;
      try {
        rc.implementation = ProfiledImplementation::make(*entry.impl_profile,
                                                         *entry.impl_behavior);
      } catch (const Error &e) {
        if (e.kind() != ErrorKind::NotReceptive) throw;
        engine_receptive = false;
      }
      push(out, compare_bool(
                    tag + " implementation receptiveness",
                    is_receptive(behavior, entry.impl_profile->uncontrolled()),
                    engine_receptive));
    }

    if (def.contract_refs.empty() || def.contract_refs.size() > 8) continue;
    std::vector<ContractPair> terms;
    for (const std::string &ref : def.contract_refs)
      terms.push_back(pairs.at(ref));
    ContractPair fused = fuse(terms, oracle_q);

    CheckReport report = check_component(rc);
    if (report.contract) {
      push(out, compare(tag + " fused assumption", fused.assume,
                        report.contract->assumption()));
      push(out, compare(tag + " fused promise", fused.promise,
                        report.contract->promise()));
    }
    if (report.satisfied && rc.implementation) {
      RunSet projected = evaluate(def.implementation, alphabet);
      for (const std::string &p : oracle_q)
        projected = exists_eliminate(projected, p);
      push(out, compare_bool(tag + " implementation satisfaction",
                             satisfies(projected, fused),
                             *report.satisfied));
    }
  }

  return out;
}

}  // namespace hrc::oracle
