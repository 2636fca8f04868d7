#include "hrc/printer.hpp"

#include <algorithm>
#include <functional>

namespace hrc {

namespace {

bool is_bool_domain(const std::vector<std::string> &domain) {
  return domain.size() == 2 && domain[0] == "false" && domain[1] == "true";
}

// A cube assigns every digit (port, step) a non-empty set of allowed domain
// values; its denotation is the product of those sets.
struct Cube {
  std::vector<std::uint64_t> allowed;  // bitmask per digit

  bool operator==(const Cube &o) const = default;
};

struct CubeContext {
  const Alphabet *alphabet;
  std::size_t ndigits;
  std::vector<std::uint64_t> radix;      // per digit
  std::vector<std::uint64_t> stride;     // per digit
  std::vector<std::size_t> digit_port;   // per digit
  std::vector<unsigned> digit_step;      // per digit

  explicit CubeContext(const Alphabet &a) : alphabet(&a) {
    const unsigned length = a.trace_length();
    ndigits = a.ports().size() * length;
    for (std::size_t p = 0; p < a.ports().size(); ++p) {
      for (unsigned s = 0; s < length; ++s) {
        radix.push_back(a.port(p).domain.size());
        stride.push_back(a.digit_stride(p, s));
        digit_port.push_back(p);
        digit_step.push_back(s);
      }
    }
  }
};

// Visit every run index in the cube; returns false if `fn` does.
bool for_each_cube_run(const CubeContext &ctx, const Cube &cube,
                       const std::function<bool(std::uint64_t)> &fn) {
  std::vector<std::vector<unsigned>> values(ctx.ndigits);
  for (std::size_t d = 0; d < ctx.ndigits; ++d)
    for (unsigned v = 0; v < ctx.radix[d]; ++v)
      if (cube.allowed[d] & (1ull << v)) values[d].push_back(v);

  std::vector<std::size_t> pos(ctx.ndigits, 0);
  while (true) {
    std::uint64_t index = 0;
    for (std::size_t d = 0; d < ctx.ndigits; ++d)
      index += ctx.stride[d] * values[d][pos[d]];
    if (!fn(index)) return false;
    std::size_t d = ctx.ndigits;
    while (d-- > 0) {
      if (++pos[d] < values[d].size()) break;
      pos[d] = 0;
      if (d == 0) return true;
    }
    if (ctx.ndigits == 0) return true;
  }
}

Bitset cube_bits(const CubeContext &ctx, const Cube &cube,
                 std::uint64_t universe) {
  Bitset out(universe, false);
  for_each_cube_run(ctx, cube, [&out](std::uint64_t i) {
    out.set(i);
    return true;
  });
  return out;
}

// Grow the point cube of `minterm` into a maximal cube inside `inside`,
// widening digits in order and values in domain order.
Cube expand(const CubeContext &ctx, std::uint64_t minterm,
            const Bitset &inside) {
  Cube cube;
  cube.allowed.resize(ctx.ndigits);
  for (std::size_t d = 0; d < ctx.ndigits; ++d) {
    unsigned v = ctx.alphabet->digit(minterm, ctx.digit_port[d],
                                     ctx.digit_step[d]);
    cube.allowed[d] = 1ull << v;
  }
  for (std::size_t d = 0; d < ctx.ndigits; ++d) {
    for (unsigned v = 0; v < ctx.radix[d]; ++v) {
      std::uint64_t bit = 1ull << v;
      if (cube.allowed[d] & bit) continue;
      Cube widened = cube;
      widened.allowed[d] |= bit;
      bool ok = for_each_cube_run(ctx, widened, [&inside](std::uint64_t i) {
        return inside.test(i);
      });
      if (ok) cube = widened;
    }
  }
  return cube;
}

std::string cube_text(const CubeContext &ctx, const Cube &cube) {
  std::string out;
  for (std::size_t d = 0; d < ctx.ndigits; ++d) {
    std::uint64_t full = (ctx.radix[d] >= 64)
                             ? ~0ull
                             : ((1ull << ctx.radix[d]) - 1);
    if (cube.allowed[d] == full) continue;  // don't care
    const PortDecl &port = ctx.alphabet->port(ctx.digit_port[d]);
    std::string atom = port.name;
    if (ctx.alphabet->trace_length() > 1)
      atom += "[" + std::to_string(ctx.digit_step[d]) + "]";
    std::string literal;
    if (is_bool_domain(port.domain)) {
      literal = (cube.allowed[d] & 2) ? atom : "!" + atom;
    } else {
      std::vector<std::string> options;
      for (unsigned v = 0; v < ctx.radix[d]; ++v)
        if (cube.allowed[d] & (1ull << v))
          options.push_back(atom + " == " + port.domain[v]);
      if (options.size() == 1) {
        literal = options.front();
      } else {
        literal = "(";
        for (std::size_t i = 0; i < options.size(); ++i) {
          if (i) literal += " || ";
          literal += options[i];
        }
        literal += ")";
      }
    }
    if (!out.empty()) out += " && ";
    out += literal;
  }
  return out.empty() ? "true" : out;
}

}  // namespace

std::string assertion_formula(const Assertion &assertion) {
  if (assertion.is_empty()) return "false";
  if (assertion.is_full()) return "true";
  const Alphabet &alphabet = assertion.alphabet();
  for (const PortDecl &p : alphabet.ports())
    if (p.domain.size() > 63) return "<unprintable domain>";

  CubeContext ctx(alphabet);
  const Bitset &inside = assertion.bits();
  std::vector<Cube> cover;
  Bitset covered(alphabet.universe_size(), false);
  for (std::uint64_t m = inside.find_next(0); m < inside.size();
       m = inside.find_next(m + 1)) {
    if (covered.test(m)) continue;
    Cube cube = expand(ctx, m, inside);
    covered |= cube_bits(ctx, cube, alphabet.universe_size());
    cover.push_back(std::move(cube));
  }

  // Drop cubes whose members are covered by the rest (forward pass).
  std::vector<Bitset> bits;
  bits.reserve(cover.size());
  for (const Cube &c : cover)
    bits.push_back(cube_bits(ctx, c, alphabet.universe_size()));
  std::vector<bool> keep(cover.size(), true);
  for (std::size_t i = 0; i < cover.size(); ++i) {
    Bitset rest(alphabet.universe_size(), false);
    for (std::size_t j = 0; j < cover.size(); ++j)
      if (j != i && keep[j]) rest |= bits[j];
    if (bits[i].is_subset_of(rest)) keep[i] = false;
  }

  std::string out;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    if (!keep[i]) continue;
    if (!out.empty()) out += " || ";
    out += cube_text(ctx, cover[i]);
  }
  return out;
}

std::string format_assertion(const Assertion &assertion) {
  return assertion_formula(assertion) + " (" +
         std::to_string(assertion.count()) + " runs)";
}

nlohmann::ordered_json run_json(const Run &run) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto &[port, history] : run.values) {
    nlohmann::ordered_json seq = nlohmann::ordered_json::array();
    for (const std::string &v : history) {
      if (v == "true")
        seq.push_back(true);
      else if (v == "false")
        seq.push_back(false);
      else
        seq.push_back(v);
    }
    out[port] = std::move(seq);
  }
  return out;
}

nlohmann::ordered_json runs_json(const Assertion &assertion) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const Run &r : assertion.runs()) out.push_back(run_json(r));
  return out;
}

std::string run_text(const Run &run) {
  std::string out = "{";
  bool first = true;
  for (const auto &[port, history] : run.values) {
    if (!first) out += ", ";
    first = false;
    out += port + "=";
    if (history.size() == 1) {
      out += history.front();
    } else {
      out += "[";
      for (std::size_t i = 0; i < history.size(); ++i) {
        if (i) out += ",";
        out += history[i];
      }
      out += "]";
    }
  }
  return out + "}";
}

}  // namespace hrc
