#include "transfersys/lattice_source.hpp"

#include <cctype>
#include <charconv>
#include <map>

#include "transfersys/errors.hpp"

namespace transfersys {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

unsigned parse_unsigned(std::string_view s, std::string_view what) {
  s = trim(s);
  unsigned v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw DomainError("expected a non-negative integer for " + std::string(what) + ", got '" +
                      std::string(s) + "'");
  return v;
}

std::size_t symbol_index(std::string_view sym) {
  for (std::size_t i = 0; i < 64; ++i)
    if (prime_symbol(i) == sym) return i;
  throw DomainError("unknown prime symbol '" + std::string(sym) + "' (use p, q, r, ...)");
}

}  // namespace

std::vector<unsigned> parse_cyclic_exponents(std::string_view body) {
  body = trim(body);
  if (body.empty()) throw DomainError("empty cyclic group description");
  if (body == "1") return {0};
  std::map<std::size_t, unsigned> exps;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t star = body.find('*', pos);
    const std::string_view factor =
        trim(body.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos));
    const std::size_t caret = factor.find('^');
    const std::string_view sym = trim(factor.substr(0, caret));
    const unsigned e = caret == std::string_view::npos ? 1 : parse_unsigned(factor.substr(caret + 1), "exponent");
    const std::size_t idx = symbol_index(sym);
    if (!exps.emplace(idx, e).second) throw DomainError("prime symbol '" + std::string(sym) + "' repeated");
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  std::vector<unsigned> out(exps.rbegin()->first + 1, 0);
  for (auto [i, e] : exps) out[i] = e;
  return out;
}

GroupLattice parse_builtin_lattice(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos)
    throw DomainError("lattice source '" + std::string(text) + "' must look like kind:arguments");
  const std::string_view kind = trim(text.substr(0, colon));
  const std::string_view body = trim(text.substr(colon + 1));
  if (kind == "cyclic") {
    const auto exps = parse_cyclic_exponents(body);
    return build_chain_product(exps);
  }
  if (kind == "boolean") {
    const unsigned n = parse_unsigned(body, "boolean rank");
    if (n == 0) return build_chain_product(std::vector<unsigned>{0});
    return build_chain_product(std::vector<unsigned>(n, 1));
  }
  if (kind == "subspace") {
    std::uint64_t p = 0;
    unsigned n = 0;
    bool have_p = false, have_n = false;
    std::size_t pos = 0;
    while (pos < body.size()) {
      const std::size_t comma = body.find(',', pos);
      const std::string_view kv =
          trim(body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
      const std::size_t eq = kv.find('=');
      if (eq == std::string_view::npos) throw DomainError("subspace arguments are p=<prime>,n=<dim>");
      const std::string_view key = trim(kv.substr(0, eq));
      const unsigned val = parse_unsigned(kv.substr(eq + 1), key);
      if (key == "p") {
        p = val;
        have_p = true;
      } else if (key == "n") {
        n = val;
        have_n = true;
      } else {
        throw DomainError("unknown subspace argument '" + std::string(key) + "'");
      }
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (!have_p || !have_n) throw DomainError("subspace arguments are p=<prime>,n=<dim>");
    return build_subspace_lattice(p, n);
  }
  throw DomainError("unknown lattice kind '" + std::string(kind) + "' (cyclic, boolean, subspace)");
}

}  // namespace transfersys
