#include "scarflab/monomial.hpp"

#include <algorithm>
#include <unordered_set>

namespace scarflab {

Monomial Monomial::variable(int index) {
  if (index < 0 || index >= kMaxVariables) {
    throw Error("variable index " + std::to_string(index) + " out of range");
  }
  return Monomial(std::uint64_t{1} << index);
}

Monomial Monomial::from_indices(std::span<const int> indices) {
  Monomial m;
  for (int i : indices) m = lcm(m, variable(i));
  return m;
}

std::vector<int> Monomial::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(degree()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

Monomial lcm_of(std::span<const Monomial> monomials) {
  Monomial out;
  for (Monomial m : monomials) out = lcm(out, m);
  return out;
}

VariableUniverse::VariableUniverse(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > static_cast<std::size_t>(kMaxVariables)) {
    throw Error("universe of " + std::to_string(names_.size()) + " variables exceeds the limit of " +
                std::to_string(kMaxVariables));
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error("empty variable name");
    if (!seen.insert(n).second) throw Error("duplicate variable name '" + n + "'");
  }
}

VariableUniverse VariableUniverse::indexed(int d) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) names.push_back("x" + std::to_string(i + 1));
  return VariableUniverse(std::move(names));
}

std::optional<int> VariableUniverse::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

Monomial VariableUniverse::top() const {
  const int d = size();
  return Monomial::from_bits(d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1);
}

VariableUniverse VariableUniverse::with_variable(std::string name) const {
  auto names = names_;
  names.push_back(std::move(name));
  return VariableUniverse(std::move(names));
}

MonomialIdeal MonomialIdeal::minimalize(VariableUniverse universe, std::vector<Monomial> gens) {
  const Monomial top = universe.top();
  for (Monomial g : gens) {
    if (!divides(g, top)) throw Error("generator references a variable outside the universe");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // A proper divisor has strictly smaller degree, so scanning by degree keeps
  // the check against already accepted generators sufficient.
  std::vector<Monomial> by_degree = gens;
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [](Monomial a, Monomial b) { return a.degree() < b.degree(); });
  std::vector<Monomial> minimal;
  for (Monomial g : by_degree) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [g](Monomial h) { return divides(h, g); });
    if (!redundant) minimal.push_back(g);
  }
  std::sort(minimal.begin(), minimal.end());
  return MonomialIdeal(std::move(universe), std::move(minimal));
}

std::optional<std::size_t> MonomialIdeal::find(Monomial m) const {
  auto it = std::lower_bound(gens_.begin(), gens_.end(), m);
  if (it == gens_.end() || *it != m) return std::nullopt;
  return static_cast<std::size_t>(it - gens_.begin());
}

MonomialIdeal restrict(const MonomialIdeal& ideal, Monomial m) {
  std::vector<Monomial> kept;
  for (Monomial g : ideal.gens()) {
    if (divides(g, m)) kept.push_back(g);
  }
  return MonomialIdeal::minimalize(ideal.universe(), std::move(kept));
}

std::string to_string(Monomial m, const VariableUniverse& universe) {
  if (m.is_one()) return "1";
  std::string out;
  for (int i : m.indices()) {
    if (!out.empty()) out += '*';
    out += i < universe.size() ? universe.name(i) : "?" + std::to_string(i);
  }
  return out;
}

Monomial parse_monomial(std::string_view text, const VariableUniverse& universe) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "1") return Monomial();
  if (text.empty()) throw Error("empty monomial");
  Monomial m;
  while (!text.empty()) {
    auto star = text.find('*');
    auto token = trim(text.substr(0, star));
    auto idx = universe.index_of(token);
    if (!idx) throw Error("unknown variable '" + std::string(token) + "'");
    m = m.with(*idx);
    if (star == std::string_view::npos) break;
    text.remove_prefix(star + 1);
    if (trim(text).empty()) throw Error("dangling '*' in monomial");
  }
  return m;
}

}  // namespace scarflab
