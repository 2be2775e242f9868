#ifndef SCARFLAB_MONOMIAL_HPP
#define SCARFLAB_MONOMIAL_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace scarflab {

/// Hard limit imposed by the 64-bit support representation.
inline constexpr int kMaxVariables = 64;
/// Default cap on universe size for analysis entry points.
inline constexpr int kDefaultVariableCap = 32;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A square-free monomial, stored as its support. The empty support is 1.
class Monomial {
 public:
  constexpr Monomial() = default;

  static constexpr Monomial from_bits(std::uint64_t bits) { return Monomial(bits); }
  static Monomial from_indices(std::span<const int> indices);
  static Monomial variable(int index);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int degree() const { return std::popcount(bits_); }
  constexpr bool is_one() const { return bits_ == 0; }
  constexpr bool contains(int var) const { return (bits_ >> var) & 1U; }

  constexpr Monomial with(int var) const { return Monomial(bits_ | (std::uint64_t{1} << var)); }
  constexpr Monomial without(int var) const { return Monomial(bits_ & ~(std::uint64_t{1} << var)); }

  std::vector<int> indices() const;

  friend constexpr Monomial lcm(Monomial a, Monomial b) { return Monomial(a.bits_ | b.bits_); }
  friend constexpr Monomial gcd(Monomial a, Monomial b) { return Monomial(a.bits_ & b.bits_); }

  friend constexpr bool operator==(Monomial, Monomial) = default;
  // Canonical order: ascending on the support bit pattern.
  friend constexpr std::strong_ordering operator<=>(Monomial a, Monomial b) { return a.bits_ <=> b.bits_; }

 private:
  constexpr explicit Monomial(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

/// True iff a divides b, i.e. support(a) is a subset of support(b).
constexpr bool divides(Monomial a, Monomial b) { return (a.bits() & ~b.bits()) == 0; }

Monomial lcm_of(std::span<const Monomial> monomials);

/// Ordered list of distinct variable names.
class VariableUniverse {
 public:
  VariableUniverse() = default;
  explicit VariableUniverse(std::vector<std::string> names);

  /// Variables named x1..xd.
  static VariableUniverse indexed(int d);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int index) const { return names_.at(static_cast<std::size_t>(index)); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;

  /// The product of every variable in the universe.
  Monomial top() const;

  VariableUniverse with_variable(std::string name) const;

  friend bool operator==(const VariableUniverse&, const VariableUniverse&) = default;

 private:
  std::vector<std::string> names_;
};

/// A square-free monomial ideal held by its minimal generators, sorted in
/// canonical order so that equal ideals compare equal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  /// Builds the ideal generated by `gens`; duplicates and non-minimal
  /// generators are dropped.
  static MonomialIdeal minimalize(VariableUniverse universe, std::vector<Monomial> gens);

  const VariableUniverse& universe() const { return universe_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  const Monomial& gen(std::size_t i) const { return gens_.at(i); }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }

  /// Index of `m` among the minimal generators.
  std::optional<std::size_t> find(Monomial m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  MonomialIdeal(VariableUniverse universe, std::vector<Monomial> gens)
      : universe_(std::move(universe)), gens_(std::move(gens)) {}

  VariableUniverse universe_;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal minimalize(VariableUniverse universe, std::vector<Monomial> gens) {
  return MonomialIdeal::minimalize(std::move(universe), std::move(gens));
}

/// The ideal generated by the minimal generators of `ideal` that divide `m`.
MonomialIdeal restrict(const MonomialIdeal& ideal, Monomial m);

/// Renders "x1*x3*x4"; the monomial 1 renders as "1".
std::string to_string(Monomial m, const VariableUniverse& universe);

/// Parses "x1*x3*x4" against the universe names; "1" is the unit.
Monomial parse_monomial(std::string_view text, const VariableUniverse& universe);

}  // namespace scarflab

#endif  // SCARFLAB_MONOMIAL_HPP
