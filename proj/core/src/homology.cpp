#include "scarflab/homology.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace scarflab {
namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

}  // namespace

FieldSpec FieldSpec::prime(std::int64_t p) {
  // Products of residues must fit in 64 bits.
  if (!is_prime(p) || p > 3037000493LL) throw Error("field characteristic must be a prime below 2^31.5");
  return FieldSpec(Kind::PrimeField, p);
}

std::string to_string(const FieldSpec& field) {
  if (field.kind() == FieldSpec::Kind::Rationals) return "q";
  return "gf" + std::to_string(field.characteristic());
}

FieldSpec parse_field(std::string_view text) {
  if (text == "q" || text == "Q" || text == "rationals") return FieldSpec::rationals();
  if (text.starts_with("gf") || text.starts_with("GF")) {
    std::int64_t p = 0;
    auto digits = text.substr(2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return FieldSpec::prime(p);
  }
  throw Error("unknown field '" + std::string(text) + "' (expected gf<p> or q)");
}

std::vector<FieldSpec> parse_field_list(std::string_view text) {
  std::vector<FieldSpec> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    out.push_back(parse_field(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw Error("empty field list");
  return out;
}

std::vector<FieldSpec> default_field_battery() { return {FieldSpec::prime(2), FieldSpec::prime(32003)}; }

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw Error("matrix shape mismatch");
  IntMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const int v = a.at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out.at(i, j) += v * b.at(k, j);
    }
  }
  return out;
}

IntMatrix boundary_matrix(const SimplicialComplex& complex, int dim) {
  if (dim < 0) throw Error("boundary dimension must be nonnegative");
  const auto lower = complex.faces_of_dimension(dim - 1);
  const auto upper = complex.faces_of_dimension(dim);
  std::unordered_map<Face, std::size_t, FaceHash> row_of;
  for (std::size_t r = 0; r < lower.size(); ++r) row_of.emplace(lower[r], r);

  IntMatrix m(lower.size(), upper.size());
  for (std::size_t c = 0; c < upper.size(); ++c) {
    const auto vertices = upper[c].indices();
    for (std::size_t k = 0; k < vertices.size(); ++k) {
      auto it = row_of.find(upper[c].without(vertices[k]));
      if (it == row_of.end()) throw Error("boundary face missing from complex");
      m.at(it->second, c) = (k % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

std::size_t rank_mod_p(const IntMatrix& m, std::int64_t p) {
  std::vector<std::int64_t> a(m.data.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = ((m.data[i] % p) + p) % p;
  const std::size_t rows = m.rows;
  const std::size_t cols = m.cols;
  auto at = [&](std::size_t r, std::size_t c) -> std::int64_t& { return a[r * cols + c]; };

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = c; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    const std::int64_t inv = mod_pow(at(rank, c), p - 2, p);
    for (std::size_t j = c; j < cols; ++j) at(rank, j) = at(rank, j) * inv % p;
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::int64_t factor = at(r, c);
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) at(r, j) = ((at(r, j) - factor * at(rank, j)) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(const IntMatrix& m) {
  using boost::multiprecision::cpp_int;
  const std::size_t rows = m.rows;
  const std::size_t cols = m.cols;
  std::vector<cpp_int> a(m.data.begin(), m.data.end());
  auto at = [&](std::size_t r, std::size_t c) -> cpp_int& { return a[r * cols + c]; };

  cpp_int previous = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        // Exact by Sylvester's identity.
        at(r, j) = (at(rank, c) * at(r, j) - at(r, c) * at(rank, j)) / previous;
      }
      at(r, c) = 0;
    }
    previous = at(rank, c);
    ++rank;
  }
  return rank;
}

std::size_t rank_over(const IntMatrix& m, const FieldSpec& field) {
  if (m.rows == 0 || m.cols == 0) return 0;
  return field.kind() == FieldSpec::Kind::Rationals ? rank_rational(m) : rank_mod_p(m, field.characteristic());
}

bool HomologyProfile::trivial() const {
  return reduced_minus_one == 0 && std::all_of(betti.begin(), betti.end(), [](int b) { return b == 0; });
}

HomologyProfile reduced_betti(const SimplicialComplex& complex, const FieldSpec& field) {
  if (!complex.has_vertices()) throw Error("reduced Betti numbers need a complex with at least one vertex");
  const int top = complex.dimension();
  const auto f = complex.f_vector();

  // ranks[i] = rank of ∂_i, i = 0..top+1 (∂_{top+1} = 0).
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
  for (int i = 0; i <= top; ++i) ranks[static_cast<std::size_t>(i)] = rank_over(boundary_matrix(complex, i), field);

  HomologyProfile profile;
  profile.field = field;
  profile.reduced_minus_one = 1 - static_cast<int>(ranks[0]);
  for (int i = 0; i <= top; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    profile.betti.push_back(static_cast<int>(f[idx] - ranks[idx] - ranks[idx + 1]));
  }
  return profile;
}

AcyclicityVerdict is_acyclic(const SimplicialComplex& complex, const FieldSpec& field) {
  if (!complex.has_vertices()) return {field, Acyclicity::Empty, {}};
  HomologyProfile profile = reduced_betti(complex, field);
  return {field, profile.trivial() ? Acyclicity::Acyclic : Acyclicity::NotAcyclic, std::move(profile.betti)};
}

std::vector<AcyclicityVerdict> is_acyclic(const SimplicialComplex& complex, std::span<const FieldSpec> fields) {
  std::vector<AcyclicityVerdict> out;
  out.reserve(fields.size());
  for (const FieldSpec& field : fields) out.push_back(is_acyclic(complex, field));
  return out;
}

}  // namespace scarflab
