#include "scarflab/complex.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace scarflab {

Face Face::singleton(int index) { return Face().with(index); }

Face Face::from_indices(std::span<const int> indices) {
  Face f;
  for (int i : indices) f = f.with(i);
  return f;
}

bool Face::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

int Face::size() const {
  int total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

Face Face::with(int index) const {
  if (index < 0 || index >= kMaxGenerators) {
    throw Error("generator index " + std::to_string(index) + " outside [0, " + std::to_string(kMaxGenerators) + ")");
  }
  Face f = *this;
  f.words_[word(index)] |= std::uint64_t{1} << bit(index);
  return f;
}

Face Face::without(int index) const {
  Face f = *this;
  if (index >= 0 && index < kMaxGenerators) f.words_[word(index)] &= ~(std::uint64_t{1} << bit(index));
  return f;
}

int Face::max_index() const {
  for (std::size_t w = kWords; w-- > 0;) {
    if (words_[w] != 0) return static_cast<int>(w * 64) + 63 - std::countl_zero(words_[w]);
  }
  return -1;
}

std::vector<int> Face::indices() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < kWords; ++w) {
    for (std::uint64_t b = words_[w]; b != 0; b &= b - 1) out.push_back(static_cast<int>(w * 64) + std::countr_zero(b));
  }
  return out;
}

bool Face::subset_of(const Face& other) const {
  for (std::size_t w = 0; w < kWords; ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

Face operator|(const Face& a, const Face& b) {
  Face f;
  for (std::size_t w = 0; w < Face::kWords; ++w) f.words_[w] = a.words_[w] | b.words_[w];
  return f;
}

Face operator&(const Face& a, const Face& b) {
  Face f;
  for (std::size_t w = 0; w < Face::kWords; ++w) f.words_[w] = a.words_[w] & b.words_[w];
  return f;
}

std::size_t Face::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

bool face_less(const Face& a, const Face& b) {
  const int sa = a.size();
  const int sb = b.size();
  if (sa != sb) return sa < sb;
  return a.indices() < b.indices();
}

SimplicialComplex::SimplicialComplex(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(), face_less);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  index_.reserve(faces.size());
  for (const Face& f : faces) index_.insert(f);
  for (const Face& f : faces) {
    for (int i : f.indices()) {
      if (!index_.contains(f.without(i))) throw Error("face family is not closed under taking subsets");
    }
  }
  if (!faces.empty() && !faces.front().empty()) throw Error("face family is missing the empty face");
  faces_ = std::move(faces);
}

SimplicialComplex SimplicialComplex::from_facets(std::span<const Face> facets) {
  std::unordered_set<Face, FaceHash> all;
  all.insert(Face());
  for (const Face& facet : facets) {
    auto idx = facet.indices();
    if (idx.size() > 24) throw Error("facet too large to expand");
    const std::uint32_t limit = std::uint32_t{1} << idx.size();
    for (std::uint32_t s = 0; s < limit; ++s) {
      Face f;
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if ((s >> k) & 1U) f = f.with(idx[k]);
      }
      all.insert(f);
    }
  }
  return SimplicialComplex(std::vector<Face>(all.begin(), all.end()));
}

int SimplicialComplex::dimension() const {
  if (faces_.empty()) return -2;
  return faces_.back().size() - 1;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const Face& face : faces_) {
    const int dim = face.size() - 1;
    if (dim < 0) continue;
    if (f.size() <= static_cast<std::size_t>(dim)) f.resize(static_cast<std::size_t>(dim) + 1, 0);
    ++f[static_cast<std::size_t>(dim)];
  }
  return f;
}

std::vector<Face> SimplicialComplex::faces_of_dimension(int dim) const {
  std::vector<Face> out;
  for (const Face& f : faces_) {
    if (f.size() == dim + 1) out.push_back(f);
  }
  return out;
}

Face SimplicialComplex::vertex_set() const {
  Face all;
  for (const Face& f : faces_) {
    if (f.size() == 1) all = all | f;
  }
  return all;
}

Monomial face_label(const MonomialIdeal& ideal, const Face& face) {
  Monomial label;
  for (int i : face.indices()) label = lcm(label, ideal.gen(static_cast<std::size_t>(i)));
  return label;
}

LabeledComplex::LabeledComplex(MonomialIdeal ideal, SimplicialComplex complex)
    : ideal_(std::move(ideal)), complex_(std::move(complex)) {
  const int q = static_cast<int>(ideal_.size());
  labels_.reserve(complex_.size());
  for (const Face& f : complex_.faces()) {
    if (f.max_index() >= q) throw Error("face references a generator the ideal does not have");
    labels_.push_back(face_label(ideal_, f));
  }
}

LabeledComplex taylor_complex(const MonomialIdeal& ideal, int max_generators) {
  const int q = static_cast<int>(ideal.size());
  if (q > max_generators || q > 30) {
    throw Error("Taylor complex of " + std::to_string(q) + " generators exceeds cap " + std::to_string(max_generators));
  }
  std::vector<Face> faces;
  faces.reserve(std::size_t{1} << q);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << q); ++s) {
    Face f;
    for (int i = 0; i < q; ++i) {
      if ((s >> i) & 1U) f = f.with(i);
    }
    faces.push_back(f);
  }
  return LabeledComplex(ideal, SimplicialComplex(std::move(faces)));
}

namespace {

// Each member owns a variable outside the lcm of the others.
bool irredundant(const std::vector<Monomial>& members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::uint64_t others = 0;
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (j != i) others |= members[j].bits();
    }
    if ((members[i].bits() & ~others) == 0) return false;
  }
  return true;
}

}  // namespace

LabeledComplex scarf_complex(const MonomialIdeal& ideal) {
  const auto& gens = ideal.gens();
  const int q = static_cast<int>(gens.size());
  if (q > kMaxGenerators) throw Error("too many generators for the Scarf complex");
  // The unit ideal: ∅ and {1} share the label 1, so no face is unique.
  if (q == 1 && gens.front().is_one()) return LabeledComplex(ideal, SimplicialComplex());

  std::vector<Face> all{Face()};
  std::unordered_set<Face, FaceHash> previous;
  std::vector<Face> level;
  for (int i = 0; i < q; ++i) level.push_back(Face::singleton(i));

  while (!level.empty()) {
    all.insert(all.end(), level.begin(), level.end());
    previous.clear();
    previous.insert(level.begin(), level.end());

    std::vector<Face> next;
    for (const Face& sigma : level) {
      const Monomial base = face_label(ideal, sigma);
      for (int g = sigma.max_index() + 1; g < q; ++g) {
        const Face candidate = sigma.with(g);
        bool facets_present = true;
        for (int i : sigma.indices()) {
          if (!previous.contains(candidate.without(i))) {
            facets_present = false;
            break;
          }
        }
        if (!facets_present) continue;

        const Monomial label = lcm(base, gens[static_cast<std::size_t>(g)]);
        bool closed = true;
        for (int h = 0; h < q && closed; ++h) {
          if (!candidate.contains(h) && divides(gens[static_cast<std::size_t>(h)], label)) closed = false;
        }
        if (!closed) continue;

        std::vector<Monomial> members;
        for (int i : candidate.indices()) members.push_back(gens[static_cast<std::size_t>(i)]);
        if (!irredundant(members)) continue;
        next.push_back(candidate);
      }
    }
    level = std::move(next);
  }
  return LabeledComplex(ideal, SimplicialComplex(std::move(all)));
}

LabeledComplex restrict_complex(const LabeledComplex& complex, Monomial m) {
  std::vector<Face> kept;
  const auto& faces = complex.faces();
  const auto& labels = complex.labels();
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (divides(labels[i], m)) kept.push_back(faces[i]);
  }
  return LabeledComplex(complex.ideal(), SimplicialComplex(std::move(kept)));
}

LcmLattice lcm_lattice(const MonomialIdeal& ideal, int max_variables) {
  if (ideal.universe().size() > max_variables) {
    throw Error("universe of " + std::to_string(ideal.universe().size()) + " variables exceeds cap " +
                std::to_string(max_variables));
  }
  std::set<Monomial> points(ideal.gens().begin(), ideal.gens().end());
  std::vector<Monomial> frontier(points.begin(), points.end());
  while (!frontier.empty()) {
    std::vector<Monomial> fresh;
    for (Monomial p : frontier) {
      for (Monomial g : ideal.gens()) {
        Monomial joined = lcm(p, g);
        if (points.insert(joined).second) fresh.push_back(joined);
      }
    }
    frontier = std::move(fresh);
  }
  return {std::vector<Monomial>(points.begin(), points.end()), lcm_of(ideal.gens())};
}

SimplicialComplex star(const SimplicialComplex& complex, const Face& sigma) {
  if (!complex.contains(sigma)) throw Error("star center is not a face of the complex");
  std::vector<Face> out;
  for (const Face& tau : complex.faces()) {
    if (complex.contains(sigma | tau)) out.push_back(tau);
  }
  return SimplicialComplex(std::move(out));
}

SimplicialComplex cone(int apex, const SimplicialComplex& complex) {
  if (complex.vertex_set().contains(apex)) throw Error("cone apex collides with an existing vertex");
  std::vector<Face> out = complex.faces();
  for (const Face& tau : complex.faces()) out.push_back(tau.with(apex));
  return SimplicialComplex(std::move(out));
}

}  // namespace scarflab
