#include "illoc/boolalg.hpp"

#include <map>
#include <mutex>
#include <set>

#include "illoc/error.hpp"

namespace illoc {

bool isIdentifier(std::string_view text) {
  if (text.empty() || text[0] < 'a' || text[0] > 'z') return false;
  for (char c : text) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

struct AlgebraRegistry {
  std::mutex mutex;
  std::map<std::vector<std::string>, std::unique_ptr<AlgebraSpec>> algebras;

  static AlgebraRegistry& instance() {
    static AlgebraRegistry registry;
    return registry;
  }

  const AlgebraSpec& intern(const std::vector<std::string>& atoms) {
    std::lock_guard lock(mutex);
    auto it = algebras.find(atoms);
    if (it == algebras.end()) {
      it = algebras.emplace(atoms, std::unique_ptr<AlgebraSpec>(new AlgebraSpec(atoms))).first;
    }
    return *it->second;
  }
};

const AlgebraSpec& AlgebraSpec::make(const std::vector<std::string>& atoms, std::size_t maxAtoms) {
  if (atoms.empty()) throw SemanticError(SemanticKind::InvalidAlgebra, "an algebra needs at least one atom");
  std::size_t limit = std::min(maxAtoms, kAbsoluteMaxAtoms);
  if (atoms.size() > limit) {
    throw SemanticError(SemanticKind::InvalidAlgebra,
                        std::to_string(atoms.size()) + " atoms exceeds the maximum of " +
                            std::to_string(limit));
  }
  std::set<std::string> seen;
  for (const auto& name : atoms) {
    if (!isIdentifier(name)) {
      throw SemanticError(SemanticKind::InvalidAlgebra, "'" + name + "' is not a valid atom name");
    }
    if (!seen.insert(name).second) {
      throw SemanticError(SemanticKind::InvalidAlgebra, "duplicate atom '" + name + "'");
    }
  }
  return AlgebraRegistry::instance().intern(atoms);
}

std::optional<std::size_t> AlgebraSpec::indexOf(std::string_view atom) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i] == atom) return i;
  }
  return std::nullopt;
}

Element AlgebraSpec::bottom() const { return Element(*this, 0); }
Element AlgebraSpec::top() const { return Element(*this, topMask()); }
Element AlgebraSpec::fromMask(std::uint32_t mask) const { return Element(*this, mask); }

Element AlgebraSpec::fromNames(std::span<const std::string> names) const {
  std::uint32_t mask = 0;
  for (const auto& name : names) {
    auto index = indexOf(name);
    if (!index) throw SemanticError(SemanticKind::UnknownAtom, "'" + name + "' is not an atom of the algebra");
    mask |= std::uint32_t{1} << *index;
  }
  return Element(*this, mask);
}

std::vector<Element> AlgebraSpec::enumerate() const {
  std::vector<Element> out;
  out.reserve(cardinality());
  for (std::uint64_t m = 0; m < cardinality(); ++m) out.emplace_back(*this, static_cast<std::uint32_t>(m));
  return out;
}

Element::Element(const AlgebraSpec& algebra, std::uint32_t mask) : algebra_(&algebra), mask_(mask) {
  if (mask & ~algebra.topMask()) {
    throw SemanticError(SemanticKind::UnknownAtom, "mask has bits outside the algebra");
  }
}

std::vector<std::string> Element::atomNames() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < algebra_->size(); ++i) {
    if (contains(i)) out.push_back(algebra_->atoms()[i]);
  }
  return out;
}

std::string Element::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& name : atomNames()) {
    if (!first) out += ",";
    out += name;
    first = false;
  }
  return out + "}";
}

void requireSameAlgebra(const Element& x, const Element& y) {
  if (&x.algebra() != &y.algebra()) {
    throw SemanticError(SemanticKind::AlgebraMismatch, "elements " + x.str() + " and " + y.str() +
                                                           " belong to different algebras");
  }
}

Element meet(const Element& x, const Element& y) {
  requireSameAlgebra(x, y);
  return x.algebra().fromMask(x.mask() & y.mask());
}

Element join(const Element& x, const Element& y) {
  requireSameAlgebra(x, y);
  return x.algebra().fromMask(x.mask() | y.mask());
}

Element complement(const Element& x) { return x.algebra().fromMask(x.algebra().topMask() & ~x.mask()); }

bool leq(const Element& x, const Element& y) {
  requireSameAlgebra(x, y);
  return (x.mask() & ~y.mask()) == 0;
}

}  // namespace illoc
