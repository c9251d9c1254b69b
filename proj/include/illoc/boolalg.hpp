#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace illoc {

class Element;

inline constexpr std::size_t kDefaultMaxAtoms = 16;
// Elements are bitmasks; this is the hard ceiling regardless of configuration.
inline constexpr std::size_t kAbsoluteMaxAtoms = 31;

bool isIdentifier(std::string_view text);

/// The finite Boolean algebra 2^k over named atoms.
///
/// Algebras are interned: two `make` calls with the same atom list return the
/// same object, so algebra identity is pointer identity and an Element can be
/// a plain (algebra*, mask) pair.
class AlgebraSpec {
 public:
  static const AlgebraSpec& make(const std::vector<std::string>& atoms,
                                 std::size_t maxAtoms = kDefaultMaxAtoms);

  std::size_t size() const { return atoms_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  std::uint32_t topMask() const { return (std::uint32_t{1} << atoms_.size()) - 1; }
  std::uint64_t cardinality() const { return std::uint64_t{1} << atoms_.size(); }

  std::optional<std::size_t> indexOf(std::string_view atom) const;

  Element bottom() const;
  Element top() const;
  Element fromMask(std::uint32_t mask) const;
  Element fromNames(std::span<const std::string> names) const;

  // Binary counting over atom positions: the i-th element has mask i.
  std::vector<Element> enumerate() const;

  AlgebraSpec(const AlgebraSpec&) = delete;
  AlgebraSpec& operator=(const AlgebraSpec&) = delete;

 private:
  explicit AlgebraSpec(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {}
  friend struct AlgebraRegistry;

  std::vector<std::string> atoms_;
};

class Element {
 public:
  Element(const AlgebraSpec& algebra, std::uint32_t mask);

  const AlgebraSpec& algebra() const { return *algebra_; }
  std::uint32_t mask() const { return mask_; }
  bool isBottom() const { return mask_ == 0; }
  bool isTop() const { return mask_ == algebra_->topMask(); }
  bool contains(std::size_t atomIndex) const { return (mask_ >> atomIndex) & 1U; }

  std::vector<std::string> atomNames() const;
  // "{}" for bottom, otherwise atoms in declaration order, e.g. "{a,b}".
  std::string str() const;

  friend bool operator==(const Element& x, const Element& y) {
    return x.algebra_ == y.algebra_ && x.mask_ == y.mask_;
  }
  // Total order for use as a map key; not the lattice order.
  friend bool operator<(const Element& x, const Element& y) {
    if (x.algebra_ != y.algebra_) return std::less<const AlgebraSpec*>()(x.algebra_, y.algebra_);
    return x.mask_ < y.mask_;
  }

 private:
  const AlgebraSpec* algebra_;
  std::uint32_t mask_;
};

void requireSameAlgebra(const Element& x, const Element& y);

Element meet(const Element& x, const Element& y);
Element join(const Element& x, const Element& y);
Element complement(const Element& x);
bool leq(const Element& x, const Element& y);

inline std::vector<Element> enumerate(const AlgebraSpec& spec) { return spec.enumerate(); }

}  // namespace illoc
