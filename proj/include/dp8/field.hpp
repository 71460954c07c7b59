#pragma once

#include <concepts>
#include <string>

#include "dp8/quadext.hpp"
#include "dp8/rational.hpp"

namespace dp8 {

// The two coefficient fields of the library. Everything generic is templated
// on one of these; QuadExt extension compatibility is enforced by the element
// operations themselves.
template <class K>
concept FieldElem = std::same_as<K, Rat> || std::same_as<K, QuadExt>;

inline bool fe_is_zero(const Rat& q) { return q == 0; }
inline bool fe_is_zero(const QuadExt& q) { return q.is_zero(); }

inline std::string fe_str(const Rat& q) { return rat_to_string(q); }
inline std::string fe_str(const QuadExt& q) { return q.str(); }

inline Rat fe_conj(const Rat& q) { return q; }
inline QuadExt fe_conj(const QuadExt& q) { return q.conj(); }

inline size_t fe_digits(const Rat& q) { return rat_digits(q); }
inline size_t fe_digits(const QuadExt& q) {
  size_t a = rat_digits(q.x()), b = rat_digits(q.y());
  return a > b ? a : b;
}

// Total order used only for deterministic tie-breaking.
inline bool fe_less(const Rat& a, const Rat& b) { return a < b; }
inline bool fe_less(const QuadExt& a, const QuadExt& b) {
  if (a.x() != b.x()) return a.x() < b.x();
  return a.y() < b.y();
}

template <FieldElem K>
struct FieldOps;

template <>
struct FieldOps<Rat> {
  static Rat from_rat(const Rat& q) { return q; }
};

template <>
struct FieldOps<QuadExt> {
  static QuadExt from_rat(const Rat& q) { return QuadExt(q); }
};

// Explicit ambient-field tag. Values whose coordinates happen to be rational
// carry no extension of their own, so operations that must know the field
// (conic solving, square roots) take one of these.
template <FieldElem K>
struct FTag;

template <>
struct FTag<Rat> {
  Int ext() const { return 0; }
};

template <>
struct FTag<QuadExt> {
  QuadField field;
  FTag() = default;
  explicit FTag(const QuadField& f) : field(f) {}
  Int ext() const { return field.a; }
};

}  // namespace dp8
