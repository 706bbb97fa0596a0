#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fqirr/cycint.hpp"
#include "fqirr/field.hpp"

namespace fqirr {

// F_q with q = p^r, together with a primitive element gamma.
class FieldContext {
 public:
  // Uses the built-in modulus of degree r when `modulus` is empty.
  static FieldContext make(int p, int r, std::optional<std::vector<int>> modulus = std::nullopt);
  explicit FieldContext(Field field);

  int p() const { return field_.characteristic(); }
  int r() const { return field_.degree(); }
  std::uint64_t q() const { return field_.order(); }
  BigInt q_big() const { return BigInt(static_cast<unsigned long>(q())); }
  const Field& field() const { return field_; }
  const std::vector<int>& modulus() const { return field_.modulus(); }
  // First primitive element in basis-lexicographic order.
  Elem gamma() const { return gamma_; }

  // c in <gamma^3>, i.e. c^{(q-1)/3} = 1. Requires c != 0 and 3 | q - 1.
  bool is_cube(Elem c) const;

  // All elements in basis-lexicographic order.
  std::vector<Elem> elements() const;

 private:
  Field field_;
  Elem gamma_;
};

// F_{q^m} realised as a single extension F_p[x]/(F) of degree r*m, with
// F_q embedded through a root theta of the base modulus.
class ExtContext {
 public:
  // The ambient modulus is the built-in one of degree r*m (for m = 1 the
  // base field itself). Throws ScopeError when r*m exceeds kMaxDegree.
  ExtContext(FieldContext base, int m);

  const FieldContext& base() const { return base_; }
  int m() const { return m_; }
  const Field& ambient() const { return ambient_; }
  std::uint64_t size() const { return ambient_.order(); }

  // Image of the residue class of x in the base field.
  Elem theta() const { return theta_; }
  Elem embed(Elem base_elem) const { return embed_map_(base_elem); }
  // Base-field coordinates of z if z lies in the embedded F_q.
  std::optional<Elem> unembed(Elem z) const;

  // tr: F_{q^m} -> F_q, returned in base-field coordinates.
  Elem relative_trace(Elem z) const { return rel_trace_map_(z); }
  // Same, as the Frobenius sum z + z^q + ... + z^{q^{m-1}}.
  Elem relative_trace_by_definition(Elem z) const;
  // Tr: F_{q^m} -> F_p.
  int absolute_trace(Elem z) const { return ambient_.trace(z); }
  // Canonical additive character e(z) = zeta_p^{Tr z}.
  CycInt char_e(Elem z) const { return CycInt::root_of_unity(base_.p(), absolute_trace(z)); }

  // First element in basis-lexicographic order with relative trace 1.
  Elem solve_trace_one() const;
  Elem inv_or_zero(Elem z) const { return ambient_.inv_or_zero(z); }

  // First primitive element of the ambient field (used to walk F_{q^m}^*).
  Elem generator() const { return generator_; }
  Elem embedded_gamma() const { return embed(base_.gamma()); }
  // z -> z^q.
  const LinearMap& q_frobenius() const { return q_frobenius_; }

 private:
  FieldContext base_;
  int m_;
  Field ambient_;
  Elem theta_{};
  Elem generator_{};
  std::vector<Elem> embed_columns_;
  LinearMap embed_map_;
  LinearMap rel_trace_map_;
  LinearMap q_frobenius_;
};

// Solves sum_j a_j * columns[j] = target over F_p (vectors packed as Elem
// of dimension `dim`); returns the coefficient vector packed as an Elem of
// dimension columns.size(), or nullopt when target is outside the span.
// Columns must be linearly independent.
std::optional<Elem> solve_in_span(const Field& ambient, std::span<const Elem> columns, Elem target);

}  // namespace fqirr
