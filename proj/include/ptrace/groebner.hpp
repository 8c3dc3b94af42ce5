#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include "ptrace/poly.hpp"

namespace ptrace {

/// Shared step budget. A limit of 0 means unlimited. Charging is thread-safe;
/// exceeding the limit throws BudgetExceeded.
class Budget {
 public:
  explicit Budget(std::uint64_t limit = 0) : limit_(limit) {}
  Budget(const Budget&) = delete;
  Budget& operator=(const Budget&) = delete;

  static const Budget& unlimited();

  void charge(std::uint64_t steps = 1) const;
  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  mutable std::atomic<std::uint64_t> used_{0};
};

/// Dimension of a quotient vector space; std::nullopt stands for infinite.
using Codimension = std::optional<std::size_t>;

class Ideal {
 public:
  /// Zero generators are rejected; an empty list is the zero ideal.
  Ideal(RingPtr ring, std::vector<Poly> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  bool is_homogeneous() const;

 private:
  RingPtr ring_;
  std::vector<Poly> gens_;
};

/// Reduced Groebner basis with respect to the order of `ring()`.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Poly> reduced) : ring_(std::move(ring)), polys_(std::move(reduced)) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& polys() const { return polys_; }
  bool is_unit() const;

  /// Fully reduced remainder of f.
  Poly normal_form(const Poly& f, const Budget& budget = Budget::unlimited()) const;
  bool contains(const Poly& f) const { return normal_form(f).is_zero(); }
  bool is_standard(const Monomial& m) const;
  /// Monomials of weighted degree m outside the leading-term ideal.
  std::vector<Monomial> standard_monomials(long m) const;
  std::vector<Monomial> standard_monomials(const Weights& w, long m) const;

 private:
  RingPtr ring_;
  std::vector<Poly> polys_;
};

Poly s_polynomial(const Poly& f, const Poly& g);

/// Buchberger's algorithm with the coprime and chain criteria, processing
/// pairs by ascending weighted degree of their lcm.
GroebnerBasis buchberger(const Ideal& ideal, const Budget& budget = Budget::unlimited());
/// Same, after moving the generators into a ring with order `order`.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const Budget& budget = Budget::unlimited());

Codimension codimension(const GroebnerBasis& gb);
Codimension codimension(const Ideal& ideal, const Budget& budget = Budget::unlimited());

/// Krull dimension of V(I) via maximal independent sets of the leading-term
/// ideal; std::nullopt when 1 is in I (empty variety).
std::optional<int> krull_dimension(const GroebnerBasis& gb);
std::optional<int> krull_dimension(const Ideal& ideal, const Budget& budget = Budget::unlimited());

/// Number of standard monomials in each degree 0..up_to. Requires a homogeneous ideal.
std::vector<std::size_t> hilbert_function(const Ideal& ideal, long up_to, const Budget& budget = Budget::unlimited());
std::vector<std::size_t> hilbert_function(const Ideal& ideal, const Weights& w, long up_to,
                                          const Budget& budget = Budget::unlimited());

/// Largest degree of a standard monomial of a zero-dimensional ideal.
std::optional<long> top_standard_degree(const GroebnerBasis& gb);

}  // namespace ptrace
