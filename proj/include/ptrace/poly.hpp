#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ptrace/scalar.hpp"

namespace ptrace {

inline constexpr std::size_t kMaxVariables = 32;

/// Exponent vector of fixed capacity; only the first size() entries are meaningful.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exps);
  static Monomial from_exponents(std::span<const unsigned> exps);

  std::size_t size() const { return n_; }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned v);
  unsigned total_degree() const;
  bool is_one() const;
  /// Bitmask of variables with a positive exponent.
  std::uint64_t support() const;

  bool divides(const Monomial& o) const;
  bool coprime(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  /// Exact quotient; requires o.divides(*this).
  Monomial operator/(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  /// Arbitrary but fixed total order for use as a map key (not a monomial order).
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVariables> e_{};
  std::uint8_t n_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Positive integer grading weights, one per variable.
class Weights {
 public:
  Weights() = default;
  explicit Weights(std::vector<int> w);
  static Weights standard(std::size_t n) { return Weights(std::vector<int>(n, 1)); }

  std::size_t size() const { return w_.size(); }
  int operator[](std::size_t i) const { return w_[i]; }
  const std::vector<int>& values() const { return w_; }
  long degree(const Monomial& m) const;
  bool all_equal() const;
  friend bool operator==(const Weights& a, const Weights& b) { return a.w_ == b.w_; }

 private:
  std::vector<int> w_;
};

class MonomialOrder {
 public:
  enum class Kind { WeightedGrevlex, Lex };

  MonomialOrder() = default;
  /// `priority[0]` is the most significant variable; identity when empty.
  MonomialOrder(Kind kind, std::vector<std::size_t> priority = {});
  static MonomialOrder grevlex() { return MonomialOrder(Kind::WeightedGrevlex); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }

  Kind kind() const { return kind_; }
  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b, const Weights& w) const;
  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.priority_ == b.priority_;
  }

 private:
  std::size_t var(std::size_t k) const { return priority_.empty() ? k : priority_[k]; }
  Kind kind_ = Kind::WeightedGrevlex;
  std::vector<std::size_t> priority_;
};

/// Polynomial ring Q(zeta)[x_1..x_n] with names, grading and a term order.
class Ring {
 public:
  Ring(std::vector<std::string> names, Weights weights, MonomialOrder order = MonomialOrder::grevlex());

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const Weights& weights() const { return weights_; }
  const MonomialOrder& order() const { return order_; }
  int compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b, weights_); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_ && a.weights_ == b.weights_ && a.order_ == b.order_;
  }

 private:
  std::vector<std::string> names_;
  Weights weights_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights,
                  MonomialOrder order = MonomialOrder::grevlex());

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Canonical sparse polynomial: terms sorted strictly descending in the ring's
/// order, no zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  Poly(RingPtr ring, const Scalar& c);

  static Poly variable(const RingPtr& ring, std::size_t i);
  static Poly monomial(const RingPtr& ring, const Monomial& m, const Scalar& c = 1);
  /// Sorts and merges arbitrary terms into canonical form.
  static Poly from_terms(const RingPtr& ring, std::vector<Term> terms);
  /// Trusts that `terms` is already canonical.
  static Poly from_sorted_terms(const RingPtr& ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Scalar& leading_coefficient() const { return terms_.front().coeff; }
  /// Coefficient of `m` (zero when absent).
  Scalar coefficient(const Monomial& m) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& c, const Poly& p);
  Poly mul_term(const Monomial& m, const Scalar& c) const;
  Poly pow(unsigned e) const;
  /// this - c * m * g, fused for reduction loops.
  Poly sub_mul_term(const Scalar& c, const Monomial& m, const Poly& g) const;

  Poly derivative(std::size_t i) const;
  Scalar evaluate(std::span<const Scalar> point) const;
  /// Substitutes images[i] for x_i; images live in their own (common) ring.
  Poly substitute(std::span<const Poly> images) const;
  /// Same variables, re-sorted for another ring (e.g. a different order).
  Poly in_ring(const RingPtr& target) const;
  Poly monic() const;
  /// All terms but the leading one.
  Poly drop_leading() const;

  Poly homogeneous_component(long m) const;
  Poly homogeneous_component(const Weights& w, long m) const;
  /// Weighted degree when homogeneous and nonzero.
  std::optional<long> homogeneous_degree() const;
  bool is_homogeneous() const;
  /// Maximum weighted degree of a term; -1 for zero.
  long degree() const;

  std::string to_string() const;
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// All monomials of weighted degree m in w.size() variables, sorted
/// descending by `order`.
std::vector<Monomial> monomial_basis(const Weights& w, long m,
                                     const MonomialOrder& order = MonomialOrder::grevlex());

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);

}  // namespace ptrace
