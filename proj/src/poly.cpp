#include "ptrace/poly.hpp"

#include <algorithm>
#include <functional>

#include "ptrace/errors.hpp"

namespace ptrace {

// ---- Monomial -------------------------------------------------------------

Monomial::Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVariables) throw ValidationError("too many variables (max " + std::to_string(kMaxVariables) + ")");
}

Monomial::Monomial(std::initializer_list<unsigned> exps) : Monomial(exps.size()) {
  std::size_t i = 0;
  for (unsigned e : exps) set(i++, e);
}

Monomial Monomial::from_exponents(std::span<const unsigned> exps) {
  Monomial m(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
  return m;
}

void Monomial::set(std::size_t i, unsigned v) {
  if (v > 0xFFFFu) throw ValidationError("exponent too large");
  e_[i] = static_cast<std::uint16_t>(v);
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += e_[i];
  return d;
}

bool Monomial::is_one() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] != 0) return false;
  return true;
}

std::uint64_t Monomial::support() const {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] != 0) s |= std::uint64_t{1} << i;
  return s;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] != 0 && o.e_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < n_; ++i) {
    const unsigned s = unsigned{e_[i]} + o.e_[i];
    if (s > 0xFFFFu) throw ValidationError("exponent overflow in monomial product");
    r.e_[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] - o.e_[i]);
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = n_;
  for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ e_[i];
  return h;
}

// ---- Weights / orders / rings ---------------------------------------------

Weights::Weights(std::vector<int> w) : w_(std::move(w)) {
  for (int x : w_)
    if (x < 1) throw ValidationError("weights must be positive integers");
}

long Weights::degree(const Monomial& m) const {
  long d = 0;
  for (std::size_t i = 0; i < w_.size(); ++i) d += static_cast<long>(w_[i]) * m[i];
  return d;
}

bool Weights::all_equal() const {
  return std::adjacent_find(w_.begin(), w_.end(), std::not_equal_to<>()) == w_.end();
}

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
  std::vector<std::size_t> sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw ValidationError("monomial order priority must be a permutation");
  // The identity permutation is stored as empty so equal orders compare equal.
  if (std::is_sorted(priority_.begin(), priority_.end())) priority_.clear();
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b, const Weights& w) const {
  const std::size_t n = a.size();
  if (kind_ == Kind::Lex) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t i = var(k);
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }
  const long da = w.degree(a), db = w.degree(b);
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t k = n; k-- > 0;) {
    const std::size_t i = var(k);
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

Ring::Ring(std::vector<std::string> names, Weights weights, MonomialOrder order)
    : names_(std::move(names)), weights_(std::move(weights)), order_(std::move(order)) {
  if (names_.size() > kMaxVariables) throw ValidationError("too many variables (max " + std::to_string(kMaxVariables) + ")");
  if (weights_.size() != names_.size()) throw ValidationError("one weight per variable required");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw ValidationError("duplicate variable name '" + names_[i] + "'");
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(names), Weights(std::move(weights)), std::move(order));
}

// ---- Poly -----------------------------------------------------------------

Poly::Poly(RingPtr ring, const Scalar& c) : ring_(std::move(ring)) {
  if (!c.is_zero()) terms_.push_back({Monomial(ring_->nvars()), c});
}

Poly Poly::variable(const RingPtr& ring, std::size_t i) {
  Monomial m(ring->nvars());
  m.set(i, 1);
  return monomial(ring, m);
}

Poly Poly::monomial(const RingPtr& ring, const Monomial& m, const Scalar& c) {
  Poly p(ring);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(const RingPtr& ring, std::vector<Term> terms) {
  const Ring& r = *ring;
  std::sort(terms.begin(), terms.end(),
            [&r](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
  Poly p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Poly Poly::from_sorted_terms(const RingPtr& ring, std::vector<Term> terms) {
  Poly p(ring);
  p.terms_ = std::move(terms);
  return p;
}

Poly Poly::drop_leading() const {
  Poly p(ring_);
  if (terms_.size() > 1) p.terms_.assign(terms_.begin() + 1, terms_.end());
  return p;
}

Scalar Poly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly Poly::sub_mul_term(const Scalar& c, const Monomial& m, const Poly& g) const {
  const Ring& r = *ring_;
  Poly out(ring_);
  out.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      out.terms_.push_back(terms_[i++]);
      continue;
    }
    Monomial gm = g.terms_[j].mono * m;
    const int cmp = i == terms_.size() ? -1 : r.compare(terms_[i].mono, gm);
    if (cmp > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.terms_.push_back({gm, -(c * g.terms_[j].coeff)});
      ++j;
    } else {
      Scalar v = terms_[i].coeff - c * g.terms_[j].coeff;
      if (!v.is_zero()) out.terms_.push_back({gm, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (!ring_) ring_ = o.ring_;
  if (o.is_zero()) return *this;
  *this = sub_mul_term(Scalar(-1), Monomial(ring_->nvars()), o);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (!ring_) ring_ = o.ring_;
  if (o.is_zero()) return *this;
  *this = sub_mul_term(Scalar(1), Monomial(ring_->nvars()), o);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  const RingPtr& ring = a.ring_ ? a.ring_ : b.ring_;
  if (a.is_zero() || b.is_zero()) return Poly(ring);
  if (a.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return Poly::from_terms(ring, std::move(prod));
}

Poly operator*(const Scalar& c, const Poly& p) {
  if (c.is_zero()) return Poly(p.ring_);
  Poly r(p);
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::mul_term(const Monomial& m, const Scalar& c) const {
  Poly r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result(ring_, Scalar(1));
  Poly base(*this);
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::derivative(std::size_t i) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const unsigned e = t.mono[i];
    if (e == 0) continue;
    Monomial m(t.mono);
    m.set(i, e - 1);
    out.push_back({m, t.coeff * Scalar(static_cast<long>(e))});
  }
  // Lowering one exponent preserves the relative order of distinct terms
  // for both supported orders, and distinct terms stay distinct.
  Poly p(ring_);
  p.terms_ = std::move(out);
  return p;
}

Scalar Poly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != (ring_ ? ring_->nvars() : 0)) throw ValidationError("evaluation point has wrong dimension");
  Scalar sum = 0;
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (unsigned k = 0; k < t.mono[i]; ++k) v *= point[i];
    sum += v;
  }
  return sum;
}

Poly Poly::substitute(std::span<const Poly> images) const {
  if (images.size() != ring_->nvars()) throw ValidationError("substitution needs one image per variable");
  if (images.empty()) return *this;
  const RingPtr& target = images[0].ring();
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(target, Scalar(1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Poly result(target);
  for (const auto& t : terms_) {
    Poly term(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.mono[i] != 0) term = term * power(i, t.mono[i]);
    result += term;
  }
  return result;
}

Poly Poly::in_ring(const RingPtr& target) const {
  if (target->nvars() != ring_->nvars()) throw ValidationError("ring change needs equal variable counts");
  return from_terms(target, terms_);
}

Poly Poly::monic() const {
  if (is_zero() || leading_coefficient().is_one()) return *this;
  return leading_coefficient().inverse() * *this;
}

Poly Poly::homogeneous_component(long m) const { return homogeneous_component(ring_->weights(), m); }

Poly Poly::homogeneous_component(const Weights& w, long m) const {
  Poly r(ring_);
  for (const auto& t : terms_)
    if (w.degree(t.mono) == m) r.terms_.push_back(t);
  return r;
}

std::optional<long> Poly::homogeneous_degree() const {
  if (is_zero()) return std::nullopt;
  const Weights& w = ring_->weights();
  const long d = w.degree(terms_[0].mono);
  for (const auto& t : terms_)
    if (w.degree(t.mono) != d) return std::nullopt;
  return d;
}

bool Poly::is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

long Poly::degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, ring_->weights().degree(t.mono));
  return d;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    const bool one = t.mono.is_one();
    std::string mono = one ? "" : monomial_to_string(t.mono, ring_->names());
    if (t.coeff.is_rational()) {
      const mpq_class& q = t.coeff.rational_value();
      const bool neg = sgn(q) < 0;
      mpq_class mag = abs(q);
      if (s.empty())
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      if (one)
        s += mag.get_str();
      else if (mag == 1)
        s += mono;
      else
        s += mag.get_str() + "*" + mono;
    } else {
      if (!s.empty()) s += " + ";
      s += "(" + t.coeff.to_string() + ")";
      if (!one) s += "*" + mono;
    }
  }
  return s;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

std::vector<Monomial> monomial_basis(const Weights& w, long m, const MonomialOrder& order) {
  std::vector<Monomial> out;
  if (m < 0) return out;
  const std::size_t n = w.size();
  Monomial cur(n);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long remaining) {
    if (i + 1 == n) {
      if (remaining % w[i] == 0) {
        cur.set(i, static_cast<unsigned>(remaining / w[i]));
        out.push_back(cur);
      }
      return;
    }
    for (long e = 0; e * w[i] <= remaining; ++e) {
      cur.set(i, static_cast<unsigned>(e));
      rec(i + 1, remaining - e * w[i]);
    }
    cur.set(i, 0);
  };
  if (n == 0) {
    if (m == 0) out.push_back(cur);
    return out;
  }
  rec(0, m);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return order.compare(a, b, w) > 0; });
  return out;
}

}  // namespace ptrace
