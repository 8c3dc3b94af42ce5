#include "ptrace/groebner.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <tuple>

#include "ptrace/errors.hpp"

namespace ptrace {

const Budget& Budget::unlimited() {
  static const Budget b(0);
  return b;
}

void Budget::charge(std::uint64_t steps) const {
  if (limit_ == 0) return;
  const std::uint64_t now = used_.fetch_add(steps, std::memory_order_relaxed) + steps;
  if (now > limit_) throw BudgetExceeded("step budget of " + std::to_string(limit_) + " exceeded");
}

Ideal::Ideal(RingPtr ring, std::vector<Poly> generators) : ring_(std::move(ring)), gens_(std::move(generators)) {
  for (const auto& g : gens_) {
    if (g.is_zero()) throw ValidationError("ideal generators must be nonzero");
    if (g.ring() != ring_ && !(*g.ring() == *ring_)) throw ValidationError("ideal generator from a different ring");
  }
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Poly& g) { return g.is_homogeneous(); });
}

// ---- reduction ------------------------------------------------------------

namespace {

const Poly* find_divisor(const std::vector<Poly>& basis, const Monomial& m) {
  for (const auto& g : basis)
    if (g.leading_monomial().divides(m)) return &g;
  return nullptr;
}

// Full reduction of f by `basis` (monic polynomials).
Poly reduce(const Poly& f, const std::vector<Poly>& basis, const RingPtr& ring, const Budget& budget) {
  Poly p = f;
  std::vector<Term> rem;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    if (const Poly* g = find_divisor(basis, lt.mono)) {
      budget.charge();
      p = p.sub_mul_term(lt.coeff / g->leading_coefficient(), lt.mono / g->leading_monomial(), *g);
    } else {
      rem.push_back(lt);
      p = p.drop_leading();
    }
  }
  return Poly::from_sorted_terms(ring, std::move(rem));
}

}  // namespace

bool GroebnerBasis::is_unit() const {
  return std::any_of(polys_.begin(), polys_.end(), [](const Poly& g) { return g.leading_monomial().is_one(); });
}

Poly GroebnerBasis::normal_form(const Poly& f, const Budget& budget) const {
  if (f.ring() == ring_ || f.is_zero()) return reduce(f, polys_, ring_, budget);
  return reduce(f.in_ring(ring_), polys_, ring_, budget);
}

bool GroebnerBasis::is_standard(const Monomial& m) const { return find_divisor(polys_, m) == nullptr; }

std::vector<Monomial> GroebnerBasis::standard_monomials(long m) const {
  return standard_monomials(ring_->weights(), m);
}

std::vector<Monomial> GroebnerBasis::standard_monomials(const Weights& w, long m) const {
  std::vector<Monomial> out;
  for (auto& mono : monomial_basis(w, m, ring_->order()))
    if (is_standard(mono)) out.push_back(mono);
  return out;
}

Poly s_polynomial(const Poly& f, const Poly& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Poly a = f.mul_term(l / f.leading_monomial(), f.leading_coefficient().inverse());
  return a.sub_mul_term(g.leading_coefficient().inverse(), l / g.leading_monomial(), g);
}

// ---- Buchberger -----------------------------------------------------------

GroebnerBasis buchberger(const Ideal& ideal, const Budget& budget) {
  const RingPtr& ring = ideal.ring();
  std::vector<Poly> basis;
  std::vector<bool> alive;

  // Pending pairs keyed by (lcm degree, i, j) so the smallest degree is processed first.
  using Key = std::tuple<long, std::size_t, std::size_t>;
  std::set<Key> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add = [&](Poly h) {
    h = h.monic();
    const std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (!alive[i]) continue;
      const long deg = ring->weights().degree(basis[i].leading_monomial().lcm(h.leading_monomial()));
      queue.emplace(deg, i, k);
      pending.emplace(i, k);
    }
    basis.push_back(std::move(h));
    alive.push_back(true);
  };

  for (const auto& g : ideal.generators()) {
    Poly r = reduce(g.in_ring(ring), basis, ring, budget);
    if (!r.is_zero()) add(std::move(r));
  }

  auto in_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!queue.empty()) {
    const auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({i, j});
    budget.charge();
    if (!alive[i] || !alive[j]) continue;
    const Monomial& li = basis[i].leading_monomial();
    const Monomial& lj = basis[j].leading_monomial();
    if (li.coprime(lj)) continue;
    const Monomial l = li.lcm(lj);
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j || !alive[k]) continue;
      if (basis[k].leading_monomial().divides(l) && !in_pending(i, k) && !in_pending(j, k)) chain = true;
    }
    if (chain) continue;
    Poly r = reduce(s_polynomial(basis[i], basis[j]), basis, ring, budget);
    if (!r.is_zero()) add(std::move(r));
  }

  // Minimalize: drop elements whose leading monomial is a multiple of another's.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i) continue;
      const Monomial& lk = basis[k].leading_monomial();
      const Monomial& li = basis[i].leading_monomial();
      if (lk.divides(li) && (lk != li || k < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Interreduce tails.
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    reduced.push_back(reduce(minimal[i], others, ring, budget).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
    return ring->compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });

  GroebnerBasis gb(ring, std::move(reduced));
  for (const auto& g : ideal.generators()) {
    if (!gb.normal_form(g.in_ring(ring)).is_zero())
      throw std::logic_error("buchberger: generator does not reduce to zero");
  }
  return gb;
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const Budget& budget) {
  const Ring& r = *ideal.ring();
  auto target = std::make_shared<const Ring>(r.names(), r.weights(), order);
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.in_ring(target));
  return buchberger(Ideal(target, std::move(gens)), budget);
}

// ---- ideal invariants -----------------------------------------------------

namespace {

// Exponent bound per variable from pure-power leading monomials; empty if some variable has none.
std::optional<std::vector<unsigned>> pure_power_bounds(const GroebnerBasis& gb) {
  const std::size_t n = gb.ring()->nvars();
  std::vector<unsigned> bound(n, 0);
  for (const auto& g : gb.polys()) {
    const Monomial& m = g.leading_monomial();
    const std::uint64_t s = m.support();
    if (s == 0) continue;
    if ((s & (s - 1)) != 0) continue;
    const std::size_t i = static_cast<std::size_t>(__builtin_ctzll(s));
    if (bound[i] == 0 || m[i] < bound[i]) bound[i] = m[i];
  }
  for (unsigned b : bound)
    if (b == 0) return std::nullopt;
  return bound;
}

// Visits every standard monomial of a zero-dimensional basis.
template <typename Visit>
void for_each_standard(const GroebnerBasis& gb, const std::vector<unsigned>& bound, Visit visit) {
  const std::size_t n = bound.size();
  Monomial cur(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      visit(cur);
      return;
    }
    for (unsigned e = 0; e < bound[i]; ++e) {
      cur.set(i, e);
      // With later exponents zero this is the smallest extension; once it is
      // non-standard so is every extension.
      if (!gb.is_standard(cur)) break;
      rec(i + 1);
    }
    cur.set(i, 0);
  };
  rec(0);
}

}  // namespace

Codimension codimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) return 0;
  const std::size_t n = gb.ring()->nvars();
  if (n == 0) return 1;
  auto bound = pure_power_bounds(gb);
  if (!bound) return std::nullopt;
  std::size_t count = 0;
  for_each_standard(gb, *bound, [&](const Monomial&) { ++count; });
  return count;
}

Codimension codimension(const Ideal& ideal, const Budget& budget) { return codimension(buchberger(ideal, budget)); }

std::optional<long> top_standard_degree(const GroebnerBasis& gb) {
  if (gb.is_unit()) return std::nullopt;
  auto bound = pure_power_bounds(gb);
  if (!bound) return std::nullopt;
  long top = 0;
  for_each_standard(gb, *bound, [&](const Monomial& m) { top = std::max(top, gb.ring()->weights().degree(m)); });
  return top;
}

std::optional<int> krull_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) return std::nullopt;
  const std::size_t n = gb.ring()->nvars();
  std::vector<std::uint64_t> supports;
  for (const auto& g : gb.polys()) supports.push_back(g.leading_monomial().support());
  int best = 0;
  // Branch and bound over variable subsets S with no leading-monomial support inside S.
  std::function<void(std::size_t, std::uint64_t, int)> rec = [&](std::size_t i, std::uint64_t set, int size) {
    if (size + static_cast<int>(n - i) <= best) return;
    if (i == n) {
      best = size;
      return;
    }
    const std::uint64_t with = set | (std::uint64_t{1} << i);
    bool ok = true;
    for (std::uint64_t s : supports) {
      if ((s & ~with) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) rec(i + 1, with, size + 1);
    rec(i + 1, set, size);
  };
  rec(0, 0, 0);
  return best;
}

std::optional<int> krull_dimension(const Ideal& ideal, const Budget& budget) {
  return krull_dimension(buchberger(ideal, budget));
}

std::vector<std::size_t> hilbert_function(const Ideal& ideal, long up_to, const Budget& budget) {
  return hilbert_function(ideal, ideal.ring()->weights(), up_to, budget);
}

std::vector<std::size_t> hilbert_function(const Ideal& ideal, const Weights& w, long up_to, const Budget& budget) {
  const Ring& r = *ideal.ring();
  auto graded = std::make_shared<const Ring>(r.names(), w, MonomialOrder::grevlex());
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) {
    Poly h = g.in_ring(graded);
    if (!h.is_homogeneous()) throw ValidationError("hilbert_function needs a homogeneous ideal; '" + g.to_string() + "' is not");
    gens.push_back(std::move(h));
  }
  GroebnerBasis gb = buchberger(Ideal(graded, std::move(gens)), budget);
  std::vector<std::size_t> h;
  for (long m = 0; m <= up_to; ++m) h.push_back(gb.standard_monomials(m).size());
  return h;
}

}  // namespace ptrace
