#include "ptrace/leaves.hpp"

#include <map>

namespace ptrace {

namespace {

// Laplace expansion along the first selected row, memoized on (row, column set).
class MinorEvaluator {
 public:
  MinorEvaluator(const std::vector<std::vector<Poly>>& m, const RingPtr& ring) : m_(m), ring_(ring) {}

  Poly det(const std::vector<std::size_t>& rows, std::size_t first, std::uint64_t cols) {
    if (first == rows.size()) return Poly(ring_, Scalar(1));
    auto key = std::make_tuple(rows, first, cols);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Poly out(ring_);
    int sign = 1;
    for (std::size_t c = 0; c < 64; ++c) {
      if (!(cols >> c & 1)) continue;
      const Poly& e = m_[rows[first]][c];
      if (!e.is_zero()) {
        Poly sub = det(rows, first + 1, cols & ~(std::uint64_t{1} << c));
        if (!sub.is_zero()) {
          Poly t = e * sub;
          out += sign > 0 ? t : -t;
        }
      }
      sign = -sign;
    }
    memo_.emplace(key, out);
    return out;
  }

 private:
  const std::vector<std::vector<Poly>>& m_;
  RingPtr ring_;
  std::map<std::tuple<std::vector<std::size_t>, std::size_t, std::uint64_t>, Poly> memo_;
};

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<Poly> minors(const std::vector<std::vector<Poly>>& m, std::size_t k, const GroebnerBasis& gb) {
  const std::size_t n = m.size();
  std::vector<Poly> out;
  if (k == 0 || k > n) return out;
  std::vector<std::vector<Poly>> reduced = m;
  for (auto& row : reduced)
    for (auto& e : row) e = gb.normal_form(e);
  std::vector<std::vector<std::size_t>> sets;
  subsets(n, k, sets);
  MinorEvaluator ev(reduced, gb.ring());
  for (const auto& rows : sets)
    for (const auto& cols : sets) {
      std::uint64_t mask = 0;
      for (auto c : cols) mask |= std::uint64_t{1} << c;
      Poly d = gb.normal_form(ev.det(rows, 0, mask));
      if (!d.is_zero()) out.push_back(d.monic());
    }
  return out;
}

LeafReport rank_stratification(const PoissonPresentation& P, const Budget& budget) {
  LeafReport rep;
  rep.ambient_dimension = P.nvars();
  rep.dim_x = krull_dimension(P.gb());
  for (std::size_t rank = 0;; rank += 2) {
    std::vector<Poly> ms = minors(P.matrix(), rank + 2, P.gb());
    RankLevel level;
    level.rank = rank;
    level.ideal = P.ideal_generators();
    level.ideal.insert(level.ideal.end(), ms.begin(), ms.end());
    // No surviving minor: the locus is X itself, and this is the last level.
    level.dimension = ms.empty() ? rep.dim_x : krull_dimension(Ideal(P.ring(), level.ideal), budget);
    level.ok = !level.dimension || *level.dimension <= static_cast<int>(rank);
    rep.verdict = rep.verdict && level.ok;
    rep.levels.push_back(std::move(level));
    if (ms.empty()) break;
  }
  return rep;
}

SingularSupportReport singular_support(const MorphismPresentation& M, const Budget& budget) {
  const PoissonPresentation& P = M.source();
  const std::size_t n = P.nvars();
  const Ring& r = *P.ring();

  std::vector<std::string> names = r.names();
  std::vector<int> w = r.weights().values();
  int top = 0;
  for (int v : w) top = std::max(top, v);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("p_" + r.names()[i]);
    // Covector weights make every symbol homogeneous when the bracket is graded.
    w.push_back(top + 1 - r.weights()[i]);
  }
  auto big = make_ring(names, w);
  std::vector<Poly> xs;
  for (std::size_t i = 0; i < n; ++i) xs.push_back(Poly::variable(big, i));

  SingularSupportReport rep;
  rep.ambient_dimension = 2 * n;
  rep.dim_v = n;
  rep.ring = big;
  for (const auto& g : P.ideal_generators()) rep.ideal.push_back(g.substitute(xs));
  for (const auto& f : M.images()) {
    auto field = hamiltonian_field(P, f);
    Poly symbol(big);
    for (std::size_t i = 0; i < n; ++i)
      if (!field[i].is_zero()) symbol += field[i].substitute(xs) * Poly::variable(big, n + i);
    if (!symbol.is_zero()) rep.ideal.push_back(std::move(symbol));
  }
  rep.dim_z = krull_dimension(Ideal(big, rep.ideal), budget);
  rep.verdict = !rep.dim_z || *rep.dim_z <= static_cast<int>(n);
  return rep;
}

}  // namespace ptrace
