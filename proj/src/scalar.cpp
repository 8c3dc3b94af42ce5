#include "ptrace/scalar.hpp"

#include <map>
#include <mutex>

#include "ptrace/errors.hpp"

namespace ptrace {

namespace {

using QPoly = std::vector<mpq_class>;  // lowest degree first

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Exact division a / b over Z[x]; b monic. Remainder must vanish.
std::vector<mpz_class> divide_exact(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<mpz_class> q(a.size() - db);
  for (std::size_t k = a.size(); k-- > db;) {
    mpz_class t = a[k];
    q[k - db] = t;
    for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= t * b[i];
  }
  return q;
}

// p mod Phi_n in place, Phi_n monic of degree phi.
void reduce_mod(QPoly& p, const std::vector<mpz_class>& phi_n) {
  const std::size_t deg = phi_n.size() - 1;
  for (std::size_t k = p.size(); k-- > deg;) {
    if (sgn(p[k]) == 0) continue;
    mpq_class t = p[k];
    for (std::size_t i = 0; i < deg; ++i) p[k - deg + i] -= t * phi_n[i];
    p[k] = 0;
  }
  p.resize(deg);
}

// Quotient and remainder of a / b over Q[x]; b nonzero and trimmed.
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, mpq_class(0));
  while (r.size() >= b.size() && !r.empty()) {
    const std::size_t shift = r.size() - b.size();
    mpq_class t = r.back() / b.back();
    q[shift] = t;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= t * b[i];
    trim(r);
  }
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly c(std::max(a.size(), b.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  trim(c);
  return c;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(int n) {
  if (n < 1) throw ValidationError("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<mpz_class>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<mpz_class> p(static_cast<std::size_t>(n) + 1, mpz_class(0));
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw DivisionByZero();
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::zeta(int n) {
  QPoly c(2, mpq_class(0));
  c[1] = 1;
  return from_power_basis(n, std::move(c));
}

Scalar Scalar::from_power_basis(int n, std::vector<mpq_class> coeffs) {
  Scalar s;
  s.assign_reduced(n, std::move(coeffs));
  return s;
}

void Scalar::assign_reduced(int n, std::vector<mpq_class> coeffs) {
  const auto& phi_n = cyclotomic_polynomial(n);
  if (coeffs.size() < phi_n.size() - 1) coeffs.resize(phi_n.size() - 1, mpq_class(0));
  reduce_mod(coeffs, phi_n);
  bool rational = true;
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    if (sgn(coeffs[k]) != 0) {
      rational = false;
      break;
    }
  }
  c0_ = coeffs.empty() ? mpq_class(0) : coeffs[0];
  if (rational) {
    order_ = 1;
    hi_.clear();
  } else {
    order_ = n;
    hi_.assign(coeffs.begin() + 1, coeffs.end());
  }
}

mpq_class Scalar::coefficient(int k) const {
  if (k == 0) return c0_;
  if (k < 0 || static_cast<std::size_t>(k) > hi_.size()) return 0;
  return hi_[static_cast<std::size_t>(k) - 1];
}

std::vector<mpq_class> Scalar::dense() const {
  std::vector<mpq_class> c;
  c.reserve(hi_.size() + 1);
  c.push_back(c0_);
  c.insert(c.end(), hi_.begin(), hi_.end());
  return c;
}

int Scalar::common_order(const Scalar& a, const Scalar& b) {
  if (a.order_ == 1) return b.order_;
  if (b.order_ == 1 || a.order_ == b.order_) return a.order_;
  throw ValidationError("scalars from different cyclotomic fields Q(zeta_" + std::to_string(a.order_) +
                        ") and Q(zeta_" + std::to_string(b.order_) + ")");
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.c0_ = -r.c0_;
  for (auto& c : r.hi_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (order_ == 1 && o.order_ == 1) {
    c0_ += o.c0_;
    return *this;
  }
  const int n = common_order(*this, o);
  auto a = dense();
  auto b = o.dense();
  if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  assign_reduced(n, std::move(a));
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (o.order_ == 1) {
    if (sgn(o.c0_) == 0) {
      *this = Scalar();
      return *this;
    }
    c0_ *= o.c0_;
    for (auto& c : hi_) c *= o.c0_;
    return *this;
  }
  if (order_ == 1) {
    mpq_class f = c0_;
    *this = o;
    return *this *= Scalar(f);
  }
  const int n = common_order(*this, o);
  assign_reduced(n, mul(dense(), o.dense()));
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (order_ == 1) return Scalar(mpq_class(1) / c0_);
  // Extended Euclid: find s with s * a = 1 mod Phi_n.
  const auto& phi_z = cyclotomic_polynomial(order_);
  QPoly r0(phi_z.begin(), phi_z.end());
  QPoly r1 = dense();
  trim(r1);
  QPoly s0, s1{mpq_class(1)};
  while (r1.size() > 1) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant since Phi_n is irreducible.
  mpq_class c = mpq_class(1) / r1[0];
  for (auto& v : s1) v *= c;
  return from_power_basis(order_, std::move(s1));
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  return a.order_ == b.order_ && a.c0_ == b.c0_ && a.hi_ == b.hi_;
}

std::size_t Scalar::bit_size() const {
  auto bits = [](const mpq_class& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
  };
  std::size_t total = bits(c0_);
  for (const auto& c : hi_) total += bits(c);
  return total;
}

std::string Scalar::to_string() const {
  if (order_ == 1) return c0_.get_str();
  std::string out;
  auto coeffs = dense();
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const mpq_class& c = coeffs[k];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    mpq_class mag = abs(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "zeta";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace ptrace
