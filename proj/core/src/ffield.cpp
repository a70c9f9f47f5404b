#include "gwf/ffield.hpp"

#include <algorithm>

namespace gwf {

namespace poly {

std::vector<int> trim(std::vector<int> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

static std::vector<int> mulModP(const std::vector<int>& a, const std::vector<int>& b, int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return trim(c);
}

// Remainder of a by monic-normalised b.
static std::vector<int> modModP(std::vector<int> a, const std::vector<int>& b, int p) {
  a = trim(a);
  std::vector<int> bb = trim(b);
  if (bb.empty()) throw GwfError("polynomial division by zero");
  // make b monic
  int lead = bb.back();
  int leadInv = 1;
  for (int i = 1; i < p; ++i)
    if (lead * i % p == 1) leadInv = i;
  for (auto& c : bb) c = c * leadInv % p;
  while (a.size() >= bb.size()) {
    int c = a.back();
    size_t shift = a.size() - bb.size();
    for (size_t i = 0; i < bb.size(); ++i) {
      a[i + shift] = ((a[i + shift] - c * bb[i]) % p + p) % p;
    }
    a = trim(a);
    if (a.empty()) break;
  }
  return a;
}

static std::vector<int> gcdModP(std::vector<int> a, std::vector<int> b, int p) {
  a = trim(a);
  b = trim(b);
  while (!b.empty()) {
    auto r = modModP(a, b, p);
    a = b;
    b = r;
  }
  return a;
}

bool isIrreducibleModP(const std::vector<int>& f, int p) {
  auto ff = trim(f);
  if (ff.size() < 2) return false;
  int deg = int(ff.size()) - 1;
  if (deg == 1) return true;
  // x^(p^i) mod f by repeated squaring of the Frobenius power
  auto powmod = [&](std::vector<int> base, long long e) {
    std::vector<int> r = {1};
    while (e > 0) {
      if (e & 1) r = modModP(mulModP(r, base, p), ff, p);
      base = modModP(mulModP(base, base, p), ff, p);
      e >>= 1;
    }
    return r;
  };
  // Rabin: x^(p^deg) == x mod f, and gcd(x^(p^(deg/r)) - x, f) == 1 for
  // every prime r | deg.
  auto frobPow = [&](int i) {
    std::vector<int> r = {0, 1};
    for (int j = 0; j < i; ++j) r = powmod(r, p);
    return r;
  };
  {
    auto top = frobPow(deg);
    std::vector<int> d = top;
    d.resize(std::max(d.size(), size_t(2)), 0);
    d[1] = ((d[1] - 1) % p + p) % p;
    if (!trim(d).empty()) return false;
  }
  for (int r = 2; r <= deg; ++r) {
    if (deg % r != 0) continue;
    bool prime = true;
    for (int s = 2; s * s <= r; ++s)
      if (r % s == 0) prime = false;
    if (!prime) continue;
    auto fp = frobPow(deg / r);
    std::vector<int> d = fp;
    d.resize(std::max(d.size(), size_t(2)), 0);
    d[1] = ((d[1] - 1) % p + p) % p;
    d = trim(d);
    if (d.empty()) return false;
    if (trim(gcdModP(ff, d, p)).size() > 1) return false;
  }
  return true;
}

}  // namespace poly

static bool isPrime(int p) {
  if (p < 2) return false;
  for (int i = 2; i * i <= p; ++i)
    if (p % i == 0) return false;
  return true;
}

FiniteField::FiniteField(int p, int k, std::vector<int> modulus) : p_(p), k_(k) {
  if (!isPrime(p) || p < 3) throw GwfError("p must be an odd prime >= 3");
  if (k < 1) throw GwfError("extension degree must be >= 1");
  q_ = 1;
  for (int i = 0; i < k; ++i) {
    q_ *= p;
    if (q_ > 4096) throw GwfError("field too large (q > 4096)");
  }

  if (modulus.empty()) {
    if (k == 1) {
      modulus = {0, 1};  // t, unused
    } else {
      // least irreducible monic, coefficients enumerated least-significant
      // first in base p
      for (long long m = 0; m < q_; ++m) {
        std::vector<int> f(k + 1, 0);
        long long t = m;
        for (int i = 0; i < k; ++i) {
          f[i] = int(t % p);
          t /= p;
        }
        f[k] = 1;
        if (poly::isIrreducibleModP(f, p)) {
          modulus = f;
          break;
        }
      }
    }
  } else {
    if (int(modulus.size()) != k + 1 || modulus[k] != 1)
      throw GwfError("modulus must be monic of degree k");
    for (auto& c : modulus) c = ((c % p) + p) % p;
    if (k > 1 && !poly::isIrreducibleModP(modulus, p))
      throw GwfError("modulus is reducible over F_p");
  }
  modulus_ = modulus;

  auto toCoords = [&](long long idx) {
    std::vector<int> c(k_);
    for (int i = 0; i < k_; ++i) {
      c[i] = int(idx % p_);
      idx /= p_;
    }
    return c;
  };
  auto fromC = [&](const std::vector<int>& c) {
    long long idx = 0;
    for (int i = k_ - 1; i >= 0; --i) idx = idx * p_ + c[i];
    return Fq(idx);
  };

  add_.resize(size_t(q_) * q_);
  mul_.resize(size_t(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (long long a = 0; a < q_; ++a) {
    auto ca = toCoords(a);
    std::vector<int> cn(k_);
    for (int i = 0; i < k_; ++i) cn[i] = (p_ - ca[i]) % p_;
    neg_[a] = fromC(cn);
    for (long long b = 0; b < q_; ++b) {
      auto cb = toCoords(b);
      std::vector<int> cs(k_);
      for (int i = 0; i < k_; ++i) cs[i] = (ca[i] + cb[i]) % p_;
      add_[size_t(a) * q_ + b] = fromC(cs);
      // product mod modulus
      std::vector<int> prod(2 * k_ - 1, 0);
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
      for (int d = 2 * k_ - 2; d >= k_; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < k_; ++i)
          prod[d - k_ + i] = ((prod[d - k_ + i] - c * modulus_[i]) % p_ + p_) % p_;
      }
      prod.resize(k_);
      mul_[size_t(a) * q_ + b] = fromC(prod);
    }
  }
  for (long long a = 1; a < q_; ++a)
    for (long long b = 1; b < q_; ++b)
      if (mul_[size_t(a) * q_ + b] == 1) inv_[a] = Fq(b);

  trace_.resize(q_);
  pthRoot_.resize(q_);
  for (long long a = 0; a < q_; ++a) {
    Fq s = 0, t = Fq(a);
    for (int i = 0; i < k_; ++i) {
      s = add(s, t);
      t = pow(t, p_);
    }
    // s lies in the prime field
    trace_[a] = int(coords(s)[0]);
    Fq r = Fq(a);
    for (int i = 0; i < k_ - 1; ++i) r = pow(r, p_);
    pthRoot_[a] = r;
  }

  for (long long g = 1; g < q_; ++g) {
    Fq x = Fq(g);
    long long order = 1;
    while (x != 1) {
      x = mul(x, Fq(g));
      ++order;
    }
    if (order == q_ - 1) {
      gen_ = Fq(g);
      break;
    }
  }
}

Fq FiniteField::inv(Fq a) const {
  if (a == 0) throw GwfError("division by zero");
  return inv_[a];
}

Fq FiniteField::pow(Fq a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  Fq r = 1;
  Fq base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Fq FiniteField::fromInt(long long v) const {
  long long m = ((v % p_) + p_) % p_;
  return Fq(m);
}

std::vector<int> FiniteField::coords(Fq a) const {
  std::vector<int> c(k_);
  long long idx = a;
  for (int i = 0; i < k_; ++i) {
    c[i] = int(idx % p_);
    idx /= p_;
  }
  return c;
}

Fq FiniteField::fromCoords(const std::vector<int>& c) const {
  long long idx = 0;
  for (int i = k_ - 1; i >= 0; --i) idx = idx * p_ + ((c[i] % p_) + p_) % p_;
  return Fq(idx);
}

}  // namespace gwf
