#include "gwf/cyclotomic.hpp"

#include <algorithm>

namespace gwf {

static bool allZero(const std::vector<long long>& v) {
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

static bool allDivisible(const std::vector<long long>& v, long long q) {
  return std::all_of(v.begin(), v.end(), [&](long long x) { return x % q == 0; });
}

// Product in Z[zeta_p]: polynomial product with exponents mod p, then
// zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).
static std::vector<long long> cycMul(const std::vector<long long>& x,
                                     const std::vector<long long>& y, int p) {
  std::vector<long long> full(p, 0);
  for (int i = 0; i < p - 1; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < p - 1; ++j) {
      if (y[j] == 0) continue;
      full[(i + j) % p] += x[i] * y[j];
    }
  }
  std::vector<long long> out(p - 1);
  for (int i = 0; i < p - 1; ++i) out[i] = full[i] - full[p - 1];
  return out;
}

ScaledCyclotomic ScaledCyclotomic::zero(int p, long long q) {
  ScaledCyclotomic s;
  s.p_ = p;
  s.q_ = q;
  return s;
}

ScaledCyclotomic ScaledCyclotomic::integer(long long m, int p, long long q) {
  ScaledCyclotomic s = zero(p, q);
  if (m != 0) {
    s.a_.assign(p - 1, 0);
    s.b_.assign(p - 1, 0);
    s.a_[0] = m;
  }
  return s;
}

ScaledCyclotomic ScaledCyclotomic::zeta(long long t, int p, long long q) {
  ScaledCyclotomic s = zero(p, q);
  s.a_.assign(p - 1, 0);
  s.b_.assign(p - 1, 0);
  long long tt = ((t % p) + p) % p;
  if (tt < p - 1) {
    s.a_[tt] = 1;
  } else {
    for (int i = 0; i < p - 1; ++i) s.a_[i] = -1;
  }
  return s;
}

bool ScaledCyclotomic::isZero() const { return a_.empty(); }

void ScaledCyclotomic::normalize() {
  if (a_.empty() || (allZero(a_) && allZero(b_))) {
    a_.clear();
    b_.clear();
    e_ = 0;
    return;
  }
  while (e_ > 0) {
    for (auto& c : a_) c *= q_;
    for (auto& c : b_) c *= q_;
    --e_;
  }
  while (e_ < 0 && allDivisible(a_, q_) && allDivisible(b_, q_)) {
    for (auto& c : a_) c /= q_;
    for (auto& c : b_) c /= q_;
    ++e_;
  }
}

bool ScaledCyclotomic::operator==(const ScaledCyclotomic& o) const {
  return p_ == o.p_ && q_ == o.q_ && e_ == o.e_ && a_ == o.a_ && b_ == o.b_;
}

ScaledCyclotomic ScaledCyclotomic::operator+(const ScaledCyclotomic& o) const {
  if (isZero()) return o;
  if (o.isZero()) return *this;
  if (p_ != o.p_ || q_ != o.q_) throw GwfError("scalar field mismatch");
  ScaledCyclotomic x = *this, y = o;
  // align to the smaller exponent
  while (x.e_ > y.e_) {
    for (auto& c : x.a_) c *= q_;
    for (auto& c : x.b_) c *= q_;
    --x.e_;
  }
  while (y.e_ > x.e_) {
    for (auto& c : y.a_) c *= q_;
    for (auto& c : y.b_) c *= q_;
    --y.e_;
  }
  for (int i = 0; i < p_ - 1; ++i) {
    x.a_[i] += y.a_[i];
    x.b_[i] += y.b_[i];
  }
  x.normalize();
  return x;
}

ScaledCyclotomic ScaledCyclotomic::operator-() const {
  ScaledCyclotomic s = *this;
  for (auto& c : s.a_) c = -c;
  for (auto& c : s.b_) c = -c;
  return s;
}

ScaledCyclotomic ScaledCyclotomic::operator-(const ScaledCyclotomic& o) const {
  return *this + (-o);
}

ScaledCyclotomic ScaledCyclotomic::operator*(const ScaledCyclotomic& o) const {
  if (isZero() || o.isZero()) return zero(p_ ? p_ : o.p_, p_ ? q_ : o.q_);
  if (p_ != o.p_ || q_ != o.q_) throw GwfError("scalar field mismatch");
  ScaledCyclotomic s = zero(p_, q_);
  s.e_ = e_ + o.e_;
  // (a1 + r b1)(a2 + r b2) = a1 a2 + q b1 b2 + r (a1 b2 + b1 a2),  r = sqrt(q)
  auto aa = cycMul(a_, o.a_, p_);
  auto bb = cycMul(b_, o.b_, p_);
  auto ab = cycMul(a_, o.b_, p_);
  auto ba = cycMul(b_, o.a_, p_);
  s.a_.resize(p_ - 1);
  s.b_.resize(p_ - 1);
  for (int i = 0; i < p_ - 1; ++i) {
    s.a_[i] = aa[i] + q_ * bb[i];
    s.b_[i] = ab[i] + ba[i];
  }
  s.normalize();
  return s;
}

ScaledCyclotomic ScaledCyclotomic::conj() const {
  if (isZero()) return *this;
  ScaledCyclotomic s = zero(p_, q_);
  s.e_ = e_;
  s.a_.assign(p_ - 1, 0);
  s.b_.assign(p_ - 1, 0);
  auto conjVec = [&](const std::vector<long long>& v, std::vector<long long>& out) {
    // zeta^i -> zeta^(p-i); zeta^(p-1) reduces to -(sum of lower powers)
    for (int i = 0; i < p_ - 1; ++i) {
      if (v[i] == 0) continue;
      int t = (p_ - i) % p_;
      if (t < p_ - 1) {
        out[t] += v[i];
      } else {
        for (int j = 0; j < p_ - 1; ++j) out[j] -= v[i];
      }
    }
  };
  conjVec(a_, s.a_);
  conjVec(b_, s.b_);
  s.normalize();
  return s;
}

ScaledCyclotomic ScaledCyclotomic::shiftHalfPower(int s) const {
  if (isZero()) return *this;
  ScaledCyclotomic r = *this;
  r.e_ += s / 2;
  if (s % 2 != 0) {
    // multiply by sqrt(q) (or divide for negative odd s):
    // q^e (a + r b) * r = q^e (q b + r a)
    std::vector<long long> na(p_ - 1), nb = r.a_;
    for (int i = 0; i < p_ - 1; ++i) na[i] = q_ * r.b_[i];
    r.a_ = na;
    r.b_ = nb;
    if (s < 0) --r.e_;
  }
  r.normalize();
  return r;
}

std::optional<long long> ScaledCyclotomic::integerMultipleOfHalfPower(int halfPower) const {
  if (isZero()) return 0;
  ScaledCyclotomic s = shiftHalfPower(-halfPower);
  if (s.e_ != 0) return std::nullopt;
  if (!allZero(s.b_)) return std::nullopt;
  for (int i = 1; i < p_ - 1; ++i)
    if (s.a_[i] != 0) return std::nullopt;
  return s.a_[0];
}

nlohmann::json ScaledCyclotomic::toJson() const {
  nlohmann::json j;
  j["e"] = e_;
  j["a"] = a_;
  j["b"] = b_;
  return j;
}

ScaledCyclotomic ScaledCyclotomic::fromJson(const nlohmann::json& j, int p, long long q) {
  ScaledCyclotomic s = zero(p, q);
  s.e_ = j.at("e").get<int>();
  s.a_ = j.at("a").get<std::vector<long long>>();
  s.b_ = j.at("b").get<std::vector<long long>>();
  if (!s.a_.empty() && (int(s.a_.size()) != p - 1 || int(s.b_.size()) != p - 1))
    throw GwfError("bad scalar serialization");
  s.normalize();
  return s;
}

}  // namespace gwf
