#pragma once

#include <optional>
#include <vector>

#include "gwf/ffield.hpp"
#include "json.hpp"

namespace gwf {

/// Exact scalar of the form  q^e * (a + sqrt(q) * b)  with a, b in Z[zeta_p]
/// and e an integer (possibly negative).  Z[zeta_p] elements are stored in
/// the integral basis {1, zeta, ..., zeta^(p-2)} with the reduction
/// 1 + zeta + ... + zeta^(p-1) = 0.
///
/// Canonical form: zero has e = 0 and empty content; otherwise e <= 0 and
/// the content is not divisible by q when e < 0.  Every half-integer power
/// of q stays symbolic, so "value lies in q^(N/2) N_0" is an exact test.
class ScaledCyclotomic {
 public:
  ScaledCyclotomic() = default;

  static ScaledCyclotomic zero(int p, long long q);
  static ScaledCyclotomic integer(long long m, int p, long long q);
  /// zeta_p^t, t taken mod p.
  static ScaledCyclotomic zeta(long long t, int p, long long q);

  bool isZero() const;
  bool operator==(const ScaledCyclotomic& o) const;
  bool operator!=(const ScaledCyclotomic& o) const { return !(*this == o); }

  ScaledCyclotomic operator+(const ScaledCyclotomic& o) const;
  ScaledCyclotomic operator-(const ScaledCyclotomic& o) const;
  ScaledCyclotomic operator*(const ScaledCyclotomic& o) const;
  ScaledCyclotomic operator-() const;
  ScaledCyclotomic& operator+=(const ScaledCyclotomic& o) { return *this = *this + o; }
  ScaledCyclotomic& operator-=(const ScaledCyclotomic& o) { return *this = *this - o; }

  /// Complex conjugation, the basis permutation zeta -> zeta^(-1).
  ScaledCyclotomic conj() const;
  /// Multiply by q^(s/2) for any integer s (negative allowed).
  ScaledCyclotomic shiftHalfPower(int s) const;

  /// If the value equals q^(halfPower/2) * m for a rational integer m,
  /// return m.  Otherwise nullopt.
  std::optional<long long> integerMultipleOfHalfPower(int halfPower) const;

  int p() const { return p_; }
  long long q() const { return q_; }

  nlohmann::json toJson() const;
  static ScaledCyclotomic fromJson(const nlohmann::json& j, int p, long long q);

 private:
  int p_ = 0;
  long long q_ = 1;
  int e_ = 0;
  std::vector<long long> a_, b_;  // length p-1 each, or empty when zero

  void normalize();
  friend ScaledCyclotomic mulContent(const ScaledCyclotomic&, const ScaledCyclotomic&);
};

}  // namespace gwf
