#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwf {

/// Error type for every invariant violation detected by the library.
class GwfError : public std::runtime_error {
 public:
  explicit GwfError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An element of F_q is stored as its index in [0, q): the mixed-radix
/// encoding of its coefficient vector over F_p, least significant first.
using Fq = uint16_t;

/// F_q = F_{p^k}, realised as F_p[t]/(modulus) with full lookup tables.
///
/// p must be an odd prime >= 3 (characteristic 2 is not supported; the
/// cyclotomic scalar ring and the sl2 machinery both need odd p).
class FiniteField {
 public:
  // modulus: monic degree-k coefficient vector (c0, ..., ck) over F_p,
  // ck = 1.  If empty, the lexicographically-least irreducible monic
  // polynomial is chosen (coefficients compared least-significant first).
  FiniteField(int p, int k, std::vector<int> modulus = {});

  int p() const { return p_; }
  int k() const { return k_; }
  long long q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  Fq add(Fq a, Fq b) const { return add_[size_t(a) * q_ + b]; }
  Fq sub(Fq a, Fq b) const { return add_[size_t(a) * q_ + neg_[b]]; }
  Fq mul(Fq a, Fq b) const { return mul_[size_t(a) * q_ + b]; }
  Fq neg(Fq a) const { return neg_[a]; }
  Fq inv(Fq a) const;
  Fq pow(Fq a, long long e) const;

  /// Embedding of Z/p, constant polynomials.
  Fq fromInt(long long v) const;
  /// Tr_{F_q/F_p}: a + a^p + ... + a^{p^{k-1}}, as an integer in [0, p).
  int trace(Fq a) const { return trace_[a]; }
  /// The p-th root (inverse Frobenius), a^{p^{k-1}}.
  Fq pthRoot(Fq a) const { return pthRoot_[a]; }

  /// Coefficient vector over F_p for element a (length k).
  std::vector<int> coords(Fq a) const;
  Fq fromCoords(const std::vector<int>& c) const;

  /// A fixed generator of the multiplicative group.
  Fq multiplicativeGenerator() const { return gen_; }

 private:
  int p_, k_;
  long long q_;
  std::vector<int> modulus_;
  std::vector<Fq> add_, mul_, neg_, inv_, pthRoot_;
  std::vector<int> trace_;
  Fq gen_ = 0;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

// Dense polynomial arithmetic over F_p, used for modulus selection and by
// the Jordan decomposition layer (there over F_q via the tables above).
namespace poly {
// Polynomials over F_p as int coefficient vectors, low degree first, no
// trailing zeros (the zero polynomial is the empty vector).
std::vector<int> trim(std::vector<int> a);
bool isIrreducibleModP(const std::vector<int>& f, int p);
}  // namespace poly

}  // namespace gwf
