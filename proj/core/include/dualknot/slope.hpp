#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "dualknot/bigint.hpp"

namespace dualknot {

/// A surgery slope: a reduced rational p/q with q >= 0 and the sign carried
/// by p. The infinite slope (the meridian of the filling) is stored as 1/0.
/// 0/0 is not representable.
class Slope {
 public:
  /// Normalizes (p, q): reduces by gcd, moves the sign to the numerator,
  /// collapses every (k, 0) to 1/0. Throws std::invalid_argument on (0, 0).
  Slope(Int p, Int q);
  Slope(long p, long q) : Slope(Int(p), Int(q)) {}

  static Slope infinite() { return Slope(1, 0); }
  static Slope integer(Int n) { return Slope(std::move(n), Int(1)); }

  const Int& num() const { return p_; }
  const Int& den() const { return q_; }

  bool is_infinite() const { return q_ == 0; }
  bool is_integral() const { return q_ == 1; }

  /// Serialized form "p/q"; the infinite slope prints as "1/0".
  std::string str() const;

  /// Parses "p/q" or a bare integer "p"; optional leading sign, no
  /// whitespace. Throws std::invalid_argument on malformed input.
  static Slope parse(std::string_view text);

  friend bool operator==(const Slope& a, const Slope& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }

  /// Total order with 1/0 as +infinity.
  friend bool operator<(const Slope& a, const Slope& b);
  friend bool operator>(const Slope& a, const Slope& b) { return b < a; }
  friend bool operator<=(const Slope& a, const Slope& b) { return !(b < a); }
  friend bool operator>=(const Slope& a, const Slope& b) { return !(a < b); }

 private:
  Int p_, q_;
};

inline Slope normalize(Int p, Int q) { return Slope(std::move(p), std::move(q)); }

/// Componentwise sum (p_a + p_b) / (q_a + q_b), normalized. Throws on the
/// degenerate case p_a + p_b = q_a + q_b = 0 (antipodal slopes).
Slope mediant(const Slope& a, const Slope& b);

/// Signed intersection number of the slope curves: p_a q_b - p_b q_a.
Int triad_det(const Slope& a, const Slope& b);

/// True iff the three slopes are pairwise distinct and pairwise at Farey
/// distance one, i.e. every pairwise intersection number is +-1. This is
/// equivalent to the signed determinant identities of the triad diagram.
bool is_slope_triad(const Slope& a, const Slope& b, const Slope& c);

/// The maximal integer *strictly less* than r when r is integral (so
/// floor_slope(3/1) = 2), the usual floor otherwise. Throws on 1/0.
Int floor_slope(const Slope& r);

/// The five-slope resolution of r0: r1 > r0 > r2 are the Farey neighbours
/// in [floor(r0), floor(r0)+1], r3 = mediant(r0, r1), r4 = mediant(r0, r3).
/// (r0,r1,r2), (r0,r3,r1), (r0,r4,r3) are all slope triads.
struct TriadFan {
  Slope r0, r1, r2, r3, r4;
};

/// Resolves a finite non-integral slope (p0 != 0, q0 > 1) into its unique
/// triad fan. Throws std::invalid_argument when the precondition fails and
/// std::logic_error if the computed fan ever violates a fan condition.
TriadFan farey_resolve(const Slope& r0);

/// The fan of an integral slope: (n/1; 1/0, (n-1)/1, (n+1)/1, (2n+1)/2).
TriadFan integer_fan(const Int& n);

}  // namespace dualknot
