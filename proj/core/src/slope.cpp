#include "dualknot/slope.hpp"

#include <nlohmann/json.hpp>

namespace dualknot {

nlohmann::json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return nlohmann::json(x.get_si());
  return nlohmann::json(x.get_str());
}

Int int_from_string(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
}

Slope::Slope(Int p, Int q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == 0 && q_ == 0) throw std::invalid_argument("ill-formed slope 0/0");
  if (q_ == 0) {
    p_ = 1;  // unique infinite slope
    return;
  }
  if (q_ < 0) {
    p_ = -p_;
    q_ = -q_;
  }
  Int g = gcd(p_, q_);
  if (g > 1) {
    p_ /= g;
    q_ /= g;
  }
}

std::string Slope::str() const { return p_.get_str() + "/" + q_.get_str(); }

Slope Slope::parse(std::string_view text) {
  std::string s(text);
  auto bad = [&] {
    return std::invalid_argument("malformed slope '" + s + "'");
  };
  if (s.empty()) throw bad();
  std::string num = s, den = "1";
  if (auto pos = s.find('/'); pos != std::string::npos) {
    num = s.substr(0, pos);
    den = s.substr(pos + 1);
  }
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (!is_int(num) || !is_int(den)) throw bad();
  return Slope(Int(num), Int(den));
}

bool operator<(const Slope& a, const Slope& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return a.p_ * b.q_ < b.p_ * a.q_;
}

Slope mediant(const Slope& a, const Slope& b) {
  Int p = a.num() + b.num();
  Int q = a.den() + b.den();
  if (p == 0 && q == 0)
    throw std::invalid_argument("mediant of antipodal slopes " + a.str() +
                                ", " + b.str());
  return Slope(std::move(p), std::move(q));
}

Int triad_det(const Slope& a, const Slope& b) {
  return a.num() * b.den() - b.num() * a.den();
}

bool is_slope_triad(const Slope& a, const Slope& b, const Slope& c) {
  return abs_int(triad_det(a, b)) == 1 && abs_int(triad_det(b, c)) == 1 &&
         abs_int(triad_det(a, c)) == 1;
}

Int floor_slope(const Slope& r) {
  if (r.is_infinite())
    throw std::invalid_argument("floor of the infinite slope");
  Int q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r.num().get_mpz_t(),
              r.den().get_mpz_t());
  if (rem == 0) q -= 1;  // maximal integer strictly less than an integer
  return q;
}

namespace {

// Post-check of every fan condition; raises on violation so that corner
// cases surface instead of being silently normalized away.
void verify_fan(const TriadFan& f, const Int& p0, const Int& q0) {
  auto fail = [&](const char* what) {
    throw std::logic_error(std::string("farey_resolve(") + f.r0.str() +
                           "): " + what);
  };
  const Int &p1 = f.r1.num(), &q1 = f.r1.den();
  const Int &p2 = f.r2.num(), &q2 = f.r2.den();
  if (p1 + p2 != p0 || q1 + q2 != q0) fail("component sums violated");
  if (p1 != 0 && sgn(p1) != sgn(p0)) fail("sign of p1 disagrees with p0");
  if (p2 != 0 && sgn(p2) != sgn(p0)) fail("sign of p2 disagrees with p0");
  // Displayed determinant identities of the triad diagram.
  if (p1 * q0 - p0 * q1 != 1) fail("det(r1, r0) != 1");
  if (p0 * q2 - p2 * q0 != 1) fail("det(r0, r2) != 1");
  if (p1 * q2 - p2 * q1 != 1) fail("det(r1, r2) != 1");
  if (!(f.r1 > f.r0 && f.r0 > f.r2)) fail("ordering r1 > r0 > r2 violated");
  Int k = floor_slope(f.r0);
  Slope lo = Slope::integer(k), hi = Slope::integer(k + 1);
  if (f.r1 < lo || f.r1 > hi || f.r2 < lo || f.r2 > hi)
    fail("r1, r2 outside [floor(r0), floor(r0)+1]");
  if (!is_slope_triad(f.r0, f.r1, f.r2) || !is_slope_triad(f.r0, f.r3, f.r1) ||
      !is_slope_triad(f.r0, f.r4, f.r3))
    fail("triad identity violated");
}

}  // namespace

TriadFan farey_resolve(const Slope& r0) {
  if (r0.is_infinite())
    throw std::invalid_argument("farey_resolve: infinite slope (use integer_fan)");
  if (r0.is_integral())
    throw std::invalid_argument("farey_resolve: integral slope " + r0.str() +
                                " (use integer_fan)");
  if (r0.num() == 0) throw std::invalid_argument("farey_resolve: zero slope");

  const Int& p0 = r0.num();
  const Int& q0 = r0.den();

  // The upper Farey neighbour r1 = p1/q1 solves p1*q0 - p0*q1 = 1 with
  // 0 < q1 < q0, i.e. q1 = -p0^{-1} mod q0.
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), p0.get_mpz_t(), q0.get_mpz_t()) == 0)
    throw std::logic_error("farey_resolve: numerator not invertible");
  Int q1 = (-inv) % q0;
  if (q1 < 0) q1 += q0;
  if (q1 == 0) q1 = q0;  // cannot happen for q0 > 1; keep the check below honest
  Int p1 = (1 + p0 * q1) / q0;

  TriadFan fan{r0, Slope(p1, q1), Slope(p0 - p1, q0 - q1),
               mediant(r0, Slope(p1, q1)), Slope(0, 1)};
  fan.r4 = mediant(r0, fan.r3);
  verify_fan(fan, p0, q0);
  return fan;
}

TriadFan integer_fan(const Int& n) {
  return TriadFan{Slope::integer(n), Slope::infinite(), Slope::integer(n - 1),
                  Slope::integer(n + 1), Slope(2 * n + 1, 2)};
}

}  // namespace dualknot
