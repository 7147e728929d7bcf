#include "dualknot/surgery.hpp"

namespace dualknot {

const char* to_string(BundleClass b) {
  return b == BundleClass::zero ? "0" : "mu";
}

GroupDescriptor h1_surgery(const Slope& r) {
  if (r.is_infinite())
    throw std::invalid_argument("h1_surgery: infinite slope (surgery is S^3)");
  return GroupDescriptor{abs_int(r.num())};
}

BundleClass bundle_class_reduce(const Int& omega_in_mu_units, const Slope& r) {
  if (r.num() % 2 != 0) return BundleClass::zero;  // H_1(.; F_2) vanishes
  return omega_in_mu_units % 2 == 0 ? BundleClass::zero : BundleClass::mu;
}

Slope branched_surgery_slope(const Slope& r) {
  if (r.is_infinite())
    throw std::invalid_argument("branched_surgery_slope: infinite slope");
  if (r.num() % 2 == 0)
    throw std::invalid_argument("branched_surgery_slope: even numerator " +
                                r.str() + " (p/2q is not reduced)");
  return Slope(r.num(), 2 * r.den());
}

}  // namespace dualknot
