#pragma once

#include "dualknot/slope.hpp"

namespace dualknot {

/// Mod-2 homology class of a bundle set in the surgered manifold. When the
/// surgery numerator p is odd the class group is trivial and only `zero`
/// occurs; when p is even the classes are {zero, mu}.
enum class BundleClass { zero, mu };

const char* to_string(BundleClass b);

/// First homology of p/q-surgery: the cyclic group of order |p|
/// (order 0 encodes the infinite cyclic group at p = 0).
struct GroupDescriptor {
  Int order;  // 0 means Z

  bool is_infinite() const { return order == 0; }
  std::string str() const {
    return is_infinite() ? "Z" : "Z/" + order.get_str();
  }
};

/// H_1 of the p/q-surgery manifold. Rejects the infinite slope.
GroupDescriptor h1_surgery(const Slope& r);

/// Reduces a bundle set given as a multiple of the meridian class to its
/// class in H_1(S^3_{p/q}(K); F_2): zero whenever p is odd, otherwise the
/// parity of the multiple. The dual knot itself reduces to class mu.
BundleClass bundle_class_reduce(const Int& omega_in_mu_units, const Slope& r);

/// Surgery slope on the branched-cover side: p/q -> p/2q. Requires finite
/// slope with p odd (otherwise p/2q would not be in lowest terms).
Slope branched_surgery_slope(const Slope& r);

}  // namespace dualknot
