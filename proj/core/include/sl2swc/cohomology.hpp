#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "sl2swc/graded_ring.hpp"

namespace sl2swc {

// Binomial coefficient mod 2 for any integer n and t >= 0 (C(n,0) = 1 and
// C(-m,t) = (-1)^t C(m+t-1,t)).
bool binomial_odd(std::int64_t n, std::int64_t t);

// Sq^i on F2[v1..vr] (all generators of degree 1), by the Cartan formula.
// Throws UnsupportedRing for quotients or other generator degrees.
GradedClass steenrod_sq(int i, const GradedClass& a);
// Total square Sq = sum_i Sq^i, truncated at the ring's D.
GradedClass steenrod_total(const GradedClass& a);

// Right-hand side of the Wu formula for Sq^i w_j given the total class w:
// sum_t C(j-i+t-1, t) w_{i-t} w_{j+t}.
GradedClass wu_rhs(int i, int j, const GradedClass& w);

struct DicksonResult {
  RingPtr ring;                    // F2[v1..vr] truncated at D
  GradedClass product;             // prod over nonzero linear forms of (1 + form)
  std::vector<GradedClass> d;      // d_1..d_r
  std::vector<int> degrees;        // 2^r - 2^{r-i}
};

// Throws TruncationTooLow when D < 2^r - 1; LiftFailure if the product has a
// component outside the Dickson degrees.
DicksonResult dickson(int r, int max_degree);

// Linear form sum_i c_i v_i for the bit mask c (bit i-1 <-> v_i).
GradedClass linear_form(const RingPtr& poly_ring, std::uint32_t mask);
// Substitute v_i -> v_i^{2^j} (the j-th Frobenius) in a free ring.
GradedClass frobenius(const GradedClass& a, int j);

namespace maps {
// H*(Q8) -> H*(Z): x, y -> 0, e -> v^4.
RestrictionMap q8_to_z(int source_degree, int target_degree);
// H*(Q_{2^n}) -> H*(Q8): X, Y -> 0, E -> e. Faithful on F2[E] only.
RestrictionMap gen_quaternion_to_q8(int n, int source_degree, int target_degree);
// F2[e] -> H*(Z): e -> v^4.
RestrictionMap swc_odd_to_z(int source_degree, int target_degree);
// F2[e] -> H*(SL(2,q)): e -> e.
RestrictionMap swc_odd_to_sl2odd(int source_degree, int target_degree);
// F2[d1..dr] -> F2[v1..vr]: d_i -> Dickson invariant.
RestrictionMap dickson_to_poly(int r, int source_degree, int target_degree);
// Shared instance per key, so memoized monomial images are reused.
std::shared_ptr<const RestrictionMap> cached(const std::string& key, const std::function<RestrictionMap()>& make);
}  // namespace maps

}  // namespace sl2swc
