#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sl2swc/characters.hpp"
#include "sl2swc/graded_ring.hpp"

namespace sl2swc {

enum class Parity { Odd, Even };
std::string_view to_string(Parity p);

// q of the SL(2,q) the representation lives on; throws InvalidArgument for
// other groups.
int sl2_q(const VirtualRep& pi);
Parity parity_of(const VirtualRep& pi);

// 2-adic valuation of a nonzero integer.
int ord2(std::int64_t n);
// log2 q for q = 2^r.
int two_rank(int q);

// (chi(1) - chi(-1)) / 8 for odd q; requires pi in RO(G). Throws WrongParity,
// NotOrthogonal, NotDivisible.
std::int64_t r_pi(const VirtualRep& pi);

struct MPi {
  std::int64_t ell = 0;
  std::int64_t m = 0;
};
// m = (chi(1) - chi(n0)) / q, ell = chi(1) - m (q - 1) for even q.
MPi m_pi(const VirtualRep& pi);

// max(4 |r_or_m|, 2^r - 1, 16) with r = 0 for odd q.
int default_truncation(const VirtualRep& pi);

// Coefficient of g^i in (1 + g)^n for any integer n.
bool unit_power_coefficient(std::int64_t n, std::int64_t i);

struct TotalSwc {
  Parity parity = Parity::Odd;
  int max_degree = 0;
  // F2[e] (odd) or F2[d1..dr] (even).
  GradedClass cls;
  // Components above deg pi were dropped (genuine pi only); `consistent`
  // records that they were already zero.
  bool degree_truncated = false;
  bool consistent = true;
};

TotalSwc total_swc(const VirtualRep& pi, std::optional<int> max_degree = std::nullopt);

// (1 + e)^n in F2[e] / (1 + D)^n in F2[d1..dr], D = sum d_i, truncated at D.
GradedClass odd_unit_power(std::int64_t n, int max_degree);
GradedClass even_unit_power(int r, std::int64_t n, int max_degree);
// The class expanded in F2[v1..vr] (even q) up to `v_degree`.
GradedClass expand_in_v(const GradedClass& dickson_class, int v_degree);

struct Obstruction {
  std::optional<std::int64_t> degree;  // nullopt = infinity
  std::string class_string;            // "e^2", "d1^2", or "" when infinite
  // The closed form agrees with the lowest nonzero term of the expansion
  // (false only when the degree lies beyond the truncation and could not be
  // checked).
  bool verified = false;
};

// Closed form 2^{t+2} / 2^{r+s-1}, checked against the expansion.
Obstruction obstruction(const VirtualRep& pi, std::optional<int> max_degree = std::nullopt);
// Lowest positive degree with a nonzero coefficient in (1+g)^n, as an index.
std::optional<std::int64_t> lowest_term_index(std::int64_t n, std::int64_t limit);

struct TopClass {
  bool nonzero = false;
  std::string criterion;
  // Whether the flag was also read off the expansion (deg pi <= D).
  bool checked = false;
};

TopClass top_swc_nonzero(const VirtualRep& pi, std::optional<int> max_degree = std::nullopt);

struct ImageExponent {
  std::int64_t residue = 0;  // n mod 2^k, in [0, 2^k)
  int k = 0;
  std::int64_t signed_residue() const;
};

// n with c = (1 + g)^n up to the truncation degree, g = e (F2[e] or H*(SL))
// or the sum of the Dickson generators; nullopt if no such n exists.
std::optional<ImageExponent> image_exponent(const GradedClass& c);

struct SwcReport {
  int q = 0;
  Parity parity = Parity::Odd;
  std::int64_t r_or_m = 0;
  std::optional<std::int64_t> ell;
  std::int64_t degree = 0;
  bool genuine = false;
  TotalSwc total;
  std::optional<GradedClass> total_v;  // even q, up to min(D, 64)
  Obstruction obstruction;
  std::optional<TopClass> top;  // genuine pi only
};

SwcReport swc_report(const VirtualRep& pi, std::optional<int> max_degree = std::nullopt);

}  // namespace sl2swc
