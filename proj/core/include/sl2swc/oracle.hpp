#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sl2swc/characters.hpp"
#include "sl2swc/graded_ring.hpp"
#include "sl2swc/group.hpp"

namespace sl2swc {

constexpr std::uint64_t kDefaultSeed = 42;

// (1 + v)^b in F2[v], b = (deg - chi(z)) / 2 for the central involution z,
// truncated at min(D, deg) when `genuine`.
GradedClass oracle_swc_c2(std::int64_t degree, std::int64_t value_at_z, int max_degree, bool genuine);
// The same for a class function and an element of order 2 of its group.
GradedClass oracle_swc_Z(const ClassFunction& chi, std::size_t involution, int max_degree, bool genuine = true);
// pi over SL(2,q), q odd, restricted to Z = {1, -1}.
GradedClass oracle_swc_Z(const VirtualRep& pi, int max_degree);

// res_Q pi = m0 1 + m1 chi_x + m2 chi_y + m3 chi_{x+y} + m4 S(rho).
struct QProfile {
  std::int64_t m0 = 0, m1 = 0, m2 = 0, m3 = 0, m4 = 0;
  std::int64_t rho = 0;  // <res pi, rho>
};

// Throws BadEmbedding unless x, y satisfy the Q8 relations.
void check_embedding(const Group& g, const QuaternionEmbedding& q);
QProfile q_profile(const ClassFunction& chi, const QuaternionEmbedding& q);
// prod (1+x)^m1 (1+y)^m2 (1+x+y)^m3 (1+e)^m4 in H*(Q8). Checks the degree
// balance m0+m1+m2+m3+4 m4 = deg and m0+m1+m2+m3-4 m4 = chi(-1) (Mismatch).
GradedClass oracle_swc_Q(const VirtualRep& pi, const QuaternionEmbedding& q, int max_degree);

// Multiplicities of lambda_a (a in canonical field order) in res_N pi.
std::vector<std::int64_t> n_multiplicities(const VirtualRep& pi);
// Linear form of lambda_a on H^1(N) = F2<v1..vr>: sum_i Tr(a t^{i-1}) v_i.
std::uint32_t additive_form_mask(const FiniteField& f, std::uint32_t a);
// prod_a (1 + form_a)^{mult_a} in F2[v1..vr], q even.
GradedClass oracle_swc_N(const VirtualRep& pi, int max_degree);

struct CaseResult {
  std::string rep;
  std::int64_t degree = 0;
  bool pass = true;
  std::string check;
  std::string lhs;
  std::string rhs;
  std::optional<int> first_difference;
};

// Odd q: F2[e] -> H*(Z) image of the formula vs the Z-oracle, and the Q8
// oracle restricted to Z vs the Z-oracle. Even q: (1 + D)^m in v-variables vs
// the N-oracle, plus equality of the nontrivial N-multiplicities.
std::vector<CaseResult> verify_theorem(const VirtualRep& pi, int max_degree);
// Throws Mismatch describing the first failing check.
void require_theorem(const VirtualRep& pi, int max_degree);

// Sq^i w_j(res_A pi) against the Wu polynomial, A = Z (odd q) or N (even q).
bool wu_verify(const VirtualRep& pi, int i, int j);

struct SuiteReport {
  std::string suite;
  int q = 0;
  std::uint64_t seed = kDefaultSeed;
  std::size_t cases = 0;
  std::size_t passes = 0;
  std::vector<CaseResult> failures;

  bool ok() const { return failures.empty() && passes == cases; }
  void record(CaseResult c);
};

struct SuiteOptions {
  // Random cases per suite; defaults to 200 (theorem) or 100 (wu, obstruction).
  std::optional<std::size_t> trials;
  std::uint64_t seed = kDefaultSeed;
  std::int64_t max_rep_degree = 2000;
  int truncation_cap = 64;
};

SuiteReport suite_theorem(const TablePtr& t, const SuiteOptions& o = {});
SuiteReport suite_gow(const TablePtr& t);
SuiteReport suite_wu(const TablePtr& t, const SuiteOptions& o = {});
SuiteReport suite_obstruction(const TablePtr& t, const SuiteOptions& o = {});

// Seeded random representations.
VirtualRep random_orthogonal(const TablePtr& t, std::mt19937_64& rng, std::int64_t max_degree,
                             std::size_t max_blocks = 20);
VirtualRep random_genuine(const TablePtr& t, std::mt19937_64& rng, std::int64_t max_degree,
                          std::size_t max_terms = 20);

// a S(pi1) + b S(pi2) with a (q+1)/2 + b (q-1)/2 = 1 for the least admissible
// ps and irreducible cusp exponents (q odd, q > 3).
VirtualRep bezout_combination(const TablePtr& t);
// Least k accepted by principal_series / cuspidal (cuspidal: with irreducible
// restriction); nullopt if none exists.
std::optional<std::int64_t> first_ps_exponent(const TablePtr& t);
std::optional<std::int64_t> first_cusp_exponent(const TablePtr& t);

}  // namespace sl2swc
