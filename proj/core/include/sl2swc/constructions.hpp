#pragma once

#include <cstdint>
#include <functional>

#include "sl2swc/characters.hpp"

namespace sl2swc {

// Class function whose value at each class is f(representative).
ClassFunction class_function_from(const GroupPtr& group, const std::function<Cyclo(std::size_t)>& f);

// Re-read a class function of a matrix group on another matrix group over the
// same field whose elements it contains (e.g. GL(2,q) -> SL(2,q)).
ClassFunction transfer(const ClassFunction& chi, const GroupPtr& target);

// Additive character lambda_a(n(x)) = zeta_p^{Tr(a x)} of N = {(1 x; 0 1)}.
ClassFunction additive_character(const Subgroup& n, std::uint32_t a);

// Principal series: alpha(g^j) = zeta_{q-1}^{k j} for the primitive element g,
// inflated from the diagonal torus to the upper triangular subgroup of
// GL(2,q) as alpha(a) on (a b; 0 d), induced to GL(2,q) and restricted to
// SL(2,q). Requires alpha^2 != 1, and alpha(-1) = -1 for odd q.
VirtualRep principal_series(const TablePtr& sl2_table, std::int64_t k);

// Cuspidal: chi(c^j) = zeta_{q^2-1}^{k j} on the elliptic torus with canonical
// generator c; Ind_{ZN} (chi|Z . lambda_1) - Ind_{Te} chi, restricted to
// SL(2,q). Requires chi^q != chi, chi^2 != 1, and chi(-1) = -1 for odd q.
VirtualRep cuspidal(const TablePtr& sl2_table, std::int64_t k);

// The same induced characters before restriction, on GL(2,q).
ClassFunction principal_series_gl(const GroupPtr& gl2, std::int64_t k);
ClassFunction cuspidal_gl(const GroupPtr& gl2, std::int64_t k, std::uint32_t a = 1);

// rho(a^k) = zeta^k + zeta^{-k}, rho(a^k b) = 0, zeta = exp(2 pi i / 2^{n-1}).
ClassFunction quaternion_rho(const GroupPtr& gen_quaternion);

}  // namespace sl2swc
