#pragma once

#include "satake/laurent.hpp"
#include "satake/root_datum.hpp"

namespace satake {

/// sum_k p_k(beta) q^k, p_k(beta) = number of ways to write beta as a sum of
/// k positive coroots (with repetition). Zero outside the positive cone.
LaurentPolynomial q_kostant_partition(const RootSystem& rs, const Coweight& beta);

/// Lusztig's q-analog of weight multiplicity (Kostka-Foulkes polynomial)
/// m^mu_lambda(q) = sum_w (-1)^l(w) P_q(w(mu + rho^) - (lambda + rho^)).
LaurentPolynomial lusztig_q_analog(const RootSystem& rs, const Coweight& mu, const Coweight& lambda);

}  // namespace satake
