#pragma once

#include "qtb/dist.hpp"
#include "qtb/extended_real.hpp"
#include "qtb/qcore.hpp"

namespace qtb {

/// Total complexity Phi_q(x,y) = sum_i pi_q(x_i,y_i) * kappa_q(y_i).
///
/// Term conventions: a term with pi = 0 contributes 0 even when kappa is
/// infinite; any term with pi > 0 and kappa = +inf makes the result +inf.
/// A negative pi together with an infinite kappa is raised as
/// "indeterminate -inf*inf"; it is unreachable for the canonical pair
/// (pi >= 0 for q <= 1, kappa finite for q > 1).
///
/// At q = 0 the belief support must contain the truth support (the infimum
/// of Eq-style minimization is restricted there); violations are a domain
/// error, not +inf. Phi_0 depends on y only through its support and equals
/// |supp y| - 1.
ExtendedReal complexity(QParam q, const Distribution& x, const Distribution& y);

/// Tsallis entropy H_q(x) = sum_i x_i * kappa_q(x_i) with 0 * kappa(0) = 0.
/// Terms are evaluated as (x^q - x)/(1-q) (algebraically x * kappa_q(x)),
/// as -x ln x at q = 1, and the q = 0 value is the exact |support(x)| - 1.
/// Always finite, >= 0, and 0 iff x is a point mass (q > 0).
double entropy(QParam q, const Distribution& x);

/// Divergence D_q(x,y) = Phi_q(x,y) - H_q(x). Non-negative, zero at y = x,
/// and equal to the Kullback-Leibler divergence at q = 1.
ExtendedReal divergence(QParam q, const Distribution& x, const Distribution& y);

/// |H_q(x (x) y) - (H_q(x) + H_q(y) + (1-q) H_q(x) H_q(y))| on the product
/// distribution; the defining check of non-extensivity. Stays below 1e-10.
double pseudo_additivity_residual(QParam q, const Distribution& x,
                                  const Distribution& y);

}  // namespace qtb
