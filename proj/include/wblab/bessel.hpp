#pragma once

namespace wblab {

/// Bessel function of the first kind J_k(x) for integer order 0 ≤ k ≤ 8 and
/// x ≥ 0. Power series (extended precision) below x = 17, Hankel asymptotic
/// expansion above; both branches are accurate to ~1e−14 absolute.
/// Throws DomainError for x < 0 or an unsupported order.
double bessel_j(int k, double x);

}  // namespace wblab
