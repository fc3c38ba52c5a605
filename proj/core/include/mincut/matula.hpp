#pragma once

#include "mincut/graph.hpp"

namespace mincut {

/// Matula's (2+epsilon)-approximation: CAPFOREST scans like noi_mincut, but
/// after each scan every edge with q(e) >= lambda_hat / (2+epsilon) is
/// contracted, so the scan count stays logarithmic. The returned value lies
/// in [lambda, (2+epsilon)*lambda] and equals the capacity of the returned
/// bipartition. Requires a connected graph (PreconditionError otherwise).
CutResult matula_approx(const Graph& g, double epsilon = 0.1);

}  // namespace mincut
