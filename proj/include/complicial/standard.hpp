#pragma once

#include <functional>
#include <string>

#include "complicial/tdelta.hpp"

namespace complicial {

enum class Shape {
  Delta,              // Δ[m]
  DeltaT,             // Δ[m]_t
  Boundary,           // ∂Δ[m]
  Horn,               // Λᵏ[m]
  DeltaK,             // Δᵏ[m]
  DeltaKPrime,        // Δᵏ[m]′
  DeltaKDoublePrime,  // Δᵏ[m]″
  Delta3Eq,           // Δ[3]_eq
  Delta3Sharp,        // Δ[3]♯
};

// Sub-tΔ-set of Δ[n] truncated at dim. Simplices are the monotone maps
// [p] → [n] whose image (as a vertex bitmask) satisfies contains, which must be
// closed under subsets. Degenerate simplices carry their zeta tokens; a
// non-degenerate p-simplex with p ≥ 1 gets one extra token when marked(image).
// Simplices are named by their vertex sequence, e.g. "0012".
TDeltaSet simplex_shape(int n, int dim, const std::function<bool(unsigned)>& contains,
                        const std::function<bool(unsigned)>& marked);

TDeltaSet standard(Shape shape, int m, int k, int dim);
// Names: Delta, Delta_t, Boundary, Horn, DeltaK, DeltaK', DeltaK'', Delta3_eq,
// Delta3_sharp.
TDeltaSet standard(const std::string& name, int m, int k, int dim);
Shape parse_shape(const std::string& name);

}  // namespace complicial
