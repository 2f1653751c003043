#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "logsurf/lattice.hpp"
#include "logsurf/zariski.hpp"

namespace logsurf {

// Where a blow-up center sits relative to the curve C and the boundary D.
// The four kinds must appear as contiguous blocks in this order.
enum class Stage {
    Interior,      // singular point of C away from D: m >= 2, delta = 0
    Boundary,      // point of C on D: delta in {1,2} (smooth point or node of D)
    NearInterior,  // infinitely near point over an Interior center: delta = 0
    NearBoundary,  // infinitely near point over a Boundary center
};

struct BlowupCenter {
    Stage stage = Stage::Interior;
    long m = 0;      // multiplicity of the strict transform of C at the center
    long delta = 0;  // multiplicity of the strict transform of D at the center
    // 1-based indices of earlier centers whose strict exceptional curve
    // passes through this one. Empty for early stages; size 1 (free point)
    // or 2 (satellite point) for the infinitely near stages.
    std::vector<std::size_t> proximity;
};

struct ResolutionDatum {
    std::vector<BlowupCenter> centers;
    long genus = 0;  // geometric genus of C
};

// 1 when the center is a satellite point (lies on two earlier exceptional
// curves), 0 otherwise. Early centers are never satellites.
int satellite_excess(const BlowupCenter& c);

// Structural validation: stage blocks ordered, per-stage field ranges,
// proximity sets reference earlier centers of the matching lineage, and
// satellite pairs are consistent (a center on E_i and E_j requires those two
// curves to actually meet, which each pair can do at most once).
// Throws InputError.
void validate(const ResolutionDatum& datum);

// Coefficients x_i of the exceptional classes in
//   K' + D' + E - pullback(K + D) = sum x_i Ebar_i
// on the resolved surface, where E is the reduced exceptional divisor.
// Interior: 2. Boundary: 2 - delta. Infinitely near: 1 - satellite - delta.
// Throws InconsistentDatumError when some x_i < 0 (no such configuration
// exists on a surface).
std::vector<long> derive_discrepancies(const ResolutionDatum& datum);

// The blown-up surface and every divisor the later computations need.
// Exceptional classes are named E1..En (total transforms: mutually
// orthogonal, square -1, orthogonal to pullbacks). Base classes keep their
// names and pairings, so base divisors double as their own pullbacks.
struct ResolvedGeometry {
    SurfaceModel model;
    Divisor c_tilde;  // strict transform of C: pullback(C) - sum m_i Ebar_i
    Divisor d_tilde;  // strict transform of the boundary divisor
    std::vector<std::string> exceptional;  // class name per center
    // Strict exceptional curves Ebar_i - sum of the Ebar_j proximate to i,
    // one per center, named after the class.
    std::vector<CurveComponent> stricts;
    // Center indices (0-based) by stage, preserving order.
    std::vector<std::size_t> interior, boundary, near_interior, near_boundary;
    std::vector<long> m, delta, x;
    std::vector<int> satellite;
    long genus = 0;
};

// Throws InputError when a base class is already named like an exceptional
// one, or when the curve class is unknown; validates the datum first.
ResolvedGeometry build_resolved_lattice(const SurfaceModel& base,
                                        const ResolutionDatum& datum,
                                        const Divisor& curve_class);

// Strict transforms over the chosen centers, in center order.
std::vector<CurveComponent> select_stricts(const ResolvedGeometry& g,
                                           const std::vector<std::size_t>& idx);
// The boundary-side exceptional family (Boundary and NearBoundary stricts).
std::vector<CurveComponent> boundary_family(const ResolvedGeometry& g);
// The interior-side family (Interior and NearInterior stricts).
std::vector<CurveComponent> interior_family(const ResolvedGeometry& g);
// Everything except the Interior stricts; the support used for the first
// nef-reduction step.
std::vector<CurveComponent> reduction_cycle(const ResolvedGeometry& g);
// All strict exceptional curves.
std::vector<CurveComponent> full_cycle(const ResolvedGeometry& g);

// Euler number of the complement X minus D:
//   e_top(X) - sum (2 - 2 g(D_i)) + sum_{i<j} D_i . D_j.
// Throws InputError when a boundary class is missing from the lattice.
Rational euler_open_surface(const SurfaceModel& model);

// Euler number of the normalized curve minus the boundary preimage:
//   2 - 2 g(C) - (E_boundary + D') . C'.
Rational euler_open_curve(const ResolvedGeometry& g);

struct AdjunctionReport {
    Rational lhs;         // (K + D) . C + C^2 on the base surface
    Rational rhs;         // -e_{C minus D} plus the per-center corrections
    Rational difference;  // lhs - rhs; nonzero flags inconsistent input data
    bool equal = false;
};

// Exact check of the adjunction identity relating the canonical degree of C
// to the open-curve Euler number and the center multiplicities. A mismatch
// is reported, not thrown: it means the supplied genus or multiplicities do
// not describe a real curve.
AdjunctionReport check_adjunction(const SurfaceModel& base,
                                  const ResolutionDatum& datum,
                                  const Divisor& curve_class);

} // namespace logsurf
