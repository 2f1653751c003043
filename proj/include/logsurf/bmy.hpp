#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logsurf/interval.hpp"
#include "logsurf/resolution.hpp"

namespace logsurf {

// Facts the lattice cannot decide. kappa_nonneg asserts some effective
// divisor is numerically a multiple of K+D; nef and big refer to K+D. An
// effective representative, when supplied, upgrades kappa_nonneg from an
// assertion to a checked certificate.
struct Assertions {
    bool kappa_nonneg = false;
    bool nef = false;
    bool big = false;
    std::optional<Divisor> kplusd_effective;
};

// One scenario, resolved once: the base surface, the blow-up combinatorics
// of the curve, and the handful of exact scalars every evaluator consumes.
struct Context {
    SurfaceModel base;
    ResolutionDatum datum;
    Divisor curve;
    Assertions assertions;
    ResolvedGeometry geom;
    AdjunctionReport adjunction;
    Rational kd_sq;     // (K+D)^2
    Rational kd_c;      // (K+D).C
    Rational c_sq;      // C^2
    Rational e_surface; // Euler number of X minus D
    Rational e_curve;   // Euler number of the normalized C minus D
};

// Validates the datum, builds the resolved lattice, caches the scalars.
Context make_context(SurfaceModel base, ResolutionDatum datum, Divisor curve, Assertions assertions);

// Normalized Chern data of the twisted logarithmic bundle at weight alpha.
// Everything is per covering degree, so the covering itself never appears.
struct ChernData {
    Rational alpha;
    Rational c2_norm;
    Rational c1sq_norm;
    Divisor d_alpha;  // its first Chern class on the resolved lattice
};

// Throws InputError for alpha outside [0,1] and InconsistentDatumError when
// the scenario fails the adjunction identity.
ChernData chern_data(const Context& ctx, const Rational& alpha);

// Nef-reduction ladder for d_alpha: first the negative part supported on
// the non-interior exceptional curves, then the negative part of the nef
// candidate over all exceptional curves, then its absolute negative part
// over exceptional curves and base classes together.
struct ReductionData {
    // Coefficient of each total exceptional class in the first negative
    // part, keyed by class name; present for every non-interior center.
    // These may be negative: the decomposition runs over strict transforms.
    std::map<std::string, Rational> b;
    // Same for the second step, present for every center.
    std::map<std::string, Rational> b_hat;
    Divisor n_alpha, p_alpha, n_hat, n_bar;
    Rational n_alpha_sq;
    Rational n_bar_sq;
    // Met: effectivity of d_alpha was certified from an effective
    // representative of K+D. Asserted: taken from the kappa_nonneg flag.
    HypothesisStatus d_alpha_effective = HypothesisStatus::Asserted;
};

// Throws PreconditionError when effectivity of d_alpha can be neither
// certified nor taken on assertion.
ReductionData reduction_data(const Context& ctx, const ChernData& chern);

// (1/d)(3 c2 - c1^2 + N^2 + Nbar^2 / 4) for the reduced bundle.
Rational principal_lhs(const ChernData& chern, const ReductionData& red);

// The degree-bounding quadratic in alpha:
//   value(alpha) = (alpha^2/2) b3 - 2 alpha b1 + b0
// with b3 = C^2 + 3(K+D).C + 3 e_curve, b1 = (K+D).C + (3/2) e_curve,
// b0 = 3 e_surface - (K+D)^2.
struct QuadraticForm {
    Rational b3, b1, b0;
    Rational value(const Rational& alpha) const;
};

QuadraticForm main_quadratic_form(const Context& ctx);
Rational main_quadratic(const Context& ctx, const Rational& alpha);

// Discriminant-style consequence: 2 b1^2 - b0 b3 <= 0, reported with its
// hypothesis ledger and the minimizing weight alpha0 = 2 b1 / b3.
struct DiscriminantReport {
    Rational lhs;
    Verdict verdict = Verdict::Unknown;
    std::map<std::string, HypothesisStatus> hypotheses;
    bool alpha0_defined = false;
    Rational alpha0;
    bool alpha0_in_unit_interval = false;
};

DiscriminantReport discriminant_inequality(const Context& ctx);

// C isomorphic to the line with at most one boundary point: genus zero, no
// centers, D.C <= 1.
bool smooth_boundary_rational(const Context& ctx);

struct InequalityCheck {
    std::string name;
    Rational lhs, rhs;  // the claim is lhs <= rhs
    bool holds = false;
};

// Every exact inequality and identity the reduction ladder must satisfy on
// a consistent scenario, evaluated at the chern data's alpha.
struct ChainReport {
    std::vector<InequalityCheck> checks;
    // The same Chern combination computed through the bundle data and
    // through the per-center closed form; always equal.
    Rational route_bundle, route_centers;
    bool identity_equal = false;
    Rational principal, quadratic;
    bool all_hold = false;
};

ChainReport chain_validators(const Context& ctx, const ChernData& chern, const ReductionData& red);

// Standalone per-center bound used for interior multiple points:
//   4(1 - alpha m + alpha^2 m^2) - max(2 - alpha m, 0)^2 <= 6 alpha^2 m (m-1).
// True for every integer m >= 2 and rational alpha in [0,1].
bool interior_point_bound(long m, const Rational& alpha);

} // namespace logsurf
