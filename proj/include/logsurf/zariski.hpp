#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "logsurf/lattice.hpp"

namespace logsurf {

// One component of the cycle handed to a decomposition: a named prime curve
// with its class vector. For plain lattice cycles this is a unit basis
// class; on blown-up lattices, components are strict transforms and so mix
// several basis classes.
struct CurveComponent {
    std::string name;
    Divisor curve;
};

// Record of the checks the decomposition routines certify before returning.
struct ZariskiCertificate {
    bool sum_matches = false;           // positive + negative == input
    bool negative_effective = false;    // all component coefficients >= 0
    bool positive_checkable = false;    // components are basis classes and the
                                        // input passed the coordinate check, so
                                        // coefficientwise effectivity of the
                                        // positive part is meaningful
    bool positive_effective = false;
    bool nef_on_cycle = false;          // positive . E_i >= 0 for every component
    bool orthogonal_on_support = false; // positive . E_i == 0 where coefficient > 0
    bool squares_additive = false;      // D^2 == P^2 + N^2

    bool ok() const {
        return sum_matches && negative_effective && positive_effective && nef_on_cycle &&
               orthogonal_on_support && squares_additive;
    }
};

struct ZariskiResult {
    Divisor positive;
    Divisor negative;
    // Per input component, in input order; zero off the support.
    std::vector<Rational> coefficients;
    // Names of components with a strictly positive coefficient.
    std::vector<std::string> support;
    ZariskiCertificate certificate;
};

// Whether an operation must verify effectivity of the input divisor itself,
// or may trust a certificate established by the caller (used on blown-up
// lattices, where coordinate positivity is the wrong notion).
enum class Effectivity { Checked, CertifiedExternally };

// Decomposition of an effective divisor D against a negative definite cycle:
// D = P + N with N effective and supported on the cycle, P intersecting
// every cycle component nonnegatively and the support components of N
// trivially. Computed as a fixed point: seed the support with the components
// D meets negatively, solve the negative definite linear system for N there,
// and grow the support by any component the remainder still meets
// negatively. Components of the cycle outside supp(D) are discarded up
// front. Throws PreconditionError when D is not effective or the cycle is
// not negative definite, InvariantViolationError when the final certificate
// fails (impossible for intersection data coming from curves on a surface).
ZariskiResult zariski_support(const Divisor& d, const Cycle& cycle, const SurfaceModel& model);

// Same fixed point run against all basis classes in supp(D). No negative
// definiteness is assumed; instead the growing support is checked at each
// step and a ModelInconsistencyError reports data that cannot come from an
// effective divisor on a surface.
ZariskiResult zariski_absolute(const Divisor& d, const SurfaceModel& model);

// Independent reference: enumerates every subset S of cycle-and-supp(D)
// components, solves N . E_i = D . E_i on S, and returns the unique
// candidate passing the full certificate. Exponential in the cycle size;
// refuses (InputError) beyond `limit` components.
ZariskiResult zariski_oracle(const Divisor& d,
                             const Cycle& cycle,
                             const SurfaceModel& model,
                             std::size_t limit = 12);

// General-component variants used on blown-up lattices, where cycle
// components (strict transforms) are not basis classes. The input divisor's
// effectivity and the positive part's effectivity are not coefficientwise
// checkable there; pass Effectivity::CertifiedExternally when the caller has
// its own certificate.
ZariskiResult zariski_support_on(const Divisor& d,
                                 const std::vector<CurveComponent>& cycle,
                                 const SurfaceModel& model,
                                 Effectivity effectivity);

ZariskiResult zariski_absolute_on(const Divisor& d,
                                  const std::vector<CurveComponent>& universe,
                                  const SurfaceModel& model,
                                  Effectivity effectivity);

ZariskiResult zariski_oracle_on(const Divisor& d,
                                const std::vector<CurveComponent>& cycle,
                                const SurfaceModel& model,
                                Effectivity effectivity,
                                std::size_t limit = 12);

} // namespace logsurf
