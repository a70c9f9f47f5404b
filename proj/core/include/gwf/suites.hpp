#pragma once

#include "gwf/builders.hpp"
#include "gwf/fchar.hpp"
#include "gwf/gggr.hpp"
#include "gwf/ungraded.hpp"

namespace gwf {

/// One verification suite run: pass iff no check failed; the report is a
/// deterministic JSON payload (no timings, no thread counts) so runs at
/// different thread counts are bit-identical.
struct SuiteResult {
  bool pass = true;
  nlohmann::json report;
};

/// Fourier involution FT(FT(f)) = f(-.) and Plancherel on random functions.
SuiteResult suiteFourier(const BuiltInstance& inst, int degree, int threads);
/// Orbit characters: FT(chi_{O*}) = q^{N/2} 1_{O*} and conj(chi) = chi_{-O*}
/// for every coadjoint orbit.
SuiteResult suiteCharacters(const BuiltInstance& inst, int degree,
                            int threads);
/// Multiplicity round trip: random non-negative combinations of the
/// chi_{O*} are recovered exactly; perturbed tables are rejected.
SuiteResult suiteDecomposition(const BuiltInstance& inst, int degree,
                               int threads);
/// GGGR properties: support in the nilpotent cone, FT values in
/// q^{N/2} N_0, pairing nonzero iff slice intersection, over all orbit
/// pairs.
SuiteResult suiteGggrProps(const BuiltInstance& inst, int degree, int threads);
/// Counting formula for FT(Gamma) equals the direct transform pointwise.
SuiteResult suiteFtCounting(const BuiltInstance& inst, int degree,
                            int threads);
/// Triple torsor counts: brute force = q^{dim u_0^e} on every nonzero
/// nilpotent orbit representative.
SuiteResult suiteTripleCounts(const BuiltInstance& inst, int degree,
                              int threads);
/// Wave front set equals the cone of the Fourier support, by independent
/// code paths, for every orbit character and random invariant characters.
SuiteResult suiteWavefrontCone(const BuiltInstance& inst, int degree,
                               int threads);
/// Ungraded N-map bounds on the wave front sets of all coadjoint orbit
/// characters; the split regular semisimple orbit yields the regular cone.
SuiteResult suiteNmapBounds(const BuiltInstance& inst, int threads);
/// Jordan decomposition exhaustively, N-map orbit constancy, and the
/// induction dimension identity.  Builds its own small instances.
SuiteResult suiteJordanLayer(int threads);
/// Every builtin validates; the graded suites additionally run on
/// Z/3-graded gl_3(F_11) degree 1.
SuiteResult suiteBuilderValidation(int threads);

std::vector<std::string> suiteNames();

/// Dispatch by name.  jordan-layer and builder-validation ignore the
/// instance/degree arguments and build their own.
SuiteResult runSuite(const std::string& name, const BuiltInstance& inst,
                     int degree, int threads);

}  // namespace gwf
