#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "slitsqueeze/geometry.hpp"
#include "slitsqueeze/prime.hpp"

namespace slitsqueeze {

/// Profiles whose sampled moduli vary by more than this are flagged unreliable.
inline constexpr double kUnreliableDeviation = 1e-5;
inline constexpr std::size_t kDefaultSamples = 256;

struct SlitValue {
  Complex value;
  double est_error = 0.0;
};

/// Canonical circular slit map ψ: sends `base` to 0, boundary `boundary_index`
/// onto the unit circle and every other boundary circle onto an arc of a
/// circle centred at 0.  Phase-normalized so that ψ'(base) > 0.
///
/// The map is f(z) = ω(z, y) / (|y| ω(z, 1/ȳ)) evaluated on the domain
/// normalized by normalize_boundary.  Because every product factor is a
/// cross-ratio, the normalized prime function satisfies
/// ω'(Tz, Tw) = ω(z, w) (Tz - Tw) / (z - w), so the evaluation runs on the
/// original domain's word table with w = reflection of y in boundary i.
class SlitMap {
 public:
  /// Errors: InvalidBoundaryIndex, BasePointOutsideDomain.
  SlitMap(const CircularDomain& d, Complex base, std::size_t boundary_index, const TruncationPolicy& p = {});

  const CircularDomain& domain() const;
  Complex base() const;
  std::size_t boundary_index() const;
  const NormalizedDomain& normalization() const;
  const TruncationPolicy& policy() const;

  /// Errors: NoConvergence (propagated), DenominatorZero.
  SlitValue eval(Complex z) const;
  Complex operator()(Complex z) const { return eval(z).value; }

  /// |ψ'(base)|
  double derivative_at_base() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

inline Complex slit_map_eval(const SlitMap& m, Complex z) { return m(z); }

/// |y|: the slit radius of the outer-boundary map of an annulus.
double slit_radius_annulus_closed_form(Complex y);

struct SlitRadius {
  std::size_t boundary;  ///< original index j of Γ_j
  double radius;
};

struct SlitProfile {
  std::size_t boundary_index;
  std::vector<SlitRadius> radii;   ///< one per j != i, in boundary order
  std::vector<double> deviations;  ///< max - min of sampled |ψ| per radius entry
  std::size_t samples_per_circle;
  double est_error;                ///< largest prime-function update seen

  bool reliable() const;
  double min_radius() const;
  double max_radius() const;
};

/// Mean of |ψ| over `samples` equi-angular points (starting at angle 0) of
/// every Γ_j, j != i.  Errors: ProfileDegenerate when a mean is outside (0, 1).
SlitProfile slit_profile(const CircularDomain& d, Complex z0, std::size_t i,
                         std::size_t samples = kDefaultSamples, const TruncationPolicy& p = {});
SlitProfile slit_profile(const SlitMap& m, std::size_t samples = kDefaultSamples);

double canonical_derivative(const CircularDomain& d, Complex z0, std::size_t i, const TruncationPolicy& p = {});

}  // namespace slitsqueeze
