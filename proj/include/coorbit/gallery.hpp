#pragma once

#include "coorbit/frame.hpp"
#include "coorbit/gram.hpp"
#include "coorbit/hilbert.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace coorbit {

enum class FrameKind {
  onb,
  random_tight,
  riesz,
  gabor_zn,
  banded_decay,
  repeated_onb,
};

std::string to_string(FrameKind kind);
FrameKind frame_kind_from_string(const std::string& name);

/// Parameters for a generated frame family. Unused fields are ignored by the
/// kinds that do not read them; validate() reports the ones that matter.
///
/// Kinds:
///   onb           d               identity columns of C^d
///   repeated_onb  d, copies       the standard basis repeated `copies` times
///   random_tight  d, m, seed      Parseval frame from the polar part of a
///                                 seeded gaussian array
///   riesz         d, condition,   basis with singular values spaced
///                 seed            geometrically from 1 down to 1/condition
///   gabor_zn      n, time_step a, time-frequency shifts of a unit-norm
///                 freq_step b     periodized gaussian over the lattice
///                                 aZ x bZ; requires a*b | n
///   banded_decay  n, decay rho,   localized family of 2n vectors in C^n at
///                 bandwidth, seed half-integer centers: a dominant band
///                                 |psi_l[i]| ~ rho^{|i - l/2|} up to the
///                                 bandwidth plus a small slow far tail, with
///                                 seeded entry phases; entries are keyed by
///                                 (seed, i, l) so truncations nest
struct FrameSpec {
  FrameKind kind = FrameKind::onb;
  std::string name;
  index_t d = 0;
  index_t m = 0;
  index_t copies = 2;
  index_t n = 0;
  index_t time_step = 1;
  index_t freq_step = 1;
  double decay = 0.5;
  index_t bandwidth = 8;
  double condition = 10.0;
  std::uint64_t seed = 1;

  void validate() const;
  index_t ambient_dim() const;
  index_t family_size() const;
  bool scalable() const;  // supports truncation families
  std::string label() const;
};

enum class WeightKind { constant, polynomial, exponential };

std::string to_string(WeightKind kind);
WeightKind weight_kind_from_string(const std::string& name);

/// w(k) = 1, (1+k)^exponent, or e^{rate k} over {0..M-1}.
struct WeightSpec {
  WeightKind kind = WeightKind::constant;
  double exponent = 1.0;  // polynomial
  double rate = 0.05;     // exponential

  void validate() const;
  std::string label() const;
};

Frame materialize(const FrameSpec& spec);
Weight materialize(const WeightSpec& spec, index_t m);

struct LocalizationProfile {
  rvec band_max;            // per band distance b: max_{|k-l|=b} |G[k,l]|
  double fitted_rate;       // band_max[b] ~ C e^{-rate b} (least squares)
  double fitted_log_c;
  double envelope_constant; // min C with band_max[b] <= C e^{-rate b}
  double poly_exponent;     // alt fit band_max[b] ~ C (1+b)^{-p}
  double correlation;       // |corr| of the exponential fit
  double decay_ratio;       // far-band peak over near-band peak
  bool diagonal;            // all off-diagonal bands vanish
  bool localized;           // diagonal, or decay_ratio below 0.1
};

/// Off-diagonal decay diagnostic of the pair's cross Gram matrix.
LocalizationProfile localization_profile(const DualPair& pair);

/// Canonical dual pairs of the same scalable spec materialized at each size,
/// for truncation-stability studies. Sizes must be strictly increasing.
std::vector<DualPair> truncation_family(const FrameSpec& spec,
                                        std::span<const index_t> sizes);

}  // namespace coorbit
