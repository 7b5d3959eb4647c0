#include "coorbit/gallery.hpp"

#include "coorbit/rng.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

namespace coorbit {

namespace {

// banded_decay far-field: a small slow tail outside the main band. Keeps the
// weighted row sums of truncated families converging on a measurable scale
// instead of collapsing to rounding noise immediately.
constexpr double kTailAmplitude = 2e-3;
constexpr double kTailRate = 0.97;
// off-center scale of the even (peaked) columns; keeps the even sub-family
// diagonally dominant, which pins the frame bound away from zero.
constexpr double kPeakedOffScale = 0.35;

cmat random_gaussian(index_t rows, index_t cols, std::uint64_t seed) {
  cmat a(rows, cols);
  for (index_t j = 0; j < cols; ++j)
    for (index_t i = 0; i < rows; ++i)
      a(i, j) = rng::gaussian(rng::key(seed, static_cast<std::uint64_t>(i),
                                       static_cast<std::uint64_t>(j)));
  return a;
}

cmat random_unitary(index_t d, std::uint64_t seed) {
  const cmat a = random_gaussian(d, d, seed);
  Eigen::HouseholderQR<cmat> qr(a);
  cmat q = qr.householderQ() * cmat::Identity(d, d);
  // Fix the phase of each column so the factorization is unambiguous.
  const cmat r = q.adjoint() * a;
  for (index_t j = 0; j < d; ++j) {
    const cdouble rjj = r(j, j);
    const double mag = std::abs(rjj);
    if (mag > 0.0) q.col(j) *= rjj / mag;
  }
  return q;
}

Frame make_onb(const FrameSpec& spec) {
  return Frame(cmat::Identity(spec.d, spec.d));
}

Frame make_repeated_onb(const FrameSpec& spec) {
  cmat vectors(spec.d, spec.d * spec.copies);
  for (index_t c = 0; c < spec.copies; ++c)
    vectors.middleCols(c * spec.d, spec.d) = cmat::Identity(spec.d, spec.d);
  return Frame(std::move(vectors));
}

Frame make_random_tight(const FrameSpec& spec) {
  const cmat raw = random_gaussian(spec.d, spec.m, spec.seed);
  Eigen::JacobiSVD<cmat> svd(raw, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success)
    throw error("random_tight: svd failed");
  if (svd.singularValues().minCoeff() <=
      1e-12 * svd.singularValues().maxCoeff())
    throw error("random_tight: generated family is rank deficient");
  // Polar part: S = Psi Psi^H = U V^H V U^H = I, a Parseval frame.
  return Frame(svd.matrixU() * svd.matrixV().adjoint());
}

Frame make_riesz(const FrameSpec& spec) {
  const cmat u = random_unitary(spec.d, rng::key(spec.seed, 0x75));
  const cmat v = random_unitary(spec.d, rng::key(spec.seed, 0x76));
  rvec sv(spec.d);
  for (index_t k = 0; k < spec.d; ++k) {
    const double t = spec.d > 1 ? static_cast<double>(k) / (spec.d - 1) : 0.0;
    sv(k) = std::pow(spec.condition, -t);
  }
  return Frame(u * sv.asDiagonal() * v.adjoint());
}

rvec periodized_gaussian(index_t n) {
  rvec g(n);
  for (index_t t = 0; t < n; ++t) {
    double value = 0.0;
    for (int j = -4; j <= 4; ++j) {
      const double x = static_cast<double>(t) + j * static_cast<double>(n);
      value += std::exp(-std::numbers::pi * x * x / static_cast<double>(n));
    }
    g(t) = value;
  }
  g /= g.norm();
  return g;
}

Frame make_gabor(const FrameSpec& spec) {
  const index_t n = spec.n;
  const index_t a = spec.time_step;
  const index_t b = spec.freq_step;
  const index_t time_count = n / a;
  const index_t freq_count = n / b;
  const rvec window = periodized_gaussian(n);

  cmat vectors(n, time_count * freq_count);
  for (index_t mshift = 0; mshift < time_count; ++mshift) {
    for (index_t j = 0; j < freq_count; ++j) {
      const index_t col = mshift * freq_count + j;
      const double omega = static_cast<double>(j * b);
      const index_t shift = (mshift * a) % n;
      for (index_t t = 0; t < n; ++t) {
        const index_t shifted = (t - shift + n) % n;
        const double phase = 2.0 * std::numbers::pi * omega * t / n;
        vectors(t, col) =
            window(shifted) * cdouble(std::cos(phase), std::sin(phase));
      }
    }
  }
  return Frame(std::move(vectors));
}

Frame make_banded(const FrameSpec& spec) {
  const index_t n = spec.n;
  const index_t m = 2 * n;
  const double rho = spec.decay;
  const double tail_rate = std::max(kTailRate, rho);
  cmat vectors = cmat::Zero(n, m);
  for (index_t l = 0; l < m; ++l) {
    const double center = static_cast<double>(l) / 2.0;
    const bool peaked = (l % 2 == 0);
    double norm_sq = 0.0;
    for (index_t i = 0; i < n; ++i) {
      const double dist = std::abs(static_cast<double>(i) - center);
      double amp = kTailAmplitude * std::pow(tail_rate, dist);
      if (dist <= static_cast<double>(spec.bandwidth)) {
        const double lobe = std::pow(rho, dist);
        amp += peaked ? (dist == 0.0 ? 1.0 : kPeakedOffScale * lobe) : lobe;
      }
      const cdouble phase =
          (peaked && dist == 0.0)
              ? cdouble(1.0, 0.0)
              : rng::unit_phase(rng::key(spec.seed, static_cast<std::uint64_t>(i),
                                         static_cast<std::uint64_t>(l)));
      vectors(i, l) = amp * phase;
      norm_sq += amp * amp;
    }
    vectors.col(l) /= std::sqrt(norm_sq);
  }
  return Frame(std::move(vectors));
}

}  // namespace

std::string to_string(FrameKind kind) {
  switch (kind) {
    case FrameKind::onb: return "onb";
    case FrameKind::random_tight: return "random_tight";
    case FrameKind::riesz: return "riesz";
    case FrameKind::gabor_zn: return "gabor_zn";
    case FrameKind::banded_decay: return "banded_decay";
    case FrameKind::repeated_onb: return "repeated_onb";
  }
  throw spec_error("unknown frame kind");
}

FrameKind frame_kind_from_string(const std::string& name) {
  if (name == "onb") return FrameKind::onb;
  if (name == "random_tight") return FrameKind::random_tight;
  if (name == "riesz") return FrameKind::riesz;
  if (name == "gabor_zn") return FrameKind::gabor_zn;
  if (name == "banded_decay") return FrameKind::banded_decay;
  if (name == "repeated_onb") return FrameKind::repeated_onb;
  throw spec_error("unknown frame kind: " + name);
}

void FrameSpec::validate() const {
  switch (kind) {
    case FrameKind::onb:
      if (d < 1) throw spec_error("onb: dimension must be >= 1");
      break;
    case FrameKind::repeated_onb:
      if (d < 1) throw spec_error("repeated_onb: dimension must be >= 1");
      if (copies < 1) throw spec_error("repeated_onb: copies must be >= 1");
      break;
    case FrameKind::random_tight:
      if (d < 1) throw spec_error("random_tight: dimension must be >= 1");
      if (m < d) throw spec_error("random_tight: family size must be >= dimension");
      break;
    case FrameKind::riesz:
      if (d < 1) throw spec_error("riesz: dimension must be >= 1");
      if (!(condition >= 1.0) || !(condition < 1e12))
        throw spec_error("riesz: condition target must lie in [1, 1e12)");
      break;
    case FrameKind::gabor_zn:
      if (n < 2) throw spec_error("gabor_zn: lattice size must be >= 2");
      if (time_step < 1 || freq_step < 1)
        throw spec_error("gabor_zn: lattice steps must be >= 1");
      if (n % (time_step * freq_step) != 0)
        throw spec_error(
            "gabor_zn: a*b must divide n for a lattice of size (n/a)(n/b)");
      break;
    case FrameKind::banded_decay:
      if (n < 2) throw spec_error("banded_decay: size must be >= 2");
      if (!(decay > 0.0) || !(decay < 1.0))
        throw spec_error("banded_decay: decay rate must lie in (0, 1)");
      if (bandwidth < 1) throw spec_error("banded_decay: bandwidth must be >= 1");
      break;
  }
}

index_t FrameSpec::ambient_dim() const {
  switch (kind) {
    case FrameKind::onb:
    case FrameKind::repeated_onb:
    case FrameKind::random_tight:
    case FrameKind::riesz:
      return d;
    case FrameKind::gabor_zn:
    case FrameKind::banded_decay:
      return n;
  }
  return 0;
}

index_t FrameSpec::family_size() const {
  switch (kind) {
    case FrameKind::onb: return d;
    case FrameKind::repeated_onb: return d * copies;
    case FrameKind::random_tight: return m;
    case FrameKind::riesz: return d;
    case FrameKind::gabor_zn: return (n / time_step) * (n / freq_step);
    case FrameKind::banded_decay: return 2 * n;
  }
  return 0;
}

bool FrameSpec::scalable() const {
  return kind == FrameKind::gabor_zn || kind == FrameKind::banded_decay;
}

std::string FrameSpec::label() const {
  return name.empty() ? to_string(kind) : name;
}

std::string to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::constant: return "constant";
    case WeightKind::polynomial: return "polynomial";
    case WeightKind::exponential: return "exponential";
  }
  throw spec_error("unknown weight kind");
}

WeightKind weight_kind_from_string(const std::string& name) {
  if (name == "constant") return WeightKind::constant;
  if (name == "polynomial") return WeightKind::polynomial;
  if (name == "exponential") return WeightKind::exponential;
  throw spec_error("unknown weight kind: " + name);
}

void WeightSpec::validate() const {
  if (kind == WeightKind::polynomial && !std::isfinite(exponent))
    throw spec_error("polynomial weight: non-finite exponent");
  if (kind == WeightKind::exponential && !std::isfinite(rate))
    throw spec_error("exponential weight: non-finite rate");
}

std::string WeightSpec::label() const {
  switch (kind) {
    case WeightKind::constant: return "constant";
    case WeightKind::polynomial:
      return "polynomial(s=" + std::to_string(exponent) + ")";
    case WeightKind::exponential:
      return "exponential(r=" + std::to_string(rate) + ")";
  }
  return "?";
}

Frame materialize(const FrameSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case FrameKind::onb: return make_onb(spec);
    case FrameKind::repeated_onb: return make_repeated_onb(spec);
    case FrameKind::random_tight: return make_random_tight(spec);
    case FrameKind::riesz: return make_riesz(spec);
    case FrameKind::gabor_zn: return make_gabor(spec);
    case FrameKind::banded_decay: return make_banded(spec);
  }
  throw spec_error("unknown frame kind");
}

Weight materialize(const WeightSpec& spec, index_t m) {
  spec.validate();
  rvec values(m);
  for (index_t k = 0; k < m; ++k) {
    switch (spec.kind) {
      case WeightKind::constant: values(k) = 1.0; break;
      case WeightKind::polynomial:
        values(k) = std::pow(1.0 + static_cast<double>(k), spec.exponent);
        break;
      case WeightKind::exponential:
        values(k) = std::exp(spec.rate * static_cast<double>(k));
        break;
    }
  }
  return Weight(std::move(values));
}

LocalizationProfile localization_profile(const DualPair& pair) {
  const index_t m = pair.size();
  const CrossGram gram(pair, Weight::constant(m));
  LocalizationProfile profile;
  profile.band_max = rvec::Zero(m);
  for (index_t k = 0; k < m; ++k)
    for (index_t l = 0; l < m; ++l) {
      const index_t band = k > l ? k - l : l - k;
      profile.band_max(band) =
          std::max(profile.band_max(band), std::abs(gram.matrix()(k, l)));
    }

  const double floor = 1e-14 * std::max(profile.band_max(0), 1.0);
  std::vector<double> xs, ys;
  for (index_t b = 1; b < m; ++b)
    if (profile.band_max(b) > floor) {
      xs.push_back(static_cast<double>(b));
      ys.push_back(std::log(profile.band_max(b)));
    }

  profile.diagonal = xs.empty();
  if (profile.diagonal) {
    profile.fitted_rate = std::numeric_limits<double>::infinity();
    profile.fitted_log_c = 0.0;
    profile.envelope_constant = profile.band_max(0);
    profile.poly_exponent = std::numeric_limits<double>::infinity();
    profile.correlation = 1.0;
    profile.decay_ratio = 0.0;
    profile.localized = true;
    return profile;
  }

  auto least_squares = [](const std::vector<double>& x,
                          const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      sx += x[i]; sy += y[i];
      sxx += x[i] * x[i]; sxy += x[i] * y[i]; syy += y[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    const double slope = denom != 0.0 ? (n * sxy - sx * sy) / denom : 0.0;
    const double intercept = (sy - slope * sx) / n;
    const double var_x = n * sxx - sx * sx;
    const double var_y = n * syy - sy * sy;
    const double corr = (var_x > 0 && var_y > 0)
                            ? std::abs(n * sxy - sx * sy) / std::sqrt(var_x * var_y)
                            : 1.0;
    return std::tuple<double, double, double>{slope, intercept, corr};
  };

  const auto [slope, intercept, corr] = least_squares(xs, ys);
  profile.fitted_rate = -slope;
  profile.fitted_log_c = intercept;
  profile.correlation = corr;

  double envelope = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    envelope = std::max(envelope, std::exp(ys[i] + profile.fitted_rate * xs[i]));
  envelope = std::max(envelope, profile.band_max(0));
  profile.envelope_constant = envelope;

  std::vector<double> log_b(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) log_b[i] = std::log1p(xs[i]);
  const auto [pslope, pintercept, pcorr] = least_squares(log_b, ys);
  (void)pintercept;
  (void)pcorr;
  profile.poly_exponent = -pslope;

  // Flat profiles have far bands as large as near ones; localized frames do
  // not. The ratio separates the two regimes far more sharply than the
  // fitted rate, which a slow far tail can drag down.
  const index_t bands = m - 1;
  const index_t quarter = std::max<index_t>(1, bands / 4);
  const double near_peak =
      profile.band_max.segment(1, bands - quarter).maxCoeff();
  const double far_peak =
      profile.band_max.segment(m - quarter, quarter).maxCoeff();
  profile.decay_ratio = near_peak > 0.0 ? far_peak / near_peak : 0.0;
  profile.localized = near_peak > 0.0 && profile.decay_ratio <= 0.1;
  return profile;
}

std::vector<DualPair> truncation_family(const FrameSpec& spec,
                                        std::span<const index_t> sizes) {
  if (!spec.scalable())
    throw spec_error("truncation_family: kind " + to_string(spec.kind) +
                     " does not support size scaling");
  if (sizes.empty()) throw spec_error("truncation_family: no sizes given");
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1])
      throw spec_error("truncation_family: sizes must be strictly increasing");

  std::vector<DualPair> family;
  family.reserve(sizes.size());
  for (index_t size : sizes) {
    FrameSpec scaled = spec;
    scaled.n = size;
    scaled.validate();
    family.push_back(canonical_pair(materialize(scaled)));
  }
  return family;
}

}  // namespace coorbit
