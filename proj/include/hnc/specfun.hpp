#pragma once

// ln Gamma and digamma for positive real arguments.
//
// ln_gamma: Lanczos approximation (g = 607/128, 15 coefficients) away from the
// zeros at 1 and 2; near them a Taylor series in zeta values keeps the
// relative error small.
// digamma: asymptotic expansion for x >= 10; below that the argument is moved
// into [1, 2) by the recurrence psi(x+1) = psi(x) + 1/x and evaluated by a
// Taylor series centred on the positive root of psi.

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hnc/errors.hpp"

namespace hnc::specfun {

// Range over which both functions are checked against high-precision oracles.
inline constexpr double kValidatedMin = 1e-12;
inline constexpr double kValidatedMax = 1e12;

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

namespace detail {

inline void require_positive(double x, const char* fn) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(fn) + ": argument must be positive and finite, got " +
                      std::to_string(x));
  }
}

inline constexpr double kLanczosG = 607.0 / 128.0;
inline constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4, .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,  -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4, .36899182659531622704e-5};

// zeta(k) for k = 2..31
inline constexpr std::array<double, 30> kZeta = {
    1.644934066848226436472, 1.2020569031595942854,   1.082323233711138191516,
    1.036927755143369926331, 1.017343061984449139715, 1.00834927738192282684,
    1.004077356197944339379, 1.002008392826082214418, 1.000994575127818085337,
    1.000494188604119464559, 1.000246086553308048299, 1.000122713347578489147,
    1.000061248135058704829, 1.000030588236307020494, 1.000015282259408651872,
    1.000007637197637899762, 1.00000381729326499984,  1.000001908212716553939,
    1.000000953962033872796, 1.000000476932986787806, 1.000000238450502727733,
    1.000000119219925965311, 1.000000059608189051259, 1.000000029803503514652,
    1.000000014901554828365, 1.000000007450711789835, 1.000000003725334024788,
    1.000000001862659723513, 1.00000000093132743242,  1.000000000465662906503};

// ln Gamma(1 + z) = -gamma z + sum_{k>=2} (-1)^k zeta(k) z^k / k, |z| < 1.
inline double ln_gamma_1p_series(double z) {
  double sum = 0.0;
  double zk = z;
  for (std::size_t i = 0; i < kZeta.size(); ++i) {
    zk *= -z;
    const double k = static_cast<double>(i + 2);
    sum += kZeta[i] * zk / k;
  }
  // zk == (-1)^(k-1) z^k, hence the minus
  return -kEulerGamma * z - sum;
}

inline double ln_gamma_lanczos(double x) {
  double a = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) {
    a += kLanczos[k] / (x + static_cast<double>(k));
  }
  const double t = x + kLanczosG + 0.5;
  const double half_ln_two_pi = 0.91893853320467274178;
  return half_ln_two_pi + (x + 0.5) * std::log(t) - t + std::log(a / x);
}

inline constexpr double kDigammaRoot = 1.46163214496836234126266;
inline constexpr double kDigammaRootTail = 9.5499954299656977e-17;  // root - double(root)

// psi(root + z) = sum_k c_k z^k
inline constexpr std::array<double, 46> kDigammaRootTaylor = {
    0.0,
    9.676722454476211704274e-1,  -4.427631689835921060929e-1, 2.584997609556510106244e-1,
    -1.639427054424065275043e-1, 1.078240506912623657572e-1,  -7.219956125645471092612e-2,
    4.880428816414310722509e-2,  -3.316112647484735929226e-2, 2.259764823221810465962e-2,
    -1.54247659049489591388e-2,  1.053879161661217538812e-2,  -7.20453438635686824097e-3,
    4.926781395729853446354e-3,  -3.369801655439328082793e-3, 2.305126326734927836938e-3,
    -1.576936771430197259271e-3, 1.078825201916296580692e-3,  -7.38070938996005129566e-4,
    5.049532658346020351774e-4,  -3.454680251063076995556e-4, 2.363560156402705279237e-4,
    -1.617062209197480344936e-4, 1.106337276874741090409e-4,  -7.569179582195065919238e-5,
    5.178575795222080868993e-5,  -3.54300709476596063157e-5,  2.424006611860131765268e-5,
    -1.658424227185413337524e-5, 1.13463845846638498067e-5,   -7.762817668462094425268e-6,
    5.311060920889863387322e-6,  -3.633650789801045668371e-6, 2.486022733129537948898e-6,
    -1.700853885433260658246e-6, 1.163667536354884270291e-6,  -7.961425431241970400352e-7,
    5.446941930669445278501e-7,  -3.726616128343822958897e-7, 2.549626552021554256662e-7,
    -1.744369511772774521813e-7, 1.193439482983024277898e-7,  -8.165115189488408840841e-8,
    5.58629968353217144428e-8,   -3.821960061917494212428e-8, 2.614857695196186627953e-8};

// x in [1, 2)
inline double digamma_unit_interval(double x) {
  const double z = (x - kDigammaRoot) - kDigammaRootTail;
  double acc = 0.0;
  for (std::size_t k = kDigammaRootTaylor.size(); k-- > 1;) {
    acc = (acc + kDigammaRootTaylor[k]) * z;
  }
  return acc;
}

// x >= 10
inline double digamma_asymptotic(double x) {
  // B_2k / (2k) for k = 1..8
  constexpr std::array<double, 8> c = {1.0 / 12.0,   -1.0 / 120.0,     1.0 / 252.0,
                                       -1.0 / 240.0, 1.0 / 132.0,      -691.0 / 32760.0,
                                       1.0 / 12.0,   -3617.0 / 8160.0};
  const double inv2 = 1.0 / (x * x);
  double series = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) {
    series = (series + c[k]) * inv2;
  }
  return std::log(x) - 0.5 / x - series;
}

}  // namespace detail

inline double ln_gamma(double x) {
  detail::require_positive(x, "ln_gamma");
  if (std::fabs(x - 1.0) < 0.2) return detail::ln_gamma_1p_series(x - 1.0);
  if (std::fabs(x - 2.0) < 0.2) {
    const double z = x - 2.0;
    return std::log1p(z) + detail::ln_gamma_1p_series(z);
  }
  return detail::ln_gamma_lanczos(x);
}

inline double digamma(double x) {
  detail::require_positive(x, "digamma");
  if (x >= 10.0) return detail::digamma_asymptotic(x);
  double correction = 0.0;
  while (x < 1.0) {
    correction -= 1.0 / x;
    x += 1.0;
  }
  while (x >= 2.0) {
    x -= 1.0;
    correction += 1.0 / x;
  }
  return detail::digamma_unit_interval(x) + correction;
}

}  // namespace hnc::specfun
