#pragma once

#include <complex>

namespace altwalk {

using cplx = std::complex<double>;

/// |z|^2 without the sqrt of std::abs.
constexpr double abs2(cplx z) { return z.real() * z.real() + z.imag() * z.imag(); }

// Textbook complex product. Avoids libstdc++'s NaN-recovering __muldc3
// call in hot loops; amplitudes here are always finite.
constexpr cplx cmul(cplx a, cplx b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

}  // namespace altwalk
