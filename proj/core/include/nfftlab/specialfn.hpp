#pragma once

namespace nfftlab {

// Modified Bessel function of the first kind, order 0. Throws std::domain_error
// for non-finite input and std::range_error when the result would overflow.
double bessel_i0(double x);

// Modified Bessel function of the first kind, order 1. Same error contract as bessel_i0.
double bessel_i1(double x);

// Bessel function of the first kind, order 1. Throws std::domain_error for non-finite input.
double bessel_j1(double x);

// Exponential integral E1(x) = int_x^inf e^{-t}/t dt. Throws std::domain_error for x <= 0.
double exp_int_e1(double x);

// Unnormalized cardinal sine sin(x)/x with sinc(0) = 1.
double sinc(double x);

}  // namespace nfftlab
