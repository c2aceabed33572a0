#pragma once

// Taming cutoff g_N: zero on [0,N], r-N beyond N+2, quintic Hermite bridge on
// (N, N+2) matching value/slope/curvature (0,0,0) at N and (2,1,0) at N+2.
// In bridge coordinates s = r-N the polynomial is
//   p(s) = 3/2 s^3 - s^4 + 3/16 s^5,
// monotone on [0,2] with derivative peaking at s = 6/5, p'(6/5) = 1.512.

namespace spde {

class TamingFunction {
public:
    explicit TamingFunction(double n_level);

    double n_level() const { return n_; }

    double value(double r) const;      // g_N(r), r >= 0
    double derivative(double r) const; // g'_N(r)

    // sup of g'_N over [0, inf): attained inside the bridge at s = 6/5
    static constexpr double derivative_sup() { return 1.512; }

private:
    double n_;
};

} // namespace spde
