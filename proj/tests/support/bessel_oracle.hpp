#pragma once

#include <cmath>

// Extended-precision reference for the modified Bessel functions, independent
// of the production rational approximations: ascending power series up to
// x = 11, optimally truncated asymptotic series beyond. The worst reference
// error sits at the split point, about 3e-10 relative, well inside the 1e-9
// budget the production code is tested against.
namespace bessel_oracle {

inline constexpr long double egamma = 0.577215664901532860606512090082L;
inline constexpr long double pi_l = 3.141592653589793238462643383280L;
inline constexpr long double series_split = 11.0L;

inline long double i0(long double x) {
    const long double q = x * x / 4.0L;
    long double term = 1.0L, sum = 1.0L;
    for (int k = 0; k < 400; ++k) {
        term *= q / ((k + 1.0L) * (k + 1.0L));
        sum += term;
        if (term < 1e-25L * sum)
            break;
    }
    return sum;
}

inline long double i1(long double x) {
    const long double q = x * x / 4.0L;
    long double term = 1.0L, sum = 1.0L;
    for (int k = 0; k < 400; ++k) {
        term *= q / ((k + 1.0L) * (k + 2.0L));
        sum += term;
        if (term < 1e-25L * sum)
            break;
    }
    return (x / 2.0L) * sum;
}

// asymptotic tail sum_k a_k with a_{k+1} = a_k (4 nu^2 - (2k+1)^2)/(8x(k+1)),
// truncated at the smallest term
inline long double asymptotic_k(long double x, long double four_nu_sq) {
    long double term = 1.0L, sum = 1.0L, prev = 1e30L;
    for (int k = 0; k < 200; ++k) {
        const long double odd = 2.0L * k + 1.0L;
        term *= (four_nu_sq - odd * odd) / (8.0L * x * (k + 1.0L));
        if (std::abs(term) >= prev)
            break;
        sum += term;
        prev = std::abs(term);
        if (prev < 1e-25L)
            break;
    }
    return std::sqrt(pi_l / (2.0L * x)) * std::exp(-x) * sum;
}

inline long double k0(long double x) {
    if (x > series_split)
        return asymptotic_k(x, 0.0L);
    const long double q = x * x / 4.0L;
    long double term = 1.0L, h = 0.0L, sum = 0.0L;
    for (int k = 1; k < 400; ++k) {
        term *= q / (static_cast<long double>(k) * k);
        h += 1.0L / k;
        sum += term * h;
        if (term * h < 1e-25L * (std::abs(sum) + 1.0L))
            break;
    }
    return -(std::log(x / 2.0L) + egamma) * i0(x) + sum;
}

inline long double k1(long double x) {
    if (x > series_split)
        return asymptotic_k(x, 4.0L);
    const long double q = x * x / 4.0L;
    long double s = 1.0L;       // s_k = q^k / (k! (k+1)!)
    long double hk = 0.0L;      // H_k
    long double hk1 = 1.0L;     // H_{k+1}
    long double sum = s * (-2.0L * egamma + hk + hk1);
    for (int k = 1; k < 400; ++k) {
        s *= q / (static_cast<long double>(k) * (k + 1.0L));
        hk += 1.0L / k;
        hk1 += 1.0L / (k + 1.0L);
        const long double t = s * (-2.0L * egamma + hk + hk1);
        sum += t;
        if (std::abs(t) < 1e-25L * (std::abs(sum) + 1.0L))
            break;
    }
    return 1.0L / x + std::log(x / 2.0L) * i1(x) - (x / 4.0L) * sum;
}

} // namespace bessel_oracle
