// mat2.hpp — dense complex 2x2 matrices for the per-mode spin algebra.

#pragma once

#include <cmath>
#include <complex>

#include "dephasim/types.hpp"

namespace dephasim {

// Row-major [[a, b], [c, d]].
struct Mat2 {
    cplx a{1.0}, b{0.0}, c{0.0}, d{1.0};

    static Mat2 identity() { return {}; }
};

inline Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

inline Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}

inline Mat2 adjoint(const Mat2& m) {
    return {std::conj(m.a), std::conj(m.c), std::conj(m.b), std::conj(m.d)};
}

inline cplx trace(const Mat2& m) { return m.a + m.d; }

inline cplx det(const Mat2& m) { return m.a * m.d - m.b * m.c; }

inline double max_abs_diff(const Mat2& x, const Mat2& y) {
    double md = std::abs(x.a - y.a);
    md = std::max(md, std::abs(x.b - y.b));
    md = std::max(md, std::abs(x.c - y.c));
    md = std::max(md, std::abs(x.d - y.d));
    return md;
}

// max |M M† - I|, zero for a unitary matrix.
inline double unitarity_defect(const Mat2& m) {
    return max_abs_diff(m * adjoint(m), Mat2::identity());
}

}  // namespace dephasim
