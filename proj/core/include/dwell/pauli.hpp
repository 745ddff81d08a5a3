// pauli.hpp -- 2x2 operator basis for the left/right (horizontal) space.
//
// Convention: sigma3 = +1 is the left well, -1 the right well.

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace dwell {

using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Complex = std::complex<double>;

inline const Mat2& pauli(int i)
{
    static const Mat2 s0 = Mat2::Identity();
    static const Mat2 s1 = (Mat2() << 0, 1, 1, 0).finished();
    static const Mat2 s2 = (Mat2() << 0, Complex(0, -1), Complex(0, 1), 0).finished();
    static const Mat2 s3 = (Mat2() << 1, 0, 0, -1).finished();
    static const Mat2* table[4] = { &s0, &s1, &s2, &s3 };
    return *table[i];
}

inline Mat4 kron2(const Mat2& a, const Mat2& b)
{
    Mat4 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

// sigma_i (x) sigma_j, cached
inline const Mat4& pauli_pair(int i, int j)
{
    static const Mat4 table[16] = {
        kron2(pauli(0), pauli(0)), kron2(pauli(0), pauli(1)), kron2(pauli(0), pauli(2)), kron2(pauli(0), pauli(3)),
        kron2(pauli(1), pauli(0)), kron2(pauli(1), pauli(1)), kron2(pauli(1), pauli(2)), kron2(pauli(1), pauli(3)),
        kron2(pauli(2), pauli(0)), kron2(pauli(2), pauli(1)), kron2(pauli(2), pauli(2)), kron2(pauli(2), pauli(3)),
        kron2(pauli(3), pauli(0)), kron2(pauli(3), pauli(1)), kron2(pauli(3), pauli(2)), kron2(pauli(3), pauli(3)),
    };
    return table[4 * i + j];
}

} // namespace dwell
