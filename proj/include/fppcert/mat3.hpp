#pragma once

#include <array>
#include <cstddef>

namespace fppcert {

/// 3x3 matrix over an exact coefficient ring. No division is ever needed.
template <class T>
struct Mat3 {
    std::array<std::array<T, 3>, 3> m;

    T& operator()(std::size_t i, std::size_t j) { return m[i][j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return m[i][j]; }

    static Mat3 diagonal(const T& zero, const T& d)
    {
        Mat3 r{{{{zero, zero, zero}, {zero, zero, zero}, {zero, zero, zero}}}};
        for (std::size_t i = 0; i < 3; ++i)
            r.m[i][i] = d;
        return r;
    }

    template <class F>
    auto map(F&& f) const -> Mat3<decltype(f(m[0][0]))>
    {
        using U = decltype(f(m[0][0]));
        Mat3<U> r{{{{f(m[0][0]), f(m[0][1]), f(m[0][2])},
                    {f(m[1][0]), f(m[1][1]), f(m[1][2])},
                    {f(m[2][0]), f(m[2][1]), f(m[2][2])}}}};
        return r;
    }

    friend Mat3 operator*(const Mat3& a, const Mat3& b)
    {
        Mat3 r = a;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                T sum = a.m[i][0] * b.m[0][j];
                sum = sum + a.m[i][1] * b.m[1][j];
                sum = sum + a.m[i][2] * b.m[2][j];
                r.m[i][j] = sum;
            }
        return r;
    }

    friend Mat3 operator*(const T& c, const Mat3& a)
    {
        return a.map([&](const T& x) -> T { return c * x; });
    }

    friend bool operator==(const Mat3& a, const Mat3& b) { return a.m == b.m; }
};

/// Cofactor expansion along the first row.
template <class T>
T det(const Mat3<T>& a)
{
    const auto& m = a.m;
    T minor0 = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    T minor1 = m[1][0] * m[2][2] - m[1][2] * m[2][0];
    T minor2 = m[1][0] * m[2][1] - m[1][1] * m[2][0];
    return m[0][0] * minor0 - m[0][1] * minor1 + m[0][2] * minor2;
}

}  // namespace fppcert
