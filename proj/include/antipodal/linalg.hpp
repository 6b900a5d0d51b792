#pragma once

// Small dense helpers over std::vector<double>. Dimensions here are tiny
// (n is the ambient dimension of the bodies), so nothing fancier is needed.

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace antipodal {

using Vector = std::vector<double>;

inline double dot(std::span<const double> a, std::span<const double> b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

inline double norm_inf(std::span<const double> a)
{
    double m = 0.0;
    for (double v : a)
        m = std::fmax(m, std::fabs(v));
    return m;
}

inline Vector scaled(std::span<const double> a, double s)
{
    Vector out(a.begin(), a.end());
    for (double& v : out)
        v *= s;
    return out;
}

inline Vector negated(std::span<const double> a)
{
    Vector out(a.begin(), a.end());
    for (double& v : out)
        v = -v;
    return out;
}

/// a + s * b
inline Vector axpy(std::span<const double> a, double s, std::span<const double> b)
{
    Vector out(a.begin(), a.end());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += s * b[i];
    return out;
}

inline double distance(std::span<const double> a, std::span<const double> b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

/// Square row-major matrix.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1.0;
        return m;
    }

    std::size_t size() const { return n_; }
    double& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    std::span<const double> row(std::size_t r) const { return {data_.data() + r * n_, n_}; }

    Vector apply(std::span<const double> x) const
    {
        Vector y(n_, 0.0);
        for (std::size_t r = 0; r < n_; ++r)
            y[r] = dot(row(r), x);
        return y;
    }

    /// Qᵀ y
    Vector apply_transpose(std::span<const double> y) const
    {
        Vector x(n_, 0.0);
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t c = 0; c < n_; ++c)
                x[c] += data_[r * n_ + c] * y[r];
        return x;
    }

    /// Determinant by partial-pivot elimination.
    double determinant() const
    {
        std::vector<double> a = data_;
        double det = 1.0;
        for (std::size_t k = 0; k < n_; ++k) {
            std::size_t piv = k;
            for (std::size_t r = k + 1; r < n_; ++r)
                if (std::fabs(a[r * n_ + k]) > std::fabs(a[piv * n_ + k]))
                    piv = r;
            if (a[piv * n_ + k] == 0.0)
                return 0.0;
            if (piv != k) {
                for (std::size_t c = 0; c < n_; ++c)
                    std::swap(a[k * n_ + c], a[piv * n_ + c]);
                det = -det;
            }
            const double p = a[k * n_ + k];
            det *= p;
            for (std::size_t r = k + 1; r < n_; ++r) {
                const double f = a[r * n_ + k] / p;
                for (std::size_t c = k; c < n_; ++c)
                    a[r * n_ + c] -= f * a[k * n_ + c];
            }
        }
        return det;
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

} // namespace antipodal
