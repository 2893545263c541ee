#include "bellnoise/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bellnoise {

namespace {

constexpr double kHermitianTol = 1e-12;

// Cyclic Jacobi for a real symmetric n x n matrix, n <= 8. Rotations zero
// one off-diagonal pair at a time; the diagonal converges to the
// eigenvalues. Off-diagonal sums shrink quadratically, so the sweep cap is
// never reached in practice.
void jacobi_eigenvalues(std::array<std::array<double, 8>, 8>& a, int n,
                        std::array<double, 8>& d) {
    std::array<double, 8> b{};
    std::array<double, 8> z{};
    for (int i = 0; i < n; ++i) {
        b[i] = d[i] = a[i][i];
        z[i] = 0.0;
    }
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int ip = 0; ip < n - 1; ++ip)
            for (int iq = ip + 1; iq < n; ++iq) off += std::abs(a[ip][iq]);
        if (off == 0.0) return;
        // Skip tiny rotations during the first sweeps only.
        const double thresh = sweep < 3 ? 0.2 * off / (n * n) : 0.0;
        for (int ip = 0; ip < n - 1; ++ip) {
            for (int iq = ip + 1; iq < n; ++iq) {
                const double g = 100.0 * std::abs(a[ip][iq]);
                if (sweep > 3 && std::abs(d[ip]) + g == std::abs(d[ip]) &&
                    std::abs(d[iq]) + g == std::abs(d[iq])) {
                    a[ip][iq] = 0.0;
                } else if (std::abs(a[ip][iq]) > thresh) {
                    double h = d[iq] - d[ip];
                    double t;
                    if (std::abs(h) + g == std::abs(h)) {
                        t = a[ip][iq] / h;
                    } else {
                        const double theta = 0.5 * h / a[ip][iq];
                        t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                        if (theta < 0.0) t = -t;
                    }
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    const double tau = s / (1.0 + c);
                    h = t * a[ip][iq];
                    z[ip] -= h;
                    z[iq] += h;
                    d[ip] -= h;
                    d[iq] += h;
                    a[ip][iq] = 0.0;
                    auto rotate = [&](double& x, double& y) {
                        const double gx = x;
                        const double hy = y;
                        x = gx - s * (hy + gx * tau);
                        y = hy + s * (gx - hy * tau);
                    };
                    for (int j = 0; j < ip; ++j) rotate(a[j][ip], a[j][iq]);
                    for (int j = ip + 1; j < iq; ++j) rotate(a[ip][j], a[j][iq]);
                    for (int j = iq + 1; j < n; ++j) rotate(a[ip][j], a[iq][j]);
                }
            }
        }
        for (int i = 0; i < n; ++i) {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
    }
    throw std::runtime_error("jacobi_eigenvalues: no convergence in 64 sweeps");
}

}  // namespace

Mat2c Mat2c::identity() {
    Mat2c m;
    m(0, 0) = m(1, 1) = 1.0;
    return m;
}

Mat4c Mat4c::identity() {
    Mat4c m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
}

Mat2c pauli_x() {
    Mat2c m;
    m(0, 1) = m(1, 0) = 1.0;
    return m;
}

Mat2c pauli_z() {
    Mat2c m;
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

Mat2c operator+(const Mat2c& a, const Mat2c& b) {
    Mat2c r;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

Mat2c operator-(const Mat2c& a, const Mat2c& b) {
    Mat2c r;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

Mat2c operator*(cdouble s, const Mat2c& m) {
    Mat2c r;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = s * m.e[i];
    return r;
}

Mat2c operator*(const Mat2c& a, const Mat2c& b) {
    Mat2c r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) r(i, j) += a(i, k) * b(k, j);
    return r;
}

Mat4c operator+(const Mat4c& a, const Mat4c& b) {
    Mat4c r;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

Mat4c operator-(const Mat4c& a, const Mat4c& b) {
    Mat4c r;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

Mat4c operator*(cdouble s, const Mat4c& m) {
    Mat4c r;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = s * m.e[i];
    return r;
}

Mat4c operator*(const Mat4c& a, const Mat4c& b) {
    Mat4c r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) r(i, j) += a(i, k) * b(k, j);
    return r;
}

cdouble trace(const Mat2c& m) { return m(0, 0) + m(1, 1); }

cdouble trace(const Mat4c& m) { return m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3); }

Mat2c adjoint(const Mat2c& m) {
    Mat2c r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = std::conj(m(j, i));
    return r;
}

Mat4c adjoint(const Mat4c& m) {
    Mat4c r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = std::conj(m(j, i));
    return r;
}

double hermiticity_deviation(const Mat4c& m) {
    double dev = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            dev = std::max(dev, std::abs(m(i, j) - std::conj(m(j, i))));
    return dev;
}

Mat4c kron(const Mat2c& a, const Mat2c& b) {
    Mat4c r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

std::array<double, 4> hermitian_eigenvalues(const Mat4c& m) {
    const double dev = hermiticity_deviation(m);
    if (dev > kHermitianTol) {
        std::ostringstream msg;
        msg << "hermitian_eigenvalues: matrix is not Hermitian, max |m - m^H| = "
            << dev;
        throw std::invalid_argument(msg.str());
    }

    // Average away sub-tolerance asymmetry so the embedding below is exactly
    // symmetric, then diagonalize the real 8x8 [[Re,-Im],[Im,Re]], whose
    // spectrum is that of m with every eigenvalue doubled.
    const Mat4c h = 0.5 * (m + adjoint(m));
    std::array<std::array<double, 8>, 8> s{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const double re = h(i, j).real();
            const double im = h(i, j).imag();
            s[i][j] = re;
            s[i][j + 4] = -im;
            s[i + 4][j] = im;
            s[i + 4][j + 4] = re;
        }
    }
    std::array<double, 8> d{};
    jacobi_eigenvalues(s, 8, d);
    std::sort(d.begin(), d.end(), std::greater<>());
    return {d[0], d[2], d[4], d[6]};
}

cdouble trace_product(const Mat4c& a, const Mat4c& b) {
    cdouble t = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) t += a(i, k) * b(k, i);
    return t;
}

Mat4c partial_transpose_first(const Mat4c& m) {
    Mat4c r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    r(2 * i + j, 2 * k + l) = m(2 * k + j, 2 * i + l);
    return r;
}

Mat2c partial_trace(const Mat4c& m, Subsystem traced_out) {
    Mat2c r;
    if (traced_out == Subsystem::A) {
        for (int j = 0; j < 2; ++j)
            for (int l = 0; l < 2; ++l)
                r(j, l) = m(j, l) + m(j + 2, l + 2);
    } else {
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 2; ++k)
                r(i, k) = m(2 * i, 2 * k) + m(2 * i + 1, 2 * k + 1);
    }
    return r;
}

}  // namespace bellnoise
