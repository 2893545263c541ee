// linalg.hpp
// Minimal dense complex linear algebra for the fixed 2x2 / 4x4 matrices used
// throughout: Kronecker products, Hermitian eigenvalues, traces, partial
// transpose and partial trace. Everything is value-semantic and pure.

#pragma once

#include <array>
#include <complex>

namespace bellnoise {

using cdouble = std::complex<double>;

struct Mat2c {
    std::array<cdouble, 4> e{};  // row-major

    cdouble& operator()(int row, int col) { return e[2 * row + col]; }
    const cdouble& operator()(int row, int col) const { return e[2 * row + col]; }

    static Mat2c identity();
};

struct Mat4c {
    std::array<cdouble, 16> e{};  // row-major

    cdouble& operator()(int row, int col) { return e[4 * row + col]; }
    const cdouble& operator()(int row, int col) const { return e[4 * row + col]; }

    static Mat4c identity();
};

Mat2c pauli_x();
Mat2c pauli_z();

Mat2c operator+(const Mat2c& a, const Mat2c& b);
Mat2c operator-(const Mat2c& a, const Mat2c& b);
Mat2c operator*(cdouble s, const Mat2c& m);
Mat2c operator*(const Mat2c& a, const Mat2c& b);

Mat4c operator+(const Mat4c& a, const Mat4c& b);
Mat4c operator-(const Mat4c& a, const Mat4c& b);
Mat4c operator*(cdouble s, const Mat4c& m);
Mat4c operator*(const Mat4c& a, const Mat4c& b);

cdouble trace(const Mat2c& m);
cdouble trace(const Mat4c& m);

Mat2c adjoint(const Mat2c& m);
Mat4c adjoint(const Mat4c& m);

// Largest absolute entry of m - m^dagger; zero for exactly Hermitian input.
double hermiticity_deviation(const Mat4c& m);

// Kronecker product in row-major block layout: a(0,0)*b is the top-left
// 2x2 block of the result.
Mat4c kron(const Mat2c& a, const Mat2c& b);

// Eigenvalues of a Hermitian 4x4 matrix, sorted nonincreasing. Input whose
// hermiticity deviation exceeds 1e-12 is rejected with the deviation named.
std::array<double, 4> hermitian_eigenvalues(const Mat4c& m);

// Tr(a*b), accumulated entrywise without forming the product.
cdouble trace_product(const Mat4c& a, const Mat4c& b);

// Transpose over the first qubit index: entry (ij,kl) -> (kj,il).
Mat4c partial_transpose_first(const Mat4c& m);

enum class Subsystem { A, B };

// Traces out the given subsystem (A is the first qubit), returning the
// reduced 2x2 matrix of the remaining one.
Mat2c partial_trace(const Mat4c& m, Subsystem traced_out);

}  // namespace bellnoise
