#include "cstar/matrix.hpp"

#include <cmath>
#include <string>

namespace cstar {

namespace {

void require_finite(const std::vector<Complex>& data, const char* where) {
    for (const Complex& z : data) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(std::string(where) + ": non-finite entry");
        }
    }
}

}  // namespace

CMatrix::CMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
    if (rows <= 0 || cols <= 0) throw DimensionMismatch("CMatrix: nonpositive dimension");
}

CMatrix::CMatrix(int rows, int cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows <= 0 || cols <= 0) throw DimensionMismatch("CMatrix: nonpositive dimension");
    if (data_.size() != static_cast<size_t>(rows) * cols) {
        throw DimensionMismatch("CMatrix: entry count does not match dimensions");
    }
    require_finite(data_, "CMatrix");
}

CMatrix CMatrix::identity(int k) {
    CMatrix m(k, k);
    for (int i = 0; i < k; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::diagonal(const std::vector<Complex>& d) {
    const int k = static_cast<int>(d.size());
    CMatrix m(k, k);
    for (int i = 0; i < k; ++i) m(i, i) = d[static_cast<size_t>(i)];
    require_finite(m.data(), "CMatrix::diagonal");
    return m;
}

CMatrix adjoint(const CMatrix& a) {
    CMatrix r(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
    return r;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "operator+");
    CMatrix r = a;
    for (size_t i = 0; i < r.data().size(); ++i) r.data()[i] += b.data()[i];
    return r;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "operator-");
    CMatrix r = a;
    for (size_t i = 0; i < r.data().size(); ++i) r.data()[i] -= b.data()[i];
    return r;
}

CMatrix operator-(const CMatrix& a) {
    CMatrix r = a;
    for (Complex& z : r.data()) z = -z;
    return r;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("operator*: inner dimensions differ");
    CMatrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int l = 0; l < a.cols(); ++l) {
            const Complex ail = a(i, l);
            if (ail == Complex{}) continue;
            for (int j = 0; j < b.cols(); ++j) r(i, j) += ail * b(l, j);
        }
    }
    return r;
}

CMatrix operator*(Complex s, const CMatrix& a) {
    CMatrix r = a;
    for (Complex& z : r.data()) z *= s;
    return r;
}

CMatrix operator*(double s, const CMatrix& a) { return Complex(s, 0.0) * a; }

double frobenius_norm(const CMatrix& a) {
    double sum = 0.0;
    for (const Complex& z : a.data()) sum += std::norm(z);
    return std::sqrt(sum);
}

double max_abs_entry(const CMatrix& a) {
    double m = 0.0;
    for (const Complex& z : a.data()) m = std::max(m, std::abs(z));
    return m;
}

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* where) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch(std::string(where) + ": shape mismatch (" +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()) + ")");
    }
}

void require_square(const CMatrix& a, const char* where) {
    if (!a.square()) {
        throw DimensionMismatch(std::string(where) + ": matrix is not square");
    }
}

}  // namespace cstar
