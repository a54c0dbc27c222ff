#pragma once

#include <complex>
#include <vector>

#include "cstar/errors.hpp"

namespace cstar {

using Complex = std::complex<double>;

// Dense complex matrix, row-major. Entries are validated to be finite on
// construction from data; dimensions are fixed for the lifetime of the value.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(int rows, int cols);  // zero-filled
    CMatrix(int rows, int cols, std::vector<Complex> data);

    static CMatrix identity(int k);
    static CMatrix diagonal(const std::vector<Complex>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Complex& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Complex& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    const std::vector<Complex>& data() const { return data_; }
    std::vector<Complex>& data() { return data_; }

    bool operator==(const CMatrix& other) const = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Complex> data_;
};

CMatrix adjoint(const CMatrix& a);

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(Complex s, const CMatrix& a);
CMatrix operator*(double s, const CMatrix& a);

double frobenius_norm(const CMatrix& a);
double max_abs_entry(const CMatrix& a);

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* where);
void require_square(const CMatrix& a, const char* where);

}  // namespace cstar
