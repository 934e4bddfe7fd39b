#pragma once
// Dense vector/matrix arithmetic, activation functions, and the central
// finite-difference engine behind every derivative-defined quantity.
// All numerics are 64-bit; values are validated finite at construction.

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "share/errors.hpp"

namespace share {

class DenseVector {
public:
    DenseVector() = default;
    explicit DenseVector(std::vector<double> values);
    DenseVector(std::initializer_list<double> values);

    static DenseVector zeros(std::size_t n);

    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    double operator[](std::size_t i) const { return values_[i]; }
    double at(std::size_t i) const;
    const std::vector<double>& values() const { return values_; }

    bool operator==(const DenseVector& other) const { return values_ == other.values_; }

private:
    std::vector<double> values_;
};

DenseVector add(const DenseVector& a, const DenseVector& b);
DenseVector sub(const DenseVector& a, const DenseVector& b);
DenseVector scale(const DenseVector& a, double k);
double dot(const DenseVector& a, const DenseVector& b);
double norm(const DenseVector& a);

class DenseMatrix {
public:
    DenseMatrix() = default;
    // Row-major entries, rows*cols of them.
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
    // From nested rows; every row must have the same length.
    explicit DenseMatrix(const std::vector<std::vector<double>>& rows);

    static DenseMatrix zeros(std::size_t rows, std::size_t cols);
    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    double at(std::size_t r, std::size_t c) const;
    const std::vector<double>& entries() const { return entries_; }

    DenseVector row(std::size_t r) const;
    DenseVector apply(const DenseVector& x) const;  // matrix-vector product
    DenseMatrix multiply(const DenseMatrix& rhs) const;
    double max_abs() const;

    bool operator==(const DenseMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> entries_;
};

enum class ActivationKind { identity, relu, sigmoid, tanh, binary_threshold };

struct Activation {
    ActivationKind kind = ActivationKind::identity;
    double threshold = 0.0;  // binary_threshold only
};

double apply_activation(const Activation& a, double z);

// Derivative of the activation at pre-activation z. binary_threshold is 0
// everywhere; when z sits exactly on the threshold, *at_threshold is set
// instead of guessing a subgradient.
double activation_derivative(const Activation& a, double z, bool* at_threshold = nullptr);

const char* activation_name(ActivationKind kind);
ActivationKind activation_kind_from_name(const std::string& name);

// Central-difference step policy: h_i = max(floor, rel*|x_i|).
struct FdStep {
    double floor = 1e-6;
    double rel = 1e-6;
};

using VectorFn = std::function<DenseVector(const DenseVector&)>;

// Jacobian by central differences, entry (j,i) = (f_j(x+h e_i) - f_j(x-h e_i)) / (2 h_i).
// Throws NonFiniteResult if f produces NaN/inf at any probe point.
DenseMatrix fd_jacobian(const VectorFn& f, const DenseVector& x, const FdStep& step = {});

}  // namespace share
