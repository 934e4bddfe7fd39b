#include "share/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace share {

namespace {

void require_finite(const std::vector<double>& values, const char* what) {
    for (double v : values) {
        if (!std::isfinite(v)) throw NonFiniteResult(std::string(what));
    }
}

}  // namespace

DenseVector::DenseVector(std::vector<double> values) : values_(std::move(values)) {
    require_finite(values_, "vector entry");
}

DenseVector::DenseVector(std::initializer_list<double> values) : values_(values) {
    require_finite(values_, "vector entry");
}

DenseVector DenseVector::zeros(std::size_t n) {
    return DenseVector(std::vector<double>(n, 0.0));
}

double DenseVector::at(std::size_t i) const {
    if (i >= values_.size()) {
        throw IndexOutOfRange("vector index " + std::to_string(i) + " of " + std::to_string(values_.size()));
    }
    return values_[i];
}

DenseVector add(const DenseVector& a, const DenseVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector add " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return DenseVector(std::move(out));
}

DenseVector sub(const DenseVector& a, const DenseVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sub " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return DenseVector(std::move(out));
}

DenseVector scale(const DenseVector& a, double k) {
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * k;
    return DenseVector(std::move(out));
}

double dot(const DenseVector& a, const DenseVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const DenseVector& a) {
    return std::sqrt(dot(a, a));
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw DimensionMismatch("matrix entries " + std::to_string(entries_.size()) + " for " +
                                std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    require_finite(entries_, "matrix entry");
}

DenseMatrix::DenseMatrix(const std::vector<std::vector<double>>& rows) {
    rows_ = rows.size();
    cols_ = rows.empty() ? 0 : rows.front().size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged matrix rows");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
    require_finite(entries_, "matrix entry");
}

DenseMatrix DenseMatrix::zeros(std::size_t rows, std::size_t cols) {
    return DenseMatrix(rows, cols, std::vector<double>(rows * cols, 0.0));
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    std::vector<double> e(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
    return DenseMatrix(n, n, std::move(e));
}

double DenseMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) {
        throw IndexOutOfRange("matrix index (" + std::to_string(r) + "," + std::to_string(c) + ") of " +
                              std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    return entries_[r * cols_ + c];
}

DenseVector DenseMatrix::row(std::size_t r) const {
    if (r >= rows_) throw IndexOutOfRange("matrix row " + std::to_string(r) + " of " + std::to_string(rows_));
    return DenseVector(std::vector<double>(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                           entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)));
}

DenseVector DenseMatrix::apply(const DenseVector& x) const {
    if (x.size() != cols_) {
        throw DimensionMismatch("matrix " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                " applied to vector of " + std::to_string(x.size()));
    }
    std::vector<double> out(rows_, 0.0);
    for (std::size_t r = 0; r < rows_; ++r) {
        double s = 0.0;
        for (std::size_t c = 0; c < cols_; ++c) s += entries_[r * cols_ + c] * x[c];
        out[r] = s;
    }
    return DenseVector(std::move(out));
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw DimensionMismatch("matrix product " + std::to_string(rows_) + "x" + std::to_string(cols_) + " * " +
                                std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
    }
    std::vector<double> out(rows_ * rhs.cols_, 0.0);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const double lhs = entries_[r * cols_ + k];
            if (lhs == 0.0) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                out[r * rhs.cols_ + c] += lhs * rhs.entries_[k * rhs.cols_ + c];
            }
        }
    }
    return DenseMatrix(rows_, rhs.cols_, std::move(out));
}

double DenseMatrix::max_abs() const {
    double m = 0.0;
    for (double v : entries_) m = std::max(m, std::abs(v));
    return m;
}

double apply_activation(const Activation& a, double z) {
    switch (a.kind) {
        case ActivationKind::identity: return z;
        case ActivationKind::relu: return z > 0.0 ? z : 0.0;
        case ActivationKind::sigmoid: return 1.0 / (1.0 + std::exp(-z));
        case ActivationKind::tanh: return std::tanh(z);
        case ActivationKind::binary_threshold: return z > a.threshold ? 1.0 : 0.0;
    }
    throw InvalidParams("unhandled activation kind");
}

double activation_derivative(const Activation& a, double z, bool* at_threshold) {
    switch (a.kind) {
        case ActivationKind::identity: return 1.0;
        case ActivationKind::relu: return z > 0.0 ? 1.0 : 0.0;
        case ActivationKind::sigmoid: {
            const double s = 1.0 / (1.0 + std::exp(-z));
            return s * (1.0 - s);
        }
        case ActivationKind::tanh: {
            const double t = std::tanh(z);
            return 1.0 - t * t;
        }
        case ActivationKind::binary_threshold:
            if (z == a.threshold && at_threshold != nullptr) *at_threshold = true;
            return 0.0;
    }
    throw InvalidParams("unhandled activation kind");
}

const char* activation_name(ActivationKind kind) {
    switch (kind) {
        case ActivationKind::identity: return "identity";
        case ActivationKind::relu: return "relu";
        case ActivationKind::sigmoid: return "sigmoid";
        case ActivationKind::tanh: return "tanh";
        case ActivationKind::binary_threshold: return "binary_threshold";
    }
    throw InvalidParams("unhandled activation kind");
}

ActivationKind activation_kind_from_name(const std::string& name) {
    if (name == "identity") return ActivationKind::identity;
    if (name == "relu") return ActivationKind::relu;
    if (name == "sigmoid") return ActivationKind::sigmoid;
    if (name == "tanh") return ActivationKind::tanh;
    if (name == "binary_threshold") return ActivationKind::binary_threshold;
    throw UnknownLabel("activation '" + name + "'");
}

DenseMatrix fd_jacobian(const VectorFn& f, const DenseVector& x, const FdStep& step) {
    const std::size_t n = x.size();
    std::size_t m = 0;
    std::vector<double> entries;

    for (std::size_t i = 0; i < n; ++i) {
        const double h = std::max(step.floor, step.rel * std::abs(x[i]));

        std::vector<double> plus = x.values();
        std::vector<double> minus = x.values();
        plus[i] += h;
        minus[i] -= h;

        DenseVector fp, fm;
        try {
            fp = f(DenseVector(std::move(plus)));
            fm = f(DenseVector(std::move(minus)));
        } catch (const NonFiniteResult&) {
            throw NonFiniteResult("probe of component " + std::to_string(i));
        }
        if (fp.size() != fm.size()) throw DimensionMismatch("probe output dimension changed");

        if (i == 0) {
            m = fp.size();
            entries.assign(m * n, 0.0);
        } else if (fp.size() != m) {
            throw DimensionMismatch("probe output dimension changed");
        }

        for (std::size_t j = 0; j < m; ++j) {
            const double d = (fp[j] - fm[j]) / (2.0 * h);
            if (!std::isfinite(d)) throw NonFiniteResult("difference quotient (" + std::to_string(j) + "," + std::to_string(i) + ")");
            entries[j * n + i] = d;
        }
    }
    if (n == 0) return DenseMatrix(0, 0, {});
    return DenseMatrix(m, n, std::move(entries));
}

}  // namespace share
