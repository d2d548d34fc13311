#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace bb {

// Hard cap on the ambient dimension. Keeps points allocation-free; the
// numeric suites stay well below this.
inline constexpr int kMaxDim = 16;

// Dimension-generic point/vector with value semantics.
class Vec {
public:
    Vec() : dim_(0) { data_.fill(0.0); }
    explicit Vec(int dim) : dim_(dim) {
        if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("Vec: bad dimension");
        data_.fill(0.0);
    }
    Vec(std::initializer_list<double> xs) : dim_(static_cast<int>(xs.size())) {
        if (dim_ > kMaxDim) throw std::invalid_argument("Vec: bad dimension");
        data_.fill(0.0);
        int i = 0;
        for (double x : xs) data_[i++] = x;
    }

    int dim() const { return dim_; }
    double operator[](int i) const { return data_[i]; }
    double& operator[](int i) { return data_[i]; }
    const double* data() const { return data_.data(); }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < dim_; ++i) data_[i] += o.data_[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int i = 0; i < dim_; ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Vec& operator*=(double s) {
        for (int i = 0; i < dim_; ++i) data_[i] *= s;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(Vec a, double s) { return a *= s; }
    friend Vec operator*(double s, Vec a) { return a *= s; }

private:
    std::array<double, kMaxDim> data_;
    int dim_;
};

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }

inline double dist2(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

inline double dist(const Vec& a, const Vec& b) { return std::sqrt(dist2(a, b)); }

inline Vec normalized(const Vec& a) {
    const double n = norm(a);
    if (n == 0.0) throw std::domain_error("normalized: zero vector");
    return a * (1.0 / n);
}

inline Vec zero_vec(int dim) { return Vec(dim); }

inline Vec unit_axis(int dim, int axis) {
    Vec u(dim);
    u[axis] = 1.0;
    return u;
}

// Closed Euclidean ball; radius 0 denotes a point.
struct BallSpec {
    Vec center;
    double radius = 0.0;
};

// Finite labeled point set with the common ball radius r. Duplicates are
// permitted; geometric routines deduplicate as needed.
struct PointConfig {
    int dim = 0;
    double radius = 0.0;
    std::vector<Vec> points;

    PointConfig() = default;
    PointConfig(int d, double r, std::vector<Vec> pts)
        : dim(d), radius(r), points(std::move(pts)) {
        validate();
    }

    void validate() const {
        if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("PointConfig: bad dimension");
        if (!(radius > 0.0)) throw std::invalid_argument("PointConfig: radius must be positive");
        if (points.empty()) throw std::invalid_argument("PointConfig: needs at least one point");
        for (const Vec& p : points)
            if (p.dim() != dim) throw std::invalid_argument("PointConfig: dimension mismatch");
    }
};

// Tolerances shared across the numeric stack. All strictly positive.
struct Tolerance {
    double exact_eps = 1e-9;       // exact-predicate epsilon
    double quad_rel = 1e-10;       // quadrature relative tolerance
    double opt_tol = 1e-8;         // optimizer stopping tolerance
    double mc_confidence = 3.0;    // stderr multiplier for MC verdicts
};

}  // namespace bb
