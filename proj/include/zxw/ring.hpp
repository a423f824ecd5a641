#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <variant>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

namespace zxw {

using BigInt = boost::multiprecision::cpp_int;

// numerator / 2^exponent, numerator odd or zero
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(long long n) : num_(n) { normalize(); }
    Dyadic(BigInt n, std::int64_t e) : num_(std::move(n)), exp_(e) { normalize(); }

    const BigInt& numerator() const { return num_; }
    std::int64_t exponent() const { return exp_; }
    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    Dyadic operator-() const { Dyadic r; r.num_ = -num_; r.exp_ = exp_; return r; }
    Dyadic& operator+=(const Dyadic& o);
    Dyadic& operator-=(const Dyadic& o) { return *this += -o; }
    Dyadic& operator*=(const Dyadic& o);
    friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
    friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
    friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }
    friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.exp_ == b.exp_ && a.num_ == b.num_; }

    // multiply by 2^k, k may be negative
    Dyadic scaled(std::int64_t k) const;
    double to_double() const;

    std::string str() const;
    static Dyadic parse(const std::string& s);

private:
    void normalize();

    BigInt num_ = 0;
    std::int64_t exp_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& d);

// c0 + c1 w + c2 w^2 + c3 w^3 with w = e^{i pi/4}, w^4 = -1
class Cyclo {
public:
    Cyclo() = default;
    Cyclo(long long n) { c_[0] = Dyadic(n); }
    Cyclo(Dyadic d) { c_[0] = std::move(d); }
    Cyclo(Dyadic a, Dyadic b, Dyadic c, Dyadic d) : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

    static Cyclo omega_pow(long long k);
    static Cyclo sqrt2();
    static Cyclo inv_sqrt2();
    static Cyclo half() { return Cyclo(Dyadic(1, 1)); }

    const Dyadic& coeff(int i) const { return c_[i]; }
    bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

    Cyclo operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    Cyclo conj() const { return {c_[0], -c_[3], -c_[2], -c_[1]}; }
    Cyclo scaled(std::int64_t k) const;
    std::complex<double> to_complex() const;
    std::string str() const;

private:
    std::array<Dyadic, 4> c_;
};

std::ostream& operator<<(std::ostream& os, const Cyclo& c);

} // namespace zxw

namespace Eigen {
template <>
struct NumTraits<zxw::Cyclo> : GenericNumTraits<zxw::Cyclo> {
    typedef zxw::Cyclo Real;
    typedef zxw::Cyclo NonInteger;
    typedef zxw::Cyclo Literal;
    typedef zxw::Cyclo Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 16,
        MulCost = 64
    };
    static inline int digits10() { return 0; }
};
} // namespace Eigen

namespace zxw {

inline Cyclo from_phase(long long k) { return Cyclo::omega_pow(k); }
inline std::complex<double> to_complex(const Cyclo& x) { return x.to_complex(); }

template <typename S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
using ExactMatrix = Mat<Cyclo>;
using FloatMatrix = Eigen::MatrixXcd;

template <typename S>
Mat<S> kron(const Mat<S>& a, const Mat<S>& b)
{
    Mat<S> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return r;
}

FloatMatrix to_float(const ExactMatrix& m);
bool exact_equal(const ExactMatrix& a, const ExactMatrix& b);
bool approx_equal(const FloatMatrix& a, const FloatMatrix& b, double tol = 1e-9);

// result of an interpretation in either mode
struct AnyMatrix {
    std::variant<ExactMatrix, FloatMatrix> value;

    bool is_exact() const { return value.index() == 0; }
    const ExactMatrix& exact() const { return std::get<0>(value); }
    FloatMatrix as_float() const { return is_exact() ? to_float(exact()) : std::get<1>(value); }
    Eigen::Index rows() const { return is_exact() ? exact().rows() : std::get<1>(value).rows(); }
    Eigen::Index cols() const { return is_exact() ? exact().cols() : std::get<1>(value).cols(); }
};

} // namespace zxw
