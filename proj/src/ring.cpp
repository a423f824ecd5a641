#include "zxw/ring.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace zxw {

void Dyadic::normalize()
{
    if (num_.is_zero()) {
        exp_ = 0;
        return;
    }
    if (exp_ > 0) {
        std::int64_t tz = static_cast<std::int64_t>(boost::multiprecision::lsb(abs(num_)));
        std::int64_t k = std::min(tz, exp_);
        if (k > 0) {
            num_ >>= static_cast<unsigned>(k);
            exp_ -= k;
        }
    } else if (exp_ < 0) {
        num_ <<= static_cast<unsigned>(-exp_);
        exp_ = 0;
    }
}

Dyadic& Dyadic::operator+=(const Dyadic& o)
{
    if (o.num_.is_zero())
        return *this;
    if (num_.is_zero())
        return *this = o;
    if (exp_ == o.exp_) {
        num_ += o.num_;
    } else if (exp_ > o.exp_) {
        num_ += o.num_ << static_cast<unsigned>(exp_ - o.exp_);
    } else {
        num_ = (num_ << static_cast<unsigned>(o.exp_ - exp_)) + o.num_;
        exp_ = o.exp_;
    }
    normalize();
    return *this;
}

Dyadic& Dyadic::operator*=(const Dyadic& o)
{
    if (num_.is_zero())
        return *this;
    if (o.num_.is_zero())
        return *this = Dyadic();
    num_ *= o.num_;
    exp_ += o.exp_;
    normalize();
    return *this;
}

Dyadic Dyadic::scaled(std::int64_t k) const
{
    if (num_.is_zero())
        return *this;
    Dyadic r;
    r.num_ = num_;
    r.exp_ = exp_ - k;
    r.normalize();
    return r;
}

double Dyadic::to_double() const
{
    return std::ldexp(num_.convert_to<double>(), static_cast<int>(-exp_));
}

std::string Dyadic::str() const
{
    std::string s = num_.str();
    if (exp_ != 0)
        s += "/2^" + std::to_string(exp_);
    return s;
}

Dyadic Dyadic::parse(const std::string& s)
{
    auto slash = s.find('/');
    std::string head = s.substr(0, slash);
    std::int64_t e = 0;
    if (slash != std::string::npos) {
        std::string tail = s.substr(slash + 1);
        if (tail.rfind("2^", 0) != 0)
            throw std::invalid_argument("Dyadic::parse: denominator must be 2^k in '" + s + "'");
        try {
            size_t used = 0;
            e = std::stoll(tail.substr(2), &used);
            if (used != tail.size() - 2 || e < 0)
                throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("Dyadic::parse: bad exponent in '" + s + "'");
        }
    }
    if (head.empty() || head == "-" || head == "+")
        throw std::invalid_argument("Dyadic::parse: missing numerator in '" + s + "'");
    size_t start = (head[0] == '-' || head[0] == '+') ? 1 : 0;
    for (size_t i = start; i < head.size(); ++i)
        if (head[i] < '0' || head[i] > '9')
            throw std::invalid_argument("Dyadic::parse: bad numerator in '" + s + "'");
    BigInt n(head[0] == '+' ? head.substr(1) : head);
    return Dyadic(n, e);
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.str(); }

Cyclo Cyclo::omega_pow(long long k)
{
    k %= 8;
    if (k < 0)
        k += 8;
    Cyclo r;
    r.c_[k % 4] = Dyadic(k < 4 ? 1 : -1);
    return r;
}

Cyclo Cyclo::sqrt2() { return {Dyadic(0), Dyadic(1), Dyadic(0), Dyadic(-1)}; }

Cyclo Cyclo::inv_sqrt2() { return {Dyadic(0), Dyadic(1, 1), Dyadic(0), Dyadic(-1, 1)}; }

Cyclo& Cyclo::operator+=(const Cyclo& o)
{
    for (int i = 0; i < 4; ++i)
        c_[i] += o.c_[i];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o)
{
    for (int i = 0; i < 4; ++i)
        c_[i] -= o.c_[i];
    return *this;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b)
{
    Cyclo r;
    for (int i = 0; i < 4; ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (int j = 0; j < 4; ++j) {
            if (b.c_[j].is_zero())
                continue;
            Dyadic p = a.c_[i] * b.c_[j];
            int k = i + j;
            if (k < 4)
                r.c_[k] += p;
            else
                r.c_[k - 4] -= p;
        }
    }
    return r;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) { return *this = *this * o; }

Cyclo Cyclo::scaled(std::int64_t k) const
{
    return {c_[0].scaled(k), c_[1].scaled(k), c_[2].scaled(k), c_[3].scaled(k)};
}

std::complex<double> Cyclo::to_complex() const
{
    const double h = std::sqrt(0.5);
    const std::complex<double> w[4] = {{1, 0}, {h, h}, {0, 1}, {-h, h}};
    std::complex<double> r = 0;
    for (int i = 0; i < 4; ++i)
        if (!c_[i].is_zero())
            r += c_[i].to_double() * w[i];
    return r;
}

std::string Cyclo::str() const
{
    static const char* names[4] = {"", "w", "w^2", "w^3"};
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < 4; ++i) {
        if (c_[i].is_zero())
            continue;
        std::string v = c_[i].str();
        if (any)
            os << (v[0] == '-' ? " - " : " + ") << (v[0] == '-' ? v.substr(1) : v);
        else
            os << v;
        if (i > 0)
            os << "*" << names[i];
        any = true;
    }
    if (!any)
        os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclo& c) { return os << c.str(); }

FloatMatrix to_float(const ExactMatrix& m)
{
    FloatMatrix r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            r(i, j) = m(i, j).to_complex();
    return r;
}

bool exact_equal(const ExactMatrix& a, const ExactMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j))
                return false;
    return true;
}

bool approx_equal(const FloatMatrix& a, const FloatMatrix& b, double tol)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (std::abs(a(i, j) - b(i, j)) > tol)
                return false;
    return true;
}

} // namespace zxw
