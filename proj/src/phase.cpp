#include "zxw/phase.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zxw {

namespace {

const double kPi = 3.14159265358979323846;

std::string fmt_double(double x)
{
    std::ostringstream os;
    os.precision(17);
    os << x;
    std::string s = os.str();
    if (s.find_first_of(".eE") == std::string::npos && s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
        s += ".0";
    return s;
}

} // namespace

Phase Phase::pi(std::int64_t p, std::int64_t q)
{
    if (q == 0)
        throw std::invalid_argument("Phase::pi: zero denominator");
    Phase r;
    r.p_ = p;
    r.q_ = q;
    r.normalize();
    return r;
}

Phase Phase::radians(double x)
{
    if (!std::isfinite(x))
        throw std::invalid_argument("Phase::radians: non-finite angle");
    Phase r;
    r.exact_ = false;
    r.rad_ = x;
    r.normalize();
    return r;
}

Phase Phase::var(const std::string& name, std::int64_t coeff)
{
    Phase r;
    if (coeff != 0)
        r.coeffs_[name] = coeff;
    return r;
}

void Phase::normalize()
{
    if (exact_) {
        if (q_ < 0) {
            q_ = -q_;
            p_ = -p_;
        }
        std::int64_t g = std::gcd(p_, q_);
        if (g > 1) {
            p_ /= g;
            q_ /= g;
        }
        std::int64_t m = 2 * q_;
        p_ %= m;
        if (p_ < 0)
            p_ += m;
        if (p_ == 0)
            q_ = 1;
    } else {
        rad_ = std::fmod(rad_, 2 * kPi);
        if (rad_ < 0)
            rad_ += 2 * kPi;
        if (rad_ >= 2 * kPi)
            rad_ = 0.0;
    }
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

std::optional<int> Phase::pi4_multiple() const
{
    if (!exact_ || !coeffs_.empty())
        return std::nullopt;
    if (4 % q_ != 0)
        return std::nullopt;
    return static_cast<int>(p_ * (4 / q_));
}

double Phase::constant_radians() const
{
    return exact_ ? kPi * static_cast<double>(p_) / static_cast<double>(q_) : rad_;
}

double Phase::to_radians() const
{
    if (!coeffs_.empty())
        throw std::invalid_argument("Phase::to_radians: free variable " + coeffs_.begin()->first);
    return constant_radians();
}

Phase Phase::operator-() const
{
    Phase r = *this;
    r.p_ = -r.p_;
    r.rad_ = -r.rad_;
    for (auto& [k, v] : r.coeffs_)
        v = -v;
    r.normalize();
    return r;
}

Phase& Phase::operator+=(const Phase& o)
{
    if (exact_ && o.exact_) {
        std::int64_t l = std::lcm(q_, o.q_);
        p_ = p_ * (l / q_) + o.p_ * (l / o.q_);
        q_ = l;
    } else {
        rad_ = constant_radians() + o.constant_radians();
        exact_ = false;
        p_ = 0;
        q_ = 1;
    }
    for (const auto& [k, v] : o.coeffs_)
        coeffs_[k] += v;
    normalize();
    return *this;
}

Phase& Phase::operator*=(std::int64_t k)
{
    if (exact_)
        p_ *= k;
    else
        rad_ *= static_cast<double>(k);
    for (auto& [n, v] : coeffs_)
        v *= k;
    normalize();
    return *this;
}

bool operator==(const Phase& a, const Phase& b)
{
    if (a.exact_ != b.exact_ || a.coeffs_ != b.coeffs_)
        return false;
    return a.exact_ ? (a.p_ == b.p_ && a.q_ == b.q_) : a.rad_ == b.rad_;
}

bool operator<(const Phase& a, const Phase& b)
{
    if (a.exact_ != b.exact_)
        return a.exact_;
    if (a.exact_) {
        if (a.p_ != b.p_ || a.q_ != b.q_)
            return std::make_pair(a.p_, a.q_) < std::make_pair(b.p_, b.q_);
    } else if (a.rad_ != b.rad_) {
        return a.rad_ < b.rad_;
    }
    return a.coeffs_ < b.coeffs_;
}

Phase Phase::substitute(const Valuation& v) const
{
    Phase r = *this;
    r.coeffs_.clear();
    for (const auto& [name, c] : coeffs_) {
        auto it = v.find(name);
        if (it == v.end()) {
            r.coeffs_[name] += c;
            continue;
        }
        r += it->second * c;
    }
    r.normalize();
    return r;
}

void Phase::collect_vars(std::set<std::string>& out) const
{
    for (const auto& [k, v] : coeffs_)
        out.insert(k);
}

std::string Phase::str() const
{
    std::string s;
    if (exact_) {
        if (p_ != 0) {
            if (p_ != 1)
                s += std::to_string(p_) + "*";
            s += "pi";
            if (q_ != 1)
                s += "/" + std::to_string(q_);
        }
    } else {
        s = fmt_double(rad_);
    }
    for (const auto& [name, c] : coeffs_) {
        std::string term = (c == 1 || c == -1) ? name : std::to_string(c < 0 ? -c : c) + "*" + name;
        if (s.empty())
            s = (c < 0 ? "-" : "") + term;
        else
            s += (c < 0 ? "-" : "+") + term;
    }
    if (s.empty())
        s = "0";
    return s;
}

} // namespace zxw
