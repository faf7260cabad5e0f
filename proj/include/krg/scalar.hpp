// Exact scalars: GMP rationals and Gaussian rationals a+bi.
#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace krg {

using Q = mpq_class;

struct Scalar {
    Q re, im;

    Scalar() : re(0), im(0) {}
    Scalar(long v) : re(v), im(0) {}
    Scalar(int v) : re(v), im(0) {}
    Scalar(const Q& r) : re(r), im(0) {}
    Scalar(const Q& r, const Q& i) : re(r), im(i) {}

    // "3", "-1/2", "2/3*i", "1/2+3/4*i", "i", "-i"
    static Scalar parse(const std::string& s);
    std::string str() const;

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    bool is_one() const { return sgn(im) == 0 && re == 1; }

    Scalar conj() const { return Scalar(re, -im); }
    Q norm2() const { return re * re + im * im; }
    Scalar inv() const;

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    Scalar& operator+=(const Scalar& o) {
        re += o.re;
        if (sgn(o.im) != 0) im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re -= o.re;
        if (sgn(o.im) != 0) im -= o.im;
        return *this;
    }
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

    // this += a*b without building a temporary Scalar
    void addmul(const Scalar& a, const Scalar& b);
};

inline Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
inline Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
inline Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
inline Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
inline Scalar operator-(const Scalar& a) { return Scalar(-a.re, -a.im); }
inline bool operator==(const Scalar& a, const Scalar& b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

// total order used only for canonical sorting (lex on (re, im))
inline bool scalar_less(const Scalar& a, const Scalar& b) {
    int c = cmp(a.re, b.re);
    return c != 0 ? c < 0 : cmp(a.im, b.im) < 0;
}

// a/b in canonical form; mpq_class(a, b) alone does not reduce
inline Q frac(long a, long b) {
    Q q(a, b);
    q.canonicalize();
    return q;
}

Q parse_rational(const std::string& s);
std::string rational_str(const Q& q);

Q binomial(long n, long k);
Q factorial(long n);

// Rational point on the unit circle: ((1-t^2) + 2ti)/(1+t^2).
Scalar circle_point(const Q& t);

// Closest fraction to x with denominator at most max_den (continued fractions).
Q rationalize(double x, long max_den);

std::vector<Scalar> parse_scalar_list(const std::string& s);

}  // namespace krg
