#include "krg/scalar.hpp"

#include <cmath>
#include <sstream>

namespace krg {

Scalar& Scalar::operator*=(const Scalar& o) {
    if (sgn(im) == 0 && sgn(o.im) == 0) {
        re *= o.re;
        return *this;
    }
    Q r = re * o.re - im * o.im;
    Q i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

void Scalar::addmul(const Scalar& a, const Scalar& b) {
    if (sgn(a.im) == 0 && sgn(b.im) == 0) {
        re += a.re * b.re;
        return;
    }
    re += a.re * b.re - a.im * b.im;
    im += a.re * b.im + a.im * b.re;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    if (sgn(im) == 0) return Scalar(Q(1) / re);
    Q n = norm2();
    return Scalar(re / n, -im / n);
}

Q parse_rational(const std::string& s0) {
    std::string s;
    for (char c : s0)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty rational");
    // decimals like 0.25 are accepted and converted exactly
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        if (s.find('/') != std::string::npos) throw std::invalid_argument("bad rational: " + s0);
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac = s.size() - dot - 1;
        mpz_class den = 1;
        for (size_t i = 0; i < frac; ++i) den *= 10;
        mpz_class num;
        if (num.set_str(digits, 10) != 0) throw std::invalid_argument("bad rational: " + s0);
        Q q(num, den);
        q.canonicalize();
        return q;
    }
    Q q;
    if (!s.empty() && s[0] == '+') s = s.substr(1);
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s0);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s0);
    q.canonicalize();
    return q;
}

std::string rational_str(const Q& q) { return q.get_str(10); }

Scalar Scalar::parse(const std::string& s0) {
    std::string s;
    for (char c : s0)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty scalar");
    if (s.back() != 'i') return Scalar(parse_rational(s));
    // split real part from imaginary part at the last +/- that is not leading
    size_t split = std::string::npos;
    for (size_t k = s.size() - 1; k > 0; --k)
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e') {
            split = k;
            break;
        }
    std::string rp, ip;
    if (split == std::string::npos) {
        ip = s;
    } else {
        rp = s.substr(0, split);
        ip = s.substr(split);
    }
    ip.pop_back();  // drop 'i'
    if (!ip.empty() && ip.back() == '*') ip.pop_back();
    Q imq;
    if (ip.empty() || ip == "+")
        imq = 1;
    else if (ip == "-")
        imq = -1;
    else
        imq = parse_rational(ip);
    Q req = rp.empty() ? Q(0) : parse_rational(rp);
    return Scalar(req, imq);
}

std::string Scalar::str() const {
    if (sgn(im) == 0) return rational_str(re);
    std::string ims = rational_str(im) + "*i";
    if (sgn(re) == 0) return ims;
    return rational_str(re) + (sgn(im) > 0 ? "+" : "") + ims;
}

Q binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Q(r);
}

Q factorial(long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Q(r);
}

Scalar circle_point(const Q& t) {
    Q d = 1 + t * t;
    return Scalar((1 - t * t) / d, 2 * t / d);
}

Q rationalize(double x, long max_den) {
    if (!std::isfinite(x)) throw std::domain_error("cannot rationalize non-finite value");
    // Stern-Brocot style continued fraction convergents
    long sign = x < 0 ? -1 : 1;
    double y = std::fabs(x);
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double r = y;
    for (int it = 0; it < 64; ++it) {
        double a = std::floor(r);
        mpz_class ai(a);
        mpz_class p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double frac = r - a;
        if (frac < 1e-15) break;
        r = 1.0 / frac;
    }
    if (q1 == 0) return Q(sign) * Q(mpz_class(static_cast<long>(std::floor(y))));
    Q out(p1 * sign, q1);
    out.canonicalize();
    return out;
}

std::vector<Scalar> parse_scalar_list(const std::string& s) {
    std::vector<Scalar> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(Scalar::parse(tok));
    return out;
}

}  // namespace krg
