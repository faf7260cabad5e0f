// Type A affine Weyl group, alcoves and walls in R^n / R(1,...,1).
#pragma once

#include "krg/scalar.hpp"

#include <string>
#include <vector>

namespace krg {

// A class in R^n modulo the all-ones vector; stored with last coordinate 0.
struct AffinePoint {
    std::vector<Q> x;
    static AffinePoint make(std::vector<Q> v);
    int n() const { return static_cast<int>(x.size()); }
    bool operator==(const AffinePoint& o) const { return x == o.x; }
    std::string str() const;
};

// (sigma; m) acting by a -> (a_{sigma^-1(1)} + m_{sigma^-1(1)}, ...).
// sigma is 0-based: sigma[k] is the image of k.
struct ExtAffineWeylElt {
    std::vector<int> sigma;
    std::vector<long> m;  // modulo the all-ones vector; normalized so m.back() == 0

    static ExtAffineWeylElt identity(int n);
    static ExtAffineWeylElt make(std::vector<int> sigma, std::vector<long> m);
    int n() const { return static_cast<int>(sigma.size()); }
    bool in_affine_weyl() const;  // translation lies in the root lattice
    ExtAffineWeylElt inverse() const;
    bool operator==(const ExtAffineWeylElt& o) const { return sigma == o.sigma && m == o.m; }
    std::string str() const;
};

ExtAffineWeylElt operator*(const ExtAffineWeylElt& a, const ExtAffineWeylElt& b);
AffinePoint act(const ExtAffineWeylElt& w, const AffinePoint& a);

// simple reflections s_0 (affine), s_1..s_{n-1}
ExtAffineWeylElt simple_reflection(int n, int i);

// the hyperplane a_i - a_j = k, 0-based i,j
struct Wall {
    int i = 0, j = 0;
    long k = 0;
    Wall canonical() const;  // i < j
    bool operator==(const Wall& o) const;
    bool contains(const AffinePoint& a) const;
    std::string str() const;  // 1-based
};

Wall act(const ExtAffineWeylElt& w, const Wall& h);

// Q_w membership: a_{s(n)} - m_n + 1 >= a_{s(1)} - m_1 >= ... >= a_{s(n)} - m_n
bool in_alcove(const ExtAffineWeylElt& w, const AffinePoint& a, bool closed = true);

struct Classification {
    bool regular = false;
    ExtAffineWeylElt w;       // valid when regular
    std::vector<Wall> walls;  // walls through the point otherwise
    int steps = 0;            // reflections used while folding
};

Classification classify(const AffinePoint& a);

// bounding walls H_1..H_n of Q_w; H_n is the affine wall for w = 1
std::vector<Wall> walls_of(const ExtAffineWeylElt& w);

// a point on H_j^w (1 <= j <= n) lying on no other wall
AffinePoint subregular_sample(const ExtAffineWeylElt& w, int j);
// an interior point of Q_w
AffinePoint regular_sample(const ExtAffineWeylElt& w);

}  // namespace krg
