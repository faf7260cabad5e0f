// Evaluated Bethe subalgebras: fused transfer-matrix traces tau_a(u, C) on a
// tensor product of evaluation modules, the exact sampling certificate for
// their commutativity, and the shift-operator degeneration to Gaudin.
#pragma once

#include "krg/alcove.hpp"
#include "krg/gaudin.hpp"
#include "krg/glrep.hpp"

#include <string>
#include <vector>

namespace krg {

struct TorusElement {
    std::vector<Scalar> c;  // unit modulus entries

    static TorusElement make(std::vector<Scalar> c);  // throws unless |c_a|^2 == 1
    int n() const { return static_cast<int>(c.size()); }
    bool regular() const { return coincident_pairs().empty(); }
    std::vector<std::pair<int, int>> coincident_pairs() const;
    TorusElement normalized() const;  // c_1 = 1
    std::string str() const;
};

// C = exp(2 pi i chi) replaced by a rational point of the circle with the same
// coincidence pattern: c_a depends only on chi_a mod 1, and is -1 at 1/2.
TorusElement torus_from_point(const std::vector<Q>& chi, long max_den = 1000);

Mat antisymmetrizer(int n, int a);

// T(u)_{xy} as operators on V: T(u) = prod_i (1 + E^{(i)}/(u - w_i)), w_i = z_i + d_i
std::vector<Mat> transfer_matrix(const TensorRep& rep, const Scalar& u);

// tr A_a C_1..C_a T_1(u) T_2(u-1) .. T_a(u-a+1); throws on a pole collision
Mat tau_eval(int a, const TorusElement& C, const TensorRep& rep, const Scalar& u);

struct BetheSample {
    int a = 0;
    Scalar u;
    Mat m;
};

struct BetheFamily {
    TorusElement C;
    std::vector<BetheSample> samples;
    std::vector<Mat> extra;  // e.g. Delta(h) at a wall
    std::vector<std::string> extra_tags;
    std::pair<int, int> wall_pair{-1, -1};

    std::vector<Mat> mats() const;
};

struct BetheCertificate {
    bool pass = true;
    int degree_bound = 0;   // max numerator degree per variable
    int grid = 0;           // points per variable
    std::vector<std::string> sample_points;
    long checked = 0;
    std::vector<std::string> witnesses;
    bool all_normal = true;
    std::vector<std::string> non_normal;
};

// numerator degree of tau_a in u is at most a*k
int bethe_degree_bound(int n, int k);

// grid u_j avoiding every pole w_i + m, m = 0..n-1
std::vector<Scalar> sample_grid(const TensorRep& rep, int count);

BetheFamily bethe_family(const TorusElement& C, const TensorRep& rep, int grid = 0);

// [tau_a(u1), tau_b(u2)] = 0 on a grid larger than the degree bound, plus the
// extra members against every sample, plus exact normality of every member.
BetheCertificate bethe_commuting_certificate(const BetheFamily& fam, const TensorRep& rep);

// tau family at C0 (exactly one coincident pair (i,j), in the given order) plus Delta(E_ii - E_jj)
BetheFamily wall_bethe_family(const TorusElement& C0, std::pair<int, int> pair, const TensorRep& rep, int grid = 0);

struct ShiftCdetResult {
    Scalar eps, c;
    int taylor_order = 8;
    double tail_bound = 0;     // bound on the effect of the truncated exponential
    ShiftOpPoly op;            // cdet(S T(u) - exp(-eps chi)), before the eps^-n scaling
    std::vector<Generator> residues;  // r_{k,i,l}, summed over the cluster of poles near z_i/c
};

// Factors carry z_i and d_i; the poles of T are at z_i/c + eps d_i.
ShiftCdetResult shift_cdet(const Scalar& eps, const Scalar& c, const std::vector<Q>& chi, const TensorRep& rep,
                           int taylor_order = 8);

struct DegenerationRow {
    Scalar eps;
    double error = 0;
    double ratio = 0;  // error / previous error
};

struct DegenerationReport {
    std::vector<DegenerationRow> rows;
    bool pass = false;
    double ratio_target = 0.5, ratio_tol = 0.15;
    std::string limit_convention;
};

// compare with residues of cdet(L_{z/c}(u) - d + chi)
DegenerationReport degeneration(const std::vector<Scalar>& eps_list, const Scalar& c, const std::vector<Q>& chi,
                                const TensorRep& rep, int taylor_order = 8);

}  // namespace krg
