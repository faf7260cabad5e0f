// Inhomogeneous Gaudin generators: Lax matrix, column determinant over the
// algebra of differential operators, residue generators and checks.
#pragma once

#include "krg/glrep.hpp"
#include "krg/ratfun.hpp"

#include <string>
#include <vector>

namespace krg {

struct GaudinConfig {
    TensorRep rep;         // factor evaluation points are z_i + d_i (d is usually 0 here)
    std::vector<Q> chi;    // diagonal, length n
    int cap_n = 4;

    int n() const { return rep.n; }
    Scalar z(int i) const { return rep.point(i); }
};

// Generator with its provenance: d-degree index k, pole index i, order l.
struct Generator {
    Mat m;
    int k = -1, pole = -1, l = -1;
    std::string tag;
};

struct CommutingFamily {
    std::vector<Generator> gens;
    int rank = 0;  // dimension of the span
    std::string convention;

    std::vector<Mat> mats() const;
};

// L(u)_{ab} = sum_i E_ab^{(i)}/(u - z_i)
std::vector<MatRatFun> lax_matrix(const GaudinConfig& cfg);

// matrix whose (a,b) entry is a differential operator
using OpMatrix = std::vector<std::vector<DiffOpPoly>>;

// L(u) - d - sign*chi (sign = +1 is the master convention cdet(L - d - chi))
OpMatrix gaudin_operator_matrix(const GaudinConfig& cfg, int chi_sign = +1);

// sum_s sgn(s) M_{s(1)1} ... M_{s(n)n}
DiffOpPoly cdet(const OpMatrix& M);
// tr A_n M_1 ... M_n with A_n the normalized antisymmetrizer
DiffOpPoly antisym_trace(const OpMatrix& M);
// [M_pl, M_rs] = [M_rl, M_ps] for all index quadruples
bool is_manin(const OpMatrix& M, std::string* why = nullptr);

DiffOpPoly gaudin_cdet(const GaudinConfig& cfg, int chi_sign = +1);

// res_{u=z_i} (u-z_i)^l b_k(u), k = 0..n, l = 0..k
CommutingFamily residue_generators(const GaudinConfig& cfg, const DiffOpPoly& op, const std::string& convention);
CommutingFamily residue_generators(const GaudinConfig& cfg);

// first failing pair, or empty when all commute exactly
std::string check_commuting(const std::vector<Mat>& ms);

struct InvarianceReport {
    bool pass = true;
    std::vector<std::string> checked;   // the Delta(x) tested
    std::vector<std::string> failures;
};

// invariance under Delta(x) for x spanning the centralizer of diag(chi)
InvarianceReport invariance_check(const CommutingFamily& fam, const TensorRep& rep, const std::vector<Q>& chi);

// pairs (i,j), i<j, with chi_i == chi_j (0-based)
std::vector<std::pair<int, int>> coincident_pairs(const std::vector<Q>& chi);

// residue generators at subregular chi0 plus Delta(E_ii - E_jj)
CommutingFamily wall_family(const GaudinConfig& cfg);

}  // namespace krg
