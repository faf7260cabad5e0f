// Promotion by jeu de taquin, the affine operators it induces, and
// Kirillov-Reshetikhin crystals of rectangular shape.
#pragma once

#include "krg/crystal.hpp"

#include <string>
#include <vector>

namespace krg {

Tableau promote(const Tableau& t);

// pr as a permutation of the elements of a tableau crystal
std::vector<int> promotion_map(const Crystal& c);
int promotion_order(int n, const std::vector<int>& lambda, int cap = kDefaultCap);

// xi_{1..n-1} o xi_{1..n-2}; empty when a Schutzenberger involution fails
std::vector<int> phi_operator(const Crystal& c, std::string* why = nullptr);

std::vector<int> rectangle(int l, int r);  // partition (l,...,l), r rows

// B_{l w_r} with e_[0] = pr^{-1} e_1 pr, f_[0] = pr^{-1} f_1 pr; every view is
// checked against the crystal axioms on construction.
Crystal build_kr(int n, int l, int r, int cap = kDefaultCap);

struct UniquenessReport {
    int n = 0;
    std::vector<int> lambda;
    bool rectangular = false;
    int promotion_order = 0;
    bool extendable = false;         // pr^n = id, the precondition for the affine structure
    bool classical_iso = false;      // B^{[0]} is B_lambda
    bool views_ok = false;           // all B^{[j]} satisfy the crystal axioms
    bool view1_normal = false;       // B^{[1]} normal
    bool phi_equals_pr = false;      // xi o xi = pr
    long long phi_candidates = 0;    // sl_{n-1} isomorphisms B^{(1)} -> B|sl_{n-1}
    bool pass = false;
    std::string note;
};

UniquenessReport verify_uniqueness(int n, const std::vector<int>& lambda, int cap = kDefaultCap);
inline UniquenessReport verify_uniqueness(int n, int l, int r) { return verify_uniqueness(n, rectangle(l, r)); }

}  // namespace krg
