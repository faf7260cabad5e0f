// Semistandard tableaux and finite (affine) sl_n crystal graphs.
#pragma once

#include "krg/glrep.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace krg {

struct Tableau {
    int n = 0;
    std::vector<std::vector<int>> rows;  // entries in 1..n

    std::vector<int> shape() const;
    bool is_semistandard() const;
    Content content() const;
    std::string str() const;  // [[1,1],[2,2]]
    static Tableau parse(int n, const std::string& s);
    bool operator==(const Tableau& o) const { return n == o.n && rows == o.rows; }
    bool operator<(const Tableau& o) const { return rows < o.rows; }
};

// Kashiwara operators by the signature rule (reading word: columns
// bottom-to-top, columns left-to-right).
std::optional<Tableau> f_op(int i, const Tableau& t);
std::optional<Tableau> e_op(int i, const Tableau& t);

// Highest tableau of shape lambda: row k filled with k.
Tableau highest_tableau(int n, const std::vector<int>& lambda);

// A crystal on {0..size-1}. Operator index i in 1..n-1 is classical; index 0
// is the affine one (all -1 unless `affine`).
struct Crystal {
    int n = 0;
    bool affine = false;
    std::vector<std::string> labels;
    std::vector<Content> wt;
    std::vector<std::vector<int>> e, f;  // e[i][b], -1 when undefined
    std::vector<Tableau> tableaux;       // filled for tableau crystals
    std::vector<std::vector<int>> parts; // factor element indices for tensor products

    int size() const { return static_cast<int>(labels.size()); }
    int find(const std::string& label) const;
    int find(const Tableau& t) const;
    void init_ops(int count);  // allocate e,f for `count` elements
};

std::vector<int> canonical_weight(const Content& c);
Content alpha(int n, int i);  // simple root for index i (0 = affine), as content difference

constexpr int kDefaultCap = 100000;

Crystal build_crystal(int n, const std::vector<int>& lambda, int cap = kDefaultCap);
// number of SSYT of shape lambda with entries <= n (hook-content formula)
long long ssyt_count(int n, const std::vector<int>& lambda);

std::pair<int, int> string_data(const Crystal& c, int i, int b);

// Pairing and weight axioms for the listed indices; weights compared after
// canonicalization.
bool check_axioms(const Crystal& c, const std::vector<int>& indices, std::string* why = nullptr);
std::vector<int> classical_indices(int n);  // 1..n-1

struct Component {
    int highest = -1;           // first source found
    int sources = 0;            // elements killed by all e_i in the component
    int size = 0;
    std::vector<int> lambda;    // partition from the highest content
    std::vector<int> members;
    bool normal = false;        // isomorphic to B_lambda
};

// Components under the given indices (default: classical 1..n-1).
std::vector<Component> decompose_normal(const Crystal& c, const std::vector<int>& indices = {});
bool is_normal(const Crystal& c, std::string* why = nullptr);

// Reindexed view B^{[j]}: e_i := e_{[i-j]}, weight permuted by tau_[j].
Crystal view(const Crystal& c, int j);

// Schutzenberger involution for indices lo..hi on each component:
// xi f_i = e_{lo+hi-i} xi. Empty result when the crystal is not normal there.
std::vector<int> schutzenberger(const Crystal& c, int lo, int hi, std::string* why = nullptr);
inline std::vector<int> schutzenberger(const Crystal& c, std::string* why = nullptr) {
    return schutzenberger(c, 1, c.n - 1, why);
}

}  // namespace krg
