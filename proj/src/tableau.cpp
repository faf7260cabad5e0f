#include "krg/crystal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace krg {

std::vector<int> Tableau::shape() const {
    std::vector<int> s;
    for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
    return s;
}

bool Tableau::is_semistandard() const {
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].empty()) return false;
        if (i > 0 && rows[i].size() > rows[i - 1].size()) return false;
        for (size_t j = 0; j < rows[i].size(); ++j) {
            int x = rows[i][j];
            if (x < 1 || x > n) return false;
            if (j > 0 && rows[i][j - 1] > x) return false;
            if (i > 0 && rows[i - 1][j] >= x) return false;
        }
    }
    return true;
}

Content Tableau::content() const {
    Content c(n, 0);
    for (const auto& r : rows)
        for (int x : r) ++c[x - 1];
    return c;
}

std::string Tableau::str() const {
    std::string s = "[";
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) s += ",";
        s += "[";
        for (size_t j = 0; j < rows[i].size(); ++j) {
            if (j) s += ",";
            s += std::to_string(rows[i][j]);
        }
        s += "]";
    }
    return s + "]";
}

Tableau Tableau::parse(int n, const std::string& s) {
    Tableau t;
    t.n = n;
    int depth = 0;
    std::string num;
    for (char ch : s) {
        if (ch == '[') {
            ++depth;
            if (depth == 2) t.rows.emplace_back();
        } else if (ch == ']' || ch == ',') {
            if (!num.empty()) {
                if (depth != 2) throw std::invalid_argument("bad tableau: " + s);
                t.rows.back().push_back(std::stoi(num));
                num.clear();
            }
            if (ch == ']') --depth;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            num += ch;
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            throw std::invalid_argument("bad tableau: " + s);
        }
    }
    if (!t.is_semistandard()) throw std::invalid_argument("not semistandard: " + s);
    return t;
}

namespace {

// Cells in reading order: columns left to right, each bottom to top.
std::vector<std::pair<int, int>> reading_cells(const Tableau& t) {
    std::vector<std::pair<int, int>> cells;
    int width = t.rows.empty() ? 0 : static_cast<int>(t.rows[0].size());
    for (int c = 0; c < width; ++c)
        for (int r = static_cast<int>(t.rows.size()) - 1; r >= 0; --r)
            if (c < static_cast<int>(t.rows[r].size())) cells.push_back({r, c});
    return cells;
}

// Unmatched positions after cancelling "()" pairs, i+1 -> '(' and i -> ')'.
void signature(const Tableau& t, int i, const std::vector<std::pair<int, int>>& cells, std::vector<int>& open_left,
               std::vector<int>& close_left) {
    open_left.clear();
    close_left.clear();
    for (int p = 0; p < static_cast<int>(cells.size()); ++p) {
        int x = t.rows[cells[p].first][cells[p].second];
        if (x == i + 1) {
            open_left.push_back(p);
        } else if (x == i) {
            if (!open_left.empty())
                open_left.pop_back();
            else
                close_left.push_back(p);
        }
    }
}

}  // namespace

std::optional<Tableau> f_op(int i, const Tableau& t) {
    if (i < 1 || i >= t.n) throw std::invalid_argument("f_op: index out of range");
    auto cells = reading_cells(t);
    std::vector<int> open, close;
    signature(t, i, cells, open, close);
    if (close.empty()) return std::nullopt;
    Tableau u = t;
    auto [r, c] = cells[close.back()];
    u.rows[r][c] = i + 1;
    return u;
}

std::optional<Tableau> e_op(int i, const Tableau& t) {
    if (i < 1 || i >= t.n) throw std::invalid_argument("e_op: index out of range");
    auto cells = reading_cells(t);
    std::vector<int> open, close;
    signature(t, i, cells, open, close);
    if (open.empty()) return std::nullopt;
    Tableau u = t;
    auto [r, c] = cells[open.front()];
    u.rows[r][c] = i;
    return u;
}

Tableau highest_tableau(int n, const std::vector<int>& lambda) {
    Tableau t;
    t.n = n;
    for (size_t k = 0; k < lambda.size(); ++k)
        if (lambda[k] > 0) t.rows.push_back(std::vector<int>(lambda[k], static_cast<int>(k) + 1));
    return t;
}

long long ssyt_count(int n, const std::vector<int>& lambda) {
    // hook-content formula, exact in rationals
    Q num = 1, den = 1;
    std::vector<int> lam;
    for (int x : lambda)
        if (x > 0) lam.push_back(x);
    for (size_t i = 0; i < lam.size(); ++i)
        for (int j = 0; j < lam[i]; ++j) {
            int arm = lam[i] - j - 1;
            int leg = 0;
            for (size_t k = i + 1; k < lam.size(); ++k)
                if (lam[k] > j) ++leg;
            num *= n + j - static_cast<int>(i);
            den *= arm + leg + 1;
        }
    Q v = num / den;
    return v.get_num().get_si();
}

Crystal build_crystal(int n, const std::vector<int>& lambda, int cap) {
    std::vector<int> lam;
    for (int x : lambda)
        if (x > 0) lam.push_back(x);
    if (static_cast<int>(lam.size()) > n) throw std::invalid_argument("build_crystal: more than n rows");
    for (size_t k = 1; k < lam.size(); ++k)
        if (lam[k] > lam[k - 1]) throw std::invalid_argument("build_crystal: lambda is not a partition");
    if (n < 1) throw std::invalid_argument("build_crystal: n must be positive");
    long long expect = ssyt_count(n, lam);
    if (expect > cap) throw std::length_error("build_crystal: " + std::to_string(expect) + " elements exceed the cap");

    Crystal c;
    c.n = n;
    std::map<Tableau, int> index;
    std::deque<int> queue;
    auto add = [&](const Tableau& t) {
        auto it = index.find(t);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(c.tableaux.size());
        index[t] = id;
        c.tableaux.push_back(t);
        queue.push_back(id);
        return id;
    };
    add(highest_tableau(n, lam));
    std::vector<std::vector<std::pair<int, int>>> fedges;  // (i, target)
    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        Tableau t = c.tableaux[id];
        std::vector<std::pair<int, int>> out;
        for (int i = 1; i < n; ++i)
            if (auto u = f_op(i, t)) out.push_back({i, add(*u)});
        if (static_cast<int>(fedges.size()) <= id) fedges.resize(id + 1);
        fedges[id] = out;
    }
    c.init_ops(static_cast<int>(c.tableaux.size()));
    for (size_t b = 0; b < c.tableaux.size(); ++b) {
        c.labels.push_back(c.tableaux[b].str());
        c.wt.push_back(c.tableaux[b].content());
    }
    for (size_t b = 0; b < fedges.size(); ++b)
        for (auto [i, t] : fedges[b]) c.f[i][b] = t;
    // e_i computed independently so that the pairing axiom is a real check
    for (size_t b = 0; b < c.tableaux.size(); ++b)
        for (int i = 1; i < n; ++i)
            if (auto u = e_op(i, c.tableaux[b])) {
                auto it = index.find(*u);
                if (it == index.end()) throw std::logic_error("build_crystal: e_i leaves the crystal");
                c.e[i][b] = it->second;
            }
    if (c.size() != expect) throw std::logic_error("build_crystal: enumeration does not match the hook-content count");
    return c;
}

}  // namespace krg
