/*
 * Copyright 2026 The secgame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "secgame/lp.hpp"

#include <stdexcept>

namespace secgame {

void LinearSystem::add_strict(std::vector<Rational> coeff, Rational bound) {
    if (static_cast<int>(coeff.size()) != num_vars) throw std::invalid_argument("row width differs from variable count");
    strict_rows.push_back({std::move(coeff), std::move(bound)});
}

void LinearSystem::add_nonstrict(std::vector<Rational> coeff, Rational bound) {
    if (static_cast<int>(coeff.size()) != num_vars) throw std::invalid_argument("row width differs from variable count");
    nonstrict_rows.push_back({std::move(coeff), std::move(bound)});
}

void LinearSystem::add_equal(std::vector<Rational> coeff, Rational bound) {
    std::vector<Rational> neg(coeff.size());
    for (std::size_t j = 0; j < coeff.size(); ++j) neg[j] = -coeff[j];
    add_nonstrict(std::move(coeff), bound);
    add_nonstrict(std::move(neg), -bound);
}

namespace {

// Dense tableau for min c.x subject to A x = b, x >= 0, with b >= 0.
class Tableau {
public:
    Tableau(int rows, int cols) : m_(rows), n_(cols), a_(rows, std::vector<Rational>(cols + 1)), basis_(rows, -1) {}

    Rational& at(int i, int j) { return a_[i][j]; }
    Rational& rhs(int i) { return a_[i][n_]; }
    int basis(int i) const { return basis_[i]; }
    void set_basis(int i, int j) { basis_[i] = j; }
    int rows() const { return m_; }

    void set_objective(const std::vector<Rational>& c) {
        obj_.assign(n_ + 1, Rational(0));
        for (int j = 0; j < n_; ++j) obj_[j] = c[j];
        for (int i = 0; i < m_; ++i) {
            Rational cb = obj_[basis_[i]];
            if (cb.sign() == 0) continue;
            for (int j = 0; j <= n_; ++j) obj_[j] -= cb * a_[i][j];
        }
    }

    // Objective value is -obj_[n_].
    Rational objective() const { return -obj_[n_]; }

    // Runs to optimality; columns with allowed[j] == 0 never enter.
    void optimize(const std::vector<char>& allowed) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < n_ && enter < 0; ++j)
                if (allowed[j] && obj_[j].sign() < 0) enter = j;
            if (enter < 0) return;
            int leave = -1;
            Rational best;
            for (int i = 0; i < m_; ++i) {
                if (a_[i][enter].sign() <= 0) continue;
                Rational ratio = a_[i][n_] / a_[i][enter];
                if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) throw std::logic_error("unbounded objective in a capped program");
            pivot(leave, enter);
        }
    }

    void pivot(int r, int c) {
        Rational p = a_[r][c];
        for (int j = 0; j <= n_; ++j) a_[r][j] /= p;
        for (int i = 0; i < m_; ++i) {
            if (i == r || a_[i][c].sign() == 0) continue;
            Rational f = a_[i][c];
            for (int j = 0; j <= n_; ++j) a_[i][j] -= f * a_[r][j];
        }
        if (!obj_.empty() && obj_[c].sign() != 0) {
            Rational f = obj_[c];
            for (int j = 0; j <= n_; ++j) obj_[j] -= f * a_[r][j];
        }
        basis_[r] = c;
    }

    std::vector<Rational> solution() const {
        std::vector<Rational> x(n_);
        for (int i = 0; i < m_; ++i) x[basis_[i]] = a_[i][n_];
        return x;
    }

private:
    int m_, n_;
    std::vector<std::vector<Rational>> a_;
    std::vector<int> basis_;
    std::vector<Rational> obj_;
};

} // namespace

LpResult lp_feasible(const LinearSystem& sys) {
    int nv = sys.num_vars;
    bool has_strict = !sys.strict_rows.empty();
    int ns = static_cast<int>(sys.strict_rows.size()), nn = static_cast<int>(sys.nonstrict_rows.size());
    int rows = ns + nn + (has_strict ? 1 : 0);
    // Columns: x+ (nv), x- (nv), surplus per row, y, artificial per row.
    int col_surplus = 2 * nv;
    int col_y = col_surplus + rows;
    int col_art = col_y + (has_strict ? 1 : 0);
    int cols = col_art + rows;
    Tableau t(rows, cols);

    auto fill = [&](int i, const LinearRow& row, bool strict) {
        for (int j = 0; j < nv; ++j) {
            t.at(i, j) = row.coeff[j];
            t.at(i, nv + j) = -row.coeff[j];
        }
        t.at(i, col_surplus + i) = -1;
        if (strict) t.at(i, col_y) = -1;
        t.rhs(i) = row.bound;
    };
    for (int i = 0; i < ns; ++i) fill(i, sys.strict_rows[i], true);
    for (int i = 0; i < nn; ++i) fill(ns + i, sys.nonstrict_rows[i], false);
    if (has_strict) {
        // -y - s >= ... written as y + s = 1.
        int i = rows - 1;
        t.at(i, col_y) = 1;
        t.at(i, col_surplus + i) = 1;
        t.rhs(i) = 1;
    }
    for (int i = 0; i < rows; ++i) {
        if (t.rhs(i).sign() < 0)
            for (int j = 0; j < col_art; ++j) t.at(i, j) = -t.at(i, j);
        if (t.rhs(i).sign() < 0) t.rhs(i) = -t.rhs(i);
        t.at(i, col_art + i) = 1;
        t.set_basis(i, col_art + i);
    }

    std::vector<Rational> c(cols, Rational(0));
    for (int i = 0; i < rows; ++i) c[col_art + i] = 1;
    t.set_objective(c);
    std::vector<char> allowed(cols, 1);
    t.optimize(allowed);
    if (t.objective().sign() != 0) return {};

    // Drive zero-level artificials out of the basis where possible.
    for (int i = 0; i < rows; ++i) {
        if (t.basis(i) < col_art) continue;
        for (int j = 0; j < col_art; ++j)
            if (t.at(i, j).sign() != 0) {
                t.pivot(i, j);
                break;
            }
    }
    for (int j = col_art; j < cols; ++j) allowed[j] = 0;

    if (has_strict) {
        std::vector<Rational> c2(cols, Rational(0));
        c2[col_y] = -1;
        t.set_objective(c2);
        t.optimize(allowed);
        if (t.objective().sign() >= 0) return {};
    }
    std::vector<Rational> z = t.solution();
    LpResult r{true, std::vector<Rational>(nv)};
    for (int j = 0; j < nv; ++j) r.witness[j] = z[j] - z[nv + j];
    return r;
}

} // namespace secgame
