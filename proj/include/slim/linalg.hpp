#pragma once

// Exact rational linear algebra: an incremental eliminator that answers
// solvability of sparse systems A x = b, produces a witness solution or a
// Farkas-style certificate (a combination of input rows reducing to 0 = c,
// c != 0), and computes ranks. Everything is over Rat; no pivoting heuristics
// beyond first-nonzero, since exactness makes stability a non-issue.

#include "slim/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace slim {

struct SparseRow {
    uint64_t id = 0;                           // caller's row identifier
    std::vector<std::pair<int, Rat>> entries;  // sorted by column
    Rat rhs;
};

struct Certificate {
    // sum over rows of coef * row == 0 on every column, but the same
    // combination of right-hand sides is nonzero
    std::vector<std::pair<uint64_t, Rat>> combination;
    Rat combined_rhs;
};

class Eliminator {
public:
    explicit Eliminator(int cols) : cols_(cols) {}

    // Feeds one equation; returns a certificate iff this row makes the system
    // infeasible (processing may stop there).
    std::optional<Certificate> add_row(const SparseRow& row) {
        std::vector<Rat> dense(cols_, Rat(0));
        for (const auto& [c, v] : row.entries) dense[c] = v;
        Rat rhs = row.rhs;
        std::map<uint64_t, Rat> combo;
        combo[row.id] = Rat(1);

        for (const auto& p : pivots_) {
            if (dense[p.col].is_zero()) continue;
            Rat f = dense[p.col] / p.coeffs[p.col];
            for (int c = 0; c < cols_; ++c)
                if (!p.coeffs[c].is_zero()) dense[c] -= f * p.coeffs[c];
            rhs -= f * p.rhs;
            for (const auto& [rid, rc] : p.combo) {
                combo[rid] -= f * rc;
                if (combo[rid].is_zero()) combo.erase(rid);
            }
        }

        int lead = -1;
        for (int c = 0; c < cols_; ++c)
            if (!dense[c].is_zero()) {
                lead = c;
                break;
            }
        if (lead < 0) {
            if (rhs.is_zero()) return std::nullopt;   // redundant row
            Certificate cert;
            cert.combination.assign(combo.begin(), combo.end());
            cert.combined_rhs = rhs;
            infeasible_ = cert;
            return cert;
        }
        pivots_.push_back({lead, std::move(dense), std::move(rhs), std::move(combo)});
        return std::nullopt;
    }

    int rank() const { return static_cast<int>(pivots_.size()); }
    bool infeasible() const { return infeasible_.has_value(); }
    const std::optional<Certificate>& certificate() const { return infeasible_; }

    // Any solution of the accumulated consistent system (free columns at 0).
    std::vector<Rat> solve() const {
        if (infeasible_) throw error("Eliminator::solve on infeasible system");
        // back-substitution, newest pivots first (each pivot row was fully
        // reduced against all earlier ones)
        std::vector<Rat> x(cols_, Rat(0));
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            Rat acc = it->rhs;
            for (int c = it->col + 1; c < cols_; ++c)
                if (!it->coeffs[c].is_zero() && !x[c].is_zero()) acc -= it->coeffs[c] * x[c];
            x[it->col] = acc / it->coeffs[it->col];
        }
        return x;
    }

private:
    struct Pivot {
        int col;
        std::vector<Rat> coeffs;
        Rat rhs;
        std::map<uint64_t, Rat> combo;
    };

    int cols_;
    std::vector<Pivot> pivots_;
    std::optional<Certificate> infeasible_;
};

// Rank of a dense matrix given as rows.
inline int rank_of_rows(std::vector<std::vector<Rat>> rows) {
    if (rows.empty()) return 0;
    const int cols = static_cast<int>(rows[0].size());
    Eliminator e(cols);
    uint64_t id = 0;
    for (auto& r : rows) {
        SparseRow sr;
        sr.id = id++;
        for (int c = 0; c < cols; ++c)
            if (!r[c].is_zero()) sr.entries.push_back({c, r[c]});
        e.add_row(sr);
    }
    return e.rank();
}

} // namespace slim
