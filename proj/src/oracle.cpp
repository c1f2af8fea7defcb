#include "ontic/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <limits>

#include <omp.h>

#include "ontic/errors.hpp"

namespace ontic {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// A x = b, x >= 0 on the columns that survived presolve.
struct Standard {
    Matrix a;
    std::vector<Rational> b;
    std::vector<std::size_t> origin;  // free column -> original variable, or kSlack
    bool infeasible = false;
};

constexpr std::size_t kSlack = std::numeric_limits<std::size_t>::max();

Standard presolve(const ConstraintSystem& cs) {
    const auto& rows = cs.rows();
    const std::size_t n = cs.num_variables();
    std::size_t cols = n;
    for (const auto& r : rows) {
        if (r.relation != Relation::Equal) ++cols;
    }
    Matrix a(rows.size(), std::vector<Rational>(cols, Rational(0)));
    std::vector<Rational> b(rows.size());
    std::size_t next = n;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (const auto& t : rows[i].terms) a[i][t.var] += t.coef;
        if (rows[i].relation == Relation::LessEqual) a[i][next++] = 1;
        if (rows[i].relation == Relation::GreaterEqual) a[i][next++] = -1;
        b[i] = rows[i].rhs;
        if (b[i] < 0) {
            for (auto& v : a[i]) v = -v;
            b[i] = -b[i];
        }
    }

    Standard s;
    std::vector<char> fixed(cols, 0);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            bool pos = false;
            bool neg = false;
            for (std::size_t j = 0; j < cols; ++j) {
                if (fixed[j] || a[i][j] == 0) continue;
                (a[i][j] > 0 ? pos : neg) = true;
            }
            if (b[i] > 0 && !pos) {
                s.infeasible = true;
                return s;
            }
            if (b[i] == 0 && pos != neg) {
                for (std::size_t j = 0; j < cols; ++j) {
                    if (!fixed[j] && a[i][j] != 0) {
                        fixed[j] = 1;
                        changed = true;
                    }
                }
            }
        }
    }

    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < cols; ++j) {
        if (fixed[j]) continue;
        keep.push_back(j);
        s.origin.push_back(j < n ? j : kSlack);
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<Rational> row;
        bool nonzero = false;
        for (auto j : keep) {
            row.push_back(a[i][j]);
            nonzero = nonzero || a[i][j] != 0;
        }
        if (!nonzero) continue;  // b == 0 here, else presolve reported infeasibility
        s.a.push_back(std::move(row));
        s.b.push_back(b[i]);
    }
    return s;
}

// Splits into blocks that share no variable; each block is reduced to
// independent rows (row echelon form), or marked infeasible.
std::vector<Standard> components(const Standard& s) {
    const std::size_t cols = s.origin.size();
    std::vector<std::size_t> parent(cols);
    for (std::size_t j = 0; j < cols; ++j) parent[j] = j;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& row : s.a) {
        std::optional<std::size_t> first;
        for (std::size_t j = 0; j < cols; ++j) {
            if (row[j] == 0) continue;
            if (!first) {
                first = j;
            } else {
                parent[find(j)] = find(*first);
            }
        }
    }

    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t j = 0; j < cols; ++j) groups[find(j)].push_back(j);

    std::vector<Standard> out;
    for (const auto& [root, members] : groups) {
        Matrix m;
        for (std::size_t i = 0; i < s.a.size(); ++i) {
            bool touches = std::any_of(members.begin(), members.end(), [&](std::size_t j) { return s.a[i][j] != 0; });
            if (!touches) continue;
            std::vector<Rational> row;
            for (auto j : members) row.push_back(s.a[i][j]);
            row.push_back(s.b[i]);
            m.push_back(std::move(row));
        }
        const std::size_t w = members.size();
        std::size_t rank = 0;
        for (std::size_t c = 0; c < w && rank < m.size(); ++c) {
            std::size_t p = rank;
            while (p < m.size() && m[p][c] == 0) ++p;
            if (p == m.size()) continue;
            std::swap(m[p], m[rank]);
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (i == rank || m[i][c] == 0) continue;
                Rational f = m[i][c] / m[rank][c];
                for (std::size_t k = c; k <= w; ++k) m[i][k] -= f * m[rank][k];
            }
            ++rank;
        }
        Standard comp;
        for (auto j : members) comp.origin.push_back(j);  // index into the presolved columns
        for (std::size_t i = rank; i < m.size(); ++i) {
            if (m[i][w] != 0) comp.infeasible = true;
        }
        for (std::size_t i = 0; i < rank; ++i) {
            comp.b.push_back(m[i][w]);
            m[i].pop_back();
            comp.a.push_back(std::move(m[i]));
        }
        out.push_back(std::move(comp));
    }
    return out;
}

using Binomials = std::vector<std::vector<std::uint64_t>>;

Binomials binomials(std::size_t n) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    Binomials c(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) {
        c[i][0] = 1;
        for (std::size_t k = 1; k <= i; ++k) {
            std::uint64_t x = c[i - 1][k - 1];
            std::uint64_t y = k <= i - 1 ? c[i - 1][k] : 0;
            c[i][k] = x > kMax - y ? kMax : x + y;
        }
    }
    return c;
}

// The k-th r-subset of {0..n-1} in lexicographic order.
std::vector<std::size_t> unrank(std::uint64_t k, std::size_t n, std::size_t r, const Binomials& c) {
    std::vector<std::size_t> out;
    std::size_t x = 0;
    for (std::size_t i = 0; i < r; ++i) {
        for (;; ++x) {
            std::uint64_t with = c[n - x - 1][r - i - 1];
            if (k < with) break;
            k -= with;
        }
        out.push_back(x++);
    }
    return out;
}

bool advance(std::vector<std::size_t>& comb, std::size_t n) {
    const std::size_t r = comb.size();
    std::size_t i = r;
    while (i > 0 && comb[i - 1] == n - r + i - 1) --i;
    if (i == 0) return false;
    ++comb[i - 1];
    for (std::size_t j = i; j < r; ++j) comb[j] = comb[j - 1] + 1;
    return true;
}

// Solves the square subsystem on `cols`; empty result if singular or x < 0.
std::optional<std::vector<Rational>> basic_solution(const Standard& s, const std::vector<std::size_t>& cols) {
    const std::size_t r = cols.size();
    Matrix m(r, std::vector<Rational>(r + 1));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < r; ++k) m[i][k] = s.a[i][cols[k]];
        m[i][r] = s.b[i];
    }
    for (std::size_t c = 0; c < r; ++c) {
        std::size_t p = c;
        while (p < r && m[p][c] == 0) ++p;
        if (p == r) return std::nullopt;
        std::swap(m[p], m[c]);
        for (std::size_t i = 0; i < r; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Rational f = m[i][c] / m[c][c];
            for (std::size_t k = c; k <= r; ++k) m[i][k] -= f * m[c][k];
        }
    }
    std::vector<Rational> x(r);
    for (std::size_t i = 0; i < r; ++i) {
        x[i] = m[i][r] / m[i][i];
        if (x[i] < 0) return std::nullopt;
    }
    return x;
}

struct Candidate {
    std::uint64_t index = 0;
    Rational value;
    std::vector<std::size_t> cols;
    std::vector<Rational> x;
};

bool better(const Candidate& a, const std::optional<Candidate>& b) {
    return !b || a.value > b->value || (a.value == b->value && a.index < b->index);
}

struct Search {
    const Standard& s;
    std::vector<Rational> cost;  // per free column
    bool optimize;
    std::size_t n;
    std::size_t r;
    const Binomials& c;

    // Scans indices [lo, hi); stops at the first vertex when not optimizing.
    std::optional<Candidate> scan(std::uint64_t lo, std::uint64_t hi) const {
        std::optional<Candidate> best;
        auto comb = unrank(lo, n, r, c);
        for (std::uint64_t k = lo; k < hi; ++k) {
            if (auto x = basic_solution(s, comb)) {
                Candidate cand{k, Rational(0), comb, std::move(*x)};
                for (std::size_t i = 0; i < r; ++i) cand.value += cost[comb[i]] * cand.x[i];
                if (better(cand, best)) best = std::move(cand);
                if (!optimize) return best;
            }
            if (k + 1 < hi) advance(comb, n);
        }
        return best;
    }
};

std::optional<Candidate> search_component(const Standard& comp, const std::vector<Rational>& cost, bool optimize,
                                         bool parallel) {
    const std::size_t n = comp.origin.size();
    const std::size_t r = comp.a.size();
    const Binomials binom = binomials(n);
    const std::uint64_t total = binom[n][r];
    Search search{comp, cost, optimize, n, r, binom};
    if (!parallel) return search.scan(0, total);

    constexpr std::uint64_t kBlock = 2048;
    const std::uint64_t blocks = (total + kBlock - 1) / kBlock;
    std::vector<std::optional<Candidate>> found(blocks);
    std::atomic<std::uint64_t> first_hit{blocks};
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t bi = 0; bi < static_cast<std::int64_t>(blocks); ++bi) {
        const auto blk = static_cast<std::uint64_t>(bi);
        if (!optimize && blk > first_hit.load()) continue;
        try {
            found[blk] = search.scan(blk * kBlock, std::min(total, (blk + 1) * kBlock));
            if (!optimize && found[blk]) {
                std::uint64_t cur = first_hit.load();
                while (blk < cur && !first_hit.compare_exchange_weak(cur, blk)) {
                }
            }
        } catch (...) {
#pragma omp critical(oracle_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    std::optional<Candidate> best;
    for (auto& f : found) {
        if (f && better(*f, best)) {
            best = std::move(f);
            if (!optimize) break;
        }
    }
    return best;
}

FeasibilityResult run(const ConstraintSystem& cs, const OracleOptions& opts, bool parallel) {
    FeasibilityResult result;
    const Standard s = presolve(cs);
    if (s.infeasible) {
        result.status = LpStatus::Infeasible;
        return result;
    }
    const auto comps = components(s);
    std::uint64_t total = 0;
    for (const auto& comp : comps) {
        if (comp.infeasible) {
            result.status = LpStatus::Infeasible;
            return result;
        }
        std::uint64_t k = binomials(comp.origin.size())[comp.origin.size()][comp.a.size()];
        total = k > opts.max_bases - std::min(total, opts.max_bases) ? opts.max_bases + 1 : total + k;
    }
    if (total > opts.max_bases) {
        throw SizeCapExceeded("oracle would examine more than " + std::to_string(opts.max_bases) + " candidate bases");
    }

    const bool optimize = cs.objective().has_value();
    std::vector<Rational> dense(cs.num_variables(), Rational(0));
    if (optimize) {
        for (const auto& t : *cs.objective()) dense[t.var] += t.coef;
    }

    result.witness.assign(cs.num_variables(), Rational(0));
    for (const auto& comp : comps) {
        std::vector<Rational> cost(comp.origin.size(), Rational(0));
        for (std::size_t k = 0; k < comp.origin.size(); ++k) {
            std::size_t orig = s.origin[comp.origin[k]];
            if (orig != kSlack) cost[k] = dense[orig];
        }
        auto best = search_component(comp, cost, optimize, parallel);
        if (!best) {
            result.status = LpStatus::Infeasible;
            result.witness.clear();
            return result;
        }
        for (std::size_t i = 0; i < best->cols.size(); ++i) {
            std::size_t orig = s.origin[comp.origin[best->cols[i]]];
            if (orig != kSlack) result.witness[orig] = best->x[i];
        }
    }
    if (!cs.satisfied_by(result.witness)) throw Error("oracle vertex fails the constraint rows");
    result.status = LpStatus::Feasible;

    if (optimize) {
        // Recession directions d >= 0 with A d (rel) 0, normalized to sum 1.
        ConstraintSystem rec;
        for (const auto& name : cs.variable_names()) rec.add_variable(name);
        for (const auto& row : cs.rows()) rec.add_row(Row{row.terms, row.relation, 0, row.tag, row.label});
        std::vector<Term> ones;
        for (std::size_t j = 0; j < cs.num_variables(); ++j) ones.push_back({j, 1});
        rec.add_row(Row{ones, Relation::Equal, 1, "normalization", "sum d = 1"});
        rec.set_objective(*cs.objective());
        FeasibilityResult ray = run(rec, opts, parallel);
        if (ray.status == LpStatus::Feasible && *ray.optimum > 0) {
            result.status = LpStatus::Unbounded;
            return result;
        }
        result.optimum = cs.objective_value(result.witness);
    }
    return result;
}

}  // namespace

FeasibilityResult enumerate_oracle(const ConstraintSystem& cs, const OracleOptions& opts) { return run(cs, opts, true); }

FeasibilityResult enumerate_oracle_serial(const ConstraintSystem& cs, const OracleOptions& opts) {
    return run(cs, opts, false);
}

}  // namespace ontic
