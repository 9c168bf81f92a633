#include "elemtab/spencer.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

namespace elemtab {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t out = 1;
    while (e--) out *= b;
    return out;
}

/// Kernel of the constraint rows (dropping zero rows); full space if none.
Subspace solve(const std::vector<Vec>& rows, std::size_t unknowns) {
    std::vector<Vec> kept;
    for (const auto& r : rows)
        for (const auto& x : r)
            if (x != 0) {
                kept.push_back(r);
                break;
            }
    if (kept.empty()) return Subspace::full(unknowns);
    return kernel_basis(Mat::from_rows(kept, unknowns));
}

bool fully_symmetric(const Vec& q, std::size_t head, std::size_t n, std::size_t slots) {
    // Adjacent transpositions generate the symmetric group.
    const std::size_t block = ipow(n, slots);
    for (std::size_t h = 0; h < head; ++h)
        for (std::size_t idx = 0; idx < block; ++idx)
            for (std::size_t s = 0; s + 1 < slots; ++s) {
                const std::size_t lo = ipow(n, slots - 2 - s);
                const std::size_t i = (idx / lo) % n, j = (idx / (lo * n)) % n;
                const std::size_t swapped = idx + (i - j) * lo * n + (j - i) * lo;
                if (q[h * block + idx] != q[h * block + swapped]) return false;
            }
    return true;
}

std::vector<std::uint32_t> subsets(std::size_t n, std::size_t size) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (static_cast<std::size_t>(std::popcount(m)) == size) out.push_back(m);
    return out;
}

/// Sorted sparse row with integer entries, kept primitive.
using SparseRow = std::vector<std::pair<std::size_t, mpz_class>>;

void make_primitive(SparseRow& row) {
    if (row.empty()) return;
    mpz_class g = 0;
    for (const auto& [c, x] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    if (row.front().second < 0) g = -g;
    if (g != 1)
        for (auto& [c, x] : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

/// fb a - fa b for sorted sparse rows sharing their leading column.
SparseRow eliminate(const SparseRow& a, const SparseRow& b) {
    const mpz_class& fa = a.front().second;
    const mpz_class& fb = b.front().second;
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 1, j = 1;
    mpz_class x;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.emplace_back(a[i].first, fb * a[i].second);
            ++i;
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -fa * b[j].second);
            ++j;
        } else {
            x = fb * a[i].second;
            mpz_submul(x.get_mpz_t(), fa.get_mpz_t(), b[j].second.get_mpz_t());
            if (sgn(x) != 0) out.emplace_back(a[i].first, x);
            ++i;
            ++j;
        }
    }
    make_primitive(out);
    return out;
}

/// Incremental echelon form keyed by leading column.
class SparseEchelon {
public:
    /// True if the row was independent of the rows inserted so far.
    bool insert(SparseRow row) {
        make_primitive(row);
        while (!row.empty()) {
            const auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) {
                pivots_.emplace(row.front().first, std::move(row));
                return true;
            }
            row = eliminate(row, it->second);
        }
        return false;
    }
    std::size_t rank() const { return pivots_.size(); }

    /// Basis of {x : row · x = 0 for every inserted row}, as integer rows.
    std::vector<SparseRow> kernel(std::size_t cols) {
        // Back-substitute from the last pivot so every pivot column is
        // cleared in all other rows.
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            const SparseRow& piv = it->second;
            for (auto& [c, row] : pivots_) {
                if (c >= it->first) break;
                const auto hit = std::lower_bound(row.begin(), row.end(), it->first,
                                                  [](const auto& e, std::size_t col) { return e.first < col; });
                if (hit == row.end() || hit->first != it->first) continue;
                row = clear(row, piv, hit->second);
            }
        }
        std::vector<SparseRow> out;
        std::vector<bool> is_pivot(cols, false);
        for (const auto& [c, row] : pivots_) is_pivot[c] = true;
        for (std::size_t f = 0; f < cols; ++f) {
            if (is_pivot[f]) continue;
            // x_f = 1 and x_c = -row[f] / row[c] for each pivot row.
            std::vector<std::pair<std::size_t, Scalar>> v{{f, Scalar(1)}};
            for (const auto& [c, row] : pivots_) {
                const auto hit = std::lower_bound(row.begin(), row.end(), f,
                                                  [](const auto& e, std::size_t col) { return e.first < col; });
                if (hit != row.end() && hit->first == f) {
                    Scalar x(mpz_class(-hit->second), row.front().second);
                    x.canonicalize();
                    v.emplace_back(c, std::move(x));
                }
            }
            std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            out.push_back(integer_sparse(v));
        }
        return out;
    }

private:
    /// lead(piv) row - x piv, which removes the entry x of row at piv's lead.
    static SparseRow clear(const SparseRow& row, const SparseRow& piv, mpz_class x) {
        const mpz_class& lead = piv.front().second;
        SparseRow out;
        out.reserve(row.size() + piv.size());
        std::size_t i = 0, j = 0;
        mpz_class y;
        while (i < row.size() || j < piv.size()) {
            if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
                out.emplace_back(row[i].first, lead * row[i].second);
                ++i;
            } else if (i == row.size() || piv[j].first < row[i].first) {
                out.emplace_back(piv[j].first, -x * piv[j].second);
                ++j;
            } else {
                y = lead * row[i].second;
                mpz_submul(y.get_mpz_t(), x.get_mpz_t(), piv[j].second.get_mpz_t());
                if (sgn(y) != 0) out.emplace_back(row[i].first, y);
                ++i;
                ++j;
            }
        }
        make_primitive(out);
        return out;
    }

    static SparseRow integer_sparse(const std::vector<std::pair<std::size_t, Scalar>>& v) {
        mpz_class l = 1;
        for (const auto& [c, x] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        SparseRow out;
        for (const auto& [c, x] : v) out.emplace_back(c, x.get_num() * (l / x.get_den()));
        make_primitive(out);
        return out;
    }

    std::map<std::size_t, SparseRow> pivots_;
};

/// v scaled by the lcm of its denominators.
std::vector<mpz_class> integer_row(const Vec& v) {
    mpz_class l = 1;
    for (const auto& x : v)
        if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) out[i] = v[i].get_num() * (l / v[i].get_den());
    return out;
}

std::size_t binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t out = 1;
    for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

constexpr std::uint64_t kPrime = 2147483629;  // below 2^31

std::uint64_t mod_inverse(std::uint64_t a) {
    std::uint64_t result = 1, e = kPrime - 2;
    while (e) {
        if (e & 1) result = result * a % kPrime;
        a = a * a % kPrime;
        e >>= 1;
    }
    return result;
}

/// Incremental echelon form over Z/p with monic sparse pivot rows.
class ModEchelon {
public:
    using Row = std::vector<std::pair<std::size_t, std::uint64_t>>;

    /// True if the row was independent of the rows inserted so far.
    bool insert(Row row) {
        Row tmp;
        while (!row.empty()) {
            const auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) {
                const std::uint64_t inv = mod_inverse(row.front().second);
                for (auto& [c, x] : row) x = x * inv % kPrime;
                pivots_.emplace(row.front().first, std::move(row));
                return true;
            }
            // row - f piv, dropping the shared leading entry.
            const std::uint64_t f = kPrime - row.front().second;
            const Row& piv = it->second;
            tmp.clear();
            std::size_t i = 1, j = 1;
            while (i < row.size() || j < piv.size()) {
                if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
                    tmp.push_back(row[i++]);
                } else if (i == row.size() || piv[j].first < row[i].first) {
                    tmp.emplace_back(piv[j].first, f * piv[j].second % kPrime);
                    ++j;
                } else {
                    const std::uint64_t x = (row[i].second + f * piv[j].second) % kPrime;
                    if (x) tmp.emplace_back(row[i].first, x);
                    ++i;
                    ++j;
                }
            }
            row.swap(tmp);
        }
        return false;
    }
    std::size_t rank() const { return pivots_.size(); }

private:
    std::map<std::size_t, Row> pivots_;
};

std::uint64_t reduce_mod(const mpz_class& x) {
    return mpz_fdiv_ui(x.get_mpz_t(), kPrime);
}

/// Kernel of integer rows over Q. Rows independent mod p are eliminated
/// exactly; the result is checked against every row, and a failed check
/// (a prime dividing some minor) falls back to eliminating all rows.
std::vector<SparseRow> exact_kernel(const std::vector<SparseRow>& rows, std::size_t cols) {
    ModEchelon mod;
    SparseEchelon ech;
    for (const auto& row : rows) {
        ModEchelon::Row r;
        for (const auto& [c, x] : row)
            if (const auto v = reduce_mod(x)) r.emplace_back(c, v);
        if (mod.insert(std::move(r))) ech.insert(row);
    }
    auto kernel = ech.kernel(cols);
    std::vector<mpz_class> dense(cols);
    mpz_class dot;
    for (const auto& k : kernel) {
        for (auto& x : dense) x = 0;
        for (const auto& [c, x] : k) dense[c] = x;
        for (const auto& row : rows) {
            dot = 0;
            for (const auto& [c, x] : row)
                if (sgn(dense[c]) != 0) mpz_addmul(dot.get_mpz_t(), x.get_mpz_t(), dense[c].get_mpz_t());
            if (sgn(dot) != 0) {
                SparseEchelon full;
                for (const auto& r : rows) full.insert(r);
                return full.kernel(cols);
            }
        }
    }
    return kernel;
}

/// Monomials of one degree in n variables, with the maps x^α ↦ x^α / x_m.
struct Monomials {
    std::vector<std::vector<unsigned char>> exps;
    std::map<std::vector<unsigned char>, std::size_t> index;
};

Monomials monomials(std::size_t n, std::size_t degree) {
    Monomials out;
    std::vector<unsigned char> e(n, 0);
    // Enumerate compositions of degree into n parts.
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t left) {
        if (k + 1 == n) {
            e[k] = static_cast<unsigned char>(left);
            out.index.emplace(e, out.exps.size());
            out.exps.push_back(e);
            return;
        }
        for (std::size_t v = left + 1; v-- > 0;) {
            e[k] = static_cast<unsigned char>(v);
            rec(k + 1, left - v);
        }
    };
    if (n > 0) rec(0, degree);
    return out;
}

/// A^{(p)} as polynomials: W ⊗ S^{p+1} V*, index a * M + monomial, with
/// independent primitive integer basis rows.
struct SymLevel {
    std::size_t r = 0;
    std::size_t degree = 0;
    Monomials mono;
    std::vector<SparseRow> basis;
};

SymLevel sym_base(const Tableau& t) {
    const std::size_t n = t.n();
    SymLevel lv{t.r(), 1, monomials(n, 1), {}};
    std::vector<std::size_t> slot(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<unsigned char> e(n, 0);
        e[k] = 1;
        slot[k] = lv.mono.index.at(e);
    }
    for (const auto& v : t.flattened().basis_vectors()) {
        const auto q = integer_row(v);
        std::map<std::size_t, mpz_class> acc;
        for (std::size_t idx = 0; idx < q.size(); ++idx)
            if (sgn(q[idx]) != 0) acc[(idx / n) * n + slot[idx % n]] = q[idx];
        lv.basis.emplace_back(acc.begin(), acc.end());
    }
    return lv;
}

/// {f : ∂_m f ∈ A^{(p)} for every m}, solved for g_m = ∂_m f = Σ_i c_{i,m} b_i
/// under ∂_k g_m = ∂_m g_k; then f = Σ_m x_m g_m up to the Euler factor.
SymLevel sym_prolong(const SymLevel& lv, std::size_t n, std::size_t r) {
    const Monomials lower = monomials(n, lv.degree - 1);
    SymLevel out{r, lv.degree + 1, monomials(n, lv.degree + 1), {}};
    const std::size_t d = lv.basis.size(), ml = lower.exps.size(), mh = out.mono.exps.size();
    if (d == 0) return out;

    std::map<std::size_t, std::map<std::size_t, mpz_class>> rows;
    for (std::size_t i = 0; i < d; ++i)
        for (const auto& [idx, v] : lv.basis[i]) {
            const std::size_t a = idx / lv.mono.exps.size();
            auto e = lv.mono.exps[idx % lv.mono.exps.size()];
            for (std::size_t k = 0; k < n; ++k) {
                if (e[k] == 0) continue;
                const mpz_class val = v * static_cast<unsigned long>(e[k]);
                --e[k];
                const std::size_t beta = lower.index.at(e);
                ++e[k];
                // Row of the pair (lo, hi) at coordinate (a, β): c_{·,hi} ∂_lo - c_{·,lo} ∂_hi.
                for (std::size_t m = 0; m < n; ++m) {
                    if (m == k) continue;
                    const std::size_t lo = std::min(k, m), hi = std::max(k, m);
                    const std::size_t pair = lo * n + hi;
                    auto& row = rows[(pair * r + a) * ml + beta];
                    if (k < m) row[i * n + m] += val;
                    else row[i * n + m] -= val;
                }
            }
        }
    std::vector<SparseRow> constraints;
    for (auto& [key, acc] : rows) {
        SparseRow row;
        for (auto& [c, x] : acc)
            if (sgn(x) != 0) row.emplace_back(c, std::move(x));
        if (!row.empty()) constraints.push_back(std::move(row));
    }
    for (const auto& c : exact_kernel(constraints, d * n)) {
        std::map<std::size_t, mpz_class> f;
        for (const auto& [u, cv] : c) {
            const std::size_t i = u / n, m = u % n;
            for (const auto& [idx, v] : lv.basis[i]) {
                const std::size_t a = idx / lv.mono.exps.size();
                auto e = lv.mono.exps[idx % lv.mono.exps.size()];
                ++e[m];
                f[a * mh + out.mono.index.at(e)] += cv * v;
            }
        }
        SparseRow row;
        for (auto& [idx, x] : f)
            if (sgn(x) != 0) row.emplace_back(idx, std::move(x));
        make_primitive(row);
        out.basis.push_back(std::move(row));
    }
    return out;
}

/// Rows of δ(f ⊗ ω) = Σ_m ∂_m f ⊗ e^m ∧ ω on A^{(p)} ⊗ ∧^rho V*, handed to
/// sink one at a time as (column, integer value) maps.
template <class Sink>
void delta_rows(const SymLevel& lv, std::size_t n, std::size_t rho, Sink&& sink) {
    const Monomials lower = monomials(n, lv.degree - 1);
    const std::size_t ml = lower.exps.size(), mdeg = lv.mono.exps.size(), r = lv.r;
    const auto dom = subsets(n, rho), cod = subsets(n, rho + 1);
    std::map<std::uint32_t, std::size_t> cod_index;
    for (std::size_t i = 0; i < cod.size(); ++i) cod_index[cod[i]] = i;
    // Exterior index major, so rows sharing a mask meet first.
    for (const auto mask : dom)
        for (const auto& f : lv.basis) {
            std::map<std::size_t, mpz_class> acc;
            for (const auto& [idx, v] : f) {
                const std::size_t a = idx / mdeg;
                auto e = lv.mono.exps[idx % mdeg];
                for (std::size_t m = 0; m < n; ++m) {
                    if (e[m] == 0 || (mask & (1u << m))) continue;
                    const mpz_class val = v * static_cast<unsigned long>(e[m]);
                    --e[m];
                    const std::size_t beta = lower.index.at(e);
                    ++e[m];
                    const std::size_t col = cod_index[mask | (1u << m)] * (r * ml) + a * ml + beta;
                    if (std::popcount(mask & ((1u << m) - 1)) % 2) acc[col] -= val;
                    else acc[col] += val;
                }
            }
            sink(acc);
        }
}

/// Exact rank of δ on A^{(p)} ⊗ ∧^rho V*.
std::size_t sym_delta_rank(const SymLevel& lv, std::size_t n, std::size_t rho) {
    if (lv.basis.empty() || rho + 1 > n) return 0;
    SparseEchelon ech;
    delta_rows(lv, n, rho, [&](std::map<std::size_t, mpz_class>& acc) {
        SparseRow row;
        for (auto& [c, x] : acc)
            if (sgn(x) != 0) row.emplace_back(c, std::move(x));
        ech.insert(std::move(row));
    });
    return ech.rank();
}

/// Rank of the same matrix reduced mod a prime: a lower bound for the
/// rational rank, since every nonzero minor mod p is a nonzero integer.
std::size_t sym_delta_rank_lower(const SymLevel& lv, std::size_t n, std::size_t rho) {
    if (lv.basis.empty() || rho + 1 > n) return 0;
    ModEchelon ech;
    delta_rows(lv, n, rho, [&](std::map<std::size_t, mpz_class>& acc) {
        ModEchelon::Row row;
        for (const auto& [c, x] : acc)
            if (const auto v = reduce_mod(x)) row.emplace_back(c, v);
        ech.insert(std::move(row));
    });
    return ech.rank();
}

}  // namespace

ProlongedTableau ProlongedTableau::of(const Tableau& t) { return {t, 0, t.flattened()}; }

ProlongedTableau prolong(const ProlongedTableau& p) {
    const std::size_t n = p.base.n(), r = p.base.r();
    const std::size_t prefix = r * ipow(n, p.rho);  // (a, k_0 .. k_{ρ-1})
    const auto basis = p.space.basis_vectors();
    const std::size_t d = basis.size();
    const std::size_t out_len = r * ipow(n, p.rho + 2);
    if (d == 0) return {p.base, p.rho + 1, Subspace::zero(out_len)};

    // Unknowns c_{i,m}; Q[idx n + m] = Σ_i c_{i,m} basis_i[idx].
    std::vector<Vec> rows;
    for (std::size_t pre = 0; pre < prefix; ++pre)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t m = k + 1; m < n; ++m) {
                Vec row(d * n);
                for (std::size_t i = 0; i < d; ++i) {
                    row[i * n + m] += basis[i][pre * n + k];
                    row[i * n + k] -= basis[i][pre * n + m];
                }
                rows.push_back(std::move(row));
            }
    const Subspace sol = solve(rows, d * n);
    std::vector<Vec> tensors;
    for (const auto& c : sol.basis_vectors()) {
        Vec q(out_len);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t m = 0; m < n; ++m) {
                if (c[i * n + m] == 0) continue;
                for (std::size_t idx = 0; idx < basis[i].size(); ++idx)
                    if (basis[i][idx] != 0) q[idx * n + m] += c[i * n + m] * basis[i][idx];
            }
        if (!fully_symmetric(q, r, n, p.rho + 2)) throw InternalInvariant("prolongation is not fully symmetric");
        tensors.push_back(std::move(q));
    }
    return {p.base, p.rho + 1, Subspace::span(tensors, out_len)};
}

ProlongedTableau prolong(const Tableau& t, std::size_t rho) {
    ProlongedTableau p = ProlongedTableau::of(t);
    while (p.rho < rho) p = prolong(p);
    return p;
}

CartanResult cartan_test(const Tableau& t) {
    CartanResult res;
    res.dim_a1 = prolong(t, 1).space.dim();
    res.bound = cartan_bound(t);
    if (res.dim_a1 > res.bound) throw InternalInvariant("dim A^(1) exceeds the Cartan bound; characters not generic");
    res.involutive = res.dim_a1 == res.bound;
    return res;
}

namespace {

SpencerReport spencer_direct(const Tableau& t, std::size_t rho_max, std::size_t levels) {
    const std::size_t n = t.n();
    SpencerReport rep;
    std::vector<SymLevel> a{sym_base(t)};
    for (std::size_t p = 1; p <= levels; ++p) a.push_back(sym_prolong(a.back(), n, t.r()));
    for (const auto& p : a) rep.dims_a.push_back(p.basis.size());

    // Cohomology at A^{(p)} ⊗ ∧^ρ. Modular ranks bound it from above and
    // settle the common case H = 0; anything else is recomputed exactly.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> lower, exact;
    auto rank_lower = [&](std::size_t p, std::size_t rho) {
        const auto key = std::make_pair(p, rho);
        if (auto it = lower.find(key); it != lower.end()) return it->second;
        return lower[key] = sym_delta_rank_lower(a[p], n, rho);
    };
    auto rank_exact = [&](std::size_t p, std::size_t rho) {
        const auto key = std::make_pair(p, rho);
        if (auto it = exact.find(key); it != exact.end()) return it->second;
        return exact[key] = sym_delta_rank(a[p], n, rho);
    };
    auto h = [&](std::size_t p, std::size_t rho) -> std::size_t {
        if (rho > n) return 0;
        const std::size_t cochains = a[p].basis.size() * binom(n, rho);
        if (cochains == rank_lower(p, rho) + rank_lower(p + 1, rho - 1)) return 0;
        return cochains - rank_exact(p, rho) - rank_exact(p + 1, rho - 1);
    };
    rep.involutive = true;
    for (std::size_t p = 0; p < levels; ++p) {
        auto& row = rep.rows.emplace_back();
        for (std::size_t rho = 2; rho <= rho_max; ++rho) {
            row.push_back(h(p, rho));
            if (row.back() != 0) rep.involutive = false;
        }
    }
    return rep;
}

/// Coordinate vectors completing the RREF basis of s to a basis of V.
Subspace complement(const Subspace& s) {
    std::vector<bool> pivot(s.ambient(), false);
    for (const auto& v : s.basis_vectors())
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) {
                pivot[j] = true;
                break;
            }
    std::vector<Vec> out;
    for (std::size_t j = 0; j < s.ambient(); ++j)
        if (!pivot[j]) {
            Vec e(s.ambient());
            e[j] = 1;
            out.push_back(std::move(e));
        }
    return Subspace::span(out, s.ambient());
}

}  // namespace

SpencerReport spencer_h_dims(const Tableau& t, std::size_t rho_max, std::size_t levels) {
    const std::size_t n = t.n();
    if (rho_max > n + 1) throw ValueError("spencer_h_dims: rho_max must be at most n + 1");
    if (levels < 1) throw ValueError("spencer_h_dims: levels must be positive");
    const std::size_t c = cauchy_space(t).dim();
    if (c == 0 || c == n) return spencer_direct(t, rho_max, levels);

    // A kills the Cauchy space S, so every A^{(p)} lives on a complement U
    // and the complex over V is the one over U tensored with ∧ of the S
    // directions: H_V^{p,ρ} = Σ_i C(c, i) H_U^{p,ρ-i}.
    const std::size_t nu = n - c;
    const Tableau tu = restrict(t, complement(cauchy_space(t)));
    const SpencerReport sub = spencer_direct(tu, std::min(rho_max, nu + 1), levels);
    if (sub.dims_a.front() != t.dim()) throw InternalInvariant("spencer_h_dims: restriction to U lost dimensions");
    SpencerReport rep;
    rep.dims_a = sub.dims_a;
    rep.involutive = sub.involutive;
    for (const auto& sub_row : sub.rows) {
        auto& row = rep.rows.emplace_back();
        for (std::size_t rho = 2; rho <= rho_max; ++rho) {
            std::size_t h = 0;
            for (std::size_t i = 0; i <= c && rho - i >= 2; ++i)
                if (rho - i - 2 < sub_row.size()) h += binom(c, i) * sub_row[rho - i - 2];
            row.push_back(h);
        }
    }
    return rep;
}

std::size_t spencer_levels(const Tableau& t) { return std::max<std::size_t>(2, t.n()); }

SpencerReport spencer_h_dims(const Tableau& t) { return spencer_h_dims(t, t.n() + 1, spencer_levels(t)); }

Subspace delta_x_kernel(const Tableau& t, const Subspace& x) {
    if (x.ambient() != t.n()) throw DimensionMismatch("delta_x_kernel: subspace is not in V");
    if (x.dim() == 0) throw ValueError("delta_x_kernel: subspace must be nonzero");
    const std::size_t n = t.n(), r = t.r(), m = x.dim();
    const Mat xb = basis_columns(x);
    const auto basis = t.flattened().basis_vectors();
    const std::size_t d = basis.size();
    std::vector<Mat> restricted;  // π_i restricted to x: r x m
    for (const auto& b : basis) restricted.push_back(Mat(r, n, b) * xb);

    // Unknowns c_{i,j}: Q = Σ c_{i,j} π_i ⊗ x^j.
    std::vector<Vec> rows;
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t j1 = 0; j1 < m; ++j1)
            for (std::size_t j2 = j1 + 1; j2 < m; ++j2) {
                Vec row(d * m);
                for (std::size_t i = 0; i < d; ++i) {
                    row[i * m + j2] += restricted[i](a, j1);
                    row[i * m + j1] -= restricted[i](a, j2);
                }
                rows.push_back(std::move(row));
            }
    const Subspace sol = solve(rows, d * m);
    std::vector<Vec> out;
    for (const auto& c : sol.basis_vectors()) {
        Vec q(r * n * m);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (c[i * m + j] != 0)
                    for (std::size_t idx = 0; idx < r * n; ++idx) q[idx * m + j] += c[i * m + j] * basis[i][idx];
        out.push_back(std::move(q));
    }
    return Subspace::span(out, r * n * m);
}

}  // namespace elemtab
