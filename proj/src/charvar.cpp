#include "elemtab/charvar.hpp"

#include <bit>
#include <functional>
#include <map>
#include <unordered_map>

#include "elemtab/rng.hpp"

namespace elemtab {

namespace {

std::size_t binom_capped(std::size_t n, std::size_t k, std::size_t cap) {
    if (k > n) return 0;
    // Multiplicative formula; stop once the running value passes the cap.
    unsigned __int128 out = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
        if (out > cap) return cap + 1;
    }
    return static_cast<std::size_t>(out);
}

/// All maximal minors of a rows x cols matrix of linear forms (rows >= cols),
/// by Laplace expansion along the last used column with memoization on the
/// row subset. Returns a row-reduced basis of their span.
std::vector<Poly> maximal_minors(const std::vector<std::vector<Poly>>& m, std::size_t nvars, std::size_t cols,
                                 std::size_t cap) {
    const std::size_t rows = m.size();
    if (rows > 64) throw CapExceeded("too many relation rows for minor enumeration");
    if (binom_capped(rows, cols, cap) > cap)
        throw MinorExplosion("characteristic ideal needs more than " + std::to_string(cap) + " minors");

    std::unordered_map<std::uint64_t, Poly> memo;
    std::function<const Poly&(std::uint64_t)> det = [&](std::uint64_t subset) -> const Poly& {
        if (auto it = memo.find(subset); it != memo.end()) return it->second;
        const std::size_t size = static_cast<std::size_t>(std::popcount(subset));
        Poly out(nvars);
        if (size == 0) {
            out = Poly::constant(nvars, 1);
        } else {
            const std::size_t col = size - 1;
            std::size_t pos = 0;
            for (std::size_t i = 0; i < rows; ++i) {
                if (!(subset & (std::uint64_t{1} << i))) continue;
                const Poly& entry = m[i][col];
                if (!entry.is_zero()) {
                    const Poly& sub = det(subset & ~(std::uint64_t{1} << i));
                    if (!sub.is_zero()) {
                        const Poly term = entry * sub;
                        out = ((pos + col) % 2) ? out - term : out + term;
                    }
                }
                ++pos;
            }
        }
        return memo.emplace(subset, std::move(out)).first->second;
    };

    std::vector<Poly> minors;
    // Enumerate cols-subsets of rows in lexicographic order (Gosper's hack).
    std::uint64_t subset = (cols == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << cols) - 1);
    const std::uint64_t limit = std::uint64_t{1} << rows;
    while (rows == 64 || subset < limit) {
        const Poly& d = det(subset);
        if (!d.is_zero()) minors.push_back(d);
        const std::uint64_t c = subset & (~subset + 1), r = subset + c;
        if (r == 0) break;
        subset = (((r ^ subset) >> 2) / c) | r;
    }

    // Row-reduce over the monomials that occur.
    std::vector<Monomial> monos;
    std::map<std::vector<unsigned>, std::size_t> index;
    auto key = [&](const Monomial& mono) {
        std::vector<unsigned> e(nvars);
        for (std::size_t k = 0; k < nvars; ++k) e[k] = mono[k];
        return e;
    };
    for (const auto& p : minors)
        for (const auto& term : p.terms())
            if (index.emplace(key(term.mono), monos.size()).second) monos.push_back(term.mono);
    if (minors.empty()) return {};
    Mat coeffs(minors.size(), monos.size());
    for (std::size_t i = 0; i < minors.size(); ++i)
        for (const auto& term : minors[i].terms()) coeffs(i, index[key(term.mono)]) = term.coeff;
    const auto red = rref(coeffs);
    std::vector<Poly> out;
    for (std::size_t i = 0; i < red.rank; ++i) {
        std::vector<Term> terms;
        for (std::size_t j = 0; j < monos.size(); ++j)
            if (red.reduced(i, j) != 0) terms.push_back({monos[j], red.reduced(i, j)});
        out.push_back(Poly::from_terms(nvars, std::move(terms)));
    }
    return out;
}

}  // namespace

Ideal minors_ideal(const std::vector<std::vector<Poly>>& m, std::size_t nvars, std::size_t cols,
                   const CharConfig& cfg) {
    if (m.size() < cols) return Ideal::zero(nvars);
    if (cols == 0) return Ideal::unit(nvars);
    return Ideal(nvars, maximal_minors(m, nvars, cols, cfg.max_minors), MonomialOrder::grevlex(), cfg.groebner);
}

Ideal char_ideal(const Tableau& t, const CharConfig& cfg) {
    const PolyMat s = symbol_matrix_original(t);
    std::vector<std::vector<Poly>> rows(s.rows);
    for (std::size_t i = 0; i < s.rows; ++i)
        for (std::size_t j = 0; j < s.cols; ++j) rows[i].push_back(s(i, j));
    return minors_ideal(rows, t.n(), t.r(), cfg);
}

Ideal char_ideal_annihilator(const LinearTableau& t, const CharConfig& cfg) {
    const std::size_t n = t.v_dim, r = t.w_dim;
    std::vector<std::vector<Poly>> rows;
    for (const auto& f : t.space.annihilator().basis_vectors()) {
        std::vector<Poly> row;
        for (std::size_t b = 0; b < r; ++b) {
            Vec c(n);
            for (std::size_t k = 0; k < n; ++k) c[k] = f[b * n + k];
            row.push_back(Poly::linear(c));
        }
        rows.push_back(std::move(row));
    }
    return minors_ideal(rows, n, r, cfg);
}

std::size_t char_dimension(const Ideal& ideal) { return static_cast<std::size_t>(std::max(ideal_dimension(ideal), 0)); }

std::size_t char_dimension(const Tableau& t, const CharConfig& cfg) { return char_dimension(char_ideal(t, cfg)); }

CharData variety_span(const Ideal& ideal, std::uint64_t seed, const CharConfig& cfg) {
    const std::size_t n = ideal.nvars();
    CharData out;
    out.ideal = ideal;
    if (ideal.is_zero()) {
        // Every covector is characteristic.
        out.ell = n;
        out.span = Subspace::full(n);
        out.x_one = Subspace::zero(n);
        out.L = n;
        return out;
    }
    const Ideal sat = saturate_irrelevant(ideal, cfg.groebner);
    if (sat.is_unit()) {
        out.span = Subspace::zero(n);
        out.x_one = Subspace::full(n);
        return out;
    }
    out.ell = char_dimension(ideal);
    const std::size_t params = n - out.ell;  // affine slice ξ = p0 + Σ t_j p_j
    const std::size_t cut = out.ell - 1;     // projective codimension of the cut

    Rng rng(derive_seed(seed, 0x5ba7));
    Subspace span = Subspace::zero(n);
    std::size_t stable = 0, used = 0;
    bool grew_last = false;
    for (std::size_t trial = 0; trial < cfg.max_trials; ++trial) {
        SliceRecord rec{trial, cut, "", 0, span.dim()};
        std::vector<Vec> frame{rng.vec(n, cfg.box)};
        for (std::size_t j = 0; j < params; ++j) frame.push_back(rng.vec(n, cfg.box));
        const Mat phi = Mat::from_rows(frame, n);  // rows p0, p1, ..
        if (rank(phi) < frame.size()) {
            rec.outcome = "skipped";
            out.slice_log.push_back(rec);
            continue;
        }
        std::vector<Poly> images;
        for (std::size_t k = 0; k < n; ++k) {
            Poly p = Poly::constant(params, frame[0][k]);
            for (std::size_t j = 0; j < params; ++j) p = p + Poly::variable(params, j).scaled(frame[j + 1][k]);
            images.push_back(p);
        }
        std::vector<Poly> gens;
        for (const auto& g : ideal.gb()) gens.push_back(g.substitute(images));
        const Ideal slice(params, gens, MonomialOrder::grevlex(), cfg.groebner);
        const auto qdim = quotient_dimension(slice);
        if (!qdim || slice.is_unit()) {
            rec.outcome = "not-zero-dimensional";
            out.slice_log.push_back(rec);
            continue;
        }
        const Ideal rad = zero_dim_radical(slice, cfg.groebner);
        rec.points = quotient_dimension(rad).value();
        if (!out.observed_degree) out.observed_degree = rec.points;
        // v ∈ V annihilates every point iff (p0·v) + Σ t_j (p_j·v) ∈ rad.
        const Subspace affine = affine_linear_part(rad);
        const Mat normals = affine.annihilator().basis();
        const Subspace ann = kernel_basis(normals * phi);
        const Subspace joined = span.join(ann.annihilator());
        ++used;
        grew_last = joined.dim() > span.dim();
        if (grew_last) {
            span = joined;
            stable = 0;
            rec.outcome = "grew";
        } else {
            ++stable;
            rec.outcome = "used";
        }
        rec.span_dim = span.dim();
        out.slice_log.push_back(rec);
        if (stable >= cfg.stable_rounds || span.dim() == n) {
            grew_last = false;
            break;
        }
    }
    if (used == 0) throw Unstable("variety_span: no zero-dimensional slice in " + std::to_string(cfg.max_trials) + " trials");
    if (grew_last) throw Unstable("variety_span: span still growing on the final trial");

    out.span = span;
    out.x_one = span.annihilator();
    out.L = span.dim();
    if (cfg.check_linear_part && !out.x_one.contains(linear_part(sat)))
        throw InternalInvariant("variety_span: a linear form of the saturated ideal does not vanish on the span");
    return out;
}

CharData variety_span(const Tableau& t, std::uint64_t seed, const CharConfig& cfg) {
    return variety_span(char_ideal(t, cfg), seed, cfg);
}

bool nilpotency_certificate(const Tableau& t, const Subspace& x1, std::size_t samples, std::uint64_t seed) {
    if (x1.ambient() != t.n()) throw DimensionMismatch("nilpotency_certificate: x1 is not in V");
    if (t.ell() == 0 || x1.dim() == 0) return true;
    Rng rng(derive_seed(seed, 0x1119));
    for (std::size_t s = 0; s < samples; ++s) {
        Vec phi(t.n());
        bool zero = true;
        while (zero) {
            for (std::size_t k = 0; k < t.ell(); ++k) {
                phi[k] = rng.small_int(3);
                zero = zero && phi[k] == 0;
            }
        }
        const Subspace w1 = w_one(t, phi);
        for (const auto& v : x1.basis_vectors()) {
            const Mat b = symbol_endo(t, phi, t.to_adapted_vector(v));
            try {
                if (!is_nilpotent(restrict_endo(b, w1))) return false;
            } catch (const InvarianceViolated&) {
                return false;
            }
        }
    }
    return true;
}

Report classify(const Tableau& t, const CharData& data) {
    Report rep;
    rep.n = t.n();
    rep.r = t.r();
    rep.characters = t.characters();
    rep.ell = data.ell;
    rep.L = data.L;
    const Subspace s = cauchy_space(t);
    rep.nu = t.n() - s.dim();
    rep.frobenius = rep.ell == 0;
    rep.elementary = rep.L == rep.n;
    rep.cauchy_free = rep.nu == rep.n;
    rep.involutive = is_involutive_gnf(t).involutive;
    rep.x1_basis = data.x_one.basis_vectors();
    rep.s_basis = s.basis_vectors();
    for (const auto& g : data.ideal.gb()) rep.char_ideal_generators.push_back(to_string(g));
    rep.observed_degree = data.observed_degree;
    if (!(rep.ell <= rep.L && rep.L <= rep.nu && rep.nu <= rep.n))
        throw InternalInvariant("classify: the chain ell <= L <= nu <= n fails");
    return rep;
}

Report classify(const Tableau& t, std::uint64_t seed, const CharConfig& cfg) {
    return classify(t, variety_span(t, seed, cfg));
}

}  // namespace elemtab
