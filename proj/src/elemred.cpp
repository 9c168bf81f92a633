#include "elemtab/elemred.hpp"

#include "elemtab/rng.hpp"
#include "elemtab/spencer.hpp"

namespace elemtab {

namespace {

/// Tensor in a flat row-major layout with the given slot sizes.
struct Tensor {
    std::vector<std::size_t> dims;
    Vec data;
};

std::size_t volume(const std::vector<std::size_t>& dims) {
    std::size_t v = 1;
    for (auto d : dims) v *= d;
    return v;
}

/// Replace slot s (size n) by its pairing with the columns of xb (n x m).
Tensor contract(const Tensor& t, std::size_t s, const Mat& xb) {
    Tensor out{t.dims, {}};
    out.dims[s] = xb.cols();
    out.data.assign(volume(out.dims), Scalar(0));
    std::size_t inner = 1;
    for (std::size_t i = s + 1; i < t.dims.size(); ++i) inner *= t.dims[i];
    const std::size_t outer = volume(t.dims) / (inner * t.dims[s]);
    for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t k = 0; k < t.dims[s]; ++k)
            for (std::size_t i = 0; i < inner; ++i) {
                const Scalar& x = t.data[(o * t.dims[s] + k) * inner + i];
                if (sgn(x) == 0) continue;
                for (std::size_t j = 0; j < xb.cols(); ++j)
                    if (sgn(xb(k, j)) != 0) out.data[(o * xb.cols() + j) * inner + i] += x * xb(k, j);
            }
    return out;
}

/// Whether t is invariant under swapping slots s and s + 1 (equal sizes).
bool symmetric_pair(const Tensor& t, std::size_t s) {
    const std::size_t d = t.dims[s];
    std::size_t inner = 1;
    for (std::size_t i = s + 2; i < t.dims.size(); ++i) inner *= t.dims[i];
    const std::size_t outer = volume(t.dims) / (inner * d * d);
    for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = a + 1; b < d; ++b)
                for (std::size_t i = 0; i < inner; ++i)
                    if (t.data[((o * d + a) * d + b) * inner + i] != t.data[((o * d + b) * d + a) * inner + i])
                        return false;
    return true;
}

/// {T ∈ space ⊗ X* : symmetric in the last two slots}; the last slot of
/// space already has size m.
Subspace prolong_x(const Subspace& space, std::size_t m) {
    const auto basis = space.basis_vectors();
    const std::size_t d = basis.size(), len = space.ambient(), prefix = len / m;
    if (d == 0) return Subspace::zero(len * m);
    std::vector<Vec> rows;
    for (std::size_t pre = 0; pre < prefix; ++pre)
        for (std::size_t j1 = 0; j1 < m; ++j1)
            for (std::size_t j2 = j1 + 1; j2 < m; ++j2) {
                Vec row(d * m);
                bool nonzero = false;
                for (std::size_t i = 0; i < d; ++i) {
                    row[i * m + j2] += basis[i][pre * m + j1];
                    row[i * m + j1] -= basis[i][pre * m + j2];
                    nonzero = nonzero || sgn(basis[i][pre * m + j1]) != 0 || sgn(basis[i][pre * m + j2]) != 0;
                }
                if (nonzero) rows.push_back(std::move(row));
            }
    const Subspace sol = rows.empty() ? Subspace::full(d * m) : kernel_basis(Mat::from_rows(rows, d * m));
    std::vector<Vec> out;
    for (const auto& c : sol.basis_vectors()) {
        Vec q(len * m);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (sgn(c[i * m + j]) != 0)
                    for (std::size_t idx = 0; idx < len; ++idx)
                        if (sgn(basis[i][idx]) != 0) q[idx * m + j] += c[i * m + j] * basis[i][idx];
        out.push_back(std::move(q));
    }
    return Subspace::span(out, len * m);
}

/// V(small) ⊆ V(large) as cones: every generator of large lies in √small.
bool variety_contained(const Ideal& small, const Ideal& large, const CharConfig& cfg) {
    for (const auto& g : large.gb())
        if (!radical_membership(g, small, cfg.groebner)) return false;
    return true;
}

/// Ξ̇^{(1)} = {ξ ∈ X* : π|_X ∧ ξ = 0 for some nonzero π|_X ∈ Ȧ}: the map
/// Ȧ → W ⊗ ∧²X*, ρ ↦ ρ ∧ ξ, must have a kernel. Built from its maximal minors.
Ideal a_dot_prolonged_ideal(const LinearTableau& a_dot, const CharConfig& cfg) {
    const std::size_t r = a_dot.w_dim, m = a_dot.v_dim;
    const auto basis = a_dot.space.basis_vectors();
    std::vector<std::vector<Poly>> rows;
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k) {
                std::vector<Poly> row;
                for (const auto& q : basis) {
                    Vec c(m);
                    c[k] = q[a * m + j];
                    c[j] = -q[a * m + k];
                    row.push_back(Poly::linear(c));
                }
                rows.push_back(std::move(row));
            }
    return minors_ideal(rows, m, basis.size(), cfg);
}

/// The image of E ⊂ A ⊗ X* in Ȧ ⊗ X* under π ↦ π|_X, with W = Ȧ in the
/// coordinates of its RREF basis.
LinearTableau restrict_elem(const Tableau& t, const Subspace& x, const LinearTableau& e,
                            const LinearTableau& a_dot) {
    const std::size_t n = t.n(), r = t.r(), m = x.dim();
    const Mat xb = basis_columns(x);
    std::vector<Vec> res;  // π_i|_X flattened in W ⊗ X*
    for (const auto& v : t.flattened().basis_vectors()) {
        Vec q(r * m);
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (sgn(v[a * n + k]) != 0) q[a * m + j] += v[a * n + k] * xb(k, j);
        res.push_back(std::move(q));
    }
    const std::size_t dd = a_dot.space.dim();
    std::vector<Vec> rows;
    for (const auto& c : e.space.basis_vectors()) {
        Vec out(dd * m);
        for (std::size_t j = 0; j < m; ++j) {
            Vec slice(r * m);
            for (std::size_t i = 0; i < res.size(); ++i)
                if (sgn(c[i * m + j]) != 0)
                    for (std::size_t idx = 0; idx < r * m; ++idx) slice[idx] += c[i * m + j] * res[i][idx];
            const Vec coords = a_dot.space.coordinates(slice);
            for (std::size_t i = 0; i < dd; ++i) out[i * m + j] = coords[i];
        }
        rows.push_back(std::move(out));
    }
    return {dd, m, Subspace::span(rows, dd * m)};
}

}  // namespace

ElemStep elem_step(const Tableau& t, std::uint64_t seed, const CharConfig& cfg) {
    ElemStep out;
    out.data = variety_span(t, seed, cfg);
    out.x1 = out.data.x_one;
    if (out.x1.dim() > 0) out.reduced = restrict(t, out.x1, derive_seed(seed, 0xe1e));
    return out;
}

std::string to_string(Terminal t) {
    switch (t) {
        case Terminal::TableauZero: return "tableau-zero";
        case Terminal::SpanFullFrobenius: return "span-full-frobenius";
        case Terminal::Stabilized: return "stabilized";
    }
    return "";
}

std::vector<std::size_t> ReductionFlag::dims() const {
    std::vector<std::size_t> out;
    for (const auto& s : steps) out.push_back(s.x.dim());
    return out;
}

ReductionFlag elem_flag(const Tableau& t, std::uint64_t seed, const CharConfig& cfg) {
    const std::size_t n = t.n();
    ReductionFlag flag;
    ReductionStep step{0, Subspace::full(n), t, std::nullopt};
    while (true) {
        if (!step.tableau) {
            flag.terminal = Terminal::SpanFullFrobenius;
            flag.steps.push_back(std::move(step));
            break;
        }
        if (step.tableau->dim() == 0) {
            flag.terminal = Terminal::TableauZero;
            flag.steps.push_back(std::move(step));
            break;
        }
        step.data = variety_span(*step.tableau, derive_seed(seed, step.level), cfg);
        const Subspace& local = step.data->x_one;
        if (local.dim() == step.x.dim()) {
            // Empty characteristic variety on a nonzero tableau: X stays put.
            flag.terminal = Terminal::Stabilized;
            flag.steps.push_back(std::move(step));
            break;
        }
        const Subspace next = image(basis_columns(step.x), local);
        if (!step.x.contains(next) || next.dim() >= step.x.dim())
            throw NonmonotoneFlag("elem_flag: X^" + std::to_string(step.level + 1) + " is not strictly inside X^" +
                                  std::to_string(step.level));
        const std::size_t level = step.level + 1;
        flag.steps.push_back(std::move(step));
        step = ReductionStep{level, next, std::nullopt, std::nullopt};
        if (next.dim() > 0) step.tableau = restrict(t, next, derive_seed(seed, 0x100 + level));
    }
    flag.depth = flag.steps.size() - 1;
    if (flag.depth > n) throw InternalInvariant("elem_flag: depth exceeds n");
    flag.terminal_is_cauchy = flag.steps.back().x == cauchy_space(t);
    if (!flag.terminal_is_cauchy && is_involutive_gnf(t).involutive)
        throw InternalInvariant("elem_flag: terminal space differs from the Cauchy space of an involutive tableau");
    return flag;
}

bool check_dxe(const Tableau& t, const Subspace& x, std::size_t rho_max) {
    if (x.ambient() != t.n()) throw DimensionMismatch("check_dxe: subspace is not in V");
    const std::size_t n = t.n(), r = t.r(), m = x.dim();
    if (m == 0) return true;
    const Mat xb = basis_columns(x);
    const Subspace a = t.flattened();

    Subspace e = delta_x_kernel(t, x);
    ProlongedTableau prolonged = prolong(t, 1);
    for (std::size_t rho = 0; rho <= rho_max; ++rho) {
        if (rho > 0) {
            e = prolong_x(e, m);
            prolonged = prolong(prolonged);
        }
        // Layout of E^{(ρ)}: W, V*, then ρ + 1 copies of X*.
        std::vector<std::size_t> e_dims{r, n};
        for (std::size_t i = 0; i <= rho; ++i) e_dims.push_back(m);

        // A^{(ρ+1)}|_X ⊂ E^{(ρ)}.
        std::vector<Vec> restricted;
        for (const auto& q : prolonged.space.basis_vectors()) {
            Tensor tq{std::vector<std::size_t>(rho + 3, n), q};
            tq.dims[0] = r;
            for (std::size_t s = 2; s < tq.dims.size(); ++s) tq = contract(tq, s, xb);
            restricted.push_back(std::move(tq.data));
        }
        if (!e.contains(Subspace::span(restricted, e.ambient()))) return false;

        for (const auto& q : e.basis_vectors()) {
            // Each W ⊗ V* slice lies in A.
            const std::size_t tail = volume(e_dims) / (r * n);
            for (std::size_t i = 0; i < tail; ++i) {
                Vec slice(r * n);
                for (std::size_t idx = 0; idx < r * n; ++idx) slice[idx] = q[idx * tail + i];
                if (!a.contains(slice)) return false;
            }
            // δ_X = 0: with the V* slot restricted to X, symmetric in all X slots.
            const Tensor tx = contract(Tensor{e_dims, q}, 1, xb);
            for (std::size_t s = 1; s + 1 < tx.dims.size(); ++s)
                if (!symmetric_pair(tx, s)) return false;
        }
    }
    return true;
}

bool check_dxe(const Tableau& t, std::size_t rho_max, std::uint64_t seed, const CharConfig& cfg) {
    return check_dxe(t, variety_span(t, seed, cfg).x_one, rho_max);
}

LinearTableau restricted_linear(const Tableau& t, const Subspace& x) {
    const Mat xb = basis_columns(x);
    std::vector<Vec> flat;
    for (const auto& g : t.generators()) flat.push_back((g * xb).entries());
    return {t.r(), x.dim(), Subspace::span(flat, t.r() * x.dim())};
}

LinearTableau elem_linear(const Tableau& t, const Subspace& x) {
    const std::size_t rn = t.r() * t.n(), m = x.dim();
    const Subspace a = t.flattened();
    const std::size_t d = a.dim();
    std::vector<Vec> rows;
    for (const auto& q : delta_x_kernel(t, x).basis_vectors()) {
        Vec c(d * m);
        for (std::size_t j = 0; j < m; ++j) {
            Vec slice(rn);
            for (std::size_t idx = 0; idx < rn; ++idx) slice[idx] = q[idx * m + j];
            const Vec coords = a.coordinates(slice);
            for (std::size_t i = 0; i < d; ++i) c[i * m + j] = coords[i];
        }
        rows.push_back(std::move(c));
    }
    return {d, m, Subspace::span(rows, d * m)};
}

bool ElemCharReport::holds() const {
    for (bool b : links)
        if (!b) return false;
    return true;
}

ElemCharReport elemchar_report(const Tableau& t, std::uint64_t seed, const CharConfig& cfg) {
    ElemCharReport rep;
    const Subspace x = variety_span(t, seed, cfg).x_one;
    rep.m = x.dim();
    if (rep.m == 0) {
        // P(X*) is empty; every containment holds.
        rep.links = {true, true, true};
        return rep;
    }
    const LinearTableau a_dot = restricted_linear(t, x);
    const LinearTableau e = restrict_elem(t, x, elem_linear(t, x), a_dot);
    rep.e1 = char_ideal_annihilator(e.prolongation(), cfg);
    rep.e = char_ideal_annihilator(e, cfg);
    rep.a_dot1 = a_dot_prolonged_ideal(a_dot, cfg);
    rep.a_dot = char_ideal_annihilator(a_dot, cfg);
    rep.links = {variety_contained(rep.e1, rep.e, cfg), variety_contained(rep.e, rep.a_dot1, cfg),
                 variety_contained(rep.a_dot1, rep.a_dot, cfg)};
    try {
        rep.spans_agree = variety_span(rep.a_dot, seed, cfg).span == variety_span(rep.e, seed, cfg).span;
    } catch (const Unstable&) {
        rep.spans_agree.reset();
    }
    return rep;
}

bool check_elemchar(const Tableau& t, std::uint64_t seed, const CharConfig& cfg) {
    return elemchar_report(t, seed, cfg).holds();
}

}  // namespace elemtab
