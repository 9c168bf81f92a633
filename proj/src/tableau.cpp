#include "elemtab/tableau.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <tuple>
#include <sstream>

#include "elemtab/rng.hpp"

namespace elemtab {

Mat PolyMat::evaluate(const Vec& point) const {
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = (*this)(i, j).evaluate(point);
    return m;
}

namespace {

Vec flatten(const Mat& m) { return m.entries(); }

Mat unflatten(const Vec& v, std::size_t rows, std::size_t cols) { return Mat(rows, cols, v); }

/// Columns [0, k) of every generator, stacked as one row per generator.
Mat leading_columns(const std::vector<Mat>& gens, std::size_t k) {
    const std::size_t r = gens.empty() ? 0 : gens[0].rows();
    Mat m(gens.size(), r * k);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t j = 0; j < k; ++j) m(i, a * k + j) = gens[i](a, j);
    return m;
}

struct FrameAnalysis {
    std::vector<std::size_t> s;
    std::vector<Subspace> flag;  // K_k, one per column
    bool nested = true;
};

/// Characters and the subspaces K_k = {π u_k : π u_1 = ... = π u_{k-1} = 0}
/// for generators already written in the candidate V frame.
FrameAnalysis analyze_frame(const std::vector<Mat>& gens, std::size_t n, std::size_t r) {
    FrameAnalysis fa;
    std::size_t prev = 0;
    for (std::size_t k = 0; k < n; ++k) {
        // Combinations of generators vanishing on the first k columns.
        Subspace comb = kernel_basis(leading_columns(gens, k).transpose());
        std::vector<Vec> col;
        for (const auto& c : comb.basis_vectors()) {
            Vec v(r);
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (c[i] != 0)
                    for (std::size_t a = 0; a < r; ++a) v[a] += c[i] * gens[i](a, k);
            col.push_back(v);
        }
        Subspace kk = Subspace::span(col, r);
        const std::size_t rk = gens.size() - comb.dim() + kk.dim();
        fa.s.push_back(rk - prev);
        prev = rk;
        if (k > 0 && !fa.flag.back().contains(kk)) fa.nested = false;
        fa.flag.push_back(kk);
    }
    return fa;
}

Mat flag_adapted_basis(const std::vector<Subspace>& flag, std::size_t r) {
    bool identity = true;
    for (const auto& kk : flag) {
        Mat expected(kk.dim(), r);
        for (std::size_t i = 0; i < kk.dim(); ++i) expected(i, i) = 1;
        if (!(kk.basis() == expected)) identity = false;
    }
    if (identity) return Mat::identity(r);
    std::vector<Vec> cols;
    Subspace cur(r);
    auto push = [&](const Vec& v) {
        if (cur.contains(v)) return;
        cols.push_back(v);
        cur = cur.join(Subspace::span({v}, r));
    };
    for (std::size_t k = flag.size(); k-- > 0;)
        for (const auto& v : flag[k].basis_vectors()) push(v);
    for (std::size_t a = 0; a < r; ++a) {
        Vec e(r);
        e[a] = 1;
        push(e);
    }
    return Mat::from_rows(cols, r).transpose();
}

void check_caps(std::size_t n, std::size_t r, const TableauConfig& cfg) {
    if (n > cfg.max_n || r > cfg.max_r)
        throw CapExceeded("tableau dimensions (n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                          ") exceed the configured caps");
    if (n == 0) throw DimensionMismatch("tableau needs n >= 1");
}

}  // namespace

Tableau Tableau::from_generators(std::size_t n, std::size_t r, const std::vector<Mat>& generators,
                                 std::uint64_t seed, const TableauConfig& cfg) {
    check_caps(n, r, cfg);
    for (const auto& g : generators)
        if (g.rows() != r || g.cols() != n) throw DimensionMismatch("generator is not r x n");
    std::vector<Vec> flat;
    for (const auto& g : generators) flat.push_back(flatten(g));
    if (rank(Mat::from_rows(flat, r * n)) != generators.size())
        throw DependentGenerators("generators are linearly dependent");

    Tableau t;
    t.n_ = n;
    t.r_ = r;
    t.generators_ = generators;

    // Lexicographically maximize the characters over random frames; the
    // first frame that reaches the maximum with a nested flag wins.
    Rng rng(derive_seed(seed, 0x7ab1e));
    std::vector<std::size_t> best_s;
    std::optional<std::pair<Mat, FrameAnalysis>> best;
    for (std::size_t trial = 0; trial < std::max<std::size_t>(cfg.trials, 1); ++trial) {
        Mat p = Mat::identity(n);
        if (trial > 0) {
            do p = rng.mat(n, n, cfg.box);
            while (rank(p) < n);
        }
        std::vector<Mat> gp;
        for (const auto& g : generators) gp.push_back(g * p);
        FrameAnalysis fa = analyze_frame(gp, n, r);
        if (fa.s > best_s) {
            best_s = fa.s;
            best.reset();
        }
        if (fa.s == best_s && !best && fa.nested) best.emplace(p, fa);
    }
    if (!best) throw GenericityFailure("no sampled frame gives a nested character flag; reseed");

    t.p_ = best->first;
    t.s_ = best->second.s;
    t.ell_ = 0;
    for (std::size_t k = 0; k < n; ++k)
        if (t.s_[k] > 0) t.ell_ = k + 1;
    for (std::size_t k = 1; k < n; ++k)
        if (t.s_[k] > t.s_[k - 1]) throw InternalInvariant("characters are not non-increasing");
    t.q_ = flag_adapted_basis(best->second.flag, r);
    t.p_inv_ = inverse(t.p_);
    t.q_inv_ = inverse(t.q_);
    for (const auto& g : generators) t.adapted_.push_back(t.q_inv_ * g * t.p_);

    // Solve for the reduced basis π_{λ,b}: free entries (b, λ) with b < s_λ.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = 0; a < t.s_[k]; ++a) free.emplace_back(a, k);
    if (free.size() != generators.size()) throw InternalInvariant("character sum differs from dim A");
    Mat f(free.size(), generators.size());
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t e = 0; e < free.size(); ++e) f(e, i) = t.adapted_[i](free[e].first, free[e].second);
    if (rank(f) != free.size()) throw GenericityFailure("free entries do not determine the tableau");
    const Mat finv = inverse(f);
    for (std::size_t e = 0; e < free.size(); ++e) {
        Mat pi(r, n);
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (finv(i, e) != 0) pi = pi + t.adapted_[i].scaled(finv(i, e));
        const auto [bb, lambda] = free[e];
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t a = t.s_[k]; a < r; ++a) {
                if (pi(a, k) == 0) continue;
                if (k <= lambda)
                    throw GenericityFailure("reduced form is not triangular at (a=" + std::to_string(a + 1) +
                                            ", λ=" + std::to_string(lambda + 1) + ", k=" + std::to_string(k + 1) +
                                            ", b=" + std::to_string(bb + 1) + ")");
                t.b_[{a, lambda, k, bb}] = pi(a, k);
            }
        t.reduced_.push_back(pi);
    }
    return t;
}

Tableau Tableau::from_reduced(std::size_t n, std::size_t r, const std::vector<std::size_t>& characters,
                              const BMap& b, std::uint64_t seed, const TableauConfig& cfg) {
    check_caps(n, r, cfg);
    if (characters.size() != n) throw DimensionMismatch("need one character per column");
    for (std::size_t k = 0; k < n; ++k) {
        if (characters[k] > r) throw TriangularityViolated("character exceeds dim W");
        if (k > 0 && characters[k] > characters[k - 1])
            throw TriangularityViolated("characters must be non-increasing");
    }
    for (const auto& [key, value] : b) {
        const bool ok = key.a < r && key.b < r && key.k < n && key.lambda < n && key.lambda < key.k &&
                        key.b < characters[key.lambda] && characters[key.k] <= key.a;
        if (!ok && value != 0)
            throw TriangularityViolated("coefficient B^{" + std::to_string(key.a + 1) + "," +
                                        std::to_string(key.lambda + 1) + "}_{" + std::to_string(key.k + 1) + "," +
                                        std::to_string(key.b + 1) + "} breaks the triangular pattern");
    }
    std::vector<Mat> gens;
    for (std::size_t lambda = 0; lambda < n; ++lambda)
        for (std::size_t bb = 0; bb < characters[lambda]; ++bb) {
            Mat pi(r, n);
            pi(bb, lambda) = 1;
            for (std::size_t k = lambda + 1; k < n; ++k)
                for (std::size_t a = characters[k]; a < r; ++a) {
                    Scalar v = 0;
                    for (std::size_t mu = 0; mu < k; ++mu)
                        for (std::size_t c = 0; c < characters[mu]; ++c) {
                            auto it = b.find({a, mu, k, c});
                            if (it != b.end()) v += it->second * pi(c, mu);
                        }
                    pi(a, k) = v;
                }
            gens.push_back(pi);
        }
    return from_generators(n, r, gens, seed, cfg);
}

Tableau Tableau::zero(std::size_t n, std::size_t r) { return from_generators(n, r, {}); }

Tableau Tableau::full(std::size_t n, std::size_t r) {
    std::vector<Mat> gens;
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t k = 0; k < n; ++k) {
            Mat m(r, n);
            m(a, k) = 1;
            gens.push_back(m);
        }
    return from_generators(n, r, gens);
}

Scalar Tableau::b(std::size_t a, std::size_t lambda, std::size_t k, std::size_t bb) const {
    auto it = b_.find({a, lambda, k, bb});
    return it == b_.end() ? Scalar(0) : it->second;
}

Subspace Tableau::flattened() const {
    std::vector<Vec> flat;
    for (const auto& g : generators_) flat.push_back(flatten(g));
    return Subspace::span(flat, r_ * n_);
}

Vec Tableau::to_adapted_covector(const Vec& xi) const {
    Vec out(n_);
    for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t j = 0; j < n_; ++j) out[k] += xi[j] * p_(j, k);
    return out;
}

Vec Tableau::from_adapted_covector(const Vec& xi) const {
    Vec out(n_);
    for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t j = 0; j < n_; ++j) out[k] += xi[j] * p_inv_(j, k);
    return out;
}

Vec Tableau::to_adapted_vector(const Vec& v) const { return p_inv_ * v; }

Vec Tableau::from_adapted_vector(const Vec& v) const { return p_ * v; }

std::size_t cartan_bound(const Tableau& t) {
    std::size_t bound = 0;
    for (std::size_t k = 0; k < t.n(); ++k) bound += (k + 1) * t.characters()[k];
    return bound;
}

// ------------------------------------------------------------------ symbol

PolyMat symbol_matrix(const Tableau& t) {
    const std::size_t n = t.n(), r = t.r();
    PolyMat m;
    m.cols = r;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = t.characters()[k]; a < r; ++a) {
            for (std::size_t bb = 0; bb < r; ++bb) {
                Vec c(n);
                if (a == bb) c[k] += 1;
                for (std::size_t lambda = 0; lambda < k; ++lambda) c[lambda] -= t.b(a, lambda, k, bb);
                m.entries.push_back(Poly::linear(c));
            }
            ++m.rows;
        }
    return m;
}

PolyMat symbol_matrix_original(const Tableau& t) {
    PolyMat m = symbol_matrix(t);
    // ξ'_k = Σ_j ξ_j P_{jk}.
    std::vector<Poly> images;
    for (std::size_t k = 0; k < t.n(); ++k) images.push_back(Poly::linear(t.frame_v().col(k)));
    for (auto& e : m.entries) e = e.substitute(images);
    return m;
}

Mat symbol_endo(const Tableau& t, const Vec& phi, const Vec& v) {
    const std::size_t n = t.n(), r = t.r();
    if (phi.size() != n || v.size() != n) throw DimensionMismatch("symbol_endo: covector or vector has wrong length");
    for (std::size_t k = t.ell(); k < n; ++k)
        if (phi[k] != 0) throw SupportViolation("symbol_endo: φ has a component outside U*");
    Mat m(r, r);
    for (std::size_t lambda = 0; lambda < t.ell(); ++lambda) {
        if (phi[lambda] == 0) continue;
        for (std::size_t k = 0; k < n; ++k) {
            if (v[k] == 0) continue;
            const Scalar w = phi[lambda] * v[k];
            if (k == lambda)
                for (std::size_t a = 0; a < t.characters()[k]; ++a) m(a, a) += w;
        }
    }
    for (const auto& [key, value] : t.b())
        if (key.lambda < t.ell()) m(key.a, key.b) += phi[key.lambda] * v[key.k] * value;
    return m;
}

Subspace w_minus(const Tableau& t, std::size_t k) {
    std::vector<Vec> basis;
    for (std::size_t a = t.characters().at(k); a < t.r(); ++a) {
        Vec e(t.r());
        e[a] = 1;
        basis.push_back(e);
    }
    return Subspace::span(basis, t.r());
}

Subspace w_plus(const Tableau& t, std::size_t k) {
    std::vector<Vec> basis;
    for (std::size_t a = 0; a < t.characters().at(k); ++a) {
        Vec e(t.r());
        e[a] = 1;
        basis.push_back(e);
    }
    return Subspace::span(basis, t.r());
}

namespace {

std::size_t check_phi(const Tableau& t, const Vec& phi) {
    if (phi.size() != t.n()) throw DimensionMismatch("φ has wrong length");
    for (std::size_t k = t.ell(); k < t.n(); ++k)
        if (phi[k] != 0) throw SupportViolation("φ has a component outside U*");
    for (std::size_t k = 0; k < t.ell(); ++k)
        if (phi[k] != 0) return k;
    throw ValueError("φ must be nonzero");
}

}  // namespace

Subspace w_one(const Tableau& t, const Vec& phi) {
    check_phi(t, phi);
    const std::size_t r = t.r(), d = t.dim();
    const auto& gens = t.adapted_generators();
    // Unknowns (c, z): Σ_i c_i π_i u_k - φ_k z = 0 for k < ell.
    Mat sys(r * t.ell(), d + r);
    for (std::size_t k = 0; k < t.ell(); ++k)
        for (std::size_t a = 0; a < r; ++a) {
            const std::size_t row = k * r + a;
            for (std::size_t i = 0; i < d; ++i) sys(row, i) = gens[i](a, k);
            sys(row, d + a) = -phi[k];
        }
    std::vector<Vec> zs;
    for (const auto& sol : kernel_basis(sys).basis_vectors()) zs.emplace_back(sol.begin() + static_cast<std::ptrdiff_t>(d), sol.end());
    return Subspace::span(zs, r);
}

Subspace w_one_from_coefficients(const Tableau& t, const Vec& phi) {
    const std::size_t lmin = check_phi(t, phi);
    const std::size_t r = t.r(), n = t.n();
    std::vector<Vec> rows;
    for (std::size_t a = t.characters()[lmin]; a < r; ++a) {
        Vec e(r);
        e[a] = 1;
        rows.push_back(e);
    }
    for (std::size_t mu = 0; mu < t.ell(); ++mu) {
        Vec u(n);
        u[mu] = 1;
        const Mat b = symbol_endo(t, phi, u);
        for (std::size_t a = t.characters()[mu]; a < r; ++a) {
            Vec row = b.row(a);
            row[a] -= phi[mu];
            rows.push_back(row);
        }
    }
    return kernel_basis(Mat::from_rows(rows, r));
}

std::string GnfViolation::describe() const {
    std::ostringstream os;
    os << "condition " << condition << " at (";
    for (std::size_t i = 0; i < indices.size(); ++i) os << (i ? "," : "") << indices[i] + 1;
    os << ")";
    return os.str();
}

GnfResult is_involutive_gnf(const Tableau& t) {
    GnfResult res;
    const auto& s = t.characters();
    for (const auto& [key, value] : t.b())
        if (value != 0 && key.a >= s[key.lambda])
            res.certificate.push_back({1, {key.a, key.lambda, key.k, key.b}});

    // Quadratic conditions. An element Q of A ⊗ V* is fixed by its free
    // entries z^c_{μj} = Q^c_{μj} (c < s_μ, slice j); those with c < s_j and
    // μ <= j are independent, the others follow from the relations of slice μ
    // and symmetry. Involutivity means the relations of rows a >= s_k in the
    // slices j > k hold identically once everything is written in the
    // independent entries: the coefficient of z^d_{νμ} in each residual is a
    // quadratic expression in B.
    const std::size_t n = t.n();
    std::map<std::array<std::size_t, 3>, std::size_t> free_index;  // (d, ν, μ) with ν <= μ, d < s_μ
    std::vector<std::array<std::size_t, 3>> free_list;
    for (std::size_t mu = 0; mu < n; ++mu)
        for (std::size_t nu = 0; nu <= mu; ++nu)
            for (std::size_t d = 0; d < s[mu]; ++d) {
                free_index[{d, nu, mu}] = free_list.size();
                free_list.push_back({d, nu, mu});
            }
    // Relation rows of column k: coefficient lists (μ, c, B^{a,μ}_{k,c}).
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::tuple<std::size_t, std::size_t, Scalar>>> rel;
    for (const auto& [key, value] : t.b())
        if (value != 0) rel[{key.a, key.k}].emplace_back(key.lambda, key.b, value);

    std::map<std::array<std::size_t, 3>, Vec> memo;
    std::function<const Vec&(std::size_t, std::size_t, std::size_t)> expr =
        [&](std::size_t c, std::size_t mu, std::size_t j) -> const Vec& {
        const std::array<std::size_t, 3> key{c, mu, j};
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Vec out(free_list.size());
        if (c < s[j]) {
            out[free_index.at({c, std::min(mu, j), std::max(mu, j)})] = 1;
        } else {
            // s_j <= c < s_μ forces μ < j; Q^c_{μj} = Q^c_{jμ} from column j's relations.
            for (const auto& [nu, d, coef] : rel[{c, j}]) {
                const Vec& sub = expr(d, nu, mu);
                for (std::size_t i = 0; i < out.size(); ++i)
                    if (sub[i] != 0) out[i] += coef * sub[i];
            }
        }
        return memo.emplace(key, std::move(out)).first->second;
    };
    auto apply = [&](std::size_t a, std::size_t k, std::size_t j) {
        Vec out(free_list.size());
        for (const auto& [mu, c, coef] : rel[{a, k}]) {
            const Vec& sub = expr(c, mu, j);
            for (std::size_t i = 0; i < out.size(); ++i)
                if (sub[i] != 0) out[i] += coef * sub[i];
        }
        return out;
    };
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = k + 1; j < n; ++j)
            for (std::size_t a = s[k]; a < t.r(); ++a) {
                const Vec lhs = apply(a, k, j), rhs = apply(a, j, k);
                for (std::size_t i = 0; i < free_list.size(); ++i)
                    if (lhs[i] != rhs[i]) {
                        const auto& [d, nu, mu] = free_list[i];
                        res.certificate.push_back({2, {nu, mu, k, j, a, d}});
                    }
            }
    res.involutive = res.certificate.empty();
    return res;
}

Subspace cauchy_space(const Tableau& t) {
    std::vector<Vec> rows;
    for (const auto& g : t.generators())
        for (std::size_t a = 0; a < t.r(); ++a) rows.push_back(g.row(a));
    return kernel_basis(Mat::from_rows(rows, t.n()));
}

Mat basis_columns(const Subspace& x) { return x.basis().transpose(); }

Tableau restrict(const Tableau& t, const Subspace& x, std::uint64_t seed, const TableauConfig& cfg) {
    if (x.ambient() != t.n()) throw DimensionMismatch("restrict: subspace is not in V");
    if (x.dim() == 0) throw ValueError("restrict: subspace must be nonzero");
    const Mat xb = basis_columns(x);
    std::vector<Vec> flat;
    for (const auto& g : t.generators()) flat.push_back((g * xb).entries());
    const Subspace span = Subspace::span(flat, t.r() * x.dim());
    std::vector<Mat> gens;
    for (const auto& v : span.basis_vectors()) gens.push_back(unflatten(v, t.r(), x.dim()));
    return Tableau::from_generators(x.dim(), t.r(), gens, seed, cfg);
}

// ---------------------------------------------------------- LinearTableau

LinearTableau LinearTableau::of(const Tableau& t) { return {t.r(), t.n(), t.flattened()}; }

LinearTableau LinearTableau::prolongation() const {
    const std::size_t d = space.dim(), n = v_dim, w = w_dim;
    const auto basis = space.basis_vectors();
    // Unknowns c_{i,m}: Q = Σ c_{i,m} T_i ⊗ e^m, need Q^a_{k m} = Q^a_{m k}.
    std::vector<Vec> rows;
    for (std::size_t a = 0; a < w; ++a)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t m = k + 1; m < n; ++m) {
                Vec row(d * n);
                for (std::size_t i = 0; i < d; ++i) {
                    row[i * n + m] += basis[i][a * n + k];
                    row[i * n + k] -= basis[i][a * n + m];
                }
                rows.push_back(row);
            }
    Subspace sol = rows.empty() ? Subspace::full(d * n) : kernel_basis(Mat::from_rows(rows, d * n));
    // New W is T itself, coordinates c_i; new V* slot is m.
    return {d, n, sol};
}

}  // namespace elemtab
