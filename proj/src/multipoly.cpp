#include "elemtab/multipoly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace elemtab {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVars) throw DimensionMismatch("Monomial: too many variables");
}

Monomial::Monomial(std::size_t nvars, std::initializer_list<unsigned> exps) : Monomial(nvars) {
    if (exps.size() != nvars) throw DimensionMismatch("Monomial: exponent count mismatch");
    std::size_t k = 0;
    for (unsigned e : exps) set(k++, e);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t k, unsigned power) {
    Monomial m(nvars);
    m.set(k, power);
    return m;
}

void Monomial::set(std::size_t k, unsigned power) {
    if (k >= n_) throw DimensionMismatch("Monomial: variable index out of range");
    deg_ = deg_ - e_[k] + power;
    e_[k] = static_cast<std::uint16_t>(power);
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t k = 0; k < n_; ++k)
        if (e_[k] > o.e_[k]) return false;
    return true;
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t k = 0; k < n_; ++k)
        if (e_[k] != 0 && o.e_[k] != 0) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m = *this;
    for (std::size_t k = 0; k < n_; ++k) m.e_[k] = static_cast<std::uint16_t>(m.e_[k] + o.e_[k]);
    m.deg_ = deg_ + o.deg_;
    return m;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
    Monomial m = o;
    for (std::size_t k = 0; k < n_; ++k) m.e_[k] = static_cast<std::uint16_t>(o.e_[k] - e_[k]);
    m.deg_ = o.deg_ - deg_;
    return m;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial m(n_);
    for (std::size_t k = 0; k < n_; ++k) m.set(k, std::max(e_[k], o.e_[k]));
    return m;
}

// ---------------------------------------------------------- MonomialOrder

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    unsigned da = 0, db = 0;
    for (std::size_t k = lo; k < hi; ++k) {
        da += a[k];
        db += b[k];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t k = hi; k-- > lo;)
        if (a[k] != b[k]) return a[k] > b[k] ? -1 : 1;
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    const std::size_t n = a.nvars();
    switch (kind_) {
        case Kind::Grevlex:
            return grevlex_range(a, b, 0, n);
        case Kind::Lex:
            for (std::size_t k = 0; k < n; ++k)
                if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
            return 0;
        case Kind::Block: {
            const std::size_t s = std::min(split_, n);
            if (int c = grevlex_range(a, b, 0, s)) return c;
            return grevlex_range(a, b, s, n);
        }
    }
    return 0;
}

// -------------------------------------------------------------------- Poly

Poly Poly::constant(std::size_t nvars, const Scalar& c, MonomialOrder order) {
    Poly p(nvars, order);
    if (c != 0) p.terms_.push_back({Monomial(nvars), c});
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t k, MonomialOrder order) {
    return monomial(Monomial::variable(nvars, k), 1, order);
}

Poly Poly::monomial(const Monomial& m, const Scalar& c, MonomialOrder order) {
    Poly p(m.nvars(), order);
    if (c != 0) p.terms_.push_back({m, c});
    return p;
}

Poly Poly::linear(const Vec& c, MonomialOrder order) {
    Poly p(c.size(), order);
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) p.terms_.push_back({Monomial::variable(c.size(), k), c[k]});
    p.normalize();
    return p;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view s, std::size_t nvars, MonomialOrder order)
        : s_(s), n_(nvars), order_(order) {}

    Poly parse() {
        Poly result(n_, order_);
        skip();
        if (pos_ == s_.size()) fail("empty polynomial");
        bool first = true;
        while (pos_ < s_.size()) {
            Scalar sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            result = result + term().scaled(sign);
            skip();
        }
        return result;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw ValueError("polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
    }
    std::string_view digits() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return s_.substr(start, pos_ - start);
    }

    Poly term() {
        Scalar coeff = 1;
        Monomial mono(n_);
        for (;;) {
            skip();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                const std::size_t start = pos_;
                digits();
                if (peek() == '/') {
                    ++pos_;
                    digits();
                }
                coeff *= parse_scalar(s_.substr(start, pos_ - start));
            } else if (peek() == 'x') {
                ++pos_;
                const std::size_t k = std::stoul(std::string(digits()));
                if (k == 0 || k > n_) fail("variable index out of range");
                unsigned e = 1;
                skip();
                if (peek() == '^') {
                    ++pos_;
                    skip();
                    e = static_cast<unsigned>(std::stoul(std::string(digits())));
                }
                mono.set(k - 1, mono[k - 1] + e);
            } else {
                fail("expected a number or a variable");
            }
            skip();
            if (peek() != '*') break;
            ++pos_;
        }
        return Poly::monomial(mono, coeff, order_);
    }

    std::string_view s_;
    std::size_t n_;
    MonomialOrder order_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text, std::size_t nvars, MonomialOrder order) {
    return PolyParser(text, nvars, order).parse();
}

Poly Poly::from_terms(std::size_t nvars, std::vector<Term> terms, MonomialOrder order) {
    Poly p(nvars, order);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [this](const Term& a, const Term& b) { return order_.compare(a.mono, b.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (out.back().coeff == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

unsigned Poly::degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Poly::is_homogeneous() const {
    for (const auto& t : terms_)
        if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
}

std::vector<bool> Poly::support() const {
    std::vector<bool> s(nvars_, false);
    for (const auto& t : terms_)
        for (std::size_t k = 0; k < nvars_; ++k)
            if (t.mono[k] != 0) s[k] = true;
    return s;
}

Poly Poly::with_order(const MonomialOrder& order) const {
    if (order == order_) return *this;
    Poly p = *this;
    p.order_ = order;
    p.normalize();
    return p;
}

Poly Poly::operator+(const Poly& o) const { return sub_mul(-1, Monomial(nvars_), o); }

Poly Poly::operator-(const Poly& o) const { return sub_mul(1, Monomial(nvars_), o); }

Poly Poly::operator-() const { return scaled(-1); }

Poly Poly::operator*(const Poly& o) const {
    if (nvars_ != o.nvars_) throw DimensionMismatch("Poly: variable count mismatch");
    Poly acc(nvars_, order_);
    for (const auto& t : terms_) acc = acc.sub_mul(-t.coeff, t.mono, o);
    return acc;
}

Poly Poly::scaled(const Scalar& c) const {
    Poly p(nvars_, order_);
    if (c == 0) return p;
    p.terms_ = terms_;
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
}

Poly Poly::mul_term(const Monomial& m, const Scalar& c) const {
    Poly p(nvars_, order_);
    if (c == 0) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
    return p;
}

Poly Poly::monic() const {
    if (terms_.empty()) return *this;
    return scaled(1 / leading().coeff);
}

Poly Poly::sub_mul(const Scalar& c, const Monomial& m, const Poly& g) const {
    if (nvars_ != g.nvars_) throw DimensionMismatch("Poly: variable count mismatch");
    const Poly& gg = g.order_ == order_ ? g : g.with_order(order_);
    Poly out(nvars_, order_);
    if (c == 0 || gg.is_zero()) {
        out.terms_ = terms_;
        return out;
    }
    out.terms_.reserve(terms_.size() + gg.terms_.size());
    auto i = terms_.begin();
    auto j = gg.terms_.begin();
    while (i != terms_.end() || j != gg.terms_.end()) {
        if (j == gg.terms_.end()) {
            out.terms_.push_back(*i++);
            continue;
        }
        Monomial mj = j->mono * m;
        const int cmp = i == terms_.end() ? -1 : order_.compare(i->mono, mj);
        if (cmp > 0) {
            out.terms_.push_back(*i++);
        } else if (cmp < 0) {
            out.terms_.push_back({mj, -c * j->coeff});
            ++j;
        } else {
            Scalar v = i->coeff - c * j->coeff;
            if (v != 0) out.terms_.push_back({mj, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

Scalar Poly::evaluate(const Vec& point) const {
    if (point.size() != nvars_) throw DimensionMismatch("Poly::evaluate: point has wrong length");
    Scalar acc = 0;
    for (const auto& t : terms_) {
        Scalar v = t.coeff;
        for (std::size_t k = 0; k < nvars_; ++k)
            for (unsigned e = 0; e < t.mono[k]; ++e) v *= point[k];
        acc += v;
    }
    return acc;
}

Poly Poly::remap(std::size_t nvars, const std::vector<std::size_t>& map) const {
    if (map.size() != nvars_) throw DimensionMismatch("Poly::remap: map has wrong length");
    Poly p(nvars, order_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(nvars);
        for (std::size_t k = 0; k < nvars_; ++k)
            if (t.mono[k] != 0) m.set(map[k], m[map[k]] + t.mono[k]);
        p.terms_.push_back({m, t.coeff});
    }
    p.normalize();
    return p;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (images.size() != nvars_) throw DimensionMismatch("Poly::substitute: image count mismatch");
    if (images.empty()) return *this;
    const std::size_t m = images.front().nvars();
    const MonomialOrder ord = images.front().order();
    std::vector<std::vector<Poly>> powers(nvars_);
    auto power = [&](std::size_t k, unsigned e) -> const Poly& {
        auto& pk = powers[k];
        if (pk.empty()) pk.push_back(Poly::constant(m, 1, ord));
        while (pk.size() <= e) pk.push_back(pk.back() * images[k]);
        return pk[e];
    };
    Poly acc(m, ord);
    for (const auto& t : terms_) {
        Poly prod = Poly::constant(m, t.coeff, ord);
        for (std::size_t k = 0; k < nvars_; ++k)
            if (t.mono[k] != 0) prod = prod * power(k, t.mono[k]);
        acc = acc + prod;
    }
    return acc;
}

bool Poly::operator==(const Poly& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    const Poly& oo = o.order_ == order_ ? o : o.with_order(order_);
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == oo.terms_[i].mono) || terms_[i].coeff != oo.terms_[i].coeff) return false;
    return true;
}

std::string to_string(const Poly& p) {
    const Poly q = p.with_order(MonomialOrder::grevlex());
    if (q.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : q.terms()) {
        const bool neg = t.coeff < 0;
        const Scalar mag = neg ? Scalar(-t.coeff) : t.coeff;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        std::string mono;
        for (std::size_t k = 0; k < q.nvars(); ++k) {
            if (t.mono[k] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += 'x' + std::to_string(k + 1);
            if (t.mono[k] > 1) mono += '^' + std::to_string(t.mono[k]);
        }
        if (mono.empty())
            os << to_string(mag);
        else if (mag == 1)
            os << mono;
        else
            os << to_string(mag) << '*' << mono;
    }
    return os.str();
}

// ------------------------------------------------------------- Groebner

namespace {

const Poly* find_reducer(const Monomial& m, const std::vector<Poly>& basis) {
    for (const auto& g : basis)
        if (g.leading().mono.divides(m)) return &g;
    return nullptr;
}

/// Full reduction of f by a list of monic polynomials.
Poly reduce(Poly f, const std::vector<Poly>& basis) {
    std::vector<Term> out;
    while (!f.is_zero()) {
        const Term lt = f.leading();
        if (const Poly* g = find_reducer(lt.mono, basis))
            f = f.sub_mul(lt.coeff, g->leading().mono.quotient_of(lt.mono), *g);
        else {
            out.push_back(lt);
            f = f - Poly::monomial(lt.mono, lt.coeff, f.order());
        }
    }
    return Poly::from_terms(f.nvars(), std::move(out), f.order());
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
};

}  // namespace

std::vector<Poly> buchberger(std::vector<Poly> gens, const MonomialOrder& order, const GroebnerConfig& cfg) {
    std::vector<Poly> g;
    for (auto& f : gens) {
        Poly h = f.with_order(order);
        if (!h.is_zero()) g.push_back(h.monic());
    }
    if (g.empty()) return g;
    const std::size_t nvars = g.front().nvars();
    for (const auto& f : g)
        if (f.nvars() != nvars) throw DimensionMismatch("buchberger: variable count mismatch");
    for (const auto& f : g)
        if (f.is_constant()) return {Poly::constant(nvars, 1, order)};

    if (g.size() > cfg.max_generators)
        throw GeneratorCapExceeded("Groebner input exceeds " + std::to_string(cfg.max_generators) + " generators");

    std::vector<Pair> pairs;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto add_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            pairs.push_back({i, j, g[i].leading().mono.lcm(g[j].leading().mono)});
            pending.insert({i, j});
        }
    };
    for (std::size_t j = 1; j < g.size(); ++j) add_pairs(j);

    while (!pairs.empty()) {
        auto best = pairs.begin();
        for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
            if (it->lcm.degree() < best->lcm.degree() ||
                (it->lcm.degree() == best->lcm.degree() && order.compare(it->lcm, best->lcm) < 0))
                best = it;
        }
        const Pair p = *best;
        pairs.erase(best);
        pending.erase({p.i, p.j});

        const Monomial& li = g[p.i].leading().mono;
        const Monomial& lj = g[p.j].leading().mono;
        if (li.coprime(lj)) continue;
        bool chain = false;
        for (std::size_t k = 0; k < g.size() && !chain; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!g[k].leading().mono.divides(p.lcm)) continue;
            auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) chain = true;
        }
        if (chain) continue;

        Poly s = g[p.i].mul_term(li.quotient_of(p.lcm), 1).sub_mul(1, lj.quotient_of(p.lcm), g[p.j]);
        Poly h = reduce(std::move(s), g);
        if (h.is_zero()) continue;
        if (h.is_constant()) return {Poly::constant(nvars, 1, order)};
        g.push_back(h.monic());
        if (g.size() > cfg.max_generators)
            throw GeneratorCapExceeded("Groebner basis exceeded " + std::to_string(cfg.max_generators) + " generators");
        add_pairs(g.size() - 1);
    }

    // Minimal basis, then inter-reduce.
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& mi = g[i].leading().mono;
            const Monomial& mj = g[j].leading().mono;
            if (mj.divides(mi) && (!(mi == mj) || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    std::vector<Poly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        const Term lt = minimal[i].leading();
        Poly tail = minimal[i] - Poly::monomial(lt.mono, lt.coeff, order);
        reduced.push_back(Poly::monomial(lt.mono, 1, order) + reduce(tail, others).scaled(1 / lt.coeff));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return order.compare(a.leading().mono, b.leading().mono) < 0;
    });
    return reduced;
}

Ideal buchberger_ideal(std::size_t nvars, std::vector<Poly> gens, const MonomialOrder& order,
                       const GroebnerConfig& cfg) {
    return Ideal(nvars, std::move(gens), order, cfg);
}

// ------------------------------------------------------------------- Ideal

Ideal::Ideal(std::size_t nvars, std::vector<Poly> generators, MonomialOrder order, const GroebnerConfig& cfg)
    : nvars_(nvars), order_(order) {
    for (auto& f : generators) {
        if (f.nvars() != nvars) throw DimensionMismatch("Ideal: generator has wrong variable count");
        if (!f.is_zero()) generators_.push_back(f.with_order(order));
    }
    gb_ = buchberger(generators_, order, cfg);
}

Ideal Ideal::unit(std::size_t nvars) { return Ideal(nvars, {Poly::constant(nvars, 1)}); }

bool Ideal::contains(const Poly& f) const { return normal_form(f, *this).is_zero(); }

bool Ideal::is_homogeneous() const {
    return std::all_of(generators_.begin(), generators_.end(), [](const Poly& f) { return f.is_homogeneous(); });
}

Ideal Ideal::with_order(const MonomialOrder& order, const GroebnerConfig& cfg) const {
    if (order == order_) return *this;
    Ideal out(nvars_, gb_, order, cfg);
    return out;
}

bool Ideal::same_ideal(const Ideal& o) const {
    if (nvars_ != o.nvars_) return false;
    const Ideal a = with_order(MonomialOrder::grevlex());
    const Ideal b = o.with_order(MonomialOrder::grevlex());
    return a.gb_ == b.gb_;
}

Poly normal_form(const Poly& f, const Ideal& gb) {
    if (f.nvars() != gb.nvars()) throw DimensionMismatch("normal_form: variable count mismatch");
    return reduce(f.with_order(gb.order()), gb.gb());
}

// ------------------------------------------------- elimination & saturation

namespace {

std::vector<std::size_t> shift_map(std::size_t n, std::size_t by) {
    std::vector<std::size_t> m(n);
    for (std::size_t k = 0; k < n; ++k) m[k] = k + by;
    return m;
}

/// Keeps basis elements free of variables [0, drop) and maps them back
/// into `nvars` variables by subtracting `drop` from every index.
std::vector<Poly> strip_leading_vars(const std::vector<Poly>& basis, std::size_t drop, std::size_t nvars) {
    std::vector<Poly> out;
    for (const auto& f : basis) {
        const auto sup = f.support();
        if (std::any_of(sup.begin(), sup.begin() + static_cast<std::ptrdiff_t>(drop), [](bool b) { return b; }))
            continue;
        std::vector<std::size_t> map(f.nvars(), 0);
        for (std::size_t k = drop; k < f.nvars(); ++k) map[k] = k - drop;
        out.push_back(f.remap(nvars, map).with_order(MonomialOrder::grevlex()));
    }
    return out;
}

}  // namespace

Ideal eliminate(const Ideal& i, const std::vector<bool>& keep, const GroebnerConfig& cfg) {
    const std::size_t n = i.nvars();
    if (keep.size() != n) throw DimensionMismatch("eliminate: keep mask has wrong length");
    std::vector<std::size_t> map(n), inverse(n);
    std::size_t next = 0;
    for (std::size_t k = 0; k < n; ++k)
        if (!keep[k]) map[k] = next++;
    const std::size_t split = next;
    for (std::size_t k = 0; k < n; ++k)
        if (keep[k]) map[k] = next++;
    for (std::size_t k = 0; k < n; ++k) inverse[map[k]] = k;

    std::vector<Poly> gens;
    for (const auto& f : i.gb()) gens.push_back(f.remap(n, map));
    const auto basis = buchberger(gens, MonomialOrder::block(split), cfg);
    std::vector<Poly> out;
    for (const auto& f : basis) {
        const auto sup = f.support();
        if (std::any_of(sup.begin(), sup.begin() + static_cast<std::ptrdiff_t>(split), [](bool b) { return b; }))
            continue;
        out.push_back(f.remap(n, inverse).with_order(MonomialOrder::grevlex()));
    }
    return Ideal(n, out, MonomialOrder::grevlex(), cfg);
}

Ideal saturate(const Ideal& i, const Poly& f, const GroebnerConfig& cfg) {
    const std::size_t n = i.nvars();
    if (f.nvars() != n) throw DimensionMismatch("saturate: variable count mismatch");
    if (n + 1 > kMaxVars) throw DimensionMismatch("saturate: no room for the auxiliary variable");
    const auto map = shift_map(n, 1);
    const auto order = MonomialOrder::block(1);
    std::vector<Poly> gens;
    for (const auto& g : i.gb()) gens.push_back(g.remap(n + 1, map).with_order(order));
    Poly t = Poly::variable(n + 1, 0, order);
    gens.push_back(Poly::constant(n + 1, 1, order) - t * f.remap(n + 1, map).with_order(order));
    return Ideal(n, strip_leading_vars(buchberger(gens, order, cfg), 1, n), MonomialOrder::grevlex(), cfg);
}

Ideal saturate_by_variable(const Ideal& i, std::size_t k, const GroebnerConfig& cfg) {
    const std::size_t n = i.nvars();
    if (k >= n) throw DimensionMismatch("saturate_by_variable: variable index out of range");
    if (!i.is_homogeneous()) throw NonHomogeneous("saturate_by_variable needs a homogeneous ideal");
    std::vector<std::size_t> map(n), inverse(n);
    std::size_t next = 0;
    for (std::size_t j = 0; j < n; ++j)
        if (j != k) map[j] = next++;
    map[k] = n - 1;
    for (std::size_t j = 0; j < n; ++j) inverse[map[j]] = j;
    std::vector<Poly> gens;
    for (const auto& g : i.gb()) gens.push_back(g.remap(n, map));
    std::vector<Poly> out;
    for (const auto& g : buchberger(gens, MonomialOrder::grevlex(), cfg)) {
        unsigned e = g.leading().mono[n - 1];
        for (const auto& t : g.terms()) e = std::min(e, t.mono[n - 1]);
        Poly q(n);
        for (const auto& t : g.terms()) {
            Monomial m = t.mono;
            m.set(n - 1, m[n - 1] - e);
            q = q + Poly::monomial(m, t.coeff);
        }
        out.push_back(q.remap(n, inverse));
    }
    return Ideal(n, out, MonomialOrder::grevlex(), cfg);
}

Ideal intersect(const Ideal& i, const Ideal& j, const GroebnerConfig& cfg) {
    const std::size_t n = i.nvars();
    if (j.nvars() != n) throw DimensionMismatch("intersect: variable count mismatch");
    if (n + 1 > kMaxVars) throw DimensionMismatch("intersect: no room for the auxiliary variable");
    if (i.is_unit()) return j;
    if (j.is_unit()) return i;
    const auto map = shift_map(n, 1);
    const auto order = MonomialOrder::block(1);
    Poly t = Poly::variable(n + 1, 0, order);
    Poly one_minus_t = Poly::constant(n + 1, 1, order) - t;
    std::vector<Poly> gens;
    for (const auto& g : i.gb()) gens.push_back(t * g.remap(n + 1, map).with_order(order));
    for (const auto& g : j.gb()) gens.push_back(one_minus_t * g.remap(n + 1, map).with_order(order));
    return Ideal(n, strip_leading_vars(buchberger(gens, order, cfg), 1, n), MonomialOrder::grevlex(), cfg);
}

Ideal saturate_irrelevant(const Ideal& i, const GroebnerConfig& cfg) {
    if (!i.is_homogeneous()) throw NonHomogeneous("saturate_irrelevant needs homogeneous generators");
    if (i.is_zero() || i.is_unit()) return i.with_order(MonomialOrder::grevlex(), cfg);
    std::optional<Ideal> acc;
    for (std::size_t k = 0; k < i.nvars(); ++k) {
        Ideal sk = saturate_by_variable(i, k, cfg);
        if (sk.is_unit()) continue;
        acc = acc ? intersect(*acc, sk, cfg) : sk;
    }
    return acc ? *acc : Ideal::unit(i.nvars());
}

// ------------------------------------------------------------ linear parts

namespace {

/// Kernel of c -> sum_k c_k NF(p_k), as a subspace of Q^{polys.size()}.
Subspace relation_space(const std::vector<Poly>& polys, const Ideal& i) {
    std::vector<Poly> nfs;
    std::vector<Monomial> monos;
    for (const auto& p : polys) {
        nfs.push_back(normal_form(p, i));
        for (const auto& t : nfs.back().terms())
            if (std::none_of(monos.begin(), monos.end(), [&](const Monomial& m) { return m == t.mono; }))
                monos.push_back(t.mono);
    }
    Mat m(monos.size(), polys.size());
    for (std::size_t k = 0; k < nfs.size(); ++k)
        for (const auto& t : nfs[k].terms()) {
            const auto row = std::find(monos.begin(), monos.end(), t.mono) - monos.begin();
            m(static_cast<std::size_t>(row), k) = t.coeff;
        }
    return kernel_basis(m);
}

}  // namespace

Subspace linear_part(const Ideal& i) {
    std::vector<Poly> vars;
    for (std::size_t k = 0; k < i.nvars(); ++k) vars.push_back(Poly::variable(i.nvars(), k));
    return relation_space(vars, i);
}

Subspace affine_linear_part(const Ideal& i) {
    std::vector<Poly> forms{Poly::constant(i.nvars(), 1)};
    for (std::size_t k = 0; k < i.nvars(); ++k) forms.push_back(Poly::variable(i.nvars(), k));
    return relation_space(forms, i);
}

// -------------------------------------------------------------- dimension

int ideal_dimension(const Ideal& i) {
    if (i.is_unit()) return -1;
    const std::size_t n = i.nvars();
    std::vector<std::uint32_t> lead_masks;
    for (const auto& g : i.gb()) {
        std::uint32_t mask = 0;
        for (std::size_t k = 0; k < n; ++k)
            if (g.leading().mono[k] != 0) mask |= 1u << k;
        lead_masks.push_back(mask);
    }
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        const int size = std::popcount(s);
        if (size <= best) continue;
        if (std::all_of(lead_masks.begin(), lead_masks.end(), [&](std::uint32_t m) { return (m & ~s) != 0; }))
            best = size;
    }
    return best;
}

bool radical_membership(const Poly& f, const Ideal& i, const GroebnerConfig& cfg) {
    if (f.nvars() != i.nvars()) throw DimensionMismatch("radical_membership: variable count mismatch");
    if (f.is_zero() || i.is_unit()) return true;
    const std::size_t n = i.nvars();
    if (n + 1 > kMaxVars) throw DimensionMismatch("radical_membership: no room for the auxiliary variable");
    const auto map = shift_map(n, 1);
    std::vector<Poly> gens;
    for (const auto& g : i.gb()) gens.push_back(g.remap(n + 1, map).with_order(MonomialOrder::grevlex()));
    Poly t = Poly::variable(n + 1, 0);
    gens.push_back(Poly::constant(n + 1, 1) - t * f.remap(n + 1, map).with_order(MonomialOrder::grevlex()));
    const auto basis = buchberger(gens, MonomialOrder::grevlex(), cfg);
    return basis.size() == 1 && basis.front().is_constant();
}

// ------------------------------------------------------- zero-dimensional

std::optional<std::size_t> quotient_dimension(const Ideal& i) {
    if (i.is_unit()) return 0;
    const std::size_t n = i.nvars();
    std::vector<Monomial> leads;
    for (const auto& g : i.gb()) leads.push_back(g.leading().mono);
    std::vector<unsigned> bound(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        for (const auto& m : leads)
            if (m.degree() == m[k] && m[k] > 0 && (bound[k] == 0 || m[k] < bound[k])) bound[k] = m[k];
        if (bound[k] == 0) return std::nullopt;
    }
    std::size_t count = 0;
    Monomial cur(n);
    // Depth-first walk over the box of exponents below the pure powers.
    auto walk = [&](auto&& self, std::size_t k) -> void {
        if (k == n) {
            if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& m) { return m.divides(cur); })) ++count;
            return;
        }
        for (unsigned e = 0; e < bound[k]; ++e) {
            cur.set(k, e);
            if (std::any_of(leads.begin(), leads.end(), [&](const Monomial& m) { return m.divides(cur); })) break;
            self(self, k + 1);
        }
        cur.set(k, 0);
    };
    walk(walk, 0);
    return count;
}

Vec minimal_polynomial(const Ideal& i, std::size_t k) {
    const auto qdim = quotient_dimension(i);
    if (!qdim) throw NotZeroDimensional("minimal_polynomial: quotient ring is infinite-dimensional");
    if (i.is_unit()) return {Scalar(1)};
    const std::size_t n = i.nvars();
    const Poly x = Poly::variable(n, k, i.order());
    std::vector<Poly> powers{normal_form(Poly::constant(n, 1, i.order()), i)};
    for (std::size_t d = 1; d <= *qdim; ++d) {
        powers.push_back(normal_form(powers.back() * x, i));
        std::vector<Monomial> monos;
        for (const auto& p : powers)
            for (const auto& t : p.terms())
                if (std::none_of(monos.begin(), monos.end(), [&](const Monomial& m) { return m == t.mono; }))
                    monos.push_back(t.mono);
        Mat m(monos.size(), powers.size());
        for (std::size_t j = 0; j < powers.size(); ++j)
            for (const auto& t : powers[j].terms())
                m(static_cast<std::size_t>(std::find(monos.begin(), monos.end(), t.mono) - monos.begin()), j) = t.coeff;
        const Subspace ker = kernel_basis(m);
        if (ker.dim() == 0) continue;
        // The first dependency is unique up to scale and involves x^d.
        Vec c = ker.basis().row(0);
        const Scalar lead = c[d];
        for (auto& v : c) v /= lead;
        return c;
    }
    throw InternalInvariant("minimal_polynomial: no dependency within the quotient dimension");
}

Ideal zero_dim_radical(const Ideal& i, const GroebnerConfig& cfg) {
    if (!quotient_dimension(i)) throw NotZeroDimensional("zero_dim_radical: quotient ring is infinite-dimensional");
    if (i.is_unit()) return i;
    const std::size_t n = i.nvars();
    std::vector<Poly> gens = i.gb();
    for (std::size_t k = 0; k < n; ++k) {
        const Vec sq = univariate::squarefree_part(minimal_polynomial(i, k));
        Poly p(n, i.order());
        for (std::size_t d = 0; d < sq.size(); ++d)
            p = p + Poly::monomial(Monomial::variable(n, k, static_cast<unsigned>(d)), sq[d], i.order());
        gens.push_back(p);
    }
    return Ideal(n, gens, MonomialOrder::grevlex(), cfg);
}

// ------------------------------------------------------------- univariate

namespace univariate {

Vec trim(Vec p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Vec derivative(const Vec& p) {
    Vec d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
    return trim(d);
}

std::pair<Vec, Vec> divmod(const Vec& a, const Vec& b) {
    Vec r = trim(a);
    const Vec d = trim(b);
    if (d.empty()) throw ValueError("univariate division by zero polynomial");
    if (r.size() < d.size()) return {Vec{}, r};
    Vec q(r.size() - d.size() + 1);
    while (!r.empty() && r.size() >= d.size()) {
        const std::size_t shift = r.size() - d.size();
        const Scalar c = r.back() / d.back();
        q[shift] = c;
        for (std::size_t k = 0; k < d.size(); ++k) r[k + shift] -= c * d[k];
        r.pop_back();
        r = trim(r);
    }
    return {trim(q), r};
}

Vec gcd(Vec a, Vec b) {
    a = trim(a);
    b = trim(b);
    while (!b.empty()) {
        Vec r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const Scalar lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

Vec squarefree_part(const Vec& p) {
    const Vec g = gcd(p, derivative(p));
    Vec q = divmod(p, g.empty() ? Vec{Scalar(1)} : g).first;
    if (!q.empty()) {
        const Scalar lead = q.back();
        for (auto& c : q) c /= lead;
    }
    return q;
}

}  // namespace univariate

}  // namespace elemtab
