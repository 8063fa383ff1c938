#include "lojex/families.hpp"

#include "lojex/error.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

namespace lojex {

namespace {

// n = s^2 k with k squarefree (up to prime factors above 10^6 occurring
// squared inside a huge cofactor, which never happens at the sizes used).
std::pair<Int, Int> squarefree_split(Int n)
{
    Int s = 1, k = 1;
    for (unsigned long p = 2; p < 1000000 && Int(p) * Int(p) <= n; ++p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        for (unsigned i = 0; i < e / 2; ++i)
            s *= p;
        if (e % 2)
            k *= p;
    }
    if (n > 1) {
        if (mpz_perfect_square_p(n.get_mpz_t())) {
            Int r;
            mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
            s *= r;
        } else {
            k *= n;
        }
    }
    return {s, k};
}

bool compatible(const Surd& x, const Surd& y) { return x.is_rational() || y.is_rational() || x.d() == y.d(); }

Surd affine_at(const Rat& c0, const Rat& c1, const Surd& t) { return Surd(c0) + Surd(c1) * t; }

// h_ij(t) = alpha_i(t) beta_j(t) - alpha_j(t) beta_i(t).
Surd cross_at(const FamilyCandidate& ci, const FamilyCandidate& cj, const Surd& t)
{
    return affine_at(ci.a0, ci.a1, t) * affine_at(cj.b0, cj.b1, t) -
           affine_at(cj.a0, cj.a1, t) * affine_at(ci.b0, ci.b1, t);
}

// Real roots of c2 t^2 + c1 t + c0 in the open interval (0, 1); the zero
// polynomial has none by convention.
std::vector<Surd> roots_in_unit(const Rat& c2, const Rat& c1, const Rat& c0)
{
    std::vector<Surd> roots;
    if (c2.is_zero()) {
        if (!c1.is_zero())
            roots.emplace_back(-c0 / c1);
    } else {
        Rat disc = c1 * c1 - Rat(4) * c2 * c0;
        Rat centre = -c1 / (Rat(2) * c2);
        if (disc.is_zero()) {
            roots.emplace_back(centre);
        } else if (disc.sign() > 0) {
            // sqrt(p/q) = sqrt(p q) / q
            Rat scale = (Rat(2) * c2 * Rat(disc.den())).inverse();
            Int pq = disc.num() * disc.den();
            roots.emplace_back(centre, scale, pq);
            roots.emplace_back(centre, -scale, pq);
        }
    }
    std::vector<Surd> out;
    for (auto& r : roots)
        if (r.sign() > 0 && (r - Surd(Rat(1))).sign() < 0)
            out.push_back(std::move(r));
    return out;
}

std::vector<Surd> pair_roots(const FamilyCandidate& ci, const FamilyCandidate& cj)
{
    Rat c0 = ci.a0 * cj.b0 - cj.a0 * ci.b0;
    Rat c1 = ci.a0 * cj.b1 + ci.a1 * cj.b0 - cj.a0 * ci.b1 - cj.a1 * ci.b0;
    Rat c2 = ci.a1 * cj.b1 - cj.a1 * ci.b1;
    return roots_in_unit(c2, c1, c0);
}

// Rational strictly between lo < hi.
Rat rational_between(const Surd& lo, const Surd& hi)
{
    Rat width = 1;
    for (;;) {
        auto bl = lo.bounds(width);
        auto bh = hi.bounds(width);
        if (bl.second < bh.first)
            return (bl.second + bh.first) / Rat(2);
        width /= Rat(16);
    }
}

// beta/alpha as (constant, slope) when it is affine.
std::optional<std::pair<Rat, Rat>> inverse_affine(const FamilyCandidate& c)
{
    if (c.a1.is_zero())
        return std::make_pair(c.b0 / c.a0, c.b1 / c.a0);
    if ((c.b1 * c.a0 - c.b0 * c.a1).is_zero())
        return std::make_pair(c.b0 / c.a0, Rat(0));
    return std::nullopt;
}

} // namespace

Surd::Surd(Rat a, Rat b, Int d) : a_(std::move(a)), b_(std::move(b))
{
    if (d < 0)
        throw InvalidInput("negative radicand");
    if (d == 0 || b_.is_zero()) {
        b_ = 0;
        return;
    }
    auto [s, k] = squarefree_split(d);
    b_ *= Rat(s);
    if (k == 1) {
        a_ += b_;
        b_ = 0;
    } else {
        d_ = k;
    }
}

int Surd::sign() const
{
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0)
        return sa;
    if (sa == 0 || sa == sb)
        return sb;
    // Opposite signs: compare a^2 with b^2 d (never equal, d is not a square).
    return a_ * a_ > b_ * b_ * Rat(d_) ? sa : sb;
}

std::string Surd::str() const
{
    if (is_rational())
        return a_.str();
    std::ostringstream os;
    if (!a_.is_zero())
        os << a_.str() << (b_.sign() > 0 ? "+" : "");
    os << b_.str() << "*sqrt(" << d_.get_str() << ")";
    return os.str();
}

double Surd::approx() const
{
    return a_.to_double() + b_.to_double() * std::sqrt(d_.get_d());
}

std::pair<Rat, Rat> Surd::bounds(const Rat& width) const
{
    if (is_rational())
        return {a_, a_};
    for (unsigned k = 4;; k += 4) {
        Int scaled = d_ << (2 * k);
        Int r;
        mpz_sqrt(r.get_mpz_t(), scaled.get_mpz_t());
        Rat lo(r, Int(1) << k), hi(r + 1, Int(1) << k);
        Rat x = a_ + b_ * lo, y = a_ + b_ * hi;
        if (y < x)
            std::swap(x, y);
        if (y - x <= width)
            return {x, y};
    }
}

Surd operator+(const Surd& x, const Surd& y)
{
    if (!compatible(x, y))
        throw InternalError("adding surds from different quadratic fields");
    return Surd(x.a_ + y.a_, x.b_ + y.b_, x.is_rational() ? y.d_ : x.d_);
}

Surd operator-(const Surd& x, const Surd& y)
{
    if (!compatible(x, y))
        throw InternalError("subtracting surds from different quadratic fields");
    return Surd(x.a_ - y.a_, x.b_ - y.b_, x.is_rational() ? y.d_ : x.d_);
}

Surd operator*(const Surd& x, const Surd& y)
{
    if (!compatible(x, y))
        throw InternalError("multiplying surds from different quadratic fields");
    const Int d = x.is_rational() ? y.d_ : x.d_;
    return Surd(x.a_ * y.a_ + x.b_ * y.b_ * Rat(d), x.a_ * y.b_ + x.b_ * y.a_, d);
}

std::strong_ordering operator<=>(const Surd& x, const Surd& y)
{
    if (x == y)
        return std::strong_ordering::equal;
    if (compatible(x, y)) {
        int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    // Different radicands: the values differ, so isolating intervals separate.
    Rat width = 1;
    for (;;) {
        auto bx = x.bounds(width);
        auto by = y.bounds(width);
        if (bx.second < by.first)
            return std::strong_ordering::less;
        if (by.second < bx.first)
            return std::strong_ordering::greater;
        width /= Rat(16);
    }
}

std::string label_str(const CandidateLabel& label)
{
    if (const auto* s = std::get_if<std::string>(&label))
        return *s;
    std::string out = "(";
    const auto& v = std::get<std::vector<std::int64_t>>(label);
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

FamilySpec::FamilySpec(std::vector<FamilyCandidate> candidates) : candidates_(std::move(candidates))
{
    if (candidates_.empty())
        throw InvalidInput("a family needs at least one candidate");
    for (const auto& c : candidates_)
        for (const Rat t : {Rat(0), Rat(1)})
            if (c.alpha(t).sign() <= 0 || c.beta(t).sign() <= 0)
                throw InvalidInput("alpha and beta must be positive on [0, 1] (candidate " + label_str(c.label) +
                                   ")");
}

std::vector<Surd> walls(const FamilySpec& spec)
{
    const auto& c = spec.candidates();
    std::vector<Surd> out;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            for (auto& r : pair_roots(c[i], c[j]))
                out.push_back(std::move(r));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::size_t> maximizers_at(const FamilySpec& spec, const Surd& t)
{
    const auto& c = spec.candidates();
    std::size_t best = 0;
    for (std::size_t i = 1; i < c.size(); ++i)
        if (cross_at(c[i], c[best], t).sign() > 0)
            best = i;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (cross_at(c[i], c[best], t).sign() == 0)
            out.push_back(i);
    return out;
}

Rat L_at(const FamilySpec& spec, const Rat& t)
{
    if (t.sign() < 0 || t > 1)
        throw InvalidInput("t must lie in [0, 1]");
    Rat best;
    bool first = true;
    for (const auto& c : spec.candidates()) {
        Rat r = c.alpha(t) / c.beta(t);
        if (first || r > best)
            best = r;
        first = false;
    }
    return best;
}

ChamberReport analyze(const FamilySpec& spec)
{
    const auto& c = spec.candidates();
    ChamberReport rep;
    rep.walls = walls(spec);

    std::vector<Surd> points{Surd(Rat(0))};
    points.insert(points.end(), rep.walls.begin(), rep.walls.end());
    points.emplace_back(Rat(1));

    for (std::size_t k = 0; k + 1 < points.size(); ++k) {
        Chamber ch;
        ch.lo = points[k];
        ch.hi = points[k + 1];
        ch.sample = rational_between(ch.lo, ch.hi);
        ch.maximizers = maximizers_at(spec, Surd(ch.sample));
        ch.formula = ch.maximizers.front();
        ch.inv_affine = inverse_affine(c[ch.formula]).has_value();
        rep.chambers.push_back(std::move(ch));
    }

    for (std::size_t k = 0; k < rep.walls.size(); ++k) {
        WallReport w;
        w.t = rep.walls[k];
        w.maximizers = maximizers_at(spec, w.t);
        const auto& left = c[rep.chambers[k].formula];
        const auto& right = c[rep.chambers[k + 1].formula];
        w.continuous = cross_at(left, right, w.t).sign() == 0;
        rep.wall_maximizers.push_back(std::move(w));
    }

    rep.L0 = L_at(spec, Rat(0));
    rep.L1 = L_at(spec, Rat(1));
    rep.maximizers0 = maximizers_at(spec, Surd(Rat(0)));
    rep.maximizers1 = maximizers_at(spec, Surd(Rat(1)));

    // Globally affine: every chamber's 1/L is affine and they coincide.
    std::optional<std::pair<Rat, Rat>> common;
    rep.inv_L_affine = true;
    for (const auto& ch : rep.chambers) {
        auto f = inverse_affine(c[ch.formula]);
        if (!f || (common && *common != *f)) {
            rep.inv_L_affine = false;
            break;
        }
        common = f;
    }
    return rep;
}

StabilityReport stability_neighborhood(const FamilySpec& spec, const Rat& t0)
{
    if (t0.sign() < 0 || t0 > 1)
        throw InvalidInput("t0 must lie in [0, 1]");
    const auto& c = spec.candidates();
    auto top = maximizers_at(spec, Surd(t0));
    if (top.size() != 1)
        throw InvalidInput("the maximizer at t0 is not unique (t0 lies on a wall)");
    StabilityReport rep;
    rep.maximizer = top.front();
    const auto& cj = c[rep.maximizer];
    const Rat L = cj.alpha(t0) / cj.beta(t0);
    rep.gap = L;
    bool have_second = false;
    rep.lo = Surd(Rat(0));
    rep.hi = Surd(Rat(1));
    const Surd at(t0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i == rep.maximizer)
            continue;
        Rat gap = L - c[i].alpha(t0) / c[i].beta(t0);
        if (!have_second || gap < rep.gap)
            rep.gap = gap;
        have_second = true;
        for (const auto& r : pair_roots(cj, c[i])) {
            if (r < at && rep.lo < r)
                rep.lo = r;
            if (at < r && r < rep.hi)
                rep.hi = r;
        }
    }
    return rep;
}

FamilySpec family_from_monomial(const MonomialIdeal& a, const BFamily& b)
{
    if (!a.is_m_primary())
        throw InvalidInput("family construction needs an m-primary ideal a");
    const std::size_t n = a.dim();
    std::vector<FamilyCandidate> out;
    for (const auto& f : newton_polyhedron(a).compact_facets()) {
        FamilyCandidate cand{f.normal.coords(), f.offset, Rat(0), Rat(0), Rat(0)};
        if (const auto* p = std::get_if<PrincipalExponent>(&b)) {
            if (p->e0.size() != n || p->e1.size() != n)
                throw InvalidInput("exponent dimension does not match the ideal");
            cand.b0 = dot(f.normal, p->e0);
            cand.b1 = dot(f.normal, p->e1);
        } else {
            for (const auto& term : std::get<std::vector<ProductTerm>>(b)) {
                if (term.ideal.dim() != n)
                    throw InvalidInput("product factor dimension does not match the ideal");
                Rat h = support(term.ideal, f.normal);
                cand.b0 += term.l0 * h;
                cand.b1 += term.l1 * h;
            }
        }
        out.push_back(std::move(cand));
    }
    return FamilySpec(std::move(out));
}

} // namespace lojex
