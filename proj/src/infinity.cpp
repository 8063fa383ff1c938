#include "lojex/infinity.hpp"

#include "lojex/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lojex {

namespace {

void trim(std::vector<Rat>& c)
{
    while (!c.empty() && c.back().is_zero())
        c.pop_back();
}

// Positive divisors of |v| > 0, or nullopt if |v| is too large to factor by
// trial division.
std::optional<std::vector<Int>> divisors(const Int& v)
{
    Int a = abs(v);
    if (a > Int("1000000000000"))
        return std::nullopt;
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            small.push_back(d);
            if (d * d != a)
                large.push_back(a / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// s * a + t * b = gcd(a, b) for a, b > 0.
std::pair<std::int64_t, std::int64_t> bezout(std::int64_t a, std::int64_t b)
{
    std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        std::int64_t q = a / b;
        std::tie(a, b) = std::pair{b, a - q * b};
        std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
        std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
    }
    return {s0, t0};
}

Rat ipow(const Rat& z, std::int64_t e)
{
    Rat r = pow(z, static_cast<unsigned>(e < 0 ? -e : e));
    return e < 0 ? r.inverse() : r;
}

Rat evaluate(const Polynomial& f, const Rat& x, const Rat& y)
{
    Rat s = 0;
    for (const auto& [e, c] : f)
        s += c * ipow(x, e[0]) * ipow(y, e[1]);
    return s;
}

// (f)_w as p(z) up to a monomial, with z = x^w2 y^-w1.
UniPoly edge_polynomial(const Polynomial& face, const WeightVec& w)
{
    const ExpVec& start = face.begin()->first; // smallest x exponent first
    std::vector<Rat> c;
    for (const auto& [e, coeff] : face) {
        auto step = e[0] - start[0];
        if (step % w[1] != 0)
            throw InternalError("face term off the edge lattice");
        auto k = static_cast<std::size_t>(step / w[1]);
        if (c.size() <= k)
            c.resize(k + 1);
        c[k] = coeff;
    }
    return UniPoly(std::move(c));
}

FaceCheck check_weight(const PolyMap& F, const WeightVec& w)
{
    FaceCheck out{w, {}, UniPoly({Rat(1)}), false, false};
    std::vector<UniPoly> faces;
    for (const auto& f : F.components()) {
        auto face = initial_form(f, w.coords());
        if (face.size() == 1) {
            out.monomial_face = true;
            return out;
        }
        faces.push_back(edge_polynomial(face, w));
    }
    UniPoly g;
    for (const auto& p : faces)
        g = poly_gcd(g, p);
    out.faces = std::move(faces);
    out.gcd = g;
    out.degenerate = g.degree() >= 1;
    return out;
}

} // namespace

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(c_); }

Rat UniPoly::eval(const Rat& z) const
{
    Rat s = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        s = s * z + *it;
    return s;
}

UniPoly UniPoly::monic() const
{
    if (c_.empty())
        return *this;
    std::vector<Rat> c = c_;
    Rat lead = c.back();
    for (auto& x : c)
        x /= lead;
    return UniPoly(std::move(c));
}

std::string UniPoly::str(const std::string& var) const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rat& c = c_[k];
        if (c.is_zero())
            continue;
        Rat mag = c.abs();
        if (!first)
            os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0)
            os << "-";
        first = false;
        if (k == 0 || mag != 1)
            os << mag.str();
        if (k > 0) {
            if (mag != 1)
                os << "*";
            os << var;
            if (k > 1)
                os << "^" << k;
        }
    }
    return os.str();
}

UniPoly poly_rem(const UniPoly& a, const UniPoly& b)
{
    if (b.is_zero())
        throw InvalidInput("polynomial division by zero");
    std::vector<Rat> r = a.coeffs();
    const auto& d = b.coeffs();
    while (r.size() >= d.size()) {
        Rat q = r.back() / d.back();
        std::size_t shift = r.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i)
            r[shift + i] -= q * d[i];
        r.pop_back();
        trim(r);
    }
    return UniPoly(std::move(r));
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b)
{
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = poly_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::optional<std::vector<Rat>> rational_roots(const UniPoly& p)
{
    if (p.is_zero())
        throw InvalidInput("roots of the zero polynomial");
    std::vector<Rat> out;
    Int den = 1;
    for (const auto& c : p.coeffs())
        den = lcm(den, c.den());
    std::vector<Int> c;
    for (const auto& x : p.coeffs())
        c.push_back((x * Rat(den)).num());
    std::size_t low = 0;
    while (c[low] == 0)
        ++low;
    if (low > 0)
        out.push_back(Rat(0));
    if (low + 1 < c.size()) {
        auto ds = divisors(c[low]);
        auto es = divisors(c.back());
        if (!ds || !es)
            return std::nullopt;
        UniPoly q(std::vector<Rat>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(low), p.coeffs().end()));
        for (const auto& d : *ds)
            for (const auto& e : *es)
                for (int s : {1, -1}) {
                    Rat r(Int(s * d), e);
                    if (q.eval(r).is_zero())
                        out.push_back(r);
                }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PolyMap::PolyMap(std::size_t n, std::vector<Polynomial> components) : n_(n)
{
    if (n == 0)
        throw InvalidInput("polynomial map needs at least one variable");
    if (components.empty())
        throw InvalidInput("polynomial map needs at least one component");
    for (auto& f : components) {
        Polynomial g;
        for (auto& [e, c] : f) {
            if (e.size() != n)
                throw InvalidInput("exponent of the wrong size");
            for (auto x : e)
                if (x < 0)
                    throw InvalidInput("negative exponent");
            if (!c.is_zero())
                g.emplace(e, c);
        }
        if (g.empty())
            throw InvalidInput("zero component");
        comps_.push_back(std::move(g));
    }
}

NewtonPolyhedron gamma_infinity(const PolyMap& F)
{
    std::vector<RatVec> pts{RatVec(F.n(), Rat(0))};
    for (const auto& f : F.components())
        for (const auto& [e, c] : f)
            pts.push_back(e.to_rat());
    return NewtonPolyhedron::from_points(F.n(), std::move(pts));
}

Polynomial initial_form(const Polynomial& f, std::span<const std::int64_t> w)
{
    auto weight = [&](const ExpVec& e) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            s += w[i] * e[i];
        return s;
    };
    std::optional<std::int64_t> m;
    for (const auto& [e, c] : f)
        m = m ? std::min(*m, weight(e)) : weight(e);
    Polynomial out;
    for (const auto& [e, c] : f)
        if (weight(e) == *m)
            out.emplace(e, c);
    return out;
}

NondegeneracyReport nondegenerate_at_infinity(const PolyMap& F)
{
    if (F.n() != 2)
        throw Unsupported("nondegeneracy at infinity is implemented for two variables");

    std::vector<WeightVec> normals;
    for (const auto& f : F.components()) {
        if (f.size() < 2)
            continue;
        std::vector<RatVec> pts;
        for (const auto& [e, c] : f)
            pts.push_back(e.to_rat());
        for (const auto& facet : NewtonPolyhedron::from_points(2, std::move(pts)).compact_facets())
            normals.push_back(facet.normal);
    }
    // By slope w1 / w2.
    auto by_slope = [](const WeightVec& u, const WeightVec& v) { return u[0] * v[1] < v[0] * u[1]; };
    std::sort(normals.begin(), normals.end(), by_slope);
    normals.erase(std::unique(normals.begin(), normals.end()), normals.end());

    std::vector<WeightVec> reps;
    if (normals.empty()) {
        reps.push_back(WeightVec::diagonal(2));
    } else {
        reps.push_back(WeightVec::primitive_of({normals.front()[0], normals.front()[1] + 1}));
        for (std::size_t i = 0; i + 1 < normals.size(); ++i)
            reps.push_back(WeightVec::primitive_of({normals[i][0] + normals[i + 1][0], normals[i][1] + normals[i + 1][1]}));
        reps.push_back(WeightVec::primitive_of({normals.back()[0] + 1, normals.back()[1]}));
    }

    NondegeneracyReport out;
    for (const auto* list : {&normals, &reps})
        for (const auto& w : *list) {
            out.checks.push_back(check_weight(F, w));
            if (out.checks.back().degenerate && out.nondegenerate) {
                out.nondegenerate = false;
                out.offending = w;
            }
        }
    return out;
}

bool face_system_vanishes(const PolyMap& F, const WeightVec& w, const Rat& z)
{
    if (F.n() != 2 || w.size() != 2 || !w.strictly_positive())
        throw InvalidInput("face systems need n = 2 and w > 0");
    if (z.is_zero())
        return false;
    auto [s, t] = bezout(w[1], w[0]); // s w2 + t w1 = 1
    Rat x = ipow(z, s), y = ipow(z, -t);
    for (const auto& f : F.components())
        if (!evaluate(initial_form(f, w.coords()), x, y).is_zero())
            return false;
    return true;
}

DivisorTable::DivisorTable(std::vector<DivisorRow> rows) : rows_(std::move(rows))
{
    std::set<std::string> seen;
    bool positive = false;
    for (const auto& r : rows_) {
        if (r.ord_x < 0 || r.ord_y < 0)
            throw InvalidInput("divisor orders must be nonnegative");
        if (!seen.insert(r.label).second)
            throw InvalidInput("duplicate divisor label '" + r.label + "'");
        positive |= r.ord_x > 0;
    }
    if (!positive)
        throw InvalidInput("no divisor with ord_X > 0");
}

InfinityMin loj_infinity_min(const DivisorTable& T)
{
    std::optional<Rat> best;
    std::vector<std::string> arg;
    for (const auto& r : T.rows()) {
        if (r.ord_x == 0)
            continue;
        Rat v(Int(static_cast<long>(r.ord_y)), Int(static_cast<long>(r.ord_x)));
        if (!best || v < *best) {
            best = v;
            arg.clear();
        }
        if (v == *best)
            arg.push_back(r.label);
    }
    return {*best, std::move(arg)};
}

ExtRat loj_infinity_local(const DivisorTable& T, const std::set<std::string>& incident)
{
    for (const auto& l : incident)
        if (std::none_of(T.rows().begin(), T.rows().end(), [&](const DivisorRow& r) { return r.label == l; }))
            throw InvalidInput("unknown divisor label '" + l + "'");
    ExtRat out{true, Rat(0)};
    for (const auto& r : T.rows()) {
        if (r.ord_x == 0 || !incident.contains(r.label))
            continue;
        Rat v(Int(static_cast<long>(r.ord_y)), Int(static_cast<long>(r.ord_x)));
        if (out.infinite || v < out.value)
            out = {false, v};
    }
    return out;
}

} // namespace lojex
