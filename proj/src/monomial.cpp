#include "semidual/monomial.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <optional>

namespace semidual::mono {

PolyContext::PolyContext(std::vector<std::string> vars) : names(std::move(vars)) {
    if (names.empty())
        throw IdealError("context needs at least one variable");
    std::set<std::string> uniq(names.begin(), names.end());
    if (uniq.size() != names.size())
        throw IdealError("duplicate variable names");
}

int PolyContext::index_of(const std::string& name) const {
    for (int i = 0; i < n(); ++i)
        if (names[i] == name)
            return i;
    return -1;
}

int Monomial::degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

bool Monomial::divides(const Monomial& o) const {
    for (size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] > o.exponents[i])
            return false;
    return true;
}

bool Monomial::is_one() const {
    return degree() == 0;
}

Monomial mono_one(int n) {
    return Monomial(std::vector<int>(n, 0));
}

Monomial mono_var(int n, int i, int e) {
    Monomial m = mono_one(n);
    m.exponents[i] = e;
    return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (size_t i = 0; i < m.exponents.size(); ++i)
        m.exponents[i] = std::max(a.exponents[i], b.exponents[i]);
    return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (size_t i = 0; i < m.exponents.size(); ++i)
        m.exponents[i] = std::min(a.exponents[i], b.exponents[i]);
    return m;
}

Monomial product(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (size_t i = 0; i < m.exponents.size(); ++i)
        m.exponents[i] += b.exponents[i];
    return m;
}

Monomial quotient_by(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (size_t i = 0; i < m.exponents.size(); ++i)
        m.exponents[i] = std::max(0, a.exponents[i] - b.exponents[i]);
    return m;
}

bool MonomialIdeal::is_unit() const {
    return gens.size() == 1 && gens[0].is_one();
}

int MonomialIdeal::max_gen_degree() const {
    int d = 0;
    for (const auto& g : gens)
        d = std::max(d, g.degree());
    return d;
}

MonomialIdeal minimal_generators(const PolyContext& ctx, const std::vector<Monomial>& gens) {
    for (const auto& g : gens)
        if (int(g.exponents.size()) != ctx.n())
            throw IdealError("generator does not match context");
    std::vector<Monomial> sorted(gens.begin(), gens.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Monomial> kept;
    for (const auto& g : sorted) {
        bool redundant = false;
        for (const auto& h : sorted)
            if (h != g && h.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant)
            kept.push_back(g);
    }
    // two equal monomials: unique() already removed duplicates
    return MonomialIdeal{ctx, std::move(kept)};
}

static void require_same_context(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (!(I.context == J.context))
        throw IdealError("mismatched contexts");
}

MonomialIdeal combine_sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_context(I, J);
    std::vector<Monomial> g = I.gens;
    g.insert(g.end(), J.gens.begin(), J.gens.end());
    return minimal_generators(I.context, g);
}

MonomialIdeal combine_product(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_context(I, J);
    std::vector<Monomial> g;
    for (const auto& a : I.gens)
        for (const auto& b : J.gens)
            g.push_back(product(a, b));
    return minimal_generators(I.context, g);
}

MonomialIdeal combine_power(const MonomialIdeal& I, int k) {
    if (k < 0)
        throw IdealError("negative power");
    MonomialIdeal out{I.context, {mono_one(I.context.n())}}; // unit ideal
    for (int i = 0; i < k; ++i)
        out = combine_product(out, I);
    return out;
}

MonomialIdeal combine_intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_context(I, J);
    if (I.is_zero() || J.is_zero())
        return MonomialIdeal{I.context, {}};
    std::vector<Monomial> g;
    for (const auto& a : I.gens)
        for (const auto& b : J.gens)
            g.push_back(lcm(a, b));
    return minimal_generators(I.context, g);
}

MonomialIdeal combine_colon(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_context(I, J);
    if (J.is_zero())
        return MonomialIdeal{I.context, {mono_one(I.context.n())}};
    MonomialIdeal out{I.context, {mono_one(I.context.n())}};
    bool first = true;
    for (const auto& g : J.gens) {
        std::vector<Monomial> quots;
        for (const auto& gi : I.gens)
            quots.push_back(quotient_by(gi, g));
        MonomialIdeal Ig = minimal_generators(I.context, quots);
        out = first ? Ig : combine_intersect(out, Ig);
        first = false;
    }
    return out;
}

bool contains(const MonomialIdeal& I, const Monomial& m) {
    if (int(m.exponents.size()) != I.context.n())
        throw IdealError("monomial does not match context");
    for (const auto& g : I.gens)
        if (g.divides(m))
            return true;
    return false;
}

bool ideal_subset(const MonomialIdeal& I, const MonomialIdeal& J) {
    for (const auto& g : I.gens)
        if (!contains(J, g))
            return false;
    return true;
}

MonomialIdeal radical(const MonomialIdeal& I) {
    std::vector<Monomial> g;
    for (const auto& m : I.gens) {
        Monomial s = m;
        for (int& e : s.exponents)
            e = e > 0 ? 1 : 0;
        g.push_back(s);
    }
    return minimal_generators(I.context, g);
}

static void decompose_rec(const MonomialIdeal& I, std::vector<MonomialIdeal>& out) {
    // Find a generator supported on >= 2 variables and split it.
    for (const auto& g : I.gens) {
        int vars_in_support = 0, split_var = -1;
        for (size_t i = 0; i < g.exponents.size(); ++i)
            if (g.exponents[i] > 0) {
                ++vars_in_support;
                split_var = int(i);
            }
        if (vars_in_support >= 2) {
            Monomial u = mono_var(I.context.n(), split_var, g.exponents[split_var]);
            Monomial v = g;
            v.exponents[split_var] = 0;
            decompose_rec(combine_sum(I, MonomialIdeal{I.context, {u}}), out);
            decompose_rec(combine_sum(I, MonomialIdeal{I.context, {v}}), out);
            return;
        }
    }
    out.push_back(I); // all generators are pure variable powers
}

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit())
        throw IdealError("irreducible decomposition needs a proper nonzero ideal");
    std::vector<MonomialIdeal> comps;
    decompose_rec(I, comps);
    std::sort(comps.begin(), comps.end(),
              [](const MonomialIdeal& a, const MonomialIdeal& b) { return a.gens < b.gens; });
    comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
    // K1 subset K2 makes K2 redundant in the intersection
    std::vector<MonomialIdeal> kept;
    for (const auto& K : comps) {
        bool redundant = false;
        for (const auto& K2 : comps)
            if (!(K2 == K) && ideal_subset(K2, K)) {
                redundant = true;
                break;
            }
        if (!redundant)
            kept.push_back(K);
    }
    return kept;
}

AssociatedPrimes associated_primes(const MonomialIdeal& I) {
    if (I.is_unit())
        throw IdealError("associated primes of the unit ideal");
    int n = I.context.n();
    AssociatedPrimes out;
    if (I.is_zero()) {
        out.primes.push_back(VariablePrime{{}}); // the zero ideal is prime
        out.minimal.assign(1, true);
        out.dim = n;
        return out;
    }
    auto comps = irreducible_decomposition(I);
    std::set<std::vector<int>> supports;
    for (const auto& K : comps) {
        std::vector<int> supp;
        for (const auto& g : K.gens)
            for (size_t i = 0; i < g.exponents.size(); ++i)
                if (g.exponents[i] > 0)
                    supp.push_back(int(i));
        std::sort(supp.begin(), supp.end());
        supp.erase(std::unique(supp.begin(), supp.end()), supp.end());
        supports.insert(supp);
    }
    for (const auto& s : supports)
        out.primes.push_back(VariablePrime{s});
    out.minimal.assign(out.primes.size(), true);
    for (size_t i = 0; i < out.primes.size(); ++i)
        for (size_t j = 0; j < out.primes.size(); ++j)
            if (i != j &&
                std::includes(out.primes[i].support.begin(), out.primes[i].support.end(),
                              out.primes[j].support.begin(), out.primes[j].support.end()))
                out.minimal[i] = false;
    int min_supp = n;
    for (size_t i = 0; i < out.primes.size(); ++i)
        if (out.minimal[i])
            min_supp = std::min(min_supp, int(out.primes[i].support.size()));
    out.dim = n - min_supp;
    return out;
}

MonomialIdeal localize(const MonomialIdeal& I, const VariablePrime& P) {
    std::vector<std::string> names;
    for (int i : P.support)
        names.push_back(I.context.names[i]);
    PolyContext sub(names);
    if (I.is_zero())
        return MonomialIdeal{sub, {}};
    std::vector<Monomial> g;
    bool unit = false;
    for (const auto& m : I.gens) {
        std::vector<int> e;
        for (int i : P.support)
            e.push_back(m.exponents[i]);
        Monomial mm{std::move(e)};
        if (mm.is_one())
            unit = true;
        g.push_back(std::move(mm));
    }
    if (unit)
        throw IdealError("localization is the unit ring: P contains no minimal prime");
    MonomialIdeal out = minimal_generators(sub, g);
    return out;
}

long long artinian_length(const MonomialIdeal& I) {
    long long total = 0;
    for (int d = 0;; ++d) {
        long long c = standard_monomial_count(I, d);
        if (c == 0)
            return total;
        total += c;
        if (d > 512)
            throw IdealError("artinian_length: ideal is not Artinian");
    }
}

Polarization polarize(const MonomialIdeal& I) {
    if (I.is_unit())
        throw IdealError("polarize needs a proper ideal");
    int n = I.context.n();
    std::vector<int> t(n, 1);
    for (const auto& g : I.gens)
        for (int i = 0; i < n; ++i)
            t[i] = std::max(t[i], g.exponents[i]);
    Polarization pol;
    std::vector<std::string> names;
    std::vector<int> first_index(n);
    for (int i = 0; i < n; ++i) {
        first_index[i] = int(names.size());
        for (int j = 1; j <= t[i]; ++j) {
            names.push_back(I.context.names[i] + "_" + std::to_string(j));
            pol.origin.push_back(i);
        }
    }
    pol.target = PolyContext(names);
    int N = pol.target.n();
    std::vector<Monomial> gens;
    for (const auto& g : I.gens) {
        Monomial m = mono_one(N);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < g.exponents[i]; ++j)
                m.exponents[first_index[i] + j] = 1;
        gens.push_back(m);
    }
    pol.ideal = minimal_generators(pol.target, gens);
    for (int i = 0; i < n; ++i)
        for (int j = 1; j < t[i]; ++j)
            pol.depol_pairs.emplace_back(first_index[i] + j, first_index[i]);
    return pol;
}

MonomialIdeal depolarize(const Polarization& pol) {
    int n = 0;
    for (int o : pol.origin)
        n = std::max(n, o + 1);
    std::vector<std::string> names(n);
    for (size_t i = 0; i < pol.origin.size(); ++i) {
        // first occurrence carries the base name "x_1" -> "x"
        const std::string& full = pol.target.names[i];
        auto pos = full.rfind('_');
        names[pol.origin[i]] = full.substr(0, pos);
    }
    PolyContext ctx(names);
    std::vector<Monomial> gens;
    for (const auto& g : pol.ideal.gens) {
        Monomial m = mono_one(n);
        for (size_t i = 0; i < pol.origin.size(); ++i)
            m.exponents[pol.origin[i]] += g.exponents[i];
        gens.push_back(m);
    }
    return minimal_generators(ctx, gens);
}

static void enumerate_degree(int n, int d, std::vector<int>& cur, int idx,
                             std::vector<Monomial>& out) {
    if (idx == n - 1) {
        cur[idx] = d;
        out.emplace_back(cur);
        return;
    }
    for (int e = 0; e <= d; ++e) {
        cur[idx] = e;
        enumerate_degree(n, d - e, cur, idx + 1, out);
    }
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
    std::vector<Monomial> out;
    if (n == 0) {
        if (d == 0)
            out.push_back(Monomial{});
        return out;
    }
    std::vector<int> cur(n, 0);
    enumerate_degree(n, d, cur, 0, out);
    return out;
}

long long standard_monomial_count(const MonomialIdeal& I, int d) {
    if (d < 0)
        throw IdealError("negative degree");
    long long count = 0;
    for (const auto& m : monomials_of_degree(I.context.n(), d))
        if (!contains(I, m))
            ++count;
    return count;
}

MonomialIdeal maximal_ideal(const PolyContext& ctx) {
    std::vector<Monomial> g;
    for (int i = 0; i < ctx.n(); ++i)
        g.push_back(mono_var(ctx.n(), i));
    return minimal_generators(ctx, g);
}

MonomialIdeal parse_ideal(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::optional<PolyContext> ctx;
    std::vector<Monomial> gens;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok))
            continue;
        if (!ctx) {
            if (tok != "vars:")
                throw IdealError("line " + std::to_string(lineno) + ": expected 'vars:' header");
            std::vector<std::string> names;
            std::string v;
            while (ls >> v)
                names.push_back(v);
            if (names.empty())
                throw IdealError("line " + std::to_string(lineno) + ": no variables listed");
            ctx.emplace(names);
            continue;
        }
        Monomial m = mono_one(ctx->n());
        std::string factor = tok;
        do {
            std::string var = factor;
            int exp = 1;
            auto caret = factor.find('^');
            if (caret != std::string::npos) {
                var = factor.substr(0, caret);
                try {
                    exp = std::stoi(factor.substr(caret + 1));
                } catch (...) {
                    throw IdealError("line " + std::to_string(lineno) + ": bad exponent in '" +
                                     factor + "'");
                }
            }
            if (exp < 0)
                throw IdealError("line " + std::to_string(lineno) + ": negative exponent");
            int i = ctx->index_of(var);
            if (i < 0)
                throw IdealError("line " + std::to_string(lineno) + ": unknown variable '" + var +
                                 "'");
            m.exponents[i] += exp;
        } while (ls >> factor);
        gens.push_back(m);
    }
    if (!ctx)
        throw IdealError("empty ideal file: missing 'vars:' header");
    return minimal_generators(*ctx, gens);
}

MonomialIdeal load_ideal(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IdealError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_ideal(ss.str());
}

std::string format_monomial(const PolyContext& ctx, const Monomial& m) {
    if (m.is_one())
        return "1";
    std::string out;
    for (int i = 0; i < ctx.n(); ++i) {
        if (m.exponents[i] == 0)
            continue;
        if (!out.empty())
            out += " ";
        out += ctx.names[i];
        if (m.exponents[i] > 1)
            out += "^" + std::to_string(m.exponents[i]);
    }
    return out;
}

std::string format_ideal(const MonomialIdeal& I) {
    std::string out = "vars:";
    for (const auto& v : I.context.names)
        out += " " + v;
    out += "\n";
    for (const auto& g : I.gens)
        out += format_monomial(I.context, g) + "\n";
    return out;
}

std::string MonomialIdeal::to_string() const {
    if (is_zero())
        return "(0)";
    std::string out = "(";
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i)
            out += ", ";
        std::string s = format_monomial(context, gens[i]);
        for (auto& c : s)
            if (c == ' ')
                c = '*';
        out += s;
    }
    return out + ")";
}

} // namespace semidual::mono
