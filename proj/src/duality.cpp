#include "qspinor/duality.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qspinor {

namespace {

AlgebraElement gen(Gen g, int p = 1) { return AlgebraElement::generator(g, p); }

}  // namespace

Sl2Triple sigma_weyl() {
    Sl2Triple t;
    t.K = gen(Gen::g1, 2) * gen(Gen::g2, -2);
    t.E = gen(Gen::mu1) * shifted_derivative(2, 2);
    t.F = gen(Gen::mu2) * shifted_derivative(1, 2);
    t.param_exponent = 2;
    return t;
}

Sl2Triple sigma_spinor() {
    Sl2Triple t;
    const RatQ half = quantum_int(2).inv();
    t.K = RatQ::q_power(1) * gen(Gen::w, 2);
    t.E = half * power(gen(Gen::nu), 2);
    t.F = -half * power(gen(Gen::nab), 2);
    t.param_exponent = 2;
    return t;
}

Sl2Triple sigma_diagonal() {
    Sl2Triple t;
    const RatQ half = quantum_int(2).inv();
    t.K = RatQ::q_power(1) * (gen(Gen::g1, 2) * gen(Gen::g2, -2) * gen(Gen::w, 2));
    t.E = RatQ::q_power(1) * (gen(Gen::w, 2) * gen(Gen::mu1) * shifted_derivative(2, 2)) +
          half * power(gen(Gen::nu), 2);
    t.F = gen(Gen::mu2) * shifted_derivative(1, 2) -
          half * (gen(Gen::g1, -2) * gen(Gen::g2, 2) * power(gen(Gen::nab), 2));
    t.param_exponent = 2;
    return t;
}

Sl2Triple sigma_dual() {
    Sl2Triple t;
    const RatQ two = quantum_int(2);
    t.K = RatQ::q_power(2) * (gen(Gen::g1, 2) * gen(Gen::g2, 2));
    t.E = two * (RatQ::q_power(2) * (gen(Gen::g2, 2) * gen(Gen::w) * gen(Gen::mu1) * gen(Gen::nab)) +
                 gen(Gen::mu2) * gen(Gen::nu));
    t.F = shifted_derivative(1, 2) * gen(Gen::nu) -
          gen(Gen::g1, -2) * gen(Gen::w) * shifted_derivative(2, 2) * gen(Gen::nab);
    t.param_exponent = 1;
    return t;
}

Report check_sl2_relations(const Sl2Triple& t, const std::string& label) {
    Report rep;
    const int p = t.param_exponent;
    const AlgebraElement kinv = invert(t.K);

    AlgebraElement res = t.K * kinv - AlgebraElement(1);
    rep.add(label + ".k_invertible", "", res.is_zero(), res.to_string());

    res = t.K * t.E * kinv - RatQ::q_power(2 * p) * t.E;
    rep.add(label + ".k_e_conjugation", "", res.is_zero(), res.to_string());

    res = t.K * t.F * kinv - RatQ::q_power(-2 * p) * t.F;
    rep.add(label + ".k_f_conjugation", "", res.is_zero(), res.to_string());

    res = t.E * t.F - t.F * t.E - brace(t.K, p);
    rep.add(label + ".ef_commutator", "", res.is_zero(), res.to_string());
    return rep;
}

Report check_commuting_pair() {
    Report rep;
    const Sl2Triple diag = sigma_diagonal();
    const Sl2Triple dual = sigma_dual();
    const AlgebraElement kd_inv = invert(diag.K);

    const std::pair<const char*, const AlgebraElement*> diag_gens[] = {{"E_diag", &diag.E}, {"F_diag", &diag.F}};
    const std::pair<const char*, const AlgebraElement*> dual_gens[] = {{"E", &dual.E}, {"F", &dual.F}};
    for (const auto& [dn, dg] : diag_gens)
        for (const auto& [un, ug] : dual_gens) {
            AlgebraElement res = commutator(*dg, *ug);
            rep.add("pair.commutator", std::string(dn) + " vs " + un, res.is_zero(), res.to_string());
        }

    AlgebraElement res = commutator(diag.K, dual.K);
    rep.add("pair.commutator", "K_diag vs K", res.is_zero(), res.to_string());
    res = diag.K * dual.E * kd_inv - dual.E;
    rep.add("pair.k_conjugation", "K_diag on E", res.is_zero(), res.to_string());
    res = diag.K * dual.F * kd_inv - dual.F;
    rep.add("pair.k_conjugation", "K_diag on F", res.is_zero(), res.to_string());
    return rep;
}

Report check_fe_power_lemma(int d, int r, std::span<const SpinorVector> probes) {
    if (d < 1 || r < 0 || r > d) throw std::domain_error("check_fe_power_lemma: need d >= 1 and 0 <= r <= d");
    const Sl2Triple t = sigma_dual();
    Report rep;

    for (const auto& probe : probes)
        if (!apply(t.F, probe).is_zero()) throw std::invalid_argument("non-monogenic probe");

    // [E^d, F] = [d]_q E^{d-1} {q^{d-1} K}_q as elements
    {
        AlgebraElement lhs = commutator(power(t.E, d), t.F);
        AlgebraElement rhs = quantum_int(d) * (power(t.E, d - 1) * brace(RatQ::q_power(d - 1) * t.K, 1));
        AlgebraElement res = lhs - rhs;
        std::ostringstream ps;
        ps << "d=" << d;
        rep.add("fe_lemma.power_commutator", ps.str(), res.is_zero(), res.to_string());
    }

    // F^r E^d probe = (-1)^r [d]_q!/[d-r]_q! E^{d-r} prod_l {q^{d-l} K}_q probe
    AlgebraElement braces(1);
    for (int l = 1; l <= r; ++l) braces = braces * brace(RatQ::q_power(d - l) * t.K, 1);
    RatQ scale = quantum_factorial(d) / quantum_factorial(d - r);
    if (r % 2 == 1) scale = -scale;
    int idx = 0;
    for (const auto& probe : probes) {
        SpinorVector lhs = apply_power(t.F, r, apply_power(t.E, d, probe));
        SpinorVector rhs = scale * apply_power(t.E, d - r, apply(braces, probe));
        SpinorVector res = lhs - rhs;
        std::ostringstream ps;
        ps << "d=" << d << ", r=" << r << ", probe=" << idx++;
        rep.add("fe_lemma.mod_left_ideal", ps.str(), res.is_zero(), res.to_string());
    }
    return rep;
}

SpinorVector p_plus(int d) {
    if (d < 0) throw std::domain_error("p_plus: negative degree");
    return SpinorVector::monomial(0, d, 0);
}

SpinorVector p_minus(int d) {
    if (d < 0) throw std::domain_error("p_minus: negative degree");
    SpinorVector v;
    for (int b = 0; b <= d; ++b) {
        RatQ c = quantum_binomial_base(d, b, 2) * RatQ::q_power(2 * b * (d - b - 1)) /
                 quantum_odd_double_factorial(b);
        v.add_term({d - b, b, 2 * b + 1}, c);
    }
    return v;
}

std::vector<SpinorVector> monogenic_spanning_set(int d, int n_max) {
    const AlgebraElement e_diag = sigma_diagonal().E;
    const AlgebraElement f_dual = sigma_dual().F;
    std::vector<SpinorVector> out;
    out.reserve(2 * (n_max + 1));
    for (SpinorVector v : {p_plus(d), p_minus(d)}) {
        for (int n = 0; n <= n_max; ++n) {
            if (n > 0) v = apply(e_diag, v);
            if (!apply(f_dual, v).is_zero())
                throw std::runtime_error("monogenic_spanning_set: vector escaped ker F");
            out.push_back(v);
        }
    }
    return out;
}

RatQ projection_coefficient(int d, int j) {
    return quantum_factorial(2 * d - j) / (quantum_factorial(j) * quantum_factorial(2 * d));
}

SpinorVector project(int d, const SpinorVector& v) {
    if (d < 0) throw std::domain_error("project: negative degree");
    if (!v.is_zero() && v.degree() != d) throw std::domain_error("project: inhomogeneous input");
    const Sl2Triple t = sigma_dual();
    SpinorVector acc = v;  // j = 0 term
    SpinorVector fj = v;
    for (int j = 1; j <= d; ++j) {
        fj = apply(t.F, fj);
        if (fj.is_zero()) break;
        acc += projection_coefficient(d, j) * apply_power(t.E, j, fj);
    }
    return acc;
}

// ---------------- E-preimage and the triangular decomposition ----------------

namespace {

// coefficient of E on a monomial: E (a,b,c) lands on (a+1,b,c-1) with
// weight_raising_coeff and on (a,b+1,c+1) with [2]_q
RatQ e_coeff_first(const SpinorKey& k) {
    return quantum_int(2) * quantum_int(k.c) * RatQ::q_power(2 * k.b + k.c + 1);
}

struct WeightBlock {
    std::vector<SpinorKey> cols;         // candidate preimage monomials
    std::map<SpinorKey, int> row_index;  // image monomials
    std::vector<SpinorKey> rows;
};

}  // namespace

SpinorVector e_preimage(const SpinorVector& r) {
    if (r.is_zero()) return SpinorVector();
    const int d = r.degree();
    if (d < 1) throw std::runtime_error("decomposition failure");

    // E preserves the diagonal weight, so the system splits per weight.
    // Candidates per weight are the full finite chain of valid degree-(d-1)
    // monomials at that weight; the residual's own preimage neighbours are
    // not enough when projection residuals cancel an image term.
    std::map<int, WeightBlock> blocks;
    for (const auto& [k, c] : r.terms()) {
        const int e = k.weight_exponent();
        if (blocks.count(e)) continue;
        WeightBlock& blk = blocks[e];
        const int half = (e - 1) / 2;  // a - b + c on the candidate chain
        for (int b = 0; b <= d - 1; ++b) {
            const int a = d - 1 - b;
            const int cc = half - a + b;
            if (cc >= 0) blk.cols.push_back({a, b, cc});
        }
    }

    SpinorVector u;
    for (auto& [weight, blk] : blocks) {
        std::sort(blk.cols.begin(), blk.cols.end());
        // rows: union of candidate images and the residual support at this weight
        auto add_row = [&blk](const SpinorKey& k) {
            if (blk.row_index.emplace(k, 0).second) blk.rows.push_back(k);
        };
        for (const auto& k : blk.cols) {
            if (k.c >= 1) add_row({k.a + 1, k.b, k.c - 1});
            add_row({k.a, k.b + 1, k.c + 1});
        }
        for (const auto& [k, c] : r.terms())
            if (k.weight_exponent() == weight) add_row(k);
        std::sort(blk.rows.begin(), blk.rows.end());
        for (std::size_t i = 0; i < blk.rows.size(); ++i) blk.row_index[blk.rows[i]] = static_cast<int>(i);

        const std::size_t nrows = blk.rows.size();
        const std::size_t ncols = blk.cols.size();
        if (ncols == 0) throw std::runtime_error("decomposition failure");

        // assemble over RatQ, then clear row denominators to integer polynomials
        std::vector<std::vector<RatQ>> m(nrows, std::vector<RatQ>(ncols + 1));
        for (std::size_t j = 0; j < ncols; ++j) {
            const SpinorKey& k = blk.cols[j];
            if (k.c >= 1) m[blk.row_index[{k.a + 1, k.b, k.c - 1}]][j] = e_coeff_first(k);
            m[blk.row_index[{k.a, k.b + 1, k.c + 1}]][j] = quantum_int(2);
        }
        for (const auto& [k, c] : r.terms())
            if (k.weight_exponent() == weight) m[blk.row_index[k]][ncols] = c;

        std::vector<std::vector<QPoly>> a(nrows, std::vector<QPoly>(ncols + 1));
        for (std::size_t i = 0; i < nrows; ++i) {
            QPoly lcm(1);
            int min_shift = 0;
            for (const auto& e : m[i]) {
                if (e.is_zero()) continue;
                lcm = divexact(lcm * e.den(), gcd(lcm, e.den()));
                min_shift = std::min(min_shift, e.shift());
            }
            for (std::size_t jj = 0; jj <= ncols; ++jj) {
                const RatQ& e = m[i][jj];
                if (e.is_zero()) continue;
                a[i][jj] = (e.num() * divexact(lcm, e.den())).shifted(e.shift() - min_shift);
            }
        }

        // fraction-free forward elimination (Bareiss)
        std::vector<int> pivot_row(ncols, -1);
        QPoly prev(1);
        std::size_t rank = 0;
        for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
            std::size_t pr = rank;
            while (pr < nrows && a[pr][col].is_zero()) ++pr;
            if (pr == nrows) continue;
            std::swap(a[pr], a[rank]);
            for (std::size_t i = rank + 1; i < nrows; ++i) {
                for (std::size_t jj = col + 1; jj <= ncols; ++jj)
                    a[i][jj] = divexact(a[rank][col] * a[i][jj] - a[i][col] * a[rank][jj], prev);
                a[i][col] = QPoly();
            }
            prev = a[rank][col];
            pivot_row[col] = static_cast<int>(rank);
            ++rank;
        }

        // uniqueness: E acts injectively, so every candidate must be pinned
        for (std::size_t col = 0; col < ncols; ++col)
            if (pivot_row[col] < 0) throw std::runtime_error("decomposition failure");
        // consistency: eliminated rows must have vanished entirely
        for (std::size_t i = rank; i < nrows; ++i)
            if (!a[i][ncols].is_zero()) throw std::runtime_error("decomposition failure");

        // back substitution in the field
        std::vector<RatQ> x(ncols);
        for (int col = static_cast<int>(ncols) - 1; col >= 0; --col) {
            const int i = pivot_row[col];
            RatQ rhs = RatQ(a[i][ncols], QPoly(1));
            for (std::size_t jj = col + 1; jj < ncols; ++jj)
                if (!a[i][jj].is_zero()) rhs -= RatQ(a[i][jj], QPoly(1)) * x[jj];
            x[col] = rhs / RatQ(a[i][col], QPoly(1));
        }
        for (std::size_t j = 0; j < ncols; ++j) u.add_term(blk.cols[j], x[j]);
    }

    // exactness guard: the solve must actually invert E on the residual
    const AlgebraElement e_dual = sigma_dual().E;
    if (apply(e_dual, u) != r) throw std::runtime_error("decomposition failure");
    return u;
}

FischerComponents fischer_decompose(const SpinorVector& v) {
    FischerComponents fc;
    if (v.is_zero()) {
        fc.degree = 0;
        fc.components.push_back(SpinorVector());
        return fc;
    }
    const int d = v.degree();  // throws on inhomogeneous input
    fc.degree = d;
    const AlgebraElement f_dual = sigma_dual().F;

    SpinorVector cur = v;
    for (int k = d; k >= 0; --k) {
        SpinorVector m = cur.is_zero() ? SpinorVector() : project(k, cur);
        if (!apply(f_dual, m).is_zero()) throw std::runtime_error("decomposition failure");
        fc.components.push_back(m);
        if (k == 0) break;
        SpinorVector rem = cur - m;
        cur = rem.is_zero() ? SpinorVector() : e_preimage(rem);
    }
    return fc;
}

SpinorVector reconstruct(const FischerComponents& fc) {
    const AlgebraElement e_dual = sigma_dual().E;
    SpinorVector acc;
    for (std::size_t k = 0; k < fc.components.size(); ++k)
        acc += apply_power(e_dual, static_cast<int>(k), fc.components[k]);
    return acc;
}

// ---------------- adjoint actions and generalized symmetries ----------------

AlgebraElement adjoint(AdGen x, const Sl2Triple& t, const AlgebraElement& a) {
    const AlgebraElement kinv = invert(t.K);
    switch (x) {
        case AdGen::e: return t.E * a * kinv - a * t.E * kinv;
        case AdGen::f: return t.F * a - kinv * a * t.K * t.F;
        case AdGen::k: return t.K * a * kinv;
        case AdGen::k_inv: return kinv * a * t.K;
    }
    throw std::logic_error("adjoint: bad generator");
}

Report check_adjoint_table() {
    Report rep;
    const Sl2Triple diag = sigma_diagonal();

    const AlgebraElement x1 = gen(Gen::mu1);
    const AlgebraElement x2 = gen(Gen::g1, 2) * gen(Gen::mu2);
    const AlgebraElement d1s = shifted_derivative(2, 2);
    const AlgebraElement d2s = gen(Gen::g2, -2) * shifted_derivative(1, 2);

    struct Entry {
        AdGen row;
        const char* row_name;
        const AlgebraElement* col;
        const char* col_name;
        AlgebraElement expected;
    };
    const Entry entries[] = {
        {AdGen::k, "ad_K", &x1, "mu1", RatQ::q_power(2) * x1},
        {AdGen::k, "ad_K", &x2, "g1^2*mu2", RatQ::q_power(-2) * x2},
        {AdGen::k, "ad_K", &d1s, "dq2_2", RatQ::q_power(2) * d1s},
        {AdGen::k, "ad_K", &d2s, "g2^-2*dq2_1", RatQ::q_power(-2) * d2s},
        {AdGen::e, "ad_E", &x1, "mu1", AlgebraElement()},
        {AdGen::e, "ad_E", &x2, "g1^2*mu2", x1},
        {AdGen::e, "ad_E", &d1s, "dq2_2", AlgebraElement()},
        {AdGen::e, "ad_E", &d2s, "g2^-2*dq2_1", -(RatQ::q_power(2) * d1s)},
        {AdGen::f, "ad_F", &x1, "mu1", x2},
        {AdGen::f, "ad_F", &x2, "g1^2*mu2", AlgebraElement()},
        {AdGen::f, "ad_F", &d1s, "dq2_2", -(RatQ::q_power(-2) * d2s)},
        {AdGen::f, "ad_F", &d2s, "g2^-2*dq2_1", AlgebraElement()},
    };
    for (const auto& e : entries) {
        AlgebraElement res = adjoint(e.row, diag, *e.col) - e.expected;
        rep.add("adjoint.table", std::string(e.row_name) + " on " + e.col_name, res.is_zero(), res.to_string());
    }
    return rep;
}

std::array<AlgebraElement, 3> ad_f_powers_of_mu1() {
    const Sl2Triple t = sigma_dual();
    const AlgebraElement a1 = adjoint(AdGen::f, t, gen(Gen::mu1));
    const AlgebraElement a2 = adjoint(AdGen::f, t, a1);
    const AlgebraElement a3 = adjoint(AdGen::f, t, a2);
    return {a1, a2, a3};
}

namespace {

AlgebraElement build_raising_symmetry(const AlgebraElement& seed) {
    const Sl2Triple t = sigma_dual();
    const RatQ two = quantum_int(2);
    const AlgebraElement a1 = adjoint(AdGen::f, t, seed);
    const AlgebraElement a2 = adjoint(AdGen::f, t, a1);
    const AlgebraElement brace_k = brace(t.K, 1);
    const AlgebraElement brace_qk = brace(RatQ::q_power(-1) * t.K, 1);
    return two * (seed * brace_k * brace_qk) + two * (t.E * a1 * brace_qk) + power(t.E, 2) * a2;
}

}  // namespace

AlgebraElement build_Z1() { return build_raising_symmetry(gen(Gen::mu1)); }

AlgebraElement build_Z2() { return adjoint(AdGen::f, sigma_diagonal(), build_Z1()); }

Report check_symmetries(int d_max, int n_max) {
    Report rep;
    const Sl2Triple t = sigma_dual();

    const AlgebraElement a3 = ad_f_powers_of_mu1()[2];
    rep.add("symmetry.ad_f_cube_mu1", "", a3.is_zero(), a3.to_string());

    struct Sym {
        const char* name;
        AlgebraElement op;
        int shift;
    };
    const Sym syms[] = {
        {"dq2_2", shifted_derivative(2, 2), -1},
        {"g2^-2*dq2_1", gen(Gen::g2, -2) * shifted_derivative(1, 2), -1},
        {"Z1", build_Z1(), +1},
        {"Z2", build_Z2(), +1},
    };

    for (int d = 0; d <= d_max; ++d) {
        const auto probes = monogenic_spanning_set(d, n_max);
        for (const auto& sym : syms) {
            bool ok = true;
            std::string witness;
            int idx = 0;
            for (const auto& probe : probes) {
                const SpinorVector img = apply(sym.op, probe);
                const SpinorVector res = apply(t.F, img);
                if (!res.is_zero()) {
                    ok = false;
                    witness = "probe " + std::to_string(idx) + ": " + res.to_string();
                    break;
                }
                if (!img.is_zero() && img.homogeneous_degree() != d + sym.shift) {
                    ok = false;
                    witness = "probe " + std::to_string(idx) + ": degree shift violated";
                    break;
                }
                ++idx;
            }
            std::ostringstream ps;
            ps << sym.name << ", d=" << d << ", probes=" << probes.size();
            rep.add("symmetry.maps_kernel_to_kernel", ps.str(), ok, witness);
        }
    }
    return rep;
}

Report check_weight_multiplicities(int d, int e_lo, int e_hi) {
    Report rep;
    for (Parity p : {Parity::plus, Parity::minus}) {
        bool ok = true;
        std::string witness;
        for (int e = e_lo; e <= e_hi && ok; ++e) {
            if (((e % 2) + 2) % 2 == 0) continue;  // weights are odd
            // lattice count: monomials (a, d-a, c) with the requested weight/parity
            int actual = 0;
            for (int a = 0; a <= d; ++a) {
                const int twice_c = e - 1 - 2 * (a - (d - a));
                if (twice_c < 0 || twice_c % 2 != 0) continue;
                const int c = twice_c / 2;
                if ((c % 2 == 0) == (p == Parity::plus)) ++actual;
            }
            // prediction: lowest weights e0 + 4t, 0 <= t <= d, each contributing
            // its weight string e0 + 4t, e0 + 4t + 4, ...
            const int e0 = (p == Parity::plus ? 1 : 3) - 2 * d;
            int predicted = 0;
            if (e >= e0 && (e - e0) % 4 == 0) predicted = std::min(d, (e - e0) / 4) + 1;
            if (actual != predicted) {
                ok = false;
                std::ostringstream w;
                w << "e=" << e << ": count " << actual << " != predicted " << predicted;
                witness = w.str();
            }
        }
        std::ostringstream ps;
        ps << "d=" << d << ", e in [" << e_lo << ".." << e_hi << "], parity=" << (p == Parity::plus ? "+" : "-");
        rep.add("weights.multiplicity", ps.str(), ok, witness);
    }
    return rep;
}

}  // namespace qspinor
