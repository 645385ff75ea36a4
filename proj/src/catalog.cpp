#include "qwatson/catalog.hpp"

#include <algorithm>
#include <utility>

#include "qwatson/errors.hpp"
#include "qwatson/qfactorial.hpp"

namespace qwatson {

namespace {

using Vec = std::vector<Rational>;

Rational frac(const Vec& nums, const Vec& dens, const Rational& q, int n) {
    return poch_fraction(nums, dens, q, n);
}

Rational sign(long i) { return i % 2 == 0 ? Rational(1) : Rational(-1); }

// binom(i, 2)
long pairs(long i) { return i * (i - 1) / 2; }

Rational div_checked(const Rational& num, const Rational& den, const std::string& factor) {
    if (den == 0) throw DegenerateDenominator(factor, 1, factor);
    return num / den;
}

// --- Andrews-Watson family -------------------------------------------------

// 4phi3[q^-n, q^{1+n}a, upper, -C; qA, -qA, lower; q, q], summed to n.
SeriesSpec andrews_type_series(const ParamPoint& p, const Rational& upper, const Rational& lower) {
    const Rational& q = p.q;
    return {{qpow(q, -p.n), qpow(q, 1 + p.n) * p.a(), upper, -p.C}, {q * p.A, -q * p.A, lower}, q, p.n};
}

// The inner series after the index shift k -> i + j.
SeriesSpec andrews_inner_series(const ParamPoint& p, int i) {
    const Rational& q = p.q;
    const Rational qi = qpow(q, i);
    return {{qpow(q, i - p.n), qpow(q, 1 + p.n + i) * p.a(), qi * p.C, -qi * p.C},
            {q * qi * p.A, -q * qi * p.A, qi * qi * p.c()},
            q,
            p.n - i};
}

// (q^-eps, q^-n, q^{1+n}a, C, -C; q, qA, -qA, q^eps c, q^{i-1}c; q)_i
Rational andrews_weight(const ParamPoint& p, int i) {
    const Rational& q = p.q;
    return frac({qpow(q, -p.eps), qpow(q, -p.n), qpow(q, 1 + p.n) * p.a(), p.C, -p.C},
                {q, q * p.A, -q * p.A, qpow(q, p.eps) * p.c(), qpow(q, i - 1) * p.c()}, q, i);
}

// (q, q^2 a/c; q^2)_m / (q^{2+2i}a, q^{1+2i}c; q^2)_m
Rational andrews_even_part(const ParamPoint& p, int i, int m) {
    const Rational& q = p.q;
    const Rational q2 = q * q;
    return frac({q, q2 * p.a() / p.c()}, {qpow(q, 2 + 2 * i) * p.a(), qpow(q, 1 + 2 * i) * p.c()}, q2, m);
}

Rational andrews_closed(const ParamPoint& p, bool mutant) {
    if (p.n % 2 != 0) return Rational(0);
    const int s = p.n / 2;
    return qpow(p.c(), mutant ? s + 1 : s) * andrews_even_part(p, 0, s);
}

Rational thm_a_closed(const ParamPoint& p, bool mutant) {
    Rational sum(0);
    for (int i = 0; i <= std::min(p.eps, p.n); ++i) {
        if ((p.n - i) % 2 != 0) continue;
        const long e = static_cast<long>(p.eps + p.n) * i + (mutant ? 1 : 0);
        sum += qpow(p.q, e) * qpow(p.C, p.n + i) * andrews_weight(p, i) * andrews_even_part(p, i, (p.n - i) / 2);
    }
    return sum;
}

Rational thm_b_closed(const ParamPoint& p, bool mutant) {
    Rational sum(0);
    for (int i = 0; i <= std::min(p.eps, p.n); ++i) {
        if ((p.n - i) % 2 != 0) continue;
        const long e = static_cast<long>(p.eps + p.n) * i - pairs(i) + (mutant ? 1 : 0);
        sum += sign(i) * qpow(p.q, e) * qpow(p.C, p.n) * andrews_weight(p, i) *
               andrews_even_part(p, i, (p.n - i) / 2);
    }
    return sum;
}

// Terms with i > n carry the factor (q^-n;q)_i = 0 and are omitted.
Rational rel_a_sum(const ParamPoint& p, bool mutant) {
    Rational sum(0);
    for (int i = 0; i <= std::min(p.eps, p.n); ++i) {
        const long e = static_cast<long>(i + p.eps) * i + (mutant ? 1 : 0);
        sum += qpow(p.q, e) * qpow(p.c(), i) * andrews_weight(p, i) * phi_eval(andrews_inner_series(p, i), p.q);
    }
    return sum;
}

Rational rel_b_sum(const ParamPoint& p, bool mutant) {
    Rational sum(0);
    for (int i = 0; i <= std::min(p.eps, p.n); ++i) {
        const long e = static_cast<long>(p.eps) * i + pairs(i + 1) + (mutant ? 1 : 0);
        sum += sign(i) * qpow(p.q, e) * qpow(p.C, i) * andrews_weight(p, i) *
               phi_eval(andrews_inner_series(p, i), p.q);
    }
    return sum;
}

Rational cor_a1_closed(const ParamPoint& p, bool mutant) {
    const auto [s, odd] = ParityCase::of(p.n);
    if (!odd) return andrews_closed(p, false);
    const Rational& q = p.q;
    const Rational q2 = q * q;
    return qpow(p.c(), mutant ? s + 2 : s + 1) * frac({q}, {q * p.c()}, q2, s + 1) *
           frac({q2 * p.a() / p.c()}, {q2 * p.a()}, q2, s);
}

Rational cor_a2_closed(const ParamPoint& p, bool mutant) {
    const auto [s, odd] = ParityCase::of(p.n);
    const Rational& q = p.q;
    const Rational q2 = q * q;
    const Rational a = p.a();
    const Rational c = p.c();
    if (!odd) {
        const Rational lead = mutant ? qpow(q, 3) * c : q2 * c;
        const Rational num = lead * (1 - c) * (1 - qpow(q, 2 * s)) * (1 - qpow(q, 1 + 2 * s) * a);
        const Rational den = (1 - q2 * c) * (1 - qpow(q, 1 + 2 * s) * c) * (1 - qpow(q, 2 * s) * a / c);
        return (1 + div_checked(num, den, "brace denominator of cor-a2")) * qpow(c, s) * andrews_even_part(p, 0, s);
    }
    return div_checked(1 - q2, 1 - q2 * c, "1 - q^2 c") * qpow(c, 1 + s) *
           frac({qpow(q, 3), q2 * a / c}, {q2 * a, qpow(q, 3) * c}, q2, s);
}

Rational cor_b1_closed(const ParamPoint& p, bool mutant) {
    const auto [s, odd] = ParityCase::of(p.n);
    if (!odd) return andrews_closed(p, false);
    const Rational& q = p.q;
    const Rational q2 = q * q;
    const Rational lead = mutant ? Rational(1) : Rational(-1);
    return lead * qpow(p.C, 1 + 2 * s) * frac({q}, {q * p.c()}, q2, s + 1) *
           frac({q2 * p.a() / p.c()}, {q2 * p.a()}, q2, s);
}

Rational cor_b2_closed(const ParamPoint& p, bool mutant) {
    const auto [s, odd] = ParityCase::of(p.n);
    const Rational& q = p.q;
    const Rational q2 = q * q;
    const Rational a = p.a();
    const Rational c = p.c();
    if (!odd) {
        const Rational num = q * (1 - c) * (1 - qpow(q, 2 * s)) * (1 - qpow(q, 1 + 2 * s) * a);
        const Rational den = (1 - q2 * c) * (1 - qpow(q, 1 + 2 * s) * c) * (1 - qpow(q, 2 * s) * a / c);
        return (1 + div_checked(num, den, "brace denominator of cor-b2")) * qpow(c, s) * andrews_even_part(p, 0, s);
    }
    const Rational lead = mutant ? Rational(q2 + 1) : Rational(q2 - 1);
    return div_checked(lead, 1 - q2 * c, "1 - q^2 c") * qpow(p.C, 1 + 2 * s) *
           frac({qpow(q, 3), q2 * a / c}, {q2 * a, qpow(q, 3) * c}, q2, s);
}

// --- Jain-Watson family ----------------------------------------------------

Rational sqrt_qac(const ParamPoint& p) { return sqrt_q(p) * p.A * p.C; }

// 4phi3[a, c, upper, -q^-n; r, -r, lower; q, q], r = sqrt(qac), summed to n.
SeriesSpec jain_type_series(const ParamPoint& p, const Rational& upper, const Rational& lower) {
    const Rational r = sqrt_qac(p);
    return {{p.a(), p.c(), upper, -qpow(p.q, -p.n)}, {r, -r, lower}, p.q, p.n};
}

SeriesSpec jain_inner_series(const ParamPoint& p, int i) {
    const Rational& q = p.q;
    const Rational qi = qpow(q, i);
    const Rational r = sqrt_qac(p);
    return {{qi * p.a(), qi * p.c(), qpow(q, i - p.n), -qpow(q, i - p.n)},
            {qi * r, -qi * r, qpow(q, 2 * i - 2 * p.n)},
            q,
            p.n - i};
}

// (q^-eps, q^-n, -q^-n, a, c; q, r, -r, q^{eps-2n}, q^{i-1-2n}; q)_i
Rational jain_weight(const ParamPoint& p, int i) {
    const Rational& q = p.q;
    const Rational r = sqrt_qac(p);
    return frac({qpow(q, -p.eps), qpow(q, -p.n), -qpow(q, -p.n), p.a(), p.c()},
                {q, r, -r, qpow(q, p.eps - 2 * p.n), qpow(q, i - 1 - 2 * p.n)}, q, i);
}

// (q^{1+i}a, q^{1+i}c; q^2)_{n-i} / (q, q^{1+2i}ac; q^2)_{n-i}
Rational jain_closed_part(const ParamPoint& p, int i, bool mutant = false) {
    const Rational& q = p.q;
    const Rational lead_a = qpow(q, (mutant ? 2 : 1) + i) * p.a();
    return frac({lead_a, qpow(q, 1 + i) * p.c()}, {q, qpow(q, 1 + 2 * i) * p.a() * p.c()}, q * q, p.n - i);
}

Rational thm_c_closed(const ParamPoint& p, bool mutant) {
    Rational sum(0);
    for (int i = 0; i <= p.eps; ++i) {
        const long e = static_cast<long>(i + p.eps - 2 * p.n) * i;
        sum += qpow(p.q, e) * jain_weight(p, i) * jain_closed_part(p, i, mutant);
    }
    return sum;
}

Rational thm_d_closed(const ParamPoint& p, bool mutant) {
    Rational sum(0);
    for (int i = 0; i <= p.eps; ++i) {
        const long e = static_cast<long>(p.eps - p.n) * i + pairs(i + 1) + (mutant ? 1 : 0);
        sum += sign(i) * qpow(p.q, e) * jain_weight(p, i) * jain_closed_part(p, i);
    }
    return sum;
}

Rational rel_c_sum(const ParamPoint& p, bool mutant) {
    Rational sum(0);
    for (int i = 0; i <= p.eps; ++i) {
        const long e = static_cast<long>(i + p.eps - 2 * p.n) * i + (mutant ? 1 : 0);
        sum += qpow(p.q, e) * jain_weight(p, i) * phi_eval(jain_inner_series(p, i), p.q);
    }
    return sum;
}

Rational rel_d_sum(const ParamPoint& p, bool mutant) {
    Rational sum(0);
    for (int i = 0; i <= p.eps; ++i) {
        const long e = static_cast<long>(p.eps - p.n) * i + pairs(i + 1);
        sum += sign(mutant ? i + 1 : i) * qpow(p.q, e) * jain_weight(p, i) * phi_eval(jain_inner_series(p, i), p.q);
    }
    return sum;
}

// (a, c; q^2)_n / (q, qac; q^2)_n
Rational jain_shifted(const ParamPoint& p) {
    const Rational& q = p.q;
    return frac({p.a(), p.c()}, {q, q * p.a() * p.c()}, q * q, p.n);
}

Rational cor_c1_closed(const ParamPoint& p, bool mutant) {
    const Rational y = jain_closed_part(p, 0);
    const Rational x = jain_shifted(p);
    return mutant ? Rational(y - x) : Rational(y + x);
}

Rational cor_d1_closed(const ParamPoint& p, bool mutant) {
    return jain_closed_part(p, 0) - qpow(p.q, mutant ? p.n + 1 : p.n) * jain_shifted(p);
}

Rational cor_c2_closed(const ParamPoint& p, bool mutant) {
    const Rational& q = p.q;
    const Rational a = p.a();
    const Rational c = p.c();
    const int n = p.n;
    const Rational lead = mutant ? Rational(1 - q) : Rational(1 + q);
    const Rational first = lead * div_checked(1 - qpow(q, 1 - 2 * n), 1 - qpow(q, 2 - 2 * n), "1 - q^{2-2n}");
    const Rational num = q * (1 - a) * (1 - c) * (1 - qpow(q, -2 * n));
    const Rational den = (1 - qpow(q, 2 - 2 * n)) * (1 - a * qpow(q, 2 * n - 1)) * (1 - c * qpow(q, 2 * n - 1));
    const Rational brace = 1 + div_checked(num, den, "(1 - q^{2-2n})(1 - a q^{2n-1})(1 - c q^{2n-1})");
    return first * jain_shifted(p) + brace * jain_closed_part(p, 0);
}

Rational cor_d2_closed(const ParamPoint& p, bool mutant) {
    const Rational& q = p.q;
    const Rational a = p.a();
    const Rational c = p.c();
    const int n = p.n;
    const Rational lead = mutant ? Rational(1 - q) : Rational(1 + q);
    const Rational first =
        lead * div_checked(1 - qpow(q, 2 * n - 1), qpow(q, n - 1) - qpow(q, 1 - n), "q^{n-1} - q^{1-n}");
    const Rational num = (1 - a) * (1 - c) * (1 - qpow(q, 2 * n));
    const Rational den = (1 - qpow(q, 2 - 2 * n)) * (1 - a * qpow(q, 2 * n - 1)) * (1 - c * qpow(q, 2 * n - 1));
    const Rational brace = 1 - div_checked(num, den, "(1 - q^{2-2n})(1 - a q^{2n-1})(1 - c q^{2n-1})");
    return first * jain_shifted(p) + brace * jain_closed_part(p, 0);
}

// --- terminating 6phi5 -----------------------------------------------------

// The catalog point carries only A and C, so the 6phi5 is exercised on the
// slice a = A^2, b = C, c = C^2 q^n. Unit tests cover independent (a, b, c).
struct Phi65Args {
    Rational a, b, c;
};
Phi65Args phi65_args(const ParamPoint& p) { return {p.a(), p.C, p.c() * qpow(p.q, p.n)}; }

Rational phi65_closed(const Rational& a, const Rational& b, const Rational& c, const Rational& q, int eps,
                      bool mutant) {
    if (b == 0 || c == 0) throw DivisionByZero("6phi5 closed form needs b, c nonzero");
    const Rational lead = (mutant ? q * q : q) * a;
    return frac({lead, q * a / (b * c)}, {q * a / b, q * a / c}, q, eps);
}

// --- unity identities ------------------------------------------------------

Rational unity_a_term(const ParamPoint& p, int k, int i) {
    const Rational& q = p.q;
    const Rational c = p.c();
    const int eps = p.eps;
    const Rational ratio =
        div_checked(1 - c * qpow(q, 2 * i - 1), 1 - c * qpow(q, i - 1), "1 - c q^{" + std::to_string(i - 1) + "}");
    return qbinom(k, i, q) * qpow(q, static_cast<long>(i + eps - 1) * i) * qpow(c, i) *
           frac({c * qpow(q, k + i)}, {c * qpow(q, i)}, q, eps - i) * ratio *
           frac({qpow(q, -eps)}, {qpow(q, eps) * c}, q, i);
}

Rational unity_b_term(const ParamPoint& p, int k, int i) {
    const Rational& q = p.q;
    const Rational& C = p.C;
    const Rational c = p.c();
    const int eps = p.eps;
    const Rational ratio = div_checked(1 - c * qpow(q, 2 * i - 1), 1 - c * qpow(q, i + eps - 1),
                                      "1 - c q^{" + std::to_string(i + eps - 1) + "}");
    const Rational tail = qpoch_desc(qpow(q, k), q, i) * qpoch_desc(c * qpow(q, k + eps - 1), q, eps - i);
    const Rational tail_den = qpoch(qpow(q, k) * C, q, eps);
    if (tail_den == 0) throw DegenerateDenominator(to_string(qpow(q, k) * C), eps);
    return sign(i) * qpow(q, eps + pairs(i)) * qpow(C, i - eps) * ratio * frac({qpow(q, -eps)}, {q}, q, i) *
           frac({qpow(q, 1 - eps) / C}, {qpow(q, 2 - eps - i) / c}, q, eps) * tail / tail_den;
}

// --- catalog assembly ------------------------------------------------------

using Raw = std::function<Rational(const ParamPoint&, bool)>;

IdentityCase make_case(std::string id, std::string ref, std::string shape, Constraints constraints,
                       std::function<Rational(const ParamPoint&)> lhs, Raw rhs, std::string mutation) {
    auto guard = [constraints](const ParamPoint& p) {
        p.validate();
        constraints.check(p);
    };
    IdentityCase out;
    out.id = std::move(id);
    out.paper_ref = std::move(ref);
    out.shape = std::move(shape);
    out.constraints = constraints;
    out.lhs = [guard, lhs](const ParamPoint& p) {
        guard(p);
        return lhs(p);
    };
    out.rhs = [guard, rhs](const ParamPoint& p) {
        guard(p);
        return rhs(p, false);
    };
    out.mutant_rhs = [guard, rhs](const ParamPoint& p) {
        guard(p);
        return rhs(p, true);
    };
    out.mutation = std::move(mutation);
    return out;
}

Constraints andrews_family() { return {}; }
Constraints jain_family() {
    Constraints c;
    c.eps_le_n = true;
    c.square_q = true;
    return c;
}
Constraints fixed_eps(Constraints base, int eps) {
    base.eps_fixed = eps;
    if (base.eps_le_n) base.n_min = std::max(base.n_min, eps);
    return base;
}
Constraints no_eps(Constraints base) {
    base.uses_eps = false;
    base.eps_le_n = false;
    return base;
}

SeriesSpec thm_a_series(const ParamPoint& p) {
    return andrews_type_series(p, p.C, qpow(p.q, p.eps) * p.c());
}
SeriesSpec thm_b_series(const ParamPoint& p) {
    return andrews_type_series(p, qpow(p.q, p.eps) * p.C, qpow(p.q, p.eps) * p.c());
}
SeriesSpec thm_c_series(const ParamPoint& p) {
    return jain_type_series(p, qpow(p.q, -p.n), qpow(p.q, p.eps - 2 * p.n));
}
SeriesSpec thm_d_series(const ParamPoint& p) {
    return jain_type_series(p, qpow(p.q, p.eps - p.n), qpow(p.q, p.eps - 2 * p.n));
}

Rational series_lhs(SeriesSpec (*build)(const ParamPoint&), const ParamPoint& p) { return phi_eval(build(p), p.q); }

std::vector<IdentityCase> build_catalog() {
    std::vector<IdentityCase> cases;
    const auto series = [](SeriesSpec (*build)(const ParamPoint&)) {
        return [build](const ParamPoint& p) { return series_lhs(build, p); };
    };

    cases.push_back(make_case(
        "andrews", "Andrews q-Watson formula",
        "4phi3[q^-n, q^{1+n}a, sqrt(c), -sqrt(c); q sqrt(a), -q sqrt(a), c] = c^s (q, q^2a/c; q^2)_s / "
        "(q^2a, qc; q^2)_s for n = 2s, 0 for n odd",
        no_eps(andrews_family()),
        [](const ParamPoint& p) { return phi_eval(andrews_type_series(p, p.C, p.c()), p.q); }, andrews_closed,
        "even branch: c^s -> c^{s+1}"));

    cases.push_back(make_case(
        "jain", "Jain q-Watson formula",
        "4phi3[a, c, q^-n, -q^-n; sqrt(qac), -sqrt(qac), q^{-2n}] = (qa, qc; q^2)_n / (q, qac; q^2)_n",
        no_eps(jain_family()),
        [](const ParamPoint& p) { return phi_eval(jain_type_series(p, qpow(p.q, -p.n), qpow(p.q, -2 * p.n)), p.q); },
        [](const ParamPoint& p, bool mutant) { return jain_closed_part(p, 0, mutant); },
        "(qa; q^2)_n -> (q^2 a; q^2)_n"));

    cases.push_back(make_case(
        "phi65", "terminating 6phi5 summation",
        "6phi5[a, q sqrt(a), -q sqrt(a), b, c, q^-eps; ...; q^{1+eps}a/(bc)] = (qa, qa/bc; q)_eps / "
        "(qa/b, qa/c; q)_eps on the slice a = A^2, b = C, c = C^2 q^n",
        andrews_family(),
        [](const ParamPoint& p) {
            const auto [a, b, c] = phi65_args(p);
            return phi65_lhs(a, b, c, p.q, p.eps);
        },
        [](const ParamPoint& p, bool mutant) {
            const auto [a, b, c] = phi65_args(p);
            return phi65_closed(a, b, c, p.q, p.eps, mutant);
        },
        "(qa; q)_eps -> (q^2 a; q)_eps"));

    cases.push_back(make_case(
        "unity-a", "partition of unity from the 6phi5 (a -> c/q, b -> q^-k, c -> infinity)",
        "sum_{i=0}^{eps} [k,i]_q q^{(i+eps-1)i} c^i ... = 1, with cutoff k = n", andrews_family(),
        [](const ParamPoint& p) { return unity_lhs(UnityVariant::A, p, p.n); },
        [](const ParamPoint&, bool mutant) { return mutant ? Rational(-1) : Rational(1); }, "1 -> -1"));

    cases.push_back(make_case(
        "unity-b", "partition of unity from the 6phi5 (a -> c/q, b -> q^-k, c -> sqrt(c))",
        "sum_{i=0}^{eps} (-1)^i q^{eps+binom(i,2)} c^{(i-eps)/2} ... <q^k;q>_i <cq^{k+eps-1};q>_{eps-i} / "
        "(q^k sqrt(c); q)_eps = 1, with cutoff k = n",
        andrews_family(), [](const ParamPoint& p) { return unity_lhs(UnityVariant::B, p, p.n); },
        [](const ParamPoint&, bool mutant) { return mutant ? Rational(-1) : Rational(1); }, "1 -> -1"));

    cases.push_back(make_case("rel-a", "rearrangement relation, Andrews type (equation-a)",
                              "4phi3 with lower q^eps c = sum_i q^{(i+eps)i} c^i (...)_i * inner 4phi3 at q^i shift",
                              andrews_family(), series(thm_a_series), rel_a_sum,
                              "q^{(i+eps)i} -> q^{(i+eps)i+1}"));

    cases.push_back(make_case(
        "rel-b", "rearrangement relation, Andrews type (equation-b)",
        "4phi3 with upper q^eps sqrt(c) = sum_i (-1)^i q^{eps i+binom(i+1,2)} c^{i/2} (...)_i * inner 4phi3",
        andrews_family(), series(thm_b_series), rel_b_sum, "q^{eps i+binom(i+1,2)} -> q^{eps i+binom(i+1,2)+1}"));

    cases.push_back(make_case("rel-c", "rearrangement relation, Jain type (a -> aq^{-1-n} in equation-a)",
                              "4phi3[a, c, q^-n, -q^-n; ..., q^{eps-2n}] = sum_i q^{(i+eps-2n)i} (...)_i * inner 4phi3",
                              jain_family(), series(thm_c_series), rel_c_sum,
                              "q^{(i+eps-2n)i} -> q^{(i+eps-2n)i+1}"));

    cases.push_back(make_case(
        "rel-d", "rearrangement relation, Jain type (a -> aq^{-1-n} in equation-b)",
        "4phi3[a, c, q^{eps-n}, -q^-n; ..., q^{eps-2n}] = sum_i (-1)^i q^{(eps-n)i+binom(i+1,2)} (...)_i * inner 4phi3",
        jain_family(), series(thm_d_series), rel_d_sum, "(-1)^i -> (-1)^{i+1}"));

    cases.push_back(make_case("thm-a", "Theorem 1 (Andrews-Watson type, lower q^eps c)",
                              "4phi3 with lower q^eps c = sum_i q^{(eps+n)i} c^{(n+i)/2} (...)_i (...)_{(n-i)/2} "
                              "chi(n-i even)",
                              andrews_family(), series(thm_a_series), thm_a_closed,
                              "q^{(eps+n)i} -> q^{(eps+n)i+1}"));

    cases.push_back(make_case("thm-b", "Theorem 2 (Andrews-Watson type, upper q^eps sqrt(c))",
                              "4phi3 with upper q^eps sqrt(c) = sum_i (-1)^i q^{(eps+n)i-binom(i,2)} c^{n/2} (...)_i "
                              "(...)_{(n-i)/2} chi(n-i even)",
                              andrews_family(), series(thm_b_series), thm_b_closed,
                              "q^{(eps+n)i-binom(i,2)} -> q^{(eps+n)i-binom(i,2)+1}"));

    cases.push_back(make_case("thm-c", "Theorem 3 (Jain-Watson type, lower q^{eps-2n})",
                              "4phi3[a, c, q^-n, -q^-n; ..., q^{eps-2n}] = sum_i q^{(i+eps-2n)i} (...)_i "
                              "(q^{1+i}a, q^{1+i}c; q^2)_{n-i} / (q, q^{1+2i}ac; q^2)_{n-i}",
                              jain_family(), series(thm_c_series), thm_c_closed,
                              "(q^{1+i}a; q^2) -> (q^{2+i}a; q^2)"));

    cases.push_back(make_case("thm-d", "Theorem 4 (Jain-Watson type, upper q^{eps-n})",
                              "4phi3[a, c, q^{eps-n}, -q^-n; ..., q^{eps-2n}] = sum_i (-1)^i q^{(eps-n)i+binom(i+1,2)} "
                              "(...)_i (q^{1+i}a, q^{1+i}c; q^2)_{n-i} / (q, q^{1+2i}ac; q^2)_{n-i}",
                              jain_family(), series(thm_d_series), thm_d_closed,
                              "q^{(eps-n)i+binom(i+1,2)} -> q^{(eps-n)i+binom(i+1,2)+1}"));

    cases.push_back(make_case("cor-a1", "Corollary: eps=1 in Theorem 1", "thm-a LHS at eps = 1, piecewise in n parity",
                              fixed_eps(andrews_family(), 1), series(thm_a_series), cor_a1_closed,
                              "odd branch: c^{1+s} -> c^{2+s}"));
    cases.push_back(make_case("cor-a2", "Corollary: eps=2 in Theorem 1", "thm-a LHS at eps = 2, piecewise in n parity",
                              fixed_eps(andrews_family(), 2), series(thm_a_series), cor_a2_closed,
                              "even branch brace: q^2 c(1-c) -> q^3 c(1-c)"));
    cases.push_back(make_case("cor-b1", "Corollary: eps=1 in Theorem 2", "thm-b LHS at eps = 1, piecewise in n parity",
                              fixed_eps(andrews_family(), 1), series(thm_b_series), cor_b1_closed,
                              "odd branch: leading minus -> plus"));
    cases.push_back(make_case("cor-b2", "Corollary: eps=2 in Theorem 2", "thm-b LHS at eps = 2, piecewise in n parity",
                              fixed_eps(andrews_family(), 2), series(thm_b_series), cor_b2_closed,
                              "odd branch: (q^2 - 1) -> (q^2 + 1)"));
    cases.push_back(make_case("cor-c1", "Corollary: eps=1 in Theorem 3 (n >= 1)",
                              "thm-c LHS at eps = 1 = (qa, qc; q^2)_n/(q, qac; q^2)_n + (a, c; q^2)_n/(q, qac; q^2)_n",
                              fixed_eps(jain_family(), 1), series(thm_c_series), cor_c1_closed, "'+' -> '-'"));
    cases.push_back(make_case("cor-c2", "Corollary: eps=2 in Theorem 3 (n >= 2)",
                              "thm-c LHS at eps = 2 = (1+q)(1-q^{1-2n})/(1-q^{2-2n}) (a, c; q^2)_n/(q, qac; q^2)_n + "
                              "{1 + ...} (qa, qc; q^2)_n/(q, qac; q^2)_n",
                              fixed_eps(jain_family(), 2), series(thm_c_series), cor_c2_closed,
                              "(1+q) -> (1-q)"));
    cases.push_back(make_case("cor-d1", "Corollary: eps=1 in Theorem 4 (n >= 1)",
                              "thm-d LHS at eps = 1 = (qa, qc; q^2)_n/(q, qac; q^2)_n - q^n (a, c; q^2)_n/(q, qac; q^2)_n",
                              fixed_eps(jain_family(), 1), series(thm_d_series), cor_d1_closed,
                              "q^n -> q^{n+1}"));
    cases.push_back(make_case("cor-d2", "Corollary: eps=2 in Theorem 4 (n >= 2)",
                              "4phi3[a, c, q^{2-n}, -q^-n; ..., q^{2-2n}] = (1+q)(1-q^{2n-1})/(q^{n-1}-q^{1-n}) "
                              "(a, c; q^2)_n/(q, qac; q^2)_n + {1 - ...} (qa, qc; q^2)_n/(q, qac; q^2)_n",
                              fixed_eps(jain_family(), 2), series(thm_d_series), cor_d2_closed,
                              "(1+q) -> (1-q)"));
    return cases;
}

bool one_of(std::string_view id, std::initializer_list<std::string_view> ids) {
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

}  // namespace

// --- Constraints -------------------------------------------------------------

bool Constraints::admits(const ParamPoint& p) const {
    try {
        check(p);
        return true;
    } catch (const ConstraintViolated&) {
        return false;
    }
}

void Constraints::check(const ParamPoint& p) const {
    if (p.n < n_min) throw ConstraintViolated("requires n >= " + std::to_string(n_min));
    if (eps_fixed && p.eps != *eps_fixed) throw ConstraintViolated("requires eps = " + std::to_string(*eps_fixed));
    if (eps_le_n && p.eps > p.n) throw ConstraintViolated("requires eps <= n");
}

std::string Constraints::describe() const {
    std::vector<std::string> parts;
    if (n_min > 0) parts.push_back("n>=" + std::to_string(n_min));
    if (!uses_eps) parts.emplace_back("no eps");
    if (eps_fixed) parts.push_back("eps=" + std::to_string(*eps_fixed));
    if (eps_le_n) parts.emplace_back("eps<=n");
    if (square_q) parts.emplace_back("q square");
    if (parts.empty()) return "none";
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out += ", " + parts[i];
    return out;
}

// --- public API --------------------------------------------------------------

const std::vector<IdentityCase>& catalog() {
    static const std::vector<IdentityCase> cases = build_catalog();
    return cases;
}

const IdentityCase& find_identity(std::string_view id) {
    for (const auto& c : catalog()) {
        if (c.id == id) return c;
    }
    throw UnknownIdentity(std::string(id));
}

bool is_known_identity(std::string_view id) {
    const auto& cases = catalog();
    return std::any_of(cases.begin(), cases.end(), [id](const IdentityCase& c) { return c.id == id; });
}

Rational sqrt_q(const ParamPoint& p) {
    auto root = exact_sqrt(p.q);
    if (!root) {
        throw ConstraintViolated("q must be a perfect rational square so that sqrt(qac) is rational (got q=" +
                                 to_string(p.q) + ")");
    }
    return *root;
}

Rational andrews_rhs(const ParamPoint& p) { return find_identity("andrews").rhs(p); }
Rational jain_rhs(const ParamPoint& p) { return find_identity("jain").rhs(p); }

Rational phi65_rhs(const Rational& a, const Rational& b, const Rational& c, const Rational& q, int eps) {
    return phi65_closed(a, b, c, q, eps, false);
}

Rational phi65_lhs(const Rational& a, const Rational& b, const Rational& c, const Rational& q, int eps) {
    const auto root = exact_sqrt(a);
    if (!root) throw ConstraintViolated("6phi5 needs a to be a rational square (got a=" + to_string(a) + ")");
    if (b == 0 || c == 0) throw DivisionByZero("6phi5 needs b, c nonzero");
    const Rational& r = *root;
    const Rational qe = qpow(q, eps);
    SeriesSpec spec{{a, q * r, -q * r, b, c, 1 / qe}, {r, -r, q * a / b, q * a / c, q * qe * a}, q * qe * a / (b * c),
                    eps};
    return phi_eval(spec, q);
}

Rational unity_lhs(UnityVariant which, const ParamPoint& p, int k) {
    p.validate();
    if (k < 0) throw ConstraintViolated("unity cutoff k must be nonnegative");
    if (which == UnityVariant::A) {
        return weighted_sum([k](const ParamPoint& pt, int i) { return unity_a_term(pt, k, i); }, p, 0, p.eps);
    }
    return weighted_sum([k](const ParamPoint& pt, int i) { return unity_b_term(pt, k, i); }, p, 0, p.eps);
}

Rational thm_rhs(std::string_view id, const ParamPoint& p) {
    if (!one_of(id, {"thm-a", "thm-b", "thm-c", "thm-d"})) throw UnknownIdentity(std::string(id));
    return find_identity(id).rhs(p);
}

Rational cor_rhs(std::string_view id, const ParamPoint& p) {
    if (!one_of(id, {"cor-a1", "cor-a2", "cor-b1", "cor-b2", "cor-c1", "cor-c2", "cor-d1", "cor-d2"})) {
        throw UnknownIdentity(std::string(id));
    }
    return find_identity(id).rhs(p);
}

Rational rel_rhs(std::string_view id, const ParamPoint& p) {
    if (!one_of(id, {"rel-a", "rel-b", "rel-c", "rel-d"})) throw UnknownIdentity(std::string(id));
    return find_identity(id).rhs(p);
}

SeriesSpec lhs_series(std::string_view id, const ParamPoint& p) {
    const IdentityCase& ic = find_identity(id);
    p.validate();
    ic.constraints.check(p);
    if (id == "andrews") return andrews_type_series(p, p.C, p.c());
    if (id == "jain") return jain_type_series(p, qpow(p.q, -p.n), qpow(p.q, -2 * p.n));
    if (id == "phi65") {
        const auto [a, b, c] = phi65_args(p);
        const Rational& q = p.q;
        const Rational qe = qpow(q, p.eps);
        return {{a, q * p.A, -q * p.A, b, c, 1 / qe},
                {p.A, -p.A, q * a / b, q * a / c, q * qe * a},
                q * qe * a / (b * c),
                p.eps};
    }
    if (one_of(id, {"rel-a", "thm-a", "cor-a1", "cor-a2"})) return thm_a_series(p);
    if (one_of(id, {"rel-b", "thm-b", "cor-b1", "cor-b2"})) return thm_b_series(p);
    if (one_of(id, {"rel-c", "thm-c", "cor-c1", "cor-c2"})) return thm_c_series(p);
    if (one_of(id, {"rel-d", "thm-d", "cor-d1", "cor-d2"})) return thm_d_series(p);
    throw ConstraintViolated("identity '" + std::string(id) + "' has no single-series left side");
}

Rational lhs_eval(std::string_view id, const ParamPoint& p) { return find_identity(id).lhs(p); }
Rational rhs_eval(std::string_view id, const ParamPoint& p) { return find_identity(id).rhs(p); }

Rational cor_d2_lhs_variant(CorD2Upper variant, const ParamPoint& p) {
    find_identity("cor-d2").constraints.check(p);
    p.validate();
    const int shift = variant == CorD2Upper::PrintedMinusN ? 0 : 2;
    return phi_eval(jain_type_series(p, qpow(p.q, shift - p.n), qpow(p.q, 2 - 2 * p.n)), p.q);
}

std::string_view to_string(CorD2Upper variant) {
    return variant == CorD2Upper::PrintedMinusN ? "q^{-n}" : "q^{2-n}";
}

}  // namespace qwatson
