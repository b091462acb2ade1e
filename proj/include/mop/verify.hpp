#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mop/families_orth.hpp"
#include "mop/hahn.hpp"
#include "mop/identities.hpp"
#include "mop/limits.hpp"
#include "mop/version.hpp"

namespace mop::verify {

struct SuiteConfig {
    std::string suite = "all";  // orthogonality|biorthogonality|recurrence|identities|limits|oracle|all
    std::string family = "hahn";
    long max_order = 4;
    std::optional<hahn::Params> hahn_params;
    std::optional<families::FamilyParams> family_params;
    unsigned precision_bits = 256;
    std::uint64_t seed = 1;
    long draws = 200;
    std::vector<long> sequence;  // limit-parameter sequence; empty -> {100, 1000, 10000}
};

struct CaseResult {
    std::string id;
    std::string status;  // pass | fail | skipped-pole | hypothesis-violation
    std::string residual;
    double elapsed_ms = 0;
};

struct Report {
    std::string suite;
    unsigned precision_bits = 256;
    std::uint64_t seed = 1;
    std::string version = MOP_VERSION;
    std::vector<CaseResult> cases;
    long n_pass = 0, n_fail = 0, n_skipped = 0;
    bool ok() const { return n_fail == 0; }
};

inline nlohmann::ordered_json report_json(const Report& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["environment"] = {{"precision_bits", r.precision_bits}, {"seed", r.seed}, {"version", r.version}};
    j["cases"] = nlohmann::ordered_json::array();
    for (const auto& c : r.cases)
        j["cases"].push_back({{"id", c.id}, {"status", c.status}, {"residual", c.residual}, {"elapsed_ms", c.elapsed_ms}});
    j["summary"] = {{"pass", r.n_pass}, {"fail", r.n_fail}, {"skipped", r.n_skipped}};
    return j;
}

namespace detail {

// Deterministic splitmix64; stdlib distributions are avoided so reports are
// reproducible across toolchains.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long uniform(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

// numerator in [-40, 40], denominator in [1, den_max]
inline Rat rand_rat(Rng& rng, long den_max = 8, long num_max = 40) {
    const long num = rng.uniform(-num_max, num_max);
    const long den = rng.uniform(1, den_max);
    return Rat(Int(num), Int(den));
}

inline Rat rand_noninteger(Rng& rng, long den_max = 8, long num_max = 40) {
    for (;;) {
        const Rat q = rand_rat(rng, den_max, num_max);
        if (!is_integer(q)) return q;
    }
}

struct CaseRecorder {
    Report& report;
    void run(const std::string& id, const std::function<std::pair<bool, std::string>()>& body) {
        CaseResult c;
        c.id = id;
        const auto start = std::chrono::steady_clock::now();
        try {
            auto [pass, residual] = body();
            c.status = pass ? "pass" : "fail";
            c.residual = residual;
        } catch (const hypothesis_error& e) {
            c.status = "hypothesis-violation";
            c.residual = e.what();
        } catch (const pole_error& e) {
            c.status = "skipped-pole";
            c.residual = e.what();
        } catch (const singular_error& e) {
            c.status = "skipped-pole";
            c.residual = e.what();
        }
        c.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (c.status == "pass")
            ++report.n_pass;
        else if (c.status == "fail")
            ++report.n_fail;
        else
            ++report.n_skipped;
        report.cases.push_back(std::move(c));
    }
};

inline std::string idx_str(const MultiIndex& i) {
    return "(" + std::to_string(i.n1) + "," + std::to_string(i.n2) + ")";
}

inline std::pair<bool, std::string> exact_case(const Rat& residual) {
    return {scalar_is_zero(residual), residual.str()};
}

template <class P>
Rat max_abs_coeff(const P& p) {
    Rat worst(0);
    for (const auto& c : p.coeffs)
        if (abs(c) > worst) worst = abs(c);
    return worst;
}

template <class P>
std::pair<bool, std::string> poly_case(const P& residual) {
    const Rat worst = max_abs_coeff(residual);
    return {scalar_is_zero(worst), worst.str()};
}

template <class P>
std::pair<bool, std::string> poly_pair_case(const P& r1, const P& r2) {
    const Rat worst = std::max(max_abs_coeff(r1), max_abs_coeff(r2));
    return {scalar_is_zero(worst), worst.str()};
}

inline std::pair<bool, std::string> float_case(const Real& residual, const Real& tol) {
    return {abs(residual) < tol, residual.str(6)};
}

}  // namespace detail

inline hahn::Params default_hahn_params() {
    return {parse_rat("1/2"), parse_rat("1/3"), parse_rat("1/4"), 12};
}

inline families::FamilyParams default_family_params(families::FamilyId id) {
    using families::FamilyId;
    using families::make_params;
    switch (id) {
        case FamilyId::JacobiPineiro:
            return make_params(id, {{"alpha1", parse_rat("1/2")}, {"alpha2", parse_rat("1/3")}, {"beta", parse_rat("1/4")}});
        case FamilyId::MeixnerI:
            return make_params(id, {{"beta", parse_rat("3/4")}, {"c1", parse_rat("1/3")}, {"c2", parse_rat("1/2")}});
        case FamilyId::MeixnerII:
            return make_params(id, {{"beta1", parse_rat("3/4")}, {"beta2", parse_rat("7/5")}, {"c", parse_rat("2/5")}});
        case FamilyId::Kravchuk:
            return make_params(id, {{"p1", parse_rat("1/2")}, {"p2", parse_rat("1/4")}, {"N", Rat(10)}});
        case FamilyId::LaguerreI:
            return make_params(id, {{"alpha1", parse_rat("1/2")}, {"alpha2", parse_rat("1/3")}});
        case FamilyId::LaguerreII:
            return make_params(id, {{"alpha0", parse_rat("1/2")}, {"c1", Rat(1)}, {"c2", Rat(2)}});
        case FamilyId::Charlier:
            return make_params(id, {{"b1", Rat(2)}, {"b2", Rat(3)}});
    }
    throw usage_error("unknown family");
}

// ---------------------------------------------------------------------------
// Biorthogonality matrix over all index pairs with n1+n2, m1+m2 <= max_order.

struct BiorthMatrix {
    std::vector<MultiIndex> indexes;
    std::vector<std::vector<std::optional<Rat>>> entries;  // entries[n][m]; nullopt marks a pole/degeneracy
    bool verdict = true;
    std::vector<std::string> violations;
    std::vector<std::string> skipped;  // entries excluded from the verdict
    long constrained = 0, unconstrained = 0;
};

inline BiorthMatrix biorth_matrix(const hahn::Params& p, long max_order) {
    if (max_order < 1) throw usage_error("biorth_matrix: max_order >= 1 required");
    BiorthMatrix out;
    for (long s = 0; s <= max_order; ++s)
        for (long n1 = s; n1 >= 0; --n1) out.indexes.push_back({n1, s - n1});
    const std::size_t count = out.indexes.size();
    out.entries.assign(count, std::vector<std::optional<Rat>>(count));
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            const auto& n = out.indexes[i];
            const auto& m = out.indexes[j];
            Rat v;
            try {
                v = hahn::biorth_pairing(n, m, p);
            } catch (const pole_error& e) {
                out.skipped.push_back("n=" + detail::idx_str(n) + " m=" + detail::idx_str(m) + ": " + e.what());
                continue;
            } catch (const singular_error& e) {
                out.skipped.push_back("n=" + detail::idx_str(n) + " m=" + detail::idx_str(m) + ": " + e.what());
                continue;
            }
            out.entries[i][j] = v;
            std::optional<Rat> expect;
            if (n.n1 <= m.n1 && n.n2 <= m.n2) expect = Rat(0);
            else if (m.order() == n.order() - 1) expect = Rat(1);
            else if (m.order() <= n.order() - 2) expect = Rat(0);
            if (expect) {
                ++out.constrained;
                if (v != *expect) {
                    out.verdict = false;
                    out.violations.push_back("n=" + detail::idx_str(n) + " m=" + detail::idx_str(m) +
                                             " got " + v.str() + " want " + expect->str());
                }
            } else {
                ++out.unconstrained;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Identity parameter samplers (seeded; rejection on exact poles).

inline hypergeo::ParamMap sample_identity(hypergeo::IdentityId id, detail::Rng& rng) {
    using hypergeo::IdentityId;
    using detail::rand_noninteger;
    using detail::rand_rat;
    hypergeo::ParamMap p;
    switch (id) {
        case IdentityId::ChuVandermonde:
            p["l"] = Rat(rng.uniform(0, 8));
            p["b"] = rand_rat(rng);
            p["c"] = rand_noninteger(rng);
            break;
        case IdentityId::PfaffSaalschutz: {
            const long n = rng.uniform(0, 8);
            p["n"] = Rat(n);
            p["a"] = rand_rat(rng);
            p["b"] = rand_rat(rng);
            p["c"] = rand_noninteger(rng);
            p["d"] = Rat(-n) + p["a"] + p["b"] + 1 - p["c"];
            break;
        }
        case IdentityId::RakhaRathie:
            // integer differences put the point on a degenerate stratum where
            // one side truncates prematurely; keep everything generic
            p["n"] = Rat(rng.uniform(0, 6));
            do {
                p["lambda"] = rand_noninteger(rng);
                p["gamma"] = rand_noninteger(rng);
                p["beta"] = rand_noninteger(rng);
                p["epsilon"] = rand_noninteger(rng);
                p["mu"] = rand_noninteger(rng);
                p["delta"] = rand_noninteger(rng);
            } while (is_integer(Rat(p["mu"] - p["lambda"])) || is_integer(Rat(p["beta"] - p["epsilon"])) ||
                     is_integer(Rat(p["delta"] - p["gamma"])));
            break;
        case IdentityId::KarpPrilepkina: {
            const long n = rng.uniform(0, 6);
            const long r = rng.uniform(0, 2);
            long msum = 0;
            p["n"] = Rat(n);
            p["r"] = Rat(r);
            p["b"] = rand_noninteger(rng);
            for (long i = 1; i <= r; ++i) {
                const long m = rng.uniform(0, 3);
                msum += m;
                Rat f;
                do {
                    f = rand_noninteger(rng);
                } while (is_integer(Rat(f - p["b"])));  // integer f_i - b truncates the transformed side
                p["f" + std::to_string(i)] = f;
                p["m" + std::to_string(i)] = Rat(m);
            }
            p["p"] = Rat(std::max<long>(1, msum - n + 1) + rng.uniform(0, 6));
            break;
        }
        case IdentityId::Reversal: {
            p["n"] = Rat(rng.uniform(0, 8));
            const long np = rng.uniform(0, 2), nq = rng.uniform(0, 2);
            p["p"] = Rat(np);
            p["q"] = Rat(nq);
            for (long i = 1; i <= np; ++i) p["a" + std::to_string(i)] = rand_noninteger(rng);
            for (long j = 1; j <= nq; ++j) p["b" + std::to_string(j)] = rand_noninteger(rng);
            break;
        }
        case IdentityId::NewtonBinomial:
            p["n"] = Rat(rng.uniform(0, 8));
            p["a"] = rand_rat(rng);
            p["b"] = rand_rat(rng);
            break;
        case IdentityId::SimpleFraction:
            p["n"] = Rat(rng.uniform(1, 8));
            p["z"] = rand_noninteger(rng, 7);
            p["a"] = rand_noninteger(rng, 5);
            p["b"] = rand_noninteger(rng, 3);
            break;
        case IdentityId::HahnReduction: {
            const long na = rng.uniform(1, 4), nh = rng.uniform(1, 4);
            p["na"] = Rat(na);
            p["nh"] = Rat(nh);
            do {
                p["alpha"] = rand_noninteger(rng, 7);
                p["alphahat"] = rand_noninteger(rng, 5);
            } while (is_integer(Rat(p["alpha"] - p["alphahat"])));
            p["beta"] = rand_noninteger(rng, 3);
            do {
                p["N"] = rand_noninteger(rng, 7);
                p["j"] = rand_rat(rng);
            } while (is_integer(Rat(p["N"] - p["j"])));  // early truncation stratum of the l-sum
            break;
        }
    }
    return p;
}

// ---------------------------------------------------------------------------
// Suites.

namespace detail {

inline std::vector<MultiIndex> indexes_up_to(long smin, long smax) {
    std::vector<MultiIndex> out;
    for (long s = smin; s <= smax; ++s)
        for (long n1 = 0; n1 <= s; ++n1) out.push_back({n1, s - n1});
    return out;
}

inline void run_hahn_orthogonality(CaseRecorder& rec, const hahn::Params& hp, long max_order) {
    for (const auto& idx : indexes_up_to(1, max_order)) {
        for (long j = 0; j <= idx.order() - 1; ++j) {
            const Rat want = (j == idx.order() - 1) ? Rat(1) : Rat(0);
            rec.run("orthogonality/hahn/" + idx_str(idx) + "/j=" + std::to_string(j), [&] {
                return exact_case(Rat(hahn::moment_sum(idx, Kind::type1, std::nullopt, j, hp) - want));
            });
        }
    }
}

inline void run_family_orthogonality(CaseRecorder& rec, const families::FamilyParams& fp, long max_order) {
    const auto id = families::id_of(fp);
    const bool exact = families::orth_exact(id);
    const std::string fam = families::family_name(id);
    const Real tol = float_tolerance() * 1024;
    for (const auto& idx : indexes_up_to(1, max_order)) {
        if (id == families::FamilyId::Kravchuk && idx.order() > std::get<families::krav::Params>(fp).big_n)
            continue;
        for (long j = 0; j <= idx.order() - 1; ++j) {
            rec.run("orthogonality/" + fam + "/" + idx_str(idx) + "/j=" + std::to_string(j), [&]() {
                if (exact) return exact_case(families::orth_residual_exact(idx, j, fp));
                const auto r = families::orth_residual_float(idx, j, fp);
                return float_case(r.residual, tol);
            });
        }
    }
}

inline void run_hahn_oracle(CaseRecorder& rec, const hahn::Params& hp, long max_order) {
    for (const auto& idx : indexes_up_to(0, max_order)) {
        rec.run("oracle/hahn/type2/" + idx_str(idx), [&] {
            const auto a = hahn::type2(idx, hp);
            const auto b = hahn::solve_oracle_type2(idx, hp);
            return poly_case(poly_sub(a, b));
        });
        if (std::min(idx.n1, idx.n2) >= 1) {
            rec.run("oracle/hahn/type1/" + idx_str(idx), [&] {
                const auto a = hahn::type1_explicit(idx, hp);
                const auto b = hahn::solve_oracle_type1(idx, hp);
                return poly_pair_case(poly_sub(a.q1, b.q1), poly_sub(a.q2, b.q2));
            });
        }
    }
}

inline void run_family_oracle(CaseRecorder& rec, const families::FamilyParams& fp, long max_order) {
    const std::string fam = families::family_name(families::id_of(fp));
    for (const auto& idx : indexes_up_to(2, max_order)) {
        if (std::min(idx.n1, idx.n2) < 1) continue;
        if (families::id_of(fp) == families::FamilyId::Kravchuk &&
            idx.order() > std::get<families::krav::Params>(fp).big_n)
            continue;
        rec.run("oracle/" + fam + "/type1/" + idx_str(idx), [&] {
            families::Type1Info info;
            const auto expl = families::type1_core(idx, fp, &info);
            if (info.used_oracle) throw pole_error("explicit formula fell back: " + info.diagnostic);
            const auto orc = families::solve_oracle_type1(idx, fp);
            return std::visit(
                [&](const auto& e) {
                    using T = std::decay_t<decltype(e)>;
                    const auto& o = std::get<T>(orc);
                    return poly_pair_case(poly_sub(e.q1, o.q1), poly_sub(e.q2, o.q2));
                },
                expl);
        });
    }
}

inline void run_hahn_biorthogonality(CaseRecorder& rec, const hahn::Params& hp, long max_order) {
    rec.run("biorthogonality/hahn/matrix-order-" + std::to_string(max_order), [&] {
        const auto m = biorth_matrix(hp, max_order);
        std::string msg = m.verdict ? "0" : m.violations.front();
        if (!m.skipped.empty()) msg += " (" + std::to_string(m.skipped.size()) + " entries skipped at poles)";
        return std::pair<bool, std::string>{m.verdict, msg};
    });
}

// The eight near-neighbor relations, exact. For Hahn the full linear forms
// are used; for the limit families the relations act on the cores with the
// rational prefactor ratios folded in. Relations 1-2 need n1 >= 1 and 3-4
// need n2 >= 1 for type I (the b shift leaves the lattice otherwise); type II
// relations additionally hold at (0,0).
inline void run_hahn_recurrence(CaseRecorder& rec, const hahn::Params& hp, long grid) {
    auto B = [&](long n1, long n2) -> PochPoly<Rat> {
        if (n1 < 0 || n2 < 0) return {};
        return hahn::type2({n1, n2}, hp);
    };
    auto Q = [&](long n1, long n2) -> PochPair<Rat> {
        if (n1 < 0 || n2 < 0 || (n1 == 0 && n2 == 0)) return {};
        return hahn::type1({n1, n2}, hp);
    };
    auto rc = [&](long n1, long n2) { return hahn::recursion_coeffs({n1, n2}, hp); };

    for (long n1 = 0; n1 <= grid; ++n1) {
        for (long n2 = 0; n2 <= grid; ++n2) {
            const MultiIndex idx{n1, n2};
            const auto base = poly_mul_x(B(n1, n2));
            const auto co = rc(n1, n2);
            auto check2 = [&](int rel, const PochPoly<Rat>& lead, const Rat& b, const PochPoly<Rat>& cpoly,
                             const Rat& d) {
                rec.run("recurrence/hahn/typeII-rel" + std::to_string(rel) + "/" + idx_str(idx), [&] {
                    auto rhs = poly_add(poly_add(lead, poly_scale(B(n1, n2), b)),
                                        poly_add(poly_scale(cpoly, co.c), poly_scale(B(n1 - 1, n2 - 1), d)));
                    return poly_case(poly_sub(base, rhs));
                });
            };
            const bool origin = (n1 == 0 && n2 == 0);
            if (n1 >= 1 || origin) {
                check2(1, B(n1 + 1, n2), co.b1, B(n1 - 1, n2), co.d1);
                check2(2, B(n1, n2 + 1), co.b2, B(n1 - 1, n2), co.d1);
            }
            if (n2 >= 1 || origin) {
                check2(3, B(n1 + 1, n2), co.b1, B(n1, n2 - 1), co.d2);
                check2(4, B(n1, n2 + 1), co.b2, B(n1, n2 - 1), co.d2);
            }

            if (idx.order() >= 1 && idx.order() + 2 <= hp.big_n + 1) {
                auto checkI = [&](int rel, const PochPair<Rat>& qm, const Rat& b, const PochPair<Rat>& qc,
                                  const PochPair<Rat>& qd, const Rat& d) {
                    rec.run("recurrence/hahn/typeI-rel" + std::to_string(rel) + "/" + idx_str(idx), [&] {
                        const auto q = Q(n1, n2);
                        auto part = [&](const PochPoly<Rat>& qq, const PochPoly<Rat>& qqm, const PochPoly<Rat>& qqc,
                                        const PochPoly<Rat>& qqd) {
                            auto rhs = poly_add(poly_add(qqm, poly_scale(qq, b)),
                                                poly_add(poly_scale(qqc, co.c), poly_scale(qqd, d)));
                            return poly_sub(poly_mul_x(qq), rhs);
                        };
                        return poly_pair_case(part(q.q1, qm.q1, qc.q1, qd.q1), part(q.q2, qm.q2, qc.q2, qd.q2));
                    });
                };
                if (n1 >= 1) {
                    checkI(1, Q(n1 - 1, n2), rc(n1 - 1, n2).b1, Q(n1 + 1, n2), Q(n1 + 1, n2 + 1), rc(n1 + 1, n2).d1);
                    checkI(3, Q(n1 - 1, n2), rc(n1 - 1, n2).b1, Q(n1, n2 + 1), Q(n1 + 1, n2 + 1), rc(n1, n2 + 1).d2);
                }
                if (n2 >= 1) {
                    checkI(2, Q(n1, n2 - 1), rc(n1, n2 - 1).b2, Q(n1 + 1, n2), Q(n1 + 1, n2 + 1), rc(n1 + 1, n2).d1);
                    checkI(4, Q(n1, n2 - 1), rc(n1, n2 - 1).b2, Q(n1, n2 + 1), Q(n1 + 1, n2 + 1), rc(n1, n2 + 1).d2);
                }
            }

            // connection relation B_(n1+1,n2) - B_(n1,n2+1) = (b2 - b1) B_(n1,n2)
            rec.run("recurrence/hahn/connection/" + idx_str(idx), [&] {
                auto lhs = poly_sub(B(n1 + 1, n2), B(n1, n2 + 1));
                auto rhs = poly_scale(B(n1, n2), Rat(co.b2 - co.b1));
                return poly_case(poly_sub(lhs, rhs));
            });
        }
    }

    // reconstruction from the two seeds
    for (long n1 = 0; n1 <= grid; ++n1) {
        for (long n2 = 0; n2 <= grid; ++n2) {
            if (n1 + n2 == 0) continue;
            rec.run("recurrence/hahn/reconstruction/" + detail::idx_str({n1, n2}), [&] {
                const auto a = hahn::type1_via_recursion({n1, n2}, hp);
                const auto b = hahn::solve_oracle_type1({n1, n2}, hp);
                return poly_pair_case(poly_sub(a.q1, b.q1), poly_sub(a.q2, b.q2));
            });
        }
    }
}

template <class P>
void run_family_recurrence_basis(CaseRecorder& rec, const families::FamilyParams& fp, long grid) {
    using families::FamilyId;
    const FamilyId id = families::id_of(fp);
    const std::string fam = families::family_name(id);
    long cap = 1000;
    if (const auto* kp = std::get_if<families::krav::Params>(&fp)) cap = kp->big_n;

    auto B = [&](long n1, long n2) -> P {
        if (n1 < 0 || n2 < 0) return {};
        return std::get<P>(families::type2({n1, n2}, fp));
    };
    auto C = [&](long n1, long n2, int a) -> P {
        if (n1 < 0 || n2 < 0 || (n1 == 0 && n2 == 0)) return {};
        const auto pr = families::type1_core({n1, n2}, fp);
        return std::visit(
            [&](const auto& v) -> P {
                if constexpr (std::is_same_v<std::decay_t<decltype(v)>, TypeIPairT<P>>)
                    return (a == 1) ? v.q1 : v.q2;
                else
                    throw usage_error("basis mismatch");
            },
            pr);
    };
    auto rc = [&](long n1, long n2) { return families::recursion({n1, n2}, fp); };

    for (long n1 = 0; n1 <= grid; ++n1) {
        for (long n2 = 0; n2 <= grid; ++n2) {
            const MultiIndex idx{n1, n2};
            const long s = n1 + n2;
            if (s + 1 > cap) continue;
            const auto co = rc(n1, n2);
            const auto base = poly_mul_x(B(n1, n2));
            auto check2 = [&](int rel, const P& lead, const Rat& b, const P& cpoly, const Rat& d) {
                rec.run("recurrence/" + fam + "/typeII-rel" + std::to_string(rel) + "/" + idx_str(idx), [&] {
                    auto rhs = poly_add(poly_add(lead, poly_scale(B(n1, n2), b)),
                                        poly_add(poly_scale(cpoly, co.c), poly_scale(B(n1 - 1, n2 - 1), d)));
                    return poly_case(poly_sub(base, rhs));
                });
            };
            const bool origin = (n1 == 0 && n2 == 0);
            if (n1 >= 1 || origin) {
                check2(1, B(n1 + 1, n2), co.b1, B(n1 - 1, n2), co.d1);
                check2(2, B(n1, n2 + 1), co.b2, B(n1 - 1, n2), co.d1);
            }
            if (n2 >= 1 || origin) {
                check2(3, B(n1 + 1, n2), co.b1, B(n1, n2 - 1), co.d2);
                check2(4, B(n1, n2 + 1), co.b2, B(n1, n2 - 1), co.d2);
            }

            if (s >= 1 && s + 2 <= cap) {
                for (int a = 1; a <= 2; ++a) {
                    const Rat rat_s = families::pref_ratio(id, fp, s, a);
                    const Rat rat_sm1 = families::pref_ratio(id, fp, s - 1, a);
                    const Rat rat_sp1 = families::pref_ratio(id, fp, s + 1, a);
                    const auto q = C(n1, n2, a);
                    const auto qbase = poly_mul_x(q);
                    auto checkI = [&](int rel, const P& qm, const Rat& b, const P& qc, const P& qd, const Rat& d) {
                        rec.run("recurrence/" + fam + "/typeI-rel" + std::to_string(rel) + "-a" + std::to_string(a) +
                                    "/" + idx_str(idx),
                                [&] {
                                    auto rhs = poly_add(
                                        poly_add(poly_scale(qm, Rat(1) / rat_sm1), poly_scale(q, b)),
                                        poly_add(poly_scale(qc, Rat(co.c * rat_s)),
                                                 poly_scale(qd, Rat(d * rat_s * rat_sp1))));
                                    return poly_case(poly_sub(qbase, rhs));
                                });
                    };
                    if (n1 >= 1) {
                        checkI(1, C(n1 - 1, n2, a), rc(n1 - 1, n2).b1, C(n1 + 1, n2, a), C(n1 + 1, n2 + 1, a),
                               rc(n1 + 1, n2).d1);
                        checkI(3, C(n1 - 1, n2, a), rc(n1 - 1, n2).b1, C(n1, n2 + 1, a), C(n1 + 1, n2 + 1, a),
                               rc(n1, n2 + 1).d2);
                    }
                    if (n2 >= 1) {
                        checkI(2, C(n1, n2 - 1, a), rc(n1, n2 - 1).b2, C(n1 + 1, n2, a), C(n1 + 1, n2 + 1, a),
                               rc(n1 + 1, n2).d1);
                        checkI(4, C(n1, n2 - 1, a), rc(n1, n2 - 1).b2, C(n1, n2 + 1, a), C(n1 + 1, n2 + 1, a),
                               rc(n1, n2 + 1).d2);
                    }
                }
            }
        }
    }
}

inline void run_family_recurrence(CaseRecorder& rec, const families::FamilyParams& fp, long grid) {
    if (families::is_discrete(families::id_of(fp)))
        run_family_recurrence_basis<PochPoly<Rat>>(rec, fp, grid);
    else
        run_family_recurrence_basis<MonoPoly<Rat>>(rec, fp, grid);
}

inline void run_identities(CaseRecorder& rec, std::uint64_t seed, long draws) {
    using hypergeo::IdentityId;
    for (const auto& [name, id] : hypergeo::identity_names()) {
        Rng rng(seed ^ std::hash<std::string>{}(name));
        for (long i = 0; i < draws; ++i) {
            // rejection on exact poles: a draw that hits one is re-rolled
            hypergeo::ParamMap params;
            Rat residual(1);
            bool found = false;
            for (int attempt = 0; attempt < 200 && !found; ++attempt) {
                params = sample_identity(id, rng);
                try {
                    residual = hypergeo::identity_residual(id, params);
                    found = true;
                } catch (const pole_error&) {
                } catch (const hypothesis_error&) {
                }
            }
            rec.run("identities/" + name + "/draw-" + std::to_string(i), [&]() -> std::pair<bool, std::string> {
                if (!found) throw pole_error("no pole-free draw found");
                return exact_case(residual);
            });
        }
    }
}

inline void run_limits(CaseRecorder& rec, const std::vector<long>& seq_in) {
    using families::FamilyId;
    using limits::Route;
    std::vector<long> seq = seq_in.empty() ? std::vector<long>{100, 1000, 10000} : seq_in;
    std::vector<Real> t_seq;
    for (long t : seq) t_seq.push_back(Real(t));
    const MultiIndex idx{2, 1};
    for (const auto& [name, route] : limits::route_names()) {
        const auto target = default_family_params(limits::route_target(route));
        for (Kind kind : {Kind::type2, Kind::type1}) {
            rec.run("limits/" + name + "/" + (kind == Kind::type2 ? "type2" : "type1") + "/order", [&] {
                const auto res =
                    limits::convergence_study(route, idx, kind, t_seq, target, limits::default_eval_points(route));
                const bool ok = res.order_defined && std::abs(res.fitted_order - 1.0) <= 0.2;
                std::ostringstream os;
                os << "fitted order " << res.fitted_order;
                return std::pair<bool, std::string>{ok, os.str()};
            });
        }
        rec.run("limits/" + name + "/coefficients", [&] {
            const Real t(seq.back());
            const Real r1 = limits::recursion_limit_residual(route, idx, Real(seq[seq.size() - 2]), target);
            const Real r2 = limits::recursion_limit_residual(route, idx, t, target);
            // one decade should shrink the coefficient residual by ~10x
            const bool ok = r2 < r1;
            return std::pair<bool, std::string>{ok, r2.str(6)};
        });
    }
    // the two Laguerre I routes agree at matched (huge) limit parameters
    rec.run("limits/laguerre1-two-routes/agreement", [&] {
        const auto target = default_family_params(FamilyId::LaguerreI);
        const Real t = pow(Real(10), 30);
        Real worst(0);
        for (const auto& xq : limits::default_eval_points(Route::JacobiPineiroToLaguerreI)) {
            const Real x = to_real(xq);
            const auto s1 = limits::scaled_source(Route::JacobiPineiroToLaguerreI, idx, t, target, x);
            const auto s2 = limits::scaled_source(Route::MeixnerIIToLaguerreI, idx, t, target, x);
            worst = std::max({worst, Real(abs(s1.type2 - s2.type2)), Real(abs(s1.type1_1 - s2.type1_1)),
                              Real(abs(s1.type1_2 - s2.type1_2))});
        }
        return float_case(worst, Real(pow(Real(10), -25)));
    });
}

}  // namespace detail

inline Report run_suite(const SuiteConfig& cfg) {
    static const std::vector<std::string> known{"orthogonality", "biorthogonality", "recurrence",
                                                "identities",    "limits",          "oracle",
                                                "all"};
    if (std::find(known.begin(), known.end(), cfg.suite) == known.end())
        throw usage_error("unknown suite '" + cfg.suite + "'");
    if (cfg.max_order < 0) throw usage_error("max_order must be nonnegative");

    precision_guard guard(cfg.precision_bits);
    Report report;
    report.suite = cfg.suite;
    report.precision_bits = cfg.precision_bits;
    report.seed = cfg.seed;
    detail::CaseRecorder rec{report};

    const bool is_hahn = (cfg.family == "hahn");
    hahn::Params hp = cfg.hahn_params.value_or(default_hahn_params());
    std::optional<families::FamilyParams> fp = cfg.family_params;
    if (!is_hahn && !fp) {
        const auto it = families::family_names().find(cfg.family);
        if (it == families::family_names().end()) throw usage_error("unknown family '" + cfg.family + "'");
        fp = default_family_params(it->second);
    }

    const bool all = (cfg.suite == "all");
    if (all || cfg.suite == "orthogonality") {
        if (is_hahn)
            detail::run_hahn_orthogonality(rec, hp, cfg.max_order);
        else
            detail::run_family_orthogonality(rec, *fp, cfg.max_order);
    }
    if (all || cfg.suite == "biorthogonality") {
        if (is_hahn) detail::run_hahn_biorthogonality(rec, hp, cfg.max_order);
    }
    if (all || cfg.suite == "oracle") {
        if (is_hahn)
            detail::run_hahn_oracle(rec, hp, cfg.max_order);
        else
            detail::run_family_oracle(rec, *fp, cfg.max_order);
    }
    if (all || cfg.suite == "recurrence") {
        if (is_hahn)
            detail::run_hahn_recurrence(rec, hp, cfg.max_order);
        else
            detail::run_family_recurrence(rec, *fp, cfg.max_order);
    }
    if (all || cfg.suite == "identities") {
        detail::run_identities(rec, cfg.seed, cfg.draws);
    }
    if (all || cfg.suite == "limits") {
        detail::run_limits(rec, cfg.sequence);
    }

    std::sort(report.cases.begin(), report.cases.end(),
              [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
    return report;
}

}  // namespace mop::verify
