// Acceptance suite: one line per criterion, exact arithmetic wherever the
// quantity is rational, 256-bit floats elsewhere. Exits nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "mop/verify.hpp"

using namespace mop;

namespace {

int g_failed = 0;

void criterion(int number, const std::string& label, const std::function<std::pair<bool, std::string>()>& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        std::tie(ok, detail) = body();
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s (%.1f s)%s%s\n", ok ? "PASS" : "FAIL", number, label.c_str(), secs,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failed;
}

const hahn::Params kHahn{parse_rat("1/2"), parse_rat("1/3"), parse_rat("1/4"), 12};

std::vector<MultiIndex> indexes_between(long smin, long smax) {
    std::vector<MultiIndex> out;
    for (long s = smin; s <= smax; ++s)
        for (long n1 = 0; n1 <= s; ++n1) out.push_back({n1, s - n1});
    return out;
}

std::pair<bool, std::string> from_report(const verify::Report& r) {
    std::ostringstream os;
    os << r.n_pass << " pass, " << r.n_fail << " fail, " << r.n_skipped << " skipped";
    if (!r.ok())
        for (const auto& c : r.cases)
            if (c.status == "fail") {
                os << "; first failure " << c.id;
                break;
            }
    return {r.ok() && r.n_skipped == 0, os.str()};
}

}  // namespace

int main() {
    set_precision_bits(256);

    criterion(1, "Hahn type I orthogonality, exact, 1 <= n1+n2 <= 6", [] {
        long cases = 0;
        for (const auto& idx : indexes_between(1, 6))
            for (long j = 0; j <= idx.order() - 1; ++j) {
                const Rat want = (j == idx.order() - 1) ? Rat(1) : Rat(0);
                if (hahn::moment_sum(idx, Kind::type1, std::nullopt, j, kHahn) != want)
                    return std::pair<bool, std::string>{false, "failed at (" + std::to_string(idx.n1) + "," +
                                                                   std::to_string(idx.n2) + ") j=" + std::to_string(j)};
                ++cases;
            }
        return std::pair<bool, std::string>{true, std::to_string(cases) + " exact moment sums"};
    });

    criterion(2, "biorthogonality matrix pattern at max order 5, exact", [] {
        const auto m = verify::biorth_matrix(kHahn, 5);
        std::ostringstream os;
        os << m.constrained << " constrained entries, " << m.unconstrained << " unconstrained";
        if (!m.verdict) os << "; " << m.violations.front();
        return std::pair<bool, std::string>{m.verdict, os.str()};
    });

    criterion(3, "explicit formulas equal the moment-system oracle, n1+n2 <= 6, exact", [] {
        long cases = 0;
        for (const auto& idx : indexes_between(0, 6)) {
            if (!poly_equal(hahn::type2(idx, kHahn), hahn::solve_oracle_type2(idx, kHahn)))
                return std::pair<bool, std::string>{false, "type II mismatch"};
            ++cases;
            if (std::min(idx.n1, idx.n2) >= 1) {
                const auto a = hahn::type1_explicit(idx, kHahn);
                const auto b = hahn::solve_oracle_type1(idx, kHahn);
                if (!poly_equal(a.q1, b.q1) || !poly_equal(a.q2, b.q2))
                    return std::pair<bool, std::string>{false, "type I mismatch"};
                ++cases;
            }
        }
        return std::pair<bool, std::string>{true, std::to_string(cases) + " coefficient-exact comparisons"};
    });

    criterion(4, "recursion reconstruction from the (1,0), (1,1) seeds, n1,n2 <= 4, exact", [] {
        long cases = 0;
        for (long n1 = 0; n1 <= 4; ++n1)
            for (long n2 = 0; n2 <= 4; ++n2) {
                if (n1 + n2 == 0) continue;
                const auto rec = hahn::type1_via_recursion({n1, n2}, kHahn);
                const auto orc = hahn::solve_oracle_type1({n1, n2}, kHahn);
                if (!poly_equal(rec.q1, orc.q1) || !poly_equal(rec.q2, orc.q2))
                    return std::pair<bool, std::string>{
                        false, "mismatch at (" + std::to_string(n1) + "," + std::to_string(n2) + ")"};
                ++cases;
            }
        return std::pair<bool, std::string>{true, std::to_string(cases) + " indexes, off-step-line included"};
    });

    criterion(5, "all eight near-neighbor relations, n1,n2 <= 4, exact polynomial identities", [] {
        verify::SuiteConfig cfg;
        cfg.suite = "recurrence";
        cfg.family = "hahn";
        cfg.hahn_params = kHahn;
        cfg.max_order = 4;
        return from_report(verify::run_suite(cfg));
    });

    criterion(6, "identity suites: 200 seeded draws per identity, exact zeros", [] {
        verify::SuiteConfig cfg;
        cfg.suite = "identities";
        cfg.seed = 1;
        cfg.draws = 200;
        return from_report(verify::run_suite(cfg));
    });

    criterion(7, "family orthogonality, n1+n2 <= 5 (exact cores; 256-bit tails < 1e-30)", [] {
        const Real float_cap = pow(Real(10), -30);
        std::ostringstream os;
        for (const auto& [name, id] : families::family_names()) {
            if (name == "jp") continue;  // alias
            const auto fp = verify::default_family_params(id);
            Real worst(0);
            for (const auto& idx : indexes_between(1, 5)) {
                if (id == families::FamilyId::Kravchuk &&
                    idx.order() > std::get<families::krav::Params>(fp).big_n)
                    continue;
                for (long j = 0; j <= idx.order() - 1; ++j) {
                    if (families::orth_exact(id)) {
                        if (families::orth_residual_exact(idx, j, fp) != 0)
                            return std::pair<bool, std::string>{false, name + " exact residual nonzero"};
                    } else {
                        const auto r = families::orth_residual_float(idx, j, fp);
                        if (!(abs(r.residual) < float_cap))
                            return std::pair<bool, std::string>{false, name + " float residual above 1e-30"};
                        worst = std::max(worst, Real(abs(r.residual)));
                    }
                }
            }
            if (!families::orth_exact(id)) os << name << " worst " << worst.str(3) << "; ";
        }
        return std::pair<bool, std::string>{true, os.str()};
    });

    criterion(8, "limit convergence: every route fits order 1 +- 0.2; Laguerre I routes agree", [] {
        verify::SuiteConfig cfg;
        cfg.suite = "limits";
        cfg.sequence = {100, 1000, 10000};
        return from_report(verify::run_suite(cfg));
    });

    criterion(9, "structural contracts: monic tops, degree bounds, weight-swap covariance, n1,n2 <= 4", [] {
        // Hahn
        hahn::Params swapped{kHahn.alpha2, kHahn.alpha1, kHahn.beta, kHahn.big_n};
        for (long n1 = 0; n1 <= 4; ++n1)
            for (long n2 = 0; n2 <= 4; ++n2) {
                const auto q = hahn::type2({n1, n2}, kHahn);
                if (poly_degree(q) != n1 + n2 || q.coeffs.back() != Rat(parity_sign(n1 + n2)))
                    return std::pair<bool, std::string>{false, "hahn type II top coefficient"};
                if (poch_to_mono(q).coeffs.back() != 1)
                    return std::pair<bool, std::string>{false, "hahn type II not monic"};
                const auto t = hahn::type1({n1, n2}, kHahn);
                if (poly_degree(t.q1) > n1 - 1 || poly_degree(t.q2) > n2 - 1)
                    return std::pair<bool, std::string>{false, "hahn type I degree bound"};
                const auto ts = hahn::type1({n2, n1}, swapped);
                if (!poly_equal(t.q1, ts.q2) || !poly_equal(t.q2, ts.q1))
                    return std::pair<bool, std::string>{false, "hahn weight-swap covariance"};
            }
        // limit families
        for (const auto& [name, id] : families::family_names()) {
            if (name == "jp") continue;
            const auto fp = verify::default_family_params(id);
            long cap = 1000;
            if (const auto* kp = std::get_if<families::krav::Params>(&fp)) cap = kp->big_n;
            for (long n1 = 0; n1 <= 4; ++n1)
                for (long n2 = 0; n2 <= 4 && n1 + n2 <= cap; ++n2) {
                    const auto q = families::type2({n1, n2}, fp);
                    const bool monic = std::visit(
                        [&](const auto& poly) {
                            using P = std::decay_t<decltype(poly)>;
                            if (poly_degree(poly) != n1 + n2) return false;
                            if constexpr (std::is_same_v<P, PochPoly<Rat>>)
                                return poly.coeffs.back() == Rat(parity_sign(n1 + n2)) &&
                                       poch_to_mono(poly).coeffs.back() == 1;
                            else
                                return poly.coeffs.back() == 1;
                        },
                        q);
                    if (!monic) return std::pair<bool, std::string>{false, name + " type II monicity"};
                    const auto pair = families::type1_core({n1, n2}, fp);
                    const bool degs = std::visit(
                        [&](const auto& pr) {
                            return poly_degree(pr.q1) <= n1 - 1 && poly_degree(pr.q2) <= n2 - 1;
                        },
                        pair);
                    if (!degs) return std::pair<bool, std::string>{false, name + " type I degree bound"};
                }
        }
        return std::pair<bool, std::string>{true, "hahn and all seven families"};
    });

    if (g_failed != 0) {
        std::printf("%d criterion(s) failed\n", g_failed);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
