#pragma once

// Command-line front end. run() is the whole program minus process plumbing
// so tests can drive it with in-memory streams.
//
// Exit codes: 0 success / verified, 1 failed verification, counterexample or
// exhausted budget, 2 malformed input.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "eisen/eisen.hpp"

namespace eisen::cli {

using nlohmann::json;

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kInputError = 2;

struct RunConfig {
    bool json = false;
    unsigned confidence_bits = 128;
    std::uint64_t rho_iterations = std::uint64_t{1} << 24;
    std::uint64_t max_norm_bound = 10'000'000;
    unsigned threads = 1;

    Effort effort() const {
        Effort e;
        e.confidence_bits = confidence_bits;
        e.rho_iterations = rho_iterations;
        return e;
    }
};

inline json to_json(const EInt& x) { return {{"a", x.a().get_str()}, {"b", x.b().get_str()}}; }

inline json to_json(const Factorization& f) {
    json factors = json::array();
    for (const auto& pp : f.factors)
        factors.push_back({{"prime", to_json(pp.prime)}, {"exponent", pp.exponent}});
    return {{"unit", to_json(f.unit.value())},
            {"factors", factors},
            {"confidence", to_string(f.confidence)}};
}

inline json to_json(const PerfectVerdict& v) {
    return {{"eta", to_json(v.eta)},
            {"tau", to_json(v.tau)},
            {"sigma", to_json(v.sigma_eta)},
            {"norm_sigma", v.n_sigma.get_str()},
            {"norm_tau_eta", v.n_tau_eta.get_str()},
            {"perfect", v.is_perfect},
            {"norm_perfect", v.is_norm_perfect},
            {"confidence", to_string(v.confidence)}};
}

// Text-mode marker for results resting on a probabilistic primality test.
inline std::string marker(Confidence c) {
    return c == Confidence::probabilistic ? " [probabilistic]" : "";
}

inline std::string format_factorization(const Factorization& f) {
    std::string s = to_string(f.unit.value());
    for (const auto& pp : f.factors) {
        s += " * (" + to_string(pp.prime) + ")";
        if (pp.exponent != 1) s += "^" + std::to_string(pp.exponent);
    }
    return s;
}

inline std::string format_verdict(const PerfectVerdict& v) {
    return "eta = " + to_string(v.eta) + "\ntau = " + to_string(v.tau) +
           "\nsigma(eta) = " + to_string(v.sigma_eta) + "\nN(sigma(eta)) = " + v.n_sigma.get_str() +
           "\nN(tau*eta) = " + v.n_tau_eta.get_str() +
           "\nnorm-perfect: " + (v.is_norm_perfect ? "yes" : "no") +
           "\nperfect: " + (v.is_perfect ? "yes" : "no") + marker(v.confidence);
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic and perfect-number machinery over the Eisenstein integers"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_flag("--json", cfg.json, "Emit JSON objects instead of text");
    app.add_option("--confidence-bits", cfg.confidence_bits,
                   "Miller-Rabin error bound exponent above 2^64 (>= 64)")
        ->check(CLI::Range(64U, 4096U));
    app.add_option("--rho-budget", cfg.rho_iterations, "Pollard-Brent iterations per cofactor")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-bound", cfg.max_norm_bound, "Largest norm bound the search accepts")
        ->check(CLI::PositiveNumber);

    std::string eta_text, tau_text;
    unsigned long k = 0, kmax = 0, p = 0, pmax = 0;
    std::uint64_t samples = 0, seed = 1;
    std::string bound_text;
    bool conj = false;

    std::function<int()> action;

    auto unary = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("eta", eta_text, "Eisenstein integer, e.g. 2+w (use -- before negatives)")
            ->required();
        return sub;
    };

    unary("norm", "Norm a^2 - ab + b^2")->callback([&] {
        action = [&] {
            const EInt x = parse_eint(eta_text);
            if (cfg.json)
                out << json{{"command", "norm"}, {"eta", to_json(x)}, {"norm", x.norm().get_str()}}.dump()
                    << "\n";
            else
                out << x.norm().get_str() << "\n";
            return kOk;
        };
    });

    unary("canon", "First-sextant associate and the unit reaching it")->callback([&] {
        action = [&] {
            const EInt x = parse_eint(eta_text);
            auto [u, c] = canonicalize(x);
            if (cfg.json)
                out << json{{"command", "canon"}, {"eta", to_json(x)}, {"unit", to_json(u.value())},
                            {"canonical", to_json(c)}}.dump()
                    << "\n";
            else
                out << to_string(c) << " = (" << to_string(u.value()) << ") * (" << to_string(x) << ")\n";
            return kOk;
        };
    });

    unary("sextant", "Sextant index 1..6")->callback([&] {
        action = [&] {
            const EInt x = parse_eint(eta_text);
            const int s = sextant(x).index;
            if (cfg.json)
                out << json{{"command", "sextant"}, {"eta", to_json(x)}, {"sextant", s}}.dump() << "\n";
            else
                out << s << "\n";
            return kOk;
        };
    });

    unary("factor", "Factor into first-sextant primes")->callback([&] {
        action = [&] {
            const EInt x = parse_eint(eta_text);
            const Factorization f = factor(x, cfg.effort());
            if (cfg.json) {
                json j = to_json(f);
                j["command"] = "factor";
                j["eta"] = to_json(x);
                out << j.dump() << "\n";
            } else {
                out << format_factorization(f) << marker(f.confidence) << "\n";
            }
            return kOk;
        };
    });

    unary("sigma", "Complex sum of divisors")->callback([&] {
        action = [&] {
            const EInt x = parse_eint(eta_text);
            const Factorization f = factor(x, cfg.effort());
            const EInt s = sigma(f);
            if (cfg.json)
                out << json{{"command", "sigma"}, {"eta", to_json(x)}, {"sigma", to_json(s)},
                            {"confidence", to_string(f.confidence)}}.dump()
                    << "\n";
            else
                out << to_string(s) << marker(f.confidence) << "\n";
            return kOk;
        };
    });

    CLI::App* mers = app.add_subcommand("mersenne", "tau-Mersenne number M_k and its norm A_k");
    mers->add_option("--tau", tau_text, "Prime tau")->required();
    mers->add_option("--k", k, "Index k >= 1")->required()->check(CLI::PositiveNumber);
    mers->callback([&] {
        action = [&] {
            const MersenneRecord r = mersenne(parse_eint(tau_text), k, cfg.effort());
            if (cfg.json) {
                out << json{{"command", "mersenne"}, {"tau", to_json(r.tau)}, {"k", r.k},
                            {"m", to_json(r.m)}, {"a_k", r.a_k.get_str()},
                            {"prime", r.prime_status.prime},
                            {"confidence", to_string(r.prime_status.confidence)}}.dump()
                    << "\n";
            } else {
                out << to_string(r.m) << "\n"
                    << "norm " << r.a_k.get_str() << "\n"
                    << "prime: " << (r.prime_status.prime ? "yes" : "no")
                    << marker(r.prime_status.confidence) << "\n";
            }
            return kOk;
        };
    });

    CLI::App* table = app.add_subcommand("table1", "Closed-form M_k, A_k for tau = 2+w against direct computation");
    table->add_option("--kmax", kmax, "Largest k")->required()->check(CLI::PositiveNumber);
    table->callback([&] {
        action = [&] {
            const EInt tau = omega_plus_two();
            int rc = kOk;
            for (unsigned long i = 1; i <= kmax; ++i) {
                const EInt direct = mersenne_number(tau, i);
                const EInt closed = closed_form_mersenne(i);
                const Integer a = closed_form_norm(i);
                const bool ok = direct == closed && direct.norm() == a;
                if (!ok) rc = kFailed;
                if (cfg.json)
                    out << json{{"command", "table1"}, {"k", i}, {"m", to_json(closed)},
                                {"a_k", a.get_str()}, {"matches", ok}}.dump()
                        << "\n";
                else
                    out << i << "\t" << to_string(closed) << "\t" << a.get_str()
                        << (ok ? "" : "\tMISMATCH") << "\n";
            }
            return rc;
        };
    });

    CLI::App* ver = app.add_subcommand("verify", "Check sigma(eta) = tau*eta and N(sigma(eta)) = N(tau*eta)");
    ver->add_option("--tau", tau_text, "Prime tau")->required();
    ver->add_option("--eta", eta_text, "Nonzero eta")->required();
    ver->callback([&] {
        action = [&] {
            const PerfectVerdict v = verify(parse_eint(tau_text), parse_eint(eta_text), cfg.effort());
            if (cfg.json) {
                json j = to_json(v);
                j["command"] = "verify";
                out << j.dump() << "\n";
            } else {
                out << format_verdict(v) << "\n";
            }
            return v.is_norm_perfect ? kOk : kFailed;
        };
    });

    CLI::App* cons = app.add_subcommand("construct", "tau^{p-1} M_p, or tau^{p-1} conj(M_p) with --conj");
    cons->add_option("--tau", tau_text, "Prime tau")->required();
    cons->add_option("--p", p, "Exponent p >= 2")->required()->check(CLI::Range(2UL, 1UL << 30));
    cons->add_flag("--conj", conj, "Use the conjugate of M_p");
    cons->callback([&] {
        action = [&] {
            const EInt eta = construct_candidate(parse_eint(tau_text), p, conj, cfg.effort());
            if (cfg.json)
                out << json{{"command", "construct"}, {"p", p}, {"conj", conj}, {"eta", to_json(eta)}}.dump()
                    << "\n";
            else
                out << to_string(eta) << "\n";
            return kOk;
        };
    });

    CLI::App* ee = app.add_subcommand("euclid-euler", "Verify the Euclid-form candidates for tau = 2+w up to pmax");
    ee->add_option("--pmax", pmax, "Largest p")->required()->check(CLI::Range(2UL, 1UL << 20));
    ee->callback([&] {
        action = [&] {
            const EuclidEulerReport r = verify_euclid_euler(pmax, cfg.effort());
            for (const auto& e : r.entries) {
                if (cfg.json) {
                    json j{{"command", "euclid-euler"}, {"p", e.p}, {"residue", e.residue},
                           {"status", to_string(e.status)}};
                    if (e.status != EuclidEulerEntry::Status::skipped_residue) {
                        j["mersenne_prime"] = e.mersenne_prime.prime;
                        j["confidence"] = to_string(e.mersenne_prime.confidence);
                    }
                    if (e.verdict) j["verdict"] = to_json(*e.verdict);
                    out << j.dump() << "\n";
                } else {
                    out << "p = " << e.p << " (mod 12 = " << e.residue << "): " << to_string(e.status);
                    if (e.verdict)
                        out << ", norm-perfect " << (e.verdict->is_norm_perfect ? "yes" : "no")
                            << ", perfect " << (e.verdict->is_perfect ? "yes" : "no")
                            << marker(e.verdict->confidence);
                    out << "\n";
                }
            }
            return r.all_verified() ? kOk : kFailed;
        };
    });

    CLI::App* srch = app.add_subcommand("search", "Exhaustive tau-norm-perfect search among multiples of tau");
    srch->add_option("--tau", tau_text, "Prime tau")->required();
    srch->add_option("--bound", bound_text, "Norm bound")->required();
    srch->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1U, 256U));
    srch->callback([&] {
        action = [&] {
            const EInt tau = parse_eint(tau_text);
            Integer bound;
            if (bound_text.empty() || bound.set_str(bound_text, 10) != 0 || bound < 1)
                throw parse_error("--bound must be a positive decimal integer");
            SearchOptions opts;
            opts.max_norm_bound = cfg.max_norm_bound;
            opts.threads = cfg.threads;
            const SearchReport r = search_norm_perfect(tau, bound, opts, cfg.effort());
            // A hit is a counterexample when tau is an associate of 2 (no
            // hits may exist) or of 2+w (hits must have the Euclid form).
            bool counterexample = false;
            for (const auto& h : r.hits) {
                if (are_associates(tau, EInt(2))) counterexample = true;
                if (are_associates(tau, omega_plus_two()) && !matches_euclid_euler_form(h.eta))
                    counterexample = true;
            }
            if (cfg.json) {
                json hits = json::array();
                for (const auto& h : r.hits) hits.push_back(to_json(h));
                out << json{{"command", "search"}, {"tau", to_json(r.tau)},
                            {"bound", r.norm_bound.get_str()},
                            {"candidates", r.candidates_checked}, {"hits", hits}}.dump()
                    << "\n";
            } else {
                out << "tau = " << to_string(r.tau) << ", bound = " << r.norm_bound.get_str()
                    << ", candidates = " << r.candidates_checked << "\n"
                    << r.hits.size() << " hits\n";
                for (const auto& h : r.hits) out << "  " << to_string(h.eta) << "\n";
            }
            return counterexample ? kFailed : kOk;
        };
    });

    CLI::App* l32 = app.add_subcommand("check-lemma32", "Random exact checks of the geometric-sum norm bounds");
    l32->add_option("--samples", samples, "Number of (z, k) samples")->required()->check(CLI::PositiveNumber);
    l32->add_option("--seed", seed, "Sampler seed");
    l32->callback([&] {
        action = [&] {
            const GeometricBoundSweep s = geometric_bound_sweep(samples, seed);
            if (cfg.json)
                out << json{{"command", "check-lemma32"}, {"samples", s.samples},
                            {"strict_violations", s.strict_violations},
                            {"weak_checked", s.weak_checked}, {"weak_violations", s.weak_violations},
                            {"weak_equalities", s.weak_equalities},
                            {"equality_off_k1", s.equality_off_k1},
                            {"missing_k1_equalities", s.missing_k1_equalities}, {"clean", s.clean()}}.dump()
                    << "\n";
            else
                out << "samples " << s.samples << ", strict violations " << s.strict_violations
                    << ", weak checked " << s.weak_checked << ", weak violations " << s.weak_violations
                    << ", equalities " << s.weak_equalities << " (off k=1: " << s.equality_off_k1
                    << ", missing at k=1: " << s.missing_k1_equalities << ")\n";
            return s.clean() ? kOk : kFailed;
        };
    });

    CLI::App* t42 = app.add_subcommand("check-thm42", "2^k - 1 is never an Eisenstein prime");
    t42->add_option("--kmax", kmax, "Largest k")->required()->check(CLI::Range(2UL, 1UL << 16));
    t42->callback([&] {
        action = [&] {
            const TwoMersenneReport r = check_two_mersenne_obstruction(kmax, cfg.effort());
            if (cfg.json) {
                out << json{{"command", "check-thm42"}, {"kmax", r.kmax},
                            {"checked", r.entries.size()}, {"counterexamples", r.counterexamples}}.dump()
                    << "\n";
            } else {
                out << "k = 2.." << r.kmax << ": " << r.counterexamples.size() << " counterexamples\n";
                for (unsigned long c : r.counterexamples) out << "  k = " << c << "\n";
            }
            return r.counterexamples.empty() ? kOk : kFailed;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kInputError;
    }

    try {
        return action();
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const budget_exceeded& e) {
        err << "error: " << e.what() << "\n";
        return kFailed;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

} // namespace eisen::cli
