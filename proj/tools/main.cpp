#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "wholo/congruence.hpp"
#include "wholo/expr.hpp"

using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitParseError = 2;
constexpr int kExitArithmeticError = 3;
constexpr int kExitInvalidParams = 4;

long default_precision() {
    const char* env = std::getenv("WHOLO_DEFAULT_PREC");
    if (!env || !*env) return 20;
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || value < 1) {
        throw wholo::InvalidParams(std::string("WHOLO_DEFAULT_PREC='") + env +
                                   "' is not a positive integer");
    }
    return value;
}

struct Options {
    std::string command;
    std::string expression;
    long prec = 0;
    bool prec_given = false;
    bool json_output = false;
    std::optional<long> modulus;

    long weight = 0;
    long max_pole = 0;

    std::vector<long> p_list;
    std::optional<long> t, r, m, s;
    long u = 1;
    bool jmo = false;
    bool sweep = false;
    long max_pt = 30;
    long max_r = 3;
    std::vector<long> m_list{4, 6, 8, 10};

    std::vector<long> k_list;
};

int run_expand(const Options& opt) {
    wholo::ModularExpansion result = wholo::evaluate(opt.expression, opt.prec);
    wholo::QExpansion series = result.series;
    if (opt.modulus) series = wholo::reduce_mod_p(series, wholo::Integer(*opt.modulus));
    if (opt.json_output) {
        std::cout << series.to_json().dump() << "\n";
    } else {
        std::cout << series.to_text() << "\n";
    }
    return kExitPass;
}

int run_basis(const Options& opt) {
    wholo::BasisFamily family = wholo::wh_basis(opt.weight, opt.max_pole, opt.prec);
    if (opt.json_output) {
        json members = json::array();
        for (const auto& f : family.members) members.push_back(f.series.to_json());
        json out{{"weight", family.weight},
                 {"max_pole", family.max_pole},
                 {"members", std::move(members)}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "weight " << family.weight << ", poles up to " << family.max_pole << ": "
                  << family.size() << " member" << (family.size() == 1 ? "" : "s") << "\n";
        for (const auto& f : family.members) {
            std::cout << "  ord=" << f.series.ord() << ": " << f.series.to_text() << "\n";
        }
    }
    return kExitPass;
}

int run_theta_decompose(const Options& opt) {
    wholo::ModularExpansion f = wholo::evaluate(opt.expression, opt.prec);
    if (!f.weight || *f.weight != 2) {
        std::string w = f.weight ? std::to_string(*f.weight) : "non-modular";
        throw wholo::InvalidParams("theta-decompose needs a weight-2 expression, got weight " + w);
    }
    wholo::Weight2Certificate cert = wholo::certify_constant_term(f);
    if (opt.json_output) {
        json out{{"Q", cert.antiderivative.to_json()},
                 {"constant_term", wholo::to_string(cert.constant_term)}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "Q = " << cert.antiderivative.to_text() << "\n";
        std::cout << "f = Theta(Q(j)), verified to O(q^" << f.series.prec() << ")\n";
        std::cout << "constant term a_f(0) = " << wholo::to_string(cert.constant_term)
                  << " (exact)\n";
    }
    return kExitPass;
}

void emit_report(const wholo::CongruenceReport& report, bool json_output) {
    if (json_output) {
        std::cout << report.to_json().dump() << "\n";
    } else {
        std::cout << report.to_text();
    }
}

int run_verify(const Options& opt) {
    std::optional<long> prec;
    if (opt.prec_given) prec = opt.prec;

    std::vector<wholo::CongruenceReport> reports;
    if (opt.jmo) {
        if (opt.p_list.size() != 1 || !opt.t || !opt.s) {
            throw wholo::InvalidParams("verify --jmo needs --p, --t and --s");
        }
        wholo::JmoParams params =
            wholo::JmoParams::make(opt.p_list[0], opt.r.value_or(0), *opt.s, *opt.t, opt.u);
        reports.push_back(wholo::verify_jmo(params, prec));
    } else if (opt.sweep) {
        std::vector<long> primes = opt.p_list.empty() ? std::vector<long>{2, 3, 5, 7, 11}
                                                      : opt.p_list;
        std::sort(primes.begin(), primes.end());
        primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
        for (long p : primes) {
            for (long pt = p, t = 1; pt <= opt.max_pt; pt *= p, ++t) {
                if (p >= 5) {
                    for (long r = 0; r <= opt.max_r; ++r) {
                        reports.push_back(
                            wholo::verify_main_theorem(wholo::TheoremParams::p5(p, t, r), prec));
                    }
                } else {
                    for (long m : opt.m_list) {
                        reports.push_back(
                            wholo::verify_main_theorem(wholo::TheoremParams::p23(p, t, m), prec));
                    }
                }
            }
        }
    } else {
        if (opt.p_list.size() != 1 || !opt.t) {
            throw wholo::InvalidParams("verify needs --p and --t (or --sweep / --jmo)");
        }
        long p = opt.p_list[0];
        wholo::TheoremParams params = [&] {
            if (p >= 5) {
                if (opt.m) {
                    throw wholo::InvalidParams("--m applies to p = 2,3 only; use --r for p >= 5");
                }
                return wholo::TheoremParams::p5(p, *opt.t, opt.r.value_or(0));
            }
            if (opt.r) {
                throw wholo::InvalidParams("--r applies to p >= 5 only; use --m for p = 2,3");
            }
            return wholo::TheoremParams::p23(p, *opt.t, opt.m.value_or(4));
        }();
        reports.push_back(wholo::verify_main_theorem(params, prec));
    }

    bool all_pass = true;
    for (const auto& report : reports) {
        emit_report(report, opt.json_output);
        all_pass = all_pass && report.pass;
    }
    return all_pass ? kExitPass : kExitVerifyFail;
}

int run_eisenstein_check(const Options& opt) {
    std::vector<long> primes = opt.p_list.empty() ? std::vector<long>{5, 7, 11, 13} : opt.p_list;
    std::vector<long> weights = opt.k_list;
    if (weights.empty()) {
        for (long k = 2; k <= 26; k += 2) weights.push_back(k);
    }

    bool all_ok = true;
    json results = json::array();
    for (long p : primes) {
        bool ok = wholo::check_eisenstein_mod_p(p, opt.prec);
        all_ok = all_ok && ok;
        if (opt.json_output) {
            results.push_back({{"check", "mod_p"}, {"p", p}, {"prec", opt.prec}, {"ok", ok}});
        } else {
            std::cout << "E_" << (p - 1) << " == 1 (mod " << p << ") to O(q^" << opt.prec
                      << "): " << (ok ? "pass" : "FAIL") << "\n";
        }
    }
    for (long k : weights) {
        bool ok = wholo::check_eisenstein_mod_24(k, opt.prec);
        all_ok = all_ok && ok;
        if (opt.json_output) {
            results.push_back({{"check", "mod_24"}, {"k", k}, {"prec", opt.prec}, {"ok", ok}});
        } else {
            std::cout << "E_" << k << " == 1 (mod 24) to O(q^" << opt.prec
                      << "): " << (ok ? "pass" : "FAIL") << "\n";
        }
    }
    if (opt.json_output) std::cout << results.dump() << "\n";
    return all_ok ? kExitPass : kExitVerifyFail;
}

int run_nonordinary(const Options& opt) {
    std::vector<long> primes = opt.p_list.empty() ? std::vector<long>{2, 3, 5, 7, 11} : opt.p_list;
    json results = json::array();
    for (long p : primes) {
        long prec = opt.prec_given ? opt.prec : p + 2;
        wholo::Residue residue = wholo::check_delta_nonordinary(p, prec);
        long value = residue.value().get_si();
        if (opt.json_output) {
            results.push_back({{"p", p}, {"residue", value}, {"non_ordinary", value == 0}});
        } else {
            std::cout << "p=" << p << ": tau(p) == " << value << " (mod " << p << ") -- "
                      << (value == 0 ? "non-ordinary" : "ordinary") << " for Delta\n";
        }
    }
    if (opt.json_output) std::cout << results.dump() << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;

    CLI::App app{"Exact q-expansion arithmetic for level-1 modular forms and "
                 "coefficient-congruence verification"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--prec", opt.prec, "Series precision (exclusive exponent bound)")
            ->check(CLI::Range(1L, 100000L))
            ->each([&](const std::string&) { opt.prec_given = true; });
        cmd->add_flag("--json", opt.json_output, "Emit machine-readable JSON");
    };

    CLI::App* expand = app.add_subcommand("expand", "Print the q-expansion of an expression");
    expand->add_option("expression", opt.expression, "Expression, e.g. \"E4^3/Delta - j\"")
        ->required();
    expand->add_option("--mod", opt.modulus, "Reduce coefficients modulo a prime");
    add_common(expand);

    CLI::App* basis = app.add_subcommand("basis", "List the canonical basis of a weight");
    basis->add_option("--weight", opt.weight, "Even weight k")->required();
    basis->add_option("--max-pole", opt.max_pole, "Largest allowed pole order");
    add_common(basis);

    CLI::App* verify = app.add_subcommand("verify", "Verify coefficient congruences");
    verify->add_option("--p", opt.p_list, "Prime (or comma-separated primes for --sweep)")
        ->delimiter(',');
    verify->add_option("--t", opt.t, "Exponent t of p^t");
    verify->add_option("--r", opt.r, "Eisenstein power r (p >= 5)");
    verify->add_option("--m", opt.m, "Even m >= 4 (p = 2,3)");
    verify->add_flag("--jmo", opt.jmo, "Check the s != 2 companion congruence");
    verify->add_option("--s", opt.s, "Multiplier s != 2 (jmo mode)");
    verify->add_option("--u", opt.u, "Pole-bound exponent u <= t (jmo mode)");
    verify->add_flag("--sweep", opt.sweep, "Sweep parameters instead of a single run");
    verify->add_option("--max-pt", opt.max_pt, "Sweep bound on p^t");
    verify->add_option("--max-r", opt.max_r, "Sweep bound on r");
    verify->add_option("--m-list", opt.m_list, "Sweep values of m")->delimiter(',');
    add_common(verify);

    CLI::App* decompose =
        app.add_subcommand("theta-decompose", "Write a weight-2 form as Theta(Q(j))");
    decompose->add_option("expression", opt.expression, "Weight-2 expression")->required();
    add_common(decompose);

    CLI::App* eisenstein =
        app.add_subcommand("eisenstein-check", "Check E_{p-1} mod p and E_k mod 24");
    eisenstein->add_option("--p", opt.p_list, "Primes >= 5")->delimiter(',');
    eisenstein->add_option("--k", opt.k_list, "Even weights >= 2")->delimiter(',');
    add_common(eisenstein);

    CLI::App* nonordinary =
        app.add_subcommand("nonordinary", "Residues tau(p) mod p for Delta");
    nonordinary->add_option("--p", opt.p_list, "Primes")->delimiter(',');
    add_common(nonordinary);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalidParams;
    }

    try {
        if (!opt.prec_given) opt.prec = default_precision();
        if (expand->parsed()) return run_expand(opt);
        if (basis->parsed()) return run_basis(opt);
        if (verify->parsed()) return run_verify(opt);
        if (decompose->parsed()) return run_theta_decompose(opt);
        if (eisenstein->parsed()) return run_eisenstein_check(opt);
        if (nonordinary->parsed()) return run_nonordinary(opt);
        return kExitInvalidParams;
    } catch (const wholo::SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const wholo::UnknownGenerator& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const wholo::DenominatorNotInvertible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArithmeticError;
    } catch (const wholo::ZeroLeadingCoefficient& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArithmeticError;
    } catch (const wholo::OutOfPrecision& e) {
        std::cerr << "error: " << e.what() << " (exponent " << e.exponent() << ")\n";
        return kExitArithmeticError;
    } catch (const wholo::NotInSpan& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArithmeticError;
    } catch (const wholo::InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidParams;
    } catch (const wholo::WeightMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidParams;
    } catch (const wholo::PoleTooDeep& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidParams;
    } catch (const wholo::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitArithmeticError;
    }
}
