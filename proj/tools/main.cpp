// Command-line front end: parse curves, compute local invariants at the
// origin, run the named bound/structure checks, emit the two example
// families, and drive the seeded fuzz campaign.
//
// Exit codes: 0 = property holds / report produced; 1 = a checked
// mathematical property was violated (reproducible bug evidence); 2 = input
// error; 3 = internal resource cap hit (oracle truncation).

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "milnor/analysis.hpp"
#include "milnor/factored_curve.hpp"
#include "milnor/fuzz.hpp"
#include "milnor/generators.hpp"
#include "milnor/lemmas.hpp"
#include "milnor/local_invariants.hpp"
#include "milnor/oracle.hpp"
#include "milnor/poly_text.hpp"
#include "milnor/reporting.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;
constexpr int kResourceCap = 3;

struct Options {
    std::string format = "text";
    bool json() const { return format == "json"; }
};

void emit(const Options& opt, const milnor::Json& json, const std::string& text) {
    if (opt.json())
        std::cout << json.dump(2) << '\n';
    else
        std::cout << text;
}

milnor::BiPoly parse_arg(const std::string& text) { return milnor::parse_poly(text); }

std::vector<milnor::BiPoly> parse_factors(const std::vector<std::string>& args,
                                          int& stripped) {
    std::vector<milnor::BiPoly> factors;
    for (const auto& a : args) factors.push_back(parse_arg(a));
    auto kept = milnor::strip_units_at_origin(factors);
    stripped = static_cast<int>(factors.size() - kept.size());
    if (kept.empty())
        throw std::invalid_argument("no factor vanishes at the origin");
    return kept;
}

int cmd_analyze(const std::string& poly_text, bool assume_unibranch, const Options& opt) {
    milnor::BiPoly f = parse_arg(poly_text);
    if (f.is_zero() || f.is_constant())
        throw std::invalid_argument("curve must be a nonconstant polynomial");
    if (!f.vanishes_at_origin())
        throw std::invalid_argument("curve does not pass through origin");
    milnor::AnalysisReport r = milnor::analyze_curve(f, assume_unibranch);
    milnor::Json j;
    j["curve"] = milnor::format_poly(f);
    j.update(milnor::to_json(r));
    emit(opt, j, "curve: " + milnor::format_poly(f) + "\n" + milnor::to_text(r));
    return kOk;  // infinite milnor is reported, not failed
}

int cmd_verify(const std::string& check, const std::string& poly_text,
               const std::vector<std::string>& factor_texts, bool assume_unibranch,
               const Options& opt) {
    if (check == "thm1.1") {
        milnor::BiPoly f;
        if (!poly_text.empty()) {
            f = parse_arg(poly_text);
        } else if (!factor_texts.empty()) {
            int stripped = 0;
            auto factors = parse_factors(factor_texts, stripped);
            f = milnor::BiPoly::constant(1);
            for (const auto& p : factors) f = f * p;
        } else {
            throw std::invalid_argument("thm1.1 needs --poly or --factor");
        }
        if (f.is_zero() || f.is_constant())
            throw std::invalid_argument("curve must be a nonconstant polynomial");
        if (!f.vanishes_at_origin())
            throw std::invalid_argument("curve does not pass through origin");
        milnor::AnalysisReport r = milnor::analyze_curve(f, assume_unibranch);
        milnor::Json j;
        j["curve"] = milnor::format_poly(f);
        j.update(milnor::to_json(r));
        std::string verdict;
        int code = kOk;
        if (!r.thm11.applicable) {
            verdict = "not applicable: " + r.thm11.reason;
        } else if (r.thm11.satisfied) {
            verdict = "holds";
        } else {
            verdict = "VIOLATED";
            code = kViolation;
        }
        j["verdict"] = verdict;
        emit(opt, j,
             "curve: " + milnor::format_poly(f) + "\n" + milnor::to_text(r) +
                 "thm1.1: " + verdict + "\n");
        return code;
    }

    int stripped = 0;
    auto factor_polys = parse_factors(factor_texts, stripped);
    if (check == "lemma4.1") {
        if (factor_polys.size() != 2)
            throw std::invalid_argument(
                "lemma4.1 needs exactly two --factor arguments: the cubic, then the conic");
        milnor::ContactBoundResult r =
            milnor::check_lemma41(factor_polys[0], factor_polys[1]);
        emit(opt, milnor::to_json(r), milnor::to_text(r));
        return r.holds ? kOk : kViolation;
    }

    milnor::FactoredCurve curve = milnor::FactoredCurve::make(std::move(factor_polys));
    if (check == "lemma2.1") {
        milnor::ProductIdentityResult r = milnor::check_lemma21_identity(curve);
        milnor::Json j = milnor::to_json(r);
        if (stripped > 0) j["stripped_units"] = stripped;
        emit(opt, j, milnor::to_text(r));
        return r.holds ? kOk : kViolation;
    }
    if (check == "lemmas") {
        milnor::LemmaReport r = milnor::structural_lemma_checks(curve);
        milnor::Json j = milnor::to_json(r);
        if (stripped > 0) j["stripped_units"] = stripped;
        emit(opt, j, milnor::to_text(r));
        bool ok = r.lemma21_identity_holds && r.lemma24_holds && r.lemma25_holds &&
                  r.lemma27_holds && (!r.lemma28_applicable || r.lemma28_holds);
        return ok ? kOk : kViolation;
    }
    if (check == "thm1.4") {
        milnor::Thm14Result r = milnor::check_thm14(curve);
        milnor::Json j = milnor::to_json(r);
        if (stripped > 0) j["stripped_units"] = stripped;
        emit(opt, j, milnor::to_text(r));
        // The equivalence is asserted away from d = 4; both directions are
        // reported either way.
        if (!r.d4_exception && !r.equivalence_holds) return kViolation;
        return kOk;
    }
    throw std::invalid_argument("unknown check '" + check + "'");
}

int cmd_generate(const std::string& family, int degree, const Options& opt) {
    if (degree < 2) throw std::invalid_argument("generate: degree must be >= 2");
    if (family == "extremal") {
        milnor::FactoredCurve c = milnor::gen_extremal(degree);
        milnor::AnalysisReport r = milnor::analyze_curve(c.product());
        milnor::Json j;
        j["family"] = family;
        j["degree"] = degree;
        milnor::Json factors = milnor::Json::array();
        for (const auto& f : c.factors()) factors.push_back(milnor::format_poly(f));
        j["factors"] = factors;
        j["milnor"] = milnor::to_json(r.milnor);
        j["bound_thm11"] = r.bounds.thm11;
        std::string text = "family: extremal\ndegree: " + std::to_string(degree) + "\n";
        for (const auto& f : c.factors())
            text += "factor: " + milnor::format_poly(f) + "\n";
        text += "milnor: " + r.milnor.to_string() +
                "\nbound_thm11: " + std::to_string(r.bounds.thm11) + "\n";
        emit(opt, j, text);
        return kOk;
    }
    if (family == "irreducible-max") {
        milnor::BiPoly f = milnor::gen_irreducible_max(degree);
        milnor::AnalysisReport r = milnor::analyze_curve(f);
        long bound = static_cast<long>(degree - 1) * (degree - 2);
        milnor::Json j;
        j["family"] = family;
        j["degree"] = degree;
        j["polynomial"] = milnor::format_poly(f);
        j["milnor"] = milnor::to_json(r.milnor);
        j["bound_irreducible"] = bound;
        emit(opt, j,
             "family: irreducible-max\ndegree: " + std::to_string(degree) +
                 "\npolynomial: " + milnor::format_poly(f) + "\nmilnor: " +
                 r.milnor.to_string() + "\nbound_irreducible: " + std::to_string(bound) +
                 "\n");
        return kOk;
    }
    throw std::invalid_argument("unknown family '" + family + "'");
}

int cmd_fuzz(const milnor::FuzzConfig& cfg, const Options& opt) {
    milnor::FuzzSummary s = milnor::fuzz_campaign(cfg);
    emit(opt, milnor::to_json(s), milnor::to_text(s));
    return s.violations.empty() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact local invariants of plane algebraic curve singularities"};
    app.require_subcommand(1);

    Options opt;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    // analyze
    std::string poly_text;
    bool assume_unibranch = false;
    CLI::App* analyze = app.add_subcommand("analyze", "invariants and bounds of one curve");
    analyze->add_option("--poly", poly_text, "curve polynomial")->required();
    analyze->add_flag("--assume-unibranch", assume_unibranch,
                      "assert the curve germ is unibranch (enables the one-branch bound)");
    add_format(analyze);

    // verify
    std::string check;
    std::string verify_poly;
    std::vector<std::string> factor_texts;
    bool verify_unibranch = false;
    CLI::App* verify = app.add_subcommand("verify", "run one named check");
    verify->add_option("check", check, "thm1.1 | thm1.4 | lemma2.1 | lemmas | lemma4.1")
        ->required()
        ->check(CLI::IsMember({"thm1.1", "thm1.4", "lemma2.1", "lemmas", "lemma4.1"}));
    verify->add_option("--poly", verify_poly, "curve polynomial (thm1.1)");
    verify->add_option("--factor", factor_texts, "curve factor (repeatable)");
    verify->add_flag("--assume-unibranch", verify_unibranch, "");
    add_format(verify);

    // generate
    std::string family;
    int degree = 0;
    CLI::App* generate = app.add_subcommand("generate", "emit a named curve family");
    generate->add_option("--family", family, "extremal | irreducible-max")
        ->required()
        ->check(CLI::IsMember({"extremal", "irreducible-max"}));
    generate->add_option("--degree", degree, "total degree (>= 2)")->required();
    add_format(generate);

    // fuzz
    milnor::FuzzConfig cfg;
    CLI::App* fuzz = app.add_subcommand("fuzz", "seeded random-curve campaign");
    fuzz->add_option("--trials", cfg.trials, "number of trials")->required();
    fuzz->add_option("--seed", cfg.seed, "64-bit seed")->required();
    fuzz->add_option("--max-factors", cfg.max_factors, "factors per curve")
        ->capture_default_str();
    fuzz->add_option("--max-degree", cfg.max_factor_degree, "max factor degree")
        ->capture_default_str();
    fuzz->add_option("--coeff-bound", cfg.coeff_bound, "coefficient magnitude bound")
        ->capture_default_str();
    fuzz->add_option("--oracle-subsample", cfg.oracle_subsample,
                     "cross-check every k-th trial against the linear-algebra oracle")
        ->capture_default_str();
    add_format(fuzz);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return cmd_analyze(poly_text, assume_unibranch, opt);
        if (*verify)
            return cmd_verify(check, verify_poly, factor_texts, verify_unibranch, opt);
        if (*generate) return cmd_generate(family, degree, opt);
        if (*fuzz) return cmd_fuzz(cfg, opt);
    } catch (const milnor::oracle::CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kResourceCap;
    } catch (const milnor::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
