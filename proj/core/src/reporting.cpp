#include "milnor/reporting.hpp"

#include <sstream>

namespace milnor {

Json to_json(const ExtNat& n) {
    if (n.is_infinite()) return Json("infinity");
    return Json(n.value());
}

namespace {

const char* yesno(bool b) { return b ? "yes" : "no"; }

}  // namespace

Json to_json(const AnalysisReport& r) {
    Json j;
    j["degree"] = r.degree;
    j["order"] = r.order;
    j["milnor"] = to_json(r.milnor);
    j["tangent_count"] = r.tangent_count;

    Json bounds;
    bounds["bezout"] = r.bounds.bezout;
    bounds["thm11"] = r.bounds.thm11;
    bounds["lemma25"] = r.bounds.lemma25 ? Json(*r.bounds.lemma25) : Json(nullptr);
    bounds["gz"] = r.bounds.gz;
    bounds["am"] = r.bounds.am;
    j["bounds"] = bounds;

    Json applicable;
    applicable["bezout"] = r.bezout.applicable;
    applicable["thm11"] = r.thm11.applicable;
    applicable["lemma25"] = r.lemma25.applicable;
    applicable["gz"] = r.gz.applicable;
    applicable["am"] = r.am.applicable;
    j["applicable"] = applicable;

    Json satisfied;
    if (r.bezout.applicable) satisfied["bezout"] = r.bezout.satisfied;
    if (r.thm11.applicable) satisfied["thm11"] = r.thm11.satisfied;
    if (r.lemma25.applicable) satisfied["lemma25"] = r.lemma25.satisfied;
    if (r.gz.applicable) satisfied["gz"] = r.gz.satisfied;
    if (r.am.applicable) satisfied["am"] = r.am.satisfied;
    j["satisfied"] = satisfied;

    Json flags;
    flags["homogeneous"] = r.homogeneous;
    flags["smooth"] = r.smooth;
    flags["extremal"] = r.extremal;
    j["flags"] = flags;

    if (r.milnor.is_infinite())
        j["skip_reason"] = "non-isolated singularity (milnor number infinite)";
    return j;
}

std::string to_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "degree: " << r.degree << '\n';
    os << "order: " << r.order << '\n';
    os << "milnor: " << r.milnor << '\n';
    os << "tangent_count: " << r.tangent_count << '\n';
    auto line = [&](const char* name, const BoundVerdict& v, long bound) {
        os << "bound " << name << ": " << bound;
        if (v.applicable)
            os << (v.satisfied ? "  [satisfied]" : "  [VIOLATED]");
        else
            os << "  [not applicable: " << v.reason << "]";
        os << '\n';
    };
    line("bezout", r.bezout, r.bounds.bezout);
    line("thm11", r.thm11, r.bounds.thm11);
    if (r.bounds.lemma25)
        line("lemma25", r.lemma25, *r.bounds.lemma25);
    else
        os << "bound lemma25: n/a  [not applicable: " << r.lemma25.reason << "]\n";
    line("gz", r.gz, r.bounds.gz);
    line("am", r.am, r.bounds.am);
    os << "flags: homogeneous=" << yesno(r.homogeneous) << " smooth=" << yesno(r.smooth)
       << " extremal=" << yesno(r.extremal) << '\n';
    if (r.milnor.is_infinite())
        os << "skip_reason: non-isolated singularity (milnor number infinite)\n";
    return os.str();
}

Json to_json(const Thm14Result& r) {
    Json j;
    j["d"] = r.d;
    j["i_holds"] = r.i_holds;
    j["ii_holds"] = r.ii_holds;
    j["equivalence_holds"] = r.equivalence_holds;
    j["d4_exception"] = r.d4_exception;
    Json clauses;
    clauses["component_count"] = r.component_count_ok;
    clauses["degree_multiset"] = r.degree_multiset_ok;
    clauses["conics_irreducible"] = r.conics_irreducible_ok;
    clauses["pairwise_contact"] = r.pairwise_contact_ok;
    clauses["line_tangency"] = r.line_tangency_ok;
    j["clauses"] = clauses;
    return j;
}

std::string to_text(const Thm14Result& r) {
    std::ostringstream os;
    os << "d: " << r.d << '\n';
    os << "(i) extremal milnor number: " << yesno(r.i_holds) << '\n';
    os << "(ii) conic-pencil structure: " << yesno(r.ii_holds) << '\n';
    os << "  component_count: " << yesno(r.component_count_ok) << '\n';
    os << "  degree_multiset: " << yesno(r.degree_multiset_ok) << '\n';
    os << "  conics_irreducible: " << yesno(r.conics_irreducible_ok) << '\n';
    os << "  pairwise_contact: " << yesno(r.pairwise_contact_ok) << '\n';
    os << "  line_tangency: " << yesno(r.line_tangency_ok) << '\n';
    os << "equivalence: " << yesno(r.equivalence_holds);
    if (r.d4_exception) os << "  [d=4: reported, not asserted]";
    os << '\n';
    return os.str();
}

Json to_json(const ProductIdentityResult& r) {
    Json j;
    j["holds"] = r.holds;
    j["lhs"] = to_json(r.lhs);
    j["rhs"] = to_json(r.rhs);
    j["milnor_product"] = to_json(r.mu_product);
    Json factors = Json::array();
    for (const auto& mu : r.mu_factors) factors.push_back(to_json(mu));
    j["milnor_factors"] = factors;
    return j;
}

std::string to_text(const ProductIdentityResult& r) {
    std::ostringstream os;
    os << "product identity: " << (r.holds ? "holds" : "VIOLATED") << "  (lhs " << r.lhs
       << ", rhs " << r.rhs << ")\n";
    return os.str();
}

Json to_json(const LemmaReport& r) {
    Json j;
    j["milnor"] = to_json(r.milnor);
    j["d"] = r.d;
    j["m"] = r.m;
    j["lemma21"] = {{"applicable", r.lemma21_applicable},
                    {"holds", r.lemma21_identity_holds}};
    j["lemma24"] = {{"lambda", r.lemma24_lambda_count},
                    {"bound", r.lemma24_bound},
                    {"holds", r.lemma24_holds}};
    j["lemma25"] = {{"bound", r.lemma25_bound}, {"holds", r.lemma25_holds}};
    j["lemma27"] = {{"lhs", r.lemma27_lhs}, {"rhs", r.lemma27_rhs}, {"holds", r.lemma27_holds}};
    Json l28;
    l28["applicable"] = r.lemma28_applicable;
    if (r.lemma28_applicable) {
        l28["tangent_count"] = r.lemma28_tangent_count;
        l28["bound"] = r.lemma28_bound;
        l28["holds"] = r.lemma28_holds;
    }
    j["lemma28"] = l28;
    Json irr = Json::array();
    for (auto s : r.irreducibility) irr.push_back(to_string(s));
    j["irreducibility"] = irr;
    j["thm14"] = r.thm14 ? to_json(*r.thm14) : Json(nullptr);
    return j;
}

std::string to_text(const LemmaReport& r) {
    std::ostringstream os;
    os << "milnor: " << r.milnor << "  d: " << r.d << "  m: " << r.m << '\n';
    os << "lemma2.1 identity: " << (r.lemma21_identity_holds ? "holds" : "VIOLATED") << '\n';
    os << "lemma2.4: lambda=" << r.lemma24_lambda_count << " bound=" << r.lemma24_bound
       << (r.lemma24_holds ? "  [holds]" : "  [VIOLATED]") << '\n';
    os << "lemma2.5: bound=" << r.lemma25_bound
       << (r.lemma25_holds ? "  [holds]" : "  [VIOLATED]") << '\n';
    os << "lemma2.7: " << r.lemma27_lhs << " <= " << r.lemma27_rhs
       << (r.lemma27_holds ? "  [holds]" : "  [VIOLATED]") << '\n';
    if (r.lemma28_applicable)
        os << "lemma2.8: tangents=" << r.lemma28_tangent_count << " bound="
           << r.lemma28_bound << (r.lemma28_holds ? "  [holds]" : "  [VIOLATED]") << '\n';
    else
        os << "lemma2.8: not applicable\n";
    os << "irreducibility:";
    for (auto s : r.irreducibility) os << ' ' << to_string(s);
    os << '\n';
    if (r.thm14) os << to_text(*r.thm14);
    return os.str();
}

Json to_json(const ContactBoundResult& r) {
    Json j;
    j["i0"] = to_json(r.i0);
    j["holds"] = r.holds;
    return j;
}

std::string to_text(const ContactBoundResult& r) {
    std::ostringstream os;
    os << "i0: " << r.i0 << "  bound: < 6  " << (r.holds ? "[holds]" : "[VIOLATED]")
       << '\n';
    return os.str();
}

Json to_json(const FuzzSummary& s) {
    Json j;
    j["trials_requested"] = s.trials_requested;
    j["trials_run"] = s.trials_run;
    Json checked;
    checked["lemma2.1"] = s.checked_identity;
    checked["thm1.1"] = s.checked_main_bound;
    checked["gz"] = s.checked_order2_bound;
    checked["lemma2.7"] = s.checked_lemma27;
    checked["lemma2.4_2.5"] = s.checked_lemma2425;
    checked["oracle"] = s.checked_oracle;
    j["checked"] = checked;
    Json skipped;
    skipped["homogeneous"] = s.skipped_homogeneous;
    skipped["lemma2.4_2.5_uncertified"] = s.skipped_uncertified;
    j["skipped"] = skipped;
    Json violations = Json::array();
    for (const auto& v : s.violations) {
        Json e;
        e["trial"] = v.trial;
        e["substream_seed"] = v.substream_seed;
        e["property"] = v.property;
        e["detail"] = v.detail;
        violations.push_back(e);
    }
    j["violations"] = violations;
    return j;
}

std::string to_text(const FuzzSummary& s) {
    std::ostringstream os;
    os << "trials: " << s.trials_run << " / " << s.trials_requested << '\n';
    os << "checked: lemma2.1=" << s.checked_identity << " thm1.1=" << s.checked_main_bound
       << " gz=" << s.checked_order2_bound << " lemma2.7=" << s.checked_lemma27
       << " lemma2.4_2.5=" << s.checked_lemma2425 << " oracle=" << s.checked_oracle
       << '\n';
    os << "skipped: homogeneous=" << s.skipped_homogeneous
       << " lemma2.4_2.5_uncertified=" << s.skipped_uncertified << '\n';
    os << "violations: " << s.violations.size() << '\n';
    for (const auto& v : s.violations)
        os << "  trial " << v.trial << " [" << v.property << "] seed "
           << v.substream_seed << ": " << v.detail << '\n';
    return os.str();
}

}  // namespace milnor
