#include "bmac.h"

#include <cstring>
#include <functional>
#include <string>

#include "bmac/nabla.hpp"
#include "bmac/serialize.hpp"
#include "bmac/superspace.hpp"
#include "bmac/verify.hpp"
#include "json.hpp"

using namespace bmac;
using nlohmann::json;

struct bmac_session {
    std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
    char* p = new char[s.size() + 1];
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

bmac_status guard(bmac_session* s, char** out, const std::function<std::string()>& fn) {
    if (!s) return BMAC_EINTERNAL;
    try {
        std::string r = fn();
        if (out) *out = dup_string(r);
        s->last_error.clear();
        return BMAC_OK;
    } catch (const ParseError& e) {
        s->last_error = e.what();
        return BMAC_EPARSE;
    } catch (const PoleError& e) {
        s->last_error = e.what();
        return BMAC_EDOMAIN;
    } catch (const DivisionByZeroError& e) {
        s->last_error = e.what();
        return BMAC_EDOMAIN;
    } catch (const MathError& e) {
        s->last_error = e.what();
        return BMAC_EDOMAIN;
    } catch (const std::exception& e) {
        s->last_error = e.what();
        return BMAC_EINTERNAL;
    }
}

bool is_super_label(const std::string& label) { return label.find(';') != std::string::npos; }

BiSymPoly expand_family(const std::string& label, const std::string& family, BiBasis basis) {
    if (is_super_label(label)) {
        SuperPartition L = SuperPartition::parse(label);
        int m = L.fermionic_degree();
        BiSymPoly f;
        if (family == "P") f = super_P(L).poly;
        else if (family == "J") f = super_J(L);
        else if (family == "H") f = super_H(L);
        else if (family == "schur") f = super_schur(L);
        else throw ParseError("superpartition families are P, J, H, schur");
        if (f.basis() == basis) return f;
        if (basis == BiBasis::SP || f.basis() == BiBasis::SP) return convert_capped(f, basis, m);
        throw ParseError("non-stable expansions support the SM and SP bases only");
    }
    PairLabel p = PairLabel::parse(label);
    BiSymPoly f;
    if (family == "P") f = double_P(p);
    else if (family == "Q") f = double_Q(p);
    else if (family == "J") f = double_J(p);
    else if (family == "H") f = double_H(p);
    else if (family == "Htilde") f = h_tilde(p);
    else throw ParseError("pair families are P, Q, J, H, Htilde");
    return convert(f, basis);
}

}  // namespace

extern "C" {

bmac_session* bmac_session_new(void) { return new bmac_session(); }

void bmac_session_free(bmac_session* s) { delete s; }

const char* bmac_last_error(const bmac_session* s) { return s ? s->last_error.c_str() : ""; }

void bmac_free_string(char* p) { delete[] p; }

const char* bmac_version(void) { return "0.1.0"; }

bmac_status bmac_expand(bmac_session* s, const char* label, const char* family,
                        const char* basis, const char* format, char** out) {
    return guard(s, out, [&]() {
        BiSymPoly f = expand_family(label, family, parse_bibasis(basis ? basis : "SM"));
        return format_expansion(f, label, family, format ? format : "json");
    });
}

bmac_status bmac_kostka(bmac_session* s, int n, int m, const char* variant,
                        const char* format, char** out) {
    return guard(s, out, [&]() {
        std::string v = variant ? variant : "double";
        if (n < 0) throw ParseError("degree must be nonnegative");
        KostkaTable t;
        if (v == "double") t = double_kostka_table(n);
        else if (v == "super") {
            if (m < 0) throw ParseError("super tables need a fermionic degree m >= 0");
            t = super_kostka_table(n, m);
        } else throw ParseError("variant must be double or super");
        return format_table(t, format ? format : "json");
    });
}

bmac_status bmac_nabla(bmac_session* s, int n, const char* which, const char* format,
                       char** out) {
    return guard(s, out, [&]() {
        if (n < 1) throw ParseError("nabla needs n >= 1");
        std::string w = which && *which ? which : "B";
        NablaKind kind = parse_nabla_kind(w);
        BiSymPoly f = nabla_apply(
            BiSymPoly::basis_element(BiBasis::SS, {Partition(), Partition{n}}), kind);
        std::string fmt = format ? format : "json";
        if (fmt != "json")
            return format_expansion(f, "|" + std::to_string(n), "nabla^" + w, fmt);
        json doc;
        doc["kind"] = "nabla";
        doc["n"] = n;
        doc["which"] = w;
        json entries = json::array();
        for (const auto& [p, c] : f.coeffs()) {
            json e;
            e["lam"] = p.lam.to_string();
            e["mu"] = p.mu.to_string();
            e["coeff"] = c.to_string();
            entries.push_back(e);
        }
        doc["schur_expansion"] = entries;
        if (kind == NablaKind::B) {
            RatFunc cat = catalan_B_closed(n), dim = dim_pairing_closed(n);
            auto at11 = [](const RatFunc& v) {
                return v.substitute({{"q", RatFunc(1)}, {"t", RatFunc(1)}}).to_string();
            };
            doc["catalan"] = cat.to_string();
            doc["catalan_at_q1_t1"] = at11(cat);
            doc["dimension_pairing"] = dim.to_string();
            doc["dimension_at_q1_t1"] = at11(dim);
            std::vector<int> ones(static_cast<size_t>(n), 1);
            doc["sign_coefficient"] = f.coeff({Partition(ones), Partition()}).to_string();
        }
        return doc.dump(2) + "\n";
    });
}

bmac_status bmac_evaluate(bmac_session* s, const char* label, int bigN, int m, char** out) {
    return guard(s, out, [&]() {
        json doc;
        doc["kind"] = "evaluation";
        doc["label"] = label;
        doc["N"] = bigN;
        RatFunc closed, explicit_v;
        if (is_super_label(label)) {
            SuperPartition L = SuperPartition::parse(label);
            doc["m"] = L.fermionic_degree();
            closed = super_evaluation_closed(L, bigN);
            explicit_v = super_evaluation_explicit(L, bigN);
        } else {
            PairLabel p = PairLabel::parse(label);
            if (m < 0) throw ParseError("pair evaluation needs m >= 0");
            doc["m"] = m;
            closed = evaluate_E_closed(p, bigN, m);
            explicit_v = evaluate_E_explicit(p, bigN, m);
        }
        doc["closed"] = closed.to_string();
        doc["explicit"] = explicit_v.to_string();
        doc["agree"] = closed == explicit_v;
        return doc.dump(2) + "\n";
    });
}

bmac_status bmac_verify(bmac_session* s, const char* suite, int max_n, int m, int bigN,
                        unsigned long seed, char** report) {
    if (!s) return BMAC_EINTERNAL;
    try {
        VerifyOptions opt;
        if (max_n > 0) opt.max_n = max_n;
        opt.m = m;
        opt.N = bigN;
        opt.seed = seed;
        std::string name = suite ? suite : "all";
        std::vector<SuiteReport> reports;
        if (name == "all") {
            for (const auto& sn : suite_names())
                if (sn != "all") reports.push_back(run_suite(sn, opt));
        } else {
            reports.push_back(run_suite(name, opt));
        }
        if (report) *report = dup_string(report_to_json(reports));
        s->last_error.clear();
        for (const auto& r : reports)
            if (!r.ok()) {
                s->last_error = "suite " + r.suite + " reported counterexamples";
                return BMAC_ECHECK;
            }
        return BMAC_OK;
    } catch (const ParseError& e) {
        s->last_error = e.what();
        return BMAC_EPARSE;
    } catch (const std::exception& e) {
        s->last_error = e.what();
        return BMAC_EINTERNAL;
    }
}

bmac_status bmac_sweep(bmac_session* s, const char* pair, const int* ms, size_t count,
                       char** out) {
    return guard(s, out, [&]() {
        PairLabel p = PairLabel::parse(pair);
        std::vector<int> mlist(ms, ms + count);
        SweepResult res = stability_sweep(p, mlist);
        json doc;
        doc["kind"] = "sweep";
        doc["label"] = p.to_string();
        doc["stable_sector_equal"] = res.stable_sector_equal;
        json entries = json::array();
        for (const auto& e : res.entries) {
            json je;
            je["m"] = e.m;
            json terms = json::array();
            for (const auto& [lab, c] : e.poly.coeffs()) {
                json jt;
                jt["lam"] = lab.lam.to_string();
                jt["mu"] = lab.mu.to_string();
                jt["coeff"] = c.to_string();
                terms.push_back(jt);
            }
            je["entries"] = terms;
            entries.push_back(je);
        }
        doc["expansions"] = entries;
        return doc.dump(2) + "\n";
    });
}

}  // extern "C"
