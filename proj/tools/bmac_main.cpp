// Command-line front end; talks to the library exclusively through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bmac.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct SessionDeleter {
    void operator()(bmac_session* s) const { bmac_session_free(s); }
};

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << out_path << "\n";
        return kExitInternal;
    }
    f << text;
    return kExitOk;
}

int status_to_exit(bmac_status st) {
    switch (st) {
        case BMAC_OK: return kExitOk;
        case BMAC_ECHECK: return kExitCheckFailed;
        case BMAC_EPARSE: return kExitUsage;
        case BMAC_EDOMAIN: return kExitUsage;
        case BMAC_EINTERNAL: return kExitInternal;
    }
    return kExitInternal;
}

std::string take(char* p) {
    std::string s = p ? p : "";
    bmac_free_string(p);
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact double Macdonald polynomial calculator"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string out_path;
    app.add_option("--format", format, "Output format: json, text, latex, csv")
        ->capture_default_str();
    app.add_option("--out", out_path, "Write output to a file instead of stdout");

    // expand
    auto* expand = app.add_subcommand("expand", "Expand a family member in a chosen basis");
    std::string label, family = "P", basis = "SM";
    expand->add_option("label", label,
                       "Pair \"lam|mu\" (e.g. \"|2\") or superpartition \"a;s\" (e.g. \"1,0;2\")")
        ->required();
    expand->add_option("--family", family, "P, Q, J, H, Htilde (super: P, J, H, schur)")
        ->capture_default_str();
    expand->add_option("--basis", basis, "PP, SM, SP, SS, PM")->capture_default_str();

    // kostka
    auto* kostka = app.add_subcommand("kostka", "Kostka coefficient table");
    int kn = 1, km = -1;
    std::string variant = "double";
    kostka->add_option("--max-n", kn, "Degree of the table")->required();
    kostka->add_option("--m", km, "Fermionic degree (super variant)");
    kostka->add_option("--variant", variant, "double or super")->capture_default_str();

    // nabla
    auto* nabla = app.add_subcommand("nabla", "Nabla action on s_{0,(n)} and its pairings");
    int nn = 1;
    std::string which = "B";
    nabla->add_option("--max-n", nn, "Degree n")->required();
    nabla->add_option("--which", which, "B, barB, sqrtB")->capture_default_str();

    // evaluate
    auto* evaluate = app.add_subcommand("evaluate", "Principal evaluation, both routes");
    std::string elabel;
    int eN = 0, em = -1;
    evaluate->add_option("label", elabel, "Pair or superpartition label")->required();
    evaluate->add_option("--N", eN, "Total number of variables")->required();
    evaluate->add_option("--m", em, "Number of x variables (pair labels)");

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    int vmax = 3, vm = -1, vN = -1;
    unsigned long seed = 20240901;
    verify->add_option("suite", suite, "Suite name, or \"all\"")->required();
    verify->add_option("--max-n", vmax, "Degree bound")->capture_default_str();
    verify->add_option("--m", vm, "Fermionic degree override");
    verify->add_option("--N", vN, "Variable-count bound");
    verify->add_option("--seed", seed, "Random seed for sampled properties")
        ->capture_default_str();

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Monomial expansions across fermionic degrees");
    std::string slabel;
    std::vector<int> sms;
    sweep->add_option("label", slabel, "Pair label \"lam|mu\"")->required();
    sweep->add_option("--m", sms, "Fermionic degrees to compare")->required();

    CLI11_PARSE(app, argc, argv);

    std::unique_ptr<bmac_session, SessionDeleter> session(bmac_session_new());
    bmac_session* s = session.get();
    char* out = nullptr;
    bmac_status st = BMAC_EINTERNAL;

    if (app.got_subcommand(expand)) {
        st = bmac_expand(s, label.c_str(), family.c_str(), basis.c_str(), format.c_str(), &out);
    } else if (app.got_subcommand(kostka)) {
        st = bmac_kostka(s, kn, km, variant.c_str(), format.c_str(), &out);
    } else if (app.got_subcommand(nabla)) {
        st = bmac_nabla(s, nn, which.c_str(), format.c_str(), &out);
    } else if (app.got_subcommand(evaluate)) {
        st = bmac_evaluate(s, elabel.c_str(), eN, em, &out);
    } else if (app.got_subcommand(verify)) {
        st = bmac_verify(s, suite.c_str(), vmax, vm, vN, seed, &out);
    } else if (app.got_subcommand(sweep)) {
        st = bmac_sweep(s, slabel.c_str(), sms.data(), sms.size(), &out);
    }

    std::string text = take(out);
    if (st == BMAC_OK || st == BMAC_ECHECK) {
        int rc = emit(text, out_path);
        if (rc != kExitOk) return rc;
        if (st == BMAC_ECHECK) std::cerr << "verification failed: " << bmac_last_error(s) << "\n";
        return status_to_exit(st);
    }
    std::cerr << "error: " << bmac_last_error(s) << "\n";
    return status_to_exit(st);
}
