#include "bmac/serialize.hpp"

#include <sstream>

#include "bmac/superspace.hpp"
#include "json.hpp"

namespace bmac {

using nlohmann::json;

KostkaTable double_kostka_table(int n) {
    KostkaTable t;
    t.n = n;
    auto labels = pair_labels_descending(n);
    for (const auto& p : labels) {
        t.row_labels.push_back(p.to_string());
        t.col_labels.push_back(p.to_string());
    }
    for (const auto& row : labels) {
        BiSymPoly H = double_H(row);
        std::vector<RatFunc> r;
        for (const auto& col : labels) r.push_back(H.coeff(col));
        t.entries.push_back(std::move(r));
    }
    return t;
}

KostkaTable super_kostka_table(int n, int m) {
    KostkaTable t;
    t.n = n;
    t.m = m;
    auto labels = super_labels_descending(n, m);
    for (const auto& L : labels) {
        t.row_labels.push_back(L.to_string());
        t.col_labels.push_back(L.to_string());
    }
    for (const auto& row : labels) {
        auto exp = super_schur_expansion(super_H(row), n, m);
        std::vector<RatFunc> r;
        for (const auto& col : labels) {
            auto it = exp.find(col);
            r.push_back(it == exp.end() ? RatFunc(0) : it->second);
        }
        t.entries.push_back(std::move(r));
    }
    return t;
}

std::vector<KostkaTable> golden_tables() {
    json doc = json::parse(golden_kostka_json());
    std::vector<KostkaTable> out;
    for (const auto& jt : doc.at("tables")) {
        KostkaTable t;
        t.n = jt.at("n").get<int>();
        for (const auto& l : jt.at("labels")) {
            t.row_labels.push_back(l.get<std::string>());
            t.col_labels.push_back(l.get<std::string>());
        }
        for (const auto& jrow : jt.at("entries")) {
            std::vector<RatFunc> row;
            for (const auto& e : jrow) row.push_back(RatFunc::parse(e.get<std::string>()));
            t.entries.push_back(std::move(row));
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::string bisym_to_json(const BiSymPoly& f, const std::string& label, const std::string& family) {
    json doc;
    doc["kind"] = "expansion";
    doc["label"] = label;
    doc["family"] = family;
    doc["basis"] = bibasis_name(f.basis());
    json entries = json::array();
    for (const auto& [p, c] : f.coeffs()) {
        json e;
        e["lam"] = p.lam.to_string();
        e["mu"] = p.mu.to_string();
        e["coeff"] = c.to_string();
        entries.push_back(e);
    }
    doc["entries"] = entries;
    return doc.dump(2) + "\n";
}

BiSymPoly bisym_from_json(const std::string& text, std::string* label, std::string* family) {
    json doc = json::parse(text);
    if (label) *label = doc.value("label", "");
    if (family) *family = doc.value("family", "");
    BiSymPoly f(parse_bibasis(doc.at("basis").get<std::string>()));
    for (const auto& e : doc.at("entries")) {
        PairLabel p(Partition::parse(e.at("lam").get<std::string>()),
                    Partition::parse(e.at("mu").get<std::string>()));
        f.add_term(p, RatFunc::parse(e.at("coeff").get<std::string>()));
    }
    return f;
}

std::string ratfunc_to_latex(const RatFunc& v) {
    auto poly_latex = [](const MPoly& p, const Params& params) {
        std::string s = p.to_string(params);
        std::string out;
        for (size_t i = 0; i < s.size(); ++i) {
            char c = s[i];
            if (c == '*') continue;
            if (c == '^') {
                out += "^{";
                size_t j = i + 1;
                while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '-')) {
                    out += s[j];
                    ++j;
                }
                out += "}";
                i = j - 1;
                continue;
            }
            out += c;
        }
        return out;
    };
    if (v.is_integral_poly()) return poly_latex(v.num(), *v.params());
    return "\\frac{" + poly_latex(v.num(), *v.params()) + "}{" + poly_latex(v.den(), *v.params()) + "}";
}

namespace {

std::string latex_pair_label(const std::string& label) {
    auto bar = label.find('|');
    std::string a = label.substr(0, bar), b = label.substr(bar + 1);
    auto f = [](const std::string& s) { return s.empty() ? std::string("\\emptyset") : "(" + s + ")"; };
    return "$" + f(a) + "," + f(b) + "$";
}

std::string label_latex(const std::string& label) {
    if (label.find('|') != std::string::npos) return latex_pair_label(label);
    return "$(" + label + ")$";
}

}  // namespace

std::string format_expansion(const BiSymPoly& f, const std::string& label,
                             const std::string& family, const std::string& format) {
    if (format == "json") return bisym_to_json(f, label, family);
    std::ostringstream out;
    if (format == "text") {
        out << family << "[" << label << "] in " << bibasis_name(f.basis()) << ":\n";
        for (const auto& [p, c] : f.coeffs())
            out << "  (" << p.to_string() << ")  " << c.to_string() << "\n";
        return out.str();
    }
    if (format == "csv") {
        out << "lam,mu,coeff\n";
        for (const auto& [p, c] : f.coeffs())
            out << p.lam.to_string() << "," << p.mu.to_string() << ",\"" << c.to_string() << "\"\n";
        return out.str();
    }
    if (format == "latex") {
        out << "\\begin{align*}\n" << family << "_{" << label << "} &= ";
        bool first = true;
        for (const auto& [p, c] : f.coeffs()) {
            if (!first) out << " + ";
            out << "\\left(" << ratfunc_to_latex(c) << "\\right) " << bibasis_name(f.basis()) << "_{"
                << p.to_string() << "}";
            first = false;
        }
        out << "\n\\end{align*}\n";
        return out.str();
    }
    throw ParseError("unknown format: " + format);
}

std::string format_table(const KostkaTable& table, const std::string& format) {
    std::ostringstream out;
    if (format == "json") {
        json doc;
        doc["kind"] = "kostka";
        doc["variant"] = table.m < 0 ? "double" : "super";
        doc["n"] = table.n;
        if (table.m >= 0) doc["m"] = table.m;
        doc["rows"] = table.row_labels;
        doc["cols"] = table.col_labels;
        json entries = json::array();
        for (const auto& row : table.entries) {
            json jrow = json::array();
            for (const auto& e : row) jrow.push_back(e.to_string());
            entries.push_back(jrow);
        }
        doc["entries"] = entries;
        return doc.dump(2) + "\n";
    }
    if (format == "csv") {
        out << "row";
        for (const auto& c : table.col_labels) out << ",\"" << c << "\"";
        out << "\n";
        for (size_t i = 0; i < table.entries.size(); ++i) {
            out << "\"" << table.row_labels[i] << "\"";
            for (const auto& e : table.entries[i]) out << ",\"" << e.to_string() << "\"";
            out << "\n";
        }
        return out.str();
    }
    if (format == "text") {
        for (size_t i = 0; i < table.entries.size(); ++i) {
            out << table.row_labels[i] << ":";
            for (const auto& e : table.entries[i]) out << "  " << e.to_string();
            out << "\n";
        }
        return out.str();
    }
    if (format == "latex") {
        out << "\\begin{tabular}{l |";
        for (size_t j = 0; j < table.col_labels.size(); ++j) out << " c |";
        out << "}\n";
        for (const auto& c : table.col_labels) out << " & " << label_latex(c);
        out << " \\\\ \\hline\n";
        for (size_t i = 0; i < table.entries.size(); ++i) {
            out << label_latex(table.row_labels[i]);
            for (const auto& e : table.entries[i]) out << " & $" << ratfunc_to_latex(e) << "$";
            out << " \\\\ \\hline\n";
        }
        out << "\\end{tabular}\n";
        return out.str();
    }
    throw ParseError("unknown format: " + format);
}

}  // namespace bmac
