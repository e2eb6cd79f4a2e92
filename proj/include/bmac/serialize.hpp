#ifndef BMAC_SERIALIZE_HPP
#define BMAC_SERIALIZE_HPP

#include <string>
#include <vector>

#include "bmac/bisym.hpp"

namespace bmac {

// Baked-in copy of data/kostka_tables.json.
const char* golden_kostka_json();

struct KostkaTable {
    int n = 0;
    int m = -1;  // fermionic degree for the super variant, -1 for double
    std::vector<std::string> row_labels, col_labels;
    std::vector<std::vector<RatFunc>> entries;
};

// Rows are Macdonald labels, columns Schur labels, both in descending
// dominance order (the layout of the printed tables).
KostkaTable double_kostka_table(int n);
KostkaTable super_kostka_table(int n, int m);

std::vector<KostkaTable> golden_tables();

// Expansion documents. JSON shape:
// {"kind":"expansion","label":...,"family":...,"basis":...,
//  "entries":[{"lam":...,"mu":...,"coeff":...}]}
std::string bisym_to_json(const BiSymPoly& f, const std::string& label, const std::string& family);
BiSymPoly bisym_from_json(const std::string& text, std::string* label = nullptr,
                          std::string* family = nullptr);

std::string format_expansion(const BiSymPoly& f, const std::string& label,
                             const std::string& family, const std::string& format);
std::string format_table(const KostkaTable& table, const std::string& format);

std::string ratfunc_to_latex(const RatFunc& v);

}  // namespace bmac

#endif
