#include "bmac/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace bmac {

namespace {
std::vector<int> strip_zeros(std::vector<int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}
}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(strip_zeros(std::move(parts))) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw MathError("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i]) throw MathError("partition parts must be weakly decreasing");
    }
}

int Partition::degree() const {
    int d = 0;
    for (int p : parts_) d += p;
    return d;
}

int Partition::part(int i) const {
    if (i < 1) throw MathError("partition row index must be >= 1");
    return i <= length() ? parts_[static_cast<size_t>(i - 1)] : 0;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> c(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) c[static_cast<size_t>(j)]++;
    return Partition(std::move(c));
}

bool Partition::contains(const Partition& inner) const {
    for (int i = 1; i <= inner.length(); ++i)
        if (part(i) < inner.part(i)) return false;
    return true;
}

Partition Partition::plus(const Partition& o) const {
    std::vector<int> v;
    int n = std::max(length(), o.length());
    for (int i = 1; i <= n; ++i) v.push_back(part(i) + o.part(i));
    return Partition(std::move(v));
}

Partition Partition::union_with(const Partition& o) const {
    std::vector<int> v = parts_;
    v.insert(v.end(), o.parts_.begin(), o.parts_.end());
    std::sort(v.begin(), v.end(), std::greater<int>());
    return Partition(std::move(v));
}

Partition Partition::staircase(int m) {
    std::vector<int> v;
    for (int i = m - 1; i >= 1; --i) v.push_back(i);
    return Partition(std::move(v));
}

void Partition::check_cell(int row, int col) const {
    if (!has_cell(row, col)) throw MathError("cell outside the diagram");
}

bool Partition::has_cell(int row, int col) const {
    return row >= 1 && col >= 1 && row <= length() && col <= part(row);
}

int Partition::arm(int row, int col) const {
    check_cell(row, col);
    return part(row) - col;
}

int Partition::leg(int row, int col) const {
    check_cell(row, col);
    return conjugate().part(col) - row;
}

long Partition::n_stat() const {
    long s = 0;
    for (size_t i = 0; i < parts_.size(); ++i) s += static_cast<long>(i) * parts_[i];
    return s;
}

mpz_class Partition::z_factor() const {
    mpz_class z = 1;
    int run = 0;
    int prev = -1;
    for (int p : parts_) {
        if (p == prev) ++run;
        else run = 1;
        prev = p;
        z *= p;
        z *= run;
    }
    return z;
}

bool Partition::operator<(const Partition& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    return parts_ > o.parts_;  // descending lex within a degree
}

std::string Partition::to_string() const {
    std::ostringstream out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ",";
        out << parts_[i];
    }
    return out.str();
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> v;
    std::string cleaned;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) cleaned += c;
    if (cleaned.empty() || cleaned == "0") return Partition();
    std::istringstream in(cleaned);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) throw ParseError("bad partition: " + text);
        v.push_back(std::stoi(tok));
    }
    return Partition(std::move(v));
}

namespace {
void gen_partitions(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> Partition::all(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::vector<Partition> Partition::all_up_to(int n) {
    std::vector<Partition> out;
    for (int d = 0; d <= n; ++d) {
        auto v = all(d);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

bool dominance_leq(const Partition& a, const Partition& b, bool relaxed) {
    if (!relaxed && a.degree() != b.degree()) return false;
    int n = std::max(a.length(), b.length());
    long sa = 0, sb = 0;
    for (int i = 1; i <= n; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa > sb) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// PairLabel

bool PairLabel::operator<(const PairLabel& o) const {
    if (lam != o.lam) return lam < o.lam;
    return mu < o.mu;
}

std::string PairLabel::to_string() const { return lam.to_string() + "|" + mu.to_string(); }

PairLabel PairLabel::parse(const std::string& text) {
    auto bar = text.find('|');
    if (bar == std::string::npos) throw ParseError("pair label needs '|': " + text);
    return PairLabel(Partition::parse(text.substr(0, bar)), Partition::parse(text.substr(bar + 1)));
}

std::vector<PairLabel> PairLabel::all(int n) {
    std::vector<PairLabel> out;
    for (int k = 0; k <= n; ++k)
        for (const auto& l : Partition::all(k))
            for (const auto& m : Partition::all(n - k)) out.emplace_back(l, m);
    return out;
}

bool pair_dominance_leq(const PairLabel& a, const PairLabel& b) {
    if (a.total_degree() != b.total_degree()) throw MathError("pair dominance needs equal total degrees");
    int n = a.total_degree();
    long sa = 0, sb = 0;
    for (int i = 1; i <= n + 1; ++i) {
        sa += a.lam.part(i);
        sb += b.lam.part(i);
        if (sa > sb) return false;
    }
    sa = a.lam.degree();
    sb = b.lam.degree();
    for (int j = 1; j <= n + 1; ++j) {
        sa += a.mu.part(j);
        sb += b.mu.part(j);
        if (sa > sb) return false;
    }
    return true;
}

std::vector<PairLabel> pair_labels_descending(int n) {
    auto labels = PairLabel::all(n);
    auto key = [n](const PairLabel& p) {
        SuperPartition L = SuperPartition::from_pair(p, n);
        return std::make_pair(L.star().parts(), L.circled().parts());
    };
    std::sort(labels.begin(), labels.end(),
              [&](const PairLabel& x, const PairLabel& y) { return key(x) > key(y); });
    return labels;
}

// ---------------------------------------------------------------------------
// SuperPartition

SuperPartition::SuperPartition(std::vector<int> anti, Partition sym)
    : anti_(std::move(anti)), sym_(std::move(sym)) {
    for (size_t i = 0; i < anti_.size(); ++i) {
        if (anti_[i] < 0) throw MathError("anti part must be nonnegative");
        if (i > 0 && anti_[i - 1] <= anti_[i]) throw MathError("anti parts must be strictly decreasing");
    }
}

int SuperPartition::star_degree() const {
    int d = sym_.degree();
    for (int p : anti_) d += p;
    return d;
}

Partition SuperPartition::star() const {
    std::vector<int> v = anti_;
    for (int p : sym_.parts()) v.push_back(p);
    std::sort(v.begin(), v.end(), std::greater<int>());
    return Partition(strip_zeros(std::move(v)));
}

Partition SuperPartition::circled() const {
    std::vector<int> v;
    for (int p : anti_) v.push_back(p + 1);
    for (int p : sym_.parts()) v.push_back(p);
    std::sort(v.begin(), v.end(), std::greater<int>());
    return Partition(std::move(v));
}

std::vector<bool> SuperPartition::fermionic_rows() const {
    // Merge (anti+1) and sym by value; on ties the symmetric row goes first,
    // which keeps Lambda* weakly decreasing row by row.
    std::vector<std::pair<int, bool>> rows;  // (circled length, fermionic)
    for (int p : anti_) rows.emplace_back(p + 1, true);
    for (int p : sym_.parts()) rows.emplace_back(p, false);
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return !a.second && b.second;
    });
    std::vector<bool> out;
    for (auto& r : rows) out.push_back(r.second);
    return out;
}

std::vector<bool> SuperPartition::fermionic_cols() const {
    Partition circ = circled();
    int w = circ.part(1);
    std::vector<bool> out(static_cast<size_t>(w) + 1, false);
    for (int p : anti_) out[static_cast<size_t>(p + 1)] = true;
    return out;
}

SuperPartition SuperPartition::from_star_pair(const Partition& star, const Partition& circled) {
    std::vector<int> anti;
    std::vector<int> sym;
    int rows = circled.length();
    for (int i = 1; i <= rows; ++i) {
        int d = circled.part(i) - star.part(i);
        if (d == 1) anti.push_back(star.part(i));
        else if (d == 0) sym.push_back(star.part(i));
        else throw MathError("not a circled/star pair of a superpartition");
    }
    return SuperPartition(std::move(anti), Partition(strip_zeros(std::move(sym))));
}

SuperPartition SuperPartition::from_pair(const PairLabel& p, int m) {
    if (p.lam.length() > m) throw MathError("pair needs fermionic degree >= length of first partition");
    std::vector<int> anti;
    for (int i = 1; i <= m; ++i) anti.push_back(p.lam.part(i) + m - i);
    return SuperPartition(std::move(anti), p.mu);
}

PairLabel SuperPartition::to_pair() const {
    int m = fermionic_degree();
    std::vector<int> lam;
    for (int i = 0; i < m; ++i) lam.push_back(anti_[static_cast<size_t>(i)] - (m - 1 - i));
    for (int i = 0; i < m; ++i)
        if (lam[static_cast<size_t>(i)] < 0) throw MathError("superpartition is not above the staircase");
    return PairLabel(Partition(strip_zeros(std::move(lam))), sym_);
}

SuperPartition SuperPartition::conjugate() const {
    return from_star_pair(star().conjugate(), circled().conjugate());
}

SuperPartition::Stats SuperPartition::stats() const {
    Stats st;
    Partition sp = star();
    Partition cp = circled();
    Partition spc = sp.conjugate();
    auto frows = fermionic_rows();
    auto fcols = fermionic_cols();
    auto row_is_f = [&](int i) { return i >= 1 && i <= static_cast<int>(frows.size()) && frows[static_cast<size_t>(i - 1)]; };
    auto col_is_f = [&](int j) { return j >= 1 && j < static_cast<int>(fcols.size()) && fcols[static_cast<size_t>(j)]; };

    for (int i = 1; i <= sp.length(); ++i) {
        for (int j = 1; j <= sp.part(i); ++j) {
            bool fermionic_box = row_is_f(i) && col_is_f(j);
            if (fermionic_box) st.fermionic_boxes.emplace_back(i, j);
            else st.bosonic_boxes.emplace_back(i, j);
        }
    }
    auto in_boxes = [](const std::vector<std::pair<int, int>>& v, int i, int j) {
        return std::find(v.begin(), v.end(), std::make_pair(i, j)) != v.end();
    };
    for (auto [i, j] : st.bosonic_boxes)
        for (int i2 = 1; i2 < i; ++i2)
            if (sp.has_cell(i2, j) && !in_boxes(st.bosonic_boxes, i2, j)) st.d_B++;
    for (auto [i, j] : st.fermionic_boxes)
        for (int i2 = 1; i2 < i; ++i2)
            if (sp.has_cell(i2, j) && !in_boxes(st.fermionic_boxes, i2, j)) st.d_F++;

    st.n_skew = cp.n_stat() - Partition::staircase(fermionic_degree() + 1).n_stat();
    return st;
}

std::vector<std::pair<SuperPartition, int>> SuperPartition::circle_replacements() const {
    std::vector<std::pair<SuperPartition, int>> out;
    Partition sp = star();
    Partition cp = circled();
    auto frows = fermionic_rows();
    int circles_above = 0;
    for (int i = 1; i <= cp.length(); ++i) {
        if (!frows[static_cast<size_t>(i - 1)]) continue;
        std::vector<int> ns;
        for (int r = 1; r <= cp.length(); ++r) ns.push_back(sp.part(r));
        ns[static_cast<size_t>(i - 1)] = cp.part(i);
        SuperPartition rep = from_star_pair(Partition(strip_zeros(std::move(ns))), cp);
        out.emplace_back(rep, circles_above % 2 == 0 ? 1 : -1);
        ++circles_above;
    }
    return out;
}

bool SuperPartition::operator<(const SuperPartition& o) const {
    if (anti_ != o.anti_) return anti_ < o.anti_;
    return sym_ < o.sym_;
}

std::string SuperPartition::to_string() const {
    std::ostringstream out;
    for (size_t i = 0; i < anti_.size(); ++i) {
        if (i) out << ",";
        out << anti_[i];
    }
    out << ";" << sym_.to_string();
    return out.str();
}

SuperPartition SuperPartition::parse(const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos) throw ParseError("superpartition needs ';': " + text);
    std::string a = text.substr(0, semi);
    std::vector<int> anti;
    if (!a.empty()) {
        std::istringstream in(a);
        std::string tok;
        while (std::getline(in, tok, ',')) anti.push_back(std::stoi(tok));
    }
    return SuperPartition(std::move(anti), Partition::parse(text.substr(semi + 1)));
}

std::vector<SuperPartition> SuperPartition::all(int n, int m) {
    std::vector<SuperPartition> out;
    // Choose strictly decreasing anti with m parts >= 0 summing to k, sym of n-k.
    std::function<void(int, int, int, std::vector<int>&)> gen =
        [&](int remaining_parts, int budget, int maxval, std::vector<int>& cur) {
            if (remaining_parts == 0) {
                if (budget >= 0)
                    for (const auto& s : Partition::all(budget)) out.emplace_back(cur, s);
                return;
            }
            // After choosing v, the smallest strictly decreasing tail is
            // (remaining_parts-2, ..., 1, 0).
            int min_tail = (remaining_parts - 1) * (remaining_parts - 2) / 2;
            for (int v = std::min(maxval, budget - min_tail); v >= remaining_parts - 1; --v) {
                cur.push_back(v);
                gen(remaining_parts - 1, budget - v, v - 1, cur);
                cur.pop_back();
            }
        };
    std::vector<int> cur;
    gen(m, n, n, cur);
    return out;
}

bool super_dominance_leq(const SuperPartition& L, const SuperPartition& O) {
    if (L.fermionic_degree() != O.fermionic_degree()) throw MathError("super dominance needs equal fermionic degrees");
    if (L.star_degree() != O.star_degree()) throw MathError("super dominance needs equal degrees");
    return dominance_leq(L.star(), O.star()) && dominance_leq(L.circled(), O.circled());
}

std::vector<SuperPartition> super_labels_descending(int n, int m) {
    auto labels = SuperPartition::all(n, m);
    std::sort(labels.begin(), labels.end(), [](const SuperPartition& a, const SuperPartition& b) {
        auto ka = std::make_pair(a.star().parts(), a.circled().parts());
        auto kb = std::make_pair(b.star().parts(), b.circled().parts());
        return ka > kb;
    });
    return labels;
}

}  // namespace bmac
