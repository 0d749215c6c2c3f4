#ifndef CRALG_VARIABLE_TABLE_HPP
#define CRALG_VARIABLE_TABLE_HPP

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cralg {

enum class VarKind {
    Holomorphic,      // z_i
    Conjugate,        // zb_i
    MapSymbol,        // F_i, Fb_i
    DerivativeSymbol, // D_ij = dF_i/dz_j and its conjugate
    Parameter         // t, tau, c_i, theta, ... (fixed by formal conjugation)
};

// Ordered alphabet of formal variables.  A variable may be paired with a
// conjugate partner; formal conjugation swaps exponents between partners.
// Tables are immutable once shared between polynomials.
class VariableTable {
public:
    int add(const std::string& name, VarKind kind) {
        if (index_.count(name))
            throw std::invalid_argument("VariableTable: duplicate variable '" + name + "'");
        int idx = static_cast<int>(entries_.size());
        entries_.push_back({name, kind, -1});
        index_[name] = idx;
        return idx;
    }

    // Declares a <-> b as a conjugate pair.
    void pair(int a, int b) {
        check_index(a);
        check_index(b);
        if (entries_[a].partner != -1 || entries_[b].partner != -1)
            throw std::invalid_argument("VariableTable: variable already paired");
        entries_[a].partner = b;
        entries_[b].partner = a;
    }
    void pair(const std::string& a, const std::string& b) { pair(index_of(a), index_of(b)); }

    int size() const { return static_cast<int>(entries_.size()); }
    const std::string& name(int i) const { check_index(i); return entries_[i].name; }
    VarKind kind(int i) const { check_index(i); return entries_[i].kind; }
    int partner(int i) const { check_index(i); return entries_[i].partner; }
    bool has_partner(int i) const { return partner(i) >= 0; }

    int index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end())
            throw std::invalid_argument("VariableTable: unknown variable '" + name + "'");
        return it->second;
    }
    bool contains(const std::string& name) const { return index_.count(name) != 0; }

    friend bool operator==(const VariableTable& a, const VariableTable& b) {
        return a.entries_ == b.entries_;
    }

private:
    struct Entry {
        std::string name;
        VarKind kind;
        int partner;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    void check_index(int i) const {
        if (i < 0 || i >= size()) throw std::out_of_range("VariableTable: bad index");
    }

    std::vector<Entry> entries_;
    std::map<std::string, int> index_;
};

using TablePtr = std::shared_ptr<const VariableTable>;

inline bool same_table(const TablePtr& a, const TablePtr& b) {
    return a == b || (a && b && *a == *b);
}

// Standard alphabet z1..zn, zb1..zbn with pairing; the building block for
// defining systems.
inline TablePtr make_zzb_table(int n) {
    auto t = std::make_shared<VariableTable>();
    for (int i = 1; i <= n; ++i) t->add("z" + std::to_string(i), VarKind::Holomorphic);
    for (int i = 1; i <= n; ++i) t->add("zb" + std::to_string(i), VarKind::Conjugate);
    for (int i = 0; i < n; ++i) t->pair(i, n + i);
    return t;
}

}  // namespace cralg

#endif
