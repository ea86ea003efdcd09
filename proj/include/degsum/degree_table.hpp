// Ingestion of bundled character-degree tables.
//
// File format (line oriented UTF-8, '#' starts a comment):
//   label <string>
//   order <decimal>
//   provenance <string>
//   <degree> <multiplicity>
//   ...
// Loading validates the column-orthogonality mass check
// sum(degree^2 * multiplicity) == order and that every degree divides the
// order; a violation aborts the load (corrupted reference data).

#pragma once

#include <degsum/bigint.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace degsum {

struct DegreeTable {
    std::string label;
    Nat order;
    std::string provenance;
    std::vector<std::pair<Nat, Nat>> entries;  // (degree, multiplicity)

    Nat sigma() const {
        Nat s;
        for (const auto& [d, m] : entries) s = s + d * m;
        return s;
    }
    Nat character_count() const {
        Nat s;
        for (const auto& [d, m] : entries) s = s + m;
        return s;
    }
};

inline DegreeTable parse_degree_table(std::istream& in) {
    DegreeTable t;
    std::string line;
    int header = 0;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "label") {
            std::getline(ls >> std::ws, t.label);
            ++header;
        } else if (first == "order") {
            std::string v;
            ls >> v;
            t.order = Nat::from_decimal(v);
            ++header;
        } else if (first == "provenance") {
            std::getline(ls >> std::ws, t.provenance);
            ++header;
        } else {
            std::string second;
            if (!(ls >> second)) throw std::runtime_error("degree table: bad entry line: " + line);
            t.entries.emplace_back(Nat::from_decimal(first), Nat::from_decimal(second));
        }
    }
    if (header < 3 || t.entries.empty())
        throw std::runtime_error("degree table: missing header or entries");

    Nat mass;
    for (const auto& [d, m] : t.entries) {
        if (d.is_zero() || m.is_zero())
            throw std::runtime_error("degree table '" + t.label + "': zero degree or multiplicity");
        if (!(t.order % d).is_zero())
            throw std::runtime_error("degree table '" + t.label + "': degree does not divide the order");
        mass = mass + d * d * m;
    }
    if (mass != t.order)
        throw std::runtime_error("degree table '" + t.label + "': mass check failed, sum d^2 = " +
                                 mass.to_decimal() + " vs order " + t.order.to_decimal());
    return t;
}

inline DegreeTable ingest_degree_table(const std::string& bytes) {
    std::istringstream in(bytes);
    return parse_degree_table(in);
}

inline Nat sigma_from_table(const DegreeTable& t) { return t.sigma(); }

// All tables in a data directory, indexed by label.
class TableCatalog {
public:
    explicit TableCatalog(const std::filesystem::path& dir) {
        if (!std::filesystem::exists(dir)) return;
        for (const auto& e : std::filesystem::directory_iterator(dir)) {
            if (e.path().extension() != ".tbl") continue;
            std::ifstream in(e.path());
            DegreeTable t = parse_degree_table(in);
            tables_.emplace(t.label, std::move(t));
        }
    }

    const DegreeTable* find(const std::string& label) const {
        auto it = tables_.find(label);
        return it == tables_.end() ? nullptr : &it->second;
    }
    std::size_t size() const { return tables_.size(); }
    const std::map<std::string, DegreeTable>& all() const { return tables_; }

private:
    std::map<std::string, DegreeTable> tables_;
};

} // namespace degsum
