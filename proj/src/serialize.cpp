#include "qtk/serialize.hpp"

#include <fstream>

namespace qtk {

Json poly_to_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json exps = Json::array();
        for (int x : e) exps.push_back(x);
        terms.push_back(Json::array({c.str(), exps}));
    }
    return terms;
}

MultiPoly poly_from_json(const Json& j) {
    MultiPoly out;
    for (const Json& term : j) {
        BigInt c(term.at(0).get<std::string>());
        const Json& exps = term.at(1);
        ExpVec e{0, 0, 0, 0};
        for (std::size_t i = 0; i < 4 && i < exps.size(); ++i)
            e[i] = exps.at(i).get<int>();
        out += MultiPoly::monomial(e, c);
    }
    return out;
}

Json table_to_json(const QtKostkaTable& table) {
    Json entries = Json::object();
    // partitions_of order keeps the document stable
    for (const Partition& lambda : partitions_of(table.mu.size())) {
        auto it = table.entries.find(lambda);
        if (it != table.entries.end())
            entries[lambda.to_string()] = poly_to_json(it->second);
    }
    return entries;
}

QtKostkaTable table_from_json(const Partition& mu, const Json& j) {
    QtKostkaTable table;
    table.mu = mu;
    for (const auto& [key, value] : j.items())
        table.entries.emplace(Partition::parse(key), poly_from_json(value));
    return table;
}

Json report_to_json(const CspReport& report) {
    Json records = Json::array();
    for (const CspRecord& r : report.records) {
        Json rec = Json::object();
        rec["element"] = r.element;
        rec["count"] = r.count;
        rec["eval"] = r.eval.str();
        rec["match"] = r.match;
        records.push_back(rec);
    }
    Json out = Json::object();
    out["kind"] = kind_name(report.kind);
    out["params"] = report.params;
    out["records"] = records;
    out["all_match"] = report.all_match;
    return out;
}

Json hilbert_to_json(const BigradedHilbert& h) {
    Json slices = Json::array();
    for (const auto& [de, dim] : h.dims)
        slices.push_back(Json::array({de.first, de.second, dim}));
    Json out = Json::object();
    out["slices"] = slices;
    out["total"] = h.total();
    return out;
}

std::vector<QtKostkaTable> load_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return {};
    Json doc;
    try {
        in >> doc;
    } catch (const Json::exception&) {
        return {};
    }
    if (!doc.is_object() || doc.value("format_version", "") != kCacheFormatVersion)
        return {};
    std::vector<QtKostkaTable> out;
    if (!doc.contains("entries")) return out;
    try {
        for (const auto& [key, value] : doc.at("entries").items())
            out.push_back(table_from_json(Partition::parse(key), value));
    } catch (const std::exception&) {
        return {};
    }
    return out;
}

void save_cache(const std::string& path, const std::vector<QtKostkaTable>& tables) {
    Json entries = Json::object();
    std::map<Partition, const QtKostkaTable*> sorted;
    for (const QtKostkaTable& t : tables) sorted.emplace(t.mu, &t);
    for (const auto& [mu, table] : sorted)
        entries[mu.to_string()] = table_to_json(*table);
    Json doc = Json::object();
    doc["format_version"] = kCacheFormatVersion;
    doc["entries"] = entries;
    std::ofstream out(path);
    out << doc.dump(2) << "\n";
}

}  // namespace qtk
