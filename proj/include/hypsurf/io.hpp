#pragma once

// Serialization: the FNSurface JSON document (schema in docs/fnsurface.md)
// and deterministic CSV/JSON writers for spectra, identity reports, ratio
// tables and bound reports. All floating-point output uses "%.17g", so a
// fixed input yields byte-identical output.

#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypsurf/arcmetric.hpp"
#include "hypsurf/common.hpp"
#include "hypsurf/holonomy.hpp"
#include "hypsurf/identities.hpp"
#include "hypsurf/starcheck.hpp"

namespace hypsurf::io {

using nlohmann::json;

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// FNSurface JSON.

inline holonomy::FNSurface fn_from_json(const json& j) {
    holonomy::FNSurface fn;
    try {
        if (!j.contains("pants") || !j["pants"].is_array())
            throw ConfigError("FNSurface JSON: missing 'pants' array");
        for (const auto& p : j["pants"]) {
            if (!p.is_array() || p.size() != 3)
                throw ConfigError("FNSurface JSON: each pants entry needs 3 lengths");
            fn.pants.push_back({{p[0].get<double>(), p[1].get<double>(), p[2].get<double>()}});
        }
        const auto gluings = j.value("gluings", json::array());
        const auto twists = j.value("twists", json::array());
        if (!twists.empty() && twists.size() != gluings.size())
            throw ConfigError("FNSurface JSON: 'twists' must parallel 'gluings'");
        for (std::size_t i = 0; i < gluings.size(); ++i) {
            const auto& g = gluings[i];
            if (!g.is_array() || g.size() != 4)
                throw ConfigError("FNSurface JSON: each gluing is [p1,s1,p2,s2]");
            fn.gluings.push_back({g[0].get<int>(), g[1].get<int>(), g[2].get<int>(),
                                  g[3].get<int>(),
                                  twists.empty() ? 0.0 : twists[i].get<double>()});
        }
        for (const auto& b : j.value("boundaries", json::array())) {
            if (!b.is_array() || b.size() != 3)
                throw ConfigError("FNSurface JSON: each boundary is [p,s,\"label\"]");
            fn.boundaries.push_back(
                {b[0].get<int>(), b[1].get<int>(), b[2].get<std::string>()});
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("FNSurface JSON: ") + e.what());
    }
    fn.validate();
    return fn;
}

inline json fn_to_json(const holonomy::FNSurface& fn) {
    json j;
    j["pants"] = json::array();
    for (const auto& p : fn.pants)
        j["pants"].push_back({p.lengths[0], p.lengths[1], p.lengths[2]});
    j["gluings"] = json::array();
    j["twists"] = json::array();
    for (const auto& g : fn.gluings) {
        j["gluings"].push_back({g.p1, g.s1, g.p2, g.s2});
        j["twists"].push_back(g.twist);
    }
    j["boundaries"] = json::array();
    for (const auto& b : fn.boundaries)
        j["boundaries"].push_back({b.p, b.s, b.label});
    return j;
}

inline holonomy::FNSurface load_fn(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad JSON in ") + path + ": " + e.what());
    }
    return fn_from_json(j);
}

// ---------------------------------------------------------------------------
// Report writers.

enum class Format { Csv, Json };

inline json metadata(double truncation, double tolerance) {
    return json{{"version", version}, {"truncation", truncation}, {"tolerance", tolerance}};
}

inline void write_spectrum(std::ostream& os, Format fmt,
                           const std::vector<identities::OrthoTerm>& terms,
                           const holonomy::SurfaceGroup& g, double truncation) {
    if (fmt == Format::Csv) {
        os << "length,source,target,word\n";
        for (const auto& t : terms)
            os << format_double(t.length) << ',' << t.source << ',' << t.target << ','
               << g.word_string(t.word) << '\n';
        return;
    }
    json rows = json::array();
    for (const auto& t : terms)
        rows.push_back({{"length", t.length},
                        {"source", t.source},
                        {"target", t.target},
                        {"word", g.word_string(t.word)}});
    json j{{"metadata", metadata(truncation, 0.0)}, {"rows", rows}};
    os << j.dump(2) << '\n';
}

inline void write_identity_report(std::ostream& os, Format fmt,
                                  const identities::IdentityReport& rep, double tolerance) {
    if (fmt == Format::Csv) {
        os << "term_index,term_value,partial_sum,residual\n";
        double prev = 0.0;
        for (std::size_t i = 0; i < rep.partial_sums.size(); ++i) {
            const double s = rep.partial_sums[i];
            os << i << ',' << format_double(s - prev) << ',' << format_double(s) << ','
               << format_double(rep.target - s) << '\n';
            prev = s;
        }
        return;
    }
    json rows = json::array();
    double prev = 0.0;
    for (std::size_t i = 0; i < rep.partial_sums.size(); ++i) {
        const double s = rep.partial_sums[i];
        rows.push_back({{"term_index", i},
                        {"term_value", s - prev},
                        {"partial_sum", s},
                        {"residual", rep.target - s}});
        prev = s;
    }
    json j{{"metadata", metadata(rep.truncation, tolerance)},
           {"target", rep.target},
           {"terms_used", rep.terms_used},
           {"residual", rep.residual},
           {"cusp_targets_skipped", rep.cusp_targets_skipped},
           {"rows", rows}};
    os << j.dump(2) << '\n';
}

inline const char* kind_name(arcmetric::CurveKind k) {
    switch (k) {
    case arcmetric::CurveKind::Boundary: return "boundary";
    case arcmetric::CurveKind::InteriorClosed: return "interior-closed";
    default: return "arc";
    }
}

inline void write_ratio_report(std::ostream& os, Format fmt, const arcmetric::RatioReport& rep) {
    if (fmt == Format::Csv) {
        os << "label,kind,len_x,len_y,log_ratio\n";
        for (const auto& e : rep.table)
            os << e.label << ',' << kind_name(e.kind) << ',' << format_double(e.len_x) << ','
               << format_double(e.len_y) << ',' << format_double(e.log_ratio) << '\n';
        return;
    }
    json rows = json::array();
    for (const auto& e : rep.table)
        rows.push_back({{"label", e.label},
                        {"kind", kind_name(e.kind)},
                        {"len_x", e.len_x},
                        {"len_y", e.len_y},
                        {"log_ratio", e.log_ratio}});
    json j{{"metadata", metadata(0.0, 0.0)},
           {"sup_log_ratio", rep.sup_log_ratio},
           {"witness", rep.witness.label},
           {"family_size", rep.family_size},
           {"rows", rows}};
    os << j.dump(2) << '\n';
}

inline void write_bound_report(std::ostream& os, Format fmt, const starcheck::BoundReport& rep) {
    if (fmt == Format::Csv) {
        os << "n";
        for (const auto& c : rep.columns)
            os << ',' << c;
        os << ",running_sup\n";
        for (std::size_t i = 0; i < rep.rows.size(); ++i) {
            os << rep.index[i];
            for (double v : rep.rows[i])
                os << ',' << format_double(v);
            os << ',' << format_double(rep.running_sup[i]) << '\n';
        }
        return;
    }
    json rows = json::array();
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        json row{{"n", rep.index[i]}, {"running_sup", rep.running_sup[i]}};
        for (std::size_t k = 0; k < rep.columns.size(); ++k)
            row[rep.columns[k]] = rep.rows[i][k];
        rows.push_back(std::move(row));
    }
    json j{{"metadata", metadata(static_cast<double>(rep.rows.size()), 0.0)},
           {"sup", rep.sup},
           {"claimed_bound", rep.claimed_bound},
           {"pass", rep.pass},
           {"note", rep.note},
           {"rows", rows}};
    os << j.dump(2) << '\n';
}

} // namespace hypsurf::io
