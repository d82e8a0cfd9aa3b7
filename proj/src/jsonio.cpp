#include "toricmle/jsonio.hpp"

#include <cinttypes>
#include <cstdio>

namespace toricmle {

using nlohmann::json;

namespace {

void escape_string(const std::string& s, std::string& out) {
    out += '"';
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if ((unsigned char)ch < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
}

void dump_rec(const json& j, std::string& out, int indent, int depth) {
    auto newline = [&](int d) {
        if (indent < 0) return;
        out += '\n';
        out.append((size_t)indent * d, ' ');
    };
    switch (j.type()) {
        case json::value_t::null: out += "null"; break;
        case json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
        case json::value_t::number_integer: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%" PRId64, (int64_t)j.get<int64_t>());
            out += buf;
            break;
        }
        case json::value_t::number_unsigned: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%" PRIu64, (uint64_t)j.get<uint64_t>());
            out += buf;
            break;
        }
        case json::value_t::number_float: {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
            out += buf;
            break;
        }
        case json::value_t::string: escape_string(j.get<std::string>(), out); break;
        case json::value_t::array: {
            if (j.empty()) { out += "[]"; break; }
            out += '[';
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                dump_rec(v, out, indent, depth + 1);
            }
            newline(depth);
            out += ']';
            break;
        }
        case json::value_t::object: {
            if (j.empty()) { out += "{}"; break; }
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                escape_string(it.key(), out);
                out += indent < 0 ? ":" : ": ";
                dump_rec(it.value(), out, indent, depth + 1);
            }
            newline(depth);
            out += '}';
            break;
        }
        default: out += "null";
    }
}

}  // namespace

std::string canonical_dump(const json& j, int indent) {
    std::string out;
    dump_rec(j, out, indent, 0);
    return out;
}

json to_json(const CatalogEntry& e) {
    json verts = json::array();
    for (const LatticePoint& p : e.polygon.vertices)
        verts.push_back(json::array({p.x, p.y}));
    json sing = json::array();
    for (int k : singularity_profile(e.polygon).entries)
        sing.push_back("A" + std::to_string(k));
    json obj{{"label", e.polygon_label},
             {"model", e.model_label},
             {"vertices", verts},
             {"degree", (long)boundary_lattice_points(e.polygon).size()},
             {"singularities", sing},
             {"ideal", e.ideal}};
    if (e.known_ml_degree >= 0) obj["ml_degree"] = e.known_ml_degree;
    if (!e.note.empty()) obj["note"] = e.note;
    return obj;
}

json catalog_json() {
    json arr = json::array();
    for (const CatalogEntry& e : catalog()) arr.push_back(to_json(e));
    return json{{"version", 1}, {"polygons", arr}};
}

json to_json(const ToricModel& model) {
    json rows = json::array();
    for (const auto& r : model.matrix()) rows.push_back(r);
    json bins = json::array();
    for (const Binomial& b : kernel_binomials(model)) bins.push_back(b.str());
    return json{{"label", model.label()}, {"matrix", rows}, {"binomials", bins}};
}

json to_json(const MLEResult& r) {
    return json{{"p_hat", r.p_hat.p},
                {"theta_hat", r.theta_hat.theta},
                {"log_likelihood", r.log_lik},
                {"moment_residual", r.moment_residual},
                {"variety_residual", r.variety_residual},
                {"method", r.method == MleMethod::birch_newton ? "birch_newton"
                                                               : "closed_form"},
                {"iterations", r.iterations}};
}

json to_json(const PolynomialDiscrepancy& d) {
    return json{{"model", d.model},
                {"coordinate", d.coordinate},
                {"published_poly", d.published_poly},
                {"derived_poly", d.derived_poly},
                {"witness_phat", d.witness_phat},
                {"published_residual", d.published_residual},
                {"derived_residual", d.derived_residual},
                {"published_ok", d.published_ok}};
}

json to_json(const ClosedFormResult& r) {
    json obj = to_json(r.mle);
    obj["coordinate"] = r.coordinate;
    obj["poly_source"] = r.poly_source;
    json coeffs = json::array();
    for (const Rat& c : r.polynomial.c) coeffs.push_back(to_string(c));
    obj["polynomial"] = coeffs;
    obj["theta_from_published"] = r.theta_from_published;
    json disc = json::array();
    for (const auto& d : r.discrepancies) disc.push_back(to_json(d));
    obj["discrepancies"] = disc;
    return obj;
}

json to_json(const MLDegreeReport& r) {
    json trials = json::array();
    for (const MLDegreeTrial& t : r.trials) {
        json sols = json::array();
        for (const auto& s : t.solutions)
            sols.push_back(json::array({s[0], s[1], s[2], s[3]}));
        json tr{{"u", t.u},
                {"raw_theta_solutions", t.raw_theta_solutions},
                {"filtered_count", t.filtered_count},
                {"eliminant_degree", t.eliminant_degree},
                {"solutions", sols},
                {"removed_factors", t.removed_factors},
                {"discarded", t.discarded}};
        if (t.discarded) tr["discard_reason"] = t.discard_reason;
        trials.push_back(tr);
    }
    return json{{"model", r.model_label},
                {"count", r.count},
                {"fiber_degree", r.fiber_degree},
                {"consistent", r.consistent},
                {"seed", r.seed},
                {"trials", trials}};
}

} // namespace toricmle
