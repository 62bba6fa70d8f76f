#include "sodlab/report.hpp"

#include <algorithm>
#include <sstream>

namespace sodlab {

namespace {

std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

Json optional_long(const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); }

Json certificate_json(const Certificate& cert) {
    Json list = Json::array();
    for (const auto& img : cert.images) list.push_back(to_string(img));
    return Json{{"map", cert.description}, {"images", list}, {"verified", cert.verified}};
}

Json normal_form_json(const NormalFormData& data) {
    Json j{{"model", data.model}, {"reduced_form", data.reduced_form}, {"steps", data.steps}};
    if (!data.model_weights.empty()) j["model_weights"] = data.model_weights;
    Json certs = Json::array();
    for (const auto& c : data.certificates) certs.push_back(certificate_json(c));
    j["certificates"] = certs;
    j["verified"] = data.verified();
    return j;
}

std::string rank_text(const std::optional<int>& rank) { return rank ? std::to_string(*rank) : "-"; }

}  // namespace

std::string format_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size(), 0);
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            out += cells[c];
            if (c + 1 < cells.size()) out += std::string(width[c] - cells[c].size() + 2, ' ');
        }
        return out + "\n";
    };
    std::string out = line(header);
    for (const auto& row : rows) out += line(row);
    return out;
}

Json to_json(const GenericityReport& report) {
    Json parts = Json::array();
    for (const auto& p : report.partitions) {
        Json pair = p.offending_pair ? Json::array({p.offending_pair->first, p.offending_pair->second}) : Json(nullptr);
        parts.push_back({{"partition", p.partition.parts()},
                         {"restriction_nonzero", p.restriction_nonzero},
                         {"density_ok", p.density_ok},
                         {"offending_pair", pair}});
    }
    return Json{{"n", report.n},
                {"degree", report.degree},
                {"poly", report.poly},
                {"symmetric", report.symmetric},
                {"homogeneous", report.homogeneous},
                {"value_at_ones", report.value_at_ones.get_str()},
                {"smooth", report.smooth},
                {"partitions", parts},
                {"failures", report.failures},
                {"pass", report.passes()}};
}

Json to_json(const DecompReport& report) {
    Json pieces = Json::array();
    for (const auto& p : report.pieces) {
        const auto& c = p.classification;
        Json j{{"partition", p.partition.parts()},
               {"weights", p.weights},
               {"fbar", p.fbar ? Json(to_string(*p.fbar)) : Json(nullptr)},
               {"class", p.label()},
               {"rank", c.rank ? Json(*c.rank) : Json(nullptr)},
               {"kind", to_string(c.kind)}};
        if (c.kind == PieceKind::FinitePoints)
            j["points"] = {{"plain", c.plain_points},
                           {"stacky", c.stacky_points},
                           {"stacky_order", c.stacky_order},
                           {"reduced", c.reduced}};
        if (c.normal_form) j["normal_form"] = normal_form_json(*c.normal_form);
        if (c.elliptic) j["elliptic"] = true;
        if (!c.notes.empty()) j["notes"] = c.notes;
        pieces.push_back(std::move(j));
    }
    Json out{{"n", report.n},
             {"degree", report.degree ? Json(*report.degree) : Json(nullptr)},
             {"poly", report.poly ? Json(*report.poly) : Json(nullptr)},
             {"pieces", pieces},
             {"total_rank", optional_long(report.total_rank)}};
    if (report.genericity) out["genericity"] = to_json(*report.genericity);
    return out;
}

Json to_json(const LedgerVerdict& verdict) {
    auto entries = [](const std::vector<LedgerEntry>& list) {
        Json out = Json::array();
        for (const auto& e : list) out.push_back({{"source", e.source}, {"value", e.value}, {"method", e.method}});
        return out;
    };
    return Json{{"pieces_total", verdict.pieces_total},
                {"oracle_total", optional_long(verdict.oracle_total)},
                {"pass", verdict.pass},
                {"strata_errors", verdict.strata_errors},
                {"piece_entries", entries(verdict.piece_entries)},
                {"oracle_entries", entries(verdict.oracle_entries)}};
}

Json to_json(const std::vector<CyclicPiece>& pieces) {
    Json out = Json::array();
    for (const auto& p : pieces)
        out.push_back({{"element", p.element.exponents},
                       {"fixed_dim", p.fixed_dim},
                       {"weights", p.weights},
                       {"character", p.character},
                       {"order_index", p.order_index},
                       {"label", p.label}});
    return out;
}

Json to_json(const CyclicProjectiveReport& report) {
    Json pieces = Json::array();
    for (const auto& p : report.pieces)
        pieces.push_back({{"element", p.piece.element.exponents},
                          {"fixed_dim", p.piece.fixed_dim},
                          {"weights", p.piece.weights},
                          {"fbar", p.fbar ? Json(to_string(*p.fbar)) : Json(nullptr)},
                          {"class", p.label},
                          {"rank", p.rank ? Json(*p.rank) : Json(nullptr)}});
    Json out{{"d", report.d},
             {"poly", report.poly ? Json(*report.poly) : Json(nullptr)},
             {"pieces", pieces},
             {"total_rank", optional_long(report.total_rank)}};
    if (!report.notes.empty()) out["notes"] = report.notes;
    return out;
}

Json to_json(const CurveDecomposition& decomposition) {
    Json pieces = Json::array();
    for (const auto& p : decomposition.pieces)
        pieces.push_back({{"kind", p.kind == CurvePiece::Kind::Coarse ? "coarse" : "exceptional"},
                          {"block", p.block},
                          {"power", p.power},
                          {"label", p.label}});
    return Json{{"pieces", pieces}, {"exceptional_count", decomposition.exceptional_count}};
}

std::string to_text(const GenericityReport& report) {
    std::ostringstream out;
    out << "genericity of f = " << report.poly << " (n = " << report.n << ", degree " << report.degree << ")\n";
    out << "symmetric: " << (report.symmetric ? "yes" : "no") << "\n";
    out << "homogeneous: " << (report.homogeneous ? "yes" : "no") << "\n";
    if (report.symmetric && report.homogeneous) {
        out << "f(1,...,1) = " << report.value_at_ones.get_str() << "\n";
        out << "smooth: " << (report.smooth ? "yes" : "no") << "\n";
        std::vector<std::vector<std::string>> rows;
        for (const auto& p : report.partitions)
            rows.push_back({p.partition.to_string(), p.restriction_nonzero ? "yes" : "no", p.density_ok ? "yes" : "no",
                            p.offending_pair ? p.offending_pair->first + "-" + p.offending_pair->second : "-"});
        out << format_table({"partition", "nonzero", "dense", "divisor"}, rows);
    }
    for (const auto& f : report.failures) out << "FAILED " << f << "\n";
    out << (report.passes() ? "pass" : "fail") << "\n";
    return out.str();
}

std::string to_text(const DecompReport& report) {
    std::ostringstream out;
    if (report.poly)
        out << "f = " << *report.poly << ", n = " << report.n << ", degree " << *report.degree << "\n";
    else
        out << "P^" << report.n - 1 << " / S_" << report.n << "\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : report.pieces) {
        std::vector<std::string> row{p.partition.to_string(), join_ints(p.weights), p.label(),
                                     rank_text(p.classification.rank)};
        if (report.poly) row.push_back(p.fbar ? to_string(*p.fbar) : "");
        rows.push_back(std::move(row));
    }
    std::vector<std::string> header{"partition", "weights", "class", "rank"};
    if (report.poly) header.push_back("fbar");
    out << format_table(header, rows);
    for (const auto& p : report.pieces) {
        const auto& c = p.classification;
        if (c.normal_form)
            for (const auto& cert : c.normal_form->certificates)
                out << p.partition.to_string() << " certificate " << cert.description << ": "
                    << (cert.verified ? "verified" : "NOT verified") << "\n";
        for (const auto& note : c.notes) out << p.partition.to_string() << " note: " << note << "\n";
    }
    out << "total rank: " << (report.total_rank ? std::to_string(*report.total_rank) : "-") << "\n";
    return out.str();
}

std::string to_text(const LedgerVerdict& verdict) {
    std::ostringstream out;
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : verdict.piece_entries) rows.push_back({e.source, std::to_string(e.value), e.method});
    for (const auto& e : verdict.oracle_entries) rows.push_back({e.source, std::to_string(e.value), e.method});
    out << format_table({"source", "value", "method"}, rows);
    for (const auto& e : verdict.strata_errors) out << "stratum error: " << e << "\n";
    out << "ledger: pieces " << verdict.pieces_total << ", oracle "
        << (verdict.oracle_total ? std::to_string(*verdict.oracle_total) : "-") << ", "
        << (verdict.pass ? "pass" : "FAIL") << "\n";
    return out.str();
}

std::string to_text(const std::vector<CyclicPiece>& pieces) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : pieces)
        rows.push_back({std::to_string(p.order_index), "(" + join_ints(p.element.exponents) + ")",
                        std::to_string(p.fixed_dim), join_ints(p.weights), p.label});
    return format_table({"index", "g", "n_g", "d_g", "piece"}, rows);
}

std::string to_text(const CyclicProjectiveReport& report) {
    std::ostringstream out;
    out << "mu_(" << join_ints(report.d) << ")";
    if (report.poly) out << ", f = " << *report.poly;
    out << "\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : report.pieces)
        rows.push_back({"(" + join_ints(p.piece.element.exponents) + ")", join_ints(p.piece.weights), p.label,
                        rank_text(p.rank)});
    out << format_table({"g", "d_g", "class", "rank"}, rows);
    for (const auto& note : report.notes) out << "note: " << note << "\n";
    out << "total rank: " << (report.total_rank ? std::to_string(*report.total_rank) : "-") << "\n";
    return out.str();
}

std::string to_text(const CurveDecomposition& decomposition) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : decomposition.pieces)
        rows.push_back({p.kind == CurvePiece::Kind::Coarse ? "coarse" : "exceptional",
                        p.block < 0 ? "-" : std::to_string(p.block + 1), p.label});
    return format_table({"kind", "block", "label"}, rows) +
           "exceptional objects: " + std::to_string(decomposition.exceptional_count) + "\n";
}

}  // namespace sodlab
