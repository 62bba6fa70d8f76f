#include "sodlab/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "sodlab/parse.hpp"
#include "sodlab/report.hpp"

namespace sodlab {

namespace {

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw ParseError(std::string("bad integer in ") + what + ": '" + item + "'", 0);
        out.push_back(value);
    }
    return out;
}

struct Options {
    int n = 0;
    std::string poly;
    bool ledger = false;
    std::string format = "json";
    std::string d;
    bool projective = false;
    std::string orbits;
};

class Emitter {
public:
    Emitter(std::ostream& out, OutputFormat format) : out_(out), format_(format) {}

    template <typename Report>
    void emit(const Report& report, const LedgerVerdict* verdict = nullptr) {
        if (format_ == OutputFormat::Json) {
            Json j = to_json(report);
            if (verdict) {
                if (j.is_array()) j = Json{{"pieces", j}};
                j["ledger"] = to_json(*verdict);
            }
            out_ << j.dump(2) << "\n";
        } else {
            out_ << to_text(report);
            if (verdict) out_ << to_text(*verdict);
        }
    }

    void failure(const std::string& message) {
        if (format_ == OutputFormat::Json)
            out_ << Json{{"hypothesis_failure", message}}.dump(2) << "\n";
        else
            out_ << "hypothesis failure: " << message << "\n";
    }

private:
    std::ostream& out_;
    OutputFormat format_;
};

int verdict_code(const LedgerVerdict& v, std::ostream& err) {
    if (v.pass) return kExitOk;
    if (!v.strata_errors.empty()) {
        for (const auto& e : v.strata_errors) err << "error: " << e << "\n";
        return kExitUnsupported;
    }
    err << "error: ledger mismatch, pieces " << v.pieces_total << " vs oracle "
        << (v.oracle_total ? std::to_string(*v.oracle_total) : "-") << "\n";
    return kExitHypothesis;
}

void require_n(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidInput, "--n must be at least 1");
}

int cmd_decompose(const Options& o, Emitter& emit, std::ostream& err) {
    require_n(o.n);
    QPoly f = parse_symmetric_input(o.poly, o.n);
    DecompReport report = decompose_invariant_hypersurface(f, o.n);
    if (!o.ledger) {
        emit.emit(report);
        return kExitOk;
    }
    LedgerVerdict v = ledger_check(report);
    emit.emit(report, &v);
    return verdict_code(v, err);
}

int cmd_projective(const Options& o, Emitter& emit, std::ostream& err) {
    require_n(o.n);
    DecompReport report = decompose_projective_space(o.n);
    if (!o.ledger) {
        emit.emit(report);
        return kExitOk;
    }
    LedgerVerdict v = ledger_check(report);
    emit.emit(report, &v);
    return verdict_code(v, err);
}

int cmd_check(const Options& o, Emitter& emit, std::ostream& err) {
    require_n(o.n);
    GenericityReport report = genericity_report(parse_symmetric_input(o.poly, o.n), o.n);
    emit.emit(report);
    if (report.passes()) return kExitOk;
    for (const auto& f : report.failures) err << "hypothesis failure: " << f << "\n";
    return kExitHypothesis;
}

int cmd_cyclic(const Options& o, Emitter& emit, std::ostream& err) {
    std::vector<int> d = parse_int_list(o.d, "--d");
    if (d.empty()) throw Error(ErrorKind::InvalidInput, "--d needs at least one order");
    if (!o.projective) {
        if (!o.poly.empty()) throw Error(ErrorKind::InvalidInput, "--poly requires --projective");
        emit.emit(mu_affine_decomposition(d));
        return kExitOk;
    }
    std::optional<QPoly> f;
    if (!o.poly.empty()) f = parse_poly(o.poly, VarSpec::numbered("x", static_cast<int>(d.size())));
    CyclicProjectiveReport report;
    try {
        report = mu_projective_decomposition(d, f);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::HypothesisFailure) throw;
        emit.failure(e.what());
        err << "error: " << e.what() << "\n";
        return kExitHypothesis;
    }
    if (!o.ledger) {
        emit.emit(report);
        return kExitOk;
    }
    LedgerVerdict v = ledger_check(report, f);
    emit.emit(report, &v);
    return verdict_code(v, err);
}

int cmd_curve(const Options& o, Emitter& emit) {
    emit.emit(curve_decomposition(RamificationDatum::from_orders(parse_int_list(o.orbits, "--orbits"))));
    return kExitOk;
}

}  // namespace

QPoly parse_symmetric_input(const std::string& text, int n) {
    require_n(n);
    std::vector<std::string> names;
    for (const char* prefix : {"x", "e", "p"})
        for (int i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
    auto wide = VarSpec::unit(names);
    QPoly g = parse_poly(text, wide);

    auto xs = VarSpec::numbered("x", n);
    std::vector<std::size_t> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
    std::vector<QPoly> images;
    for (int i = 0; i < n; ++i) images.push_back(QPoly::variable(xs, static_cast<std::size_t>(i)));
    for (int k = 1; k <= n; ++k) images.push_back(elementary_symmetric(xs, all, k));
    for (int k = 1; k <= n; ++k) images.push_back(power_sum(xs, all, k));
    return substitute(g, images);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decompositions of symmetric and cyclic quotient stacks", "sodlab"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    };
    auto* decompose = app.add_subcommand("decompose", "decompose an invariant hypersurface");
    decompose->add_option("--n", o.n)->required();
    decompose->add_option("--poly", o.poly)->required();
    decompose->add_flag("--ledger", o.ledger);
    add_format(decompose);

    auto* projective = app.add_subcommand("projective", "decompose projective space");
    projective->add_option("--n", o.n)->required();
    projective->add_flag("--ledger", o.ledger);
    add_format(projective);

    auto* cyclic = app.add_subcommand("cyclic", "diagonal products of cyclic groups");
    cyclic->add_option("--d", o.d, "orders, e.g. 2,2")->required();
    cyclic->add_flag("--projective", o.projective);
    cyclic->add_option("--poly", o.poly);
    cyclic->add_flag("--ledger", o.ledger);
    add_format(cyclic);

    auto* curve = app.add_subcommand("curve", "orbifold curve with cyclic stabilizers");
    curve->add_option("--orbits", o.orbits, "stabilizer orders, e.g. 3,2,2")->required();
    add_format(curve);

    auto* check = app.add_subcommand("check", "genericity report only");
    check->add_option("--n", o.n)->required();
    check->add_option("--poly", o.poly)->required();
    add_format(check);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }

    Emitter emit(out, o.format == "text" ? OutputFormat::Text : OutputFormat::Json);
    try {
        if (decompose->parsed()) return cmd_decompose(o, emit, err);
        if (projective->parsed()) return cmd_projective(o, emit, err);
        if (cyclic->parsed()) return cmd_cyclic(o, emit, err);
        if (curve->parsed()) return cmd_curve(o, emit);
        return cmd_check(o, emit, err);
    } catch (const HypothesisFailure& e) {
        emit.emit(e.report());
        err << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::ParseError: return kExitParse;
            case ErrorKind::UnsupportedSize:
            case ErrorKind::UnsupportedStratum: return kExitUnsupported;
            case ErrorKind::InternalError: return kExitInternal;
            default: return kExitHypothesis;
        }
    }
}

}  // namespace sodlab
