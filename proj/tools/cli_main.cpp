// Batch front end: evaluate functions, verify identities, emit sweep tables.

#include "besselint/functions.hpp"
#include "besselint/gamma.hpp"
#include "besselint/identities.hpp"
#include "besselint/polys.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using besselint::ConstraintError;
using besselint::FnEvalResult;
using besselint::IdentityReport;
using besselint::Params;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitNumericFail = 1;
constexpr int kExitUsage = 2;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_real(const std::string& s) {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size())
        throw std::invalid_argument("not a number: '" + s + "'");
    return v;
}

// "k1=v1,k2=v2,..." -> map
Params parse_kv(const std::string& text) {
    Params out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("expected key=value, got '" + item + "'");
        out[item.substr(0, eq)] = parse_real(item.substr(eq + 1));
    }
    return out;
}

struct Sweep {
    std::string name;
    std::vector<double> values;
};

// "k=a..b[:step]" -> inclusive arithmetic progression
Sweep parse_range(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0)
        throw std::invalid_argument("expected k=a..b[:step], got '" + text + "'");
    Sweep s;
    s.name = text.substr(0, eq);
    std::string rest = text.substr(eq + 1);
    double step = 1.0;
    if (const auto colon = rest.find(':'); colon != std::string::npos) {
        step = parse_real(rest.substr(colon + 1));
        rest = rest.substr(0, colon);
    }
    const auto dots = rest.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("expected a..b in range '" + text + "'");
    const double a = parse_real(rest.substr(0, dots));
    const double b = parse_real(rest.substr(dots + 2));
    if (step == 0.0)
        throw std::invalid_argument("range step must be nonzero");
    if ((b - a) * step < 0.0)
        throw std::invalid_argument("range direction does not match step sign");
    const double slack = std::fabs(step) * 1e-9;
    for (double v = a; (step > 0.0) ? (v <= b + slack) : (v >= b - slack); v += step)
        s.values.push_back(v);
    if (s.values.empty())
        throw std::invalid_argument("range '" + text + "' is empty");
    return s;
}

Sweep parse_list(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0)
        throw std::invalid_argument("expected k=v1,v2,..., got '" + text + "'");
    Sweep s;
    s.name = text.substr(0, eq);
    std::istringstream in(text.substr(eq + 1));
    std::string item;
    while (std::getline(in, item, ','))
        s.values.push_back(parse_real(item));
    if (s.values.empty())
        throw std::invalid_argument("list '" + text + "' is empty");
    return s;
}

// ---- eval ----------------------------------------------------------------

int run_eval(const std::string& fn, const Params& args) {
    auto need = [&args, &fn](const char* key) {
        const auto it = args.find(key);
        if (it == args.end())
            throw std::invalid_argument(fn + " requires argument '" + std::string(key) + "'");
        return it->second;
    };
    auto count_arg = [&need](const char* key) {
        const double v = need(key);
        if (v < 0.0 || v != std::floor(v))
            throw std::invalid_argument(std::string(key) + " must be a non-negative integer");
        return static_cast<std::size_t>(v);
    };

    FnEvalResult r;
    if (fn == "bessel_j") {
        r = besselint::bessel_j(need("nu"), need("x"));
    } else if (fn == "bessel_j_scaled") {
        r = besselint::bessel_j_scaled(need("nu"), need("u"));
    } else if (fn == "sph_bessel") {
        r = besselint::sph_bessel(count_arg("n"), need("x"));
    } else if (fn == "f_n_combo") {
        r = besselint::f_n_combo(count_arg("n"), need("x"), need("a"), need("b"));
    } else if (fn == "struve_h") {
        r = besselint::struve_h(need("nu"), need("x"));
    } else if (fn == "wright") {
        r = besselint::wright_w(need("alpha"), need("beta"), need("x"));
    } else if (fn == "mittag_leffler") {
        r = besselint::mittag_leffler(need("alpha"), need("beta"), need("x"));
    } else if (fn == "hermite2") {
        const std::size_t n = count_arg("n");
        r.value = besselint::hermite2(n, need("x"), need("y"));
        r.terms_used = n / 2 + 1;
    } else if (fn == "bpoly") {
        const std::size_t n = count_arg("n");
        r.value = besselint::bpoly(n, need("x"), need("y"), need("nu"));
        r.terms_used = n / 2 + 1;
    } else if (fn == "gamma") {
        r.value = besselint::gamma(need("x"));
        r.terms_used = 1;
    } else if (fn == "recip_gamma1p") {
        r.value = besselint::recip_gamma1p(need("mu"));
        r.terms_used = 1;
    } else {
        throw std::invalid_argument("unknown function '" + fn + "'");
    }

    std::cout << "value = " << fmt17(r.value) << "\n"
              << "terms_used = " << r.terms_used << "\n"
              << "truncation_flag = " << (r.truncation_flag ? "true" : "false") << "\n";
    return kExitPass;
}

// ---- verify / table ------------------------------------------------------

json report_json(const IdentityReport& r, const std::string& status) {
    json row;
    for (const auto& [k, v] : r.params)
        row[k] = v;
    row["closed_value"] = r.closed_value;
    row["oracle_value"] = r.oracle.value;
    row["abs_err"] = r.abs_err;
    row["rel_err"] = r.rel_err;
    row["status"] = status;
    row["evaluations"] = r.oracle.evaluations;
    if (!r.note.empty())
        row["note"] = r.note;
    return row;
}

int run_verify(const std::string& id, const Params& params, double tol_abs,
               double tol_rel, const std::string& format, std::ostream& out) {
    const IdentityReport r = besselint::verify(id, params, tol_abs, tol_rel);
    const std::string status = r.passed ? "pass" : "fail";
    if (format == "json") {
        out << report_json(r, status).dump(2) << "\n";
    } else {
        out << "identity = " << r.id << "\n";
        for (const auto& [k, v] : r.params)
            out << k << " = " << fmt17(v) << "\n";
        out << "closed_value = " << fmt17(r.closed_value) << "\n"
            << "oracle_value = " << fmt17(r.oracle.value) << "\n"
            << "abs_err = " << fmt17(r.abs_err) << "\n"
            << "rel_err = " << fmt17(r.rel_err) << "\n"
            << "tolerance = " << fmt17(r.tolerance_used) << "\n"
            << "evaluations = " << r.oracle.evaluations << "\n"
            << "status = " << status << "\n";
        if (!r.note.empty())
            out << "note = " << r.note << "\n";
    }
    return r.passed ? kExitPass : kExitNumericFail;
}

struct TableRow {
    Params params;
    std::optional<IdentityReport> report; // empty for skipped rows
    std::string status;
};

int run_table(const std::string& id, const std::vector<Sweep>& sweeps,
              const Params& fixed, double tol_abs, double tol_rel,
              const std::string& format, std::ostream& out) {
    const auto& spec = besselint::find_identity(id);

    std::vector<TableRow> rows;
    std::vector<std::size_t> idx(sweeps.size(), 0);
    bool done = sweeps.empty();
    while (!done) {
        Params p = fixed;
        for (std::size_t i = 0; i < sweeps.size(); ++i)
            p[sweeps[i].name] = sweeps[i].values[idx[i]];
        TableRow row;
        row.params = p;
        try {
            IdentityReport r = besselint::verify(id, p, tol_abs, tol_rel);
            row.status = r.passed ? "pass" : "fail";
            row.report = std::move(r);
        } catch (const ConstraintError&) {
            row.status = "skipped";
        }
        rows.push_back(std::move(row));
        // odometer: last sweep varies fastest, rows stay in input order
        std::size_t i = sweeps.size();
        while (true) {
            if (i == 0) {
                done = true;
                break;
            }
            --i;
            if (++idx[i] < sweeps[i].values.size())
                break;
            idx[i] = 0;
        }
    }

    // column order: identity parameter order, then result fields
    const std::vector<std::string>& names = spec.param_names;
    if (format == "json") {
        json arr = json::array();
        for (const TableRow& row : rows) {
            if (row.report) {
                arr.push_back(report_json(*row.report, row.status));
            } else {
                json j;
                for (const auto& [k, v] : row.params)
                    j[k] = v;
                j["closed_value"] = nullptr;
                j["oracle_value"] = nullptr;
                j["abs_err"] = nullptr;
                j["rel_err"] = nullptr;
                j["status"] = row.status;
                j["evaluations"] = 0;
                arr.push_back(j);
            }
        }
        out << arr.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < names.size(); ++i)
            out << names[i] << ",";
        out << "closed_value,oracle_value,abs_err,rel_err,status,evaluations\n";
        for (const TableRow& row : rows) {
            for (const std::string& n : names) {
                const auto it = row.params.find(n);
                out << (it != row.params.end() ? fmt17(it->second) : "") << ",";
            }
            if (row.report) {
                const IdentityReport& r = *row.report;
                out << fmt17(r.closed_value) << "," << fmt17(r.oracle.value) << ","
                    << fmt17(r.abs_err) << "," << fmt17(r.rel_err) << "," << row.status
                    << "," << r.oracle.evaluations << "\n";
            } else {
                out << ",,,," << row.status << ",0\n";
            }
        }
    }

    for (const TableRow& row : rows)
        if (row.status == "fail")
            return kExitNumericFail;
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed-form special-function integrals with quadrature cross-checks"};
    app.require_subcommand(1);

    std::string fn, identity, params_text, fixed_text, format = "csv", out_path;
    std::vector<std::string> range_texts, list_texts;
    double tol_abs = 1e-6, tol_rel = 1e-6;

    CLI::App* eval = app.add_subcommand("eval", "evaluate a function at named arguments");
    eval->add_option("--fn", fn, "function name")->required();
    eval->add_option("--params,--args", params_text, "k=v,... arguments")->required();

    CLI::App* verify = app.add_subcommand("verify", "check one identity against its oracle");
    verify->add_option("--identity", identity, "identity id")->required();
    verify->add_option("--params", params_text, "k=v,... parameters")->required();
    verify->add_option("--tol-abs", tol_abs, "absolute tolerance");
    verify->add_option("--tol-rel", tol_rel, "relative tolerance");
    verify->add_option("--format", format, "csv|json (verify prints text unless json)");
    verify->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* table = app.add_subcommand("table", "parameter-sweep table for an identity");
    table->add_option("--identity", identity, "identity id")->required();
    table->add_option("--range", range_texts, "k=a..b[:step], repeatable");
    table->add_option("--list", list_texts, "k=v1,v2,..., repeatable");
    table->add_option("--fixed", fixed_text, "k=v,... held constant");
    table->add_option("--tol-abs", tol_abs, "absolute tolerance");
    table->add_option("--tol-rel", tol_rel, "relative tolerance");
    table->add_option("--format", format, "csv|json");
    table->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        std::ofstream file;
        std::ostream* out = &std::cout;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) {
                std::cerr << "error: cannot open output path '" << out_path << "'\n";
                return kExitUsage;
            }
            out = &file;
        }
        if (format != "csv" && format != "json") {
            std::cerr << "error: --format must be csv or json\n";
            return kExitUsage;
        }

        if (eval->parsed())
            return run_eval(fn, parse_kv(params_text));

        if (verify->parsed())
            return run_verify(identity, parse_kv(params_text), tol_abs, tol_rel,
                              format, *out);

        // table
        std::vector<Sweep> sweeps;
        for (const std::string& t : range_texts)
            sweeps.push_back(parse_range(t));
        for (const std::string& t : list_texts)
            sweeps.push_back(parse_list(t));
        if (sweeps.empty()) {
            std::cerr << "error: table requires at least one --range or --list\n";
            return kExitUsage;
        }
        return run_table(identity, sweeps, fixed_text.empty() ? Params{} : parse_kv(fixed_text),
                         tol_abs, tol_rel, format, *out);
    } catch (const ConstraintError& e) {
        std::cerr << "constraint violation: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
