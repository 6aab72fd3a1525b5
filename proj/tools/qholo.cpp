// command line front end: colored Jones values, cyclotomic coefficients,
// summand sums, recurrence search, and verification of stored recurrences

#include "CLI11.hpp"
#include "json.hpp"
#include "qholo/cyclotomic.hpp"
#include "qholo/guess.hpp"
#include "qholo/jones.hpp"
#include "qholo/telescope.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace qholo;
using nlohmann::json;

namespace {

// exit codes beyond success/error: a search that ran out of its caps is
// distinct from one that certified emptiness of the whole schedule
constexpr int EXIT_CAPS_EXHAUSTED = 2;
constexpr int EXIT_PROVEN_NONE = 3;
constexpr int EXIT_VERIFY_FAILED = 4;

struct RangeOpt {
    int lo = 1, hi = 8;
};

RangeOpt parse_range(const std::string& text) {
    auto pos = text.find("..");
    if (pos == std::string::npos)
        throw CLI::ValidationError("--n", "expected a..b");
    RangeOpt r;
    try {
        r.lo = std::stoi(text.substr(0, pos));
        r.hi = std::stoi(text.substr(pos + 2));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--n", "expected a..b");
    }
    if (r.hi < r.lo) throw CLI::ValidationError("--n", "empty range");
    return r;
}

BraidWord resolve_knot(const std::string& name) {
    if (name == "unknot") return parse_braid("[1]");
    if (name == "trefoil") return parse_braid("[1,1,1]");
    if (name == "figure8") return parse_braid("[1,-2,1,-2]");
    return parse_braid(name);
}

Normalization resolve_norm(const std::string& name) {
    if (name == "framed") return Normalization::framed;
    if (name == "zero-framed") return Normalization::zero_framed;
    if (name == "long") return Normalization::long_knot;
    throw CLI::ValidationError("--normalization", "unknown: " + name);
}

// shared options for commands that consume a sequence of exact values
struct SeqOpts {
    std::string knot, family;
    std::string norm = "zero-framed";
    bool mirror = false;

    void attach(CLI::App* cmd, bool need_source = true) {
        auto* k = cmd->add_option("--knot", knot, "preset name or braid word");
        auto* f = cmd->add_option("--family", family, "summand family name");
        k->excludes(f);
        if (need_source) (void)0;  // one of the two is checked at run time
        cmd->add_option("--normalization", norm,
                        "framed, zero-framed, or long (braid input only)");
        cmd->add_flag("--mirror", mirror, "substitute q -> 1/q (braid input only)");
    }

    Sequence values(int lo, int hi) const {
        if (!family.empty()) {
            HyperTerm t = summand_family(family);
            Sequence f;
            for (int n = lo; n <= hi; ++n) f[n] = multisum(t, n);
            return f;
        }
        if (knot.empty())
            throw CLI::ValidationError("--knot", "need --knot or --family");
        BraidWord b = resolve_knot(knot);
        auto vals = jones_range(b, lo, hi, resolve_norm(norm), mirror);
        Sequence f;
        for (int n = lo; n <= hi; ++n) f[n] = RatFunc(vals[n - lo]);
        return f;
    }

    std::string source_name() const { return family.empty() ? knot : family; }
};

json recurrence_json(const Recurrence& r, int verified_lo, int verified_hi) {
    json out;
    out["order"] = r.order;
    json coeffs = json::array();
    for (auto& c : r.coeffs) coeffs.push_back(coeff_str(c));
    out["coeffs"] = coeffs;
    out["inhomogeneous"] = nullptr;
    out["verified_range"] = {verified_lo, verified_hi};
    return out;
}

void print_recurrence_report(const Recurrence& r, int lo, int hi,
                             const std::string& format) {
    if (format == "json") {
        std::cout << recurrence_json(r, lo, hi).dump(2) << "\n";
        return;
    }
    std::cout << "order: " << r.order << "\n"
              << "operator: " << r.str() << "\n"
              << "provenance: " << r.provenance << "\n"
              << "inhomogeneous: " << (r.homogeneous() ? "no" : "yes") << "\n"
              << "verified on: " << lo << ".." << hi << "\n";
    if (r.homogeneous()) {
        InitialBound b = initial_bound(r);
        std::cout << "initial conditions: " << b.bound << "\n";
    }
}

int cmd_jones(const SeqOpts& src, const RangeOpt& range,
              const std::string& format) {
    BraidWord b = resolve_knot(src.knot);
    auto vals =
        jones_range(b, range.lo, range.hi, resolve_norm(src.norm), src.mirror);
    if (format == "json") {
        json out;
        out["knot"] = src.knot;
        out["normalization"] = src.norm;
        json values = json::array();
        for (int n = range.lo; n <= range.hi; ++n)
            values.push_back({n, vals[n - range.lo].str()});
        out["values"] = values;
        std::cout << out.dump(2) << "\n";
    } else {
        for (int n = range.lo; n <= range.hi; ++n)
            std::cout << n << "\t" << vals[n - range.lo].str() << "\n";
    }
    return 0;
}

int cmd_cyclotomic(const SeqOpts& src, const RangeOpt& range,
                   const std::string& format) {
    CycloSeq C;
    if (!src.family.empty()) {
        if (src.family.rfind("twist:", 0) != 0)
            throw CLI::ValidationError("--family",
                                       "cyclotomic families are twist:p");
        C = twist_cyclotomic(std::stoi(src.family.substr(6)), range.hi);
    } else {
        BraidWord b = resolve_knot(src.knot);
        auto vals = jones_range(b, 1, range.hi, Normalization::zero_framed,
                                src.mirror);
        std::map<int, LaurentPoly> J;
        for (int n = 1; n <= range.hi; ++n) J[n] = vals[n - 1];
        C = jones_to_cyclotomic(J, range.hi);
    }
    auto integral = integrality_check(C);
    if (format == "json") {
        json out;
        out["source"] = src.source_name();
        json values = json::array();
        for (int k = std::max(range.lo, 1); k <= range.hi; ++k)
            values.push_back({k, C.values.at(k).str(), integral.at(k)});
        out["values"] = values;
        std::cout << out.dump(2) << "\n";
    } else {
        for (int k = std::max(range.lo, 1); k <= range.hi; ++k)
            std::cout << k << "\t" << C.values.at(k).str() << "\t"
                      << (integral.at(k) ? "integral" : "non-integral") << "\n";
    }
    return 0;
}

int cmd_multisum(const SeqOpts& src, const RangeOpt& range,
                 const std::string& format) {
    if (src.family.empty())
        throw CLI::ValidationError("--family", "multisum needs --family");
    Sequence f = src.values(range.lo, range.hi);
    if (format == "json") {
        json out;
        out["family"] = src.family;
        json values = json::array();
        for (int n = range.lo; n <= range.hi; ++n)
            values.push_back({n, f.at(n).str()});
        out["values"] = values;
        std::cout << out.dump(2) << "\n";
    } else {
        for (int n = range.lo; n <= range.hi; ++n)
            std::cout << n << "\t" << f.at(n).str() << "\n";
    }
    return 0;
}

int cmd_recursion(const SeqOpts& src, const RangeOpt& range, int max_order,
                  int max_degree, const std::string& format) {
    Sequence f = src.values(range.lo, range.hi);
    auto rec = guess_recurrence(f, max_order, max_degree);
    if (!rec) {
        std::cerr << "no recurrence found within caps (order <= " << max_order
                  << ", degree <= " << max_degree << ")\n";
        return EXIT_CAPS_EXHAUSTED;
    }
    print_recurrence_report(*rec, range.lo, range.hi - rec->order, format);
    return 0;
}

int cmd_telescope(const SeqOpts& src, const RangeOpt& range, int max_order,
                  int max_degree, const std::string& format) {
    if (src.family.empty())
        throw CLI::ValidationError("--family", "telescope needs --family");
    HyperTerm t = summand_family(src.family);
    int lo = range.lo;
    try {
        multisum(t, lo);
    } catch (const std::runtime_error&) {
        ++lo;  // summation support may start past the requested base
    }
    Sequence G;
    for (int n = lo; n <= range.hi + max_order; ++n) G[n] = multisum(t, n);
    bool all_proven = true;
    for (int I = 1; I <= max_order; ++I)
        for (int J = 1; J <= I + 1; ++J)
            for (int D = 0; D <= max_degree; ++D) {
                bool proven = false;
                auto cert = kfree_search(t, I, J, D, &proven);
                if (!cert) {
                    all_proven = all_proven && proven;
                    continue;
                }
                Recurrence rec;
                try {
                    rec = telescope(t, *cert);
                } catch (const std::domain_error&) {
                    continue;
                }
                if (!verify_recurrence(rec, G, lo, range.hi)) continue;
                if (format == "text")
                    std::cout << "cell: order " << I << ", window " << J
                              << ", degree " << D << "\n"
                              << "certificate: "
                              << cert->r.str({"q", "Q", "Qk"}) << "\n";
                print_recurrence_report(rec, lo, range.hi, format);
                return 0;
            }
    if (all_proven) {
        std::cerr << "no recurrence of order <= " << max_order
                  << " exists with degree <= " << max_degree
                  << " (certified); increase the order cap\n";
        return EXIT_PROVEN_NONE;
    }
    std::cerr << "no recurrence found within caps (order <= " << max_order
              << ", degree <= " << max_degree << ")\n";
    return EXIT_CAPS_EXHAUSTED;
}

int cmd_verify(const SeqOpts& src, const RangeOpt& range,
               const std::string& file, const std::string& format) {
    std::ifstream in(file);
    if (!in.good()) throw CLI::ValidationError("--recurrence", "cannot read " + file);
    json doc = json::parse(in);
    Recurrence r;
    r.order = doc.at("order").get<int>();
    for (auto& c : doc.at("coeffs"))
        r.coeffs.push_back(coeff_parse(c.get<std::string>()));
    if (doc.contains("inhomogeneous") && !doc.at("inhomogeneous").is_null())
        throw CLI::ValidationError("--recurrence",
                                   "only homogeneous recurrences are loadable");
    r.provenance = "paper-input";
    Sequence f = src.values(range.lo, range.hi + r.order);
    bool ok = verify_recurrence(r, f, range.lo, range.hi);
    if (format == "json") {
        json out;
        out["verified"] = ok;
        out["range"] = {range.lo, range.hi};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (ok ? "verified" : "FAILED") << " on " << range.lo << ".."
                  << range.hi << "\n";
    }
    return ok ? 0 : EXIT_VERIFY_FAILED;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"colored Jones functions, cyclotomic expansions, and "
                 "q-recursions of knots"};
    app.require_subcommand(1);

    std::string range_text = "1..8", format = "text";
    int max_order = 4, max_degree = 8;
    std::string rec_file;

    SeqOpts src;
    auto add_common = [&](CLI::App* cmd, bool with_caps = false) {
        src.attach(cmd);
        cmd->add_option("--n", range_text, "inclusive range a..b");
        cmd->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        if (with_caps) {
            cmd->add_option("--max-order", max_order, "recurrence order cap");
            cmd->add_option("--max-degree", max_degree, "coefficient degree cap");
        }
    };

    auto* jones_cmd = app.add_subcommand("jones", "colored Jones values");
    add_common(jones_cmd);
    auto* cyc_cmd = app.add_subcommand("cyclotomic", "cyclotomic coefficients");
    add_common(cyc_cmd);
    auto* ms_cmd = app.add_subcommand("multisum", "summand family values");
    add_common(ms_cmd);
    auto* rec_cmd =
        app.add_subcommand("recursion", "guess a recurrence from exact values");
    add_common(rec_cmd, true);
    auto* tel_cmd = app.add_subcommand(
        "telescope", "creative telescoping on a summand family");
    add_common(tel_cmd, true);
    auto* ver_cmd =
        app.add_subcommand("verify", "check a stored recurrence against values");
    add_common(ver_cmd);
    ver_cmd->add_option("--recurrence", rec_file, "recurrence JSON file")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        RangeOpt range = parse_range(range_text);
        if (jones_cmd->parsed()) return cmd_jones(src, range, format);
        if (cyc_cmd->parsed()) return cmd_cyclotomic(src, range, format);
        if (ms_cmd->parsed()) return cmd_multisum(src, range, format);
        if (rec_cmd->parsed())
            return cmd_recursion(src, range, max_order, max_degree, format);
        if (tel_cmd->parsed())
            return cmd_telescope(src, range, max_order, max_degree, format);
        if (ver_cmd->parsed()) return cmd_verify(src, range, rec_file, format);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
