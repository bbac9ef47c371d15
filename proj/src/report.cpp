#include "xiv/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace xiv {

IdentityReport IdentityReport::make(std::string id, cplx lhs, cplx rhs,
                                    std::map<std::string, double> params,
                                    std::string note, bool asserted) {
    IdentityReport r;
    r.id = std::move(id);
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_residual = std::abs(lhs - rhs);
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    r.rel_residual = scale > 0.0 ? r.abs_residual / scale : 0.0;
    r.params = std::move(params);
    r.note = std::move(note);
    r.asserted = asserted;
    return r;
}

namespace {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json cplx_to_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

cplx cplx_from_json(const json& j) {
    return {j.at("re").get<double>(), j.at("im").get<double>()};
}

json identity_to_json(const IdentityReport& r) {
    json j;
    j["id"] = r.id;
    j["lhs"] = cplx_to_json(r.lhs);
    j["rhs"] = cplx_to_json(r.rhs);
    j["abs_residual"] = r.abs_residual;
    j["rel_residual"] = r.rel_residual;
    j["params"] = r.params;
    j["note"] = r.note;
    j["asserted"] = r.asserted;
    return j;
}

IdentityReport identity_from_json(const json& j) {
    IdentityReport r;
    r.id = j.at("id").get<std::string>();
    r.lhs = cplx_from_json(j.at("lhs"));
    r.rhs = cplx_from_json(j.at("rhs"));
    r.abs_residual = j.at("abs_residual").get<double>();
    r.rel_residual = j.at("rel_residual").get<double>();
    r.params = j.at("params").get<std::map<std::string, double>>();
    r.note = j.at("note").get<std::string>();
    r.asserted = j.at("asserted").get<bool>();
    return r;
}

json zero_to_json(const ZeroRecord& r) {
    json j;
    j["n"] = r.n;
    j["tau"] = r.tau;
    j["bracket_width"] = r.bracket_width;
    j["criterion_residual"] = r.criterion_residual;
    j["criterion_residual_one_term"] = r.criterion_residual_one_term;
    j["tau_asymptotic"] = r.tau_asymptotic;
    j["asymptotic_error"] = r.asymptotic_error;
    return j;
}

ZeroRecord zero_from_json(const json& j) {
    ZeroRecord r;
    r.n = j.at("n").get<int>();
    r.tau = j.at("tau").get<double>();
    r.bracket_width = j.at("bracket_width").get<double>();
    r.criterion_residual = j.at("criterion_residual").get<double>();
    r.criterion_residual_one_term = j.at("criterion_residual_one_term").get<double>();
    r.tau_asymptotic = j.at("tau_asymptotic").get<double>();
    r.asymptotic_error = j.at("asymptotic_error").get<double>();
    return r;
}

json scan_to_json(const StripScanCell& c) {
    json j;
    j["sigma"] = c.sigma;
    j["tau"] = c.tau;
    j["residual_system"] = c.residual_system;
    j["residual_sum_form"] = c.residual_sum_form;
    j["residual_diff_form"] = c.residual_diff_form;
    return j;
}

json conjecture_to_json(const ConjectureCell& c) {
    return json{{"s", c.s}, {"t", c.t}, {"value", c.value}};
}

// RFC 4180: quote fields containing comma, quote, or newline
std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string params_to_string(const std::map<std::string, double>& params) {
    std::string s;
    for (const auto& [k, v] : params) {
        if (!s.empty())
            s += "; ";
        s += k + "=" + fmt17(v);
    }
    return s;
}

std::string emit_csv(const ReportDocument& doc) {
    std::ostringstream os;
    if (!doc.identities.empty()) {
        os << "id,lhs_re,lhs_im,rhs_re,rhs_im,abs_residual,rel_residual,asserted,params,note\n";
        for (const auto& r : doc.identities) {
            os << csv_escape(r.id) << ',' << fmt17(r.lhs.real()) << ','
               << fmt17(r.lhs.imag()) << ',' << fmt17(r.rhs.real()) << ','
               << fmt17(r.rhs.imag()) << ',' << fmt17(r.abs_residual) << ','
               << fmt17(r.rel_residual) << ',' << (r.asserted ? "true" : "false")
               << ',' << csv_escape(params_to_string(r.params)) << ','
               << csv_escape(r.note) << '\n';
        }
        os << '\n';
    }
    if (!doc.zeros.empty()) {
        os << "n,tau,bracket_width,criterion_residual,criterion_residual_one_term,"
              "tau_asymptotic,asymptotic_error\n";
        for (const auto& r : doc.zeros) {
            os << r.n << ',' << fmt17(r.tau) << ',' << fmt17(r.bracket_width) << ','
               << fmt17(r.criterion_residual) << ','
               << fmt17(r.criterion_residual_one_term) << ','
               << fmt17(r.tau_asymptotic) << ',' << fmt17(r.asymptotic_error)
               << '\n';
        }
        os << '\n';
    }
    if (!doc.scans.empty()) {
        os << "sigma,tau,residual_system,residual_sum_form,residual_diff_form\n";
        for (const auto& c : doc.scans)
            os << fmt17(c.sigma) << ',' << fmt17(c.tau) << ','
               << fmt17(c.residual_system) << ',' << fmt17(c.residual_sum_form)
               << ',' << fmt17(c.residual_diff_form) << '\n';
        os << '\n';
    }
    if (!doc.conjecture.empty()) {
        os << "s,t,value\n";
        for (const auto& c : doc.conjecture)
            os << fmt17(c.s) << ',' << fmt17(c.t) << ',' << fmt17(c.value) << '\n';
        os << '\n';
    }
    if (!doc.findings.empty()) {
        os << "finding\n";
        for (const auto& f : doc.findings)
            os << csv_escape(f) << '\n';
    }
    return os.str();
}

std::string emit_text(const ReportDocument& doc) {
    std::ostringstream os;
    if (!doc.generated_at.empty())
        os << "generated: " << doc.generated_at << '\n';
    if (!doc.config.empty()) {
        os << "config:";
        for (const auto& [k, v] : doc.config)
            os << ' ' << k << '=' << fmt17(v);
        os << '\n';
    }
    if (!doc.identities.empty()) {
        os << "\nidentities (" << doc.identities.size() << "):\n";
        char buf[512];
        for (const auto& r : doc.identities) {
            std::snprintf(buf, sizeof buf, "  %-34s residual %10.3e  %s%s\n",
                          r.id.c_str(), r.abs_residual,
                          r.asserted ? "asserted" : "reported",
                          r.params.empty()
                              ? ""
                              : ("  [" + params_to_string(r.params) + "]").c_str());
            os << buf;
        }
    }
    if (!doc.zeros.empty()) {
        os << "\nzeros (" << doc.zeros.size() << "):\n";
        char buf[256];
        os << "    n          tau        bracket    criterion     one-term   "
              "asymptotic      error\n";
        for (const auto& r : doc.zeros) {
            std::snprintf(buf, sizeof buf,
                          "  %3d %15.9f  %9.2e  %11.3e  %11.3e  %11.6f  %9.2e\n",
                          r.n, r.tau, r.bracket_width, r.criterion_residual,
                          r.criterion_residual_one_term, r.tau_asymptotic,
                          r.asymptotic_error);
            os << buf;
        }
    }
    if (!doc.scans.empty()) {
        double min_sys = HUGE_VAL;
        const StripScanCell* argmin = nullptr;
        for (const auto& c : doc.scans)
            if (c.residual_system < min_sys) {
                min_sys = c.residual_system;
                argmin = &c;
            }
        os << "\nstrip scan: " << doc.scans.size() << " cells, min joint residual "
           << fmt17(min_sys);
        if (argmin)
            os << " at sigma=" << fmt17(argmin->sigma)
               << " tau=" << fmt17(argmin->tau);
        os << '\n';
    }
    if (!doc.conjecture.empty()) {
        double mn = HUGE_VAL;
        const ConjectureCell* arg = nullptr;
        for (const auto& c : doc.conjecture)
            if (std::abs(c.value) < mn) {
                mn = std::abs(c.value);
                arg = &c;
            }
        bool pos = true, neg = true;
        for (const auto& c : doc.conjecture) {
            pos = pos && c.value > 0.0;
            neg = neg && c.value < 0.0;
        }
        os << "conjecture scan: " << doc.conjecture.size() << " cells, min |value| "
           << fmt17(mn);
        if (arg)
            os << " at s=" << fmt17(arg->s) << " t=" << fmt17(arg->t);
        os << ", sign " << (pos ? "uniformly positive" : neg ? "uniformly negative" : "MIXED")
           << '\n';
    }
    if (!doc.findings.empty()) {
        os << "\nfindings:\n";
        for (const auto& f : doc.findings)
            os << "  - " << f << '\n';
    }
    return os.str();
}

} // namespace

std::optional<OutputFormat> parse_format(const std::string& name) {
    if (name == "json")
        return OutputFormat::json;
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "text")
        return OutputFormat::text;
    return std::nullopt;
}

std::string emit_report(const ReportDocument& doc, OutputFormat format) {
    if (format == OutputFormat::csv)
        return emit_csv(doc);
    if (format == OutputFormat::text)
        return emit_text(doc);

    json j;
    j["artifact_version"] = 1;
    j["generated_at"] = doc.generated_at;
    j["config"] = doc.config;
    j["identities"] = json::array();
    for (const auto& r : doc.identities)
        j["identities"].push_back(identity_to_json(r));
    j["zeros"] = json::array();
    for (const auto& r : doc.zeros)
        j["zeros"].push_back(zero_to_json(r));
    j["scans"] = json::array();
    for (const auto& c : doc.scans)
        j["scans"].push_back(scan_to_json(c));
    j["conjecture"] = json::array();
    for (const auto& c : doc.conjecture)
        j["conjecture"].push_back(conjecture_to_json(c));
    j["findings"] = doc.findings;
    return j.dump(2) + "\n";
}

std::string zero_records_to_json(const std::vector<ZeroRecord>& records) {
    json j;
    j["schema_version"] = kZeroCacheSchemaVersion;
    j["record_count"] = records.size();
    j["records"] = json::array();
    for (const auto& r : records)
        j["records"].push_back(zero_to_json(r));
    return j.dump(2) + "\n";
}

std::vector<ZeroRecord> zero_records_from_json(const std::string& text) {
    const json j = json::parse(text);
    if (j.at("schema_version").get<int>() != kZeroCacheSchemaVersion)
        throw std::runtime_error("zero cache: unsupported schema version");
    const auto& arr = j.at("records");
    if (j.at("record_count").get<size_t>() != arr.size())
        throw std::runtime_error("zero cache: record count mismatch");
    std::vector<ZeroRecord> out;
    out.reserve(arr.size());
    int expect = 1;
    for (const auto& e : arr) {
        out.push_back(zero_from_json(e));
        if (out.back().n != expect++)
            throw std::runtime_error("zero cache: records not consecutive from 1");
    }
    return out;
}

std::string identities_to_json(const std::vector<IdentityReport>& reports) {
    json j = json::array();
    for (const auto& r : reports)
        j.push_back(identity_to_json(r));
    return j.dump(2) + "\n";
}

std::vector<IdentityReport> identities_from_json(const std::string& text) {
    const json j = json::parse(text);
    std::vector<IdentityReport> out;
    out.reserve(j.size());
    for (const auto& e : j)
        out.push_back(identity_from_json(e));
    return out;
}

void save_zero_cache(const std::string& path, const std::vector<ZeroRecord>& records) {
    write_text_file(path, zero_records_to_json(records));
}

std::optional<std::vector<ZeroRecord>> load_zero_cache(const std::string& path,
                                                       std::string* warning) {
    auto text = read_text_file(path);
    if (!text)
        return std::nullopt;
    try {
        return zero_records_from_json(*text);
    } catch (const std::exception& e) {
        if (warning)
            *warning = std::string("zero cache rejected (") + e.what() +
                       "); recomputing";
        return std::nullopt;
    }
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream os(path, std::ios::binary); // binary: LF line endings everywhere
    if (!os)
        throw std::runtime_error("cannot open for writing: " + path);
    os << contents;
    if (!os)
        throw std::runtime_error("write failed: " + path);
}

std::optional<std::string> read_text_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        return std::nullopt;
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

} // namespace xiv
