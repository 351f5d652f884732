#include "cli.hpp"

#include "qaw/awcore.hpp"
#include "qaw/families.hpp"
#include "qaw/inductor.hpp"
#include "qaw/numeric.hpp"
#include "qaw/parse.hpp"
#include "qaw/report.hpp"
#include "qaw/structure.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace qaw::cli {

namespace {

constexpr int kDefaultNmax = 40;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int default_nmax() {
    const char* env = std::getenv("QAW_NMAX_DEFAULT");
    if (env == nullptr || *env == '\0') {
        return kDefaultNmax;
    }
    int value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
        throw UsageError("QAW_NMAX_DEFAULT must be a nonnegative integer, got '" + std::string(text) + "'");
    }
    return value;
}

Format parse_format(const std::string& name) { return name == "json" ? Format::json : Format::text; }

class Emitter {
public:
    Emitter(std::ostream& out, Format format) : out_(out), format_(format) {}

    void emit(const Record& record) {
        out_ << render_record(record, format_) << '\n';
        all_pass_ = all_pass_ && record_passes(record);
    }
    [[nodiscard]] int exit_code() const { return all_pass_ ? 0 : 1; }

private:
    std::ostream& out_;
    Format format_;
    bool all_pass_ = true;
};

int verify_proposition_cmd(int nmax, int jobs, Format format, std::ostream& out) {
    Emitter emitter(out, format);
    const auto results = verify_proposition(nmax, jobs);
    std::vector<StructureReport> dq_reports;
    for (const auto& r : results) {
        emitter.emit(to_record(r.sq));
        emitter.emit(to_record(r.dq));
        dq_reports.push_back(r.dq);
    }
    if (nmax >= 2) {
        emitter.emit(to_record(summarize_bandwidth(dq_reports)));
        emitter.emit(to_record(IdentityCertificate{"c4_factorization", c4_factorization_residual(),
                                                   "c_{n,4} = C_{n-1} C_n q^(-(2n-1)/4) (q^(1/2) - q^(-1/2))/2"},
                               "bandwidth.c4"));
    }
    return emitter.exit_code();
}

int verify_proof_cmd(const std::vector<int>& k_samples, Format format, std::ostream& out) {
    Emitter emitter(out, format);
    for (const auto& c : certify_sq_step()) {
        emitter.emit(to_record(c));
    }
    for (const auto& c : certify_dq_step()) {
        emitter.emit(to_record(c));
    }
    for (const auto& c : certify_base_case()) {
        emitter.emit(to_record(c, "proof.base"));
    }
    for (const auto& c : instantiation_coherence(k_samples)) {
        emitter.emit(to_record(c, "proof.coherence"));
    }
    return emitter.exit_code();
}

int verify_oracle_cmd(int nmax, Format format, std::ostream& out) {
    Emitter emitter(out, format);
    const std::pair<std::string, FamilyParams> sets[] = {
        {"1,-1,t|t^2", counterexample_params()},
        {"t,t^2,t^3|t^4", generic_params()},
    };
    for (const auto& [label, params] : sets) {
        for (const auto& row : oracle_agreement(params, nmax)) {
            Record r;
            r["check"] = "oracle";
            r["params"] = label;
            r["n"] = row.n;
            r["status"] = row.equal ? "pass" : "fail";
            emitter.emit(r);
        }
    }
    return emitter.exit_code();
}

std::string caret_message(const std::string& text, const ParseError& e) {
    std::ostringstream os;
    os << "error: " << e.what() << "\n  " << text << "\n  " << std::string(e.position(), ' ') << "^";
    return os.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of the Askey-Wilson structure relations of the "
                 "dual q-Hahn family H_n(x; 1, -1, q^(1/4) | q^(1/2))",
                 "qaw"};
    app.require_subcommand(1);

    std::string format_name = "text";
    int nmax = -1;
    int jobs = 1;
    std::string k_samples_text = "2,3,5,8";
    std::vector<double> q_samples{0.3, 0.7};
    std::vector<double> x_samples{1.1, 1.5, 2.0, 3.0};
    std::string poly_text;
    int n = 0;
    std::optional<int> n_ctx;
    bool latex = false;
    double q0 = 0.5;
    double x0 = 0.0;

    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "text"}));
    };

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->require_subcommand(1);
    auto* v_prop = verify->add_subcommand("proposition", "Exact per-n check of both structure relations");
    v_prop->add_option("--n-max", nmax, "Largest index (default 40 or $QAW_NMAX_DEFAULT)")->check(CLI::NonNegativeNumber);
    v_prop->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    add_format(v_prop);
    auto* v_proof = verify->add_subcommand("proof", "Symbolic certificates for the induction step");
    v_proof->add_option("--k-samples", k_samples_text, "Comma-separated k for instantiation coherence");
    add_format(v_proof);
    auto* v_num = verify->add_subcommand("numeric", "Floating-point lattice cross-check");
    v_num->add_option("--n-max", nmax, "Largest index (default 15)")->check(CLI::NonNegativeNumber);
    v_num->add_option("--q", q_samples, "q samples in (0,1)")->delimiter(',');
    v_num->add_option("--x", x_samples, "x samples with |x| > 1")->delimiter(',');
    add_format(v_num);
    auto* v_oracle = verify->add_subcommand("oracle", "Recurrence vs 4phi3 construction");
    v_oracle->add_option("--n-max", nmax, "Largest degree (default 8)")->check(CLI::NonNegativeNumber);
    add_format(v_oracle);

    auto* expand = app.add_subcommand("expand", "Expand a polynomial in the counterexample basis");
    expand->add_option("--degree-poly", poly_text, "Polynomial in x over t, u")->required();
    expand->add_option("--n", n_ctx, "Index substituted for u = q^(n/2)")->check(CLI::NonNegativeNumber);
    add_format(expand);

    auto* show = app.add_subcommand("show", "Print P_n");
    show->add_option("--n", n, "Index")->required()->check(CLI::NonNegativeNumber);
    show->add_flag("--latex", latex, "LaTeX output");

    auto* eval = app.add_subcommand("eval", "Float value of P_n(x) at q");
    eval->add_option("--n", n, "Index")->required()->check(CLI::NonNegativeNumber);
    eval->add_option("--q", q0, "q in (0,1)")->required();
    eval->add_option("--x", x0, "x")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const Format format = parse_format(format_name);
        if (v_prop->parsed()) {
            return verify_proposition_cmd(nmax < 0 ? default_nmax() : nmax, jobs, format, out);
        }
        if (v_proof->parsed()) {
            std::vector<int> ks;
            std::stringstream ss(k_samples_text);
            for (std::string item; std::getline(ss, item, ',');) {
                int k = 0;
                const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), k);
                if (ec != std::errc() || ptr != item.data() + item.size()) {
                    throw UsageError("--k-samples expects comma-separated integers, got '" + item + "'");
                }
                ks.push_back(k);
            }
            return verify_proof_cmd(ks, format, out);
        }
        if (v_num->parsed()) {
            NumericConfig cfg;
            cfg.q_samples = q_samples;
            cfg.x_samples = x_samples;
            Emitter emitter(out, format);
            emitter.emit(to_record(numeric_crosscheck(cfg, nmax < 0 ? 15 : nmax)));
            return emitter.exit_code();
        }
        if (v_oracle->parsed()) {
            return verify_oracle_cmd(nmax < 0 ? 8 : nmax, format, out);
        }
        if (expand->parsed()) {
            XPoly f;
            try {
                f = XPoly::parse(poly_text);
            } catch (const ParseError& e) {
                err << caret_message(poly_text, e) << '\n';
                return 2;
            }
            if (f.mentions_u()) {
                if (!n_ctx) {
                    throw UsageError("polynomial mentions u; pass --n to fix q^(n/2)");
                }
                f = f.instantiate_n(*n_ctx);
            }
            const auto coeffs = expand_in_basis(f, counterexample_family());
            Emitter emitter(out, format);
            for (std::size_t k = 0; k < coeffs.size(); ++k) {
                Record r;
                r["check"] = "expand";
                r["k"] = k;
                r["status"] = "pass";
                r["coefficient"] = coeffs[k].to_string();
                emitter.emit(r);
            }
            return emitter.exit_code();
        }
        if (show->parsed()) {
            const OPSFamily fam = counterexample_family();
            const XPoly& p = fam.poly(n);
            out << (latex ? p.to_latex() : p.to_string()) << '\n';
            return 0;
        }
        if (eval->parsed()) {
            if (!(q0 > 0.0 && q0 < 1.0)) {
                throw ConfigError("--q must lie in (0, 1)");
            }
            const OPSFamily fam = counterexample_family();
            const double value = eval_poly(fam.poly(n), q0, std::nullopt, x0);
            out << std::setprecision(17) << value << '\n';
            return 0;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace qaw::cli
