#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <thread>

#include "cotlsa/errors.hpp"
#include "cotlsa/serialize.hpp"
#include "grid_report.hpp"

namespace cotlsa::cli {

using Json = nlohmann::json;

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    std::ostringstream os;
    for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return os.str();
}

namespace {

struct Options {
    std::string target;
    std::vector<std::string> files;
    int n = -1;
    std::optional<std::string> alpha, beta, lambda, grid;
    std::string out_path;
    std::string certificate;
    std::string checks;
    bool json = false;
    bool timing = false;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f || !(f << content)) throw std::runtime_error("cannot write " + path);
}

unsigned require_n(const Options& o) {
    if (o.n < 0) throw ParseError("--n is required");
    return static_cast<unsigned>(o.n);
}

Scalar require_scalar(const std::optional<std::string>& v, const char* flag) {
    if (!v) throw ParseError(std::string(flag) + " is required");
    return Scalar::parse(*v);
}

std::string tuple_labels(const std::vector<std::size_t>& idx, const std::vector<BasisLabel>& labels) {
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ", ";
        s += idx[i] < labels.size() ? labels[idx[i]].str() : std::to_string(idx[i]);
    }
    return s + ")";
}

Json scalars_json(const Vector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

struct CheckOutcome {
    std::string name;
    bool passed = true;
    std::size_t failures = 0;
    std::vector<Witness> witnesses;
    std::string detail;
};

CheckOutcome outcome_of(const VerificationReport& r, std::string name = {}) {
    return {name.empty() ? r.check : std::move(name), r.passed, r.failures, r.witnesses, {}};
}

CheckOutcome bool_outcome(std::string name, bool ok, std::string detail = {}) {
    return {std::move(name), ok, ok ? 0u : 1u, {}, std::move(detail)};
}

// Collects checks for one command and renders them as text or JSON.
class Session {
public:
    Session(const Options& o, std::ostream& out, const Environment& env)
        : opts_(o), out_(out), env_(env), start_(std::chrono::steady_clock::now()) {}

    void add_input(const std::string& path, const std::string& bytes, const std::string& kind, std::size_t dim) {
        const auto digest = sha256_hex(bytes);
        inputs_.push_back({{"path", path}, {"sha256", digest}, {"kind", kind}, {"dim", dim}});
        if (!opts_.json) out_ << path << " sha256:" << digest << " (" << kind << ", dim " << dim << ")\n";
    }

    void set_labels(std::vector<BasisLabel> labels) { labels_ = std::move(labels); }

    void add(CheckOutcome c) {
        if (!opts_.json) print(c);
        checks_.push_back(std::move(c));
    }

    void line(const std::string& text) {
        if (!opts_.json) out_ << text << "\n";
    }

    Json& extra() { return extra_; }

    bool all_passed() const {
        for (const auto& c : checks_)
            if (!c.passed) return false;
        return true;
    }

    int finish() {
        if (opts_.json) {
            Json j = extra_.is_null() ? Json::object() : extra_;
            j["tool"] = kToolName;
            j["version"] = kToolVersion;
            j["inputs"] = inputs_;
            Json checks = Json::array();
            for (const auto& c : checks_) {
                Json w = Json::array();
                for (const auto& x : c.witnesses) {
                    Json labels = Json::array();
                    for (auto i : x.indices) labels.push_back(i < labels_.size() ? labels_[i].str() : std::to_string(i));
                    w.push_back({{"kind", x.kind},
                                 {"indices", x.indices},
                                 {"labels", labels},
                                 {"lhs", scalars_json(x.lhs)},
                                 {"rhs", scalars_json(x.rhs)}});
                }
                Json cj = {{"check", c.name}, {"passed", c.passed}, {"failures", c.failures}, {"witnesses", w}};
                if (!c.detail.empty()) cj["detail"] = c.detail;
                checks.push_back(cj);
            }
            j["checks"] = checks;
            j["passed"] = all_passed();
            if (opts_.timing) j["wall_time_ms"] = elapsed_ms();
            out_ << j.dump() << "\n";
        } else if (opts_.timing) {
            out_ << "wall time: " << elapsed_ms() << " ms\n";
        }
        return all_passed() ? kExitOk : kExitCheckFailed;
    }

private:
    long long elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    }

    std::string paint(bool ok) const {
        if (!env_.color) return ok ? "PASS" : "FAIL";
        return ok ? "\x1b[32mPASS\x1b[0m" : "\x1b[31mFAIL\x1b[0m";
    }

    void print(const CheckOutcome& c) {
        out_ << paint(c.passed) << " " << c.name;
        if (!c.passed && c.failures) out_ << " (" << c.failures << (c.failures == 1 ? " failure)" : " failures)");
        if (!c.detail.empty()) out_ << " [" << c.detail << "]";
        out_ << "\n";
        for (const auto& w : c.witnesses) {
            out_ << "  " << w.kind;
            if (!w.indices.empty()) out_ << " " << tuple_labels(w.indices, labels_);
            if (!w.lhs.empty() || !w.rhs.empty()) out_ << ": lhs " << to_string(w.lhs) << " rhs " << to_string(w.rhs);
            out_ << "\n";
        }
        if (c.failures > c.witnesses.size())
            out_ << "  ... " << (c.failures - c.witnesses.size()) << " more not shown\n";
    }

    const Options& opts_;
    std::ostream& out_;
    const Environment& env_;
    std::chrono::steady_clock::time_point start_;
    Json inputs_ = Json::array();
    std::vector<BasisLabel> labels_;
    std::vector<CheckOutcome> checks_;
    Json extra_;
};

void emit_artifact(const Options& o, std::ostream& out, const std::string& content, const std::string& kind, std::size_t dim) {
    if (o.out_path.empty()) {
        out << content;
        return;
    }
    write_file(o.out_path, content);
    out << "wrote " << o.out_path << " (" << kind << ", dim " << dim << ") sha256:" << sha256_hex(content) << "\n";
}

int cmd_construct(const Options& o, std::ostream& out) {
    const unsigned n = require_n(o);
    if (o.target == "algebra") {
        const LieAlgebra L = build_tg(n);
        emit_artifact(o, out, to_json(L), "algebra", L.dim());
    } else if (o.target == "lsa") {
        const FamilyParams p{n, require_scalar(o.alpha, "--alpha"), require_scalar(o.beta, "--beta")};
        const LsaProduct S = build_delta(p);
        emit_artifact(o, out, to_json(S, p), "lsa", S.dim());
    } else {
        const LambdaParams p{n, require_scalar(o.lambda, "--lambda")};
        const TwoForm w = build_omega_lambda(p);
        emit_artifact(o, out, to_json(w, p), "form", w.dim());
    }
    return kExitOk;
}

std::vector<std::string> selected_checks(const Options& o, std::vector<std::string> defaults,
                                         const std::vector<std::string>& allowed) {
    if (o.checks.empty()) return defaults;
    std::vector<std::string> out;
    std::stringstream ss(o.checks);
    for (std::string name; std::getline(ss, name, ',');) {
        if (name.empty()) continue;
        if (std::find(allowed.begin(), allowed.end(), name) == allowed.end())
            throw ParseError("check \"" + name + "\" does not apply to this artifact");
        out.push_back(name);
    }
    return out;
}

CheckOutcome completeness_outcome(const LsaProduct& S) {
    try {
        const auto res = check_complete(S);
        CheckOutcome c = bool_outcome("check_complete", res.verdict != CompletenessVerdict::NotComplete,
                                      to_string(res.verdict));
        if (res.witness) {
            c.witnesses.push_back({"not_nilpotent", {}, res.witness->point, {res.witness->trace_value}});
            c.detail += ", trace of r_x^" + std::to_string(res.witness->power) + " is nonzero";
        }
        return c;
    } catch (const AxiomsNotVerified& e) {
        return bool_outcome("check_complete", false, e.what());
    }
}

std::optional<unsigned> tg_size(const LieAlgebra& L) {
    if (L.dim() < 6 || L.dim() % 2) return std::nullopt;
    const unsigned n = static_cast<unsigned>(L.dim() / 2 - 1);
    const LieAlgebra tg = build_tg(n);
    if (tg.labels() != L.labels() || tg.constants() != L.constants()) return std::nullopt;
    return n;
}

CheckOutcome lsa_metadata_outcome(const LsaProduct& S, const FamilyParams& p) {
    const LsaProduct ref = build_delta(p);
    const bool same = ref.base().labels() == S.base().labels() && ref.base().constants() == S.base().constants() &&
                      ref.entries() == S.entries();
    return bool_outcome("matches_build_delta", same, same ? "" : "product differs from its family metadata");
}

CheckOutcome form_metadata_outcome(const TwoForm& w, const LambdaParams& p) {
    const TwoForm ref = build_omega_lambda(p);
    const bool same = ref.base().labels() == w.base().labels() && ref.base().constants() == w.base().constants() &&
                      ref.matrix() == w.matrix();
    return bool_outcome("matches_build_omega_lambda", same, same ? "" : "form differs from its family metadata");
}

int cmd_verify(const Options& o, std::ostream& out, const Environment& env) {
    if (o.files.empty() || o.files.size() > 2) throw ParseError("verify takes [target] file");
    const std::string& path = o.files.back();
    const std::string text = read_file(path);
    const ArtifactKind kind = peek_kind(text);
    if (o.files.size() == 2 && o.files.front() != to_string(kind))
        throw ParseError(path + " holds a " + to_string(kind) + " artifact, not " + o.files.front());

    Session s(o, out, env);
    if (kind == ArtifactKind::Algebra) {
        const LieAlgebra L = parse_algebra(text);
        s.add_input(path, text, "algebra", L.dim());
        s.set_labels(L.labels());
        for (const auto& c : selected_checks(o, {"check_jacobi"}, {"check_jacobi"}))
            if (c == "check_jacobi") s.add(outcome_of(check_jacobi(L)));
    } else if (kind == ArtifactKind::Lsa) {
        const LsaArtifact a = parse_lsa(text);
        const LsaProduct& S = a.product;
        s.add_input(path, text, "lsa", S.dim());
        s.set_labels(S.base().labels());
        const auto checks = selected_checks(
            o, {"check_jacobi", "check_left_symmetric", "check_left_hom", "check_complete"},
            {"check_jacobi", "check_left_symmetric", "check_left_hom", "check_complete", "check_translation_relations"});
        if (a.family) s.add(lsa_metadata_outcome(S, *a.family));
        for (const auto& c : checks) {
            if (c == "check_jacobi") s.add(outcome_of(check_jacobi(S.base())));
            else if (c == "check_left_symmetric") s.add(outcome_of(check_left_symmetric(S)));
            else if (c == "check_left_hom") s.add(outcome_of(check_left_hom(S)));
            else if (c == "check_complete") s.add(completeness_outcome(S));
            else if (c == "check_translation_relations") {
                const auto n = tg_size(S.base());
                if (!n) throw ParseError("check_translation_relations needs the T*g base algebra");
                s.add(outcome_of(check_translation_relations(S, *n)));
            }
        }
    } else {
        const FormArtifact a = parse_form(text);
        const TwoForm& w = a.form;
        s.add_input(path, text, "form", w.dim());
        s.set_labels(w.base().labels());
        const auto checks =
            selected_checks(o, {"check_jacobi", "is_nondegenerate", "check_closed"},
                            {"check_jacobi", "is_nondegenerate", "check_closed", "check_induced_identity"});
        if (a.family) s.add(form_metadata_outcome(w, *a.family));
        for (const auto& c : checks) {
            if (c == "check_jacobi") s.add(outcome_of(check_jacobi(w.base())));
            else if (c == "is_nondegenerate") s.add(bool_outcome("is_nondegenerate", is_nondegenerate(w)));
            else if (c == "check_closed") s.add(outcome_of(check_closed(w)));
            else if (c == "check_induced_identity") {
                try {
                    s.add(outcome_of(check_induced_identity(w, induce_lsa(w))));
                } catch (const Error& e) {
                    s.add(bool_outcome("check_induced_identity", false, e.what()));
                }
            }
        }
    }
    return s.finish();
}

int cmd_induce(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.files.size() != 1) throw ParseError("induce takes one form file");
    const std::string text = read_file(o.files.front());
    if (peek_kind(text) != ArtifactKind::Form) throw ParseError(o.files.front() + " is not a form artifact");
    const FormArtifact a = parse_form(text);
    try {
        const LsaProduct S = induce_lsa(a.form);
        emit_artifact(o, out, to_json(S), "lsa", S.dim());
    } catch (const Degenerate& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const NotClosed& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

void report_verdict(Session& s, const EquivalenceVerdict& v) {
    std::string line = "verdict: " + to_string(v.result);
    if (v.result == EquivalenceResult::NotEquivalent) line += " (necessity trusted, not re-proven)";
    s.line(line);
    if (!v.note.empty()) s.line("note: " + v.note);
    if (v.scale) s.line("scale: " + v.scale->str());
    Json& x = s.extra();
    x["verdict"] = to_string(v.result);
    x["note"] = v.note;
    if (v.scale) x["scale"] = v.scale->str();
}

void emit_certificate(const Options& o, std::ostream& out, Session& s, const HomothetyCertificate& cert) {
    const std::string content = to_json(cert);
    s.extra()["certificate"] = Json::parse(content);
    if (!o.out_path.empty()) {
        write_file(o.out_path, content);
        s.line("certificate: wrote " + o.out_path + " sha256:" + sha256_hex(content));
    } else if (!o.json) {
        out << "certificate: " << content;
    }
}

HomothetyCertificate load_certificate(const Options& o, Session& s, std::size_t dim) {
    const std::string text = read_file(o.certificate);
    HomothetyCertificate cert = parse_certificate(text);
    s.add_input(o.certificate, text, "certificate", cert.phi.rows());
    if (cert.phi.rows() != dim) throw DimensionMismatch("certificate dimension does not match the artifacts");
    return cert;
}

int cmd_compare(const Options& o, std::ostream& out, const Environment& env) {
    if (o.files.size() != 2) throw ParseError("compare takes two files");
    const std::string ta = read_file(o.files[0]);
    const std::string tb = read_file(o.files[1]);
    const ArtifactKind ka = peek_kind(ta);
    if (ka != peek_kind(tb)) throw ParseError("compare needs two artifacts of the same kind");
    Session s(o, out, env);
    bool decided = false;

    if (ka == ArtifactKind::Lsa) {
        const LsaArtifact a = parse_lsa(ta);
        const LsaArtifact b = parse_lsa(tb);
        s.add_input(o.files[0], ta, "lsa", a.product.dim());
        s.add_input(o.files[1], tb, "lsa", b.product.dim());
        if (a.product.dim() != b.product.dim()) throw DimensionMismatch("artifacts differ in dimension");
        s.set_labels(a.product.base().labels());
        if (!o.certificate.empty()) {
            const auto cert = load_certificate(o, s, a.product.dim());
            s.add(outcome_of(verify_lsa_isomorphism(a.product, b.product, cert.phi)));
            decided = true;
        }
        if (a.family && b.family) {
            const auto ma = lsa_metadata_outcome(a.product, *a.family);
            const auto mb = lsa_metadata_outcome(b.product, *b.family);
            const bool consistent = ma.passed && mb.passed;
            s.add(ma);
            s.add(mb);
            if (consistent) {
                const auto v = lsa_equivalence_predicate(*a.family, *b.family);
                report_verdict(s, v);
                if (v.result == EquivalenceResult::EquivalentCaseII) {
                    s.add(outcome_of(verify_lsa_isomorphism(a.product, b.product, *v.certificate),
                                     "verify_lsa_isomorphism(certificate)"));
                    emit_certificate(o, out, s, {*v.certificate, Scalar(1)});
                }
            }
            decided = true;
        }
    } else if (ka == ArtifactKind::Form) {
        const FormArtifact a = parse_form(ta);
        const FormArtifact b = parse_form(tb);
        s.add_input(o.files[0], ta, "form", a.form.dim());
        s.add_input(o.files[1], tb, "form", b.form.dim());
        if (a.form.dim() != b.form.dim()) throw DimensionMismatch("artifacts differ in dimension");
        s.set_labels(a.form.base().labels());
        if (!o.certificate.empty()) {
            const auto cert = load_certificate(o, s, a.form.dim());
            try {
                s.add(outcome_of(verify_homothety(a.form, b.form, cert)));
            } catch (const Error& e) {
                s.add(bool_outcome("verify_homothety", false, e.what()));
            }
            decided = true;
        }
        if (a.family && b.family) {
            const auto ma = form_metadata_outcome(a.form, *a.family);
            const auto mb = form_metadata_outcome(b.form, *b.family);
            const bool consistent = ma.passed && mb.passed;
            s.add(ma);
            s.add(mb);
            if (consistent) {
                const auto v = symplectic_equivalence_predicate(*a.family, *b.family);
                report_verdict(s, v);
                if (v.result == EquivalenceResult::EquivalentCaseII) {
                    const HomothetyCertificate cert{*v.certificate, *v.scale};
                    s.add(outcome_of(verify_homothety(a.form, b.form, cert), "verify_homothety(certificate)"));
                    emit_certificate(o, out, s, cert);
                }
            }
            decided = true;
        }
    } else {
        const LieAlgebra a = parse_algebra(ta);
        const LieAlgebra b = parse_algebra(tb);
        s.add_input(o.files[0], ta, "algebra", a.dim());
        s.add_input(o.files[1], tb, "algebra", b.dim());
        if (a.dim() != b.dim()) throw DimensionMismatch("artifacts differ in dimension");
        s.set_labels(a.labels());
        if (!o.certificate.empty()) {
            const auto cert = load_certificate(o, s, a.dim());
            s.add(bool_outcome("invertible", !determinant(cert.phi).is_zero()));
            s.add(outcome_of(check_lie_homomorphism(a, b, cert.phi)));
            decided = true;
        }
    }
    if (!decided) throw ParseError("compare needs family metadata on both artifacts or --certificate");
    return s.finish();
}

int cmd_report(const Options& o, std::ostream& out, std::ostream& err) {
    const unsigned n = require_n(o);
    const auto start = std::chrono::steady_clock::now();
    GridAxes axes;
    if (o.alpha) {
        axes.alphas = parse_grid_values(*o.alpha);
        axes.has_alpha = true;
    }
    if (o.beta) {
        axes.betas = parse_grid_values(*o.beta);
        axes.has_beta = true;
    }
    if (o.lambda) {
        axes.lambdas = parse_grid_values(*o.lambda);
        axes.has_lambda = true;
    }
    if (o.grid) parse_grid_spec(*o.grid, axes);

    const bool family_mode = axes.has_alpha || axes.has_beta;
    if (family_mode && axes.has_lambda) throw ParseError("report takes either alpha/beta or lambda, not both");
    if (family_mode && !(axes.has_alpha && axes.has_beta)) throw ParseError("report needs both alpha and beta");
    if (!family_mode && !axes.has_lambda) throw ParseError("report needs alpha/beta or lambda values");

    const auto lines = family_mode ? family_report(n, axes.alphas, axes.betas, o.jobs)
                                   : lambda_report(n, axes.lambdas, o.jobs);
    for (const auto& l : lines) out << l << "\n";
    if (o.timing)
        err << "wall time: "
            << std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count()
            << " ms\n";
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
    Options o;
    CLI::App app{"Exact construction and verification of left-symmetric and symplectic structures on cotangent Lie "
                 "algebras of R x_J R^n.",
                 kToolName};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    auto add_family_flags = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "size of the Jordan block, n >= 2");
        sub->add_option("--alpha", o.alpha, "rational p/q or integer");
        sub->add_option("--beta", o.beta, "rational p/q or integer");
        sub->add_option("--lambda", o.lambda, "rational p/q, not an integer");
    };
    auto add_output_flags = [&](CLI::App* sub) {
        sub->add_flag("--json", o.json, "machine-readable run report");
        sub->add_flag("--timing", o.timing, "include wall time");
    };

    auto* construct = app.add_subcommand("construct", "build T*g, a family product, or a lambda form");
    construct->add_option("target", o.target, "algebra | lsa | form")
        ->required()
        ->check(CLI::IsMember({"algebra", "lsa", "form"}));
    add_family_flags(construct);
    construct->add_option("-o,--out", o.out_path, "output file (stdout when omitted)");

    auto* verify = app.add_subcommand("verify", "run the checks that apply to an artifact");
    verify->add_option("args", o.files, "[target] file")->required()->expected(1, 2);
    verify->add_option("--checks", o.checks, "comma-separated check names");
    add_output_flags(verify);

    auto* induce = app.add_subcommand("induce", "write the product induced by a symplectic form");
    induce->add_option("file", o.files, "form artifact")->required()->expected(1);
    induce->add_option("-o,--out", o.out_path, "output file (stdout when omitted)");

    auto* compare = app.add_subcommand("compare", "decide equivalence of two family members or check a certificate");
    compare->add_option("files", o.files, "two artifacts of the same kind")->required()->expected(2);
    compare->add_option("--certificate", o.certificate, "certificate to verify");
    compare->add_option("-o,--out", o.out_path, "where to write an emitted certificate");
    add_output_flags(compare);

    auto* report = app.add_subcommand("report", "JSON lines over a parameter grid");
    add_family_flags(report);
    report->add_option("--grid", o.grid, "alpha=...;beta=... or lambda=..., values as lists or lo:hi[:step]");
    report->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    report->add_flag("--timing", o.timing, "print wall time on stderr");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (*construct) return cmd_construct(o, out);
        if (*verify) return cmd_verify(o, out, env);
        if (*induce) return cmd_induce(o, out, err);
        if (*compare) return cmd_compare(o, out, env);
        if (*report) return cmd_report(o, out, err);
    } catch (const ConditionViolation& e) {
        err << "error: " << e.what() << "\n";
        return kExitAdmissibility;
    } catch (const IntegerLambda& e) {
        err << "error: " << e.what() << "\n";
        return kExitAdmissibility;
    } catch (const ZeroLambdaI& e) {
        err << "error: " << e.what() << "\n";
        return kExitAdmissibility;
    } catch (const SizeTooSmall& e) {
        err << "error: " << e.what() << "\n";
        return kExitAdmissibility;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DimensionMismatch& e) {
        err << "error: " << e.what() << "\n";
        return kExitDimension;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitParse;
}

}  // namespace cotlsa::cli
