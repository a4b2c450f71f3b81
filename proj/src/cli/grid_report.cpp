#include "grid_report.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <json.hpp>
#include <optional>
#include <thread>

#include "cotlsa/errors.hpp"
#include "cotlsa/families.hpp"
#include "cotlsa/lsa.hpp"
#include "cotlsa/symplectic.hpp"

namespace cotlsa::cli {

using Json = nlohmann::json;

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

// Runs body(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count && !failed; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    if (!failed.exchange(true)) failure = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

const char* pass_fail(bool ok) { return ok ? "pass" : "fail"; }

struct FamilyPoint {
    FamilyParams params;
    bool admissible = false;
    bool assumptions = false;
    std::optional<SequenceTriple> seq;
    Json record;
};

struct LambdaPoint {
    LambdaParams params;
    bool valid = false;
    Json record;
};

}  // namespace

std::vector<Scalar> parse_grid_values(std::string_view text) {
    std::vector<Scalar> values;
    text = trim(text);
    if (text.empty()) return values;
    for (auto item : split(text, ',')) {
        item = trim(item);
        if (item.empty()) throw ParseError("empty grid item");
        const auto parts = split(item, ':');
        if (parts.size() == 1) {
            values.push_back(Scalar::parse(item));
            continue;
        }
        if (parts.size() > 3) throw ParseError("range must be lo:hi or lo:hi:step");
        const Scalar lo = Scalar::parse(trim(parts[0]));
        const Scalar hi = Scalar::parse(trim(parts[1]));
        const Scalar step = parts.size() == 3 ? Scalar::parse(trim(parts[2])) : Scalar(1);
        if (step.sign() <= 0) throw ParseError("range step must be positive");
        for (Scalar v = lo; v <= hi; v += step) values.push_back(v);
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

void parse_grid_spec(std::string_view text, GridAxes& axes) {
    for (auto part : split(text, ';')) {
        part = trim(part);
        if (part.empty()) continue;
        const auto eq = part.find('=');
        if (eq == std::string_view::npos) throw ParseError("grid entries look like name=values");
        const auto name = trim(part.substr(0, eq));
        auto values = parse_grid_values(part.substr(eq + 1));
        if (name == "alpha") {
            axes.alphas = std::move(values);
            axes.has_alpha = true;
        } else if (name == "beta") {
            axes.betas = std::move(values);
            axes.has_beta = true;
        } else if (name == "lambda") {
            axes.lambdas = std::move(values);
            axes.has_lambda = true;
        } else {
            throw ParseError("unknown grid axis \"" + std::string(name) + "\"");
        }
    }
}

std::vector<std::string> family_report(unsigned n, const std::vector<Scalar>& alphas, const std::vector<Scalar>& betas,
                                       unsigned jobs) {
    if (n < 2) throw SizeTooSmall("family needs n >= 2");
    std::vector<FamilyPoint> points;
    for (const auto& a : alphas)
        for (const auto& b : betas) points.push_back({FamilyParams{n, a, b}, false, false, std::nullopt, Json::object()});

    parallel_for(points.size(), jobs, [&](std::size_t idx) {
        FamilyPoint& pt = points[idx];
        const FamilyParams& p = pt.params;
        Json& r = pt.record;
        r["n"] = n;
        r["alpha"] = p.alpha.str();
        r["beta"] = p.beta.str();
        r["in_set_A"] = in_set_A(p);
        const auto cond = check_conditions(n, p.alpha, p.beta);
        r["conditions"] = pass_fail(cond.passed);
        if (!cond.passed) {
            r["condition_message"] = cond.message;
            r["assumptions"] = "skipped";
            r["axioms"] = "skipped";
            r["complete"] = "skipped";
            return;
        }
        pt.admissible = true;
        pt.seq = compute_sequences(p);
        pt.assumptions = check_rigidity_assumptions(p).passed;
        r["assumptions"] = pass_fail(pt.assumptions);
        const LsaProduct S = build_delta(p);
        const bool axioms = check_left_symmetric(S).passed && check_left_hom(S).passed;
        r["axioms"] = pass_fail(axioms);
        r["complete"] = axioms ? to_string(check_complete(S).verdict) : "skipped";
    });

    // pairwise predicate; only swapped pairs can be equivalent once parameters differ
    std::vector<Json> equivalents(points.size(), Json::array());
    parallel_for(points.size(), jobs, [&](std::size_t i) {
        const FamilyPoint& a = points[i];
        if (!a.admissible || !a.assumptions) return;
        for (std::size_t j = 0; j < points.size(); ++j) {
            const FamilyPoint& b = points[j];
            if (i == j || !b.admissible || !b.assumptions) continue;
            if (!swapped_sequences(*a.seq, *b.seq)) continue;
            const auto verdict = lsa_equivalence_predicate(a.params, b.params);
            if (verdict.result == EquivalenceResult::EquivalentCaseII)
                equivalents[i].push_back(
                    {{"alpha", b.params.alpha.str()}, {"beta", b.params.beta.str()}, {"case", to_string(verdict.result)}});
        }
    });

    std::vector<std::string> lines;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Json& r = points[i].record;
        r["equivalent_to"] = equivalents[i];
        lines.push_back(r.dump());
    }
    return lines;
}

std::vector<std::string> lambda_report(unsigned n, const std::vector<Scalar>& lambdas, unsigned jobs) {
    if (n < 2) throw SizeTooSmall("lambda forms need n >= 2");
    std::vector<LambdaPoint> points;
    for (const auto& l : lambdas) points.push_back({LambdaParams{n, l}, false, Json::object()});

    parallel_for(points.size(), jobs, [&](std::size_t idx) {
        LambdaPoint& pt = points[idx];
        Json& r = pt.record;
        r["n"] = n;
        r["lambda"] = pt.params.lambda.str();
        r["in_set_B"] = in_set_B(pt.params);
        try {
            validate(pt.params);
        } catch (const Error& e) {
            r["valid"] = false;
            r["error"] = e.what();
            return;
        }
        pt.valid = true;
        r["valid"] = true;
        const TwoForm w = build_omega_lambda(pt.params);
        const bool closed = check_closed(w).passed;
        const bool nondeg = is_nondegenerate(w);
        r["closed"] = pass_fail(closed);
        r["nondegenerate"] = pass_fail(nondeg);
        r["induced_matches_family"] = pass_fail(closed && nondeg && check_induced_matches_family(pt.params).passed);
    });

    std::vector<Json> equivalents(points.size(), Json::array());
    parallel_for(points.size(), jobs, [&](std::size_t i) {
        if (!points[i].valid) return;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (i == j || !points[j].valid) continue;
            if (points[i].params.lambda + points[j].params.lambda != Scalar(n) - 1) continue;
            const auto verdict = symplectic_equivalence_predicate(points[i].params, points[j].params);
            equivalents[i].push_back({{"lambda", points[j].params.lambda.str()},
                                      {"case", to_string(verdict.result)},
                                      {"c", verdict.scale ? verdict.scale->str() : "1"}});
        }
    });

    std::vector<std::string> lines;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Json& r = points[i].record;
        r["equivalent_to"] = equivalents[i];
        lines.push_back(r.dump());
    }
    return lines;
}

}  // namespace cotlsa::cli
