#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tschur/tschur.hpp"

using json = nlohmann::ordered_json;
using namespace tschur;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& s)
{
    static const std::regex re(R"(\s*(-?\d+)(/(\d+))?\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw UsageError("not a rational p/q: '" + s + "'");
    Rational r;
    if (m[3].matched) {
        if (mpz_class(m[3].str()) == 0) throw UsageError("zero denominator: '" + s + "'");
        r = Rational(mpz_class(m[1].str()), mpz_class(m[3].str()));
    } else
        r = Rational(mpz_class(m[1].str()));
    r.canonicalize();
    return r;
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& v)
{
    std::vector<Rational> r;
    for (const auto& s : v) r.push_back(parse_rational(s));
    return r;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string cell(const json& v)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

/// Records go out as one JSON object per line, or as CSV with a header row
/// taken from the first record's keys.  The resolved configuration leads.
class Emitter {
public:
    Emitter(std::ostream& os, std::string format) : os_(os), json_(format == "json") {}

    void config(const json& c)
    {
        if (json_)
            os_ << json{{"config", c}}.dump() << "\n";
        else
            os_ << "# config " << c.dump() << "\n";
    }
    void record(const json& r)
    {
        if (json_) {
            os_ << r.dump() << "\n";
            return;
        }
        if (!header_done_) {
            std::string h;
            for (auto it = r.begin(); it != r.end(); ++it) h += (it == r.begin() ? "" : ",") + csv_field(it.key());
            os_ << h << "\n";
            header_done_ = true;
        }
        std::string line;
        for (auto it = r.begin(); it != r.end(); ++it) line += (it == r.begin() ? "" : ",") + csv_field(cell(it.value()));
        os_ << line << "\n";
    }
    /// Run-level summary: its own JSON line, or a trailing comment in CSV.
    void summary(const json& s)
    {
        if (json_)
            os_ << json{{"summary", s}}.dump() << "\n";
        else
            os_ << "# summary " << s.dump() << "\n";
    }

private:
    std::ostream& os_;
    bool json_;
    bool header_done_ = false;
};

json resolved_config(const CLI::App* sub)
{
    json c;
    c["command"] = sub->get_name();
    for (const CLI::Option* o : sub->get_options()) {
        if (o->get_lnames().empty()) continue;
        const std::string key = o->get_lnames().front();
        if (key == "help" || key == "config") continue;
        if (o->get_expected_max() == 0) {
            c[key] = o->count() > 0;
            continue;
        }
        if (o->count() > 0) {
            auto res = o->results();
            if (o->get_expected_max() > 1 || res.size() > 1)
                c[key] = res;
            else
                c[key] = res.front();
        } else if (!o->get_default_str().empty())
            c[key] = o->get_default_str();
        else
            c[key] = nullptr;
    }
    return c;
}

json partition_json(const Partition& l) { return json(l.parts()); }

std::string join(const std::vector<Rational>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s;
}

json report_json(const IdentityReport& r)
{
    json j;
    j["name"] = r.name;
    j["status"] = r.equal ? "exact-equal" : "mismatch";
    j["params"] = r.params;
    j["grades_compared"] = r.grades_compared;
    j["first_mismatch_grade"] = r.equal ? json(nullptr) : json(r.first_mismatch_grade);
    j["lhs"] = r.equal ? json(nullptr) : json(r.lhs);
    j["rhs"] = r.equal ? json(nullptr) : json(r.rhs);
    return j;
}

json letter_rows(const MarkedTableau& S)
{
    json rows = json::array();
    for (const auto& r : S.rows) {
        json row = json::array();
        for (const auto& a : r) row.push_back(to_string(a));
        rows.push_back(row);
    }
    return rows;
}

MarkedTableau parse_marked_tableau(const json& j)
{
    static const std::regex re(R"((\d+)('?))");
    MarkedTableau S;
    if (!j.is_array()) throw UsageError("S must be an array of rows");
    for (const auto& row : j) {
        if (!row.is_array()) throw UsageError("S rows must be arrays");
        std::vector<MarkedLetter> r;
        for (const auto& a : row) {
            std::smatch m;
            std::string s = a.is_string() ? a.get<std::string>() : a.dump();
            if (!std::regex_match(s, m, re) || std::stoi(m[1].str()) < 1) throw UsageError("bad letter in S: " + s);
            r.push_back({std::stoi(m[1].str()), m[2].length() > 0});
        }
        S.rows.push_back(r);
    }
    return S;
}

AMatrix parse_matrix(const json& j)
{
    if (!j.is_array() || j.empty()) throw UsageError("matrix must be a non-empty array of rows");
    std::vector<std::vector<AEntry>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw UsageError("matrix rows must be arrays");
        std::vector<AEntry> r;
        for (const auto& e : row) {
            if (!e.is_object()) throw UsageError("matrix entries must be objects {\"v\":int,\"p\":bool}");
            for (auto it = e.begin(); it != e.end(); ++it)
                if (it.key() != "v" && it.key() != "p") throw UsageError("unknown key in matrix entry: " + it.key());
            if (!e.contains("v") || !e["v"].is_number_integer()) throw UsageError("matrix entry needs integer v");
            bool p = e.value("p", false);
            r.push_back({e["v"].get<int>(), p});
        }
        rows.push_back(r);
    }
    try {
        return AMatrix(rows);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
}

json matrix_json(const AMatrix& A)
{
    json rows = json::array();
    for (const auto& r : A.a) {
        json row = json::array();
        for (const auto& e : r) row.push_back({{"v", e.v}, {"p", e.p}});
        rows.push_back(row);
    }
    return rows;
}

RskConvention parse_convention(const std::string& tie, const std::string& copies)
{
    RskConvention c;
    c.tie = tie == "marked-decreasing" ? TieOrder::marked_decreasing : TieOrder::increasing;
    c.copies = copies == "all" ? CopyMarking::all : CopyMarking::first;
    return c;
}

json summary_json(const ExperimentSummary& s)
{
    json j;
    j["statistic"] = s.statistic;
    j["trials"] = s.trials;
    j["seed"] = s.seed;
    j["threads"] = s.threads;
    j["params"] = s.params;
    if (!std::isnan(s.p_value)) j["p_value"] = s.p_value;
    if (!std::isnan(s.ks)) j["ks"] = s.ks;
    for (const auto& [k, v] : s.values) j[k] = v;
    j["pass"] = s.pass;
    return j;
}

bool strictly_decreasing(const std::vector<double>& v)
{
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] < v[i - 1])) return false;
    return true;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"tschur: t-Schur measure toolkit (identities, RSK, sampling, kernel, gap probabilities, edge asymptotics)"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from a TOML/INI file; unknown keys are rejected");
    app.allow_config_extras(CLI::config_extras_mode::error);

    std::string format = "json", output;
    int threads = -1;
    auto common = [&](CLI::App* s, const std::string& default_format) {
        s->add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}))->default_str(default_format);
        s->add_option("--output", output, "write to file instead of stdout");
        s->add_option("--threads", threads, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    };

    std::vector<std::string> xs, ys;
    std::string ts = "0";
    auto vars = [&](CLI::App* s) {
        s->add_option("--x", xs, "x variables, p/q")->delimiter(',');
        s->add_option("--y", ys, "y variables, p/q")->delimiter(',');
        s->add_option("--t", ts, "t as p/q")->default_str("0");
    };

    // verify
    auto* verify = app.add_subcommand("verify", "exact identity checks in rational arithmetic (JSON lines)");
    std::string suite = "all";
    int deg = 8, kmax = 4, hmax = 3;
    std::vector<int> shape_parts;
    verify->add_option("--suite", suite, "identity suite")
        ->check(CLI::IsMember({"cauchy", "dual", "gessel-length", "gessel-row", "normalization", "marked-t", "all"}))
        ->default_str("all");
    vars(verify);
    verify->add_option("--deg", deg, "degree cap D")->default_str("8")->check(CLI::Range(0, 16));
    verify->add_option("--k-max", kmax, "gessel-length runs k = 1..K")->default_str("4")->check(CLI::Range(1, 12));
    verify->add_option("--h-max", hmax, "gessel-row runs h = 1..H")->default_str("3")->check(CLI::Range(1, 12));
    verify->add_option("--shape", shape_parts, "partition for marked-t, e.g. 3,2,1")->delimiter(',');
    common(verify, "json");

    // rsk
    auto* rskc = app.add_subcommand("rsk", "marked RSK of a matrix, or its inverse");
    std::string matrix_s, S_s, U_s, tie = "increasing", copies = "first";
    bool inverse = false;
    rskc->add_option("--matrix", matrix_s, "matrix as JSON rows of {\"v\":int,\"p\":bool}");
    rskc->add_flag("--inverse", inverse, "read --S and --U and print the matrix");
    rskc->add_option("--S", S_s, "marked tableau as JSON rows of letters like \"1'\"");
    rskc->add_option("--U", U_s, "recording tableau as JSON rows of integers");
    rskc->add_option("--tie", tie, "tie order within equal top letters")->check(CLI::IsMember({"increasing", "marked-decreasing"}))->default_str("increasing");
    rskc->add_option("--copies", copies, "marking of copies of a marked entry")->check(CLI::IsMember({"first", "all"}))->default_str("first");
    common(rskc, "json");

    // sample
    auto* sample = app.add_subcommand("sample", "Monte Carlo shape histograms against exact probabilities");
    std::string model = "matrix";
    long trials = 100000;
    std::uint64_t seed = 1;
    int N = 4;
    double kappa = 0, zz = 1, zp = 1, xi = 0.5;
    sample->add_option("--model", model, "sampler")->check(CLI::IsMember({"matrix", "plancherel", "tz"}))->default_str("matrix");
    vars(sample);
    sample->add_option("--trials", trials, "number of samples")->default_str("100000")->check(CLI::PositiveNumber);
    sample->add_option("--seed", seed, "random seed")->default_str("1");
    sample->add_option("--deg", deg, "shapes with |λ| <= D get their own bin")->default_str("8")->check(CLI::Range(0, 16));
    sample->add_option("--N", N, "plancherel: fixed size")->default_str("4")->check(CLI::Range(0, 100000));
    sample->add_option("--kappa", kappa, "plancherel: Poisson mean (overrides --N when > 0)")->default_str("0");
    sample->add_option("--z", zz, "tz: z")->default_str("1");
    sample->add_option("--zp", zp, "tz: z'")->default_str("1");
    sample->add_option("--xi", xi, "tz: ξ in [0,1)")->default_str("0.5");
    common(sample, "csv");

    // kernel
    auto* kern = app.add_subcommand("kernel", "certified kernel window K(a,b) with error bounds");
    bool plancherel = false;
    double pa = 1, pb = 1, tol = 1e-10, conj = 1;
    int lo = -4, hi = 4;
    auto symbol_opts = [&](CLI::App* s) {
        vars(s);
        s->add_flag("--plancherel", plancherel, "use the symbol exp((1−t) a z − b/z)");
        s->add_option("--a", pa, "plancherel a")->default_str("1");
        s->add_option("--b", pb, "plancherel b")->default_str("1");
        s->add_option("--tol", tol, "entry error tolerance")->default_str("1e-10");
    };
    symbol_opts(kern);
    kern->add_option("--lo", lo, "first point")->default_str("-4");
    kern->add_option("--hi", hi, "last point")->default_str("4");
    kern->add_option("--conj", conj, "conjugation radius R (entries scaled by R^{a−b})")->default_str("1");
    common(kern, "csv");

    // gap
    auto* gap = app.add_subcommand("gap", "P(λ₁ <= h) by Fredholm determinants");
    int hmin = 0;
    int hlast = 5;
    symbol_opts(gap);
    gap->add_option("--hmin", hmin, "first h")->default_str("0")->check(CLI::NonNegativeNumber);
    gap->add_option("--hmax", hlast, "last h")->default_str("5")->check(CLI::NonNegativeNumber);
    common(gap, "csv");

    // edge
    auto* edge = app.add_subcommand("edge", "saddle constants, Tracy–Widom, and Airy-edge checks (one mode per run)");
    std::vector<double> saddle, tw2, bessel, tzz;
    std::vector<int> rect;
    double alpha = 0.5, tau = 1, et = 0, tz_kappa = 1;
    int q = 60;
    edge->add_option("--saddle", saddle, "α τ t")->expected(3);
    edge->add_option("--tw2", tw2, "points s for F₂(s)")->expected(1, 1000);
    edge->add_option("--bessel-airy", bessel, "κ values")->expected(1, 100);
    edge->add_option("--rect", rect, "n values (with --alpha --tau --t)")->expected(1, 100);
    edge->add_option("--tz", tzz, "z = z' values (with --kappa --t)")->expected(1, 100);
    edge->add_option("--alpha", alpha, "rect: α")->default_str("0.5");
    edge->add_option("--tau", tau, "rect: τ")->default_str("1");
    edge->add_option("--t", et, "t (real)")->default_str("0");
    edge->add_option("--kappa", tz_kappa, "tz: κ")->default_str("1");
    edge->add_option("--q", q, "tw2: quadrature nodes")->default_str("60")->check(CLI::Range(4, 400));
    common(edge, "csv");

    // ascent
    auto* asc = app.add_subcommand("ascent", "t-ascent lengths, shape-law tests, and edge histograms");
    std::vector<int> perm, marks;
    std::vector<double> akappa;
    int aN = 0, shape_law = 0;
    double at = 0;
    asc->add_option("--perm", perm, "permutation of 1..N, e.g. 3,1,2")->delimiter(',');
    asc->add_option("--marks", marks, "0/1 marks per position")->delimiter(',');
    asc->add_option("--t", at, "t <= 0 (mark probability −t/(1−t))")->default_str("0");
    asc->add_option("--shape-law", shape_law, "run shape_law_test at this N")->check(CLI::Range(1, 8));
    asc->add_option("--kappa", akappa, "edge histogram: Poisson means")->expected(1, 20);
    asc->add_option("--N", aN, "edge histogram: fixed size")->check(CLI::Range(1, 1000000));
    asc->add_option("--trials", trials, "Monte Carlo trials")->default_str("100000")->check(CLI::PositiveNumber);
    asc->add_option("--seed", seed, "random seed")->default_str("1");
    common(asc, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    if (sub->get_option("--format")->count() == 0) format = sub->get_option("--format")->get_default_str();
    std::ofstream file;
    if (!output.empty()) {
        file.open(output);
        if (!file) {
            std::cerr << "cannot open output file " << output << "\n";
            return 2;
        }
    }
    std::ostream& os = output.empty() ? std::cout : file;
    Emitter out(os, format);
    const bool mc = sub == sample || sub == asc;
    const int nthreads = threads >= 0 ? threads : (mc ? 0 : 1);

    try {
        json cfg = resolved_config(sub);
        cfg["threads_resolved"] = resolve_threads(nthreads);
        out.config(cfg);
        auto x = parse_rationals(xs), y = parse_rationals(ys);
        Rational t = parse_rational(ts);

        if (sub == verify) {
            bool ok = true;
            auto emit = [&](const IdentityReport& r) {
                ok = ok && r.equal;
                out.record(report_json(r));
            };
            if (suite == "cauchy" || suite == "all") emit(verify_t_cauchy(x, y, t, deg));
            if (suite == "dual" || suite == "all") emit(verify_dual_cauchy(x, y, t, deg));
            if (suite == "gessel-length" || suite == "all")
                for (int k = 1; k <= kmax; ++k) emit(verify_gessel_length(x, y, t, k, deg));
            if (suite == "gessel-row" || suite == "all")
                for (int h = 1; h <= hmax; ++h) emit(verify_gessel_row(x, y, t, h, deg));
            if (suite == "normalization" || suite == "all") {
                TSchurParams p{x, y, t};
                try {
                    p.validate();
                } catch (const std::domain_error& e) {
                    if (suite == "normalization") throw UsageError(e.what());
                    p.x.clear();  // outside the probabilistic domain: skipped under "all"
                }
                if (!p.x.empty() || suite == "normalization") {
                    auto r = verify_measure_normalization(p, deg);
                    ok = ok && r.ok;
                    out.record({{"name", "normalization"},
                                {"status", r.ok ? "within-bounds" : "mismatch"},
                                {"params", {{"x", join(x)}, {"y", join(y)}, {"t", t.get_str()}, {"deg", std::to_string(deg)}}},
                                {"partial_sum", r.partial_sum},
                                {"tail_bound", r.tail_bound}});
                }
            }
            if (suite == "marked-t" || (suite == "all" && !shape_parts.empty())) {
                if (shape_parts.empty()) throw UsageError("marked-t needs --shape");
                auto r = marked_T_lambda(Partition(shape_parts), t);
                ok = ok && r.match;
                out.record({{"name", "marked_T_lambda"},
                            {"status", r.match ? "exact-equal" : "mismatch"},
                            {"params", {{"shape", to_string(r.shape)}, {"t", t.get_str()}}},
                            {"sum", r.sum.get_str()},
                            {"expected", r.expected.get_str()},
                            {"tableaux", r.tableaux}});
            }
            return ok ? 0 : 1;
        }

        if (sub == rskc) {
            auto conv = parse_convention(tie, copies);
            if (inverse) {
                if (S_s.empty() || U_s.empty()) throw UsageError("--inverse needs --S and --U");
                RecordingTableau U;
                try {
                    U.rows = json::parse(U_s).get<std::vector<std::vector<int>>>();
                } catch (const json::exception& e) {
                    throw UsageError(std::string("bad --U: ") + e.what());
                }
                MarkedTableau S;
                try {
                    S = parse_marked_tableau(json::parse(S_s));
                } catch (const json::exception& e) {
                    throw UsageError(std::string("bad --S: ") + e.what());
                }
                try {
                    out.record({{"matrix", matrix_json(inverse_rsk(S, U, 0, 0, conv))}});
                } catch (const NotInImage& e) {
                    out.record({{"error", e.what()}});
                    return 1;
                }
                return 0;
            }
            if (matrix_s.empty()) throw UsageError("rsk needs --matrix (or --inverse)");
            json mj;
            try {
                mj = json::parse(matrix_s);
            } catch (const json::exception& e) {
                throw UsageError(std::string("bad --matrix: ") + e.what());
            }
            AMatrix A = parse_matrix(mj);
            auto w = biword(A, conv);
            auto r = rsk_word(w);
            out.record({{"S", letter_rows(r.S)},
                        {"U", r.U.rows},
                        {"shape", partition_json(r.shape())},
                        {"lis", lis_marked(lower_word(w))},
                        {"mark", r.S.marks()}});
            return 0;
        }

        if (sub == sample) {
            if (model == "matrix") {
                TSchurParams p{x, y, t};
                try {
                    p.validate();
                } catch (const std::domain_error& e) {
                    throw UsageError(e.what());
                }
                auto rep = pushforward_check(p, trials, seed, deg, nthreads);
                long pooled = trials;
                for (const auto& row : rep.rows) {
                    pooled -= row.count;
                    out.record({{"shape", to_string(row.shape)}, {"count", row.count}, {"exact_prob", row.expected_p}, {"z", row.z}});
                }
                out.summary({{"trials", trials},
                             {"seed", seed},
                             {"pooled_count", pooled},
                             {"marked_entries", rep.marked_entries},
                             {"max_abs_z", rep.max_abs_z},
                             {"chi2", rep.chi2.statistic},
                             {"dof", rep.chi2.dof},
                             {"p_value", rep.chi2.p_value},
                             {"pass", rep.pass}});
                return rep.pass ? 0 : 1;
            }
            // plancherel and tz: bins for |λ| <= deg, the rest pooled
            std::vector<Partition> shapes;
            std::vector<double> probs;
            std::function<Partition(Rng&)> draw;
            if (model == "plancherel") {
                if (kappa > 0) {
                    TPlancherelParams pp{std::sqrt(kappa), std::sqrt(kappa), 0};
                    for (const auto& l : enumerate(deg, EnumerateMode::up_to_weight)) {
                        shapes.push_back(l);
                        probs.push_back(plancherel_prob(pp, l));
                    }
                    draw = [&](Rng& g) { return sample_plancherel_shape(std::poisson_distribution<int>(kappa)(g), g); };
                } else {
                    double nf = std::tgamma(N + 1.0);
                    if (N <= 16)
                        for (const auto& l : enumerate(N)) {
                            double f = syt_count(l).get_d();
                            shapes.push_back(l);
                            probs.push_back(f * f / nf);
                        }
                    draw = [&](Rng& g) { return sample_plancherel_shape(N, g); };
                }
            } else {
                TZParams zp_{zz, zp, xi, t.get_d()};
                std::vector<double> cdf;
                for (const auto& l : enumerate(deg, EnumerateMode::up_to_weight)) {
                    auto v = tz_prob(zp_, l);
                    if (v.negative) {
                        out.record({{"error", "negative weight at " + to_string(l)}});
                        return 1;
                    }
                    shapes.push_back(l);
                    probs.push_back(v.value);
                    cdf.push_back((cdf.empty() ? 0 : cdf.back()) + v.value);
                }
                // inverse CDF over the table; the leftover mass maps to the pooled bin
                draw = [&, cdf](Rng& g) {
                    double u = uniform01(g);
                    auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
                    return it == cdf.end() ? Partition(std::vector<int>{deg + 1}) : shapes[it - cdf.begin()];
                };
            }
            std::map<Partition, std::size_t> index;
            for (std::size_t k = 0; k < shapes.size(); ++k) index[shapes[k]] = k;
            auto blocks = run_blocks<std::vector<long>>(trials, nthreads, [&](int b, long begin, long end) {
                std::vector<long> c(shapes.size() + 1, 0);
                Rng g = make_rng(seed, b);
                for (long i = begin; i < end; ++i) {
                    auto it = index.find(draw(g));
                    c[it == index.end() ? shapes.size() : it->second]++;
                }
                return c;
            });
            std::vector<long> counts(shapes.size() + 1, 0);
            for (const auto& b : blocks)
                for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += b[k];
            double maxz = 0;
            for (std::size_t k = 0; k < shapes.size(); ++k) {
                double z = binomial_z(counts[k], trials, probs[k]);
                if (probs[k] * trials >= 25) maxz = std::max(maxz, std::fabs(z));
                out.record({{"shape", to_string(shapes[k])}, {"count", counts[k]}, {"exact_prob", probs[k]}, {"z", z}});
            }
            std::vector<long> c(counts.begin(), counts.end() - 1);
            auto chi = chi_square_gof(c, probs, trials);
            bool pass = chi.p_value > 1e-3 && maxz <= 4;
            out.summary({{"trials", trials}, {"seed", seed}, {"pooled_count", counts.back()}, {"max_abs_z", maxz}, {"chi2", chi.statistic}, {"dof", chi.dof}, {"p_value", chi.p_value}, {"pass", pass}});
            return pass ? 0 : 1;
        }

        if (sub == kern || sub == gap) {
            SymbolSpec<double> spec;
            if (plancherel) {
                if (!(pa > 0 && pb > 0)) throw UsageError("plancherel needs a, b > 0");
                spec = SymbolSpec<double>::plancherel(pa, pb, t.get_d());
            } else {
                TSchurParams p{x, y, t};
                try {
                    p.validate();
                } catch (const std::domain_error& e) {
                    throw UsageError(e.what());
                }
                spec = SymbolSpec<double>::finite(p);
            }
            KernelOptions opt;
            opt.tol = tol;
            if (sub == kern) {
                if (lo > hi) throw UsageError("--lo must not exceed --hi");
                auto w = kernel_window(spec, lo, hi, opt, conj);
                for (int a = lo; a <= hi; ++a)
                    for (int b = lo; b <= hi; ++b) out.record({{"a", a}, {"b", b}, {"K", w.at(a, b)}, {"error_bound", static_cast<double>(w.error(a, b))}});
                out.summary({{"max_error", static_cast<double>(w.max_error())}, {"margin", w.margin}});
                return 0;
            }
            if (hmin > hlast) throw UsageError("--hmin must not exceed --hmax");
            for (int h = hmin; h <= hlast; ++h) {
                auto g = gap_probability_auto(spec, h, tol);
                out.record({{"h", h}, {"probability", g.value}, {"error_bound", static_cast<double>(g.err)}, {"window", g.L}, {"last_change", static_cast<double>(g.change)}});
            }
            return 0;
        }

        if (sub == edge) {
            int modes = !saddle.empty() + !tw2.empty() + !bessel.empty() + !rect.empty() + !tzz.empty();
            if (modes != 1) throw UsageError("edge needs exactly one of --saddle, --tw2, --bessel-airy, --rect, --tz");
            if (!saddle.empty()) {
                auto s = saddle_constants(saddle[0], saddle[1], saddle[2]);
                out.record({{"alpha", s.alpha}, {"tau", s.tau}, {"t", s.t}, {"z0", s.z0}, {"c1", s.c1}, {"c1_alt", s.c1_alt}, {"c2", s.c2}, {"phi3", s.phi3}, {"residual1", s.residual1}, {"residual2", s.residual2}});
                return 0;
            }
            if (!tw2.empty()) {
                for (double s : tw2) {
                    double f = tw2_cdf(s, q), f2 = tw2_cdf(s, 2 * q);
                    out.record({{"s", s}, {"F2", f}, {"F2_doubled", f2}, {"change", std::fabs(f - f2)}});
                }
                return 0;
            }
            std::vector<double> devs;
            auto edge_row = [&](const EdgeGridReport& r) {
                devs.push_back(r.max_deviation);
                json j{{"family", r.family}, {"param", r.param}};
                if (r.family == "rect") j.update(json{{"alpha", r.alpha}, {"tau", r.tau}});
                j.update(json{{"t", r.t},
                              {"center", r.center},
                              {"scale", r.scale},
                              {"max_deviation", r.max_deviation},
                              {"grid_error", r.grid_error},
                              {"mixed_pm", r.mixed_pm},
                              {"mixed_mp", r.mixed_mp},
                              {"mixed_airy", r.mixed_airy},
                              {"minor_deviation", std::isnan(r.minor_deviation) ? json(nullptr) : json(r.minor_deviation)},
                              {"certificate", r.certificate},
                              {"digits", r.digits}});
                out.record(j);
            };
            if (!bessel.empty())
                for (double k : bessel) edge_row(bessel_to_airy_check(k, et));
            if (!rect.empty())
                for (int n : rect) edge_row(rect_edge_check(n, alpha, tau, et));
            if (!tzz.empty())
                for (const auto& r : tz_limit_check(tz_kappa, et, tzz)) {
                    devs.push_back(r.deviation);
                    out.record({{"z", r.z}, {"zp", r.zp}, {"xi", r.xi}, {"deviation", r.deviation}, {"norm_ratio", r.norm_ratio}});
                }
            bool dec = strictly_decreasing(devs);
            out.summary({{"deviations_decreasing", dec}});
            return dec ? 0 : 1;
        }

        if (sub == asc) {
            if (!perm.empty()) {
                MarkedPermutation mp;
                mp.pi = perm;
                mp.t = at;
                if (marks.empty()) marks.assign(perm.size(), 0);
                for (int m : marks) {
                    if (m != 0 && m != 1) throw UsageError("marks must be 0 or 1");
                    mp.eps.push_back(m == 1);
                }
                try {
                    mp.validate();
                } catch (const std::exception& e) {
                    throw UsageError(e.what());
                }
                int a = t_ascent_length_rsk(mp), b = t_ascent_length_lis(mp);
                out.record({{"length_rsk", a}, {"length_dp", b}, {"agree", a == b}, {"shape", partition_json(marked_rsk(mp).shape())}});
                return a == b ? 0 : 1;
            }
            if (shape_law > 0) {
                auto s = shape_law_test(shape_law, at, trials, seed, nthreads);
                for (std::size_t k = 0; k < s.labels.size(); ++k)
                    out.record({{"shape", s.labels[k]}, {"count", s.counts[k]}, {"reference", s.reference[k]}, {"z", s.z[k]}});
                out.summary(summary_json(s));
                return s.pass ? 0 : 1;
            }
            if (akappa.empty() && aN == 0) throw UsageError("ascent needs --perm, --shape-law, --kappa or --N");
            std::vector<EdgeModel> models;
            for (double k : akappa) models.push_back(EdgeModel::poisson(k, at));
            if (aN > 0) models.push_back(EdgeModel::fixed(aN, at));
            std::vector<double> ks;
            for (const auto& m : models) {
                auto s = edge_histogram(m, trials, seed, nthreads);
                double c = 2 * std::sqrt(m.scale_parameter()), w = std::pow(m.scale_parameter(), 1.0 / 6);
                for (std::size_t k = 0; k < s.labels.size(); ++k)
                    out.record({{"model", m.kind == EdgeModel::Kind::poisson ? "poisson" : "fixed"},
                                {"param", m.scale_parameter()},
                                {"bin", std::stoi(s.labels[k])},
                                {"scaled", (std::stoi(s.labels[k]) - c) / w},
                                {"count", s.counts[k]},
                                {"reference", s.reference[k]}});
                out.summary(summary_json(s));
                if (m.kind == EdgeModel::Kind::poisson) ks.push_back(s.ks);
            }
            bool dec = strictly_decreasing(ks);
            if (ks.size() > 1) out.summary({{"ks_decreasing", dec}});
            return dec ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
