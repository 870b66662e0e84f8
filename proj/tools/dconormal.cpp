// dconormal: conormal spaces, integrality checks, Whitney conditions and
// polar varieties from the command line. JSON report on stdout, human
// summary and timings on stderr (suppressed by --json-only).
//
// Exit codes: 0 ok, 1 verdict false, 2 input error, 3 resource cap hit.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "cds/integrality.hpp"
#include "cds/polar.hpp"
#include "cds/whitney.hpp"

using json = nlohmann::ordered_json;
using namespace cds;

namespace {

std::string fnv1a_hex(const std::string& data) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream ss(s);
    std::vector<std::string> out;
    for (std::string w; ss >> w;) out.push_back(w);
    return out;
}

// "vars: x y z" header, then one polynomial per line; '#' comments allowed
conormal::AffineVariety parse_var_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    VarsPtr vars;
    std::vector<Polynomial> gens;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto body = split_ws(line);
        if (body.empty()) continue;
        if (!vars) {
            if (body[0] != "vars:")
                throw InputError("line 1: expected 'vars:' header");
            vars = make_vars({body.begin() + 1, body.end()});
            continue;
        }
        std::string joined;
        for (const auto& w : body) joined += w + " ";
        try {
            gens.push_back(parse_polynomial(joined, vars));
        } catch (const InputError& e) {
            throw InputError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!vars) throw InputError("missing 'vars:' header");
    if (gens.empty()) throw InputError("no generators");
    return conormal::make_variety(Ideal::make(vars, std::move(gens)));
}

// polynomials over the chart ring of (n, d, chart); optional "vars:" header
// renames the z part
Ideal parse_zvar_file(const std::string& text, const grassmann::Chart& chart) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> z_names;
    std::vector<std::string> poly_lines;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto body = split_ws(line);
        if (body.empty()) continue;
        if (body[0] == "vars:" && poly_lines.empty() && z_names.empty()) {
            z_names.assign(body.begin() + 1, body.end());
            continue;
        }
        std::string joined;
        for (const auto& w : body) joined += w + " ";
        poly_lines.push_back(joined);
    }
    auto vars = grassmann::chart_ring(chart, z_names);
    std::vector<Polynomial> gens;
    for (const auto& p : poly_lines) gens.push_back(parse_polynomial(p, vars));
    if (gens.empty()) throw InputError("no generators");
    return Ideal::make(vars, std::move(gens));
}

std::vector<GaussRat> parse_point(const std::string& text) {
    std::vector<GaussRat> out;
    std::string cur;
    std::istringstream ss(text);
    while (std::getline(ss, cur, ',')) out.push_back(parse_scalar(cur));
    return out;
}

std::vector<int> parse_axes(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    std::istringstream ss(text);
    while (std::getline(ss, cur, ',')) out.push_back(std::stoi(cur) - 1);  // 1-based input
    return out;
}

json chart_json(const grassmann::Chart& c) {
    json j = json::array();
    for (int i : c.w0) j.push_back(i + 1);
    return j;
}

json ideal_json(const Ideal& I) {
    json j;
    if (contains_one(I)) {
        j["empty"] = true;
        j["generators"] = json::array({"1"});
        j["dim"] = nullptr;
    } else {
        j["empty"] = false;
        j["generators"] = sorted_generator_strings(I);
        j["dim"] = I.is_zero() ? static_cast<int>(I.nvars()) : ideal_dimension(I);
    }
    return j;
}

json verdict_json(const integrality::IntegralityVerdict& v) {
    json j;
    j["is_integral"] = v.is_integral;
    j["dim_Z"] = v.dim_Z;
    j["t"] = v.t;
    j["bound"] = v.bound;
    j["bounds_hold"] = v.bounds_hold;
    j["dim_maximal"] = v.dim_maximal;
    j["witness"] = v.witness;
    return j;
}

struct Options {
    std::string file;
    int d = -1, chart = 0, n = -1, t = -1, ell = -1, k = -1;
    int curves = 20, trials = 10000, draws = 5, samples = 25;
    uint64_t seed = 0;
    bool all_charts = false;
    std::string point, axes;
};

grassmann::Chart pick_chart(int n, int d, int idx) {
    auto cover = grassmann::chart_cover(n, d);
    if (idx < 0 || idx >= static_cast<int>(cover.size()))
        throw InputError("--chart index out of range");
    return cover[static_cast<size_t>(idx)];
}

json conormal_chart_report(const conormal::AffineVariety& X, int d,
                           const grassmann::Chart& chart) {
    auto C = conormal::conormal_ideal(X, d, chart);
    json j;
    j["chart_w0"] = chart_json(chart);
    j["generators"] = sorted_generator_strings(C.ideal);
    j["dim"] = ideal_dimension(C.ideal);
    j["dim_formula_ok"] = conormal::dimension_formula_check(C);
    std::vector<GaussRat> origin(static_cast<size_t>(X.n), GaussRat(0));
    bool origin_on_x = true;
    for (const auto& g : X.ideal.gens()) origin_on_x &= g.eval(origin).is_zero();
    j["fiber_at_origin"] = origin_on_x ? ideal_json(conormal::fiber_ideal(C, origin)) : json(nullptr);
    return j;
}

int run_conormal(const Options& o, json& results, bool nash) {
    auto X = parse_var_file(read_file(o.file));
    int d = nash ? X.k : o.d;
    if (d < 0) throw InputError("--d is required");
    results["n"] = X.n;
    results["k"] = X.k;
    results["d"] = d;
    json charts = json::array();
    bool all_ok = true;
    if (o.all_charts) {
        for (const auto& c : grassmann::chart_cover(X.n, d)) {
            charts.push_back(conormal_chart_report(X, d, c));
            all_ok &= charts.back()["dim_formula_ok"].get<bool>();
        }
    } else {
        charts.push_back(conormal_chart_report(X, d, pick_chart(X.n, d, o.chart)));
        all_ok = charts.back()["dim_formula_ok"].get<bool>();
    }
    results["charts"] = std::move(charts);
    return all_ok ? 0 : 1;
}

int run_fiber(const Options& o, json& results) {
    auto X = parse_var_file(read_file(o.file));
    if (o.d < 0) throw InputError("--d is required");
    auto C = conormal::conormal_ideal(X, o.d, pick_chart(X.n, o.d, o.chart));
    auto p = parse_point(o.point);
    results["chart_w0"] = chart_json(C.chart);
    results["fiber"] = ideal_json(conormal::fiber_ideal(C, p));
    return 0;
}

int run_check_integral(const Options& o, json& results, bool full_characterize) {
    if (o.n < 0 || o.d < 0) throw InputError("--n and --d are required");
    auto chart = pick_chart(o.n, o.d, o.chart);
    auto Z = integrality::make_subvariety(chart, parse_zvar_file(read_file(o.file), chart));
    if (full_characterize) {
        auto res = integrality::characterize(Z);
        results["verdict"] = integrality::to_string(res.verdict);
        results["cross_validated"] = res.cross_validated;
        results["detail"] = verdict_json(res.detail);
        return res.verdict == integrality::Characterization::NotIntegral ? 1 : 0;
    }
    auto v = integrality::dimension_bound_check(Z);
    results["verdict"] = verdict_json(v);
    return v.is_integral ? 0 : 1;
}

int run_whitney_a(const Options& o, json& results) {
    auto X = parse_var_file(read_file(o.file));
    auto axes = parse_axes(o.axes);
    std::sort(axes.begin(), axes.end());
    json charts = json::array();
    for (const auto& chart : grassmann::chart_cover(X.n, X.k)) {
        bool admissible = true;
        for (int a : axes) admissible &= std::binary_search(chart.w0.begin(), chart.w0.end(), a);
        if (!admissible) continue;
        json cj;
        cj["chart_w0"] = chart_json(chart);
        cj["condition_a"] = whitney::condition_a_check(whitney::make_instance(X, axes, chart));
        charts.push_back(std::move(cj));
    }
    bool agg = whitney::condition_a_check_all_charts(X, axes);
    results["charts"] = std::move(charts);
    results["aggregate"] = agg;
    return agg ? 0 : 1;
}

int run_whitney_w(const Options& o, json& results) {
    auto X = parse_var_file(read_file(o.file));
    auto axes = parse_axes(o.axes);
    std::sort(axes.begin(), axes.end());
    grassmann::Chart chart;
    bool found = false;
    auto cover = grassmann::chart_cover(X.n, X.k);
    for (size_t i = 0; i < cover.size() && !found; ++i) {
        bool admissible = true;
        for (int a : axes)
            admissible &= std::binary_search(cover[i].w0.begin(), cover[i].w0.end(), a);
        if (admissible && static_cast<int>(i) >= o.chart) {
            chart = cover[i];
            found = true;
        }
    }
    if (!found) throw InputError("no admissible chart for the given axes");
    auto rep = whitney::condition_w_probe(whitney::make_instance(X, axes, chart), o.curves, o.seed);
    results["chart_w0"] = chart_json(chart);
    json samples = json::array();
    for (const auto& s : rep.samples) {
        json sj;
        sj["curve"] = s.curve;
        sj["scale"] = s.scale;
        sj["dist"] = s.dist;
        sj["delta"] = s.delta;
        sj["ratio"] = s.ratio;
        samples.push_back(std::move(sj));
    }
    results["samples"] = std::move(samples);
    results["max_ratio"] = rep.max_ratio;
    results["verdict"] = rep.bounded ? "bounded" : "unbounded-suspected";
    return rep.bounded ? 0 : 1;
}

int run_delta(const Options& o, json& results) {
    if (o.n < 0 || o.d < 0 || o.t < 0) throw InputError("--n, --d and --t are required");
    bool ok = whitney::delta_bound_property(o.n, o.d, o.t, o.trials, o.seed);
    results["trials"] = o.trials;
    results["verdict"] = ok;
    return ok ? 0 : 1;
}

int run_polar(const Options& o, json& results) {
    auto X = parse_var_file(read_file(o.file));
    if (o.ell < 0 || o.k < 0) throw InputError("--ell and --k are required");
    auto chart = pick_chart(X.n, o.ell, o.chart);
    auto vote = polar::generic_polar(X, o.k, o.ell, chart, o.draws, o.seed);
    results["chart_w0"] = chart_json(chart);
    results["draw_dims"] = vote.dims;
    results["majority_dim"] = vote.majority_dim;
    results["draws_consistent"] = vote.consistent;
    auto S = polar::random_condition(X.n, o.k, o.ell, X.k, o.seed);
    auto P = polar::polar_ideal(X, S, chart);
    results["representative"] = ideal_json(P.ideal);
    auto fib = polar::polar_fiber_dimension_check(X, S, chart);
    results["fiber_formula"] = fib.has_value() ? json(*fib ? "true" : "false") : json("empty");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* e = std::getenv("CONORMAL_MAX_BASIS"))
        groebner_limits().max_basis = static_cast<size_t>(std::strtoull(e, nullptr, 10));
    if (const char* e = std::getenv("CONORMAL_MAX_DEGREE"))
        groebner_limits().max_degree = static_cast<uint32_t>(std::strtoul(e, nullptr, 10));

    CLI::App app{"d-conormal spaces, integrality, Whitney conditions, polar varieties"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json_only = false;
    app.add_flag("--json-only", json_only, "suppress the stderr summary");

    Options o;
    auto add_common = [&](CLI::App* sub, bool with_file) {
        if (with_file) sub->add_option("file", o.file, "input file")->required();
        return sub;
    };

    auto* c_con = add_common(app.add_subcommand("conormal", "chart ideal of C_d(X)"), true);
    c_con->add_option("--d", o.d)->required();
    c_con->add_option("--chart", o.chart);
    c_con->add_flag("--all-charts", o.all_charts);

    auto* c_nash = add_common(app.add_subcommand("nash", "Nash modification chart (d = k)"), true);
    c_nash->add_option("--chart", o.chart);
    c_nash->add_flag("--all-charts", o.all_charts);

    auto* c_fib = add_common(app.add_subcommand("fiber", "fiber of nu_d over a point"), true);
    c_fib->add_option("--d", o.d)->required();
    c_fib->add_option("--point", o.point, "comma-separated rational coordinates")->required();
    c_fib->add_option("--chart", o.chart);

    auto* c_ci = add_common(app.add_subcommand("check-integral", "integrality of a chart ideal"), true);
    c_ci->add_option("--n", o.n)->required();
    c_ci->add_option("--d", o.d)->required();
    c_ci->add_option("--chart", o.chart);

    auto* c_ch = add_common(app.add_subcommand("characterize", "classify a chart subvariety"), true);
    c_ch->add_option("--n", o.n)->required();
    c_ch->add_option("--d", o.d)->required();
    c_ch->add_option("--chart", o.chart);

    auto* c_wa = add_common(app.add_subcommand("whitney-a", "condition a) radical test"), true);
    c_wa->add_option("--y-axes", o.axes, "1-based coordinate axes of Y")->required();

    auto* c_ww = add_common(app.add_subcommand("whitney-w", "condition w) numeric probe"), true);
    c_ww->add_option("--y-axes", o.axes)->required();
    c_ww->add_option("--curves", o.curves);
    c_ww->add_option("--seed", o.seed);
    c_ww->add_option("--chart", o.chart);

    auto* c_de = app.add_subcommand("delta", "delta(Y,W) <= t sqrt(n-d) sup|a_ij| property");
    c_de->add_option("--n", o.n)->required();
    c_de->add_option("--d", o.d)->required();
    c_de->add_option("--t", o.t)->required();
    c_de->add_option("--trials", o.trials);
    c_de->add_option("--seed", o.seed);

    auto* c_po = add_common(app.add_subcommand("polar", "polar variety P_k(X;D)"), true);
    c_po->add_option("--ell", o.ell)->required();
    c_po->add_option("--k", o.k)->required();
    c_po->add_option("--seed", o.seed);
    c_po->add_option("--chart", o.chart);
    c_po->add_option("--draws", o.draws);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    auto* sub = app.get_subcommands()[0];

    json report;
    report["command"] = sub->get_name();
    json inputs;
    if (!o.file.empty()) {
        inputs["file"] = o.file;
        try {
            inputs["digest"] = fnv1a_hex(read_file(o.file));
        } catch (const InputError&) {
            inputs["digest"] = nullptr;
        }
    }
    json args = json::array();
    for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
    inputs["argv"] = std::move(args);
    report["inputs"] = std::move(inputs);
    report["results"] = json::object();

    int code = 0;
    auto t0 = std::chrono::steady_clock::now();
    try {
        json& res = report["results"];
        const std::string& name = sub->get_name();
        if (name == "conormal") code = run_conormal(o, res, false);
        else if (name == "nash") code = run_conormal(o, res, true);
        else if (name == "fiber") code = run_fiber(o, res);
        else if (name == "check-integral") code = run_check_integral(o, res, false);
        else if (name == "characterize") code = run_check_integral(o, res, true);
        else if (name == "whitney-a") code = run_whitney_a(o, res);
        else if (name == "whitney-w") code = run_whitney_w(o, res);
        else if (name == "delta") code = run_delta(o, res);
        else if (name == "polar") code = run_polar(o, res);
    } catch (const ResourceError& e) {
        report["error"] = e.what();
        code = 3;
    } catch (const InputError& e) {
        report["error"] = e.what();
        code = 2;
    } catch (const std::exception& e) {
        report["error"] = e.what();
        code = 2;
    }

    std::cout << report.dump(2) << "\n";
    if (!json_only) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cerr << sub->get_name() << ": exit " << code << ", elapsed " << ms << " ms\n";
    }
    return code;
}
