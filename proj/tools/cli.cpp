#include "cli.hpp"

#include "parmod/moduli/torelli.hpp"
#include "parmod/verify/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace parmod::cli {

namespace {

using exact::Json;
using exact::Scalar;
using moduli::ModuliParams;

class UsageError : public Error {
public:
    explicit UsageError(const std::string& why) : Error(why) {}
};

struct Config {
    bool symbolic = false;
    std::vector<std::string> lambda, t;
    std::string s;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    std::string format = "json";
    std::string output;
    bool timing = false;
};

void add_common(CLI::App* sub, Config& cfg, bool many) {
    auto* sym = sub->add_flag("--symbolic", cfg.symbolic, "lambda and t as variables (the default)");
    auto* l = sub->add_option("--lambda", cfg.lambda, many ? "lambda values, paired with --t" : "lambda value");
    auto* t = sub->add_option("--t", cfg.t, many ? "t values, paired with --lambda" : "t value");
    if (!many) {
        l->expected(1);
        t->expected(1);
        sub->add_option("--s", cfg.s, "s with s^2 = t (t - 1)(t - lambda)");
    }
    sym->excludes(l)->excludes(t);
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("-o,--output", cfg.output, "write to this file instead of stdout");
}

Scalar scalar_arg(const std::string& s) {
    try {
        return exact::parse_scalar(s);
    } catch (const Error&) {
        throw UsageError("not a rational number: '" + s + "'");
    }
}

ModuliParams single_params(const Config& cfg) {
    if (cfg.lambda.empty() && cfg.t.empty()) {
        if (!cfg.s.empty()) throw UsageError("--s needs --lambda and --t");
        return ModuliParams::make_symbolic();
    }
    if (cfg.lambda.size() != 1 || cfg.t.size() != 1) throw UsageError("numeric runs need both --lambda and --t");
    std::optional<Scalar> s;
    if (!cfg.s.empty()) s = scalar_arg(cfg.s);
    return ModuliParams::specialized(scalar_arg(cfg.lambda[0]), scalar_arg(cfg.t[0]), s);
}

void write(const Config& cfg, std::ostream& out, const Json& doc, const std::string& text) {
    std::string body = cfg.format == "json" ? doc.dump(2) + "\n" : text;
    if (cfg.output.empty()) {
        out << body;
        return;
    }
    std::ofstream f(cfg.output);
    if (!f) throw UsageError("cannot write " + cfg.output);
    f << body;
}

// --------------------------------------------------------------- emit

std::pair<Json, std::string> emit(const std::string& what, const std::string& map_name, const ModuliParams& p) {
    std::ostringstream text;
    if (what == "gamma") {
        auto c = moduli::gamma_curve(p);
        text << c.poly.str() << "\n";
        return {proj::to_json(c), text.str()};
    }
    if (what == "sigma" || what == "conic") {
        auto c = what == "sigma" ? moduli::sigma_cubic(p) : moduli::standard_conic(p);
        text << c.poly.str() << "\n";
        return {proj::to_json(c), text.str()};
    }
    if (what == "lines") {
        Json items = Json::array();
        auto lines = moduli::standard_lines(p);
        std::size_t i = 0;
        for (const auto& o : moduli::omega()) {
            if (o.kind != moduli::ConfigObject::Kind::line) continue;
            items.push_back({{"name", o.name()}, {"curve", proj::to_json(lines[i])}});
            text << o.name() << ": " << lines[i].poly.str() << "\n";
            ++i;
        }
        return {Json{{"kind", "lines"}, {"items", items}}, text.str()};
    }
    if (what == "points") {
        Json items = Json::array();
        for (moduli::Label k : moduli::kLabels) {
            auto pt = moduli::special_point(k, p);
            std::string name = "D_" + moduli::label_name(k);
            items.push_back({{"name", name}, {"point", proj::to_json(pt)}});
            text << name << " = " << pt.str() << "\n";
        }
        return {Json{{"kind", "points"}, {"items", items}}, text.str()};
    }
    if (what == "map") {
        if (map_name.empty()) throw UsageError("emit map needs a map name");
        auto tag = moduli::map_from_name(map_name);
        auto m = moduli::named_map(tag, p);
        Json j = proj::to_json(m);
        j["name"] = moduli::map_name(tag);
        for (std::size_t i = 0; i < m.comps().size(); ++i) text << moduli::map_name(tag) << "[" << i << "] = " << m.comps()[i].str() << "\n";
        return {j, text.str()};
    }
    throw UsageError("unknown object '" + what + "'");
}

// --------------------------------------------------------------- eval

proj::ProjPoint parse_point(std::string s, proj::Space space) {
    std::string clean;
    for (char ch : s)
        if (ch != '(' && ch != ')' && ch != ' ') clean += ch;
    std::vector<exact::Poly> coords;
    std::stringstream ss(clean);
    for (std::string item; std::getline(ss, item, ',');) coords.push_back(exact::Poly(scalar_arg(item)));
    std::size_t want = space == proj::Space::P2 ? 3 : space == proj::Space::P1xP1 ? 4 : 2;
    if (coords.size() != want)
        throw UsageError("point has " + std::to_string(coords.size()) + " coordinates, " + proj::space_name(space) + " needs " +
                         std::to_string(want));
    return proj::ProjPoint(space, coords);
}

std::pair<Json, std::string> eval(const std::string& name, const std::string& point, const ModuliParams& p) {
    auto tag = moduli::map_from_name(name);
    auto m = moduli::named_map(tag, p);
    auto pt = parse_point(point, m.source());
    Json j = {{"map", moduli::map_name(tag)}, {"point", proj::to_json(pt)}};
    try {
        auto img = m.apply(pt);
        j["image"] = proj::to_json(img);
        return {j, img.str() + "\n"};
    } catch (const proj::Undefined&) {
        j["undefined"] = true;
        std::string where;
        if (m.source() == proj::Space::P2)
            for (moduli::Label k : moduli::kLabels)
                if (moduli::special_point(k, p) == pt) where = "D_" + moduli::label_name(k);
        if (!where.empty()) j["base_point"] = where;
        return {j, where.empty() ? "undefined\n" : "undefined (base point " + where + ")\n"};
    }
}

// ------------------------------------------------------------- verify

int verify(const Config& cfg, const std::vector<std::string>& checks, std::ostream& out) {
    verify::VerifyPlan plan;
    plan.patterns = checks;
    plan.jobs = cfg.jobs;
    plan.seed = cfg.seed;
    plan.timing = cfg.timing;
    if (cfg.lambda.size() != cfg.t.size()) throw UsageError("--lambda and --t must be given the same number of times");
    plan.symbolic = cfg.lambda.empty();
    for (std::size_t i = 0; i < cfg.lambda.size(); ++i) plan.params.push_back({scalar_arg(cfg.lambda[i]), scalar_arg(cfg.t[i])});
    std::vector<verify::Certificate> certs;
    try {
        certs = verify::run_suite(plan);
    } catch (const verify::InvalidPlan& e) {
        throw UsageError(e.what());
    }
    Json doc = verify::report(certs, plan);
    std::ostringstream text;
    for (const auto& c : certs) {
        text << c.name << ": " << verify::status_name(c.status);
        if (!c.reason.empty()) text << " (" << c.reason << ")";
        if (cfg.timing) text << " [" << c.elapsed_ms << " ms]";
        text << "\n";
    }
    auto s = verify::summarize(certs);
    text << "summary: " << s.pass << " pass, " << s.fail << " fail, " << s.skipped << " skipped\n";
    write(cfg, out, doc, text.str());
    return s.fail == 0 ? kOk : kVerifyFailed;
}

// ------------------------------------------------------------ torelli

Json read_json(const std::string& path) {
    try {
        if (path == "-") return Json::parse(std::cin);
        std::ifstream f(path);
        if (!f) throw UsageError("cannot read " + path);
        return Json::parse(f);
    } catch (const Json::parse_error& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
}

std::pair<Json, std::string> torelli(const std::string& path) {
    auto curve = proj::bicurve_from_json(read_json(path));
    auto r = moduli::torelli_reconstruct(curve);
    std::ostringstream text;
    text << "lambda = " << exact::to_string(r.lambda) << ", t = " << exact::to_string(r.t) << "\n"
         << "mz = " << r.mz.str() << "\n"
         << "mw = " << r.mw.str() << "\n"
         << "class size = " << r.members.size() << "\n";
    return {moduli::to_json(r), text.str()};
}

}  // namespace

Json reparse(const Json& doc) {
    std::string kind = doc.value("kind", "");
    if (kind == "planecurve") return proj::to_json(proj::planecurve_from_json(doc));
    if (kind == "bicurve") return proj::to_json(proj::bicurve_from_json(doc));
    if (kind == "map_p2" || kind == "map_ruled") {
        Json j = proj::to_json(proj::map_from_json(doc));
        if (doc.contains("name")) j["name"] = doc.at("name");
        return j;
    }
    if (kind == "lines" || kind == "points") {
        Json items = Json::array();
        for (const auto& it : doc.at("items")) {
            if (kind == "lines")
                items.push_back({{"name", it.at("name")}, {"curve", proj::to_json(proj::planecurve_from_json(it.at("curve")))}});
            else
                items.push_back({{"name", it.at("name")}, {"point", proj::to_json(proj::point_from_json(it.at("point")))}});
        }
        return {{"kind", kind}, {"items", items}};
    }
    throw exact::ParseError("unknown document kind '" + kind + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations on the moduli of rank 2 parabolic bundles over a twice punctured elliptic curve"};
    app.name("parmod");
    app.require_subcommand(1);
    Config cfg;

    auto* emit_cmd = app.add_subcommand("emit", "print a curve, the special points or a map");
    std::string what, map_name;
    emit_cmd->add_option("object", what, "gamma, sigma, conic, lines, points or map")
        ->required()
        ->check(CLI::IsMember({"gamma", "sigma", "conic", "lines", "points", "map"}));
    emit_cmd->add_option("name", map_name, "map name for 'map'");
    add_common(emit_cmd, cfg, false);

    auto* eval_cmd = app.add_subcommand("eval", "apply a map to a rational point");
    std::string eval_map, point;
    eval_cmd->add_option("map", eval_map, "map name")->required();
    eval_cmd->add_option("--point", point, "a,b,c in P2 or (a,b),(c,d) in P1xP1")->required();
    add_common(eval_cmd, cfg, false);

    auto* verify_cmd = app.add_subcommand("verify", "run the certificate suite");
    std::vector<std::string> checks;
    verify_cmd->add_option("--check", checks, "glob on check names, repeatable");
    verify_cmd->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--timing", cfg.timing, "include elapsed times in the report");
    add_common(verify_cmd, cfg, true);

    auto* torelli_cmd = app.add_subcommand("torelli", "recover (lambda, t) from a Gamma-type curve");
    std::string path;
    torelli_cmd->add_option("file", path, "bicurve JSON file, '-' for stdin")->required();
    torelli_cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
    torelli_cmd->add_option("-o,--output", cfg.output, "write to this file instead of stdout");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*emit_cmd) {
            auto [doc, text] = emit(what, map_name, single_params(cfg));
            write(cfg, out, doc, text);
        } else if (*eval_cmd) {
            auto [doc, text] = eval(eval_map, point, single_params(cfg));
            write(cfg, out, doc, text);
        } else if (*verify_cmd) {
            return verify(cfg, checks, out);
        } else if (*torelli_cmd) {
            auto [doc, text] = torelli(path);
            write(cfg, out, doc, text);
        }
        return kOk;
    } catch (const moduli::IrrationalBranch& e) {
        err << "error: " << e.what() << "\n";
        return kIrrationalBranch;
    } catch (const moduli::NotGammaType& e) {
        err << "error: " << e.what() << "\n";
        return kNotGammaType;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace parmod::cli
