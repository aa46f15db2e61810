#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <tropteich/canonical.hpp>
#include <tropteich/enumerate.hpp>
#include <tropteich/io.hpp>
#include <tropteich/moduli.hpp>
#include <tropteich/tropicalize.hpp>

namespace fs = std::filesystem;
using tropteich::io::json;

namespace {

constexpr const char* kLibraryVersion = "0.1.0";

void write_output(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + out);
    f << text;
}

fs::path cache_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("TROPTEICH_CACHE_DIR")) return env;
    return fs::temp_directory_path() / "tropteich-cache";
}

json enumerate_json(int genus, const fs::path& cache) {
    fs::path key = cache / ("enumerate-g" + std::to_string(genus) + "-v" +
                            kLibraryVersion + ".json");
    if (fs::exists(key)) {
        std::ifstream f(key);
        json cached;
        f >> cached;
        return cached;
    }
    std::vector<tropteich::WeightedGraph> graphs =
        tropteich::enumerate_stable_graphs(genus);
    json j;
    j["genus"] = genus;
    j["count"] = graphs.size();
    json entries = json::array();
    for (const tropteich::WeightedGraph& g : graphs) {
        json e;
        e["certificate"] = tropteich::canonical_form(g).certificate;
        e["graph"] = tropteich::io::graph_to_json(g);
        entries.push_back(e);
    }
    j["graphs"] = entries;
    fs::create_directories(cache);
    std::ofstream f(key, std::ios::binary);
    f << j.dump(2) << "\n";
    return j;
}

int cmd_enumerate(int genus, const std::string& out, const std::string& cache) {
    json j = enumerate_json(genus, cache_dir(cache));
    write_output(out, j.dump(2) + "\n");
    return 0;
}

int cmd_space(int genus, const std::string& which, unsigned long long seed,
              int radius, const std::string& format, const std::string& out) {
    if (which == "CV") {
        std::vector<int> ids = tropteich::cv_locus(genus);
        json j;
        j["genus"] = genus;
        j["cv_locus"] = ids;
        write_output(out, j.dump(2) + "\n");
        return 0;
    }

    tropteich::ConeDiagram d;
    json extra;
    if (which == "Mg") {
        d = tropteich::build_Mg(genus);
    } else if (which == "Tg-chart") {
        std::mt19937_64 rng(seed);
        tropteich::ContractionPoset poset = tropteich::contraction_poset(genus);
        // seed the chart at a random marking of a top-dimensional cell
        int top = 0;
        for (size_t i = 0; i < poset.objects.size(); ++i)
            if (poset.dimension[i] > poset.dimension[top]) top = static_cast<int>(i);
        tropteich::MarkedObject seed_obj = tropteich::make_marked_object(
            tropteich::random_marking(poset.objects[top], 8, rng));
        d = tropteich::build_Tg_chart(genus, {seed_obj}, radius);
        extra["is_cone_complex"] = tropteich::is_cone_complex(d);
        std::cerr << "is_cone_complex: "
                  << (tropteich::is_cone_complex(d) ? "true" : "false") << "\n";
    } else {
        throw tropteich::ParseError("unknown space '" + which + "'");
    }

    if (format == "dot") {
        write_output(out, tropteich::io::diagram_to_dot(d));
    } else {
        json j = tropteich::io::diagram_to_json(d);
        for (auto& [k, v] : extra.items()) j[k] = v;
        write_output(out, j.dump(2) + "\n");
    }
    return 0;
}

int cmd_verify(int genus, const std::string& suite, int samples,
               unsigned long long seed, const std::string& out,
               const std::string& cache) {
    json report;
    report["genus"] = genus;
    report["suite"] = suite;
    report["seed"] = seed;
    bool ok = true;
    json checks = json::array();

    auto add_check = [&](const std::string& name, bool passed,
                         const std::string& detail) {
        json c;
        c["name"] = name;
        c["passed"] = passed;
        if (!detail.empty()) c["detail"] = detail;
        checks.push_back(c);
        ok = ok && passed;
    };

    if (suite == "graphs" || suite == "all") {
        std::vector<tropteich::WeightedGraph> fresh =
            tropteich::enumerate_stable_graphs(genus);
        bool valid = true;
        std::string detail;
        for (const tropteich::WeightedGraph& g : fresh) {
            try {
                tropteich::validate(g);
                if (!tropteich::is_stable(g) || tropteich::genus(g) != genus)
                    throw tropteich::AxiomViolation("wrong genus or unstable");
            } catch (const tropteich::DomainError& e) {
                valid = false;
                detail = e.what();
            }
        }
        add_check("graphs.enumeration-valid", valid, detail);

        json cached = enumerate_json(genus, cache_dir(cache));
        add_check("graphs.cache-consistent",
                  cached.at("count").get<size_t>() == fresh.size(), "");
    }

    if (suite == "markings" || suite == "all") {
        std::mt19937_64 rng(seed);
        bool rank_ok = true, inner_ok = true;
        for (const tropteich::WeightedGraph& g :
             tropteich::enumerate_stable_graphs(genus)) {
            tropteich::Pi1Presentation p =
                tropteich::presentation(g, g.vertices().front());
            if (p.rank() != genus) rank_ok = false;
            tropteich::Marking m = tropteich::random_marking(g, 8, rng);
            // inner action fixes the class
            std::uniform_int_distribution<int> letter(1, genus);
            tropteich::Word c{genus, {letter(rng)}};
            tropteich::GroupMap inner = tropteich::identity_map(genus);
            for (tropteich::Word& w : inner.images)
                w = tropteich::conjugate(w, c);
            if (!tropteich::top_equivalent(m, tropteich::act(m, inner)))
                inner_ok = false;
        }
        add_check("markings.rank-equals-genus", rank_ok, "");
        add_check("markings.inner-action-trivial", inner_ok, "");
    }

    if (suite == "complex" || suite == "all") {
        tropteich::ConeDiagram mg = tropteich::build_Mg(genus);
        std::vector<int> f = tropteich::f_vector(mg);
        add_check("complex.max-dimension",
                  static_cast<int>(f.size()) - 1 == 3 * genus - 3, "");
        std::mt19937_64 rng(seed);
        tropteich::ContractionPoset poset = tropteich::contraction_poset(genus);
        tropteich::MarkedObject s = tropteich::make_marked_object(
            tropteich::random_marking(poset.objects.back(), 8, rng));
        tropteich::ConeDiagram chart = tropteich::build_Tg_chart(genus, {s}, 0);
        add_check("complex.chart-is-cone-complex",
                  tropteich::is_cone_complex(chart), "");
    }

    if (suite == "quotient" || suite == "all") {
        tropteich::QuotientReport qr =
            tropteich::verify_quotient(genus, samples, seed);
        for (const tropteich::CheckResult& c : qr.results)
            add_check("quotient." + c.name, c.passed, c.detail);
    }

    report["checks"] = checks;
    report["passed"] = ok;
    write_output(out, report.dump(2) + "\n");
    return ok ? 0 : 1;
}

int cmd_tropicalize(const std::string& model_file, long long prime,
                    int space_genus, const std::string& out) {
    std::ifstream f(model_file);
    if (!f) throw tropteich::ParseError("cannot open model file " + model_file);
    json mj;
    try {
        mj = json::parse(f);
    } catch (const json::parse_error& e) {
        throw tropteich::ParseError(e.what());
    }
    tropteich::StableModel model = tropteich::io::model_from_json(mj);
    if (prime > 0) {
        model.valuation = tropteich::StableModel::Valuation::PAdic;
        model.prime = prime;
    }
    tropteich::TropicalCurveExt curve = tropteich::dual_tropical_curve(model);
    json j;
    j["tropical_curve"] = tropteich::io::tropical_to_json(curve);
    if (space_genus > 0) {
        tropteich::ConeDiagram space = tropteich::build_Mg(space_genus);
        j["cell"] =
            tropteich::io::cell_location_to_json(tropteich::locate_cell(curve, space));
    }
    write_output(out, j.dump(2) + "\n");
    return 0;
}

int cmd_export(int genus, const std::string& which, const std::string& format,
               const std::string& out) {
    return cmd_space(genus, which, 0, 0, format, out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tropical moduli of curves: enumeration, charts, verification"};
    app.require_subcommand(1);

    int genus = 2;
    unsigned long long seed = 20240915ULL;
    int radius = 0;
    int samples = 50;
    long long prime = 0;
    std::string out, cache, format = "json", which = "Mg", suite = "all";
    std::string model_file;

    CLI::App* en = app.add_subcommand("enumerate", "list stable graph classes");
    en->add_option("--genus", genus)->required();
    en->add_option("--out", out);
    en->add_option("--cache-dir", cache);

    CLI::App* sp = app.add_subcommand("space", "build a moduli diagram");
    sp->add_option("--genus", genus)->required();
    sp->add_option("--which", which)->check(CLI::IsMember({"Mg", "Tg-chart", "CV"}));
    sp->add_option("--seed", seed);
    sp->add_option("--radius", radius);
    sp->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
    sp->add_option("--out", out);

    CLI::App* ve = app.add_subcommand("verify", "run property suites");
    ve->add_option("--genus", genus)->required();
    ve->add_option("--suite", suite)
        ->check(CLI::IsMember({"graphs", "markings", "complex", "quotient", "all"}));
    ve->add_option("--samples", samples);
    ve->add_option("--seed", seed);
    ve->add_option("--out", out);
    ve->add_option("--cache-dir", cache);

    int space_genus = 0;
    CLI::App* tr = app.add_subcommand("tropicalize", "dual tropical curve of a model");
    tr->add_option("--model", model_file)->required();
    tr->add_option("--prime", prime);
    tr->add_option("--space", space_genus, "genus of the ambient space to locate in");
    tr->add_option("--out", out);

    CLI::App* ex = app.add_subcommand("export", "export a diagram");
    ex->add_option("--genus", genus)->required();
    ex->add_option("--which", which)->check(CLI::IsMember({"Mg", "CV"}));
    ex->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
    ex->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (en->parsed()) return cmd_enumerate(genus, out, cache);
        if (sp->parsed()) return cmd_space(genus, which, seed, radius, format, out);
        if (ve->parsed()) return cmd_verify(genus, suite, samples, seed, out, cache);
        if (tr->parsed()) return cmd_tropicalize(model_file, prime, space_genus, out);
        if (ex->parsed()) return cmd_export(genus, which, format, out);
    } catch (const tropteich::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const tropteich::DomainError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
