#include "chowforge/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chowforge/catalog.hpp"
#include "chowforge/checks.hpp"
#include "chowforge/polyparse.hpp"

namespace chowforge {

namespace {

using json = nlohmann::ordered_json;

struct ParamFlags {
    long g = 0, n = 0, a = 0, b = 0;
    CLI::Option* g_opt = nullptr;
    CLI::Option* n_opt = nullptr;
    CLI::Option* a_opt = nullptr;
    CLI::Option* b_opt = nullptr;

    void attach(CLI::App* app, bool with_ab)
    {
        g_opt = app->add_option("--g", g, "genus");
        n_opt = app->add_option("--n", n, "component index");
        if (with_ab) {
            a_opt = app->add_option("--a", a, "first degree parameter (thm1.2)");
            b_opt = app->add_option("--b", b, "second degree parameter (thm1.2)");
        }
    }

    Params gn() const
    {
        if (!*g_opt || !*n_opt)
            throw ParamError("--g and --n are required");
        return Params::from_gn(g, n);
    }

    Params ab_or_gn() const
    {
        if (a_opt && (*a_opt || *b_opt)) {
            if (!*a_opt || !*b_opt)
                throw ParamError("--a and --b must be given together");
            return Params::from_ab(a, b);
        }
        if (*g_opt && *n_opt)
            return Params::from_gn(g, n);
        throw ParamError("--a and --b (or --g and --n) are required");
    }
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Presentation load_ideal(const std::string& path)
{
    IdealFile f = parse_ideal_file(read_file(path));
    return Presentation(f.ring, f.relations);
}

json params_json(const Params& p)
{
    json j;
    j["g"] = p.g ? json(*p.g) : json(nullptr);
    j["n"] = p.n ? json(*p.n) : json(nullptr);
    j["a"] = p.a ? json(p.a) : json(nullptr);
    j["b"] = p.b ? json(p.b) : json(nullptr);
    return j;
}

json ring_json(const RingSpec& ring)
{
    json vars = json::array();
    for (const auto& v : ring.vars())
        vars.push_back(json{{"name", v.name}, {"weight", v.weight}});
    return vars;
}

json relations_json(const Presentation& p)
{
    json rels = json::array();
    for (const auto& r : p.relations())
        rels.push_back(canonical_string(r));
    return rels;
}

void write_presentation_text(std::ostream& out, const Presentation& p)
{
    if (p.dropped_zero_relations())
        out << "# dropped " << p.dropped_zero_relations() << " zero relation(s)\n";
    out << p.to_text();
}

Presentation theorem_presentation(const std::string& theorem, const ParamFlags& flags,
                                  const std::string& ideal_path)
{
    if (theorem == "thm1.2")
        return excised_pair_presentation(flags.ab_or_gn());
    if (theorem == "thm1.3")
        return rh_even_presentation(flags.gn());
    if (theorem == "thm1.9")
        return wrh_odd_presentation(flags.gn());
    if (theorem == "cor1.10")
        return wrh_even_presentation(flags.gn());
    if (theorem == "cor1.11") {
        if (ideal_path.empty())
            throw ParamError("cor1.11 needs --ideal FILE");
        Params p = flags.gn();
        return wrh_odd_even_from_external(p, load_ideal(ideal_path));
    }
    throw ParamError("unknown theorem '" + theorem + "'");
}

Params theorem_params(const std::string& theorem, const ParamFlags& flags)
{
    return theorem == "thm1.2" ? flags.ab_or_gn() : flags.gn();
}

Derivation run_derivation(const std::string& pipeline, const Params& p)
{
    return pipeline == "rh-even" ? derive_rh_even(p) : derive_wrh_odd(p);
}

unsigned default_jobs()
{
    if (const char* env = std::getenv("CHOWFORGE_JOBS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1)
            return static_cast<unsigned>(v);
    }
    return 1;
}

const std::vector<std::string> kFormats{"text", "json"};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Chow rings of hyperelliptic Prym moduli: presentations and checks", "chowforge"};
    app.require_subcommand(1);

    // present
    auto* present = app.add_subcommand("present", "print a closed-form presentation");
    std::string theorem;
    std::string format = "text";
    std::string ideal_path;
    ParamFlags present_flags;
    present->add_option("--theorem", theorem, "thm1.2 | thm1.3 | thm1.9 | cor1.10 | cor1.11")
        ->required()
        ->check(CLI::IsMember({"thm1.2", "thm1.3", "thm1.9", "cor1.10", "cor1.11"}));
    present_flags.attach(present, true);
    present->add_option("--ideal", ideal_path, "external ideal file (cor1.11)");
    present->add_option("--format", format)->check(CLI::IsMember(kFormats));

    // derive
    auto* derive = app.add_subcommand("derive", "rebuild a presentation from the excised pair ring");
    std::string pipeline;
    bool emit_steps = false;
    ParamFlags derive_flags;
    derive->add_option("--pipeline", pipeline, "rh-even | wrh-odd")
        ->required()
        ->check(CLI::IsMember({"rh-even", "wrh-odd"}));
    derive_flags.attach(derive, false);
    derive->add_flag("--emit-steps", emit_steps, "print every intermediate presentation");
    derive->add_option("--format", format)->check(CLI::IsMember(kFormats));

    // verify
    auto* verify = app.add_subcommand("verify", "run identity checks over parameter grids");
    std::string suite = "all";
    long g_max = 20, ab_max = 8;
    unsigned jobs = default_jobs();
    bool no_timing = false;
    std::string external_path;
    ParamFlags verify_flags;
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"all", "derivations", "lemma34", "remark37", "identities"}));
    verify->add_option("--g-max", g_max)->check(CLI::NonNegativeNumber);
    verify->add_option("--ab-max", ab_max)->check(CLI::NonNegativeNumber);
    verify->add_option("--jobs", jobs, "worker threads (default: CHOWFORGE_JOBS or 1)")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--no-timing", no_timing, "report elapsed_ms as 0");
    verify->add_option("--external", external_path, "user-supplied ideal file (g odd, n even)");
    verify_flags.attach(verify, false);
    verify->add_option("--format", format)->check(CLI::IsMember(kFormats));

    // graded
    auto* graded = app.add_subcommand("graded", "abelian invariants of the graded pieces");
    std::string graded_theorem, graded_pipeline;
    long deg_max = 4;
    ParamFlags graded_flags;
    auto* gt = graded->add_option("--theorem", graded_theorem)
                   ->check(CLI::IsMember({"thm1.2", "thm1.3", "thm1.9", "cor1.10"}));
    auto* gp = graded->add_option("--pipeline", graded_pipeline)
                   ->check(CLI::IsMember({"rh-even", "wrh-odd"}));
    gt->excludes(gp);
    graded_flags.attach(graded, true);
    graded->add_option("--deg-max", deg_max)->check(CLI::NonNegativeNumber);
    graded->add_option("--format", format)->check(CLI::IsMember(kFormats));

    // ideal-eq
    auto* ideal_eq = app.add_subcommand("ideal-eq", "compare two ideal files");
    std::string file_a, file_b;
    ideal_eq->add_option("FILE_A", file_a)->required();
    ideal_eq->add_option("FILE_B", file_b)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*present) {
            Presentation p = theorem_presentation(theorem, present_flags, ideal_path);
            Params params = theorem_params(theorem, present_flags);
            if (format == "json") {
                json j;
                j["theorem"] = theorem;
                j["params"] = params_json(params);
                j["ring"] = ring_json(*p.ring());
                j["relations"] = relations_json(p);
                j["dropped_zero_relations"] = p.dropped_zero_relations();
                out << j.dump() << '\n';
            } else {
                out << "# " << theorem << ' ' << params_text(params) << '\n';
                write_presentation_text(out, p);
            }
            return 0;
        }

        if (*derive) {
            Params params = derive_flags.gn();
            Derivation d = run_derivation(pipeline, params);
            if (format == "json") {
                json j;
                j["pipeline"] = pipeline;
                j["params"] = params_json(params);
                if (emit_steps) {
                    json steps = json::array();
                    for (const auto& s : d.steps)
                        steps.push_back(json{{"label", s.label},
                                             {"ring", ring_json(*s.presentation.ring())},
                                             {"relations", relations_json(s.presentation)}});
                    j["steps"] = steps;
                }
                j["ring"] = ring_json(*d.result().ring());
                j["relations"] = relations_json(d.result());
                out << j.dump() << '\n';
            } else {
                out << "# derive " << pipeline << ' ' << params_text(params) << '\n';
                if (emit_steps) {
                    // steps as comments, so the whole output stays a valid ideal file
                    for (std::size_t i = 0; i < d.steps.size(); ++i) {
                        out << "# step " << i + 1 << ": " << d.steps[i].label << '\n';
                        std::istringstream body(d.steps[i].presentation.to_text());
                        for (std::string line; std::getline(body, line);)
                            out << "#   " << line << '\n';
                    }
                }
                write_presentation_text(out, d.result());
            }
            return 0;
        }

        if (*verify) {
            std::vector<CheckTask> tasks;
            if (!external_path.empty()) {
                std::optional<Params> p;
                if (*verify_flags.g_opt || *verify_flags.n_opt)
                    p = verify_flags.gn();
                tasks = external_checks(load_ideal(external_path), p);
                if (verify->count("--suite"))
                    for (auto& t : build_suite(parse_suite(suite), g_max, ab_max))
                        tasks.push_back(std::move(t));
            } else {
                tasks = build_suite(parse_suite(suite), g_max, ab_max);
            }
            auto reports = run_checks(tasks, jobs);
            std::size_t failed = 0;
            const CheckReport* first_failure = nullptr;
            for (auto& r : reports) {
                if (no_timing)
                    r.elapsed_ms = 0;
                if (r.verdict == Verdict::Fail && !failed++)
                    first_failure = &r;
                out << (format == "json" ? report_json(r) : report_text(r)) << '\n';
            }
            std::ostringstream summary;
            summary << reports.size() << " checks, " << reports.size() - failed << " passed, "
                    << failed << " failed";
            if (format == "json")
                err << summary.str() << '\n';
            else
                out << summary.str() << '\n';
            if (first_failure) {
                err << "first failure: " << report_text(*first_failure) << '\n';
                return 1;
            }
            return 0;
        }

        if (*graded) {
            Presentation p = [&] {
                if (!graded_pipeline.empty())
                    return run_derivation(graded_pipeline, graded_flags.gn()).result();
                if (graded_theorem.empty())
                    throw ParamError("one of --theorem or --pipeline is required");
                return theorem_presentation(graded_theorem, graded_flags, {});
            }();
            if (format == "json") {
                json degrees = json::array();
                for (long d = 0; d <= deg_max; ++d) {
                    AbelianInvariants inv = quotient_graded_invariants(p, d);
                    json torsion = json::array();
                    for (const auto& x : inv.torsion)
                        torsion.push_back(x.get_str());
                    degrees.push_back(json{{"degree", d},
                                           {"free_rank", inv.free_rank},
                                           {"torsion", torsion},
                                           {"invariants", inv.to_string()}});
                }
                out << json{{"degrees", degrees}}.dump() << '\n';
            } else {
                for (long d = 0; d <= deg_max; ++d)
                    out << "degree " << d << ": " << quotient_graded_invariants(p, d).to_string()
                        << '\n';
            }
            return 0;
        }

        if (*ideal_eq) {
            Presentation pa = load_ideal(file_a);
            Presentation pb = load_ideal(file_b);
            if (!(*pa.ring() == *pb.ring())) {
                err << "error: ring headers differ: '" << pa.ring()->header() << "' vs '"
                    << pb.ring()->header() << "'\n";
                return 2;
            }
            EqualityVerdict v = ideal_equal(pa, pb);
            if (v.equal) {
                out << "equal\n";
                return 0;
            }
            const std::string& from = v.witness_side == 0 ? file_a : file_b;
            const std::string& into = v.witness_side == 0 ? file_b : file_a;
            out << "not equal: generator " << canonical_string(*v.witness) << " of " << from
                << " (degree " << v.witness_degree << ") is not in the ideal of " << into << '\n';
            return 1;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace chowforge
