#include "apolar/errors.hpp"
#include "apolar/paperbook.hpp"
#include "apolar/report_json.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

namespace {

using namespace apolar;

constexpr int kExitVerdictFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitConfig = 3;
constexpr int kExitDependent = 4;

struct RunConfig {
    std::string field_text = "q";
    std::string action_text = "diff";
    std::size_t samples = 8;
    std::uint64_t seed = 0;
    bool exhaustive_flag = false;
    bool json = false;

    FieldSpec field() const {
        if (field_text == "q" || field_text == "Q") return FieldSpec::rationals();
        if (field_text.rfind("gf:", 0) == 0 || field_text.rfind("GF:", 0) == 0) {
            return FieldSpec::gf(std::stoll(field_text.substr(3)));
        }
        throw ConfigError("unknown field '" + field_text + "' (use q or gf:P)");
    }

    ActionKind action() const {
        if (action_text == "diff") return ActionKind::Differentiation;
        if (action_text == "contract") return ActionKind::Contraction;
        throw ConfigError("unknown action '" + action_text + "' (use diff or contract)");
    }

    // Sampling needs room for distinct points plus the endpoints.
    void validate_for_sampling() const {
        FieldSpec f = field();
        if (f.kind == FieldKind::PrimeField && f.p <= 2 * static_cast<std::int64_t>(samples)) {
            throw ConfigError("field " + f.to_string() + " too small: need p > 2*samples = " +
                              std::to_string(2 * samples));
        }
    }

    SweepOptions sweep_options() const {
        SweepOptions o;
        o.samples = samples;
        o.seed = seed;
        if (exhaustive_flag) o.exhaustive = true;
        o.action = action();
        return o;
    }
};

void add_common_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--field", cfg.field_text, "Coefficient field: q or gf:P");
    cmd->add_option("--action", cfg.action_text, "Apolarity action: diff or contract");
    cmd->add_option("--samples", cfg.samples, "Number of non-endpoint lambda samples");
    cmd->add_option("--seed", cfg.seed, "Seed for lambda sampling and seeded constructions");
    cmd->add_flag("--exhaustive", cfg.exhaustive_flag, "Sweep all p+1 fibers (finite fields)");
    cmd->add_flag("--json", cfg.json, "JSON output");
}

void print_labeled(const std::string& label, const HilbertSeq& h) {
    std::cout << label << "  " << h.to_string() << "\n";
}

int cmd_hf(const std::string& text, int r, const RunConfig& cfg) {
    Form f = parse_form(text, r, cfg.field());
    HilbertSeq h = hilbert_of_form(f, cfg.action());
    if (cfg.json) {
        std::cout << hilbert_to_json(h).dump() << "\n";
    } else {
        std::cout << h.to_string() << "\n";
    }
    return 0;
}

int cmd_level(const std::vector<std::string>& texts, int r, const RunConfig& cfg) {
    std::vector<Form> gens;
    for (const std::string& t : texts) gens.push_back(parse_form(t, r, cfg.field()));
    FormSpace w(std::move(gens));
    HilbertSeq h = hilbert_of_space(w, cfg.action());
    std::vector<long> socle = socle_type(w, cfg.action());
    bool level = check_level_condition(w, cfg.action());
    if (cfg.json) {
        OrderedJson j;
        j["H_A"] = h.values;
        j["socle_type"] = socle;
        j["level"] = level;
        std::cout << j.dump() << "\n";
    } else {
        print_labeled("H(A)  ", h);
        std::cout << "socle  " << HilbertSeq(socle, r).to_string() << "\n";
        std::cout << "level  " << (level ? "yes" : "no") << "\n";
    }
    return 0;
}

void print_report_table(const PencilReport& rep) {
    print_labeled("H_F   ", rep.h_f);
    print_labeled("H_G   ", rep.h_g);
    print_labeled("H(A)  ", rep.h_a);
    std::cout << "d      " << HilbertSeq(rep.d, rep.h_a.r).to_string() << "\n";
    std::cout << "t      " << HilbertSeq(rep.t, rep.h_a.r).to_string() << "\n";
    print_labeled("H_gen ", rep.h_gen);
    std::cout << "special";
    if (rep.special_fibers.empty()) std::cout << "  (none)";
    for (const PencilPoint& p : rep.special_fibers) std::cout << "  " << p.lambda.to_string();
    if (rep.sampled_only) std::cout << "  [sampled-only]";
    std::cout << "\n";
    std::cout << "verdicts  theorem1=" << (rep.theorem1.ok ? "pass" : "FAIL")
              << " theorem2=" << (rep.theorem2_ok ? "pass" : "FAIL")
              << " corollary=" << (rep.corollary.ok ? "pass" : "FAIL")
              << " level=" << (rep.level_ok ? "pass" : "FAIL") << "\n";
    if (rep.genericity_warning)
        std::cout << "warning: more than 2 sampled fibers fell short of H_gen\n";
    if (rep.small_field_caveat)
        std::cout << "caveat: small field, generic value may be unattained\n";
}

int cmd_pencil(const std::string& ftext, const std::string& gtext, int r, const RunConfig& cfg) {
    cfg.validate_for_sampling();
    Form f = parse_form(ftext, r, cfg.field());
    Form g = parse_form(gtext, r, cfg.field());
    PencilReport rep = sweep(f, g, cfg.sweep_options());
    if (cfg.json) {
        std::cout << report_to_json(rep).dump(2) << "\n";
    } else {
        print_report_table(rep);
    }
    return rep.all_verdicts_pass() ? 0 : kExitVerdictFail;
}

int cmd_osequence(const std::string& list, const RunConfig& cfg) {
    std::vector<long> values;
    std::string tok;
    std::istringstream is(list);
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        values.push_back(std::stol(tok));
    }
    OSequenceVerdict v = is_o_sequence(HilbertSeq(values, 0));
    if (cfg.json) {
        OrderedJson j;
        j["ok"] = v.ok;
        j["first_violation"] = v.first_violation;
        std::cout << j.dump() << "\n";
    } else if (v.ok) {
        std::cout << "true\n";
    } else {
        std::cout << "false at index " << v.first_violation << "\n";
    }
    return 0;
}

int cmd_verify_paperbook(const RunConfig& cfg) {
    cfg.validate_for_sampling();
    PaperbookConfig pb;
    pb.field = cfg.field();
    pb.action = cfg.action();
    pb.samples = cfg.samples;
    pb.seed = cfg.seed;
    if (cfg.exhaustive_flag) pb.exhaustive = true;
    std::vector<CaseResult> results = run_paperbook(pb);
    bool all_pass = true;
    std::string first_fail;
    for (const CaseResult& r : results) {
        const char* status = r.status == CaseStatus::Pass      ? "pass"
                             : r.status == CaseStatus::Skipped ? "skip"
                                                               : "FAIL";
        std::cout << status << "  " << r.name;
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
        if (r.status == CaseStatus::Fail) {
            all_pass = false;
            if (first_fail.empty()) first_fail = r.name;
        }
    }
    if (!all_pass) {
        std::cout << "first failing case: " << first_fail << "\n";
        return kExitVerdictFail;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Macaulay inverse systems for pencils of forms"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env_seed = std::getenv("APOLAR_SEED")) {
        cfg.seed = std::strtoull(env_seed, nullptr, 10);
    }

    int r = 2;
    std::string form_text, f_text, g_text, h_list;
    std::vector<std::string> level_forms;

    CLI::App* hf = app.add_subcommand("hf", "Hilbert function of a single form");
    hf->add_option("--r", r, "Number of variables")->required();
    hf->add_option("form", form_text, "Homogeneous form")->required();
    add_common_flags(hf, cfg);

    CLI::App* level = app.add_subcommand("level", "H(A), socle type, level check for a span W");
    level->add_option("--r", r, "Number of variables")->required();
    level->add_option("forms", level_forms, "Generators of W")->required();
    add_common_flags(level, cfg);

    CLI::App* pencil = app.add_subcommand("pencil", "Full pencil sweep F + lambda*G");
    pencil->add_option("--r", r, "Number of variables")->required();
    pencil->add_option("f", f_text, "First generator")->required();
    pencil->add_option("g", g_text, "Second generator")->required();
    add_common_flags(pencil, cfg);

    CLI::App* oseq = app.add_subcommand("osequence", "Macaulay O-sequence check");
    oseq->add_option("values", h_list, "Comma-separated sequence, e.g. 1,3,6")->required();
    add_common_flags(oseq, cfg);

    CLI::App* verify = app.add_subcommand("verify", "Verification suites");
    CLI::App* paperbook = verify->add_subcommand("paperbook", "Golden regression suite");
    add_common_flags(paperbook, cfg);
    verify->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (hf->parsed()) return cmd_hf(form_text, r, cfg);
        if (level->parsed()) return cmd_level(level_forms, r, cfg);
        if (pencil->parsed()) return cmd_pencil(f_text, g_text, r, cfg);
        if (oseq->parsed()) return cmd_osequence(h_list, cfg);
        if (verify->parsed()) return cmd_verify_paperbook(cfg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const DependentFormsError& e) {
        std::cerr << "dependent forms: " << e.what() << "\n";
        return kExitDependent;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return 0;
}
