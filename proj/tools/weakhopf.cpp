// Command-line verifier: parses an algebra file, runs the requested layer of
// checks, and reports to stdout in text or JSON form.
//
//   weakhopf check          <file> [--dims=1,2] [--format=text|json]
//   weakhopf base           <file> ...
//   weakhopf module-tensor  <file> <A> <C> ...
//   weakhopf antipode       <file> [--require-hopf] ...
//   weakhopf report         <file> [--require-hopf] ...
//
// Exit codes: 0 all requested checks hold, 1 a check fails, 2 input error.

#include "weakhopf/io.hpp"
#include "weakhopf/weakhopf.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

using namespace weakhopf;

namespace {

using DerivedValue = std::variant<bool, long long, std::string, LinMap>;

struct Section {
    std::string name;
    AxiomReport report;
};

struct CliReport {
    std::string command;
    std::string input_name;
    int dim = 0;
    std::string digest;
    std::vector<int> dims;
    bool require_hopf = false;
    std::vector<Section> sections;
    std::vector<std::pair<std::string, DerivedValue>> derived;
    std::optional<std::string> error;
    bool pass = true;

    void add(const std::string& key, DerivedValue v) { derived.emplace_back(key, std::move(v)); }
    void section(const std::string& name, AxiomReport rep) {
        pass = pass && rep.all_hold();
        sections.push_back({name, std::move(rep)});
    }
};

std::string render_text(const CliReport& r) {
    std::ostringstream os;
    os << "weakhopf " << kToolVersion << "\n";
    os << "command: " << r.command << "\n";
    os << "input: name=" << r.input_name << " dim=" << r.dim << " digest=" << r.digest << "\n";
    os << "options: dims=[";
    for (size_t k = 0; k < r.dims.size(); ++k) os << (k ? "," : "") << r.dims[k];
    os << "] require_hopf=" << (r.require_hopf ? "true" : "false") << "\n";
    for (const auto& s : r.sections) {
        os << "section " << s.name << ": " << (s.report.all_hold() ? "PASS" : "FAIL") << " ("
           << s.report.checks.size() << " checks)\n";
        for (const auto& c : s.report.checks)
            if (!c.holds) os << "  FAIL " << c.name << "\n";
    }
    if (!r.derived.empty()) {
        os << "derived:\n";
        for (const auto& [key, value] : r.derived) {
            os << "  " << key << ": ";
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, bool>)
                        os << (v ? "true" : "false");
                    else if constexpr (std::is_same_v<T, LinMap>)
                        os << v.str();
                    else
                        os << v;
                },
                value);
            os << "\n";
        }
    }
    if (r.error) os << "error: " << *r.error << "\n";
    os << "status: " << (r.pass ? "pass" : "fail") << "\n";
    return os.str();
}

std::string render_json(const CliReport& r) {
    json j = json::object();
    j["tool"] = "weakhopf";
    j["version"] = kToolVersion;
    j["command"] = r.command;
    j["input"] = {{"name", r.input_name}, {"dim", r.dim}, {"digest", r.digest}};
    j["options"] = {{"dims", r.dims}, {"require_hopf", r.require_hopf}};
    json sections = json::array();
    for (const auto& s : r.sections) {
        json checks = json::array();
        for (const auto& c : s.report.checks)
            checks.push_back(json{{"name", c.name}, {"holds", c.holds}});
        sections.push_back(
            json{{"name", s.name}, {"all_hold", s.report.all_hold()}, {"checks", checks}});
    }
    j["sections"] = sections;
    json derived = json::object();
    for (const auto& [key, value] : r.derived)
        std::visit(
            [&](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, LinMap>)
                    derived[key] = detail::matrix_to_json(v);
                else
                    derived[key] = v;
            },
            value);
    j["derived"] = derived;
    if (r.error) j["error"] = *r.error;
    j["status"] = r.pass ? "pass" : "fail";
    j["exit_code"] = r.pass ? 0 : 1;
    return j.dump(2) + "\n";
}

void emit(const CliReport& r, const std::string& format) {
    std::cout << (format == "json" ? render_json(r) : render_text(r));
}

// The axiom layer shared by every command; returns true when it all holds.
bool run_check_sections(const WeakBimonoid& B, const std::vector<int>& dims, CliReport& out) {
    out.section("structure", validate_monoid_comonoid(B));
    out.section("weak_bimonoid", check_weak_bimonoid(B));
    out.section("strength", check_tau_axioms(B, dims));
    return out.sections[0].report.all_hold() && out.sections[1].report.all_hold() &&
           out.sections[2].report.all_hold();
}

void refuse_custom_braid(const WeakBimonoid& B, const std::string& command) {
    if (B.has_custom_braid())
        throw ParseError(command +
                         ": module-level constructions are only defined for the standard "
                         "transposition braiding; use 'check' or 'antipode' instead");
}

void run_base_sections(const WeakBimonoid& B, CliReport& out) {
    BaseMonoid base = base_monoid(B);
    out.section("base_monoid_laws", base.laws);
    out.add("R_dim", static_cast<long long>(base.R_dim));
    out.add("projection", base.projection);
    out.add("retraction", base.P());
    out.add("section", base.I());
    out.add("mu_R", base.mu_R);
    out.add("eta_R", base.eta_R);
    out.add("delta_R", base.delta_R);
    out.add("eps_R", base.eps_R);
}

// Hopf layer; returns whether an antipode exists.
bool run_hopf_sections(const WeakBimonoid& B, const std::vector<int>& dims, CliReport& out) {
    AntipodeResult anti = solve_antipode(B);
    if (!anti.nu) {
        out.add("antipode_exists", false);
        out.add("antipode", std::string("none"));
        if (out.require_hopf) {
            AxiomReport req;
            req.require("antipode_exists", false);
            out.section("hopf_requirement", std::move(req));
        }
        return false;
    }
    out.section("antipode_identities", anti.equations_report);
    out.section("weak_hopf_witness", verify_whm(B, dims));
    out.section("opposite_side", check_left_hopf(B));
    out.add("antipode_exists", true);
    out.add("antipode", *anti.nu);
    out.add("antipode_unique", anti.unique);
    out.add("antipode_invertible", anti.invertible);
    if (anti.invertible && anti.nu_inverse) out.add("antipode_inverse", *anti.nu_inverse);
    return true;
}

int finish(const CliReport& r, const std::string& format) {
    emit(r, format);
    return r.pass ? 0 : 1;
}

struct CommonArgs {
    std::string file;
    std::string dims_arg = "1,2";
    std::string format = "text";
    bool require_hopf = false;

    std::vector<int> dims() const {
        std::vector<int> out;
        std::stringstream ss(dims_arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            try {
                size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
                out.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("--dims: expected a comma-separated list of nonnegative "
                                 "integers, got '" +
                                 tok + "'");
            }
        }
        if (out.empty()) throw ParseError("--dims: at least one dimension required");
        return out;
    }
};

void attach_common(CLI::App* cmd, CommonArgs& args, bool with_hopf_flag) {
    cmd->add_option("file", args.file, "algebra file (JSON)")->required();
    cmd->add_option("--dims", args.dims_arg, "object dimensions sampled by naturality checks");
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    if (with_hopf_flag)
        cmd->add_flag("--require-hopf", args.require_hopf,
                      "fail (exit 1) when no antipode exists");
}

CliReport make_report(const std::string& command, const AlgebraSpec& spec,
                      const CommonArgs& args) {
    CliReport r;
    r.command = command;
    r.input_name = spec.name;
    r.dim = spec.dim;
    r.digest = algebra_digest(spec);
    r.dims = args.dims();
    r.require_hopf = args.require_hopf;
    return r;
}

int cmd_check(const CommonArgs& args) {
    AlgebraSpec spec = load_algebra_file(args.file);
    WeakBimonoid B = spec.to_algebra();
    CliReport r = make_report("check", spec, args);
    if (run_check_sections(B, r.dims, r))
        r.add("sqcap_rank", static_cast<long long>(rank(sqcap(B))));
    return finish(r, args.format);
}

int cmd_base(const CommonArgs& args) {
    AlgebraSpec spec = load_algebra_file(args.file);
    WeakBimonoid B = spec.to_algebra();
    refuse_custom_braid(B, "base");
    CliReport r = make_report("base", spec, args);
    if (run_check_sections(B, r.dims, r)) run_base_sections(B, r);
    return finish(r, args.format);
}

int cmd_module_tensor(const CommonArgs& args, const std::string& left_name,
                      const std::string& right_name) {
    AlgebraSpec spec = load_algebra_file(args.file);
    WeakBimonoid B = spec.to_algebra();
    refuse_custom_braid(B, "module-tensor");
    RightModule A = spec.find_module(left_name);
    RightModule C = spec.find_module(right_name);
    CliReport r = make_report("module-tensor", spec, args);
    if (run_check_sections(B, r.dims, r)) {
        AxiomReport inputs;
        inputs.append(validate_module(A, B), left_name + ".");
        inputs.append(validate_module(C, B), right_name + ".");
        r.section("input_modules", std::move(inputs));
        if (r.pass) {
            try {
                ModuleTensor prod = module_tensor(A, C, B);
                r.section("product_module", validate_module(prod.product, B));
                r.add("E_rank", static_cast<long long>(prod.split.rank));
                r.add("product_carrier", static_cast<long long>(prod.product.carrier));
                r.add("product_action", prod.product.action);
            } catch (const Error& e) {
                r.error = e.what();
                r.pass = false;
            }
        }
    }
    return finish(r, args.format);
}

int cmd_antipode(const CommonArgs& args) {
    AlgebraSpec spec = load_algebra_file(args.file);
    WeakBimonoid B = spec.to_algebra();
    CliReport r = make_report("antipode", spec, args);
    if (run_check_sections(B, r.dims, r)) run_hopf_sections(B, r.dims, r);
    return finish(r, args.format);
}

int cmd_report(const CommonArgs& args) {
    AlgebraSpec spec = load_algebra_file(args.file);
    WeakBimonoid B = spec.to_algebra();
    refuse_custom_braid(B, "report");
    CliReport r = make_report("report", spec, args);
    if (!run_check_sections(B, r.dims, r)) return finish(r, args.format);
    run_base_sections(B, r);

    if (!spec.modules.empty()) {
        AxiomReport mod_laws;
        std::vector<RightModule> mods;
        for (const auto& [name, m] : spec.modules) {
            RightModule mod{m.carrier, m.action};
            mod_laws.append(validate_module(mod, B), name + ".");
            mods.push_back(mod);
        }
        r.section("module_laws", std::move(mod_laws));
        if (r.pass) {
            try {
                r.section("coherence", coherence_check(mods, B));
                AxiomReport units;
                BaseMonoid base = base_monoid(B);
                for (size_t k = 0; k < mods.size(); ++k) {
                    const std::string& name = spec.modules[k].first;
                    bool ok = true;
                    try {
                        unit_constraints(mods[k], B, base);
                    } catch (const Error&) {
                        ok = false;
                    }
                    units.require(name + ".unit_constraints_invertible", ok);
                    try {
                        BaseBimodule bb = r_bimodule_actions(mods[k], B, base);
                        units.append(bb.laws, name + ".");
                    } catch (const Error&) {
                        units.require(name + ".base_actions", false);
                    }
                }
                r.section("base_actions", std::move(units));
            } catch (const Error& e) {
                r.error = e.what();
                r.pass = false;
            }
        }
    }

    if (r.pass) {
        bool has_antipode = run_hopf_sections(B, r.dims, r);
        for (int X : r.dims)
            for (int Y : r.dims) {
                std::string at = "[" + std::to_string(X) + "," + std::to_string(Y) + "]";
                r.add("E_rank" + at, static_cast<long long>(rank(idempotent_E_T(B, X, Y))));
                r.add("F_rank" + at, static_cast<long long>(rank(idempotent_F(B, X, Y))));
            }
        (void)has_antipode;
    }
    return finish(r, args.format);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for weak bimonoid data"};
    app.require_subcommand(1);

    CommonArgs check_args, base_args, tensor_args, antipode_args, report_args;
    std::string tensor_left, tensor_right;

    CLI::App* c_check = app.add_subcommand("check", "monoid/comonoid + compatibility axioms");
    attach_common(c_check, check_args, false);
    CLI::App* c_base = app.add_subcommand("base", "split the projection; base monoid laws");
    attach_common(c_base, base_args, false);
    CLI::App* c_tensor =
        app.add_subcommand("module-tensor", "truncated tensor product of two named modules");
    attach_common(c_tensor, tensor_args, false);
    c_tensor->add_option("left", tensor_left, "left module name")->required();
    c_tensor->add_option("right", tensor_right, "right module name")->required();
    CLI::App* c_antipode = app.add_subcommand("antipode", "solve the convolution system");
    attach_common(c_antipode, antipode_args, true);
    CLI::App* c_report = app.add_subcommand("report", "full pipeline");
    attach_common(c_report, report_args, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0; argument errors are input errors
    }

    try {
        if (c_check->parsed()) return cmd_check(check_args);
        if (c_base->parsed()) return cmd_base(base_args);
        if (c_tensor->parsed()) return cmd_module_tensor(tensor_args, tensor_left, tensor_right);
        if (c_antipode->parsed()) return cmd_antipode(antipode_args);
        if (c_report->parsed()) return cmd_report(report_args);
        std::cerr << "error: no command\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionMismatch& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidBraid& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
