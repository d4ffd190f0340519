#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cohoc/criteria.hpp"
#include "cohoc/documents.hpp"
#include "cohoc/errors.hpp"
#include "cohoc/fixtures.hpp"
#include "cohoc/parser.hpp"

namespace {

using namespace cohoc;

// Exit contract: 0 = definite verdict (including "not-yet" and "false"),
// 2 = criterion inapplicable, 1 = error.
constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kInapplicable = 2;

OrderKind order_of(const std::string& name) {
    if (name == "degrevlex") return OrderKind::degrevlex;
    if (name == "deglex") return OrderKind::deglex;
    throw Error("unknown order \"" + name + "\"");
}

ParameterSet params_of(const Presentation& ring, const std::vector<std::string>& exprs) {
    return make_parameter_set(ring, exprs);
}

IntPoly denominator_poly(const HilbertSeries& s) {
    IntPoly d = ip_make({1});
    for (int64_t e : s.den) d = ip_mul(d, ip_one_minus_t(e));
    return d;
}

std::string ints_line(const std::vector<Int>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + v[i].str();
    return out;
}

nlohmann::json ints_json(const std::vector<Int>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const Int& x : v) a.push_back(x.str());
    return a;
}

void emit(const nlohmann::json& report, const std::string& report_path) {
    if (!report_path.empty()) write_report_file(report, report_path);
}

int verdict_exit(const std::string& verdict) {
    return verdict == "inapplicable" ? kInapplicable : kOk;
}

// Validates once; fixture morphisms already carry their recorded verdict.
void ensure_validation_attempted(RingMorphism& m, OrderKind order) {
    if (!m.validated && m.first_failing_relation < 0) validate_morphism(m, order);
}

int cmd_hilbert(DocumentStore& store, const std::string& ref, const std::string& order_name,
                int64_t truncate, const std::string& report_path) {
    const Presentation& ring = store.presentation(ref);
    OrderKind order = order_of(order_name);
    nlohmann::json report = {{"command", "hilbert"}, {"ring", ref}};

    if (truncate > 0) {
        GroebnerBasis gb = groebner_basis(ring, {}, order, truncate);
        std::vector<Int> dims;
        for (int64_t d = 0; d <= truncate; ++d)
            dims.push_back(static_cast<int64_t>(standard_monomials(gb, d).size()));
        std::cout << "hilbert function 0.." << truncate << ": " << ints_line(dims) << "\n";
        report["hilbert_function"] = ints_json(dims);
        emit(report, report_path);
        return kOk;
    }

    HilbertSeries s = poincare_series(ring, order);
    std::cout << "poincare series: " << hs_print(s) << "\n";
    report["series"] = {{"text", hs_print(s)},
                        {"numerator", ints_json(s.num.c)},
                        {"denominator_degrees", s.den}};
    if (ref == "fixtures:s9_G") {
        const fixtures::PrintedSeries& printed = fixtures::printed_series_G();
        bool match = ip_equal(ip_mul(s.num, printed.den),
                              ip_mul(printed.num, denominator_poly(s)));
        std::cout << "published form (" << ip_print(printed.num) << ") / ("
                  << ip_print(printed.den) << ")\n";
        std::cout << "matches published form: " << (match ? "yes" : "no") << "\n";
        report["matches_published_form"] = match;
    }
    emit(report, report_path);
    return kOk;
}

int cmd_dim(DocumentStore& store, const std::string& ref, const std::string& order_name,
            const std::string& report_path) {
    const Presentation& ring = store.presentation(ref);
    int dim = krull_dimension(ring, order_of(order_name));
    std::cout << "krull dimension: " << dim << "\n";
    emit({{"command", "dim"}, {"ring", ref}, {"dimension", dim}}, report_path);
    return kOk;
}

int cmd_hsop_check(DocumentStore& store, const std::string& ref,
                   const std::vector<std::string>& param_exprs,
                   const std::string& order_name, const std::string& report_path) {
    const Presentation& ring = store.presentation(ref);
    OrderKind order = order_of(order_name);
    HsopResult h = is_hsop(ring, params_of(ring, param_exprs), order);
    std::cout << "hsop: " << (h.is_hsop ? "yes" : "no") << "\n";
    std::cout << h.reason << "\n";
    nlohmann::json report = {{"command", "hsop-check"},
                             {"ring", ref},
                             {"hsop", h.is_hsop},
                             {"reason", h.reason},
                             {"quotient_top_degree", h.quotient_top_degree}};
    if (h.is_hsop) {
        std::cout << "quotient hilbert function: " << ints_line(h.quotient_hilbert) << "\n";
        report["quotient_hilbert"] = ints_json(h.quotient_hilbert);
    }
    emit(report, report_path);
    return kOk;
}

int cmd_regular_check(DocumentStore& store, const std::string& ref,
                      const std::vector<std::string>& param_exprs,
                      const std::string& order_name, const std::string& report_path) {
    const Presentation& ring = store.presentation(ref);
    RegularResult r = is_regular_sequence(ring, params_of(ring, param_exprs),
                                          order_of(order_name));
    std::cout << "regular sequence: " << (r.regular ? "yes" : "no") << "\n";
    nlohmann::json report = {{"command", "regular-check"},
                             {"ring", ref},
                             {"regular", r.regular},
                             {"first_failing", r.first_failing}};
    if (!r.regular) {
        std::cout << "first failing step: " << r.first_failing << "\n";
        std::cout << "series difference: " << hs_print(r.difference) << "\n";
        report["difference"] = hs_print(r.difference);
    }
    emit(report, report_path);
    return kOk;
}

int cmd_fregular_report(DocumentStore& store, const std::string& ref,
                        const std::vector<std::string>& param_exprs,
                        const std::string& order_name, const std::string& report_path) {
    const Presentation& ring = store.presentation(ref);
    FilterRegularityReport fr = filter_regular_report(ring, params_of(ring, param_exprs),
                                                      order_of(order_name));
    nlohmann::json steps = nlohmann::json::array();
    for (size_t i = 0; i < fr.steps.size(); ++i) {
        const FilterStep& s = fr.steps[i];
        std::cout << "step " << (i + 1) << ": "
                  << (s.filter_regular ? "filter-regular" : "NOT filter-regular");
        if (s.filter_regular && s.top_ann_degree >= 0)
            std::cout << ", annihilator top degree " << s.top_ann_degree << " ("
                      << ip_print(s.ann_series) << ")";
        else if (s.filter_regular)
            std::cout << ", regular (zero annihilator)";
        std::cout << "\n";
        steps.push_back({{"filter_regular", s.filter_regular},
                         {"top_annihilator_degree", s.top_ann_degree},
                         {"annihilator_series", ip_print(s.ann_series)}});
    }
    std::cout << "hsop: " << (fr.hsop ? "yes" : "no") << "\n";
    std::cout << "filter-regular hsop: " << (fr.sequence_filter_regular ? "yes" : "no")
              << "\n";
    emit({{"command", "fregular-report"},
          {"ring", ref},
          {"steps", steps},
          {"hsop", fr.hsop},
          {"filter_regular_hsop", fr.sequence_filter_regular}},
         report_path);
    return kOk;
}

int cmd_pars_exist(DocumentStore& store, const std::string& ref,
                   const std::vector<std::string>& param_exprs, int64_t degree,
                   const std::string& order_name, const std::string& report_path) {
    const Presentation& ring = store.presentation(ref);
    ExistenceCertificate c = pars_existence(ring, params_of(ring, param_exprs), degree,
                                            order_of(order_name));
    std::cout << "parameters of degree " << degree << " extending the fixed set: "
              << (c.exists ? "exist (over a finite extension field)" : "do not exist")
              << "\n";
    std::cout << "new parameters needed: " << c.new_parameter_count << "\n";
    if (c.exists)
        std::cout << "quotient top degree: " << c.quotient_top_degree << "\n";
    emit({{"command", "pars-exist"},
          {"ring", ref},
          {"fixed_degrees", c.fixed_degrees},
          {"degree", c.uniform_degree},
          {"new_parameter_count", c.new_parameter_count},
          {"exists", c.exists},
          {"quotient_top_degree", c.quotient_top_degree}},
         report_path);
    return kOk;
}

int cmd_replace_search(DocumentStore& store, const std::string& ref,
                       const std::vector<std::string>& param_exprs, size_t slot,
                       int64_t max_degree, uint64_t budget, const std::string& order_name,
                       const std::string& report_path) {
    const Presentation& ring = store.presentation(ref);
    if (slot == 0) throw Error("--slot is 1-based");
    std::vector<Poly> hits = replacement_search(ring, params_of(ring, param_exprs),
                                                slot - 1, max_degree, budget,
                                                order_of(order_name));
    nlohmann::json found = nlohmann::json::array();
    if (hits.empty()) {
        std::cout << "none\n";
    } else {
        std::cout << hits.size() << " replacement(s):\n";
        for (const Poly& f : hits) {
            std::cout << "  " << print_element(f, ring) << "\n";
            found.push_back(print_element(f, ring));
        }
    }
    emit({{"command", "replace-search"},
          {"ring", ref},
          {"slot", slot},
          {"max_degree", max_degree},
          {"replacements", found}},
         report_path);
    return kOk;
}

int cmd_validate_morphism(DocumentStore& store, const std::string& ref,
                          const std::string& order_name, const std::string& report_path) {
    RingMorphism m = store.morphism(ref);
    validate_morphism(m, order_of(order_name));
    std::cout << "valid: " << (m.validated ? "yes" : "no") << "\n";
    if (!m.validated)
        std::cout << "first failing relation: " << m.first_failing_relation << "\n";
    emit({{"command", "validate-morphism"},
          {"morphism", ref},
          {"valid", m.validated},
          {"first_failing_relation", m.first_failing_relation}},
         report_path);
    return kOk;
}

int cmd_gendeg(DocumentStore& store, const std::string& ref, bool force,
               const std::string& order_name, const std::string& report_path) {
    OrderKind order = order_of(order_name);
    RingMorphism m = store.morphism(ref);
    ensure_validation_attempted(m, order);
    if (!m.validated && !force) {
        std::cout << "inapplicable: the morphism fails validation (first failing relation "
                  << m.first_failing_relation
                  << "); pass --force to compute on the image list regardless\n";
        emit({{"command", "gendeg"},
              {"morphism", ref},
              {"validated", false},
              {"first_failing_relation", m.first_failing_relation},
              {"verdict", "inapplicable"}},
             report_path);
        return kInapplicable;
    }

    GendegReport g = gendeg(m, force, order);
    nlohmann::json report = {{"command", "gendeg"},
                             {"morphism", ref},
                             {"validated", m.validated},
                             {"finite", g.finite}};
    if (!g.finite) {
        std::cout << "gendeg: infinite (the target is not a finitely generated module "
                     "over the image)\n";
        if (g.offending_generator >= 0)
            std::cout << "unbounded along: "
                      << m.target->gens[static_cast<size_t>(g.offending_generator)].name
                      << "\n";
        report["gendeg"] = "infinite";
        emit(report, report_path);
        return kOk;
    }
    std::cout << "gendeg: " << g.gendeg << "\n";
    std::cout << "quotient hilbert function 0.." << g.gendeg << ": "
              << ints_line(g.hilbert) << "\n";
    report["gendeg"] = g.gendeg;
    report["quotient_hilbert"] = ints_json(g.hilbert);
    report["module_generator_degrees"] = g.module_generator_degrees;
    emit(report, report_path);
    return kOk;
}

int finish_criterion(const CriterionReport& r, const std::string& report_path) {
    std::cout << format_report(r);
    if (!report_path.empty()) write_report_file(report_to_json(r), report_path);
    return verdict_exit(r.verdict);
}

int cmd_compare_all(int64_t n_lo, int64_t n_hi, bool force, const std::string& order_name,
                    const std::string& report_path) {
    ComparisonBundle bundle = fixtures::comparison_bundle(n_lo, n_hi);
    bundle.allow_unvalidated = force;
    std::vector<ComparisonRow> rows = compare_all(bundle, order_of(order_name));
    nlohmann::json jrows = nlohmann::json::array();
    std::printf("%-16s %-10s %s\n", "criterion", "degree", "verdict");
    for (const ComparisonRow& row : rows) {
        std::string degree = row.minimal_n >= 0 ? std::to_string(row.minimal_n) : "-";
        std::printf("%-16s %-10s %s\n", row.name.c_str(), degree.c_str(),
                    row.report.verdict.c_str());
        jrows.push_back({{"name", row.name},
                         {"minimal_n", row.minimal_n},
                         {"report", report_to_json(row.report)}});
    }
    for (const ComparisonRow& row : rows)
        if (!row.report.detail.empty())
            std::cout << row.name << ": " << row.report.detail << "\n";
    emit({{"command", "compare-all"}, {"rows", jrows}}, report_path);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"completeness criteria for graded ring approximations"};
    app.require_subcommand(1);

    std::string ref, order_name = "degrevlex", report_path;
    std::vector<std::string> param_exprs;
    std::vector<int64_t> param_degrees;
    int64_t truncate = 0, n = -1, degree = 0, max_degree = 0, depth = 0;
    int64_t n_lo = 0, n_hi = 50;
    size_t slot = 0;
    uint64_t budget = uint64_t(1) << 32;
    bool force = false, surjective = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--order", order_name, "monomial order: degrevlex or deglex")
            ->check(CLI::IsMember({"degrevlex", "deglex"}));
        cmd->add_option("--report", report_path, "write a structured JSON report here");
    };

    CLI::App* hilbert = app.add_subcommand("hilbert", "Poincare series of a ring");
    hilbert->add_option("ring", ref, "presentation path or fixtures:NAME")->required();
    hilbert->add_option("--truncate", truncate,
                        "print the Hilbert function up to this degree instead");
    add_common(hilbert);

    CLI::App* dim = app.add_subcommand("dim", "Krull dimension of a ring");
    dim->add_option("ring", ref)->required();
    add_common(dim);

    CLI::App* hsop = app.add_subcommand("hsop-check", "test a homogeneous parameter system");
    hsop->add_option("ring", ref)->required();
    hsop->add_option("--param", param_exprs, "parameter element (repeatable)")->required();
    add_common(hsop);

    CLI::App* regular = app.add_subcommand("regular-check", "test a regular sequence");
    regular->add_option("ring", ref)->required();
    regular->add_option("--param", param_exprs)->required();
    add_common(regular);

    CLI::App* fregular =
        app.add_subcommand("fregular-report", "per-step filter-regularity report");
    fregular->add_option("ring", ref)->required();
    fregular->add_option("--param", param_exprs)->required();
    add_common(fregular);

    CLI::App* pars = app.add_subcommand(
        "pars-exist", "do parameters of one degree extend a fixed partial system?");
    pars->add_option("ring", ref)->required();
    pars->add_option("--param", param_exprs, "fixed partial system (repeatable)");
    pars->add_option("-d,--degree", degree, "degree of the sought parameters")->required();
    add_common(pars);

    CLI::App* replace = app.add_subcommand(
        "replace-search", "exhaustive low-degree replacement search for one parameter");
    replace->add_option("ring", ref)->required();
    replace->add_option("--param", param_exprs)->required();
    replace->add_option("--slot", slot, "1-based parameter slot to replace")->required();
    replace->add_option("-D,--max-degree", max_degree, "candidate degree bound")->required();
    replace->add_option("--budget", budget, "candidate-count budget");
    add_common(replace);

    CLI::App* gendeg_cmd =
        app.add_subcommand("gendeg", "module generation degree of a morphism target");
    gendeg_cmd->add_option("morphism", ref, "morphism path or fixtures:NAME")->required();
    gendeg_cmd->add_flag("--force", force, "compute even if validation fails");
    add_common(gendeg_cmd);

    CLI::App* validate = app.add_subcommand("validate-morphism",
                                            "do the images define a ring homomorphism?");
    validate->add_option("morphism", ref)->required();
    add_common(validate);

    CLI::App* criterion = app.add_subcommand("criterion", "run one completeness criterion");
    criterion->require_subcommand(1);
    CLI::App* benson = criterion->add_subcommand("benson", "applicability bound");
    benson->add_option("ring", ref)->required();
    benson->add_option("--param", param_exprs)->required();
    add_common(benson);
    CLI::App* symonds = criterion->add_subcommand("symonds", "parameter-degree test");
    symonds->add_option("ring", ref)->required();
    symonds->add_option("--param", param_exprs)->required();
    symonds->add_option("-n", n, "approximation degree")->required();
    add_common(symonds);
    CLI::App* king_gen_cmd = criterion->add_subcommand("king-gen", "surjectivity test");
    king_gen_cmd->add_option("morphism", ref)->required();
    king_gen_cmd->add_option("-n", n, "approximation degree")->required();
    king_gen_cmd->add_flag("--force", force, "compute even if validation fails");
    add_common(king_gen_cmd);
    CLI::App* king_rel_cmd = criterion->add_subcommand("king-rel", "series test");
    king_rel_cmd->add_option("ring", ref)->required();
    king_rel_cmd->add_option("--param-degrees", param_degrees, "parameter degrees")
        ->required()
        ->delimiter(',');
    king_rel_cmd->add_option("--depth", depth, "depth lower bound")->required();
    king_rel_cmd->add_option("-n", n, "approximation degree")->required();
    king_rel_cmd->add_flag("--surjective", surjective,
                           "assert surjectivity was established elsewhere");
    add_common(king_rel_cmd);

    CLI::App* compare = app.add_subcommand("compare-all",
                                           "criterion table on the embedded corpus");
    compare->add_option("--n-lo", n_lo, "lowest degree considered");
    compare->add_option("--n-hi", n_hi, "highest degree considered");
    compare->add_flag("--force", force, "allow the unvalidated fixture morphism");
    add_common(compare);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and friends exit 0; every real usage error maps to the
        // documented error code instead of CLI11's internal one.
        int rc = app.exit(e);
        return rc == 0 ? 0 : kError;
    }

    try {
        DocumentStore store;
        if (hilbert->parsed())
            return cmd_hilbert(store, ref, order_name, truncate, report_path);
        if (dim->parsed()) return cmd_dim(store, ref, order_name, report_path);
        if (hsop->parsed())
            return cmd_hsop_check(store, ref, param_exprs, order_name, report_path);
        if (regular->parsed())
            return cmd_regular_check(store, ref, param_exprs, order_name, report_path);
        if (fregular->parsed())
            return cmd_fregular_report(store, ref, param_exprs, order_name, report_path);
        if (pars->parsed())
            return cmd_pars_exist(store, ref, param_exprs, degree, order_name, report_path);
        if (replace->parsed())
            return cmd_replace_search(store, ref, param_exprs, slot, max_degree, budget,
                                      order_name, report_path);
        if (gendeg_cmd->parsed())
            return cmd_gendeg(store, ref, force, order_name, report_path);
        if (validate->parsed())
            return cmd_validate_morphism(store, ref, order_name, report_path);
        if (criterion->parsed()) {
            OrderKind order = order_of(order_name);
            if (benson->parsed()) {
                const Presentation& ring = store.presentation(ref);
                ParameterSet ps = params_of(ring, param_exprs);
                FilterRegularityReport fr = filter_regular_report(ring, ps, order);
                return finish_criterion(benson_threshold(ps.degrees, fr), report_path);
            }
            if (symonds->parsed()) {
                const Presentation& ring = store.presentation(ref);
                return finish_criterion(
                    symonds_test(ring, params_of(ring, param_exprs), n, order), report_path);
            }
            if (king_gen_cmd->parsed()) {
                RingMorphism m = store.morphism(ref);
                ensure_validation_attempted(m, order);
                if (!m.validated && !force) {
                    CriterionReport r;
                    r.criterion = "king-gen";
                    r.verdict = "inapplicable";
                    r.n = n;
                    r.detail = "the morphism fails validation (first failing relation " +
                               std::to_string(m.first_failing_relation) +
                               "); pass --force to compute on the image list regardless";
                    return finish_criterion(r, report_path);
                }
                return finish_criterion(king_gen(m, n, force, order), report_path);
            }
            if (king_rel_cmd->parsed()) {
                const Presentation& ring = store.presentation(ref);
                HilbertSeries s = poincare_series(ring, order);
                return finish_criterion(king_rel(s, param_degrees, depth, n, surjective),
                                        report_path);
            }
        }
        if (compare->parsed())
            return cmd_compare_all(n_lo, n_hi, force, order_name, report_path);
        std::cerr << "error: no subcommand\n";
        return kError;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << " (at position " << e.position << ")\n";
        return kError;
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << " (line " << e.line << ")\n";
        return kError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
}
