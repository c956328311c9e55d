// Command-line front end: reads algebra and ideal-grid files, runs the
// layered construction and its certificates, and prints deterministic
// reports (text or JSON). Exit codes: 0 all checks pass, 1 a mathematical
// certificate failed, 2 the inputs could not be read.
#include <cstddef>
#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qha/algebra.hpp"
#include "qha/construct.hpp"
#include "qha/errors.hpp"
#include "qha/io.hpp"
#include "qha/module.hpp"
#include "qha/rational.hpp"
#include "qha/strat.hpp"
#include "qha/systems.hpp"

using json = nlohmann::ordered_json;
using qha::algcore::FDAlgebra;
using qha::construct::ConstructedAlgebra;
using qha::systems::IdealSystem;

namespace {

struct Opts {
    std::string algebra_path;
    std::string system_path;
    std::string out_path;
    bool json_mode = false;
    std::size_t d = 2;
    std::size_t max_path_len = 0;
};

FDAlgebra load_algebra(const Opts& o) {
    FDAlgebra a = qha::io::parse_algebra_auto(qha::io::read_file(o.algebra_path), o.max_path_len);
    qha::algcore::validate_algebra(a);
    return a;
}

IdealSystem load_system(const Opts& o, const FDAlgebra& r) {
    IdealSystem s = qha::io::parse_system(qha::io::read_file(o.system_path), r);
    qha::systems::validate_system(s);
    return s;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }
std::string passfail(bool b) { return b ? "pass" : "FAIL"; }

json quiver_json(const qha::algcore::QuiverData& q) {
    json out;
    out["vertices"] = q.vertex_names;
    out["arrows"] = q.arrows;
    out["canonical"] = qha::algcore::canonical_quiver_form(q);
    return out;
}

void print_quiver(const qha::algcore::QuiverData& q) {
    std::cout << "  vertices " << q.vertex_names.size() << ":";
    for (const auto& v : q.vertex_names) std::cout << " " << v;
    std::cout << "\n";
    bool any = false;
    for (std::size_t i = 0; i < q.vertex_names.size(); ++i)
        for (std::size_t j = 0; j < q.vertex_names.size(); ++j)
            if (q.arrows[j][i]) {
                std::cout << "  " << q.vertex_names[i] << " -> " << q.vertex_names[j] << " (x"
                          << q.arrows[j][i] << ")\n";
                any = true;
            }
    if (!any) std::cout << "  no arrows\n";
}

void emit(const json& report, bool json_mode, const std::function<void()>& human) {
    if (json_mode)
        std::cout << report.dump(2) << "\n";
    else
        human();
}

int cmd_algebra_info(const Opts& o) {
    FDAlgebra a = load_algebra(o);
    auto series = qha::algcore::radical_series(a);
    std::vector<std::size_t> rad_dims;
    for (const auto& w : series) rad_dims.push_back(w.dim());
    const std::size_t loewy = series.size() - 1;
    const bool semisimple = loewy <= 1;
    auto rig = qha::algcore::rigidity(a);

    json report;
    report["name"] = "algebra info";
    report["status"] = "ok";
    report["dims"]["algebra"] = a.dim();
    report["dims"]["radical_powers"] = rad_dims;
    report["dims"]["loewy_length"] = loewy;
    report["certificates"]["semisimple"] = semisimple;
    report["certificates"]["rigid"] = rig.rigid;
    json gq;
    bool have_quiver = false;
    std::size_t basic_dim = 0;
    try {
        basic_dim = qha::algcore::basic_algebra(a).algebra.dim();
        gq = quiver_json(qha::algcore::gabriel_quiver(a));
        have_quiver = true;
        report["dims"]["basic"] = basic_dim;
        report["gabriel"] = gq;
    } catch (const qha::NonSplitSemisimpleQuotient& e) {
        report["gabriel"] = json{{"unavailable", e.what()}};
    }

    emit(report, o.json_mode, [&] {
        std::cout << "dimension     " << a.dim() << "\n";
        if (!a.labels().empty()) {
            std::cout << "basis        ";
            for (std::size_t i = 0; i < a.dim(); ++i) std::cout << " " << a.label(i);
            std::cout << "\n";
        }
        std::cout << "radical dims ";
        for (auto dd : rad_dims) std::cout << " " << dd;
        std::cout << "  (powers 0.." << loewy << ")\n";
        std::cout << "loewy length  " << loewy << "\n";
        std::cout << "semisimple    " << yesno(semisimple) << "\n";
        std::cout << "rigid         " << yesno(rig.rigid);
        if (!rig.rigid && rig.witness_i)
            std::cout << "  (first mismatch at power " << *rig.witness_i << ")";
        std::cout << "\n";
        if (have_quiver) {
            std::cout << "basic dim     " << basic_dim << "\n";
            std::cout << "gabriel quiver:\n";
            qha::algcore::QuiverData q;
            q.vertex_names = gq["vertices"].get<std::vector<std::string>>();
            q.arrows = gq["arrows"].get<std::vector<std::vector<std::size_t>>>();
            print_quiver(q);
        } else {
            std::cout << "gabriel quiver: unavailable (" << report["gabriel"]["unavailable"].get<std::string>()
                      << ")\n";
        }
    });
    return 0;
}

int cmd_system_validate(const Opts& o) {
    FDAlgebra r = load_algebra(o);
    IdealSystem s = load_system(o, r);
    auto levels = qha::systems::semisimple_levels(s);
    const bool all_ss = qha::systems::is_semisimple_system(s);

    json report;
    report["name"] = "system validate";
    report["status"] = "ok";
    report["dims"]["parent"] = r.dim();
    report["dims"]["d"] = s.d();
    json grid = json::array();
    for (std::size_t i = 1; i <= s.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 1; j <= s.size(); ++j) row.push_back(s.at(i, j).dim());
        grid.push_back(row);
    }
    report["dims"]["grid"] = grid;
    report["certificates"]["axioms"] = true;
    report["certificates"]["semisimple_levels"] = levels;
    report["certificates"]["semisimple"] = all_ss;

    emit(report, o.json_mode, [&] {
        std::cout << "grid axioms   pass (d=" << s.d() << ", parent dim " << r.dim() << ")\n";
        std::cout << "entry dims:\n";
        for (std::size_t i = 1; i <= s.size(); ++i) {
            std::cout << " ";
            for (std::size_t j = 1; j <= s.size(); ++j) std::cout << " " << s.at(i, j).dim();
            std::cout << "\n";
        }
        for (std::size_t k = 1; k <= s.d(); ++k)
            std::cout << "level " << k << " quotient dim " << r.dim() - s.at(k, k + 1).dim()
                      << ": semisimple " << yesno(levels[k - 1]) << "\n";
        std::cout << "semisimple system: " << yesno(all_ss) << "\n";
    });
    return 0;
}

int write_or_print_system(const IdealSystem& s, const Opts& o, const std::string& what) {
    const std::string text = qha::io::write_system(s);
    if (!o.out_path.empty()) {
        qha::io::write_file(o.out_path, text);
        std::cout << "wrote " << what << " to " << o.out_path << "\n";
    } else {
        std::cout << text;
    }
    return 0;
}

int cmd_system_dual(const Opts& o) {
    FDAlgebra r = load_algebra(o);
    IdealSystem s = load_system(o, r);
    return write_or_print_system(qha::systems::dual_system(s), o,
                                 "dual grid (over the opposite algebra)");
}

int cmd_system_jacobson(const Opts& o) {
    FDAlgebra r = load_algebra(o);
    return write_or_print_system(qha::systems::jacobson_system(r), o, "jacobson grid");
}

int cmd_construct(const Opts& o) {
    FDAlgebra r = load_algebra(o);
    IdealSystem s = load_system(o, r);
    ConstructedAlgebra ca = qha::construct::build_algebra(s);

    json sidecar;
    sidecar["dim"] = ca.dim();
    sidecar["d"] = ca.d();
    sidecar["parent_dim"] = r.dim();
    json blocks = json::array();
    for (std::size_t i = 1; i <= ca.d() + 1; ++i)
        for (std::size_t j = 1; j <= ca.d() + 1; ++j) {
            const auto& b = ca.block(i, j);
            blocks.push_back(json{{"row", i}, {"col", j}, {"offset", b.offset}, {"size", b.size}});
        }
    sidecar["blocks"] = blocks;
    json idems = json::array();
    for (std::size_t k = 1; k <= ca.d() + 1; ++k) {
        json coords = json::array();
        for (const auto& c : ca.idempotent(k)) coords.push_back(qha::exactla::format_rational(c));
        idems.push_back(coords);
    }
    sidecar["idempotents"] = idems;

    qha::io::write_file(o.out_path, qha::io::write_algebra(ca.algebra()));
    qha::io::write_file(o.out_path + ".json", sidecar.dump(2) + "\n");

    if (o.json_mode) {
        std::cout << sidecar.dump(2) << "\n";
    } else {
        std::cout << "built algebra of dimension " << ca.dim() << " from the d=" << ca.d()
                  << " grid over a parent of dimension " << r.dim() << "\n";
        std::cout << "wrote " << o.out_path << " and " << o.out_path << ".json\n";
    }
    return 0;
}

json filtration_json(const qha::strat::DeltaFiltration& f) {
    json out;
    out["filtered"] = f.filtered;
    if (!f.filtered) out["failing_layer"] = f.failing_layer;
    out["multiplicities"] = f.multiplicities;
    return out;
}

int cmd_verify_qh(const Opts& o) {
    FDAlgebra r = load_algebra(o);
    IdealSystem s = load_system(o, r);
    ConstructedAlgebra ca = qha::construct::build_algebra(s);
    auto cert = qha::strat::verify_quasi_hereditary(ca);
    auto sd = qha::strat::strat_data(ca);
    std::vector<std::size_t> delta_dims;
    for (const auto& m : sd.deltas) delta_dims.push_back(m.dim());

    json report;
    report["name"] = "qh";
    report["status"] = cert.ok() ? "pass" : "fail";
    report["dims"]["algebra"] = ca.dim();
    report["dims"]["standard"] = delta_dims;
    json names = json::array();
    for (const auto& l : cert.labels) names.push_back(l.name);
    report["labels"] = names;
    report["multiplicities"] = cert.delta_simple_mults;
    report["certificates"]["diagonal_ones"] = cert.diagonal_ones;
    report["certificates"]["lower_levels_only"] = cert.lower_levels_only;
    report["certificates"]["kernels_filtered"] = cert.kernels_filtered;
    report["certificates"]["kernels_projective"] = cert.kernels_projective;
    report["certificates"]["layer_sums"] = cert.layer_sums;
    report["labels_first_level"] = cert.lambda_first;
    report["labels_last_level"] = cert.lambda_last;

    emit(report, o.json_mode, [&] {
        std::cout << "labels       ";
        for (const auto& l : cert.labels) std::cout << " " << l.name;
        std::cout << "\n";
        std::cout << "standard dims";
        for (auto dd : delta_dims) std::cout << " " << dd;
        std::cout << "\n";
        std::cout << "multiplicities [standard : simple]:\n";
        for (const auto& row : cert.delta_simple_mults) {
            std::cout << " ";
            for (auto m : row) std::cout << " " << m;
            std::cout << "\n";
        }
        std::cout << "diagonal ones       " << passfail(cert.diagonal_ones) << "\n";
        std::cout << "lower levels only   " << passfail(cert.lower_levels_only) << "\n";
        std::cout << "kernels filtered    " << passfail(cert.kernels_filtered) << "\n";
        std::cout << "kernels projective  " << passfail(cert.kernels_projective) << "\n";
        for (std::size_t i = 0; i < cert.layer_sums.size(); ++i)
            std::cout << "layer sum level " << i + 1 << "   " << passfail(cert.layer_sums[i])
                      << "\n";
        std::cout << "first/last level labels: " << cert.lambda_first << "/" << cert.lambda_last
                  << "\n";
        std::cout << "quasi-hereditary: " << passfail(cert.ok()) << "\n";
    });
    return cert.ok() ? 0 : 1;
}

int cmd_verify_ringel(const Opts& o) {
    FDAlgebra r = load_algebra(o);
    IdealSystem s = load_system(o, r);
    ConstructedAlgebra ca = qha::construct::build_algebra(s);
    auto rep = qha::strat::ringel_dual_report(ca);

    json report;
    report["name"] = "ringel";
    report["status"] = rep.ok() ? "pass" : "fail";
    report["dims"]["algebra"] = ca.dim();
    report["dims"]["endomorphisms"] = rep.dim_end;
    report["dims"]["dual"] = rep.dim_dual;
    json names = json::array();
    for (const auto& l : rep.labels) names.push_back(l.name);
    report["labels"] = names;
    json cols = json::array();
    for (const auto& f : rep.column_filtrations) cols.push_back(filtration_json(f));
    report["columns"] = cols;
    json summands = json::array();
    for (const auto& su : rep.summands)
        summands.push_back(json{{"column", su.column},
                                {"dim", su.dim},
                                {"label", rep.labels[su.label].name},
                                {"tilting", su.tilting}});
    report["summands"] = summands;
    report["certificates"]["t_filtered"] = rep.t_delta_filtered;
    report["certificates"]["ext_vanishing"] = rep.ext_vanishing;
    report["certificates"]["summands_tilting"] = rep.summands_tilting;
    report["certificates"]["levels_covered"] = rep.levels_covered;
    report["certificates"]["double_centralizer"] = rep.centralizer.ok();
    report["certificates"]["basic_dims_match"] = rep.basic_dims_match;
    report["certificates"]["quiver_match"] = rep.quiver_match;
    report["end_gabriel"] = quiver_json(rep.end_quiver);
    report["dual_gabriel"] = quiver_json(rep.dual_quiver);

    emit(report, o.json_mode, [&] {
        std::cout << "labels      ";
        for (const auto& l : rep.labels) std::cout << " " << l.name;
        std::cout << "\n";
        std::cout << "columns filtered     " << passfail(rep.t_delta_filtered) << "\n";
        std::cout << "extensions vanish    " << passfail(rep.ext_vanishing) << "\n";
        std::cout << "summands tilting     " << passfail(rep.summands_tilting) << "\n";
        for (const auto& su : rep.summands)
            std::cout << "  column " << su.column << ": dim " << su.dim << " top "
                      << rep.labels[su.label].name << (su.tilting ? "" : "  [FAIL]") << "\n";
        std::cout << "levels covered       " << passfail(rep.levels_covered) << "\n";
        std::cout << "double centralizer   " << passfail(rep.centralizer.ok()) << "\n";
        std::cout << "endomorphism dim " << rep.dim_end << ", dual-grid algebra dim "
                  << rep.dim_dual << "\n";
        std::cout << "basic dims match     " << passfail(rep.basic_dims_match) << "\n";
        std::cout << "quiver match         " << passfail(rep.quiver_match) << "\n";
        std::cout << "endomorphism quiver:\n";
        print_quiver(rep.end_quiver);
        std::cout << "ringel duality: " << passfail(rep.ok()) << "\n";
    });
    return rep.ok() ? 0 : 1;
}

json level_checks_json(const std::vector<qha::construct::LevelCheck>& levels) {
    json out = json::array();
    for (const auto& lc : levels)
        out.push_back(json{{"level", lc.level},
                           {"layer_formula", lc.layer_formula},
                           {"layer_projective", lc.layer_projective},
                           {"corner_matches", lc.corner_matches},
                           {"parabolic_identity", lc.parabolic_identity}});
    return out;
}

json peel_json(const qha::construct::PeelCheck& p) {
    json out;
    out["bottom_free"] = p.bottom_free;
    out["corner_quotient"] = p.corner_quotient;
    if (p.truncation_matches) out["truncation_matches"] = *p.truncation_matches;
    return out;
}

void print_levels(const std::vector<qha::construct::LevelCheck>& levels,
                  const qha::construct::PeelCheck& peel) {
    for (const auto& lc : levels)
        std::cout << "level " << lc.level << ": layer formula " << passfail(lc.layer_formula)
                  << ", projective layer " << passfail(lc.layer_projective) << ", corner "
                  << passfail(lc.corner_matches) << ", parabolic " << passfail(lc.parabolic_identity)
                  << "\n";
    std::cout << "bottom layer free    " << passfail(peel.bottom_free) << "\n";
    std::cout << "bottom corner        " << passfail(peel.corner_quotient) << "\n";
    if (peel.truncation_matches)
        std::cout << "truncation matches   " << passfail(*peel.truncation_matches) << "\n";
}

int cmd_verify_stratified(const Opts& o) {
    FDAlgebra r = load_algebra(o);
    IdealSystem s = load_system(o, r);
    ConstructedAlgebra ca = qha::construct::build_algebra(s);
    auto rep = qha::strat::verify_stratified(ca);

    json report;
    report["name"] = "stratified";
    report["status"] = rep.ok() ? "pass" : "fail";
    report["dims"]["algebra"] = ca.dim();
    report["levels"] = level_checks_json(rep.levels);
    report["peel"] = peel_json(rep.peel);
    report["certificates"]["faithful"] = rep.faithful.ok();
    report["certificates"]["a_annihilator_dim"] = rep.faithful.a_annihilator_dim;
    report["certificates"]["b_annihilator_dim"] = rep.faithful.b_annihilator_dim;
    report["certificates"]["first_column_faithful"] = rep.faithful.first_column_faithful;
    report["certificates"]["double_centralizer"] = rep.centralizer.ok();

    emit(report, o.json_mode, [&] {
        print_levels(rep.levels, rep.peel);
        std::cout << "carrier faithful     " << passfail(rep.faithful.ok()) << "\n";
        std::cout << "double centralizer   " << passfail(rep.centralizer.ok()) << "\n";
        std::cout << "stratified: " << passfail(rep.ok()) << "\n";
    });
    return rep.ok() ? 0 : 1;
}

int cmd_verify_chain(const Opts& o) {
    FDAlgebra r = load_algebra(o);
    IdealSystem s = load_system(o, r);
    ConstructedAlgebra ca = qha::construct::build_algebra(s);
    auto levels = qha::construct::verify_layers(ca);
    auto peel = qha::construct::verify_peel(ca);
    auto ses = qha::construct::verify_delta_resolutions(ca);
    bool ok = peel.ok();
    for (const auto& lc : levels) ok = ok && lc.ok();
    for (const auto& sc : ses) ok = ok && sc.ok();

    json report;
    report["name"] = "chain";
    report["status"] = ok ? "pass" : "fail";
    report["dims"]["algebra"] = ca.dim();
    report["levels"] = level_checks_json(levels);
    report["peel"] = peel_json(peel);
    json res = json::array();
    for (const auto& sc : ses)
        res.push_back(json{{"level", sc.level},
                           {"injective", sc.injective},
                           {"image_matches", sc.image_matches},
                           {"quotient_matches", sc.quotient_matches}});
    report["resolutions"] = res;

    emit(report, o.json_mode, [&] {
        print_levels(levels, peel);
        for (const auto& sc : ses)
            std::cout << "resolution at level " << sc.level << ": injective "
                      << passfail(sc.injective) << ", image " << passfail(sc.image_matches)
                      << ", quotient " << passfail(sc.quotient_matches) << "\n";
        std::cout << "chain: " << passfail(ok) << "\n";
    });
    return ok ? 0 : 1;
}

int cmd_enumerate(const Opts& o) {
    FDAlgebra r = load_algebra(o);
    auto all = qha::systems::enumerate_semisimple_systems(r, o.d);
    json list = json::array();
    std::size_t nontrivial = 0;
    for (const auto& s : all) {
        ConstructedAlgebra ca = qha::construct::build_algebra(s);
        const std::size_t rad = qha::algcore::jacobson_radical(ca.algebra()).dim();
        if (rad > 0) ++nontrivial;
        std::vector<std::size_t> upper;
        for (std::size_t i = 1; i <= s.d(); ++i)
            for (std::size_t j = i + 1; j <= s.d() + 1; ++j) upper.push_back(s.at(i, j).dim());
        list.push_back(json{{"upper_dims", upper}, {"dim", ca.dim()}, {"radical_dim", rad}});
    }

    json report;
    report["name"] = "enumerate";
    report["status"] = "ok";
    report["d"] = o.d;
    report["count"] = all.size();
    report["nontrivial"] = nontrivial;
    report["systems"] = list;

    emit(report, o.json_mode, [&] {
        for (std::size_t k = 0; k < list.size(); ++k) {
            std::cout << "system " << k << ": upper dims";
            for (const auto& u : list[k]["upper_dims"]) std::cout << " " << u.get<std::size_t>();
            std::cout << "  -> dim " << list[k]["dim"].get<std::size_t>() << ", radical dim "
                      << list[k]["radical_dim"].get<std::size_t>() << "\n";
        }
        std::cout << all.size() << " semisimple " << o.d << "-grids, " << nontrivial
                  << " with nonzero radical\n";
    });
    return 0;
}

// The bundled demonstration corpus: every 2-grid over the 3-dimensional
// hereditary algebra with two vertices and one arrow whose layered algebra
// has a nonzero radical and a pictured quiver presentation.
const char* kDemoAlgebra =
    "algebra dim=3\n"
    "label 0 e_a\n"
    "label 1 e_b\n"
    "label 2 f\n"
    "unit 1 1 0\n"
    "mul 0 0 1 0 0\n"
    "mul 0 1 0 0 0\n"
    "mul 0 2 0 0 0\n"
    "mul 1 0 0 0 0\n"
    "mul 1 1 0 1 0\n"
    "mul 1 2 0 0 1\n"
    "mul 2 0 0 0 1\n"
    "mul 2 1 0 0 0\n"
    "mul 2 2 0 0 0\n";

struct DemoCase {
    const char* name;
    const char* system;
};

const DemoCase kDemoCases[] = {
    {"jacobson",
     R"({"d": 2, "ideals": {"1,2": ["e_a", "f"], "1,3": [], "2,3": ["f"]}})"},
    {"dual-jacobson",
     R"({"d": 2, "ideals": {"1,2": ["f"], "1,3": [], "2,3": ["e_b", "f"]}})"},
    {"chain",
     R"({"d": 2, "ideals": {"1,2": ["f"], "1,3": [], "2,3": ["f"]}})"},
    {"two-blocks",
     R"({"d": 2, "ideals": {"1,2": ["e_a", "f"], "1,3": [], "2,3": ["e_b", "f"]}})"},
    {"upper-corner",
     R"({"d": 2, "ideals": {"1,2": ["e_a", "f"], "1,3": ["f"], "2,3": ["f"]}})"},
    {"lower-corner",
     R"({"d": 2, "ideals": {"1,2": ["f"], "1,3": ["f"], "2,3": ["e_b", "f"]}})"},
    {"split-chains",
     R"({"d": 2, "ideals": {"1,2": ["f"], "1,3": ["f"], "2,3": ["f"]}})"},
    {"alpha-column",
     R"({"d": 2, "ideals": {"1,2": ["e_a", "f"], "1,3": ["e_a", "f"], "2,3": ["e_a", "f"]}})"},
    {"beta-column",
     R"({"d": 2, "ideals": {"1,2": ["e_b", "f"], "1,3": ["e_b", "f"], "2,3": ["e_b", "f"]}})"},
};

json demo_case_report(const DemoCase& dc, const FDAlgebra& r) {
    IdealSystem s = qha::io::parse_system(dc.system, r);
    qha::systems::validate_system(s);
    ConstructedAlgebra ca = qha::construct::build_algebra(s);
    auto cert = qha::strat::verify_quasi_hereditary(ca);
    auto sd = qha::strat::strat_data(ca);
    auto rep = qha::strat::ringel_dual_report(ca);
    auto strat = qha::strat::verify_stratified(ca);
    const std::size_t basic_dim = qha::algcore::basic_algebra(ca.algebra()).algebra.dim();
    auto gq = qha::algcore::gabriel_quiver(ca.algebra());

    std::vector<std::size_t> delta_dims;
    for (const auto& m : sd.deltas) delta_dims.push_back(m.dim());
    const bool pass = cert.ok() && rep.ok() && strat.ok();

    json c;
    c["name"] = dc.name;
    c["system"] = json::parse(dc.system);
    c["status"] = pass ? "pass" : "fail";
    c["dims"]["algebra"] = ca.dim();
    c["dims"]["basic"] = basic_dim;
    c["dims"]["standard"] = delta_dims;
    c["dims"]["endomorphisms"] = rep.dim_end;
    c["dims"]["dual"] = rep.dim_dual;
    json names = json::array();
    for (const auto& l : cert.labels) names.push_back(l.name);
    c["labels"] = names;
    c["multiplicities"] = cert.delta_simple_mults;
    c["gabriel"] = quiver_json(gq);
    c["end_gabriel"] = quiver_json(rep.end_quiver);
    c["certificates"]["quasi_hereditary"] = cert.ok();
    c["certificates"]["t_filtered"] = rep.t_delta_filtered;
    c["certificates"]["ext_vanishing"] = rep.ext_vanishing;
    c["certificates"]["summands_tilting"] = rep.summands_tilting;
    c["certificates"]["levels_covered"] = rep.levels_covered;
    c["certificates"]["double_centralizer"] = rep.centralizer.ok();
    c["certificates"]["basic_dims_match"] = rep.basic_dims_match;
    c["certificates"]["quiver_match"] = rep.quiver_match;
    c["certificates"]["stratified"] = strat.ok();
    return c;
}

int cmd_demo(const Opts& o) {
    FDAlgebra r = qha::io::parse_algebra(kDemoAlgebra);
    qha::algcore::validate_algebra(r);
    json cases = json::array();
    std::size_t passed = 0;
    for (const auto& dc : kDemoCases) {
        json c = demo_case_report(dc, r);
        if (c["status"] == "pass") ++passed;
        cases.push_back(std::move(c));
    }
    const std::size_t total = std::size(kDemoCases);

    if (o.json_mode) {
        std::cout << cases.dump(2) << "\n";
    } else {
        for (const auto& c : cases) {
            std::cout << c["name"].get<std::string>() << ": dim "
                      << c["dims"]["algebra"].get<std::size_t>() << ", basic "
                      << c["dims"]["basic"].get<std::size_t>() << ", labels";
            for (const auto& l : c["labels"]) std::cout << " " << l.get<std::string>();
            std::cout << ", dual dim " << c["dims"]["dual"].get<std::size_t>() << "  ["
                      << c["status"].get<std::string>() << "]\n";
        }
        std::cout << passed << "/" << total << " cases pass\n";
    }
    return passed == total ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"layered algebras from ideal grids: construction and certificates"};
    app.require_subcommand(1);
    Opts o;
    int rc = 0;

    auto add_algebra = [&](CLI::App* c) {
        c->add_option("--algebra", o.algebra_path, "algebra file (structure constants or quiver)")
            ->required();
        c->add_option("--max-path-len", o.max_path_len,
                      "path length bound for quiver input (0 = default)");
    };
    auto add_system = [&](CLI::App* c) {
        c->add_option("--system", o.system_path, "ideal grid file (JSON)")->required();
    };
    auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json_mode, "emit a JSON report"); };

    CLI::App* algebra = app.add_subcommand("algebra", "inspect an algebra file");
    algebra->require_subcommand(1);
    CLI::App* info = algebra->add_subcommand("info", "dimensions, radical, rigidity, quiver");
    add_algebra(info);
    add_json(info);
    info->callback([&] { rc = cmd_algebra_info(o); });

    CLI::App* system = app.add_subcommand("system", "inspect or derive ideal grids");
    system->require_subcommand(1);
    CLI::App* validate = system->add_subcommand("validate", "check the grid axioms");
    add_algebra(validate);
    add_system(validate);
    add_json(validate);
    validate->callback([&] { rc = cmd_system_validate(o); });
    CLI::App* dual = system->add_subcommand("dual", "emit the dual grid over the opposite algebra");
    add_algebra(dual);
    add_system(dual);
    dual->add_option("--out", o.out_path, "write the grid here instead of stdout");
    dual->callback([&] { rc = cmd_system_dual(o); });
    CLI::App* jacobson = system->add_subcommand("jacobson", "emit the radical-power grid");
    add_algebra(jacobson);
    jacobson->add_option("--out", o.out_path, "write the grid here instead of stdout");
    jacobson->callback([&] { rc = cmd_system_jacobson(o); });

    CLI::App* construct = app.add_subcommand("construct", "build the layered algebra of a grid");
    add_algebra(construct);
    add_system(construct);
    construct->add_option("--out", o.out_path, "output algebra file (sidecar: <out>.json)")
        ->required();
    add_json(construct);
    construct->callback([&] { rc = cmd_construct(o); });

    CLI::App* verify = app.add_subcommand("verify", "run certificates on a grid's algebra");
    verify->require_subcommand(1);
    CLI::App* qh = verify->add_subcommand("qh", "quasi-hereditary axioms (semisimple grids)");
    CLI::App* ringel = verify->add_subcommand("ringel", "tilting carrier and dual comparison");
    CLI::App* stratified =
        verify->add_subcommand("stratified", "layer chain, faithfulness, double centralizer");
    CLI::App* chain = verify->add_subcommand("chain", "layer chain and standard resolutions");
    for (CLI::App* c : {qh, ringel, stratified, chain}) {
        add_algebra(c);
        add_system(c);
        add_json(c);
    }
    qh->callback([&] { rc = cmd_verify_qh(o); });
    ringel->callback([&] { rc = cmd_verify_ringel(o); });
    stratified->callback([&] { rc = cmd_verify_stratified(o); });
    chain->callback([&] { rc = cmd_verify_chain(o); });

    CLI::App* enumerate = app.add_subcommand("enumerate", "all semisimple grids over a parent");
    add_algebra(enumerate);
    enumerate->add_option("--d", o.d, "grid depth")->required();
    add_json(enumerate);
    enumerate->callback([&] { rc = cmd_enumerate(o); });

    CLI::App* demo = app.add_subcommand("demo", "run the bundled worked examples");
    add_json(demo);
    demo->callback([&] { rc = cmd_demo(o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const qha::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const qha::ValidationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const qha::NonSplitSemisimpleQuotient& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const qha::NotNilpotent& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const qha::InfiniteDimensional& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const qha::Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
