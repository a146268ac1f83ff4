/*
   Copyright 2026 The hopfore Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// hopfore: command-line front end. Exit status 0 on success, 1 when two
// computations disagree or an identity fails, 2 on usage or input errors.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hopfore/hopfore.hpp"

namespace {

using namespace hopfore;

constexpr int kOk = 0;
constexpr int kDisagree = 1;
constexpr int kUsage = 2;

struct AlgebraChoice {
    int m = 3;
    std::string file;

    AlgebraPtr load() const {
        if (file.empty()) return make_dihedral(m);
        std::ifstream in(file);
        if (!in) throw Error(ErrorKind::InvalidParameter, "cannot open '" + file + "'");
        Json j;
        try {
            j = Json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::SyntaxError, file + ": " + e.what());
        }
        return std::make_shared<const AlgebraData>(algebra_from_json(j));
    }
};

void add_algebra_flags(CLI::App* cmd, AlgebraChoice& a) {
    cmd->add_option("--m", a.m, "dihedral parameter m (odd, >= 3); D_n has n = 2m")->default_val(3);
    cmd->add_option("--algebra", a.file, "custom algebra JSON file (overrides --m)");
}

std::vector<Cyclotomic> parse_betas(const std::string& list, int order) {
    std::vector<Cyclotomic> out;
    std::stringstream ss(list);
    for (std::string item; std::getline(ss, item, ',');) {
        Cyclotomic b = parse_cyclotomic(item, order);
        if (b.is_zero()) throw Error(ErrorKind::ZeroBeta, "beta list must not contain 0");
        if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
    }
    if (out.empty()) throw Error(ErrorKind::InvalidParameter, "empty beta list");
    return out;
}

void print_algebra(const AlgebraData& alg, bool json) {
    if (json) {
        std::cout << algebra_summary_to_json(alg).dump(2) << "\n";
        return;
    }
    std::cout << "|G| = " << alg.group().size() << ", field Q(zeta_" << alg.field_order() << ")\n";
    std::cout << "a = " << alg.group().name(alg.central()) << ", q = chi(a) = " << alg.q() << ", s = " << alg.s()
              << (alg.fusion_ready() ? "" : " (|q| != s: fusion rules unavailable)") << "\n";
    std::cout << "simple\tdim\tsigma\tomega\n";
    for (SimpleIndex i = 0; i < alg.simple_count(); ++i)
        std::cout << alg.name(i) << "\t" << alg.dim(i) << "\t" << alg.name(alg.sigma(i)) << "\t" << alg.omega(i) << "\n";
    std::cout << "orbit representatives:";
    for (SimpleIndex i : alg.representatives()) std::cout << " " << alg.name(i);
    std::cout << "\n";
}

int run_tensor(const AlgebraChoice& a, const std::string& left, const std::string& right, const std::string& method, bool json) {
    const AlgebraPtr alg = a.load();
    const IndecLabel L = parse_label(left, *alg), R = parse_label(right, *alg);
    std::optional<LabelMultiset<IndecLabel>> closed;
    std::optional<DecompResult> matrix;
    if (method != "matrix") closed = tensor_labels(*alg, L, R);
    if (method != "closed") matrix = decompose(tensor(build_module(alg, L), build_module(alg, R)));
    const bool both = closed && matrix;
    const bool agree = !both || *closed == matrix->multiset;
    if (json) {
        Json j;
        j["left"] = format_label(*alg, canonicalize(*alg, L));
        j["right"] = format_label(*alg, canonicalize(*alg, R));
        if (closed) j["closed"] = {{"summands", multiset_to_json(*alg, *closed)}, {"total_dim", multiset_dim(*alg, *closed)}};
        if (matrix) j["matrix"] = decomposition_to_json(*alg, *matrix);
        if (both) j["agree"] = agree;
        std::cout << j.dump(2) << "\n";
    } else {
        if (closed) std::cout << "closed: " << format_multiset(*alg, *closed) << "\n";
        if (matrix) std::cout << "matrix: " << format_multiset(*alg, matrix->multiset) << "\n";
        if (both) std::cout << "agree=" << (agree ? "true" : "false") << "\n";
    }
    return agree ? kOk : kDisagree;
}

int run_ring_mul(const AlgebraChoice& a, const std::string& ring, const std::string& expr, const std::string& basis) {
    const AlgebraPtr alg = a.load();
    const ExprPtr e = parse_expr(expr, *alg);
    if (ring == "green") {
        if (basis != "canonical") throw Error(ErrorKind::InvalidParameter, "the x-bases apply to the Grothendieck ring only");
        std::cout << evaluate_expr<IndecLabel>(*e, alg).to_string() << "\n";
        return kOk;
    }
    const GrothElement v = evaluate_expr<SimpleLabel>(*e, alg);
    if (basis == "canonical")
        std::cout << v.to_string() << "\n";
    else if (basis == "x1")
        std::cout << groth_to_x_basis(v).to_string() << "\n";
    else
        std::cout << x2_to_string(groth_to_x2_basis(v)) << "\n";
    return kOk;
}

int run_verify_fusion(int m, int tmax, int eig_tmax, const std::string& betas, unsigned threads, bool json) {
    const AlgebraPtr alg = make_dihedral(m);
    if (tmax < 1) throw Error(ErrorKind::InvalidParameter, "--tmax must be positive");
    if (eig_tmax < 0) eig_tmax = std::max(1, tmax - 1);
    const auto labels = grid_labels(*alg, tmax, eig_tmax, parse_betas(betas, alg->field_order()));
    const auto cases = run_fusion_grid(alg, labels, threads);
    std::size_t mismatches = 0;
    for (const auto& c : cases) mismatches += c.agree() ? 0 : 1;
    if (json) {
        Json j;
        j["m"] = m;
        j["cases"] = cases.size();
        j["mismatches"] = mismatches;
        Json bad = Json::array();
        for (const auto& c : cases)
            if (!c.agree())
                bad.push_back({{"left", format_label(*alg, c.left)},
                               {"right", format_label(*alg, c.right)},
                               {"closed", multiset_to_json(*alg, c.closed)},
                               {"matrix", multiset_to_json(*alg, c.oracle)},
                               {"error", c.error}});
        j["failures"] = bad;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "left\tright\ttensor_dim\tclosed\tmatrix\tagree\n";
        for (const auto& c : cases)
            std::cout << format_label(*alg, c.left) << "\t" << format_label(*alg, c.right) << "\t" << c.tensor_dim << "\t"
                      << format_multiset(*alg, c.closed) << "\t" << (c.error.empty() ? format_multiset(*alg, c.oracle) : c.error) << "\t"
                      << (c.agree() ? "true" : "false") << "\n";
        std::cout << "# cases=" << cases.size() << " mismatches=" << mismatches << "\n";
    }
    return mismatches == 0 ? kOk : kDisagree;
}

int run_verify_presentation(int m, const std::string& betas, int tmax, const std::string& part, bool json) {
    const AlgebraPtr alg = make_dihedral(m);
    PresentationConfig cfg;
    cfg.betas = parse_betas(betas, alg->field_order());
    cfg.tmax = tmax;
    const auto report = verify_presentation(alg, parse_presentation_part(part), cfg);
    std::size_t failures = 0;
    for (const auto& c : report) failures += c.pass ? 0 : 1;
    if (json) {
        std::cout << Json{{"m", m}, {"checks", report.size()}, {"failures", failures}, {"report", report_to_json(report)}}.dump(2) << "\n";
    } else {
        std::cout << "status\tfamily\tidentity\tlhs\trhs\n";
        for (const auto& c : report)
            std::cout << (c.pass ? "pass" : "FAIL") << "\t" << c.family << "\t" << c.identity_name << "\t" << c.lhs << "\t" << c.rhs << "\n";
        std::cout << "# checks=" << report.size() << " failures=" << failures << "\n";
    }
    return failures == 0 ? kOk : kDisagree;
}

int run_module_export(const AlgebraChoice& a, const std::string& label, const std::string& out) {
    const AlgebraPtr alg = a.load();
    const ExplicitModule mod = build_module(alg, parse_label(label, *alg));
    const std::string text = module_to_json(mod).dump(2) + "\n";
    if (out.empty() || out == "-") {
        std::cout << text;
        return kOk;
    }
    std::ofstream f(out);
    if (!f) throw Error(ErrorKind::InvalidParameter, "cannot write '" + out + "'");
    f << text;
    return kOk;
}

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::InternalInconsistency:
        case ErrorKind::NonIntegerMultiplicity:
        case ErrorKind::CandidatePoolIncomplete:
            return kDisagree;
        default:
            return kUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact fusion rules, decompositions and ring identities for Hopf-Ore extensions of group algebras"};
    app.require_subcommand(1);

    bool json = false;
    AlgebraChoice algebra;

    auto* alg_cmd = app.add_subcommand("algebra", "describe an algebra")->require_subcommand(1);
    int dihedral_m = 3;
    auto* alg_dihedral = alg_cmd->add_subcommand("dihedral", "kD_n(chi, a^m, 0) with n = 2m");
    alg_dihedral->add_option("--m", dihedral_m, "odd m >= 3")->required();
    alg_dihedral->add_flag("--json", json, "JSON output");
    std::string custom_file;
    auto* alg_custom = alg_cmd->add_subcommand("custom", "algebra from a JSON description");
    alg_custom->add_option("--file", custom_file, "JSON file")->required()->check(CLI::ExistingFile);
    alg_custom->add_flag("--json", json, "JSON output");

    std::string left, right, method = "both";
    auto* tensor_cmd = app.add_subcommand("tensor", "decompose the tensor product of two indecomposables");
    tensor_cmd->add_option("--left", left, "left label, e.g. V[2](eps)")->required();
    tensor_cmd->add_option("--right", right, "right label")->required();
    tensor_cmd->add_option("--method", method, "closed, matrix or both")->check(CLI::IsMember({"closed", "matrix", "both"}));
    tensor_cmd->add_flag("--json", json, "JSON output");
    add_algebra_flags(tensor_cmd, algebra);

    std::string ring = "green", expr, basis = "canonical";
    auto* ring_cmd = app.add_subcommand("ring", "Green ring and Grothendieck ring arithmetic")->require_subcommand(1);
    auto* ring_mul = ring_cmd->add_subcommand("mul", "evaluate a ring expression");
    ring_mul->add_option("--ring", ring, "green or groth")->check(CLI::IsMember({"green", "groth"}));
    ring_mul->add_option("--expr", expr, "expression, e.g. \"x^3 - 3*x\"")->required();
    ring_mul->add_option("--basis", basis, "canonical, x1 or x2")->check(CLI::IsMember({"canonical", "x1", "x2"}));
    add_algebra_flags(ring_mul, algebra);

    int m = 3, tmax = 3, eig_tmax = -1;
    unsigned threads = 0;
    std::string betas, part = "all";
    auto* verify_cmd = app.add_subcommand("verify", "verification suites")->require_subcommand(1);
    auto* verify_fusion = verify_cmd->add_subcommand("fusion", "closed-form fusion rules against matrix decomposition");
    verify_fusion->add_option("--m", m, "dihedral parameter")->default_val(3);
    verify_fusion->add_option("--tmax", tmax, "largest nilpotent length")->default_val(3);
    verify_fusion->add_option("--eig-tmax", eig_tmax, "largest eigen length (default tmax - 1)");
    verify_fusion->add_option("--betas", betas, "comma-separated scalars")->default_val("1,-1,2,1/2");
    verify_fusion->add_option("--threads", threads, "worker threads (0 = all cores)")->default_val(0);
    verify_fusion->add_flag("--json", json, "JSON summary instead of TSV");
    auto* verify_pres = verify_cmd->add_subcommand("presentation", "ring presentation identities");
    verify_pres->add_option("--m", m, "dihedral parameter")->default_val(3);
    verify_pres->add_option("--betas", betas, "comma-separated scalars")->default_val("1,-1,2,-2,1/2");
    verify_pres->add_option("--tmax", tmax, "largest power of z checked")->default_val(6);
    verify_pres->add_option("--part", part, "groth_kDn, groth_H, green_R, green_H, combined or all")
        ->check(CLI::IsMember({"groth_kDn", "groth_H", "green_R", "green_H", "combined", "all"}));
    verify_pres->add_flag("--json", json, "JSON report");

    std::string label, out;
    auto* module_cmd = app.add_subcommand("module", "explicit modules")->require_subcommand(1);
    auto* module_export = module_cmd->add_subcommand("export", "write the matrices of an indecomposable as JSON");
    module_export->add_option("--label", label, "module label")->required();
    module_export->add_option("--out", out, "output file ('-' for stdout)")->default_val("-");
    add_algebra_flags(module_export, algebra);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (alg_dihedral->parsed()) {
            print_algebra(*make_dihedral(dihedral_m), json);
            return kOk;
        }
        if (alg_custom->parsed()) {
            print_algebra(*AlgebraChoice{0, custom_file}.load(), json);
            return kOk;
        }
        if (tensor_cmd->parsed()) return run_tensor(algebra, left, right, method, json);
        if (ring_mul->parsed()) return run_ring_mul(algebra, ring, expr, basis);
        if (verify_fusion->parsed()) return run_verify_fusion(m, tmax, eig_tmax, betas, threads, json);
        if (verify_pres->parsed()) return run_verify_presentation(m, betas, tmax, part, json);
        if (module_export->parsed()) return run_module_export(algebra, label, out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return kUsage;
}
