// Command-line front end: batch verification of equivariant Betti tables,
// cohomology tables and labeled double complexes.
//
// Exit codes: 0 success / affirmative verdict, 1 negative mathematical
// verdict (nonzero residual, no matching, obstruction found, diagnostics
// present), 2 malformed input. Errors are reported as JSON on stderr.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "grassbs/herzog_kuhl.hpp"
#include "grassbs/io.hpp"
#include "grassbs/pairing.hpp"

namespace {

using grassbs::OrderedJson;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitBadInput = 2;

int enumeration_cap() {
    const char* env = std::getenv("GRASSBS_MAX_ENUM");
    if (!env) return 8;
    try {
        return std::max(0, std::stoi(env));
    } catch (...) {
        throw grassbs::FormatError("GRASSBS_MAX_ENUM is not an integer");
    }
}

nlohmann::json read_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw grassbs::FormatError("cannot open " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw grassbs::FormatError(std::string("JSON parse error: ") + e.what());
    }
}

struct Output {
    std::string path;  // empty or "-" means stdout

    void write(const std::string& text) const {
        if (path.empty() || path == "-") {
            std::cout << text;
            if (text.empty() || text.back() != '\n') std::cout << "\n";
        } else {
            std::ofstream out(path);
            if (!out) throw grassbs::FormatError("cannot write " + path);
            out << text;
            if (text.empty() || text.back() != '\n') out << "\n";
        }
    }

    void write(const OrderedJson& doc) const { write(doc.dump(2)); }
};

grassbs::BettiTable load_betti(const std::string& path) {
    return grassbs::betti_from_json(read_json(path));
}

grassbs::RankBettiTable load_rank(const std::string& path) {
    nlohmann::json doc = read_json(path);
    // `pair | match -` pipelines hand rank tables around; accept multiplicity
    // tables too and treat their entries verbatim.
    if (doc.is_object() && doc.contains("kind") && doc["kind"] == "betti") {
        grassbs::BettiTable b = grassbs::betti_from_json(doc);
        grassbs::RankBettiTable t(b.k(), b.n());
        for (const auto& [key, value] : b.entries()) t.set(key.i, key.lambda, value);
        return t;
    }
    return grassbs::rank_betti_from_json(doc);
}

std::vector<grassbs::IntSeq> lambda_list(const std::string& lambdas_path, int lambda_max_size,
                                         int k) {
    std::vector<grassbs::IntSeq> out;
    if (!lambdas_path.empty()) {
        nlohmann::json doc = read_json(lambdas_path);
        if (!doc.is_array()) throw grassbs::FormatError("--lambdas file must hold a JSON array");
        for (const auto& l : doc) out.push_back(grassbs::intseq_from_json(l, k));
        return out;
    }
    for (const grassbs::Partition& p : grassbs::partitions_up_to_size(lambda_max_size, k))
        out.push_back(p.to_seq(k));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equivariant Boij-Soderberg computations on Grassmannians"};
    app.require_subcommand(1);

    std::string in_path, in_path2, out_path;
    bool pretty = false;

    // hk-check
    auto* hk = app.add_subcommand("hk-check", "residuals of a Betti table against the HK system");
    hk->add_option("table", in_path, "Betti table JSON (- for stdin)")->required();
    hk->add_option("-o,--output", out_path, "output path");

    // pair
    auto* pair_cmd = app.add_subcommand("pair", "pair a Betti table with a cohomology table");
    pair_cmd->add_option("beta", in_path, "Betti table JSON")->required();
    pair_cmd->add_option("gamma", in_path2, "cohomology table JSON")->required();
    bool with_grid = false;
    pair_cmd->add_flag("--grid", with_grid, "also emit the (p,q) product grid");
    pair_cmd->add_flag("--pretty", pretty, "human-readable table");
    pair_cmd->add_option("-o,--output", out_path, "output path");

    // bott
    auto* bott_cmd = app.add_subcommand("bott", "GL-cohomology table of a Bott bundle");
    int bott_k = 0, bott_n = 0, lambda_max_size = -1;
    std::string bundle_expr = "O", lambdas_path;
    bott_cmd->add_option("-k", bott_k, "subbundle rank")->required();
    bott_cmd->add_option("-n", bott_n, "ambient dimension")->required();
    bott_cmd->add_option("--bundle", bundle_expr, "bundle expression, e.g. \"O(1)+O(-1)\" or \"Q[2]*O(-1)\"");
    bott_cmd->add_option("--lambdas", lambdas_path, "JSON array of weights");
    bott_cmd->add_option("--lambda-max-size", lambda_max_size,
                         "enumerate partition weights up to this size instead");
    bott_cmd->add_flag("--pretty", pretty, "human-readable table");
    bott_cmd->add_option("-o,--output", out_path, "output path");

    // match / decompose
    auto* match_cmd = app.add_subcommand("match", "derived-cone membership of a rank table");
    match_cmd->add_option("table", in_path, "rank Betti table JSON (- for stdin)")->required();
    bool want_certificate = false, want_decomposition = false;
    match_cmd->add_flag("--certificate", want_certificate, "emit the violator certificate JSON");
    match_cmd->add_flag("--decompose", want_decomposition, "emit the pure-table summands JSON");
    match_cmd->add_option("-o,--output", out_path, "output path");

    auto* decompose_cmd = app.add_subcommand("decompose", "shorthand for match --decompose");
    decompose_cmd->add_option("table", in_path, "rank Betti table JSON (- for stdin)")->required();
    decompose_cmd->add_option("-o,--output", out_path, "output path");

    // enum-pure
    auto* enum_cmd = app.add_subcommand("enum-pure", "enumerate simple and pure tables");
    int enum_k = 0, enum_n = 0, max_size = -1;
    enum_cmd->add_option("-k", enum_k, "subbundle rank")->required();
    enum_cmd->add_option("-n", enum_n, "ambient dimension")->required();
    enum_cmd->add_option("--max-size", max_size, "largest partition size (default: GRASSBS_MAX_ENUM)");
    enum_cmd->add_flag("--pretty", pretty, "human-readable tables");
    enum_cmd->add_option("-o,--output", out_path, "output path");

    // classify-strips
    auto* strips_cmd = app.add_subcommand("classify-strips", "border-strip test for a triple");
    std::vector<int> raw_lambda, raw_mu, raw_nu;
    strips_cmd->add_option("--lambda", raw_lambda, "first partition")->expected(0, 64);
    strips_cmd->add_option("--mu", raw_mu, "second partition")->required()->expected(1, 64);
    strips_cmd->add_option("--nu", raw_nu, "third partition")->required()->expected(1, 64);
    strips_cmd->add_option("-o,--output", out_path, "output path");

    // e1-match
    auto* e1_cmd = app.add_subcommand("e1-match", "perfect matching on the E1 graph of a double complex");
    e1_cmd->add_option("complex", in_path, "double complex JSON (- for stdin)")->required();
    e1_cmd->add_option("-o,--output", out_path, "output path");

    // export-dot
    auto* dot_cmd = app.add_subcommand("export-dot", "Betti graph of a rank table in DOT format");
    dot_cmd->add_option("table", in_path, "rank Betti table JSON (- for stdin)")->required();
    dot_cmd->add_option("-o,--output", out_path, "output path");

    // validate
    auto* validate_cmd = app.add_subcommand("validate", "diagnostics for a table or double complex");
    validate_cmd->add_option("input", in_path, "JSON document (- for stdin)")->required();
    validate_cmd->add_option("-o,--output", out_path, "output path");

    CLI11_PARSE(app, argc, argv);

    Output out{out_path};
    try {
        if (hk->parsed()) {
            std::vector<grassbs::Rat> residuals = grassbs::hk_check(load_betti(in_path));
            out.write(grassbs::residuals_to_json(residuals));
            for (const grassbs::Rat& r : residuals)
                if (r != 0) return kExitNegative;
            return kExitOk;
        }

        if (pair_cmd->parsed()) {
            grassbs::BettiTable beta = load_betti(in_path);
            grassbs::CohomologyTable gamma = grassbs::cohomology_from_json(read_json(in_path2));
            grassbs::PairingResult result = grassbs::pair_tables(beta, gamma);
            if (pretty) {
                out.write(grassbs::pretty_table(result.table, "phi"));
            } else if (with_grid) {
                OrderedJson doc;
                doc["table"] = grassbs::table_to_json(result.table);
                doc["grid"] = grassbs::grid_to_json(result.grid);
                out.write(doc);
            } else {
                out.write(grassbs::table_to_json(result.table));
            }
            return kExitOk;
        }

        if (bott_cmd->parsed()) {
            if (lambda_max_size < 0 && lambdas_path.empty()) lambda_max_size = enumeration_cap();
            grassbs::BottBundle bundle = grassbs::parse_bundle(bundle_expr);
            grassbs::CohomologyTable gamma = grassbs::bott_cohomology(
                bott_k, bott_n, bundle, lambda_list(lambdas_path, lambda_max_size, bott_k));
            if (pretty)
                out.write(grassbs::pretty_table(gamma, "gamma"));
            else
                out.write(grassbs::table_to_json(gamma));
            return kExitOk;
        }

        if (match_cmd->parsed() || decompose_cmd->parsed()) {
            if (decompose_cmd->parsed()) want_decomposition = true;
            grassbs::MembershipResult result = grassbs::derived_cone_membership(load_rank(in_path));
            OrderedJson doc = grassbs::membership_to_json(result);
            if (!want_certificate) doc.erase("certificate");
            if (!want_decomposition) doc.erase("decomposition");
            out.write(doc);
            return result.member ? kExitOk : kExitNegative;
        }

        if (enum_cmd->parsed()) {
            if (max_size < 0) max_size = enumeration_cap();
            std::vector<grassbs::BettiTable> tables =
                grassbs::enumerate_pure_tables(enum_k, enum_n, max_size);
            if (pretty) {
                std::ostringstream ss;
                for (const auto& t : tables) ss << grassbs::pretty_table(t, "beta") << "\n";
                out.write(ss.str());
            } else {
                OrderedJson arr = OrderedJson::array();
                for (const auto& t : tables) arr.push_back(grassbs::table_to_json(t));
                out.write(arr);
            }
            return kExitOk;
        }

        if (strips_cmd->parsed()) {
            grassbs::BorderStripClassification c = grassbs::classify_border_strips(
                grassbs::Partition(raw_lambda), grassbs::Partition(raw_mu),
                grassbs::Partition(raw_nu));
            OrderedJson doc;
            doc["simple_hypothesis"] = c.simple_hypothesis;
            doc["bound_ok"] = c.bound_ok;
            out.write(doc);
            return kExitOk;
        }

        if (e1_cmd->parsed()) {
            grassbs::DoubleComplex dc = grassbs::double_complex_from_json(read_json(in_path));
            auto pairs = grassbs::e1_matching(dc);
            out.write(grassbs::e1_pairs_to_json(pairs, dc.poset));
            return kExitOk;
        }

        if (dot_cmd->parsed()) {
            out.write(grassbs::export_dot(grassbs::build_graph(load_rank(in_path))));
            return kExitOk;
        }

        if (validate_cmd->parsed()) {
            nlohmann::json doc = read_json(in_path);
            std::vector<std::string> diagnostics;
            if (doc.is_object() && doc.contains("poset"))
                diagnostics = grassbs::validate_double_complex_json(doc);
            else
                diagnostics = grassbs::validate_table_json(doc);
            OrderedJson arr = OrderedJson::array();
            for (const std::string& d : diagnostics) arr.push_back(d);
            out.write(arr);
            return diagnostics.empty() ? kExitOk : kExitNegative;
        }
    } catch (const grassbs::FormatError& e) {
        OrderedJson err;
        err["error"] = e.what();
        err["kind"] = "format";
        std::cerr << err.dump() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        OrderedJson err;
        err["error"] = e.what();
        err["kind"] = "invalid-input";
        std::cerr << err.dump() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        OrderedJson err;
        err["error"] = e.what();
        err["kind"] = "internal";
        std::cerr << err.dump() << "\n";
        return kExitBadInput;
    }
    return kExitOk;
}
