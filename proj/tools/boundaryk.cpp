// boundaryk: K-theory of boundary crossed products of lattices from the
// cohomology of the locally symmetric space.

#include "boundaryk/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace boundaryk::cli;

    CLI::App app{"K-theory of boundary C*-algebras of lattices in symmetric spaces"};
    app.require_subcommand(1);

    ComputeOptions compute_options;
    std::string compute_path;
    auto* compute = app.add_subcommand("compute", "Run the pipeline on a space file");
    compute->add_option("file", compute_path, "Space file")->required();
    compute->add_flag("--json", compute_options.json, "Structured output");
    compute->add_flag("--explain", compute_options.explain, "Append the case analysis and degree bookkeeping");
    bool no_ahss = false;
    compute->add_flag("--no-ahss-check", no_ahss, "Skip the torsion-bound and extension-oracle checks");
    std::string compute_source = "lemma";
    compute->add_option("--cohomology", compute_source,
                        "Bundle cohomology from the closed-form lemma (default) or the exact-sequence solver")
        ->check(CLI::IsMember({"lemma", "les"}));

    std::string compare_a, compare_b;
    auto* compare = app.add_subcommand("compare", "Decide isomorphism of two boundary algebras");
    compare->add_option("fileA", compare_a, "First space file")->required();
    compare->add_option("fileB", compare_b, "Second space file")->required();

    ComputeOptions corpus_options;
    std::string corpus_name;
    bool corpus_no_ahss = false;
    auto* corpus_cmd = app.add_subcommand("corpus", "List built-in spaces, or run one by name");
    corpus_cmd->add_option("name", corpus_name, "Built-in space");
    corpus_cmd->add_flag("--json", corpus_options.json, "Structured output");
    corpus_cmd->add_flag("--explain", corpus_options.explain, "Append the case analysis and degree bookkeeping");
    corpus_cmd->add_flag("--no-ahss-check", corpus_no_ahss, "Skip the torsion-bound and extension-oracle checks");
    std::string corpus_source = "lemma";
    corpus_cmd->add_option("--cohomology", corpus_source,
                           "Bundle cohomology from the closed-form lemma (default) or the exact-sequence solver")
        ->check(CLI::IsMember({"lemma", "les"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Help goes to stdout with exit 0; usage errors map to the input-error code.
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    auto source_of = [](const std::string& name) {
        return name == "les" ? boundaryk::CohomologySource::ExactSequence : boundaryk::CohomologySource::Lemma;
    };
    if (*compute) {
        compute_options.ahss_check = !no_ahss;
        compute_options.cohomology = source_of(compute_source);
        return cmd_compute(compute_path, compute_options, std::cout, std::cerr);
    }
    if (*compare) return cmd_compare(compare_a, compare_b, std::cout, std::cerr);
    corpus_options.ahss_check = !corpus_no_ahss;
    corpus_options.cohomology = source_of(corpus_source);
    return cmd_corpus(corpus_name.empty() ? std::nullopt : std::optional<std::string>(corpus_name), corpus_options,
                      std::cout, std::cerr);
}
