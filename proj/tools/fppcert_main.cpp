// fppcert: certifies the computational claims about fake projective planes
// and the quasiphantom categories on them.

#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "fppcert/certify.hpp"
#include "fppcert/error.hpp"

namespace {

constexpr int kExitConfig = 2;

void print_table(const fppcert::CertReport& report, std::ostream& os)
{
    std::size_t width = 8;
    for (const auto& c : report.claims())
        width = std::max(width, c.id.size());
    for (const auto& c : report.claims())
        os << std::left << std::setw(static_cast<int>(width) + 2) << c.id << std::setw(16)
           << fppcert::to_string(c.status) << c.description << "\n";
    os << report.claims().size() << " claims: " << report.count(fppcert::Status::Verified) << " verified, "
       << report.count(fppcert::Status::Refuted) << " refuted, " << report.count(fppcert::Status::PaperAsserted)
       << " asserted\n";
}

bool write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "fppcert: cannot write " << path << "\n";
        return false;
    }
    out << content;
    return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Certifier for fake projective plane computations"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string plane = "mumford";
    unsigned precision = fppcert::padic::kDefaultPrecision;
    std::string report_path, witness_path, matrices_path;
    int jobs = 0;
    int modulus = 3;
    bool branchwise = false;
    bool quiet = false;

    app.add_option("--plane", plane, "mumford, cmsz-a or cmsz-b")
        ->check(CLI::IsMember({"mumford", "cmsz-a", "cmsz-b"}));
    app.add_option("--precision", precision, "2-adic precision in bits (>= 8)");
    app.add_option("--report", report_path, "write the JSON report here");
    app.add_option("--witness-log", witness_path, "write passing lemma3 candidates as JSON lines");
    app.add_option("--jobs", jobs, "OpenMP workers for the divisor search (0 = default)")->check(CLI::NonNegativeNumber);
    app.add_option("--modulus", modulus, "divisibility modulus in the gluing condition")->check(CLI::PositiveNumber);
    app.add_flag("--branchwise", branchwise, "require divisibility on each branch separately");
    app.add_option("--export-matrices", matrices_path, "write the generator matrices as JSON");
    app.add_flag("-q,--quiet", quiet, "suppress the summary table");

    for (const char* name : {"padic", "lattices", "lemma3", "cohomology", "hochschild", "fano", "all"})
        app.add_subcommand(name);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    const std::string subcommand = app.get_subcommands().front()->get_name();

    fppcert::RunOptions options;
    try {
        options.plane = fppcert::lattice::parse_plane(plane);
    } catch (const fppcert::Error& e) {
        std::cerr << "fppcert: " << e.what() << "\n";
        return kExitConfig;
    }
    options.precision = precision;
    options.search.jobs = jobs;
    options.search.modulus = modulus;
    options.search.branchwise = branchwise;
    options.search.collect_witnesses = !witness_path.empty();

    if (precision < fppcert::kMinPrecision) {
        std::cerr << "fppcert: --precision must be at least " << fppcert::kMinPrecision << "\n";
        return kExitConfig;
    }

    fppcert::CertReport report;
    fppcert::divisor::SearchReport search;
    try {
        report = fppcert::run_subcommand(subcommand, options, &search);
    } catch (const fppcert::Error& e) {
        std::cerr << "fppcert: " << e.what() << "\n";
        return kExitConfig;
    }

    if (!quiet)
        print_table(report, std::cout);

    if (!report_path.empty() &&
        !write_file(report_path, fppcert::report_json(report, subcommand, options).dump(2) + "\n"))
        return kExitConfig;
    if (!witness_path.empty() && !write_file(witness_path, fppcert::witness_log_jsonl(search)))
        return kExitConfig;
    if (!matrices_path.empty() &&
        !write_file(matrices_path, fppcert::lattice::generator_matrices_json().dump(2) + "\n"))
        return kExitConfig;

    return fppcert::exit_code_for(report);
}
