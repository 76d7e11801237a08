#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "fppcert/divisor_search.hpp"
#include "fppcert/lattice.hpp"
#include "fppcert/report.hpp"

namespace fppcert {

constexpr int kSchemaVersion = 1;
constexpr const char* kToolVersion = "1.0.0";
/// Smallest precision at which the exact 2-adic identities are meaningful.
constexpr unsigned kMinPrecision = 8;

struct RunOptions {
    lattice::PlaneId plane = lattice::PlaneId::Mumford;
    unsigned precision = padic::kDefaultPrecision;
    divisor::SearchOptions search;
};

CertReport certify_padic(unsigned precision);
CertReport certify_lattices(lattice::PlaneId plane, unsigned precision);
/// The search report is returned through `search_out` when non-null.
CertReport certify_lemma3(const divisor::SearchOptions& options, divisor::SearchReport* search_out = nullptr);
CertReport certify_cohomology(lattice::PlaneId plane);
CertReport certify_hochschild(lattice::PlaneId plane);
CertReport certify_fano();

/// Runs one subcommand ("padic", "lattices", "lemma3", "cohomology",
/// "hochschild", "fano" or "all"). Throws InvalidArgument for anything else.
CertReport run_subcommand(const std::string& subcommand, const RunOptions& options,
                          divisor::SearchReport* search_out = nullptr);

/// Versioned JSON report. Everything run-dependent (timestamp, timings, job
/// count) lives under "header"; the rest is byte-deterministic.
nlohmann::ordered_json report_json(const CertReport& report, const std::string& subcommand,
                                   const RunOptions& options);

/// Cohomology table rows for degrees [lo, hi] over the plane's torsion group.
nlohmann::ordered_json cohomology_table_json(lattice::PlaneId plane, int lo, int hi);

/// One JSON object per invariant-passing candidate.
std::string witness_log_jsonl(const divisor::SearchReport& report);

int exit_code_for(const CertReport& report);

}  // namespace fppcert
