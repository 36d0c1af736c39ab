#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "committee_lab/generate.hpp"
#include "committee_lab/rules/registry.hpp"

namespace committee_lab {

// Which population design a replication draws its election from.
struct GeneratorSpec {
    enum class Kind { uniform, polarized_uniform, polarized_citizen, custom };

    Kind kind = Kind::uniform;

    // uniform: candidates and voters from the same rectangle.
    int num_candidates = 0;
    int num_voters = 0;
    PopulationSpec rect = PopulationSpec::uniform_rect({0.0, 0.0}, 6.0, 6.0);

    // custom: independent population specs plus optional party centers.
    PopulationSpec candidate_spec;
    PopulationSpec voter_spec;
    std::vector<Point2D> party_centers;

    int candidate_count() const;  // m implied by the spec
    void validate() const;
};

Election generate_election(const GeneratorSpec&, Rng&);

struct ExperimentConfig {
    std::string name;
    GeneratorSpec generator;
    int replications = 1;
    std::vector<int> k_sweep;
    std::vector<RuleSpec> rules;
    std::uint64_t seed = 42;
    std::string output_dir = "out";

    void validate() const;
};

// JSON mirrors the struct field for field; see README for the schema.
std::string config_to_json(const ExperimentConfig&);
ExperimentConfig config_from_json(const std::string& text);

struct ResultRow {
    int replication = 0;
    std::string rule;
    std::string solver;
    int k = 0;
    std::string metric;        // empty on error rows
    double value = 0.0;
    std::string status = "ok";  // "ok" or "error:<code>"

    bool ok() const { return status == "ok"; }
};

struct CommitteeRow {
    int replication = 0;
    std::string rule;
    int k = 0;
    int member_index = 0;
    double x = 0.0;
    double y = 0.0;
    int party = -1;  // -1 when the election has no party structure
};

struct ExperimentResult {
    std::string experiment;
    std::vector<ResultRow> rows;            // ordered (replication, rule, k, metric)
    std::vector<CommitteeRow> committees;   // ordered (replication, rule, k, member)
};

// Runs every (replication, rule, k) cell. Replications execute in parallel
// (capped by jobs when > 0) on independent RNG substreams, so the output is
// byte-identical for a fixed (config, seed) regardless of thread count.
// Documented rule failures become error rows, not aborts.
ExperimentResult run_experiment(const ExperimentConfig&, int jobs = 0);

struct AggregateRow {
    std::string rule;
    int k = 0;
    std::string metric;  // empty when every replication of the cell errored
    double mean = 0.0;
    double sd = 0.0;     // sample sd, n-1 denominator; 0 when count == 1
    int count = 0;
    int errors = 0;
};

std::vector<AggregateRow> aggregate(const ExperimentResult&);

// The three paper-scale designs plus their desk-scale variants.
std::vector<ExperimentConfig> builtin_configs();
const ExperimentConfig* find_builtin(std::string_view name);  // nullptr if unknown

// CSV output. Floating-point fields use 17 significant digits so values
// round-trip bit-exactly.
std::string format_double(double);
void write_results_csv(std::ostream&, const ExperimentResult&);
void write_committees_csv(std::ostream&, const ExperimentResult&);
void write_aggregate_csv(std::ostream&, const std::string& experiment,
                         const std::vector<AggregateRow>&);

}  // namespace committee_lab
