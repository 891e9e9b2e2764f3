#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "llps/codec.hpp"
#include "llps/ldpc.hpp"

namespace llps {

enum class Scheme { reference, llps_dpc };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& s);

// "a:step:b" or comma-separated values
std::vector<double> parse_snr_grid(const std::string& text);

struct SimConfig {
    Scheme scheme = Scheme::reference;
    unsigned z = 48;                 // builtin WiMAX lifting factor
    std::string alist_path;          // when set, overrides the builtin code
    std::size_t shorten_bits = 0;
    std::size_t ell = 0;
    std::size_t k_info = 0;          // 0 for the reference scheme: derived as k - shorten
    double sir_db = -5.0;
    std::vector<double> snr_grid;
    double q = 0.5;                  // demapper conditional P_{B|Z}(0|-1)
    int max_iter = 100;
    std::uint64_t min_frame_errors = 100;
    std::uint64_t max_frames = 30000;
    std::uint64_t master_seed = 1;
    std::uint64_t hv_seed = 0x11f5;  // fixed: the H_v ensemble must not move with master_seed
    unsigned workers = 0;            // 0 = hardware concurrency

    static SimConfig from_file(const std::string& path);
    void set(const std::string& key, const std::string& value);
    void validate() const;

    // canonical key=value listing; excludes workers so the digest is
    // invariant under the worker count
    std::string canonical() const;
    std::uint64_t digest() const;
};

struct FerRecord {
    double snr_db = 0.0;
    std::uint64_t frames = 0;
    std::uint64_t frame_errors = 0;
    std::uint64_t bit_errors = 0;
    double fer = 0.0;
    double ber = 0.0;
    double elapsed_seconds = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t config_digest = 0;
    // telemetry, not part of the CSV schema
    double mean_match_fraction = 0.0;
};

std::vector<FerRecord> run_reference(const SimConfig& config);
std::vector<FerRecord> run_llps_dpc(const SimConfig& config);
std::vector<FerRecord> run(const SimConfig& config);

// builds the layout the config describes (also used for validation and
// the code-info command)
LinearCodeLayout build_layout(const SimConfig& config);

void write_fer_csv(std::ostream& out, const std::vector<FerRecord>& records);

struct RatesRow {
    double snr_db;
    double awgn_capacity;
    double r_int_as_noise;
    double r_dpc;
    double q_opt;
    double r_dpc_fixed_q;  // populated only when a fixed q is requested
};
std::vector<RatesRow> sweep_rates(double sir_db, const std::vector<double>& snr_grid,
                                  double fixed_q = 0.0);
void write_rates_csv(std::ostream& out, const std::vector<RatesRow>& rows, bool with_fixed_q);

}  // namespace llps
