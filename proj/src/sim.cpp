#include "llps/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "llps/bp.hpp"
#include "llps/channel.hpp"
#include "llps/rates.hpp"

namespace llps {

std::string to_string(Scheme s) {
    return s == Scheme::reference ? "reference" : "llps-dpc";
}

Scheme scheme_from_string(const std::string& s) {
    if (s == "reference") return Scheme::reference;
    if (s == "llps-dpc" || s == "llps_dpc" || s == "dpc") return Scheme::llps_dpc;
    throw std::invalid_argument("unknown scheme: " + s);
}

std::vector<double> parse_snr_grid(const std::string& text) {
    std::vector<double> grid;
    const auto colons = std::count(text.begin(), text.end(), ':');
    if (colons == 2) {
        double from, step, to;
        char c1, c2;
        std::istringstream ss(text);
        if (!(ss >> from >> c1 >> step >> c2 >> to) || c1 != ':' || c2 != ':' || step <= 0)
            throw std::invalid_argument("bad SNR range: " + text);
        for (double v = from; v <= to + 1e-9; v += step) grid.push_back(v);
        return grid;
    }
    std::istringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        grid.push_back(std::stod(tok));
    }
    if (grid.empty()) throw std::invalid_argument("empty SNR grid: " + text);
    return grid;
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_g6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

SimConfig SimConfig::from_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config file: " + path);
    SimConfig cfg;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(f, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected key = value");
        try {
            cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return cfg;
}

void SimConfig::set(const std::string& key, const std::string& value) {
    if (key == "scheme") scheme = scheme_from_string(value);
    else if (key == "z") z = static_cast<unsigned>(std::stoul(value));
    else if (key == "alist") alist_path = value;
    else if (key == "shorten") shorten_bits = std::stoul(value);
    else if (key == "ell") ell = std::stoul(value);
    else if (key == "k_info") k_info = std::stoul(value);
    else if (key == "sir_db") sir_db = std::stod(value);
    else if (key == "snr_db") snr_grid = parse_snr_grid(value);
    else if (key == "q") q = std::stod(value);
    else if (key == "max_iter") max_iter = std::stoi(value);
    else if (key == "min_frame_errors") min_frame_errors = std::stoull(value);
    else if (key == "max_frames") max_frames = std::stoull(value);
    else if (key == "master_seed") master_seed = std::stoull(value);
    else if (key == "hv_seed") hv_seed = std::stoull(value);
    else if (key == "workers") workers = static_cast<unsigned>(std::stoul(value));
    else throw std::invalid_argument("unknown config key: " + key);
}

void SimConfig::validate() const {
    if (snr_grid.empty()) throw std::invalid_argument("config: snr_db grid is empty");
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("config: q must lie in (0, 1)");
    if (max_iter <= 0) throw std::invalid_argument("config: max_iter must be positive");
    if (max_frames == 0) throw std::invalid_argument("config: max_frames must be positive");
    if (min_frame_errors == 0) throw std::invalid_argument("config: min_frame_errors must be positive");
    if (scheme == Scheme::reference && ell != 0)
        throw std::invalid_argument("config: the reference scheme uses ell = 0");
    if (scheme == Scheme::llps_dpc && k_info == 0)
        throw std::invalid_argument("config: llps-dpc requires k_info");
    const LinearCodeLayout layout = build_layout(*this);
    if (scheme == Scheme::reference) {
        if (k_info != 0 && k_info != layout.k - shorten_bits)
            throw std::invalid_argument("config: reference k_info must equal k - shorten");
    } else {
        if (k_info + shorten_bits > layout.k - layout.ell)
            throw std::invalid_argument("config: k_info exceeds k - ell - shorten");
    }
}

std::string SimConfig::canonical() const {
    std::ostringstream ss;
    ss << "alist=" << alist_path << '\n'
       << "ell=" << ell << '\n'
       << "hv_seed=" << hv_seed << '\n'
       << "k_info=" << k_info << '\n'
       << "master_seed=" << master_seed << '\n'
       << "max_frames=" << max_frames << '\n'
       << "max_iter=" << max_iter << '\n'
       << "min_frame_errors=" << min_frame_errors << '\n'
       << "q=" << fmt_double(q) << '\n'
       << "scheme=" << to_string(scheme) << '\n'
       << "shorten=" << shorten_bits << '\n'
       << "sir_db=" << fmt_double(sir_db) << '\n';
    ss << "snr_db=";
    for (std::size_t i = 0; i < snr_grid.size(); ++i)
        ss << (i ? "," : "") << fmt_double(snr_grid[i]);
    ss << '\n' << "z=" << z << '\n';
    return ss.str();
}

std::uint64_t SimConfig::digest() const { return fnv1a(canonical()); }

LinearCodeLayout build_layout(const SimConfig& config) {
    LinearCodeLayout layout = config.alist_path.empty()
                                  ? wimax_layout(config.z, config.ell)
                                  : partition(load_alist_file(config.alist_path), config.ell);
    return shorten(std::move(layout), config.shorten_bits);
}

namespace {

struct PointAccum {
    std::uint64_t frames = 0;
    std::uint64_t frame_errors = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t match_num = 0;
    std::uint64_t match_den = 0;

    void merge(const PointAccum& o) {
        frames += o.frames;
        frame_errors += o.frame_errors;
        bit_errors += o.bit_errors;
        match_num += o.match_num;
        match_den += o.match_den;
    }
};

constexpr std::uint64_t kFrameBatch = 256;

// Runs frames in fixed-size batches until the stopping rule fires. Frame
// indices seed the per-frame generators, so results do not depend on the
// worker count or scheduling order.
template <typename FrameFn>
PointAccum run_point(const SimConfig& cfg, unsigned workers, const FrameFn& frame_fn) {
    PointAccum total;
    std::uint64_t next = 0;
    while (total.frame_errors < cfg.min_frame_errors && total.frames < cfg.max_frames) {
        const std::uint64_t count = std::min<std::uint64_t>(kFrameBatch, cfg.max_frames - total.frames);
        if (workers <= 1) {
            for (std::uint64_t f = next; f < next + count; ++f) frame_fn(f, 0, total);
        } else {
            std::vector<PointAccum> parts(workers);
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (unsigned t = 0; t < workers; ++t)
                pool.emplace_back([&, t] {
                    for (std::uint64_t f = next + t; f < next + count; f += workers)
                        frame_fn(f, t, parts[t]);
                });
            for (auto& th : pool) th.join();
            for (const auto& p : parts) total.merge(p);
        }
        next += count;
    }
    return total;
}

FerRecord make_record(const SimConfig& cfg, double snr, const PointAccum& acc,
                      std::size_t info_bits, double elapsed) {
    FerRecord r;
    r.snr_db = snr;
    r.frames = acc.frames;
    r.frame_errors = acc.frame_errors;
    r.bit_errors = acc.bit_errors;
    r.fer = acc.frames ? static_cast<double>(acc.frame_errors) / static_cast<double>(acc.frames) : 0.0;
    r.ber = acc.frames ? static_cast<double>(acc.bit_errors) /
                             (static_cast<double>(acc.frames) * static_cast<double>(info_bits))
                       : 0.0;
    r.elapsed_seconds = elapsed;
    r.seed = cfg.master_seed;
    r.config_digest = cfg.digest();
    r.mean_match_fraction =
        acc.match_den ? static_cast<double>(acc.match_num) / static_cast<double>(acc.match_den) : 0.0;
    return r;
}

unsigned resolve_workers(const SimConfig& cfg) {
    if (cfg.workers) return cfg.workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

}  // namespace

std::vector<FerRecord> run_reference(const SimConfig& cfg) {
    if (cfg.scheme != Scheme::reference) throw std::invalid_argument("run_reference: wrong scheme");
    cfg.validate();
    const unsigned workers = resolve_workers(cfg);

    const LinearCodeLayout layout = build_layout(cfg);
    const LlpsCodec codec(layout);
    const std::size_t n = layout.n, k = layout.k, s = layout.num_shortened();
    const std::size_t kinfo = k - s;
    const std::size_t n_tx = n - s;

    std::vector<FerRecord> records;
    for (std::size_t pt = 0; pt < cfg.snr_grid.size(); ++pt) {
        const double snr = cfg.snr_grid[pt];
        const auto params = DpcChannelParams::from_db(snr, cfg.sir_db);
        std::vector<BpDecoder> decoders(std::max(1u, workers), BpDecoder(layout));

        const auto t0 = std::chrono::steady_clock::now();
        auto frame = [&](std::uint64_t f, unsigned tid, PointAccum& acc) {
            GaussianRng rng(mix_seed(cfg.master_seed, pt, f));
            const BitVector u = rng.random_bits(kinfo);
            BitVector v(k);
            for (std::size_t i = 0; i < kinfo; ++i) v.set(s + i, u.get(i));
            const Codeword c = codec.pas_encode(v);

            const BitVector b_tx = c.bits.slice(s, n_tx);
            const auto z = rng.random_pm1(n_tx);
            const auto y = transmit(b_tx, z, params, rng);

            std::vector<double> llr(n);
            for (std::size_t i = 0; i < s; ++i) llr[i] = kLlrClamp;
            for (std::size_t i = 0; i < n_tx; ++i) llr[s + i] = llr_int_as_noise(y[i], params);

            const auto res = decoders[tid].decode(llr, cfg.max_iter);
            std::uint64_t diffs = 0;
            for (std::size_t i = 0; i < kinfo; ++i)
                diffs += res.hard.get(s + i) != u.get(i);
            acc.frames += 1;
            acc.bit_errors += diffs;
            acc.frame_errors += diffs != 0;
        };
        const PointAccum acc = run_point(cfg, workers, frame);
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        records.push_back(make_record(cfg, snr, acc, kinfo, elapsed));
    }
    return records;
}

std::vector<FerRecord> run_llps_dpc(const SimConfig& cfg) {
    if (cfg.scheme != Scheme::llps_dpc) throw std::invalid_argument("run_llps_dpc: wrong scheme");
    cfg.validate();
    const unsigned workers = resolve_workers(cfg);

    const LinearCodeLayout layout = build_layout(cfg);
    const DpcEncoder enc(layout, cfg.k_info, cfg.hv_seed);
    const std::size_t n = layout.n, s = layout.num_shortened();
    const std::size_t n_tx = n - s;
    const ConditionalPbz pbz(cfg.q);

    std::vector<FerRecord> records;
    for (std::size_t pt = 0; pt < cfg.snr_grid.size(); ++pt) {
        const double snr = cfg.snr_grid[pt];
        const auto params = DpcChannelParams::from_db(snr, cfg.sir_db);
        std::vector<BpDecoder> decoders(std::max(1u, workers), BpDecoder(layout));

        const auto t0 = std::chrono::steady_clock::now();
        auto frame = [&](std::uint64_t f, unsigned tid, PointAccum& acc) {
            GaussianRng rng(mix_seed(cfg.master_seed, pt, f));
            const BitVector u = rng.random_bits(cfg.k_info);
            const auto z = rng.random_pm1(n);
            const Codeword c = enc.encode(u, z);

            const BitVector b_tx = c.bits.slice(s, n_tx);
            const std::span<const std::int8_t> z_tx(z.data() + s, n_tx);
            acc.match_num += n_tx - b_tx.hamming_distance(label(z_tx));
            acc.match_den += n_tx;

            const auto y = transmit(b_tx, z_tx, params, rng);
            std::vector<double> llr(n);
            for (std::size_t i = 0; i < s; ++i) llr[i] = kLlrClamp;
            for (std::size_t i = 0; i < n_tx; ++i) llr[s + i] = llr_dpc(y[i], params, pbz);

            const auto res = decoders[tid].decode(llr, cfg.max_iter);
            const BitVector u_hat = enc.recover_info(res.hard.slice(0, layout.split()));
            const std::uint64_t diffs = u_hat.hamming_distance(u);
            acc.frames += 1;
            acc.bit_errors += diffs;
            acc.frame_errors += diffs != 0;
        };
        const PointAccum acc = run_point(cfg, workers, frame);
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        records.push_back(make_record(cfg, snr, acc, cfg.k_info, elapsed));
    }
    return records;
}

std::vector<FerRecord> run(const SimConfig& cfg) {
    return cfg.scheme == Scheme::reference ? run_reference(cfg) : run_llps_dpc(cfg);
}

void write_fer_csv(std::ostream& out, const std::vector<FerRecord>& records) {
    out << "snr_db,frames,frame_errors,bit_errors,fer,ber,elapsed_seconds,seed,config_digest\n";
    char digest[24];
    for (const auto& r : records) {
        std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(r.config_digest));
        out << fmt_g6(r.snr_db) << ',' << r.frames << ',' << r.frame_errors << ','
            << r.bit_errors << ',' << fmt_g6(r.fer) << ',' << fmt_g6(r.ber) << ','
            << fmt_g6(r.elapsed_seconds) << ',' << r.seed << ',' << digest << '\n';
    }
}

std::vector<RatesRow> sweep_rates(double sir_db, const std::vector<double>& snr_grid,
                                  double fixed_q) {
    std::vector<RatesRow> rows;
    rows.reserve(snr_grid.size());
    for (double snr : snr_grid) {
        const auto params = DpcChannelParams::from_db(snr, sir_db);
        RatesRow row{};
        row.snr_db = snr;
        row.awgn_capacity = awgn_capacity(snr);
        row.r_int_as_noise = rate_int_as_noise(params);
        const QOpt opt = optimize_q(params);
        row.r_dpc = opt.rate;
        row.q_opt = opt.q_opt;
        row.r_dpc_fixed_q = fixed_q > 0.0 ? rate_dpc(params, fixed_q) : 0.0;
        rows.push_back(row);
    }
    return rows;
}

void write_rates_csv(std::ostream& out, const std::vector<RatesRow>& rows, bool with_fixed_q) {
    out << "snr_db,awgn_capacity,r_int_as_noise,r_dpc,q_opt";
    if (with_fixed_q) out << ",r_dpc_fixed_q";
    out << '\n';
    for (const auto& r : rows) {
        out << fmt_g6(r.snr_db) << ',' << fmt_g6(r.awgn_capacity) << ','
            << fmt_g6(r.r_int_as_noise) << ',' << fmt_g6(r.r_dpc) << ',' << fmt_g6(r.q_opt);
        if (with_fixed_q) out << ',' << fmt_g6(r.r_dpc_fixed_q);
        out << '\n';
    }
}

}  // namespace llps
