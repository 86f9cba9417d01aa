// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "bmc/binomial.hpp"
#include "bmc/container.hpp"
#include "bmc/error.hpp"
#include "bmc/metrics.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsageError = 2;

enum class Command { encode, decode, analyze, table, enumerate };

struct CliConfig {
    Command command = Command::encode;
    unsigned n = 8;
    unsigned k = 1;
    unsigned flags_form = 1;
    unsigned iterations = 1;
    bool split = false;
    bool alt = false;
    std::string input;
    std::string output;
};

bmc::BitVec read_input_bits(const std::string& path) {
    std::vector<std::uint8_t> bytes;
    if (path == "-") {
        bytes.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            throw bmc::IoError("cannot open for reading: " + path);
        }
        bytes.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return bmc::BitVec::from_bytes(bytes, bytes.size() * 8);
}

void write_output_bytes(const std::string& path, const bmc::BitVec& bits) {
    if (bits.size() % 8 != 0) {
        throw bmc::Error("decoded stream is not a whole number of bytes");
    }
    const auto& bytes = bits.bytes();
    if (path == "-") {
        std::cout.write(reinterpret_cast<const char*>(bytes.data()),
                        static_cast<std::streamsize>(bytes.size()));
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw bmc::IoError("cannot open for writing: " + path);
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw bmc::IoError("write failed: " + path);
    }
}

bmc::TransformParams transform_params(const CliConfig& cfg) {
    bmc::TransformParams params;
    params.block_size = cfg.n;
    params.form = cfg.flags_form == 2 ? bmc::FlagForm::two_flag : bmc::FlagForm::one_flag;
    params.iterations = cfg.iterations;
    return params;
}

int run_encode(const CliConfig& cfg) {
    const bmc::BitVec bits = read_input_bits(cfg.input);
    const bmc::ChannelSet channels = bmc::encode_stream(bits, transform_params(cfg));

    std::string out = cfg.output;
    if (out.empty()) {
        if (cfg.input == "-") {
            throw bmc::ParamError("-o is required when reading from stdin");
        }
        out = cfg.split ? cfg.input : cfg.input + ".bmc";
    }
    if (cfg.split) {
        for (const auto& path : bmc::split_channels(channels, out)) {
            std::cerr << path.string() << "\n";
        }
    } else if (out == "-") {
        bmc::write_container(channels, std::cout);
        std::cout.flush();
    } else {
        bmc::write_container(channels, out);
    }
    return kExitOk;
}

int run_decode(const CliConfig& cfg) {
    bmc::ChannelSet channels;
    if (cfg.split) {
        channels = bmc::merge_channels(cfg.input);
    } else if (cfg.input == "-") {
        channels = bmc::read_container(std::cin);
    } else {
        channels = bmc::read_container(std::filesystem::path(cfg.input));
    }

    std::string out = cfg.output;
    if (out.empty()) {
        if (cfg.input == "-") {
            throw bmc::ParamError("-o is required when reading from stdin");
        }
        out = cfg.input.ends_with(".bmc") ? cfg.input.substr(0, cfg.input.size() - 4)
                                          : cfg.input + ".out";
    }
    write_output_bytes(out, bmc::decode_stream(channels));
    return kExitOk;
}

void print_coeff_table(unsigned max_n, bool alt) {
    std::cout << "N\tk_bin\tk_mv2";
    if (alt) {
        std::cout << "\tk_bin_alt";
    }
    std::cout << "\n";
    for (unsigned n = 2; n <= max_n; ++n) {
        std::cout << n << "\t" << bmc::coeff_binomial(n).to_repeating_decimal() << "\t"
                  << bmc::coeff_mv2(n).to_repeating_decimal();
        if (alt) {
            std::cout << "\t" << bmc::coeff_binomial_alt(n).to_repeating_decimal();
        }
        std::cout << "\n";
    }
}

int run_analyze(const CliConfig& cfg) {
    print_coeff_table(cfg.n, cfg.alt);
    if (cfg.input.empty()) {
        return kExitOk;
    }

    const bmc::BitVec bits = read_input_bits(cfg.input);
    const bmc::ChannelSet channels = bmc::encode_stream(bits, transform_params(cfg));
    const bmc::ChannelStats stats = bmc::channel_stats(channels);

    std::cout << "\n";
    std::cout << "input\t" << cfg.input << "\n";
    std::cout << "block_size\t" << cfg.n << "\n";
    std::cout << "form\t" << (cfg.flags_form == 2 ? "two-flag" : "one-flag") << "\n";
    std::cout << "iterations\t" << cfg.iterations << "\n";
    std::cout << "original_bits\t" << stats.original_bits << "\n";
    std::cout << "core_bits\t" << stats.core_bits << "\n";
    std::cout << "flag_bits\t" << stats.flag_bits << "\n";
    std::cout << "core_ratio\t" << stats.core_ratio.to_fraction_string() << "\t"
              << stats.core_ratio.to_decimal_string(12) << "\n";
    std::cout << "flag_ratio\t" << stats.flag_ratio.to_fraction_string() << "\t"
              << stats.flag_ratio.to_decimal_string(12) << "\n";
    std::cout << "total_ratio\t" << stats.total_ratio.to_fraction_string() << "\t"
              << stats.total_ratio.to_decimal_string(12) << "\n";
    return kExitOk;
}

int run_table(const CliConfig& cfg) {
    print_coeff_table(cfg.n, cfg.alt);
    return kExitOk;
}

int run_enumerate(const CliConfig& cfg) {
    const bmc::AlphabetTable table = bmc::enumerate_alphabet(bmc::BinomialParams{cfg.n, cfg.k});

    // One line per code in ascending value order: `n k class bits value`.
    std::vector<const bmc::BinomialCode*> codes;
    for (const auto& c : table.x_class) {
        codes.push_back(&c);
    }
    for (const auto& c : table.y_class) {
        codes.push_back(&c);
    }
    std::vector<std::pair<std::uint64_t, const bmc::BinomialCode*>> ordered;
    for (const auto* c : codes) {
        ordered.emplace_back(bmc::code_value(*c), c);
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [value, code] : ordered) {
        std::cout << cfg.n << " " << cfg.k << " "
                  << (code->cls == bmc::CodeClass::X ? "X" : "Y") << " "
                  << code->bits.to_string() << " " << value << "\n";
    }
    return kExitOk;
}

int run(const CliConfig& cfg) {
    switch (cfg.command) {
        case Command::encode:
            return run_encode(cfg);
        case Command::decode:
            return run_decode(cfg);
        case Command::analyze:
            return run_analyze(cfg);
        case Command::table:
            return run_table(cfg);
        case Command::enumerate:
            return run_enumerate(cfg);
    }
    return kExitUsageError;
}

}  // namespace

int main(int argc, char** argv) {
    CliConfig cfg;
    CLI::App app{"bmc - binomial multichannel codec"};
    app.require_subcommand(1);

    auto* encode = app.add_subcommand("encode", "Recode a file into a channel container");
    encode->add_option("input", cfg.input, "input file, or - for stdin")->required();
    encode->add_option("-n,--n", cfg.n, "block size in bits")->check(CLI::Range(2u, 64u));
    encode->add_option("-f,--flags", cfg.flags_form, "flag form: 1 or 2")
        ->check(CLI::IsMember({1u, 2u}));
    encode->add_option("-i,--iterations", cfg.iterations, "transform rounds")
        ->check(CLI::Range(1u, 127u));
    encode->add_flag("-s,--split", cfg.split, "write one file per channel");
    encode->add_option("-o,--output", cfg.output, "output container (or basename with --split)");

    auto* decode = app.add_subcommand("decode", "Restore the original file from a container");
    decode->add_option("input", cfg.input, "container file (or basename with --split)")->required();
    decode->add_flag("-s,--split", cfg.split, "read per-channel files");
    decode->add_option("-o,--output", cfg.output, "output file, or - for stdout");

    auto* analyze = app.add_subcommand("analyze", "Coefficient table plus a per-file report");
    analyze->add_option("input", cfg.input, "optional file to measure");
    analyze->add_option("-n,--n", cfg.n, "largest block size in the table")
        ->check(CLI::Range(2u, 64u));
    analyze->add_option("-f,--flags", cfg.flags_form, "flag form: 1 or 2")
        ->check(CLI::IsMember({1u, 2u}));
    analyze->add_option("-i,--iterations", cfg.iterations, "transform rounds")
        ->check(CLI::Range(1u, 127u));
    analyze->add_flag("--alt", cfg.alt, "include the alternative closed form");

    auto* table = app.add_subcommand("table", "Print the compression coefficient table");
    table->add_option("-n,--n", cfg.n, "largest block size")->check(CLI::Range(2u, 64u));
    table->add_flag("--alt", cfg.alt, "include the alternative closed form");

    auto* enumerate = app.add_subcommand("enum", "List the codes of one alphabet");
    enumerate->add_option("-n,--n", cfg.n, "alphabet length parameter")->required();
    enumerate->add_option("-k,--k", cfg.k, "alphabet weight parameter")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsageError;
    }

    if (encode->parsed()) {
        cfg.command = Command::encode;
    } else if (decode->parsed()) {
        cfg.command = Command::decode;
    } else if (analyze->parsed()) {
        cfg.command = Command::analyze;
    } else if (table->parsed()) {
        cfg.command = Command::table;
    } else if (enumerate->parsed()) {
        cfg.command = Command::enumerate;
    }

    try {
        return run(cfg);
    } catch (const bmc::ParamError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsageError;
    } catch (const bmc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    }
}
