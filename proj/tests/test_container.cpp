// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "bmc/container.hpp"
#include "bmc/error.hpp"
#include "bmc/metrics.hpp"
#include "oracle.hpp"

using namespace bmc;
namespace fs = std::filesystem;

namespace {

TransformParams params_of(unsigned n, FlagForm form, unsigned iterations) {
    TransformParams p;
    p.block_size = n;
    p.form = form;
    p.iterations = iterations;
    return p;
}

std::string container_string(const ChannelSet& cs) {
    std::ostringstream out;
    write_container(cs, out);
    return out.str();
}

ChannelSet read_from_string(const std::string& bytes) {
    std::istringstream in(bytes);
    return read_container(in);
}

// Scratch directory, removed on destruction.
struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("bmc_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("byte counts of known containers") {
    const ChannelSet empty = encode_stream(BitVec{}, params_of(4, FlagForm::one_flag, 1));
    CHECK(container_string(empty).size() == 33);  // 17 header + 2 empty records

    const ChannelSet basic = encode_stream(basic_file(4), params_of(4, FlagForm::one_flag, 1));
    CHECK(container_string(basic).size() == 42);  // 33 + 5 core bytes + 4 flag bytes
}

TEST_CASE("serialized bytes are pinned") {
    // One byte 0x50 at N=4: blocks "0101" (flag 2, code "010") and "0000"
    // (flag 0, code "0") give core "0100" and flags "1000".
    const std::uint8_t input[] = {0x50};
    const ChannelSet cs =
        encode_stream(BitVec::from_bytes(input, 8), params_of(4, FlagForm::one_flag, 1));
    const std::string bytes = container_string(cs);

    static const std::uint8_t expected[] = {
        'B', 'M', 'C', '1', 0x01, 0x04, 0x01, 0x01,              // magic..iterations
        0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x08,          // original bits
        0x02,                                                    // channel count
        0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x04, 0x40,    // core: 4 bits "0100"
        0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x04, 0x80,    // flag1: 4 bits "1000"
    };
    REQUIRE(bytes.size() == sizeof(expected));
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        CHECK(static_cast<std::uint8_t>(bytes[i]) == expected[i]);
    }
}

TEST_CASE("write then read is the identity") {
    std::mt19937_64 rng(23);
    for (unsigned n : {2u, 5u, 16u}) {
        for (FlagForm form : {FlagForm::one_flag, FlagForm::two_flag}) {
            for (unsigned iters : {1u, 3u}) {
                const ChannelSet cs =
                    encode_stream(oracle::random_bits(rng, 513), params_of(n, form, iters));
                const ChannelSet back = read_from_string(container_string(cs));
                CHECK(back == cs);
                CHECK(decode_stream(back) == decode_stream(cs));
            }
        }
    }
}

TEST_CASE("each malformed input raises its own error") {
    const ChannelSet cs = encode_stream(BitVec::from_string("0101100"),
                                        params_of(4, FlagForm::one_flag, 1));
    const std::string good = container_string(cs);
    CHECK(read_from_string(good) == cs);

    SUBCASE("bad magic") {
        std::string bytes = good;
        bytes[3] = '2';
        CHECK_THROWS_AS(read_from_string(bytes), BadMagicError);
    }
    SUBCASE("bad version") {
        std::string bytes = good;
        bytes[4] = 0x02;
        CHECK_THROWS_AS(read_from_string(bytes), BadVersionError);
    }
    SUBCASE("truncated header") {
        CHECK_THROWS_AS(read_from_string(good.substr(0, 10)), TruncatedError);
    }
    SUBCASE("truncated record") {
        CHECK_THROWS_AS(read_from_string(good.substr(0, good.size() - 1)), TruncatedError);
    }
    SUBCASE("nonzero padding") {
        // the 4-bit core leaves four zero padding bits in its payload byte;
        // flip the lowest one
        std::string bytes = good;
        const std::size_t core_payload_last = 17 + 8 + (cs.core.size() + 7) / 8 - 1;
        bytes[core_payload_last] = static_cast<char>(bytes[core_payload_last] | 0x01);
        CHECK_THROWS_AS(read_from_string(bytes), PaddingError);
    }
    SUBCASE("trailing bytes") {
        CHECK_THROWS_AS(read_from_string(good + "x"), ContainerError);
    }
    SUBCASE("channel count mismatch") {
        std::string bytes = good;
        bytes[16] = 0x03;
        CHECK_THROWS_AS(read_from_string(bytes), ContainerError);
    }
    SUBCASE("unknown form byte") {
        std::string bytes = good;
        bytes[6] = 0x03;
        CHECK_THROWS_AS(read_from_string(bytes), ContainerError);
    }
}

TEST_CASE("split writes one standalone container per channel") {
    TempDir dir;
    std::mt19937_64 rng(29);
    const BitVec input = oracle::random_bits(rng, 300);

    SUBCASE("one flag, one round: two files") {
        const ChannelSet cs = encode_stream(input, params_of(4, FlagForm::one_flag, 1));
        const auto paths = split_channels(cs, dir.path / "a");
        REQUIRE(paths.size() == 2);
        CHECK(paths[0].filename() == "a.core");
        CHECK(paths[1].filename() == "a.flag1");
        CHECK(merge_channels(dir.path / "a") == cs);
    }
    SUBCASE("two flags, one round: three files") {
        const ChannelSet cs = encode_stream(input, params_of(4, FlagForm::two_flag, 1));
        const auto paths = split_channels(cs, dir.path / "b");
        REQUIRE(paths.size() == 3);
        CHECK(paths[2].filename() == "b.flag2");
        CHECK(merge_channels(dir.path / "b") == cs);
    }
    SUBCASE("two flags, two rounds: five files") {
        const ChannelSet cs = encode_stream(input, params_of(4, FlagForm::two_flag, 2));
        const auto paths = split_channels(cs, dir.path / "c");
        REQUIRE(paths.size() == 5);
        CHECK(paths[1].filename() == "c.flag1.round1");
        CHECK(paths[4].filename() == "c.flag2.round2");
        const ChannelSet merged = merge_channels(dir.path / "c");
        CHECK(merged == cs);
        CHECK(decode_stream(merged) == input);
    }
}

TEST_CASE("a missing split file makes reassembly fail") {
    TempDir dir;
    std::mt19937_64 rng(31);
    const ChannelSet cs =
        encode_stream(oracle::random_bits(rng, 128), params_of(4, FlagForm::two_flag, 1));
    const auto paths = split_channels(cs, dir.path / "d");
    REQUIRE(paths.size() == 3);
    for (const auto& victim : paths) {
        split_channels(cs, dir.path / "d");  // restore
        fs::remove(victim);
        CHECK_THROWS_AS(merge_channels(dir.path / "d"), IoError);
    }
}

TEST_CASE("split files are rejected by the combined reader") {
    TempDir dir;
    const ChannelSet cs =
        encode_stream(BitVec::from_string("11110000"), params_of(4, FlagForm::one_flag, 1));
    const auto paths = split_channels(cs, dir.path / "e");
    CHECK_THROWS_AS(read_container(paths[0]), ContainerError);
}

TEST_CASE("inconsistent headers across split files are rejected") {
    TempDir dir;
    const BitVec input = BitVec::from_string("111100001111");
    split_channels(encode_stream(input, params_of(4, FlagForm::one_flag, 1)), dir.path / "f");
    split_channels(encode_stream(input, params_of(6, FlagForm::one_flag, 1)), dir.path / "g");
    fs::copy_file(dir.path / "g.flag1", dir.path / "f.flag1",
                  fs::copy_options::overwrite_existing);
    CHECK_THROWS_AS(merge_channels(dir.path / "f"), ContainerError);
}

TEST_CASE("file round trip") {
    TempDir dir;
    const ChannelSet cs =
        encode_stream(basic_file(5), params_of(5, FlagForm::two_flag, 2));
    const fs::path file = dir.path / "h.bmc";
    const std::uint64_t written = write_container(cs, file);
    CHECK(written == fs::file_size(file));
    CHECK(read_container(file) == cs);
}
