// SPDX-License-Identifier: Apache-2.0

#include "bmc/block_codec.hpp"

#include "bmc/error.hpp"

namespace bmc {

namespace {

void check_block_size(std::size_t n) {
    if (n < 2) {
        throw ParamError("block size must be at least 2");
    }
}

BitVec pad_to_word(const BitVec& code, CodeClass cls, unsigned block_size) {
    BitVec word = code;
    word.append(BitVec::repeated(cls == CodeClass::Y, block_size - code.size()));
    return word;
}

}  // namespace

BlockRecord encode_word(const BitVec& word) {
    const std::size_t n = word.size();
    check_block_size(n);

    const bool last = word.back();
    std::size_t run = 1;
    while (run < n && word[n - 1 - run] == last) {
        ++run;
    }
    if (run == n) {
        BitVec bit;
        bit.push_back(last);
        return BlockRecord{0, bit, std::nullopt};
    }
    BlockRecord rec;
    rec.flag = static_cast<unsigned>(word.popcount());
    rec.code = word.slice(0, n - run);
    return rec;
}

BitVec decode_word(const BlockRecord& record, unsigned block_size) {
    check_block_size(block_size);
    if (record.flag == 0) {
        if (record.code.size() != 1) {
            throw MalformedRecordError("uniform record must hold exactly one bit");
        }
        return BitVec::repeated(record.code[0], block_size);
    }
    if (record.flag >= block_size) {
        throw MalformedRecordError("flag value out of range for block size");
    }
    const BinomialParams params{block_size, record.flag};
    if (!is_valid_code(record.code, params)) {
        throw MalformedRecordError("code is not valid for (block size, flag)");
    }
    return pad_to_word(record.code, classify_code(record.code, params), block_size);
}

BlockRecord encode_word_two_flag(const BitVec& word) {
    BlockRecord rec = encode_word(word);
    if (rec.flag == 0) {
        rec.pflag = false;
        return rec;
    }
    const unsigned n = static_cast<unsigned>(word.size());
    const BinomialCode code = make_code(rec.code, BinomialParams{n, rec.flag});
    if (code.cls == CodeClass::X) {
        rec.pflag = false;
        return rec;
    }
    const BinomialCode dual = complement(code);  // X code of weight n - k
    rec.flag = dual.params.k;
    rec.code = dual.bits;
    rec.pflag = true;
    return rec;
}

BitVec decode_word_two_flag(const BlockRecord& record, unsigned block_size) {
    check_block_size(block_size);
    if (!record.pflag.has_value()) {
        throw MalformedRecordError("two-flag record is missing pflag");
    }
    if (record.flag == 0) {
        if (*record.pflag) {
            throw MalformedRecordError("uniform record must carry pflag 0");
        }
        return decode_word(record, block_size);
    }
    if (record.flag >= block_size) {
        throw MalformedRecordError("flag value out of range for block size");
    }
    const BinomialParams params{block_size, record.flag};
    if (!is_valid_code(record.code, params) ||
        classify_code(record.code, params) != CodeClass::X) {
        throw MalformedRecordError("two-flag record must store a class X code");
    }
    if (!*record.pflag) {
        return pad_to_word(record.code, CodeClass::X, block_size);
    }
    const BinomialCode original = complement(make_code(record.code, params));
    return pad_to_word(original.bits, CodeClass::Y, block_size);
}

}  // namespace bmc
