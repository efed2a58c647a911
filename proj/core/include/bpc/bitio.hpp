#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <vector>

#include "bpc/errors.hpp"

namespace bpc {

// MSB-first bit writer.
class BitWriter {
public:
    void write_bit(int b) {
        if (bit_pos_ == 0) bytes_.push_back(0);
        if (b) bytes_.back() |= std::uint8_t(0x80u >> bit_pos_);
        bit_pos_ = (bit_pos_ + 1) & 7;
        ++bits_;
    }

    void write(std::uint64_t value, int width) {
        for (int i = width - 1; i >= 0; --i) write_bit((value >> i) & 1);
    }

    void write_mpz(const mpz_class& value, std::size_t width) {
        for (std::size_t i = width; i-- > 0;) {
            write_bit(mpz_tstbit(value.get_mpz_t(), i));
        }
    }

    void align_byte() {
        while (bit_pos_ != 0) write_bit(0);
    }

    std::size_t bit_count() const { return bits_; }
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }
    std::vector<std::uint8_t> take() { return std::move(bytes_); }

private:
    std::vector<std::uint8_t> bytes_;
    int bit_pos_ = 0;
    std::size_t bits_ = 0;
};

// MSB-first bit reader over a byte span; throws MalformedStream on overrun.
class BitReader {
public:
    BitReader(const std::uint8_t* data, std::size_t size_bytes)
        : data_(data), size_bits_(size_bytes * 8) {}

    int read_bit() {
        if (pos_ >= size_bits_) throw MalformedStream("truncated stream");
        int b = (data_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1;
        ++pos_;
        return b;
    }

    std::uint64_t read(int width) {
        std::uint64_t v = 0;
        for (int i = 0; i < width; ++i) v = (v << 1) | std::uint64_t(read_bit());
        return v;
    }

    mpz_class read_mpz(std::size_t width) {
        mpz_class v = 0;
        for (std::size_t i = 0; i < width; ++i) {
            v <<= 1;
            if (read_bit()) v |= 1;
        }
        return v;
    }

    std::size_t bit_pos() const { return pos_; }
    std::size_t bits_left() const { return size_bits_ - pos_; }

private:
    const std::uint8_t* data_;
    std::size_t size_bits_;
    std::size_t pos_ = 0;
};

}  // namespace bpc
