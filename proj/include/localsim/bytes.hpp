#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "localsim/error.hpp"

namespace localsim {

using ByteBuffer = std::vector<std::byte>;

// Message payloads are immutable and reference-counted so a broadcast of the
// same content to every neighbor costs one serialization.
using Payload = std::shared_ptr<const ByteBuffer>;

class ByteWriter {
public:
  void u8(std::uint8_t v) { buf_.push_back(static_cast<std::byte>(v)); }

  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<std::byte>((v >> (8 * i)) & 0xFF));
  }

  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<std::byte>((v >> (8 * i)) & 0xFF));
  }

  std::size_t size() const { return buf_.size(); }

  Payload finish() { return std::make_shared<const ByteBuffer>(std::move(buf_)); }

private:
  ByteBuffer buf_;
};

class ByteReader {
public:
  explicit ByteReader(const ByteBuffer& buf) : buf_(&buf) {}

  std::uint8_t u8() {
    need(1);
    return static_cast<std::uint8_t>((*buf_)[pos_++]);
  }

  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>((*buf_)[pos_++]) << (8 * i);
    return v;
  }

  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>((*buf_)[pos_++]) << (8 * i);
    return v;
  }

  void skip(std::size_t bytes) {
    need(bytes);
    pos_ += bytes;
  }

  bool done() const { return pos_ == buf_->size(); }

private:
  void need(std::size_t bytes) const {
    if (pos_ + bytes > buf_->size())
      throw SimError(ErrorKind::InvalidArgument, "truncated message payload");
  }

  const ByteBuffer* buf_;
  std::size_t pos_ = 0;
};

} // namespace localsim
