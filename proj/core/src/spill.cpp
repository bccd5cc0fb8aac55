#include "spill.hpp"

#include "transfersys/errors.hpp"

namespace transfersys::detail {

RecordWriter::RecordWriter(const std::filesystem::path& path, std::size_t words)
    : out_(path, std::ios::binary | std::ios::trunc), words_(words) {
  if (!out_) throw Error("cannot open spill file " + path.string() + " for writing");
}

void RecordWriter::write(std::span<const std::uint64_t> rec) {
  out_.write(reinterpret_cast<const char*>(rec.data()),
             static_cast<std::streamsize>(words_ * sizeof(std::uint64_t)));
  if (!out_) throw Error("write to spill file failed");
  ++count_;
}

void RecordWriter::close() {
  out_.close();
  if (out_.fail()) throw Error("closing spill file failed");
}

RecordReader::RecordReader(const std::filesystem::path& path, std::size_t words)
    : in_(path, std::ios::binary), words_(words), cur_(words) {
  if (!in_) throw Error("cannot open spill file " + path.string());
  advance();
}

void RecordReader::advance() {
  in_.read(reinterpret_cast<char*>(cur_.data()),
           static_cast<std::streamsize>(words_ * sizeof(std::uint64_t)));
  valid_ = static_cast<std::size_t>(in_.gcount()) == words_ * sizeof(std::uint64_t);
}

int compare_records(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

}  // namespace transfersys::detail
