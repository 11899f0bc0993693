#ifndef FSIG_IO_HPP
#define FSIG_IO_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fsig/codec.hpp"
#include "fsig/signal.hpp"

namespace fsig {

/// Throws IoError when the file cannot be read or written.
std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path);
void write_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

/// One integer or rational per line. Blank lines and lines starting with '#'
/// are skipped, except an optional `# origin=<i>` header. Throws FormatError.
Signal parse_csv(std::string_view text);
std::string format_csv(const IntSignal& signal);

/// Throws NotIntegral if any sample has a denominator.
IntSignal to_int_signal(const Signal& signal);
Signal to_signal(const IntSignal& signal);

/// P2 or P5 with maxval up to 65535 (16-bit samples big-endian). Throws FormatError.
Image parse_pgm(std::span<const std::uint8_t> bytes);
/// Binary P5 with maxval 255 when every pixel fits a byte and 65535 otherwise;
/// throws FormatError for pixels outside [0, 65535].
std::vector<std::uint8_t> format_pgm(const Image& image);

enum class FileKind { Csv, Pgm, Container };

/// Decides by magic bytes; anything else is treated as CSV.
FileKind sniff(std::span<const std::uint8_t> bytes);

}  // namespace fsig

#endif  // FSIG_IO_HPP
