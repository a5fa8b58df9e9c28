// Suffix array files.
//
// Binary form: the 7-byte magic "SUFARR\0" and one width byte (4 or 8),
// then n little-endian unsigned entries of that width. 32-bit entries are
// written whenever n < 2^31 unless 64-bit output is forced.
// Text form: one decimal position per line.

#pragma once

#include <radixsa/text.hpp>

#include <filesystem>
#include <iosfwd>

namespace radixsa {

enum class SaFormat { binary, text };

void write_sa(std::ostream& out, const SuffixArray& sa, bool force_wide = false);
void write_sa_text(std::ostream& out, const SuffixArray& sa);

//! Throws std::runtime_error on a malformed header, truncated data or an
//! entry that does not fit the index type.
SuffixArray read_sa(std::istream& in);
SuffixArray read_sa_text(std::istream& in);

void save_sa(const std::filesystem::path& path, const SuffixArray& sa, SaFormat format);
//! Detects the form from the header.
SuffixArray load_sa(const std::filesystem::path& path);

} // namespace radixsa
