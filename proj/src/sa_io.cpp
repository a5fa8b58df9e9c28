#include <radixsa/sa_io.hpp>

#include <array>
#include <cstring>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>

namespace radixsa {

namespace {

constexpr std::array<char, 7> kMagic = { 'S', 'U', 'F', 'A', 'R', 'R', '\0' };
constexpr std::size_t kBlock = 1 << 16;

template <unsigned Width>
void put_entries(std::ostream& out, const std::vector<index_t>& order) {
    std::vector<char> buf;
    buf.reserve(kBlock * Width);
    for (std::size_t base = 0; base < order.size(); base += kBlock) {
        buf.clear();
        const std::size_t end = std::min(order.size(), base + kBlock);
        for (std::size_t i = base; i < end; ++i) {
            const std::uint64_t v = order[i];
            for (unsigned b = 0; b < Width; ++b)
                buf.push_back(static_cast<char>((v >> (8 * b)) & 0xFF));
        }
        out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    }
}

} // namespace

void write_sa(std::ostream& out, const SuffixArray& sa, bool force_wide) {
    const bool wide = force_wide || sa.order.size() > kMaxTextLength;
    out.write(kMagic.data(), kMagic.size());
    out.put(static_cast<char>(wide ? 8 : 4));
    if (wide) put_entries<8>(out, sa.order);
    else put_entries<4>(out, sa.order);
    if (!out) throw std::runtime_error("suffix array write failed");
}

void write_sa_text(std::ostream& out, const SuffixArray& sa) {
    for (index_t v : sa.order) out << v << '\n';
    if (!out) throw std::runtime_error("suffix array write failed");
}

SuffixArray read_sa(std::istream& in) {
    std::array<char, 8> header {};
    if (!in.read(header.data(), header.size()) ||
        std::memcmp(header.data(), kMagic.data(), kMagic.size()) != 0)
        throw std::runtime_error("not a binary suffix array file");
    const unsigned width = static_cast<unsigned char>(header[7]);
    if (width != 4 && width != 8)
        throw std::runtime_error("unsupported entry width " + std::to_string(width));

    SuffixArray sa;
    std::array<unsigned char, 8> raw {};
    while (in.read(reinterpret_cast<char*>(raw.data()), width)) {
        std::uint64_t v = 0;
        for (unsigned b = 0; b < width; ++b) v |= std::uint64_t(raw[b]) << (8 * b);
        if (v >= kMaxTextLength)
            throw std::runtime_error("suffix array entry " + std::to_string(v) + " out of range");
        sa.order.push_back(static_cast<index_t>(v));
    }
    if (in.gcount() != 0) throw std::runtime_error("truncated suffix array entry");
    return sa;
}

SuffixArray read_sa_text(std::istream& in) {
    SuffixArray sa;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(line, &used);
        }
        catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || line.find_first_not_of(" \t\r", used) != std::string::npos ||
            v >= kMaxTextLength)
            throw std::runtime_error("bad suffix array entry on line " + std::to_string(lineno));
        sa.order.push_back(static_cast<index_t>(v));
    }
    return sa;
}

void save_sa(const std::filesystem::path& path, const SuffixArray& sa, SaFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot create '" + path.string() + "'");
    if (format == SaFormat::binary) write_sa(out, sa);
    else write_sa_text(out, sa);
}

SuffixArray load_sa(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::array<char, 7> probe {};
    in.read(probe.data(), probe.size());
    const bool binary = in.gcount() == 7 && probe == kMagic;
    in.clear();
    in.seekg(0);
    return binary ? read_sa(in) : read_sa_text(in);
}

} // namespace radixsa
