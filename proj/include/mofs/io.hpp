#ifndef MOFS_IO_HPP
#define MOFS_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mofs/constructions.hpp"
#include "mofs/core.hpp"
#include "mofs/designs.hpp"
#include "mofs/embeddings.hpp"
#include "mofs/trades.hpp"

namespace mofs {

std::uint64_t fnv1a64(const void* data, std::size_t len);
std::uint64_t fnv1a64(const std::string& text);

// FSQ v1: header `mofs <n> <k>`, then n lines of n whitespace-separated
// k-character binary strings. Variant `mofs-dec <n> <k>` carries decimal
// superposition entries. Lines starting with '#' are comments.
struct FsqFile {
    MofsSet set;
    bool decimal = false;
    std::vector<std::string> comments;  // without the leading '# '
};

FsqFile parse_fsq(const std::string& text);
FsqFile read_fsq(const std::string& path);
std::string format_fsq(const MofsSet& s, bool decimal,
                       const std::vector<std::string>& comments = {});
void write_fsq(const std::string& path, const MofsSet& s, bool decimal,
               const std::vector<std::string>& comments = {});

// Same layout with header `imofs <n> <k>` / `imofs-dec <n> <k>`; hole cells
// are `.` tokens (k dots in binary form) and must tile a top-left square.
struct ImofsFile {
    Imofs imofs;
    bool decimal = false;
    std::vector<std::string> comments;
};

ImofsFile parse_imofs(const std::string& text);
ImofsFile read_imofs(const std::string& path);
std::string format_imofs(const Imofs& p, bool decimal,
                         const std::vector<std::string>& comments = {});

// Trade file: `trade <k>` then one line per square, `<i>: (r,c) (r,c) ...`
// with `-` for squares left untouched. Indices are 1-based.
std::vector<CellList> parse_trade(const std::string& text);
std::vector<CellList> read_trade(const std::string& path);
std::string format_trade(const std::vector<CellList>& cell_sets,
                         const std::vector<std::string>& comments = {});

// Hadamard file: `hadamard <n>` then n lines of +/- characters.
HadamardMatrix parse_hadamard(const std::string& text);
HadamardMatrix read_hadamard(const std::string& path);
std::string format_hadamard(const HadamardMatrix& m,
                            const std::vector<std::string>& comments = {});

// Design file: `design <v> <k> <lambda>`, one block per line of 1-based
// points, parallel classes separated by blank lines.
std::string format_design(const ResolvableDesign& d,
                          const std::vector<std::string>& comments = {});
ResolvableDesign parse_design(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

std::string tool_version();

// Provenance comment block: version, the invoking command line, and the
// FNV-1a hash of the primary input (empty string when there is none).
std::vector<std::string> provenance(const std::vector<std::string>& argv,
                                    const std::string& input_text);

}  // namespace mofs

#endif
