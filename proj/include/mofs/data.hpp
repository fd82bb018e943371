#ifndef MOFS_DATA_HPP
#define MOFS_DATA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mofs/core.hpp"

namespace mofs {

struct BundledEntry {
    const char* name;
    const char* text;        // FSQ v1 decimal
    std::uint64_t checksum;  // FNV-1a 64 of the text
};

const std::vector<BundledEntry>& bundled_entries();

std::vector<std::string> bundled_names();

// Raw file text, checksum-verified. MOFS_DATA_DIR overrides the compiled-in
// copies with files from disk. Throws DataNotFound / ChecksumMismatch.
std::string bundled_text(const std::string& name);

// Parsed and verified; every bundled set must pass verify_mofs.
MofsSet bundled_set(const std::string& name);

}  // namespace mofs

#endif
