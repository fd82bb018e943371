#include "mofs/data.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mofs/errors.hpp"
#include "mofs/io.hpp"

namespace mofs {

const std::vector<BundledEntry>& bundled_entries() {
    static const std::vector<BundledEntry> entries = {
#include "bundled_blobs.inc"
    };
    return entries;
}

std::vector<std::string> bundled_names() {
    std::vector<std::string> names;
    names.reserve(bundled_entries().size());
    for (const auto& e : bundled_entries()) names.push_back(e.name);
    return names;
}

namespace {

const BundledEntry* find_entry(const std::string& name) {
    for (const auto& e : bundled_entries())
        if (name == e.name) return &e;
    for (const auto& e : bundled_entries())
        if (name + ".fsq" == e.name) return &e;
    return nullptr;
}

}  // namespace

std::string bundled_text(const std::string& name) {
    const BundledEntry* entry = find_entry(name);
    std::string file = entry ? entry->name : name;

    if (const char* dir = std::getenv("MOFS_DATA_DIR")) {
        std::ifstream in(std::string(dir) + "/" + file);
        if (in) {
            std::ostringstream buf;
            buf << in.rdbuf();
            return buf.str();
        }
    }
    if (!entry) throw DataNotFound("no bundled file named " + name);
    std::string text = entry->text;
    if (fnv1a64(text) != entry->checksum)
        throw ChecksumMismatch("bundled copy of " + file + " is corrupted");
    return text;
}

MofsSet bundled_set(const std::string& name) {
    FsqFile file = parse_fsq(bundled_text(name));
    ValidationReport rep = verify_mofs(file.set);
    if (!rep.valid)
        throw ParseError("bundled set " + name + " fails validation: " +
                         rep.failures.front());
    return file.set;
}

}  // namespace mofs
