#pragma once

#include "tripres/presentation.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tripres {

// Deterministic 64-bit generator (splitmix64); used for seeded shuffles so
// results are reproducible across platforms, unlike std::shuffle.
struct SplitMix64 {
    std::uint64_t state = 0;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// Correspondence file: whitespace-separated line indices, position i holding
// the image of point i; any row layout accepted, '#' starts a comment line.
// The writer emits a single line.
std::vector<int> read_lambda(std::istream& in);
std::vector<int> read_lambda_file(const std::string& path);
void write_lambda(std::ostream& out, const std::vector<int>& image);
void write_lambda_file(const std::string& path, const std::vector<int>& image);

// Presentation file: one orbit representative per line as "x y z" (loops
// "x x x"); '#' comment lines skipped.  The writer emits the
// lexicographically-least representative of each orbit, sorted.
std::vector<Triple> read_triples(std::istream& in);
std::vector<Triple> read_triples_file(const std::string& path);
void write_triples(std::ostream& out, const TrianglePresentation& tri);
void write_triples_file(const std::string& path, const TrianglePresentation& tri);

// Search checkpoint: the current correspondence in lambda format plus a
// comment recording the visited-set size (the set itself is not persisted).
void write_checkpoint(std::ostream& out, const std::vector<int>& image,
                      std::size_t visited_count);

std::string slurp_file(const std::string& path);

// FNV-1a 64-bit digest; guards fixture files against transcription drift.
std::uint64_t fnv1a64(const std::string& bytes);

} // namespace tripres
