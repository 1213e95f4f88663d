#include "tripres/io.hpp"

#include <fstream>
#include <sstream>

namespace tripres {

namespace {

// drop '#' comments, keep everything else
std::string strip_comments(std::istream& in) {
    std::string out, line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        out += line;
        out += '\n';
    }
    return out;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return in;
}

std::ofstream create_or_throw(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write " + path);
    return out;
}

} // namespace

std::vector<int> read_lambda(std::istream& in) {
    std::istringstream tokens(strip_comments(in));
    std::vector<int> image;
    std::string tok;
    while (tokens >> tok) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            image.push_back(v);
        } catch (const std::exception&) {
            throw parse_error("bad token in correspondence file: '" + tok + "'");
        }
    }
    if (image.empty()) throw parse_error("empty correspondence file");
    return image;
}

std::vector<int> read_lambda_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_lambda(in);
}

void write_lambda(std::ostream& out, const std::vector<int>& image) {
    for (std::size_t i = 0; i < image.size(); ++i)
        out << image[i] << (i + 1 == image.size() ? "\n" : " ");
}

void write_lambda_file(const std::string& path, const std::vector<int>& image) {
    auto out = create_or_throw(path);
    write_lambda(out, image);
}

std::vector<Triple> read_triples(std::istream& in) {
    std::istringstream tokens(strip_comments(in));
    std::vector<int> flat;
    std::string tok;
    while (tokens >> tok) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            flat.push_back(v);
        } catch (const std::exception&) {
            throw parse_error("bad token in presentation file: '" + tok + "'");
        }
    }
    if (flat.size() % 3 != 0)
        throw parse_error("presentation file does not hold whole triples (" +
                          std::to_string(flat.size()) + " values)");
    std::vector<Triple> reps;
    reps.reserve(flat.size() / 3);
    for (std::size_t i = 0; i < flat.size(); i += 3)
        reps.push_back({flat[i], flat[i + 1], flat[i + 2]});
    return reps;
}

std::vector<Triple> read_triples_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_triples(in);
}

void write_triples(std::ostream& out, const TrianglePresentation& tri) {
    for (const Triple& t : orbit_reps(tri))
        out << t.x << " " << t.y << " " << t.z << "\n";
}

void write_triples_file(const std::string& path, const TrianglePresentation& tri) {
    auto out = create_or_throw(path);
    write_triples(out, tri);
}

void write_checkpoint(std::ostream& out, const std::vector<int>& image,
                      std::size_t visited_count) {
    write_lambda(out, image);
    out << "# visited " << visited_count << "\n";
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace tripres
