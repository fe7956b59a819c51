#include "ersim/snapshot.hpp"

#include <cstring>
#include <fstream>

namespace ersim {

namespace {

constexpr char kMagic[4] = {'E', 'R', 'S', 'F'};

void write_u32(std::ostream& out, std::uint32_t v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

std::uint32_t read_u32(std::istream& in) {
    std::uint32_t v = 0;
    in.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}

struct Header {
    std::uint32_t version, n, m;
    std::uint8_t rep;
};

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("snapshot: cannot open for writing: " + path);
    return out;
}

Header read_header(std::ifstream& in, const std::string& path) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("snapshot: bad magic in " + path);
    Header h{};
    h.version = read_u32(in);
    h.n = read_u32(in);
    h.m = read_u32(in);
    in.read(reinterpret_cast<char*>(&h.rep), 1);
    if (!in) throw std::runtime_error("snapshot: truncated header in " + path);
    if (h.version != 1) throw std::runtime_error("snapshot: unsupported version");
    return h;
}

void write_header(std::ostream& out, const Grid& g, Rep rep) {
    out.write(kMagic, 4);
    write_u32(out, 1);
    write_u32(out, static_cast<std::uint32_t>(g.n));
    write_u32(out, static_cast<std::uint32_t>(g.m));
    std::uint8_t r = static_cast<std::uint8_t>(rep);
    out.write(reinterpret_cast<const char*>(&r), 1);
}

void write_component(std::ostream& out, const ScalarField& f, Rep rep) {
    if (rep == Rep::Physical) {
        const auto& v = f.phys();
        out.write(reinterpret_cast<const char*>(v.data()),
                  static_cast<std::streamsize>(v.size() * sizeof(double)));
    } else {
        const auto& v = f.spec();
        out.write(reinterpret_cast<const char*>(v.data()),
                  static_cast<std::streamsize>(v.size() * 2 * sizeof(double)));
    }
}

ScalarField read_component(std::istream& in, const Grid& g, Rep rep) {
    if (rep == Rep::Physical) {
        std::vector<double> v(g.size());
        in.read(reinterpret_cast<char*>(v.data()),
                static_cast<std::streamsize>(v.size() * sizeof(double)));
        if (!in) throw std::runtime_error("snapshot: truncated payload");
        return ScalarField::physical(g, std::move(v));
    }
    std::vector<std::complex<double>> v(g.size());
    in.read(reinterpret_cast<char*>(v.data()),
            static_cast<std::streamsize>(v.size() * 2 * sizeof(double)));
    if (!in) throw std::runtime_error("snapshot: truncated payload");
    return ScalarField::spectral(g, std::move(v));
}

Rep preferred_rep(const ScalarField& f) {
    return f.has_physical() ? Rep::Physical : Rep::Spectral;
}

} // namespace

void write_snapshot(const std::string& path, const ScalarField& f) {
    auto out = open_out(path);
    Rep rep = preferred_rep(f);
    write_header(out, f.grid(), rep);
    write_component(out, f, rep);
}

void write_snapshot(const std::string& path, const VectorField& f) {
    auto out = open_out(path);
    Rep rep = preferred_rep(f.comp(0));
    write_header(out, f.grid(), rep);
    for (int i = 0; i < f.dim(); ++i) {
        auto c = f.comp(i);
        if (rep == Rep::Physical) c.require_physical(); else c.require_spectral();
        write_component(out, c, rep);
    }
}

ScalarField read_scalar_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("snapshot: cannot open " + path);
    Header h = read_header(in, path);
    Grid g(static_cast<int>(h.n), static_cast<int>(h.m));
    return read_component(in, g, static_cast<Rep>(h.rep));
}

VectorField read_vector_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("snapshot: cannot open " + path);
    Header h = read_header(in, path);
    Grid g(static_cast<int>(h.n), static_cast<int>(h.m));
    VectorField v(g);
    for (int i = 0; i < g.n; ++i) v.comp(i) = read_component(in, g, static_cast<Rep>(h.rep));
    return v;
}

} // namespace ersim
