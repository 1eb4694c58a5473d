#include "cintrec/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cintrec {

namespace fs = std::filesystem;

std::string format_double(double v) {
    std::array<char, 40> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string fnv1a_hex(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    uint64_t h = 0xcbf29ce484222325ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

void write_text(const fs::path& file, const std::string& content) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << content;
}

void write_data_csv(const fs::path& file, const ArrayData& data) {
    std::ostringstream os;
    os << "receiver,cross1,cross2,omega,re,im\n";
    const int nf = data.grid.count();
    for (int r = 0; r < data.geometry.count(); ++r) {
        const auto& x = data.geometry.receivers[r];
        for (int k = 0; k < nf; ++k) {
            const cdouble v = data.values[r * nf + k];
            os << r << ',' << format_double(x.cross1) << ',' << format_double(x.cross2) << ','
               << format_double(data.grid.omegas[k]) << ',' << format_double(v.real()) << ','
               << format_double(v.imag()) << '\n';
        }
    }
    write_text(file, os.str());
}

ArrayData read_data_csv(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty data csv: " + file.string());

    struct Row {
        int receiver;
        double c1, c2, omega, re, im;
    };
    std::vector<Row> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Row row;
        std::istringstream ls(line);
        std::string tok;
        auto next = [&](double& out) {
            if (!std::getline(ls, tok, ',')) throw std::runtime_error("short row in " + file.string());
            out = std::stod(tok);
        };
        double rid;
        next(rid);
        row.receiver = static_cast<int>(rid);
        next(row.c1);
        next(row.c2);
        next(row.omega);
        next(row.re);
        next(row.im);
        rows.push_back(row);
    }
    if (rows.empty()) throw std::runtime_error("no samples in " + file.string());

    int nr = 0;
    for (const auto& r : rows) nr = std::max(nr, r.receiver + 1);
    const int nf = static_cast<int>(rows.size()) / nr;
    if (static_cast<int>(rows.size()) != nr * nf)
        throw std::runtime_error("ragged data csv: " + file.string());

    ArrayData data;
    data.geometry.receivers.resize(nr);
    data.grid.omegas.resize(nf);
    data.values.resize(rows.size());
    for (int r = 0; r < nr; ++r) {
        for (int k = 0; k < nf; ++k) {
            const Row& row = rows[r * nf + k];
            if (row.receiver != r) throw std::runtime_error("unsorted data csv: " + file.string());
            data.geometry.receivers[r] = {row.c1, row.c2, 0.0};
            data.grid.omegas[k] = row.omega;
            data.values[r * nf + k] = {row.re, row.im};
        }
    }
    data.grid.domega = nf > 1 ? (data.grid.omegas.back() - data.grid.omegas.front()) / (nf - 1) : 1.0;
    data.noise_free = data.values;
    double span = 0.0;
    for (const auto& a : data.geometry.receivers)
        for (const auto& b : data.geometry.receivers) span = std::max(span, cross_dist(a, b));
    data.geometry.aperture = span;
    return data;
}

void write_image_csv(const fs::path& file, const ImageGrid& img) {
    std::ostringstream os;
    os << "icross,irange,cross,range,re,im,abs\n";
    for (int ic = 0; ic < img.spec.ncross; ++ic) {
        for (int ir = 0; ir < img.spec.nrange; ++ir) {
            const Pt2 p = img.spec.node(ic, ir);
            const cdouble v = img.at(ic, ir);
            os << ic << ',' << ir << ',' << format_double(p.cross) << ',' << format_double(p.range)
               << ',' << format_double(v.real()) << ',' << format_double(v.imag()) << ','
               << format_double(std::abs(v)) << '\n';
        }
    }
    write_text(file, os.str());
}

void write_field_csv(const fs::path& file, const GridSpec& spec, const std::vector<double>& values) {
    std::ostringstream os;
    os << "icross,irange,cross,range,value\n";
    for (int ic = 0; ic < spec.ncross; ++ic) {
        for (int ir = 0; ir < spec.nrange; ++ir) {
            const Pt2 p = spec.node(ic, ir);
            os << ic << ',' << ir << ',' << format_double(p.cross) << ',' << format_double(p.range)
               << ',' << format_double(values[ic * spec.nrange + ir]) << '\n';
        }
    }
    write_text(file, os.str());
}

namespace {
void write_pgm_bytes(const fs::path& file, int width, int height,
                     const std::vector<unsigned char>& pix) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << "P5\n" << width << ' ' << height << "\n255\n";
    out.write(reinterpret_cast<const char*>(pix.data()), static_cast<std::streamsize>(pix.size()));
}
}  // namespace

void write_image_pgm(const fs::path& file, const ImageGrid& img) {
    double peak = 0.0;
    for (const auto& v : img.values) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) peak = 1.0;
    // rows = cross-range (top to bottom), columns = range
    std::vector<unsigned char> pix(img.values.size());
    for (int ic = 0; ic < img.spec.ncross; ++ic)
        for (int ir = 0; ir < img.spec.nrange; ++ir)
            pix[ic * img.spec.nrange + ir] = static_cast<unsigned char>(
                std::lround(255.0 * std::abs(img.at(ic, ir)) / peak));
    write_pgm_bytes(file, img.spec.nrange, img.spec.ncross, pix);
}

void write_field_pgm(const fs::path& file, int width, int height,
                     const std::vector<double>& values, double lo, double hi) {
    std::vector<unsigned char> pix(values.size());
    const double span = hi - lo;
    for (size_t i = 0; i < values.size(); ++i) {
        const double t = std::clamp((values[i] - lo) / span, 0.0, 1.0);
        pix[i] = static_cast<unsigned char>(std::lround(255.0 * t));
    }
    write_pgm_bytes(file, width, height, pix);
}

}  // namespace cintrec
