#ifndef PFLAB_IO_HPP
#define PFLAB_IO_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "pflab/matrix.hpp"
#include "pflab/rational.hpp"

namespace pflab {

// ".skew" text format:
//   line 1: the (even) order 2N
//   following non-comment lines: "i j value" with 0 <= i < j < 2N; value is
//   a decimal integer, decimal fraction, or p/q rational. Unspecified pairs
//   are zero, '#' starts a comment, duplicate (i,j) is a parse error.
inline SkewMatrix<Rational> read_skew(std::istream& in) {
    std::string line;
    auto next_payload = [&](std::string& out) {
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream probe(line);
            std::string tok;
            if (probe >> tok) {
                out = line;
                return true;
            }
        }
        return false;
    };

    std::string header;
    if (!next_payload(header)) throw ParseError("skew file: missing order line");
    long order = 0;
    {
        std::istringstream ss(header);
        std::string extra;
        if (!(ss >> order) || order < 0 || (ss >> extra))
            throw ParseError("skew file: bad order line '" + header + "'");
    }
    if (order % 2 != 0) throw OddOrderError(static_cast<std::size_t>(order));

    SkewMatrix<Rational> a(static_cast<std::size_t>(order));
    std::set<std::pair<long, long>> seen;
    std::string payload;
    while (next_payload(payload)) {
        std::istringstream ss(payload);
        long i = 0, j = 0;
        std::string value, extra;
        if (!(ss >> i >> j >> value) || (ss >> extra))
            throw ParseError("skew file: bad entry line '" + payload + "'");
        if (i < 0 || j < 0 || i >= j || j >= order)
            throw ParseError("skew file: entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") violates 0 <= i < j < " + std::to_string(order));
        if (!seen.insert({i, j}).second)
            throw ParseError("skew file: duplicate entry (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");
        a.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), Rational::parse(value));
    }
    return a;
}

inline void write_skew(std::ostream& out, const SkewMatrix<Rational>& a) {
    out << a.order() << "\n";
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = i + 1; j < a.order(); ++j)
            if (!a.a(i, j).is_zero()) out << i << " " << j << " " << a.a(i, j).str() << "\n";
}

// ".mat" text format: line 1 the order N, then N rows of N whitespace
// separated scalars ('#' comments allowed).
inline Matrix<Rational> read_mat(std::istream& in) {
    std::string all, line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        all += line + "\n";
    }
    std::istringstream ss(all);
    long order = 0;
    if (!(ss >> order) || order < 0) throw ParseError("mat file: bad order line");
    Matrix<Rational> m(static_cast<std::size_t>(order), static_cast<std::size_t>(order));
    for (long i = 0; i < order; ++i)
        for (long j = 0; j < order; ++j) {
            std::string tok;
            if (!(ss >> tok))
                throw ParseError("mat file: expected " + std::to_string(order * order) +
                                 " entries");
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Rational::parse(tok);
        }
    std::string extra;
    if (ss >> extra) throw ParseError("mat file: trailing token '" + extra + "'");
    return m;
}

inline SkewMatrix<Rational> read_skew_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    return read_skew(f);
}

inline Matrix<Rational> read_mat_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    return read_mat(f);
}

} // namespace pflab

#endif
