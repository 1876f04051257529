#include "liecomp/matrix_io.hpp"

#include <fstream>
#include <sstream>

namespace liecomp {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

Index parse_count(const std::string& tok, const std::string& source, int line) {
    try {
        std::size_t used = 0;
        const long v = std::stol(tok, &used);
        if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw MatrixParseError(source, line, "bad dimension '" + tok + "'");
    }
}

}  // namespace

MatrixText read_matrix_text(std::istream& in, const std::string& source) {
    MatrixText out;
    out.source = source;
    std::string line;
    int lineno = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        const auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (!have_header) {
            if (toks.size() != 3) throw MatrixParseError(source, lineno, "expected header 'rows cols field'");
            out.rows = parse_count(toks[0], source, lineno);
            out.cols = parse_count(toks[1], source, lineno);
            try {
                out.field = parse_field(toks[2]);
            } catch (const std::exception& e) {
                throw MatrixParseError(source, lineno, e.what());
            }
            have_header = true;
            continue;
        }
        if (static_cast<Index>(out.entries.size()) >= out.rows * out.cols)
            throw MatrixParseError(source, lineno, "more rows than declared");
        if (static_cast<Index>(toks.size()) != out.cols)
            throw MatrixParseError(source, lineno,
                                   "expected " + std::to_string(out.cols) + " entries, found " + std::to_string(toks.size()));
        for (const auto& t : toks) {
            out.entries.push_back(t);
            out.lines.push_back(lineno);
        }
    }
    if (!have_header) throw MatrixParseError(source, lineno, "missing header");
    if (static_cast<Index>(out.entries.size()) != out.rows * out.cols)
        throw MatrixParseError(source, lineno, "fewer rows than declared");
    return out;
}

MatrixText read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MatrixParseError(path, 0, "cannot open file");
    return read_matrix_text(in, path);
}

template <class S>
Mat<S> parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return materialize<S>(read_matrix_text(in));
}

template Mat<Rational> parse_matrix<Rational>(const std::string&);
template Mat<Zp> parse_matrix<Zp>(const std::string&);
template Mat<Fp2> parse_matrix<Fp2>(const std::string&);

}  // namespace liecomp
