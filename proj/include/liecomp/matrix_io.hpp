// Plain-text matrices: a header line "rows cols field" (field is Q, p or p^2)
// followed by one whitespace-separated row per line.
#ifndef LIECOMP_MATRIX_IO_HPP
#define LIECOMP_MATRIX_IO_HPP

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "liecomp/linalg.hpp"

namespace liecomp {

class MatrixParseError : public std::runtime_error {
public:
    MatrixParseError(const std::string& source, int line, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct MatrixText {
    FieldSpec field;
    Index rows = 0;
    Index cols = 0;
    std::vector<std::string> entries;  // row-major
    std::vector<int> lines;            // source line of each entry
    std::string source;
};

MatrixText read_matrix_text(std::istream& in, const std::string& source = "<input>");
MatrixText read_matrix_file(const std::string& path);

/// Converts the tokens to scalars; must run inside a scope for `text.field`.
template <class S>
Mat<S> materialize(const MatrixText& text) {
    if (FieldTraits<S>::current() != text.field)
        throw std::logic_error("materialize: active field differs from " + text.field.name());
    Mat<S> m(text.rows, text.cols);
    for (Index i = 0; i < text.rows; ++i)
        for (Index j = 0; j < text.cols; ++j) {
            const auto k = static_cast<std::size_t>(i * text.cols + j);
            try {
                m(i, j) = FieldTraits<S>::parse(text.entries[k]);
            } catch (const std::invalid_argument& e) {
                throw MatrixParseError(text.source, text.lines[k], e.what());
            }
        }
    return m;
}

template <class S>
std::string format_matrix(const Mat<S>& m) {
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + " " +
                      FieldTraits<S>::current().token() + "\n";
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += to_string(m(i, j));
        }
        out += '\n';
    }
    return out;
}

template <class S>
Mat<S> parse_matrix(const std::string& text);

}  // namespace liecomp

#endif  // LIECOMP_MATRIX_IO_HPP
