#include "ffred/problem_io.hpp"

#include <cstddef>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace ffred {

namespace {

struct Token {
    std::string text;
    std::size_t pos = 0;  // byte offset of the first character
};

std::string line_col(const std::string& text, std::size_t pos) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ":" + std::to_string(col);
}

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == '#') {
            while (i < text.size() && text[i] != '\n') {
                ++i;
            }
        } else if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
            ++i;
        } else {
            const std::size_t start = i;
            while (i < text.size() && text[i] != ' ' && text[i] != '\t' &&
                   text[i] != '\r' && text[i] != '\n' && text[i] != '#') {
                ++i;
            }
            tokens.push_back({text.substr(start, i - start), start});
        }
    }
    return tokens;
}

class TokenReader {
public:
    explicit TokenReader(const std::string& text)
        : text_(text), tokens_(tokenize(text)) {}

    const Token& next(const std::string& what) {
        if (index_ >= tokens_.size()) {
            throw ParseError("unexpected end of input, expected " + what +
                                 " (" + line_col(text_, text_.size()) + ")",
                             text_.size());
        }
        return tokens_[index_++];
    }

    bool exhausted() const { return index_ >= tokens_.size(); }
    const Token& peek() const { return tokens_[index_]; }
    const std::string& text() const { return text_; }

private:
    const std::string& text_;
    std::vector<Token> tokens_;
    std::size_t index_ = 0;
};

std::size_t parse_count(const Token& tok, const std::string& what,
                        const std::string& text) {
    for (const char ch : tok.text) {
        if (ch < '0' || ch > '9') {
            throw ParseError("expected " + what + ", got '" + tok.text +
                                 "' (" + line_col(text, tok.pos) + ")",
                             tok.pos);
        }
    }
    const unsigned long v = std::stoul(tok.text);
    if (v == 0) {
        throw ParseError(what + " must be positive (" +
                             line_col(text, tok.pos) + ")",
                         tok.pos);
    }
    return v;
}

template <typename T, typename Parse>
Matrix<T> parse_entries(TokenReader& reader, std::size_t rows,
                        std::size_t cols, Parse parse) {
    Matrix<T> out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const Token& tok = reader.next("matrix entry (" +
                                           std::to_string(i) + "," +
                                           std::to_string(j) + ")");
            try {
                out(i, j) = parse(tok.text, tok.pos);
            } catch (const ParseError& e) {
                throw ParseError(std::string(e.what()) + " (" +
                                     line_col(reader.text(), e.position) + ")",
                                 e.position);
            }
        }
    }
    return out;
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
    TokenReader reader(text);

    const Token& head = reader.next("'domain:' header");
    if (head.text != "domain:") {
        throw ParseError("expected 'domain:' header, got '" + head.text +
                             "' (" + line_col(text, head.pos) + ")",
                         head.pos);
    }
    const Token& kind = reader.next("domain name 'int' or 'poly'");
    DomainKind domain;
    if (kind.text == "int") {
        domain = DomainKind::Int;
    } else if (kind.text == "poly") {
        domain = DomainKind::Poly;
    } else {
        throw ParseError("unknown domain '" + kind.text + "', expected "
                             "'int' or 'poly' (" + line_col(text, kind.pos) +
                             ")",
                         kind.pos);
    }

    const std::size_t rows =
        parse_count(reader.next("row count"), "row count", text);
    const std::size_t cols =
        parse_count(reader.next("column count"), "column count", text);

    ProblemFile out;
    out.domain = domain;
    if (domain == DomainKind::Int) {
        out.data = parse_entries<Int>(reader, rows, cols, [](auto& t, auto p) {
            return parse_int(t, p);
        });
    } else {
        out.data = parse_entries<Poly>(reader, rows, cols, [](auto& t, auto p) {
            return parse_poly(t, p);
        });
    }

    if (!reader.exhausted()) {
        const Token& extra = reader.peek();
        throw ParseError("trailing content '" + extra.text + "' after the "
                             "last matrix entry (" +
                             line_col(text, extra.pos) + ")",
                         extra.pos);
    }
    return out;
}

ProblemFile read_problem(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open problem file: " + path);
    }
    return read_problem(in);
}

namespace {

template <typename T>
void write_matrix(std::ostream& out, const Matrix<T>& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out << (j ? " " : "") << format(m(i, j));
        }
        out << '\n';
    }
}

}  // namespace

std::string serialize_problem(const ProblemFile& problem) {
    std::ostringstream out;
    if (problem.domain == DomainKind::Int) {
        out << "domain: int\n";
        write_matrix(out, problem.as_int());
    } else {
        out << "domain: poly\n";
        write_matrix(out, problem.as_poly());
    }
    return out.str();
}

}  // namespace ffred
