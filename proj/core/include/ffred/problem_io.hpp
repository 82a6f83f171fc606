#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "ffred/errors.hpp"
#include "ffred/int_ring.hpp"
#include "ffred/matrix.hpp"
#include "ffred/poly_ring.hpp"

namespace ffred {

/*
 * Problem files describe one matrix over one domain:
 *
 *   domain: int
 *   2 3
 *   3 1 4
 *   1 5 9
 *
 * The first two tokens are "domain:" and either "int" or "poly", the next
 * two are the row and column counts, then rows * cols whitespace-separated
 * entries in row-major order.  Polynomial entries use the bracket form
 * "[c0,c1,...]" with no interior whitespace.  '#' starts a comment that runs
 * to end of line; token layout across lines is otherwise free.  Parse errors
 * carry the byte offset and report line:column in the message.
 */

enum class DomainKind { Int, Poly };

struct ProblemFile {
    DomainKind domain = DomainKind::Int;
    std::variant<Matrix<Int>, Matrix<Poly>> data;

    const Matrix<Int>& as_int() const {
        if (const auto* m = std::get_if<Matrix<Int>>(&data)) {
            return *m;
        }
        throw DomainError("problem holds a polynomial matrix, not integer");
    }
    const Matrix<Poly>& as_poly() const {
        if (const auto* m = std::get_if<Matrix<Poly>>(&data)) {
            return *m;
        }
        throw DomainError("problem holds an integer matrix, not polynomial");
    }
};

ProblemFile parse_problem(const std::string& text);

// Slurps the stream / the file at path and parses.  load_problem throws
// Error when the file cannot be opened.
ProblemFile read_problem(std::istream& in);
ProblemFile load_problem(const std::string& path);

// Inverse of parse_problem up to comments and token layout.
std::string serialize_problem(const ProblemFile& problem);

}  // namespace ffred
