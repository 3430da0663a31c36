#pragma once

#include <stdexcept>
#include <string>

#include "purespin/phase_vector.hpp"
#include "purespin/spinor.hpp"

namespace purespin {

// Parse failure with 1-based position inside the offending string.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_, col_;
};

// Scalar text: "3", "-1/2", or "(re,im)" with rational parts.
Scalar parse_scalar(const std::string& text);

// Spinor text: signed terms joined by +/-, each an optional scalar
// coefficient, "*", and a blade. Blades: "1" is the empty blade, "t2" a
// single factor, "t{13}" a product with one digit per index, and
// "t{1,10,12}" the comma form required once indices pass 9. Index order is
// free and contributes the permutation sign; repeated indices are an error.
Spinor parse_spinor(int n, const std::string& text);

// Phase vector text: same term shape over the tokens e1..en, t1..tn, e.g.
// "e1 - 2*t3 + (0,1)*e2". Indices are plain numbers; no braces.
PhaseVector parse_phase_vector(int n, const std::string& text);

std::string print_scalar(const Scalar& s);
// Canonical form: blade masks ascending, "-" folded into the joiner for real
// negative coefficients, unit coefficients dropped, "0" for zero.
std::string print_spinor(const Spinor& s);
// e-components then t-components, indices ascending.
std::string print_phase_vector(const PhaseVector& v);

}  // namespace purespin
