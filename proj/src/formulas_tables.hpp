#ifndef TRACEZERO_FORMULAS_TABLES_HPP
#define TRACEZERO_FORMULAS_TABLES_HPP

#include <cstddef>
#include <cstdint>

namespace tracezero::detail {

// One monomial of a coefficient formula:
//   coeff * (1/3 if over3) * a1^e_a1 * a0^e_a0 * b1^e_b1 * b0^e_b0 * A^e_A * B^e_B
// where (a0, a1) and (b0, b1) are the two input line coefficients.
struct FormulaTerm {
    std::int32_t coeff;
    std::uint8_t over3;
    std::uint8_t e_a1, e_a0, e_b1, e_b0, e_A, e_B;
};

extern const FormulaTerm kSpqA4[];
extern const std::size_t kSpqA4Count;
extern const FormulaTerm kSpqA3[];
extern const std::size_t kSpqA3Count;
extern const FormulaTerm kSpqA2[];
extern const std::size_t kSpqA2Count;
extern const FormulaTerm kSpqA1[];
extern const std::size_t kSpqA1Count;
extern const FormulaTerm kSpqA0[];
extern const std::size_t kSpqA0Count;
extern const FormulaTerm kSpqB3[];
extern const std::size_t kSpqB3Count;
extern const FormulaTerm kSpqB2[];
extern const std::size_t kSpqB2Count;
extern const FormulaTerm kSpqB1[];
extern const std::size_t kSpqB1Count;
extern const FormulaTerm kSpqB0[];
extern const std::size_t kSpqB0Count;
extern const FormulaTerm kDblU1[];
extern const std::size_t kDblU1Count;
extern const FormulaTerm kDblU0[];
extern const std::size_t kDblU0Count;
extern const FormulaTerm kDblC[];
extern const std::size_t kDblCCount;
extern const FormulaTerm kTplV1[];
extern const std::size_t kTplV1Count;
extern const FormulaTerm kTplV0[];
extern const std::size_t kTplV0Count;
extern const FormulaTerm kTplD[];
extern const std::size_t kTplDCount;

}  // namespace tracezero::detail

#endif
