#include "formulas_tables.hpp"

// Coefficient tables of the explicit line formulas: the nine S_{P,Q}
// coefficients in the two line inputs, and the doubling/tripling rational
// maps in one line input (h_{2P} = c y - (u0 + u1 x), h_{3P} = d y - (v0 + v1 x)).

namespace tracezero::detail {

const FormulaTerm kSpqA4[] = {
    {-1, 0, 3, 0, 1, 2, 0, 0},
    {-3, 0, 3, 0, 1, 0, 0, 1},
    {2, 0, 3, 0, 0, 1, 1, 0},
    {2, 0, 2, 1, 2, 1, 0, 0},
    {1, 0, 2, 1, 1, 0, 1, 0},
    {-6, 0, 2, 0, 2, 0, 0, 1},
    {3, 0, 2, 0, 1, 1, 1, 0},
    {1, 0, 2, 0, 0, 0, 2, 0},
    {-1, 0, 1, 2, 3, 0, 0, 0},
    {6, 0, 1, 2, 0, 1, 0, 0},
    {3, 0, 1, 1, 2, 0, 1, 0},
    {3, 0, 1, 1, 0, 2, 0, 0},
    {9, 0, 1, 1, 0, 0, 0, 1},
    {-3, 0, 1, 0, 3, 0, 0, 1},
    {1, 0, 1, 0, 2, 1, 1, 0},
    {2, 0, 1, 0, 1, 0, 2, 0},
    {-3, 0, 1, 0, 0, 3, 0, 0},
    {9, 0, 1, 0, 0, 1, 0, 1},
    {-3, 0, 0, 3, 1, 0, 0, 0},
    {3, 0, 0, 2, 1, 1, 0, 0},
    {-3, 0, 0, 2, 0, 0, 1, 0},
    {2, 0, 0, 1, 3, 0, 1, 0},
    {6, 0, 0, 1, 1, 2, 0, 0},
    {9, 0, 0, 1, 1, 0, 0, 1},
    {-6, 0, 0, 1, 0, 1, 1, 0},
    {1, 0, 0, 0, 2, 0, 2, 0},
    {9, 0, 0, 0, 1, 1, 0, 1},
    {-3, 0, 0, 0, 0, 2, 1, 0},
};

const std::size_t kSpqA4Count = 28;

const FormulaTerm kSpqA3[] = {
    {4, 0, 3, 0, 3, 0, 0, 1},
    {-2, 0, 3, 0, 2, 1, 1, 0},
    {1, 0, 3, 0, 1, 0, 2, 0},
    {-1, 0, 3, 0, 0, 3, 0, 0},
    {9, 0, 3, 0, 0, 1, 0, 1},
    {-2, 0, 2, 1, 3, 0, 1, 0},
    {-1, 0, 2, 1, 1, 2, 0, 0},
    {3, 0, 2, 1, 1, 0, 0, 1},
    {-7, 0, 2, 1, 0, 1, 1, 0},
    {1, 0, 2, 0, 2, 0, 2, 0},
    {-6, 0, 2, 0, 1, 1, 0, 1},
    {3, 0, 2, 0, 0, 2, 1, 0},
    {6, 0, 2, 0, 0, 0, 1, 1},
    {-1, 0, 1, 2, 2, 1, 0, 0},
    {1, 0, 1, 2, 1, 0, 1, 0},
    {-6, 0, 1, 1, 2, 0, 0, 1},
    {12, 0, 1, 1, 1, 1, 1, 0},
    {-8, 0, 1, 1, 0, 0, 2, 0},
    {1, 0, 1, 0, 3, 0, 2, 0},
    {3, 0, 1, 0, 2, 1, 0, 1},
    {1, 0, 1, 0, 1, 2, 1, 0},
    {-6, 0, 1, 0, 1, 0, 1, 1},
    {4, 0, 1, 0, 0, 1, 2, 0},
    {-1, 0, 0, 3, 3, 0, 0, 0},
    {-3, 0, 0, 3, 0, 1, 0, 0},
    {3, 0, 0, 2, 2, 0, 1, 0},
    {21, 0, 0, 2, 0, 2, 0, 0},
    {-18, 0, 0, 2, 0, 0, 0, 1},
    {9, 0, 0, 1, 3, 0, 0, 1},
    {-7, 0, 0, 1, 2, 1, 1, 0},
    {4, 0, 0, 1, 1, 0, 2, 0},
    {-3, 0, 0, 1, 0, 3, 0, 0},
    {18, 0, 0, 1, 0, 1, 0, 1},
    {6, 0, 0, 0, 2, 0, 1, 1},
    {-8, 0, 0, 0, 1, 1, 2, 0},
    {-18, 0, 0, 0, 0, 2, 0, 1},
    {4, 0, 0, 0, 0, 0, 3, 0},
    {27, 0, 0, 0, 0, 0, 0, 2},
};

const std::size_t kSpqA3Count = 38;

const FormulaTerm kSpqA2[] = {
    {-1, 0, 3, 0, 3, 0, 2, 0},
    {-2, 0, 3, 0, 1, 2, 1, 0},
    {-6, 0, 3, 0, 1, 0, 1, 1},
    {1, 0, 3, 0, 0, 1, 2, 0},
    {-2, 0, 2, 1, 2, 1, 1, 0},
    {5, 0, 2, 1, 1, 0, 2, 0},
    {-3, 0, 2, 1, 0, 3, 0, 0},
    {-9, 0, 2, 1, 0, 1, 0, 1},
    {6, 0, 2, 0, 2, 0, 1, 1},
    {9, 0, 2, 0, 0, 2, 0, 1},
    {2, 0, 2, 0, 0, 0, 3, 0},
    {27, 0, 2, 0, 0, 0, 0, 2},
    {-2, 0, 1, 2, 3, 0, 1, 0},
    {-3, 0, 1, 2, 1, 2, 0, 0},
    {9, 0, 1, 2, 1, 0, 0, 1},
    {9, 0, 1, 2, 0, 1, 1, 0},
    {36, 0, 1, 1, 1, 1, 0, 1},
    {-12, 0, 1, 1, 0, 2, 1, 0},
    {-18, 0, 1, 1, 0, 0, 1, 1},
    {-6, 0, 1, 0, 3, 0, 1, 1},
    {5, 0, 1, 0, 2, 1, 2, 0},
    {9, 0, 1, 0, 1, 2, 0, 1},
    {4, 0, 1, 0, 1, 0, 3, 0},
    {-27, 0, 1, 0, 1, 0, 0, 2},
    {-3, 0, 1, 0, 0, 3, 1, 0},
    {36, 0, 1, 0, 0, 1, 1, 1},
    {-3, 0, 0, 3, 2, 1, 0, 0},
    {-3, 0, 0, 3, 1, 0, 1, 0},
    {9, 0, 0, 2, 2, 0, 0, 1},
    {-12, 0, 0, 2, 1, 1, 1, 0},
    {6, 0, 0, 2, 0, 0, 2, 0},
    {1, 0, 0, 1, 3, 0, 2, 0},
    {-9, 0, 0, 1, 2, 1, 0, 1},
    {9, 0, 0, 1, 1, 2, 1, 0},
    {36, 0, 0, 1, 1, 0, 1, 1},
    {-24, 0, 0, 1, 0, 1, 2, 0},
    {2, 0, 0, 0, 2, 0, 3, 0},
    {27, 0, 0, 0, 2, 0, 0, 2},
    {-18, 0, 0, 0, 1, 1, 1, 1},
    {6, 0, 0, 0, 0, 2, 2, 0},
};

const std::size_t kSpqA2Count = 40;

const FormulaTerm kSpqA1[] = {
    {-1, 0, 3, 0, 2, 1, 2, 0},
    {-4, 0, 3, 0, 1, 2, 0, 1},
    {1, 0, 3, 0, 1, 0, 3, 0},
    {-12, 0, 3, 0, 1, 0, 0, 2},
    {8, 0, 3, 0, 0, 1, 1, 1},
    {-1, 0, 2, 1, 3, 0, 2, 0},
    {-4, 0, 2, 1, 2, 1, 0, 1},
    {16, 0, 2, 1, 1, 0, 1, 1},
    {-3, 0, 2, 1, 0, 1, 2, 0},
    {-3, 0, 2, 0, 2, 0, 3, 0},
    {12, 0, 2, 0, 2, 0, 0, 2},
    {-24, 0, 2, 0, 1, 1, 1, 1},
    {3, 0, 2, 0, 0, 2, 2, 0},
    {-2, 0, 2, 0, 0, 0, 2, 1},
    {-4, 0, 1, 2, 3, 0, 0, 1},
    {-3, 0, 1, 2, 1, 0, 2, 0},
    {-3, 0, 1, 2, 0, 3, 0, 0},
    {15, 0, 1, 2, 0, 1, 0, 1},
    {-24, 0, 1, 1, 2, 0, 1, 1},
    {12, 0, 1, 1, 1, 1, 2, 0},
    {-6, 0, 1, 1, 0, 2, 0, 1},
    {-18, 0, 1, 1, 0, 0, 0, 2},
    {1, 0, 1, 0, 3, 0, 3, 0},
    {-12, 0, 1, 0, 3, 0, 0, 2},
    {16, 0, 1, 0, 2, 1, 1, 1},
    {-3, 0, 1, 0, 1, 2, 2, 0},
    {14, 0, 1, 0, 1, 0, 2, 1},
    {-3, 0, 1, 0, 0, 3, 0, 1},
    {63, 0, 1, 0, 0, 1, 0, 2},
    {-3, 0, 0, 3, 1, 2, 0, 0},
    {-3, 0, 0, 3, 1, 0, 0, 1},
    {-3, 0, 0, 3, 0, 1, 1, 0},
    {3, 0, 0, 2, 2, 0, 2, 0},
    {-6, 0, 0, 2, 1, 1, 0, 1},
    {9, 0, 0, 2, 0, 2, 1, 0},
    {6, 0, 0, 2, 0, 0, 1, 1},
    {8, 0, 0, 1, 3, 0, 1, 1},
    {-3, 0, 0, 1, 2, 1, 2, 0},
    {15, 0, 0, 1, 1, 2, 0, 1},
    {63, 0, 0, 1, 1, 0, 0, 2},
    {-3, 0, 0, 1, 0, 3, 1, 0},
    {-42, 0, 0, 1, 0, 1, 1, 1},
    {-2, 0, 0, 0, 2, 0, 2, 1},
    {-18, 0, 0, 0, 1, 1, 0, 2},
    {6, 0, 0, 0, 0, 2, 1, 1},
    {4, 0, 0, 0, 0, 0, 4, 0},
    {27, 0, 0, 0, 0, 0, 1, 2},
};

const std::size_t kSpqA1Count = 47;

const FormulaTerm kSpqA0[] = {
    {2, 0, 3, 0, 1, 0, 2, 1},
    {-1, 0, 3, 0, 0, 1, 3, 0},
    {-1, 0, 2, 1, 2, 1, 2, 0},
    {-4, 0, 2, 1, 1, 2, 0, 1},
    {12, 0, 2, 1, 1, 0, 0, 2},
    {-4, 0, 2, 1, 0, 1, 1, 1},
    {-5, 0, 2, 0, 2, 0, 2, 1},
    {1, 0, 2, 0, 1, 1, 3, 0},
    {-24, 0, 2, 0, 1, 1, 0, 2},
    {6, 0, 2, 0, 0, 2, 1, 1},
    {1, 0, 2, 0, 0, 0, 4, 0},
    {6, 0, 2, 0, 0, 0, 1, 2},
    {-4, 0, 1, 2, 2, 1, 0, 1},
    {2, 0, 1, 2, 1, 2, 1, 0},
    {-2, 0, 1, 2, 1, 0, 1, 1},
    {-1, 0, 1, 2, 0, 1, 2, 0},
    {1, 0, 1, 1, 2, 0, 3, 0},
    {-24, 0, 1, 1, 2, 0, 0, 2},
    {24, 0, 1, 1, 1, 1, 1, 1},
    {-3, 0, 1, 1, 0, 2, 2, 0},
    {1, 0, 1, 1, 0, 0, 2, 1},
    {2, 0, 1, 0, 3, 0, 2, 1},
    {12, 0, 1, 0, 2, 1, 0, 2},
    {-2, 0, 1, 0, 1, 2, 1, 1},
    {-2, 0, 1, 0, 1, 0, 4, 0},
    {-6, 0, 1, 0, 1, 0, 1, 2},
    {-5, 0, 1, 0, 0, 1, 2, 1},
    {-1, 0, 0, 3, 0, 3, 0, 0},
    {-3, 0, 0, 3, 0, 1, 0, 1},
    {6, 0, 0, 2, 2, 0, 1, 1},
    {-3, 0, 0, 2, 1, 1, 2, 0},
    {3, 0, 0, 2, 0, 2, 0, 1},
    {1, 0, 0, 2, 0, 0, 3, 0},
    {9, 0, 0, 2, 0, 0, 0, 2},
    {-1, 0, 0, 1, 3, 0, 3, 0},
    {-4, 0, 0, 1, 2, 1, 1, 1},
    {-1, 0, 0, 1, 1, 2, 2, 0},
    {-5, 0, 0, 1, 1, 0, 2, 1},
    {-3, 0, 0, 1, 0, 3, 0, 1},
    {2, 0, 0, 1, 0, 1, 3, 0},
    {-9, 0, 0, 1, 0, 1, 0, 2},
    {1, 0, 0, 0, 2, 0, 4, 0},
    {6, 0, 0, 0, 2, 0, 1, 2},
    {1, 0, 0, 0, 1, 1, 2, 1},
    {1, 0, 0, 0, 0, 2, 3, 0},
    {9, 0, 0, 0, 0, 2, 0, 2},
    {4, 0, 0, 0, 0, 0, 3, 1},
    {27, 0, 0, 0, 0, 0, 0, 3},
};

const std::size_t kSpqA0Count = 48;

const FormulaTerm kSpqB3[] = {
    {1, 0, 3, 0, 0, 2, 0, 0},
    {-1, 0, 3, 0, 0, 0, 0, 1},
    {-2, 0, 2, 1, 1, 1, 0, 0},
    {1, 0, 2, 1, 0, 0, 1, 0},
    {1, 0, 2, 0, 1, 2, 0, 0},
    {-3, 0, 2, 0, 1, 0, 0, 1},
    {1, 0, 2, 0, 0, 1, 1, 0},
    {1, 0, 1, 2, 2, 0, 0, 0},
    {-2, 0, 1, 1, 2, 1, 0, 0},
    {2, 0, 1, 1, 1, 0, 1, 0},
    {-3, 0, 1, 0, 2, 0, 0, 1},
    {2, 0, 1, 0, 1, 1, 1, 0},
    {1, 0, 0, 3, 0, 0, 0, 0},
    {1, 0, 0, 2, 3, 0, 0, 0},
    {3, 0, 0, 2, 0, 1, 0, 0},
    {1, 0, 0, 1, 2, 0, 1, 0},
    {3, 0, 0, 1, 0, 2, 0, 0},
    {-1, 0, 0, 0, 3, 0, 0, 1},
    {1, 0, 0, 0, 2, 1, 1, 0},
    {1, 0, 0, 0, 0, 3, 0, 0},
};

const std::size_t kSpqB3Count = 20;

const FormulaTerm kSpqB2[] = {
    {1, 0, 3, 0, 0, 0, 2, 0},
    {3, 0, 2, 1, 0, 2, 0, 0},
    {9, 0, 2, 1, 0, 0, 0, 1},
    {3, 0, 2, 0, 1, 0, 2, 0},
    {3, 0, 2, 0, 0, 3, 0, 0},
    {9, 0, 2, 0, 0, 1, 0, 1},
    {-6, 0, 1, 2, 1, 1, 0, 0},
    {-3, 0, 1, 2, 0, 0, 1, 0},
    {-6, 0, 1, 1, 1, 2, 0, 0},
    {18, 0, 1, 1, 1, 0, 0, 1},
    {-6, 0, 1, 1, 0, 1, 1, 0},
    {3, 0, 1, 0, 2, 0, 2, 0},
    {18, 0, 1, 0, 1, 1, 0, 1},
    {-3, 0, 1, 0, 0, 2, 1, 0},
    {3, 0, 0, 3, 2, 0, 0, 0},
    {3, 0, 0, 2, 2, 1, 0, 0},
    {-3, 0, 0, 2, 1, 0, 1, 0},
    {9, 0, 0, 1, 2, 0, 0, 1},
    {-6, 0, 0, 1, 1, 1, 1, 0},
    {1, 0, 0, 0, 3, 0, 2, 0},
    {9, 0, 0, 0, 2, 1, 0, 1},
    {-3, 0, 0, 0, 1, 2, 1, 0},
};

const std::size_t kSpqB2Count = 22;

const FormulaTerm kSpqB1[] = {
    {-1, 0, 3, 0, 2, 0, 2, 0},
    {-2, 0, 3, 0, 0, 2, 1, 0},
    {2, 0, 3, 0, 0, 0, 1, 1},
    {-12, 0, 2, 1, 2, 0, 0, 1},
    {4, 0, 2, 1, 1, 1, 1, 0},
    {-3, 0, 2, 1, 0, 0, 2, 0},
    {-1, 0, 2, 0, 3, 0, 2, 0},
    {-12, 0, 2, 0, 2, 1, 0, 1},
    {4, 0, 2, 0, 1, 2, 1, 0},
    {1, 0, 2, 0, 0, 1, 2, 0},
    {4, 0, 1, 2, 2, 0, 1, 0},
    {-3, 0, 1, 2, 0, 2, 0, 0},
    {-9, 0, 1, 2, 0, 0, 0, 1},
    {4, 0, 1, 1, 2, 1, 1, 0},
    {2, 0, 1, 1, 1, 0, 2, 0},
    {6, 0, 1, 1, 0, 3, 0, 0},
    {18, 0, 1, 1, 0, 1, 0, 1},
    {2, 0, 1, 0, 1, 1, 2, 0},
    {9, 0, 1, 0, 0, 2, 0, 1},
    {4, 0, 1, 0, 0, 0, 3, 0},
    {27, 0, 1, 0, 0, 0, 0, 2},
    {6, 0, 0, 3, 1, 1, 0, 0},
    {1, 0, 0, 3, 0, 0, 1, 0},
    {-2, 0, 0, 2, 3, 0, 1, 0},
    {-3, 0, 0, 2, 1, 2, 0, 0},
    {9, 0, 0, 2, 1, 0, 0, 1},
    {-9, 0, 0, 2, 0, 1, 1, 0},
    {1, 0, 0, 1, 2, 0, 2, 0},
    {18, 0, 0, 1, 1, 1, 0, 1},
    {-9, 0, 0, 1, 0, 2, 1, 0},
    {2, 0, 0, 0, 3, 0, 1, 1},
    {-3, 0, 0, 0, 2, 1, 2, 0},
    {-9, 0, 0, 0, 1, 2, 0, 1},
    {4, 0, 0, 0, 1, 0, 3, 0},
    {27, 0, 0, 0, 1, 0, 0, 2},
    {1, 0, 0, 0, 0, 3, 1, 0},
};

const std::size_t kSpqB1Count = 36;

const FormulaTerm kSpqB0[] = {
    {-2, 0, 3, 0, 1, 1, 2, 0},
    {-8, 0, 3, 0, 0, 2, 0, 1},
    {1, 0, 3, 0, 0, 0, 3, 0},
    {8, 0, 3, 0, 0, 0, 0, 2},
    {1, 0, 2, 1, 2, 0, 2, 0},
    {-8, 0, 2, 1, 1, 1, 0, 1},
    {6, 0, 2, 1, 0, 2, 1, 0},
    {-2, 0, 2, 1, 0, 0, 1, 1},
    {1, 0, 2, 0, 2, 1, 2, 0},
    {4, 0, 2, 0, 1, 2, 0, 1},
    {-1, 0, 2, 0, 1, 0, 3, 0},
    {-12, 0, 2, 0, 1, 0, 0, 2},
    {4, 0, 2, 0, 0, 1, 1, 1},
    {4, 0, 1, 2, 2, 0, 0, 1},
    {1, 0, 1, 2, 0, 0, 2, 0},
    {-2, 0, 1, 1, 3, 0, 2, 0},
    {-8, 0, 1, 1, 2, 1, 0, 1},
    {8, 0, 1, 1, 1, 0, 1, 1},
    {-6, 0, 1, 1, 0, 1, 2, 0},
    {-1, 0, 1, 0, 2, 0, 3, 0},
    {-12, 0, 1, 0, 2, 0, 0, 2},
    {8, 0, 1, 0, 1, 1, 1, 1},
    {-3, 0, 1, 0, 0, 2, 2, 0},
    {3, 0, 0, 3, 0, 2, 0, 0},
    {1, 0, 0, 3, 0, 0, 0, 1},
    {-8, 0, 0, 2, 3, 0, 0, 1},
    {6, 0, 0, 2, 2, 1, 1, 0},
    {-3, 0, 0, 2, 1, 0, 2, 0},
    {3, 0, 0, 2, 0, 3, 0, 0},
    {-15, 0, 0, 2, 0, 1, 0, 1},
    {4, 0, 0, 1, 2, 0, 1, 1},
    {-6, 0, 0, 1, 1, 1, 2, 0},
    {-15, 0, 0, 1, 0, 2, 0, 1},
    {4, 0, 0, 1, 0, 0, 3, 0},
    {27, 0, 0, 1, 0, 0, 0, 2},
    {1, 0, 0, 0, 3, 0, 3, 0},
    {8, 0, 0, 0, 3, 0, 0, 2},
    {-2, 0, 0, 0, 2, 1, 1, 1},
    {1, 0, 0, 0, 1, 2, 2, 0},
    {1, 0, 0, 0, 0, 3, 0, 1},
    {4, 0, 0, 0, 0, 1, 3, 0},
    {27, 0, 0, 0, 0, 1, 0, 2},
};

const std::size_t kSpqB0Count = 42;

const FormulaTerm kDblU1[] = {
    {4, 0, 4, 0, 0, 0, 0, 1},
    {-4, 0, 3, 1, 0, 0, 1, 0},
    {4, 0, 2, 0, 0, 0, 2, 0},
    {-4, 0, 1, 3, 0, 0, 0, 0},
    {36, 0, 1, 1, 0, 0, 0, 1},
    {-12, 0, 0, 2, 0, 0, 1, 0},
};

const std::size_t kDblU1Count = 6;

const FormulaTerm kDblU0[] = {
    {-1, 0, 4, 0, 0, 0, 2, 0},
    {-8, 0, 3, 1, 0, 0, 0, 1},
    {2, 0, 2, 2, 0, 0, 1, 0},
    {6, 0, 2, 0, 0, 0, 1, 1},
    {-8, 0, 1, 1, 0, 0, 2, 0},
    {-1, 0, 0, 4, 0, 0, 0, 0},
    {-18, 0, 0, 2, 0, 0, 0, 1},
    {4, 0, 0, 0, 0, 0, 3, 0},
    {27, 0, 0, 0, 0, 0, 0, 2},
};

const std::size_t kDblU0Count = 9;

const FormulaTerm kDblC[] = {
    {8, 0, 3, 0, 0, 0, 0, 1},
    {-8, 0, 2, 1, 0, 0, 1, 0},
    {-8, 0, 0, 3, 0, 0, 0, 0},
};

const std::size_t kDblCCount = 3;

const FormulaTerm kTplV1[] = {
    {1, 1, 9, 0, 0, 0, 4, 0},
    {8, 0, 8, 1, 0, 0, 2, 1},
    {-4, 0, 7, 2, 0, 0, 3, 0},
    {48, 0, 7, 2, 0, 0, 0, 2},
    {16, 0, 7, 0, 0, 0, 3, 1},
    {144, 0, 7, 0, 0, 0, 0, 3},
    {-48, 0, 6, 3, 0, 0, 1, 1},
    {-16, 0, 6, 1, 0, 0, 4, 0},
    {-240, 0, 6, 1, 0, 0, 1, 2},
    {10, 0, 5, 4, 0, 0, 2, 0},
    {192, 0, 5, 2, 0, 0, 2, 1},
    {8, 0, 5, 0, 0, 0, 5, 0},
    {54, 0, 5, 0, 0, 0, 2, 2},
    {-24, 0, 4, 5, 0, 0, 0, 1},
    {-112, 0, 4, 3, 0, 0, 3, 0},
    {144, 0, 4, 3, 0, 0, 0, 2},
    {96, 0, 4, 1, 0, 0, 3, 1},
    {648, 0, 4, 1, 0, 0, 0, 3},
    {12, 0, 3, 6, 0, 0, 1, 0},
    {-240, 0, 3, 4, 0, 0, 1, 1},
    {-48, 0, 3, 2, 0, 0, 4, 0},
    {-324, 0, 3, 2, 0, 0, 1, 2},
    {-32, 0, 3, 0, 0, 0, 4, 1},
    {-216, 0, 3, 0, 0, 0, 1, 3},
    {-48, 0, 2, 5, 0, 0, 2, 0},
    {64, 0, 2, 1, 0, 0, 5, 0},
    {432, 0, 2, 1, 0, 0, 2, 2},
    {3, 0, 1, 8, 0, 0, 0, 0},
    {-288, 0, 1, 6, 0, 0, 0, 1},
    {-24, 0, 1, 4, 0, 0, 3, 0},
    {-162, 0, 1, 4, 0, 0, 0, 2},
    {288, 0, 1, 2, 0, 0, 3, 1},
    {1944, 0, 1, 2, 0, 0, 0, 3},
    {-16, 0, 1, 0, 0, 0, 6, 0},
    {-216, 0, 1, 0, 0, 0, 3, 2},
    {-729, 0, 1, 0, 0, 0, 0, 4},
    {48, 0, 0, 7, 0, 0, 1, 0},
    {-64, 0, 0, 3, 0, 0, 4, 0},
    {-432, 0, 0, 3, 0, 0, 1, 2},
};

const std::size_t kTplV1Count = 39;

const FormulaTerm kTplV0[] = {
    {-8, 1, 9, 0, 0, 0, 3, 1},
    {-64, 1, 9, 0, 0, 0, 0, 3},
    {3, 0, 8, 1, 0, 0, 4, 0},
    {32, 0, 8, 1, 0, 0, 1, 2},
    {-16, 0, 7, 2, 0, 0, 2, 1},
    {-8, 0, 7, 0, 0, 0, 2, 2},
    {12, 0, 6, 3, 0, 0, 3, 0},
    {16, 0, 6, 3, 0, 0, 0, 2},
    {8, 0, 6, 1, 0, 0, 3, 1},
    {-144, 0, 6, 1, 0, 0, 0, 3},
    {8, 0, 5, 4, 0, 0, 1, 1},
    {288, 0, 5, 2, 0, 0, 1, 2},
    {32, 0, 5, 0, 0, 0, 4, 1},
    {216, 0, 5, 0, 0, 0, 1, 3},
    {10, 0, 4, 5, 0, 0, 2, 0},
    {-200, 0, 4, 3, 0, 0, 2, 1},
    {-24, 0, 4, 1, 0, 0, 5, 0},
    {-162, 0, 4, 1, 0, 0, 2, 2},
    {32, 0, 3, 6, 0, 0, 0, 1},
    {64, 0, 3, 4, 0, 0, 3, 0},
    {72, 0, 3, 4, 0, 0, 0, 2},
    {192, 0, 3, 2, 0, 0, 3, 1},
    {1296, 0, 3, 2, 0, 0, 0, 3},
    {96, 0, 3, 0, 0, 0, 3, 2},
    {648, 0, 3, 0, 0, 0, 0, 4},
    {-4, 0, 2, 7, 0, 0, 1, 0},
    {-72, 0, 2, 5, 0, 0, 1, 1},
    {-176, 0, 2, 3, 0, 0, 4, 0},
    {-1188, 0, 2, 3, 0, 0, 1, 2},
    {-192, 0, 2, 1, 0, 0, 4, 1},
    {-1296, 0, 2, 1, 0, 0, 1, 3},
    {64, 0, 1, 6, 0, 0, 2, 0},
    {128, 0, 1, 2, 0, 0, 5, 0},
    {864, 0, 1, 2, 0, 0, 2, 2},
    {1, 1, 0, 9, 0, 0, 0, 0},
    {72, 0, 0, 7, 0, 0, 0, 1},
    {-120, 0, 0, 5, 0, 0, 3, 0},
    {-810, 0, 0, 5, 0, 0, 0, 2},
    {192, 0, 0, 3, 0, 0, 3, 1},
    {1296, 0, 0, 3, 0, 0, 0, 3},
    {-16, 0, 0, 1, 0, 0, 6, 0},
    {-216, 0, 0, 1, 0, 0, 3, 2},
    {-729, 0, 0, 1, 0, 0, 0, 4},
};

const std::size_t kTplV0Count = 43;

const FormulaTerm kTplD[] = {
    {1, 0, 8, 0, 0, 0, 4, 0},
    {24, 0, 7, 1, 0, 0, 2, 1},
    {-12, 0, 6, 2, 0, 0, 3, 0},
    {144, 0, 6, 2, 0, 0, 0, 2},
    {-24, 0, 6, 0, 0, 0, 3, 1},
    {-144, 0, 6, 0, 0, 0, 0, 3},
    {-144, 0, 5, 3, 0, 0, 1, 1},
    {32, 0, 5, 1, 0, 0, 4, 0},
    {144, 0, 5, 1, 0, 0, 1, 2},
    {30, 0, 4, 4, 0, 0, 2, 0},
    {120, 0, 4, 2, 0, 0, 2, 1},
    {-8, 0, 4, 0, 0, 0, 5, 0},
    {-54, 0, 4, 0, 0, 0, 2, 2},
    {-72, 0, 3, 5, 0, 0, 0, 1},
    {720, 0, 3, 3, 0, 0, 0, 2},
    {-96, 0, 3, 1, 0, 0, 3, 1},
    {-648, 0, 3, 1, 0, 0, 0, 3},
    {36, 0, 2, 6, 0, 0, 1, 0},
    {-360, 0, 2, 4, 0, 0, 1, 1},
    {48, 0, 2, 2, 0, 0, 4, 0},
    {324, 0, 2, 2, 0, 0, 1, 2},
    {96, 0, 1, 5, 0, 0, 2, 0},
    {9, 0, 0, 8, 0, 0, 0, 0},
    {72, 0, 0, 6, 0, 0, 0, 1},
    {24, 0, 0, 4, 0, 0, 3, 0},
    {162, 0, 0, 4, 0, 0, 0, 2},
    {-16, 1, 0, 0, 0, 0, 6, 0},
    {-72, 0, 0, 0, 0, 0, 3, 2},
    {-243, 0, 0, 0, 0, 0, 0, 4},
};

const std::size_t kTplDCount = 29;

}  // namespace tracezero::detail
