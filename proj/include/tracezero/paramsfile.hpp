#ifndef TRACEZERO_PARAMSFILE_HPP
#define TRACEZERO_PARAMSFILE_HPP

#include <iosfwd>
#include <string>

#include "tracezero/frobred.hpp"
#include "tracezero/line.hpp"

namespace tracezero {

/// Text key=value parameter bundle: curve constants plus the derived
/// subgroup data, generator stored compressed. All values decimal.
struct ParamsFile {
    Int q, c, a, b;               // curve
    Int p, s;                     // subgroup order and eigenvalue
    Int gen_alpha0, gen_alpha1;   // compressed generator
};

ParamsFile params_from(const Subgroup& sub, const Line& generator_line);

std::string params_to_text(const ParamsFile& pf);

/// Parses the key=value format; throws Error on malformed input.
ParamsFile params_parse(const std::string& text);

/// Rebuild the subgroup context from a file: re-derives p and s from the
/// curve, verifies them (and s^2+s+1 = 0 mod p) against the stored values,
/// and checks the generator line decompresses to a point of order p.
SubgroupPtr params_load(const ParamsFile& pf,
                        const Int& count_bound = Int(kDefaultCountBound));

/// The generator line stored in the file, bound to the loaded context.
Line params_generator_line(const ParamsFile& pf, const Subgroup& sub);

/// On-disk form of the reduced algorithm's precomputed line table, in the
/// usual a0,a1 wire format. The residue sets are cheap and recomputed on
/// load; only the lines (and the base they belong to) are stored.
std::string exception_table_to_text(const LadderContext& ctx,
                                    const ExceptionSets& exc);

/// Rebuild the table for ctx from cached text; throws Error when the base
/// line differs or entries are missing, malformed, or fail validation.
ExceptionSets exception_table_parse(const LadderContext& ctx,
                                    const std::string& text);

}  // namespace tracezero

#endif
