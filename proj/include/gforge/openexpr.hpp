#pragma once

#include <string_view>

#include "gforge/propositional.hpp"

namespace gforge {

// Parses the open-expression mini-grammar used by the CLI and tests:
//
//   expr    := term ('|' term)*
//   term    := factor ('&' factor)*
//   factor  := '(' expr ')' | 'true' | 'false' | literal
//   literal := <rel>[copy](n,..)          e.g. leq(0,1), leq2(1,2)
//            | per[copy].<sort>(n,m)      e.g. per.X(0,0), per1.X(0,1)
//            | (alpha|beta|gamma).<sort>(n)=m
//
// `base` resolves relation names (a trailing copy digit is recognized when
// the prefix names a relation of the base theory); every generator must
// belong to `pres`. Throws std::invalid_argument on malformed or unknown
// input.
Open parse_open(std::string_view text, const Theory& base, const FramePresentation& pres);

}  // namespace gforge
