#pragma once

// Truncated decimal expansions, generated with mpmath at 260 significant digits.

namespace fixtures {

inline constexpr const char* kPiMinus3_50 =
    "dec:0.14159265358979323846264338327950288419716939937510";

inline constexpr const char* kPiMinus3_200 =
    "dec:0.14159265358979323846264338327950288419716939937510582097494459230781640628620899862803482534211706798214808651328230664709384460955058223172535940812848111745028410270193852110555964462294895493038196";

inline constexpr const char* kEMinus2_200 =
    "dec:0.71828182845904523536028747135266249775724709369995957496696762772407663035354759457138217852516642742746639193200305992181741359662904357290033429526059563073813232862794349076323382988075319525101901";

} // namespace fixtures
