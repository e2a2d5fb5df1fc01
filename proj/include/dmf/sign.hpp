#ifndef DMF_SIGN_HPP
#define DMF_SIGN_HPP

#include <array>
#include <optional>
#include <string_view>

#include "dmf/knowledge_base.hpp"

namespace dmf {

/// Qualitative influence used during evaluation. `zero` means "no path".
enum class EvalSign { plus, minus, zero, ambiguous };

inline constexpr std::array<EvalSign, 4> kEvalSigns{EvalSign::plus, EvalSign::minus,
                                                    EvalSign::zero, EvalSign::ambiguous};

/// Serial composition: plus is the identity, zero annihilates.
EvalSign sign_product(EvalSign x, EvalSign y);

/// Parallel combination: zero is the identity, opposite signs are ambiguous.
EvalSign sign_sum(EvalSign x, EvalSign y);

/// positive -> plus, negative -> minus, unknown -> ambiguous.
EvalSign embed(InfluenceSign sign);

/// ASCII: "+", "-", "0", "?".
std::string_view symbol(EvalSign sign);
/// Display form using U+2212 for minus.
std::string_view pretty_symbol(EvalSign sign);
std::optional<EvalSign> parse_eval_sign(std::string_view text);

}  // namespace dmf

#endif  // DMF_SIGN_HPP
