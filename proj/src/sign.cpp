#include "dmf/sign.hpp"

namespace dmf {

EvalSign sign_product(EvalSign x, EvalSign y) {
  if (x == EvalSign::zero || y == EvalSign::zero) return EvalSign::zero;
  if (x == EvalSign::ambiguous || y == EvalSign::ambiguous) return EvalSign::ambiguous;
  return x == y ? EvalSign::plus : EvalSign::minus;
}

EvalSign sign_sum(EvalSign x, EvalSign y) {
  if (x == EvalSign::zero) return y;
  if (y == EvalSign::zero) return x;
  return x == y ? x : EvalSign::ambiguous;
}

EvalSign embed(InfluenceSign sign) {
  switch (sign) {
    case InfluenceSign::positive: return EvalSign::plus;
    case InfluenceSign::negative: return EvalSign::minus;
    case InfluenceSign::unknown: return EvalSign::ambiguous;
  }
  return EvalSign::ambiguous;
}

std::string_view symbol(EvalSign sign) {
  switch (sign) {
    case EvalSign::plus: return "+";
    case EvalSign::minus: return "-";
    case EvalSign::zero: return "0";
    case EvalSign::ambiguous: return "?";
  }
  return "?";
}

std::string_view pretty_symbol(EvalSign sign) {
  return sign == EvalSign::minus ? "−" : symbol(sign);
}

std::optional<EvalSign> parse_eval_sign(std::string_view text) {
  for (EvalSign s : kEvalSigns) {
    if (text == symbol(s) || text == pretty_symbol(s)) return s;
  }
  return std::nullopt;
}

}  // namespace dmf
