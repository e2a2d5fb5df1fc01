#ifndef DMF_QPN_IO_HPP
#define DMF_QPN_IO_HPP

#include <string>
#include <string_view>

#include "dmf/qpn.hpp"

namespace dmf {

/// Graphviz digraph: box = decision, ellipse = chance, diamond = value; edge
/// labels "+", "−", "?".
std::string export_dot(const Qpn& model);

/// Canonical text: sorted `node NAME kind=K [values=a,b]` lines, then sorted
/// `edge A -> B sign=S` lines.
std::string serialize_qpn(const Qpn& model);

/// Inverse of serialize_qpn; `#` starts a comment. Also enforces the
/// decision-model invariants. Throws ModelError carrying the line number for
/// line-local problems.
Qpn parse_qpn(std::string_view text);

}  // namespace dmf

#endif  // DMF_QPN_IO_HPP
