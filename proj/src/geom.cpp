#include "cpoly/geom.hpp"

namespace cpoly {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::invalid_chain: return "InvalidChain";
    case ErrorCode::no_oval_exists: return "NoOvalExists";
    case ErrorCode::radius_too_small: return "RadiusTooSmall";
    case ErrorCode::degenerate_core: return "DegenerateCore";
    case ErrorCode::not_centrally_symmetric: return "NotCentrallySymmetric";
    case ErrorCode::not_a_pair: return "NotAPair";
    case ErrorCode::not_corners: return "NotCorners";
    case ErrorCode::fold_over: return "FoldOver";
    case ErrorCode::wrong_corner_count: return "WrongCornerCount";
    case ErrorCode::no_arcs: return "NoArcs";
    case ErrorCode::diameter_mismatch: return "DiameterMismatch";
    case ErrorCode::infeasible_signature: return "InfeasibleSignature";
    case ErrorCode::sweep_too_large: return "SweepTooLarge";
    case ErrorCode::degenerate: return "Degenerate";
    case ErrorCode::area_mismatch: return "AreaMismatch";
    case ErrorCode::figure_mismatch: return "FigureMismatch";
    case ErrorCode::clipping_failure: return "ClippingFailure";
    case ErrorCode::not_equidecomposable: return "NotEquidecomposable";
    case ErrorCode::not_antipodal: return "NotAntipodal";
    case ErrorCode::degenerate_result: return "DegenerateResult";
    case ErrorCode::bad_input: return "BadInput";
  }
  return "Error";
}

}  // namespace cpoly
