#include "vft/error.hpp"

namespace vft {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::NotDistinguished: return "NotDistinguished";
        case ErrorCode::OrderUndefined: return "OrderUndefined";
        case ErrorCode::NotFiniteOrder: return "NotFiniteOrder";
        case ErrorCode::MultiplicityTooLow: return "MultiplicityTooLow";
        case ErrorCode::ContainsXAxis: return "ContainsXAxis";
        case ErrorCode::NotReduced: return "NotReduced";
        case ErrorCode::WrongArity: return "WrongArity";
        case ErrorCode::MalformedCorpus: return "MalformedCorpus";
        case ErrorCode::LabelConflict: return "LabelConflict";
    }
    return "UnknownError";
}

} // namespace vft
