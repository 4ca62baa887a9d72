#include "error.hpp"

namespace bridgeflow {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::ok: return "Ok";
        case errc::invalid_argument: return "InvalidArgument";
        case errc::negative_amount: return "NegativeAmount";
        case errc::withdrawal_exceeds_investment: return "WithdrawalExceedsInvestment";
        case errc::undefined_ratio: return "UndefinedRatio";
        case errc::degenerate_denominator: return "DegenerateDenominator";
        case errc::undefined_share: return "UndefinedShare";
        case errc::insufficient_history: return "InsufficientHistory";
        case errc::out_of_range: return "OutOfRange";
        case errc::parse_error: return "ParseError";
        case errc::io_error: return "IoError";
    }
    return "UnknownError";
}

}  // namespace bridgeflow
