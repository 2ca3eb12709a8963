#pragma once

// Decimal presentation of exact values. Nothing here feeds back into exact
// computation.

#include <string>

#include <gmpxx.h>

namespace evidentia {

/// `value` rounded half-to-even to `digits` places after the point.
std::string format_decimal(const mpq_class& value, int digits);

enum class LogBase { natural, two, ten };

/// log_base(value) rounded half-to-even to `digits` places. Requires
/// value > 0; throws std::domain_error otherwise.
std::string format_log(const mpq_class& value, int digits, LogBase base = LogBase::natural);

}  // namespace evidentia
