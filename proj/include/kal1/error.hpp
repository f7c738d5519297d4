#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kal1 {

enum class ErrorCode {
   Parameter,
   DivisionByZero,
   DimensionMismatch,
   Singular,
   DecodingFailure,
   Weight,
   Range,
   Format,
   Policy,
   GenerationFailure,
   KatMismatch,
   Io,
};

constexpr std::string_view error_name(ErrorCode code) {
   switch(code) {
      case ErrorCode::Parameter:
         return "ParameterError";
      case ErrorCode::DivisionByZero:
         return "DivisionByZero";
      case ErrorCode::DimensionMismatch:
         return "DimensionMismatch";
      case ErrorCode::Singular:
         return "Singular";
      case ErrorCode::DecodingFailure:
         return "DecodingFailure";
      case ErrorCode::Weight:
         return "WeightError";
      case ErrorCode::Range:
         return "RangeError";
      case ErrorCode::Format:
         return "FormatError";
      case ErrorCode::Policy:
         return "PolicyError";
      case ErrorCode::GenerationFailure:
         return "GenerationFailure";
      case ErrorCode::KatMismatch:
         return "KatMismatch";
      case ErrorCode::Io:
         return "IoError";
   }
   return "UnknownError";
}

/// Process exit status used by the command-line tool for each error class.
constexpr int exit_code(ErrorCode code) {
   switch(code) {
      case ErrorCode::Format:
         return 2;
      case ErrorCode::Range:
      case ErrorCode::Weight:
         return 3;
      case ErrorCode::DecodingFailure:
         return 4;
      case ErrorCode::KatMismatch:
         return 5;
      default:
         return 1;
   }
}

class Error : public std::runtime_error {
   public:
      Error(ErrorCode code, const std::string& what) : std::runtime_error(what), m_code(code) {}

      ErrorCode code() const noexcept { return m_code; }

   private:
      ErrorCode m_code;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
   throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
   if(!cond) {
      throw Error(code, what);
   }
}

}  // namespace kal1
