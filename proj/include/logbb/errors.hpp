#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace logbb {

/// Base class for all library errors. `code()` is a stable machine-readable
/// tag; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define LOGBB_DEFINE_ERROR(Name)                                     \
    class Name : public Error {                                      \
    public:                                                          \
        explicit Name(const std::string& msg) : Error(#Name, msg) {} \
    }

// algebra
LOGBB_DEFINE_ERROR(AmbientMismatch);
LOGBB_DEFINE_ERROR(IndexOutOfRange);
LOGBB_DEFINE_ERROR(UnknownVariable);
LOGBB_DEFINE_ERROR(NotAUnit);

// ideals
LOGBB_DEFINE_ERROR(BudgetExceeded);
LOGBB_DEFINE_ERROR(NotIsolated);

// foliation
LOGBB_DEFINE_ERROR(NotCoordinateNC);
LOGBB_DEFINE_ERROR(NotLogarithmic);
LOGBB_DEFINE_ERROR(DeterminantNotUnitTimesF);
LOGBB_DEFINE_ERROR(NotInLogSheaf);

// residues
LOGBB_DEFINE_ERROR(SizeMismatch);
LOGBB_DEFINE_ERROR(SeparatorRequired);

// chern
LOGBB_DEFINE_ERROR(DegreeMismatch);
LOGBB_DEFINE_ERROR(InconsistentPresentation);

// surfaces
LOGBB_DEFINE_ERROR(BranchDegenerate);
LOGBB_DEFINE_ERROR(UnsupportedBranch);

// scene
LOGBB_DEFINE_ERROR(ValidationError);

#undef LOGBB_DEFINE_ERROR

/// Parse failures carry the byte offset of the failure and the set of tokens
/// that would have been accepted there.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t offset,
               std::vector<std::string> expected = {})
        : Error("ParseError",
                msg + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset), expected_(std::move(expected)) {}
    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

} // namespace logbb
