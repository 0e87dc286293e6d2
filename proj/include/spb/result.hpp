#pragma once

#include <cassert>
#include <string>
#include <utility>

namespace spb {

// Protocol-level failure codes. These are contract surface: tests and the CLI
// match on the code, the detail string is for humans.
enum class Errc {
    Ok = 0,
    BadSignature,
    BadKey,
    InsufficientFunds,
    InsufficientHold,
    InsufficientEnergy,
    DuplicateTx,
    DuplicateCtp,
    UnknownAccount,
    NoAccount,
    AccountExists,
    BadAuthoritySignature,
    NonPositiveAmount,
    CtpNotFound,
    AlreadySettled,
    CtpExpired,
    BadCoE,
    BadMeterSignature,
    EnergyMismatch,
    ExhaustedKeys,
    UncertifiedSigner,
    ConflictingRegistration,
    NoRoute,
    NoDeal,
    EventInPast,
    UnknownNode,
    OutOfRange,
    EmptyInput,
    InvalidArgument,
    ConfigError,
};

const char* errc_name(Errc e);

struct Error {
    Errc code = Errc::Ok;
    std::string detail;
};

// Minimal expected-like carrier; std::expected is not available pre-C++23 and
// the protocol layer needs nothing fancier.
template <typename T>
class [[nodiscard]] Result {
public:
    Result(T value) : value_(std::move(value)), err_{Errc::Ok, {}} {}
    Result(Errc code, std::string detail = {}) : err_{code, std::move(detail)} {
        assert(code != Errc::Ok);
    }
    Result(Error err) : err_(std::move(err)) { assert(err_.code != Errc::Ok); }

    bool ok() const { return err_.code == Errc::Ok; }
    explicit operator bool() const { return ok(); }

    const T& value() const {
        assert(ok());
        return value_;
    }
    T& value() {
        assert(ok());
        return value_;
    }
    T take() {
        assert(ok());
        return std::move(value_);
    }

    Errc code() const { return err_.code; }
    const Error& error() const { return err_; }

private:
    T value_{};
    Error err_;
};

class [[nodiscard]] Status {
public:
    Status() : err_{Errc::Ok, {}} {}
    Status(Errc code, std::string detail = {}) : err_{code, std::move(detail)} {}
    Status(Error err) : err_(std::move(err)) {}

    static Status ok() { return Status(); }

    bool is_ok() const { return err_.code == Errc::Ok; }
    explicit operator bool() const { return is_ok(); }

    Errc code() const { return err_.code; }
    const Error& error() const { return err_; }

private:
    Error err_;
};

}  // namespace spb
