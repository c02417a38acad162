#pragma once

#include <stdexcept>
#include <string>

namespace curator {

/// Base class for all pipeline errors.
class CuratorError : public std::runtime_error {
public:
    explicit CuratorError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid argument or numeric-domain violation (zero vector, k > N, ...).
class ValueError : public CuratorError {
public:
    explicit ValueError(const std::string& msg) : CuratorError(msg) {}
};

/// Bad or missing configuration; maps to CLI exit code 2.
class ConfigError : public CuratorError {
public:
    explicit ConfigError(const std::string& msg) : CuratorError(msg) {}
};

/// Structured-text parse failure (no \boxed span, malformed score reply, ...).
class ParseError : public CuratorError {
public:
    explicit ParseError(const std::string& msg) : CuratorError(msg) {}
};

/// Chat/embedding service failure. `transient` is true when retries were
/// exhausted on retryable statuses, false for hard (non-retryable) statuses.
class GatewayError : public CuratorError {
public:
    GatewayError(const std::string& msg, int status, bool transient)
        : CuratorError(msg), status_(status), transient_(transient) {}

    int status() const { return status_; }
    bool transient() const { return transient_; }

private:
    int status_ = 0;
    bool transient_ = false;
};

/// Classifier produced two unparseable replies; the record stays unlabeled.
class LabelError : public CuratorError {
public:
    explicit LabelError(const std::string& msg) : CuratorError(msg) {}
};

/// Verifier backend failure (sandbox unreachable, judge error).
class VerifyError : public CuratorError {
public:
    VerifyError(const std::string& msg, bool transient)
        : CuratorError(msg), transient_(transient) {}

    bool transient() const { return transient_; }

private:
    bool transient_ = false;
};

/// Unrecoverable I/O failure (unreadable input, write error).
class IoError : public CuratorError {
public:
    explicit IoError(const std::string& msg) : CuratorError(msg) {}
};

}  // namespace curator
