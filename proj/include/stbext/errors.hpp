#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stbext {

// Base for every error the library raises on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An attack mentions an argument that was never declared.
class UnknownArgument : public Error {
public:
    explicit UnknownArgument(const std::string& name)
        : Error("unknown argument '" + name + "'"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// The brute-force oracle refuses frameworks above its size guard.
class TooLarge : public Error {
public:
    TooLarge(std::size_t n, std::size_t limit)
        : Error("framework has " + std::to_string(n) + " arguments, brute force is limited to " +
                std::to_string(limit)),
          n_(n), limit_(limit) {}
    std::size_t size() const noexcept { return n_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t n_;
    std::size_t limit_;
};

class UnknownFamily : public Error {
public:
    explicit UnknownFamily(const std::string& name) : Error("unknown framework family '" + name + "'") {}
};

// rollback() without a matching checkpoint().
class UnbalancedRollback : public Error {
public:
    UnbalancedRollback() : Error("rollback without matching checkpoint") {}
};

// A state invariant failed while assertion hooks were active.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

// Two engines disagreed on the number of extensions of the same instance.
class CountMismatch : public Error {
public:
    using Error::Error;
};

} // namespace stbext
