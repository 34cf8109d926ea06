#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pistar {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad quiver file, unparsable multiset, shape mismatch.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Operation requires a Dynkin (or acyclic) quiver and got something else.
class UnsupportedQuiver : public Error {
public:
    using Error::Error;
};

/// Randomized sampling failed to produce a certified generic object.
class GenericityFailure : public Error {
public:
    using Error::Error;
};

/// Trials disagreed and no candidate holds a strict majority.
class NoMajority : public GenericityFailure {
public:
    NoMajority(std::string what, std::vector<std::string> candidates)
        : GenericityFailure(std::move(what)), candidates_(std::move(candidates)) {}

    const std::vector<std::string>& candidates() const noexcept { return candidates_; }

private:
    std::vector<std::string> candidates_;
};

/// Two independent computations of the same quantity disagreed, or an
/// identity that must hold exactly did not.
class InternalAssertion : public Error {
public:
    using Error::Error;
};

} // namespace pistar
